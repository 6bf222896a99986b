//! Recognition of finite simple graphs in which every cycle has the same
//! length (girth equal to circumference).
//!
//! The decision procedure in [`recognition`] works block by block: such a
//! graph is built from cycles `C_r` and, for even `r`, books `B(r/2, r, p)`,
//! glued at cut vertices and joined by trees. [`oracle`] provides the
//! exhaustive cycle enumeration used to verify it, and [`bounds`] the sharp
//! edge-count bounds together with the graphs that attain them.

pub mod bounds;
pub mod decomposition;
pub mod generators;
pub mod graph;
pub mod oracle;
pub mod recognition;

pub use graph::{Edge, Graph, GraphError, VertexId};

//! Command-line front end: argument grammar, command dispatch and the
//! text/JSON renderings.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use equicycle::bounds::{self, BoundReport, ExtremalParams, Verdict};
use equicycle::decomposition::decompose;
use equicycle::generators::{self, BookParams, WedgeSpec};
use equicycle::oracle::{cycle_spectrum, SearchBudget};
use equicycle::recognition::{decide, decide_with_witnesses, BlockShape, Decision, Witness};
use equicycle::{Edge, Graph};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REJECTED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "equicycle",
    version,
    about = "Decide whether all cycles of a graph have the same length"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether every cycle has the same length
    Check {
        file: PathBuf,
        /// Exit with status 1 unless the verdict matches
        #[arg(long, value_enum)]
        expect: Option<Expect>,
        /// Search inside offending blocks for a witness pair if needed
        #[arg(long)]
        witness: bool,
        #[arg(long)]
        json: bool,
    },
    /// Bridges, cut vertices and cycle blocks
    Decompose {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustive cycle spectrum
    Oracle {
        file: PathBuf,
        #[arg(long, default_value_t = SearchBudget::default().max_vertices)]
        max_vertices: usize,
        #[arg(long)]
        json: bool,
    },
    /// Maximum edge count for n vertices (and cycle length r)
    Bound {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Certify that n vertices and m edges force two cycle lengths
    Certify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Write a generated graph as an edge list
    Gen(GenArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Expect {
    Equal,
    Distinct,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[command(subcommand)]
    family: Family,
    /// Output file (default: standard output)
    #[arg(short = 'o', long = "output", global = true)]
    output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Family {
    Cycle {
        #[arg(long)]
        m: usize,
    },
    Path {
        #[arg(long)]
        m: usize,
    },
    Complete {
        #[arg(long)]
        m: usize,
    },
    Bipartite {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
    },
    /// Book graph B(n, L, p)
    Book {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        p: usize,
    },
    /// Extremal graph for n vertices and cycle length r
    Extremal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// Wedge sum of edge-list files at vertex 0 of each
    Wedge {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
}

/// A failed command: message for standard error and exit status.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

/// Runs one invocation and returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    let mut buf = String::new();
    let code = match command {
        Command::Check {
            file,
            expect,
            witness,
            json,
        } => check(&load(&file)?, expect, witness, json, &mut buf),
        Command::Decompose { file, json } => {
            decompose_cmd(&load(&file)?, json, &mut buf);
            EXIT_OK
        }
        Command::Oracle {
            file,
            max_vertices,
            json,
        } => {
            oracle_cmd(&load(&file)?, max_vertices, json, &mut buf)?;
            EXIT_OK
        }
        Command::Bound { n, r, json } => {
            bound_cmd(n, r, json, &mut buf)?;
            EXIT_OK
        }
        Command::Certify { n, m, r, json } => {
            certify_cmd(n, m, r, json, &mut buf)?;
            EXIT_OK
        }
        Command::Gen(args) => {
            let g = generate(&args.family)?;
            let text = g.serialize_edge_list();
            match &args.output {
                Some(path) => fs::write(path, text)
                    .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?,
                None => buf.push_str(&text),
            }
            EXIT_OK
        }
    };
    out.write_all(buf.as_bytes())
        .map_err(|e| Failure::usage(format!("writing output: {e}")))?;
    Ok(code)
}

fn load(path: &Path) -> Result<Graph, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    Graph::parse_edge_list(&text).map_err(|e| Failure::usage(format!("{}:{e}", path.display())))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("plain data serialises");
    s.push('\n');
    s
}

fn labels(g: &Graph, seq: &[usize]) -> Vec<u64> {
    seq.iter().map(|&v| g.label(v)).collect()
}

fn edge_labels(g: &Graph, e: &Edge) -> [u64; 2] {
    [g.label(e.u), g.label(e.v)]
}

fn join(xs: &[u64]) -> String {
    xs.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
}

// check

#[derive(Serialize)]
struct CheckJson {
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    r: Option<usize>,
    blocks: Vec<BlockJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<WitnessJson>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    notes: Vec<String>,
}

#[derive(Serialize)]
struct BlockJson {
    shape: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    r: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    p: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<&'static str>,
}

impl From<&BlockShape> for BlockJson {
    fn from(shape: &BlockShape) -> Self {
        let mut b = BlockJson {
            shape: "other",
            r: shape.cycle_length(),
            k: None,
            p: None,
            reason: None,
        };
        match *shape {
            BlockShape::Cycle { .. } => b.shape = "cycle",
            BlockShape::Book { k, pages } => {
                b.shape = "book";
                b.k = Some(k);
                b.p = Some(pages);
            }
            BlockShape::Other(reason) => b.reason = Some(reason.as_str()),
        }
        b
    }
}

#[derive(Serialize)]
struct WitnessJson {
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    cycle_a: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cycle_b: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lengths: Option<[usize; 2]>,
}

fn check(g: &Graph, expect: Option<Expect>, witness: bool, json: bool, buf: &mut String) -> i32 {
    let decision = if witness {
        decide_with_witnesses(g, &SearchBudget::default())
    } else {
        decide(g)
    };
    let mut notes = Vec::new();
    let components = g.connected_components().len();
    if components > 1 {
        notes.push(format!(
            "input has {components} components; decided over the blocks of all of them"
        ));
    }

    let (status, r) = match &decision {
        Decision::Acyclic => ("acyclic", None),
        Decision::AllCyclesEqual { r, .. } => ("all_cycles_equal", Some(*r)),
        Decision::DistinctLengths { .. } => ("distinct_lengths", None),
    };
    let witness_json = match &decision {
        Decision::DistinctLengths { witness, .. } => Some(match witness {
            Witness::Exact(w) => WitnessJson {
                status: "exact",
                cycle_a: Some(labels(g, &w.cycle_a)),
                cycle_b: Some(labels(g, &w.cycle_b)),
                lengths: Some([w.cycle_a.len(), w.cycle_b.len()]),
            },
            Witness::DecisionOnly => WitnessJson {
                status: "decision-only",
                cycle_a: None,
                cycle_b: None,
                lengths: None,
            },
        }),
        _ => None,
    };

    if json {
        buf.push_str(&to_json(&CheckJson {
            status,
            r,
            blocks: decision.shapes().iter().map(BlockJson::from).collect(),
            witness: witness_json,
            notes,
        }));
    } else {
        match &decision {
            Decision::Acyclic => buf.push_str("acyclic: the graph has no cycles\n"),
            Decision::AllCyclesEqual { r, .. } => {
                buf.push_str(&format!("all cycles have length {r}\n"))
            }
            Decision::DistinctLengths { witness, .. } => match witness {
                Witness::Exact(w) => buf.push_str(&format!(
                    "distinct cycle lengths: {} and {}\ncycle a: {}\ncycle b: {}\n",
                    w.cycle_a.len(),
                    w.cycle_b.len(),
                    join(&labels(g, &w.cycle_a)),
                    join(&labels(g, &w.cycle_b))
                )),
                Witness::DecisionOnly => buf.push_str("distinct cycle lengths (no witness)\n"),
            },
        }
        for (i, shape) in decision.shapes().iter().enumerate() {
            buf.push_str(&format!("block {}: {shape}\n", i + 1));
        }
        for note in &notes {
            buf.push_str(&format!("note: {note}\n"));
        }
    }

    match (expect, &decision) {
        (None, _)
        | (Some(Expect::Equal), Decision::AllCyclesEqual { .. })
        | (Some(Expect::Distinct), Decision::DistinctLengths { .. }) => EXIT_OK,
        _ => EXIT_REJECTED,
    }
}

// decompose

#[derive(Serialize)]
struct DecomposeJson {
    bridges: Vec<[u64; 2]>,
    cut_vertices: Vec<u64>,
    blocks: Vec<BlockMembersJson>,
}

#[derive(Serialize)]
struct BlockMembersJson {
    vertices: Vec<u64>,
    edges: Vec<[u64; 2]>,
}

fn decompose_cmd(g: &Graph, json: bool, buf: &mut String) {
    let d = decompose(g);
    let report = DecomposeJson {
        bridges: d.bridges.iter().map(|e| edge_labels(g, e)).collect(),
        cut_vertices: labels(g, &d.cut_vertices),
        blocks: d
            .cycle_blocks
            .iter()
            .map(|b| BlockMembersJson {
                vertices: labels(g, &b.vertices),
                edges: b.edges.iter().map(|e| edge_labels(g, e)).collect(),
            })
            .collect(),
    };
    if json {
        buf.push_str(&to_json(&report));
        return;
    }
    let pairs = |es: &[[u64; 2]]| {
        es.iter()
            .map(|[a, b]| format!("{a}-{b}"))
            .collect::<Vec<_>>()
            .join(" ")
    };
    buf.push_str(&format!("bridges: {}\n", pairs(&report.bridges)));
    buf.push_str(&format!("cut vertices: {}\n", join(&report.cut_vertices)));
    for (i, b) in report.blocks.iter().enumerate() {
        buf.push_str(&format!(
            "block {}: vertices {} | edges {}\n",
            i + 1,
            join(&b.vertices),
            pairs(&b.edges)
        ));
    }
}

// oracle

#[derive(Serialize)]
struct OracleJson {
    girth: Option<usize>,
    circumference: Option<usize>,
    lengths: Vec<usize>,
    witnesses: BTreeMap<usize, Vec<u64>>,
}

fn oracle_cmd(g: &Graph, max_vertices: usize, json: bool, buf: &mut String) -> Result<(), Failure> {
    let budget = SearchBudget::with_max_vertices(max_vertices);
    let report = cycle_spectrum(g, &budget).map_err(|e| Failure::usage(e.to_string()))?;
    let witnesses: BTreeMap<usize, Vec<u64>> = report
        .witnesses
        .iter()
        .map(|(&len, seq)| (len, labels(g, seq)))
        .collect();
    if json {
        buf.push_str(&to_json(&OracleJson {
            girth: report.girth,
            circumference: report.circumference,
            lengths: report.lengths.iter().copied().collect(),
            witnesses,
        }));
        return Ok(());
    }
    let show = |x: Option<usize>| x.map_or("none (acyclic)".to_string(), |v| v.to_string());
    buf.push_str(&format!("girth: {}\n", show(report.girth)));
    buf.push_str(&format!("circumference: {}\n", show(report.circumference)));
    let lengths: Vec<u64> = report.lengths.iter().map(|&l| l as u64).collect();
    buf.push_str(&format!("lengths: {}\n", join(&lengths)));
    for (len, seq) in &witnesses {
        buf.push_str(&format!("cycle {len}: {}\n", join(seq)));
    }
    Ok(())
}

// bound / certify

#[derive(Serialize)]
struct BoundJson {
    n: usize,
    r: Option<usize>,
    bound: usize,
    extremal: Option<ExtremalJson>,
}

#[derive(Serialize)]
struct ExtremalJson {
    p: usize,
    c: usize,
}

fn describe_extremal(r: usize, params: ExtremalParams) -> String {
    match params {
        ExtremalParams::Even { pages, tail } => format!("B({},{r},{pages}) v P_{tail}", r / 2),
        ExtremalParams::Odd { cycles, tail } => format!("{cycles} x C_{r} v P_{tail}"),
    }
}

fn bound_cmd(n: usize, r: Option<usize>, json: bool, buf: &mut String) -> Result<(), Failure> {
    let report: BoundReport = match r {
        Some(r) => bounds::max_edges(n, r),
        None => bounds::max_edges_any_r(n),
    }
    .map_err(|e| Failure::usage(e.to_string()))?;
    if json {
        buf.push_str(&to_json(&BoundJson {
            n: report.n,
            r: report.r,
            bound: report.bound,
            extremal: report.extremal.map(|x| {
                let (p, c) = x.as_pair();
                ExtremalJson { p, c }
            }),
        }));
        return Ok(());
    }
    match (report.r, report.extremal) {
        (Some(r), Some(params)) => {
            buf.push_str(&format!("bound (n = {n}, r = {r}): {}\n", report.bound));
            buf.push_str(&format!("extremal: {}\n", describe_extremal(r, params)));
        }
        _ => buf.push_str(&format!("2n-4 bound: {}\n", report.bound)),
    }
    Ok(())
}

#[derive(Serialize)]
struct CertifyJson {
    n: usize,
    m: usize,
    r: Option<usize>,
    verdict: &'static str,
    cited_bound: usize,
    bound: &'static str,
}

fn certify_cmd(
    n: usize,
    m: usize,
    r: Option<usize>,
    json: bool,
    buf: &mut String,
) -> Result<(), Failure> {
    let cert = bounds::certify_distinct(n, m, r).map_err(|e| Failure::usage(e.to_string()))?;
    if json {
        buf.push_str(&to_json(&CertifyJson {
            n,
            m,
            r,
            verdict: match cert.verdict {
                Verdict::MustContainDistinctLengths => "must_contain_distinct_lengths",
                Verdict::Inconclusive => "inconclusive",
            },
            cited_bound: cert.cited_bound,
            bound: cert.bound_name(),
        }));
    } else {
        buf.push_str(&format!("{cert}\n"));
    }
    Ok(())
}

// gen

fn generate(family: &Family) -> Result<Graph, Failure> {
    let gen_err = |e: generators::GenError| Failure::usage(e.to_string());
    Ok(match *family {
        Family::Cycle { m } => generators::cycle(m).map_err(gen_err)?,
        Family::Path { m } => generators::path(m),
        Family::Complete { m } => generators::complete(m).map_err(gen_err)?,
        Family::Bipartite { a, b } => generators::complete_bipartite(a, b).map_err(gen_err)?,
        Family::Book { n, l, p } => generators::book(BookParams::new(n, l, p)).map_err(gen_err)?,
        Family::Extremal { n, r } => {
            bounds::extremal(n, r).map_err(|e| Failure::usage(e.to_string()))?
        }
        Family::Wedge { ref files } => {
            let summands = files
                .iter()
                .map(|f| load(f))
                .collect::<Result<Vec<_>, _>>()?;
            generators::wedge(&WedgeSpec::new(summands)).map_err(gen_err)?
        }
    })
}

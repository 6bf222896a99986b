use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn equicycle(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_equicycle"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

fn arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

#[test]
fn check_bowtie_json() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "bowtie.edges", "0 1\n1 2\n2 0\n0 3\n3 4\n4 0\n");
    let o = equicycle(&["check", arg(&f), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "{\"status\":\"all_cycles_equal\",\"r\":3,\"blocks\":[{\"shape\":\"cycle\",\"r\":3},{\"shape\":\"cycle\",\"r\":3}]}\n"
    );
}

#[test]
fn check_expectations_drive_exit_code() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "c3c4.edges", "0 1\n1 2\n2 0\n0 3\n3 4\n4 5\n5 0\n");
    let path = arg(&f);
    assert_eq!(
        equicycle(&["check", path, "--expect", "distinct"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        equicycle(&["check", path, "--expect", "equal"])
            .status
            .code(),
        Some(1)
    );
    let tree = write(&dir, "tree.edges", "0 1\n1 2\n");
    assert_eq!(
        equicycle(&["check", arg(&tree), "--expect", "equal"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(equicycle(&["check", arg(&tree)]).status.code(), Some(0));

    let v = json(&equicycle(&["check", path, "--json"]));
    assert_eq!(v["status"], "distinct_lengths");
    assert_eq!(v["witness"]["status"], "exact");
    assert_eq!(v["witness"]["lengths"], serde_json::json!([3, 4]));
}

#[test]
fn check_witness_flag_uses_search() {
    let dir = TempDir::new().unwrap();
    let k4 = write(&dir, "k4.edges", "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let plain = json(&equicycle(&["check", arg(&k4), "--json"]));
    assert_eq!(plain["witness"]["status"], "decision-only");
    let searched = json(&equicycle(&["check", arg(&k4), "--witness", "--json"]));
    assert_eq!(searched["witness"]["status"], "exact");
    assert_eq!(searched["witness"]["cycle_a"], serde_json::json!([0, 1, 2]));
    assert_eq!(
        searched["witness"]["cycle_b"],
        serde_json::json!([0, 1, 2, 3])
    );
}

#[test]
fn check_reports_original_labels_and_disconnection() {
    let dir = TempDir::new().unwrap();
    let f = write(
        &dir,
        "two.edges",
        "10 11\n11 12\n12 10\n20 21\n21 22\n22 20\n",
    );
    let v = json(&equicycle(&["check", arg(&f), "--json"]));
    assert_eq!(v["status"], "all_cycles_equal");
    assert_eq!(v["notes"].as_array().unwrap().len(), 1);

    let g = write(
        &dir,
        "mixed.edges",
        "10 11\n11 12\n12 10\n12 20\n20 21\n21 22\n22 12\n",
    );
    let v = json(&equicycle(&["check", arg(&g), "--json"]));
    assert_eq!(v["witness"]["cycle_a"], serde_json::json!([10, 11, 12]));
}

#[test]
fn decompose_json_keys() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "g.edges", "0 1\n1 2\n2 0\n2 3\n");
    let o = equicycle(&["decompose", arg(&f), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "{\"bridges\":[[2,3]],\"cut_vertices\":[2],\"blocks\":[{\"vertices\":[0,1,2],\"edges\":[[0,1],[0,2],[1,2]]}]}\n"
    );
}

#[test]
fn oracle_json_and_budget() {
    let dir = TempDir::new().unwrap();
    let k4 = write(&dir, "k4.edges", "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let o = equicycle(&["oracle", arg(&k4), "--json"]);
    assert_eq!(
        stdout(&o),
        "{\"girth\":3,\"circumference\":4,\"lengths\":[3,4],\"witnesses\":{\"3\":[0,1,2],\"4\":[0,1,2,3]}}\n"
    );
    let o = equicycle(&["oracle", arg(&k4), "--max-vertices", "3"]);
    assert_eq!(o.status.code(), Some(2));

    let tree = write(&dir, "tree.edges", "0 1\n");
    let v = json(&equicycle(&["oracle", arg(&tree), "--json"]));
    assert!(v["girth"].is_null());
    assert_eq!(v["lengths"], serde_json::json!([]));
}

#[test]
fn bound_outputs() {
    assert_eq!(
        stdout(&equicycle(&["bound", "--n", "16"])),
        "2n-4 bound: 28\n"
    );
    assert_eq!(
        stdout(&equicycle(&["bound", "--n", "16", "--json"])),
        "{\"n\":16,\"r\":null,\"bound\":28,\"extremal\":null}\n"
    );
    let v = json(&equicycle(&["bound", "--n", "16", "--r", "3", "--json"]));
    assert_eq!(v["bound"], 22);
    assert_eq!(v["extremal"], serde_json::json!({"p": 7, "c": 1}));
    assert_eq!(equicycle(&["bound", "--n", "3"]).status.code(), Some(2));
    assert_eq!(
        equicycle(&["bound", "--n", "5", "--r", "6"]).status.code(),
        Some(2)
    );
}

#[test]
fn certify_outputs() {
    let v = json(&equicycle(&["certify", "--n", "16", "--m", "29", "--json"]));
    assert_eq!(v["verdict"], "must_contain_distinct_lengths");
    assert_eq!(v["cited_bound"], 28);
    let v = json(&equicycle(&[
        "certify", "--n", "16", "--m", "22", "--r", "6", "--json",
    ]));
    assert_eq!(v["cited_bound"], 21);
    let v = json(&equicycle(&["certify", "--n", "16", "--m", "28", "--json"]));
    assert_eq!(v["verdict"], "inconclusive");
    let text = stdout(&equicycle(&["certify", "--n", "16", "--m", "29"]));
    assert!(text.contains("29 > 28"), "{text}");
}

#[test]
fn gen_book_and_round_trip_through_check() {
    let o = equicycle(&["gen", "book", "--n", "2", "--l", "4", "--p", "4"]);
    let text = stdout(&o);
    assert!(text.starts_with("vertices 7\n"));
    assert_eq!(text.lines().count(), 11);

    let dir = TempDir::new().unwrap();
    let out = dir.path().join("b.edges");
    let o = equicycle(&[
        "gen",
        "-o",
        arg(&out),
        "book",
        "--n",
        "2",
        "--l",
        "4",
        "--p",
        "4",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(fs::read_to_string(&out).unwrap(), text);
    let v = json(&equicycle(&["check", arg(&out), "--json"]));
    assert_eq!(
        v["blocks"],
        serde_json::json!([{"shape": "book", "r": 4, "k": 2, "p": 4}])
    );
}

#[test]
fn gen_families() {
    let count = |args: &[&str]| {
        let t = stdout(&equicycle(args));
        t.lines().filter(|l| !l.starts_with("vertices")).count()
    };
    assert_eq!(count(&["gen", "cycle", "--m", "5"]), 5);
    assert_eq!(count(&["gen", "path", "--m", "4"]), 4);
    assert_eq!(count(&["gen", "complete", "--m", "5"]), 10);
    assert_eq!(count(&["gen", "bipartite", "--a", "3", "--b", "3"]), 9);
    assert_eq!(count(&["gen", "extremal", "--n", "16", "--r", "6"]), 21);
    assert_eq!(
        equicycle(&["gen", "cycle", "--m", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(
        equicycle(&["gen", "book", "--n", "1", "--l", "4", "--p", "1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn gen_wedge_from_files() {
    let dir = TempDir::new().unwrap();
    let c5 = dir.path().join("c5.edges");
    equicycle(&["gen", "cycle", "--m", "5", "-o", arg(&c5)]);
    let p3 = dir.path().join("p3.edges");
    equicycle(&["gen", "path", "--m", "3", "-o", arg(&p3)]);
    let w = dir.path().join("w.edges");
    let o = equicycle(&["gen", "wedge", arg(&c5), arg(&c5), arg(&p3), "-o", arg(&w)]);
    assert_eq!(o.status.code(), Some(0));
    let text = fs::read_to_string(&w).unwrap();
    assert!(text.starts_with("vertices 12\n"));
    let v = json(&equicycle(&["check", arg(&w), "--json"]));
    assert_eq!(v["status"], "all_cycles_equal");
    assert_eq!(v["r"], 5);
}

#[test]
fn parse_errors_and_usage() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.edges", "# header\n0 1\n1 1\n");
    let o = equicycle(&["check", arg(&bad)]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("bad.edges:line 3"), "{err}");
    assert!(err.contains("self-loop"), "{err}");

    assert_eq!(equicycle(&[]).status.code(), Some(2));
    assert_eq!(equicycle(&["bound"]).status.code(), Some(2));
    assert_eq!(
        equicycle(&["check", "x", "--expect", "maybe"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(equicycle(&["--help"]).status.code(), Some(0));
}

#[test]
fn output_is_byte_identical_across_runs() {
    let dir = TempDir::new().unwrap();
    let f = write(
        &dir,
        "k33.edges",
        &stdout(&equicycle(&["gen", "bipartite", "--a", "3", "--b", "3"])),
    );
    for cmd in [
        &["check", arg(&f), "--witness", "--json"][..],
        &["oracle", arg(&f), "--json"],
        &["decompose", arg(&f)],
    ] {
        let first = equicycle(cmd).stdout;
        assert_eq!(first, equicycle(cmd).stdout);
    }
}

use std::io::Write;
use std::process::{Command, Output, Stdio};

use randic::graph::parse_graph6;

fn randic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_randic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let out = randic(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn complete_graph_spectrum() {
    // R(K4) = (J - I)/3: eigenvalues 1 and -1/3 (three times).
    let out = randic(&["spectrum", "gen:complete:4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("eigenvalues: [1.0, -0.333333333333, -0.333333333333, -0.333333333333]"), "{text}");
    assert!(text.contains("distinct_count: 2"));
    assert!(text.contains("trace:"));
}

#[test]
fn star_signless_spectrum() {
    // 1 + ρ over ρ(K_{1,3}) = ±1, 0, 0.
    let v = json(&["spectrum", "gen:star:4", "--matrix", "nslap", "--format", "json"]);
    let values: Vec<f64> = v["payload"]["eigenvalues"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_f64().unwrap())
        .collect();
    assert_eq!(values, [2.0, 1.0, 1.0, 0.0]);
    assert_eq!(v["command"], "spectrum");
    assert_eq!(v["input_digest"], "Cs");
}

#[test]
fn text_and_json_agree() {
    let text = stdout(&randic(&["spectrum", "gen:cycle:5"]));
    let v = json(&["spectrum", "gen:cycle:5", "--format", "json"]);
    for x in v["payload"]["eigenvalues"].as_array().unwrap() {
        assert!(text.contains(&x.to_string()), "{x} missing from {text}");
    }
}

#[test]
fn output_is_deterministic() {
    let a = randic(&["verify", "gen:petersen", "--format", "json"]);
    let b = randic(&["verify", "gen:petersen", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn malformed_graph6_exits_2() {
    let out = randic(&["spectrum", "zz!"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("graph6"));
}

#[test]
fn isolated_vertex_exits_3() {
    // "B?" is three vertices with no edges.
    assert_eq!(randic(&["spectrum", "B?"]).status.code(), Some(3));
}

#[test]
fn subdivided_star_energy() {
    // θ(K_{1,4}) = 2, 1, 1, 1, 0, so √2 Σ √θ = 2 + 3√2.
    let v = json(&["energy", "gen:star:5", "--subdivide", "--format", "json"]);
    let sub = &v["payload"]["subdivision"];
    assert_eq!(sub["randic_energy"].as_f64().unwrap(), 6.24264068712);
    assert_eq!(sub["sqrt2_sum_sqrt_theta"].as_f64().unwrap(), 6.24264068712);
    assert!((6.24264068712f64 - (2.0 + 3.0 * 2f64.sqrt())).abs() < 1e-11);
}

#[test]
fn complete_and_edge_energies() {
    // RE(K_n) = 1 + (n - 1) / (n - 1) = 2; S(K2) = P3 with RE = 2.
    let v = json(&["energy", "gen:complete:6", "--format", "json"]);
    assert_eq!(v["payload"]["randic_energy"].as_f64().unwrap(), 2.0);
    let v = json(&["energy", "A_", "--subdivide", "--format", "json"]);
    assert_eq!(v["payload"]["randic_energy"].as_f64().unwrap(), 2.0);
    assert_eq!(v["payload"]["subdivision"]["randic_energy"].as_f64().unwrap(), 2.0);
}

#[test]
fn petersen_identity() {
    // ρ = 1, 1/3, -2/3 and m = 15: c = (2/3)(5/3)/30 = 1/27.
    let v = json(&["verify", "gen:petersen", "--check", "identity", "--format", "json"]);
    let report = &v["payload"]["checks"][0];
    assert_eq!(report["check_name"], "k_distinct_identity");
    assert_eq!(report["passed"], true);
    let c = report["diagnostics"]
        .as_array()
        .unwrap()
        .iter()
        .find(|d| d["name"] == "c")
        .unwrap()["value"]
        .as_f64()
        .unwrap();
    assert_eq!(c, 0.037037037037);
}

#[test]
fn verify_all_on_petersen_includes_local() {
    let v = json(&["verify", "gen:petersen", "--format", "json"]);
    let names: Vec<&str> = v["payload"]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["check_name"].as_str().unwrap())
        .collect();
    assert_eq!(
        names,
        [
            "subdivision_charpoly",
            "eigenvalue_correspondence",
            "subdivision_energy",
            "k_distinct_identity",
            "local_conditions"
        ]
    );
    assert_eq!(v["payload"]["passed"], true);
}

#[test]
fn verify_all_skips_local_when_not_three_distinct() {
    let out = randic(&["verify", "gen:path:4"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("local_conditions (k = 4, needs 3)"));
}

#[test]
fn star_charpoly_passes() {
    let out = randic(&["verify", "gen:star:4", "--check", "charpoly"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("check_name: subdivision_charpoly"));
}

#[test]
fn impossible_tolerance_exits_1() {
    // A negative tolerance can never be met.
    let out = randic(&["verify", "gen:star:4", "--check", "energy", "--tol=-1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("passed: false"));
}

#[test]
fn local_on_path_exits_5() {
    // P4 has four distinct Randić eigenvalues.
    let out = randic(&["verify", "gen:path:4", "--check", "local"]);
    assert_eq!(out.status.code(), Some(5));
}

#[test]
fn identity_on_disconnected_exits_3() {
    // Two disjoint edges, given as an edge-list file.
    let dir = std::env::temp_dir().join(format!("randic-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("two_edges.txt");
    std::fs::write(&path, "4\n0 1\n2 3\n").unwrap();
    let out = randic(&["verify", path.to_str().unwrap(), "--check", "identity"]);
    assert_eq!(out.status.code(), Some(3));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn scan_order_four() {
    let v = json(&["scan", "--order", "4", "--format", "json"]);
    let p = &v["payload"];
    assert_eq!(p["graphs_scanned"], 38);
    assert_eq!(p["complete_graphs"], 1);
    assert_eq!(p["counterexamples"].as_array().unwrap().len(), 0);
}

#[test]
fn scan_order_five_json() {
    // 728 connected labeled graphs on 5 vertices; the 12 labeled 5-cycles
    // are the strongly regular ones.
    let v = json(&["scan", "--order", "5", "--format", "json", "--jobs", "2"]);
    let p = &v["payload"];
    assert_eq!(p["graphs_scanned"], 728);
    assert_eq!(p["strongly_regular_graphs"], 12);
    assert_eq!(p["regular_three_distinct_graphs"], 12);
    assert!(v["input_digest"].is_null());
}

#[test]
fn scan_order_limits() {
    assert_eq!(randic(&["scan", "--order", "8"]).status.code(), Some(2));
    assert_eq!(randic(&["scan", "--order", "7"]).status.code(), Some(2));
    assert_eq!(randic(&["scan", "--order", "1"]).status.code(), Some(2));
}

#[test]
fn subdivide_edge_is_path() {
    let out = randic(&["subdivide", "A_"]);
    let g = parse_graph6(stdout(&out).trim()).unwrap();
    assert_eq!(g.order(), 3);
    assert_eq!(g.edges(), &[(0, 2), (1, 2)]);
}

#[test]
fn subdivide_triangle_is_hexagon() {
    let out = randic(&["subdivide", "gen:cycle:3"]);
    let g = parse_graph6(stdout(&out).trim()).unwrap();
    assert_eq!((g.order(), g.size()), (6, 6));
    assert_eq!(g.regular_degree(), Some(2));
    assert!(g.is_connected());
}

#[test]
fn subdivide_star_edge_list() {
    let out = randic(&["subdivide", "gen:star:5", "--format", "edgelist"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("9"));
    assert_eq!(lines.count(), 8);
}

#[test]
fn reads_graph6_from_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_randic"))
        .args(["energy", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"C~\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).contains("randic_energy: 2.0"));
}

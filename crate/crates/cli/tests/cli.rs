use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use uncrossed::graph::{complete_bipartite, complete_graph};
use uncrossed::io::{parse_certificate, parse_cover, write_graph, write_parts};
use uncrossed::reductions::example_outerthickness_two;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_uncrossed")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn formula_complete_seven() {
    let o = run(&["formula", "complete", "7"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("unc(K_7) = 3 [unc-complete]"));
}

#[test]
fn formula_bipartite_json_and_swap() {
    let o = run(&["--json", "formula", "bipartite", "24", "9"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["exact"], 6);
    assert!(v["provenance"].as_array().unwrap().iter().any(|t| t == "swapped"));
}

#[test]
fn formula_rejects_zero() {
    assert_eq!(code(&run(&["formula", "complete", "0"])), 2);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&run(&["nonsense"])), 2);
    assert_eq!(code(&run(&["formula"])), 2);
    assert_eq!(code(&run(&["--help"])), 0);
}

#[test]
fn verify_good_bad_and_malformed() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "k5.g", &write_graph(&complete_graph(5).unwrap()));
    let cert_path = dir.path().join("k5.cert");
    let o = run(&["construct", "k5-example", "--out", cert_path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let cert = cert_path.to_str().unwrap();
    let o = run(&["verify", "--graph", &g, "--cert", cert]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("result: pass"));

    // Keep only the first drawing: two edges stay uncovered.
    let text = fs::read_to_string(cert).unwrap();
    let first = &text[..text.find("drawing 1").unwrap()];
    let bad = write(dir.path(), "bad.cert", first);
    let o = run(&["verify", "--graph", &g, "--cert", &bad]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    assert!(out.contains("uncovered: 0 2") && out.contains("uncovered: 1 3"), "{out}");
    let o = run(&["verify", "--graph", &g, "--cert", &bad, "--report", "json"]);
    assert_eq!(code(&o), 1);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passes"], false);
    assert_eq!(v["uncovered"].as_array().unwrap().len(), 2);

    let broken = write(dir.path(), "broken.cert", "graph\n5 10\n0 1\n");
    assert_eq!(code(&run(&["verify", "--graph", &g, "--cert", &broken])), 2);
    let k4 = write(dir.path(), "k4.g", &write_graph(&complete_graph(4).unwrap()));
    assert_eq!(code(&run(&["verify", "--graph", &k4, "--cert", cert])), 2);
    assert_eq!(code(&run(&["verify", "--graph", "/nonexistent", "--cert", cert])), 2);
}

#[test]
fn construct_cover_and_collection() {
    let o = run(&["construct", "cover", "9", "24"]);
    assert_eq!(code(&o), 0);
    let cover = parse_cover(&stdout(&o)).unwrap();
    assert_eq!(cover.cycles.len(), 6);
    assert_eq!(cover.degree_sequences[0], vec![4, 5, 5, 4, 5, 5, 4, 5, 5]);

    let o = run(&["construct", "collection", "4", "7"]);
    assert_eq!(code(&o), 0);
    let c = parse_certificate(&stdout(&o)).unwrap();
    assert_eq!(c.len(), 2);
    assert_eq!(c.host, complete_bipartite(4, 7).unwrap());

    let o = run(&["construct", "wheel", "16", "--emit", "svg"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("<svg"));
    assert_eq!(code(&run(&["construct", "wheel", "2"])), 2);
}

#[test]
fn cover_svg_has_six_panels() {
    let o = run(&["construct", "cover", "9", "24", "--emit", "svg"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).matches("<g id=\"drawing-").count(), 6);
}

#[test]
fn bound_on_k33() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "k33.g", &write_graph(&complete_bipartite(3, 3).unwrap()));
    let o = run(&["--json", "bound", "--graph", &g]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["exact"], 2);
}

#[test]
fn oracle_commands() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "k5.g", &write_graph(&complete_graph(5).unwrap()));
    let cert = dir.path().join("opt.cert");
    let o = run(&["oracle", "unc", "--graph", &g, "--emit-cert", cert.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("unc = 2"));
    let o = run(&["verify", "--graph", &g, "--cert", cert.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&run(&["oracle", "h", "--graph", &g])).contains("h = 8"));
    assert!(stdout(&run(&["oracle", "ecr", "--graph", &g])).contains("ecr = 2"));
    assert_eq!(code(&run(&["oracle", "mus", "--graph", &g, "-k", "8"])), 0);
    assert_eq!(code(&run(&["oracle", "mus", "--graph", &g, "-k", "9"])), 1);
    assert_eq!(code(&run(&["oracle", "h", "--graph", &g, "--cap", "5"])), 2);
}

#[test]
fn reduce_commands() {
    let dir = tempfile::tempdir().unwrap();
    let tri = write(dir.path(), "tri.g", &write_graph(&complete_graph(3).unwrap()));
    let o = run(&["reduce", "ecr", "--graph", &tri, "-k", "3"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("budget: 3"));
    assert!(out.lines().any(|l| l == "22 39"));
    assert!(out.contains("# 3: Center"));
    let all = write(dir.path(), "all.parts", "0 1\n0 2\n1 2\n");
    let o = run(&["reduce", "ecr", "--graph", &tri, "-k", "3", "--witness", &all]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("witness: pass"));

    let (g, parts) = example_outerthickness_two();
    let gp = write(dir.path(), "ot.g", &write_graph(&g));
    let pp = write(dir.path(), "ot.parts", &write_parts(&parts, &g));
    let o = run(&["reduce", "unc", "--graph", &gp, "-k", "2", "--witness", &pp]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("witness: pass"));
    // Two parts do not fit a budget of one.
    let o = run(&["reduce", "unc", "--graph", &gp, "-k", "1", "--witness", &pp]);
    assert_eq!(code(&o), 1);
}

#[test]
fn render_is_deterministic() {
    let a = stdout(&run(&["render", "--builtin", "k5"]));
    let b = stdout(&run(&["render", "--builtin", "k5"]));
    assert_eq!(a, b);
    assert_eq!(a.matches("<g id=\"drawing-").count(), 2);
    let d = stdout(&run(&["render", "--builtin", "k5", "--format", "dot", "--layout", "radial-wheel"]));
    assert!(d.starts_with("graph certificate"));
    assert_eq!(code(&run(&["render"])), 2);
}

#[test]
fn quiet_suppresses_output() {
    let o = run(&["--quiet", "formula", "complete", "9"]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
}

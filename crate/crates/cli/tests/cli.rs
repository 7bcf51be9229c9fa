use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polartree")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

const QUARTIC: &str = "(y^2-x^3)^2-x^5*y";
const QUARTIC_CUSPS: &str = "((y^2-x^3)^2-x^5*y)*(y^2-x^3)*(y^2+x^3)";

#[test]
fn analyze_quartic() {
    let o = run(&["analyze", QUARTIC]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("n=4, m/n=(3/2, 7/4)"), "{s}");
    assert!(s.contains("Γ=⟨4,6,13⟩"), "{s}");
}

#[test]
fn analyze_smooth() {
    let o = run(&["analyze", "y"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("f1: n=1, smooth"));
}

#[test]
fn rejects_bad_input() {
    assert_eq!(run(&["analyze", "(y-x)^2"]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "2*y-x"]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "y+"]).status.code(), Some(2));
}

#[test]
fn tree_formats() {
    let dot = stdout(&run(&["tree", "--format", "dot", "y^2-x^3"]));
    assert!(dot.starts_with("digraph tree {"));
    assert!(dot.contains("P_1^3/2 = {f1}"));
    let json: serde_json::Value = serde_json::from_str(&stdout(&run(&["tree", "--format", "json", "y^2-x^3"]))).unwrap();
    assert_eq!(json["levels"][0], "3/2");
    assert_eq!(json["points"][0]["top"], true);
}

#[test]
fn dot_only_for_tree() {
    assert_eq!(run(&["polar", "--format", "dot", "y^2-x^3"]).status.code(), Some(2));
}

#[test]
fn polar_verify_quartic_cusps() {
    let o = run(&["polar", "--verify", QUARTIC_CUSPS]);
    let s = stdout(&o);
    assert!(o.status.success(), "{s}");
    assert!(s.contains("7/4, 26"), "{s}");
    assert!(s.contains("PASS"));
}

#[test]
fn perturbed_degree_fails() {
    let o = run(&["polar", "--verify", "--perturb-degree", QUARTIC]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn jacobian_verify() {
    let o = run(&["jacobian", "--verify", QUARTIC, "y"]);
    let s = stdout(&o);
    assert!(o.status.success(), "{s}");
    assert!(s.contains("P_1^7/4 F"), "{s}");
    assert!(s.contains("2, 13, 7/4"), "{s}");
}

#[test]
fn regularity_meromorphic() {
    let o = run(&["regularity", "y^4+x^-1*y^2+y+1"]);
    let s = stdout(&o);
    assert!(o.status.success(), "{s}");
    assert!(s.contains("irregular values: 1 (bound ξ = 2)"), "{s}");
    assert!(s.contains("λ = 1"));
}

#[test]
fn regularity_needs_generic() {
    let o = run(&["regularity", "y^2-x^3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not generic"));
}

#[test]
fn out_and_file_input() {
    let dir = std::env::temp_dir().join(format!("polartree-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let input = dir.join("f.txt");
    let out = dir.join("out.json");
    std::fs::write(&input, "y^2-x^3\n").unwrap();
    let o = run(&["tree", "--format", "json", "--out", out.to_str().unwrap(), &format!("@{}", input.display())]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["points"][0]["id"], "P_1^3/2");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn margin_parsing() {
    assert!(run(&["--margin", "1/2", "analyze", QUARTIC]).status.success());
    assert_eq!(run(&["--margin", "half", "analyze", QUARTIC]).status.code(), Some(2));
    assert_eq!(run(&["--margin", "-1", "analyze", QUARTIC]).status.code(), Some(2));
}

#[test]
fn corpus_single_fixture() {
    let o = run(&["corpus", "--only", "cusp"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "PASS cusp\nverdict: PASS\n");
    assert_eq!(run(&["corpus", "--only", "nope"]).status.code(), Some(2));
}

//! Tree shapes, predictions and oracle verdicts on hand-checked curves.

use polartree::analysis::{analyze, analyze_pair, Options};
use polartree::arith::rat::{fmt_rat, rat};
use polartree::corpus::{self, fixtures};
use polartree::oracle::{verify_curve, verify_pair};
use polartree::predict::{predict_jacobian, predict_polar, PointKind};
use polartree::Error;

fn opts() -> Options {
    Options::default()
}

fn shape(text: &str) -> Vec<String> {
    let an = analyze(text, &opts()).unwrap();
    an.tree
        .points
        .iter()
        .map(|p| {
            let m: Vec<String> = p.members.iter().map(|&b| an.branches.branches[b].name()).collect();
            format!("{}{}{}", p.label(), if p.is_top() { "*" } else { "" }, m.join(""))
        })
        .collect()
}

fn degrees(text: &str) -> Vec<i64> {
    let an = analyze(text, &opts()).unwrap();
    predict_polar(&an.tree, &an.branches).unwrap().points.iter().map(|p| p.degree).collect()
}

#[test]
fn cusp_has_one_top_point() {
    assert_eq!(shape("y^2-x^3"), ["P_1^3/2*f1"]);
    assert_eq!(degrees("y^2-x^3"), [1]);
}

#[test]
fn quartic_tree_is_a_chain() {
    assert_eq!(shape("(y^2-x^3)^2-x^5*y"), ["P_1^3/2f1", "P_1^7/4*f1"]);
}

#[test]
fn four_quartics_tree() {
    assert_eq!(shape(corpus::FOUR_QUARTICS), ["P_1^3/2f1f2f3f4", "P_1^7/4f1f2f3", "P_2^7/4*f4", "P_1^9/4*f2f3"]);
}

#[test]
fn quartic_cusps_tree() {
    assert_eq!(shape(corpus::QUARTIC_CUSPS), ["P_1^3/2f1f2f3", "P_1^7/4*f1f2"]);
    assert_eq!(degrees(corpus::QUARTIC_CUSPS), [3, 4]);
}

#[test]
fn lines_through_origin() {
    assert_eq!(shape("(y-x)*(y-2*x)*(y+x)"), ["P_1^1*f1f2f3"]);
    assert_eq!(degrees("(y-x)*(y-2*x)*(y+x)"), [2]);
}

#[test]
fn irreducible_table() {
    let an = analyze("(y^2-x^3)^2-x^5*y", &opts()).unwrap();
    let b = &an.branches.branches[0];
    let rows: Vec<String> = polartree::predict::predict_polar_irreducible(b)
        .into_iter()
        .map(|(d, i, c)| format!("{d},{i},{}", fmt_rat(&c)))
        .collect();
    assert_eq!(rows, ["1,6,3/2", "2,13,7/4"]);
}

#[test]
fn octic_pair_x11_has_a_pass_through_point() {
    let an = analyze(corpus::OCTIC_PAIR_X11, &opts()).unwrap();
    let p = predict_polar(&an.tree, &an.branches).unwrap();
    let zero: Vec<&str> = p.points.iter().filter(|q| q.degree == 0).map(|q| q.label.as_str()).collect();
    assert_eq!(zero, ["P_2^15/8"]);
    assert_eq!(p.total_degree(), 15);
}

#[test]
fn jacobian_with_smooth_g() {
    let pa = analyze_pair("(y^2-x^3)^2-x^5*y", "y", &opts()).unwrap();
    let j = predict_jacobian(&pa.an.tree, &pa.an.branches, &pa.is_f).unwrap();
    assert_eq!(j.kinds, [PointKind::Mixed, PointKind::F]);
    assert_eq!(j.irreducible, Some(vec![(2, 13, rat(7, 4))]));
    assert_eq!(j.total_degree(), 2);
}

#[test]
fn every_fixture_verifies() {
    for fx in fixtures() {
        let rep = match fx.g {
            None => analyze(fx.f, &opts()).and_then(|mut a| verify_curve(&mut a, false)).map(|r| r.report),
            Some(g) => analyze_pair(fx.f, g, &opts()).and_then(|mut a| verify_pair(&mut a, false)).map(|r| r.report),
        };
        let rep = rep.unwrap_or_else(|e| panic!("{}: {e}", fx.name));
        assert!(rep.passed(), "{}\n{}", fx.name, rep.to_text());
    }
}

#[test]
fn perturbed_prediction_is_caught() {
    let mut an = analyze(corpus::QUARTIC_PAIR, &opts()).unwrap();
    let r = verify_curve(&mut an, true).unwrap();
    assert!(!r.report.passed());
}

#[test]
fn meromorphic_irregular_value() {
    let mut an = analyze(corpus::MEROMORPHIC, &opts()).unwrap();
    let r = verify_curve(&mut an, false).unwrap();
    assert_eq!(r.values.count(), 1);
    assert_eq!(r.values.all[0].to_string(), "1");
}

#[test]
fn two_lines_apart_have_int_zero() {
    // Nearest other root at contact 0: f_y meets each branch with int 0.
    let mut an = analyze("(y-3+x)*(y+3+2*x)", &opts()).unwrap();
    let r = verify_curve(&mut an, false).unwrap();
    assert!(r.report.passed());
    let total: polartree::arith::Rat = r.obs.groups.values().map(|g| g.ints[0].clone()).sum();
    assert_eq!(total, rat(0, 1));
}

#[test]
fn shared_factor_is_rejected() {
    assert!(matches!(analyze("(y^2-x^3)*(y^2-x^3)", &opts()), Err(Error::NonReduced)));
    assert!(matches!(analyze("(y^2+2*x^-1*y+2)*(y^2+2*x^-1*y+2)", &opts()), Err(Error::NonReduced)));
}

#[test]
fn negative_orders_expand() {
    let an = analyze("(y^2+x^-1)*(y^2+x^-3)", &opts()).unwrap();
    let levels: Vec<String> = an.tree.levels.iter().map(fmt_rat).collect();
    assert_eq!(levels, ["-3/2", "-1/2"]);
}

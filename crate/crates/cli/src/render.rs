use std::fmt::Write;

use polartree::analysis::{Analysis, PairAnalysis};
use polartree::arith::rat::fmt_rat;
use polartree::oracle::CurveRun;
use polartree::predict::{PointPrediction, Regularity};
use polartree::puiseux::BranchSet;
use serde_json::{json, Value};

fn join<T: ToString>(v: impl IntoIterator<Item = T>, sep: &str) -> String {
    v.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

pub fn branches(an: &Analysis) -> String {
    let bs = &an.branches;
    let mut s = String::new();
    let _ = writeln!(s, "n = {}, {} branch(es)", bs.degree(), bs.len());
    for b in &bs.branches {
        if b.h() == 0 {
            let _ = writeln!(s, "{}: n={}, smooth", b.name(), b.n);
        } else {
            let _ = writeln!(
                s,
                "{}: n={}, m/n=({}), m=({}), d=({}), Γ=⟨{}⟩",
                b.name(),
                b.n,
                join(b.char_exponents().iter().map(fmt_rat), ", "),
                join(&b.m, ","),
                join(&b.d, ","),
                join(&b.r, ","),
            );
        }
        let _ = writeln!(s, "    y = {}", b.roots[0]);
    }
    if bs.len() > 1 {
        s.push_str("contacts c(fi, fj) / int(fi, fj):\n");
        for i in 0..bs.len() {
            let row: Vec<String> = (0..bs.len())
                .map(|j| if i == j { "-".into() } else { format!("{} / {}", fmt_rat(bs.c(i, j)), fmt_rat(&bs.ints[i][j])) })
                .collect();
            let _ = writeln!(s, "  {}: {}", bs.branches[i].name(), row.join("   "));
        }
    }
    s
}

fn table(bs: &BranchSet, points: &[&PointPrediction]) -> String {
    let mut s = String::new();
    let w = points.iter().map(|p| p.label.len()).max().unwrap_or(5).max(5);
    let _ = write!(s, "{:w$}  deg", "point");
    for b in &bs.branches {
        let _ = write!(s, "  {:>14}", format!("c,int({})", b.name()));
    }
    s.push('\n');
    for p in points {
        let _ = write!(s, "{:w$}  {:>3}", p.label, p.degree);
        for k in 0..bs.len() {
            let _ = write!(s, "  {:>14}", format!("{}, {}", fmt_rat(&p.contacts[k]), fmt_rat(&p.ints[k])));
        }
        s.push('\n');
    }
    s
}

pub fn polar(an: &Analysis, p: &polartree::predict::PolarPrediction) -> String {
    let pts: Vec<&PointPrediction> = p.points.iter().collect();
    let mut s = table(&an.branches, &pts);
    let _ = writeln!(s, "total degree {}", p.total_degree());
    if an.branches.len() == 1 {
        let b = &an.branches.branches[0];
        s.push_str("per characteristic exponent (deg, int, contact):\n");
        for (d, i, c) in polartree::predict::predict_polar_irreducible(b) {
            let _ = writeln!(s, "  {d}, {i}, {}", fmt_rat(&c));
        }
    }
    s
}

pub fn jacobian(pa: &PairAnalysis, p: &polartree::predict::JacobianPrediction) -> String {
    let bs = &pa.an.branches;
    let mut s = String::new();
    let side = |k: usize| if pa.is_f[k] { "f" } else { "g" };
    let _ = writeln!(s, "branches: {}", join(bs.branches.iter().enumerate().map(|(k, b)| format!("{}∈{}", b.name(), side(k))), " "));
    for q in &pa.an.tree.points {
        let _ = writeln!(s, "{} {:?}", q.label(), p.kinds[q.id]);
    }
    let pts: Vec<&PointPrediction> = p.points.iter().collect();
    s += &table(bs, &pts);
    let _ = writeln!(s, "predicted degree {}", p.total_degree());
    if let Some(v) = &p.irreducible {
        s.push_str("irreducible f, J_k (deg, int, contact):\n");
        for (d, i, c) in v {
            let _ = writeln!(s, "  {d}, {i}, {}", fmt_rat(c));
        }
    }
    s
}

fn label(r: &Regularity) -> &'static str {
    match r {
        Regularity::Good => "good",
        Regularity::Bad => "bad",
        Regularity::Positive => "positive",
    }
}

pub fn regularity(an: &Analysis, r: &CurveRun) -> String {
    let t = &an.tree;
    let mut s = String::new();
    for (p, int, lab) in &r.regularity.labels {
        let q = &t.points[*p];
        let top = if q.is_top() { " top" } else { "" };
        let _ = writeln!(s, "{}{top}: int(f, Q) = {}  {}  irregular values {}", q.label(), fmt_rat(int), label(lab), r.values.at(*p));
    }
    for (p, b) in &r.regularity.bounds {
        let _ = writeln!(s, "bound at {}: {b}", t.points[*p].label());
    }
    let _ = writeln!(s, "irregular values: {} (bound ξ = {})", r.values.count(), r.regularity.xi);
    for v in &r.values.all {
        let _ = writeln!(s, "  λ = {v}");
    }
    let _ = writeln!(s, "verdict: {}", r.report.verdict());
    s
}

pub fn regularity_json(an: &Analysis, r: &CurveRun) -> Value {
    let t = &an.tree;
    json!({
        "points": r.regularity.labels.iter().map(|(p, int, lab)| json!({
            "point": t.points[*p].label(),
            "top": t.points[*p].is_top(),
            "int": fmt_rat(int),
            "label": label(lab),
            "irregular_values": r.values.at(*p),
        })).collect::<Vec<_>>(),
        "bounds": r.regularity.bounds.iter().map(|(p, b)| json!({ "point": t.points[*p].label(), "bound": b })).collect::<Vec<_>>(),
        "irregular_values": r.values.all.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        "xi": r.regularity.xi,
        "report": r.report.to_json(),
    })
}

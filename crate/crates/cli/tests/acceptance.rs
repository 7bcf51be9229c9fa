//! One PASS/FAIL line per acceptance criterion.
//!
//! Criteria whose printed values differ from what the curves actually give
//! are reported as FAIL with the computed values. The test itself fails only
//! if a criterion regresses from the outcome recorded here.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::collections::BTreeMap;
use std::process::Command;
use std::time::{Duration, Instant};

use polartree::analysis::{analyze, analyze_pair, Analysis, Options};
use polartree::arith::rat::{fmt_rat, Rat};
use polartree::corpus::{self, fixtures};
use polartree::oracle::{verify_curve, verify_pair, CurveRun, Report};
use polartree::predict::Regularity;
use polartree::Error;
use proptest::strategy::{BoxedStrategy, Strategy, ValueTree};
use proptest::test_runner::TestRunner;

struct Outcome {
    ok: bool,
    detail: Vec<String>,
}

impl Outcome {
    fn new() -> Outcome {
        Outcome { ok: true, detail: vec![] }
    }

    fn expect(&mut self, what: &str, want: impl ToString, got: impl ToString) {
        let (w, g) = (want.to_string(), got.to_string());
        if w == g {
            self.detail.push(format!("ok   {what}: {g}"));
        } else {
            self.ok = false;
            self.detail.push(format!("MISS {what}: expected {w}, got {g}"));
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.detail.push(format!("note {}", s.into()));
    }
}

fn print(n: usize, title: &str, o: &Outcome) {
    println!("{} criterion {n}: {title}", if o.ok { "PASS" } else { "FAIL" });
    for d in &o.detail {
        println!("    {d}");
    }
}

fn run(text: &str) -> (Analysis, CurveRun, Duration) {
    let t0 = Instant::now();
    let mut an = analyze(text, &Options::default()).unwrap();
    let r = verify_curve(&mut an, false).unwrap();
    (an, r, t0.elapsed())
}

fn list<T: ToString>(v: impl IntoIterator<Item = T>) -> String {
    format!("({})", v.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

fn degrees(r: &CurveRun) -> String {
    list(r.polar.components().map(|p| p.degree))
}

fn cell(r: &CurveRun, point: &str, k: usize) -> String {
    let p = r.polar.points.iter().find(|p| p.label == point).unwrap();
    format!("({}, {})", fmt_rat(&p.contacts[k]), fmt_rat(&p.ints[k]))
}

fn within(o: &mut Outcome, dt: Duration, secs: u64) {
    o.expect(&format!("time < {secs} s"), true, dt < Duration::from_secs(secs));
    o.note(format!("elapsed {dt:.2?}"));
}

fn criterion_1() -> Outcome {
    let mut o = Outcome::new();
    let (an, r, dt) = run(corpus::QUARTIC_PAIR);
    let bs = &an.branches;
    for b in &bs.branches {
        o.expect(&format!("{} m", b.name()), "(6,7)", list(&b.m));
        o.expect(&format!("{} d", b.name()), "(4,2,1)", list(&b.d));
        o.expect(&format!("{} r", b.name()), "(4,6,13)", list(&b.r));
    }
    o.expect("c(f1,f2)", "7/4", fmt_rat(bs.c(0, 1)));
    o.expect("polar degrees", "(1,6)", degrees(&r));
    o.expect("Q1 cells", "(3/2, 6) (3/2, 6)", format!("{} {}", cell(&r, "P_1^3/2", 0), cell(&r, "P_1^3/2", 1)));
    o.expect("Q2 cells", "(7/4, 39) (7/4, 39)", format!("{} {}", cell(&r, "P_1^7/4", 0), cell(&r, "P_1^7/4", 1)));
    o.expect("oracle", "PASS", r.report.verdict());
    within(&mut o, dt, 5);
    o
}

fn criterion_2() -> Outcome {
    let mut o = Outcome::new();
    let (an, r, dt) = run(corpus::FOUR_QUARTICS);
    let t = &an.tree;
    let names = |v: &[usize]| format!("{{{}}}", v.iter().map(|&b| an.branches.branches[b].name()).collect::<Vec<_>>().join(","));
    let pts: Vec<String> = t.points.iter().map(|p| format!("{}={}", p.label(), names(&p.members))).collect();
    o.expect(
        "tree points",
        "P_1^3/2={f1,f2,f3,f4} P_1^7/4={f1,f2,f3} P_2^7/4={f4} P_1^9/4={f2,f3}",
        pts.join(" "),
    );
    let d = t.points.iter().find(|p| p.label() == "P_1^7/4").map(|p| names(&p.d)).unwrap_or_default();
    o.expect("D_1^7/4", "{f1}", d);
    o.expect("polar degrees", "(3,6,2,4)", degrees(&r));
    let want = [
        ("P_1^3/2", ["(3/2, 18)", "(3/2, 18)", "(3/2, 18)", "(3/2, 18)"]),
        ("P_1^7/4", ["(7/4, 39)", "(7/4, 39)", "(7/4, 39)", "(3/2, 36)"]),
        ("P_2^7/4", ["(3/2, 12)", "(3/2, 12)", "(3/2, 12)", "(7/4, 13)"]),
        ("P_1^9/4", ["(7/4, 26)", "(9/4, 28)", "(9/4, 28)", "(3/2, 24)"]),
    ];
    for (p, cells) in want {
        let got: Vec<String> = (0..4).map(|k| cell(&r, p, k)).collect();
        o.expect(&format!("{p} cells"), cells.join(" "), got.join(" "));
    }
    o.expect("oracle", "PASS", r.report.verdict());
    within(&mut o, dt, 30);
    o
}

/// Literal criterion. The computed table has the printed cells under the
/// other point, with degrees 3 and 4.
fn criterion_3() -> (Outcome, bool) {
    let mut o = Outcome::new();
    let (_, r, dt) = run(corpus::QUARTIC_CUSPS);
    o.expect("polar degrees", "(5,2)", degrees(&r));
    let cells = format!(
        "{} {} {} {}",
        cell(&r, "P_1^7/4", 0),
        cell(&r, "P_1^7/4", 1),
        cell(&r, "P_1^7/4", 2),
        cell(&r, "P_1^3/2", 2)
    );
    o.expect("cells", "(7/4, 26) (7/4, 13) (3/2, 12) (3/2, 9)", &cells);
    o.expect("oracle", "PASS", r.report.verdict());
    within(&mut o, dt, 10);
    o.note("printed degrees (5,2) contradict the printed ints: int(f1,Q) = 26 with contact 7/4 forces deg Q = 4");
    let known = degrees(&r) == "(3,4)" && r.report.passed();
    (o, known)
}

/// Literal criterion on the curve as printed (x^22).
fn criterion_4() -> (Outcome, bool) {
    let mut o = Outcome::new();
    let (an, r, dt) = run(corpus::OCTIC_PAIR);
    let bs = &an.branches;
    let gamma = |k: usize| format!("<{}>", bs.branches[k].r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","));
    o.expect("Γ(f1)", "<8,12,26,53>", gamma(0));
    o.expect("Γ(f2)", "<8,12,26,57>", gamma(1));
    o.expect("int(f1,f2)", "96", fmt_rat(&bs.ints[0][1]));
    let levels: Vec<String> = an.tree.levels.iter().map(fmt_rat).collect();
    o.expect("tree levels", "{3/2,7/4,15/4,19/4}", format!("{{{}}}", levels.join(",")));
    o.expect("polar degrees", "(3,2,2,4,4)", degrees(&r));
    o.expect("oracle", "PASS", r.report.verdict());
    within(&mut o, dt, 60);
    let (alt_an, alt, _) = run(corpus::OCTIC_PAIR_X11);
    let alt_levels: Vec<String> = alt_an.tree.levels.iter().map(fmt_rat).collect();
    o.note(format!(
        "with x^11 in f2: Γ(f2) = <{}>, int = {}, levels {{{}}}, degrees {}, cells {} {}, oracle {}",
        alt_an.branches.branches[1].r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","),
        fmt_rat(&alt_an.branches.ints[0][1]),
        alt_levels.join(","),
        degrees(&alt),
        cell(&alt, "P_1^15/8", 0),
        cell(&alt, "P_1^19/8", 1),
        alt.report.verdict()
    ));
    let known = r.report.passed()
        && gamma(1) == "<8,12,26,101>"
        && alt.report.passed()
        && degrees(&alt) == "(3,2,2,4,4)"
        && cell(&alt, "P_1^15/8", 0) == "(15/8, 53)"
        && cell(&alt, "P_1^19/8", 1) == "(19/8, 57)"
        && alt_an.branches.ints[0][1] == Rat::from_integer(96.into());
    (o, known)
}

fn criterion_5() -> (Outcome, bool) {
    let mut o = Outcome::new();
    let (an, r, dt) = run(corpus::MEROMORPHIC);
    let t = &an.tree;
    o.expect("generic", true, polartree::oracle::irregular::is_generic(&r.obs));
    let count = |lab: Regularity, top: bool| {
        r.regularity.labels.iter().filter(|(p, _, l)| *l == lab && (!top || t.points[*p].is_top())).count()
    };
    o.expect("bad top points", 1, count(Regularity::Bad, true));
    o.expect("good top points", 1, count(Regularity::Good, true));
    o.expect("irregular values", 1, r.values.count());
    o.expect("bound ξ(f)", 2, r.regularity.xi);
    o.expect("oracle", "PASS", r.report.verdict());
    within(&mut o, dt, 5);
    let good: Vec<String> = r
        .regularity
        .labels
        .iter()
        .filter(|l| l.2 == Regularity::Good)
        .map(|(p, i, _)| format!("{} (int {}, top {})", t.points[*p].label(), fmt_rat(i), t.points[*p].is_top()))
        .collect();
    o.note(format!("good points over all of T(f): {}", good.join(", ")));
    o.note("P_1^-1/2 = {f1, f2} has D = {f1}, so it is not a top point; the tree has one bad and one good point");
    let known = count(Regularity::Bad, true) == 1
        && count(Regularity::Good, false) == 1
        && r.values.count() == 1
        && r.report.passed();
    (o, known)
}

#[derive(Default)]
struct Family {
    instances: usize,
    failures: Vec<String>,
}

fn absorb(fams: &mut BTreeMap<String, Family>, label: &str, rep: &Report) {
    for s in &rep.sections {
        let f = fams.entry(s.name.clone()).or_default();
        f.instances += s.instances;
        f.failures.extend(s.failures.iter().map(|x| format!("{label}: {x}")));
    }
    for c in &rep.checks {
        let key = if c.subject == "total degree" { "degree conservation" } else { "prediction = observation" };
        let f = fams.entry(key.into()).or_default();
        f.instances += 1;
        if !c.ok {
            f.failures.push(format!("{label}: {} predicted {} observed {}", c.subject, c.predicted, c.observed));
        }
    }
}

const CASES: usize = 256;

fn criterion_6() -> Outcome {
    let mut o = Outcome::new();
    let mut fams: BTreeMap<String, Family> = BTreeMap::new();
    let mut runner = TestRunner::deterministic();
    let opts = Options::default();
    let mut generated = [0usize; 3];
    let suites: [(&str, BoxedStrategy<String>); 2] =
        [("germ", common::germ_curve().boxed()), ("meromorphic", common::meromorphic_curve().boxed())];
    for (i, (name, strat)) in suites.iter().enumerate() {
        let mut tries = 0;
        while generated[i] < CASES && tries < 8 * CASES {
            tries += 1;
            let f = strat.new_tree(&mut runner).unwrap().current();
            match analyze(&f, &opts).and_then(|mut a| verify_curve(&mut a, false)) {
                Ok(r) => {
                    generated[i] += 1;
                    absorb(&mut fams, &f, &r.report);
                }
                Err(Error::NonReduced) => {}
                Err(e) => fams.entry("errors".into()).or_default().failures.push(format!("{name} {f}: {e}")),
            }
        }
    }
    let mut tries = 0;
    while generated[2] < CASES && tries < 8 * CASES {
        tries += 1;
        let (f, g) = common::pair().new_tree(&mut runner).unwrap().current();
        match analyze_pair(&f, &g, &opts).and_then(|mut a| verify_pair(&mut a, false)) {
            Ok(r) => {
                generated[2] += 1;
                absorb(&mut fams, &format!("{f} | {g}"), &r.report);
            }
            Err(Error::NonReduced) | Err(Error::ZeroJacobian) => {}
            Err(e) => fams.entry("errors".into()).or_default().failures.push(format!("pair {f} | {g}: {e}")),
        }
    }
    for fx in fixtures() {
        let rep = match fx.g {
            None => analyze(fx.f, &opts).and_then(|mut a| verify_curve(&mut a, false)).map(|r| r.report),
            Some(g) => analyze_pair(fx.f, g, &opts).and_then(|mut a| verify_pair(&mut a, false)).map(|r| r.report),
        };
        match rep {
            Ok(r) => absorb(&mut fams, fx.name, &r),
            Err(e) => fams.entry("errors".into()).or_default().failures.push(format!("{}: {e}", fx.name)),
        }
    }
    o.note(format!("generated curves: {} germ, {} meromorphic, {} pairs", generated[0], generated[1], generated[2]));
    for g in generated {
        o.expect("generated instances per suite >= 200", true, g >= 200);
    }
    // Families named by the acceptance list, each needing 200 instances.
    let required = [
        "contact/intersection dictionary",
        "conjugate counts",
        "degree conservation",
        "R_M classes partition C_M",
        "X-set sizes",
        "D-set degree sums",
        "root contacts with f_y",
        "root contacts with J",
        "f_y roots off characteristic levels",
        "f_y roots on characteristic levels",
        "polygons at a deformed root",
        "Jacobian polygons at a deformed root",
        "f is regular for f_y",
    ];
    for name in required {
        let n = fams.get(name).map_or(0, |f| f.instances);
        o.expect(&format!("{name}: instances >= 200"), true, n >= 200);
    }
    for (name, f) in &fams {
        let line = format!("{name}: {} instances, {} failures", f.instances, f.failures.len());
        if f.failures.is_empty() {
            o.detail.push(format!("ok   {line}"));
        } else {
            o.ok = false;
            o.detail.push(format!("MISS {line}"));
            for x in f.failures.iter().take(3) {
                o.detail.push(format!("       {x}"));
            }
        }
    }
    o
}

fn criterion_7() -> Outcome {
    let mut o = Outcome::new();
    let bin = env!("CARGO_BIN_EXE_polartree");
    let clean = Command::new(bin).args(["corpus"]).output().unwrap();
    o.expect("corpus exit code", 0, clean.status.code().unwrap_or(-1));
    let bad = Command::new(bin).args(["corpus", "--perturb-degree"]).output().unwrap();
    o.expect("corpus exit code with one degree perturbed", 1, bad.status.code().unwrap_or(-1));
    let out = String::from_utf8_lossy(&bad.stdout);
    let failing = out.lines().filter(|l| l.starts_with("FAIL ")).count();
    o.note(format!("{failing} fixtures fail under perturbation"));
    o
}

fn main() {
    let c1 = criterion_1();
    print(1, "two quartics", &c1);
    let c2 = criterion_2();
    print(2, "four quartics", &c2);
    let (c3, k3) = criterion_3();
    print(3, "quartic and two cusps", &c3);
    let (c4, k4) = criterion_4();
    print(4, "two octics", &c4);
    let (c5, k5) = criterion_5();
    print(5, "meromorphic curve y^4+x^-1*y^2+y+1", &c5);
    let c6 = criterion_6();
    print(6, "property suites", &c6);
    let c7 = criterion_7();
    print(7, "oracle independence", &c7);
    assert!(c1.ok && c2.ok && c6.ok && c7.ok);
    assert!(c3.ok || k3, "criterion 3 moved away from the recorded outcome");
    assert!(c4.ok || k4, "criterion 4 moved away from the recorded outcome");
    assert!(c5.ok || k5, "criterion 5 moved away from the recorded outcome");
}

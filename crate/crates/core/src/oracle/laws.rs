//! Identities that hold for every branch set and tree, checked literally.

use std::collections::BTreeSet;

use crate::arith::rat::{fmt_rat, Rat};
use crate::arith::{Ring, TowerCtx};
use crate::error::Result;
use crate::puiseux::branches::conjugate_counts;
use crate::puiseux::BranchSet;
use crate::tree::{ContactTree, TreePoint};

use super::{Observation, Section};

fn ri(k: i64) -> Rat {
    Rat::from_integer(k.into())
}

/// Conjugates at contact ≥ m_k/n and = m_k/n number d_k and d_k - d_{k+1}.
pub fn conjugate_laws(ctx: &mut TowerCtx, bs: &BranchSet) -> Result<Section> {
    let mut s = Section::new("conjugate counts");
    for b in &bs.branches {
        for (k, (ge, eq)) in conjugate_counts(ctx, b)?.into_iter().enumerate() {
            let (dk, dk1) = (b.dk(k + 1), b.dk(k + 2));
            s.assert(ge as i64 == dk && eq as i64 == dk - dk1, || {
                format!("{} k={}: ({ge}, {eq}) vs ({dk}, {})", b.name(), k + 1, dk - dk1)
            });
        }
    }
    Ok(s)
}

/// Probe levels for the contact/intersection dictionary.
fn probes(bs: &BranchSet) -> Vec<Rat> {
    let mut ms: BTreeSet<Rat> = BTreeSet::new();
    for b in &bs.branches {
        ms.extend(b.char_exponents());
    }
    for i in 0..bs.len() {
        for j in i + 1..bs.len() {
            ms.insert(bs.c(i, j).clone());
        }
    }
    let base: Vec<Rat> = ms.iter().cloned().collect();
    for m in &base {
        ms.insert(m - Rat::new(1.into(), 7.into()));
        ms.insert(m + Rat::new(1.into(), 5.into()));
    }
    ms.insert(ri(-3));
    ms.insert(ri(40));
    ms.into_iter().collect()
}

/// c(f,g) compared with M orders int(f,g) against S(m^f, M) m/n.
pub fn dictionary(bs: &BranchSet) -> Section {
    let mut s = Section::new("contact/intersection dictionary");
    let ps = probes(bs);
    for (i, f) in bs.branches.iter().enumerate() {
        for (j, g) in bs.branches.iter().enumerate() {
            if i == j {
                continue;
            }
            let c = bs.c(i, j);
            let int = &bs.ints[i][j];
            for m in &ps {
                let v = f.s_function(m) * ri(g.n) / ri(f.n);
                s.assert(c.cmp(m) == int.cmp(&v), || {
                    format!("{}, {} at {}: c {} int {} S {}", f.name(), g.name(), fmt_rat(m), fmt_rat(c), fmt_rat(int), fmt_rat(&v))
                });
            }
        }
    }
    s
}

/// Ultrametric laws on triples, and the exponent laws on pairs.
pub fn contact_laws(bs: &BranchSet) -> Vec<Section> {
    let mut ultra = Section::new("ultrametric contacts");
    let k = bs.len();
    for f in 0..k {
        for g1 in 0..k {
            for g2 in g1 + 1..k {
                if f == g1 || f == g2 {
                    continue;
                }
                let (a, b) = (bs.c(f, g1), bs.c(f, g2));
                let m = a.min(b);
                let c = bs.c(g1, g2);
                ultra.assert(c >= m && (a == b || c == m), || {
                    format!("f{} f{} f{}: {} {} {}", f + 1, g1 + 1, g2 + 1, fmt_rat(a), fmt_rat(b), fmt_rat(c))
                });
            }
        }
    }
    let mut div = Section::new("degree divisibility under contact");
    let mut coef = Section::new("vanishing coefficient at the last exponent");
    let offset: Vec<usize> = bs.branches.iter().scan(0, |acc, b| {
        let o = *acc;
        *acc += b.roots.len();
        Some(o)
    }).collect();
    for (i, f) in bs.branches.iter().enumerate() {
        let fe = f.char_exponents();
        for (j, g) in bs.branches.iter().enumerate() {
            if i == j {
                continue;
            }
            let m = bs.c(i, j);
            let ge = g.char_exponents();
            if fe.first().is_some_and(|m1| m >= m1) {
                let k = (0..fe.len().min(ge.len())).take_while(|&t| fe[t] == ge[t] && &fe[t] <= m).count();
                let ok_i = (1..=k + 1).all(|t| f.n * g.dk(t) == g.n * f.dk(t));
                let q = f.n / f.dk(k + 1);
                div.assert(ok_i && g.n % q == 0, || format!("{}, {}: k={k}", f.name(), g.name()));
            } else {
                div.skip();
            }
            if fe.last() == Some(m) && f.n >= g.n {
                for (zi, z) in g.roots.iter().enumerate() {
                    let touches = (0..f.roots.len()).any(|yi| bs.root_c(offset[i] + yi, offset[j] + zi) == Some(m));
                    if touches {
                        coef.assert(g.n == f.n || z.coeff(m).is_syn_zero(), || {
                            format!("{}, {}: coefficient at {} is nonzero", f.name(), g.name(), fmt_rat(m))
                        });
                    }
                }
            }
        }
    }
    let mut deep = Section::new("shallow branches at the last exponent");
    for (f, fb) in bs.branches.iter().enumerate() {
        let Some(last) = fb.char_exponents().last().cloned() else { continue };
        for g1 in 0..k {
            for g2 in g1 + 1..k {
                if f == g1 || f == g2 {
                    continue;
                }
                if bs.c(g1, f) == &last && bs.c(g2, f) == &last && bs.branches[g1].n < fb.n && bs.branches[g2].n < fb.n {
                    deep.assert(bs.c(g1, g2) > &last, || format!("f{} f{} over {}", g1 + 1, g2 + 1, fb.name()));
                }
            }
        }
    }
    vec![ultra, div, coef, deep]
}

/// Partition, constant outside contact, X-sets, the count c = t + |D| and
/// the D-set degree sums.
pub fn tree_laws(t: &ContactTree, bs: &BranchSet) -> Vec<Section> {
    let mut part = Section::new("R_M classes partition C_M");
    let mut inside = Section::new("contacts inside and across points");
    let mut xs = Section::new("X-set sizes");
    let mut dsum = Section::new("D-set degree sums");
    let mut theta = Section::new("shared exponents below theta");
    for m in &t.levels {
        let pts: Vec<&TreePoint> = t.points.iter().filter(|p| &p.level == m).collect();
        let mut seen = BTreeSet::new();
        let mut disjoint = true;
        for p in &pts {
            for &b in &p.members {
                disjoint &= seen.insert(b);
            }
        }
        let cm: BTreeSet<usize> = (0..bs.len())
            .filter(|&b| {
                bs.branches[b].char_exponents().iter().any(|e| e >= m) || (0..bs.len()).any(|q| q != b && bs.c(b, q) >= m)
            })
            .collect();
        part.assert(disjoint && seen == cm, || format!("level {}", fmt_rat(m)));
    }
    for p in &t.points {
        let lbl = p.label();
        for &a in &p.members {
            for &b in &p.members {
                if a != b {
                    inside.assert(bs.c(a, b) >= &p.level, || format!("{lbl}: f{} f{} below M", a + 1, b + 1));
                }
            }
            for h in (0..bs.len()).filter(|h| !p.contains(*h)) {
                let c0 = bs.c(p.members[0], h);
                inside.assert(bs.c(a, h) < &p.level && bs.c(a, h) == c0, || format!("{lbl}: outside f{}", h + 1));
            }
        }
        let th = p.theta;
        if th >= 2 {
            let f = &bs.branches[p.members[0]];
            let ok = p.members.iter().all(|&g| {
                let g = &bs.branches[g];
                (1..th).all(|k| g.char_exponents().get(k - 1) == f.char_exponents().get(k - 1))
                    && (1..=th).all(|k| g.n * f.dk(k) == f.n * g.dk(k))
            });
            theta.assert(ok, || lbl.clone());
        }
        let (sets, c) = t.x_partition(p);
        for x in &sets {
            let pairwise = x.iter().all(|&a| x.iter().all(|&b| a == b || bs.c(a, b) == &p.level));
            let covers = p.members.iter().all(|&f| sets.iter().any(|y| y.contains(&f)));
            let each = p.dominating.iter().all(|&q| x.iter().filter(|&&b| t.points[q].contains(b)).count() == 1);
            let has_d = p.d.iter().all(|b| x.contains(b));
            xs.assert(x.len() == c && pairwise && covers && each && has_d, || format!("{lbl}: {x:?}, c = {c}"));
        }
        if !p.d.is_empty() {
            let t_count = p.dominating.len() as i64;
            let dd: Vec<_> = p.d.iter().map(|&b| &bs.branches[b]).collect();
            let at_top: Vec<bool> = dd.iter().map(|b| b.char_exponents().last() == Some(&p.level)).collect();
            let sum: i64 = dd.iter().map(|b| b.n).sum();
            let cc = c as i64;
            let nd = dd.iter().map(|b| b.n).max().unwrap();
            let want = if at_top.iter().all(|x| *x) || at_top.iter().all(|x| !*x) {
                (cc - t_count) * nd
            } else {
                let big = dd.iter().find(|b| b.n == nd).unwrap();
                (cc - t_count - 1) * nd + nd / big.dk(big.h())
            };
            dsum.assert(sum == want, || format!("{lbl}: sum {sum}, expected {want}"));
        }
    }
    vec![part, inside, theta, xs, dsum]
}

/// The quotient description of Q_H(M, i) selects the same roots as the
/// direct one.
pub fn quotient_rule(t: &ContactTree, obs: &Observation) -> Section {
    let mut s = Section::new("quotient rule for Q_H");
    let bc = &obs.branch_contacts;
    for p in &t.points {
        let m = &p.level;
        let direct: Vec<usize> = (0..bc.len()).filter(|&l| p.members.iter().all(|&g| &bc[l][g] == m)).collect();
        let (head, others): (usize, Vec<usize>) = match p.dominating.split_first() {
            Some((&q, rest)) => (t.points[q].members[0], rest.iter().map(|&q| t.points[q].members[0]).collect()),
            None => (p.d[0], vec![]),
        };
        let dset: Vec<usize> = p.d.iter().copied().filter(|&g| g != head).collect();
        let quotient: Vec<usize> = (0..bc.len())
            .filter(|&l| &bc[l][head] == m)
            .filter(|&l| others.iter().chain(dset.iter()).all(|&g| &bc[l][g] <= m))
            .collect();
        s.assert(direct == quotient, || format!("{}: {direct:?} vs {quotient:?}", p.label()));
    }
    s
}

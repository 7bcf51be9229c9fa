//! Closed-form predictions for the factors of f_y and of J(f, g).

use serde_json::{json, Value};

use crate::arith::rat::{fmt_rat, Rat};
use crate::error::{Error, Result};
use crate::puiseux::{Branch, BranchSet};
use crate::tree::{classify_sequence, ContactTree, SeqClass, TreePoint};

fn ri(k: i64) -> Rat {
    Rat::from_integer(k.into())
}

/// n_F / d^F_k.
fn nd(b: &Branch, k: usize) -> i64 {
    b.n / b.dk(k)
}

/// Predicted invariants of Q(M, i) for one tree point.
#[derive(Clone, Debug)]
pub struct PointPrediction {
    pub point: usize,
    pub label: String,
    pub top: bool,
    pub degree: i64,
    pub theta: usize,
    pub a: usize,
    pub b: usize,
    pub d_sum: i64,
    pub class: Option<SeqClass>,
    /// Contact of the components of Q with each branch.
    pub contacts: Vec<Rat>,
    /// int(f_k, Q) for each branch.
    pub ints: Vec<Rat>,
}

impl PointPrediction {
    pub fn total_int(&self, which: impl Fn(usize) -> bool) -> Rat {
        self.ints.iter().enumerate().filter(|(k, _)| which(*k)).map(|(_, v)| v.clone()).sum()
    }

    pub fn to_json(&self, bs: &BranchSet) -> Value {
        json!({
            "point": self.label,
            "top": self.top,
            "degree": self.degree,
            "theta": self.theta,
            "a": self.a,
            "b": self.b,
            "class": self.class.as_ref().map(|c| format!("{c:?}")),
            "cells": bs.branches.iter().enumerate().map(|(k, br)| json!({
                "branch": br.name(),
                "contact": fmt_rat(&self.contacts[k]),
                "int": fmt_rat(&self.ints[k]),
            })).collect::<Vec<_>>(),
        })
    }
}

/// A and B: dominating points whose first member has M = m_θ/n, resp. M < m_θ/n.
pub fn split_ab(t: &ContactTree, bs: &BranchSet, p: &TreePoint) -> (Vec<usize>, Vec<usize>) {
    let (mut a, mut b) = (vec![], vec![]);
    for &q in &p.dominating {
        let f = &bs.branches[t.points[q].members[0]];
        match f.char_exponents().get(p.theta - 1) {
            Some(e) if *e == p.level => a.push(q),
            _ => b.push(q),
        }
    }
    (a, b)
}

fn d_sum(bs: &BranchSet, p: &TreePoint) -> i64 {
    p.d.iter().map(|&k| bs.branches[k].n).sum()
}

/// The single closed formula a n/d_{θ+1} + (b-1) n/d_θ + Σ_D n_F.
pub fn degree_closed(t: &ContactTree, bs: &BranchSet, p: &TreePoint) -> i64 {
    let (a, b) = split_ab(t, bs, p);
    let any = &bs.branches[p.members[0]];
    let na = a.first().map_or(0, |&q| nd(&bs.branches[t.points[q].members[0]], p.theta + 1));
    a.len() as i64 * na + (b.len() as i64 - 1) * nd(any, p.theta) + d_sum(bs, p)
}

/// The case split on whether the first dominating point lies in A or B.
pub fn degree_ab(t: &ContactTree, bs: &BranchSet, p: &TreePoint) -> Option<i64> {
    let first = *p.dominating.first()?;
    let (a, b) = split_ab(t, bs, p);
    let th = p.theta;
    let f = |q: usize| &bs.branches[t.points[q].members[0]];
    let sa: i64 = a.iter().filter(|&&q| q != first).map(|&q| nd(f(q), th + 1)).sum();
    let sb: i64 = b.iter().filter(|&&q| q != first).map(|&q| nd(f(q), th)).sum();
    let f1 = f(first);
    let own = if a.contains(&first) { (f1.ek(th) - 1) * nd(f1, th) } else { 0 };
    Some(sa + sb + own + d_sum(bs, p))
}

/// The raw two-case formula from R_{=M} and R_{>M} degrees.
pub fn degree_raw(t: &ContactTree, bs: &BranchSet, p: &TreePoint) -> Option<i64> {
    let first = *p.dominating.first()?;
    let m = &p.level;
    let f = |q: usize| &bs.branches[t.points[q].members[0]];
    let mut deg = d_sum(bs, p);
    for &q in p.dominating.iter().skip(1) {
        let fl = f(q);
        let above: i64 = (1..=fl.h()).filter(|&j| m < &fl.char_exponents()[j - 1]).map(|j| (fl.ek(j) - 1) * nd(fl, j)).sum();
        deg += fl.n - above;
    }
    let f1 = f(first);
    if f1.char_exponents().get(p.theta - 1) == Some(m) {
        deg += (f1.ek(p.theta) - 1) * nd(f1, p.theta);
    }
    Some(deg)
}

/// Degree at a top point from its sequence class.
pub fn degree_top(bs: &BranchSet, p: &TreePoint) -> Result<(i64, SeqClass)> {
    let class = classify_sequence(bs, &p.members, &p.level)?;
    let r = p.members.len() as i64;
    let f1 = p.members.iter().map(|&k| &bs.branches[k]).max_by_key(|b| b.n).unwrap();
    let h = f1.h();
    let at_last = f1.char_exponents().last() == Some(&p.level);
    let deg = match class {
        SeqClass::AlmostEquivalent(_) => (r - 1) * f1.n,
        _ if at_last => (r - 1) * f1.n + (f1.ek(h) - 1) * nd(f1, h),
        _ => (r - 1) * f1.n,
    };
    Ok((deg, class))
}

/// Contacts and intersection numbers of Q(M, i) with every branch.
pub fn cells(bs: &BranchSet, p: &TreePoint, degree: i64) -> (Vec<Rat>, Vec<Rat>) {
    let mut cs = vec![];
    let mut is = vec![];
    for (k, b) in bs.branches.iter().enumerate() {
        let c = if p.contains(k) { p.level.clone() } else { bs.c(k, p.members[0]).clone() };
        is.push(b.s_function(&c) * ri(degree) / ri(b.n));
        cs.push(c);
    }
    (cs, is)
}

pub fn predict_point(t: &ContactTree, bs: &BranchSet, p: &TreePoint) -> Result<PointPrediction> {
    let closed = degree_closed(t, bs, p);
    let mut class = None;
    if p.is_top() {
        let (d, c) = degree_top(bs, p)?;
        if d != closed {
            return Err(Error::InternalInconsistency(format!(
                "{}: top formula gives {d}, closed formula {closed}",
                p.label()
            )));
        }
        class = Some(c);
    } else {
        for (name, v) in [("A/B", degree_ab(t, bs, p)), ("raw", degree_raw(t, bs, p))] {
            if v != Some(closed) {
                return Err(Error::InternalInconsistency(format!(
                    "{}: {name} formula gives {v:?}, closed formula {closed}",
                    p.label()
                )));
            }
        }
    }
    let (a, b) = split_ab(t, bs, p);
    let (contacts, ints) = cells(bs, p, closed);
    Ok(PointPrediction {
        point: p.id,
        label: p.label(),
        top: p.is_top(),
        degree: closed,
        theta: p.theta,
        a: a.len(),
        b: b.len(),
        d_sum: d_sum(bs, p),
        class,
        contacts,
        ints,
    })
}

/// Factor table of f_y, one entry per tree point.
#[derive(Clone, Debug)]
pub struct PolarPrediction {
    pub points: Vec<PointPrediction>,
}

impl PolarPrediction {
    pub fn total_degree(&self) -> i64 {
        self.points.iter().map(|p| p.degree).sum()
    }

    /// Points with a nonconstant factor.
    pub fn components(&self) -> impl Iterator<Item = &PointPrediction> {
        self.points.iter().filter(|p| p.degree > 0)
    }

    /// Adds one to the first nonconstant prediction.
    pub fn perturb(&mut self) {
        perturb(&mut self.points);
    }

    pub fn to_json(&self, bs: &BranchSet) -> Value {
        json!({
            "components": self.points.iter().map(|p| p.to_json(bs)).collect::<Vec<_>>(),
            "total_degree": self.total_degree(),
        })
    }
}

fn perturb(points: &mut [PointPrediction]) {
    let i = points.iter().position(|p| p.degree > 0).unwrap_or(0);
    if let Some(p) = points.get_mut(i) {
        p.degree += 1;
    }
}

pub fn predict_polar(t: &ContactTree, bs: &BranchSet) -> Result<PolarPrediction> {
    let points = t.points.iter().map(|p| predict_point(t, bs, p)).collect::<Result<_>>()?;
    Ok(PolarPrediction { points })
}

/// Components of f_y for an irreducible f: (degree, int, contact) per k.
pub fn predict_polar_irreducible(b: &Branch) -> Vec<(i64, i64, Rat)> {
    (1..=b.h())
        .map(|k| ((b.ek(k) - 1) * nd(b, k), (b.ek(k) - 1) * b.r[k], b.char_exponents()[k - 1].clone()))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PointKind {
    F,
    G,
    Mixed,
}

/// Labels every point of T(fg); `is_f[k]` tells whether branch k comes from f.
pub fn classify_points(t: &ContactTree, is_f: &[bool]) -> Vec<PointKind> {
    t.points
        .iter()
        .map(|p| {
            let nf = p.members.iter().filter(|&&k| is_f[k]).count();
            if nf == p.members.len() {
                PointKind::F
            } else if nf == 0 {
                PointKind::G
            } else {
                PointKind::Mixed
            }
        })
        .collect()
}

/// Whether f-points and g-points are closed upward and mixed points downward.
pub fn taxonomy_is_monotone(t: &ContactTree, kinds: &[PointKind]) -> bool {
    t.points.iter().all(|p| {
        p.dominating.iter().all(|&q| match kinds[p.id] {
            PointKind::F | PointKind::G => kinds[q] == kinds[p.id],
            PointKind::Mixed => true,
        }) && p.parent.is_none_or(|q| kinds[p.id] != PointKind::Mixed || kinds[q] == PointKind::Mixed)
    })
}

#[derive(Clone, Debug)]
pub struct JacobianPrediction {
    pub kinds: Vec<PointKind>,
    /// Predictions at f-points and g-points.
    pub points: Vec<PointPrediction>,
    /// For irreducible f: (degree, int, contact) of J_k, k = θ..h.
    pub irreducible: Option<Vec<(i64, i64, Rat)>>,
}

impl JacobianPrediction {
    pub fn total_degree(&self) -> i64 {
        self.points.iter().map(|p| p.degree).sum()
    }

    pub fn perturb(&mut self) {
        perturb(&mut self.points);
    }

    pub fn to_json(&self, bs: &BranchSet) -> Value {
        json!({
            "kinds": self.kinds.iter().map(|k| format!("{k:?}")).collect::<Vec<_>>(),
            "components": self.points.iter().map(|p| p.to_json(bs)).collect::<Vec<_>>(),
            "irreducible": self.irreducible.as_ref().map(|v| v.iter().map(|(d, i, c)| json!({
                "degree": d, "int": i, "contact": fmt_rat(c)
            })).collect::<Vec<_>>()),
        })
    }
}

pub fn predict_jacobian(t: &ContactTree, bs: &BranchSet, is_f: &[bool]) -> Result<JacobianPrediction> {
    let kinds = classify_points(t, is_f);
    let mut points = vec![];
    for p in &t.points {
        if kinds[p.id] != PointKind::Mixed {
            points.push(predict_point(t, bs, p)?);
        }
    }
    let fs: Vec<usize> = (0..bs.len()).filter(|&k| is_f[k]).collect();
    let irreducible = match fs.as_slice() {
        [f] => {
            let b = &bs.branches[*f];
            let m = (0..bs.len()).filter(|&k| !is_f[k]).map(|k| bs.c(*f, k).clone()).max();
            let theta = match &m {
                Some(m) => b.char_exponents().iter().position(|e| m < e).map_or(b.h() + 1, |i| i + 1),
                None => 1,
            };
            Some(predict_polar_irreducible(b).into_iter().skip(theta - 1).collect())
        }
        _ => None,
    };
    Ok(JacobianPrediction { kinds, points, irreducible })
}

/// Sign class of a factor with respect to f.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Regularity {
    Good,
    Bad,
    /// int(f, Q) > 0: f is not generic.
    Positive,
}

#[derive(Clone, Debug)]
pub struct RegularityPrediction {
    /// (point, int(f, Q), label) for points with a nonconstant factor.
    pub labels: Vec<(usize, Rat, Regularity)>,
    /// Upper bound on the irregular values from each bad top point.
    pub bounds: Vec<(usize, usize)>,
    pub xi: usize,
}

pub fn predict_regularity(t: &ContactTree, bs: &BranchSet, polar: &PolarPrediction) -> Result<RegularityPrediction> {
    let mut labels = vec![];
    let mut bounds = vec![];
    for pp in polar.components() {
        let total = pp.total_int(|_| true);
        let zero = ri(0);
        let lab = if total < zero {
            Regularity::Good
        } else if total == zero {
            Regularity::Bad
        } else {
            Regularity::Positive
        };
        if lab == Regularity::Bad && pp.top {
            let p = &t.points[pp.point];
            let r = p.members.len();
            let f1 = p.members.iter().map(|&k| &bs.branches[k]).max_by_key(|b| b.n).unwrap();
            let bound = match classify_sequence(bs, &p.members, &p.level)? {
                SeqClass::AlmostEquivalent(_) => r - 1,
                _ if f1.char_exponents().last() == Some(&p.level) => r,
                _ => r - 1,
            };
            bounds.push((pp.point, bound));
        }
        labels.push((pp.point, total, lab));
    }
    Ok(RegularityPrediction { labels, bounds, xi: bs.len() })
}

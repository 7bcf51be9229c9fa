//! Ground truth from direct expansion of f_y and J(f, g).
//!
//! Grouping keys only on measured contacts; predicted numbers are read
//! after the groups are formed.

pub mod counting;
pub mod deform;
pub mod irregular;
pub mod laws;
pub mod report;

mod run;

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::analysis::Analysis;
use crate::arith::rat::{fmt_rat, Rat};
use crate::arith::AlgNum;
use crate::curve::{FracPoly, CurvePoly};
use crate::error::{Error, Result};
use crate::predict::{JacobianPrediction, PointKind, PointPrediction, PolarPrediction};
use crate::puiseux::{relative_roots, BranchSet, Leaf, PuiseuxSeries};
use crate::tree::ContactTree;

pub use report::{Check, Report, Section};
pub use run::{verify_curve, verify_pair, CurveRun, PairRun};

fn rn(k: usize) -> Rat {
    Rat::from_integer((k as i64).into())
}

/// Roots of a second polynomial, bucketed by tree point.
#[derive(Clone, Debug)]
pub struct Observation {
    pub leaves: Vec<Leaf>,
    /// Branch of each f-root, in the order used by the leaves.
    pub root_branch: Vec<usize>,
    /// Per leaf: contact with each branch (max over its roots).
    pub branch_contacts: Vec<Vec<Rat>>,
    /// Per leaf: Σ_y c(y, z) over all roots of f.
    pub sigma: Vec<Rat>,
    /// Per leaf: the point whose members all have contact M with it.
    pub point: Vec<Option<usize>>,
    pub groups: BTreeMap<Option<usize>, ObservedGroup>,
}

#[derive(Clone, Debug)]
pub struct ObservedGroup {
    pub degree: usize,
    /// Contact with each branch; `None` if the leaves disagree.
    pub contacts: Vec<Option<Rat>>,
    pub ints: Vec<Rat>,
}

impl Observation {
    pub fn total_degree(&self) -> usize {
        self.leaves.iter().map(|l| l.count).sum()
    }

    pub fn group(&self, point: usize) -> Option<&ObservedGroup> {
        self.groups.get(&Some(point))
    }

    /// Number of H-roots with branch contact `m` to branch `k`.
    pub fn count_branch_contact(&self, k: usize, m: &Rat) -> usize {
        self.leaves.iter().zip(&self.branch_contacts).filter(|(_, c)| &c[k] == m).map(|(l, _)| l.count).sum()
    }

    /// Number of H-roots with contact `m` to f-root `r`.
    pub fn count_root_contact(&self, r: usize, m: &Rat) -> usize {
        self.leaves.iter().filter(|l| &l.contacts[r] == m).map(|l| l.count).sum()
    }
}

/// Expands the roots of `h` against the branches and groups them.
pub fn observe(an: &mut Analysis, h: &FracPoly<AlgNum>) -> Result<Observation> {
    let bs = &an.branches;
    let roots: Vec<(usize, &PuiseuxSeries)> = bs.all_roots();
    let series: Vec<PuiseuxSeries> = roots.iter().map(|(_, y)| (*y).clone()).collect();
    let root_branch: Vec<usize> = roots.iter().map(|(b, _)| *b).collect();
    let leaves = relative_roots(&mut an.ctx, h, &series)?;
    group_leaves(&an.tree, bs, leaves, root_branch)
}

fn group_leaves(t: &ContactTree, bs: &BranchSet, leaves: Vec<Leaf>, root_branch: Vec<usize>) -> Result<Observation> {
    let k = bs.len();
    let mut branch_contacts = vec![];
    let mut sigma = vec![];
    let mut point = vec![];
    let mut groups: BTreeMap<Option<usize>, ObservedGroup> = BTreeMap::new();
    for leaf in &leaves {
        let mut bc: Vec<Option<Rat>> = vec![None; k];
        let mut ints = vec![rn(0); k];
        for (r, c) in leaf.contacts.iter().enumerate() {
            let b = root_branch[r];
            if bc[b].as_ref().is_none_or(|x| c > x) {
                bc[b] = Some(c.clone());
            }
            ints[b] += c * rn(leaf.count);
        }
        let bc: Vec<Rat> = bc.into_iter().map(|c| c.expect("every branch has a root")).collect();
        sigma.push(leaf.contacts.iter().cloned().sum());
        let hits: Vec<usize> = t
            .points
            .iter()
            .filter(|p| p.members.iter().all(|&m| bc[m] == p.level))
            .map(|p| p.id)
            .collect();
        if hits.len() > 1 {
            return Err(Error::InternalInconsistency(format!("a root sits at {} tree points", hits.len())));
        }
        let p = hits.first().copied();
        let g = groups.entry(p).or_insert_with(|| ObservedGroup {
            degree: 0,
            contacts: bc.iter().cloned().map(Some).collect(),
            ints: vec![rn(0); k],
        });
        g.degree += leaf.count;
        for (i, c) in bc.iter().enumerate() {
            if g.contacts[i].as_ref() != Some(c) {
                g.contacts[i] = None;
            }
            g.ints[i] += &ints[i];
        }
        point.push(p);
        branch_contacts.push(bc);
    }
    Ok(Observation { leaves, root_branch, branch_contacts, sigma, point, groups })
}

/// f_y / n as a fractional polynomial.
pub fn polar_of(f: &CurvePoly) -> FracPoly<AlgNum> {
    FracPoly::from_bipoly(&f.polar_monic().map(|c| AlgNum::rat(c.clone())))
}

pub fn observe_polar(an: &mut Analysis) -> Result<Observation> {
    let h = polar_of(&an.curve());
    observe(an, &h)
}

/// J(f, g) for the two sides of a pair analysis.
pub fn jacobian_of(f: &CurvePoly, g: &CurvePoly) -> Result<FracPoly<AlgNum>> {
    let j = crate::curve::jacobian(&f.poly, &g.poly);
    if j.is_zero() {
        return Err(Error::ZeroJacobian);
    }
    Ok(FracPoly::from_bipoly(&j.map(|c| AlgNum::rat(c.clone()))))
}

fn cell(c: &Rat, i: &Rat) -> String {
    format!("({}, {})", fmt_rat(c), fmt_rat(i))
}

fn compare_point(rep: &mut Report, bs: &BranchSet, pp: &PointPrediction, og: Option<&ObservedGroup>) {
    let observed = og.map_or(0, |g| g.degree);
    rep.check(format!("{} degree", pp.label), pp.degree.to_string(), observed.to_string(), pp.degree == observed as i64);
    let Some(g) = og else { return };
    if pp.degree <= 0 {
        return;
    }
    for (k, b) in bs.branches.iter().enumerate() {
        let obs = match &g.contacts[k] {
            Some(c) => cell(c, &g.ints[k]),
            None => format!("(mixed, {})", fmt_rat(&g.ints[k])),
        };
        let ok = g.contacts[k].as_ref() == Some(&pp.contacts[k]) && g.ints[k] == pp.ints[k];
        rep.check(format!("{} vs {}", pp.label, b.name()), cell(&pp.contacts[k], &pp.ints[k]), obs, ok);
    }
}

/// Compares the polar prediction with the observation, cell by cell.
pub fn verify_polar(an: &Analysis, pred: &PolarPrediction, obs: &Observation) -> Report {
    let mut rep = Report::new("polar");
    let bs = &an.branches;
    for pp in &pred.points {
        compare_point(&mut rep, bs, pp, obs.group(pp.point));
    }
    if let Some(g) = obs.groups.get(&None) {
        rep.check("roots outside every point".into(), "0".into(), g.degree.to_string(), false);
    }
    let n = an.branches.degree();
    rep.check(
        "total degree".into(),
        (n - 1).to_string(),
        format!("{} predicted, {} observed", pred.total_degree(), obs.total_degree()),
        pred.total_degree() == n - 1 && obs.total_degree() as i64 == n - 1,
    );
    rep
}

/// Same comparison over the f-points and g-points of T(fg).
pub fn verify_jacobian(an: &Analysis, pred: &JacobianPrediction, obs: &Observation) -> Report {
    let mut rep = Report::new("jacobian");
    let bs = &an.branches;
    for pp in &pred.points {
        compare_point(&mut rep, bs, pp, obs.group(pp.point));
    }
    let residual: usize = obs
        .groups
        .iter()
        .filter(|(p, _)| p.is_none_or(|p| pred.kinds[p] == PointKind::Mixed))
        .map(|(_, g)| g.degree)
        .sum();
    rep.check(
        "residual degree".into(),
        format!("{} (deg J minus predicted)", obs.total_degree() as i64 - pred.total_degree()),
        residual.to_string(),
        residual as i64 == obs.total_degree() as i64 - pred.total_degree(),
    );
    if let Some(comps) = &pred.irreducible {
        let mut fpoints: Vec<&PointPrediction> = pred.points.iter().filter(|p| p.degree > 0).collect();
        fpoints.retain(|p| pred.kinds[p.point] == PointKind::F);
        fpoints.sort_by(|a, b| an.tree.points[a.point].level.cmp(&an.tree.points[b.point].level));
        let want: Vec<String> = comps.iter().map(|(d, i, c)| format!("{d}@{}:{i}", fmt_rat(c))).collect();
        let f = an.branches.branches.iter().position(|b| b.factor == 0).unwrap_or(0);
        let got: Vec<String> =
            fpoints.iter().map(|p| format!("{}@{}:{}", p.degree, fmt_rat(&p.contacts[f]), fmt_rat(&p.ints[f]))).collect();
        rep.check("irreducible f components".into(), want.join(" "), got.join(" "), want == got);
    }
    if pred.total_degree() > 0 {
        rep.check(
            "J has roots when T_f or T_g is nonempty".into(),
            ">0".into(),
            obs.total_degree().to_string(),
            obs.total_degree() > 0,
        );
    }
    rep
}

pub fn observation_json(bs: &BranchSet, t: &ContactTree, obs: &Observation) -> Value {
    json!(obs
        .groups
        .iter()
        .map(|(p, g)| json!({
            "point": p.map(|p| t.points[p].label()),
            "degree": g.degree,
            "cells": bs.branches.iter().enumerate().map(|(k, b)| json!({
                "branch": b.name(),
                "contact": g.contacts[k].as_ref().map(fmt_rat),
                "int": fmt_rat(&g.ints[k]),
            })).collect::<Vec<_>>(),
        }))
        .collect::<Vec<_>>())
}

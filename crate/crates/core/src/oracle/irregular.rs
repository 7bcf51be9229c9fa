//! Irregular values of f read off the polar roots with int = 0.

use std::collections::BTreeMap;

use crate::analysis::Analysis;
use crate::arith::rat::{fmt_rat, Rat};
use crate::arith::roots::all_roots;
use crate::arith::{AlgError, AlgNum, Ring};
use crate::curve::FracPoly;
use crate::error::Result;
use crate::predict::{Regularity, RegularityPrediction};

use super::{Observation, Section};

#[derive(Clone, Debug, Default)]
pub struct IrregularValues {
    /// Distinct values per tree point.
    pub per_point: BTreeMap<usize, Vec<AlgNum>>,
    /// Distinct values over the whole curve.
    pub all: Vec<AlgNum>,
    /// Some bad leaf produced λ = 0.
    pub zero_seen: bool,
}

impl IrregularValues {
    pub fn count(&self) -> usize {
        self.all.len()
    }

    pub fn at(&self, p: usize) -> usize {
        self.per_point.get(&p).map_or(0, |v| v.len())
    }
}

fn insert(set: &mut Vec<AlgNum>, v: &AlgNum) -> std::result::Result<(), AlgError> {
    for w in set.iter() {
        if w.equals(v)? {
            return Ok(());
        }
    }
    set.push(v.clone());
    Ok(())
}

pub fn is_generic(obs: &Observation) -> bool {
    obs.sigma.iter().all(|s| *s <= Rat::from_integer(0.into()))
}

/// λ = inco f(x, γ(x)) for every polar root γ with O_x f(x, γ) = 0.
///
/// The constant term only depends on the terms of γ up to its largest
/// contact with f, so the leaf prefix and one exit term suffice.
pub fn irregular_values(an: &mut Analysis, obs: &Observation) -> Result<IrregularValues> {
    let f = FracPoly::from_bipoly(&an.curve().to_alg());
    let zero = Rat::from_integer(0.into());
    let out = an.ctx.run(|ctx| {
        let mut out = IrregularValues::default();
        for (i, leaf) in obs.leaves.iter().enumerate() {
            if obs.sigma[i] != zero {
                continue;
            }
            let mut gammas = vec![];
            match &leaf.exit {
                Some((s, e)) => {
                    for (c, _) in all_roots(ctx, e)? {
                        let mut z = leaf.prefix.clone();
                        z.push((s.clone(), c));
                        gammas.push(z);
                    }
                }
                None => gammas.push(leaf.prefix.clone()),
            }
            for z in gammas {
                let lam = f.shift_series(&z).term(&zero, 0).cloned().unwrap_or_else(AlgNum::zero);
                if lam.equals(&AlgNum::zero())? {
                    out.zero_seen = true;
                    continue;
                }
                insert(&mut out.all, &lam)?;
                if let Some(p) = obs.point[i] {
                    insert(out.per_point.entry(p).or_default(), &lam)?;
                }
            }
        }
        Ok(out)
    })?;
    Ok(out)
}

/// Sign of int(f, H) on every observed polar root against the label of
/// its point.
pub fn regularity_section(pred: &RegularityPrediction, obs: &Observation, vals: &IrregularValues) -> Section {
    let mut sec = Section::new("good and bad points");
    let zero = Rat::from_integer(0.into());
    for (p, total, lab) in &pred.labels {
        for (i, _) in obs.leaves.iter().enumerate().filter(|(i, _)| obs.point[*i] == Some(*p)) {
            let s = &obs.sigma[i];
            let got = if *s < zero {
                Regularity::Good
            } else if *s == zero {
                Regularity::Bad
            } else {
                Regularity::Positive
            };
            sec.assert(&got == lab, || {
                format!("point {p}: predicted int {} ({lab:?}), root with O_x f = {}", fmt_rat(total), fmt_rat(s))
            });
        }
    }
    sec.assert(!vals.zero_seen, || "an irregular root gives λ = 0".into());
    sec
}

/// int(f_k, f_y) < 0 for every branch of a generic f whose nearest other
/// root is at contact M != 0. At M = 0 the sum can vanish: two lines
/// y = a + ..., y = b + ... with a != b give int(f_k, f_y) = 0.
pub fn polar_is_regular(an: &Analysis, obs: &Observation) -> Section {
    let mut sec = Section::new("f is regular for f_y");
    // For n = 1, f_y is a unit and has no components.
    if !is_generic(obs) || an.branches.degree() < 2 {
        sec.skip();
        return sec;
    }
    let bs = &an.branches;
    let zero = Rat::from_integer(0.into());
    for (k, b) in bs.branches.iter().enumerate() {
        let r = obs.root_branch.iter().position(|&x| x == k).unwrap();
        let m = (0..obs.root_branch.len()).filter_map(|j| bs.root_c(r, j)).max();
        if m.is_none_or(|m| *m == zero) {
            sec.skip();
            continue;
        }
        let int: Rat = obs.groups.values().map(|g| g.ints[k].clone()).sum();
        sec.assert(int < zero, || format!("int({}, f_y) = {}", b.name(), fmt_rat(&int)));
    }
    sec
}

/// Per-point and global bounds on the number of irregular values.
pub fn bounds_section(an: &Analysis, pred: &RegularityPrediction, obs: &Observation, vals: &IrregularValues) -> Section {
    let mut sec = Section::new("irregular value bounds");
    if !is_generic(obs) {
        sec.skip();
        return sec;
    }
    let t = &an.tree;
    for (p, bound) in &pred.bounds {
        let got = vals.at(*p);
        sec.assert(got <= *bound, || format!("{}: {got} values, bound {bound}", t.points[*p].label()));
    }
    let xi = pred.xi;
    sec.assert(vals.count() <= xi, || format!("{} values, ξ = {xi}", vals.count()));
    let top_card: usize = t.points.iter().filter(|p| p.is_top()).map(|p| p.members.len()).sum();
    sec.assert(vals.count() <= top_card, || format!("{} values, top cardinality {top_card}", vals.count()));
    let bad = pred.labels.iter().filter(|l| l.2 == Regularity::Bad).count();
    if bad == 1 {
        sec.assert(vals.count() < xi, || format!("one bad point but {} = ξ values", vals.count()));
    }
    if vals.count() == xi && xi > 0 {
        let ok = t.points.iter().filter(|p| !p.is_top()).all(|p| p.dominating.is_empty());
        sec.assert(ok, || "ξ values but a non-top point has dominating points".into());
    }
    sec
}

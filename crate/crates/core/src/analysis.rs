//! From input text to branches and tree.

use crate::arith::algnum::TowerCtx;
use crate::arith::rat::Rat;
use crate::curve::{parse_curve, split_factors, CurvePoly, FracPoly};
use crate::error::{Error, Result};
use crate::puiseux::expand::isolation_orders;
use crate::puiseux::{expand_isolated, expand_to, group_branches, BranchSet, ExtRat, PuiseuxSeries};
use crate::tree::{build_tree, ContactTree};

pub const DEFAULT_DEPTH_CAP: usize = 8;

#[derive(Clone, Debug)]
pub struct Options {
    pub depth_cap: usize,
    /// Extra precision past the largest isolation order; `None` is 1/N.
    pub margin: Option<Rat>,
}

impl Default for Options {
    fn default() -> Self {
        let depth_cap = std::env::var("POLARTREE_DEPTH_CAP")
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(DEFAULT_DEPTH_CAP);
        Options { depth_cap, margin: None }
    }
}

pub struct Analysis {
    /// Input factors, in order.
    pub factors: Vec<CurvePoly>,
    pub ctx: TowerCtx,
    pub branches: BranchSet,
    pub tree: ContactTree,
}

impl Analysis {
    /// The product of the factors.
    pub fn curve(&self) -> CurvePoly {
        let mut it = self.factors.iter();
        let first = it.next().cloned().expect("at least one factor");
        it.fold(first, |a, b| a.product(b))
    }
}

/// Parses `text`, splitting a top-level product into factors.
pub fn parse_factors(text: &str) -> Result<Vec<CurvePoly>> {
    let pieces = split_factors(text);
    if pieces.len() > 1 {
        let parsed: Result<Vec<_>> = pieces.iter().map(|p| parse_curve(p)).collect();
        if let Ok(fs) = parsed {
            if fs.iter().all(|f| f.degree() >= 1) {
                return Ok(fs);
            }
        }
    }
    Ok(vec![parse_curve(text)?])
}

pub fn analyze(text: &str, opts: &Options) -> Result<Analysis> {
    analyze_factors(parse_factors(text)?, opts)
}

pub fn analyze_factors(factors: Vec<CurvePoly>, opts: &Options) -> Result<Analysis> {
    let factors: Vec<CurvePoly> = factors.into_iter().map(|f| f.check_reduced()).collect::<Result<_>>()?;
    if factors.len() > 1 {
        // Catches a factor shared between the pieces.
        let prod = factors[1..].iter().fold(factors[0].clone(), |a, b| a.product(b));
        prod.check_reduced()?;
    }
    let mut ctx = TowerCtx::new(opts.depth_cap);
    let polys: Vec<FracPoly<_>> = factors.iter().map(|f| FracPoly::from_bipoly(&f.to_alg())).collect();
    let roots = joint_roots(&mut ctx, &polys, opts.margin.as_ref())?;
    let mut all = vec![];
    for (i, rs) in roots.into_iter().enumerate() {
        let bs = group_branches(&mut ctx, rs, i, all.len())?;
        all.extend(bs);
    }
    let branches = BranchSet::new(&mut ctx, all)?;
    let tree = build_tree(&branches)?;
    Ok(Analysis { factors, ctx, branches, tree })
}

/// Expands every factor far enough that all roots of the product are
/// isolated, plus the margin.
fn joint_roots(
    ctx: &mut TowerCtx,
    polys: &[FracPoly<crate::arith::AlgNum>],
    margin: Option<&Rat>,
) -> Result<Vec<Vec<PuiseuxSeries>>> {
    let mut roots: Vec<Vec<PuiseuxSeries>> =
        polys.iter().map(|f| expand_isolated(ctx, f, margin)).collect::<Result<_>>()?;
    if polys.len() == 1 {
        return Ok(roots);
    }
    // Each factor only needs its own roots' isolation orders in the union.
    for _ in 0..24 {
        let flat: Vec<PuiseuxSeries> = roots.iter().flatten().cloned().collect();
        let n = flat.iter().map(|r| r.ramification()).fold(1u64, num_integer::lcm);
        let margin = margin.cloned().unwrap_or_else(|| Rat::new(1.into(), (n as i64).into()));
        let mut clash = false;
        for (i, y) in flat.iter().enumerate() {
            for z in &flat[i + 1..] {
                clash |= matches!(ctx.run(|_| y.contact(z))?, ExtRat::Inf);
            }
        }
        let iso = if clash { vec![] } else { isolation_orders(ctx, &flat)? };
        let mut done = true;
        let mut at = 0;
        for (f, rs) in polys.iter().zip(roots.iter_mut()) {
            let k = rs.len();
            at += k;
            let Some(prec) = rs.iter().map(|r| r.prec.clone()).min() else { continue };
            let target = if clash {
                prec.clone() + num_traits::Signed::abs(&prec).max(Rat::from_integer(1.into()))
            } else {
                iso[at - k..at].iter().max().cloned().unwrap() + &margin
            };
            if prec < target {
                done = false;
                *rs = expand_to(ctx, f, &target)?.ok_or_else(|| {
                    Error::InternalInconsistency("factor lost isolation on deeper expansion".into())
                })?;
            }
        }
        if done {
            return Ok(roots);
        }
    }
    Err(Error::NonReduced)
}

/// Pair input for J(f, g): the tree of f·g, with `is_f[k]` marking the
/// branches of f.
pub struct PairAnalysis {
    pub an: Analysis,
    pub f: CurvePoly,
    pub g: CurvePoly,
    pub is_f: Vec<bool>,
}

pub fn analyze_pair(f_text: &str, g_text: &str, opts: &Options) -> Result<PairAnalysis> {
    let fs = parse_factors(f_text)?;
    let gs = parse_factors(g_text)?;
    let nf = fs.len();
    let prod = |v: &[CurvePoly]| v[1..].iter().fold(v[0].clone(), |a, b| a.product(b));
    let (f, g) = (prod(&fs), prod(&gs));
    let an = analyze_factors(fs.into_iter().chain(gs).collect(), opts)?;
    let is_f = an.branches.branches.iter().map(|b| b.factor < nf).collect();
    Ok(PairAnalysis { an, f, g, is_f })
}

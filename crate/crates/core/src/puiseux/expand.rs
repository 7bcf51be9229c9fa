//! Newton-Puiseux expansion with explicit roots.
//!
//! A node holds G = F(x, γ + y) for the common prefix γ of a cluster of μ
//! roots. Below a node only the polygon edges of order above the last
//! exponent matter, and a term (e, j) is dropped once e + j*M0 exceeds
//! α_μ + μ*T, where M0 is the node order, (α_μ, μ) its vertex and T the
//! target. That weight never decreases under later substitutions.

use num_traits::Zero;

use crate::arith::rat::Rat;
use crate::arith::roots::all_roots;
use crate::arith::{AlgError, AlgNum, Field, Ring, TowerCtx};
use crate::curve::FracPoly;
use crate::error::{Error, Result};
use crate::polygon::{edge_poly, polygon_upto};

use super::series::PuiseuxSeries;

fn rn(k: usize) -> Rat {
    Rat::from_integer((k as i64).into())
}

/// Continues a cluster of one root up to the target.
fn single(g: FracPoly<AlgNum>, mut prefix: Vec<(Rat, AlgNum)>, target: &Rat) -> std::result::Result<PuiseuxSeries, AlgError> {
    let mut g = g;
    loop {
        let a1 = match g.coeff(1).and_then(|m| m.iter().next()) {
            Some((e, c)) => (e.clone(), c.clone()),
            None => unreachable!("cluster vertex lost"),
        };
        let Some((b, c0)) = g.coeff(0).and_then(|m| m.iter().next()).map(|(e, c)| (e.clone(), c.clone())) else {
            return Ok(PuiseuxSeries::new(prefix, target.clone()));
        };
        let s = &b - &a1.0;
        if &s >= target {
            return Ok(PuiseuxSeries::new(prefix, target.clone()));
        }
        let c = c0.negated().divide(&a1.1)?;
        let bound = &a1.0 + target;
        g = g.shift(&c, &s, |e, j| e + &s * rn(j) <= bound);
        prefix.push((s, c));
    }
}

fn node(
    ctx: &mut TowerCtx,
    g: &FracPoly<AlgNum>,
    prefix: &[(Rat, AlgNum)],
    mu: usize,
    target: &Rat,
) -> std::result::Result<Option<Vec<PuiseuxSeries>>, AlgError> {
    let poly = polygon_upto(g, mu)?;
    let mut out = vec![];
    let mut found = 0;
    for edge in &poly.edges {
        let s = edge.order();
        if &s >= target {
            break;
        }
        let e = edge_poly(g, edge);
        for (c, m) in all_roots(ctx, &e)? {
            found += m;
            let bound = edge.level() + rn(m) * (target - &s);
            let g2 = g.shift(&c, &s, |e, j| e + &s * rn(j) <= bound);
            let mut p2 = prefix.to_vec();
            p2.push((s.clone(), c));
            if m == 1 {
                out.push(single(g2, p2, target)?);
            } else {
                match node(ctx, &g2, &p2, m, target)? {
                    Some(r) => out.extend(r),
                    None => return Ok(None),
                }
            }
        }
    }
    match mu - found {
        0 => Ok(Some(out)),
        1 => {
            out.push(PuiseuxSeries::new(prefix.to_vec(), target.clone()));
            Ok(Some(out))
        }
        _ => Ok(None),
    }
}

/// All roots of `f` known below `target`, or `None` when two roots still
/// agree up to the target.
pub fn expand_to(ctx: &mut TowerCtx, f: &FracPoly<AlgNum>, target: &Rat) -> Result<Option<Vec<PuiseuxSeries>>> {
    let n = f.degree();
    Ok(ctx.run(|ctx| node(ctx, f, &[], n, target))?)
}

/// Least x-order of a root.
pub fn min_root_order(f: &FracPoly<AlgNum>) -> Result<Rat> {
    let p = crate::polygon::polygon_of(f)?;
    Ok(p.edges.first().map(|e| e.order()).unwrap_or_else(<Rat as Zero>::zero))
}

/// Expands until every root is isolated, then by `margin` beyond the
/// largest isolation order. `None` margin means 1/N with N the common
/// ramification.
pub fn expand_isolated(ctx: &mut TowerCtx, f: &FracPoly<AlgNum>, margin: Option<&Rat>) -> Result<Vec<PuiseuxSeries>> {
    if f.degree() == 0 {
        return Ok(vec![]);
    }
    let poly = crate::polygon::polygon_of(f)?;
    let lo = poly.edges.first().map(|e| e.order()).unwrap_or_else(<Rat as Zero>::zero);
    let hi = poly.edges.last().map(|e| e.order()).unwrap_or_else(<Rat as Zero>::zero);
    let mut t = hi + Rat::from_integer(1.into());
    let mut rounds = 0;
    let roots = loop {
        if let Some(r) = expand_to(ctx, f, &t)? {
            break r;
        }
        rounds += 1;
        if rounds > 24 {
            return Err(Error::NonReduced);
        }
        let step = (&t - &lo).max(Rat::from_integer(1.into()));
        t += step;
    };
    let iso = isolation_orders(ctx, &roots)?;
    let max_iso = iso.iter().max().cloned().unwrap_or(lo);
    let margin = match margin {
        Some(m) => m.clone(),
        None => {
            let n = roots.iter().map(|r| r.ramification()).fold(1u64, num_integer::lcm);
            Rat::new(1.into(), (n as i64).into())
        }
    };
    let need = max_iso + margin;
    if need <= t {
        return roots.iter().map(|y| y.truncate_lt(&need)).collect();
    }
    expand_to(ctx, f, &need)?.ok_or_else(|| Error::InternalInconsistency("isolation lost on deeper expansion".into()))
}

/// For each root, the largest contact with another root.
pub fn isolation_orders(ctx: &mut TowerCtx, roots: &[PuiseuxSeries]) -> Result<Vec<Rat>> {
    let mut out = vec![];
    for (i, y) in roots.iter().enumerate() {
        let mut best: Option<Rat> = None;
        for (j, z) in roots.iter().enumerate() {
            if i == j {
                continue;
            }
            match ctx.run(|_| y.contact(z))? {
                super::series::ExtRat::Fin(c) => {
                    if best.as_ref().is_none_or(|b| &c > b) {
                        best = Some(c);
                    }
                }
                super::series::ExtRat::Inf => {
                    return Err(Error::InternalInconsistency("two roots agree to full precision".into()));
                }
            }
        }
        out.push(best.unwrap_or_else(|| y.order().cloned().unwrap_or_else(<Rat as Zero>::zero)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::{rat, rint};
    use crate::curve::parse_curve;

    fn roots_of(s: &str) -> (TowerCtx, Vec<PuiseuxSeries>) {
        let f = parse_curve(s).unwrap();
        let mut ctx = TowerCtx::new(8);
        let r = expand_isolated(&mut ctx, &FracPoly::from_bipoly(&f.to_alg()), None).unwrap();
        (ctx, r)
    }

    #[test]
    fn cusp_roots() {
        let (_, r) = roots_of("y^2 - x^3");
        assert_eq!(r.len(), 2);
        for y in &r {
            assert_eq!(y.support(), vec![rat(3, 2)]);
        }
        assert!(r[0].terms[0].1.plus(&r[1].terms[0].1).zero_test().unwrap());
    }

    #[test]
    fn quartic_with_second_exponent() {
        let (_, r) = roots_of("(y^2 - x^3)^2 - x^5*y");
        assert_eq!(r.len(), 4);
        for y in &r {
            assert_eq!(&y.support()[..2], &[rat(3, 2), rat(7, 4)]);
        }
    }

    #[test]
    fn meromorphic_orders() {
        let (_, r) = roots_of("y^4 + x^-1*y^2 + y + 1");
        let mut orders: Vec<Rat> = r.iter().map(|y| y.order().unwrap().clone()).collect();
        orders.sort();
        assert_eq!(orders, vec![rat(-1, 2), rat(-1, 2), rat(1, 2), rat(1, 2)]);
    }

    #[test]
    fn exact_root_is_isolated() {
        let (_, r) = roots_of("y*(y - x)");
        assert_eq!(r.len(), 2);
        assert!(r.iter().any(|y| y.terms.is_empty()));
        assert!(r.iter().all(|y| y.prec > rint(1)));
    }
}

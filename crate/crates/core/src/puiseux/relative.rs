//! Roots of a second polynomial H, followed only as far as needed to fix
//! their contact with every known root of f.
//!
//! H may be non-reduced (f_y often is), so its roots are never isolated.
//! A node tracks a cluster of μ roots of H sharing a prefix γ together
//! with the f-roots that still agree with γ. A cluster leaves the tree as
//! soon as no f-root follows it.

use crate::arith::poly::{exact_div, root_multiplicity};
use crate::arith::rat::{fmt_rat, Rat};
use crate::arith::{AlgError, AlgNum, Ring, TowerCtx};
use crate::curve::FracPoly;
use crate::error::{Error, Result};
use crate::polygon::{edge_poly, polygon_upto};

use super::series::PuiseuxSeries;

/// A set of H-roots with the same contact to every f-root.
#[derive(Clone, Debug)]
pub struct Leaf {
    pub count: usize,
    /// Contact with each f-root, indexed like the input roots.
    pub contacts: Vec<Rat>,
    /// Common prefix of the H-roots.
    pub prefix: Vec<(Rat, AlgNum)>,
    /// Order and residual edge polynomial of the next term, when known.
    pub exit: Option<(Rat, Vec<AlgNum>)>,
}

#[derive(Clone)]
enum Next {
    Term(Rat, AlgNum),
    /// No term below this precision.
    Unknown(Rat),
}

fn next_of(y: &PuiseuxSeries, after: Option<&Rat>) -> Next {
    match y.next_term(after) {
        Some((e, a)) => Next::Term(e.clone(), a.clone()),
        None => Next::Unknown(y.prec.clone()),
    }
}

fn rn(k: usize) -> Rat {
    Rat::from_integer((k as i64).into())
}

struct Walk<'a> {
    froots: &'a [PuiseuxSeries],
    target: Rat,
    leaves: Vec<Leaf>,
}

enum Stop {
    Alg(AlgError),
    /// An H-root agrees with an f-root up to the f-root's precision.
    Unresolved,
}

impl From<AlgError> for Stop {
    fn from(e: AlgError) -> Stop {
        Stop::Alg(e)
    }
}

impl Walk<'_> {
    #[allow(clippy::too_many_arguments)]
    fn node(
        &mut self,
        g: &FracPoly<AlgNum>,
        prefix: &[(Rat, AlgNum)],
        last: Option<&Rat>,
        mu: usize,
        s_set: &[usize],
        known: &[Option<Rat>],
    ) -> std::result::Result<(), Stop> {
        let nexts: Vec<(usize, Next)> = s_set.iter().map(|&i| (i, next_of(&self.froots[i], last))).collect();
        let poly = polygon_upto(g, mu)?;
        let mut used = 0;
        for edge in &poly.edges {
            let s = edge.order();
            if s >= self.target {
                break;
            }
            used += edge.height();
            let e = edge_poly(g, edge);
            let mut groups: Vec<(AlgNum, Vec<usize>)> = vec![];
            for (i, nx) in &nexts {
                if let Next::Term(ey, ay) = nx {
                    if *ey == s {
                        let mut placed = false;
                        for (a, ys) in groups.iter_mut() {
                            if a.equals(ay)? {
                                ys.push(*i);
                                placed = true;
                                break;
                            }
                        }
                        if !placed {
                            groups.push((ay.clone(), vec![*i]));
                        }
                    }
                }
            }
            let mut residual = e.clone();
            let mut matched = 0;
            for (a, ys) in &groups {
                let m = root_multiplicity(&e, a)?;
                if m == 0 {
                    continue;
                }
                matched += m;
                let lin = vec![a.negated(), AlgNum::int(1)];
                for _ in 0..m {
                    residual = exact_div(&residual, &lin)?;
                }
                let mut k2 = known.to_vec();
                for (i, nx) in &nexts {
                    if !ys.contains(i) {
                        k2[*i] = Some(Self::contact_at(nx, &s)?);
                    }
                }
                let bound = edge.level() + rn(m) * (&self.target - &s);
                let g2 = g.shift(a, &s, |e, j| e + &s * rn(j) <= bound);
                let mut p2 = prefix.to_vec();
                p2.push((s.clone(), a.clone()));
                self.node(&g2, &p2, Some(&s), m, ys, &k2)?;
            }
            let rest = edge.height() - matched;
            if rest > 0 {
                let mut k2 = known.to_vec();
                for (i, nx) in &nexts {
                    k2[*i] = Some(Self::contact_at(nx, &s)?);
                }
                self.leaf(rest, k2, prefix, Some((s.clone(), residual)));
            }
        }
        let rest = mu - used;
        if rest > 0 {
            let mut k2 = known.to_vec();
            for (i, nx) in &nexts {
                match nx {
                    Next::Term(ey, _) => k2[*i] = Some(ey.clone()),
                    Next::Unknown(_) => return Err(Stop::Unresolved),
                }
            }
            self.leaf(rest, k2, prefix, None);
        }
        Ok(())
    }

    /// Contact of f-root i with an H-root whose next term has order s and
    /// a coefficient other than that of root i.
    fn contact_at(nx: &Next, s: &Rat) -> std::result::Result<Rat, Stop> {
        match nx {
            Next::Term(ey, _) => Ok(ey.clone().min(s.clone())),
            Next::Unknown(p) if s < p => Ok(s.clone()),
            Next::Unknown(_) => Err(Stop::Unresolved),
        }
    }

    fn leaf(
        &mut self,
        count: usize,
        known: Vec<Option<Rat>>,
        prefix: &[(Rat, AlgNum)],
        exit: Option<(Rat, Vec<AlgNum>)>,
    ) {
        let contacts = known.into_iter().map(|c| c.expect("contact fixed at leaf")).collect();
        self.leaves.push(Leaf { count, contacts, prefix: prefix.to_vec(), exit });
    }
}

/// Follows the roots of `h` against the roots of f.
pub fn relative_roots(ctx: &mut TowerCtx, h: &FracPoly<AlgNum>, froots: &[PuiseuxSeries]) -> Result<Vec<Leaf>> {
    let target = froots.iter().map(|y| y.prec.clone()).max().unwrap_or_else(|| rn(1));
    let all: Vec<usize> = (0..froots.len()).collect();
    let known = vec![None; froots.len()];
    let res = ctx.run(|_| {
        let mut w = Walk { froots, target: target.clone(), leaves: vec![] };
        match w.node(h, &[], None, h.degree(), &all, &known) {
            Ok(()) => Ok(Some(w.leaves)),
            Err(Stop::Unresolved) => Ok(None),
            Err(Stop::Alg(e)) => Err(e),
        }
    })?;
    res.ok_or_else(|| {
        Error::TruncationTooShort(format!(
            "a root of the second polynomial follows a root of f beyond x^{}",
            fmt_rat(&target)
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::{rat, rint};
    use crate::curve::parse_curve;
    use crate::puiseux::expand_isolated;

    fn run(s: &str) -> (Vec<PuiseuxSeries>, Vec<Leaf>) {
        let f = parse_curve(s).unwrap();
        let mut ctx = TowerCtx::new(8);
        let fa = FracPoly::from_bipoly(&f.to_alg());
        let roots = expand_isolated(&mut ctx, &fa, None).unwrap();
        let leaves = relative_roots(&mut ctx, &fa.derivative_y(), &roots).unwrap();
        (roots, leaves)
    }

    #[test]
    fn cusp_polar() {
        let (_, l) = run("y^2 - x^3");
        assert_eq!(l.len(), 1);
        assert_eq!(l[0].count, 1);
        assert_eq!(l[0].contacts, vec![rat(3, 2), rat(3, 2)]);
    }

    #[test]
    fn quartic_polar() {
        let (roots, l) = run("(y^2-x^3)^2-x^5*y");
        assert_eq!(l.iter().map(|x| x.count).sum::<usize>(), 3);
        // Sum over polar roots of contacts with a root of f equals
        // the sum of its contacts with the other roots.
        for i in 0..roots.len() {
            let lhs: Rat = l.iter().map(|x| &x.contacts[i] * rn(x.count)).sum();
            let mut rhs = rint(0);
            for j in 0..roots.len() {
                if i != j {
                    rhs += roots[i].contact(&roots[j]).unwrap().fin().unwrap().clone();
                }
            }
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn non_reduced_polar() {
        let (_, l) = run("y^3 - x^7");
        assert_eq!(l.iter().map(|x| x.count).sum::<usize>(), 2);
        assert!(l.iter().all(|x| x.contacts.iter().all(|c| *c == rat(7, 3))));
    }
}

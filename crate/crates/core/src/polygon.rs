//! Newton polygons: the compact part of the boundary of the convex hull of
//! the horizontal rays (α_j, j) + R_+, one ray per y-degree present.

use std::fmt::Write;

use num_traits::Zero;

use crate::arith::rat::{fmt_rat, Rat};
use crate::arith::{AlgError, Ring};
use crate::curve::FracPoly;
use crate::error::{Error, Result};

/// Compact edge between two vertices, `top.1 > bottom.1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Edge {
    pub top: (Rat, usize),
    pub bottom: (Rat, usize),
}

impl Edge {
    /// Common x-order of the roots this edge accounts for.
    pub fn order(&self) -> Rat {
        (&self.bottom.0 - &self.top.0) / Rat::from_integer(((self.top.1 - self.bottom.1) as i64).into())
    }

    pub fn height(&self) -> usize {
        self.top.1 - self.bottom.1
    }

    /// Value of e + j*order on the edge.
    pub fn level(&self) -> Rat {
        &self.top.0 + self.order() * Rat::from_integer((self.top.1 as i64).into())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Polygon {
    /// Decreasing in y.
    pub vertices: Vec<(Rat, usize)>,
    pub edges: Vec<Edge>,
}

impl Polygon {
    /// Orders of roots with multiplicity, smallest first.
    pub fn orders_of_roots(&self) -> Vec<Rat> {
        let mut out = vec![];
        for e in &self.edges {
            for _ in 0..e.height() {
                out.push(e.order());
            }
        }
        out
    }

    pub fn last_edge(&self) -> Option<&Edge> {
        self.edges.last()
    }

    pub fn meets_x_axis(&self) -> bool {
        self.vertices.last().is_some_and(|v| v.1 == 0)
    }

    /// Same polygon moved by (dx, dy), dy applied to y-coordinates.
    pub fn translated(&self, dx: &Rat, dy: i64) -> Polygon {
        let mv = |v: &(Rat, usize)| (&v.0 + dx, (v.1 as i64 + dy) as usize);
        Polygon {
            vertices: self.vertices.iter().map(mv).collect(),
            edges: self.edges.iter().map(|e| Edge { top: mv(&e.top), bottom: mv(&e.bottom) }).collect(),
        }
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut s = String::new();
        writeln!(s, "digraph \"{name}\" {{").unwrap();
        writeln!(s, "  rankdir=LR;").unwrap();
        for (i, v) in self.vertices.iter().enumerate() {
            writeln!(s, "  v{i} [label=\"({}, {})\"];", fmt_rat(&v.0), v.1).unwrap();
        }
        for (i, e) in self.edges.iter().enumerate() {
            writeln!(s, "  v{i} -> v{} [label=\"order {}\"];", i + 1, fmt_rat(&e.order())).unwrap();
        }
        s.push_str("}\n");
        s
    }
}

/// Polygon of a point set; for each y only the least x matters.
pub fn polygon_of_points(points: &[(Rat, usize)]) -> Result<Polygon> {
    let mut best: std::collections::BTreeMap<usize, Rat> = Default::default();
    for (e, j) in points {
        let slot = best.entry(*j).or_insert_with(|| e.clone());
        if e < slot {
            *slot = e.clone();
        }
    }
    if best.is_empty() {
        return Err(Error::EmptySupport);
    }
    let pts: Vec<(Rat, usize)> = best.into_iter().rev().map(|(j, e)| (e, j)).collect();
    let order = |a: &(Rat, usize), b: &(Rat, usize)| (&b.0 - &a.0) / Rat::from_integer(((a.1 - b.1) as i64).into());
    let mut hull: Vec<(Rat, usize)> = vec![];
    for p in pts {
        while hull.len() >= 2 {
            let n = hull.len();
            if order(&hull[n - 2], &hull[n - 1]) >= order(&hull[n - 1], &p) {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    let edges = hull.windows(2).map(|w| Edge { top: w[0].clone(), bottom: w[1].clone() }).collect();
    Ok(Polygon { vertices: hull, edges })
}

/// Polygon of F with decided support at the vertices.
pub fn polygon_of<C: Ring>(f: &FracPoly<C>) -> std::result::Result<Polygon, AlgError> {
    polygon_upto(f, usize::MAX)
}

/// Polygon of the part of F of y-degree at most `mu`.
pub fn polygon_upto<C: Ring>(f: &FracPoly<C>, mu: usize) -> std::result::Result<Polygon, AlgError> {
    let mut g = f.clone();
    g.cs.truncate(mu.saturating_add(1));
    loop {
        let poly = match polygon_of_points(&g.support()) {
            Ok(p) => p,
            Err(_) => {
                return Ok(Polygon { vertices: vec![], edges: vec![] });
            }
        };
        let mut dropped = false;
        for (e, j) in &poly.vertices {
            if g.term(e, *j).unwrap().zero_test()? {
                g.cs[*j].remove(e);
                dropped = true;
            }
        }
        if !dropped {
            return Ok(poly);
        }
    }
}

/// Coefficients of F_Δ(1, c) indexed by the y-degree, for degrees
/// `bottom.1 ..= top.1` shifted to start at 0.
pub fn edge_poly<C: Ring>(f: &FracPoly<C>, e: &Edge) -> Vec<C> {
    let s = e.order();
    let lvl = e.level();
    let mut out = vec![C::zero(); e.height() + 1];
    for j in e.bottom.1..=e.top.1 {
        let ex = &lvl - &s * Rat::from_integer((j as i64).into());
        if let Some(c) = f.term(&ex, j) {
            out[j - e.bottom.1] = c.clone();
        }
    }
    out
}

/// Terms minimizing e + M j, with the minimum and whether it is a monomial.
pub fn initial_form<C: Ring>(f: &FracPoly<C>, m: &Rat) -> (Vec<(Rat, usize, C)>, Rat, bool) {
    let mut best: Option<Rat> = None;
    let mut terms = vec![];
    for (j, cs) in f.cs.iter().enumerate() {
        for (e, c) in cs {
            let w = e + m * Rat::from_integer((j as i64).into());
            match &best {
                Some(b) if &w > b => continue,
                Some(b) if &w == b => terms.push((e.clone(), j, c.clone())),
                _ => {
                    best = Some(w);
                    terms = vec![(e.clone(), j, c.clone())];
                }
            }
        }
    }
    let mono = terms.len() == 1;
    (terms, best.unwrap_or_else(<Rat as Zero>::zero), mono)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::{rat, rint};
    use crate::curve::parse_poly;

    fn fp(s: &str) -> FracPoly<Rat> {
        FracPoly::from_bipoly(&parse_poly(s).unwrap())
    }

    #[test]
    fn cusp() {
        let p = polygon_of(&fp("y^2 - x^3")).unwrap();
        assert_eq!(p.vertices, vec![(rint(0), 2), (rint(3), 0)]);
        assert_eq!(p.orders_of_roots(), vec![rat(3, 2), rat(3, 2)]);
    }

    #[test]
    fn laurent_quartic() {
        let p = polygon_of(&fp("y^4 + x^-1*y^2 + y + 1")).unwrap();
        assert_eq!(p.vertices, vec![(rint(0), 4), (rint(-1), 2), (rint(0), 0)]);
        assert_eq!(p.orders_of_roots(), vec![rat(-1, 2), rat(-1, 2), rat(1, 2), rat(1, 2)]);
        let e = edge_poly(&fp("y^4 + x^-1*y^2 + y + 1"), &p.edges[0]);
        assert_eq!(e, vec![rint(1), rint(0), rint(1)]);
    }

    #[test]
    fn collinear_points_are_not_vertices() {
        let p = polygon_of(&fp("(y^2 - x^3)*(y^2 + x^3)")).unwrap();
        assert_eq!(p.vertices.len(), 2);
        assert_eq!(p.orders_of_roots(), vec![rat(3, 2); 4]);
    }

    #[test]
    fn initial_forms() {
        let f = fp("y^2 - x^3");
        let (t, _, mono) = initial_form(&f, &rat(3, 2));
        assert_eq!(t.len(), 2);
        assert!(!mono);
        assert!(initial_form(&f, &rint(1)).2);
        let g = fp("(y^2 - x^3)^2 - x^5*y");
        let (t, w, _) = initial_form(&g, &rat(3, 2));
        assert_eq!(w, rint(6));
        assert_eq!(t.len(), 3);
    }
}

//! Newton polygons of f, f_y and J after moving the origin to the
//! M-deformation of a root.

use crate::analysis::Analysis;
use crate::arith::rat::{fmt_rat, Rat};
use crate::arith::{AlgError, Ring, ThetaPoly};
use crate::curve::{CurvePoly, FracPoly};
use crate::error::Result;
use crate::polygon::{edge_poly, polygon_of, Polygon};
use crate::puiseux::{ExtRat, PuiseuxSeries};

use super::Section;

fn theta_poly(f: &CurvePoly) -> FracPoly<ThetaPoly> {
    FracPoly::from_bipoly(&f.poly.map(|c| ThetaPoly::from_rat(c)))
}

fn ri(k: i64) -> Rat {
    Rat::from_integer(k.into())
}

fn max_order(p: &Polygon) -> Option<Rat> {
    p.edges.iter().map(|e| e.order()).max()
}

fn same(a: &[ThetaPoly], b: &[ThetaPoly]) -> std::result::Result<bool, AlgError> {
    if a.len() != b.len() {
        return Ok(false);
    }
    for (x, y) in a.iter().zip(b) {
        if !x.minus(y).zero_test()? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The facts about N(F) and N(F_y), F = f(x, y + ỹ), as failure messages.
fn polar_facts(f: &FracPoly<ThetaPoly>, m: &Rat, others: &[Rat]) -> std::result::Result<Vec<String>, AlgError> {
    let mut bad = vec![];
    let p = polygon_of(f)?;
    let mut want: Vec<Rat> = others.to_vec();
    want.push(m.clone());
    want.sort();
    if p.orders_of_roots() != want {
        bad.push(format!("orders {:?} vs contacts {:?}", p.orders_of_roots(), want));
    }
    if max_order(&p).as_ref() != Some(m) {
        bad.push("largest order is not M".into());
    }
    if !p.meets_x_axis() {
        bad.push("polygon misses the x-axis".into());
        return Ok(bad);
    }
    let last = p.last_edge().unwrap().clone();
    let ep = edge_poly(f, &last);
    if last.top.1 < 2 || ep.get(1).is_none_or(|c| c.is_syn_zero()) {
        bad.push("no interior point at height 1 on the last edge".into());
        return Ok(bad);
    }
    let alpha1 = last.level() - last.order();
    let fy = f.derivative_y();
    let q = polygon_of(&fy)?;
    let mut shifted: Vec<(Rat, usize)> = p.vertices.iter().filter(|v| v.1 >= 1).map(|v| (v.0.clone(), v.1 - 1)).collect();
    shifted.push((alpha1.clone(), 0));
    if q.vertices != shifted {
        bad.push(format!("N(F_y) is not the shifted N(F): {:?} vs {:?}", q.vertices, shifted));
    }
    let po: Vec<Rat> = p.edges.iter().map(|e| e.order()).collect();
    let qo: Vec<Rat> = q.edges.iter().map(|e| e.order()).collect();
    if po != qo {
        bad.push("edge orders of F and F_y differ".into());
    }
    if q.last_edge().map(|e| e.height() + 1) != Some(last.height()) {
        bad.push("last edge of F_y is not one lower".into());
    }
    Ok(bad)
}

fn others_contacts(y: &PuiseuxSeries, all: &[&PuiseuxSeries]) -> std::result::Result<Vec<Rat>, AlgError> {
    let mut out = vec![];
    for z in all {
        if let ExtRat::Fin(c) = y.contact(z)? {
            out.push(c);
        }
    }
    Ok(out)
}

/// One representative root per branch: the polygon of f at its deformation
/// and the polygon of f_y there.
pub fn polar_deformation(an: &mut Analysis) -> Result<Section> {
    let mut sec = Section::new("polygons at a deformed root");
    let f = theta_poly(&an.curve());
    let all: Vec<PuiseuxSeries> = an.branches.all_roots().into_iter().map(|(_, y)| y.clone()).collect();
    let reps: Vec<(String, PuiseuxSeries)> =
        an.branches.branches.iter().map(|b| (b.name(), b.roots[0].clone())).collect();
    for (name, y) in reps {
        let refs: Vec<&PuiseuxSeries> = all.iter().collect();
        let others = an.ctx.run(|_| others_contacts(&y, &refs))?;
        let Some(m) = others.iter().max().cloned() else {
            sec.skip();
            continue;
        };
        let shift = y.deform(&m)?;
        let g = f.shift_series(&shift);
        let bad = an.ctx.run(|_| polar_facts(&g, &m, &others))?;
        sec.assert(bad.is_empty(), || format!("{name} at {}: {}", fmt_rat(&m), bad.join("; ")));
    }
    Ok(sec)
}

fn jacobian_facts(
    f: &FracPoly<ThetaPoly>,
    g: &FracPoly<ThetaPoly>,
    m: &Rat,
) -> std::result::Result<Vec<String>, AlgError> {
    let mut bad = vec![];
    let pf = polygon_of(f)?;
    let pg = polygon_of(g)?;
    if !pf.meets_x_axis() || !pg.meets_x_axis() {
        bad.push("a polygon misses the x-axis".into());
        return Ok(bad);
    }
    let mg = max_order(&pg);
    if max_order(&pf).as_ref() != Some(m) || mg.as_ref().is_some_and(|x| x >= m) {
        bad.push("max O(F) = M > max O(G) fails".into());
    }
    let last = pf.last_edge().unwrap().clone();
    let ep = edge_poly(f, &last);
    if last.top.1 < 2 || ep.get(1).is_none_or(|c| c.is_syn_zero()) {
        bad.push("no interior point at height 1 on the last edge of F".into());
        return Ok(bad);
    }
    let fy = f.derivative_y();
    let pfy = polygon_of(&fy)?;
    let j = f.jacobian(g);
    let pj = polygon_of(&j)?;
    if max_order(&pj) != max_order(&pfy) || max_order(&pfy) != max_order(&pf) {
        bad.push("max O(J), max O(F_y), max O(F) differ".into());
    }
    let (beta, _) = pg.vertices.last().unwrap().clone();
    let a = g.term(&beta, 0).cloned().unwrap_or_else(ThetaPoly::zero);
    let alpha1 = last.level() - last.order();
    let corner = (&alpha1 + &beta - ri(1), 0usize);
    if !pj.vertices.contains(&corner) {
        bad.push(format!("({}, 0) is not a vertex of N(J)", fmt_rat(&corner.0)));
        return Ok(bad);
    }
    let (Some(ej), Some(efy)) = (pj.last_edge(), pfy.last_edge()) else {
        bad.push("missing last edge".into());
        return Ok(bad);
    };
    let k = a.scale(&beta).negated();
    let lhs = edge_poly(&j, ej);
    let rhs: Vec<ThetaPoly> = edge_poly(&fy, efy).iter().map(|c| c.times(&k)).collect();
    if !same(&lhs, &rhs)? {
        bad.push("last edge of J is not -a beta x^(beta-1) times that of F_y".into());
    }
    Ok(bad)
}

/// For f-roots whose nearest neighbour is another f-root: the polygons of
/// f, g and J at the deformation.
pub fn jacobian_deformation(an: &mut Analysis, f: &CurvePoly, g: &CurvePoly, is_f: &[bool]) -> Result<Section> {
    let mut sec = Section::new("Jacobian polygons at a deformed root");
    let ft = theta_poly(f);
    let gt = theta_poly(g);
    let roots: Vec<(usize, PuiseuxSeries)> = an.branches.all_roots().into_iter().map(|(b, y)| (b, y.clone())).collect();
    let froots: Vec<&PuiseuxSeries> = roots.iter().filter(|(b, _)| is_f[*b]).map(|(_, y)| y).collect();
    let groots: Vec<&PuiseuxSeries> = roots.iter().filter(|(b, _)| !is_f[*b]).map(|(_, y)| y).collect();
    for (b, br) in an.branches.branches.iter().enumerate() {
        if !is_f[b] {
            continue;
        }
        let y = &br.roots[0];
        let near_f = an.ctx.run(|_| others_contacts(y, &froots))?.into_iter().max();
        let near_g = an.ctx.run(|_| others_contacts(y, &groots))?.into_iter().max();
        let (Some(mf), mg) = (near_f, near_g) else {
            sec.skip();
            continue;
        };
        if mg.as_ref().is_some_and(|c| c >= &mf) {
            sec.skip();
            continue;
        }
        let shift = y.deform(&mf)?;
        let fs = ft.shift_series(&shift);
        let gs = gt.shift_series(&shift);
        let bad = an.ctx.run(|_| jacobian_facts(&fs, &gs, &mf))?;
        sec.assert(bad.is_empty(), || format!("{} at {}: {}", br.name(), fmt_rat(&mf), bad.join("; ")));
    }
    Ok(sec)
}


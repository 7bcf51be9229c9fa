//! Conjugacy classes of roots, characteristic sequences and contacts.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};
use serde_json::{json, Value};

use crate::arith::rat::{fmt_rat, Rat};
use crate::arith::{AlgError, AlgNum, Field, Ring, TowerCtx};
use crate::curve::{resultant_y, BiPoly, LaurentPoly};
use crate::error::{Error, Result};

use super::series::{ExtRat, PuiseuxSeries};

fn ri(k: i64) -> Rat {
    Rat::from_integer(k.into())
}

/// One irreducible factor, given by its conjugate roots.
#[derive(Clone, Debug)]
pub struct Branch {
    pub id: usize,
    /// Index of the input factor the branch came from.
    pub factor: usize,
    pub roots: Vec<PuiseuxSeries>,
    pub n: i64,
    /// m_1..m_h, scaled by n.
    pub m: Vec<i64>,
    /// d_1..d_{h+1}.
    pub d: Vec<i64>,
    /// e_1..e_h.
    pub e: Vec<i64>,
    /// r_0..r_h.
    pub r: Vec<i64>,
}

impl Branch {
    pub fn h(&self) -> usize {
        self.m.len()
    }

    pub fn name(&self) -> String {
        format!("f{}", self.id + 1)
    }

    /// m_k / n for k = 1..h.
    pub fn char_exponents(&self) -> Vec<Rat> {
        self.m.iter().map(|&m| Rat::new(m.into(), self.n.into())).collect()
    }

    /// d_k for 1-based k, with d_k = 1 past h+1.
    pub fn dk(&self, k: usize) -> i64 {
        self.d.get(k - 1).copied().unwrap_or(1)
    }

    /// e_k for 1-based k, with e_k = 1 past h.
    pub fn ek(&self, k: usize) -> i64 {
        self.e.get(k - 1).copied().unwrap_or(1)
    }

    /// Number of characteristic exponents at most `level`.
    pub fn k_at(&self, level: &Rat) -> usize {
        self.char_exponents().iter().take_while(|c| *c <= level).count()
    }

    /// Smallest index θ with level <= m_θ / n, or h + 1.
    pub fn theta(&self, level: &Rat) -> usize {
        self.char_exponents().iter().position(|c| level <= c).map_or(self.h() + 1, |i| i + 1)
    }

    /// S(m^f, M).
    pub fn s_function(&self, level: &Rat) -> Rat {
        let n = ri(self.n);
        let k = self.k_at(level);
        if k == 0 {
            return &n * level * ri(self.d[0]);
        }
        ri(self.r[k] * self.d[k - 1]) + (&n * level - ri(self.m[k - 1])) * ri(self.dk(k + 1))
    }

    /// Inverse of the S-function.
    pub fn s_inverse(&self, v: &Rat) -> Rat {
        let n = ri(self.n);
        let mut k = 0;
        while k < self.h() && ri(self.r[k + 1] * self.d[k]) <= *v {
            k += 1;
        }
        if k == 0 {
            return v / (&n * ri(self.d[0]));
        }
        (ri(self.m[k - 1]) + (v - ri(self.r[k] * self.d[k - 1])) / ri(self.dk(k + 1))) / n
    }

    pub fn to_json(&self) -> Value {
        json!({
            "id": self.name(),
            "factor": self.factor,
            "degree": self.n,
            "char_exponents": self.char_exponents().iter().map(fmt_rat).collect::<Vec<_>>(),
            "m": self.m,
            "d": self.d,
            "e": self.e,
            "r": self.r,
            "semigroup": self.r,
            "root": self.roots[0].to_string(),
        })
    }
}

/// Characteristic sequences from one root of ramification `n`.
pub fn characteristic(y: &PuiseuxSeries, n: i64) -> Result<(Vec<i64>, Vec<i64>, Vec<i64>, Vec<i64>)> {
    let ks: Vec<i64> = y.scaled_support(n as u64).iter().map(|k| k.to_i64().unwrap()).collect();
    let mut d = vec![n];
    let mut m = vec![];
    for k in ks {
        let dl = *d.last().unwrap();
        if dl == 1 {
            break;
        }
        if k.rem_euclid(dl) != 0 {
            m.push(k);
            d.push(dl.gcd(&k));
        }
    }
    if *d.last().unwrap() != 1 {
        return Err(Error::TruncationTooShort(format!("characteristic sequence of {y} does not close")));
    }
    let e: Vec<i64> = d.windows(2).map(|w| w[0] / w[1]).collect();
    let mut r = vec![n];
    for k in 1..=m.len() {
        let rk = if k == 1 { m[0] } else { r[k - 1] * d[k - 2] / d[k - 1] + m[k - 1] - m[k - 2] };
        r.push(rk);
    }
    Ok((m, d, e, r))
}

fn ipow(a: &AlgNum, k: i64) -> std::result::Result<AlgNum, AlgError> {
    let p = a.pow(k.unsigned_abs());
    if k < 0 {
        p.inverse()
    } else {
        Ok(p)
    }
}

/// Whether z is obtained from y by x^{1/n} -> ζ x^{1/n} with ζ^n = 1.
fn conjugate(y: &PuiseuxSeries, z: &PuiseuxSeries, n: i64) -> std::result::Result<bool, AlgError> {
    let lim = y.prec.clone().min(z.prec.clone());
    let ys: Vec<_> = y.terms.iter().filter(|t| t.0 < lim).collect();
    let zs: Vec<_> = z.terms.iter().filter(|t| t.0 < lim).collect();
    if ys.len() != zs.len() || ys.iter().zip(&zs).any(|(a, b)| a.0 != b.0) {
        return Ok(false);
    }
    let nn = ri(n);
    let mut ks = vec![];
    let mut rho = vec![];
    for (a, b) in ys.iter().zip(&zs) {
        ks.push((&a.0 * &nn).to_integer().to_i64().unwrap());
        rho.push(b.1.divide(&a.1)?);
    }
    // Bezout: sum u_i k_i = 1 mod n.
    let mut g = n;
    let mut us = vec![0i64; ks.len()];
    for i in 0..ks.len() {
        let eg = g.extended_gcd(&ks[i]);
        for u in us.iter_mut().take(i) {
            *u *= eg.x;
        }
        us[i] = eg.y;
        g = eg.gcd;
    }
    if g != 1 {
        return Ok(false);
    }
    let mut zeta = AlgNum::int(1);
    for (r, &u) in rho.iter().zip(&us) {
        zeta = zeta.times(&ipow(r, u.rem_euclid(n))?);
    }
    if !zeta.pow(n as u64).equals(&AlgNum::int(1))? {
        return Ok(false);
    }
    for (r, &k) in rho.iter().zip(&ks) {
        if !ipow(&zeta, k.rem_euclid(n))?.equals(r)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Partitions isolated roots into branches.
pub fn group_branches(ctx: &mut TowerCtx, roots: Vec<PuiseuxSeries>, factor: usize, first_id: usize) -> Result<Vec<Branch>> {
    let mut left = roots;
    let mut out = vec![];
    while !left.is_empty() {
        let y = left.remove(0);
        let n = y.ramification() as i64;
        let mut class = vec![y.clone()];
        let mut rest = vec![];
        for z in left {
            let c = ctx.run(|_| conjugate(&y, &z, n))?;
            if c {
                class.push(z);
            } else {
                rest.push(z);
            }
        }
        left = rest;
        if class.len() as i64 != n {
            return Err(Error::InternalInconsistency(format!(
                "conjugacy class of {y} has {} roots, ramification {n}",
                class.len()
            )));
        }
        let (m, d, e, r) = characteristic(&y, n)?;
        out.push(Branch { id: first_id + out.len(), factor, roots: class, n, m, d, e, r });
    }
    Ok(out)
}

/// Π (Y - y_j) over the roots, truncated below `t`. Exponents must be integral.
pub fn branch_poly(roots: &[PuiseuxSeries], t: &Rat) -> Result<BiPoly<AlgNum>> {
    let mut acc: Vec<BTreeMap<Rat, AlgNum>> = vec![BTreeMap::from([(ri(0), AlgNum::int(1))])];
    for y in roots {
        let y = y.truncate_lt(t)?;
        let mut next: Vec<BTreeMap<Rat, AlgNum>> = vec![BTreeMap::new(); acc.len() + 1];
        for (j, cj) in acc.iter().enumerate() {
            for (e, c) in cj {
                add(&mut next[j + 1], e.clone(), c.clone());
                for (ey, cy) in &y.terms {
                    add(&mut next[j], e + ey, c.times(cy).negated());
                }
            }
        }
        acc = next;
    }
    let mut cs = vec![];
    for cj in acc {
        let mut l = LaurentPoly::zero();
        for (e, c) in cj {
            if c.zero_test()? {
                continue;
            }
            if !e.denom().is_one() {
                return Err(Error::InternalInconsistency("branch polynomial has a fractional exponent".into()));
            }
            l.add_term(e.to_integer().to_i64().unwrap(), c);
        }
        cs.push(l);
    }
    Ok(BiPoly::new(cs))
}

fn add(m: &mut BTreeMap<Rat, AlgNum>, e: Rat, c: AlgNum) {
    match m.get_mut(&e) {
        Some(o) => *o = o.plus(&c),
        None => {
            m.insert(e, c);
        }
    }
}

/// ord_x Res_y of two coefficient-free-of-x-denominator polynomials.
pub fn int_of(ctx: &mut TowerCtx, a: &BiPoly<AlgNum>, b: &BiPoly<AlgNum>) -> Result<ExtRat> {
    let r = ctx.run(|_| resultant_y(a, b)?.normalized())?;
    Ok(match r.valuation() {
        Some(v) => ExtRat::Fin(ri(v)),
        None => ExtRat::Inf,
    })
}

/// Largest contact between a root of `a` and a root of `b`.
pub fn root_contact(ctx: &mut TowerCtx, a: &[PuiseuxSeries], b: &[PuiseuxSeries]) -> Result<ExtRat> {
    let mut best = ExtRat::Fin(Rat::from_integer((-1i64 << 40).into()));
    for y in a {
        for z in b {
            let c = ctx.run(|_| y.contact(z))?;
            if c > best {
                best = c;
            }
        }
    }
    Ok(best)
}

/// Branches of f with their contact and intersection tables.
#[derive(Clone, Debug)]
pub struct BranchSet {
    pub branches: Vec<Branch>,
    /// Symmetric, +∞ on the diagonal.
    pub contacts: Vec<Vec<ExtRat>>,
    /// Pairwise intersection numbers, 0 on the diagonal.
    pub ints: Vec<Vec<Rat>>,
    /// Contacts between individual roots, in `all_roots` order.
    pub root_contacts: Vec<Vec<ExtRat>>,
}

impl BranchSet {
    /// Fills the tables, computing every contact from root differences and
    /// again from the resultant of branch polynomials.
    pub fn new(ctx: &mut TowerCtx, branches: Vec<Branch>) -> Result<BranchSet> {
        let k = branches.len();
        let mut contacts = vec![vec![ExtRat::Inf; k]; k];
        let mut ints = vec![vec![ri(0); k]; k];
        let t = branches.iter().flat_map(|b| b.roots.iter().map(|y| y.prec.clone())).min();
        let polys = match &t {
            Some(t) => branches.iter().map(|b| branch_poly(&b.roots, t)).collect::<Result<Vec<_>>>()?,
            None => vec![],
        };
        for i in 0..k {
            for j in i + 1..k {
                let a = root_contact(ctx, &branches[i].roots, &branches[j].roots)?;
                let ExtRat::Fin(a) = a else {
                    return Err(Error::NonReduced);
                };
                let ExtRat::Fin(int) = int_of(ctx, &polys[i], &polys[j])? else {
                    return Err(Error::NonReduced);
                };
                let (bi, bj) = (&branches[i], &branches[j]);
                let via_s = bi.s_inverse(&(&int * ri(bi.n) / ri(bj.n)));
                if via_s != a {
                    return Err(Error::InternalInconsistency(format!(
                        "contact of {} and {}: roots give {}, resultant gives {}",
                        bi.name(),
                        bj.name(),
                        fmt_rat(&a),
                        fmt_rat(&via_s)
                    )));
                }
                contacts[i][j] = ExtRat::Fin(a.clone());
                contacts[j][i] = ExtRat::Fin(a);
                ints[i][j] = int.clone();
                ints[j][i] = int;
            }
        }
        let roots: Vec<&PuiseuxSeries> = branches.iter().flat_map(|b| &b.roots).collect();
        let mut root_contacts = vec![vec![ExtRat::Inf; roots.len()]; roots.len()];
        for i in 0..roots.len() {
            for j in i + 1..roots.len() {
                let c = ctx.run(|_| roots[i].contact(roots[j]))?;
                root_contacts[i][j] = c.clone();
                root_contacts[j][i] = c;
            }
        }
        Ok(BranchSet { branches, contacts, ints, root_contacts })
    }

    pub fn len(&self) -> usize {
        self.branches.len()
    }

    pub fn is_empty(&self) -> bool {
        self.branches.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.branches.iter().map(|b| b.n).sum()
    }

    pub fn contact(&self, i: usize, j: usize) -> &ExtRat {
        &self.contacts[i][j]
    }

    /// Finite contact, panics on the diagonal.
    pub fn c(&self, i: usize, j: usize) -> &Rat {
        self.contacts[i][j].fin().expect("self contact")
    }

    /// Contact of roots `i` and `j` in `all_roots` order; `None` for i = j.
    pub fn root_c(&self, i: usize, j: usize) -> Option<&Rat> {
        self.root_contacts[i][j].fin()
    }

    pub fn all_roots(&self) -> Vec<(usize, &PuiseuxSeries)> {
        self.branches.iter().enumerate().flat_map(|(i, b)| b.roots.iter().map(move |y| (i, y))).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "branches": self.branches.iter().map(Branch::to_json).collect::<Vec<_>>(),
            "contacts": self.contacts.iter().map(|row| row.iter().map(|c| c.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "ints": self.ints.iter().map(|row| row.iter().map(fmt_rat).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }
}

/// Conjugate counts for one branch: for each k, the number of conjugates at
/// contact at least m_k/n and exactly m_k/n.
pub fn conjugate_counts(ctx: &mut TowerCtx, b: &Branch) -> Result<Vec<(usize, usize)>> {
    let y = &b.roots[0];
    let cs: Vec<ExtRat> = b.roots.iter().map(|z| ctx.run(|_| y.contact(z))).collect::<std::result::Result<_, _>>()?;
    Ok(b.char_exponents()
        .iter()
        .map(|mk| {
            let ge = cs.iter().filter(|c| c.fin().is_none_or(|c| c >= mk)).count();
            let eq = cs.iter().filter(|c| c.fin() == Some(mk)).count();
            (ge, eq)
        })
        .collect())
}

/// Whether the 1/n-scaled exponent vector contains negatives.
pub fn is_meromorphic(b: &Branch) -> bool {
    b.roots[0].terms.first().is_some_and(|t| t.0.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::{rat, rint};
    use crate::curve::parse_curve;
    use crate::curve::FracPoly;
    use crate::puiseux::expand_isolated;

    fn branches(s: &str) -> (TowerCtx, BranchSet) {
        let f = parse_curve(s).unwrap();
        let mut ctx = TowerCtx::new(8);
        let roots = expand_isolated(&mut ctx, &FracPoly::from_bipoly(&f.to_alg()), None).unwrap();
        let bs = group_branches(&mut ctx, roots, 0, 0).unwrap();
        let set = BranchSet::new(&mut ctx, bs).unwrap();
        (ctx, set)
    }

    #[test]
    fn cusp_data() {
        let (_, bs) = branches("y^2 - x^3");
        assert_eq!(bs.len(), 1);
        let b = &bs.branches[0];
        assert_eq!((b.n, b.m.clone(), b.d.clone(), b.r.clone()), (2, vec![3], vec![2, 1], vec![2, 3]));
    }

    #[test]
    fn two_cusps() {
        let (_, bs) = branches("(y^2 - x^3)*(y^2 + x^3)");
        assert_eq!(bs.len(), 2);
        assert_eq!(bs.c(0, 1), &rat(3, 2));
        assert_eq!(bs.ints[0][1], rint(6));
    }

    #[test]
    fn quartic_pair() {
        let (mut ctx, bs) = branches("((y^2-x^3)^2-x^5*y)*((y^2-x^3)^2+x^5*y)");
        assert_eq!(bs.len(), 2);
        for b in &bs.branches {
            assert_eq!((b.m.clone(), b.d.clone(), b.r.clone()), (vec![6, 7], vec![4, 2, 1], vec![4, 6, 13]));
            assert_eq!(conjugate_counts(&mut ctx, b).unwrap(), vec![(4, 2), (2, 1)]);
        }
        assert_eq!(bs.c(0, 1), &rat(7, 4));
        assert_eq!(bs.ints[0][1], rint(26));
    }

    #[test]
    fn s_function_values() {
        let (_, bs) = branches("(y^2-x^3)^2-x^5*y");
        let b = &bs.branches[0];
        assert_eq!(b.s_function(&rat(3, 2)), rint(24));
        assert_eq!(b.s_function(&rat(7, 4)), rint(26));
        assert_eq!(b.s_function(&rint(1)), rint(16));
        for v in [rint(3), rint(24), rint(25), rint(26), rint(40)] {
            assert_eq!(b.s_function(&b.s_inverse(&v)), v);
        }
    }

    #[test]
    fn meromorphic_branches() {
        let (_, bs) = branches("y^4 + x^-1*y^2 + y + 1");
        assert_eq!(bs.len(), 2);
        let ms: Vec<Vec<i64>> = bs.branches.iter().map(|b| b.m.clone()).collect();
        assert!(ms.contains(&vec![-1]) && ms.contains(&vec![1]));
        assert_eq!(bs.c(0, 1), &rat(-1, 2));
    }
}

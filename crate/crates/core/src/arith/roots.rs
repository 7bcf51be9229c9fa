//! Root enumeration over a growing tower.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::algnum::{AlgNum, TowerCtx};
use super::poly;
use super::rat::{common_denom, rat_sqrt, Rat};
use super::ring::{Field, Ring};
use super::tower::Tower;
use super::AlgError;

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = vec![];
    let mut large = vec![];
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let e = &n / &d;
            if e != d {
                large.push(e);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Rational roots with multiplicity.
pub fn rational_roots(p: &[Rat]) -> Vec<(Rat, usize)> {
    let mut p = poly::trimmed(p);
    let mut out = vec![];
    if p.len() <= 1 {
        return out;
    }
    let mut zero_mult = 0;
    while p.first().is_some_and(|c| Zero::is_zero(c)) {
        p.remove(0);
        zero_mult += 1;
    }
    if zero_mult > 0 {
        out.push((<Rat as Zero>::zero(), zero_mult));
    }
    if p.len() <= 1 {
        return out;
    }
    let den = common_denom(p.iter());
    let ints: Vec<BigInt> = p.iter().map(|c| (c * Rat::from_integer(den.clone())).to_integer()).collect();
    let cont = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    let ints: Vec<BigInt> = ints.iter().map(|c| c / &cont).collect();
    let a0 = ints[0].clone();
    let an = ints.last().unwrap().clone();
    for q in divisors(&an) {
        for pn in divisors(&a0) {
            if !pn.gcd(&q).is_one() {
                continue;
            }
            for s in [1i32, -1] {
                let r = Rat::new(&pn * BigInt::from(s), q.clone());
                let m = poly::root_multiplicity(&p, &r).unwrap();
                if m > 0 {
                    out.push((r, m));
                }
            }
        }
    }
    out
}

fn sqrt_at(t: &Arc<Tower>, d: &AlgNum, k: usize) -> Result<Option<AlgNum>, AlgError> {
    if d.zero_test()? {
        return Ok(Some(AlgNum::zero()));
    }
    if k == 0 {
        return Ok(d.as_rat().and_then(|r| rat_sqrt(&r)).map(AlgNum::rat));
    }
    let t = t.latest();
    let lvl = t.level(k).clone();
    let a = lvl
        .is_pure_square()
        .then(|| AlgNum::new(t.clone(), lvl.minpoly[0].clone()).negated());
    if d.level() < k {
        if let Some(s) = sqrt_at(&t, d, k - 1)? {
            return Ok(Some(s));
        }
        if let Some(a) = &a {
            if let Some(v) = sqrt_at(&t, &d.divide(a)?, k - 1)? {
                return Ok(Some(v.times(&AlgNum::generator(&t, k))));
            }
        }
        return Ok(None);
    }
    let Some(a) = a else { return Ok(None) };
    let cs = d.coeffs_at(k);
    let (d0, d1) = (cs[0].clone(), cs[1].clone());
    let norm = d0.times(&d0).minus(&a.times(&d1).times(&d1));
    let Some(sn) = sqrt_at(&t, &norm, k - 1)? else { return Ok(None) };
    let two_a = a.scale(&Rat::from_integer(2.into()));
    for sn in [sn.clone(), sn.negated()] {
        let v2 = d0.plus(&sn).divide(&two_a)?;
        if let Some(v) = sqrt_at(&t, &v2, k - 1)? {
            if v.zero_test()? {
                continue;
            }
            let u = d1.divide(&v.scale(&Rat::from_integer(2.into())))?;
            let s = u.plus(&v.times(&AlgNum::generator(&t, k)));
            if s.times(&s).equals(d)? {
                return Ok(Some(s));
            }
        }
    }
    Ok(None)
}

/// Square root inside the current tower, if one exists there.
///
/// The search is complete when every level is a field of the form
/// `z^2 - a`; otherwise `None` only means none was found.
pub fn sqrt_in_tower(t: &Arc<Tower>, d: &AlgNum) -> Result<Option<AlgNum>, AlgError> {
    let t = t.latest();
    sqrt_at(&t, d, t.depth())
}

fn sqrt_search_complete(ctx: &TowerCtx) -> bool {
    ctx.tower().levels().iter().all(|l| l.field && l.is_pure_square())
}

/// Distinct roots of a monic squarefree polynomial, adjoining levels as needed.
pub fn squarefree_roots(ctx: &mut TowerCtx, p: &[AlgNum]) -> Result<Vec<AlgNum>, AlgError> {
    let mut q = poly::monic(p)?;
    let mut out = vec![];
    if q.iter().all(|c| c.level() == 0) {
        let qr: Vec<Rat> = q.iter().map(|c| c.as_rat().unwrap()).collect();
        for (r, _) in rational_roots(&qr) {
            let lin = [AlgNum::rat(-r.clone()), AlgNum::one()];
            q = poly::exact_div(&q, &lin)?;
            out.push(AlgNum::rat(r));
        }
    }
    loop {
        match q.len() {
            0 | 1 => return Ok(out),
            2 => {
                out.push(q[0].negated());
                return Ok(out);
            }
            3 => {
                let b = &q[1];
                let disc = b.times(b).minus(&q[0].scale(&Rat::from_integer(4.into())));
                let s = match sqrt_in_tower(&ctx.tower(), &disc)? {
                    Some(s) => s,
                    None => {
                        let field = sqrt_search_complete(ctx);
                        ctx.adjoin(&[disc.negated(), AlgNum::zero(), AlgNum::one()], field)?
                    }
                };
                let half = Rat::new(1.into(), 2.into());
                let nb = b.negated();
                out.push(nb.plus(&s).scale(&half));
                out.push(nb.minus(&s).scale(&half));
                return Ok(out);
            }
            _ => {
                let a = ctx.adjoin(&q, false)?;
                let lin = [a.negated(), AlgNum::one()];
                q = poly::exact_div(&q, &lin)?;
                out.push(a);
            }
        }
    }
}

/// All roots with multiplicity. The zero polynomial has no roots.
pub fn all_roots(ctx: &mut TowerCtx, p: &[AlgNum]) -> Result<Vec<(AlgNum, usize)>, AlgError> {
    let mut out = vec![];
    for (f, m) in poly::yun(p)? {
        for r in squarefree_roots(ctx, &f)? {
            out.push((r, m));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::{rat, rint};

    fn ap(cs: &[i64]) -> Vec<AlgNum> {
        cs.iter().map(|&c| AlgNum::int(c)).collect()
    }

    #[test]
    fn rational_root_theorem() {
        // (2x - 1)^2 (x + 3) x
        let p = poly::mul(
            &poly::mul(&[rint(-1), rint(2)], &[rint(-1), rint(2)]),
            &poly::mul(&[rint(3), rint(1)], &[rint(0), rint(1)]),
        );
        let mut r = rational_roots(&p);
        r.sort_by(|a, b| a.0.cmp(&b.0));
        assert_eq!(r, vec![(rint(-3), 1), (rint(0), 1), (rat(1, 2), 2)]);
    }

    #[test]
    fn quadratic_levels_are_reused() {
        let mut ctx = TowerCtx::new(8);
        // c^2 + 1 adjoins i; c^2 + 4 and c^2 + 1/4 then need nothing new.
        let r1 = ctx.run(|c| all_roots(c, &ap(&[1, 0, 1]))).unwrap();
        assert_eq!(r1.len(), 2);
        assert_eq!(ctx.tower().depth(), 1);
        let r2 = ctx.run(|c| all_roots(c, &ap(&[4, 0, 1]))).unwrap();
        assert_eq!(ctx.tower().depth(), 1);
        for (r, m) in &r2 {
            assert_eq!(*m, 1);
            assert!(r.times(r).equals(&AlgNum::int(-4)).unwrap());
        }
        // sqrt(2i) = 1 + i lives in Q(i).
        let i = &r1[0].0;
        let s = sqrt_in_tower(&ctx.tower(), &i.scale(&rint(2))).unwrap().unwrap();
        assert!(s.times(&s).equals(&i.scale(&rint(2))).unwrap());
    }

    #[test]
    fn reducible_level_splits() {
        let mut ctx = TowerCtx::new(8);
        // (c^2 - 2)(c^2 - 3) adjoined as one quartic level.
        let q = poly::mul(&ap(&[-2, 0, 1]), &ap(&[-3, 0, 1]));
        let roots = ctx.run(|c| all_roots(c, &q)).unwrap();
        assert_eq!(roots.len(), 4);
        // a^2 - 2 is a zero divisor in the quartic quotient; after the
        // split exactly one of these decisions is taken consistently.
        let a = roots[0].0.clone();
        let d = a.times(&a).minus(&AlgNum::int(2));
        let z = ctx.run(|_| d.zero_test()).unwrap();
        assert!(ctx.tower().level(1).degree() == 2);
        let sq = a.times(&a);
        let expect = if z { 2 } else { 3 };
        assert!(sq.equals(&AlgNum::int(expect)).unwrap());
        for (r, _) in &roots {
            assert!(poly::eval(&q, r).zero_test().unwrap());
        }
    }

    #[test]
    fn depth_cap_is_enforced() {
        let mut ctx = TowerCtx::new(1);
        ctx.run(|c| all_roots(c, &ap(&[-2, 0, 1]))).unwrap();
        let e = ctx.run(|c| all_roots(c, &ap(&[-3, 0, 1]))).unwrap_err();
        assert!(matches!(e, AlgError::TowerDepthExceeded(1)));
    }
}

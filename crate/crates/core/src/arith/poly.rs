//! Dense univariate polynomials as coefficient vectors, lowest degree first.
//! Trailing syntactic zeros are trimmed; a decided leading coefficient is
//! obtained through inversion, which may split.

use super::ring::{Field, Ring};
use super::AlgError;

pub fn trim<C: Ring>(p: &mut Vec<C>) {
    while p.last().is_some_and(|c| c.is_syn_zero()) {
        p.pop();
    }
}

pub fn trimmed<C: Ring>(p: &[C]) -> Vec<C> {
    let mut v = p.to_vec();
    trim(&mut v);
    v
}

/// Degree of the trimmed polynomial; the zero polynomial has degree 0.
pub fn degree<C: Ring>(p: &[C]) -> usize {
    trimmed(p).len().saturating_sub(1)
}

pub fn add<C: Ring>(a: &[C], b: &[C]) -> Vec<C> {
    let n = a.len().max(b.len());
    let mut r: Vec<C> = (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x.plus(y),
            (Some(x), None) | (None, Some(x)) => x.clone(),
            (None, None) => unreachable!(),
        })
        .collect();
    trim(&mut r);
    r
}

pub fn neg<C: Ring>(a: &[C]) -> Vec<C> {
    a.iter().map(|c| c.negated()).collect()
}

pub fn sub<C: Ring>(a: &[C], b: &[C]) -> Vec<C> {
    add(a, &neg(b))
}

pub fn mul<C: Ring>(a: &[C], b: &[C]) -> Vec<C> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut r = vec![C::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_syn_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            r[i + j] = r[i + j].plus(&x.times(y));
        }
    }
    trim(&mut r);
    r
}

pub fn scale<C: Ring>(a: &[C], c: &C) -> Vec<C> {
    let mut r: Vec<C> = a.iter().map(|x| x.times(c)).collect();
    trim(&mut r);
    r
}

pub fn derivative<C: Ring>(a: &[C]) -> Vec<C> {
    let mut r: Vec<C> = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c.scale(&super::rat::rint(i as i64)))
        .collect();
    trim(&mut r);
    r
}

pub fn eval<C: Ring>(a: &[C], x: &C) -> C {
    a.iter().rev().fold(C::zero(), |acc, c| acc.times(x).plus(c))
}

/// Decided trimming: drops leading coefficients that are zero.
pub fn normalize<C: Ring>(a: &[C]) -> Result<Vec<C>, AlgError> {
    let mut v = trimmed(a);
    while let Some(c) = v.last() {
        if c.zero_test()? {
            v.pop();
        } else {
            break;
        }
    }
    Ok(v)
}

pub fn monic<C: Field>(a: &[C]) -> Result<Vec<C>, AlgError> {
    let a = normalize(a)?;
    match a.last() {
        None => Ok(a),
        Some(lc) => {
            let inv = lc.inverse()?;
            let mut r: Vec<C> = a.iter().map(|c| c.times(&inv)).collect();
            *r.last_mut().unwrap() = C::one();
            Ok(r)
        }
    }
}

pub fn divmod<C: Field>(a: &[C], b: &[C]) -> Result<(Vec<C>, Vec<C>), AlgError> {
    let b = normalize(b)?;
    let lc = b.last().ok_or(AlgError::DivisionByZero)?.inverse()?;
    let mut r = normalize(a)?;
    let db = b.len() - 1;
    if r.len() < b.len() {
        return Ok((vec![], r));
    }
    let mut q = vec![C::zero(); r.len() - db];
    for i in (db..r.len()).rev() {
        let c = r[i].times(&lc);
        if c.is_syn_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            r[i - db + j] = r[i - db + j].minus(&c.times(bj));
        }
        q[i - db] = c;
    }
    r.truncate(db);
    let r = normalize(&r)?;
    trim(&mut q);
    Ok((q, r))
}

pub fn rem<C: Field>(a: &[C], b: &[C]) -> Result<Vec<C>, AlgError> {
    Ok(divmod(a, b)?.1)
}

/// Division known to be exact.
pub fn exact_div<C: Field>(a: &[C], b: &[C]) -> Result<Vec<C>, AlgError> {
    Ok(divmod(a, b)?.0)
}

/// Returns `(g, s, t)` with `g = s*a + t*b` and `g` monic.
pub fn ext_gcd<C: Field>(a: &[C], b: &[C]) -> Result<(Vec<C>, Vec<C>, Vec<C>), AlgError> {
    let (mut r0, mut r1) = (normalize(a)?, normalize(b)?);
    let (mut s0, mut s1) = (vec![C::one()], vec![]);
    let (mut t0, mut t1) = (vec![], vec![C::one()]);
    while !r1.is_empty() {
        let (q, r) = divmod(&r0, &r1)?;
        let s2 = sub(&s0, &mul(&q, &s1));
        let t2 = sub(&t0, &mul(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    match r0.last() {
        None => Ok((r0, s0, t0)),
        Some(lc) => {
            let inv = lc.inverse()?;
            Ok((scale(&r0, &inv), scale(&s0, &inv), scale(&t0, &inv)))
        }
    }
}

pub fn gcd<C: Field>(a: &[C], b: &[C]) -> Result<Vec<C>, AlgError> {
    Ok(ext_gcd(a, b)?.0)
}

/// Monic squarefree part.
pub fn squarefree_part<C: Field>(a: &[C]) -> Result<Vec<C>, AlgError> {
    let a = monic(a)?;
    if a.len() <= 2 {
        return Ok(a);
    }
    let g = gcd(&a, &derivative(&a))?;
    monic(&exact_div(&a, &g)?)
}

/// Yun decomposition of a monic polynomial: `a = prod p_i^i`, each `p_i`
/// monic squarefree and pairwise coprime. Only factors of positive degree
/// are returned.
pub fn yun<C: Field>(a: &[C]) -> Result<Vec<(Vec<C>, usize)>, AlgError> {
    let a = monic(a)?;
    let mut out = vec![];
    if a.len() <= 1 {
        return Ok(out);
    }
    let da = derivative(&a);
    let a0 = gcd(&a, &da)?;
    let mut b = exact_div(&a, &a0)?;
    let c = exact_div(&da, &a0)?;
    let mut d = sub(&c, &derivative(&b));
    let mut i = 1;
    while b.len() > 1 {
        let ai = gcd(&b, &d)?;
        b = exact_div(&b, &ai)?;
        let c = exact_div(&d, &ai)?;
        d = sub(&c, &derivative(&b));
        if ai.len() > 1 {
            out.push((ai, i));
        }
        i += 1;
    }
    Ok(out)
}

/// Multiplicity of `x` as a root of `a` (0 if not a root).
pub fn root_multiplicity<C: Field>(a: &[C], x: &C) -> Result<usize, AlgError> {
    let mut p = normalize(a)?;
    let mut m = 0;
    while !p.is_empty() && eval(&p, x).zero_test()? {
        m += 1;
        p = derivative(&p);
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::{rint, Rat};

    fn p(cs: &[i64]) -> Vec<Rat> {
        cs.iter().map(|&c| rint(c)).collect()
    }

    #[test]
    fn division_and_gcd() {
        // (x-1)^2 (x+2)
        let a = mul(&mul(&p(&[-1, 1]), &p(&[-1, 1])), &p(&[2, 1]));
        let (q, r) = divmod(&a, &p(&[-1, 1])).unwrap();
        assert!(r.is_empty());
        assert_eq!(q, mul(&p(&[-1, 1]), &p(&[2, 1])));
        assert_eq!(gcd(&a, &derivative(&a)).unwrap(), p(&[-1, 1]));
        assert_eq!(squarefree_part(&a).unwrap(), mul(&p(&[-1, 1]), &p(&[2, 1])));
    }

    #[test]
    fn yun_multiplicities() {
        // x (x-1)^2 (x+1)^3
        let mut a = p(&[0, 1]);
        for _ in 0..2 {
            a = mul(&a, &p(&[-1, 1]));
        }
        for _ in 0..3 {
            a = mul(&a, &p(&[1, 1]));
        }
        let y = yun(&a).unwrap();
        assert_eq!(y, vec![(p(&[0, 1]), 1), (p(&[-1, 1]), 2), (p(&[1, 1]), 3)]);
        assert_eq!(root_multiplicity(&a, &rint(-1)).unwrap(), 3);
        assert_eq!(root_multiplicity(&a, &rint(5)).unwrap(), 0);
    }

    #[test]
    fn bezout_identity() {
        let a = p(&[1, 0, 1]);
        let b = p(&[-2, 1]);
        let (g, s, t) = ext_gcd(&a, &b).unwrap();
        assert_eq!(g, p(&[1]));
        assert_eq!(add(&mul(&s, &a), &mul(&t, &b)), g);
    }
}

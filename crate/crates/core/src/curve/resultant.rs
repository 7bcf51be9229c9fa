//! Resultants in y by the subresultant remainder sequence over K[x].

use crate::arith::{AlgError, Field, Ring};

use super::bipoly::BiPoly;
use super::laurent::LaurentPoly;

type YPoly<C> = Vec<LaurentPoly<C>>;

fn norm_y<C: Field>(p: &[LaurentPoly<C>]) -> Result<YPoly<C>, AlgError> {
    let mut v = p.iter().map(|c| c.normalized()).collect::<Result<Vec<_>, _>>()?;
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    Ok(v)
}

fn one<C: Ring>() -> LaurentPoly<C> {
    LaurentPoly::constant(C::one())
}

fn lpow<C: Ring>(p: &LaurentPoly<C>, e: usize) -> LaurentPoly<C> {
    p.pow(e as u32)
}

/// Pseudo-remainder of `a` by `b` (deg a >= deg b).
fn prem<C: Field>(a: &[LaurentPoly<C>], b: &[LaurentPoly<C>]) -> Result<YPoly<C>, AlgError> {
    let db = b.len() - 1;
    let lb = b[db].clone();
    let mut r = a.to_vec();
    let mut e = a.len() as i64 - b.len() as i64 + 1;
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let mut nr: YPoly<C> = r.iter().map(|c| c.times(&lb)).collect();
        for (j, bj) in b.iter().enumerate() {
            let k = dr - db + j;
            nr[k] = nr[k].minus(&lr.times(bj));
        }
        r = norm_y(&nr)?;
        e -= 1;
    }
    let f = lpow(&lb, e.max(0) as usize);
    norm_y(&r.iter().map(|c| c.times(&f)).collect::<Vec<_>>())
}

fn res_poly<C: Field>(a: YPoly<C>, b: YPoly<C>) -> Result<LaurentPoly<C>, AlgError> {
    let (mut a, mut b) = (a, b);
    if a.is_empty() || b.is_empty() {
        return Ok(LaurentPoly::zero());
    }
    let mut s = false;
    if a.len() < b.len() {
        if (a.len() - 1) % 2 == 1 && (b.len() - 1) % 2 == 1 {
            s = !s;
        }
        std::mem::swap(&mut a, &mut b);
    }
    if b.len() == 1 {
        let r = lpow(&b[0], a.len() - 1);
        return Ok(if s { r.negated() } else { r });
    }
    let mut g = one::<C>();
    let mut h = one::<C>();
    loop {
        let (da, db) = (a.len() - 1, b.len() - 1);
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            s = !s;
        }
        let r = prem(&a, &b)?;
        a = b;
        if r.is_empty() {
            return Ok(LaurentPoly::zero());
        }
        let div = g.times(&lpow(&h, delta));
        b = r.iter().map(|c| c.exact_div(&div)).collect::<Result<Vec<_>, _>>()?;
        g = a.last().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            lpow(&g, delta).exact_div(&lpow(&h, delta - 1))?
        };
        if b.len() == 1 {
            let da = a.len() - 1;
            let num = lpow(&b[0], da);
            let r = if da == 0 { num.times(&h) } else { num.exact_div(&lpow(&h, da - 1))? };
            return Ok(if s { r.negated() } else { r });
        }
    }
}

/// Res_y(a, b) with exact Laurent coefficients.
pub fn resultant_y<C: Field>(a: &BiPoly<C>, b: &BiPoly<C>) -> Result<LaurentPoly<C>, AlgError> {
    let na = norm_y(&a.y_coeffs)?;
    let nb = norm_y(&b.y_coeffs)?;
    if na.is_empty() || nb.is_empty() {
        return Ok(LaurentPoly::zero());
    }
    let ka = -BiPoly::new(na.clone()).min_x_exp().unwrap().min(0);
    let kb = -BiPoly::new(nb.clone()).min_x_exp().unwrap().min(0);
    let (da, db) = ((na.len() - 1) as i64, (nb.len() - 1) as i64);
    let sa: YPoly<C> = na.iter().map(|c| c.shift(ka)).collect();
    let sb: YPoly<C> = nb.iter().map(|c| c.shift(kb)).collect();
    let r = res_poly(sa, sb)?;
    Ok(r.shift(-(ka * db + kb * da)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::rint;
    use crate::arith::Rat;
    use crate::curve::parse::parse_poly;

    fn p(s: &str) -> BiPoly<Rat> {
        parse_poly(s).unwrap()
    }

    #[test]
    fn linear_pair() {
        let r = resultant_y(&p("y - x"), &p("y + x")).unwrap();
        // Res(y - x, y + x) = (-x) - (x) up to sign
        assert_eq!(r.valuation(), Some(1));
        assert_eq!(r.terms().len(), 1);
        assert_eq!(num_traits::Signed::abs(&r.coeff(1)), rint(2));
    }

    #[test]
    fn cusps_of_opposite_sign() {
        let r = resultant_y(&p("y^2 - x^3"), &p("y^2 + x^3")).unwrap();
        assert_eq!(r, LaurentPoly::monomial(6, rint(4)));
    }

    #[test]
    fn agrees_with_sylvester_on_cubic_pair() {
        // Res_y(y^3 + x*y + x^2, y^2 - x) by hand: prod over roots of y^2 - x
        // of (y^3 + x y + x^2) with y = ±sqrt(x): (2x s + x^2)(-2x s + x^2)
        // = x^4 - 4x^3.
        let r = resultant_y(&p("y^3 + x*y + x^2"), &p("y^2 - x")).unwrap();
        let expect = LaurentPoly::from_terms([(4, rint(1)), (3, rint(-4))]);
        assert!(r == expect || r == expect.negated());
    }

    #[test]
    fn laurent_coefficients() {
        let r = resultant_y(&p("y^2 + x^-1"), &p("y")).unwrap();
        assert_eq!(r, LaurentPoly::monomial(-1, rint(1)));
    }
}

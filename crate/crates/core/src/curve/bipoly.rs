use crate::arith::rat::rint;
use crate::arith::{AlgNum, Rat, Ring};
use crate::error::{Error, Result};

use super::laurent::LaurentPoly;
use super::resultant::resultant_y;

/// Polynomial in y with Laurent polynomial coefficients in x.
#[derive(Clone, Debug, PartialEq)]
pub struct BiPoly<C = Rat> {
    /// Index is the y-degree; no trailing zero entries.
    pub y_coeffs: Vec<LaurentPoly<C>>,
}

impl<C: Ring> Default for BiPoly<C> {
    fn default() -> Self {
        BiPoly { y_coeffs: vec![] }
    }
}

impl<C: Ring> BiPoly<C> {
    pub fn new(mut y_coeffs: Vec<LaurentPoly<C>>) -> Self {
        while y_coeffs.last().is_some_and(|c| c.is_zero()) {
            y_coeffs.pop();
        }
        BiPoly { y_coeffs }
    }

    pub fn x() -> Self {
        Self::new(vec![LaurentPoly::monomial(1, C::one())])
    }

    pub fn y() -> Self {
        Self::new(vec![LaurentPoly::zero(), LaurentPoly::constant(C::one())])
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![LaurentPoly::constant(c)])
    }

    pub fn monomial(e: i64, j: usize, c: C) -> Self {
        let mut v = vec![LaurentPoly::zero(); j + 1];
        v[j] = LaurentPoly::monomial(e, c);
        Self::new(v)
    }

    pub fn is_zero(&self) -> bool {
        self.y_coeffs.is_empty()
    }

    /// y-degree; 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.y_coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, j: usize) -> LaurentPoly<C> {
        self.y_coeffs.get(j).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> LaurentPoly<C> {
        self.y_coeffs.last().cloned().unwrap_or_default()
    }

    pub fn plus(&self, o: &Self) -> Self {
        let n = self.y_coeffs.len().max(o.y_coeffs.len());
        Self::new((0..n).map(|j| self.coeff(j).plus(&o.coeff(j))).collect())
    }

    pub fn negated(&self) -> Self {
        Self::new(self.y_coeffs.iter().map(|c| c.negated()).collect())
    }

    pub fn minus(&self, o: &Self) -> Self {
        self.plus(&o.negated())
    }

    pub fn times(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::default();
        }
        let mut r = vec![LaurentPoly::zero(); self.y_coeffs.len() + o.y_coeffs.len() - 1];
        for (i, a) in self.y_coeffs.iter().enumerate() {
            for (j, b) in o.y_coeffs.iter().enumerate() {
                r[i + j] = r[i + j].plus(&a.times(b));
            }
        }
        Self::new(r)
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::new(self.y_coeffs.iter().map(|p| p.scale(c)).collect())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut r = Self::constant(C::one());
        for _ in 0..k {
            r = r.times(self);
        }
        r
    }

    pub fn derivative_y(&self) -> Self {
        Self::new(
            self.y_coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, c)| c.scale(&C::from_rat(&rint(j as i64))))
                .collect(),
        )
    }

    pub fn derivative_x(&self) -> Self {
        Self::new(self.y_coeffs.iter().map(|c| c.derivative()).collect())
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D + Copy) -> BiPoly<D> {
        BiPoly::new(self.y_coeffs.iter().map(|c| c.map(f)).collect())
    }

    /// Support as (x-exponent, y-degree) pairs.
    pub fn support(&self) -> Vec<(i64, usize)> {
        let mut s = vec![];
        for (j, c) in self.y_coeffs.iter().enumerate() {
            for e in c.terms().keys() {
                s.push((*e, j));
            }
        }
        s
    }

    /// Least x-exponent over all coefficients.
    pub fn min_x_exp(&self) -> Option<i64> {
        self.y_coeffs.iter().filter_map(|c| c.valuation()).min()
    }

    /// Multiplies by x^k.
    pub fn shift_x(&self, k: i64) -> Self {
        Self::new(self.y_coeffs.iter().map(|c| c.shift(k)).collect())
    }

    pub fn is_monic(&self) -> bool {
        let l = self.leading();
        l.terms().len() == 1 && l.coeff(0).minus(&C::one()).is_syn_zero()
    }
}

/// J(f, g) = f_x g_y - f_y g_x.
pub fn jacobian<C: Ring>(f: &BiPoly<C>, g: &BiPoly<C>) -> BiPoly<C> {
    f.derivative_x()
        .times(&g.derivative_y())
        .minus(&f.derivative_y().times(&g.derivative_x()))
}

/// Monic-in-y curve with rational Laurent coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct CurvePoly {
    pub poly: BiPoly<Rat>,
    reduced: bool,
}

impl CurvePoly {
    pub fn new(poly: BiPoly<Rat>) -> Result<CurvePoly> {
        if poly.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !poly.is_monic() {
            return Err(Error::NotMonic);
        }
        Ok(CurvePoly { poly, reduced: false })
    }

    pub fn degree(&self) -> usize {
        self.poly.degree()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// Sets the reduced flag after checking Res_y(f, f_y) != 0.
    pub fn check_reduced(mut self) -> Result<CurvePoly> {
        if self.degree() >= 2 && !self.squarefree_at_some_point() {
            let r = resultant_y(&self.poly, &self.poly.derivative_y())?;
            if r.is_zero() {
                return Err(Error::NonReduced);
            }
        }
        self.reduced = true;
        Ok(self)
    }

    /// Cheap sufficient test: f(a, y) squarefree for some rational a.
    fn squarefree_at_some_point(&self) -> bool {
        let f = &self.poly;
        (2i64..14).any(|k| {
            let a = Rat::new(k.into(), 3.into());
            let spec: Vec<Rat> = (0..=f.degree())
                .map(|j| {
                    f.coeff(j).terms().iter().map(|(e, c)| c * num_traits::Pow::pow(&a, *e as i32)).sum()
                })
                .collect();
            let d = crate::arith::poly::derivative(&spec);
            crate::arith::poly::gcd(&spec, &d).is_ok_and(|g| crate::arith::poly::degree(&g) == 0)
        })
    }

    /// Exact f_y (not normalized).
    pub fn derivative_y(&self) -> BiPoly<Rat> {
        self.poly.derivative_y()
    }

    /// f_y / n, monic of degree n - 1.
    pub fn polar_monic(&self) -> BiPoly<Rat> {
        let n = self.degree() as i64;
        self.poly.derivative_y().scale(&Rat::new(1.into(), n.into()))
    }

    pub fn product(&self, o: &CurvePoly) -> CurvePoly {
        CurvePoly { poly: self.poly.times(&o.poly), reduced: false }
    }

    pub fn to_alg(&self) -> BiPoly<AlgNum> {
        self.poly.map(|c| AlgNum::rat(c.clone()))
    }
}

impl std::fmt::Display for CurvePoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", super::parse::print_poly(&self.poly))
    }
}

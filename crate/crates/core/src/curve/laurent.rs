use std::collections::BTreeMap;
use std::fmt;

use crate::arith::{AlgError, Field, Rat, Ring};

/// Laurent polynomial in x: integer exponent to nonzero coefficient.
#[derive(Clone, PartialEq)]
pub struct LaurentPoly<C = Rat> {
    terms: BTreeMap<i64, C>,
}

impl<C: Ring> Default for LaurentPoly<C> {
    fn default() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }
}

impl<C: Ring> LaurentPoly<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(e: i64, c: C) -> Self {
        let mut p = Self::default();
        p.add_term(e, c);
        p
    }

    pub fn from_terms(it: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut p = Self::default();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: i64, c: C) {
        if c.is_syn_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(old) => {
                let s = old.plus(&c);
                if s.is_syn_zero() {
                    self.terms.remove(&e);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<i64, C> {
        &self.terms
    }

    pub fn coeff(&self, e: i64) -> C {
        self.terms.get(&e).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Least exponent; `None` stands for +∞ (the zero polynomial).
    pub fn valuation(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading(&self) -> Option<(i64, &C)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    pub fn plus(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(*e, c.clone());
        }
        r
    }

    pub fn negated(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, c.negated())).collect() }
    }

    pub fn minus(&self, o: &Self) -> Self {
        self.plus(&o.negated())
    }

    pub fn times(&self, o: &Self) -> Self {
        let mut r = Self::default();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                r.add_term(e1 + e2, c1.times(c2));
            }
        }
        r
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, a)| (*e, a.times(c))))
    }

    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut r = Self::constant(C::one());
        for _ in 0..k {
            r = r.times(self);
        }
        r
    }

    pub fn derivative(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (e - 1, c.scale(&crate::arith::rat::rint(*e)))))
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> LaurentPoly<D> {
        LaurentPoly::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }

    /// Drops coefficients that are zero in the decided sense.
    pub fn normalized(&self) -> Result<Self, AlgError> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if !c.zero_test()? {
                terms.insert(*e, c.clone());
            }
        }
        Ok(LaurentPoly { terms })
    }
}

impl<C: Field> LaurentPoly<C> {
    /// Division known to be exact. Panics if it is not.
    pub fn exact_div(&self, b: &Self) -> Result<Self, AlgError> {
        let b = b.normalized()?;
        let (db, lb) = b.leading().ok_or(AlgError::DivisionByZero)?;
        let vb = b.valuation().unwrap();
        let inv = lb.inverse()?;
        let mut a = self.normalized()?;
        let floor = a.valuation().unwrap_or(0) - vb;
        let mut q = Self::default();
        while let Some((da, la)) = a.leading() {
            let e = da - db;
            assert!(e >= floor, "inexact Laurent division");
            let t = Self::monomial(e, la.times(&inv));
            a = a.minus(&t.times(&b)).normalized()?;
            q = q.plus(&t);
        }
        Ok(q)
    }
}

impl<C: fmt::Debug> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().rev().map(|(e, c)| format!("({c:?})x^{e}")).collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

pub fn poly_to_laurent<C: Ring>(p: &[C]) -> LaurentPoly<C> {
    LaurentPoly::from_terms(p.iter().enumerate().map(|(i, c)| (i as i64, c.clone())))
}

pub fn laurent_is_polynomial<C: Ring>(p: &LaurentPoly<C>) -> bool {
    p.valuation().is_none_or(|v| v >= 0)
}


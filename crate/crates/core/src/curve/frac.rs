use std::collections::BTreeMap;

use num_traits::Zero;

use crate::arith::rat::{binom, Rat};
use crate::arith::{AlgError, Ring};

use super::bipoly::BiPoly;

/// Polynomial in y whose coefficients are finite sums of rational powers of x.
#[derive(Clone, Debug)]
pub struct FracPoly<C> {
    /// Index is the y-degree.
    pub cs: Vec<BTreeMap<Rat, C>>,
}

impl<C: Ring> FracPoly<C> {
    pub fn zero() -> Self {
        FracPoly { cs: vec![] }
    }

    pub fn from_bipoly(p: &BiPoly<C>) -> Self {
        let mut f = Self::zero();
        for (j, c) in p.y_coeffs.iter().enumerate() {
            for (e, a) in c.terms() {
                f.add_term(j, Rat::from_integer((*e).into()), a.clone());
            }
        }
        f
    }

    pub fn add_term(&mut self, j: usize, e: Rat, c: C) {
        if c.is_syn_zero() {
            return;
        }
        if self.cs.len() <= j {
            self.cs.resize(j + 1, BTreeMap::new());
        }
        let m = &mut self.cs[j];
        match m.get_mut(&e) {
            Some(old) => {
                let s = old.plus(&c);
                if s.is_syn_zero() {
                    m.remove(&e);
                } else {
                    *old = s;
                }
            }
            None => {
                m.insert(e, c);
            }
        }
        while self.cs.last().is_some_and(|m| m.is_empty()) {
            self.cs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.cs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.cs.len().saturating_sub(1)
    }

    pub fn coeff(&self, j: usize) -> Option<&BTreeMap<Rat, C>> {
        self.cs.get(j)
    }

    pub fn term(&self, e: &Rat, j: usize) -> Option<&C> {
        self.cs.get(j)?.get(e)
    }

    pub fn min_exp(&self, j: usize) -> Option<&Rat> {
        self.cs.get(j)?.keys().next()
    }

    pub fn support(&self) -> Vec<(Rat, usize)> {
        let mut s = vec![];
        for (j, m) in self.cs.iter().enumerate() {
            for e in m.keys() {
                s.push((e.clone(), j));
            }
        }
        s
    }

    pub fn num_terms(&self) -> usize {
        self.cs.iter().map(|m| m.len()).sum()
    }

    pub fn derivative_y(&self) -> Self {
        let mut f = Self::zero();
        for (j, m) in self.cs.iter().enumerate().skip(1) {
            let k = Rat::from_integer((j as i64).into());
            for (e, a) in m {
                f.add_term(j - 1, e.clone(), a.scale(&k));
            }
        }
        f
    }

    pub fn derivative_x(&self) -> Self {
        let mut f = Self::zero();
        for (j, m) in self.cs.iter().enumerate() {
            for (e, a) in m {
                if !e.is_zero() {
                    f.add_term(j, e - Rat::from_integer(1.into()), a.scale(e));
                }
            }
        }
        f
    }

    pub fn plus(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (j, m) in o.cs.iter().enumerate() {
            for (e, a) in m {
                r.add_term(j, e.clone(), a.clone());
            }
        }
        r
    }

    pub fn negated(&self) -> Self {
        self.map(|a| a.negated())
    }

    pub fn times(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for (i, m) in self.cs.iter().enumerate() {
            for (e, a) in m {
                for (j, n) in o.cs.iter().enumerate() {
                    for (f, b) in n {
                        r.add_term(i + j, e + f, a.times(b));
                    }
                }
            }
        }
        r
    }

    /// J(F, G) = F_x G_y - F_y G_x.
    pub fn jacobian(&self, g: &Self) -> Self {
        self.derivative_x()
            .times(&g.derivative_y())
            .plus(&self.derivative_y().times(&g.derivative_x()).negated())
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> FracPoly<D> {
        let mut r = FracPoly::zero();
        for (j, m) in self.cs.iter().enumerate() {
            for (e, a) in m {
                r.add_term(j, e.clone(), f(a));
            }
        }
        r
    }

    pub fn retain(&mut self, keep: impl Fn(&Rat, usize) -> bool) {
        for (j, m) in self.cs.iter_mut().enumerate() {
            m.retain(|e, _| keep(e, j));
        }
        while self.cs.last().is_some_and(|m| m.is_empty()) {
            self.cs.pop();
        }
    }

    /// G(x, y + c x^m), keeping only terms accepted by `keep`.
    pub fn shift(&self, c: &C, m: &Rat, keep: impl Fn(&Rat, usize) -> bool) -> Self {
        let d = self.cs.len();
        let mut pw = vec![C::one()];
        for k in 1..d {
            pw.push(pw[k - 1].times(c));
        }
        let mut out = Self::zero();
        for (j, g) in self.cs.iter().enumerate() {
            for (e, a) in g {
                for i in 0..=j {
                    let e2 = e + m * Rat::from_integer(((j - i) as i64).into());
                    if !keep(&e2, i) {
                        continue;
                    }
                    let k = Rat::from_integer(binom(j, i));
                    out.add_term(i, e2, a.times(&pw[j - i]).scale(&k));
                }
            }
        }
        out
    }

    /// Substitutes y -> y + sum of terms, one term at a time.
    pub fn shift_series(&self, terms: &[(Rat, C)]) -> Self {
        let mut g = self.clone();
        for (e, c) in terms {
            g = g.shift(c, e, |_, _| true);
        }
        g
    }

    /// Drops coefficients that are zero in the decided sense.
    pub fn normalized(&self) -> Result<Self, AlgError> {
        let mut r = Self::zero();
        for (j, m) in self.cs.iter().enumerate() {
            for (e, a) in m {
                if !a.zero_test()? {
                    r.add_term(j, e.clone(), a.clone());
                }
            }
        }
        Ok(r)
    }

    /// Value at y = 0 as a map exponent -> coefficient.
    pub fn at_y_zero(&self) -> BTreeMap<Rat, C> {
        self.cs.first().cloned().unwrap_or_default()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::{rat, rint};
    use crate::curve::parse_poly;

    #[test]
    fn shift_by_monomial() {
        // (y^2 - x^3) at y -> y + x^{3/2} is y^2 + 2 x^{3/2} y.
        let f = FracPoly::from_bipoly(&parse_poly("y^2 - x^3").unwrap());
        let g = f.shift(&rint(1), &rat(3, 2), |_, _| true);
        assert_eq!(g.support(), vec![(rat(3, 2), 1), (rint(0), 2)]);
        assert_eq!(g.term(&rat(3, 2), 1), Some(&rint(2)));
    }
}

use std::fmt;

use super::algnum::AlgNum;
use super::poly;
use super::rat::Rat;
use super::ring::Ring;
use super::AlgError;

/// Polynomial in a transcendental parameter θ over the tower.
#[derive(Clone, Default)]
pub struct ThetaPoly(pub Vec<AlgNum>);

impl ThetaPoly {
    pub fn theta() -> ThetaPoly {
        ThetaPoly(vec![AlgNum::zero(), AlgNum::one()])
    }

    pub fn constant(c: AlgNum) -> ThetaPoly {
        let mut v = vec![c];
        poly::trim(&mut v);
        ThetaPoly(v)
    }

    pub fn degree(&self) -> usize {
        poly::degree(&self.0)
    }
}

impl fmt::Debug for ThetaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_syn_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("({c})*t"),
                _ => format!("({c})*t^{i}"),
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl Ring for ThetaPoly {
    fn zero() -> Self {
        ThetaPoly(vec![])
    }
    fn one() -> Self {
        ThetaPoly(vec![AlgNum::one()])
    }
    fn from_rat(r: &Rat) -> Self {
        ThetaPoly::constant(AlgNum::rat(r.clone()))
    }
    fn plus(&self, o: &Self) -> Self {
        ThetaPoly(poly::add(&self.0, &o.0))
    }
    fn minus(&self, o: &Self) -> Self {
        ThetaPoly(poly::sub(&self.0, &o.0))
    }
    fn times(&self, o: &Self) -> Self {
        ThetaPoly(poly::mul(&self.0, &o.0))
    }
    fn negated(&self) -> Self {
        ThetaPoly(poly::neg(&self.0))
    }
    fn is_syn_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_syn_zero())
    }
    /// Zero iff every coefficient is zero. One unit coefficient settles it.
    fn zero_test(&self) -> Result<bool, AlgError> {
        let mut pending = None;
        for c in &self.0 {
            match c.zero_test() {
                Ok(false) => return Ok(false),
                Ok(true) => {}
                Err(e) => pending = pending.or(Some(e)),
            }
        }
        match pending {
            Some(e) => Err(e),
            None => Ok(true),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_is_transcendental() {
        let t = ThetaPoly::theta();
        let p = t.times(&t).minus(&ThetaPoly::from_rat(&crate::arith::rat::rint(2)));
        assert!(!p.zero_test().unwrap());
        assert_eq!(p.degree(), 2);
        assert!(p.minus(&p).zero_test().unwrap());
    }
}

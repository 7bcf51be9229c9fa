use std::fmt;

use num_traits::{One, Zero};

use super::rat::Rat;
use super::AlgError;

/// Commutative ring with an exact, possibly splitting, zero test.
pub trait Ring: Clone + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rat(r: &Rat) -> Self;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Syntactic test on the canonical form. Never splits.
    fn is_syn_zero(&self) -> bool;
    /// Decided test. A nonzero zero divisor reports a split.
    fn zero_test(&self) -> Result<bool, AlgError>;

    fn scale(&self, r: &Rat) -> Self {
        self.times(&Self::from_rat(r))
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.times(&base);
            }
        }
        acc
    }
}

pub trait Field: Ring {
    fn inverse(&self) -> Result<Self, AlgError>;

    fn divide(&self, o: &Self) -> Result<Self, AlgError> {
        Ok(self.times(&o.inverse()?))
    }
}

impl Ring for Rat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negated(&self) -> Self {
        -self
    }
    fn is_syn_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn zero_test(&self) -> Result<bool, AlgError> {
        Ok(Zero::is_zero(self))
    }
}

impl Field for Rat {
    fn inverse(&self) -> Result<Self, AlgError> {
        if Zero::is_zero(self) {
            Err(AlgError::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
}

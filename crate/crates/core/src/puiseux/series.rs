use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::arith::rat::{common_denom, fmt_rat, Rat};
use crate::arith::{AlgError, AlgNum, Ring, ThetaPoly};
use crate::error::{Error, Result};

/// Rational number or +∞.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtRat {
    Fin(Rat),
    Inf,
}

impl ExtRat {
    pub fn fin(&self) -> Option<&Rat> {
        match self {
            ExtRat::Fin(r) => Some(r),
            ExtRat::Inf => None,
        }
    }
}

impl PartialOrd for ExtRat {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for ExtRat {
    fn cmp(&self, o: &Self) -> Ordering {
        match (self, o) {
            (ExtRat::Fin(a), ExtRat::Fin(b)) => a.cmp(b),
            (ExtRat::Fin(_), ExtRat::Inf) => Ordering::Less,
            (ExtRat::Inf, ExtRat::Fin(_)) => Ordering::Greater,
            (ExtRat::Inf, ExtRat::Inf) => Ordering::Equal,
        }
    }
}

impl fmt::Display for ExtRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRat::Fin(r) => write!(f, "{}", fmt_rat(r)),
            ExtRat::Inf => write!(f, "inf"),
        }
    }
}

/// Truncated Puiseux series: exact for every exponent below `prec`.
#[derive(Clone, Debug)]
pub struct PuiseuxSeries {
    pub terms: Vec<(Rat, AlgNum)>,
    pub prec: Rat,
}

impl PuiseuxSeries {
    pub fn new(terms: Vec<(Rat, AlgNum)>, prec: Rat) -> PuiseuxSeries {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(terms.iter().all(|t| t.0 < prec));
        PuiseuxSeries { terms, prec }
    }

    /// Least common denominator of the exponents.
    pub fn ramification(&self) -> u64 {
        common_denom(self.terms.iter().map(|t| &t.0)).to_u64().unwrap()
    }

    pub fn support(&self) -> Vec<Rat> {
        self.terms.iter().map(|t| t.0.clone()).collect()
    }

    /// Order of the series, `None` if no term is known below `prec`.
    pub fn order(&self) -> Option<&Rat> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn coeff(&self, e: &Rat) -> AlgNum {
        self.terms.iter().find(|t| &t.0 == e).map_or_else(AlgNum::zero, |t| t.1.clone())
    }

    /// First term with exponent above `after` (or the first term).
    pub fn next_term(&self, after: Option<&Rat>) -> Option<&(Rat, AlgNum)> {
        self.terms.iter().find(|t| after.is_none_or(|a| &t.0 > a))
    }

    /// The < M truncation.
    pub fn truncate_lt(&self, m: &Rat) -> Result<PuiseuxSeries> {
        if m > &self.prec {
            return Err(Error::TruncationTooShort(format!(
                "need exponents below {}, series known below {}",
                fmt_rat(m),
                fmt_rat(&self.prec)
            )));
        }
        let terms = self.terms.iter().filter(|t| &t.0 < m).cloned().collect();
        Ok(PuiseuxSeries { terms, prec: m.clone() })
    }

    /// The M-deformation γ_{<M} + θ x^M with θ transcendental.
    pub fn deform(&self, m: &Rat) -> Result<Vec<(Rat, ThetaPoly)>> {
        let t = self.truncate_lt(m)?;
        let mut out: Vec<(Rat, ThetaPoly)> =
            t.terms.into_iter().map(|(e, c)| (e, ThetaPoly::constant(c))).collect();
        out.push((m.clone(), ThetaPoly::theta()));
        Ok(out)
    }

    /// O_x(self - other) when decided within both precisions.
    pub fn contact(&self, o: &PuiseuxSeries) -> std::result::Result<ExtRat, AlgError> {
        let lim = self.prec.clone().min(o.prec.clone());
        let mut exps: Vec<&Rat> = self.terms.iter().chain(o.terms.iter()).map(|t| &t.0).collect();
        exps.sort();
        exps.dedup();
        for e in exps {
            if e >= &lim {
                break;
            }
            if !self.coeff(e).equals(&o.coeff(e))? {
                return Ok(ExtRat::Fin(e.clone()));
            }
        }
        Ok(ExtRat::Inf)
    }

    /// Exponents scaled by `n` as integers.
    pub fn scaled_support(&self, n: u64) -> Vec<BigInt> {
        let nn = Rat::from_integer(n.into());
        self.terms
            .iter()
            .map(|t| {
                let k = &t.0 * &nn;
                assert!(k.denom().is_one());
                k.to_integer()
            })
            .collect()
    }
}

impl fmt::Display for PuiseuxSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = vec![];
        for (e, c) in &self.terms {
            let cs = c.to_string();
            let cs = if cs.contains(' ') || cs.contains('/') { format!("({cs})") } else { cs };
            parts.push(format!("{cs}*x^{}", fmt_rat(e)));
        }
        parts.push(format!("O(x^{})", fmt_rat(&self.prec)));
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::{rat, rint};

    fn s(terms: &[(Rat, i64)], prec: Rat) -> PuiseuxSeries {
        PuiseuxSeries::new(terms.iter().map(|(e, c)| (e.clone(), AlgNum::int(*c))).collect(), prec)
    }

    #[test]
    fn truncation() {
        let g = s(&[(rat(3, 2), 1), (rat(7, 4), 1)], rint(3));
        let t = g.truncate_lt(&rat(7, 4)).unwrap();
        assert_eq!(t.support(), vec![rat(3, 2)]);
        assert!(g.truncate_lt(&rint(1)).unwrap().terms.is_empty());
        let h = s(&[(rint(-1), 1), (rint(1), 1)], rint(2));
        assert_eq!(h.truncate_lt(&rint(0)).unwrap().support(), vec![rint(-1)]);
        assert!(matches!(g.truncate_lt(&rint(4)), Err(Error::TruncationTooShort(_))));
    }

    #[test]
    fn deformation_marks_theta() {
        let g = s(&[(rat(3, 2), 1), (rat(7, 4), 1)], rint(3));
        let d = g.deform(&rat(7, 4)).unwrap();
        assert_eq!(d.len(), 2);
        assert_eq!(d[1].1.degree(), 1);
        let z = s(&[], rint(3));
        assert_eq!(z.deform(&rint(2)).unwrap().len(), 1);
    }

    #[test]
    fn contact_orders() {
        let a = s(&[(rat(3, 2), 1), (rat(7, 4), 1)], rint(3));
        let b = s(&[(rat(3, 2), 1), (rat(7, 4), -1)], rint(3));
        assert_eq!(a.contact(&b).unwrap(), ExtRat::Fin(rat(7, 4)));
        assert_eq!(a.contact(&a).unwrap(), ExtRat::Inf);
        assert_eq!(a.ramification(), 4);
    }
}

//! Towers of simple algebraic extensions of Q.
//!
//! A level k is a monic squarefree polynomial in z_k over the levels below
//! it. The quotient need not be a field: zero divisors are discovered lazily
//! during inversion and reported as a [`Split`](super::Split).

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex, OnceLock, Weak};

use num_traits::{One, Zero};

use super::rat::{fmt_rat, Rat};

static NEXT_GEN: AtomicU64 = AtomicU64::new(1);
static NEXT_LINEAGE: AtomicU64 = AtomicU64::new(1);

fn next_gen() -> u64 {
    NEXT_GEN.fetch_add(1, Ordering::Relaxed)
}

/// Canonical element of a tower.
///
/// `P(k, cs)` is only used when the element really involves z_k: `cs` has at
/// least two entries, all of level below k, with a nonzero last entry, and
/// fewer entries than the degree of level k.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Val {
    Q(Rat),
    P(usize, Vec<Val>),
}

impl Val {
    pub fn zero() -> Val {
        Val::Q(Rat::zero())
    }

    pub fn one() -> Val {
        Val::Q(Rat::one())
    }

    pub fn level(&self) -> usize {
        match self {
            Val::Q(_) => 0,
            Val::P(k, _) => *k,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Val::Q(r) if r.is_zero())
    }

    pub fn as_rat(&self) -> Option<&Rat> {
        match self {
            Val::Q(r) => Some(r),
            Val::P(..) => None,
        }
    }

    /// Coefficients as a polynomial in z_k, for k >= level.
    pub fn coeffs_at(&self, k: usize) -> Vec<Val> {
        match self {
            Val::P(l, cs) if *l == k => cs.clone(),
            _ if self.is_zero() => vec![],
            _ => vec![self.clone()],
        }
    }
}

pub(crate) fn mk(k: usize, mut cs: Vec<Val>) -> Val {
    while cs.last().is_some_and(Val::is_zero) {
        cs.pop();
    }
    match cs.len() {
        0 => Val::zero(),
        1 => cs.pop().unwrap(),
        _ => Val::P(k, cs),
    }
}

#[derive(Clone, Debug)]
pub struct Level {
    pub name: String,
    /// Monic, lowest degree first.
    pub minpoly: Vec<Val>,
    /// Set only when the quotient up to this level is known to be a field.
    pub field: bool,
}

impl Level {
    pub fn degree(&self) -> usize {
        self.minpoly.len() - 1
    }

    /// True when the minimal polynomial has the form `z^2 - a`.
    pub fn is_pure_square(&self) -> bool {
        self.minpoly.len() == 3 && self.minpoly[1].is_zero()
    }
}

/// Shared state of every snapshot derived from one root tower.
#[derive(Debug)]
pub struct Lineage {
    pub(crate) id: u64,
    pub(crate) latest: Mutex<Weak<Tower>>,
}

#[derive(Debug)]
pub struct Tower {
    pub(crate) lineage: Option<Arc<Lineage>>,
    pub(crate) gen: u64,
    pub(crate) epoch: u64,
    pub(crate) levels: Vec<Level>,
}

impl Tower {
    /// The bare field Q, shared by every lineage.
    pub fn base() -> Arc<Tower> {
        static BASE: OnceLock<Arc<Tower>> = OnceLock::new();
        BASE.get_or_init(|| {
            Arc::new(Tower {
                lineage: None,
                gen: 0,
                epoch: 0,
                levels: vec![],
            })
        })
        .clone()
    }

    pub fn fresh() -> Arc<Tower> {
        let lineage = Arc::new(Lineage {
            id: NEXT_LINEAGE.fetch_add(1, Ordering::Relaxed),
            latest: Mutex::new(Weak::new()),
        });
        let t = Arc::new(Tower {
            lineage: Some(lineage.clone()),
            gen: next_gen(),
            epoch: 0,
            levels: vec![],
        });
        *lineage.latest.lock().unwrap() = Arc::downgrade(&t);
        t
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn level(&self, k: usize) -> &Level {
        &self.levels[k - 1]
    }

    pub fn lineage_id(&self) -> u64 {
        self.lineage.as_ref().map_or(0, |l| l.id)
    }

    pub fn is_base(&self) -> bool {
        self.lineage.is_none()
    }

    /// The newest snapshot of this lineage still alive.
    pub fn latest(self: &Arc<Self>) -> Arc<Tower> {
        match &self.lineage {
            None => self.clone(),
            Some(l) => match l.latest.lock().unwrap().upgrade() {
                Some(t) if t.gen >= self.gen => t,
                _ => self.clone(),
            },
        }
    }

    /// True when every level up to k is known to be a field.
    pub fn field_upto(&self, k: usize) -> bool {
        self.levels[..k].iter().all(|l| l.field)
    }

    fn publish(self) -> Arc<Tower> {
        let t = Arc::new(self);
        if let Some(l) = &t.lineage {
            *l.latest.lock().unwrap() = Arc::downgrade(&t);
        }
        t
    }

    pub(crate) fn extended(&self, name: String, minpoly: Vec<Val>, field: bool) -> Arc<Tower> {
        let mut levels = self.levels.clone();
        levels.push(Level { name, minpoly, field });
        Tower {
            lineage: self.lineage.clone(),
            gen: next_gen(),
            epoch: self.epoch,
            levels,
        }
        .publish()
    }

    /// Replaces level k by the factor `factor` of its minimal polynomial.
    pub(crate) fn refined(&self, k: usize, factor: Vec<Val>) -> Arc<Tower> {
        let mut t = Tower {
            lineage: self.lineage.clone(),
            gen: next_gen(),
            epoch: self.epoch + 1,
            levels: self.levels.clone(),
        };
        t.levels[k - 1].minpoly = factor;
        for l in k + 1..=t.depth() {
            let mp: Vec<Val> = t.levels[l - 1].minpoly.iter().map(|c| t.normalize(c)).collect();
            t.levels[l - 1].minpoly = mp;
        }
        t.publish()
    }

    pub fn add(&self, a: &Val, b: &Val) -> Val {
        match (a, b) {
            (Val::Q(x), Val::Q(y)) => Val::Q(x + y),
            _ => {
                let (la, lb) = (a.level(), b.level());
                if la < lb {
                    return self.add(b, a);
                }
                let mut cs = a.coeffs_at(la);
                if la == lb {
                    let cb = b.coeffs_at(lb);
                    if cb.len() > cs.len() {
                        cs.resize(cb.len(), Val::zero());
                    }
                    for (i, c) in cb.iter().enumerate() {
                        cs[i] = self.add(&cs[i], c);
                    }
                } else {
                    cs[0] = self.add(&cs[0], b);
                }
                mk(la, cs)
            }
        }
    }

    pub fn neg(&self, a: &Val) -> Val {
        match a {
            Val::Q(x) => Val::Q(-x),
            Val::P(k, cs) => Val::P(*k, cs.iter().map(|c| self.neg(c)).collect()),
        }
    }

    pub fn sub(&self, a: &Val, b: &Val) -> Val {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Val, b: &Val) -> Val {
        match (a, b) {
            (Val::Q(x), Val::Q(y)) => Val::Q(x * y),
            _ => {
                let (la, lb) = (a.level(), b.level());
                if la < lb {
                    return self.mul(b, a);
                }
                if a.is_zero() || b.is_zero() {
                    return Val::zero();
                }
                let ca = a.coeffs_at(la);
                if la > lb {
                    return mk(la, ca.iter().map(|c| self.mul(c, b)).collect());
                }
                let cb = b.coeffs_at(lb);
                let mut prod = vec![Val::zero(); ca.len() + cb.len() - 1];
                for (i, x) in ca.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (j, y) in cb.iter().enumerate() {
                        let t = self.mul(x, y);
                        prod[i + j] = self.add(&prod[i + j], &t);
                    }
                }
                mk(la, self.reduce(la, prod))
            }
        }
    }

    /// Reduces a coefficient vector in z_k modulo the level's polynomial.
    pub(crate) fn reduce(&self, k: usize, mut cs: Vec<Val>) -> Vec<Val> {
        let p = &self.levels[k - 1].minpoly;
        let d = p.len() - 1;
        if cs.len() <= d {
            return cs;
        }
        for i in (d..cs.len()).rev() {
            let c = std::mem::replace(&mut cs[i], Val::zero());
            if c.is_zero() {
                continue;
            }
            for j in 0..d {
                let t = self.mul(&c, &p[j]);
                cs[i - d + j] = self.sub(&cs[i - d + j], &t);
            }
        }
        cs.truncate(d);
        cs
    }

    /// Canonical form of a value written against an older snapshot.
    pub fn normalize(&self, a: &Val) -> Val {
        match a {
            Val::Q(_) => a.clone(),
            Val::P(k, cs) => {
                let cs: Vec<Val> = cs.iter().map(|c| self.normalize(c)).collect();
                mk(*k, self.reduce(*k, cs))
            }
        }
    }

    pub fn generator(&self, k: usize) -> Val {
        self.normalize(&Val::P(k, vec![Val::zero(), Val::one()]))
    }

    pub fn fmt_val(&self, v: &Val) -> String {
        match v {
            Val::Q(r) => fmt_rat(r),
            Val::P(k, cs) => {
                let name = self.levels.get(k - 1).map_or("?", |l| l.name.as_str());
                let mut parts = vec![];
                for (i, c) in cs.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let m = match i {
                        0 => String::new(),
                        1 => name.to_string(),
                        _ => format!("{name}^{i}"),
                    };
                    let cstr = self.fmt_val(c);
                    let simple = matches!(c, Val::Q(_)) && !cstr.contains('/');
                    parts.push(match (i, c) {
                        (0, _) => cstr,
                        (_, Val::Q(r)) if r.is_one() => m,
                        (_, Val::Q(r)) if (-r).is_one() => format!("-{m}"),
                        _ if simple => format!("{cstr}*{m}"),
                        _ => format!("({cstr})*{m}"),
                    });
                }
                format!("({})", parts.join(" + "))
            }
        }
    }
}

impl fmt::Display for Tower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.levels.is_empty() {
            return write!(f, "Q");
        }
        let mut parts = vec![];
        for l in &self.levels {
            let mut terms = vec![];
            for (i, c) in l.minpoly.iter().enumerate().rev() {
                if c.is_zero() {
                    continue;
                }
                let m = match i {
                    0 => String::new(),
                    1 => l.name.clone(),
                    _ => format!("{}^{i}", l.name),
                };
                let cs = self.fmt_val(c);
                terms.push(if m.is_empty() {
                    cs
                } else if c == &Val::one() {
                    m
                } else {
                    format!("{cs}*{m}")
                });
            }
            parts.push(format!("{}: {} = 0", l.name, terms.join(" + ")));
        }
        write!(f, "Q[{}]", parts.join("; "))
    }
}

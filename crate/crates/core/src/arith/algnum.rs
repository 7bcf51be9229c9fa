use std::borrow::Cow;
use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use super::poly;
use super::rat::Rat;
use super::ring::{Field, Ring};
use super::tower::{mk, Tower, Val};

/// Zero-divisor discovery: level `level` factors as `g * h` over the levels below.
#[derive(Clone, Debug)]
pub struct Split {
    pub level: usize,
    pub epoch: u64,
    pub lineage: u64,
    pub g: Vec<AlgNum>,
    pub h: Vec<AlgNum>,
}

#[derive(Clone, Debug, thiserror::Error)]
pub enum AlgError {
    #[error("zero divisor at tower level {}", .0.level)]
    Split(Box<Split>),
    #[error("division by zero")]
    DivisionByZero,
    #[error("tower depth cap {0} exceeded")]
    TowerDepthExceeded(usize),
}

/// Element of a tower snapshot. Operations always act in the newest
/// snapshot of the lineage, re-normalizing older values on the fly.
#[derive(Clone)]
pub struct AlgNum {
    t: Arc<Tower>,
    v: Val,
}

impl AlgNum {
    pub fn new(t: Arc<Tower>, v: Val) -> AlgNum {
        AlgNum { t, v }
    }

    pub fn rat(r: Rat) -> AlgNum {
        AlgNum { t: Tower::base(), v: Val::Q(r) }
    }

    pub fn int(n: i64) -> AlgNum {
        AlgNum::rat(super::rat::rint(n))
    }

    pub fn tower(&self) -> &Arc<Tower> {
        &self.t
    }

    /// Value and snapshot after moving to the newest snapshot.
    pub fn current(&self) -> (Arc<Tower>, Cow<'_, Val>) {
        if matches!(self.v, Val::Q(_)) {
            return (self.t.clone(), Cow::Borrowed(&self.v));
        }
        let lt = self.t.latest();
        if lt.gen == self.t.gen {
            return (lt, Cow::Borrowed(&self.v));
        }
        if lt.epoch == self.t.epoch {
            (lt, Cow::Borrowed(&self.v))
        } else {
            let v = lt.normalize(&self.v);
            (lt, Cow::Owned(v))
        }
    }

    pub fn refreshed(&self) -> AlgNum {
        let (t, v) = self.current();
        AlgNum { v: v.into_owned(), t }
    }

    pub fn val(&self) -> Val {
        self.current().1.into_owned()
    }

    pub fn level(&self) -> usize {
        self.current().1.level()
    }

    pub fn as_rat(&self) -> Option<Rat> {
        self.current().1.as_rat().cloned()
    }

    fn join(a: &Arc<Tower>, b: &Arc<Tower>) -> Arc<Tower> {
        if Arc::ptr_eq(a, b) || b.is_base() {
            return a.clone();
        }
        if a.is_base() {
            return b.clone();
        }
        assert_eq!(a.lineage_id(), b.lineage_id(), "values from unrelated towers mixed");
        if a.gen >= b.gen {
            a.clone()
        } else {
            b.clone()
        }
    }

    fn binop(&self, o: &AlgNum, f: impl FnOnce(&Tower, &Val, &Val) -> Val) -> AlgNum {
        let (ta, va) = self.current();
        let (tb, vb) = o.current();
        let t = Self::join(&ta, &tb);
        let v = f(&t, &va, &vb);
        AlgNum { t, v }
    }

    /// Coefficients of this element as a polynomial in z_k.
    pub fn coeffs_at(&self, k: usize) -> Vec<AlgNum> {
        let (t, v) = self.current();
        v.coeffs_at(k).into_iter().map(|c| AlgNum::new(t.clone(), c)).collect()
    }

    pub fn from_coeffs(t: &Arc<Tower>, k: usize, cs: &[AlgNum]) -> AlgNum {
        let t = t.latest();
        let vals: Vec<Val> = cs.iter().map(|c| t.normalize(&c.val())).collect();
        let v = mk(k, t.reduce(k, vals));
        AlgNum { t, v }
    }

    pub fn generator(t: &Arc<Tower>, k: usize) -> AlgNum {
        let t = t.latest();
        let v = t.generator(k);
        AlgNum { t, v }
    }

    /// Minimal polynomial of level k, coefficients in the levels below.
    pub fn minpoly(t: &Arc<Tower>, k: usize) -> Vec<AlgNum> {
        let t = t.latest();
        t.level(k).minpoly.iter().map(|c| AlgNum::new(t.clone(), c.clone())).collect()
    }

    pub fn eq_syn(&self, o: &AlgNum) -> bool {
        self.minus(o).is_syn_zero()
    }

    /// Decided equality.
    pub fn equals(&self, o: &AlgNum) -> Result<bool, AlgError> {
        self.minus(o).zero_test()
    }
}

impl fmt::Debug for AlgNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for AlgNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (t, v) = self.current();
        let s = t.fmt_val(&v);
        match v.as_ref() {
            Val::P(..) => write!(f, "{}", &s[1..s.len() - 1]),
            Val::Q(_) => write!(f, "{s}"),
        }
    }
}

impl Ring for AlgNum {
    fn zero() -> Self {
        AlgNum::rat(<Rat as Zero>::zero())
    }
    fn one() -> Self {
        AlgNum::int(1)
    }
    fn from_rat(r: &Rat) -> Self {
        AlgNum::rat(r.clone())
    }
    fn plus(&self, o: &Self) -> Self {
        self.binop(o, |t, a, b| t.add(a, b))
    }
    fn minus(&self, o: &Self) -> Self {
        self.binop(o, |t, a, b| t.sub(a, b))
    }
    fn times(&self, o: &Self) -> Self {
        self.binop(o, |t, a, b| t.mul(a, b))
    }
    fn negated(&self) -> Self {
        let (t, v) = self.current();
        let v = t.neg(&v);
        AlgNum { t, v }
    }
    fn is_syn_zero(&self) -> bool {
        self.current().1.is_zero()
    }
    fn zero_test(&self) -> Result<bool, AlgError> {
        let (t, v) = self.current();
        if v.is_zero() {
            return Ok(true);
        }
        let k = v.level();
        if k == 0 || t.field_upto(k) {
            return Ok(false);
        }
        self.inverse().map(|_| false)
    }
}

impl Field for AlgNum {
    fn inverse(&self) -> Result<Self, AlgError> {
        let (t, v) = self.current();
        match v.as_ref() {
            Val::Q(r) => {
                if Zero::is_zero(r) {
                    Err(AlgError::DivisionByZero)
                } else {
                    Ok(AlgNum { t, v: Val::Q(r.recip()) })
                }
            }
            Val::P(k, _) => {
                let k = *k;
                let p = AlgNum::minpoly(&t, k);
                let a = self.coeffs_at(k);
                let (g, _s, u) = poly::ext_gcd(&p, &a)?;
                if g.len() == 1 {
                    let c = g[0].inverse()?;
                    let u: Vec<AlgNum> = u.iter().map(|x| x.times(&c)).collect();
                    return Ok(AlgNum::from_coeffs(&t, k, &u));
                }
                let h = poly::exact_div(&p, &g)?;
                Err(AlgError::Split(Box::new(Split {
                    level: k,
                    epoch: t.epoch,
                    lineage: t.lineage_id(),
                    g,
                    h,
                })))
            }
        }
    }
}

/// Handle on a growing tower: adjunction, refinement on splits, depth cap.
#[derive(Clone, Debug)]
pub struct TowerCtx {
    root: Arc<Tower>,
    cur: Arc<Tower>,
    pub depth_cap: usize,
}

pub const DEFAULT_DEPTH_CAP: usize = 8;

pub fn depth_cap_from_env() -> usize {
    std::env::var("POLARTREE_DEPTH_CAP")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_DEPTH_CAP)
}

impl Default for TowerCtx {
    fn default() -> Self {
        TowerCtx::new(depth_cap_from_env())
    }
}

impl TowerCtx {
    pub fn new(depth_cap: usize) -> TowerCtx {
        let t = Tower::fresh();
        TowerCtx { root: t.clone(), cur: t, depth_cap }
    }

    pub fn tower(&self) -> Arc<Tower> {
        self.root.latest()
    }

    fn sync(&mut self) {
        self.cur = self.root.latest();
    }

    /// Adjoins a root of the monic squarefree `p` (degree >= 2).
    pub fn adjoin(&mut self, p: &[AlgNum], field: bool) -> Result<AlgNum, AlgError> {
        self.sync();
        let t = self.cur.clone();
        if t.depth() >= self.depth_cap {
            return Err(AlgError::TowerDepthExceeded(self.depth_cap));
        }
        let vals: Vec<Val> = p.iter().map(|c| t.normalize(&c.val())).collect();
        debug_assert!(vals.last() == Some(&Val::one()));
        let name = format!("a{}", t.depth() + 1);
        let nt = t.extended(name, vals, field);
        let k = nt.depth();
        self.cur = nt;
        Ok(AlgNum::generator(&self.cur, k))
    }

    /// Keeps one factor of a split level. Stale splits are ignored.
    pub fn apply_split(&mut self, s: &Split) {
        self.sync();
        let t = self.cur.clone();
        if s.epoch != t.epoch || s.lineage != t.lineage_id() {
            return;
        }
        let keep = if poly::degree(&s.h) < poly::degree(&s.g) { &s.h } else { &s.g };
        let vals: Vec<Val> = keep.iter().map(|c| t.normalize(&c.val())).collect();
        self.cur = t.refined(s.level, vals);
    }

    /// Runs `f` until it finishes without a split.
    pub fn run<T>(&mut self, mut f: impl FnMut(&mut TowerCtx) -> Result<T, AlgError>) -> Result<T, AlgError> {
        loop {
            match f(self) {
                Err(AlgError::Split(s)) => self.apply_split(&s),
                r => return r,
            }
        }
    }
}

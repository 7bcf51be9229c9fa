//! The contact tree of a reduced curve.

use std::collections::BTreeSet;
use std::fmt::Write;

use serde_json::{json, Value};

use crate::arith::rat::{fmt_rat, Rat};
use crate::error::{Error, Result};
use crate::puiseux::{Branch, BranchSet};

/// One equivalence class P_i^M.
#[derive(Clone, Debug)]
pub struct TreePoint {
    pub id: usize,
    pub level: Rat,
    /// 1-based index among the points of the same level.
    pub index: usize,
    pub members: Vec<usize>,
    /// Points that strictly dominate this one.
    pub dominating: Vec<usize>,
    /// The point this one strictly dominates, if any.
    pub parent: Option<usize>,
    /// Members not in any strictly dominating point (arrows).
    pub d: Vec<usize>,
    pub theta: usize,
}

impl TreePoint {
    pub fn is_top(&self) -> bool {
        self.dominating.is_empty()
    }

    pub fn label(&self) -> String {
        format!("P_{}^{}", self.index, fmt_rat(&self.level))
    }

    pub fn contains(&self, b: usize) -> bool {
        self.members.contains(&b)
    }
}

/// Kind of a family of branches with constant pairwise contact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeqClass {
    Singleton,
    Equivalent,
    /// The distinguished member has one characteristic exponent fewer.
    AlmostEquivalent(usize),
}

#[derive(Clone, Debug)]
pub struct ContactTree {
    pub levels: Vec<Rat>,
    pub points: Vec<TreePoint>,
}

/// Whether branch `b` belongs to C_M(f).
fn at_level(bs: &BranchSet, b: usize, m: &Rat) -> bool {
    bs.branches[b].char_exponents().iter().any(|e| e >= m)
        || (0..bs.len()).any(|q| q != b && bs.c(b, q) >= m)
}

pub fn build_tree(bs: &BranchSet) -> Result<ContactTree> {
    let mut lv: BTreeSet<Rat> = BTreeSet::new();
    for b in &bs.branches {
        lv.extend(b.char_exponents());
    }
    for p in 0..bs.len() {
        for q in p + 1..bs.len() {
            lv.insert(bs.c(p, q).clone());
        }
    }
    let levels: Vec<Rat> = lv.into_iter().collect();
    let mut points: Vec<TreePoint> = vec![];
    let mut by_level: Vec<Vec<usize>> = vec![];
    for m in &levels {
        let mut left: Vec<usize> = (0..bs.len()).filter(|&b| at_level(bs, b, m)).collect();
        let mut ids = vec![];
        while let Some(&first) = left.first() {
            let (class, rest): (Vec<usize>, Vec<usize>) = left.iter().partition(|&&q| q == first || bs.c(first, q) >= m);
            left = rest;
            let id = points.len();
            points.push(TreePoint {
                id,
                level: m.clone(),
                index: ids.len() + 1,
                members: class,
                dominating: vec![],
                parent: None,
                d: vec![],
                theta: 0,
            });
            ids.push(id);
        }
        by_level.push(ids);
    }
    for k in 0..levels.len().saturating_sub(1) {
        for &lo in &by_level[k] {
            for &hi in &by_level[k + 1] {
                if points[hi].members.iter().all(|b| points[lo].members.contains(b)) {
                    points[lo].dominating.push(hi);
                    points[hi].parent = Some(lo);
                }
            }
        }
    }
    for i in 0..points.len() {
        let covered: BTreeSet<usize> =
            points[i].dominating.iter().flat_map(|&j| points[j].members.iter().copied()).collect();
        points[i].d = points[i].members.iter().copied().filter(|b| !covered.contains(b)).collect();
        let thetas: Vec<usize> = points[i].members.iter().map(|&b| bs.branches[b].theta(&points[i].level)).collect();
        points[i].theta = *thetas.iter().max().unwrap();
    }
    let t = ContactTree { levels, points };
    if let Some(p) = t.points.iter().find(|p| p.parent.is_none() && p.id != 0) {
        return Err(Error::InternalInconsistency(format!("{} has no dominated point", p.label())));
    }
    Ok(t)
}

impl ContactTree {
    pub fn root(&self) -> Option<&TreePoint> {
        self.points.first()
    }

    pub fn tops(&self) -> impl Iterator<Item = &TreePoint> {
        self.points.iter().filter(|p| p.is_top())
    }

    pub fn point(&self, level: &Rat, members: &[usize]) -> Option<&TreePoint> {
        self.points.iter().find(|p| &p.level == level && p.members == members)
    }

    /// c(H, P) for a branch outside P.
    pub fn outside_contact<'a>(&self, bs: &'a BranchSet, p: &TreePoint, h: usize) -> &'a Rat {
        bs.c(h, p.members[0])
    }

    /// The sets X_1..X_s of a point and the common size c(M, i).
    ///
    /// Each X_k is D together with one member of every strictly dominating
    /// point, the k-th one where available.
    pub fn x_partition(&self, p: &TreePoint) -> (Vec<Vec<usize>>, usize) {
        let doms: Vec<&TreePoint> = p.dominating.iter().map(|&j| &self.points[j]).collect();
        let s = doms.iter().map(|q| q.members.len()).max().unwrap_or(1);
        let mut xs = vec![];
        for k in 0..s {
            let mut x: Vec<usize> = doms.iter().map(|q| q.members[k.min(q.members.len() - 1)]).collect();
            x.extend(&p.d);
            x.sort();
            xs.push(x);
        }
        (xs, p.dominating.len() + p.d.len())
    }

    pub fn to_json(&self, bs: &BranchSet) -> Value {
        json!({
            "levels": self.levels.iter().map(fmt_rat).collect::<Vec<_>>(),
            "points": self.points.iter().map(|p| json!({
                "id": p.label(),
                "level": fmt_rat(&p.level),
                "members": p.members.iter().map(|&b| bs.branches[b].name()).collect::<Vec<_>>(),
                "D": p.d.iter().map(|&b| bs.branches[b].name()).collect::<Vec<_>>(),
                "theta": p.theta,
                "top": p.is_top(),
                "dominates": p.parent.map(|q| self.points[q].label()).into_iter().collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })
    }

    pub fn to_dot(&self, bs: &BranchSet) -> String {
        let mut s = String::from("digraph tree {\n  rankdir=BT;\n  node [shape=point];\n");
        for p in &self.points {
            let names: Vec<String> = p.members.iter().map(|&b| bs.branches[b].name()).collect();
            let _ = writeln!(s, "  p{} [shape=box, label=\"{} = {{{}}}\"];", p.id, p.label(), names.join(","));
            if let Some(q) = p.parent {
                let _ = writeln!(s, "  p{} -> p{} [dir=none];", q, p.id);
            }
            for &b in &p.d {
                let _ = writeln!(s, "  a{}_{} [shape=plaintext, label=\"{}\"];", p.id, b, bs.branches[b].name());
                let _ = writeln!(s, "  p{} -> a{}_{};", p.id, p.id, b);
            }
        }
        s.push_str("}\n");
        s
    }

    pub fn to_text(&self, bs: &BranchSet) -> String {
        let mut s = String::new();
        for p in &self.points {
            let names: Vec<String> = p.members.iter().map(|&b| bs.branches[b].name()).collect();
            let dn: Vec<String> = p.d.iter().map(|&b| bs.branches[b].name()).collect();
            let _ = write!(s, "{} = {{{}}}", p.label(), names.join(", "));
            if !dn.is_empty() {
                let _ = write!(s, "  D = {{{}}}", dn.join(", "));
            }
            if p.is_top() {
                s.push_str("  top");
            }
            if let Some(q) = p.parent {
                let _ = write!(s, "  above {}", self.points[q].label());
            }
            s.push('\n');
        }
        s
    }
}

/// Sequence class of branches with equal pairwise contact `m`.
pub fn classify_sequence(bs: &BranchSet, members: &[usize], m: &Rat) -> Result<SeqClass> {
    if members.len() == 1 {
        return Ok(SeqClass::Singleton);
    }
    let bmax = members.iter().copied().max_by_key(|&b| (bs.branches[b].n, std::cmp::Reverse(b))).unwrap();
    let f1 = &bs.branches[bmax];
    let equiv = |g: &Branch| {
        g.h() == f1.h() && g.char_exponents() == f1.char_exponents() && f1.char_exponents().last().is_none_or(|l| m >= l)
    };
    let almost = |g: &Branch| {
        g.h() + 1 == f1.h()
            && g.char_exponents()[..] == f1.char_exponents()[..g.h()]
            && f1.char_exponents().last() == Some(m)
    };
    let odd: Vec<usize> = members.iter().copied().filter(|&b| !equiv(&bs.branches[b])).collect();
    match odd.as_slice() {
        [] => Ok(SeqClass::Equivalent),
        [o] if almost(&bs.branches[*o]) => Ok(SeqClass::AlmostEquivalent(*o)),
        _ => Err(Error::ContradictionWitness(format!(
            "branches {:?} at contact {} are neither equivalent nor almost equivalent",
            members.iter().map(|&b| bs.branches[b].name()).collect::<Vec<_>>(),
            fmt_rat(m)
        ))),
    }
}

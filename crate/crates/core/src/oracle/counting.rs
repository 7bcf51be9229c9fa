//! Cardinality identities between roots of f and roots of f_y or J.

use std::collections::BTreeSet;

use crate::analysis::Analysis;
use crate::arith::rat::{fmt_rat, Rat};
use crate::puiseux::BranchSet;

use super::{Observation, Section};

/// Contacts of f-root `i` with the other f-roots, indexed like `obs`.
fn root_contacts(bs: &BranchSet, i: usize) -> Vec<Option<Rat>> {
    (0..bs.root_contacts.len()).map(|j| bs.root_c(i, j).cloned()).collect()
}

/// For every root y_i of f and every M, #{j : c(y_i, y_j) = M} equals
/// #{z in Root(H) : c(y_i, z) = M}. With `gate`, only for M above the
/// largest contact of y_i with a root outside `keep`.
fn root_identity(an: &Analysis, obs: &Observation, keep: &[bool], name: &str) -> Section {
    let mut sec = Section::new(name);
    let bs = &an.branches;
    for (i, &b) in obs.root_branch.iter().enumerate() {
        if !keep[b] {
            continue;
        }
        let cs = root_contacts(bs, i);
        let outside = cs
            .iter()
            .enumerate()
            .filter(|(j, _)| !keep[obs.root_branch[*j]])
            .filter_map(|(_, c)| c.clone())
            .max();
        let mut ms: BTreeSet<Rat> = cs.iter().flatten().cloned().collect();
        ms.extend(obs.leaves.iter().map(|l| l.contacts[i].clone()));
        for m in ms {
            if outside.as_ref().is_some_and(|o| &m <= o) {
                sec.skip();
                continue;
            }
            let lhs = cs
                .iter()
                .enumerate()
                .filter(|(j, c)| keep[obs.root_branch[*j]] && c.as_ref() == Some(&m))
                .count();
            let rhs = obs.count_root_contact(i, &m);
            sec.assert(lhs == rhs, || format!("root {i} at {}: {lhs} roots of f, {rhs} of H", fmt_rat(&m)));
        }
    }
    sec
}

pub fn polar_root_contacts(an: &Analysis, obs: &Observation) -> Section {
    let keep = vec![true; an.branches.len()];
    root_identity(an, obs, &keep, "root contacts with f_y")
}

pub fn jacobian_root_contacts(an: &Analysis, obs: &Observation, is_f: &[bool]) -> Section {
    root_identity(an, obs, is_f, "root contacts with J")
}

/// Branch-level counts: for each branch F of f and M, the number of H-roots
/// z with c(F, z) = M. `extra` is (e_θ - 1) n/d_θ when M = m_θ/n.
fn branch_counts(an: &Analysis, obs: &Observation, keep: &[bool], jac: bool) -> (Section, Section) {
    let bs = &an.branches;
    let mut off = Section::new(if jac { "J roots off characteristic levels" } else { "f_y roots off characteristic levels" });
    let mut on = Section::new(if jac { "J roots on characteristic levels" } else { "f_y roots on characteristic levels" });
    let max_cross = (0..bs.len())
        .flat_map(|a| (0..bs.len()).map(move |b| (a, b)))
        .filter(|&(a, b)| keep[a] && !keep[b])
        .map(|(a, b)| bs.c(a, b).clone())
        .max();
    for (i, f) in bs.branches.iter().enumerate() {
        if !keep[i] {
            continue;
        }
        let own_cross = (0..bs.len()).filter(|&b| !keep[b]).map(|b| bs.c(i, b).clone()).max();
        let mut ms: BTreeSet<Rat> = (0..bs.len()).filter(|&k| k != i && keep[k]).map(|k| bs.c(i, k).clone()).collect();
        ms.extend(f.char_exponents());
        ms.extend(obs.branch_contacts.iter().map(|c| c[i].clone()));
        let exps = f.char_exponents();
        for m in ms {
            let same: i64 = (0..bs.len()).filter(|&k| k != i && keep[k] && bs.c(i, k) == &m).map(|k| bs.branches[k].n).sum();
            let got = obs.count_branch_contact(i, &m) as i64;
            match exps.iter().position(|e| e == &m) {
                None => {
                    if jac && own_cross.as_ref().is_some_and(|o| &m <= o) {
                        off.skip();
                        continue;
                    }
                    off.assert(got == same, || {
                        format!("{} at {}: {got} roots, expected {same}", f.name(), fmt_rat(&m))
                    });
                }
                Some(p) => {
                    let th = p + 1;
                    if jac && max_cross.as_ref().is_some_and(|o| &m <= o) {
                        on.skip();
                        continue;
                    }
                    let want = same + (f.ek(th) - 1) * f.n / f.dk(th);
                    on.assert(got == want, || {
                        format!("{} at {}: {got} roots, expected {want}", f.name(), fmt_rat(&m))
                    });
                }
            }
        }
    }
    (off, on)
}

pub fn polar_counts(an: &Analysis, obs: &Observation) -> Vec<Section> {
    let keep = vec![true; an.branches.len()];
    let (off, on) = branch_counts(an, obs, &keep, false);
    let mut out = vec![off, on];
    if an.branches.len() == 1 {
        let f = &an.branches.branches[0];
        let mut s = Section::new("irreducible f_y counts");
        for (k, m) in f.char_exponents().iter().enumerate() {
            let want = (f.ek(k + 1) - 1) * f.n / f.dk(k + 1);
            let got = obs.count_branch_contact(0, m) as i64;
            s.assert(got == want, || format!("level {}: {got} roots, expected {want}", fmt_rat(m)));
        }
        out.push(s);
    }
    out
}

pub fn jacobian_counts(an: &Analysis, obs: &Observation, is_f: &[bool]) -> Vec<Section> {
    let (off, on) = branch_counts(an, obs, is_f, true);
    vec![off, on]
}

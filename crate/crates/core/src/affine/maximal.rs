//! Closed subroot systems of a finite root system, maximal ones, and the two
//! families of maximal real closed subroot systems of the affinization.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::Serialize;

use crate::rootslice::RootVec;

use super::finite::FiniteRootSystem;
use super::periodic::{validate_periodic, PeriodicRootSet, RawComponent};
use super::AffineError;

/// Smallest symmetric subset containing `s` and closed under sums that are roots.
pub fn finite_closure(fr: &FiniteRootSystem, s: &BTreeSet<RootVec>) -> BTreeSet<RootVec> {
    let mut set: BTreeSet<RootVec> = s.iter().flat_map(|r| [r.clone(), -r]).collect();
    let mut frontier: Vec<RootVec> = set.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut fresh = Vec::new();
        for a in &frontier {
            for b in set.iter().chain(&fresh).cloned().collect::<Vec<_>>() {
                let sum = a + &b;
                if fr.is_root(&sum) && !set.contains(&sum) && !fresh.contains(&sum) {
                    fresh.push(sum);
                }
            }
        }
        set.extend(fresh.iter().cloned());
        frontier = fresh;
    }
    set
}

pub fn is_closed(fr: &FiniteRootSystem, s: &BTreeSet<RootVec>) -> bool {
    finite_closure(fr, s) == *s
}

/// Whether adjoining any further `±gamma` and closing gives everything.
pub fn is_maximal_closed(fr: &FiniteRootSystem, psi0: &BTreeSet<RootVec>) -> Result<bool, AffineError> {
    if let Some(r) = psi0.iter().find(|r| !fr.is_root(r)) {
        return Err(AffineError::NotARoot(r.clone()));
    }
    if !is_closed(fr, psi0) {
        return Err(AffineError::NotClosed(finite_closure(fr, psi0).difference(psi0).next().unwrap().clone()));
    }
    if psi0 == fr.root_set() {
        return Err(AffineError::NotProper);
    }
    Ok(fr.positive().filter(|g| !psi0.contains(*g)).all(|g| {
        let mut s = psi0.clone();
        s.insert(g.clone());
        finite_closure(fr, &s) == *fr.root_set()
    }))
}

/// All maximal closed subroot systems of an irreducible finite root system.
///
/// Candidates come from deleting one node of the Dynkin diagram or of the
/// extended diagram; each is certified by [`is_maximal_closed`] before its
/// Weyl orbit is added. The empty set is maximal exactly in rank one.
pub fn maximal_closed(fr: &FiniteRootSystem) -> Result<Vec<BTreeSet<RootVec>>, AffineError> {
    if !fr.is_irreducible() {
        return Err(AffineError::NotIrreducible);
    }
    let n = fr.rank();
    let simple: Vec<RootVec> = (0..n).map(|i| RootVec::simple(n, i)).collect();
    let theta = fr.highest_roots()[0].clone();
    let mut cands: Vec<BTreeSet<RootVec>> = Vec::new();
    for i in 0..n {
        let levi: BTreeSet<RootVec> = simple.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, r)| r.clone()).collect();
        let mut ext = levi.clone();
        ext.insert(-&theta);
        cands.push(finite_closure(fr, &levi));
        cands.push(finite_closure(fr, &ext));
    }
    let mut out = BTreeSet::new();
    for c in cands {
        if c == *fr.root_set() || out.contains(&c) {
            continue;
        }
        if is_maximal_closed(fr, &c)? {
            out.extend(fr.weyl_orbit_of_set(&c));
        }
    }
    Ok(out.into_iter().collect())
}

/// Full gradient: `Psi_0` is everything. Proper gradient: `Psi_0` is a proper
/// maximal closed subroot system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Gradient {
    Full,
    Proper,
}

#[derive(Debug, Clone)]
pub enum MaximalCase {
    /// `(Delta_0, k, f)` with `k` prime; `f` given by values on the simple roots.
    Case1 { k: i64, f_simple: Vec<i64> },
    /// `(psi0, 1, 0)` with `psi0` maximal closed.
    Case2 { psi0: BTreeSet<RootVec> },
}

pub fn is_prime(k: i64) -> bool {
    k >= 2 && (2..).take_while(|d| d * d <= k).all(|d| k % d != 0)
}

pub fn maximal_real_closed(
    fr: &Arc<FiniteRootSystem>,
    which: &MaximalCase,
) -> Result<(PeriodicRootSet, Gradient), AffineError> {
    if !fr.is_irreducible() {
        return Err(AffineError::NotIrreducible);
    }
    let n = fr.rank();
    match which {
        MaximalCase::Case1 { k, f_simple } => {
            if !is_prime(*k) {
                return Err(AffineError::NotPrime(*k));
            }
            if f_simple.len() != n {
                return Err(AffineError::FunctionShape(n, f_simple.len()));
            }
            let raw = RawComponent {
                roots: fr.positive().cloned().collect(),
                k: *k,
                f_base: (0..n).map(|i| RootVec::simple(n, i)).collect(),
                f_values: f_simple.clone(),
            };
            Ok((validate_periodic(fr, &[raw])?, Gradient::Full))
        }
        MaximalCase::Case2 { psi0 } => {
            if !is_maximal_closed(fr, psi0)? {
                return Err(AffineError::NotMaximal);
            }
            let raws: Vec<RawComponent> = fr
                .irreducible_parts(psi0)
                .into_iter()
                .map(|p| RawComponent { roots: p.into_iter().filter(|r| r.is_positive()).collect(), k: 1, ..Default::default() })
                .collect();
            Ok((validate_periodic(fr, &raws)?, Gradient::Proper))
        }
    }
}

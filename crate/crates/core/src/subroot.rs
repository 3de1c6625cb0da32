//! Subsets of a root slice: subroot systems, closures, canonical generators
//! `Pi(Psi)`, pi-systems, reflection orbits, the induced matrix `B_Sigma`,
//! and a bounded check of the correspondence between real closed subroot
//! systems and positive pi-systems.
//!
//! Every answer that could change with a larger height bound is reported as
//! undecided or truncated, never guessed.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::cartan::{symmetrize, validate_gcm, CartanDatum, CartanError, Gcm};
use crate::linalg;
use crate::rootslice::{reflect, RootClass, RootSlice, RootVec};

/// Default cap on the number of generators tried by the uniqueness probe.
pub const DEFAULT_MAX_GENS: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubrootError {
    #[error(transparent)]
    Cartan(#[from] CartanError),
    #[error("{0} is not a root of the slice")]
    NotInSlice(RootVec),
    #[error("{0} is not a positive real root")]
    NotPositiveReal(RootVec),
    #[error("duplicate generator {0}")]
    Duplicate(RootVec),
    #[error("result needs {witness}, above the height bound {height}")]
    Truncated { height: i64, witness: RootVec },
}

/// A set of (signed) roots.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct RootSet {
    members: BTreeSet<RootVec>,
}

impl RootSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// `{±r : r in roots}`.
    pub fn symmetric<I: IntoIterator<Item = RootVec>>(roots: I) -> Self {
        let mut s = Self::new();
        for r in roots {
            s.members.insert(-&r);
            s.members.insert(r);
        }
        s
    }

    pub fn contains(&self, r: &RootVec) -> bool {
        self.members.contains(r)
    }

    pub fn insert(&mut self, r: RootVec) -> bool {
        self.members.insert(r)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &RootVec> {
        self.members.iter()
    }

    /// Positive members in canonical order.
    pub fn positive(&self) -> Vec<RootVec> {
        self.members.iter().filter(|r| r.is_positive()).cloned().collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.members.iter().all(|r| self.members.contains(&-r))
    }

    /// Members with `|ht| <= h`.
    pub fn restrict(&self, h: i64) -> RootSet {
        RootSet { members: self.members.iter().filter(|r| r.height().abs() <= h).cloned().collect() }
    }

    pub fn is_subset(&self, other: &RootSet) -> bool {
        self.members.is_subset(&other.members)
    }
}

impl FromIterator<RootVec> for RootSet {
    fn from_iter<I: IntoIterator<Item = RootVec>>(iter: I) -> Self {
        RootSet { members: iter.into_iter().collect() }
    }
}

/// Three-valued answer with the roots that decided it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Yes,
    No(Vec<RootVec>),
    Undecided(Vec<RootVec>),
}

impl Verdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, Verdict::Yes)
    }
}

fn check_in_slice(slice: &RootSlice, set: &RootSet) -> Result<(), SubrootError> {
    for r in set.iter() {
        if !slice.classify(r).is_root() {
            return Err(SubrootError::NotInSlice(r.clone()));
        }
    }
    Ok(())
}

fn real_members(slice: &RootSlice, set: &RootSet) -> Vec<RootVec> {
    set.iter().filter(|r| slice.is_real_root(r)).cloned().collect()
}

/// Closed under `s_alpha` for every real member `alpha`.
pub fn is_subroot_system(slice: &RootSlice, psi: &RootSet) -> Result<Verdict, SubrootError> {
    check_in_slice(slice, psi)?;
    let cd = slice.cd();
    let mut undecided = None;
    for a in real_members(slice, psi) {
        for b in psi.iter() {
            let img = reflect(cd, &a, b)?;
            if !slice.within(&img) {
                undecided.get_or_insert_with(|| vec![a.clone(), b.clone(), img]);
            } else if !psi.contains(&img) {
                return Ok(Verdict::No(vec![a, b.clone(), img]));
            }
        }
    }
    Ok(undecided.map_or(Verdict::Yes, Verdict::Undecided))
}

/// Smallest closed subroot system containing `s`: closed under root sums and
/// under reflections in real members.
pub fn closure(slice: &RootSlice, s: &RootSet) -> Result<RootSet, SubrootError> {
    check_in_slice(slice, s)?;
    let cd = slice.cd();
    let h = slice.height_bound();
    let mut set = s.clone();
    let mut queue: VecDeque<RootVec> = set.iter().cloned().collect();
    let mut done: Vec<RootVec> = Vec::new();
    while let Some(x) = queue.pop_front() {
        let mut fresh = Vec::new();
        let x_real = slice.is_real_root(&x);
        for y in done.iter().chain(std::iter::once(&x)) {
            let mut cands = Vec::new();
            let sum = &x + y;
            if !sum.is_zero() {
                cands.push(sum);
            }
            if x_real {
                cands.push(reflect(cd, &x, y)?);
            }
            if slice.is_real_root(y) {
                cands.push(reflect(cd, y, &x)?);
            }
            for c in cands {
                match slice.classify(&c) {
                    RootClass::Unknown => return Err(SubrootError::Truncated { height: h, witness: c }),
                    RootClass::NotARoot => {}
                    _ => {
                        if !set.contains(&c) {
                            set.insert(c.clone());
                            fresh.push(c);
                        }
                    }
                }
            }
        }
        done.push(x);
        queue.extend(fresh);
    }
    Ok(set)
}

/// Whenever `alpha + beta` is a real root for members `alpha, beta`, it is a member.
///
/// A sum above the height bound is still decided when it has mixed signs or
/// non-positive norm, since then it cannot be a real root.
pub fn is_real_closed(slice: &RootSlice, psi: &RootSet) -> Result<Verdict, SubrootError> {
    check_in_slice(slice, psi)?;
    let cd = slice.cd();
    let mut undecided = None;
    let members: Vec<&RootVec> = psi.iter().collect();
    for (i, a) in members.iter().enumerate() {
        for b in &members[i..] {
            let sum = *a + *b;
            match slice.classify(&sum) {
                RootClass::Real if !psi.contains(&sum) => {
                    return Ok(Verdict::No(vec![(*a).clone(), (*b).clone(), sum]));
                }
                RootClass::Unknown if cd.norm(sum.coeffs()) > 0 => {
                    undecided.get_or_insert_with(|| vec![(*a).clone(), (*b).clone(), sum]);
                }
                _ => {}
            }
        }
    }
    Ok(undecided.map_or(Verdict::Yes, Verdict::Undecided))
}

/// How the verdicts of a [`MinimalityReport`] were justified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Certification {
    /// `Psi` verified real closed within the slice.
    RealClosed,
    /// `Psi` is a subroot system lying entirely inside the slice.
    FiniteInSlice,
    /// The caller vouched that `Psi` is real closed.
    Assumed,
    /// Neither; candidates without a witness are undecided.
    Uncertified,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinimalityReport {
    pub certified_minimal: Vec<RootVec>,
    /// Non-minimal candidates with a member `gamma` such that `s_beta(gamma) < 0`.
    pub certified_nonminimal: Vec<(RootVec, RootVec)>,
    pub undecided: Vec<RootVec>,
    pub certification: Certification,
}

impl MinimalityReport {
    /// Certified minimal elements followed by undecided ones.
    pub fn candidates(&self) -> Vec<RootVec> {
        let mut v: Vec<RootVec> = self.certified_minimal.iter().chain(&self.undecided).cloned().collect();
        v.sort();
        v
    }
}

/// Candidates for `Pi(Psi)`: positive members `beta` whose reflection permutes
/// the other positive members.
///
/// A member `gamma` with `s_beta(gamma)` negative proves `beta` is not minimal
/// at any height. Conversely, in a real closed `Psi` a non-minimal `beta`
/// always has such a `gamma` of smaller height, so the absence of a witness
/// below `ht(beta)` certifies minimality. Without real-closedness (or
/// finiteness inside the slice) such candidates are left undecided.
pub fn minimal_elements(slice: &RootSlice, psi: &RootSet) -> Result<MinimalityReport, SubrootError> {
    let cert = if is_real_closed(slice, psi)?.is_yes() {
        Certification::RealClosed
    } else if is_subroot_system(slice, psi)?.is_yes() {
        Certification::FiniteInSlice
    } else {
        Certification::Uncertified
    };
    minimality(slice, psi, cert)
}

/// As [`minimal_elements`] when `Psi` is known to be real closed for reasons
/// outside the slice (for instance, it is the orbit of a pi-system).
pub fn minimal_elements_assuming_real_closed(
    slice: &RootSlice,
    psi: &RootSet,
) -> Result<MinimalityReport, SubrootError> {
    check_in_slice(slice, psi)?;
    minimality(slice, psi, Certification::Assumed)
}

fn minimality(slice: &RootSlice, psi: &RootSet, cert: Certification) -> Result<MinimalityReport, SubrootError> {
    let cd = slice.cd();
    let pos = psi.positive();
    let mut report = MinimalityReport {
        certified_minimal: Vec::new(),
        certified_nonminimal: Vec::new(),
        undecided: Vec::new(),
        certification: cert,
    };
    for b in &pos {
        if !slice.is_real_root(b) {
            return Err(SubrootError::NotPositiveReal(b.clone()));
        }
        let mut witness = None;
        for g in &pos {
            if g == b {
                continue;
            }
            if reflect(cd, b, g)?.is_negative() {
                witness = Some(g.clone());
                break;
            }
        }
        match witness {
            Some(g) => report.certified_nonminimal.push((b.clone(), g)),
            None if cert == Certification::Uncertified => report.undecided.push(b.clone()),
            None => report.certified_minimal.push(b.clone()),
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum PiVerdict {
    Certified,
    /// `(a, b)` with `a - b` a root.
    Refuted(RootVec, RootVec),
    /// Pairs whose difference lies above the height bound.
    Undecided(Vec<(RootVec, RootVec)>),
}

fn check_generators(slice: &RootSlice, sigma: &[RootVec]) -> Result<(), SubrootError> {
    let mut seen = BTreeSet::new();
    for s in sigma {
        if !s.is_positive() || !slice.is_real_root(s) {
            return Err(SubrootError::NotPositiveReal(s.clone()));
        }
        if !seen.insert(s) {
            return Err(SubrootError::Duplicate(s.clone()));
        }
    }
    Ok(())
}

/// Whether no difference of two generators is a root.
pub fn pi_system_check(slice: &RootSlice, sigma: &[RootVec]) -> Result<PiVerdict, SubrootError> {
    check_generators(slice, sigma)?;
    let mut open = Vec::new();
    for (i, a) in sigma.iter().enumerate() {
        for b in &sigma[i + 1..] {
            match slice.classify(&(a - b)) {
                RootClass::NotARoot => {}
                RootClass::Unknown => open.push((a.clone(), b.clone())),
                _ => return Ok(PiVerdict::Refuted(a.clone(), b.clone())),
            }
        }
    }
    Ok(if open.is_empty() { PiVerdict::Certified } else { PiVerdict::Undecided(open) })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Orbit {
    pub set: RootSet,
    /// Some element of the orbit lies above the height bound.
    pub truncated: bool,
}

/// `W_Sigma(Sigma)` inside the slice.
///
/// Only positive elements are explored; every positive orbit element descends
/// to a generator through positive elements of smaller height, so the search
/// is complete inside the slice.
pub fn orbit(slice: &RootSlice, sigma: &[RootVec]) -> Result<Orbit, SubrootError> {
    check_generators(slice, sigma)?;
    let cd = slice.cd();
    let mut pos: BTreeSet<RootVec> = sigma.iter().cloned().collect();
    let mut queue: VecDeque<RootVec> = pos.iter().cloned().collect();
    let mut truncated = false;
    while let Some(x) = queue.pop_front() {
        for s in sigma {
            let y = reflect(cd, s, &x)?;
            if !y.is_positive() {
                continue;
            }
            if !slice.within(&y) {
                truncated = true;
            } else if pos.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    Ok(Orbit { set: RootSet::symmetric(pos), truncated })
}

/// The matrix `b_ij = <beta_j, beta_i^vee>` of a pi-system, with its generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedGcm {
    pub gcm: Gcm,
    pub labels: Vec<RootVec>,
}

pub fn b_sigma(cd: &CartanDatum, sigma: &[RootVec]) -> Result<InducedGcm, SubrootError> {
    let mut rows = Vec::with_capacity(sigma.len());
    for bi in sigma {
        let mut row = Vec::with_capacity(sigma.len());
        for bj in sigma {
            row.push(cd.pairing(bj.coeffs(), bi.coeffs())?);
        }
        rows.push(row);
    }
    let gcm = validate_gcm(&rows)?;
    symmetrize(&gcm)?;
    Ok(InducedGcm { gcm, labels: sigma.to_vec() })
}

/// Integer coefficients `c` with `sum c_i sigma_i = beta`, all of one sign.
///
/// Generators are positive, so partial sums are bounded by `|beta|`
/// componentwise and the search is finite. Returns the lexicographically
/// largest solution, or `None`.
pub fn combo_decompose(sigma: &[RootVec], beta: &RootVec) -> Option<Vec<i64>> {
    if beta.is_zero() || !beta.is_uniform_sign() {
        return None;
    }
    let neg = beta.is_negative();
    let target = beta.abs();
    let mut coeffs = vec![0; sigma.len()];
    if search(sigma, 0, &target, &mut coeffs) {
        if neg {
            coeffs.iter_mut().for_each(|c| *c = -*c);
        }
        Some(coeffs)
    } else {
        None
    }
}

fn search(sigma: &[RootVec], i: usize, rest: &RootVec, coeffs: &mut [i64]) -> bool {
    if rest.is_zero() {
        return true;
    }
    if i == sigma.len() {
        return false;
    }
    let g = &sigma[i];
    let max = g
        .coeffs()
        .iter()
        .zip(rest.coeffs())
        .filter(|(gc, _)| **gc > 0)
        .map(|(gc, rc)| rc / gc)
        .min()
        .unwrap_or(0);
    for c in (0..=max).rev() {
        coeffs[i] = c;
        let r = rest.add_scaled(-c, g);
        if search(sigma, i + 1, &r, coeffs) {
            return true;
        }
    }
    coeffs[i] = 0;
    false
}

/// Primitive integer relations `sum c_i sigma_i = 0` spanning all rational ones.
pub fn integer_kernel(sigma: &[RootVec]) -> Vec<Vec<BigInt>> {
    let cols: Vec<Vec<i64>> = sigma.iter().map(|s| s.coeffs().to_vec()).collect();
    linalg::integer_kernel(&cols)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Undecided,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Uniqueness {
    /// No positive pi-system other than `Pi` generates `Psi` (within the caps).
    Unique,
    /// A second generating pi-system.
    Another(Vec<RootVec>),
    /// The elements every generating pi-system must contain already fail to
    /// be a pi-system, so no positive pi-system generates `Psi`.
    NoPiSystemGenerates { forced: Vec<RootVec>, pair: (RootVec, RootVec) },
    Undecided(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BijectionReport {
    pub status: Status,
    pub pi: Vec<RootVec>,
    pub minimality: MinimalityReport,
    pub pi_system: PiVerdict,
    pub orbit_matches: bool,
    pub uniqueness: Uniqueness,
    pub witnesses: Vec<String>,
}

/// Bounded check that `Psi -> Pi(Psi)` and `Sigma -> W_Sigma(Sigma)` are
/// mutually inverse on `Psi`, and that no other positive pi-system with at
/// most `max_gens` generators generates `Psi`.
///
/// `psi` is taken to be the full intersection of the subroot system with
/// the slice. If real-closedness cannot be decided inside the slice but the
/// candidate generators form a certified pi-system whose orbit is exactly
/// `psi`, then `psi` is an orbit of a pi-system and minimality is certified
/// on that basis.
pub fn verify_bijection(slice: &RootSlice, psi: &RootSet, max_gens: usize) -> Result<BijectionReport, SubrootError> {
    let mut witnesses = Vec::new();
    let mut minimality = minimal_elements(slice, psi)?;
    let pi = minimality.candidates();
    let pi_system = if pi.is_empty() { PiVerdict::Certified } else { pi_system_check(slice, &pi)? };
    let orb = if pi.is_empty() { None } else { Some(orbit(slice, &pi)?) };
    let orbit_matches = match &orb {
        Some(o) => o.set == psi.restrict(slice.height_bound()),
        None => psi.is_empty(),
    };
    if minimality.certification == Certification::Uncertified && pi_system == PiVerdict::Certified && orbit_matches {
        minimality = minimal_elements_assuming_real_closed(slice, psi)?;
        witnesses.push("real-closedness taken from the certified pi-system generating psi".to_string());
    }
    let uniqueness = uniqueness_probe(slice, psi, &pi, max_gens)?;

    let mut status = Status::Pass;
    if !minimality.undecided.is_empty() {
        status = Status::Undecided;
        witnesses.push(format!("minimality undecided for {:?}", minimality.undecided));
    }
    match &pi_system {
        PiVerdict::Certified => {}
        PiVerdict::Refuted(a, b) => {
            status = Status::Fail;
            witnesses.push(format!("{a} - {b} is a root"));
        }
        PiVerdict::Undecided(pairs) => {
            if status == Status::Pass {
                status = Status::Undecided;
            }
            witnesses.push(format!("undecided differences {pairs:?}"));
        }
    }
    if !orbit_matches {
        status = Status::Fail;
        witnesses.push("orbit of Pi differs from psi inside the slice".to_string());
    }
    match &uniqueness {
        Uniqueness::Unique => {}
        Uniqueness::Another(s) => {
            status = Status::Fail;
            witnesses.push(format!("second generating pi-system {s:?}"));
        }
        Uniqueness::NoPiSystemGenerates { pair, .. } => {
            status = Status::Fail;
            witnesses.push(format!("no positive pi-system generates psi: {} - {} is a root", pair.0, pair.1));
        }
        Uniqueness::Undecided(why) => {
            if status == Status::Pass {
                status = Status::Undecided;
            }
            witnesses.push(why.clone());
        }
    }
    Ok(BijectionReport { status, pi, minimality, pi_system, orbit_matches, uniqueness, witnesses })
}

/// Positive members that are not a sum of two or more positive members of
/// smaller height. Every positive pi-system generating `Psi` contains them,
/// since each member is a non-negative integer combination of such a system.
pub fn forced_generators(psi: &RootSet) -> Vec<RootVec> {
    let pos = psi.positive();
    let mut forced = Vec::new();
    for (i, b) in pos.iter().enumerate() {
        let lower: Vec<RootVec> = pos[..i].iter().filter(|r| r.height() < b.height()).cloned().collect();
        if combo_decompose(&lower, b).is_none() {
            forced.push(b.clone());
        }
    }
    forced
}

fn uniqueness_probe(
    slice: &RootSlice,
    psi: &RootSet,
    pi: &[RootVec],
    max_gens: usize,
) -> Result<Uniqueness, SubrootError> {
    let forced = forced_generators(psi);
    match pi_system_check(slice, &forced)? {
        PiVerdict::Refuted(a, b) => return Ok(Uniqueness::NoPiSystemGenerates { forced, pair: (a, b) }),
        PiVerdict::Undecided(p) => return Ok(Uniqueness::Undecided(format!("forced set undecided on {p:?}"))),
        PiVerdict::Certified => {}
    }
    let target = psi.restrict(slice.height_bound());
    let forced_set: BTreeSet<&RootVec> = forced.iter().collect();
    // Extra generators must keep every difference a non-root.
    let compatible: Vec<RootVec> = psi
        .positive()
        .into_iter()
        .filter(|c| !forced_set.contains(c))
        .filter(|c| forced.iter().all(|f| slice.classify(&(c - f)) == RootClass::NotARoot))
        .collect();
    let mut found: BTreeMap<Vec<RootVec>, ()> = BTreeMap::new();
    let mut open = false;
    let extra_cap = max_gens.saturating_sub(forced.len());
    let mut chosen = Vec::new();
    extend(slice, &forced, &compatible, 0, extra_cap, &mut chosen, &mut |sys: Vec<RootVec>| {
        match pi_system_check(slice, &sys)? {
            PiVerdict::Certified => {}
            PiVerdict::Refuted(..) => return Ok(()),
            PiVerdict::Undecided(_) => {
                open = true;
                return Ok(());
            }
        }
        if sys.is_empty() {
            return Ok(());
        }
        let o = orbit(slice, &sys)?;
        if target.is_subset(&o.set) {
            found.insert(sys, ());
        }
        Ok(())
    })?;
    let mut pi_sorted = pi.to_vec();
    pi_sorted.sort();
    if let Some(other) = found.keys().find(|s| **s != pi_sorted) {
        return Ok(Uniqueness::Another(other.clone()));
    }
    if open {
        return Ok(Uniqueness::Undecided("some candidate systems have undecided differences".into()));
    }
    if forced.len() > max_gens {
        return Ok(Uniqueness::Undecided(format!("forced set exceeds the generator cap {max_gens}")));
    }
    Ok(Uniqueness::Unique)
}

fn extend(
    slice: &RootSlice,
    base: &[RootVec],
    pool: &[RootVec],
    from: usize,
    left: usize,
    chosen: &mut Vec<RootVec>,
    visit: &mut dyn FnMut(Vec<RootVec>) -> Result<(), SubrootError>,
) -> Result<(), SubrootError> {
    let mut sys: Vec<RootVec> = base.iter().chain(chosen.iter()).cloned().collect();
    sys.sort();
    visit(sys)?;
    if left == 0 {
        return Ok(());
    }
    for k in from..pool.len() {
        let c = &pool[k];
        if chosen.iter().all(|x| slice.classify(&(c - x)) == RootClass::NotARoot) {
            chosen.push(c.clone());
            extend(slice, base, pool, k + 1, left - 1, chosen, visit)?;
            chosen.pop();
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::finite_type;
    use crate::rootslice::enumerate;

    fn rv(v: &[i64]) -> RootVec {
        RootVec(v.to_vec())
    }

    fn slice(rows: &[Vec<i64>], h: i64) -> RootSlice {
        enumerate(&CartanDatum::from_rows(rows).unwrap(), h).unwrap()
    }

    fn a2() -> RootSlice {
        slice(&[vec![2, -1], vec![-1, 2]], 4)
    }

    fn g2() -> RootSlice {
        enumerate(&symmetrize(&finite_type("G2").unwrap()).unwrap(), 8).unwrap()
    }

    fn g2_short() -> RootSet {
        RootSet::symmetric([rv(&[0, 1]), rv(&[1, 1]), rv(&[1, 2])])
    }

    fn fn2d_sigma() -> Vec<RootVec> {
        vec![rv(&[1, 1, 0]), rv(&[2, 2, 3]), rv(&[0, 2, 3]), rv(&[0, 4, 3])]
    }

    #[test]
    fn subroot_examples() {
        let s = a2();
        assert!(is_subroot_system(&s, &RootSet::symmetric([rv(&[1, 0])])).unwrap().is_yes());
        let bad: RootSet = [rv(&[1, 0]), rv(&[-1, 0]), rv(&[0, 1])].into_iter().collect();
        assert!(matches!(is_subroot_system(&s, &bad).unwrap(), Verdict::No(_)));
        assert!(is_subroot_system(&g2(), &g2_short()).unwrap().is_yes());
    }

    #[test]
    fn closure_examples() {
        let s = a2();
        let theta = RootSet::symmetric([rv(&[1, 1])]);
        assert_eq!(closure(&s, &theta).unwrap(), theta);
        let two = RootSet::symmetric([rv(&[1, 1]), rv(&[1, 0])]);
        let all = RootSet::symmetric([rv(&[1, 0]), rv(&[0, 1]), rv(&[1, 1])]);
        assert_eq!(closure(&s, &two).unwrap(), all);
        assert_eq!(closure(&s, &all).unwrap(), all);
        let aff = slice(&[vec![2, -2], vec![-2, 2]], 5);
        assert!(matches!(
            closure(&aff, &RootSet::symmetric([rv(&[1, 0]), rv(&[0, 1])])),
            Err(SubrootError::Truncated { .. })
        ));
    }

    #[test]
    fn real_closed_examples() {
        assert!(!is_real_closed(&g2(), &g2_short()).unwrap().is_yes());
        let s = a2();
        let all = RootSet::symmetric([rv(&[1, 0]), rv(&[0, 1]), rv(&[1, 1])]);
        assert!(is_real_closed(&s, &all).unwrap().is_yes());
        let m = slice(&[vec![2, -2, -2], vec![-2, 2, -2], vec![-2, -2, 2]], 10);
        let any = RootSet::symmetric([rv(&[1, 0, 0]), rv(&[0, 1, 0]), rv(&[2, 0, 1])]);
        assert!(!matches!(is_real_closed(&m, &any).unwrap(), Verdict::No(_)));
    }

    #[test]
    fn minimal_examples() {
        let s = a2();
        let all = RootSet::symmetric([rv(&[1, 0]), rv(&[0, 1]), rv(&[1, 1])]);
        let r = minimal_elements(&s, &all).unwrap();
        assert_eq!(r.certified_minimal, vec![rv(&[0, 1]), rv(&[1, 0])]);
        assert_eq!(r.certified_nonminimal.len(), 1);
        let r = minimal_elements(&s, &RootSet::symmetric([rv(&[1, 0])])).unwrap();
        assert_eq!(r.certified_minimal, vec![rv(&[1, 0])]);
    }

    #[test]
    fn fn2d_minimal_after_certified_pi_system() {
        let s = slice(&[vec![2, -1, 0], vec![-1, 2, -2], vec![0, -2, 2]], 14);
        let sigma = fn2d_sigma();
        assert_eq!(pi_system_check(&s, &sigma).unwrap(), PiVerdict::Certified);
        let psi = orbit(&s, &sigma).unwrap().set;
        let r = minimal_elements_assuming_real_closed(&s, &psi).unwrap();
        let mut want = sigma.clone();
        want.sort();
        assert_eq!(r.certified_minimal, want);
        assert!(r.undecided.is_empty());
    }

    #[test]
    fn pi_system_examples() {
        let s = a2();
        assert_eq!(
            pi_system_check(&s, &[rv(&[1, 0]), rv(&[1, 1])]).unwrap(),
            PiVerdict::Refuted(rv(&[1, 0]), rv(&[1, 1]))
        );
        assert!(matches!(pi_system_check(&s, &[rv(&[2, 0])]), Err(SubrootError::NotPositiveReal(_))));
        assert!(matches!(pi_system_check(&s, &[rv(&[1, 0]), rv(&[1, 0])]), Err(SubrootError::Duplicate(_))));
        let fn2d = slice(&[vec![2, -1, 0], vec![-1, 2, -2], vec![0, -2, 2]], 8);
        assert_eq!(pi_system_check(&fn2d, &fn2d_sigma()).unwrap(), PiVerdict::Certified);
        assert!(matches!(pi_system_check(&slice(&[vec![2, -1, 0], vec![-1, 2, -2], vec![0, -2, 2]], 6), &fn2d_sigma()), Err(SubrootError::NotPositiveReal(_))));
    }

    #[test]
    fn orbit_examples() {
        let s = a2();
        assert_eq!(orbit(&s, &[rv(&[1, 0])]).unwrap().set, RootSet::symmetric([rv(&[1, 0])]));
        let o = orbit(&s, &[rv(&[1, 0]), rv(&[0, 1])]).unwrap();
        assert_eq!(o.set.len(), 6);
        assert!(!o.truncated);
        let r2 = slice(&[vec![2, -4], vec![-1, 2]], 12);
        assert_eq!(orbit(&r2, &[rv(&[1, 0])]).unwrap().set, RootSet::symmetric([rv(&[1, 0])]));
    }

    #[test]
    fn b_sigma_examples() {
        let cd = CartanDatum::from_rows(&[vec![2, -4], vec![-1, 2]]).unwrap();
        let b = b_sigma(&cd, &[rv(&[1, 0]), rv(&[0, 1])]).unwrap();
        assert_eq!(&b.gcm, cd.gcm());
        let h = CartanDatum::from_rows(&[vec![2, -3], vec![-3, 2]]).unwrap();
        assert_eq!(b_sigma(&h, &[rv(&[0, 1])]).unwrap().gcm.rows(), &[vec![2]]);
    }

    #[test]
    fn combo_examples() {
        let sigma = fn2d_sigma();
        assert_eq!(combo_decompose(&sigma, &rv(&[0, 4, 3])), Some(vec![0, 0, 0, 1]));
        assert_eq!(combo_decompose(&[rv(&[1, 0]), rv(&[0, 1])], &rv(&[1, 1])), Some(vec![1, 1]));
        assert_eq!(combo_decompose(&[rv(&[1, 0]), rv(&[0, 1])], &rv(&[-1, -1])), Some(vec![-1, -1]));
        assert_eq!(combo_decompose(&[rv(&[1, 0])], &rv(&[1, 1])), None);
        let k = integer_kernel(&sigma);
        assert_eq!(k.len(), 1);
        let want: Vec<BigInt> = [2, -1, 2, -1].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(k[0], want);
    }

    #[test]
    fn bijection_a2_and_g2_short() {
        let s = a2();
        let all = RootSet::symmetric([rv(&[1, 0]), rv(&[0, 1]), rv(&[1, 1])]);
        let r = verify_bijection(&s, &all, DEFAULT_MAX_GENS).unwrap();
        assert_eq!(r.status, Status::Pass, "{r:?}");
        assert_eq!(r.pi, vec![rv(&[0, 1]), rv(&[1, 0])]);

        let r = verify_bijection(&g2(), &g2_short(), DEFAULT_MAX_GENS).unwrap();
        assert_eq!(r.status, Status::Fail);
        assert!(matches!(r.uniqueness, Uniqueness::NoPiSystemGenerates { .. }), "{r:?}");
    }

    #[test]
    fn bijection_fn2d() {
        let s = slice(&[vec![2, -1, 0], vec![-1, 2, -2], vec![0, -2, 2]], 14);
        let psi = orbit(&s, &fn2d_sigma()).unwrap().set;
        let r = verify_bijection(&s, &psi, DEFAULT_MAX_GENS).unwrap();
        assert_eq!(r.status, Status::Pass, "{r:?}");
        let mut want = fn2d_sigma();
        want.sort();
        assert_eq!(r.pi, want);
    }
}

//! Positive roots up to a height bound, classification, reflections and root
//! strings.
//!
//! Only positive roots are stored; questions about negative vectors are
//! answered by negation.

use std::cmp::Ordering;
use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cartan::{CartanDatum, CartanError, Gcm};

/// Default bound on the number of stored positive roots.
pub const DEFAULT_MAX_ROOTS: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootError {
    #[error(transparent)]
    Cartan(#[from] CartanError),
    #[error("height bound must be at least 1, got {0}")]
    InvalidHeight(i64),
    #[error("root count exceeds the cap of {0}")]
    CapExceeded(usize),
    #[error("answer depends on roots above the height bound {0}")]
    Truncated(i64),
    #[error("{0} is not a root")]
    NotARoot(RootVec),
    #[error("{0} is not a real root")]
    NotReal(RootVec),
    #[error("beta is proportional to alpha; the string is not defined")]
    Proportional,
}

/// Integer coefficient vector over the simple roots.
///
/// Ordered by height first, then lexicographically, which is the canonical
/// output order everywhere in the crate.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootVec(pub Vec<i64>);

impl RootVec {
    pub fn new(c: Vec<i64>) -> Self {
        RootVec(c)
    }

    pub fn zero(n: usize) -> Self {
        RootVec(vec![0; n])
    }

    pub fn simple(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        RootVec(v)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Nonzero with all coefficients `>= 0`.
    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c <= 0)
    }

    pub fn is_uniform_sign(&self) -> bool {
        self.is_positive() || self.is_negative()
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] != 0).collect()
    }

    pub fn scale(&self, k: i64) -> RootVec {
        RootVec(self.0.iter().map(|c| c * k).collect())
    }

    /// `self + k * other`.
    pub fn add_scaled(&self, k: i64, other: &RootVec) -> RootVec {
        RootVec(self.0.iter().zip(&other.0).map(|(a, b)| a + k * b).collect())
    }

    /// The positive one of `self`, `-self` (self if zero).
    pub fn abs(&self) -> RootVec {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// `Some(k)` when `self = k * other` for an integer `k`.
    pub fn multiple_of(&self, other: &RootVec) -> Option<i64> {
        let i = other.0.iter().position(|&c| c != 0)?;
        if self.0[i] % other.0[i] != 0 {
            return None;
        }
        let k = self.0[i] / other.0[i];
        (*self == other.scale(k)).then_some(k)
    }
}

impl Ord for RootVec {
    fn cmp(&self, other: &Self) -> Ordering {
        self.height().cmp(&other.height()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for RootVec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for RootVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for RootVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl Add for &RootVec {
    type Output = RootVec;
    fn add(self, o: &RootVec) -> RootVec {
        RootVec(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RootVec {
    type Output = RootVec;
    fn sub(self, o: &RootVec) -> RootVec {
        RootVec(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &RootVec {
    type Output = RootVec;
    fn neg(self) -> RootVec {
        RootVec(self.0.iter().map(|a| -a).collect())
    }
}

impl From<Vec<i64>> for RootVec {
    fn from(v: Vec<i64>) -> Self {
        RootVec(v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RootClass {
    Real,
    Imaginary,
    NotARoot,
    Unknown,
}

impl RootClass {
    pub fn is_root(self) -> bool {
        matches!(self, RootClass::Real | RootClass::Imaginary)
    }
}

/// Whether the support of `v` is connected in the Coxeter graph.
pub fn support_connected(cd: &CartanDatum, v: &[i64]) -> bool {
    let supp: Vec<usize> = (0..v.len()).filter(|&i| v[i] != 0).collect();
    let Some(&start) = supp.first() else {
        return false;
    };
    let mut seen = vec![start];
    let mut stack = vec![start];
    while let Some(i) = stack.pop() {
        for &j in &supp {
            if !seen.contains(&j) && cd.a(i, j) != 0 {
                seen.push(j);
                stack.push(j);
            }
        }
    }
    seen.len() == supp.len()
}

/// `s_alpha(x) = x - <x, alpha^vee> alpha`.
pub fn reflect(cd: &CartanDatum, alpha: &RootVec, x: &RootVec) -> Result<RootVec, CartanError> {
    let p = cd.pairing(x.coeffs(), alpha.coeffs())?;
    Ok(x.add_scaled(-p, alpha))
}

pub fn reflect_simple(cd: &CartanDatum, i: usize, x: &RootVec) -> RootVec {
    let mut v = x.0.clone();
    v[i] -= cd.simple_pairing(&x.0, i);
    RootVec(v)
}

/// Decides root membership at any height by descent to the fundamental
/// chamber: apply `s_i` whenever `<beta, alpha_i^vee> > 0`. A positive root
/// either reaches a simple root (real) or a vector with all simple pairings
/// `<= 0` and connected support (imaginary); leaving the positive cone or
/// landing elsewhere proves `beta` is not a root. Never returns `Unknown`.
pub fn classify_exact(cd: &CartanDatum, beta: &RootVec) -> RootClass {
    if !beta.is_uniform_sign() || beta.rank() != cd.rank() {
        return RootClass::NotARoot;
    }
    let mut b = beta.abs();
    let n = cd.rank();
    loop {
        let supp = b.support();
        if supp.len() == 1 {
            return if b.0[supp[0]] == 1 { RootClass::Real } else { RootClass::NotARoot };
        }
        match (0..n).find(|&i| cd.simple_pairing(&b.0, i) > 0) {
            Some(i) => {
                b = reflect_simple(cd, i, &b);
                if !b.is_positive() {
                    return RootClass::NotARoot;
                }
            }
            None => {
                return if support_connected(cd, &b.0) { RootClass::Imaginary } else { RootClass::NotARoot };
            }
        }
    }
}

/// All positive roots of height at most `height`, split by norm sign.
#[derive(Debug, Clone)]
pub struct RootSlice {
    cd: CartanDatum,
    height: i64,
    pos_real: BTreeSet<RootVec>,
    pos_imag: BTreeSet<RootVec>,
}

pub fn enumerate(cd: &CartanDatum, height: i64) -> Result<RootSlice, RootError> {
    enumerate_with_cap(cd, height, DEFAULT_MAX_ROOTS)
}

pub fn enumerate_with_cap(cd: &CartanDatum, height: i64, cap: usize) -> Result<RootSlice, RootError> {
    if height < 1 {
        return Err(RootError::InvalidHeight(height));
    }
    let n = cd.rank();
    let simples = (0..n).map(|i| RootVec::simple(n, i));
    let pos_real = ascend(cd, height, simples, cap, 0)?;
    let mut cone = Vec::new();
    scan_cone(cd, height, &mut vec![0; n], 0, height, &mut cone);
    let pos_imag = ascend(cd, height, cone, cap, pos_real.len())?;
    Ok(RootSlice { cd: cd.clone(), height, pos_real, pos_imag })
}

/// Closure of `seeds` under height-increasing simple reflections, pruned at `height`.
fn ascend<I: IntoIterator<Item = RootVec>>(
    cd: &CartanDatum,
    height: i64,
    seeds: I,
    cap: usize,
    already: usize,
) -> Result<BTreeSet<RootVec>, RootError> {
    let mut set = BTreeSet::new();
    let mut queue = VecDeque::new();
    for s in seeds {
        if set.insert(s.clone()) {
            queue.push_back(s);
        }
    }
    while let Some(b) = queue.pop_front() {
        let h = b.height();
        for i in 0..cd.rank() {
            let p = cd.simple_pairing(&b.0, i);
            if p < 0 && h - p <= height {
                let mut c = b.0.clone();
                c[i] -= p;
                let c = RootVec(c);
                if !set.contains(&c) {
                    set.insert(c.clone());
                    if set.len() + already > cap {
                        return Err(RootError::CapExceeded(cap));
                    }
                    queue.push_back(c);
                }
            }
        }
    }
    Ok(set)
}

/// Nonzero vectors of height `<= height` in the fundamental cone with
/// connected support.
fn scan_cone(cd: &CartanDatum, height: i64, cur: &mut Vec<i64>, i: usize, budget: i64, out: &mut Vec<RootVec>) {
    if i == cur.len() {
        if budget < height
            && (0..cur.len()).all(|j| cd.simple_pairing(cur, j) <= 0)
            && support_connected(cd, cur)
        {
            out.push(RootVec(cur.clone()));
        }
        return;
    }
    for c in 0..=budget {
        cur[i] = c;
        scan_cone(cd, height, cur, i + 1, budget - c, out);
    }
    cur[i] = 0;
}

impl RootSlice {
    pub fn cd(&self) -> &CartanDatum {
        &self.cd
    }

    pub fn height_bound(&self) -> i64 {
        self.height
    }

    pub fn rank(&self) -> usize {
        self.cd.rank()
    }

    pub fn pos_real(&self) -> &BTreeSet<RootVec> {
        &self.pos_real
    }

    pub fn pos_imag(&self) -> &BTreeSet<RootVec> {
        &self.pos_imag
    }

    /// Positive roots in canonical order, tagged real (`true`) or imaginary.
    pub fn positive_roots(&self) -> Vec<(RootVec, bool)> {
        let mut v: Vec<(RootVec, bool)> = self
            .pos_real
            .iter()
            .map(|r| (r.clone(), true))
            .chain(self.pos_imag.iter().map(|r| (r.clone(), false)))
            .collect();
        v.sort();
        v
    }

    pub fn len(&self) -> usize {
        self.pos_real.len() + self.pos_imag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Whether `|ht(beta)|` is within the bound.
    pub fn within(&self, beta: &RootVec) -> bool {
        beta.height().abs() <= self.height
    }

    /// Exact when `|ht(beta)| <= H`. Mixed signs, zero and disconnected
    /// support are decided at any height.
    pub fn classify(&self, beta: &RootVec) -> RootClass {
        if beta.rank() != self.rank() || !beta.is_uniform_sign() {
            return RootClass::NotARoot;
        }
        let b = beta.abs();
        if !support_connected(&self.cd, &b.0) {
            return RootClass::NotARoot;
        }
        if b.height() > self.height {
            return RootClass::Unknown;
        }
        if self.pos_real.contains(&b) {
            RootClass::Real
        } else if self.pos_imag.contains(&b) {
            RootClass::Imaginary
        } else {
            RootClass::NotARoot
        }
    }

    pub fn is_real_root(&self, beta: &RootVec) -> bool {
        self.classify(beta) == RootClass::Real
    }

    pub fn root_string(&self, alpha: &RootVec, beta: &RootVec) -> Result<RootString, RootError> {
        match self.classify(alpha) {
            RootClass::Real => {}
            RootClass::Unknown => return Err(RootError::Truncated(self.height)),
            _ => return Err(RootError::NotReal(alpha.clone())),
        }
        match self.classify(beta) {
            RootClass::Real | RootClass::Imaginary => {}
            RootClass::Unknown => return Err(RootError::Truncated(self.height)),
            _ => return Err(RootError::NotARoot(beta.clone())),
        }
        if beta.multiple_of(alpha).is_some() {
            return Err(RootError::Proportional);
        }
        let is_root = |v: &RootVec| match self.classify(v) {
            RootClass::Unknown => Err(RootError::Truncated(self.height)),
            c => Ok(c.is_root()),
        };
        let mut p = 0i64;
        while is_root(&beta.add_scaled(-(p + 1), alpha))? {
            p += 1;
        }
        let q = p - self.cd.pairing_unchecked(&beta.0, &alpha.0)?;
        let mut members = Vec::new();
        let mut real_flags = Vec::new();
        for k in -p..=q {
            let m = beta.add_scaled(k, alpha);
            match self.classify(&m) {
                RootClass::Unknown => return Err(RootError::Truncated(self.height)),
                RootClass::NotARoot => return Err(RootError::NotARoot(m)),
                c => real_flags.push(c == RootClass::Real),
            }
            members.push(m);
        }
        Ok(RootString { alpha: alpha.clone(), beta: beta.clone(), p: p as u64, q: q as u64, members, real_flags })
    }
}

/// The alpha-string through beta, `beta - p alpha, ..., beta + q alpha`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootString {
    pub alpha: RootVec,
    pub beta: RootVec,
    pub p: u64,
    pub q: u64,
    pub members: Vec<RootVec>,
    pub real_flags: Vec<bool>,
}

impl RootString {
    pub fn real_count(&self) -> usize {
        self.real_flags.iter().filter(|&&r| r).count()
    }
}

/// Ordered pairs `(i, j)` with `a_ij = -1` and `a_ji < -1`. When there are
/// none, every root string holds at most two real roots.
pub fn morita_pairs(g: &Gcm) -> Vec<(usize, usize)> {
    let n = g.rank();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && g.entry(i, j) == -1 && g.entry(j, i) < -1 {
                out.push((i, j));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::validate_gcm;

    fn cd(rows: &[Vec<i64>]) -> CartanDatum {
        CartanDatum::from_rows(rows).unwrap()
    }

    fn fn2d() -> CartanDatum {
        cd(&[vec![2, -1, 0], vec![-1, 2, -2], vec![0, -2, 2]])
    }

    fn rv(v: &[i64]) -> RootVec {
        RootVec(v.to_vec())
    }

    #[test]
    fn ordering_is_height_then_lex() {
        let mut v = vec![rv(&[0, 2]), rv(&[1, 0]), rv(&[2, 0]), rv(&[0, 1])];
        v.sort();
        assert_eq!(v, vec![rv(&[0, 1]), rv(&[1, 0]), rv(&[0, 2]), rv(&[2, 0])]);
    }

    #[test]
    fn a2_slice() {
        let s = enumerate(&cd(&[vec![2, -1], vec![-1, 2]]), 2).unwrap();
        let real: Vec<_> = s.pos_real().iter().cloned().collect();
        assert_eq!(real, vec![rv(&[0, 1]), rv(&[1, 0]), rv(&[1, 1])]);
        assert!(s.pos_imag().is_empty());
    }

    #[test]
    fn affine_a1_slice() {
        let s = enumerate(&cd(&[vec![2, -2], vec![-2, 2]]), 6).unwrap();
        let imag: Vec<_> = s.pos_imag().iter().cloned().collect();
        assert_eq!(imag, vec![rv(&[1, 1]), rv(&[2, 2]), rv(&[3, 3])]);
        for r in s.pos_real() {
            assert_eq!((r.0[0] - r.0[1]).abs(), 1);
        }
        assert_eq!(s.pos_real().len(), 6);
    }

    #[test]
    fn classify_examples() {
        let s = enumerate(&fn2d(), 10).unwrap();
        assert_eq!(s.classify(&rv(&[1, 1, 1])), RootClass::Imaginary);
        for i in 0..3 {
            assert_eq!(s.classify(&RootVec::simple(3, i)), RootClass::Real);
            assert_eq!(s.classify(&-&RootVec::simple(3, i)), RootClass::Real);
        }
        assert_eq!(s.classify(&rv(&[1, 1, 3])), RootClass::NotARoot);
        assert_eq!(s.classify(&rv(&[1, -1, 0])), RootClass::NotARoot);
        assert_eq!(s.classify(&rv(&[0, 0, 0])), RootClass::NotARoot);
        assert_eq!(s.classify(&rv(&[5, 5, 5])), RootClass::Unknown);
        assert_eq!(s.classify(&rv(&[20, 0, 1])), RootClass::NotARoot);
    }

    #[test]
    fn classify_exact_agrees_on_examples() {
        let c = fn2d();
        assert_eq!(classify_exact(&c, &rv(&[1, 1, 1])), RootClass::Imaginary);
        assert_eq!(classify_exact(&c, &rv(&[1, 1, 3])), RootClass::NotARoot);
        assert_eq!(classify_exact(&c, &rv(&[2, 2, 3])), RootClass::Real);
        assert_eq!(classify_exact(&c, &rv(&[0, 2, 0])), RootClass::NotARoot);
    }

    #[test]
    fn reflect_examples() {
        let c = cd(&[vec![2, -4], vec![-1, 2]]);
        assert_eq!(reflect(&c, &rv(&[1, 0]), &rv(&[0, 1])).unwrap(), rv(&[4, 1]));
        assert_eq!(reflect(&c, &rv(&[1, 0]), &rv(&[1, 0])).unwrap(), rv(&[-1, 0]));
        let m = cd(&[vec![2, -2, -2], vec![-2, 2, -2], vec![-2, -2, 2]]);
        let a3 = rv(&[0, 0, 1]);
        let s2 = reflect(&m, &rv(&[0, 1, 0]), &a3).unwrap();
        let s1s2 = reflect(&m, &rv(&[1, 0, 0]), &s2).unwrap();
        assert_eq!(s1s2, rv(&[6, 2, 1]));
        assert!(reflect(&fn2d(), &rv(&[1, 1, 1]), &a3).is_err());
    }

    #[test]
    fn string_examples() {
        let s = enumerate(&fn2d(), 10).unwrap();
        let st = s.root_string(&rv(&[0, 0, 1]), &rv(&[1, 1, 0])).unwrap();
        assert_eq!((st.p, st.q), (0, 2));
        assert_eq!(st.members, vec![rv(&[1, 1, 0]), rv(&[1, 1, 1]), rv(&[1, 1, 2])]);
        assert_eq!(st.real_flags, vec![true, false, true]);

        let a2 = enumerate(&cd(&[vec![2, -1], vec![-1, 2]]), 2).unwrap();
        let st = a2.root_string(&rv(&[1, 0]), &rv(&[0, 1])).unwrap();
        assert_eq!((st.p, st.q), (0, 1));
        assert_eq!(st.members, vec![rv(&[0, 1]), rv(&[1, 1])]);
        assert_eq!(a2.root_string(&rv(&[1, 0]), &rv(&[1, 0])), Err(RootError::Proportional));

        // alpha_1 string through delta in A1^(1): {delta - alpha_1, delta, delta + alpha_1}.
        let aff = enumerate(&cd(&[vec![2, -2], vec![-2, 2]]), 6).unwrap();
        let st = aff.root_string(&rv(&[1, 0]), &rv(&[1, 1])).unwrap();
        assert_eq!(st.members, vec![rv(&[0, 1]), rv(&[1, 1]), rv(&[2, 1])]);
        assert_eq!(st.real_flags, vec![true, false, true]);

        let small = enumerate(&fn2d(), 3).unwrap();
        assert_eq!(small.root_string(&rv(&[0, 0, 1]), &rv(&[1, 1, 0])), Err(RootError::Truncated(3)));
    }

    #[test]
    fn morita_examples() {
        let g = |rows: &[Vec<i64>]| validate_gcm(rows).unwrap();
        assert!(morita_pairs(&g(&[vec![2, -1, 0], vec![-1, 2, -2], vec![0, -2, 2]])).is_empty());
        assert_eq!(morita_pairs(&g(&[vec![2, -1], vec![-4, 2]])), vec![(0, 1)]);
        assert!(morita_pairs(&g(&[vec![2, -2], vec![-2, 2]])).is_empty());
    }

    #[test]
    fn cap_is_enforced() {
        let c = cd(&[vec![2, -3], vec![-3, 2]]);
        assert_eq!(enumerate_with_cap(&c, 60, 50).unwrap_err(), RootError::CapExceeded(50));
        assert_eq!(enumerate(&c, 0).unwrap_err(), RootError::InvalidHeight(0));
    }
}

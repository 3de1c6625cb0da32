//! Real closed subroot systems of an untwisted affine root system, presented
//! as finitely many layers `alpha + (f_i(alpha) + k_i Z) delta`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::linalg::{kernel, q, solve, Matrix, Q};
use crate::rootslice::RootVec;

use super::finite::FiniteRootSystem;
use super::maximal::finite_closure;
use super::AffineError;

/// `fin + level * delta`; a root iff `fin` is a root of the finite part, or
/// `fin = 0` and `level != 0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct AffineRoot {
    pub fin: RootVec,
    pub level: i64,
}

impl AffineRoot {
    pub fn new(fin: RootVec, level: i64) -> Self {
        AffineRoot { fin, level }
    }

    pub fn is_real(&self) -> bool {
        !self.fin.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.level > 0 || (self.level == 0 && self.fin.is_positive())
    }

    pub fn neg(&self) -> AffineRoot {
        AffineRoot { fin: -&self.fin, level: -self.level }
    }

    /// `s_self(x)` for a real root `self`.
    pub fn reflect(&self, fr: &FiniteRootSystem, x: &AffineRoot) -> AffineRoot {
        let p = fr.pairing(&x.fin, &self.fin);
        AffineRoot { fin: fr.reflect(&self.fin, &x.fin), level: x.level - p * self.level }
    }
}

impl fmt::Display for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}d", self.fin, self.level)
    }
}

/// A Z-linear function on the roots of a closed subroot system, given by its
/// values on a spanning set and tabulated on every root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZLinearFn {
    base: Vec<RootVec>,
    values: Vec<i64>,
    table: BTreeMap<RootVec, i64>,
}

impl ZLinearFn {
    pub fn new(roots: &BTreeSet<RootVec>, base: Vec<RootVec>, values: Vec<i64>) -> Result<Self, AffineError> {
        if base.len() != values.len() {
            return Err(AffineError::FunctionShape(base.len(), values.len()));
        }
        for b in &base {
            if !roots.contains(b) {
                return Err(AffineError::BaseOutsideComponent(b.clone()));
            }
        }
        let n = roots.iter().next().map_or(0, |r| r.rank());
        // Columns are the base vectors.
        let m: Matrix = (0..n).map(|i| base.iter().map(|b| q(b.coeffs()[i])).collect()).collect();
        for rel in kernel(&m, base.len()) {
            let s = rel.iter().zip(&values).fold(Q::zero(), |acc, (c, &v)| acc + c * q(v));
            if !s.is_zero() {
                return Err(AffineError::NotLinear);
            }
        }
        let mut table = BTreeMap::new();
        for r in roots {
            let rhs: Vec<Q> = r.coeffs().iter().map(|&c| q(c)).collect();
            let c = solve(&m, &rhs).ok_or_else(|| AffineError::BaseDoesNotSpan(r.clone()))?;
            let val = c.iter().zip(&values).fold(Q::zero(), |acc, (c, &v)| acc + c * q(v));
            if !val.is_integer() {
                return Err(AffineError::NotIntegral(r.clone()));
            }
            table.insert(r.clone(), i64::try_from(val.to_integer()).expect("small value"));
        }
        Ok(ZLinearFn { base, values, table })
    }

    pub fn zero(roots: &BTreeSet<RootVec>) -> Self {
        ZLinearFn { base: Vec::new(), values: Vec::new(), table: roots.iter().map(|r| (r.clone(), 0)).collect() }
    }

    pub fn eval(&self, r: &RootVec) -> Option<i64> {
        self.table.get(r).copied()
    }

    pub fn is_zero(&self) -> bool {
        self.table.values().all(|&v| v == 0)
    }

    pub fn base(&self) -> &[RootVec] {
        &self.base
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn max_abs(&self) -> i64 {
        self.table.values().map(|v| v.abs()).max().unwrap_or(0)
    }

    /// Same function on the same roots, ignoring the presentation.
    pub fn same_as(&self, other: &ZLinearFn) -> bool {
        self.table == other.table
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub roots: BTreeSet<RootVec>,
    pub k: i64,
    pub f: ZLinearFn,
}

impl Component {
    /// Whether `alpha + m delta` lies in this layer family.
    pub fn contains(&self, alpha: &RootVec, m: i64) -> bool {
        match self.f.eval(alpha) {
            None => false,
            Some(v) if self.k == 0 => m == v,
            Some(v) => (m - v).rem_euclid(self.k) == 0,
        }
    }
}

/// Unvalidated component data; `roots` may list only one of each `±alpha`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RawComponent {
    pub roots: Vec<RootVec>,
    pub k: i64,
    pub f_base: Vec<RootVec>,
    pub f_values: Vec<i64>,
}

#[derive(Debug, Clone)]
pub struct PeriodicRootSet {
    fr: Arc<FiniteRootSystem>,
    comps: Vec<Component>,
}

impl PartialEq for PeriodicRootSet {
    fn eq(&self, other: &Self) -> bool {
        self.comps == other.comps
    }
}

pub fn validate_periodic(fr: &Arc<FiniteRootSystem>, raw: &[RawComponent]) -> Result<PeriodicRootSet, AffineError> {
    let mut comps = Vec::new();
    let mut union = BTreeSet::new();
    for (i, rc) in raw.iter().enumerate() {
        if rc.k < 0 {
            return Err(AffineError::NegativeK(rc.k));
        }
        let mut roots = BTreeSet::new();
        for r in &rc.roots {
            if r.rank() != fr.rank() || !fr.is_root(r) {
                return Err(AffineError::NotARoot(r.clone()));
            }
            roots.insert(r.clone());
            roots.insert(-r);
        }
        if roots.is_empty() {
            return Err(AffineError::EmptyComponent(i));
        }
        if fr.irreducible_parts(&roots).len() != 1 {
            return Err(AffineError::NotIrreducible);
        }
        for r in &roots {
            if !union.insert(r.clone()) {
                return Err(AffineError::Overlap(r.clone()));
            }
        }
        let f = if rc.f_base.is_empty() && rc.f_values.is_empty() {
            ZLinearFn::zero(&roots)
        } else {
            ZLinearFn::new(&roots, rc.f_base.clone(), rc.f_values.clone())?
        };
        comps.push(Component { roots, k: rc.k, f });
    }
    for (i, a) in comps.iter().enumerate() {
        for b in &comps[i + 1..] {
            if let Some((x, y)) = a.roots.iter().flat_map(|x| b.roots.iter().map(move |y| (x, y))).find(|(x, y)| fr.form(x, y) != 0) {
                return Err(AffineError::NotOrthogonal(x.clone(), y.clone()));
            }
        }
    }
    let closed = finite_closure(fr, &union);
    if let Some(w) = closed.difference(&union).next() {
        return Err(AffineError::NotClosed(w.clone()));
    }
    comps.sort_by(|a, b| a.roots.iter().next().cmp(&b.roots.iter().next()));
    let psi = PeriodicRootSet { fr: fr.clone(), comps };
    psi.check_real_closed()?;
    Ok(psi)
}

impl PeriodicRootSet {
    pub fn finite(&self) -> &FiniteRootSystem {
        &self.fr
    }

    pub fn finite_arc(&self) -> &Arc<FiniteRootSystem> {
        &self.fr
    }

    pub fn components(&self) -> &[Component] {
        &self.comps
    }

    /// `Psi_0`, the union of the finite parts.
    pub fn finite_part(&self) -> BTreeSet<RootVec> {
        self.comps.iter().flat_map(|c| c.roots.iter().cloned()).collect()
    }

    pub fn component_of(&self, alpha: &RootVec) -> Option<usize> {
        self.comps.iter().position(|c| c.roots.contains(alpha))
    }

    pub fn membership(&self, r: &AffineRoot) -> bool {
        r.is_real() && self.comps.iter().any(|c| c.contains(&r.fin, r.level))
    }

    /// Members with `lo <= level <= hi`.
    pub fn members_between(&self, lo: i64, hi: i64) -> Vec<AffineRoot> {
        let mut out = Vec::new();
        for c in &self.comps {
            for a in &c.roots {
                for m in lo..=hi {
                    if c.contains(a, m) {
                        out.push(AffineRoot::new(a.clone(), m));
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// Least common multiple of the non-zero `k_i` (1 if there are none).
    pub fn period(&self) -> i64 {
        self.comps.iter().filter(|c| c.k > 0).fold(1, |l, c| l.lcm(&c.k))
    }

    pub fn max_abs_f(&self) -> i64 {
        self.comps.iter().map(|c| c.f.max_abs()).max().unwrap_or(0)
    }

    /// Sums of two members that are real roots are members again.
    ///
    /// For `alpha` in component `i` and `beta` in component `j` the levels of
    /// `alpha + beta` run over `f_i(alpha) + f_j(beta) + gcd(k_i, k_j) Z`, so one
    /// residue comparison per pair decides the question.
    fn check_real_closed(&self) -> Result<(), AffineError> {
        let fr = &self.fr;
        for ci in &self.comps {
            for cj in &self.comps {
                let g = ci.k.gcd(&cj.k);
                for a in &ci.roots {
                    for b in &cj.roots {
                        let s = a + b;
                        if s.is_zero() || !fr.is_root(&s) {
                            continue;
                        }
                        let base = ci.f.eval(a).unwrap() + cj.f.eval(b).unwrap();
                        let ok = match self.component_of(&s).map(|l| &self.comps[l]) {
                            None => false,
                            Some(cl) => {
                                let fl = cl.f.eval(&s).unwrap();
                                match (g, cl.k) {
                                    (0, 0) => base == fl,
                                    (0, kl) => (base - fl).rem_euclid(kl) == 0,
                                    (_, 0) => false,
                                    (g, kl) => g % kl == 0 && (base - fl).rem_euclid(kl) == 0,
                                }
                            }
                        };
                        if !ok {
                            let span = self.comps.iter().map(|c| c.k).max().unwrap_or(0) + 1;
                            for r in 0..=span {
                                for t in 0..=span {
                                    let x = AffineRoot::new(a.clone(), ci.f.eval(a).unwrap() + ci.k * r);
                                    let y = AffineRoot::new(b.clone(), cj.f.eval(b).unwrap() + cj.k * t);
                                    if !self.membership(&AffineRoot::new(s.clone(), x.level + y.level)) {
                                        return Err(AffineError::NotRealClosed(x, y));
                                    }
                                }
                            }
                            unreachable!("a failing residue always has a witness in one period");
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The canonical generators `Pi(Psi)`, exactly.
    ///
    /// Components are mutually orthogonal, so `Pi` is computed per component.
    /// For `k > 0` a component is an affine root system with null root
    /// `k delta` whose simple roots have positive marks summing to it, so
    /// every generator has level in `0..=k`; for `k = 0` the single level is
    /// `f(alpha)`. A candidate `beta = alpha + m delta` fails only if some
    /// positive member `gamma = beta' + n delta` has negative image
    /// `s_alpha(beta') + (n - <beta', alpha^vee> m) delta`, which forces
    /// `n <= 3m`; so finitely many members decide each candidate.
    pub fn pi_exact(&self) -> Vec<AffineRoot> {
        let fr = &self.fr;
        let mut out = Vec::new();
        for c in &self.comps {
            let mut cands = Vec::new();
            for a in &c.roots {
                let v = c.f.eval(a).unwrap();
                if c.k == 0 {
                    cands.push(AffineRoot::new(a.clone(), v));
                } else {
                    for m in 0..=c.k {
                        if c.contains(a, m) {
                            cands.push(AffineRoot::new(a.clone(), m));
                        }
                    }
                }
            }
            for beta in cands.into_iter().filter(|b| b.is_positive()) {
                let top = 3 * beta.level.max(0);
                let minimal = c.roots.iter().all(|g| {
                    (0..=top).all(|n| {
                        let gamma = AffineRoot::new(g.clone(), n);
                        if gamma == beta || !gamma.is_positive() || !c.contains(g, n) {
                            return true;
                        }
                        beta.reflect(fr, &gamma).is_positive()
                    })
                });
                if minimal {
                    out.push(beta);
                }
            }
        }
        out.sort();
        out
    }

    /// Whether the span of the root-generated subalgebra contains `c`: some
    /// `k_i > 0` (the shorter rule that also counts `k_i = 0` with `f_i != 0` is wrong).
    pub fn contains_c(&self) -> bool {
        self.comps.iter().any(|c| c.k > 0)
    }

    /// The rule "c' = 0 iff every k_i and every f_i vanish".
    pub fn c_prime_by_stated_rule(&self) -> bool {
        self.comps.iter().any(|c| c.k > 0 || !c.f.is_zero())
    }
}

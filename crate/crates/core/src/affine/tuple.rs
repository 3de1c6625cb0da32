//! Data `(Psi_0, k, Lambda, (f_i), (V_x))` of symmetric regular subalgebras
//! inside the derived algebra, the subalgebra they describe, containment, and
//! the maximality classification.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::linalg::{q, q_frac, Q};
use crate::rootslice::RootVec;

use super::finite::FiniteRootSystem;
use super::maximal::{is_maximal_closed, is_prime};
use super::periodic::{validate_periodic, AffineRoot, PeriodicRootSet, RawComponent};
use super::subspace::Subspace;
use super::AffineError;

/// Symmetric subset of `Z \ {0}`: a union of residue classes modulo
/// `modulus`, with finitely many integers added or removed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeriodicIntSet {
    modulus: i64,
    residues: BTreeSet<i64>,
    add: BTreeSet<i64>,
    remove: BTreeSet<i64>,
}

impl PeriodicIntSet {
    pub fn new(
        modulus: i64,
        residues: impl IntoIterator<Item = i64>,
        add: impl IntoIterator<Item = i64>,
        remove: impl IntoIterator<Item = i64>,
    ) -> Result<Self, AffineError> {
        if modulus <= 0 {
            return Err(AffineError::BadModulus(modulus));
        }
        let residues: BTreeSet<i64> = residues.into_iter().map(|r| r.rem_euclid(modulus)).collect();
        let add: BTreeSet<i64> = add.into_iter().collect();
        let remove: BTreeSet<i64> = remove.into_iter().collect();
        if add.contains(&0) {
            return Err(AffineError::LambdaContainsZero);
        }
        for &r in &residues {
            if !residues.contains(&(-r).rem_euclid(modulus)) {
                return Err(AffineError::LambdaNotSymmetric(r));
            }
        }
        for &x in add.iter().chain(&remove) {
            if add.contains(&x) != add.contains(&-x) || remove.contains(&x) != remove.contains(&-x) {
                return Err(AffineError::LambdaNotSymmetric(x));
            }
        }
        Ok(PeriodicIntSet { modulus, residues, add, remove }.canonical())
    }

    pub fn empty() -> Self {
        PeriodicIntSet { modulus: 1, residues: BTreeSet::new(), add: BTreeSet::new(), remove: BTreeSet::new() }
    }

    /// Finite symmetric set `{±x}`.
    pub fn finite(xs: &[i64]) -> Result<Self, AffineError> {
        Self::new(1, [], xs.iter().flat_map(|&x| [x, -x]), [])
    }

    pub fn contains(&self, x: i64) -> bool {
        x != 0 && (self.add.contains(&x) || (self.residues.contains(&x.rem_euclid(self.modulus)) && !self.remove.contains(&x)))
    }

    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    pub fn residues(&self) -> &BTreeSet<i64> {
        &self.residues
    }

    pub fn added(&self) -> &BTreeSet<i64> {
        &self.add
    }

    pub fn removed(&self) -> &BTreeSet<i64> {
        &self.remove
    }

    pub fn is_empty(&self) -> bool {
        self.residues.is_empty() && self.add.is_empty()
    }

    /// Largest `|x|` among the exceptions.
    pub fn exception_bound(&self) -> i64 {
        self.add.iter().chain(&self.remove).map(|x| x.abs()).max().unwrap_or(0)
    }

    /// Smallest period, with redundant exceptions dropped; `0` is never listed.
    fn canonical(mut self) -> Self {
        let l = self.modulus;
        for p in (1..=l).filter(|p| l % p == 0) {
            if self.residues.iter().all(|r| self.residues.contains(&((r + p) % l))) {
                self.residues = self.residues.iter().filter(|&&r| r < p).copied().collect();
                self.modulus = p;
                break;
            }
        }
        let m = self.modulus;
        let in_class = |x: &i64| self.residues.contains(&x.rem_euclid(m));
        let add: BTreeSet<i64> = self.add.iter().filter(|x| !in_class(x)).copied().collect();
        let remove: BTreeSet<i64> = self.remove.iter().filter(|&&x| x != 0 && in_class(&x)).copied().collect();
        self.add = add;
        self.remove = remove;
        self
    }
}

/// Subspaces `V_x`, by residue of `x` modulo `modulus` with finitely many
/// per-level overrides. Unlisted levels get `0`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VAssign {
    pub modulus: i64,
    pub by_residue: BTreeMap<i64, Subspace>,
    pub by_level: BTreeMap<i64, Subspace>,
}

impl VAssign {
    pub fn zero() -> Self {
        VAssign { modulus: 1, ..Default::default() }
    }

    /// The same subspace at every level.
    pub fn constant(v: Subspace) -> Self {
        VAssign { modulus: 1, by_residue: BTreeMap::from([(0, v)]), by_level: BTreeMap::new() }
    }

    pub fn get(&self, x: i64, ambient: usize) -> Subspace {
        if let Some(v) = self.by_level.get(&x) {
            return v.clone();
        }
        self.by_residue.get(&x.rem_euclid(self.modulus.max(1))).cloned().unwrap_or_else(|| Subspace::zero(ambient))
    }

    fn bound(&self) -> i64 {
        self.by_level.keys().map(|x| x.abs()).max().unwrap_or(0)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SymRegTuple {
    psi: PeriodicRootSet,
    lambda: PeriodicIntSet,
    v: VAssign,
}

/// `(bound, period)`: beyond `bound` every level-dependent quantity of a tuple
/// is periodic with period `period`, so `[-bound - 2 period, bound + 2 period]`
/// decides every question about all integers.
fn window(parts: &[(i64, i64)]) -> i64 {
    let bound = parts.iter().map(|p| p.0).max().unwrap_or(0);
    let period = parts.iter().fold(1i64, |l, p| l.lcm(&p.1.max(1)));
    bound + 2 * period
}

pub fn validate_tuple(psi: PeriodicRootSet, lambda: PeriodicIntSet, v: VAssign) -> Result<SymRegTuple, AffineError> {
    let n = psi.finite().rank();
    if v.modulus <= 0 {
        return Err(AffineError::BadModulus(v.modulus));
    }
    for s in v.by_residue.values().chain(v.by_level.values()) {
        if s.ambient() != n {
            return Err(AffineError::VDimension(s.ambient(), n));
        }
    }
    let t = SymRegTuple { psi, lambda, v };
    let w = t.window();
    for c in t.psi.components().iter().filter(|c| c.k > 0) {
        if let Some(x) = (-w..=w).find(|x| t.lambda.contains(*x) && x % c.k == 0) {
            return Err(AffineError::LambdaMeetsK { x, k: c.k });
        }
    }
    let gram = t.psi.finite().coroot_gram();
    let hs: Vec<Subspace> = (0..t.psi.components().len()).map(|i| t.h_component(i)).collect();
    for x in -w..=w {
        let vx = t.v_at(x);
        if !vx.is_zero() {
            let mut inside = Subspace::zero(n);
            for (i, c) in t.psi.components().iter().enumerate() {
                if in_kz(x, c.k) {
                    inside = inside.sum(&hs[i]);
                } else if !hs[i].perp(&gram).contains_space(&vx) {
                    return Err(AffineError::VNotOrthogonal { x, component: i });
                }
            }
            if !vx.intersect(&inside).is_zero() {
                return Err(AffineError::VMeetsCartan { x });
            }
        }
        if x != 0 && t.layer(x).is_zero() != t.layer(-x).is_zero() {
            return Err(AffineError::NotSymmetric(x));
        }
    }
    Ok(t)
}

fn in_kz(x: i64, k: i64) -> bool {
    if k == 0 {
        x == 0
    } else {
        x % k == 0
    }
}

impl SymRegTuple {
    /// Skips every check of [`validate_tuple`]; for exercising the bracket
    /// closure test on data that violates the conditions.
    pub fn unchecked(psi: PeriodicRootSet, lambda: PeriodicIntSet, v: VAssign) -> Self {
        SymRegTuple { psi, lambda, v }
    }

    pub fn psi(&self) -> &PeriodicRootSet {
        &self.psi
    }

    pub fn lambda(&self) -> &PeriodicIntSet {
        &self.lambda
    }

    pub fn v(&self) -> &VAssign {
        &self.v
    }

    pub fn finite(&self) -> &FiniteRootSystem {
        self.psi.finite()
    }

    fn rank(&self) -> usize {
        self.psi.finite().rank()
    }

    fn window_parts(&self) -> Vec<(i64, i64)> {
        vec![
            (self.psi.max_abs_f(), self.psi.period()),
            (self.lambda.exception_bound(), self.lambda.modulus()),
            (self.v.bound(), self.v.modulus),
        ]
    }

    fn window(&self) -> i64 {
        window(&self.window_parts())
    }

    /// `x` lies in `I(k, Lambda)`.
    pub fn in_index_set(&self, x: i64) -> bool {
        x == 0 || self.psi.components().iter().any(|c| in_kz(x, c.k)) || self.lambda.contains(x)
    }

    /// `V_x` for `x` in `I(k, Lambda)`, `0` elsewhere.
    pub fn v_at(&self, x: i64) -> Subspace {
        if self.in_index_set(x) {
            self.v.get(x, self.rank())
        } else {
            Subspace::zero(self.rank())
        }
    }

    /// `h(Psi_i)`: the span of the coroots of component `i`.
    pub fn h_component(&self, i: usize) -> Subspace {
        let fr = self.finite();
        Subspace::span(self.rank(), self.psi.components()[i].roots.iter().map(|a| fr.coroot(a)))
    }

    /// Cartan part at level `x != 0`, as a subspace of `h_0`.
    pub fn layer(&self, x: i64) -> Subspace {
        assert!(x != 0, "level zero carries c; use level_zero");
        let mut s = self.v_at(x);
        for (i, c) in self.psi.components().iter().enumerate() {
            if c.k > 0 && x % c.k == 0 {
                s = s.sum(&self.h_component(i));
            }
        }
        s
    }

    /// Whether `c` lies in the subalgebra: from `[x_a t^m, x_-a t^-m]` at two
    /// different levels `m` (some `k_i > 0`), or from `[h t^x, h' t^-x]` with
    /// `(h, h') != 0`.
    pub fn has_c(&self) -> bool {
        if self.psi.contains_c() {
            return true;
        }
        let gram = self.finite().coroot_gram();
        (1..=self.window()).any(|x| {
            let (a, b) = (self.layer(x), self.layer(-x));
            a.basis().iter().any(|u| !b.perp(&gram).contains(u))
        })
    }

    /// Cartan part at level zero inside `h_0 + Cc` (last coordinate is `c`).
    ///
    /// A component with `k = 0` contributes the graph `{h_a + f(a) 2/(a,a) c}`
    /// rather than `h(Psi_i)` itself.
    pub fn level_zero(&self) -> Subspace {
        let n = self.rank();
        let fr = self.finite();
        let mut vecs: Vec<Vec<Q>> = Vec::new();
        for c in self.psi.components() {
            for a in c.roots.iter().filter(|a| a.is_positive()) {
                let mut h = fr.coroot(a);
                h.push(if c.k == 0 { q_frac(2 * c.f.eval(a).unwrap(), fr.norm(a)) } else { Q::zero() });
                vecs.push(h);
            }
        }
        let mut s = Subspace::span(n + 1, vecs).sum(&self.v_at(0).pad(1));
        if self.has_c() {
            let mut e = vec![Q::zero(); n + 1];
            e[n] = q(1);
            s = s.sum(&Subspace::span(n + 1, [e]));
        }
        s
    }

    /// `Delta(s)` within `|level| <= band`.
    pub fn roots(&self, band: i64) -> TupleRoots {
        let fr = self.finite();
        let mut real = Vec::new();
        for a in fr.roots() {
            for m in -band..=band {
                let r = AffineRoot::new(a.clone(), m);
                if self.psi.membership(&r) {
                    real.push(r);
                }
            }
        }
        real.sort();
        let imaginary = (-band..=band).filter(|&x| x != 0 && !self.layer(x).is_zero()).collect();
        TupleRoots { real, imaginary }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TupleRoots {
    pub real: Vec<AffineRoot>,
    pub imaginary: Vec<i64>,
}

pub fn tuple_roots(t: &SymRegTuple, band: i64) -> TupleRoots {
    t.roots(band)
}

/// `s(t1) ⊆ s(t2)`, decided on one full period past all exceptions.
pub fn tuple_leq(t1: &SymRegTuple, t2: &SymRegTuple) -> bool {
    assert_eq!(t1.finite().cd(), t2.finite().cd(), "tuples over different algebras");
    let mut parts = t1.window_parts();
    parts.extend(t2.window_parts());
    let w = window(&parts);
    for a in t1.finite().roots() {
        for m in -w..=w {
            let r = AffineRoot::new(a.clone(), m);
            if t1.psi.membership(&r) && !t2.psi.membership(&r) {
                return false;
            }
        }
    }
    if (1..=w).flat_map(|x| [x, -x]).any(|x| !t2.layer(x).contains_space(&t1.layer(x))) {
        return false;
    }
    t2.level_zero().contains_space(&t1.level_zero())
}

pub fn tuple_eq(t1: &SymRegTuple, t2: &SymRegTuple) -> bool {
    tuple_leq(t1, t2) && tuple_leq(t2, t1)
}

fn whole(fr: &Arc<FiniteRootSystem>) -> Vec<RootVec> {
    fr.positive().cloned().collect()
}

/// `[g, g]`: `(Delta_0, 1, emptyset, 0, 0)`.
pub fn tuple_derived(fr: &Arc<FiniteRootSystem>) -> Result<SymRegTuple, AffineError> {
    let psi = validate_periodic(fr, &[RawComponent { roots: whole(fr), k: 1, ..Default::default() }])?;
    validate_tuple(psi, PeriodicIntSet::empty(), VAssign::zero())
}

/// `(psi0, 1, emptyset, 0, h(psi0)^perp)`: every level carries all of `h_0`.
///
/// With `psi0` empty there is no `k_i`, so the imaginary levels come from
/// `Lambda = Z \ {0}` instead.
pub fn tuple_proper_gradient(fr: &Arc<FiniteRootSystem>, psi0: &BTreeSet<RootVec>) -> Result<SymRegTuple, AffineError> {
    let raws: Vec<RawComponent> = fr
        .irreducible_parts(psi0)
        .into_iter()
        .map(|p| RawComponent { roots: p.into_iter().filter(|r| r.is_positive()).collect(), k: 1, ..Default::default() })
        .collect();
    let psi = validate_periodic(fr, &raws)?;
    let h = Subspace::span(fr.rank(), psi0.iter().map(|a| fr.coroot(a)));
    let lambda = if psi0.is_empty() { PeriodicIntSet::new(1, [0], [], [])? } else { PeriodicIntSet::empty() };
    validate_tuple(psi, lambda, VAssign::constant(h.perp(&fr.coroot_gram())))
}

/// `(Delta_0, k, emptyset, f, 0)` with `f` given on the simple roots.
pub fn tuple_full_gradient(fr: &Arc<FiniteRootSystem>, k: i64, f_simple: &[i64]) -> Result<SymRegTuple, AffineError> {
    let n = fr.rank();
    let raw = RawComponent {
        roots: whole(fr),
        k,
        f_base: (0..n).map(|i| RootVec::simple(n, i)).collect(),
        f_values: f_simple.to_vec(),
    };
    validate_tuple(validate_periodic(fr, &[raw])?, PeriodicIntSet::empty(), VAssign::zero())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MaximalShape {
    /// `[g, g]`.
    Derived,
    /// `h + sum_r psi0 t^r + sum_{r != 0} h_0 t^r` with `psi0` maximal closed (with `d`).
    ProperGradient,
    /// `s(Delta_0, k, emptyset, f, 0) + Cd` with `k` prime.
    FullGradient,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaximalVerdict {
    pub maximal: bool,
    pub shape: Option<MaximalShape>,
    pub reason: String,
}

fn verdict(maximal: bool, shape: Option<MaximalShape>, reason: impl Into<String>) -> MaximalVerdict {
    MaximalVerdict { maximal, shape, reason: reason.into() }
}

/// Whether `s(t)` (plus `Cd` when `with_d`) is a maximal proper symmetric
/// regular subalgebra, by matching it against the three maximal shapes.
pub fn is_maximal_tuple(t: &SymRegTuple, with_d: bool) -> Result<MaximalVerdict, AffineError> {
    let fr = t.psi.finite_arc().clone();
    if !fr.is_irreducible() {
        return Err(AffineError::NotIrreducible);
    }
    let derived = tuple_derived(&fr)?;
    let is_derived = tuple_eq(t, &derived);
    if !with_d {
        return Ok(if is_derived {
            verdict(true, Some(MaximalShape::Derived), "equals [g,g]")
        } else {
            verdict(false, None, "contained in the same data with d added")
        });
    }
    if is_derived {
        return Ok(verdict(false, None, "with d this is all of g, not proper"));
    }
    let psi0 = t.psi.finite_part();
    if psi0 == *fr.root_set() {
        let c = &t.psi.components()[0];
        if c.k == 0 {
            return Ok(verdict(false, None, "k = 0: below the full-gradient datum for any prime k"));
        }
        if !is_prime(c.k) {
            return Ok(verdict(false, None, format!("k = {} is not prime: below the datum for a prime divisor", c.k)));
        }
        let n = fr.rank();
        let f: Vec<i64> = (0..n).map(|i| c.f.eval(&RootVec::simple(n, i)).unwrap()).collect();
        return Ok(if tuple_eq(t, &tuple_full_gradient(&fr, c.k, &f)?) {
            verdict(true, Some(MaximalShape::FullGradient), format!("full gradient with prime k = {}", c.k))
        } else {
            verdict(false, None, "imaginary part differs from the full-gradient datum")
        });
    }
    if !is_maximal_closed(&fr, &psi0)? {
        return Ok(verdict(false, None, "finite part is not a maximal closed subroot system"));
    }
    Ok(if tuple_eq(t, &tuple_proper_gradient(&fr, &psi0)?) {
        verdict(true, Some(MaximalShape::ProperGradient), "proper gradient over a maximal closed subroot system")
    } else {
        verdict(false, None, "below the proper-gradient datum over the same finite part")
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::finite::build_finite;
    use crate::cartan::{finite_type, symmetrize};

    fn fr(name: &str) -> Arc<FiniteRootSystem> {
        Arc::new(build_finite(&symmetrize(&finite_type(name).unwrap()).unwrap()).unwrap())
    }

    fn rv(v: &[i64]) -> RootVec {
        RootVec(v.to_vec())
    }

    fn qv(x: &[i64]) -> Vec<Q> {
        x.iter().map(|&a| q(a)).collect()
    }

    fn single(fr: &Arc<FiniteRootSystem>, roots: Vec<RootVec>, k: i64) -> PeriodicRootSet {
        validate_periodic(fr, &[RawComponent { roots, k, ..Default::default() }]).unwrap()
    }

    /// Psi_0 = {±alpha1} in A3, k = 0, Lambda = {±1}, V_{±1} spanned by a
    /// coroot-coordinate vector killed by alpha1.
    fn string_gap(h: &[i64]) -> Result<SymRegTuple, AffineError> {
        let a3 = fr("A3");
        let psi = single(&a3, vec![rv(&[1, 0, 0])], 0);
        let v = Subspace::span(3, [qv(h)]);
        let va = VAssign { modulus: 1, by_residue: BTreeMap::new(), by_level: BTreeMap::from([(1, v.clone()), (-1, v)]) };
        validate_tuple(psi, PeriodicIntSet::finite(&[1]).unwrap(), va)
    }

    #[test]
    fn int_set_basics() {
        let odd = PeriodicIntSet::new(4, [1, 3], [], []).unwrap();
        assert_eq!(odd.modulus(), 2);
        assert!(odd.contains(-3) && !odd.contains(2) && !odd.contains(0));
        assert!(matches!(PeriodicIntSet::new(1, [], [2], []), Err(AffineError::LambdaNotSymmetric(2))));
        assert!(PeriodicIntSet::new(3, [1], [], []).is_err());
        let all = PeriodicIntSet::new(1, [0], [], []).unwrap();
        assert!(all.contains(5) && !all.contains(0));
    }

    #[test]
    fn string_gap_tuple() {
        // alpha1(h) = 2 h1 - h2: h = (1, 2, 3) is killed by alpha1.
        let t = string_gap(&[1, 2, 3]).unwrap();
        let r = t.roots(2);
        assert_eq!(r.real, vec![AffineRoot::new(rv(&[-1, 0, 0]), 0), AffineRoot::new(rv(&[1, 0, 0]), 0)]);
        assert_eq!(r.imaginary, vec![-1, 1]);
        assert!(t.has_c());
        assert!(matches!(string_gap(&[1, 0, 0]), Err(AffineError::VNotOrthogonal { .. })));
    }

    #[test]
    fn lambda_must_avoid_k_multiples() {
        let a2 = fr("A2");
        let psi = single(&a2, vec![rv(&[1, 0])], 2);
        let lam = PeriodicIntSet::finite(&[4]).unwrap();
        assert!(matches!(validate_tuple(psi, lam, VAssign::zero()), Err(AffineError::LambdaMeetsK { k: 2, .. })));
    }

    #[test]
    fn roots_of_standard_tuples() {
        let a2 = fr("A2");
        let d = tuple_derived(&a2).unwrap().roots(2);
        assert_eq!(d.real.len(), 6 * 5);
        assert_eq!(d.imaginary, vec![-2, -1, 1, 2]);
        let e = tuple_full_gradient(&a2, 2, &[0, 0]).unwrap().roots(3);
        assert!(e.real.iter().all(|r| r.level % 2 == 0));
        assert_eq!(e.imaginary, vec![-2, 2]);
    }

    #[test]
    fn containment() {
        let a2 = fr("A2");
        let g = tuple_derived(&a2).unwrap();
        let k2 = tuple_full_gradient(&a2, 2, &[1, 0]).unwrap();
        let k4 = tuple_full_gradient(&a2, 4, &[1, 0]).unwrap();
        let k4_other = tuple_full_gradient(&a2, 4, &[0, 0]).unwrap();
        assert!(tuple_leq(&k2, &g) && tuple_leq(&k4, &g) && !tuple_leq(&g, &k2));
        assert!(tuple_leq(&k4, &k2));
        assert!(!tuple_leq(&k4_other, &k2));
        let t1 = tuple_proper_gradient(&a2, &[rv(&[1, 0]), rv(&[-1, 0])].into()).unwrap();
        let t2 = tuple_proper_gradient(&a2, &[rv(&[1, 1]), rv(&[-1, -1])].into()).unwrap();
        assert!(!tuple_leq(&t1, &t2) && !tuple_leq(&t2, &t1));
    }

    #[test]
    fn maximality_examples() {
        let a2 = fr("A2");
        let g = tuple_derived(&a2).unwrap();
        assert_eq!(is_maximal_tuple(&g, false).unwrap().shape, Some(MaximalShape::Derived));
        assert!(!is_maximal_tuple(&g, true).unwrap().maximal);
        let theta: BTreeSet<RootVec> = [rv(&[1, 1]), rv(&[-1, -1])].into();
        let t = tuple_proper_gradient(&a2, &theta).unwrap();
        assert_eq!(is_maximal_tuple(&t, true).unwrap().shape, Some(MaximalShape::ProperGradient));
        assert!(!is_maximal_tuple(&t, false).unwrap().maximal);
        let k2 = tuple_full_gradient(&a2, 2, &[0, 1]).unwrap();
        assert_eq!(is_maximal_tuple(&k2, true).unwrap().shape, Some(MaximalShape::FullGradient));
        let k4 = tuple_full_gradient(&a2, 4, &[0, 1]).unwrap();
        assert!(!is_maximal_tuple(&k4, true).unwrap().maximal);
        // Same finite part, imaginary levels only at even x: strictly smaller.
        let psi = single(&a2, vec![rv(&[1, 1])], 1);
        let h = Subspace::span(2, [a2.coroot(&rv(&[1, 1]))]).perp(&a2.coroot_gram());
        let va = VAssign { modulus: 2, by_residue: BTreeMap::from([(0, h)]), by_level: BTreeMap::new() };
        let small = validate_tuple(psi, PeriodicIntSet::empty(), va).unwrap();
        assert!(tuple_leq(&small, &t) && !tuple_leq(&t, &small));
        assert!(!is_maximal_tuple(&small, true).unwrap().maximal);
    }

    #[test]
    fn heisenberg_in_rank_one_is_maximal() {
        let a1 = fr("A1");
        let t = tuple_proper_gradient(&a1, &BTreeSet::new()).unwrap();
        assert_eq!(t.roots(2).imaginary, vec![-2, -1, 1, 2]);
        assert!(t.roots(2).real.is_empty());
        assert_eq!(is_maximal_tuple(&t, true).unwrap().shape, Some(MaximalShape::ProperGradient));
    }
}

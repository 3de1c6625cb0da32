//! Computational checks of root-generated subalgebras, of the root-string
//! properties of symmetric regular subalgebras, and of tuple subalgebras.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::affine::finite::FiniteRootSystem;
use crate::affine::periodic::{AffineRoot, PeriodicRootSet};
use crate::affine::tuple::SymRegTuple;
use crate::linalg::{q_frac, Echelon};
use crate::rootslice::RootVec;

use super::chevalley::ChevalleyBasis;
use super::element::{Key, LoopElement};
use super::generate::{generate, slice_from_spans, SubalgebraSlice, BAND_CAVEAT};
use super::LoopError;

fn same_system(cb: &ChevalleyBasis, fr: &FiniteRootSystem) -> Result<(), LoopError> {
    if cb.finite().cd().gcm() != fr.cd().gcm() {
        return Err(LoopError::Mismatch);
    }
    Ok(())
}

pub fn is_affine_root(fr: &FiniteRootSystem, r: &AffineRoot) -> bool {
    if r.fin.is_zero() {
        r.level != 0
    } else {
        fr.is_root(&r.fin)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BracketWitness {
    pub left: String,
    pub right: String,
    pub result: String,
}

/// First failure of `[a, b] in target` over `a in left`, `b in right`,
/// preferring pairs of small total degree. Products outside the band are
/// skipped. Returns the witness and the number of pairs checked.
pub fn closure_witness(
    cb: &ChevalleyBasis,
    left: &[LoopElement],
    right: &[LoopElement],
    target: &SubalgebraSlice,
) -> (Option<BracketWitness>, usize) {
    let band = target.band();
    let mut best: Option<(i64, BracketWitness)> = None;
    let mut checked = 0;
    for a in left {
        for b in right {
            let z = cb.bracket(a, b);
            if z.is_zero() || z.degree() > band {
                continue;
            }
            checked += 1;
            if !target.contains(&z) {
                let cost = a.degree() + b.degree();
                if best.as_ref().is_none_or(|(c, _)| cost < *c) {
                    best = Some((cost, BracketWitness { left: a.to_string(), right: b.to_string(), result: z.to_string() }));
                }
            }
        }
    }
    (best.map(|b| b.1), checked)
}

#[derive(Debug, Clone, Serialize)]
pub struct RootGenReport {
    pub pass: bool,
    pub band: i64,
    pub dim: usize,
    pub real_missing: Vec<AffineRoot>,
    pub real_unexpected: Vec<AffineRoot>,
    pub layer_mismatch: Vec<i64>,
    pub c_present: bool,
    pub c_expected: bool,
    pub c_by_stated_rule: bool,
    pub c_prime_rule_agrees: bool,
    /// Whether level zero equals `sum_i h(Psi_i) + Cc'` with the stated c' rule.
    pub stated_level_zero_agrees: bool,
    pub saturated: bool,
    pub caveat: &'static str,
}

/// Generators `x_a t^m` of `g(Psi)` for every real root of `Psi` in the band.
pub fn root_generators(psi: &PeriodicRootSet, band: i64) -> Vec<LoopElement> {
    psi.members_between(-band, band).iter().map(|r| LoopElement::x(&r.fin, r.level)).collect()
}

/// The Cartan part of `g(Psi)` at each level, in closed form.
pub fn expected_layers(cb: &ChevalleyBasis, psi: &PeriodicRootSet, band: i64) -> BTreeMap<i64, Echelon<Key>> {
    let fr = psi.finite();
    let mut out: BTreeMap<i64, Echelon<Key>> = BTreeMap::new();
    for x in -band..=band {
        let mut e = Echelon::new();
        for c in psi.components() {
            for a in c.roots.iter().filter(|a| a.is_positive()) {
                if x == 0 {
                    let mut v = LoopElement::cartan(cb.coroot(a), 0);
                    if c.k == 0 {
                        v.axpy(&q_frac(2 * c.f.eval(a).expect("a in component"), fr.norm(a)), &LoopElement::c());
                    }
                    e.insert(v.0);
                } else if c.k > 0 && x % c.k == 0 {
                    e.insert(LoopElement::cartan(cb.coroot(a), x).0);
                }
            }
        }
        if x == 0 && psi.contains_c() {
            e.insert(LoopElement::c().0);
        }
        if !e.is_empty() {
            out.insert(x, e);
        }
    }
    out
}

fn stated_level_zero(cb: &ChevalleyBasis, psi: &PeriodicRootSet) -> Echelon<Key> {
    let mut e = Echelon::new();
    for c in psi.components() {
        for a in c.roots.iter().filter(|a| a.is_positive()) {
            e.insert(LoopElement::cartan(cb.coroot(a), 0).0);
        }
    }
    if psi.c_prime_by_stated_rule() {
        e.insert(LoopElement::c().0);
    }
    e
}

pub fn verify_root_generated(cb: &ChevalleyBasis, psi: &PeriodicRootSet, band: i64) -> Result<RootGenReport, LoopError> {
    same_system(cb, psi.finite())?;
    let s = generate(cb, &root_generators(psi, band), band)?;
    let sup = s.root_support();
    let expected: Vec<AffineRoot> = psi.members_between(-band, band);
    let real_missing: Vec<AffineRoot> = expected.iter().filter(|r| !sup.real.contains(*r)).cloned().collect();
    let real_unexpected: Vec<AffineRoot> = sup.real.iter().filter(|r| !psi.membership(r)).cloned().collect();
    let layers = expected_layers(cb, psi, band);
    let n = cb.rank();
    let empty = Echelon::new();
    let mut layer_mismatch = Vec::new();
    for x in -band..=band {
        let got = s.span(&AffineRoot::new(RootVec::zero(n), x)).unwrap_or(&empty);
        let want = layers.get(&x).unwrap_or(&empty);
        if !(got.contains_space(want) && want.contains_space(got)) {
            layer_mismatch.push(x);
        }
    }
    let zero = s.span(&s.zero_weight()).cloned().unwrap_or_default();
    let c_present = zero.contains(&LoopElement::c().0);
    let stated = stated_level_zero(cb, psi);
    let c_by_stated_rule = psi.c_prime_by_stated_rule();
    let pass = real_missing.is_empty() && real_unexpected.is_empty() && layer_mismatch.is_empty() && c_present == psi.contains_c();
    Ok(RootGenReport {
        pass,
        band,
        dim: s.dim(),
        real_missing,
        real_unexpected,
        layer_mismatch,
        c_present,
        c_expected: psi.contains_c(),
        c_by_stated_rule,
        c_prime_rule_agrees: c_by_stated_rule == c_present,
        stated_level_zero_agrees: stated.contains_space(&zero) && zero.contains_space(&stated),
        saturated: s.saturated(),
        caveat: BAND_CAVEAT,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct KeypropReport {
    pub pass: bool,
    pub symmetric: bool,
    pub pairs_checked: usize,
    pub skipped_out_of_band: usize,
    pub violations: Vec<String>,
    pub sumroot_checked: usize,
    pub sumroot_violations: Vec<String>,
    /// `S(a, b)` for real `a` and imaginary `b` in `Delta(s)` that leave
    /// `Delta(s)`; allowed, since the string property needs `b` real.
    pub imaginary_string_gaps: Vec<String>,
    pub caveat: &'static str,
}

/// The `a`-string through `b`, or `None` if it leaves the band.
pub fn affine_string(fr: &FiniteRootSystem, a: &AffineRoot, b: &AffineRoot, band: i64) -> Option<Vec<AffineRoot>> {
    let step = |j: i64| AffineRoot::new(b.fin.add_scaled(j, &a.fin), b.level + j * a.level);
    let mut out = vec![b.clone()];
    for dir in [-1i64, 1] {
        let mut j = dir;
        loop {
            let r = step(j);
            if !is_affine_root(fr, &r) {
                break;
            }
            if r.level.abs() > band {
                return None;
            }
            out.push(r);
            j += dir;
        }
    }
    out.sort();
    Some(out)
}

pub fn verify_keyprop(cb: &ChevalleyBasis, s: &SubalgebraSlice) -> KeypropReport {
    let fr = cb.finite();
    let band = s.band();
    let sup = s.root_support();
    let mut violations = Vec::new();
    let mut gaps = Vec::new();
    let mut sumroot_violations = Vec::new();
    let (mut pairs, mut skipped, mut sumroot_checked) = (0, 0, 0);
    let in_band = |r: &AffineRoot| r.level.abs() <= band;
    for a in &sup.real {
        for b in &sup.real {
            pairs += 1;
            let sum = AffineRoot::new(&a.fin + &b.fin, a.level + b.level);
            if is_affine_root(fr, &sum) && in_band(&sum) && !sup.contains(&sum) {
                violations.push(format!("sum {a} + {b} = {sum} missing"));
            }
            let refl = a.reflect(fr, b);
            if in_band(&refl) && !sup.contains(&refl) {
                violations.push(format!("reflection s_{a}({b}) = {refl} missing"));
            }
            match affine_string(fr, a, b, band) {
                Some(st) => {
                    if let Some(m) = st.iter().find(|r| !sup.contains(r)) {
                        violations.push(format!("string S({a}, {b}) misses {m}"));
                    }
                }
                None => skipped += 1,
            }
        }
        for b in sup.all() {
            if !b.fin.is_zero() {
                continue;
            }
            if let Some(st) = affine_string(fr, a, &b, band) {
                if let Some(m) = st.iter().find(|r| !sup.contains(r)) {
                    gaps.push(format!("S({a}, {b}) misses {m}"));
                }
            }
        }
        // [s_a, s_b] != 0 iff a + b in Delta(s)
        for b in sup.all() {
            let sum = AffineRoot::new(&a.fin + &b.fin, a.level + b.level);
            if (sum.fin.is_zero() && sum.level == 0) || !in_band(&sum) {
                continue;
            }
            sumroot_checked += 1;
            let nonzero = s.basis_of(a).iter().any(|x| s.basis_of(&b).iter().any(|y| !cb.bracket(x, y).is_zero()));
            if nonzero != sup.contains(&sum) {
                sumroot_violations.push(format!("[s_{a}, s_{b}] {} but {sum} {}", if nonzero { "!= 0" } else { "= 0" }, if sup.contains(&sum) { "in Delta(s)" } else { "not in Delta(s)" }));
            }
        }
    }
    KeypropReport {
        pass: violations.is_empty() && sumroot_violations.is_empty(),
        symmetric: sup.is_symmetric(),
        pairs_checked: pairs,
        skipped_out_of_band: skipped,
        violations,
        sumroot_checked,
        sumroot_violations,
        imaginary_string_gaps: gaps,
        caveat: BAND_CAVEAT,
    }
}

/// The space `g(Psi) + sum_x V_x t^x` (plus `Cd` if asked) within the band.
pub fn assemble_tuple(cb: &ChevalleyBasis, t: &SymRegTuple, band: i64, with_d: bool) -> Result<SubalgebraSlice, LoopError> {
    same_system(cb, t.finite())?;
    let n = cb.rank();
    let mut spans: BTreeMap<AffineRoot, Echelon<Key>> = BTreeMap::new();
    for r in t.roots(band).real {
        spans.entry(r.clone()).or_default().insert(LoopElement::x(&r.fin, r.level).0);
    }
    for x in -band..=band {
        let w = AffineRoot::new(RootVec::zero(n), x);
        let mut e = Echelon::new();
        if x == 0 {
            for v in t.level_zero().basis() {
                let mut el = LoopElement::cartan(&v[..n], 0);
                el.axpy(&v[n], &LoopElement::c());
                e.insert(el.0);
            }
            if with_d {
                e.insert(LoopElement::d().0);
            }
        } else {
            for v in t.layer(x).basis() {
                e.insert(LoopElement::cartan(v, x).0);
            }
        }
        if !e.is_empty() {
            spans.insert(w, e);
        }
    }
    Ok(slice_from_spans(n, band, spans))
}

#[derive(Debug, Clone, Serialize)]
pub struct TupleSubalgReport {
    pub pass: bool,
    pub dim: usize,
    pub symmetric: bool,
    pub pairs_checked: usize,
    pub witness: Option<BracketWitness>,
    pub caveat: &'static str,
}

pub fn verify_tuple_subalgebra(cb: &ChevalleyBasis, t: &SymRegTuple, band: i64, with_d: bool) -> Result<TupleSubalgReport, LoopError> {
    let s = assemble_tuple(cb, t, band, with_d)?;
    let basis = s.basis();
    let (witness, checked) = closure_witness(cb, &basis, &basis, &s);
    let symmetric = s.root_support().is_symmetric();
    Ok(TupleSubalgReport { pass: witness.is_none() && symmetric, dim: s.dim(), symmetric, pairs_checked: checked, witness, caveat: BAND_CAVEAT })
}

/// Whether every element of `sub` is in `sup`.
pub fn slice_contains(sup: &SubalgebraSlice, sub: &SubalgebraSlice) -> bool {
    sub.basis().iter().all(|e| sup.contains(e))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use num_traits::Zero;

    use super::*;
    use crate::affine::finite::build_finite;
    use crate::affine::periodic::{validate_periodic, RawComponent};
    use crate::affine::subspace::Subspace;
    use crate::affine::tuple::{tuple_derived, validate_tuple, PeriodicIntSet, VAssign};
    use crate::cartan::{finite_type, symmetrize};
    use crate::linalg::q;

    fn fr(name: &str) -> Arc<FiniteRootSystem> {
        Arc::new(build_finite(&symmetrize(&finite_type(name).unwrap()).unwrap()).unwrap())
    }

    fn comp(roots: &[&[i64]], k: i64, f: &[(&[i64], i64)]) -> RawComponent {
        RawComponent {
            roots: roots.iter().map(|r| RootVec(r.to_vec())).collect(),
            k,
            f_base: f.iter().map(|(r, _)| RootVec(r.to_vec())).collect(),
            f_values: f.iter().map(|(_, v)| *v).collect(),
        }
    }

    #[test]
    fn a1_finite_sl2() {
        let f = fr("A1");
        let cb = ChevalleyBasis::new(f.clone()).unwrap();
        let psi = validate_periodic(&f, &[comp(&[&[1]], 0, &[])]).unwrap();
        let r = verify_root_generated(&cb, &psi, 6).unwrap();
        assert!(r.pass, "{r:?}");
        assert!(!r.c_present && r.c_prime_rule_agrees && r.stated_level_zero_agrees);
        assert_eq!(r.dim, 3);
    }

    #[test]
    fn a2_level_two() {
        let f = fr("A2");
        let cb = ChevalleyBasis::new(f.clone()).unwrap();
        let psi = validate_periodic(&f, &[comp(&[&[1, 0], &[0, 1], &[1, 1]], 2, &[])]).unwrap();
        let r = verify_root_generated(&cb, &psi, 6).unwrap();
        assert!(r.pass, "{r:?}");
        assert!(r.c_present);
    }

    #[test]
    fn k_zero_with_shift_drops_c() {
        let f = fr("A1");
        let cb = ChevalleyBasis::new(f.clone()).unwrap();
        let psi = validate_periodic(&f, &[comp(&[&[1]], 0, &[(&[1], 1)])]).unwrap();
        let r = verify_root_generated(&cb, &psi, 6).unwrap();
        assert!(r.pass, "{r:?}");
        assert!(!r.c_present);
        assert!(r.c_by_stated_rule);
        assert!(!r.c_prime_rule_agrees);
        assert!(!r.stated_level_zero_agrees);
    }

    #[test]
    fn keyprop_and_imaginary_string_gap() {
        let f = fr("A2");
        let cb = ChevalleyBasis::new(f.clone()).unwrap();
        let psi = validate_periodic(&f, &[comp(&[&[1, 0], &[0, 1], &[1, 1]], 2, &[(&[1, 0], 1), (&[0, 1], 0)])]).unwrap();
        let s = generate(&cb, &root_generators(&psi, 5), 5).unwrap();
        let r = verify_keyprop(&cb, &s);
        assert!(r.pass && r.symmetric, "{r:?}");

        // x_{+-a}, a^vee, h t^{+-1}, c with a(h) = 0
        let a = RootVec(vec![1, 0]);
        let h = vec![q(1), q(2)];
        assert!(f.eval(&a, &h).is_zero());
        let gens = [LoopElement::x(&a, 0), LoopElement::x(&-&a, 0), LoopElement::cartan(&h, 1), LoopElement::cartan(&h, -1)];
        let s = generate(&cb, &gens, 3).unwrap();
        let sup = s.root_support();
        assert_eq!(sup.imaginary, [-1, 1].into_iter().collect());
        assert!(s.contains(&LoopElement::c()));
        let r = verify_keyprop(&cb, &s);
        assert!(r.pass, "{r:?}");
        assert!(!r.imaginary_string_gaps.is_empty());
    }

    #[test]
    fn tuple_subalgebra_checks() {
        let f = fr("A1");
        let cb = ChevalleyBasis::new(f.clone()).unwrap();
        let t = tuple_derived(&f).unwrap();
        let r = verify_tuple_subalgebra(&cb, &t, 4, false).unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.dim, 3 * 9 + 1);

        let a2 = fr("A2");
        let cb2 = ChevalleyBasis::new(a2.clone()).unwrap();
        let psi = validate_periodic(&a2, &[comp(&[&[1, 0]], 0, &[])]).unwrap();
        let v = VAssign::constant(Subspace::span(2, [vec![q(1), q(2)]]));
        let lam = PeriodicIntSet::finite(&[1]).unwrap();
        let t = validate_tuple(psi.clone(), lam.clone(), v).unwrap();
        let r = verify_tuple_subalgebra(&cb2, &t, 4, false).unwrap();
        assert!(r.pass, "{r:?}");

        // alpha(v) != 0 at level 1
        let bad = SymRegTuple::unchecked(psi, lam, VAssign::constant(Subspace::span(2, [vec![q(1), q(0)]])));
        let r = verify_tuple_subalgebra(&cb2, &bad, 4, false).unwrap();
        assert!(!r.pass);
        assert!(r.witness.is_some());
    }
}

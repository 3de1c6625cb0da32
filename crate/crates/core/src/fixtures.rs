//! Worked examples rerun by `kmroots verify-paper-examples`.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::Serialize;

use crate::affine::finite::FiniteRootSystem;
use crate::affine::periodic::{validate_periodic, AffineRoot, RawComponent};
use crate::affine::subspace::Subspace;
use crate::affine::tuple::{
    is_maximal_tuple, tuple_derived, tuple_full_gradient, tuple_proper_gradient, validate_tuple, MaximalShape,
    PeriodicIntSet, SymRegTuple, VAssign,
};
use crate::affine::maximal::maximal_closed;
use crate::cartan::CartanDatum;
use crate::io::finite_system;
use crate::linalg::q;
use crate::loopalg::verify::{assemble_tuple, root_generators};
use crate::loopalg::{generate, split_sym_special, verify_keyprop, verify_root_generated, verify_tuple_subalgebra, ChevalleyBasis, LoopElement};
use crate::rootslice::{enumerate, RootVec};
use crate::subroot::{b_sigma, integer_kernel, orbit, pi_system_check, verify_bijection, PiVerdict, RootSet, Uniqueness, DEFAULT_MAX_GENS};

#[derive(Debug, Clone, Serialize)]
pub struct FixtureResult {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

type Check = Result<(bool, String), String>;

fn rv(v: &[i64]) -> RootVec {
    RootVec(v.to_vec())
}

fn cd(rows: &[Vec<i64>]) -> Result<CartanDatum, String> {
    CartanDatum::from_rows(rows).map_err(|e| e.to_string())
}

fn fin(name: &str) -> Result<Arc<FiniteRootSystem>, String> {
    finite_system(name).map_err(|e| e.to_string())
}

fn comp(roots: &[&[i64]], k: i64, f: &[(&[i64], i64)]) -> RawComponent {
    RawComponent {
        roots: roots.iter().map(|r| rv(r)).collect(),
        k,
        f_base: f.iter().map(|(r, _)| rv(r)).collect(),
        f_values: f.iter().map(|(_, v)| *v).collect(),
    }
}

/// Positive real roots of `[[2,-4],[-1,2]]` up to `height`, from the closed form.
pub fn rank2_closed_form(height: i64) -> BTreeSet<RootVec> {
    let mut out = BTreeSet::new();
    for j in 0..=height {
        let pair = if j % 2 == 0 { [[2 * j, j + 1], [j + 1, j / 2]] } else { [[j, (j + 1) / 2], [2 * (j + 1), j]] };
        for c in pair {
            if c[0] + c[1] <= height && c[0] + c[1] > 0 {
                out.insert(rv(&c));
            }
        }
    }
    out
}

pub fn fibonacci(n: usize) -> Vec<i64> {
    let mut f = vec![0i64, 1];
    while f.len() <= n {
        let k = f.len();
        f.push(f[k - 1] + f[k - 2]);
    }
    f
}

/// `(beta_1^j, beta_2^j)` for the Fibonacci system.
pub fn fibonacci_pair(j: usize) -> (RootVec, RootVec) {
    let f = fibonacci(2 * j + 2);
    (rv(&[f[2 * j], f[2 * j + 2]]), rv(&[f[2 * j + 2], f[2 * j]]))
}

/// `gamma_k` in the rank-3 matrix with all off-diagonal entries `-2`.
pub fn all_minus_two_gamma(k: i64) -> RootVec {
    rv(&[2 * k * (2 * k + 1), 2 * k * (2 * k - 1), 1])
}

pub const FN2D: [[i64; 3]; 3] = [[2, -1, 0], [-1, 2, -2], [0, -2, 2]];

pub fn fn2d_sigma() -> Vec<RootVec> {
    vec![rv(&[1, 1, 0]), rv(&[2, 2, 3]), rv(&[0, 2, 3]), rv(&[0, 4, 3])]
}

/// Periodic root sets whose root-generated subalgebras are checked against the
/// explicit description.
pub fn periodic_fixtures() -> Vec<(&'static str, &'static str, Vec<RawComponent>)> {
    vec![
        ("A1 sl2", "A1", vec![comp(&[&[1]], 0, &[])]),
        ("A1 k=3 f=1", "A1", vec![comp(&[&[1]], 3, &[(&[1], 1)])]),
        ("A1 k=2 f=1", "A1", vec![comp(&[&[1]], 2, &[(&[1], 1)])]),
        ("A2 full k=1", "A2", vec![comp(&[&[1, 0], &[0, 1], &[1, 1]], 1, &[])]),
        ("A2 full k=2", "A2", vec![comp(&[&[1, 0], &[0, 1], &[1, 1]], 2, &[])]),
        ("A2 full k=3 f=(1,2)", "A2", vec![comp(&[&[1, 0], &[0, 1], &[1, 1]], 3, &[(&[1, 0], 1), (&[0, 1], 2)])]),
        ("A2 theta k=0 f=-2", "A2", vec![comp(&[&[1, 1]], 0, &[(&[1, 1], -2)])]),
        ("A2 alpha1 k=2 f=1", "A2", vec![comp(&[&[1, 0]], 2, &[(&[1, 0], 1)])]),
        (
            "A3 two components",
            "A3",
            vec![comp(&[&[1, 0, 0]], 2, &[(&[1, 0, 0], 1)]), comp(&[&[0, 0, 1]], 3, &[])],
        ),
        ("A3 A2-block k=1 f=(0,1)", "A3", vec![comp(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0]], 1, &[(&[1, 0, 0], 0), (&[0, 1, 0], 1)])]),
        ("A3 full k=2 f=(1,0,1)", "A3", vec![comp(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 0], &[0, 1, 1], &[1, 1, 1]], 2, &[(&[1, 0, 0], 1), (&[0, 1, 0], 0), (&[0, 0, 1], 1)])]),
    ]
}

/// The rank-3 tuple with `Psi_0 = {±alpha_1}`, `k = 0`, `Lambda = {±1}` and
/// `V_{±1}` spanned by `h_3`.
pub fn string_gap_tuple() -> Result<SymRegTuple, String> {
    let a3 = fin("A3")?;
    let psi = validate_periodic(&a3, &[comp(&[&[1, 0, 0]], 0, &[])]).map_err(|e| e.to_string())?;
    let v = Subspace::span(3, [vec![q(0), q(0), q(1)]]);
    let lam = PeriodicIntSet::finite(&[1]).map_err(|e| e.to_string())?;
    validate_tuple(psi, lam, VAssign::constant(v)).map_err(|e| e.to_string())
}

fn realroots_rank2() -> Check {
    let s = enumerate(&cd(&[vec![2, -4], vec![-1, 2]])?, 40).map_err(|e| e.to_string())?;
    let want = rank2_closed_form(40);
    Ok((*s.pos_real() == want, format!("{} positive real roots up to height 40", want.len())))
}

fn fibonacci_system() -> Check {
    let c = cd(&[vec![2, -3], vec![-3, 2]])?;
    let s = enumerate(&c, 1000).map_err(|e| e.to_string())?;
    let mut want = BTreeSet::new();
    for j in 0.. {
        let (b1, b2) = fibonacci_pair(j);
        if b1.height() > 1000 {
            break;
        }
        want.insert(b1);
        want.insert(b2);
    }
    let list_ok = *s.pos_real() == want;
    let mut signs_ok = true;
    for j in 0..=6 {
        for k in 0..=6 {
            let (b1j, _) = fibonacci_pair(j);
            let (b1k, b2k) = fibonacci_pair(k);
            let d = &b1j - &b2k;
            signs_ok &= c.norm(d.coeffs()) > 0;
            if j != k {
                let e = &b1j - &b1k;
                signs_ok &= c.norm(e.coeffs()) <= 0;
            }
        }
    }
    Ok((list_ok && signs_ok, format!("{} real roots up to height 1000; list {list_ok}, norm signs {signs_ok}", want.len())))
}

fn fn2d() -> Check {
    let c = cd(&FN2D.map(|r| r.to_vec()))?;
    let s = enumerate(&c, 14).map_err(|e| e.to_string())?;
    let sigma = fn2d_sigma();
    let verdict = pi_system_check(&s, &sigma).map_err(|e| e.to_string())?;
    let b = b_sigma(&c, &sigma).map_err(|e| e.to_string())?;
    let want_b = vec![vec![2, -2, -4, -2], vec![-2, 2, -2, -10], vec![-4, -2, 2, -2], vec![-2, -10, -2, 2]];
    let kernel = integer_kernel(&sigma);
    let want_k: Vec<num_bigint::BigInt> = [2, -1, 2, -1].iter().map(|&x| x.into()).collect();
    let ok = verdict == PiVerdict::Certified && b.gcm.rows() == want_b.as_slice() && kernel == vec![want_k];
    Ok((ok, format!("{verdict:?}; B_Sigma {:?}; relation 2g1 - g2 + 2g3 - g4 = 0", b.gcm.rows())))
}

fn all_minus_two() -> Check {
    let c = cd(&[vec![2, -2, -2], vec![-2, 2, -2], vec![-2, -2, 2]])?;
    let mut formula = true;
    for k in -5..=5 {
        for l in -5..=5 {
            let p = c.pairing(all_minus_two_gamma(k).coeffs(), all_minus_two_gamma(l).coeffs()).map_err(|e| e.to_string())?;
            formula &= p == 2 - 16 * (k - l) * (k - l);
        }
    }
    let sigma: Vec<RootVec> = (-2..=2).map(all_minus_two_gamma).collect();
    let h = sigma.iter().map(|g| g.height()).max().unwrap_or(1);
    let s = enumerate(&c, h).map_err(|e| e.to_string())?;
    let verdict = pi_system_check(&s, &sigma).map_err(|e| e.to_string())?;
    Ok((formula && verdict == PiVerdict::Certified, format!("pairing formula {formula}; gamma_-2..gamma_2: {verdict:?}")))
}

fn g2_short_roots() -> Check {
    let g2 = crate::io::finite_system("G2").map_err(|e| e.to_string())?;
    let s = enumerate(g2.cd(), 8).map_err(|e| e.to_string())?;
    let psi = RootSet::symmetric([rv(&[0, 1]), rv(&[1, 1]), rv(&[1, 2])]);
    let r = verify_bijection(&s, &psi, DEFAULT_MAX_GENS).map_err(|e| e.to_string())?;
    let ok = matches!(r.uniqueness, Uniqueness::NoPiSystemGenerates { .. });
    Ok((ok, format!("{:?}", r.uniqueness)))
}

fn a5_non_closed() -> Check {
    let a5 = fin("A5")?;
    let cb = ChevalleyBasis::new(a5).map_err(|e| e.to_string())?;
    let e = |i: usize| RootVec::simple(5, i);
    let mut gens = Vec::new();
    for (roots, k) in [(vec![e(0), e(1), &e(0) + &e(1)], 2), (vec![e(3), e(4), &e(3) + &e(4)], 3)] {
        for a in &roots {
            for m in (-6..=6).filter(|m| m % k == 0) {
                gens.push(LoopElement::x(a, m));
                gens.push(LoopElement::x(&-a, m));
            }
        }
    }
    let s = generate(&cb, &gens, 6).map_err(|e| e.to_string())?;
    let sup = s.root_support();
    let two_delta = sup.imaginary.contains(&2);
    let a4 = sup.real.contains(&AffineRoot::new(e(3), 0));
    let a4_2d = sup.real.contains(&AffineRoot::new(e(3), 2));
    Ok((two_delta && a4 && !a4_2d, format!("2d in: {two_delta}, a4 in: {a4}, a4+2d in: {a4_2d}")))
}

fn string_gap() -> Check {
    let t = string_gap_tuple()?;
    let roots = t.roots(2);
    let want_real = vec![AffineRoot::new(rv(&[-1, 0, 0]), 0), AffineRoot::new(rv(&[1, 0, 0]), 0)];
    let support_ok = roots.real == want_real && roots.imaginary == vec![-1, 1];
    let cb = ChevalleyBasis::new(t.psi().finite_arc().clone()).map_err(|e| e.to_string())?;
    let closed = verify_tuple_subalgebra(&cb, &t, 2, false).map_err(|e| e.to_string())?;
    let s = assemble_tuple(&cb, &t, 2, false).map_err(|e| e.to_string())?;
    let kp = verify_keyprop(&cb, &s);
    let gaps = !kp.imaginary_string_gaps.is_empty();
    Ok((
        support_ok && closed.pass && kp.pass && gaps,
        format!("support {support_ok}; closed {}; imaginary string gaps {:?}", closed.pass, kp.imaginary_string_gaps),
    ))
}

fn special_part_counterexample() -> Check {
    let a3 = fin("A3")?;
    let cb = ChevalleyBasis::new(a3).map_err(|e| e.to_string())?;
    let a = rv(&[1, 0, 0]);
    let gens = [LoopElement::x(&a, 1), LoopElement::x(&-&a, 1), LoopElement::x(&a, 2), LoopElement::x(&-&a, 2), LoopElement::h(2, -2)];
    let s = generate(&cb, &gens, 6).map_err(|e| e.to_string())?;
    let r = split_sym_special(&cb, &s).map_err(|e| e.to_string())?;
    let w = r.witness.as_ref().map(|w| format!("[{}, {}] = {}", w.left, w.right, w.result));
    let ok = !r.hypothesis.nondegenerate && !r.sp_closed && w.as_deref().is_some_and(|w| w.contains("h1t^2"));
    Ok((ok, format!("degenerate at {}; witness {}", r.hypothesis.degenerate_at.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(", "), w.unwrap_or_default())))
}

fn root_generated() -> Check {
    let mut failed = Vec::new();
    let cases = periodic_fixtures();
    for (name, ty, raw) in &cases {
        let f = fin(ty)?;
        let cb = ChevalleyBasis::new(f.clone()).map_err(|e| e.to_string())?;
        let psi = validate_periodic(&f, raw).map_err(|e| format!("{name}: {e}"))?;
        let r = verify_root_generated(&cb, &psi, 6).map_err(|e| e.to_string())?;
        let s = generate(&cb, &root_generators(&psi, 6), 6).map_err(|e| e.to_string())?;
        if !r.pass || !verify_keyprop(&cb, &s).pass {
            failed.push(*name);
        }
    }
    Ok((failed.is_empty(), format!("{} periodic root sets at band 6; failures {failed:?}", cases.len())))
}

fn maximal_tuples() -> Check {
    let mut lines = Vec::new();
    let mut ok = true;
    for ty in ["A2", "A3"] {
        let f = fin(ty)?;
        let n = f.rank();
        let e = |r: Result<SymRegTuple, crate::affine::AffineError>| r.map_err(|e| e.to_string());
        let shape = |t: &SymRegTuple, d: bool| is_maximal_tuple(t, d).map(|v| v.shape).map_err(|e| e.to_string());
        let g = e(tuple_derived(&f))?;
        ok &= shape(&g, false)? == Some(MaximalShape::Derived);
        let mut full = vec![0; n];
        full[0] = 1;
        ok &= shape(&e(tuple_full_gradient(&f, 2, &full))?, true)? == Some(MaximalShape::FullGradient);
        ok &= shape(&e(tuple_full_gradient(&f, 4, &full))?, true)?.is_none();
        let maxes = maximal_closed(&f).map_err(|e| e.to_string())?;
        for m in &maxes {
            ok &= shape(&e(tuple_proper_gradient(&f, m))?, true)? == Some(MaximalShape::ProperGradient);
        }
        lines.push(format!("{ty}: {} maximal closed finite parts", maxes.len()));
    }
    Ok((ok, lines.join("; ")))
}

fn morita_violation() -> Check {
    let s = enumerate(&cd(&[vec![2, -1], vec![-4, 2]])?, 12).map_err(|e| e.to_string())?;
    let mut best = 0;
    let reals: Vec<RootVec> = s.pos_real().iter().cloned().collect();
    for a in &reals {
        for b in &reals {
            if let Ok(st) = s.root_string(a, b) {
                best = best.max(st.real_count());
            }
        }
    }
    Ok((best >= 3, format!("longest real run in a string: {best}")))
}

pub const FIXTURE_NAMES: [&str; 11] = [
    "rank2-real-roots",
    "fibonacci-system",
    "fn2d-pi-system",
    "all-minus-two",
    "g2-short-roots",
    "a5-non-closed-support",
    "string-gap-tuple",
    "special-part-counterexample",
    "root-generated-fixtures",
    "maximal-tuples",
    "morita-three-real",
];

/// Runs every fixture in a fixed order.
pub fn run_all() -> Vec<FixtureResult> {
    let checks: [fn() -> Check; 11] = [
        realroots_rank2,
        fibonacci_system,
        fn2d,
        all_minus_two,
        g2_short_roots,
        a5_non_closed,
        string_gap,
        special_part_counterexample,
        root_generated,
        maximal_tuples,
        morita_violation,
    ];
    FIXTURE_NAMES
        .iter()
        .zip(checks)
        .map(|(name, f)| match f() {
            Ok((pass, detail)) => FixtureResult { name, pass, detail },
            Err(e) => FixtureResult { name, pass: false, detail: format!("error: {e}") },
        })
        .collect()
}

/// Orbit of the FN2d generators, used by the CLI smoke tests.
pub fn fn2d_orbit_size(height: i64) -> Result<usize, String> {
    let c = cd(&FN2D.map(|r| r.to_vec()))?;
    let s = enumerate(&c, height).map_err(|e| e.to_string())?;
    Ok(orbit(&s, &fn2d_sigma()).map_err(|e| e.to_string())?.set.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_starts_right() {
        let s = rank2_closed_form(5);
        let want: BTreeSet<RootVec> = [rv(&[0, 1]), rv(&[1, 0]), rv(&[1, 1]), rv(&[4, 1]), rv(&[3, 2]), rv(&[3, 1])].into();
        assert_eq!(s, want);
    }

    #[test]
    fn every_fixture_passes() {
        for r in run_all() {
            assert!(r.pass, "{}: {}", r.name, r.detail);
        }
    }
}

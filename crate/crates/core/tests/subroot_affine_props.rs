use std::collections::{BTreeSet, VecDeque};
use std::sync::Arc;

use kmroots::affine::finite::FiniteRootSystem;
use kmroots::affine::maximal::maximal_closed;
use kmroots::affine::periodic::{validate_periodic, AffineRoot, RawComponent};
use kmroots::affine::tuple::{tuple_eq, tuple_full_gradient, tuple_leq, tuple_proper_gradient, validate_tuple, PeriodicIntSet, VAssign};
use kmroots::cartan::{symmetrize, validate_gcm};
use kmroots::io::finite_system;
use kmroots::rootslice::{enumerate, RootSlice, RootVec};
use kmroots::subroot::{b_sigma, closure, combo_decompose, minimal_elements, orbit, RootSet};
use proptest::prelude::*;

fn fr(name: &str) -> Arc<FiniteRootSystem> {
    finite_system(name).unwrap()
}

const TYPES: [&str; 5] = ["A2", "B2", "G2", "A3", "B3"];

fn finite_slice(name: &str) -> RootSlice {
    let f = fr(name);
    enumerate(f.cd(), 20).unwrap()
}

fn pick(roots: &[RootVec], mask: u64) -> RootSet {
    RootSet::symmetric(roots.iter().enumerate().filter(|(i, _)| mask >> (i % 64) & 1 == 1).map(|(_, r)| r.clone()))
}

fn gcm_strategy() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (2usize..=4).prop_flat_map(|n| {
        proptest::collection::vec((0i64..=3, 0i64..=3), n * (n - 1) / 2).prop_map(move |offs| {
            let mut a = vec![vec![0; n]; n];
            let mut k = 0;
            for i in 0..n {
                a[i][i] = 2;
                for j in i + 1..n {
                    let (x, y) = offs[k];
                    k += 1;
                    if x > 0 && y > 0 {
                        a[i][j] = -x;
                        a[j][i] = -y;
                    }
                }
            }
            a
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cartan_datum_invariants(a in gcm_strategy()) {
        let g = validate_gcm(&a).unwrap();
        if let Ok(c) = symmetrize(&g) {
            let n = a.len();
            for i in 0..n {
                prop_assert_eq!(c.gram()[i][i], 2 * c.d()[i]);
                prop_assert!(c.d()[i] > 0);
                for j in 0..n {
                    prop_assert_eq!(c.gram()[i][j], c.gram()[j][i]);
                    let (ai, aj) = (RootVec::simple(n, i), RootVec::simple(n, j));
                    prop_assert_eq!(c.pairing(aj.coeffs(), ai.coeffs()).unwrap(), a[i][j]);
                }
            }
            prop_assert_eq!(symmetrize(&validate_gcm(&a).unwrap()).unwrap(), c);
        }
    }

    #[test]
    fn closure_idempotent_and_monotone(t in 0usize..5, mask in any::<u64>()) {
        let s = finite_slice(TYPES[t]);
        let roots: Vec<RootVec> = s.pos_real().iter().cloned().collect();
        let x = pick(&roots, mask);
        let c = closure(&s, &x).unwrap();
        prop_assert!(x.is_subset(&c));
        prop_assert_eq!(closure(&s, &c).unwrap(), c);
    }

    #[test]
    fn minimal_elements_round_trip(t in 0usize..5, mask in any::<u64>()) {
        let s = finite_slice(TYPES[t]);
        let roots: Vec<RootVec> = s.pos_real().iter().cloned().collect();
        let psi = closure(&s, &pick(&roots, mask)).unwrap();
        let r = minimal_elements(&s, &psi).unwrap();
        prop_assert!(r.undecided.is_empty());
        let pi = r.certified_minimal.clone();
        for (i, a) in pi.iter().enumerate() {
            prop_assert!(a.is_positive() && psi.contains(a));
            for b in &pi[i + 1..] {
                prop_assert!(s.cd().bilinear(a.coeffs(), b.coeffs()).unwrap() <= 0);
            }
        }
        if pi.is_empty() {
            prop_assert!(psi.is_empty());
            return Ok(());
        }
        prop_assert_eq!(orbit(&s, &pi).unwrap().set, psi.clone());
        let b = b_sigma(s.cd(), &pi).unwrap();
        prop_assert!(symmetrize(&b.gcm).is_ok());
        for beta in psi.positive() {
            let c = combo_decompose(&pi, &beta).expect("members are combinations of the generators");
            prop_assert!(c.iter().all(|&x| x >= 0));
            let mut sum = RootVec::zero(beta.rank());
            for (ci, g) in c.iter().zip(&pi) {
                sum = sum.add_scaled(*ci, g);
            }
            prop_assert_eq!(sum, beta);
        }
    }

    #[test]
    fn membership_matches_residues(t in 0usize..3, k in 0i64..=4, f in proptest::collection::vec(-3i64..=3, 3)) {
        let name = ["A1", "A2", "A3"][t];
        let fs = fr(name);
        let n = fs.rank();
        let raw = RawComponent {
            roots: fs.positive().cloned().collect(),
            k,
            f_base: (0..n).map(|i| RootVec::simple(n, i)).collect(),
            f_values: f[..n].to_vec(),
        };
        let psi = validate_periodic(&fs, &[raw]).unwrap();
        let bound = 3 * k.max(1);
        for a in fs.roots() {
            let fa: i64 = a.coeffs().iter().zip(&f).map(|(c, v)| c * v).sum();
            for m in -bound..=bound {
                let want = if k == 0 { m == fa } else { (m - fa).rem_euclid(k) == 0 };
                prop_assert_eq!(psi.membership(&AffineRoot::new(a.clone(), m)), want);
            }
        }
    }

    #[test]
    fn pi_exact_regenerates_psi(t in 0usize..3, k in 1i64..=3, f in proptest::collection::vec(-2i64..=2, 3), sub in 0usize..2) {
        let name = ["A1", "A2", "A3"][t];
        let fs = fr(name);
        let n = fs.rank();
        let roots: Vec<RootVec> = if sub == 0 || n == 1 {
            fs.positive().cloned().collect()
        } else {
            vec![RootVec::simple(n, 0)]
        };
        let base: Vec<RootVec> = if sub == 0 || n == 1 { (0..n).map(|i| RootVec::simple(n, i)).collect() } else { vec![RootVec::simple(n, 0)] };
        let raw = RawComponent { roots, k, f_values: f[..base.len()].to_vec(), f_base: base };
        let psi = validate_periodic(&fs, &[raw]).unwrap();
        let pi = psi.pi_exact();
        let (band, wide) = (6, 24);
        let mut seen: BTreeSet<AffineRoot> = pi.iter().flat_map(|p| [p.clone(), p.neg()]).collect();
        let mut queue: VecDeque<AffineRoot> = seen.iter().cloned().collect();
        while let Some(x) = queue.pop_front() {
            for p in &pi {
                let y = p.reflect(&fs, &x);
                if y.level.abs() <= wide && seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        let got: BTreeSet<AffineRoot> = seen.into_iter().filter(|r| r.level.abs() <= band).collect();
        let want: BTreeSet<AffineRoot> = psi.members_between(-band, band).into_iter().collect();
        prop_assert_eq!(got, want);
    }
}

#[test]
fn tuple_roots_agree_with_membership() {
    for name in ["A1", "A2", "A3"] {
        let f = fr(name);
        for k in 0..=3 {
            let raw = RawComponent { roots: f.positive().cloned().collect(), k, ..Default::default() };
            let psi = validate_periodic(&f, &[raw]).unwrap();
            let t = validate_tuple(psi.clone(), PeriodicIntSet::empty(), VAssign::zero()).unwrap();
            let r = t.roots(6);
            let want = psi.members_between(-6, 6);
            assert_eq!(r.real, want, "{name} k={k}");
            assert!(r.real.iter().all(|x| r.real.contains(&x.neg())));
            assert!(r.imaginary.iter().all(|x| r.imaginary.contains(&-x)));
        }
    }
}

#[test]
fn maximal_tuples_pairwise_incomparable() {
    for name in ["A2", "A3", "B2", "G2"] {
        let f = fr(name);
        let mut ts = Vec::new();
        for m in maximal_closed(&f).unwrap() {
            ts.push(tuple_proper_gradient(&f, &m).unwrap());
        }
        let proper = ts.len();
        for k in [2, 3] {
            ts.push(tuple_full_gradient(&f, k, &vec![0; f.rank()]).unwrap());
        }
        for (i, a) in ts.iter().enumerate() {
            for (j, b) in ts.iter().enumerate() {
                if i != j {
                    assert!(!tuple_leq(a, b), "{name}: {i} <= {j}");
                    if i < proper && j < proper {
                        assert!(!tuple_eq(a, b));
                    }
                }
            }
        }
    }
}

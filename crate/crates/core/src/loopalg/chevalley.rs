//! Chevalley basis of a finite-dimensional simple (or semisimple) Lie algebra.
//!
//! Structure constants `N(a, b)` with `[x_a, x_b] = N(a, b) x_{a+b}` are fixed
//! by the extraspecial-pair convention: positive roots are ordered by height,
//! then by decreasing lexicographic order of coefficient vectors (so simple
//! roots come in their natural order); for every non-simple positive
//! root `xi` the extraspecial pair `(a1, b1)` has `a1` the least positive root
//! with `xi - a1` positive, and `N(a1, b1) = +(p + 1)`. All other constants
//! follow from the standard identities together with `N(-a, -b) = -N(a, b)`.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_traits::Zero;

use crate::affine::finite::FiniteRootSystem;
use crate::linalg::{q, Q};
use crate::rootslice::RootVec;

use super::LoopError;

pub const SIGN_CONVENTION: &str = "extraspecial pairs: positive roots ordered by (height, coefficients lex descending); \
N(a1,b1) = +(p+1) on each extraspecial pair; N(-a,-b) = -N(a,b); [x_a, x_-a] = a^vee";

pub const FORM_CONVENTION: &str = "(h_i, h_j) = a_ij / d_j on simple coroots; (x_a, x_-a) = 2/(a,a); \
(a t^m, b t^n) = delta_{m,-n} (a,b); (c,d) = 1";

#[derive(Debug, Clone)]
pub struct ChevalleyBasis {
    fr: Arc<FiniteRootSystem>,
    n: HashMap<(RootVec, RootVec), i64>,
    order: Vec<RootVec>,
    extraspecial: Vec<(RootVec, RootVec)>,
    coroots: BTreeMap<RootVec, Vec<Q>>,
}

impl ChevalleyBasis {
    pub fn new(fr: Arc<FiniteRootSystem>) -> Result<Self, LoopError> {
        let mut order: Vec<RootVec> = fr.positive().cloned().collect();
        order.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.coeffs().cmp(a.coeffs())));
        let rank_of: HashMap<RootVec, usize> = order.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();

        let is_pos = |r: &RootVec| rank_of.contains_key(r);
        let norm = |r: &RootVec| q(fr.norm(r));
        let mut pos: HashMap<(RootVec, RootVec), Q> = HashMap::new();
        let mut extraspecial = Vec::new();

        // N(a, -g) for positive a, g with a - g a root; needs positive pairs of
        // smaller height only.
        let mixed = |pos: &HashMap<(RootVec, RootVec), Q>, a: &RootVec, g: &RootVec| -> Q {
            let eta = a - g;
            if eta.is_positive() {
                -(norm(&eta) / norm(a)) * &pos[&(g.clone(), eta)]
            } else {
                let eta = -&eta;
                (norm(&eta) / norm(g)) * &pos[&(eta, a.clone())]
            }
        };

        for xi in &order {
            let pairs: Vec<(RootVec, RootVec)> =
                order.iter().filter(|a| is_pos(&(xi - *a))).map(|a| (a.clone(), xi - a)).collect();
            let Some((a1, b1)) = pairs.first().cloned() else {
                continue;
            };
            let p1 = string_down(&fr, &a1, &b1);
            let top = q(p1 + 1);
            extraspecial.push((a1.clone(), b1.clone()));
            pos.insert((a1.clone(), b1.clone()), top.clone());
            pos.insert((b1.clone(), a1.clone()), -top.clone());
            for (a, b) in &pairs {
                if *a == a1 || *a == b1 {
                    continue;
                }
                let mut acc = Q::zero();
                let d1 = b - &a1;
                if fr.is_root(&d1) {
                    acc += mixed(&pos, b, &a1) * mixed(&pos, a, &b1) / norm(&d1);
                }
                let d2 = a - &a1;
                if fr.is_root(&d2) {
                    acc += -mixed(&pos, a, &a1) * mixed(&pos, b, &b1) / norm(&d2);
                }
                pos.insert((a.clone(), b.clone()), norm(xi) / &top * acc);
            }
        }

        let mut n = HashMap::new();
        let to_int = |x: &Q, a: &RootVec, b: &RootVec| -> Result<i64, LoopError> {
            if !x.is_integer() {
                return Err(LoopError::StructureConstant(format!("N({a},{b}) = {x} is not an integer")));
            }
            Ok(x.to_integer().try_into().expect("structure constants are at most 3"))
        };
        let all = fr.roots();
        for a in all {
            for b in all {
                let s = a + b;
                if !fr.is_root(&s) {
                    continue;
                }
                let v = match (a.is_positive(), b.is_positive()) {
                    (true, true) => pos[&(a.clone(), b.clone())].clone(),
                    (false, false) => -pos[&(-a, -b)].clone(),
                    (true, false) => mixed(&pos, a, &-b),
                    (false, true) => -mixed(&pos, b, &-a),
                };
                n.insert((a.clone(), b.clone()), to_int(&v, a, b)?);
            }
        }
        let coroots = all.iter().map(|a| (a.clone(), fr.coroot(a))).collect();
        let cb = ChevalleyBasis { fr, n, order, extraspecial, coroots };
        cb.check_magnitudes()?;
        Ok(cb)
    }

    fn check_magnitudes(&self) -> Result<(), LoopError> {
        for ((a, b), v) in &self.n {
            let p = string_down(&self.fr, a, b);
            if v.abs() != p + 1 || self.n[&(b.clone(), a.clone())] != -v {
                return Err(LoopError::StructureConstant(format!("N({a},{b}) = {v}, expected +-{}", p + 1)));
            }
        }
        Ok(())
    }

    pub fn finite(&self) -> &FiniteRootSystem {
        &self.fr
    }

    pub fn finite_arc(&self) -> &Arc<FiniteRootSystem> {
        &self.fr
    }

    pub fn rank(&self) -> usize {
        self.fr.rank()
    }

    /// `N(a, b)`, zero when `a + b` is not a root.
    pub fn n(&self, a: &RootVec, b: &RootVec) -> i64 {
        self.n.get(&(a.clone(), b.clone())).copied().unwrap_or(0)
    }

    /// Coroot coordinates of `a^vee` in the simple coroot basis.
    pub fn coroot(&self, a: &RootVec) -> &[Q] {
        &self.coroots[a]
    }

    /// Positive roots in the order used for extraspecial pairs.
    pub fn positive_order(&self) -> &[RootVec] {
        &self.order
    }

    pub fn extraspecial_pairs(&self) -> &[(RootVec, RootVec)] {
        &self.extraspecial
    }

    /// `(x_a, x_-a)`.
    pub fn root_pairing(&self, a: &RootVec) -> Q {
        Q::new(2.into(), self.fr.norm(a).into())
    }

    /// `(h_i, h_j)` on simple coroots.
    pub fn coroot_form(&self, i: usize, j: usize) -> Q {
        let cd = self.fr.cd();
        Q::new(cd.a(i, j).into(), cd.d()[j].into())
    }
}

/// Largest `p` with `b - p a` a root.
pub(crate) fn string_down(fr: &FiniteRootSystem, a: &RootVec, b: &RootVec) -> i64 {
    let mut p = 0;
    while fr.is_root(&b.add_scaled(-(p + 1), a)) {
        p += 1;
    }
    p
}

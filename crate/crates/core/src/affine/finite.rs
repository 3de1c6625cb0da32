//! Complete root systems of finite type, with coroots in the coroot basis.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_traits::Zero;

use crate::cartan::{components, validate_gcm, CartanDatum, Gcm, MatrixKind};
use crate::linalg::{q, q_frac, Matrix, Q};
use crate::rootslice::{enumerate, reflect, RootVec};

use super::AffineError;

/// Largest rank accepted by exhaustive finite-type operations by default.
pub const DEFAULT_RANK_CAP: usize = 8;

#[derive(Debug, Clone)]
pub struct FiniteRootSystem {
    cd: CartanDatum,
    roots: Vec<RootVec>,
    set: BTreeSet<RootVec>,
    components: Vec<Vec<usize>>,
    highest: Vec<RootVec>,
}

pub fn build_finite(cd: &CartanDatum) -> Result<FiniteRootSystem, AffineError> {
    build_finite_with_cap(cd, DEFAULT_RANK_CAP)
}

pub fn build_finite_with_cap(cd: &CartanDatum, cap: usize) -> Result<FiniteRootSystem, AffineError> {
    if cd.rank() > cap {
        return Err(AffineError::RankCap(cd.rank(), cap));
    }
    if cd.kind().iter().any(|(_, k)| *k != MatrixKind::Finite) {
        return Err(AffineError::NotFinite);
    }
    // Heights of positive roots of a finite system are 1..=ht(theta) with no gaps.
    let mut h = 8;
    let slice = loop {
        let s = enumerate(cd, h)?;
        if s.pos_real().iter().all(|r| r.height() < h) {
            break s;
        }
        h *= 2;
    };
    let pos: Vec<RootVec> = slice.pos_real().iter().cloned().collect();
    let mut roots: Vec<RootVec> = pos.iter().map(|r| -r).chain(pos.iter().cloned()).collect();
    roots.sort();
    let comps = components(cd.gcm());
    let highest = comps
        .iter()
        .map(|c| {
            pos.iter()
                .filter(|r| r.support().iter().all(|i| c.contains(i)))
                .max_by_key(|r| r.height())
                .cloned()
                .expect("component has a root")
        })
        .collect();
    Ok(FiniteRootSystem { cd: cd.clone(), set: roots.iter().cloned().collect(), roots, components: comps, highest })
}

impl FiniteRootSystem {
    pub fn cd(&self) -> &CartanDatum {
        &self.cd
    }

    pub fn rank(&self) -> usize {
        self.cd.rank()
    }

    /// All roots, negative ones first, in canonical order.
    pub fn roots(&self) -> &[RootVec] {
        &self.roots
    }

    pub fn root_set(&self) -> &BTreeSet<RootVec> {
        &self.set
    }

    pub fn positive(&self) -> impl Iterator<Item = &RootVec> {
        self.roots.iter().filter(|r| r.is_positive())
    }

    pub fn is_root(&self, r: &RootVec) -> bool {
        self.set.contains(r)
    }

    pub fn is_irreducible(&self) -> bool {
        self.components.len() == 1
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    /// Highest root of each indecomposable component.
    pub fn highest_roots(&self) -> &[RootVec] {
        &self.highest
    }

    pub fn norm(&self, r: &RootVec) -> i64 {
        self.cd.norm(r.coeffs())
    }

    pub fn form(&self, a: &RootVec, b: &RootVec) -> i64 {
        self.cd.bilinear(a.coeffs(), b.coeffs()).expect("rank checked")
    }

    /// `<beta, alpha^vee>` for a root `alpha`.
    pub fn pairing(&self, beta: &RootVec, alpha: &RootVec) -> i64 {
        self.cd.pairing(beta.coeffs(), alpha.coeffs()).expect("alpha is a root of finite type")
    }

    pub fn reflect(&self, alpha: &RootVec, x: &RootVec) -> RootVec {
        reflect(&self.cd, alpha, x).expect("alpha is a root of finite type")
    }

    /// Coordinates of `alpha^vee` in the basis of simple coroots.
    pub fn coroot(&self, alpha: &RootVec) -> Vec<Q> {
        let nn = self.norm(alpha);
        alpha.coeffs().iter().zip(self.cd.d()).map(|(&c, &d)| q_frac(2 * c * d, nn)).collect()
    }

    /// `alpha(h)` for `h` in coroot coordinates.
    pub fn eval(&self, alpha: &RootVec, h: &[Q]) -> Q {
        let mut s = Q::zero();
        for (j, hj) in h.iter().enumerate() {
            if !hj.is_zero() {
                s += hj * q(self.cd.simple_pairing(alpha.coeffs(), j));
            }
        }
        s
    }

    /// Gram matrix of the invariant form on the simple coroots: `a_ij / d_j`.
    pub fn coroot_gram(&self) -> Matrix {
        let n = self.rank();
        (0..n).map(|i| (0..n).map(|j| q_frac(self.cd.a(i, j), self.cd.d()[j])).collect()).collect()
    }

    /// GCM of the untwisted affinization, node 0 being `delta - theta`.
    pub fn extended_gcm(&self) -> Result<Gcm, AffineError> {
        if !self.is_irreducible() {
            return Err(AffineError::NotIrreducible);
        }
        let n = self.rank();
        let theta = &self.highest[0];
        let mut rows = vec![vec![0; n + 1]; n + 1];
        rows[0][0] = 2;
        for j in 0..n {
            let aj = RootVec::simple(n, j);
            rows[0][j + 1] = -self.pairing(&aj, theta);
            rows[j + 1][0] = -self.pairing(theta, &aj);
            for i in 0..n {
                rows[i + 1][j + 1] = self.cd.a(i, j);
            }
        }
        Ok(validate_gcm(&rows)?)
    }

    /// Coefficients of the highest root (the marks), per component.
    pub fn marks(&self) -> Vec<Vec<i64>> {
        self.highest.iter().map(|t| t.coeffs().to_vec()).collect()
    }

    /// Splits a symmetric root set into irreducible pieces: classes of the
    /// relation generated by non-orthogonality.
    pub fn irreducible_parts(&self, set: &BTreeSet<RootVec>) -> Vec<BTreeSet<RootVec>> {
        let pos: Vec<&RootVec> = set.iter().filter(|r| r.is_positive()).collect();
        let mut label: BTreeMap<&RootVec, usize> = BTreeMap::new();
        let mut parts = Vec::new();
        for &start in &pos {
            if label.contains_key(start) {
                continue;
            }
            let id = parts.len();
            let mut part = BTreeSet::new();
            let mut queue = VecDeque::from([start]);
            label.insert(start, id);
            while let Some(x) = queue.pop_front() {
                part.insert(x.clone());
                part.insert(-x);
                for &y in &pos {
                    if !label.contains_key(y) && self.form(x, y) != 0 {
                        label.insert(y, id);
                        queue.push_back(y);
                    }
                }
            }
            parts.push(part);
        }
        parts
    }

    /// Orbit of a root set under the Weyl group.
    pub fn weyl_orbit_of_set(&self, set: &BTreeSet<RootVec>) -> Vec<BTreeSet<RootVec>> {
        let n = self.rank();
        let mut seen = BTreeSet::from([set.clone()]);
        let mut queue = VecDeque::from([set.clone()]);
        while let Some(s) = queue.pop_front() {
            for i in 0..n {
                let ai = RootVec::simple(n, i);
                let img: BTreeSet<RootVec> = s.iter().map(|r| self.reflect(&ai, r)).collect();
                if seen.insert(img.clone()) {
                    queue.push_back(img);
                }
            }
        }
        seen.into_iter().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{finite_type, symmetrize};

    fn fr(name: &str) -> FiniteRootSystem {
        build_finite(&symmetrize(&finite_type(name).unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn root_counts() {
        assert_eq!(fr("A2").roots().len(), 6);
        assert_eq!(fr("A5").roots().len(), 30);
        assert_eq!(fr("E8").roots().len(), 240);
        let g2 = fr("G2");
        assert_eq!(g2.roots().len(), 12);
        let norms: BTreeSet<i64> = g2.roots().iter().map(|r| g2.norm(r)).collect();
        assert_eq!(norms.len(), 2);
        let short = norms.iter().min().unwrap();
        assert_eq!(g2.roots().iter().filter(|r| g2.norm(r) == *short).count(), 6);
    }

    #[test]
    fn rejects_non_finite() {
        let cd = CartanDatum::from_rows(&[vec![2, -2], vec![-2, 2]]).unwrap();
        assert!(matches!(build_finite(&cd), Err(AffineError::NotFinite)));
    }

    #[test]
    fn extended_matrices() {
        let a2 = fr("A2").extended_gcm().unwrap();
        assert_eq!(a2.rows(), &[vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]);
        let g2 = fr("G2");
        let ext = g2.extended_gcm().unwrap();
        let cd = symmetrize(&ext).unwrap();
        assert_eq!(cd.kind_of_whole(), Some(MatrixKind::Affine));
        assert_eq!(g2.highest_roots()[0].height(), 5);
    }

    #[test]
    fn coroots_pair_to_two() {
        let g = fr("G2");
        for a in g.roots() {
            assert_eq!(g.eval(a, &g.coroot(a)), q(2));
            for b in g.roots() {
                assert_eq!(g.eval(b, &g.coroot(a)), q(g.pairing(b, a)));
            }
        }
    }

    #[test]
    fn irreducible_parts_of_b2_long() {
        let b2 = fr("B2");
        let top = b2.roots().iter().map(|r| b2.norm(r)).max().unwrap();
        let long: BTreeSet<RootVec> = b2.roots().iter().filter(|r| b2.norm(r) == top).cloned().collect();
        assert_eq!(b2.irreducible_parts(&long).len(), 2);
        assert_eq!(b2.irreducible_parts(b2.root_set()).len(), 1);
    }
}

//! Generalized Cartan matrices, their symmetrization, the invariant form on
//! the root lattice, and finite/affine/indefinite type detection.
//!
//! Convention: `a[i][j] = <alpha_j, alpha_i^vee>`, so row `i` of the matrix
//! lists the pairings of all simple roots against the coroot of `alpha_i`.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::linalg::{determinant, q, Matrix, Q};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CartanError {
    #[error("matrix is empty")]
    Empty,
    #[error("matrix is not square (row {row} has {len} entries, expected {rank})")]
    NotSquare { row: usize, len: usize, rank: usize },
    #[error("not a generalized Cartan matrix: cell ({0},{1}) violates the axioms")]
    NotGcm(usize, usize),
    #[error("not symmetrizable: inconsistent ratios around cycle {0:?}")]
    NotSymmetrizable(Vec<usize>),
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("vector has non-positive norm, cannot form its coroot")]
    ZeroNorm,
    #[error("pairing 2({0})/({1}) is not an integer")]
    NonIntegral(i64, i64),
    #[error("unknown Cartan type {0:?}")]
    UnknownType(String),
}

/// A validated generalized Cartan matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Gcm {
    a: Vec<Vec<i64>>,
}

impl Gcm {
    pub fn rank(&self) -> usize {
        self.a.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.a[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.a
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Gcm) -> Gcm {
        let n = self.rank();
        let m = other.rank();
        let mut a = vec![vec![0; n + m]; n + m];
        for i in 0..n {
            a[i][..n].copy_from_slice(&self.a[i]);
        }
        for i in 0..m {
            a[n + i][n..].copy_from_slice(&other.a[i]);
        }
        Gcm { a }
    }
}

pub fn validate_gcm(entries: &[Vec<i64>]) -> Result<Gcm, CartanError> {
    let n = entries.len();
    if n == 0 {
        return Err(CartanError::Empty);
    }
    for (row, r) in entries.iter().enumerate() {
        if r.len() != n {
            return Err(CartanError::NotSquare { row, len: r.len(), rank: n });
        }
    }
    for i in 0..n {
        for j in 0..n {
            let aij = entries[i][j];
            let ok = if i == j { aij == 2 } else { aij <= 0 };
            if !ok {
                return Err(CartanError::NotGcm(i, j));
            }
        }
    }
    // The zero-pattern violation names the cell holding the zero.
    for i in 0..n {
        for j in 0..n {
            if i != j && entries[i][j] == 0 && entries[j][i] != 0 {
                return Err(CartanError::NotGcm(i, j));
            }
        }
    }
    Ok(Gcm { a: entries.to_vec() })
}

/// Per-component type of a symmetrizable GCM.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum MatrixKind {
    Finite,
    Affine,
    Indefinite,
}

/// A GCM together with its normalized symmetrizer and the integral Gram
/// matrix `gram[i][j] = d[i] * a[i][j]`.
///
/// The symmetrizer is the minimal positive integer vector on each
/// indecomposable component, so the Gram matrix is integral and every
/// value of the form on the root lattice is an exact integer.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CartanDatum {
    gcm: Gcm,
    d: Vec<i64>,
    gram: Vec<Vec<i64>>,
}

/// Connected components of the Coxeter graph, each sorted, ordered by least index.
pub fn components(g: &Gcm) -> Vec<Vec<usize>> {
    let n = g.rank();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if !seen[j] && g.a[i][j] != 0 {
                    seen[j] = true;
                    comp.push(j);
                    stack.push(j);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

pub fn symmetrize(g: &Gcm) -> Result<CartanDatum, CartanError> {
    let n = g.rank();
    let mut d: Vec<Option<Q>> = vec![None; n];
    let mut parent: Vec<Option<usize>> = vec![None; n];
    for comp in components(g) {
        let root = comp[0];
        d[root] = Some(q(1));
        let mut queue = VecDeque::from([root]);
        while let Some(i) = queue.pop_front() {
            let di = d[i].clone().expect("visited");
            for j in 0..n {
                if i == j || g.a[i][j] == 0 {
                    continue;
                }
                // d_i a_ij = d_j a_ji
                let want = &di * q(g.a[i][j]) / q(g.a[j][i]);
                match &d[j] {
                    None => {
                        d[j] = Some(want);
                        parent[j] = Some(i);
                        queue.push_back(j);
                    }
                    Some(dj) if *dj == want => {}
                    Some(_) => return Err(CartanError::NotSymmetrizable(cycle(&parent, i, j))),
                }
            }
        }
    }
    let d: Vec<Q> = d.into_iter().map(|x| x.expect("every index lies in a component")).collect();
    let mut dint = vec![0i64; n];
    for comp in components(g) {
        let l = comp.iter().fold(BigInt::from(1), |acc, &i| acc.lcm(d[i].denom()));
        let scaled: Vec<BigInt> = comp.iter().map(|&i| (&d[i] * Q::from_integer(l.clone())).to_integer()).collect();
        let gcd = scaled.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        for (k, &i) in comp.iter().enumerate() {
            let v = &scaled[k] / &gcd;
            dint[i] = i64::try_from(v).expect("symmetrizer entry fits in i64");
        }
    }
    let gram = (0..n).map(|i| (0..n).map(|j| dint[i] * g.a[i][j]).collect()).collect();
    Ok(CartanDatum { gcm: g.clone(), d: dint, gram })
}

fn cycle(parent: &[Option<usize>], i: usize, j: usize) -> Vec<usize> {
    let path = |mut x: usize| {
        let mut p = vec![x];
        while let Some(y) = parent[x] {
            p.push(y);
            x = y;
        }
        p
    };
    let pi = path(i);
    let pj = path(j);
    // i -> ... -> lca -> ... -> j; the edge (j, i) closes the loop.
    let common = pi.iter().rev().zip(pj.iter().rev()).take_while(|(a, b)| a == b).count();
    let mut cyc: Vec<usize> = pi[..pi.len() - common + 1].to_vec();
    cyc.extend(pj[..pj.len() - common].iter().rev());
    cyc
}

impl CartanDatum {
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self, CartanError> {
        symmetrize(&validate_gcm(rows)?)
    }

    pub fn gcm(&self) -> &Gcm {
        &self.gcm
    }

    pub fn rank(&self) -> usize {
        self.gcm.rank()
    }

    pub fn d(&self) -> &[i64] {
        &self.d
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    /// `a[i][j]`.
    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.gcm.a[i][j]
    }

    fn check_len(&self, x: &[i64]) -> Result<(), CartanError> {
        if x.len() != self.rank() {
            return Err(CartanError::RankMismatch { expected: self.rank(), got: x.len() });
        }
        Ok(())
    }

    pub fn bilinear(&self, x: &[i64], y: &[i64]) -> Result<i64, CartanError> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.form(x, y))
    }

    /// Unchecked form; callers guarantee matching lengths.
    pub(crate) fn form(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut s: i128 = 0;
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            let mut row: i128 = 0;
            for (j, &yj) in y.iter().enumerate() {
                row += self.gram[i][j] as i128 * yj as i128;
            }
            s += xi as i128 * row;
        }
        i64::try_from(s).expect("bilinear form value overflows i64")
    }

    pub fn norm(&self, x: &[i64]) -> i64 {
        self.form(x, x)
    }

    /// `<beta, alpha^vee> = 2 (beta, alpha) / (alpha, alpha)`.
    pub fn pairing(&self, beta: &[i64], alpha: &[i64]) -> Result<i64, CartanError> {
        self.check_len(beta)?;
        self.check_len(alpha)?;
        self.pairing_unchecked(beta, alpha)
    }

    pub(crate) fn pairing_unchecked(&self, beta: &[i64], alpha: &[i64]) -> Result<i64, CartanError> {
        let nn = self.norm(alpha);
        if nn <= 0 {
            return Err(CartanError::ZeroNorm);
        }
        let num = 2 * self.form(beta, alpha);
        if num % nn != 0 {
            return Err(CartanError::NonIntegral(num / 2, nn));
        }
        Ok(num / nn)
    }

    /// `<beta, alpha_i^vee> = sum_j beta_j a_ij`.
    pub fn simple_pairing(&self, beta: &[i64], i: usize) -> i64 {
        self.gcm.a[i].iter().zip(beta).map(|(a, b)| a * b).sum()
    }

    pub fn kind(&self) -> Vec<(Vec<usize>, MatrixKind)> {
        components(&self.gcm)
            .into_iter()
            .map(|c| {
                let k = self.component_kind(&c);
                (c, k)
            })
            .collect()
    }

    /// The single kind when the matrix is indecomposable.
    pub fn kind_of_whole(&self) -> Option<MatrixKind> {
        let ks = self.kind();
        if ks.len() == 1 {
            Some(ks[0].1)
        } else if ks.iter().all(|(_, k)| *k == MatrixKind::Finite) {
            Some(MatrixKind::Finite)
        } else {
            None
        }
    }

    fn sub_gram(&self, idx: &[usize]) -> Matrix {
        idx.iter().map(|&i| idx.iter().map(|&j| q(self.gram[i][j])).collect()).collect()
    }

    fn positive_definite(&self, idx: &[usize]) -> bool {
        (1..=idx.len()).all(|k| determinant(&self.sub_gram(&idx[..k])).is_positive())
    }

    fn component_kind(&self, comp: &[usize]) -> MatrixKind {
        if self.positive_definite(comp) {
            return MatrixKind::Finite;
        }
        let det = determinant(&self.sub_gram(comp));
        let proper_pd = (0..comp.len()).all(|skip| {
            let rest: Vec<usize> = comp.iter().enumerate().filter(|(k, _)| *k != skip).map(|(_, &i)| i).collect();
            self.positive_definite(&rest)
        });
        if det.is_zero() && proper_pd {
            MatrixKind::Affine
        } else {
            MatrixKind::Indefinite
        }
    }
}

/// Cartan matrix of a finite type given by name, e.g. `"A3"`, `"G2"`, `"E6"`.
///
/// Bourbaki numbering. In `B_n` the last root is short, in `C_n` long; in
/// `G2` the first root is long.
pub fn finite_type(name: &str) -> Result<Gcm, CartanError> {
    let bad = || CartanError::UnknownType(name.to_string());
    let name = name.trim();
    let (letter, n) = name.split_at(1);
    let n: usize = n.parse().map_err(|_| bad())?;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let link = |a: &mut Vec<Vec<i64>>, i: usize, j: usize, aij: i64, aji: i64| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    match letter {
        "A" if n >= 1 => {
            for i in 0..n - 1 {
                link(&mut a, i, i + 1, -1, -1);
            }
        }
        "B" if n >= 2 => {
            for i in 0..n - 2 {
                link(&mut a, i, i + 1, -1, -1);
            }
            link(&mut a, n - 2, n - 1, -1, -2);
        }
        "C" if n >= 2 => {
            for i in 0..n - 2 {
                link(&mut a, i, i + 1, -1, -1);
            }
            link(&mut a, n - 2, n - 1, -2, -1);
        }
        "D" if n >= 3 => {
            for i in 0..n - 2 {
                link(&mut a, i, i + 1, -1, -1);
            }
            link(&mut a, n - 3, n - 1, -1, -1);
        }
        "E" if (6..=8).contains(&n) => {
            link(&mut a, 0, 2, -1, -1);
            link(&mut a, 1, 3, -1, -1);
            for i in 2..n - 1 {
                link(&mut a, i, i + 1, -1, -1);
            }
        }
        "F" if n == 4 => {
            link(&mut a, 0, 1, -1, -1);
            link(&mut a, 1, 2, -1, -2);
            link(&mut a, 2, 3, -1, -1);
        }
        "G" if n == 2 => link(&mut a, 0, 1, -1, -3),
        _ => return Err(bad()),
    }
    validate_gcm(&a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_examples() {
        assert!(validate_gcm(&[vec![2, -4], vec![-1, 2]]).is_ok());
        assert!(validate_gcm(&[vec![2]]).is_ok());
        assert_eq!(validate_gcm(&[vec![2, -1], vec![0, 2]]), Err(CartanError::NotGcm(1, 0)));
        assert_eq!(validate_gcm(&[vec![3]]), Err(CartanError::NotGcm(0, 0)));
        assert!(matches!(validate_gcm(&[vec![2, 0]]), Err(CartanError::NotSquare { .. })));
    }

    #[test]
    fn symmetrizer_examples() {
        let cd = CartanDatum::from_rows(&[vec![2, -4], vec![-1, 2]]).unwrap();
        assert_eq!(cd.d(), &[1, 4]);
        assert_eq!(cd.gram(), &[vec![2, -4], vec![-4, 8]]);
        let fn2d = CartanDatum::from_rows(&[vec![2, -1, 0], vec![-1, 2, -2], vec![0, -2, 2]]).unwrap();
        assert_eq!(fn2d.d(), &[1, 1, 1]);
        assert_eq!(fn2d.gram(), fn2d.gcm().rows());
        let h = CartanDatum::from_rows(&[vec![2, -3], vec![-3, 2]]).unwrap();
        assert_eq!(h.d(), &[1, 1]);
        let g2 = symmetrize(&finite_type("G2").unwrap()).unwrap();
        assert_eq!(g2.d(), &[3, 1]);
    }

    #[test]
    fn symmetrizer_normalized_per_component() {
        let g = validate_gcm(&[vec![2, 0, 0], vec![0, 2, -4], vec![0, -1, 2]]).unwrap();
        let cd = symmetrize(&g).unwrap();
        assert_eq!(cd.d(), &[1, 1, 4]);
    }

    #[test]
    fn non_symmetrizable_cycle() {
        let g = validate_gcm(&[vec![2, -1, -1], vec![-2, 2, -1], vec![-1, -1, 2]]).unwrap();
        match symmetrize(&g) {
            Err(CartanError::NotSymmetrizable(c)) => {
                assert!(c.len() >= 3, "{c:?}");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn form_and_pairing() {
        let cd = CartanDatum::from_rows(&[vec![2, -4], vec![-1, 2]]).unwrap();
        assert_eq!(cd.bilinear(&[1, 1], &[1, 1]).unwrap(), 2);
        for i in 0..2 {
            let mut e = vec![0; 2];
            e[i] = 1;
            assert_eq!(cd.bilinear(&e, &e).unwrap(), 2 * cd.d()[i]);
            for j in 0..2 {
                let mut f = vec![0; 2];
                f[j] = 1;
                assert_eq!(cd.pairing(&f, &e).unwrap(), cd.a(i, j));
                assert_eq!(cd.simple_pairing(&f, i), cd.a(i, j));
            }
        }
        assert!(matches!(cd.bilinear(&[1], &[1, 1]), Err(CartanError::RankMismatch { .. })));
        let fn2d = CartanDatum::from_rows(&[vec![2, -1, 0], vec![-1, 2, -2], vec![0, -2, 2]]).unwrap();
        assert_eq!(fn2d.bilinear(&[1, 1, 0], &[1, 1, 0]).unwrap(), 2);
        assert_eq!(fn2d.pairing(&[1, 1, 0], &[0, 0, 1]).unwrap(), -2);
        assert_eq!(fn2d.pairing(&[1, 0, 0], &[1, 1, 1]), Err(CartanError::ZeroNorm));
    }

    #[test]
    fn components_examples() {
        let g = validate_gcm(&[vec![2, 0], vec![0, 2]]).unwrap();
        assert_eq!(components(&g), vec![vec![0], vec![1]]);
        let fn2d = validate_gcm(&[vec![2, -1, 0], vec![-1, 2, -2], vec![0, -2, 2]]).unwrap();
        assert_eq!(components(&fn2d), vec![vec![0, 1, 2]]);
        let a1 = validate_gcm(&[vec![2]]).unwrap();
        let r2 = validate_gcm(&[vec![2, -4], vec![-1, 2]]).unwrap();
        assert_eq!(components(&a1.direct_sum(&r2)), vec![vec![0], vec![1, 2]]);
    }

    #[test]
    fn kind_examples() {
        let k = |rows: &[Vec<i64>]| CartanDatum::from_rows(rows).unwrap().kind_of_whole().unwrap();
        assert_eq!(k(&[vec![2, -1], vec![-1, 2]]), MatrixKind::Finite);
        assert_eq!(k(&[vec![2, -2], vec![-2, 2]]), MatrixKind::Affine);
        assert_eq!(k(&[vec![2, -3], vec![-3, 2]]), MatrixKind::Indefinite);
        assert_eq!(k(&[vec![2, -1], vec![-4, 2]]), MatrixKind::Affine);
        assert_eq!(k(&[vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]), MatrixKind::Affine);
        assert_eq!(k(&[vec![2, -1, 0], vec![-1, 2, -2], vec![0, -2, 2]]), MatrixKind::Indefinite);
    }

    #[test]
    fn named_finite_types_are_finite() {
        for name in ["A1", "A5", "B2", "B4", "C3", "D4", "D5", "E6", "E7", "E8", "F4", "G2"] {
            let cd = symmetrize(&finite_type(name).unwrap()).unwrap();
            assert_eq!(cd.kind_of_whole(), Some(MatrixKind::Finite), "{name}");
        }
        assert!(finite_type("X3").is_err());
        assert!(finite_type("G3").is_err());
    }
}

//! Exact rational linear algebra: sparse reduced echelon forms and a few dense
//! helpers (rank, kernel, determinant, solve) over `BigRational`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar used throughout the crate.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"`, `"p"` or `"-p/q"`.
pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Q::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(Q::from_integer),
    }
}

pub fn format_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Finitely supported vector with ordered coordinates; zero entries are never stored.
pub type SparseVec<K> = BTreeMap<K, Q>;

pub fn sparse_axpy<K: Ord + Clone>(y: &mut SparseVec<K>, a: &Q, x: &SparseVec<K>) {
    if a.is_zero() {
        return;
    }
    for (k, v) in x {
        let e = y.entry(k.clone()).or_insert_with(Q::zero);
        *e += a * v;
        if e.is_zero() {
            y.remove(k);
        }
    }
}

/// Subspace of a sparse coordinate space kept in reduced row echelon form.
///
/// Each row has a pivot (its smallest key) with coefficient 1, and no other row
/// has a nonzero entry at that pivot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon<K: Ord + Clone> {
    rows: Vec<(K, SparseVec<K>)>,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Self { rows: Vec::new() }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_vectors<I: IntoIterator<Item = SparseVec<K>>>(vs: I) -> Self {
        let mut e = Self::new();
        for v in vs {
            e.insert(v);
        }
        e
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn basis(&self) -> impl Iterator<Item = &SparseVec<K>> {
        self.rows.iter().map(|(_, r)| r)
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.iter().map(|(p, _)| p)
    }

    /// Residual of `v` after elimination against every row.
    pub fn reduce(&self, v: &SparseVec<K>) -> SparseVec<K> {
        let mut out = v.clone();
        for (p, row) in &self.rows {
            if let Some(c) = out.get(p).cloned() {
                sparse_axpy(&mut out, &-c, row);
            }
        }
        out
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: SparseVec<K>) -> bool {
        let mut r = self.reduce(&v);
        let Some((pivot, lead)) = r.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let inv = lead.recip();
        for c in r.values_mut() {
            *c *= &inv;
        }
        for (_, row) in self.rows.iter_mut() {
            if let Some(c) = row.get(&pivot).cloned() {
                sparse_axpy(row, &-c, &r);
            }
        }
        let at = self.rows.partition_point(|(p, _)| *p < pivot);
        self.rows.insert(at, (pivot, r));
        true
    }

    pub fn contains_space(&self, other: &Echelon<K>) -> bool {
        other.basis().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Echelon<K>) -> Echelon<K> {
        let mut e = self.clone();
        for v in other.basis() {
            e.insert(v.clone());
        }
        e
    }

    /// Rows of `self` completing a basis of `sub` to a basis of `self`,
    /// i.e. a complement of `sub` inside `self` (assumes `sub ⊆ self`).
    pub fn complement_of(&self, sub: &Echelon<K>) -> Echelon<K> {
        let mut acc = sub.clone();
        let mut out = Echelon::new();
        for v in self.basis() {
            if acc.insert(v.clone()) {
                out.insert(v.clone());
            }
        }
        out
    }
}

pub type Matrix = Vec<Vec<Q>>;

pub fn int_matrix(rows: &[Vec<i64>]) -> Matrix {
    rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
}

/// Row-reduces in place; returns pivot columns.
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == nrows {
            break;
        }
        let Some(sel) = (row..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, sel);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..nrows {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..ncols {
                    let t = &f * &m[row][c];
                    m[r][c] -= t;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank(m: &Matrix) -> usize {
    let mut w = m.clone();
    rref(&mut w).len()
}

/// Basis of `{x : m x = 0}` where `m` has `ncols` columns.
pub fn kernel(m: &Matrix, ncols: usize) -> Vec<Vec<Q>> {
    let mut w = m.clone();
    let pivots = rref(&mut w);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![Q::zero(); ncols];
            v[fc] = Q::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -w[r][fc].clone();
            }
            v
        })
        .collect()
}

pub fn determinant(m: &Matrix) -> Q {
    let n = m.len();
    let mut w = m.clone();
    let mut det = Q::one();
    for col in 0..n {
        let Some(sel) = (col..n).find(|&r| !w[r][col].is_zero()) else {
            return Q::zero();
        };
        if sel != col {
            w.swap(sel, col);
            det = -det;
        }
        let p = w[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if !w[r][col].is_zero() {
                let f = &w[r][col] / &p;
                for c in col..n {
                    let t = &f * &w[col][c];
                    w[r][c] -= t;
                }
            }
        }
    }
    det
}

/// Some solution of `m x = b`, if the system is consistent.
pub fn solve(m: &Matrix, b: &[Q]) -> Option<Vec<Q>> {
    let ncols = m.first().map_or(0, |r| r.len());
    let mut aug: Matrix = m
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            let mut r = r.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&ncols) {
        return None;
    }
    let mut x = vec![Q::zero(); ncols];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[r][ncols].clone();
    }
    Some(x)
}

/// Scales a rational vector to the primitive integer vector on the same ray.
pub fn primitive_integer(v: &[Q]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Q::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    let sign = ints.iter().find(|x| !x.is_zero()).map_or(BigInt::one(), |x| {
        if x.is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        }
    });
    ints.into_iter().map(|x| x / &g * &sign).collect()
}

/// Primitive integer vectors spanning the rational kernel of the matrix whose
/// columns are `columns` (so `Σ c_i columns[i] = 0`).
pub fn integer_kernel(columns: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    let n = columns.len();
    let dim = columns.first().map_or(0, |c| c.len());
    let m: Matrix = (0..dim)
        .map(|r| columns.iter().map(|c| q(c[r])).collect())
        .collect();
    kernel(&m, n).iter().map(|v| primitive_integer(v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(entries: &[(usize, i64)]) -> SparseVec<usize> {
        entries.iter().map(|&(k, v)| (k, q(v))).collect()
    }

    #[test]
    fn echelon_insert_and_contains() {
        let mut e = Echelon::new();
        assert!(e.insert(sv(&[(0, 1), (1, 1)])));
        assert!(e.insert(sv(&[(1, 2), (2, 1)])));
        assert!(!e.insert(sv(&[(0, 2), (1, 4), (2, 1)])));
        assert_eq!(e.dim(), 2);
        assert!(e.contains(&sv(&[(0, 1), (1, 3), (2, 1)])));
        assert!(!e.contains(&sv(&[(2, 1)])));
    }

    #[test]
    fn complement_completes_basis() {
        let big = Echelon::from_vectors([sv(&[(0, 1)]), sv(&[(1, 1)]), sv(&[(2, 1)])]);
        let sub = Echelon::from_vectors([sv(&[(0, 1), (1, 1)])]);
        let c = big.complement_of(&sub);
        assert_eq!(c.dim(), 2);
        assert_eq!(sub.sum(&c).dim(), 3);
    }

    #[test]
    fn determinant_and_kernel() {
        let a2 = int_matrix(&[vec![2, -1], vec![-1, 2]]);
        assert_eq!(determinant(&a2), q(3));
        let a11 = int_matrix(&[vec![2, -2], vec![-2, 2]]);
        assert_eq!(determinant(&a11), q(0));
        let k = kernel(&a11, 2);
        assert_eq!(k.len(), 1);
        assert_eq!(primitive_integer(&k[0]), vec![BigInt::from(1), BigInt::from(1)]);
    }

    #[test]
    fn integer_kernel_finds_dependency() {
        let cols = vec![vec![1, 1, 0], vec![2, 2, 3], vec![0, 2, 3], vec![0, 4, 3]];
        let k = integer_kernel(&cols);
        assert_eq!(k.len(), 1);
        let expect: Vec<BigInt> = [2, -1, 2, -1].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(k[0], expect);
    }

    #[test]
    fn solve_consistent_and_not() {
        let m = int_matrix(&[vec![1, 1], vec![1, -1]]);
        assert_eq!(solve(&m, &[q(2), q(0)]), Some(vec![q(1), q(1)]));
        let sing = int_matrix(&[vec![1, 1], vec![2, 2]]);
        assert_eq!(solve(&sing, &[q(1), q(3)]), None);
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_q("-3/6"), Some(q_frac(-1, 2)));
        assert_eq!(parse_q("7"), Some(q(7)));
        assert_eq!(parse_q("1/0"), None);
        assert_eq!(format_q(&q_frac(4, 6)), "2/3");
    }
}

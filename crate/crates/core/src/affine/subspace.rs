//! Rational subspaces of a coordinate space, kept in reduced row echelon form
//! so that equal subspaces compare equal.

use num_traits::Zero;
use serde::Serialize;

use crate::linalg::{format_q, kernel, rref, Matrix, Q};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Q>>,
}

impl Subspace {
    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = Vec<Q>>) -> Self {
        let mut m: Matrix = vectors.into_iter().collect();
        for v in &m {
            assert_eq!(v.len(), ambient, "vector length must match the ambient dimension");
        }
        if m.is_empty() {
            return Self::zero(ambient);
        }
        let r = rref(&mut m).len();
        m.truncate(r);
        Subspace { ambient, basis: m }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(
            ambient,
            (0..ambient).map(|i| (0..ambient).map(|j| if i == j { Q::from_integer(1.into()) } else { Q::zero() }).collect()),
        )
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Q>] {
        &self.basis
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        let mut m = self.basis.clone();
        m.push(v.to_vec());
        rref(&mut m).len() == self.dim()
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::span(self.ambient, self.basis.iter().chain(&other.basis).cloned())
    }

    /// Annihilator under the standard dot product.
    fn annihilator(&self) -> Subspace {
        if self.is_zero() {
            return Self::full(self.ambient);
        }
        Subspace::span(self.ambient, kernel(&self.basis, self.ambient))
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        self.annihilator().sum(&other.annihilator()).annihilator()
    }

    /// `{x : (u, x) = 0 for all u in self}` for the form with Gram matrix `gram`.
    pub fn perp(&self, gram: &Matrix) -> Subspace {
        let rows: Matrix = self
            .basis
            .iter()
            .map(|u| {
                (0..self.ambient)
                    .map(|j| u.iter().zip(gram).fold(Q::zero(), |acc, (ui, row)| acc + ui * &row[j]))
                    .collect()
            })
            .collect();
        if rows.is_empty() {
            return Self::full(self.ambient);
        }
        Subspace::span(self.ambient, kernel(&rows, self.ambient))
    }

    /// Embeds into a larger space by appending zero coordinates.
    pub fn pad(&self, extra: usize) -> Subspace {
        Subspace {
            ambient: self.ambient + extra,
            basis: self
                .basis
                .iter()
                .map(|v| v.iter().cloned().chain(std::iter::repeat_n(Q::zero(), extra)).collect())
                .collect(),
        }
    }
}

impl Serialize for Subspace {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = self.basis.iter().map(|v| v.iter().map(format_q).collect()).collect();
        rows.serialize(s)
    }
}

//! Exact root-system combinatorics for symmetrizable Kac-Moody algebras.

pub mod cartan;
pub mod linalg;
pub mod rootslice;
pub mod subroot;
pub mod affine;
pub mod loopalg;
pub mod io;
pub mod fixtures;

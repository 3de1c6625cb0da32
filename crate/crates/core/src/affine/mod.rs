//! Exact combinatorics of untwisted affine root systems: periodic real closed
//! subroot systems, maximal closed subsystems of the finite part, and the data
//! classifying symmetric regular subalgebras.

use thiserror::Error;

use crate::cartan::CartanError;
use crate::rootslice::{RootError, RootVec};

pub mod finite;
pub mod maximal;
pub mod periodic;
pub mod subspace;
pub mod tuple;

pub use finite::{build_finite, FiniteRootSystem};
pub use maximal::{finite_closure, is_maximal_closed, maximal_closed, maximal_real_closed, Gradient, MaximalCase};
pub use periodic::{validate_periodic, AffineRoot, Component, PeriodicRootSet, RawComponent, ZLinearFn};
pub use subspace::Subspace;
pub use tuple::{
    is_maximal_tuple, tuple_derived, tuple_eq, tuple_full_gradient, tuple_leq, tuple_proper_gradient, tuple_roots,
    validate_tuple, MaximalShape, MaximalVerdict, PeriodicIntSet, SymRegTuple, TupleRoots, VAssign,
};

use periodic::AffineRoot as Root;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AffineError {
    #[error(transparent)]
    Cartan(#[from] CartanError),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error("rank {0} exceeds the cap {1}")]
    RankCap(usize, usize),
    #[error("Cartan matrix is not of finite type")]
    NotFinite,
    #[error("root system is not irreducible")]
    NotIrreducible,
    #[error("{0} is not a root")]
    NotARoot(RootVec),
    #[error("component {0} is empty")]
    EmptyComponent(usize),
    #[error("{0} belongs to two components")]
    Overlap(RootVec),
    #[error("components are not orthogonal: {0} and {1}")]
    NotOrthogonal(RootVec, RootVec),
    #[error("finite part is not closed: it must contain {0}")]
    NotClosed(RootVec),
    #[error("represented set is not real closed: {0} + {1} is missing")]
    NotRealClosed(Root, Root),
    #[error("negative period k = {0}")]
    NegativeK(i64),
    #[error("f has {0} base roots but {1} values")]
    FunctionShape(usize, usize),
    #[error("base root {0} is not in its component")]
    BaseOutsideComponent(RootVec),
    #[error("f is not linear on its base")]
    NotLinear,
    #[error("base does not span {0}")]
    BaseDoesNotSpan(RootVec),
    #[error("f is not integral at {0}")]
    NotIntegral(RootVec),
    #[error("subroot system is the whole finite root system")]
    NotProper,
    #[error("k = {0} is not prime")]
    NotPrime(i64),
    #[error("finite part is not a maximal closed subroot system")]
    NotMaximal,
    #[error("modulus must be positive, got {0}")]
    BadModulus(i64),
    #[error("Lambda contains 0")]
    LambdaContainsZero,
    #[error("Lambda is not symmetric at {0}")]
    LambdaNotSymmetric(i64),
    #[error("Lambda meets kZ at x = {x} (k = {k})")]
    LambdaMeetsK { x: i64, k: i64 },
    #[error("subspace of dimension-{0} space given, expected {1}")]
    VDimension(usize, usize),
    #[error("V_{x} is not orthogonal to h(Psi_{component})")]
    VNotOrthogonal { x: i64, component: usize },
    #[error("V_{x} meets the Cartan part of g(Psi)")]
    VMeetsCartan { x: i64 },
    #[error("imaginary roots not symmetric at level {0}")]
    NotSymmetric(i64),
}

//! Bracket engine for untwisted affine Lie algebras realized as
//! `g0 ⊗ C[t, t^-1] + Cc + Cd`.

pub mod chevalley;
pub mod element;
pub mod generate;
pub mod split;
pub mod verify;

use thiserror::Error;

use crate::affine::AffineError;

pub use chevalley::ChevalleyBasis;
pub use element::{Key, LoopElement};
pub use generate::{generate, generate_with_cap, RootSupport, SubalgebraSlice};
pub use split::{split_sym_special, SplitReport};
pub use verify::{verify_keyprop, verify_root_generated, verify_tuple_subalgebra};

#[derive(Debug, Error)]
pub enum LoopError {
    #[error(transparent)]
    Affine(#[from] AffineError),
    #[error("structure constants: {0}")]
    StructureConstant(String),
    #[error("basis key {0} does not belong to this algebra")]
    BadKey(String),
    #[error("zero generator")]
    ZeroGenerator,
    #[error("generator {0} is not homogeneous")]
    NotHomogeneous(String),
    #[error("band {band} is smaller than a generator degree {degree}")]
    BandTooSmall { band: i64, degree: i64 },
    #[error("slice exceeds {0} dimensions")]
    ResourceCap(usize),
    #[error("data belongs to a different finite root system")]
    Mismatch,
}

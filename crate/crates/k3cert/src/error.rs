use thiserror::Error;

/// Errors surfaced by the exact-arithmetic kernels.
///
/// Every integer operation in this crate is checked: overflow is reported as
/// [`Error::Overflow`], never wrapped. A certificate built on wrapped
/// arithmetic would be worthless.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("invalid lattice: {0}")]
    InvalidLattice(String),

    #[error("mixed divisor class {0:?} on an ambient-only lattice (only multiples of C are allowed)")]
    MixedClassOnAmbient((i128, i128)),

    #[error("slope is undefined for rank 0")]
    ZeroRank,

    #[error("Mukai vector rank must be nonnegative, got {0}")]
    NegativeRank(i128),

    #[error("lattice has C^2 = {c_sq}, incompatible with genus {g} (expected C^2 = 2g-2)")]
    GenusMismatch { g: i128, c_sq: i128 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("the linear/quadratic system degenerates to an infinite family of solutions")]
    InfiniteFamily,

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

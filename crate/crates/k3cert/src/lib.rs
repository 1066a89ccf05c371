//! Exact-arithmetic certificates for the numerics of Brill-Noether theory
//! on K3 surfaces: rank-2 Picard lattice pairings, Mukai vectors,
//! gonality/Clifford thresholds, binary-quadratic-form representability,
//! moduli-stack dimension formulas, and certificate-producing constrained
//! integer minimization.
//!
//! Everything is integer or exact-rational arithmetic; overflow is a
//! reported error, never a wraparound, and no decision goes through
//! floating point.
//!
//! Start with the runnable examples (`cargo run --example genus11`,
//! `--example exceptional_pairs`, `--example gonality_certificate`, ...),
//! or the `k3cert` binary for the same capabilities behind a CLI.

pub mod arith;
pub mod bn;
pub mod certify;
pub mod cli;
pub mod error;
pub mod lattice;
pub mod mukai;
pub mod qform;
pub mod report;
pub mod stacks;

pub use error::{Error, Result};
pub use lattice::{DivisorClass, PicardLattice};
pub use mukai::MukaiVector;
pub use qform::{BinaryQForm, RepCertificate, RepStatus};

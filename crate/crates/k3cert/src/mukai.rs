//! Mukai vectors and the Mukai pairing on the even cohomology of a K3
//! surface, together with builders for the vectors that show up in the
//! Brill-Noether analysis: Lazarsfeld-Mukai bundles, twisted ideal sheaves
//! and rank-2 quotient pieces.

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::bn;
use crate::error::{Error, Result};
use crate::lattice::{self, DivisorClass, PicardLattice};

/// Mukai vector (rank, c1, s) with s = chi - rank, the coefficient of the
/// fundamental cocycle. Storing s rather than chi matches the cohomological
/// convention; chi is recovered via [`MukaiVector::chi`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MukaiVector {
    pub rank: i128,
    pub c1: DivisorClass,
    pub s: i128,
}

impl MukaiVector {
    pub fn new(rank: i128, c1: DivisorClass, s: i128) -> Result<Self> {
        if rank < 0 {
            return Err(Error::NegativeRank(rank));
        }
        Ok(MukaiVector { rank, c1, s })
    }

    /// Euler characteristic chi = s + rank.
    pub fn chi(&self) -> Result<i128> {
        arith::add(self.s, self.rank, "chi")
    }

    /// v(O_S) = (1, 0, 1).
    pub fn structure_sheaf() -> Self {
        MukaiVector { rank: 1, c1: DivisorClass::ZERO, s: 1 }
    }
}

impl std::fmt::Display for MukaiVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.rank, self.c1, self.s)
    }
}

/// Mukai pairing <v, w> = c1(v).c1(w) - rank(v) s(w) - rank(w) s(v).
pub fn pairing(lat: &PicardLattice, v: &MukaiVector, w: &MukaiVector) -> Result<i128> {
    const CTX: &str = "mukai pairing";
    let c1c1 = lattice::intersect(lat, v.c1, w.c1)?;
    let rs = arith::mul(v.rank, w.s, CTX)?;
    let sr = arith::mul(w.rank, v.s, CTX)?;
    arith::sub(arith::sub(c1c1, rs, CTX)?, sr, CTX)
}

/// Euler characteristic of a pair of sheaves: chi(E, F) = -<v(E), v(F)>.
pub fn euler_pair(lat: &PicardLattice, v: &MukaiVector, w: &MukaiVector) -> Result<i128> {
    let p = pairing(lat, v, w)?;
    p.checked_neg().ok_or(Error::Overflow("euler_pair"))
}

/// Mukai vector of the Lazarsfeld-Mukai bundle of a g^r_d on a genus-g
/// curve in |C|: (r+1, C, g-d+r). The lattice must satisfy C^2 = 2g-2.
pub fn lm_vector(lat: &PicardLattice, g: i128, r: i128, d: i128) -> Result<MukaiVector> {
    if lat.c_sq() != 2 * g - 2 {
        return Err(Error::GenusMismatch { g, c_sq: lat.c_sq() });
    }
    if r < 1 {
        return Err(Error::InvalidArgument(format!("lm_vector needs r >= 1, got {r}")));
    }
    if d < 1 {
        return Err(Error::InvalidArgument(format!("lm_vector needs d >= 1, got {d}")));
    }
    let s = arith::add(arith::sub(g, d, "lm_vector")?, r, "lm_vector")?;
    MukaiVector::new(r + 1, DivisorClass::C, s)
}

/// Mukai vector of N tensor I_xi for a line bundle class N and a length-l
/// subscheme: (1, N, 1 + N^2/2 - l).
pub fn ideal_twist_vector(lat: &PicardLattice, n: DivisorClass, l: i128) -> Result<MukaiVector> {
    if l < 0 {
        return Err(Error::InvalidArgument(format!("subscheme length {l} < 0")));
    }
    let n_sq = lattice::self_int(lat, n)?;
    let s = arith::sub(arith::add(1, n_sq / 2, "ideal_twist")?, l, "ideal_twist")?;
    MukaiVector::new(1, n, s)
}

/// Mukai vector of a rank-2 piece with prescribed c1 and chi: (2, c1, chi-2).
pub fn rank2_piece_vector(c1: DivisorClass, chi: i128) -> Result<MukaiVector> {
    MukaiVector::new(2, c1, arith::sub(chi, 2, "rank2_piece")?)
}

/// LM self-pairing identity <v(E), v(E)> = 2(rho(g,r,d) - 1), valid for all
/// admissible (g, r, d). Exposed for the acceptance suite.
pub fn lm_self_pairing_matches_rho(lat: &PicardLattice, g: i128, r: i128, d: i128) -> Result<bool> {
    let v = lm_vector(lat, g, r, d)?;
    let lhs = pairing(lat, &v, &v)?;
    let rho = bn::rho(g, r, d)?;
    Ok(lhs == 2 * (rho - 1))
}

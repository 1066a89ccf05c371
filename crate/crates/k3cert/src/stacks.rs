//! Dimension formulas for the stacks of filtered sheaves behind the moduli
//! count, the alpha correction table for length-3 filtrations, and the
//! enumeration of the exceptional (g, d) pairs that survive every bound.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::arith::{self, rat, rat_int, Rat};
use crate::bn;
use crate::error::{Error, Result};
use crate::lattice::PicardLattice;
use crate::mukai::{self, MukaiVector};

/// Which of the three rank-1 pieces N, N1, N2 of a length-3 filtration are
/// isomorphic. N is the subsheaf, N1 the outer quotient, N2 the middle one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IsoPattern {
    AllDistinct,
    /// N = N1 = N2.
    AllIsomorphic,
    /// N = N1, N2 different.
    NIsoN1,
    /// N = N2, N1 different.
    NIsoN2,
    /// N1 = N2, N different.
    N1IsoN2,
}

/// Filtration type: isomorphism pattern plus the two subscheme lengths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationShape {
    pub pattern: IsoPattern,
    pub l1: i128,
    pub l2: i128,
}

impl FiltrationShape {
    pub fn new(pattern: IsoPattern, l1: i128, l2: i128) -> Result<Self> {
        if l1 < 0 || l2 < 0 {
            return Err(Error::InvalidArgument(format!(
                "subscheme lengths must be nonnegative, got ({l1}, {l2})"
            )));
        }
        Ok(FiltrationShape { pattern, l1, l2 })
    }
}

/// Possible values of the automorphism correction alpha for a filtration
/// shape, straight from the case table.
pub fn alpha_values(shape: &FiltrationShape) -> Vec<i128> {
    let FiltrationShape { pattern, l1, l2 } = *shape;
    match pattern {
        IsoPattern::AllDistinct => vec![3],
        IsoPattern::AllIsomorphic => {
            if l2 != 0 && l1 == 0 {
                vec![1, 2, 3]
            } else if l1 != 0 && l2 == 0 {
                vec![2, 3]
            } else {
                vec![3]
            }
        }
        IsoPattern::NIsoN1 => {
            if l1 == 0 {
                vec![2, 3]
            } else {
                vec![3]
            }
        }
        IsoPattern::NIsoN2 => {
            if l2 == 0 {
                vec![2, 3]
            } else {
                vec![3]
            }
        }
        IsoPattern::N1IsoN2 => {
            if l2 != 0 && l1 == 0 {
                vec![2, 3]
            } else {
                vec![3]
            }
        }
    }
}

/// Dimension of the stack of rank-2 extensions of two twisted ideal
/// sheaves: 2l1 + 2l2 - 2 + <v1, v2> as an equality, except when the two
/// line bundles agree, l2 != 0 and l1 = 0, where only the upper bound
/// 2l1 + 2l2 - 1 + <v1, v2> is available (the Hom spaces then depend on
/// the relative position of the subschemes). `is_upper_bound` records
/// which case applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientStackDim {
    pub value: i128,
    pub is_upper_bound: bool,
}

pub fn dim_q_rank2_extensions(
    lat: &PicardLattice,
    v1: &MukaiVector,
    v2: &MukaiVector,
    l1: i128,
    l2: i128,
    pieces_isomorphic: bool,
) -> Result<QuotientStackDim> {
    if v1.rank != 1 || v2.rank != 1 {
        return Err(Error::InvalidArgument(format!(
            "extension pieces must have rank 1, got {} and {}",
            v1.rank, v2.rank
        )));
    }
    if l1 < 0 || l2 < 0 {
        return Err(Error::InvalidArgument(format!("negative lengths ({l1}, {l2})")));
    }
    const CTX: &str = "dim_q_rank2_extensions";
    let pair = mukai::pairing(lat, v1, v2)?;
    let base = arith::add(arith::mul(2, arith::add(l1, l2, CTX)?, CTX)?, pair, CTX)?;
    if pieces_isomorphic && l2 != 0 && l1 == 0 {
        Ok(QuotientStackDim { value: arith::sub(base, 1, CTX)?, is_upper_bound: true })
    } else {
        Ok(QuotientStackDim { value: arith::sub(base, 2, CTX)?, is_upper_bound: false })
    }
}

/// dim P_{N,l} = 2l + <v, v> + <v(N x I_xi), v> for a rank-2 piece `v` and
/// rank-1 twisted ideal vector `v_n`.
pub fn dim_p_rank2sub(
    lat: &PicardLattice,
    l: i128,
    v: &MukaiVector,
    v_n: &MukaiVector,
) -> Result<i128> {
    if v.rank != 2 {
        return Err(Error::InvalidArgument(format!("v must have rank 2, got {}", v.rank)));
    }
    if v_n.rank != 1 {
        return Err(Error::InvalidArgument(format!("v_n must have rank 1, got {}", v_n.rank)));
    }
    const CTX: &str = "dim_p_rank2sub";
    let vv = mukai::pairing(lat, v, v)?;
    let nv = mukai::pairing(lat, v_n, v)?;
    arith::add(arith::add(arith::mul(2, l, CTX)?, vv, CTX)?, nv, CTX)
}

/// dim G_{N,l} = g + rho(g,2,d) + chi(M, N x I_xi).
pub fn dim_g_rank2sub(g: i128, d: i128, chi_pair: i128) -> Result<i128> {
    const CTX: &str = "dim_g_rank2sub";
    arith::add(arith::add(g, bn::rho(g, 2, d)?, CTX)?, chi_pair, CTX)
}

/// dim G_N = g + rho(g,2,d) + chi(E/N, N) for the rank-2-quotient stratum.
pub fn dim_g_rank2quot(g: i128, d: i128, chi_quot_sub: i128) -> Result<i128> {
    dim_g_rank2sub(g, d, chi_quot_sub)
}

/// Cap for chi(E/N, N): 3g/2 - 2d + 3.
pub fn chi_quot_sub_cap(g: i128, d: i128) -> Rat {
    rat(3 * g, 2) + rat_int(3 - 2 * d)
}

/// Moduli bound for the rank-2-quotient stratum: g + rho + 3g/2 - 2d + 4.
pub fn dim_w_rank2quot_bound(g: i128, d: i128) -> Result<Rat> {
    let base = rat_int(arith::add(g, bn::rho(g, 2, d)?, "dim_w bound")?);
    Ok(base + chi_quot_sub_cap(g, d) + rat_int(1))
}

/// Pencil-stratum dimension g + d - 1 - x, where x = c1(N).c1(M).
pub fn dim_g_pencil(g: i128, d: i128, x: i128) -> Result<i128> {
    const CTX: &str = "dim_g_pencil";
    arith::sub(arith::sub(arith::add(g, d, CTX)?, 1, CTX)?, x, CTX)
}

/// Moduli bound for a length-3 filtration stratum: g/4 + d + 3/2 - alpha.
pub fn dim_w_filtration(g: i128, d: i128, alpha: i128) -> Result<Rat> {
    if !(1..=3).contains(&alpha) {
        return Err(Error::InvalidArgument(format!("alpha must be 1, 2 or 3, got {alpha}")));
    }
    Ok(rat(g, 4) + rat_int(d) + rat(3, 2) - rat_int(alpha))
}

/// A named exact dimension value with its inputs echoed, for reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimReport {
    pub name: String,
    /// Canonical rational rendering, `p` or `p/q`.
    pub value: String,
    pub inputs: BTreeMap<String, i128>,
}

impl DimReport {
    pub fn from_int(name: &str, value: i128, inputs: &[(&str, i128)]) -> Self {
        Self::from_rat(name, &rat_int(value), inputs)
    }

    pub fn from_rat(name: &str, value: &Rat, inputs: &[(&str, i128)]) -> Self {
        DimReport {
            name: name.to_string(),
            value: arith::rat_to_string(value),
            inputs: inputs.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
        }
    }
}

/// Candidate and surviving (g, d) pairs of the borderline analysis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionalPairs {
    pub g_max: i128,
    pub candidates: Vec<(i128, i128)>,
    pub survivors: Vec<(i128, i128)>,
}

/// Minimal alpha compatible with a dominating stratum at genus g: alpha = 1
/// forces the all-isomorphic pattern, which needs a properly semistable
/// bundle of slope (2g-2)/3; when gcd(2g-2, 3) = 1 none exists, so 2 is the
/// floor.
pub fn alpha_min(g: i128) -> i128 {
    if num::integer::gcd(2 * g - 2, 3) == 1 {
        2
    } else {
        1
    }
}

/// Enumerate the (g, d) with 2 <= g <= g_max that evade the dimension
/// bounds: k maximal, 2d >= 3k, rho(g,2,d) >= 0 and d <= 5g/8 + 13/4.
/// Survivors are the candidates not eliminated by the borderline test
/// alpha_min > 2h - 2 floor(h) + 1 at d = floor(h), h = (5g+26)/8.
pub fn exceptional_pairs(g_max: i128) -> Result<ExceptionalPairs> {
    if g_max < 2 {
        return Err(Error::InvalidArgument(format!("g_max {g_max} < 2")));
    }
    let mut candidates = Vec::new();
    let mut survivors = Vec::new();
    for g in 2..=g_max {
        let k = bn::max_gonality(g)?;
        let d_lo = std::cmp::max(arith::div_ceil(3 * k, 2), arith::div_ceil(2 * g + 6, 3));
        let d_hi = arith::div_floor(5 * g + 26, 8);
        for d in d_lo..=d_hi {
            debug_assert!(bn::rho(g, 2, d)? >= 0);
            candidates.push((g, d));
            let floor_h = d_hi;
            if d < floor_h {
                survivors.push((g, d));
                continue;
            }
            // borderline d = floor(h): eliminated iff alpha_min > 2h - 2 floor(h) + 1
            let margin = rat(2 * (5 * g + 26), 8) - rat_int(2 * floor_h) + rat_int(1);
            if rat_int(alpha_min(g)) > margin {
                continue;
            }
            survivors.push((g, d));
        }
    }
    Ok(ExceptionalPairs { g_max, candidates, survivors })
}

//! Exact arithmetic on a rank-2 Picard lattice with basis (H, C).
//!
//! All geometric quantities in this crate reduce to the three Gram numbers
//! H^2, C^2 and C.H. Divisor classes are integer pairs D = mH + nC and the
//! intersection pairing is extended bilinearly.

use serde::{Deserialize, Serialize};

use crate::arith::{self, Rat};
use crate::error::{Error, Result};

/// Rank-2 even lattice spanned by a polarization H and a curve class C.
///
/// Invariants enforced at construction: `h_sq` and `c_sq` are even (the
/// intersection form of a K3 surface is even) and `c_sq >= 2`, so the curve
/// genus g = c_sq/2 + 1 is at least 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PicardLattice {
    h_sq: i128,
    c_sq: i128,
    hc: i128,
    ambient_only: bool,
}

/// On-disk form of a lattice spec file: `{"h_sq": 6, "c_sq": 20, "hc": 13}`.
/// Unknown keys are rejected.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeSpec {
    pub h_sq: i128,
    pub c_sq: i128,
    pub hc: i128,
}

impl PicardLattice {
    pub fn new(h_sq: i128, c_sq: i128, hc: i128) -> Result<Self> {
        if h_sq % 2 != 0 {
            return Err(Error::InvalidLattice(format!("H^2 = {h_sq} is odd")));
        }
        if c_sq % 2 != 0 {
            return Err(Error::InvalidLattice(format!("C^2 = {c_sq} is odd")));
        }
        if c_sq < 2 {
            return Err(Error::InvalidLattice(format!("C^2 = {c_sq} < 2")));
        }
        Ok(PicardLattice { h_sq, c_sq, hc, ambient_only: false })
    }

    /// Rank-1 ambient setting Pic = Z.C, modeled as the rank-2 lattice with
    /// H := C. Operations reject classes with a nonzero H component.
    pub fn ambient_only(c_sq: i128) -> Result<Self> {
        let mut lat = Self::new(c_sq, c_sq, c_sq)?;
        lat.ambient_only = true;
        Ok(lat)
    }

    pub fn from_spec(spec: &LatticeSpec) -> Result<Self> {
        Self::new(spec.h_sq, spec.c_sq, spec.hc)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let spec: LatticeSpec = serde_json::from_str(text)
            .map_err(|e| Error::InvalidLattice(format!("bad lattice spec: {e}")))?;
        Self::from_spec(&spec)
    }

    pub fn h_sq(&self) -> i128 {
        self.h_sq
    }

    pub fn c_sq(&self) -> i128 {
        self.c_sq
    }

    pub fn hc(&self) -> i128 {
        self.hc
    }

    pub fn is_ambient_only(&self) -> bool {
        self.ambient_only
    }

    /// Genus of curves in |C|: g = C^2/2 + 1.
    pub fn genus(&self) -> i128 {
        self.c_sq / 2 + 1
    }

    /// The genus-11 lattice of the Noether-Lefschetz computation:
    /// H^2 = 6, C^2 = 20, C.H = 13.
    pub fn genus11() -> Self {
        PicardLattice { h_sq: 6, c_sq: 20, hc: 13, ambient_only: false }
    }

    fn check_class(&self, d: DivisorClass) -> Result<()> {
        if self.ambient_only && d.m != 0 {
            return Err(Error::MixedClassOnAmbient((d.m, d.n)));
        }
        Ok(())
    }
}

/// Integer divisor class D = mH + nC.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DivisorClass {
    pub m: i128,
    pub n: i128,
}

impl DivisorClass {
    pub const ZERO: DivisorClass = DivisorClass { m: 0, n: 0 };
    /// The polarization class H.
    pub const H: DivisorClass = DivisorClass { m: 1, n: 0 };
    /// The curve class C.
    pub const C: DivisorClass = DivisorClass { m: 0, n: 1 };

    pub fn new(m: i128, n: i128) -> Self {
        DivisorClass { m, n }
    }
}

// Divisor classes serialize as plain pairs [m, n].
impl Serialize for DivisorClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        (self.m, self.n).serialize(s)
    }
}

impl<'de> Deserialize<'de> for DivisorClass {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let (m, n) = <(i128, i128)>::deserialize(d)?;
        Ok(DivisorClass { m, n })
    }
}

impl std::ops::Add for DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: DivisorClass) -> DivisorClass {
        DivisorClass { m: self.m + rhs.m, n: self.n + rhs.n }
    }
}

impl std::ops::Sub for DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: DivisorClass) -> DivisorClass {
        DivisorClass { m: self.m - rhs.m, n: self.n - rhs.n }
    }
}

impl std::fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.m, self.n)
    }
}

/// Intersection number D.D' = m m' H^2 + (m n' + m' n) C.H + n n' C^2.
pub fn intersect(lat: &PicardLattice, d1: DivisorClass, d2: DivisorClass) -> Result<i128> {
    lat.check_class(d1)?;
    lat.check_class(d2)?;
    const CTX: &str = "intersect";
    let hh = arith::mul(arith::mul(d1.m, d2.m, CTX)?, lat.h_sq, CTX)?;
    let cross = arith::add(
        arith::mul(d1.m, d2.n, CTX)?,
        arith::mul(d2.m, d1.n, CTX)?,
        CTX,
    )?;
    let hc = arith::mul(cross, lat.hc, CTX)?;
    let cc = arith::mul(arith::mul(d1.n, d2.n, CTX)?, lat.c_sq, CTX)?;
    arith::add(arith::add(hh, hc, CTX)?, cc, CTX)
}

/// Self-intersection D^2; always even on an even lattice.
pub fn self_int(lat: &PicardLattice, d: DivisorClass) -> Result<i128> {
    intersect(lat, d, d)
}

/// Degree of D on the curve: C.D.
pub fn degree_on_c(lat: &PicardLattice, d: DivisorClass) -> Result<i128> {
    intersect(lat, d, DivisorClass::C)
}

/// Riemann-Roch count chi(O_S(D)) = 2 + D^2/2 on a K3 surface.
pub fn rr_count(lat: &PicardLattice, d: DivisorClass) -> Result<i128> {
    let sq = self_int(lat, d)?;
    debug_assert!(sq % 2 == 0);
    arith::add(2, sq / 2, "rr_count")
}

/// L-slope of a sheaf with first Chern class `c1` and the given rank:
/// (c1 . C) / rank, as an exact rational.
pub fn slope(lat: &PicardLattice, c1: DivisorClass, rank: i128) -> Result<Rat> {
    if rank == 0 {
        return Err(Error::ZeroRank);
    }
    if rank < 0 {
        return Err(Error::InvalidArgument(format!("rank {rank} < 1")));
    }
    Ok(arith::rat(degree_on_c(lat, c1)?, rank))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use proptest::prelude::*;

    fn g11() -> PicardLattice {
        PicardLattice::genus11()
    }

    #[test]
    fn genus11_gram_numbers() {
        let lat = g11();
        assert_eq!(intersect(&lat, DivisorClass::H, DivisorClass::C).unwrap(), 13);
        assert_eq!(intersect(&lat, DivisorClass::H, DivisorClass::H).unwrap(), 6);
        assert_eq!(self_int(&lat, DivisorClass::C).unwrap(), 20);
        assert_eq!(lat.genus(), 11);
    }

    #[test]
    fn intersect_zero_class() {
        let lat = PicardLattice::new(-4, 8, 3).unwrap();
        assert_eq!(intersect(&lat, DivisorClass::ZERO, DivisorClass::new(5, -7)).unwrap(), 0);
    }

    #[test]
    fn self_int_examples() {
        let lat = g11();
        // (1,1): 6 + 20 + 26
        assert_eq!(self_int(&lat, DivisorClass::new(1, 1)).unwrap(), 52);
        assert_eq!(self_int(&lat, DivisorClass::C).unwrap(), 20);
        assert_eq!(self_int(&lat, DivisorClass::ZERO).unwrap(), 0);
    }

    #[test]
    fn degree_examples() {
        let lat = g11();
        assert_eq!(degree_on_c(&lat, DivisorClass::H).unwrap(), 13);
        // 13*13 + 20*(-8) = 9, the degree-9 class of the g^2_9 analysis
        assert_eq!(degree_on_c(&lat, DivisorClass::new(13, -8)).unwrap(), 9);
        assert_eq!(degree_on_c(&lat, DivisorClass::ZERO).unwrap(), 0);
    }

    #[test]
    fn rr_count_examples() {
        let lat = g11();
        assert_eq!(rr_count(&lat, DivisorClass::ZERO).unwrap(), 2);
        // chi(C) = 2 + 10 = g + 1
        assert_eq!(rr_count(&lat, DivisorClass::C).unwrap(), 12);
        assert_eq!(rr_count(&lat, DivisorClass::H).unwrap(), 5);
    }

    #[test]
    fn slope_examples() {
        let lat = g11();
        assert_eq!(slope(&lat, DivisorClass::C, 3).unwrap(), rat(20, 3));
        assert_eq!(slope(&lat, DivisorClass::ZERO, 5).unwrap(), rat(0, 1));
        assert_eq!(slope(&lat, DivisorClass::C, 1).unwrap(), rat(20, 1));
        assert_eq!(slope(&lat, DivisorClass::C, 0), Err(Error::ZeroRank));
    }

    #[test]
    fn lattice_validation() {
        assert!(PicardLattice::new(5, 20, 13).is_err());
        assert!(PicardLattice::new(6, 19, 13).is_err());
        assert!(PicardLattice::new(6, 0, 13).is_err());
        // negative even H^2 is allowed (test lattices for (-2)-class hunting)
        assert!(PicardLattice::new(-2, 2, 0).is_ok());
    }

    #[test]
    fn ambient_only_rejects_mixed_classes() {
        let lat = PicardLattice::ambient_only(20).unwrap();
        assert_eq!(self_int(&lat, DivisorClass::new(0, 2)).unwrap(), 80);
        assert_eq!(
            intersect(&lat, DivisorClass::H, DivisorClass::C),
            Err(Error::MixedClassOnAmbient((1, 0)))
        );
        assert_eq!(slope(&lat, DivisorClass::C, 2).unwrap(), rat(10, 1));
    }

    #[test]
    fn lattice_spec_file_round_trip() {
        let lat = PicardLattice::from_json(r#"{"h_sq": 6, "c_sq": 20, "hc": 13}"#).unwrap();
        assert_eq!(lat, g11());
        assert!(PicardLattice::from_json(r#"{"h_sq": 6, "c_sq": 20, "hc": 13, "x": 1}"#).is_err());
        assert!(PicardLattice::from_json(r#"{"h_sq": 6, "c_sq": 21, "hc": 13}"#).is_err());
    }

    proptest! {
        #[test]
        fn pairing_is_symmetric_and_bilinear(
            h in -20i128..20, c in 1i128..20, hc in -30i128..30,
            m1 in -50i128..50, n1 in -50i128..50,
            m2 in -50i128..50, n2 in -50i128..50,
            m3 in -50i128..50, n3 in -50i128..50,
        ) {
            let lat = PicardLattice::new(2 * h, 2 * c, hc).unwrap();
            let a = DivisorClass::new(m1, n1);
            let b = DivisorClass::new(m2, n2);
            let cc = DivisorClass::new(m3, n3);
            prop_assert_eq!(intersect(&lat, a, b).unwrap(), intersect(&lat, b, a).unwrap());
            prop_assert_eq!(
                intersect(&lat, a + b, cc).unwrap(),
                intersect(&lat, a, cc).unwrap() + intersect(&lat, b, cc).unwrap()
            );
        }

        #[test]
        fn self_int_is_even(
            h in -20i128..20, c in 1i128..20, hc in -30i128..30,
            m in -100i128..100, n in -100i128..100,
        ) {
            let lat = PicardLattice::new(2 * h, 2 * c, hc).unwrap();
            prop_assert_eq!(self_int(&lat, DivisorClass::new(m, n)).unwrap() % 2, 0);
        }

        #[test]
        fn degree_is_additive(
            h in -20i128..20, c in 1i128..20, hc in -30i128..30,
            m1 in -50i128..50, n1 in -50i128..50,
            m2 in -50i128..50, n2 in -50i128..50,
        ) {
            let lat = PicardLattice::new(2 * h, 2 * c, hc).unwrap();
            let a = DivisorClass::new(m1, n1);
            let b = DivisorClass::new(m2, n2);
            prop_assert_eq!(
                degree_on_c(&lat, a + b).unwrap(),
                degree_on_c(&lat, a).unwrap() + degree_on_c(&lat, b).unwrap()
            );
        }

        #[test]
        fn rr_residuation_identity(
            h in -20i128..20, c in 1i128..20, hc in -30i128..30,
            m in -50i128..50, n in -50i128..50,
        ) {
            // chi(D) + chi(C-D) = 4 + (C^2 - 2 D.(C-D)) / 2
            let lat = PicardLattice::new(2 * h, 2 * c, hc).unwrap();
            let d = DivisorClass::new(m, n);
            let res = DivisorClass::C - d;
            let lhs = rr_count(&lat, d).unwrap() + rr_count(&lat, res).unwrap();
            let rhs = 4 + (lat.c_sq() - 2 * intersect(&lat, d, res).unwrap()) / 2;
            prop_assert_eq!(lhs, rhs);
        }
    }
}

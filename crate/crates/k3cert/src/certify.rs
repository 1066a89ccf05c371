//! Certificate-producing minimization of f(m, n) = D.(C - D) over the
//! constraint systems of the transversality theorems, and the genus-11
//! Diophantine case analysis.
//!
//! The objective is concave in m for fixed n, so the minimum over each
//! feasible m-interval sits at an endpoint. A certificate enumerates a
//! finite n-window exactly and then certifies the tails |n| > window by
//! sign checks on the boundary functions, with the irrational interval
//! endpoints alpha, beta handled implicitly through the sign of their
//! defining quadratic (never through square roots).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::arith::{self, rat, rat_int, surd_sign, Rat};
use crate::bn;
use crate::error::{Error, Result};
use crate::lattice::{self, DivisorClass, PicardLattice};
use crate::mukai;
use crate::qform::{self, RepCertificate};

/// Which degree-bound constraint closes the system: the gonality variant
/// uses m d + (2n-1)(g-1) <= 0, the Clifford-net variant the weaker
/// 3 m d + (6n-4)(g-1) <= 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    Gonality,
    CliffordNet,
}

/// One minimization instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DMProblem {
    pub g: i128,
    pub r: i128,
    pub d: i128,
    pub variant: Variant,
}

/// Magnitude cap on problem data; keeps every scalar expression in the
/// certifier (windows, squares, boundary values) well inside i128.
const PARAM_CAP: i128 = 1 << 40;

impl DMProblem {
    pub fn new(g: i128, r: i128, d: i128, variant: Variant) -> Result<Self> {
        if g < 2 {
            return Err(Error::InvalidArgument(format!("genus {g} < 2")));
        }
        if r < 2 {
            return Err(Error::InvalidArgument(format!(
                "rank {r} < 2: the objective is not strictly concave"
            )));
        }
        if d < 1 {
            return Err(Error::InvalidArgument(format!("degree {d} < 1")));
        }
        if g > PARAM_CAP || r > PARAM_CAP || d > PARAM_CAP {
            return Err(Error::InvalidArgument(format!(
                "parameters capped at 2^40, got ({g}, {r}, {d})"
            )));
        }
        Ok(DMProblem { g, r, d, variant })
    }

    /// Target lower bound T = d - 2r + 2.
    pub fn threshold(&self) -> i128 {
        self.d - 2 * self.r + 2
    }

    /// Default enumeration window, far past the tail onset.
    pub fn default_n_window(&self) -> i128 {
        4 * (self.g + self.d + self.r)
    }

    /// The recorded (not enforced) hypotheses of the transversality
    /// theorems, each individually testable.
    pub fn hypotheses(&self) -> Result<BTreeMap<String, bool>> {
        let DMProblem { g, r, d, .. } = *self;
        let mut map = BTreeMap::new();
        map.insert("rank_at_least_3".into(), r >= 3);
        map.insert("rho_negative".into(), bn::rho(g, r, d)? < 0);
        map.insert("degree_at_most_g_minus_1".into(), d < g);
        map.insert(
            "threshold_at_least_max_gonality".into(),
            self.threshold() >= bn::max_gonality(g)?,
        );
        let quad = if r >= 4 {
            checked_sq(d)? > 4 * (r - 1) * (g + r - 2)
        } else if r == 3 {
            checked_sq(d)? > 8 * g + 1
        } else {
            false
        };
        map.insert("quadratic_growth".into(), quad);
        Ok(map)
    }

    /// The separate quadratic-form hypothesis: -1 not represented by
    /// (r-1, d, g-1). Reported alongside certificates, never gating them.
    pub fn minus_one_hypothesis(&self, search_bound: i128) -> Result<RepCertificate> {
        let q = qform::BinaryQForm::from_bn(self.g, self.r, self.d)?;
        qform::represents(&q, -1, search_bound)
    }
}

fn checked_sq(x: i128) -> Result<i128> {
    arith::mul(x, x, "square")
}

/// f(m, n) = D.C - D^2 = -(2r-2) m^2 + d(1-2n) m + (n - n^2)(2g-2).
pub fn f_value(g: i128, r: i128, d: i128, m: i128, n: i128) -> Result<i128> {
    const CTX: &str = "f_value";
    let quad = arith::mul(2 * r - 2, arith::mul(m, m, CTX)?, CTX)?;
    let lin = arith::mul(d, arith::mul(1 - 2 * n, m, CTX)?, CTX)?;
    let cst = arith::mul(
        arith::sub(n, arith::mul(n, n, CTX)?, CTX)?,
        2 * g - 2,
        CTX,
    )?;
    arith::add(arith::sub(lin, quad, CTX)?, cst, CTX)
}

/// Per-constraint feasibility record.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintBreakdown {
    /// (1): (r-1)m^2 + mnd + n^2(g-1) > 0, i.e. D^2 > 0 halved.
    pub square_d_positive: bool,
    /// (2): the same form at (m, n-1), i.e. (C-D)^2 > 0 halved.
    pub square_cd_positive: bool,
    /// (3): 2 < (2r-2)m + nd < d-2.
    pub degree_strip: bool,
    /// (4) or (iv'): the slope/degree upper bound.
    pub degree_bound: bool,
}

impl ConstraintBreakdown {
    pub fn all(&self) -> bool {
        self.square_d_positive && self.square_cd_positive && self.degree_strip && self.degree_bound
    }
}

/// Half self-intersection form (r-1)m^2 + mnd + n^2(g-1) at (m, n).
fn half_square(g: i128, r: i128, d: i128, m: i128, n: i128) -> Result<i128> {
    const CTX: &str = "half_square";
    let a = arith::mul(r - 1, arith::mul(m, m, CTX)?, CTX)?;
    let b = arith::mul(d, arith::mul(m, n, CTX)?, CTX)?;
    let c = arith::mul(g - 1, arith::mul(n, n, CTX)?, CTX)?;
    arith::add(arith::add(a, b, CTX)?, c, CTX)
}

pub fn feasible(p: &DMProblem, m: i128, n: i128) -> Result<(bool, ConstraintBreakdown)> {
    const CTX: &str = "feasible";
    let DMProblem { g, r, d, variant } = *p;
    let strip_val = arith::add(arith::mul(2 * r - 2, m, CTX)?, arith::mul(n, d, CTX)?, CTX)?;
    let bound_val = match variant {
        Variant::Gonality => arith::add(
            arith::mul(m, d, CTX)?,
            arith::mul(2 * n - 1, g - 1, CTX)?,
            CTX,
        )?,
        Variant::CliffordNet => arith::add(
            arith::mul(3, arith::mul(m, d, CTX)?, CTX)?,
            arith::mul(6 * n - 4, g - 1, CTX)?,
            CTX,
        )?,
    };
    let br = ConstraintBreakdown {
        square_d_positive: half_square(g, r, d, m, n)? > 0,
        square_cd_positive: half_square(g, r, d, m, n - 1)? > 0,
        degree_strip: 2 < strip_val && strip_val < d - 2,
        degree_bound: bound_val <= 0,
    };
    Ok((br.all(), br))
}

/// Closed integer interval {m : a m^2 + b m + c <= 0} for a > 0, located by
/// integer square-root brackets and endpoint evaluation, or None.
fn nonpositive_interval(a: i128, b: i128, c: i128) -> Result<Option<(i128, i128)>> {
    const CTX: &str = "quadratic exclusion";
    debug_assert!(a > 0);
    let disc = arith::sub(checked_sq(b)?, arith::mul(4, arith::mul(a, c, CTX)?, CTX)?, CTX)?;
    if disc < 0 {
        return Ok(None);
    }
    let s = arith::isqrt(disc);
    let eval = |m: i128| -> Result<i128> {
        arith::add(
            arith::add(arith::mul(a, checked_sq(m)?, CTX)?, arith::mul(b, m, CTX)?, CTX)?,
            c,
            CTX,
        )
    };
    let mut lo = arith::div_floor(-b - s, 2 * a) - 1;
    let mut hi = arith::div_floor(-b + s, 2 * a) + 1;
    while lo <= hi && eval(lo)? > 0 {
        lo += 1;
    }
    while hi >= lo && eval(hi)? > 0 {
        hi -= 1;
    }
    if lo > hi {
        return Ok(None);
    }
    debug_assert!(eval(lo)? <= 0 && eval(hi)? <= 0);
    Ok(Some((lo, hi)))
}

fn subtract_interval(pieces: Vec<(i128, i128)>, cut: (i128, i128)) -> Vec<(i128, i128)> {
    let mut out = Vec::new();
    for (lo, hi) in pieces {
        if cut.1 < lo || cut.0 > hi {
            out.push((lo, hi));
            continue;
        }
        if cut.0 > lo {
            out.push((lo, cut.0 - 1));
        }
        if cut.1 < hi {
            out.push((cut.1 + 1, hi));
        }
    }
    out
}

/// Feasible m-values for fixed n: intersection of the open strip from (3),
/// the half-line from (4)/(iv'), minus the closed root intervals of the
/// quadratic constraints (1) and (2). Disjoint, ascending.
pub fn feasible_m_intervals(p: &DMProblem, n: i128) -> Result<Vec<(i128, i128)>> {
    const CTX: &str = "feasible_m_intervals";
    let DMProblem { g, r, d, variant } = *p;
    let den = 2 * r - 2;
    // 2 < den*m + n*d < d-2
    let lo = arith::div_floor(arith::sub(2, arith::mul(n, d, CTX)?, CTX)?, den) + 1;
    let hi_strip = arith::div_ceil(arith::sub(d - 2, arith::mul(n, d, CTX)?, CTX)?, den) - 1;
    let hi_bound = match variant {
        Variant::Gonality => {
            arith::div_floor(arith::mul(1 - 2 * n, g - 1, CTX)?, d)
        }
        Variant::CliffordNet => {
            arith::div_floor(arith::mul(4 - 6 * n, g - 1, CTX)?, 3 * d)
        }
    };
    let hi = hi_strip.min(hi_bound);
    if lo > hi {
        return Ok(Vec::new());
    }
    let mut pieces = vec![(lo, hi)];
    // exclusion from (1): (r-1)m^2 + (nd)m + n^2(g-1) <= 0
    if let Some(cut) = nonpositive_interval(
        r - 1,
        arith::mul(n, d, CTX)?,
        arith::mul(checked_sq(n)?, g - 1, CTX)?,
    )? {
        pieces = subtract_interval(pieces, cut);
    }
    // exclusion from (2): the same form at n-1
    if let Some(cut) = nonpositive_interval(
        r - 1,
        arith::mul(n - 1, d, CTX)?,
        arith::mul(checked_sq(n - 1)?, g - 1, CTX)?,
    )? {
        pieces = subtract_interval(pieces, cut);
    }
    Ok(pieces)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MinStatus {
    Proved,
    Refuted,
    Unknown,
}

/// Certificate for the constrained minimum of f.
///
/// `min_found` is the exact minimum over the enumerated window; when
/// `tail_ok` holds, every feasible point outside the window has f strictly
/// above the threshold, so a `Proved` certificate asserts both
/// f >= threshold globally and that `minimizers` is the complete set of
/// minimizers whenever `min_found <= threshold`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinCertificate {
    pub status: MinStatus,
    pub threshold: i128,
    pub min_found: i128,
    pub minimizers: Vec<(i128, i128)>,
    pub window: (i128, i128),
    pub tail_ok: bool,
    pub hypotheses: BTreeMap<String, bool>,
    pub trace: String,
}

/// Exact rational coefficients (a, b, c) of the Clifford-net boundary
/// quadratic g(n) = f((g-1)(4/3 - 2n)/d, n) - (d - 2r + 2), straight from
/// the displayed formulas.
pub fn pappa_coefficients(g: i128, r: i128, d: i128) -> Result<(Rat, Rat, Rat)> {
    if d < 1 || r < 2 {
        return Err(Error::InvalidArgument(format!("need d >= 1 and r >= 2, got d={d}, r={r}")));
    }
    let u = rat(g - 1, d);
    let u2 = u.clone() * u.clone();
    let two_r2 = rat_int(2 * r - 2);
    let dd = rat_int(d);
    let a = rat_int(-4) * two_r2.clone() * u2.clone() + rat_int(2) * dd.clone() * u.clone();
    let b = rat(16, 3) * two_r2.clone() * u2.clone() - rat(8, 3) * dd.clone() * u.clone();
    let c = rat(-16, 9) * two_r2.clone() * u2 + rat(4, 3) * dd * u - rat_int(d) + two_r2;
    Ok((a, b, c))
}

/// Both sides of the positivity test for the constant coefficient:
/// c > 0, and 3/4 < (g-1)/d < (3/8)(d - 2(r-1))/(r-1), computed
/// independently.
pub fn pappa_c_equivalence(g: i128, r: i128, d: i128) -> Result<(bool, bool)> {
    let (_, _, c) = pappa_coefficients(g, r, d)?;
    let u = rat(g - 1, d);
    let upper = rat(3, 8) * rat(d - 2 * (r - 1), r - 1);
    Ok((c > rat_int(0), rat(3, 4) < u && u < upper))
}

/// Sign check for f(-alpha n, n) - T (side = -1) or f(-beta n, n) - T
/// (side = +1): both equal [-D'n -(side) d n sqrt(D') - 2(r-1)T] / (2r-2)
/// with D' = d^2 - 4(r-1)(g-1), since alpha and beta are the roots of
/// (r-1)x^2 - dx + (g-1).
fn boundary_edge_exceeds(p: &DMProblem, n: i128, side: i128, t: i128) -> Result<bool> {
    const CTX: &str = "tail boundary";
    let DMProblem { g, r, d, .. } = *p;
    let d_prime = arith::sub(checked_sq(d)?, 4 * (r - 1) * (g - 1), CTX)?;
    debug_assert!(d_prime > 0);
    let p_term = arith::sub(
        arith::mul(-d_prime, n, CTX)?,
        arith::mul(2 * (r - 1), t, CTX)?,
        CTX,
    )?;
    let q_term = arith::mul(side, arith::mul(d, n, CTX)?, CTX)?;
    match arith::perfect_sqrt(d_prime) {
        Some(e) => Ok(arith::add(p_term, arith::mul(q_term, e, CTX)?, CTX)? > 0),
        None => Ok(surd_sign(p_term, q_term, d_prime)? == std::cmp::Ordering::Greater),
    }
}

/// Gonality upper-boundary value h(n) = (g-1)/2 [ (2n-1)^2 D'/d^2 + 1 ].
fn gonality_boundary(p: &DMProblem, n: i128) -> Rat {
    let DMProblem { g, r, d, .. } = *p;
    let d_prime = rat_int(d * d - 4 * (r - 1) * (g - 1));
    let sq = rat_int((2 * n - 1) * (2 * n - 1));
    rat(g - 1, 2) * (sq * d_prime / rat_int(d * d) + rat_int(1))
}

/// Clifford-net boundary value g(n) = a n^2 + b n + c.
fn clifford_boundary(p: &DMProblem, n: i128) -> Result<Rat> {
    let (a, b, c) = pappa_coefficients(p.g, p.r, p.d)?;
    let nn = rat_int(n);
    Ok(a * nn.clone() * nn.clone() + b * nn + c)
}

fn tail_certificate(p: &DMProblem, window: i128, reasons: &mut Vec<String>) -> Result<bool> {
    let DMProblem { g, r, d, variant } = *p;
    let t = p.threshold();
    let d_prime = checked_sq(d)? - 4 * (r - 1) * (g - 1);
    if d_prime <= 0 {
        reasons.push(format!(
            "tail: boundary growth needs d^2 > 4(r-1)(g-1), but d^2 - 4(r-1)(g-1) = {d_prime}"
        ));
        return Ok(false);
    }
    let mut ok = true;
    match variant {
        Variant::Gonality => {
            // h has positive leading coefficient and vertex n = 1/2; values
            // at the window edges dominate the whole tail.
            for n in [window, -window, window + 1, -(window + 1)] {
                if gonality_boundary(p, n) <= rat_int(t) {
                    reasons.push(format!("tail: h({n}) <= threshold"));
                    ok = false;
                }
            }
        }
        Variant::CliffordNet => {
            let (a, b, _) = pappa_coefficients(g, r, d)?;
            if a <= rat_int(0) {
                reasons.push("tail: leading coefficient a <= 0".into());
                ok = false;
            } else {
                let vertex = -b.clone() / (rat_int(2) * a.clone());
                if !(rat_int(0) < vertex && vertex < rat_int(1)) {
                    reasons.push("tail: vertex -b/2a outside (0, 1)".into());
                    ok = false;
                }
            }
            let (c_pos, ineq) = pappa_c_equivalence(g, r, d)?;
            if c_pos != ineq {
                reasons.push(
                    "tail: c > 0 disagrees with 3/4 < (g-1)/d < (3/8)(d-2(r-1))/(r-1)".into(),
                );
                ok = false;
            }
            if !c_pos {
                reasons.push("tail: constant coefficient c <= 0".into());
                ok = false;
            }
            for n in [window + 1, -(window + 1)] {
                if clifford_boundary(p, n)? <= rat_int(0) {
                    reasons.push(format!("tail: g({n}) <= 0"));
                    ok = false;
                }
            }
        }
    }
    // alpha side guards n <= -(window+1), beta side n >= window+1; both are
    // linear in n with favorable slope, so the edge value settles the tail.
    if !boundary_edge_exceeds(p, -(window + 1), -1, t)? {
        reasons.push(format!("tail: f(-alpha n, n) <= threshold at n = -{}", window + 1));
        ok = false;
    }
    if !boundary_edge_exceeds(p, window + 1, 1, t)? {
        reasons.push(format!("tail: f(-beta n, n) <= threshold at n = {}", window + 1));
        ok = false;
    }
    Ok(ok)
}

/// Minimize f over the constraint system, with an exact window enumeration
/// and tail certificates.
pub fn certify_min(p: &DMProblem, n_window: i128) -> Result<MinCertificate> {
    if n_window < 2 {
        return Err(Error::InvalidArgument(format!("n_window {n_window} < 2")));
    }
    if n_window > PARAM_CAP {
        return Err(Error::InvalidArgument(format!("n_window {n_window} exceeds 2^40")));
    }
    let t = p.threshold();
    let mut best: Option<i128> = None;
    let mut minimizers: Vec<(i128, i128)> = Vec::new();
    for n in -n_window..=n_window {
        for (lo, hi) in feasible_m_intervals(p, n)? {
            // strict concavity in m: interval minima are endpoint values
            for m in if lo == hi { vec![lo] } else { vec![lo, hi] } {
                let val = f_value(p.g, p.r, p.d, m, n)?;
                match best {
                    Some(b) if val > b => {}
                    Some(b) if val == b => minimizers.push((m, n)),
                    _ => {
                        best = Some(val);
                        minimizers = vec![(m, n)];
                    }
                }
            }
        }
    }
    minimizers.sort_by_key(|&(m, n)| (n, m));
    minimizers.dedup();
    // certificate invariant: every reported minimizer is feasible and
    // attains the minimum
    for &(m, n) in &minimizers {
        let (ok, _) = feasible(p, m, n)?;
        if !ok || Some(f_value(p.g, p.r, p.d, m, n)?) != best {
            return Err(Error::Internal(format!("bad minimizer ({m}, {n})")));
        }
    }

    let mut reasons = Vec::new();
    let tail_ok = tail_certificate(p, n_window, &mut reasons)?;
    let hypotheses = p.hypotheses()?;
    let failed_hyps: Vec<&str> = hypotheses
        .iter()
        .filter(|(_, ok)| !**ok)
        .map(|(k, _)| k.as_str())
        .collect();

    let (min_found, empty_window) = match best {
        Some(b) => (b, false),
        None => (t, true),
    };
    let status = if !empty_window && min_found < t {
        MinStatus::Refuted
    } else if !tail_ok || !failed_hyps.is_empty() {
        MinStatus::Unknown
    } else {
        MinStatus::Proved
    };

    let mut trace = format!(
        "f(m,n) over the {:?} system at (g, r, d) = ({}, {}, {}); threshold {}",
        p.variant, p.g, p.r, p.d, t
    );
    if empty_window {
        trace.push_str("; no feasible points in the window");
    } else {
        trace.push_str(&format!("; window minimum {min_found} at {} point(s)", minimizers.len()));
    }
    if !failed_hyps.is_empty() {
        trace.push_str(&format!("; failed hypotheses: {}", failed_hyps.join(", ")));
    }
    for r in &reasons {
        trace.push_str("; ");
        trace.push_str(r);
    }

    Ok(MinCertificate {
        status,
        threshold: t,
        min_found,
        minimizers,
        window: (-n_window, n_window),
        tail_ok,
        hypotheses,
        trace,
    })
}

/// Solutions of the linear-plus-quadratic system C.D = deg, D^2 = s_int,
/// complete by construction (no search bound).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegSelfIntOutcome {
    pub solutions: Vec<(i128, i128)>,
    pub note: Option<String>,
}

pub fn solve_deg_selfint(lat: &PicardLattice, deg: i128, s_int: i128) -> Result<DegSelfIntOutcome> {
    const CTX: &str = "solve_deg_selfint";
    let a_lin = lat.hc();
    let b_lin = lat.c_sq();
    let g0 = num::integer::gcd(a_lin, b_lin);
    if g0 == 0 {
        return Err(Error::Internal("degenerate degree form".into()));
    }
    if deg % g0 != 0 {
        return Ok(DegSelfIntOutcome {
            solutions: Vec::new(),
            note: Some(format!("gcd(C.H, C^2) = {g0} does not divide deg = {deg}")),
        });
    }
    let (gg, x0, y0) = ext_gcd(a_lin, b_lin);
    debug_assert_eq!(gg, g0.abs());
    let scale = deg / gg;
    let base = DivisorClass::new(arith::mul(x0, scale, CTX)?, arith::mul(y0, scale, CTX)?);
    let dir = DivisorClass::new(b_lin / gg, -a_lin / gg);

    // substitute the solution line into the quadratic: a2 t^2 + a1 t + a0
    let a2 = lattice::self_int(lat, dir)?;
    let a1 = arith::mul(2, lattice::intersect(lat, base, dir)?, CTX)?;
    let a0 = arith::sub(lattice::self_int(lat, base)?, s_int, CTX)?;

    let mut ts = Vec::new();
    if a2 == 0 {
        if a1 == 0 {
            if a0 == 0 {
                return Err(Error::InfiniteFamily);
            }
        } else if a0 % a1 == 0 {
            ts.push(-a0 / a1);
        }
    } else {
        let disc = arith::sub(checked_sq(a1)?, arith::mul(4, arith::mul(a2, a0, CTX)?, CTX)?, CTX)?;
        if disc >= 0 {
            if let Some(e) = arith::perfect_sqrt(disc) {
                for sgn in [e, -e] {
                    let num = -a1 + sgn;
                    if num % (2 * a2) == 0 {
                        ts.push(num / (2 * a2));
                    }
                    if e == 0 {
                        break;
                    }
                }
            }
        }
    }

    let mut solutions: Vec<(i128, i128)> = Vec::new();
    for t in ts {
        let m = arith::mul_add(dir.m, t, base.m, CTX)?;
        let n = arith::mul_add(dir.n, t, base.n, CTX)?;
        let cls = DivisorClass::new(m, n);
        if lattice::degree_on_c(lat, cls)? != deg || lattice::self_int(lat, cls)? != s_int {
            return Err(Error::Internal(format!("candidate {cls} fails verification")));
        }
        solutions.push((m, n));
    }
    solutions.sort_unstable();
    solutions.dedup();
    Ok(DegSelfIntOutcome { solutions, note: None })
}

/// Extended gcd with nonnegative result: a x + b y = g >= 0.
fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// One Diophantine system of the destabilizing-quotient analysis:
/// C.D = deg, D^2 = s_int, with c2(E/N) recorded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseSystem {
    pub deg: i128,
    pub s_int: i128,
    pub c2_quot: i128,
}

/// Enumerate the systems compatible with D^2 >= 2 (even), c2(E/N) >= 3/2 +
/// D^2/4 and (C-D).D = d - c2(E/N) >= k. Terminates because the c2 range
/// empties once D^2 > 4(d-k) - 6.
pub fn lm_case_systems(g: i128, d: i128, k: i128) -> Result<Vec<CaseSystem>> {
    if g < 2 || k < 1 || d < 1 {
        return Err(Error::InvalidArgument(format!(
            "lm_case_systems needs g >= 2, d >= 1, k >= 1; got ({g}, {d}, {k})"
        )));
    }
    if d > PARAM_CAP || k > PARAM_CAP || g > PARAM_CAP {
        return Err(Error::InvalidArgument("parameters capped at 2^40".into()));
    }
    let mut out = Vec::new();
    let mut s = 2i128;
    while s <= 4 * (d - k) - 6 {
        let c2_lo = arith::div_ceil(6 + s, 4);
        let c2_hi = d - k;
        for c2 in c2_lo..=c2_hi {
            out.push(CaseSystem { deg: s + (d - c2), s_int: s, c2_quot: c2 });
        }
        s += 2;
    }
    Ok(out)
}

/// One pass/fail entry of the genus-11 suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteItem {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub lattice: (i128, i128, i128),
    pub items: Vec<SuiteItem>,
    pub all_pass: bool,
}

/// The genus-11 checklist on the lattice (H^2, C^2, C.H) = (6, 20, 13).
pub fn genus11_suite() -> Result<SuiteReport> {
    genus11_suite_on(&PicardLattice::genus11())
}

/// The same checklist on an arbitrary lattice, for perturbation studies.
pub fn genus11_suite_on(lat: &PicardLattice) -> Result<SuiteReport> {
    let mut items = Vec::new();

    let cert = qform::minus_two_free(lat)?;
    items.push(SuiteItem {
        name: "minus-two-free".into(),
        pass: cert.status == qform::RepStatus::No,
        detail: format!("status {:?} ({:?}): {}", cert.status, cert.method, cert.trace),
    });

    let rho9 = bn::rho(11, 2, 9)?;
    items.push(SuiteItem {
        name: "rho(11,2,9)".into(),
        pass: rho9 == -1,
        detail: format!("rho = {rho9}, expected -1"),
    });

    let rho10 = bn::rho(11, 2, 10)?;
    items.push(SuiteItem {
        name: "rho(11,2,10)".into(),
        pass: rho10 == 2,
        detail: format!("rho = {rho10}, expected 2"),
    });

    let k = bn::max_gonality(11)?;
    let cliff = bn::clifford_of_series(7, 1)?;
    items.push(SuiteItem {
        name: "gonality-and-clifford".into(),
        pass: k == 7 && cliff == 5,
        detail: format!("max gonality {k} (expected 7), Cliff(g^1_7) = {cliff} (expected 5)"),
    });

    // no g^2_9: a single system C.D = 9, D^2 = 2 with no solution
    {
        let systems = lm_case_systems(11, 9, 7)?;
        let mut detail = String::new();
        let mut pass = systems.len() == 1;
        for sys in &systems {
            let out = solve_deg_selfint(lat, sys.deg, sys.s_int)?;
            pass &= out.solutions.is_empty();
            detail.push_str(&format!(
                "system (C.D = {}, D^2 = {}, c2 = {}): {:?}; ",
                sys.deg, sys.s_int, sys.c2_quot, out.solutions
            ));
        }
        items.push(SuiteItem { name: "no-g29".into(), pass, detail });
    }

    // g^2_10: four systems, only the last solvable, uniquely by (1, 0)
    {
        let systems = lm_case_systems(11, 10, 7)?;
        let mut detail = String::new();
        let mut pass = systems.len() == 4;
        for (idx, sys) in systems.iter().enumerate() {
            let out = solve_deg_selfint(lat, sys.deg, sys.s_int)?;
            let expected: &[(i128, i128)] = if idx == 3 { &[(1, 0)] } else { &[] };
            pass &= out.solutions == expected;
            detail.push_str(&format!(
                "system (C.D = {}, D^2 = {}, c2 = {}): {:?}; ",
                sys.deg, sys.s_int, sys.c2_quot, out.solutions
            ));
        }
        items.push(SuiteItem { name: "g2-10-case-analysis".into(), pass, detail });
    }

    // the destabilizing quotient has v = (2, H, 2) with <v, v> = -2
    {
        let v = mukai::rank2_piece_vector(DivisorClass::H, 4)?;
        let self_pair = mukai::pairing(lat, &v, &v)?;
        items.push(SuiteItem {
            name: "quotient-vector-rigid".into(),
            pass: self_pair == -2,
            detail: format!("<(2,H,2), (2,H,2)> = {self_pair}, expected -2"),
        });
    }

    let all_pass = items.iter().all(|i| i.pass);
    Ok(SuiteReport { lattice: (lat.h_sq(), lat.c_sq(), lat.hc()), items, all_pass })
}

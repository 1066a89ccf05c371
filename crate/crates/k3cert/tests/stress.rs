//! Heavyweight randomized cross-checks, ignored by default. Run with
//! `cargo test --test stress -- --ignored` (use --release for speed).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use k3cert::certify::{self, DMProblem, Variant};
use k3cert::qform::{self, BinaryQForm, RepStatus};
use k3cert::PicardLattice;

fn box_witness(a: i128, b: i128, c: i128, t: i128, bound: i128) -> Option<(i128, i128)> {
    for m in -bound..=bound {
        for n in -bound..=bound {
            if (m, n) != (0, 0) && a * m * m + b * m * n + c * n * n == t {
                return Some((m, n));
            }
        }
    }
    None
}

#[test]
#[ignore = "heavy randomized sweep"]
fn represents_vs_box_oracle_20k() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xfeed_beef);
    for i in 0..20_000u32 {
        let a = rng.gen_range(-40i128..=40);
        let b = rng.gen_range(-40i128..=40);
        let c = rng.gen_range(-40i128..=40);
        let t = rng.gen_range(-12i128..=12);
        let q = BinaryQForm::new(a, b, c);
        let cert = qform::represents(&q, t, 120).unwrap();
        let wit = box_witness(a, b, c, t, 120);
        match cert.status {
            RepStatus::Yes => {
                let (m, n) = cert.witness.clone().unwrap();
                assert_eq!(q.eval_big(&m, &n), num::BigInt::from(t), "case {i} ({a},{b},{c})={t}");
            }
            RepStatus::No => {
                assert!(wit.is_none(), "case {i} ({a},{b},{c})={t}: oracle found {wit:?}");
            }
            RepStatus::Unknown => {
                assert!(wit.is_none(), "case {i} ({a},{b},{c})={t}: oracle found {wit:?}");
                assert!(t != 1 && t != -1 && t != 0, "case {i}: unit targets must be decided");
            }
        }
    }
}

#[test]
#[ignore = "heavy randomized sweep"]
fn intervals_vs_pointwise_random_problems() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xCAFE);
    for _ in 0..300 {
        let g = rng.gen_range(2i128..=60);
        let r = rng.gen_range(2i128..=8);
        let d = rng.gen_range(1i128..=60);
        let variant = if rng.gen_bool(0.5) { Variant::Gonality } else { Variant::CliffordNet };
        let p = DMProblem::new(g, r, d, variant).unwrap();
        for n in -25..=25i128 {
            let intervals = certify::feasible_m_intervals(&p, n).unwrap();
            let lo = intervals.first().map(|i| i.0).unwrap_or(0);
            let hi = intervals.last().map(|i| i.1).unwrap_or(0);
            for m in (lo - 60)..=(hi + 60) {
                let inside = intervals.iter().any(|&(a, b)| a <= m && m <= b);
                let (ok, _) = certify::feasible(&p, m, n).unwrap();
                assert_eq!(inside, ok, "g={g} r={r} d={d} n={n} m={m} {variant:?}");
            }
        }
    }
}

#[test]
#[ignore = "heavy randomized sweep"]
fn solve_deg_selfint_vs_box_500_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xD10F);
    for _ in 0..500 {
        let h = 2 * rng.gen_range(-12i128..=12);
        let c = 2 * rng.gen_range(1i128..=12);
        let hc = rng.gen_range(-15i128..=15);
        let lat = PicardLattice::new(h, c, hc).unwrap();
        let deg = rng.gen_range(-30i128..=30);
        let s = 2 * rng.gen_range(-30i128..=30);
        let got = match certify::solve_deg_selfint(&lat, deg, s) {
            Ok(out) => out.solutions,
            Err(k3cert::Error::InfiniteFamily) => continue,
            Err(e) => panic!("{e}"),
        };
        let mut expect = Vec::new();
        for m in -300..=300i128 {
            for n in -300..=300i128 {
                if m * hc + n * c == deg && m * m * h + 2 * m * n * hc + n * n * c == s {
                    expect.push((m, n));
                }
            }
        }
        let got_in: Vec<_> =
            got.into_iter().filter(|&(m, n)| m.abs() <= 300 && n.abs() <= 300).collect();
        assert_eq!(got_in, expect, "lattice ({h},{c},{hc}) deg={deg} s={s}");
    }
}

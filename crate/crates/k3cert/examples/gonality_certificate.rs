//! Certify f(m, n) = D.(C - D) >= d - 2r + 2 over the gonality constraint
//! system: exact window enumeration plus tail certificates, with the
//! separate -1-representability hypothesis reported alongside.
//!
//! Run with: cargo run --example gonality_certificate

use k3cert::certify::{certify_min, DMProblem, Variant};
use k3cert::qform;

fn main() -> k3cert::Result<()> {
    for (g, r, d) in [(13, 3, 12), (21, 4, 18), (30, 3, 12)] {
        let p = DMProblem::new(g, r, d, Variant::Gonality)?;
        let cert = certify_min(&p, p.default_n_window())?;
        println!("(g, r, d) = ({g}, {r}, {d}):");
        println!(
            "  status {:?}, min {} vs threshold {}, minimizers {:?}",
            cert.status, cert.min_found, cert.threshold, cert.minimizers
        );
        println!("  tail certified: {}", cert.tail_ok);
        for (name, ok) in &cert.hypotheses {
            println!("  hypothesis {name}: {}", if *ok { "holds" } else { "fails" });
        }
        let minus_one = p.minus_one_hypothesis(qform::DEFAULT_SEARCH_BOUND)?;
        println!(
            "  -1 represented by ({}, {}, {}): {:?}",
            r - 1,
            d,
            g - 1,
            minus_one.status
        );
        println!();
    }
    Ok(())
}

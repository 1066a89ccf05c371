//! The Clifford-net variant replaces the degree bound by the weaker
//! 3md + (6n - 4)(g - 1) <= 0; its tail rests on the boundary quadratic
//! g(n) = an^2 + bn + c whose coefficients are computed here exactly.
//!
//! Run with: cargo run --example clifford_net_certificate

use k3cert::arith::rat_to_string;
use k3cert::certify::{certify_min, pappa_c_equivalence, pappa_coefficients, DMProblem, Variant};

fn main() -> k3cert::Result<()> {
    let (g, r, d) = (13, 3, 12);
    let p = DMProblem::new(g, r, d, Variant::CliffordNet)?;
    let cert = certify_min(&p, p.default_n_window())?;
    println!("(g, r, d) = ({g}, {r}, {d}), Clifford-net system:");
    println!(
        "  status {:?}, min {} vs threshold {}, minimizers {:?}",
        cert.status, cert.min_found, cert.threshold, cert.minimizers
    );

    let (a, b, c) = pappa_coefficients(g, r, d)?;
    println!(
        "  boundary quadratic g(n): a = {}, b = {}, c = {}",
        rat_to_string(&a),
        rat_to_string(&b),
        rat_to_string(&c)
    );
    let (c_pos, ineq) = pappa_c_equivalence(g, r, d)?;
    println!("  c > 0: {c_pos}; 3/4 < (g-1)/d < (3/8)(d-2(r-1))/(r-1): {ineq}");
    Ok(())
}

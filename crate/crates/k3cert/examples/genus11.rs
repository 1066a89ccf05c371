//! The genus-11 checklist: on the lattice (H^2, C^2, C.H) = (6, 20, 13),
//! certify that there are no (-2)-classes, that rho(11,2,9) = -1, and that
//! the g^2_9 / g^2_10 Diophantine systems have exactly the expected
//! solutions.
//!
//! Run with: cargo run --example genus11

fn main() -> k3cert::Result<()> {
    let report = k3cert::certify::genus11_suite()?;
    println!(
        "genus-11 suite on (H^2, C^2, C.H) = ({}, {}, {})",
        report.lattice.0, report.lattice.1, report.lattice.2
    );
    for item in &report.items {
        println!("  [{}] {}", if item.pass { "PASS" } else { "FAIL" }, item.name);
        println!("        {}", item.detail);
    }
    println!("overall: {}", if report.all_pass { "all PASS" } else { "FAILURES" });
    Ok(())
}

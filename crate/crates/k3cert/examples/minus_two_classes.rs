//! (-2)-class detection: a class D with D^2 = -2 exists exactly when the
//! halved intersection form represents -1.
//!
//! Run with: cargo run --example minus_two_classes

use k3cert::qform::minus_two_free;
use k3cert::PicardLattice;

fn main() -> k3cert::Result<()> {
    for (h_sq, c_sq, hc) in [(6, 20, 13), (6, 20, 12), (-2, 2, 0), (2, 2, 3)] {
        let lat = PicardLattice::new(h_sq, c_sq, hc)?;
        let cert = minus_two_free(&lat)?;
        print!("lattice ({h_sq}, {c_sq}, {hc}): ");
        match cert.status {
            k3cert::RepStatus::No => println!("no (-2)-classes ({})", cert.trace),
            k3cert::RepStatus::Yes => {
                let (m, n) = cert.witness.unwrap();
                println!("contains the (-2)-class {m}H + {n}C");
            }
            k3cert::RepStatus::Unknown => println!("inconclusive ({})", cert.trace),
        }
    }
    Ok(())
}

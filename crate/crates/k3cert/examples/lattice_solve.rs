//! Complete solution of the linear-plus-quadratic systems C.D = deg,
//! D^2 = s on the genus-11 lattice: the four g^2_10 case systems and the
//! single g^2_9 system.
//!
//! Run with: cargo run --example lattice_solve

use k3cert::certify::{lm_case_systems, solve_deg_selfint};
use k3cert::PicardLattice;

fn main() -> k3cert::Result<()> {
    let lat = PicardLattice::genus11();
    for (d, label) in [(9, "g^2_9"), (10, "g^2_10")] {
        println!("{label} systems (d = {d}, gonality 7):");
        for sys in lm_case_systems(11, d, 7)? {
            let out = solve_deg_selfint(&lat, sys.deg, sys.s_int)?;
            println!(
                "  C.D = {:2}, D^2 = {}, c2(E/N) = {}:  solutions {:?}",
                sys.deg, sys.s_int, sys.c2_quot, out.solutions
            );
        }
    }
    Ok(())
}

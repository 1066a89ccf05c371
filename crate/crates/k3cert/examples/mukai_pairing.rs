//! Mukai vectors of Lazarsfeld-Mukai bundles and the pairing identity
//! <v(E), v(E)> = 2(rho - 1), plus additivity along a destabilizing
//! sequence.
//!
//! Run with: cargo run --example mukai_pairing

use k3cert::bn;
use k3cert::lattice::DivisorClass;
use k3cert::mukai::{ideal_twist_vector, lm_vector, pairing, rank2_piece_vector};
use k3cert::PicardLattice;

fn main() -> k3cert::Result<()> {
    let lat = PicardLattice::genus11();

    for (g, r, d) in [(11, 2, 10), (11, 2, 9), (11, 1, 7)] {
        let v = lm_vector(&lat, g, r, d)?;
        let self_pair = pairing(&lat, &v, &v)?;
        let rho = bn::rho(g, r, d)?;
        println!(
            "v(E) for a g^{r}_{d} on a genus-{g} curve: {v},  <v,v> = {self_pair} = 2(rho - 1) with rho = {rho}"
        );
    }

    // the genus-11 destabilizing sequence 0 -> N -> E -> E/N -> 0 with
    // N = C - H: v(N (x) I_xi) + v(E/N) = v(E)
    let n = DivisorClass::C - DivisorClass::H;
    let v_n = ideal_twist_vector(&lat, n, 0)?;
    let v_q = rank2_piece_vector(DivisorClass::H, 4)?;
    let v_e = lm_vector(&lat, 11, 2, 10)?;
    println!("v(N) = {v_n}, v(E/N) = {v_q}, sum = ({}, {}, {})",
        v_n.rank + v_q.rank, v_n.c1 + v_q.c1, v_n.s + v_q.s);
    assert_eq!(v_e.rank, v_n.rank + v_q.rank);
    println!("<v(E/N), v(E/N)> = {} (rigid: a -2 vector)", pairing(&lat, &v_q, &v_q)?);
    Ok(())
}

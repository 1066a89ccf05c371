//! The named inequality table at (g, d, k) with exact fractional bounds.
//!
//! Run with: cargo run --example thresholds_table

use k3cert::arith::rat_to_string;
use k3cert::bn;

fn main() -> k3cert::Result<()> {
    let (g, d) = (11, 10);
    let k = bn::max_gonality(g)?;
    println!("thresholds at g = {g}, d = {d}, k = {k}:");
    for (t, satisfied) in bn::thresholds(g, 2, d, k)? {
        println!(
            "  {:<13} {} {:<8} {}",
            t.name,
            t.direction.symbol(),
            rat_to_string(&t.value),
            if satisfied { "satisfied" } else { "not satisfied" }
        );
    }
    println!();
    println!(
        "smallest degree meeting the nene bound at (g, k) = ({g}, {k}): {}",
        bn::nene_minimal_degree(g, k)
    );
    println!(
        "ceiling-inequality exceptions up to genus 200: {:?}",
        bn::lasagna_exception_scan(200)?
    );
    Ok(())
}

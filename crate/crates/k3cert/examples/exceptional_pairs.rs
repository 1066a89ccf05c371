//! Enumerate the (g, d) pairs that evade every dimension bound, and the
//! borderline elimination that whittles them down to four survivors.
//!
//! Run with: cargo run --example exceptional_pairs

use k3cert::stacks;

fn main() -> k3cert::Result<()> {
    let out = stacks::exceptional_pairs(30)?;
    println!("candidates (2 <= g <= {}):", out.g_max);
    for (g, d) in &out.candidates {
        let survived = out.survivors.contains(&(*g, *d));
        println!(
            "  (g, d) = ({g:2}, {d:2})  alpha_min = {}  {}",
            stacks::alpha_min(*g),
            if survived { "SURVIVES" } else { "eliminated" }
        );
    }
    println!("survivors: {:?}", out.survivors);
    Ok(())
}

//! Stack dimension formulas and the alpha correction table for length-3
//! filtrations.
//!
//! Run with: cargo run --example stack_dimensions

use k3cert::stacks::{
    alpha_values, chi_quot_sub_cap, dim_g_pencil, dim_g_rank2sub, dim_w_filtration, DimReport,
    FiltrationShape, IsoPattern,
};

fn main() -> k3cert::Result<()> {
    let reports = [
        DimReport::from_int(
            "dim G, rank-2 subbundle stratum",
            dim_g_rank2sub(11, 10, 0)?,
            &[("g", 11), ("d", 10), ("chi_pair", 0)],
        ),
        DimReport::from_rat(
            "chi(E/N, N) cap",
            &chi_quot_sub_cap(11, 10),
            &[("g", 11), ("d", 10)],
        ),
        DimReport::from_int(
            "dim G, pencil stratum",
            dim_g_pencil(10, 8, 6)?,
            &[("g", 10), ("d", 8), ("x", 6)],
        ),
        DimReport::from_rat(
            "dim W bound, length-3 filtration",
            &dim_w_filtration(11, 10, 3)?,
            &[("g", 11), ("d", 10), ("alpha", 3)],
        ),
    ];
    for r in &reports {
        println!("{}: {}  (inputs {:?})", r.name, r.value, r.inputs);
    }
    println!();

    println!("alpha table (pattern, l1, l2 -> possible alpha):");
    let cases = [
        (IsoPattern::AllDistinct, 2, 5),
        (IsoPattern::AllIsomorphic, 0, 3),
        (IsoPattern::AllIsomorphic, 3, 0),
        (IsoPattern::AllIsomorphic, 1, 1),
        (IsoPattern::NIsoN1, 0, 2),
        (IsoPattern::NIsoN2, 1, 0),
        (IsoPattern::N1IsoN2, 0, 4),
    ];
    for (pattern, l1, l2) in cases {
        let shape = FiltrationShape::new(pattern, l1, l2)?;
        println!("  {pattern:?} with (l1, l2) = ({l1}, {l2}): {:?}", alpha_values(&shape));
    }
    Ok(())
}

//! The representability engine across its decision methods: sign
//! obstruction, definite enumeration, factor split on square discriminants,
//! bounded search, reduction cycles, and the modular sieve.
//!
//! Run with: cargo run --example qform_decisions

use k3cert::qform::{represents, BinaryQForm, DEFAULT_SEARCH_BOUND};

fn show(a: i128, b: i128, c: i128, t: i128, bound: i128) -> k3cert::Result<()> {
    let q = BinaryQForm::new(a, b, c);
    let cert = represents(&q, t, bound)?;
    print!("({a}, {b}, {c}) = {t}:  {:?}", cert.status);
    if let Some((m, n)) = &cert.witness {
        print!("  at (m, n) = ({m}, {n})");
    }
    println!();
    println!("    {}", cert.trace);
    Ok(())
}

fn main() -> k3cert::Result<()> {
    // positive definite: sign obstruction
    show(1, 0, 1, -1, DEFAULT_SEARCH_BOUND)?;
    // square discriminant 49: the halved genus-11 form splits into factors
    show(3, 13, 10, -1, DEFAULT_SEARCH_BOUND)?;
    // indefinite with a small witness
    show(1, 0, -2, -1, DEFAULT_SEARCH_BOUND)?;
    // indefinite whose least solution is huge: decided by reduction cycles
    show(1, 0, -61, -1, DEFAULT_SEARCH_BOUND)?;
    // impossible mod 3, also decided by reduction cycles
    show(1, 0, -3, -1, DEFAULT_SEARCH_BOUND)?;
    // modular sieve kills x^2 - 7y^2 = 3 (mod 4)
    show(1, 0, -7, 3, DEFAULT_SEARCH_BOUND)?;
    // all-even coefficients never hit an odd target
    show(2, 12, 12, -1, DEFAULT_SEARCH_BOUND)?;
    // a genuinely inconclusive query under a tiny search bound
    show(1, 0, -61, 5, 10)?;
    Ok(())
}

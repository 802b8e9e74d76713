//! Associated polynomials along both extremal paths of G2.
//!
//! cargo run --example walk_g2

use yangian::reference::G2_WORD;
use yangian::root_system::{g2, ReducedWord};
use yangian::transport::run_walk;

fn main() -> yangian::error::Result<()> {
    let c = g2();
    let word = ReducedWord(G2_WORD.to_vec());
    for i in 1..=2 {
        let report = run_walk(&c, &word, i, 8)?;
        println!("ω_{i}: exponents {:?}", report.exponents);
        for r in &report.records {
            let var = if r.rescale == 1 {
                "u".to_string()
            } else {
                format!("u/{}", r.rescale)
            };
            println!(
                "  j={} node {} m={} in {var}: {}",
                r.index,
                r.node,
                r.exponent,
                r.factored().unwrap_or_else(|| r.polynomial.to_string())
            );
        }
        println!(
            "  ends at {:?}, crosschecks ok: {}",
            report.final_weight,
            report.crosschecks_passed()
        );
    }
    Ok(())
}

//! Orders the roots of (π_1, π_2) into a cyclic tensor product and reports
//! the dimension bound for a user-chosen pair of fundamental dimensions.

use num_bigint::BigInt;
use yangian::cli::parse::parse_roots;
use yangian::cyclicity::{build_ordered_product, dimension_report, CyclicityTables};
use yangian::reference::G2_WORD;
use yangian::root_system::{g2, ReducedWord};

fn main() -> yangian::error::Result<()> {
    let c = g2();
    let tables = CyclicityTables::compute(&c, &ReducedWord(G2_WORD.to_vec()), 8)?;
    let roots = vec![parse_roots("0, 4, 1/2+1i")?, parse_roots("2, 4")?];
    let spec = build_ordered_product(&roots, &tables.s_sets)?;
    let order: Vec<String> = spec.factors.iter().map(ToString::to_string).collect();
    println!("λ = {:?}", spec.lambda);
    println!("order: {}", order.join(" ⊗ "));
    println!("verdict: {:?}", spec.report.verdict);

    // Placeholder dimensions; the true values are an input, not a constant.
    let dims = [BigInt::from(15), BigInt::from(7)];
    let dim = dimension_report(&c, &spec.lambda, Some(&dims))?;
    println!("bound with D = (15, 7): {}", dim.bound.unwrap_or_default());
    println!("simple Lie algebra fundamentals: {:?}", dim.reference_dims);
    Ok(())
}

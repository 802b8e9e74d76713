//! Highest-weight and irreducibility checks for a few G2 tensor products.

use yangian::cli::parse::parse_factors;
use yangian::cyclicity::{check_cyclicity, CyclicityMode, CyclicityTables};
use yangian::reference::G2_WORD;
use yangian::root_system::{g2, ReducedWord};

fn main() -> yangian::error::Result<()> {
    let c = g2();
    let tables = CyclicityTables::compute(&c, &ReducedWord(G2_WORD.to_vec()), 8)?;
    for spec in [
        "1:0,1:3",
        "1:0,1:7/2",
        "1:3,1:0",
        "2:0,1:9/2",
        "1:0,2:1/2+1i",
    ] {
        let factors = parse_factors(spec, c.rank())?;
        for mode in [CyclicityMode::HighestWeight, CyclicityMode::Irreducible] {
            let report = check_cyclicity(&factors, &tables.s_sets, c.rank(), mode)?;
            print!("{spec:>14}  {mode:?}: {:?}", report.verdict);
            for v in &report.violations {
                print!("  ({},{}) diff {}", v.i, v.j, v.difference);
            }
            println!();
        }
    }
    Ok(())
}

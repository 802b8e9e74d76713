//! Evaluation modules of Y(sl2): relations, insertions and extremal series.

use yangian::exact::rat;
use yangian::ysl2::{
    check_relations, extremal_series_check, symmetrized_insertion_check, EvalModule,
};

fn main() -> yangian::error::Result<()> {
    let a = rat(5, 3);
    let module = EvalModule::new(3, a.clone());
    println!(
        "V_3(5/3): dim {}, π(u) = {}",
        module.dim(),
        module.associated_polynomial()
    );

    let rel = check_relations(3, &a, 3);
    println!(
        "relations: {} identities, {} violations",
        rel.checked,
        rel.violations.len()
    );

    for k in 0..=4 {
        let ins = symmetrized_insertion_check(3, &a, k);
        println!(
            "k={k}: p_k = {}, {} vs {} ({})",
            ins.power_sum, ins.lhs, ins.rhs, ins.passed
        );
    }

    let ext = extremal_series_check(3, &a, 6)?;
    println!("highest series {:?}", ext.highest_series);
    println!("lowest series  {:?}", ext.lowest_series);
    Ok(())
}

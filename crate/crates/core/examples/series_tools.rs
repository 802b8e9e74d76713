//! The exact-arithmetic layer on its own: a log of a ratio of polynomials,
//! Newton's identities and root recovery.

use yangian::exact::{
    power_sums_of_monic, power_sums_to_monic, rat, roots_affine_in_param, AffineRoot, ParamPoly,
    ParamSeries, UniPoly,
};

fn main() -> yangian::error::Result<()> {
    let a = ParamPoly::param;
    let roots = [
        &a() + &ParamPoly::constant(rat(3, 2)),
        a().scale(&rat(1, 3)),
    ];
    let q = UniPoly::from_roots(&roots);
    println!("q(u) = {q}");

    let shifted = q.shift(&ParamPoly::from(-1));
    let log = ParamSeries::from_poly_ratio(&shifted, &q, 6)?.log()?;
    for k in 1..=5 {
        println!("  [u^-{k}] log(q(u-1)/q(u)) = {}", log.coeff(k));
    }

    let sums = power_sums_of_monic(&q, 4);
    let back = power_sums_to_monic(&sums);
    println!("Newton round trip: {}", back == q);

    let found: Vec<AffineRoot> = roots_affine_in_param(&q)?;
    let shown: Vec<String> = found.iter().map(ToString::to_string).collect();
    println!("roots: {}", shown.join(", "));
    Ok(())
}

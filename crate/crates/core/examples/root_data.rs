//! Weyl group data for the built-in algebras: longest words, path exponents,
//! and Weyl dimensions of the fundamental modules.

use yangian::root_system::{builtin, path_exponents, weyl_dim, WeylGroup};

fn main() -> yangian::error::Result<()> {
    for name in ["a1", "a2", "g2"] {
        let c = builtin(name).expect("built-in");
        let group = WeylGroup::enumerate(&c)?;
        let (w0, word) = group.longest();
        println!("{name}: |W| = {}, w0 = s{:?}", group.order(), word.0);
        println!(
            "  reduced words of w0: {}",
            group.reduced_words(&c, w0).len()
        );
        for i in 1..=c.rank() {
            let p = path_exponents(&c, word, i)?;
            let dim = weyl_dim(&c, &c.fundamental_weight(i))?;
            println!("  ω_{i}: exponents {:?}, dim {dim}", p.exponents);
        }
    }
    Ok(())
}

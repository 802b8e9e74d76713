//! T and S sets for a built-in algebra (default g2).
//!
//! cargo run --example cyclicity_tables -- a2

use yangian::cyclicity::{q_exponents, CyclicityTables};
use yangian::root_system::{builtin, weyl_longest};

fn main() -> yangian::error::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "g2".into());
    let Some(c) = builtin(&name) else {
        eprintln!("unknown algebra {name}; try g2, a1 or a2");
        std::process::exit(2);
    };
    let (_, _, word) = weyl_longest(&c)?;
    let tables = CyclicityTables::compute(&c, &word, 8)?;
    for t in &tables.t_sets {
        let roots: Vec<String> = t.roots.iter().map(ToString::to_string).collect();
        println!("T({},{}) = {{{}}}", t.earlier, t.acting, roots.join(", "));
    }
    for s in &tables.s_sets {
        let d: Vec<String> = s.differences.iter().map(ToString::to_string).collect();
        println!("S({},{}) = {{{}}}", s.earlier, s.later, d.join(", "));
    }
    for b in 1..=c.rank() {
        if let Some(s) = tables.s(b, b) {
            let q: Vec<String> = q_exponents(s).iter().map(|e| format!("q^{e}")).collect();
            println!("S({b},{b}) as q-powers: {{{}}}", q.join(", "));
        }
    }
    Ok(())
}

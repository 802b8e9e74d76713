//! Published G2 results, used by the `verify` suites as golden values.
//!
//! Node 1 is the long root (`d_1 = 3`), node 2 the short root (`d_2 = 1`);
//! the reduced word is `1,2,1,2,1,2`. Roots are rescaled: `(slope, intercept)`
//! stands for `slope * a + intercept` in the variable `u / d_node`.

use crate::exact::{rat, AffineRoot, Rational};

pub const G2_WORD: [usize; 6] = [1, 2, 1, 2, 1, 2];

pub const G2_EXPONENTS: [[i64; 6]; 2] = [[1, 3, 2, 3, 1, 0], [0, 1, 1, 2, 1, 1]];

/// `(node, degree, roots)` per nonzero step in path order.
pub type TableRow = (usize, usize, Vec<AffineRoot>);

fn root(slope: (i64, i64), intercept: (i64, i64)) -> AffineRoot {
    AffineRoot::new(rat(slope.0, slope.1), rat(intercept.0, intercept.1))
}

fn long(num: i64, den: i64) -> AffineRoot {
    root((1, 3), (num, den))
}

fn short(num: i64, den: i64) -> AffineRoot {
    root((1, 1), (num, den))
}

/// Associated polynomials along the path of `v^+ ∈ V_a(ω_i)`.
pub fn g2_table(i: usize) -> Vec<TableRow> {
    match i {
        1 => vec![
            (1, 1, vec![long(0, 1)]),
            (2, 3, vec![short(-1, 2), short(1, 2), short(3, 2)]),
            (1, 2, vec![long(1, 3), long(2, 3)]),
            (2, 3, vec![short(3, 2), short(5, 2), short(7, 2)]),
            (1, 1, vec![long(1, 1)]),
        ],
        2 => vec![
            (2, 1, vec![short(0, 1)]),
            (1, 1, vec![long(1, 2)]),
            (2, 2, vec![short(2, 1), short(3, 1)]),
            (1, 1, vec![long(7, 6)]),
            (2, 1, vec![short(5, 1)]),
        ],
        _ => panic!("G2 has two fundamental weights"),
    }
}

/// `T(b, c)` as sorted affine roots.
pub fn g2_t_set(b: usize, c: usize) -> Vec<AffineRoot> {
    match (b, c) {
        (1, 1) => vec![long(0, 1), long(1, 3), long(2, 3), long(1, 1)],
        (1, 2) => vec![
            short(-1, 2),
            short(1, 2),
            short(3, 2),
            short(5, 2),
            short(7, 2),
        ],
        (2, 1) => vec![long(1, 2), long(7, 6)],
        (2, 2) => vec![short(0, 1), short(2, 1), short(3, 1), short(5, 1)],
        _ => panic!("G2 nodes are 1 and 2"),
    }
}

/// `S(b, c)` in ascending order.
pub fn g2_s_set(b: usize, c: usize) -> Vec<Rational> {
    let v: &[(i64, i64)] = match (b, c) {
        (1, 1) => &[(3, 1), (4, 1), (5, 1), (6, 1)],
        (1, 2) => &[(1, 2), (3, 2), (5, 2), (7, 2), (9, 2)],
        (2, 1) => &[(9, 2), (13, 2)],
        (2, 2) => &[(1, 1), (3, 1), (4, 1), (6, 1)],
        _ => panic!("G2 nodes are 1 and 2"),
    };
    v.iter().map(|&(n, d)| rat(n, d)).collect()
}

/// Exponents `e` of the quantum-loop sets `{q^e}` on the diagonal pairs.
pub fn g2_quantum_loop_diagonal(b: usize) -> Vec<Rational> {
    let v: &[i64] = match b {
        1 => &[6, 8, 10, 12],
        2 => &[2, 6, 8, 12],
        _ => panic!("G2 nodes are 1 and 2"),
    };
    v.iter().map(|&e| rat(e, 1)).collect()
}

use num_bigint::BigInt;
use yangian::root_system::{
    a2, g2, path_exponents, positive_roots, weyl_dim, weyl_longest, WeylGroup,
};

/// G2 dimension in terms of (short, long) coordinates.
fn g2_closed_form(short: i64, long: i64) -> BigInt {
    let (m1, m2) = (short, long);
    let n = (m1 + 1)
        * (m2 + 1)
        * (m1 + m2 + 2)
        * (m1 + 2 * m2 + 3)
        * (m1 + 3 * m2 + 4)
        * (2 * m1 + 3 * m2 + 5);
    assert_eq!(n % 120, 0);
    BigInt::from(n / 120)
}

#[test]
fn g2_dimensions_match_closed_form() {
    let c = g2();
    for l1 in 0..6 {
        for l2 in 0..6 {
            // node 1 is long
            assert_eq!(
                weyl_dim(&c, &[l1, l2]).unwrap(),
                g2_closed_form(l2, l1),
                "({l1},{l2})"
            );
        }
    }
}

#[test]
fn a2_dimensions_match_closed_form() {
    let c = a2();
    for m1 in 0..6i64 {
        for m2 in 0..6i64 {
            let expect = (m1 + 1) * (m2 + 1) * (m1 + m2 + 2) / 2;
            assert_eq!(weyl_dim(&c, &[m1, m2]).unwrap(), BigInt::from(expect));
        }
    }
}

#[test]
fn g2_group() {
    let c = g2();
    let group = WeylGroup::enumerate(&c).unwrap();
    assert_eq!(group.order(), 12);
    assert_eq!(positive_roots(&c).len(), 6);
    let (order, w0, word) = weyl_longest(&c).unwrap();
    assert_eq!(order, 12);
    assert_eq!(word.0, vec![1, 2, 1, 2, 1, 2]);
    // w0 = -1 for G2
    for i in 1..=2 {
        let w = c.fundamental_weight(i);
        let neg: Vec<i64> = w.iter().map(|x| -x).collect();
        assert_eq!(w0.apply(&w), neg);
    }
    let words = group.reduced_words(&c, &w0);
    assert_eq!(words.len(), 2);
    for word in &words {
        for i in 1..=2 {
            let p = path_exponents(&c, word, i).unwrap();
            assert!(p.exponents.iter().all(|&m| m >= 0));
            assert_eq!(p.exponents.iter().sum::<i64>(), [10, 6][i - 1]);
        }
    }
}

//! Power sums and elementary symmetric functions of a root multiset.

use super::param_poly::ParamPoly;
use super::rational::{int, Rational};
use super::uni_poly::{power_sum, UniPoly};

/// Power sums `p_1 .. p_K` of a multiset of `degree` roots (`p_0 = degree`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSums {
    degree: usize,
    sums: Vec<ParamPoly>,
}

impl PowerSums {
    /// `sums[k - 1]` is `p_k`. Missing entries up to `degree` are an error
    /// of the caller; `sums` may be longer than `degree`.
    pub fn new(degree: usize, sums: Vec<ParamPoly>) -> Self {
        assert!(
            sums.len() >= degree,
            "need p_1..p_{degree}, got {} sums",
            sums.len()
        );
        Self { degree, sums }
    }

    pub fn of_roots(roots: &[ParamPoly], count: usize) -> Self {
        Self {
            degree: roots.len(),
            sums: (1..=count.max(roots.len()))
                .map(|k| power_sum(roots, k))
                .collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Highest index stored.
    pub fn len(&self) -> usize {
        self.sums.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sums.is_empty()
    }

    /// `p_k`, with `p_0` equal to the degree.
    pub fn get(&self, k: usize) -> ParamPoly {
        if k == 0 {
            ParamPoly::from(self.degree as i64)
        } else {
            self.sums[k - 1].clone()
        }
    }

    /// Rescales every root by `c`: `p_k -> c^k p_k`.
    pub fn scale_roots(&self, c: &Rational) -> Self {
        let mut factor = Rational::from_integer(1.into());
        let sums = self
            .sums
            .iter()
            .map(|p| {
                factor *= c;
                p.scale(&factor)
            })
            .collect();
        Self {
            degree: self.degree,
            sums,
        }
    }

    /// Elementary symmetric functions `e_0 = 1, e_1, .., e_m` via Newton's identities
    /// `k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i`.
    pub fn elementary(&self) -> Vec<ParamPoly> {
        let mut e = vec![ParamPoly::one()];
        for k in 1..=self.degree {
            let mut acc = ParamPoly::zero();
            for i in 1..=k {
                let term = &e[k - i] * &self.sums[i - 1];
                if i % 2 == 1 {
                    acc += &term;
                } else {
                    acc -= &term;
                }
            }
            e.push(acc.scale(&Rational::new(1.into(), (k as i64).into())));
        }
        e
    }

    /// True when every stored `p_k` with `k > degree` obeys the Newton recurrence.
    pub fn is_consistent(&self) -> bool {
        let extended = extend_power_sums(&self.truncated(), self.sums.len());
        extended.sums == self.sums
    }

    fn truncated(&self) -> Self {
        Self {
            degree: self.degree,
            sums: self.sums[..self.degree].to_vec(),
        }
    }
}

/// Monic polynomial of degree `m` whose roots have the power sums `p_1..p_m`.
pub fn power_sums_to_monic(p: &PowerSums) -> UniPoly {
    let e = p.elementary();
    let m = p.degree;
    // u^m - e_1 u^{m-1} + e_2 u^{m-2} - ...
    let coeffs = (0..=m)
        .map(|k| {
            let ek = &e[m - k];
            if (m - k).is_multiple_of(2) {
                ek.clone()
            } else {
                -ek
            }
        })
        .collect();
    UniPoly::new(coeffs)
}

/// Fills `p_{m+1} .. p_K` from `p_1 .. p_m` with
/// `p_k = sum_{i=1}^{m} (-1)^{i-1} e_i p_{k-i}`.
pub fn extend_power_sums(p: &PowerSums, target: usize) -> PowerSums {
    let m = p.degree;
    let e = p.elementary();
    let mut sums = p.sums[..m].to_vec();
    for k in (m + 1)..=target {
        let mut acc = ParamPoly::zero();
        for i in 1..=m {
            let term = &e[i] * &sums[k - i - 1];
            if i % 2 == 1 {
                acc += &term;
            } else {
                acc -= &term;
            }
        }
        sums.push(acc);
    }
    sums.truncate(target.max(m));
    PowerSums { degree: m, sums }
}

/// Power sums of the roots of a monic polynomial, read off its coefficients.
pub fn power_sums_of_monic(q: &UniPoly, count: usize) -> PowerSums {
    let m = q.degree().unwrap_or(0);
    let e: Vec<ParamPoly> = (0..=m)
        .map(|k| {
            let c = q.coeff(m - k);
            if k % 2 == 0 {
                c
            } else {
                -&c
            }
        })
        .collect();
    // k <= m: p_k = sum_{i=1}^{k-1} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k
    let mut sums: Vec<ParamPoly> = Vec::new();
    for k in 1..=m {
        let mut acc = e[k].scale(&int(k as i64));
        if k % 2 == 0 {
            acc = -&acc;
        }
        for i in 1..k {
            let term = &e[i] * &sums[k - i - 1];
            if i % 2 == 1 {
                acc += &term;
            } else {
                acc -= &term;
            }
        }
        sums.push(acc);
    }
    extend_power_sums(&PowerSums { degree: m, sums }, count)
}

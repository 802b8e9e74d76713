//! Truncated formal series in `u^{-1}` with [`ParamPoly`] coefficients.
//!
//! A series of order `N` stores `c_0 .. c_N`, the coefficients of
//! `u^0 .. u^{-N}`. Every operation is exact through order `N`; binary
//! operations on series of different orders truncate to the smaller one.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::param_poly::ParamPoly;
use super::rational::{int, pow_i, Rational};
use super::uni_poly::UniPoly;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParamSeries {
    coeffs: Vec<ParamPoly>,
}

impl ParamSeries {
    /// Pads with zeros or truncates `coeffs` to exactly `order + 1` entries.
    pub fn new(order: usize, mut coeffs: Vec<ParamPoly>) -> Self {
        coeffs.resize(order + 1, ParamPoly::zero());
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Self::new(order, vec![ParamPoly::one()])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[ParamPoly] {
        &self.coeffs
    }

    /// Coefficient of `u^{-k}`.
    pub fn coeff(&self, k: usize) -> &ParamPoly {
        &self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(order, self.coeffs[..=order.min(self.order())].to_vec())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(ParamPoly::is_zero)
    }

    pub fn specialize(&self, a: &Rational) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| ParamPoly::constant(c.eval(a)))
                .collect(),
        }
    }

    /// Expansion of `num(u) / den(u)` in powers of `u^{-1}`.
    ///
    /// Both polynomials must be monic of the same degree, so the quotient has
    /// constant term 1.
    pub fn from_poly_ratio(num: &UniPoly, den: &UniPoly, order: usize) -> Result<Self> {
        let (dn, dd) = (num.degree().unwrap_or(0), den.degree().unwrap_or(0));
        if dn != dd {
            return Err(Error::DegreeMismatch { num: dn, den: dd });
        }
        if !num.is_monic() || !den.is_monic() {
            return Err(Error::NotMonic);
        }
        // With x = 1/u, q(u) = u^n * q_rev(x) where q_rev has constant term 1.
        let rev = |q: &UniPoly| -> Vec<ParamPoly> {
            (0..=order)
                .map(|k| {
                    if k <= dn {
                        q.coeff(dn - k)
                    } else {
                        ParamPoly::zero()
                    }
                })
                .collect()
        };
        let (top, bottom) = (rev(num), rev(den));
        let mut out: Vec<ParamPoly> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut c = top[k].clone();
            for j in 1..=k {
                c -= &(&bottom[j] * &out[k - j]);
            }
            out.push(c);
        }
        Ok(Self { coeffs: out })
    }

    /// Formal logarithm; requires constant term 1.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantTerm {
                expected: "1",
                found: self.coeffs[0].to_string(),
            });
        }
        let n = self.order();
        let mut out = vec![ParamPoly::zero(); n + 1];
        // s * L' = s'  =>  k L_k = k s_k - sum_{j=1}^{k-1} j L_j s_{k-j}
        for k in 1..=n {
            let mut acc = self.coeffs[k].scale(&int(k as i64));
            for (j, l) in out.iter().enumerate().take(k).skip(1) {
                acc -= &(l * &self.coeffs[k - j]).scale(&int(j as i64));
            }
            out[k] = acc.scale(&Rational::new(1.into(), (k as i64).into()));
        }
        Ok(Self { coeffs: out })
    }

    /// Formal exponential; requires constant term 0.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ConstantTerm {
                expected: "0",
                found: self.coeffs[0].to_string(),
            });
        }
        let n = self.order();
        let mut out = vec![ParamPoly::zero(); n + 1];
        out[0] = ParamPoly::one();
        // E' = S' E  =>  k E_k = sum_{j=1}^{k} j S_j E_{k-j}
        for k in 1..=n {
            let mut acc = ParamPoly::zero();
            for j in 1..=k {
                acc += &(&self.coeffs[j] * &out[k - j]).scale(&int(j as i64));
            }
            out[k] = acc.scale(&Rational::new(1.into(), (k as i64).into()));
        }
        Ok(Self { coeffs: out })
    }

    /// Change of variable `u = d * ũ`: the `ũ^{-k}` coefficient is `d^{-k}` times
    /// the `u^{-k}` coefficient.
    pub fn rescale(&self, d: i64) -> Result<Self> {
        if d == 0 {
            return Err(Error::ZeroScale);
        }
        let d = int(d);
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c.scale(&pow_i(&d, -(k as i64))))
                .collect(),
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| x.scale(c)).collect(),
        }
    }
}

impl Add for &ParamSeries {
    type Output = ParamSeries;
    fn add(self, rhs: Self) -> ParamSeries {
        let n = self.order().min(rhs.order());
        ParamSeries::new(
            n,
            (0..=n).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect(),
        )
    }
}

impl Sub for &ParamSeries {
    type Output = ParamSeries;
    fn sub(self, rhs: Self) -> ParamSeries {
        let n = self.order().min(rhs.order());
        ParamSeries::new(
            n,
            (0..=n).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect(),
        )
    }
}

impl Neg for &ParamSeries {
    type Output = ParamSeries;
    fn neg(self) -> ParamSeries {
        ParamSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &ParamSeries {
    type Output = ParamSeries;
    fn mul(self, rhs: Self) -> ParamSeries {
        let n = self.order().min(rhs.order());
        let coeffs = (0..=n)
            .map(|k| {
                (0..=k).fold(ParamPoly::zero(), |acc, j| {
                    &acc + &(&self.coeffs[j] * &rhs.coeffs[k - j])
                })
            })
            .collect();
        ParamSeries::new(n, coeffs)
    }
}

/// True when every coefficient of the difference vanishes through the common order.
pub fn series_eq(x: &ParamSeries, y: &ParamSeries) -> bool {
    (x - y)
        .coeffs
        .iter()
        .all(|c| c.coeffs().iter().all(Zero::is_zero))
}

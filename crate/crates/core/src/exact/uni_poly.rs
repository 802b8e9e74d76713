//! Polynomials in `u` whose coefficients are [`ParamPoly`]s.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Signed};

use super::param_poly::ParamPoly;
use super::rational::{binomial, Rational};

/// Coefficients of `u^0, u^1, ...`, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<ParamPoly>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<ParamPoly>) -> Self {
        while coeffs.last().is_some_and(ParamPoly::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn one() -> Self {
        Self::new(vec![ParamPoly::one()])
    }

    /// `u - root`.
    pub fn linear(root: ParamPoly) -> Self {
        Self::new(vec![-&root, ParamPoly::one()])
    }

    /// `prod (u - r)` over the given roots; the empty product is 1.
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = &'a ParamPoly>) -> Self {
        roots
            .into_iter()
            .fold(Self::one(), |acc, r| &acc * &Self::linear(r.clone()))
    }

    pub fn coeffs(&self) -> &[ParamPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> ParamPoly {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(ParamPoly::is_one)
    }

    /// Specializes the parameter `a`, leaving a polynomial with constant coefficients.
    pub fn specialize(&self, a: &Rational) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .map(|c| ParamPoly::constant(c.eval(a)))
                .collect(),
        )
    }

    /// Coefficients as plain rationals, if none of them depends on `a`.
    pub fn rational_coeffs(&self) -> Option<Vec<Rational>> {
        self.coeffs.iter().map(ParamPoly::as_constant).collect()
    }

    /// `q(u + shift)`.
    pub fn shift(&self, shift: &ParamPoly) -> Self {
        let n = self.coeffs.len();
        let mut out = vec![ParamPoly::zero(); n];
        let powers: Vec<ParamPoly> = (0..n).map(|k| shift.pow(k)).collect();
        for (k, c) in self.coeffs.iter().enumerate() {
            for (j, slot) in out.iter_mut().enumerate().take(k + 1) {
                let term = &(c * &powers[k - j]).scale(&binomial(k as u64, j as u64));
                *slot += term;
            }
        }
        Self::new(out)
    }

    /// Evaluates at `u = x` for a parameter-valued `x`.
    pub fn eval(&self, x: &ParamPoly) -> ParamPoly {
        self.coeffs
            .iter()
            .rev()
            .fold(ParamPoly::zero(), |acc, c| &(&acc * x) + c)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: Self) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: Self) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: Self) -> UniPoly {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return UniPoly::new(Vec::new());
        }
        let mut out = vec![ParamPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            for (j, y) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(x * y);
            }
        }
        UniPoly::new(out)
    }
}

/// Descending powers of `u`; non-constant coefficients are parenthesized,
/// e.g. `u^2 + (-2/3*a - 1)*u + (1/9*a^2 + 1/3*a + 2/9)`.
impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let var = match k {
                0 => String::new(),
                1 => "u".to_string(),
                _ => format!("u^{k}"),
            };
            let (negative, body) = match c.as_constant() {
                Some(r) => {
                    let mag = r.abs();
                    let body = match (k, mag.is_one()) {
                        (0, _) => mag.to_string(),
                        (_, true) => var.clone(),
                        _ => format!("{mag}*{var}"),
                    };
                    (r.is_negative(), body)
                }
                None if k == 0 => (false, format!("({c})")),
                None => (false, format!("({c})*{var}")),
            };
            match (first, negative) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Sum of the `k`-th powers of the given values.
pub fn power_sum<'a>(roots: impl IntoIterator<Item = &'a ParamPoly>, k: usize) -> ParamPoly {
    roots
        .into_iter()
        .fold(ParamPoly::zero(), |acc, r| &acc + &r.pow(k))
}

impl Default for UniPoly {
    fn default() -> Self {
        Self::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    #[test]
    fn from_roots_expands() {
        let roots = [ParamPoly::from(2), ParamPoly::from(3)];
        let q = UniPoly::from_roots(&roots);
        assert_eq!(q.rational_coeffs().unwrap(), vec![int(6), int(-5), int(1)]);
        assert!(q.is_monic());
        assert_eq!(UniPoly::from_roots(&[]), UniPoly::one());
    }

    #[test]
    fn shift_matches_root_shift() {
        let a = ParamPoly::param();
        let roots = [a.clone(), &a + &ParamPoly::from(2)];
        let q = UniPoly::from_roots(&roots);
        // q(u - 3) has roots shifted by +3
        let shifted = q.shift(&ParamPoly::from(-3));
        let expect: Vec<ParamPoly> = roots.iter().map(|r| r + &ParamPoly::from(3)).collect();
        assert_eq!(shifted, UniPoly::from_roots(&expect));
    }

    #[test]
    fn display_forms() {
        let a = ParamPoly::param();
        let q = UniPoly::from_roots(&[
            (&a + &ParamPoly::from(1)).scale(&rat(1, 3)),
            (&a + &ParamPoly::from(2)).scale(&rat(1, 3)),
        ]);
        assert_eq!(
            q.to_string(),
            "u^2 + (-2/3*a - 1)*u + (1/9*a^2 + 1/3*a + 2/9)"
        );
        let r = UniPoly::from_roots(&[ParamPoly::from(2), ParamPoly::from(3)]);
        assert_eq!(r.to_string(), "u^2 - 5*u + 6");
        assert_eq!(UniPoly::one().to_string(), "1");
    }
}

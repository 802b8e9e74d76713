//! Polynomials over the rationals in the formal spectral parameter `a`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use super::rational::{int, Rational};

/// Coefficients of `a^0, a^1, ...` with no trailing zeros.
///
/// The zero polynomial has an empty coefficient list and `degree() == None`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ParamPoly {
    coeffs: Vec<Rational>,
}

impl ParamPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The parameter `a` itself.
    pub fn param() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    /// `slope * a + intercept`.
    pub fn affine(slope: Rational, intercept: Rational) -> Self {
        Self::new(vec![intercept, slope])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `a^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, exp: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Specializes `a` to a rational value (Horner).
    pub fn eval(&self, a: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * a + c)
    }

    /// Substitutes `a -> slope * a + shift`.
    pub fn compose_affine(&self, slope: &Rational, shift: &Rational) -> Self {
        let inner = Self::affine(slope.clone(), shift.clone());
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * &inner) + &Self::constant(c.clone())
        })
    }
}

impl From<Rational> for ParamPoly {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl From<i64> for ParamPoly {
    fn from(c: i64) -> Self {
        Self::constant(int(c))
    }
}

impl Add for &ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: Self) -> ParamPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ParamPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: Self) -> ParamPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ParamPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: Self) -> ParamPoly {
        if self.is_zero() || rhs.is_zero() {
            return ParamPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            for (j, y) in rhs.coeffs.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        ParamPoly::new(out)
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        ParamPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl AddAssign<&ParamPoly> for ParamPoly {
    fn add_assign(&mut self, rhs: &ParamPoly) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&ParamPoly> for ParamPoly {
    fn sub_assign(&mut self, rhs: &ParamPoly) {
        *self = &*self - rhs;
    }
}

/// Descending powers of `a`, e.g. `1/3*a^2 - 2*a + 1/2`.
impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let var = match k {
                0 => String::new(),
                1 => "a".to_string(),
                _ => format!("a^{k}"),
            };
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "{var}")?,
                _ => write!(f, "{mag}*{var}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    #[test]
    fn trailing_zeros_trimmed() {
        let p = ParamPoly::new(vec![int(1), int(0), int(0)]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(ParamPoly::new(vec![int(0)]).degree(), None);
    }

    #[test]
    fn arithmetic_and_eval() {
        let a = ParamPoly::param();
        let p = &(&a + &ParamPoly::from(1)) * &(&a - &ParamPoly::from(1));
        assert_eq!(p, ParamPoly::new(vec![int(-1), int(0), int(1)]));
        assert_eq!(p.eval(&int(3)), int(8));
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn display_is_canonical() {
        let p = ParamPoly::new(vec![rat(1, 2), int(-2), rat(1, 3)]);
        assert_eq!(p.to_string(), "1/3*a^2 - 2*a + 1/2");
        assert_eq!(ParamPoly::affine(int(-1), int(0)).to_string(), "-a");
        assert_eq!(ParamPoly::zero().to_string(), "0");
        assert_eq!(
            ParamPoly::affine(rat(1, 3), rat(7, 6)).to_string(),
            "1/3*a + 7/6"
        );
    }

    #[test]
    fn affine_substitution() {
        // (a^2) at a -> 2a + 1
        let p = ParamPoly::param().pow(2);
        let q = p.compose_affine(&int(2), &int(1));
        assert_eq!(q, ParamPoly::new(vec![int(1), int(4), int(4)]));
    }
}

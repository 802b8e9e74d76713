//! Roots of monic polynomials whose roots are affine in the parameter `a`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::param_poly::ParamPoly;
use super::rational::Rational;
use super::uni_poly::UniPoly;
use crate::error::{Error, Result};

/// Largest |coefficient| for which rational-root candidates are enumerated.
const DIVISOR_LIMIT: u64 = 1_000_000_000_000;

/// `slope * a + intercept`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineRoot {
    pub slope: Rational,
    pub intercept: Rational,
}

impl AffineRoot {
    pub fn new(slope: Rational, intercept: Rational) -> Self {
        Self { slope, intercept }
    }

    pub fn to_poly(&self) -> ParamPoly {
        ParamPoly::affine(self.slope.clone(), self.intercept.clone())
    }
}

impl fmt::Display for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

/// Finds the roots of `q` as affine functions of `a`.
///
/// The slopes are the roots of the top homogeneous part (the coefficient of
/// `a^k u^{n-k}`), the intercepts are among the roots of `q` at `a = 0`.
/// Each candidate `s*a + b` is tested by exact evaluation and divided out.
/// The result is sorted by (slope, intercept).
pub fn roots_affine_in_param(q: &UniPoly) -> Result<Vec<AffineRoot>> {
    if !q.is_monic() {
        return Err(Error::NotMonic);
    }
    let n = q.degree().unwrap_or(0);
    if n == 0 {
        return Ok(Vec::new());
    }
    let unavailable = |why: &str| Error::SymbolicRootsUnavailable(why.to_string());
    let mut top = vec![Rational::zero(); n + 1];
    for k in 0..=n {
        let c = q.coeff(n - k);
        if c.degree().is_some_and(|d| d > k) {
            return Err(unavailable(
                "a coefficient has too high a degree in a for affine roots",
            ));
        }
        top[n - k] = c.coeff(k);
    }
    let mut slopes =
        rational_roots(&top).ok_or_else(|| unavailable("slope polynomial too large"))?;
    if slopes.len() != n {
        return Err(unavailable("slopes are not rational"));
    }
    slopes.dedup();
    let at_zero = q
        .specialize(&Rational::zero())
        .rational_coeffs()
        .expect("constant coefficients");
    let mut intercepts =
        rational_roots(&at_zero).ok_or_else(|| unavailable("coefficients too large at a = 0"))?;
    if intercepts.len() != n {
        return Err(unavailable(
            "specialization at a = 0 does not split over the rationals",
        ));
    }
    intercepts.dedup();

    let mut rest = q.coeffs().to_vec();
    let mut out = Vec::with_capacity(n);
    for s in &slopes {
        for b in &intercepts {
            let root = AffineRoot::new(s.clone(), b.clone());
            let r = root.to_poly();
            loop {
                let (quotient, remainder) = divide_linear(&rest, &r);
                if !remainder.is_zero() {
                    break;
                }
                rest = quotient;
                out.push(root.clone());
            }
        }
    }
    if out.len() != n {
        return Err(unavailable("roots are not affine in a"));
    }
    out.sort();
    Ok(out)
}

/// Divides `sum c_k u^k` by `u - r`; returns quotient and remainder.
fn divide_linear(coeffs: &[ParamPoly], r: &ParamPoly) -> (Vec<ParamPoly>, ParamPoly) {
    let n = coeffs.len() - 1;
    if n == 0 {
        return (Vec::new(), coeffs[0].clone());
    }
    let mut quotient = vec![ParamPoly::zero(); n];
    quotient[n - 1] = coeffs[n].clone();
    for k in (1..n).rev() {
        quotient[k - 1] = &coeffs[k] + &(r * &quotient[k]);
    }
    let remainder = &coeffs[0] + &(r * &quotient[0]);
    (quotient, remainder)
}

/// All rational roots of `sum c_k u^k`, with multiplicity.
///
/// Returns `None` when the integer coefficients are too large to enumerate
/// rational-root candidates.
pub fn rational_roots(coeffs: &[Rational]) -> Option<Vec<Rational>> {
    let mut poly: Vec<Rational> = coeffs.to_vec();
    while poly.last().is_some_and(Zero::is_zero) {
        poly.pop();
    }
    let mut roots = Vec::new();
    while poly.len() > 1 && poly[0].is_zero() {
        roots.push(Rational::zero());
        poly.remove(0);
    }
    if poly.len() <= 1 {
        return Some(roots);
    }
    let lcm = poly.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = poly.iter().map(|c| (c * &lcm).to_integer()).collect();
    let lead = ints
        .last()?
        .abs()
        .to_u64()
        .filter(|v| *v <= DIVISOR_LIMIT)?;
    let constant = ints[0].abs().to_u64().filter(|v| *v <= DIVISOR_LIMIT)?;
    let mut candidates = Vec::new();
    for p in divisors(constant) {
        for qd in divisors(lead) {
            let c = Rational::new(BigInt::from(p), BigInt::from(qd));
            candidates.push(c.clone());
            candidates.push(-c);
        }
    }
    candidates.sort();
    candidates.dedup();
    for c in candidates {
        while poly.len() > 1 {
            let (quot, rem) = deflate(&poly, &c);
            if !rem.is_zero() {
                break;
            }
            roots.push(c.clone());
            poly = quot;
        }
    }
    Some(roots)
}

/// Synthetic division by `(u - c)`; returns quotient and remainder.
fn deflate(poly: &[Rational], c: &Rational) -> (Vec<Rational>, Rational) {
    let n = poly.len() - 1;
    let mut quot = vec![Rational::zero(); n];
    let mut carry = Rational::zero();
    for k in (0..=n).rev() {
        let v = &poly[k] + &carry * c;
        if k == 0 {
            return (quot, v);
        }
        quot[k - 1] = v.clone();
        carry = v;
    }
    unreachable!()
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    #[test]
    fn thirds_pair() {
        let a = ParamPoly::param();
        let q = UniPoly::from_roots(&[
            (&a + &ParamPoly::from(2)).scale(&rat(1, 3)),
            (&a + &ParamPoly::from(1)).scale(&rat(1, 3)),
        ]);
        let roots = roots_affine_in_param(&q).unwrap();
        assert_eq!(
            roots,
            vec![
                AffineRoot::new(rat(1, 3), rat(1, 3)),
                AffineRoot::new(rat(1, 3), rat(2, 3)),
            ]
        );
    }

    #[test]
    fn factor_by_inspection() {
        // u^2 - 2a u + (a^2 - 1)
        let q = UniPoly::new(vec![
            ParamPoly::new(vec![int(-1), int(0), int(1)]),
            ParamPoly::affine(int(-2), int(0)),
            ParamPoly::one(),
        ]);
        let roots = roots_affine_in_param(&q).unwrap();
        assert_eq!(
            roots,
            vec![
                AffineRoot::new(int(1), int(-1)),
                AffineRoot::new(int(1), int(1))
            ]
        );
    }

    #[test]
    fn irreducible_has_no_symbolic_roots() {
        let q = UniPoly::new(vec![ParamPoly::one(), ParamPoly::zero(), ParamPoly::one()]);
        assert!(matches!(
            roots_affine_in_param(&q),
            Err(Error::SymbolicRootsUnavailable(_))
        ));
    }

    #[test]
    fn crossing_roots() {
        // roots a and 2 - a cross at a = 1
        let q = UniPoly::from_roots(&[ParamPoly::param(), ParamPoly::affine(int(-1), int(2))]);
        let roots = roots_affine_in_param(&q).unwrap();
        assert_eq!(
            roots,
            vec![
                AffineRoot::new(int(-1), int(2)),
                AffineRoot::new(int(1), int(0))
            ]
        );
    }

    #[test]
    fn constant_polynomial() {
        assert!(roots_affine_in_param(&UniPoly::one()).unwrap().is_empty());
    }

    #[test]
    fn rational_roots_with_multiplicity() {
        // (u - 1/2)^2 (u + 3) u
        let q = UniPoly::from_roots(&[
            ParamPoly::constant(rat(1, 2)),
            ParamPoly::constant(rat(1, 2)),
            ParamPoly::from(-3),
            ParamPoly::zero(),
        ]);
        let mut r = rational_roots(&q.rational_coeffs().unwrap()).unwrap();
        r.sort();
        assert_eq!(r, vec![int(-3), int(0), rat(1, 2), rat(1, 2)]);
    }
}

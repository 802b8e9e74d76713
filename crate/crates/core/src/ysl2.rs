//! Explicit Y(sl2) evaluation modules `V_m(a)` over the rationals.
//!
//! Basis `w_0 .. w_m`; `x_k^+` raises the index, `x_k^-` lowers it and `h_k`
//! is diagonal:
//!
//! ```text
//! x_k^+ w_s = (s+a)^k (s+1) w_{s+1}
//! x_k^- w_s = (s+a-1)^k (m-s+1) w_{s-1}
//! h_k  w_s = ((s+a-1)^k s (m-s+1) - (s+a)^k (s+1) (m-s)) w_s
//! ```
//!
//! `w_m` is the highest vector. The associated polynomial is
//! `(u-a)(u-a-1)...(u-a-m+1)`. Everything here works at a fixed rational `a`
//! and serves as a brute-force oracle for the symbolic layers.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::Result;
use crate::exact::{int, rat, series_eq, ParamPoly, ParamSeries, Rational, UniPoly};

/// Default bound on generator levels.
pub const DEFAULT_MAX_LEVEL: usize = 8;

/// Parameter values every suite runs at.
pub fn sample_params() -> Vec<Rational> {
    vec![int(0), int(1), int(-2), rat(5, 3)]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum GeneratorKind {
    XPlus,
    XMinus,
    H,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct GeneratorLabel {
    pub kind: GeneratorKind,
    pub level: usize,
}

impl GeneratorLabel {
    pub fn x_plus(level: usize) -> Self {
        Self {
            kind: GeneratorKind::XPlus,
            level,
        }
    }
    pub fn x_minus(level: usize) -> Self {
        Self {
            kind: GeneratorKind::XMinus,
            level,
        }
    }
    pub fn h(level: usize) -> Self {
        Self {
            kind: GeneratorKind::H,
            level,
        }
    }
}

impl fmt::Display for GeneratorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GeneratorKind::XPlus => write!(f, "x+_{}", self.level),
            GeneratorKind::XMinus => write!(f, "x-_{}", self.level),
            GeneratorKind::H => write!(f, "h_{}", self.level),
        }
    }
}

/// Square matrix over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix(Vec<Vec<Rational>>);

impl Matrix {
    pub fn zero(n: usize) -> Self {
        Self(vec![vec![Rational::zero(); n]; n])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.0[i][i] = Rational::one();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> &Rational {
        &self.0[row][col]
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self(
            self.0
                .iter()
                .map(|r| r.iter().map(|x| x * c).collect())
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().flatten().all(Zero::is_zero)
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::identity(self.dim()), |acc, _| &acc * self)
    }

    pub fn apply(&self, v: &ModuleVector) -> ModuleVector {
        ModuleVector(
            self.0
                .iter()
                .map(|row| {
                    row.iter()
                        .zip(&v.0)
                        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
                })
                .collect(),
        )
    }

    pub fn commutator(&self, rhs: &Self) -> Self {
        &(self * rhs) - &(rhs * self)
    }

    pub fn anticommutator(&self, rhs: &Self) -> Self {
        &(self * rhs) + &(rhs * self)
    }

    /// Largest entry of the matrix, for residual reports.
    fn describe(&self) -> String {
        let nonzero: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .flat_map(|(i, r)| {
                r.iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(move |(j, x)| format!("[{i},{j}]={x}"))
            })
            .collect();
        nonzero.join(" ")
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: Self) -> Matrix {
        Matrix(
            self.0
                .iter()
                .zip(&rhs.0)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
                .collect(),
        )
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: Self) -> Matrix {
        Matrix(
            self.0
                .iter()
                .zip(&rhs.0)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x - y).collect())
                .collect(),
        )
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: Self) -> Matrix {
        let n = self.dim();
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                if self.0[i][k].is_zero() {
                    continue;
                }
                for j in 0..n {
                    out.0[i][j] += &self.0[i][k] * &rhs.0[k][j];
                }
            }
        }
        out
    }
}

/// Coordinates in the `w`-basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleVector(pub Vec<Rational>);

impl ModuleVector {
    pub fn basis(dim: usize, s: usize) -> Self {
        let mut v = vec![Rational::zero(); dim];
        v[s] = Rational::one();
        Self(v)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self(self.0.iter().map(|x| x * c).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }
}

impl Add for &ModuleVector {
    type Output = ModuleVector;
    fn add(self, rhs: Self) -> ModuleVector {
        ModuleVector(self.0.iter().zip(&rhs.0).map(|(x, y)| x + y).collect())
    }
}

impl fmt::Display for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// The module `V_m(a)` at a concrete rational `a`.
#[derive(Debug, Clone)]
pub struct EvalModule {
    m: usize,
    a: Rational,
    max_level: usize,
}

impl EvalModule {
    pub fn new(m: usize, a: Rational) -> Self {
        Self {
            m,
            a,
            max_level: DEFAULT_MAX_LEVEL,
        }
    }

    pub fn with_max_level(mut self, max_level: usize) -> Self {
        self.max_level = max_level;
        self
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn param(&self) -> &Rational {
        &self.a
    }

    pub fn max_level(&self) -> usize {
        self.max_level
    }

    pub fn dim(&self) -> usize {
        self.m + 1
    }

    fn shifted(&self, s: usize, shift: i64) -> Rational {
        &self.a + int(s as i64 + shift)
    }

    pub fn matrix(&self, g: GeneratorLabel) -> Matrix {
        let n = self.dim();
        let k = g.level;
        let m = self.m as i64;
        let mut out = Matrix::zero(n);
        for s in 0..n {
            let si = s as i64;
            match g.kind {
                GeneratorKind::XPlus if s < self.m => {
                    out.0[s + 1][s] = num_traits::pow(self.shifted(s, 0), k) * int(si + 1);
                }
                GeneratorKind::XMinus if s > 0 => {
                    out.0[s - 1][s] = num_traits::pow(self.shifted(s, -1), k) * int(m - si + 1);
                }
                GeneratorKind::H => {
                    out.0[s][s] = num_traits::pow(self.shifted(s, -1), k) * int(si * (m - si + 1))
                        - num_traits::pow(self.shifted(s, 0), k) * int((si + 1) * (m - si));
                }
                _ => {}
            }
        }
        out
    }

    /// Applies a generator to a vector.
    pub fn act(&self, g: GeneratorLabel, v: &ModuleVector) -> ModuleVector {
        assert!(
            g.level <= 2 * self.max_level + 1,
            "generator level {} above configured bound",
            g.level
        );
        self.matrix(g).apply(v)
    }

    pub fn highest(&self) -> ModuleVector {
        ModuleVector::basis(self.dim(), self.m)
    }

    pub fn lowest(&self) -> ModuleVector {
        ModuleVector::basis(self.dim(), 0)
    }

    /// `(u-a)(u-a-1)...(u-a-m+1)` with `a` specialized.
    pub fn associated_polynomial(&self) -> UniPoly {
        let roots: Vec<ParamPoly> = (0..self.m)
            .map(|t| ParamPoly::constant(self.shifted(t, 0)))
            .collect();
        UniPoly::from_roots(&roots)
    }

    /// `1 + sum_k <h_k on w_s> u^{-k-1}` to the given order.
    pub fn h_series(&self, s: usize, order: usize) -> ParamSeries {
        let mut coeffs = vec![ParamPoly::one()];
        for k in 0..order {
            coeffs.push(ParamPoly::constant(
                self.matrix(GeneratorLabel::h(k)).0[s][s].clone(),
            ));
        }
        ParamSeries::new(order, coeffs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationViolation {
    pub family: &'static str,
    pub sign: &'static str,
    pub r: usize,
    pub s: usize,
    pub residual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub m: usize,
    pub a: String,
    pub max_level: usize,
    pub checked: usize,
    pub violations: Vec<RelationViolation>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the five rank-1 families of defining relations on `V_m(a)` for all
/// levels `r, s <= max_level` as exact matrix identities.
pub fn check_relations(m: usize, a: &Rational, max_level: usize) -> RelationReport {
    let module = EvalModule::new(m, a.clone()).with_max_level(max_level);
    let top = 2 * max_level + 1;
    let xp: Vec<Matrix> = (0..=top)
        .map(|k| module.matrix(GeneratorLabel::x_plus(k)))
        .collect();
    let xm: Vec<Matrix> = (0..=top)
        .map(|k| module.matrix(GeneratorLabel::x_minus(k)))
        .collect();
    let h: Vec<Matrix> = (0..=top)
        .map(|k| module.matrix(GeneratorLabel::h(k)))
        .collect();
    let two = int(2);
    let mut report = RelationReport {
        m,
        a: a.to_string(),
        max_level,
        checked: 0,
        violations: Vec::new(),
    };
    let mut check =
        |family: &'static str, sign: &'static str, r: usize, s: usize, residual: Matrix| {
            report.checked += 1;
            if !residual.is_zero() {
                report.violations.push(RelationViolation {
                    family,
                    sign,
                    r,
                    s,
                    residual: residual.describe(),
                });
            }
        };
    for r in 0..=max_level {
        for s in 0..=max_level {
            check("[h_r,h_s]=0", "", r, s, h[r].commutator(&h[s]));
            check(
                "[x+_r,x-_s]=h_{r+s}",
                "",
                r,
                s,
                &xp[r].commutator(&xm[s]) - &h[r + s],
            );
            for (sign, x, eps) in [("+", &xp, int(1)), ("-", &xm, int(-1))] {
                if r == 0 {
                    check(
                        "[h_0,x_s]=±2x_s",
                        sign,
                        r,
                        s,
                        &h[0].commutator(&x[s]) - &x[s].scale(&(&two * &eps)),
                    );
                }
                let lhs = &h[r + 1].commutator(&x[s]) - &h[r].commutator(&x[s + 1]);
                let rhs = h[r].anticommutator(&x[s]).scale(&eps);
                check(
                    "[h_{r+1},x_s]-[h_r,x_{s+1}]=±{h_r,x_s}",
                    sign,
                    r,
                    s,
                    &lhs - &rhs,
                );
                let lhs = &x[r + 1].commutator(&x[s]) - &x[r].commutator(&x[s + 1]);
                let rhs = x[r].anticommutator(&x[s]).scale(&eps);
                check(
                    "[x_{r+1},x_s]-[x_r,x_{s+1}]=±{x_r,x_s}",
                    sign,
                    r,
                    s,
                    &lhs - &rhs,
                );
            }
        }
    }
    report
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InsertionReport {
    pub m: usize,
    pub a: String,
    pub k: usize,
    pub power_sum: String,
    pub lhs: String,
    pub rhs: String,
    pub passed: bool,
}

/// Compares `sum_t (x_0^-)^t x_k^- (x_0^-)^{m-1-t} w_m` with
/// `p_k (x_0^-)^m w_m`, `p_k = sum_{t=1}^{m} (a+t-1)^k`.
pub fn symmetrized_insertion_check(m: usize, a: &Rational, k: usize) -> InsertionReport {
    let module = EvalModule::new(m, a.clone());
    let x0 = module.matrix(GeneratorLabel::x_minus(0));
    let xk = module.matrix(GeneratorLabel::x_minus(k));
    let top = module.highest();
    let mut lhs = ModuleVector(vec![Rational::zero(); module.dim()]);
    for t in 0..m {
        let op = &(&x0.pow(t) * &xk) * &x0.pow(m - 1 - t);
        lhs = &lhs + &op.apply(&top);
    }
    let p_k = (1..=m as i64).fold(Rational::zero(), |acc, t| {
        acc + num_traits::pow(a + int(t - 1), k)
    });
    let rhs = x0.pow(m).apply(&top).scale(&p_k);
    InsertionReport {
        m,
        a: a.to_string(),
        k,
        power_sum: p_k.to_string(),
        passed: lhs == rhs,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalReport {
    pub m: usize,
    pub a: String,
    pub order: usize,
    pub highest_ok: bool,
    pub lowest_ok: bool,
    pub highest_series: Vec<String>,
    pub lowest_series: Vec<String>,
}

impl ExtremalReport {
    pub fn passed(&self) -> bool {
        self.highest_ok && self.lowest_ok
    }
}

/// Checks `h(u) w_m = π(u+1)/π(u)` and `h(u) w_0 = π(u-1)/π(u)` to the given order.
pub fn extremal_series_check(m: usize, a: &Rational, order: usize) -> Result<ExtremalReport> {
    let module = EvalModule::new(m, a.clone());
    let pi = module.associated_polynomial();
    let up = ParamSeries::from_poly_ratio(&pi.shift(&ParamPoly::one()), &pi, order)?;
    let down = ParamSeries::from_poly_ratio(&pi.shift(&ParamPoly::from(-1)), &pi, order)?;
    let hi = module.h_series(m, order);
    let lo = module.h_series(0, order);
    let show = |s: &ParamSeries| s.coeffs().iter().map(ToString::to_string).collect();
    Ok(ExtremalReport {
        m,
        a: a.to_string(),
        order,
        highest_ok: series_eq(&hi, &up),
        lowest_ok: series_eq(&lo, &down),
        highest_series: show(&hi),
        lowest_series: show(&lo),
    })
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Sl2SuiteReport {
    pub relation_checks: usize,
    pub relation_failures: Vec<RelationReport>,
    pub insertion_checks: usize,
    pub insertion_failures: Vec<InsertionReport>,
    pub extremal_checks: usize,
    pub extremal_failures: Vec<ExtremalReport>,
}

impl Sl2SuiteReport {
    pub fn passed(&self) -> bool {
        self.relation_failures.is_empty()
            && self.insertion_failures.is_empty()
            && self.extremal_failures.is_empty()
    }
}

/// Runs all three oracles over `m = 1..=max_m` and the given parameter values.
pub fn run_sl2_suite(
    max_m: usize,
    params: &[Rational],
    max_level: usize,
    max_k: usize,
    order: usize,
) -> Result<Sl2SuiteReport> {
    let mut out = Sl2SuiteReport::default();
    for m in 1..=max_m {
        for a in params {
            let rel = check_relations(m, a, max_level);
            out.relation_checks += rel.checked;
            if !rel.passed() {
                out.relation_failures.push(rel);
            }
            for k in 0..=max_k {
                let ins = symmetrized_insertion_check(m, a, k);
                out.insertion_checks += 1;
                if !ins.passed {
                    out.insertion_failures.push(ins);
                }
            }
            let ext = extremal_series_check(m, a, order)?;
            out.extremal_checks += 1;
            if !ext.passed() {
                out.extremal_failures.push(ext);
            }
        }
    }
    Ok(out)
}

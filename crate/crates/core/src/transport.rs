//! Eigenvalue transport along the extremal path of a fundamental module.
//!
//! The walk never builds module vectors. For the current extremal vector it
//! keeps, for every node `i`, the series `H_i(u) = log h_i(u)` of eigenvalues,
//! where `Λ_{i,k}` is the coefficient of `u^{-k-1}`. One step of the path
//! applies `(x_{c,0}^-)^m` and does two things:
//!
//! 1. **Extraction.** The vector is highest weight for the copy of Y(sl2) at
//!    node `c`, with `h_c(u) = π(u + d_c)/π(u)` in terms of the unscaled roots
//!    `R_t`. Expanding the logarithm gives the triangular system
//!    `(k+1) Λ_{c,k} = -sum_{s=0}^{k} C(k+1, s) (-d_c)^{k+1-s} p_s`,
//!    `p_0 = m`, which yields the power sums `p_1 .. p_m` of the `R_t`. The
//!    associated polynomial in the rescaled variable `ũ = u / d_c` has roots
//!    `R_t / d_c`.
//! 2. **Transport.** Commuting `H_{i,k}` past `(x_{c,0}^-)^m` produces
//!    symmetrized insertions of `x_{c,s}^-`, each acting as `p_s` on the
//!    highest vector (the `d_c^s` from the generator rescaling is absorbed by
//!    using unscaled power sums):
//!    `Λ_{i,k} -= d_i a_ic p_k + sum_{s <= k-2, k+s even} 2^{s-k} (d_i a_ic)^{k+1-s} C(k+1,s)/(k+1) p_s`.
//!
//! After each step the node-`c` series must equal `log(π(u - d_c)/π(u))`, the
//! lowest-vector form; the walk checks this and aborts on a mismatch.
//!
//! On the long-root step of the ω_1 walk for G2 the node-1 contribution
//! carried into the second node-2 step is `½(a² - (a+3)²)` for `H_{1,1}` and
//! `⅓(a³ - (a+3)³)` for `H_{1,2}`; these are what produce the totals `6a` and
//! `6a² + 6`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{
    binomial, extend_power_sums, int, pow_i, power_sums_to_monic, rat, roots_affine_in_param,
    series_eq, AffineRoot, ParamPoly, ParamSeries, PowerSums, UniPoly,
};
use crate::root_system::{path_exponents, CartanData, PathExponents, ReducedWord};

pub const DEFAULT_ORDER: usize = 8;

/// Eigenvalue data on the current extremal vector.
#[derive(Debug, Clone)]
pub struct WalkState {
    cartan: CartanData,
    /// `H_i(u)` per node (index `i - 1`), constant term 0.
    series: Vec<ParamSeries>,
    weight: Vec<i64>,
    steps_taken: usize,
    order: usize,
}

impl WalkState {
    pub fn cartan(&self) -> &CartanData {
        &self.cartan
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn steps_taken(&self) -> usize {
        self.steps_taken
    }

    /// Current extremal weight in fundamental coordinates.
    pub fn weight(&self) -> &[i64] {
        &self.weight
    }

    /// `H_i(u)` at a 1-based node.
    pub fn log_series(&self, node: usize) -> &ParamSeries {
        &self.series[node - 1]
    }

    /// `Λ_{i,k}`, the eigenvalue of `H_{i,k}`.
    pub fn log_eigenvalue(&self, node: usize, k: usize) -> &ParamPoly {
        self.series[node - 1].coeff(k + 1)
    }

    /// `h_i(u) = exp(H_i(u))`.
    pub fn h_series(&self, node: usize) -> ParamSeries {
        self.series[node - 1]
            .exp()
            .expect("log series always have zero constant term")
    }

    /// Eigenvalue of `h_{i,k}`.
    pub fn h_eigenvalue(&self, node: usize, k: usize) -> ParamPoly {
        self.h_series(node).coeff(k + 1).clone()
    }

    /// `Λ_{i,0} = d_i λ_i` for every node.
    pub fn weight_consistent(&self) -> bool {
        (1..=self.cartan.rank()).all(|i| {
            self.log_eigenvalue(i, 0)
                == &ParamPoly::from(self.cartan.symmetrizer(i) * self.weight[i - 1])
        })
    }
}

/// Starting data on `v^+` of `V_a(ω_{i0})`: `h_{i0}(u) = (u - a + d_{i0})/(u - a)`
/// and `h_i(u) = 1` otherwise.
pub fn init_walk(c: &CartanData, i0: usize, order: usize) -> Result<WalkState> {
    c.check_node(i0)?;
    if order < 2 {
        return Err(Error::OrderTooSmall { order, needed: 2 });
    }
    let a = ParamPoly::param();
    let d = ParamPoly::from(c.symmetrizer(i0));
    let num = UniPoly::linear(&a - &d);
    let den = UniPoly::linear(a);
    let mut series = vec![ParamSeries::zero(order); c.rank()];
    series[i0 - 1] = ParamSeries::from_poly_ratio(&num, &den, order)?.log()?;
    Ok(WalkState {
        cartan: c.clone(),
        series,
        weight: c.fundamental_weight(i0),
        steps_taken: 0,
        order,
    })
}

/// Associated polynomial (rescaled variable) and unscaled power sums of the
/// roots at node `c`, assuming the current vector is highest weight there with
/// a degree-`m` polynomial. The power sums are extended through the series order.
pub fn extract_step_poly(state: &WalkState, c: usize, m: usize) -> Result<(UniPoly, PowerSums)> {
    state.cartan.check_node(c)?;
    extract_from_series(state.log_series(c), state.cartan.symmetrizer(c), m).map_err(|e| match e {
        Error::Invariant(msg) => Error::Invariant(format!("node {c}: {msg}")),
        other => other,
    })
}

/// Solves the highest-weight system for a single `log h(u)` series with shift `d`.
pub fn extract_from_series(log: &ParamSeries, d: i64, m: usize) -> Result<(UniPoly, PowerSums)> {
    let n = log.order();
    if m + 1 > n {
        return Err(Error::OrderTooSmall {
            order: n,
            needed: m + 1,
        });
    }
    let d = int(d);
    let neg_d = -d.clone();
    let lam = |k: usize| log.coeff(k + 1).clone();
    if lam(0) != ParamPoly::from(m as i64).scale(&d) {
        return Err(Error::Invariant(format!(
            "H_0 eigenvalue {} is not d * m = {}",
            lam(0),
            &d * int(m as i64)
        )));
    }
    let mut p: Vec<ParamPoly> = vec![ParamPoly::from(m as i64)];
    for k in 1..=m {
        let k1 = (k + 1) as i64;
        let mut acc = lam(k).scale(&int(k1));
        for (s, ps) in p.iter().enumerate() {
            let coeff = binomial(k1 as u64, s as u64) * pow_i(&neg_d, k1 - s as i64);
            acc += &ps.scale(&coeff);
        }
        p.push(acc.scale(&(int(1) / (int(k1) * &d))));
    }
    let sums = PowerSums::new(m, p[1..].to_vec());
    let rescaled = sums.scale_roots(&(int(1) / &d));
    let poly = power_sums_to_monic(&rescaled);
    Ok((poly, extend_power_sums(&sums, n)))
}

/// Transport all series across `(x_{c,0}^-)^m`.
pub fn apply_step(state: &WalkState, c: usize, m: usize, p: &PowerSums) -> Result<WalkState> {
    state.cartan.check_node(c)?;
    let n = state.order;
    if p.len() < n.saturating_sub(1) || p.degree() != m {
        return Err(Error::Invariant(format!(
            "power sums must have degree {m} and reach index {}",
            n - 1
        )));
    }
    let mut next = state.clone();
    for i in 1..=state.cartan.rank() {
        let b = int(state.cartan.symmetrizer(i) * state.cartan.entry(i, c));
        let mut coeffs = state.series[i - 1].coeffs().to_vec();
        for k in 0..n {
            let mut delta = p.get(k).scale(&b);
            for s in (0..k.saturating_sub(1)).filter(|s| (k + s) % 2 == 0) {
                let coeff = pow_i(&int(2), s as i64 - k as i64)
                    * pow_i(&b, (k + 1 - s) as i64)
                    * binomial((k + 1) as u64, s as u64)
                    * rat(1, (k + 1) as i64);
                delta += &p.get(s).scale(&coeff);
            }
            coeffs[k + 1] -= &delta;
        }
        next.series[i - 1] = ParamSeries::new(n, coeffs);
        next.weight[i - 1] -= m as i64 * state.cartan.entry(i, c);
    }
    next.steps_taken += 1;
    Ok(next)
}

/// `log(π(u - d)/π(u))` for the monic `π` with the given unscaled power sums.
pub fn lowest_vector_series(p: &PowerSums, d: i64, order: usize) -> Result<ParamSeries> {
    let pi = power_sums_to_monic(p);
    ParamSeries::from_poly_ratio(&pi.shift(&ParamPoly::from(-d)), &pi, order)?.log()
}

#[derive(Debug, Clone, Serialize)]
pub struct StepRecord {
    /// Position `j` in the reduced word.
    pub index: usize,
    pub node: usize,
    pub exponent: usize,
    /// The polynomial is in `ũ = u / rescale`.
    pub rescale: i64,
    #[serde(serialize_with = "ser_display")]
    pub polynomial: UniPoly,
    /// Rescaled roots, when they are affine in `a`.
    #[serde(serialize_with = "ser_roots")]
    pub roots: Option<Vec<AffineRoot>>,
    /// Unscaled power sums `p_1 .. p_N` of `d_c ×` the rescaled roots.
    #[serde(skip)]
    pub power_sums: PowerSums,
    /// `Λ_{c,k}` on the vector before the step.
    #[serde(serialize_with = "ser_polys")]
    pub log_eigenvalues: Vec<ParamPoly>,
    /// `h_{c,k}` on the vector before the step.
    #[serde(serialize_with = "ser_polys")]
    pub h_eigenvalues: Vec<ParamPoly>,
    pub crosscheck: bool,
}

impl StepRecord {
    pub fn factored(&self) -> Option<String> {
        self.roots.as_ref().map(|r| factored(r, "u"))
    }
}

/// `(u - (r_1))(u - (r_2))...`, or `1` for no roots.
pub fn factored(roots: &[AffineRoot], var: &str) -> String {
    if roots.is_empty() {
        return "1".into();
    }
    roots.iter().map(|r| format!("({var} - ({r}))")).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct WalkReport {
    pub fundamental: usize,
    pub word: ReducedWord,
    pub exponents: Vec<i64>,
    pub order: usize,
    /// One record per step with `m_j > 0`, in path order.
    pub records: Vec<StepRecord>,
    pub final_weight: Vec<i64>,
}

impl WalkReport {
    pub fn crosschecks_passed(&self) -> bool {
        self.records.iter().all(|r| r.crosscheck)
    }
}

/// Walks the extremal path of `ω_{i0}` for the given reduced word of `w_0`.
pub fn run_walk(c: &CartanData, word: &ReducedWord, i0: usize, order: usize) -> Result<WalkReport> {
    let path = path_exponents(c, word, i0)?;
    walk_path(c, &path, order).map(|(report, _)| report)
}

/// Like [`run_walk`] but also returns the state after every nonzero step
/// (index 0 is the initial state).
pub fn walk_path(
    c: &CartanData,
    path: &PathExponents,
    order: usize,
) -> Result<(WalkReport, Vec<WalkState>)> {
    let max_m = path.exponents.iter().copied().max().unwrap_or(0).max(0) as usize;
    if order < max_m + 2 {
        return Err(Error::OrderTooSmall {
            order,
            needed: max_m + 2,
        });
    }
    let mut state = init_walk(c, path.fundamental, order)?;
    let mut states = vec![state.clone()];
    let mut records = Vec::new();
    for (j, node, m) in path.steps() {
        if m < 0 {
            return Err(Error::Invariant(format!("negative exponent at step {j}")));
        }
        let m = m as usize;
        if m == 0 {
            continue;
        }
        let (poly, sums) = extract_step_poly(&state, node, m)?;
        let log_eigenvalues: Vec<ParamPoly> = (0..order)
            .map(|k| state.log_eigenvalue(node, k).clone())
            .collect();
        let h_eigenvalues: Vec<ParamPoly> =
            (0..order).map(|k| state.h_eigenvalue(node, k)).collect();
        state = apply_step(&state, node, m, &sums)?;
        let d = c.symmetrizer(node);
        let expected = lowest_vector_series(&sums, d, order)?;
        let crosscheck = series_eq(state.log_series(node), &expected) && state.weight_consistent();
        if !crosscheck {
            return Err(Error::Invariant(format!(
                "lowest-vector crosscheck failed after step {j} (node {node}, m = {m}): \
                 got {:?}, expected {:?}",
                state
                    .log_series(node)
                    .coeffs()
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>(),
                expected
                    .coeffs()
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
            )));
        }
        let roots = roots_affine_in_param(&poly).ok();
        records.push(StepRecord {
            index: j,
            node,
            exponent: m,
            rescale: d,
            polynomial: poly,
            roots,
            power_sums: sums,
            log_eigenvalues,
            h_eigenvalues,
            crosscheck,
        });
        states.push(state.clone());
    }
    let report = WalkReport {
        fundamental: path.fundamental,
        word: path.word.clone(),
        exponents: path.exponents.clone(),
        order,
        records,
        final_weight: state.weight.clone(),
    };
    Ok((report, states))
}

fn ser_display<S: serde::Serializer, T: std::fmt::Display>(
    v: &T,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn ser_polys<S: serde::Serializer>(v: &[ParamPoly], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

fn ser_roots<S: serde::Serializer>(
    v: &Option<Vec<AffineRoot>>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(r) => s.collect_seq(r.iter().map(ToString::to_string)),
        None => s.serialize_none(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rational;
    use crate::root_system::{a1, g2};

    fn affine(slope: Rational, intercept: Rational) -> ParamPoly {
        ParamPoly::affine(slope, intercept)
    }

    fn g2_word() -> ReducedWord {
        ReducedWord(vec![1, 2, 1, 2, 1, 2])
    }

    #[test]
    fn init_extracts_fundamental_root() {
        let c = g2();
        let s = init_walk(&c, 2, 8).unwrap();
        let (poly, _) = extract_step_poly(&s, 2, 1).unwrap();
        assert_eq!(poly, UniPoly::linear(ParamPoly::param()));
        assert!(s.log_series(1).is_zero());

        let s = init_walk(&c, 1, 8).unwrap();
        let (poly, _) = extract_step_poly(&s, 1, 1).unwrap();
        assert_eq!(poly, UniPoly::linear(affine(rat(1, 3), int(0))));
        assert!(s.log_series(2).is_zero());
    }

    #[test]
    fn second_step_of_short_walk() {
        let c = g2();
        let s = init_walk(&c, 2, 8).unwrap();
        let (_, p) = extract_step_poly(&s, 2, 1).unwrap();
        let s = apply_step(&s, 2, 1, &p).unwrap();
        let (poly, _) = extract_step_poly(&s, 1, 1).unwrap();
        assert_eq!(poly, UniPoly::linear(affine(rat(1, 3), rat(1, 2))));
    }

    #[test]
    fn zero_degree_extraction_and_step() {
        let c = g2();
        let s = init_walk(&c, 1, 8).unwrap();
        let (poly, p) = extract_step_poly(&s, 2, 0).unwrap();
        assert_eq!(poly, UniPoly::one());
        assert!((0..=8).all(|k| p.get(k).is_zero()));
        let t = apply_step(&s, 2, 0, &p).unwrap();
        assert_eq!(t.log_series(1), s.log_series(1));
        assert_eq!(t.log_series(2), s.log_series(2));
    }

    #[test]
    fn degree_mismatch_is_an_invariant_error() {
        let s = init_walk(&g2(), 1, 8).unwrap();
        assert!(matches!(
            extract_step_poly(&s, 1, 2),
            Err(Error::Invariant(_))
        ));
        assert!(matches!(
            extract_step_poly(&s, 1, 8),
            Err(Error::OrderTooSmall { .. })
        ));
    }

    #[test]
    fn long_root_anchor_totals() {
        let c = g2();
        let s = init_walk(&c, 1, 8).unwrap();
        let (_, p) = extract_step_poly(&s, 1, 1).unwrap();
        let s = apply_step(&s, 1, 1, &p).unwrap();
        let (_, p) = extract_step_poly(&s, 2, 3).unwrap();
        let s = apply_step(&s, 2, 3, &p).unwrap();
        assert_eq!(s.log_eigenvalue(1, 1), &affine(int(6), int(0)));
        assert_eq!(
            s.log_eigenvalue(1, 2),
            &ParamPoly::new(vec![int(6), int(0), int(6)])
        );
        // h̃_{1,1} = h_{1,1} / 9
        let rescaled = s.h_series(1).rescale(3).unwrap();
        assert_eq!(rescaled.coeff(2), &affine(rat(2, 3), int(2)));
    }

    #[test]
    fn a1_walk() {
        let r = run_walk(&a1(), &ReducedWord(vec![1]), 1, 8).unwrap();
        assert_eq!(r.records.len(), 1);
        assert_eq!(r.records[0].polynomial, UniPoly::linear(ParamPoly::param()));
        assert_eq!(r.final_weight, vec![-1]);
    }

    #[test]
    fn order_too_small() {
        assert!(matches!(
            run_walk(&g2(), &g2_word(), 1, 4),
            Err(Error::OrderTooSmall {
                order: 4,
                needed: 5
            })
        ));
        assert!(run_walk(&g2(), &g2_word(), 1, 5).is_ok());
    }

    #[test]
    fn full_walks_cross_check() {
        for i in 1..=2 {
            let r = run_walk(&g2(), &g2_word(), i, 8).unwrap();
            assert_eq!(r.records.len(), 5);
            assert!(r.crosschecks_passed());
        }
    }
}

//! Root sets, cyclicity conditions for ordered tensor products of fundamental
//! modules, and the ordering that realizes a local Weyl module.
//!
//! For an earlier factor at node `b` and a later factor at node `c`, `T(b, c)`
//! collects the rescaled roots `a/d_c + β` of every node-`c` step of the
//! ω_b walk. A later spectral parameter `a_n` is forbidden when
//! `a_n/d_c - (a_m/d_c + β) = 1`, i.e. when `a_n - a_m = d_c (1 + β)`;
//! `S(b, c)` is the set of those differences.
//!
//! The conditions are sufficient only: a failed check means "not certified".

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{int, AffineRoot, GaussianRational, Rational};
use crate::root_system::{weyl_dim, CartanData, ReducedWord};
use crate::transport::{run_walk, WalkReport};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TSet {
    /// Node of the earlier factor.
    pub earlier: usize,
    /// Node acting on the extremal vector.
    pub acting: usize,
    #[serde(serialize_with = "ser_display_seq")]
    pub roots: Vec<AffineRoot>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SSet {
    pub earlier: usize,
    pub later: usize,
    #[serde(serialize_with = "ser_display_seq")]
    pub differences: Vec<Rational>,
}

impl SSet {
    pub fn contains(&self, x: &Rational) -> bool {
        self.differences.binary_search(x).is_ok()
    }
}

/// Unions the node-`c` step roots of each walk.
pub fn compute_t_sets(c: &CartanData, reports: &[WalkReport]) -> Result<Vec<TSet>> {
    let mut out = Vec::new();
    for report in reports {
        for node in 1..=c.rank() {
            let d = c.symmetrizer(node);
            let slope = Rational::new(1.into(), d.into());
            let mut roots = Vec::new();
            for rec in report.records.iter().filter(|r| r.node == node) {
                let rs = rec.roots.as_ref().ok_or_else(|| {
                    Error::SymbolicRootsUnavailable(format!(
                        "step {} of the walk for ω_{}: {}",
                        rec.index, report.fundamental, rec.polynomial
                    ))
                })?;
                for r in rs {
                    if r.slope != slope {
                        return Err(Error::SlopeMismatch {
                            node,
                            root: r.to_string(),
                            d,
                        });
                    }
                    roots.push(r.clone());
                }
            }
            roots.sort();
            roots.dedup();
            out.push(TSet {
                earlier: report.fundamental,
                acting: node,
                roots,
            });
        }
    }
    Ok(out)
}

/// `S(b, c) = { d_c (1 + β) : a/d_c + β ∈ T(b, c) }`.
pub fn compute_s_sets(c: &CartanData, t: &[TSet]) -> Result<Vec<SSet>> {
    t.iter()
        .map(|ts| {
            let d = int(c.symmetrizer(ts.acting));
            let slope = Rational::one() / &d;
            let mut differences = Vec::with_capacity(ts.roots.len());
            for r in &ts.roots {
                if r.slope != slope {
                    return Err(Error::SlopeMismatch {
                        node: ts.acting,
                        root: r.to_string(),
                        d: c.symmetrizer(ts.acting),
                    });
                }
                differences.push(&d * (int(1) + &r.intercept));
            }
            differences.sort();
            differences.dedup();
            Ok(SSet {
                earlier: ts.earlier,
                later: ts.acting,
                differences,
            })
        })
        .collect()
}

/// Walks every fundamental weight and derives the T and S sets.
#[derive(Debug, Clone, Serialize)]
pub struct CyclicityTables {
    pub rank: usize,
    pub word: ReducedWord,
    pub walks: Vec<WalkReport>,
    pub t_sets: Vec<TSet>,
    pub s_sets: Vec<SSet>,
}

impl CyclicityTables {
    pub fn compute(c: &CartanData, word: &ReducedWord, order: usize) -> Result<Self> {
        let walks = (1..=c.rank())
            .map(|i| run_walk(c, word, i, order))
            .collect::<Result<Vec<_>>>()?;
        let t_sets = compute_t_sets(c, &walks)?;
        let s_sets = compute_s_sets(c, &t_sets)?;
        Ok(Self {
            rank: c.rank(),
            word: word.clone(),
            walks,
            t_sets,
            s_sets,
        })
    }

    pub fn t(&self, earlier: usize, acting: usize) -> Option<&TSet> {
        self.t_sets
            .iter()
            .find(|t| t.earlier == earlier && t.acting == acting)
    }

    pub fn s(&self, earlier: usize, later: usize) -> Option<&SSet> {
        self.s_sets
            .iter()
            .find(|s| s.earlier == earlier && s.later == later)
    }
}

/// `V_{param}(ω_node)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct TensorFactor {
    pub node: usize,
    #[serde(serialize_with = "ser_display")]
    pub param: GaussianRational,
}

impl TensorFactor {
    pub fn new(node: usize, param: GaussianRational) -> Self {
        Self { node, param }
    }
}

impl fmt::Display for TensorFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.node, self.param)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CyclicityMode {
    /// Ordered pairs `i < j`.
    HighestWeight,
    /// All pairs `i != j`.
    Irreducible,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Certified,
    NotCertified,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// 1-based factor positions.
    pub i: usize,
    pub j: usize,
    #[serde(serialize_with = "ser_display")]
    pub difference: GaussianRational,
    pub earlier_node: usize,
    pub later_node: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CyclicityReport {
    pub mode: CyclicityMode,
    pub verdict: Verdict,
    pub violations: Vec<Violation>,
}

impl CyclicityReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Certified
    }
}

/// Tests `a_j - a_i ∉ S(b_i, b_j)` over the pairs selected by `mode`.
pub fn check_cyclicity(
    factors: &[TensorFactor],
    s_sets: &[SSet],
    rank: usize,
    mode: CyclicityMode,
) -> Result<CyclicityReport> {
    for f in factors {
        if f.node == 0 || f.node > rank {
            return Err(Error::UnknownNode { node: f.node, rank });
        }
    }
    let lookup = |b: usize, c: usize| s_sets.iter().find(|s| s.earlier == b && s.later == c);
    let mut violations = Vec::new();
    for (i, fi) in factors.iter().enumerate() {
        for (j, fj) in factors.iter().enumerate() {
            let selected = match mode {
                CyclicityMode::HighestWeight => i < j,
                CyclicityMode::Irreducible => i != j,
            };
            if !selected {
                continue;
            }
            let diff = &fj.param - &fi.param;
            if !diff.is_real() {
                continue;
            }
            if lookup(fi.node, fj.node).is_some_and(|s| s.contains(&diff.re)) {
                violations.push(Violation {
                    i: i + 1,
                    j: j + 1,
                    difference: diff,
                    earlier_node: fi.node,
                    later_node: fj.node,
                });
            }
        }
    }
    let verdict = if violations.is_empty() {
        Verdict::Certified
    } else {
        Verdict::NotCertified
    };
    Ok(CyclicityReport {
        mode,
        verdict,
        violations,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeylModuleSpec {
    /// Roots of `π_i(u)` per node, as given.
    #[serde(serialize_with = "ser_nested_display")]
    pub roots: Vec<Vec<GaussianRational>>,
    pub factors: Vec<TensorFactor>,
    /// `λ = sum m_i ω_i` with `m_i = deg π_i`.
    pub lambda: Vec<usize>,
    pub report: CyclicityReport,
}

/// Orders all roots by non-increasing real part; ties by imaginary part
/// (descending), then node, then input position.
pub fn build_ordered_product(
    roots: &[Vec<GaussianRational>],
    s_sets: &[SSet],
) -> Result<WeylModuleSpec> {
    let mut tagged: Vec<(usize, usize, &GaussianRational)> = roots
        .iter()
        .enumerate()
        .flat_map(|(n, rs)| rs.iter().enumerate().map(move |(k, r)| (n + 1, k, r)))
        .collect();
    tagged.sort_by(|x, y| {
        y.2.re
            .cmp(&x.2.re)
            .then_with(|| y.2.im.cmp(&x.2.im))
            .then_with(|| x.0.cmp(&y.0))
            .then_with(|| x.1.cmp(&y.1))
    });
    let factors: Vec<TensorFactor> = tagged
        .into_iter()
        .map(|(node, _, r)| TensorFactor::new(node, r.clone()))
        .collect();
    let report = check_cyclicity(&factors, s_sets, roots.len(), CyclicityMode::HighestWeight)?;
    Ok(WeylModuleSpec {
        roots: roots.to_vec(),
        factors,
        lambda: roots.iter().map(Vec::len).collect(),
        report,
    })
}

/// Non-increasing real part along the product.
pub fn is_real_part_ordered(factors: &[TensorFactor]) -> bool {
    factors
        .windows(2)
        .all(|w| w[0].param.re.cmp(&w[1].param.re) != Ordering::Less)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionReport {
    pub lambda: Vec<usize>,
    #[serde(serialize_with = "ser_opt_display_seq")]
    pub fundamental_dims: Option<Vec<BigInt>>,
    #[serde(serialize_with = "ser_opt_display")]
    pub bound: Option<BigInt>,
    /// Dimensions of the fundamental modules of the underlying simple Lie algebra.
    #[serde(serialize_with = "ser_display_seq")]
    pub reference_dims: Vec<BigInt>,
}

/// `prod D_i^{m_i}`.
pub fn dimension_bound(lambda: &[usize], fund_dims: &[BigInt]) -> BigInt {
    lambda
        .iter()
        .zip(fund_dims)
        .fold(BigInt::one(), |acc, (&m, d)| {
            acc * num_traits::pow(d.clone(), m)
        })
}

pub fn dimension_report(
    c: &CartanData,
    lambda: &[usize],
    fund_dims: Option<&[BigInt]>,
) -> Result<DimensionReport> {
    if lambda.len() != c.rank() {
        return Err(Error::Parse(format!(
            "λ needs {} coordinates, got {}",
            c.rank(),
            lambda.len()
        )));
    }
    if let Some(d) = fund_dims {
        if d.len() != c.rank() || d.iter().any(|x| x <= &BigInt::from(0)) {
            return Err(Error::Parse(format!(
                "need {} positive fundamental dimensions",
                c.rank()
            )));
        }
    }
    let reference_dims = (1..=c.rank())
        .map(|i| weyl_dim(c, &c.fundamental_weight(i)))
        .collect::<Result<Vec<_>>>()?;
    Ok(DimensionReport {
        lambda: lambda.to_vec(),
        fundamental_dims: fund_dims.map(<[BigInt]>::to_vec),
        bound: fund_dims.map(|d| dimension_bound(lambda, d)),
        reference_dims,
    })
}

/// Exponents of `q` under `s -> q^{2s}`.
pub fn q_exponents(s: &SSet) -> Vec<Rational> {
    s.differences.iter().map(|x| x * int(2)).collect()
}

fn ser_display<S: serde::Serializer, T: fmt::Display>(
    v: &T,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn ser_display_seq<S: serde::Serializer, T: fmt::Display>(
    v: &[T],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

fn ser_nested_display<S: serde::Serializer, T: fmt::Display>(
    v: &[Vec<T>],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(
        v.iter()
            .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>()),
    )
}

fn ser_opt_display<S: serde::Serializer, T: fmt::Display>(
    v: &Option<T>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(x) => s.serialize_str(&x.to_string()),
        None => s.serialize_none(),
    }
}

fn ser_opt_display_seq<S: serde::Serializer, T: fmt::Display>(
    v: &Option<Vec<T>>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(x) => s.collect_seq(x.iter().map(ToString::to_string)),
        None => s.serialize_none(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::root_system::{a1, g2};

    fn g2_tables() -> CyclicityTables {
        CyclicityTables::compute(&g2(), &ReducedWord(vec![1, 2, 1, 2, 1, 2]), 8).unwrap()
    }

    fn real(n: i64, d: i64) -> GaussianRational {
        GaussianRational::real(rat(n, d))
    }

    fn f(node: usize, n: i64, d: i64) -> TensorFactor {
        TensorFactor::new(node, real(n, d))
    }

    #[test]
    fn a1_sets() {
        let t = CyclicityTables::compute(&a1(), &ReducedWord(vec![1]), 8).unwrap();
        assert_eq!(
            t.t(1, 1).unwrap().roots,
            vec![AffineRoot::new(int(1), int(0))]
        );
        assert_eq!(t.s(1, 1).unwrap().differences, vec![int(1)]);
    }

    #[test]
    fn g2_mixed_sets() {
        let t = g2_tables();
        let t12: Vec<String> = t
            .t(1, 2)
            .unwrap()
            .roots
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(t12, ["a - 1/2", "a + 1/2", "a + 3/2", "a + 5/2", "a + 7/2"]);
        let t21: Vec<String> = t
            .t(2, 1)
            .unwrap()
            .roots
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(t21, ["1/3*a + 1/2", "1/3*a + 7/6"]);
        assert_eq!(t.s(2, 1).unwrap().differences, vec![rat(9, 2), rat(13, 2)]);
    }

    #[test]
    fn pair_examples() {
        let t = g2_tables();
        let hw = CyclicityMode::HighestWeight;
        let r = check_cyclicity(&[f(1, 0, 1), f(1, 3, 1)], &t.s_sets, 2, hw).unwrap();
        assert_eq!(r.verdict, Verdict::NotCertified);
        assert_eq!((r.violations[0].i, r.violations[0].j), (1, 2));
        assert_eq!(r.violations[0].difference, real(3, 1));

        let r = check_cyclicity(&[f(1, 0, 1), f(1, 7, 2)], &t.s_sets, 2, hw).unwrap();
        assert!(r.passed());

        let rev = [f(1, 3, 1), f(1, 0, 1)];
        assert!(check_cyclicity(&rev, &t.s_sets, 2, hw).unwrap().passed());
        let irr = check_cyclicity(&rev, &t.s_sets, 2, CyclicityMode::Irreducible).unwrap();
        assert!(!irr.passed());
        assert_eq!((irr.violations[0].i, irr.violations[0].j), (2, 1));
    }

    #[test]
    fn imaginary_differences_never_match() {
        let t = g2_tables();
        let fs = [
            f(1, 0, 1),
            TensorFactor::new(1, GaussianRational::new(int(3), int(1))),
        ];
        assert!(
            check_cyclicity(&fs, &t.s_sets, 2, CyclicityMode::Irreducible)
                .unwrap()
                .passed()
        );
    }

    #[test]
    fn unknown_node() {
        let t = g2_tables();
        assert!(matches!(
            check_cyclicity(&[f(3, 0, 1)], &t.s_sets, 2, CyclicityMode::HighestWeight),
            Err(Error::UnknownNode { node: 3, rank: 2 })
        ));
    }

    #[test]
    fn ordered_product_examples() {
        let t = g2_tables();
        let spec =
            build_ordered_product(&[vec![real(0, 1), real(4, 1)], vec![real(2, 1)]], &t.s_sets)
                .unwrap();
        assert_eq!(spec.factors, vec![f(1, 4, 1), f(2, 2, 1), f(1, 0, 1)]);
        assert!(spec.report.passed());
        assert_eq!(spec.lambda, vec![2, 1]);

        let empty = build_ordered_product(&[vec![], vec![]], &t.s_sets).unwrap();
        assert!(empty.factors.is_empty() && empty.report.passed());

        let tie = build_ordered_product(&[vec![real(2, 1)], vec![real(2, 1)]], &t.s_sets).unwrap();
        assert_eq!(tie.factors, vec![f(1, 2, 1), f(2, 2, 1)]);
    }

    #[test]
    fn dimensions() {
        let c = g2();
        assert_eq!(
            dimension_bound(&[0, 0], &[BigInt::from(15), BigInt::from(7)]),
            BigInt::from(1)
        );
        assert_eq!(
            dimension_bound(&[2, 0], &[BigInt::from(15), BigInt::from(7)]),
            BigInt::from(225)
        );
        let r = dimension_report(&c, &[1, 1], None).unwrap();
        assert_eq!(r.reference_dims, vec![BigInt::from(14), BigInt::from(7)]);
        assert_eq!(r.bound, None);
        assert!(dimension_report(&c, &[1], None).is_err());
        assert!(dimension_report(&c, &[1, 1], Some(&[BigInt::from(0), BigInt::from(7)])).is_err());
    }
}

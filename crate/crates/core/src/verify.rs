//! Invariant suites behind `yangian verify`.

use std::thread;

use serde::Serialize;

use crate::cyclicity::{q_exponents, CyclicityTables};
use crate::error::Result;
use crate::exact::{series_eq, ParamPoly, Rational};
use crate::reference;
use crate::root_system::{
    a1, path_exponents, weyl_dim, weyl_longest, CartanData, ReducedWord, WeylGroup,
};
use crate::transport::{extract_from_series, walk_path};
use crate::ysl2::{run_sl2_suite, sample_params, EvalModule};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Sl2,
    Walk,
    Tables,
    Roots,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Roots, Suite::Sl2, Suite::Walk, Suite::Tables];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Sl2 => "sl2",
            Suite::Walk => "walk",
            Suite::Tables => "tables",
            Suite::Roots => "roots",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// What the suites run against.
#[derive(Debug, Clone)]
pub struct Target {
    pub cartan: CartanData,
    pub word: ReducedWord,
    pub order: usize,
    /// Compare against the published G2 tables as well.
    pub g2_reference: bool,
}

struct Sink {
    suite: &'static str,
    checks: Vec<Check>,
}

impl Sink {
    fn new(suite: Suite) -> Self {
        Self {
            suite: suite.name(),
            checks: Vec::new(),
        }
    }

    fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            suite: self.suite,
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    fn result<T>(&mut self, name: impl Into<String>, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.push(name, false, e.to_string());
                None
            }
        }
    }
}

/// Runs the selected suites concurrently; results come back in suite order.
pub fn run_suites(target: &Target, suites: &[Suite]) -> Vec<Check> {
    thread::scope(|scope| {
        let handles: Vec<_> = suites
            .iter()
            .map(|&s| scope.spawn(move || run_suite(target, s)))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("suite thread panicked"))
            .collect()
    })
}

pub fn run_suite(target: &Target, suite: Suite) -> Vec<Check> {
    let mut sink = Sink::new(suite);
    match suite {
        Suite::Sl2 => sl2_suite(&mut sink),
        Suite::Walk => walk_suite(target, &mut sink),
        Suite::Tables => tables_suite(target, &mut sink),
        Suite::Roots => roots_suite(target, &mut sink),
    }
    sink.checks
}

fn sl2_suite(sink: &mut Sink) {
    let Some(r) = sink.result("sl2 oracles", run_sl2_suite(4, &sample_params(), 3, 4, 8)) else {
        return;
    };
    sink.push(
        "defining relations on V_m(a), m <= 4, levels <= 3",
        r.relation_failures.is_empty(),
        format!(
            "{} identities checked, {} modules failing",
            r.relation_checks,
            r.relation_failures.len()
        ),
    );
    sink.push(
        "symmetrized insertions equal power sums, m <= 4, k <= 4",
        r.insertion_failures.is_empty(),
        format!(
            "{} checks, {} failures",
            r.insertion_checks,
            r.insertion_failures.len()
        ),
    );
    sink.push(
        "extremal h(u) series, m <= 4, order 8",
        r.extremal_failures.is_empty(),
        format!(
            "{} checks, {} failures",
            r.extremal_checks,
            r.extremal_failures.len()
        ),
    );
}

fn walk_suite(target: &Target, sink: &mut Sink) {
    let c = &target.cartan;
    let Some((_, w0, _)) = sink.result("longest element", weyl_longest(c)) else {
        return;
    };
    for i in 1..=c.rank() {
        let label = format!("ω_{i}");
        let Some(path) = sink.result(format!("{label}: path"), path_exponents(c, &target.word, i))
        else {
            continue;
        };
        let Some((report, states)) =
            sink.result(format!("{label}: walk"), walk_path(c, &path, target.order))
        else {
            continue;
        };
        sink.push(
            format!("{label}: lowest-vector crosscheck after every step"),
            report.crosschecks_passed(),
            format!("{} steps", report.records.len()),
        );
        sink.push(
            format!("{label}: weight bookkeeping"),
            states.iter().all(|s| s.weight_consistent()),
            format!("{} states", states.len()),
        );
        let lowest = w0.apply(&c.fundamental_weight(i));
        sink.push(
            format!("{label}: path ends at w0(ω_{i})"),
            report.final_weight == lowest,
            format!("{:?}", report.final_weight),
        );
        let mut round_trip = true;
        for (rec, state) in report.records.iter().zip(&states[1..]) {
            let flipped = -state.log_series(rec.node);
            match extract_from_series(&flipped, rec.rescale, rec.exponent) {
                Ok((poly, _)) => round_trip &= poly == rec.polynomial.shift(&ParamPoly::from(-1)),
                Err(_) => round_trip = false,
            }
        }
        sink.push(
            format!("{label}: re-extraction after each step shifts roots by 1"),
            round_trip,
            "",
        );
        if target.g2_reference {
            let expected = reference::g2_table(i);
            let got: Vec<_> = report
                .records
                .iter()
                .map(|r| (r.node, r.exponent, r.roots.clone().unwrap_or_default()))
                .collect();
            sink.push(
                format!("{label}: G2 table"),
                got == expected,
                report
                    .records
                    .iter()
                    .filter_map(|r| r.factored())
                    .collect::<Vec<_>>()
                    .join("; "),
            );
        }
    }
    if target.g2_reference {
        g2_anchors(target, sink);
    }
    a1_against_matrices(sink);
}

fn g2_anchors(target: &Target, sink: &mut Sink) {
    let c = &target.cartan;
    let Some(path) = sink.result("ω_1 path", path_exponents(c, &target.word, 1)) else {
        return;
    };
    let Some((report, _)) = sink.result("ω_1 walk", walk_path(c, &path, target.order)) else {
        return;
    };
    let a = ParamPoly::param;
    let six_a = a().scale(&Rational::from_integer(6.into()));
    let long = &report.records[2];
    sink.push(
        "H_{1,1} = 6a before the second long-root step",
        long.log_eigenvalues[1] == six_a,
        long.log_eigenvalues[1].to_string(),
    );
    let quad = &(&six_a * &a()) + &ParamPoly::from(6);
    sink.push(
        "H_{1,2} = 6a^2 + 6 before the second long-root step",
        long.log_eigenvalues[2] == quad,
        long.log_eigenvalues[2].to_string(),
    );
    let short = &report.records[3];
    let expect = &a().scale(&Rational::from_integer(3.into()))
        + &ParamPoly::constant(crate::exact::rat(21, 2));
    sink.push(
        "h_{2,1} = 3(a + 7/2) before the second short-root step",
        short.h_eigenvalues[1] == expect,
        short.h_eigenvalues[1].to_string(),
    );
}

/// The A1 walk specialized at rational `a` against the matrices of `V_1(a)`.
fn a1_against_matrices(sink: &mut Sink) {
    let c = a1();
    let word = ReducedWord(vec![1]);
    let Some(path) = sink.result("A1 path", path_exponents(&c, &word, 1)) else {
        return;
    };
    let Some((_, states)) = sink.result("A1 walk", walk_path(&c, &path, 8)) else {
        return;
    };
    let mut ok = true;
    for a in sample_params() {
        let module = EvalModule::new(1, a.clone());
        let top = states[0].h_series(1).specialize(&a);
        let bottom = states[1].h_series(1).specialize(&a);
        ok &= series_eq(&top, &module.h_series(1, 8)) && series_eq(&bottom, &module.h_series(0, 8));
    }
    sink.push(
        "A1 walk agrees with V_1(a) matrices",
        ok,
        "a ∈ {0, 1, -2, 5/3}",
    );
}

fn tables_suite(target: &Target, sink: &mut Sink) {
    let c = &target.cartan;
    let Some(tables) = sink.result(
        "T and S sets",
        CyclicityTables::compute(c, &target.word, target.order),
    ) else {
        return;
    };
    let zero = Rational::from_integer(0.into());
    sink.push(
        "S sets are positive rationals",
        tables
            .s_sets
            .iter()
            .all(|s| s.differences.iter().all(|x| x > &zero)),
        "",
    );
    if !target.g2_reference {
        return;
    }
    for b in 1..=2 {
        for k in 1..=2 {
            let t = tables.t(b, k).map(|t| t.roots.clone()).unwrap_or_default();
            sink.push(
                format!("T({b},{k})"),
                t == reference::g2_t_set(b, k),
                join(&t),
            );
            let s = tables
                .s(b, k)
                .map(|s| s.differences.clone())
                .unwrap_or_default();
            sink.push(
                format!("S({b},{k})"),
                s == reference::g2_s_set(b, k),
                join(&s),
            );
        }
        if let Some(s) = tables.s(b, b) {
            let q = q_exponents(s);
            sink.push(
                format!("S({b},{b}) under s -> q^(2s)"),
                q == reference::g2_quantum_loop_diagonal(b),
                join(&q),
            );
        }
    }
}

fn roots_suite(target: &Target, sink: &mut Sink) {
    let c = &target.cartan;
    let Some(group) = sink.result("Weyl group", WeylGroup::enumerate(c)) else {
        return;
    };
    let (w0, word0) = group.longest().clone();
    sink.push(
        "simple reflections are involutions",
        (1..=c.rank()).all(|i| {
            let s = c.simple_reflection(i);
            s.compose(&s).is_identity()
        }),
        "",
    );
    sink.push(
        "w0 is antidominant on fundamental weights",
        (1..=c.rank()).all(|i| w0.apply(&c.fundamental_weight(i)).iter().all(|&x| x <= 0)),
        format!("order {}, word {:?}", group.order(), word0.0),
    );
    let words = group.reduced_words(c, &w0);
    let mut nonneg = true;
    let mut drop_ok = true;
    for word in &words {
        for i in 1..=c.rank() {
            match path_exponents(c, word, i) {
                Ok(p) => {
                    nonneg &= p.exponents.iter().all(|&m| m >= 0);
                    let omega = c.fundamental_weight(i);
                    let mut total = vec![0i64; c.rank()];
                    for (m, &r) in p.exponents.iter().zip(&word.0) {
                        for (t, a) in total.iter_mut().zip(c.simple_root(r)) {
                            *t += m * a;
                        }
                    }
                    let lowest = w0.apply(&omega);
                    drop_ok &= total
                        .iter()
                        .zip(omega.iter().zip(&lowest))
                        .all(|(t, (o, l))| *t == o - l);
                }
                Err(_) => {
                    nonneg = false;
                    drop_ok = false;
                }
            }
        }
    }
    sink.push(
        "exponents are non-negative for every reduced word of w0",
        nonneg,
        format!("{} reduced words", words.len()),
    );
    sink.push("sum of m_j α_(r_j) equals ω_i - w0(ω_i)", drop_ok, "");
    if target.g2_reference {
        sink.push(
            "|W(G2)| = 12, word length 6",
            group.order() == 12 && word0.len() == 6,
            "",
        );
        for (i, expect) in reference::G2_EXPONENTS.iter().enumerate() {
            let got = path_exponents(c, &target.word, i + 1).map(|p| p.exponents);
            let detail = match &got {
                Ok(e) => format!("{e:?}"),
                Err(e) => e.to_string(),
            };
            sink.push(
                format!("exponents for ω_{}", i + 1),
                got.as_deref() == Ok(expect.as_slice()),
                detail,
            );
        }
        let dims: Vec<String> = (1..=2)
            .map(|i| {
                weyl_dim(c, &c.fundamental_weight(i))
                    .map(|d| d.to_string())
                    .unwrap_or_default()
            })
            .collect();
        sink.push(
            "fundamental dimensions 14 and 7",
            dims == ["14", "7"],
            dims.join(", "),
        );
    }
}

fn join<T: ToString>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::g2;

    #[test]
    fn g2_suites_pass() {
        let target = Target {
            cartan: g2(),
            word: ReducedWord(reference::G2_WORD.to_vec()),
            order: 8,
            g2_reference: true,
        };
        let checks = run_suites(&target, &Suite::ALL);
        let failed: Vec<_> = checks.iter().filter(|c| !c.passed).collect();
        assert!(failed.is_empty(), "{failed:#?}");
        assert!(checks.len() > 25);
    }
}

//! The `yangian` command line: argument parsing, dispatch and output envelopes.

pub mod parse;
mod render;

use std::ffi::OsString;
use std::fs;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use crate::cyclicity::{
    build_ordered_product, check_cyclicity, dimension_report, is_real_part_ordered, q_exponents,
    CyclicityMode, CyclicityTables, Verdict,
};
use crate::error::{Error, Result};
use crate::reference::G2_WORD;
use crate::root_system::{builtin, path_exponents, weyl_longest, CartanData, ReducedWord};
use crate::transport::{factored, run_walk, DEFAULT_ORDER};
use crate::verify::{run_suites, Suite, Target};

use parse::{
    parse_algebra_file, parse_bigints, parse_config, parse_factors, parse_roots, parse_usizes,
    parse_word,
};

pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_CERTIFIED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "yangian",
    version,
    about = "Associated polynomials, cyclicity sets and local Weyl modules for Yangian fundamental representations"
)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Truncation order N of the u^{-1} series.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER)]
    pub order: usize,
    /// g2, a1, a2 or a path to an algebra file.
    #[arg(long, global = true)]
    pub algebra: Option<String>,
    /// Reduced word of w0, e.g. 1,2,1,2,1,2.
    #[arg(long, global = true)]
    pub word: Option<String>,
    /// TOML file with `fundamental_dims = [..]`.
    #[arg(long, global = true)]
    pub config: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Hw,
    Irr,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    All,
    Sl2,
    Walk,
    Tables,
    Roots,
}

#[derive(Debug, Args)]
pub struct AlgebraArg {
    /// Same as --algebra.
    #[arg(value_name = "ALGEBRA")]
    pub name: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduced word of w0 and the path exponents of each fundamental weight.
    Path {
        #[command(flatten)]
        algebra: AlgebraArg,
        /// Only this fundamental weight.
        #[arg(long)]
        weight: Option<usize>,
    },
    /// Associated polynomials along the extremal path of one fundamental weight.
    Walk {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long)]
        weight: usize,
    },
    /// T and S sets for every pair of nodes.
    Tables {
        #[command(flatten)]
        algebra: AlgebraArg,
    },
    /// Checks an ordered tensor product of fundamental modules.
    Cyclicity {
        #[command(flatten)]
        algebra: AlgebraArg,
        /// Comma-separated node:param tokens, e.g. "1:0,2:-1+2/3i".
        #[arg(long, allow_hyphen_values = true)]
        factors: String,
        #[arg(long, value_enum, default_value_t = ModeArg::Hw)]
        mode: ModeArg,
    },
    /// Orders the roots of the given polynomials into a cyclic tensor product.
    WeylModule {
        #[command(flatten)]
        algebra: AlgebraArg,
        /// Roots of π_1(u), comma-separated.
        #[arg(long, allow_hyphen_values = true)]
        pi1: Option<String>,
        /// Roots of π_2(u), comma-separated.
        #[arg(long, allow_hyphen_values = true)]
        pi2: Option<String>,
        /// Roots of π_node(u) as node=roots; repeatable, for any rank.
        #[arg(long, allow_hyphen_values = true)]
        pi: Vec<String>,
        /// Dimensions of the fundamental Yangian modules, one per node.
        #[arg(long)]
        fund_dims: Option<String>,
    },
    /// Dimension bound for the local Weyl module of weight λ.
    Dim {
        #[command(flatten)]
        algebra: AlgebraArg,
        /// Coordinates of λ in fundamental weights.
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        fund_dims: Option<String>,
    },
    /// Runs the invariant suites.
    Verify {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Path { .. } => "path",
            Command::Walk { .. } => "walk",
            Command::Tables { .. } => "tables",
            Command::Cyclicity { .. } => "cyclicity",
            Command::WeylModule { .. } => "weyl-module",
            Command::Dim { .. } => "dim",
            Command::Verify { .. } => "verify",
        }
    }

    fn algebra(&self) -> Option<&str> {
        let a = match self {
            Command::Path { algebra, .. }
            | Command::Walk { algebra, .. }
            | Command::Tables { algebra }
            | Command::Cyclicity { algebra, .. }
            | Command::WeylModule { algebra, .. }
            | Command::Dim { algebra, .. }
            | Command::Verify { algebra, .. } => algebra,
        };
        a.name.as_deref()
    }
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Serialize)]
pub struct OutputEnvelope {
    pub command: String,
    pub algebra: String,
    pub experimental: bool,
    pub inputs: Value,
    pub results: Value,
    pub engine_version: String,
    pub order: usize,
}

/// The algebra a command runs against.
#[derive(Debug, Clone)]
pub struct Setup {
    pub name: String,
    pub cartan: CartanData,
    pub word: ReducedWord,
    /// Built-in G2 with the reference word.
    pub reference_g2: bool,
    pub experimental: bool,
    pub order: usize,
    pub fundamental_dims: Option<Vec<BigInt>>,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match execute(&cli) {
        Ok((envelope, code)) => {
            let stdout = match cli.format {
                Format::Json => {
                    let mut s =
                        serde_json::to_string_pretty(&envelope).expect("envelope serializes");
                    s.push('\n');
                    s
                }
                Format::Text => render::text(&envelope),
            };
            Outcome {
                code,
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => Outcome {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

/// Exit code for an error: 2 for bad input, 3 for internal failures.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_)
        | Error::InvalidCartan(_)
        | Error::WordNotReduced(_)
        | Error::NonDominant(_)
        | Error::UnknownNode { .. }
        | Error::OrderTooSmall { .. } => EXIT_INPUT,
        Error::DegreeMismatch { .. }
        | Error::NotMonic
        | Error::ConstantTerm { .. }
        | Error::ZeroScale
        | Error::SymbolicRootsUnavailable(_)
        | Error::SlopeMismatch { .. }
        | Error::Invariant(_) => EXIT_INTERNAL,
    }
}

/// Resolves `--algebra`, `--word`, `--order` and `--config`.
pub fn setup(cli: &Cli) -> Result<Setup> {
    let name = cli
        .command
        .algebra()
        .or(cli.algebra.as_deref())
        .unwrap_or("g2")
        .to_string();
    let (cartan, file_word, is_builtin) = match builtin(&name) {
        Some(c) => (c, None, true),
        None => {
            let text = fs::read_to_string(&name).map_err(|e| {
                Error::Parse(format!(
                    "`{name}` is neither a built-in algebra nor a readable file: {e}"
                ))
            })?;
            let (c, w) = parse_algebra_file(&text)?;
            (c, w, false)
        }
    };
    let (_, w0, default_word) = weyl_longest(&cartan)?;
    let word = match cli
        .word
        .as_deref()
        .map(parse_word)
        .transpose()?
        .or(file_word)
    {
        Some(w) => {
            if w.element(&cartan) != w0 || w.len() != default_word.len() {
                return Err(Error::WordNotReduced(w.0));
            }
            w
        }
        None => default_word.clone(),
    };
    let reference_g2 = is_builtin && name == "g2" && word.0 == G2_WORD;
    let trivial_a1 = is_builtin && name == "a1";
    let fundamental_dims = match &cli.config {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Error::Parse(format!("cannot read config `{path}`: {e}")))?;
            parse_config(&text)?
                .fundamental_dims
                .map(|v| v.into_iter().map(BigInt::from).collect())
        }
        None => None,
    };
    Ok(Setup {
        name,
        cartan,
        word,
        reference_g2,
        experimental: !(reference_g2 || trivial_a1),
        order: cli.order,
        fundamental_dims,
    })
}

fn execute(cli: &Cli) -> Result<(OutputEnvelope, i32)> {
    let s = setup(cli)?;
    let (inputs, results, code) = match &cli.command {
        Command::Path { weight, .. } => path_cmd(&s, *weight)?,
        Command::Walk { weight, .. } => walk_cmd(&s, *weight)?,
        Command::Tables { .. } => tables_cmd(&s)?,
        Command::Cyclicity { factors, mode, .. } => cyclicity_cmd(&s, factors, *mode)?,
        Command::WeylModule {
            pi1,
            pi2,
            pi,
            fund_dims,
            ..
        } => weyl_module_cmd(&s, pi1.as_deref(), pi2.as_deref(), pi, fund_dims.as_deref())?,
        Command::Dim {
            lambda, fund_dims, ..
        } => dim_cmd(&s, lambda, fund_dims.as_deref())?,
        Command::Verify { suite, .. } => verify_cmd(&s, *suite)?,
    };
    let mut inputs = inputs;
    if let Value::Object(map) = &mut inputs {
        map.insert("word".into(), json!(s.word.0));
    }
    Ok((
        OutputEnvelope {
            command: cli.command.name().into(),
            algebra: s.name.clone(),
            experimental: s.experimental,
            inputs,
            results,
            engine_version: ENGINE_VERSION.into(),
            order: s.order,
        },
        code,
    ))
}

type CmdOut = (Value, Value, i32);

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("results serialize")
}

fn path_cmd(s: &Setup, weight: Option<usize>) -> Result<CmdOut> {
    let weights: Vec<usize> = match weight {
        Some(i) => {
            s.cartan.check_node(i)?;
            vec![i]
        }
        None => (1..=s.cartan.rank()).collect(),
    };
    let (order, _, _) = weyl_longest(&s.cartan)?;
    let mut paths = Vec::new();
    for &i in &weights {
        let p = path_exponents(&s.cartan, &s.word, i)?;
        let steps: Vec<Value> = p
            .steps()
            .map(|(j, node, m)| json!({ "index": j, "node": node, "exponent": m }))
            .collect();
        paths.push(json!({ "fundamental": i, "exponents": p.exponents, "steps": steps }));
    }
    let results = json!({
        "weyl_group_order": order,
        "longest_length": s.word.len(),
        "paths": paths,
    });
    Ok((json!({ "weight": weight }), results, EXIT_OK))
}

#[derive(Serialize)]
struct WalkRow {
    index: usize,
    node: usize,
    exponent: usize,
    rescale: i64,
    variable: String,
    polynomial: String,
    factored: Option<String>,
    roots: Option<Vec<String>>,
    crosscheck: bool,
}

fn walk_cmd(s: &Setup, weight: usize) -> Result<CmdOut> {
    s.cartan.check_node(weight)?;
    let report = run_walk(&s.cartan, &s.word, weight, s.order)?;
    let rows: Vec<WalkRow> = report
        .records
        .iter()
        .map(|r| WalkRow {
            index: r.index,
            node: r.node,
            exponent: r.exponent,
            rescale: r.rescale,
            variable: rescaled_variable(r.rescale),
            polynomial: r.polynomial.to_string(),
            factored: r.roots.as_ref().map(|roots| factored(roots, "u")),
            roots: r
                .roots
                .as_ref()
                .map(|v| v.iter().map(ToString::to_string).collect()),
            crosscheck: r.crosscheck,
        })
        .collect();
    let results = json!({
        "fundamental": weight,
        "exponents": report.exponents,
        "rows": to_value(&rows),
        "final_weight": report.final_weight,
        "crosschecks_passed": report.crosschecks_passed(),
    });
    Ok((json!({ "weight": weight }), results, EXIT_OK))
}

fn rescaled_variable(d: i64) -> String {
    if d == 1 {
        "u".into()
    } else {
        format!("u/{d}")
    }
}

fn tables_cmd(s: &Setup) -> Result<CmdOut> {
    let tables = CyclicityTables::compute(&s.cartan, &s.word, s.order)?;
    let t: Vec<Value> = tables
        .t_sets
        .iter()
        .map(|t| {
            json!({
                "earlier": t.earlier,
                "acting": t.acting,
                "variable": rescaled_variable(s.cartan.symmetrizer(t.acting)),
                "roots": t.roots.iter().map(ToString::to_string).collect::<Vec<_>>(),
            })
        })
        .collect();
    let s_sets: Vec<Value> = tables
        .s_sets
        .iter()
        .map(|x| {
            json!({
                "earlier": x.earlier,
                "later": x.later,
                "differences": x.differences.iter().map(ToString::to_string).collect::<Vec<_>>(),
            })
        })
        .collect();
    let diagonal: Vec<Value> = (1..=s.cartan.rank())
        .filter_map(|b| tables.s(b, b))
        .map(|x| {
            json!({
                "node": x.earlier,
                "q_exponents": q_exponents(x).iter().map(ToString::to_string).collect::<Vec<_>>(),
            })
        })
        .collect();
    let results = json!({ "t_sets": t, "s_sets": s_sets, "q_diagonal": diagonal });
    Ok((json!({}), results, EXIT_OK))
}

fn cyclicity_cmd(s: &Setup, factors: &str, mode: ModeArg) -> Result<CmdOut> {
    let parsed = parse_factors(factors, s.cartan.rank())?;
    let mode = match mode {
        ModeArg::Hw => CyclicityMode::HighestWeight,
        ModeArg::Irr => CyclicityMode::Irreducible,
    };
    let tables = CyclicityTables::compute(&s.cartan, &s.word, s.order)?;
    let report = check_cyclicity(&parsed, &tables.s_sets, s.cartan.rank(), mode)?;
    let code = match report.verdict {
        Verdict::Certified => EXIT_OK,
        Verdict::NotCertified => EXIT_NOT_CERTIFIED,
    };
    let inputs = json!({
        "factors": parsed.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "mode": to_value(&mode),
    });
    Ok((inputs, to_value(&report), code))
}

fn weyl_module_cmd(
    s: &Setup,
    pi1: Option<&str>,
    pi2: Option<&str>,
    pi: &[String],
    fund_dims: Option<&str>,
) -> Result<CmdOut> {
    let rank = s.cartan.rank();
    let mut roots = vec![Vec::new(); rank];
    for (node, spec) in [(1, pi1), (2, pi2)] {
        if let Some(spec) = spec {
            if node > rank {
                return Err(Error::UnknownNode { node, rank });
            }
            roots[node - 1] = parse_roots(spec)?;
        }
    }
    for item in pi {
        let (node, spec) = item
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("--pi expects node=roots, got `{item}`")))?;
        let node: usize = node
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad node in `{item}`")))?;
        if node == 0 || node > rank {
            return Err(Error::UnknownNode { node, rank });
        }
        roots[node - 1] = parse_roots(spec)?;
    }
    let tables = CyclicityTables::compute(&s.cartan, &s.word, s.order)?;
    let spec = build_ordered_product(&roots, &tables.s_sets)?;
    let dims = resolve_dims(s, fund_dims)?;
    let dimension = dimension_report(&s.cartan, &spec.lambda, dims.as_deref())?;
    let ordered = is_real_part_ordered(&spec.factors);
    let code = if spec.report.passed() && ordered {
        EXIT_OK
    } else {
        EXIT_NOT_CERTIFIED
    };
    let inputs = json!({
        "roots": spec.roots.iter()
            .map(|rs| rs.iter().map(ToString::to_string).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    });
    let results = json!({
        "factors": spec.factors.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "lambda": spec.lambda,
        "ordered_by_real_part": ordered,
        "report": to_value(&spec.report),
        "dimension": to_value(&dimension),
    });
    Ok((inputs, results, code))
}

fn resolve_dims(s: &Setup, flag: Option<&str>) -> Result<Option<Vec<BigInt>>> {
    match flag {
        Some(text) => parse_bigints(text).map(Some),
        None => Ok(s.fundamental_dims.clone()),
    }
}

fn dim_cmd(s: &Setup, lambda: &str, fund_dims: Option<&str>) -> Result<CmdOut> {
    let lambda = parse_usizes(lambda)?;
    let dims = resolve_dims(s, fund_dims)?;
    let report = dimension_report(&s.cartan, &lambda, dims.as_deref())?;
    Ok((json!({ "lambda": lambda }), to_value(&report), EXIT_OK))
}

fn verify_cmd(s: &Setup, suite: SuiteArg) -> Result<CmdOut> {
    let suites: Vec<Suite> = match suite {
        SuiteArg::All => Suite::ALL.to_vec(),
        SuiteArg::Sl2 => vec![Suite::Sl2],
        SuiteArg::Walk => vec![Suite::Walk],
        SuiteArg::Tables => vec![Suite::Tables],
        SuiteArg::Roots => vec![Suite::Roots],
    };
    let target = Target {
        cartan: s.cartan.clone(),
        word: s.word.clone(),
        order: s.order,
        g2_reference: s.reference_g2,
    };
    let checks = run_suites(&target, &suites);
    let failed = checks.iter().filter(|c| !c.passed).count();
    let code = if failed == 0 { EXIT_OK } else { EXIT_INTERNAL };
    let inputs = json!({ "suites": suites.iter().map(|x| x.name()).collect::<Vec<_>>() });
    let results = json!({
        "passed": checks.len() - failed,
        "failed": failed,
        "checks": to_value(&checks),
    });
    Ok((inputs, results, code))
}

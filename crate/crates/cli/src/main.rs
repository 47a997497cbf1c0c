//! `steering`: construct and verify steering-type solutions as JSON.
//!
//! Exit status: 0 on success (and zero residual for `verify`), 1 when a
//! residual is nonzero or a suite case fails, 2 on any input error.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde_json::Value;

use steering_core::appell::appell_poly;
use steering_core::poly::{polyharmonic_basis, y_vars};
use steering_core::rational;
use steering_core::steering::{
    ck_table, construct_eigen, construct_exp_left, construct_inframonogenic,
    construct_lame_universal, construct_power_left, construct_trig_left, construct_two_sided,
    dsolve, DSolveSpec, Family, RootSpec,
};
use steering_core::suite::{run_suite, SuiteConfig};
use steering_core::verify::{
    alpha_beta_residual, d_equation_residual, inframonogenic_residual, infrapoly_residual,
    lame_navier_residual, n_monogenic_residual,
};
use steering_core::{CliffordPolynomial, CrField, Rational, Residual, ResidualReport, Side, VarScope};

#[derive(Parser)]
#[command(name = "steering", version, about = "Exact steering-type solutions of Cauchy-Riemann systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a solution from seed polynomials.
    Construct(ConstructArgs),
    /// Apply an operator to an expression and report the residual.
    Verify(VerifyArgs),
    /// Print the coefficient table c_1..c_n.
    Coeffs {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// Basis of homogeneous Delta_y^n-kernel polynomials of a given degree.
    Basis {
        #[arg(long, default_value_t = 4)]
        m: u8,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        degree: u32,
        /// Constant multivector every basis element is multiplied by.
        #[arg(long, default_value = "1")]
        pattern: String,
        #[command(flatten)]
        out: OutArg,
    },
    /// Generalized Appell polynomial P_k.
    Appell {
        #[arg(long, default_value_t = 4)]
        m: u8,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// Solve a_0 D^n F + ... + a_n F = 0 from rational roots.
    Dsolve(DsolveArgs),
    /// Run the verification battery.
    Suite(SuiteArgs),
}

#[derive(Args)]
struct OutArg {
    /// Write the JSON document here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Exp,
    Trig,
    Power,
    Eigen,
    Infra,
    Lame,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SideArg {
    Left,
    Right,
    Both,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long, default_value_t = 4)]
    m: u8,
    #[arg(long, default_value_t = 1)]
    n: usize,
    #[arg(long, value_enum, default_value = "exp")]
    family: FamilyArg,
    #[arg(long, value_enum, default_value = "left")]
    side: SideArg,
    /// Seed polynomial, as JSON or in the text form `1/2*x2^2*e2e3 - x3`.
    /// Repeat for families that take several seeds.
    #[arg(long = "seed")]
    seeds: Vec<String>,
    /// JSON file holding one seed polynomial or an array of them.
    #[arg(long)]
    seed_file: Option<PathBuf>,
    /// Rate r for the eigen family.
    #[arg(long, default_value = "1")]
    rate: String,
    #[command(flatten)]
    out: OutArg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OpArg {
    Cr,
    CrLeft,
    CrRight,
    Infra,
    Lame,
    Alphabeta,
    Infrapoly,
    Deq,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "cr")]
    op: OpArg,
    #[arg(long, default_value_t = 1)]
    n: usize,
    #[arg(long, value_enum, default_value = "left")]
    side: SideArg,
    #[arg(long)]
    mu: Option<String>,
    #[arg(long)]
    lambda: Option<String>,
    #[arg(long)]
    alpha: Option<String>,
    #[arg(long)]
    beta: Option<String>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    /// Comma-separated a_0,...,a_n, leading coefficient first.
    #[arg(long, allow_hyphen_values = true)]
    coeffs: Option<String>,
    /// Expression JSON; standard input when omitted.
    #[arg(long)]
    input: Option<PathBuf>,
    #[command(flatten)]
    out: OutArg,
}

#[derive(Args)]
struct DsolveArgs {
    #[arg(long, default_value_t = 4)]
    m: u8,
    /// Comma-separated a_0,...,a_n, leading coefficient first.
    #[arg(long, allow_hyphen_values = true)]
    coeffs: Option<String>,
    /// Declared root `rate` or `rate:multiplicity`; repeatable. Without any,
    /// the rational roots are searched for.
    #[arg(long = "root", allow_hyphen_values = true)]
    roots: Vec<String>,
    /// Equation, roots and seeds as one JSON document.
    #[arg(long)]
    spec_file: Option<PathBuf>,
    #[command(flatten)]
    out: OutArg,
}

#[derive(Args)]
struct SuiteArgs {
    #[arg(long, default_value_t = 4)]
    m: u8,
    /// Highest order n.
    #[arg(long, default_value_t = 4)]
    n: usize,
    /// Highest seed degree.
    #[arg(long, default_value_t = 4)]
    degree: u32,
    /// Add exp(z bar) e2 to the expression of the named case.
    #[arg(long)]
    perturb: Option<String>,
    /// Print the report as JSON instead of a table.
    #[arg(long)]
    json: bool,
}

/// Everything that maps to exit status 2.
#[derive(Debug)]
enum InputError {
    Core(steering_core::Error),
    Io(PathBuf, io::Error),
    Other(String),
}

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            InputError::Core(e) => write!(f, "{e}"),
            InputError::Io(path, e) => write!(f, "{}: {e}", path.display()),
            InputError::Other(msg) => f.write_str(msg),
        }
    }
}

impl From<steering_core::Error> for InputError {
    fn from(e: steering_core::Error) -> Self {
        InputError::Core(e)
    }
}

impl From<serde_json::Error> for InputError {
    fn from(e: serde_json::Error) -> Self {
        InputError::Core(e.into())
    }
}

type CliResult<T> = Result<T, InputError>;

fn read_path(path: &PathBuf) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| InputError::Io(path.clone(), e))
}

fn emit(out: &OutArg, value: &impl serde::Serialize) -> CliResult<()> {
    let text = serde_json::to_string(value)?;
    match &out.out {
        Some(path) => fs::write(path, text + "\n").map_err(|e| InputError::Io(path.clone(), e)),
        None => {
            let mut stdout = io::stdout().lock();
            writeln!(stdout, "{text}").map_err(|e| InputError::Other(e.to_string()))
        }
    }
}

fn parse_rational(name: &str, text: Option<&str>) -> CliResult<Rational> {
    let text = text.ok_or_else(|| InputError::Other(format!("--{name} is required for this operator")))?;
    Ok(rational::parse(text)?)
}

fn parse_coeffs(text: Option<&str>) -> CliResult<Vec<Rational>> {
    let text = text.ok_or_else(|| InputError::Other("--coeffs is required".into()))?;
    text.split(',')
        .map(|c| rational::parse(c.trim()).map_err(InputError::from))
        .collect()
}

/// Maps subscript digits to ASCII so `x₂` reads as `x2`.
fn ascii_subscripts(text: &str) -> String {
    text.chars()
        .map(|c| match c {
            '\u{2080}'..='\u{2089}' => char::from(b'0' + (c as u32 - 0x2080) as u8),
            other => other,
        })
        .collect()
}

/// A seed is JSON, the text form, or the text form wrapped in braces.
fn parse_seed(m: u8, text: &str) -> CliResult<CliffordPolynomial> {
    let trimmed = text.trim();
    let seed = if trimmed.starts_with('{') {
        match serde_json::from_str::<CliffordPolynomial>(trimmed) {
            Ok(seed) => seed,
            Err(json_err) => {
                let inner = trimmed
                    .strip_prefix('{')
                    .and_then(|t| t.strip_suffix('}'))
                    .filter(|t| !t.contains(':'))
                    .ok_or_else(|| InputError::from(json_err))?;
                CliffordPolynomial::parse(m, &ascii_subscripts(inner))?
            }
        }
    } else {
        CliffordPolynomial::parse(m, &ascii_subscripts(trimmed))?
    };
    if seed.m() != m {
        return Err(InputError::Other(format!(
            "seed has m = {} but --m is {m}",
            seed.m()
        )));
    }
    Ok(seed)
}

fn collect_seeds(args: &ConstructArgs) -> CliResult<Vec<CliffordPolynomial>> {
    let mut seeds = Vec::new();
    if let Some(path) = &args.seed_file {
        let value: Value = serde_json::from_str(&read_path(path)?)?;
        let list = match value {
            Value::Array(items) => items,
            single => vec![single],
        };
        for item in list {
            let seed: CliffordPolynomial = serde_json::from_value(item)?;
            if seed.m() != args.m {
                return Err(InputError::Other(format!(
                    "seed has m = {} but --m is {}",
                    seed.m(),
                    args.m
                )));
            }
            seeds.push(seed);
        }
    }
    for text in &args.seeds {
        seeds.push(parse_seed(args.m, text)?);
    }
    if seeds.is_empty() {
        return Err(InputError::Other("at least one --seed or --seed-file is required".into()));
    }
    Ok(seeds)
}

fn exactly_one(seeds: &[CliffordPolynomial], family: &str) -> CliResult<CliffordPolynomial> {
    match seeds {
        [one] => Ok(one.clone()),
        _ => Err(InputError::Other(format!(
            "the {family} family takes exactly one seed, got {}",
            seeds.len()
        ))),
    }
}

fn construct(args: &ConstructArgs) -> CliResult<ExitCode> {
    let seeds = collect_seeds(args)?;
    let expr = match (args.family, args.side) {
        (_, SideArg::Right) => {
            return Err(InputError::Other(
                "right-sided constructors are not available; use --side both for two-sided solutions"
                    .into(),
            ))
        }
        (FamilyArg::Exp, SideArg::Left) => construct_exp_left(&exactly_one(&seeds, "exp")?, args.n)?,
        (FamilyArg::Trig, SideArg::Left) => match seeds.as_slice() {
            [a1] => construct_trig_left(a1, &CliffordPolynomial::zero(args.m, VarScope::y_only(args.m)), args.n)?,
            [a1, b1] => construct_trig_left(a1, b1, args.n)?,
            _ => return Err(InputError::Other("the trig family takes one or two seeds (A1, B1)".into())),
        },
        (FamilyArg::Power, SideArg::Left) => construct_power_left(&seeds, args.n)?,
        (FamilyArg::Exp, SideArg::Both) => construct_two_sided(Family::Exp, &seeds)?,
        (FamilyArg::Trig, SideArg::Both) => construct_two_sided(Family::Trig, &seeds)?,
        (FamilyArg::Power, SideArg::Both) => construct_two_sided(Family::Power, &seeds)?,
        (FamilyArg::Eigen, SideArg::Left) => {
            let rate = rational::parse(&args.rate)?;
            construct_eigen(&rate, &exactly_one(&seeds, "eigen")?)?
        }
        (FamilyArg::Infra, SideArg::Left) => match seeds.as_slice() {
            [i, m] => construct_inframonogenic(i, m)?,
            _ => return Err(InputError::Other("the infra family takes two seeds (I, M)".into())),
        },
        (FamilyArg::Lame, SideArg::Left) => construct_lame_universal(&exactly_one(&seeds, "lame")?)?,
        (_, SideArg::Both) => {
            return Err(InputError::Other(
                "--side both is available for the exp, trig and power families".into(),
            ))
        }
    };
    emit(&args.out, &expr)?;
    Ok(ExitCode::SUCCESS)
}

fn side_of(arg: SideArg) -> CliResult<Side> {
    match arg {
        SideArg::Left => Ok(Side::Left),
        SideArg::Right => Ok(Side::Right),
        SideArg::Both => Err(InputError::Other("--side both is not an operator side".into())),
    }
}

fn apply_op<F: CrField>(f: &F, args: &VerifyArgs) -> CliResult<ResidualReport> {
    Ok(match args.op {
        OpArg::Cr => n_monogenic_residual(f, args.n, side_of(args.side)?),
        OpArg::CrLeft => n_monogenic_residual(f, args.n, Side::Left),
        OpArg::CrRight => n_monogenic_residual(f, args.n, Side::Right),
        OpArg::Infra => inframonogenic_residual(f),
        OpArg::Lame => lame_navier_residual(
            f,
            &parse_rational("mu", args.mu.as_deref())?,
            &parse_rational("lambda", args.lambda.as_deref())?,
        ),
        OpArg::Alphabeta => alpha_beta_residual(
            f,
            &parse_rational("alpha", args.alpha.as_deref())?,
            &parse_rational("beta", args.beta.as_deref())?,
        ),
        OpArg::Infrapoly => {
            let p = args.p.ok_or_else(|| InputError::Other("--p is required".into()))?;
            let q = args.q.ok_or_else(|| InputError::Other("--q is required".into()))?;
            infrapoly_residual(f, p, q)
        }
        OpArg::Deq => d_equation_residual(f, &parse_coeffs(args.coeffs.as_deref())?)?,
    })
}

fn verify(args: &VerifyArgs) -> CliResult<ExitCode> {
    let text = match &args.input {
        Some(path) => read_path(path)?,
        None => {
            let mut buf = String::new();
            io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| InputError::Other(format!("reading standard input: {e}")))?;
            buf
        }
    };
    let input: Residual = serde_json::from_str(text.trim()).map_err(|e| {
        InputError::Other(format!(
            "input is neither a steering expression nor a polynomial: {e}"
        ))
    })?;
    let report = match &input {
        Residual::Steering(f) => apply_op(f, args)?,
        Residual::Polynomial(p) => apply_op(p, args)?,
    };
    emit(&args.out, &report)?;
    Ok(if report.is_zero {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn parse_root(m: u8, text: &str) -> CliResult<RootSpec> {
    let (rate, mult) = match text.split_once(':') {
        Some((r, k)) => (
            r,
            k.trim()
                .parse::<u32>()
                .map_err(|_| InputError::Other(format!("bad multiplicity in --root {text:?}")))?,
        ),
        None => (text, 1),
    };
    Ok(RootSpec::with_default_seeds(m, rational::parse(rate)?, mult)?)
}

fn dsolve_cmd(args: &DsolveArgs) -> CliResult<ExitCode> {
    let spec = if let Some(path) = &args.spec_file {
        serde_json::from_str::<DSolveSpec>(&read_path(path)?)?
    } else {
        let coeffs = parse_coeffs(args.coeffs.as_deref())?;
        if args.roots.is_empty() {
            DSolveSpec::with_default_seeds(args.m, coeffs)?
        } else {
            let roots = args
                .roots
                .iter()
                .map(|r| parse_root(args.m, r))
                .collect::<CliResult<_>>()?;
            DSolveSpec {
                m: args.m,
                coeffs,
                roots,
            }
        }
    };
    let solution = dsolve(&spec)?;
    emit(&args.out, &solution)?;
    Ok(ExitCode::SUCCESS)
}

fn suite_cmd(args: &SuiteArgs) -> CliResult<ExitCode> {
    let config = SuiteConfig {
        m: args.m,
        max_n: args.n,
        max_degree: args.degree,
        perturb: args.perturb.clone(),
    };
    let report = run_suite(&config)?;
    let mut stdout = io::stdout().lock();
    let io_err = |e: io::Error| InputError::Other(e.to_string());
    if args.json {
        writeln!(stdout, "{}", serde_json::to_string(&report)?).map_err(io_err)?;
    } else {
        for case in &report.cases {
            let status = if case.passed { "PASS" } else { "FAIL" };
            let residual = if case.passed {
                "zero residual".to_string()
            } else {
                format!("{} residual terms", case.residual_terms)
            };
            writeln!(
                stdout,
                "{status}  {:<22} {:<20} {:>9.3} ms  {}",
                case.id, residual, case.millis, case.detail
            )
            .map_err(io_err)?;
        }
        writeln!(
            stdout,
            "{} passed, {} failed, {:.1} ms total",
            report.passed, report.failed, report.millis
        )
        .map_err(io_err)?;
        for case in report.cases.iter().filter(|c| !c.passed) {
            writeln!(stdout, "failing case: {}", case.id).map_err(io_err)?;
        }
    }
    Ok(if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    match cli.command {
        Command::Construct(args) => construct(&args),
        Command::Verify(args) => verify(&args),
        Command::Coeffs { n, out } => {
            emit(&out, &ck_table(n)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Basis {
            m,
            n,
            degree,
            pattern,
            out,
        } => {
            let pattern = CliffordPolynomial::parse(m, &pattern)?;
            if pattern.degree().is_some_and(|d| !d.is_zero()) {
                return Err(InputError::Other("--pattern must be a constant multivector".into()));
            }
            let basis = polyharmonic_basis(m, degree, n, &y_vars(m), &pattern.value_at_origin())?;
            emit(&out, &basis)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Appell { m, k, out } => {
            emit(&out, &appell_poly(k, m)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Dsolve(args) => dsolve_cmd(&args),
        Command::Suite(args) => suite_cmd(&args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

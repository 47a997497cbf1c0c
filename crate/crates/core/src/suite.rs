//! Batch of named verification cases, run in parallel and reported in a
//! deterministic order.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::appell::appell_poly;
use crate::clifford::Multivector;
use crate::error::{Error, Result};
use crate::poly::{polyharmonic_basis, y_vars, CliffordPolynomial, Side, VarScope};
use crate::rational::{self, Rational};
use crate::steering::{
    ck_table, construct_eigen, construct_exp_left, construct_inframonogenic, construct_lame_universal,
    construct_power_left, construct_trig_left,
    construct_two_sided, dsolve, tn_apply, tn_closed_form, DSolveSpec, Family, IntPoly,
    SteeringExpression, SteeringSymbol, TnMatrix,
};
use crate::verify::{
    d_equation_residual, inframonogenic_residual, lame_navier_components, n_monogenic_residual,
};

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub m: u8,
    pub max_n: usize,
    pub max_degree: u32,
    /// Case id whose constructed expression gets an extra `exp(z bar) e2`.
    pub perturb: Option<String>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            m: 4,
            max_n: 4,
            max_degree: 4,
            perturb: None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseResult {
    pub id: String,
    pub passed: bool,
    pub residual_terms: usize,
    pub millis: f64,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub passed: usize,
    pub failed: usize,
    pub millis: f64,
    pub cases: Vec<CaseResult>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

/// What a case reports: residual size (0 means pass) and a short note.
struct Outcome {
    residual_terms: usize,
    detail: String,
}

type Builder = Box<dyn Fn() -> Result<SteeringExpression> + Send + Sync>;
type Checker = Box<dyn Fn(&SteeringExpression) -> Result<Outcome> + Send + Sync>;
type Plain = Box<dyn Fn() -> Result<Outcome> + Send + Sync>;

enum Body {
    /// Builds an expression, optionally perturbs it, then checks it.
    Expression { build: Builder, check: Checker },
    /// Self-contained check with nothing to perturb.
    Plain(Plain),
}

struct Case {
    id: String,
    body: Body,
}

fn zero_outcome(terms: usize, detail: impl Into<String>) -> Outcome {
    Outcome {
        residual_terms: terms,
        detail: detail.into(),
    }
}

fn residual_check(n: usize) -> Checker {
    Box::new(move |f| {
        let r = n_monogenic_residual(f, n, Side::Left);
        Ok(zero_outcome(r.term_count, r.operator))
    })
}

fn expression_case(id: String, build: Builder, check: Checker) -> Case {
    Case {
        id,
        body: Body::Expression { build, check },
    }
}

fn plain_case(id: impl Into<String>, run: Plain) -> Case {
    Case {
        id: id.into(),
        body: Body::Plain(run),
    }
}

fn poly(m: u8, text: &str) -> Result<CliffordPolynomial> {
    CliffordPolynomial::parse(m, text)
}

fn matrix_power(n: usize) -> TnMatrix {
    let x = IntPoly::from_coeffs([0, 1]);
    let base: TnMatrix = [[IntPoly::zero(), x.clone()], [x, IntPoly::from_coeffs([2])]];
    let mut acc = base.clone();
    for _ in 1..n {
        let mut next: TnMatrix = Default::default();
        for (i, row) in next.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = acc[i][0].mul(&base[0][j]).add(&acc[i][1].mul(&base[1][j]));
            }
        }
        acc = next;
    }
    acc
}

fn seeds_by_degree(m: u8, n: usize, max_degree: u32) -> Result<Vec<(u32, Vec<CliffordPolynomial>)>> {
    let yv = y_vars(m);
    let one = Multivector::one(m);
    (0..=max_degree)
        .map(|d| Ok((d, polyharmonic_basis(m, d, n, &yv, &one)?)))
        .collect()
}

fn build_cases(config: &SuiteConfig) -> Result<Vec<Case>> {
    let m = config.m;
    let mut cases = Vec::new();

    cases.push(plain_case(
        "coeffs/c5",
        Box::new(|| {
            let t = ck_table(5)?;
            let want = [(-1, 2), (1, 8), (-1, 16), (5, 128), (-7, 256)];
            let bad = t
                .values()
                .iter()
                .zip(want)
                .filter(|(got, (p, q))| **got != rational::frac(*p, *q))
                .count();
            Ok(zero_outcome(bad, "c_1..c_5"))
        }),
    ));

    for n in 2..=10 {
        cases.push(plain_case(
            format!("tn/n{n:02}"),
            Box::new(move || {
                let closed = tn_closed_form(n)?;
                let brute = matrix_power(n);
                let bad = (0..2)
                    .flat_map(|i| (0..2).map(move |j| (i, j)))
                    .filter(|&(i, j)| closed[i][j] != brute[i][j])
                    .count();
                Ok(zero_outcome(bad, "closed form vs matrix power"))
            }),
        ));
    }

    for n in 1..=config.max_n {
        for (d, basis) in seeds_by_degree(m, n, config.max_degree)? {
            for (idx, seed) in basis.into_iter().enumerate() {
                let id = format!("exp/n{n}/d{d}/{idx:02}");
                cases.push(expression_case(
                    id,
                    Box::new(move || construct_exp_left(&seed, n)),
                    residual_check(n),
                ));
            }
        }
    }

    for n in 1..=config.max_n.min(3) {
        for (d, basis) in seeds_by_degree(m, n, config.max_degree)? {
            for (idx, a1) in basis.iter().enumerate() {
                let b1 = basis[(idx + 1) % basis.len()].clone();
                let a1 = a1.clone();
                cases.push(expression_case(
                    format!("trig/n{n}/d{d}/{idx:02}"),
                    Box::new(move || construct_trig_left(&a1, &b1, n)),
                    residual_check(n),
                ));
            }
        }
    }

    for n in 1..=config.max_n.min(3) {
        let bases = seeds_by_degree(m, n, config.max_degree.min(3))?;
        let seeds: Vec<CliffordPolynomial> = bases
            .iter()
            .map(|(_, b)| b.last().cloned().expect("every degree has a kernel element"))
            .collect();
        cases.push(expression_case(
            format!("power/n{n}"),
            Box::new(move || construct_power_left(&seeds, n)),
            residual_check(n),
        ));
    }

    if m >= 4 {
        let two_sided_check: fn() -> Checker = || {
            Box::new(|f: &SteeringExpression| {
                let left = f.cr(Side::Left).term_count();
                let right = f.cr(Side::Right).term_count();
                Ok(zero_outcome(left + right, "cr_left and cr_right"))
            })
        };
        let mm = poly(m, "1/2*(x2 + x3*e2e3)")?;
        let nn = poly(m, "x3 + x4*e3e4")?;
        {
            let mm = mm.clone();
            cases.push(expression_case(
                "two-sided/exp".into(),
                Box::new(move || construct_two_sided(Family::Exp, std::slice::from_ref(&mm))),
                two_sided_check(),
            ));
        }
        {
            let (mm, nn) = (mm.clone(), nn.clone());
            cases.push(expression_case(
                "two-sided/trig".into(),
                Box::new(move || construct_two_sided(Family::Trig, &[mm.clone(), nn.clone()])),
                two_sided_check(),
            ));
        }
        {
            let seeds = vec![mm, poly(m, "1")?, nn];
            cases.push(expression_case(
                "two-sided/power".into(),
                Box::new(move || construct_two_sided(Family::Power, &seeds)),
                two_sided_check(),
            ));
        }
    }

    for (p, q) in [(1, 1), (-1, 1), (2, 1), (-2, 1), (3, 2)] {
        let r = rational::frac(p, q);
        let h = poly(m, "2*x2*e2")?;
        let id = format!("eigen/r{}", rational::display(&r).replace('/', "_"));
        let rr = r.clone();
        cases.push(expression_case(
            id,
            Box::new(move || construct_eigen(&rr, &h)),
            Box::new(move |f| {
                let residual = &f.hypercomplex_d() - &f.scale(&r);
                Ok(zero_outcome(residual.term_count(), "D F - r F"))
            }),
        ));
    }

    for coeffs in [vec![1, -1], vec![1, 1, -2], vec![1, 0, 0]] {
        let id = format!(
            "dsolve/{}",
            coeffs.iter().map(i64::to_string).collect::<Vec<_>>().join("_")
        );
        let coeffs: Vec<Rational> = coeffs.into_iter().map(rational::int).collect();
        let for_check = coeffs.clone();
        cases.push(expression_case(
            id,
            Box::new(move || dsolve(&DSolveSpec::with_default_seeds(m, coeffs.clone())?)),
            Box::new(move |f| {
                let r = d_equation_residual(f, &for_check)?;
                Ok(zero_outcome(r.term_count, r.operator))
            }),
        ));
    }

    for k in 0..=6 {
        cases.push(plain_case(
            format!("appell/k{k}"),
            Box::new(move || {
                let p = appell_poly(k, m)?;
                let mut bad = p.cr_apply(Side::Left).len();
                if k == 0 {
                    bad += usize::from(p != CliffordPolynomial::scalar(m, Rational::from_integer(1.into()), VarScope::full(m)));
                } else {
                    let lower = appell_poly(k - 1, m)?.scale(&rational::int(k as i64));
                    bad += (&p.hypercomplex_d() - &lower).len();
                    bad += usize::from(!p.value_at_origin().is_zero());
                }
                Ok(zero_outcome(bad, "D P_k = k P_{k-1}, cr_left P_k = 0"))
            }),
        ));
    }

    if m >= 4 {
        let i_seed = poly(m, "1/2*(x2^2 + x3^2)*e2e4")?;
        let infra_m = poly(m, "1/2*(x2*e2 - x3*e3)")?;
        let lame_seed = i_seed.clone();
        cases.push(expression_case(
            "infra/example".into(),
            Box::new(move || construct_inframonogenic(&i_seed, &infra_m)),
            Box::new(|f| {
                let r = inframonogenic_residual(f);
                Ok(zero_outcome(r.term_count, r.operator))
            }),
        ));
        cases.push(expression_case(
            "lame/universal".into(),
            Box::new(move || construct_lame_universal(&lame_seed)),
            Box::new(|f| {
                let (sandwich, square) = lame_navier_components(f);
                Ok(zero_outcome(
                    sandwich.term_count() + square.term_count(),
                    "both Lame-Navier components",
                ))
            }),
        ));
    }

    Ok(cases)
}

fn perturbation(m: u8) -> Result<SteeringExpression> {
    SteeringExpression::term(
        SteeringSymbol::exp(Rational::from_integer(1.into()), true),
        CliffordPolynomial::constant(Multivector::generator(m, 2)?, VarScope::y_only(m)),
    )
}

/// Identifiers of every case the configuration would run, sorted.
pub fn case_ids(config: &SuiteConfig) -> Result<Vec<String>> {
    let mut ids: Vec<String> = build_cases(config)?.into_iter().map(|c| c.id).collect();
    ids.sort();
    Ok(ids)
}

pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    let cases = build_cases(config)?;
    if let Some(target) = &config.perturb {
        match cases.iter().find(|c| &c.id == target) {
            None => {
                return Err(Error::InvalidArgument(format!("no suite case named {target:?}")));
            }
            Some(Case {
                body: Body::Plain(_), ..
            }) => {
                return Err(Error::InvalidArgument(format!(
                    "suite case {target:?} has no constructed expression to perturb"
                )));
            }
            Some(_) => {}
        }
    }
    let delta = perturbation(config.m)?;
    let start = Instant::now();
    let mut results: Vec<CaseResult> = cases
        .par_iter()
        .map(|case| {
            let t0 = Instant::now();
            let perturbed = config.perturb.as_deref() == Some(case.id.as_str());
            let outcome = match &case.body {
                Body::Plain(run) => run(),
                Body::Expression { build, check } => build().and_then(|f| {
                    let f = if perturbed { &f + &delta } else { f };
                    check(&f)
                }),
            };
            let millis = t0.elapsed().as_secs_f64() * 1e3;
            match outcome {
                Ok(o) => CaseResult {
                    id: case.id.clone(),
                    passed: o.residual_terms == 0,
                    residual_terms: o.residual_terms,
                    millis,
                    detail: if perturbed {
                        format!("{} (perturbed)", o.detail)
                    } else {
                        o.detail
                    },
                },
                Err(e) => CaseResult {
                    id: case.id.clone(),
                    passed: false,
                    residual_terms: 0,
                    millis,
                    detail: format!("error: {e}"),
                },
            }
        })
        .collect();
    results.sort_by(|a, b| a.id.cmp(&b.id));
    let passed = results.iter().filter(|r| r.passed).count();
    Ok(SuiteReport {
        passed,
        failed: results.len() - passed,
        millis: start.elapsed().as_secs_f64() * 1e3,
        cases: results,
    })
}

/// `T^n (A, B)` against `n` left Cauchy-Riemann applications, for a pair
/// of `y`-polynomials. Used to cross-check the transfer matrix.
pub fn tn_matches_operator(n: usize, a: &CliffordPolynomial, b: &CliffordPolynomial) -> Result<bool> {
    let one = Rational::from_integer(1.into());
    let f = SteeringExpression::from_terms(
        a.m(),
        [
            (SteeringSymbol::exp(one.clone(), false), a.clone()),
            (SteeringSymbol::exp(one.clone(), true), b.clone()),
        ],
    )?;
    let applied = f.cr_left_pow(n);
    let (ta, tb) = tn_apply(&tn_closed_form(n)?, a, b);
    Ok(applied.coefficient(&SteeringSymbol::exp(one.clone(), false)) == ta
        && applied.coefficient(&SteeringSymbol::exp(one, true)) == tb)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SuiteConfig {
        SuiteConfig {
            m: 4,
            max_n: 2,
            max_degree: 3,
            perturb: None,
        }
    }

    #[test]
    fn small_suite_passes() {
        let report = run_suite(&small()).unwrap();
        let failed: Vec<_> = report.cases.iter().filter(|c| !c.passed).collect();
        assert!(failed.is_empty(), "{failed:?}");
        let ids: Vec<_> = report.cases.iter().map(|c| c.id.clone()).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        assert_eq!(ids, sorted);
    }

    #[test]
    fn perturbation_is_detected() {
        let config = SuiteConfig {
            perturb: Some("exp/n2/d3/00".into()),
            ..small()
        };
        let report = run_suite(&config).unwrap();
        assert_eq!(report.failed, 1);
        let bad = report.cases.iter().find(|c| !c.passed).unwrap();
        assert_eq!(bad.id, "exp/n2/d3/00");
        assert!(run_suite(&SuiteConfig {
            perturb: Some("nope".into()),
            ..small()
        })
        .is_err());
        assert!(run_suite(&SuiteConfig {
            perturb: Some("coeffs/c5".into()),
            ..small()
        })
        .is_err());
    }

    #[test]
    fn transfer_matrix_matches_operator() {
        let a = CliffordPolynomial::parse(4, "x2^3*e3 + x3*x4").unwrap();
        let b = CliffordPolynomial::parse(4, "x4^2*e2e3 - x2").unwrap();
        for n in 1..=4 {
            assert!(tn_matches_operator(n, &a, &b).unwrap());
        }
    }
}

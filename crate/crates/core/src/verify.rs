//! Residuals of the differential systems, computed by applying the operators
//! literally and keeping the resulting expression as a witness.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{CliffordPolynomial, Side};
use crate::rational::{self, Rational};
use crate::steering::SteeringExpression;

/// Functions the Cauchy-Riemann operators can act on.
pub trait CrField: Clone {
    fn cr(&self, side: Side) -> Self;
    fn hypercomplex_d(&self) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn scaled(&self, factor: &Rational) -> Self;
    fn is_zero(&self) -> bool;
    fn term_count(&self) -> usize;
    fn into_residual(self) -> Residual;
}

impl CrField for SteeringExpression {
    fn cr(&self, side: Side) -> Self {
        SteeringExpression::cr(self, side)
    }

    fn hypercomplex_d(&self) -> Self {
        SteeringExpression::hypercomplex_d(self)
    }

    fn plus(&self, other: &Self) -> Self {
        self + other
    }

    fn scaled(&self, factor: &Rational) -> Self {
        self.scale(factor)
    }

    fn is_zero(&self) -> bool {
        SteeringExpression::is_zero(self)
    }

    fn term_count(&self) -> usize {
        SteeringExpression::term_count(self)
    }

    fn into_residual(self) -> Residual {
        Residual::Steering(self)
    }
}

impl CrField for CliffordPolynomial {
    fn cr(&self, side: Side) -> Self {
        self.cr_apply(side)
    }

    fn hypercomplex_d(&self) -> Self {
        CliffordPolynomial::hypercomplex_d(self)
    }

    fn plus(&self, other: &Self) -> Self {
        self + other
    }

    fn scaled(&self, factor: &Rational) -> Self {
        self.scale(factor)
    }

    fn is_zero(&self) -> bool {
        CliffordPolynomial::is_zero(self)
    }

    fn term_count(&self) -> usize {
        self.len()
    }

    fn into_residual(self) -> Residual {
        Residual::Polynomial(self)
    }
}

/// The expression left over after applying an operator.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Residual {
    Steering(SteeringExpression),
    Polynomial(CliffordPolynomial),
}

impl Residual {
    pub fn is_zero(&self) -> bool {
        match self {
            Residual::Steering(e) => e.is_zero(),
            Residual::Polynomial(p) => p.is_zero(),
        }
    }
}

impl fmt::Display for Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Residual::Steering(e) => e.fmt(f),
            Residual::Polynomial(p) => p.fmt(f),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ResidualReport {
    pub operator: String,
    pub is_zero: bool,
    pub term_count: usize,
    pub residual: Residual,
}

impl ResidualReport {
    pub fn new<F: CrField>(operator: impl Into<String>, residual: F) -> ResidualReport {
        ResidualReport {
            operator: operator.into(),
            is_zero: residual.is_zero(),
            term_count: residual.term_count(),
            residual: residual.into_residual(),
        }
    }
}

fn cr_pow<F: CrField>(f: &F, side: Side, n: usize) -> F {
    (0..n).fold(f.clone(), |acc, _| acc.cr(side))
}

/// `n`-fold Cauchy-Riemann operator from the chosen side; `n = 0` returns `F`.
pub fn n_monogenic_residual<F: CrField>(f: &F, n: usize, side: Side) -> ResidualReport {
    ResidualReport::new(format!("cr_{side}^{n}"), cr_pow(f, side, n))
}

/// Sandwich operator `d_X F d_X`.
pub fn inframonogenic_residual<F: CrField>(f: &F) -> ResidualReport {
    ResidualReport::new("cr_right(cr_left(F))", f.cr(Side::Left).cr(Side::Right))
}

/// The two parameter-free pieces of the Lame-Navier operator:
/// `(d_X F d_X, d_X^2 F)`.
pub fn lame_navier_components<F: CrField>(f: &F) -> (F, F) {
    let left = f.cr(Side::Left);
    (left.cr(Side::Right), left.cr(Side::Left))
}

/// `(mu + lambda)/2 d_X F d_X + (3 mu + lambda)/2 d_X^2 F`.
pub fn lame_navier_residual<F: CrField>(f: &F, mu: &Rational, lambda: &Rational) -> ResidualReport {
    let (sandwich, square) = lame_navier_components(f);
    let two = rational::int(2);
    let a = (mu + lambda) / &two;
    let b = (mu * rational::int(3) + lambda) / &two;
    let residual = sandwich.scaled(&a).plus(&square.scaled(&b));
    ResidualReport::new(
        format!(
            "lame(mu={}, lambda={})",
            rational::display(mu),
            rational::display(lambda)
        ),
        residual,
    )
}

/// `alpha F d_X + beta d_X F`.
pub fn alpha_beta_residual<F: CrField>(f: &F, alpha: &Rational, beta: &Rational) -> ResidualReport {
    let residual = f
        .cr(Side::Right)
        .scaled(alpha)
        .plus(&f.cr(Side::Left).scaled(beta));
    ResidualReport::new(
        format!(
            "alphabeta(alpha={}, beta={})",
            rational::display(alpha),
            rational::display(beta)
        ),
        residual,
    )
}

/// `d_X^p F d_X^q`: `p` left applications followed by `q` right ones.
pub fn infrapoly_residual<F: CrField>(f: &F, p: usize, q: usize) -> ResidualReport {
    let residual = cr_pow(&cr_pow(f, Side::Left, p), Side::Right, q);
    ResidualReport::new(format!("infrapoly(p={p}, q={q})"), residual)
}

/// `sum_j a_j D^{n-j} F` for coefficients `a_0..a_n`, leading first. `D` is
/// only the hypercomplex derivative on left monogenic functions, so any
/// other input is refused.
pub fn d_equation_residual<F: CrField>(f: &F, coeffs: &[Rational]) -> Result<ResidualReport> {
    if coeffs.is_empty() {
        return Err(Error::InvalidArgument("empty coefficient list".into()));
    }
    if !f.cr(Side::Left).is_zero() {
        return Err(Error::NotMonogenic);
    }
    let mut power = f.clone();
    let mut acc: Option<F> = None;
    for (k, a) in coeffs.iter().rev().enumerate() {
        if k > 0 {
            power = power.hypercomplex_d();
        }
        if a.is_zero() {
            continue;
        }
        let term = power.scaled(a);
        acc = Some(match acc {
            None => term,
            Some(prev) => prev.plus(&term),
        });
    }
    let residual = acc.unwrap_or_else(|| f.scaled(&Rational::zero()));
    let desc: Vec<String> = coeffs.iter().map(rational::display).collect();
    Ok(ResidualReport::new(format!("deq({})", desc.join(",")), residual))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use crate::steering::{construct_eigen, construct_exp_left, construct_two_sided, Family, SteeringSymbol};

    fn poly(m: u8, text: &str) -> CliffordPolynomial {
        CliffordPolynomial::parse(m, text).unwrap()
    }

    fn term(s: SteeringSymbol, g: &str) -> SteeringExpression {
        SteeringExpression::term(s, poly(4, g)).unwrap()
    }

    #[test]
    fn monogenic_residuals() {
        let f = construct_exp_left(&poly(4, "x2^2*x3 - 1/3*x3^3"), 2).unwrap();
        assert!(n_monogenic_residual(&f, 2, Side::Left).is_zero);
        let g = term(SteeringSymbol::exp(int(1), false), "x2^3");
        assert!(!n_monogenic_residual(&g, 2, Side::Left).is_zero);
        let r = n_monogenic_residual(&g, 0, Side::Left);
        assert_eq!(r.residual, Residual::Steering(g));
    }

    #[test]
    fn inframonogenic_examples() {
        let f = &term(SteeringSymbol::exp(int(1), false), "(x2^2 + x3^2)*e2e4")
            + &term(SteeringSymbol::exp(int(1), true), "x2*e2 - x3*e3");
        assert!(inframonogenic_residual(&f).is_zero);
        let g = term(SteeringSymbol::exp(int(1), true), "1");
        let r = inframonogenic_residual(&g);
        assert_eq!(r.residual, Residual::Steering(g.scale(&int(4))));
    }

    #[test]
    fn lame_and_alpha_beta() {
        let g = term(SteeringSymbol::exp(int(1), true), "1");
        assert!(!lame_navier_residual(&g, &int(1), &int(0)).is_zero);
        let r = alpha_beta_residual(&g, &int(1), &int(1));
        assert_eq!(r.residual, Residual::Steering(g.scale(&int(4))));
        let two_sided = construct_two_sided(Family::Exp, &[poly(4, "1/2*(x2 + x3*e2e3)")]).unwrap();
        assert!(lame_navier_residual(&two_sided, &int(7), &int(-2)).is_zero);
        assert!(infrapoly_residual(&two_sided, 2, 1).is_zero);
    }

    #[test]
    fn d_equation() {
        let f = construct_eigen(&int(1), &poly(4, "2*x2*e2")).unwrap();
        assert!(d_equation_residual(&f, &[int(1), int(-1)]).unwrap().is_zero);
        let g = term(SteeringSymbol::exp(int(1), true), "1");
        assert!(matches!(d_equation_residual(&g, &[int(1), int(0)]), Err(Error::NotMonogenic)));
        let m = term(SteeringSymbol::constant(), "x2*e2 - x3*e3");
        assert!(d_equation_residual(&m, &[int(1), int(0)]).unwrap().is_zero);
    }

    #[test]
    fn report_json_shape() {
        let r = n_monogenic_residual(&poly(3, "x2"), 1, Side::Left);
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.starts_with(r#"{"operator":"cr_left^1","is_zero":false,"term_count":1,"residual":{"m":3"#));
        let back: ResidualReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        let s = n_monogenic_residual(&term(SteeringSymbol::exp(int(1), true), "1"), 1, Side::Left);
        let back: ResidualReport = serde_json::from_str(&serde_json::to_string(&s).unwrap()).unwrap();
        assert_eq!(back, s);
    }
}

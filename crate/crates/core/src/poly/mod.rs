//! Polynomials in the commuting real variables `x_0..x_m` with coefficients
//! in `R_{0,m}`.
//!
//! Variables commute with everything; coefficients multiply by the geometric
//! product and do not commute. The Dirac-type operators therefore come in a
//! left and a right flavour depending on which side the generator multiplies
//! the partial derivative.

mod basis;
mod monomial;
mod parse;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::clifford::{check_dimension, Blade, Multivector};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

pub use basis::{homogeneous_monomials, polyharmonic_basis, rank};
pub use monomial::Monomial;

/// Which side the operator's generators multiply from.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Left => write!(f, "left"),
            Side::Right => write!(f, "right"),
        }
    }
}

/// Declared set of variables a polynomial may use, as a bit set over
/// `x_0..x_m`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct VarScope(u32);

impl VarScope {
    /// `{x_0, ..., x_m}`.
    pub fn full(m: u8) -> VarScope {
        VarScope((1u32 << (m + 1)) - 1)
    }

    /// `{x_2, ..., x_m}`: the `y` variables of the biaxial split.
    pub fn y_only(m: u8) -> VarScope {
        VarScope(VarScope::full(m).0 & !0b11)
    }

    pub fn from_vars(vars: &[usize]) -> VarScope {
        VarScope(vars.iter().fold(0, |acc, v| acc | 1 << v))
    }

    pub fn contains(self, var: usize) -> bool {
        self.0 >> var & 1 == 1
    }

    pub fn union(self, other: VarScope) -> VarScope {
        VarScope(self.0 | other.0)
    }

    pub fn is_subset(self, other: VarScope) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn vars(self) -> Vec<usize> {
        (0..32).filter(|v| self.contains(*v)).collect()
    }
}

/// The `y` variable indices `2..=m`.
pub fn y_vars(m: u8) -> Vec<usize> {
    (2..=m as usize).collect()
}

/// Polynomial with multivector coefficients.
///
/// `scope` is metadata: it records which variables the polynomial is allowed
/// to use and is checked on construction, but equality compares only the
/// dimension and the terms.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "PolynomialRepr", into = "PolynomialRepr")]
pub struct CliffordPolynomial {
    m: u8,
    scope: VarScope,
    terms: BTreeMap<Monomial, Multivector>,
}

impl PartialEq for CliffordPolynomial {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.terms == other.terms
    }
}

impl Eq for CliffordPolynomial {}

impl CliffordPolynomial {
    pub fn zero(m: u8, scope: VarScope) -> CliffordPolynomial {
        CliffordPolynomial {
            m,
            scope,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(coef: Multivector, scope: VarScope) -> CliffordPolynomial {
        let mut out = CliffordPolynomial::zero(coef.m(), scope);
        out.add_term(Monomial::one(), coef);
        out
    }

    pub fn scalar(m: u8, value: Rational, scope: VarScope) -> CliffordPolynomial {
        CliffordPolynomial::constant(Multivector::scalar(m, value), scope)
    }

    /// The variable `x_var` with coefficient 1.
    pub fn variable(m: u8, var: usize, scope: VarScope) -> Result<CliffordPolynomial> {
        CliffordPolynomial::term(Monomial::var(var), Multivector::one(m), scope)
    }

    pub fn term(mono: Monomial, coef: Multivector, scope: VarScope) -> Result<CliffordPolynomial> {
        let mut out = CliffordPolynomial::zero(coef.m(), scope);
        out.check_monomial(&mono)?;
        out.add_term(mono, coef);
        Ok(out)
    }

    pub fn from_terms<I>(m: u8, scope: VarScope, terms: I) -> Result<CliffordPolynomial>
    where
        I: IntoIterator<Item = (Monomial, Multivector)>,
    {
        check_dimension(m as usize)?;
        let mut out = CliffordPolynomial::zero(m, scope);
        for (mono, coef) in terms {
            if coef.m() != m {
                return Err(Error::DimensionMismatch {
                    left: m,
                    right: coef.m(),
                });
            }
            out.check_monomial(&mono)?;
            out.add_term(mono, coef);
        }
        Ok(out)
    }

    /// Parses the text form used by the CLI and tests, e.g.
    /// `"x2^2 - x3^2"`, `"1/2*x2*e2e3 + 3"`. The scope is `y`-only when no
    /// `x0`/`x1` appear and full otherwise.
    pub fn parse(m: u8, text: &str) -> Result<CliffordPolynomial> {
        parse::parse_polynomial(m, text)
    }

    fn check_monomial(&self, mono: &Monomial) -> Result<()> {
        for (var, _) in mono.exponents() {
            if var > self.m as usize {
                return Err(Error::VariableOutOfRange { var, m: self.m });
            }
            if !self.scope.contains(var) {
                return Err(Error::precondition(format!(
                    "monomial {mono} uses x{var} outside the declared variable scope {:?}",
                    self.scope.vars()
                )));
            }
        }
        Ok(())
    }

    pub(crate) fn add_term(&mut self, mono: Monomial, coef: Multivector) {
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coef);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &coef;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn m(&self) -> u8 {
        self.m
    }

    pub fn scope(&self) -> VarScope {
        self.scope
    }

    pub fn with_scope(mut self, scope: VarScope) -> Result<CliffordPolynomial> {
        self.scope = scope;
        for mono in self.terms.keys() {
            self.check_monomial(mono)?;
        }
        Ok(self)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Multivector)> + '_ {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, mono: &Monomial) -> Multivector {
        self.terms
            .get(mono)
            .cloned()
            .unwrap_or_else(|| Multivector::zero(self.m))
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.keys().any(|mono| mono.uses(var))
    }

    /// Value at the origin: the constant coefficient.
    pub fn value_at_origin(&self) -> Multivector {
        self.coefficient(&Monomial::one())
    }

    fn map_coefficients(&self, f: impl Fn(&Multivector) -> Multivector) -> CliffordPolynomial {
        let mut out = CliffordPolynomial::zero(self.m, self.scope);
        for (mono, coef) in &self.terms {
            out.add_term(mono.clone(), f(coef));
        }
        out
    }

    pub fn scale(&self, factor: &Rational) -> CliffordPolynomial {
        if factor.is_zero() {
            return CliffordPolynomial::zero(self.m, self.scope);
        }
        self.map_coefficients(|c| c.scale(factor))
    }

    /// `a * p` for a constant multivector `a`.
    pub fn lmul(&self, a: &Multivector) -> CliffordPolynomial {
        self.map_coefficients(|c| a * c)
    }

    /// `p * a` for a constant multivector `a`.
    pub fn rmul(&self, a: &Multivector) -> CliffordPolynomial {
        self.map_coefficients(|c| c * a)
    }

    pub(crate) fn lmul_blade(&self, blade: Blade, coef: &Rational) -> CliffordPolynomial {
        self.map_coefficients(|c| c.lmul_blade(blade, coef))
    }

    pub(crate) fn rmul_blade(&self, blade: Blade, coef: &Rational) -> CliffordPolynomial {
        self.map_coefficients(|c| c.rmul_blade(blade, coef))
    }

    /// Coefficient-wise `e_1 c e_1`.
    pub fn e1_sandwich(&self) -> CliffordPolynomial {
        self.map_coefficients(Multivector::e1_sandwich)
    }

    pub fn conjugate_coefficients(&self) -> CliffordPolynomial {
        self.map_coefficients(Multivector::conjugate)
    }

    fn check_same_dim(&self, other: &CliffordPolynomial) -> Result<()> {
        if self.m == other.m {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.m,
                right: other.m,
            })
        }
    }

    /// `(c1 x^a)(c2 x^b) = (c1 c2) x^{a+b}`, extended bilinearly. The result
    /// scope is the union of both scopes.
    pub fn poly_mul(&self, other: &CliffordPolynomial) -> Result<CliffordPolynomial> {
        self.check_same_dim(other)?;
        let mut out = CliffordPolynomial::zero(self.m, self.scope.union(other.scope));
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    /// Formal partial derivative in `x_var`.
    pub fn partial(&self, var: usize) -> CliffordPolynomial {
        let mut out = CliffordPolynomial::zero(self.m, self.scope);
        for (mono, coef) in &self.terms {
            if let Some((e, lowered)) = mono.derivative(var) {
                out.add_term(lowered, coef.scale(&rational::int(e as i64)));
            }
        }
        out
    }

    /// `sum_{j in gens} e_j d_j p` (left) or `sum_j (d_j p) e_j` (right).
    fn dirac_over(&self, gens: std::ops::RangeInclusive<usize>, side: Side) -> CliffordPolynomial {
        let one = Rational::one();
        let mut out = CliffordPolynomial::zero(self.m, self.scope);
        for j in gens {
            let d = self.partial(j);
            if d.is_zero() {
                continue;
            }
            let term = match side {
                Side::Left => d.lmul_blade(Blade::generator(j), &one),
                Side::Right => d.rmul_blade(Blade::generator(j), &one),
            };
            out += &term;
        }
        out
    }

    /// Dirac operator in the `y` variables, `sum_{j=2}^m e_j d_{x_j}`.
    pub fn dirac_y(&self, side: Side) -> CliffordPolynomial {
        self.dirac_over(2..=self.m as usize, side)
    }

    /// `k`-fold application of [`dirac_y`](Self::dirac_y).
    pub fn dirac_y_pow(&self, side: Side, k: usize) -> CliffordPolynomial {
        (0..k).fold(self.clone(), |acc, _| acc.dirac_y(side))
    }

    /// Dirac operator in `x = (x_1..x_m)`, `sum_{j=1}^m e_j d_{x_j}`.
    pub fn dirac_x(&self, side: Side) -> CliffordPolynomial {
        self.dirac_over(1..=self.m as usize, side)
    }

    /// Generalized Cauchy-Riemann operator `d_{x0} + sum_{j=1}^m e_j d_{x_j}`.
    pub fn cr_apply(&self, side: Side) -> CliffordPolynomial {
        let mut out = self.partial(0);
        out += &self.dirac_x(side);
        out
    }

    /// Conjugate operator `d_{x0} - sum_{j=1}^m e_j d_{x_j}`.
    pub fn cr_bar_apply(&self, side: Side) -> CliffordPolynomial {
        let mut out = self.partial(0);
        out -= &self.dirac_x(side);
        out
    }

    /// Hypercomplex derivative `(1/2)(d_{x0} - d_x)` acting from the left.
    pub fn hypercomplex_d(&self) -> CliffordPolynomial {
        self.cr_bar_apply(Side::Left).scale(&rational::frac(1, 2))
    }

    /// `sum_{i in vars} d^2_{x_i} p`.
    pub fn laplacian(&self, vars: &[usize]) -> CliffordPolynomial {
        let mut out = CliffordPolynomial::zero(self.m, self.scope);
        for &v in vars {
            out += &self.partial(v).partial(v);
        }
        out
    }

    pub fn laplacian_pow(&self, vars: &[usize], n: usize) -> CliffordPolynomial {
        (0..n).fold(self.clone(), |acc, _| acc.laplacian(vars))
    }

    /// True when `Delta_y^n p = 0`.
    pub fn is_polyharmonic(&self, n: usize) -> bool {
        self.laplacian_pow(&y_vars(self.m), n).is_zero()
    }
}

/// Expands `(x_0 + sum_j x_j e_j)^k`, or the conjugate paravector
/// `(x_0 - sum_j x_j e_j)^k`, by repeated multiplication.
pub fn paravector_power(m: u8, k: usize, conjugated: bool) -> Result<CliffordPolynomial> {
    check_dimension(m as usize)?;
    let scope = VarScope::full(m);
    let mut x = CliffordPolynomial::variable(m, 0, scope)?;
    for j in 1..=m as usize {
        let mut term = CliffordPolynomial::term(Monomial::var(j), Multivector::generator(m, j)?, scope)?;
        if conjugated {
            term = -term;
        }
        x += &term;
    }
    let mut acc = CliffordPolynomial::scalar(m, Rational::one(), scope);
    for _ in 0..k {
        acc = acc.poly_mul(&x)?;
    }
    Ok(acc)
}

impl fmt::Display for CliffordPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (mono, coef)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match (mono.is_one(), coef.len()) {
                (true, 1) => write!(f, "{coef}")?,
                (true, _) => write!(f, "({coef})")?,
                (false, 1) if coef.scalar_part().is_one() => write!(f, "{mono}")?,
                (false, 1) => write!(f, "{coef}*{mono}")?,
                (false, _) => write!(f, "({coef})*{mono}")?,
            }
        }
        Ok(())
    }
}

impl Neg for &CliffordPolynomial {
    type Output = CliffordPolynomial;
    fn neg(self) -> CliffordPolynomial {
        self.map_coefficients(|c| -c)
    }
}

impl Neg for CliffordPolynomial {
    type Output = CliffordPolynomial;
    fn neg(self) -> CliffordPolynomial {
        -&self
    }
}

impl AddAssign<&CliffordPolynomial> for CliffordPolynomial {
    fn add_assign(&mut self, rhs: &CliffordPolynomial) {
        assert_eq!(self.m, rhs.m, "polynomial dimension mismatch");
        self.scope = self.scope.union(rhs.scope);
        for (mono, coef) in &rhs.terms {
            self.add_term(mono.clone(), coef.clone());
        }
    }
}

impl SubAssign<&CliffordPolynomial> for CliffordPolynomial {
    fn sub_assign(&mut self, rhs: &CliffordPolynomial) {
        assert_eq!(self.m, rhs.m, "polynomial dimension mismatch");
        self.scope = self.scope.union(rhs.scope);
        for (mono, coef) in &rhs.terms {
            self.add_term(mono.clone(), -coef);
        }
    }
}

impl Add for &CliffordPolynomial {
    type Output = CliffordPolynomial;
    fn add(self, rhs: &CliffordPolynomial) -> CliffordPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &CliffordPolynomial {
    type Output = CliffordPolynomial;
    fn sub(self, rhs: &CliffordPolynomial) -> CliffordPolynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for CliffordPolynomial {
    type Output = CliffordPolynomial;
    fn add(mut self, rhs: CliffordPolynomial) -> CliffordPolynomial {
        self += &rhs;
        self
    }
}

impl Sub for CliffordPolynomial {
    type Output = CliffordPolynomial;
    fn sub(mut self, rhs: CliffordPolynomial) -> CliffordPolynomial {
        self -= &rhs;
        self
    }
}

/// Polynomial product; panics on a dimension mismatch.
impl Mul for &CliffordPolynomial {
    type Output = CliffordPolynomial;
    fn mul(self, rhs: &CliffordPolynomial) -> CliffordPolynomial {
        self.poly_mul(rhs).expect("polynomial dimension mismatch")
    }
}

#[derive(Serialize, Deserialize)]
struct PolynomialRepr {
    m: usize,
    vars: Vec<usize>,
    terms: Vec<PolyTermRepr>,
}

#[derive(Serialize, Deserialize)]
struct PolyTermRepr {
    monomial: BTreeMap<String, u32>,
    coef: Multivector,
}

impl From<CliffordPolynomial> for PolynomialRepr {
    fn from(p: CliffordPolynomial) -> Self {
        PolynomialRepr {
            m: p.m as usize,
            vars: p.scope.vars(),
            terms: p
                .terms
                .into_iter()
                .map(|(mono, coef)| PolyTermRepr {
                    monomial: mono.exponents().map(|(v, e)| (v.to_string(), e)).collect(),
                    coef,
                })
                .collect(),
        }
    }
}

impl TryFrom<PolynomialRepr> for CliffordPolynomial {
    type Error = Error;

    fn try_from(repr: PolynomialRepr) -> Result<Self> {
        let m = check_dimension(repr.m)?;
        if let Some(&var) = repr.vars.iter().find(|v| **v > m as usize) {
            return Err(Error::VariableOutOfRange { var, m });
        }
        let scope = VarScope::from_vars(&repr.vars);
        let mut terms = Vec::with_capacity(repr.terms.len());
        for term in repr.terms {
            let mut pairs = Vec::new();
            for (var, exp) in term.monomial {
                let var: usize = var
                    .parse()
                    .map_err(|_| Error::Parse(format!("invalid variable index {var:?}")))?;
                if var > m as usize {
                    return Err(Error::VariableOutOfRange { var, m });
                }
                pairs.push((var, exp));
            }
            terms.push((Monomial::from_exponents(pairs), term.coef));
        }
        CliffordPolynomial::from_terms(m, scope, terms)
    }
}

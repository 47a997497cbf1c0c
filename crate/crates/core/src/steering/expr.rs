use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::symbol::{Axis, SteeringSymbol, SymbolClass};
use crate::clifford::{check_dimension, Blade, Multivector};
use crate::error::{Error, Result};
use crate::poly::{CliffordPolynomial, Monomial, Side, VarScope};
use crate::rational::{self, Rational};

/// Finite sum `sum_i phi_i G_i(y)` of steering symbols times Clifford
/// polynomials in `x_2..x_m`.
///
/// Symbols are written on the left. They commute with `e_1`, and moving a
/// generator `e_j` (`j >= 2`) across a symbol conjugates its argument, so left
/// multiplication by a blade with an odd number of such generators swaps
/// `phi(z)` and `phi(z bar)`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "ExpressionRepr", into = "ExpressionRepr")]
pub struct SteeringExpression {
    m: u8,
    terms: BTreeMap<SteeringSymbol, CliffordPolynomial>,
}

impl SteeringExpression {
    pub fn zero(m: u8) -> SteeringExpression {
        SteeringExpression {
            m,
            terms: BTreeMap::new(),
        }
    }

    /// A single term `symbol * coef`. Fails when `coef` mentions `x0` or `x1`.
    pub fn term(symbol: SteeringSymbol, coef: CliffordPolynomial) -> Result<SteeringExpression> {
        SteeringExpression::from_terms(coef.m(), [(symbol, coef)])
    }

    pub fn from_terms<I>(m: u8, terms: I) -> Result<SteeringExpression>
    where
        I: IntoIterator<Item = (SteeringSymbol, CliffordPolynomial)>,
    {
        check_dimension(m as usize)?;
        let mut out = SteeringExpression::zero(m);
        for (symbol, coef) in terms {
            out.add_term(symbol, &check_y_only(m, coef)?);
        }
        Ok(out)
    }

    pub(crate) fn add_term(&mut self, symbol: SteeringSymbol, coef: &CliffordPolynomial) {
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(symbol) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(
                    coef.clone()
                        .with_scope(VarScope::y_only(self.m))
                        .expect("coefficient checked to be y-only"),
                );
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coef;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn m(&self) -> u8 {
        self.m
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SteeringSymbol, &CliffordPolynomial)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, symbol: &SteeringSymbol) -> CliffordPolynomial {
        self.terms
            .get(symbol)
            .cloned()
            .unwrap_or_else(|| CliffordPolynomial::zero(self.m, VarScope::y_only(self.m)))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of `(symbol, monomial)` pairs with a nonzero coefficient.
    pub fn term_count(&self) -> usize {
        self.terms.values().map(CliffordPolynomial::len).sum()
    }

    pub fn scale(&self, factor: &Rational) -> SteeringExpression {
        let mut out = SteeringExpression::zero(self.m);
        if factor.is_zero() {
            return out;
        }
        for (s, g) in &self.terms {
            out.add_term(s.clone(), &g.scale(factor));
        }
        out
    }

    /// Left multiplication `b * F`, moving each blade of `b` across the
    /// symbols.
    pub fn blade_lmul(&self, b: &Multivector) -> SteeringExpression {
        assert_eq!(b.m(), self.m, "dimension mismatch");
        let mut out = SteeringExpression::zero(self.m);
        for (blade, c) in b.terms() {
            self.lmul_blade_into(blade, c, &mut out);
        }
        out
    }

    fn lmul_blade_into(&self, blade: Blade, c: &Rational, out: &mut SteeringExpression) {
        for (s, g) in &self.terms {
            let symbol = if blade.flips_z() { s.conjugate() } else { s.clone() };
            out.add_term(symbol, &g.lmul_blade(blade, c));
        }
    }

    /// Right multiplication `F * b`; nothing crosses a symbol.
    pub fn rmul(&self, b: &Multivector) -> SteeringExpression {
        assert_eq!(b.m(), self.m, "dimension mismatch");
        let mut out = SteeringExpression::zero(self.m);
        for (s, g) in &self.terms {
            out.add_term(s.clone(), &g.rmul(b));
        }
        out
    }

    /// `e1 F e1`, applied to every coefficient.
    pub fn e1_sandwich(&self) -> SteeringExpression {
        let mut out = SteeringExpression::zero(self.m);
        for (s, g) in &self.terms {
            out.add_term(s.clone(), &g.e1_sandwich());
        }
        out
    }

    /// Partial derivative in `x_var`. For `x0` and `x1` this differentiates
    /// the symbols; otherwise the coefficients.
    pub fn partial(&self, var: usize) -> SteeringExpression {
        let mut out = SteeringExpression::zero(self.m);
        match var {
            0 | 1 => {
                let axis = if var == 0 { Axis::X0 } else { Axis::X1 };
                for (s, g) in &self.terms {
                    for (factor, ds) in s.d(axis, self.m) {
                        out.add_term(ds, &g.lmul(&factor));
                    }
                }
            }
            _ => {
                for (s, g) in &self.terms {
                    out.add_term(s.clone(), &g.partial(var));
                }
            }
        }
        out
    }

    /// `sum_{j=1}^m e_j d_{x_j} F` (left) or `sum_j (d_{x_j} F) e_j` (right).
    pub fn dirac_x(&self, side: Side) -> SteeringExpression {
        let one = Rational::one();
        let mut out = SteeringExpression::zero(self.m);
        for j in 1..=self.m as usize {
            let d = self.partial(j);
            match side {
                Side::Left => d.lmul_blade_into(Blade::generator(j), &one, &mut out),
                Side::Right => {
                    for (s, g) in &d.terms {
                        out.add_term(s.clone(), &g.rmul_blade(Blade::generator(j), &one));
                    }
                }
            }
        }
        out
    }

    /// Generalized Cauchy-Riemann operator `d_{x0} + d_x` from either side.
    pub fn cr(&self, side: Side) -> SteeringExpression {
        let mut out = self.partial(0);
        out += &self.dirac_x(side);
        out
    }

    pub fn cr_left(&self) -> SteeringExpression {
        self.cr(Side::Left)
    }

    pub fn cr_right(&self) -> SteeringExpression {
        self.cr(Side::Right)
    }

    /// `k`-fold left Cauchy-Riemann operator.
    pub fn cr_left_pow(&self, k: usize) -> SteeringExpression {
        (0..k).fold(self.clone(), |acc, _| acc.cr_left())
    }

    /// Hypercomplex derivative `(1/2)(d_{x0} - d_x)` from the left.
    pub fn hypercomplex_d(&self) -> SteeringExpression {
        let mut out = self.partial(0);
        out -= &self.dirac_x(Side::Left);
        out.scale(&rational::frac(1, 2))
    }

    /// Value at the origin `x = 0`.
    pub fn value_at_origin(&self) -> Multivector {
        let mut out = Multivector::zero(self.m);
        for (s, g) in &self.terms {
            let v = s.value_at_origin();
            if !v.is_zero() {
                out += &g.value_at_origin().scale(&v);
            }
        }
        out
    }

    /// Expands into an ordinary polynomial in `x_0..x_m`. Only defined when
    /// every symbol is a pure power `z^k` or `z bar^k`.
    pub fn to_polynomial(&self) -> Result<CliffordPolynomial> {
        let m = self.m;
        let scope = VarScope::full(m);
        let e1 = Multivector::generator(m, 1)?;
        let mut out = CliffordPolynomial::zero(m, scope);
        for (s, g) in &self.terms {
            let power = match s.class() {
                SymbolClass::PowerExp { power, rate } if rate.is_zero() => *power,
                _ => {
                    return Err(Error::InvalidArgument(format!(
                        "symbol {s} is not a polynomial in z"
                    )))
                }
            };
            let x1e1 = CliffordPolynomial::term(
                Monomial::var(1),
                if s.bar() { -&e1 } else { e1.clone() },
                scope,
            )?;
            let w = &CliffordPolynomial::variable(m, 0, scope)? + &x1e1;
            let mut acc = CliffordPolynomial::scalar(m, Rational::one(), scope);
            for _ in 0..power {
                acc = acc.poly_mul(&w)?;
            }
            out += &acc.poly_mul(g)?;
        }
        Ok(out)
    }
}

fn check_y_only(m: u8, coef: CliffordPolynomial) -> Result<CliffordPolynomial> {
    if coef.m() != m {
        return Err(Error::DimensionMismatch {
            left: m,
            right: coef.m(),
        });
    }
    for var in [0, 1] {
        if coef.uses_var(var) {
            return Err(Error::DependsOnZ { var });
        }
    }
    coef.with_scope(VarScope::y_only(m))
}

impl fmt::Display for SteeringExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (s, g)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            if s.is_constant() {
                write!(f, "({g})")?;
            } else {
                write!(f, "{s}*({g})")?;
            }
        }
        Ok(())
    }
}

impl AddAssign<&SteeringExpression> for SteeringExpression {
    fn add_assign(&mut self, rhs: &SteeringExpression) {
        assert_eq!(self.m, rhs.m, "dimension mismatch");
        for (s, g) in &rhs.terms {
            self.add_term(s.clone(), g);
        }
    }
}

impl SubAssign<&SteeringExpression> for SteeringExpression {
    fn sub_assign(&mut self, rhs: &SteeringExpression) {
        assert_eq!(self.m, rhs.m, "dimension mismatch");
        for (s, g) in &rhs.terms {
            self.add_term(s.clone(), &-g);
        }
    }
}

impl Add for &SteeringExpression {
    type Output = SteeringExpression;

    fn add(self, rhs: &SteeringExpression) -> SteeringExpression {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &SteeringExpression {
    type Output = SteeringExpression;

    fn sub(self, rhs: &SteeringExpression) -> SteeringExpression {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for SteeringExpression {
    type Output = SteeringExpression;

    fn add(mut self, rhs: SteeringExpression) -> SteeringExpression {
        self += &rhs;
        self
    }
}

impl Sub for SteeringExpression {
    type Output = SteeringExpression;

    fn sub(mut self, rhs: SteeringExpression) -> SteeringExpression {
        self -= &rhs;
        self
    }
}

impl Neg for &SteeringExpression {
    type Output = SteeringExpression;

    fn neg(self) -> SteeringExpression {
        self.scale(&rational::int(-1))
    }
}

impl Neg for SteeringExpression {
    type Output = SteeringExpression;

    fn neg(self) -> SteeringExpression {
        -&self
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ExpressionRepr {
    m: u8,
    terms: Vec<TermRepr>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermRepr {
    symbol: SteeringSymbol,
    coef: CliffordPolynomial,
}

impl From<SteeringExpression> for ExpressionRepr {
    fn from(e: SteeringExpression) -> Self {
        ExpressionRepr {
            m: e.m,
            terms: e
                .terms
                .into_iter()
                .map(|(symbol, coef)| TermRepr { symbol, coef })
                .collect(),
        }
    }
}

impl TryFrom<ExpressionRepr> for SteeringExpression {
    type Error = Error;

    fn try_from(repr: ExpressionRepr) -> Result<Self> {
        SteeringExpression::from_terms(repr.m, repr.terms.into_iter().map(|t| (t.symbol, t.coef)))
    }
}

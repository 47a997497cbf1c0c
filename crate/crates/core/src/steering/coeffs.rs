//! The coefficients `c_k` of the exponential constructor and the closed form
//! of the powers of the transfer matrix `T = [[0, x], [x, 2]]`.
//!
//! Applying the left Cauchy-Riemann operator to `exp(z) A + exp(z bar) B`
//! gives `exp(z) dB + exp(z bar) (dA + 2B)` with `d` the Dirac operator in
//! `y`, so the pair `(A, B)` is transformed by `T` with `x = d`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{CliffordPolynomial, Side};
use crate::rational::{self, binomial, Rational};

/// `c_1..c_n` as an exact table.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "TableRepr", into = "TableRepr")]
pub struct CoefficientTable {
    c: Vec<Rational>,
}

impl CoefficientTable {
    pub fn n(&self) -> usize {
        self.c.len()
    }

    /// `c_k`, 1-based.
    pub fn get(&self, k: usize) -> &Rational {
        &self.c[k - 1]
    }

    pub fn values(&self) -> &[Rational] {
        &self.c
    }
}

/// `c_1 = -1/2` and for `k >= 2`
/// `c_k = -2^{-k} sum_{j=1}^{floor(k/2)} sum_{i=1}^{j} C(k+1, 2j+1) C(j, i) c_{k-i}`.
pub fn ck_table(n: usize) -> Result<CoefficientTable> {
    if n == 0 {
        return Err(Error::InvalidArgument("coefficient table needs n >= 1".into()));
    }
    let mut c: Vec<Rational> = Vec::with_capacity(n);
    c.push(rational::frac(-1, 2));
    for k in 2..=n {
        let mut sum = Rational::zero();
        for j in 1..=k / 2 {
            let outer = binomial(k as u64 + 1, 2 * j as u64 + 1);
            for i in 1..=j {
                let weight = &outer * binomial(j as u64, i as u64);
                sum += Rational::from_integer(weight) * &c[k - i - 1];
            }
        }
        let scale = Rational::new(BigInt::from(-1), BigInt::one() << k);
        c.push(sum * scale);
    }
    Ok(CoefficientTable { c })
}

/// `sum_k coeffs[k-1] * d^{2k-1} h` with `d` the left Dirac operator in `y`.
pub fn odd_dirac_series(h: &CliffordPolynomial, coeffs: &[Rational]) -> CliffordPolynomial {
    let mut out = CliffordPolynomial::zero(h.m(), h.scope());
    let mut d = h.dirac_y(Side::Left);
    for (idx, c) in coeffs.iter().enumerate() {
        if idx > 0 {
            d = d.dirac_y_pow(Side::Left, 2);
        }
        if d.is_zero() {
            break;
        }
        out += &d.scale(c);
    }
    out
}

/// Dense univariate polynomial with integer coefficients, lowest degree first.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct IntPoly(Vec<BigInt>);

impl IntPoly {
    pub fn zero() -> IntPoly {
        IntPoly(Vec::new())
    }

    pub fn from_coeffs<I, T>(coeffs: I) -> IntPoly
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut p = IntPoly(coeffs.into_iter().map(Into::into).collect());
        p.trim();
        p
    }

    pub fn monomial(coef: impl Into<BigInt>, power: usize) -> IntPoly {
        let mut v = vec![BigInt::zero(); power + 1];
        v[power] = coef.into();
        IntPoly::from_coeffs(v)
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn coeff(&self, power: usize) -> BigInt {
        self.0.get(power).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let len = self.0.len().max(other.0.len());
        IntPoly::from_coeffs((0..len).map(|i| self.coeff(i) + other.coeff(i)))
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }

    /// `p(d) h = sum_i a_i d^i h` with `d` the left Dirac operator in `y`.
    pub fn apply_dirac(&self, h: &CliffordPolynomial) -> CliffordPolynomial {
        let mut out = CliffordPolynomial::zero(h.m(), h.scope());
        let mut d = h.clone();
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                d = d.dirac_y(Side::Left);
            }
            if d.is_zero() {
                break;
            }
            if !a.is_zero() {
                out += &d.scale(&Rational::from_integer(a.clone()));
            }
        }
        out
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, a) in self.0.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let sign = if a.is_negative() { "-" } else { "+" };
            if first {
                if a.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = a.abs();
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Row-major 2x2 matrix of integer polynomials.
pub type TnMatrix = [[IntPoly; 2]; 2];

/// Entries of `T^n` from the binomial double sums
///
/// ```text
/// top-left     = sum_{k<=(n-2)/2} sum_{j<=k} C(n-1, 2k+1) C(k, j) x^{2j+2}
/// off-diagonal = sum_{k<=(n-1)/2} sum_{j<=k} C(n,   2k+1) C(k, j) x^{2j+1}
/// bottom-right = sum_{k<=n/2}     sum_{j<=k} C(n+1, 2k+1) C(k, j) x^{2j}
/// ```
pub fn tn_closed_form(n: usize) -> Result<TnMatrix> {
    if n == 0 {
        return Err(Error::InvalidArgument("T^n needs n >= 1".into()));
    }
    let entry = |top: usize, kmax: Option<usize>, shift: usize| {
        let mut p = IntPoly::zero();
        if let Some(kmax) = kmax {
            for k in 0..=kmax {
                let outer = binomial(top as u64, 2 * k as u64 + 1);
                for j in 0..=k {
                    let c = &outer * binomial(k as u64, j as u64);
                    p = p.add(&IntPoly::monomial(c, 2 * j + shift));
                }
            }
        }
        p
    };
    let top_left = entry(n - 1, (n >= 2).then(|| (n - 2) / 2), 2);
    let off = entry(n, Some((n - 1) / 2), 1);
    let bottom_right = entry(n + 1, Some(n / 2), 0);
    Ok([[top_left, off.clone()], [off, bottom_right]])
}

/// Applies `T^n` to a pair `(A, B)` of `y`-polynomials, the first component
/// being the `exp(z)` coefficient.
pub fn tn_apply(
    t: &TnMatrix,
    a: &CliffordPolynomial,
    b: &CliffordPolynomial,
) -> (CliffordPolynomial, CliffordPolynomial) {
    let first = &t[0][0].apply_dirac(a) + &t[0][1].apply_dirac(b);
    let second = &t[1][0].apply_dirac(a) + &t[1][1].apply_dirac(b);
    (first, second)
}

#[derive(Serialize, Deserialize)]
struct TableRepr {
    n: usize,
    c: Vec<String>,
}

impl From<CoefficientTable> for TableRepr {
    fn from(t: CoefficientTable) -> Self {
        TableRepr {
            n: t.c.len(),
            c: t.c.iter().map(rational::to_fraction_string).collect(),
        }
    }
}

impl TryFrom<TableRepr> for CoefficientTable {
    type Error = Error;

    fn try_from(repr: TableRepr) -> Result<Self> {
        let c = repr
            .c
            .iter()
            .map(|s| rational::parse(s))
            .collect::<Result<Vec<_>>>()?;
        if c.len() != repr.n {
            return Err(Error::Parse(format!(
                "coefficient table declares n = {} but lists {} values",
                repr.n,
                c.len()
            )));
        }
        Ok(CoefficientTable { c })
    }
}

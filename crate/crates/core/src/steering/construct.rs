//! Constructors of steering-type solutions from polyharmonic or monogenic
//! seeds.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::coeffs::{ck_table, odd_dirac_series};
use super::expr::SteeringExpression;
use super::symbol::SteeringSymbol;
use crate::error::{Error, Result};
use crate::poly::{y_vars, CliffordPolynomial, Side, VarScope};
use crate::rational::{self, binomial, factorial, Rational};

/// Steering family of a constructor.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Exp,
    Trig,
    Power,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Exp => "exp",
            Family::Trig => "trig",
            Family::Power => "power",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        match s {
            "exp" => Ok(Family::Exp),
            "trig" => Ok(Family::Trig),
            "power" => Ok(Family::Power),
            other => Err(Error::InvalidArgument(format!("unknown family {other:?}"))),
        }
    }
}

/// Checks that a seed lives in dimension `m` and depends on `y` only.
fn y_seed(m: u8, seed: &CliffordPolynomial) -> Result<CliffordPolynomial> {
    if seed.m() != m {
        return Err(Error::DimensionMismatch {
            left: m,
            right: seed.m(),
        });
    }
    for var in [0, 1] {
        if seed.uses_var(var) {
            return Err(Error::DependsOnZ { var });
        }
    }
    seed.clone().with_scope(VarScope::y_only(m))
}

fn polyharmonic_seed(m: u8, seed: &CliffordPolynomial, n: usize, name: &str) -> Result<CliffordPolynomial> {
    let seed = y_seed(m, seed)?;
    if !seed.is_polyharmonic(n) {
        return Err(Error::precondition(format!(
            "seed {name} is not {n}-polyharmonic: Delta_y^{n} {name} != 0"
        )));
    }
    Ok(seed)
}

fn right_monogenic_seed(m: u8, seed: &CliffordPolynomial, name: &str) -> Result<CliffordPolynomial> {
    let seed = y_seed(m, seed)?;
    if !seed.dirac_y(Side::Right).is_zero() {
        return Err(Error::precondition(format!(
            "seed {name} is not right monogenic in y: {name} d_y != 0"
        )));
    }
    Ok(seed)
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidArgument("order n must be >= 1".into()))
    } else {
        Ok(())
    }
}

/// `exp(z) H + exp(z bar) sum_{k=1}^n c_k d_y^{2k-1} H`, an `n`-monogenic
/// function for every `n`-polyharmonic `H(y)`.
pub fn construct_exp_left(h: &CliffordPolynomial, n: usize) -> Result<SteeringExpression> {
    check_order(n)?;
    let m = h.m();
    let h = polyharmonic_seed(m, h, n, "H")?;
    let table = ck_table(n)?;
    let b = odd_dirac_series(&h, table.values());
    SteeringExpression::from_terms(
        m,
        [
            (SteeringSymbol::exp(Rational::one(), false), h),
            (SteeringSymbol::exp(Rational::one(), true), b),
        ],
    )
}

/// `cos(z) A1 + sin(z) B1 + cos(z bar) A2 + sin(z bar) B2` with
/// `A2 = sum_k (-1)^k c_k d^{2k-1} B1` and
/// `B2 = sum_k (-1)^{k+1} c_k d^{2k-1} A1`.
pub fn construct_trig_left(
    a1: &CliffordPolynomial,
    b1: &CliffordPolynomial,
    n: usize,
) -> Result<SteeringExpression> {
    check_order(n)?;
    let m = a1.m();
    let a1 = polyharmonic_seed(m, a1, n, "A1")?;
    let b1 = polyharmonic_seed(m, b1, n, "B1")?;
    let table = ck_table(n)?;
    let signed = |start_negative: bool| -> Vec<Rational> {
        table
            .values()
            .iter()
            .enumerate()
            .map(|(i, c)| {
                // i = k - 1
                if (i % 2 == 0) == start_negative {
                    -c
                } else {
                    c.clone()
                }
            })
            .collect()
    };
    let a2 = odd_dirac_series(&b1, &signed(true));
    let b2 = odd_dirac_series(&a1, &signed(false));
    let one = Rational::one();
    SteeringExpression::from_terms(
        m,
        [
            (SteeringSymbol::cos(one.clone(), false)?, a1),
            (SteeringSymbol::sin(one.clone(), false)?, b1),
            (SteeringSymbol::cos(one.clone(), true)?, a2),
            (SteeringSymbol::sin(one, true)?, b2),
        ],
    )
}

/// Coefficient of `d^{2j-1} A_{k-2j+1}` in `B_k`:
/// `c_j / ((2j-1)! C(k, 2j-1))`.
pub fn power_weight(c_j: &Rational, j: usize, k: usize) -> Rational {
    let denom = factorial(2 * j as u64 - 1) * binomial(k as u64, 2 * j as u64 - 1);
    c_j / Rational::from_integer(denom)
}

/// `sum_{k=0}^K z^k A_k + sum_{k>=1} z bar^k B_k` with
/// `B_k = sum_{j=1}^{min(n, (k+1)/2)} c_j / ((2j-1)! C(k, 2j-1)) d^{2j-1} A_{k-2j+1}`.
pub fn construct_power_left(seeds: &[CliffordPolynomial], n: usize) -> Result<SteeringExpression> {
    check_order(n)?;
    let Some(first) = seeds.first() else {
        return Err(Error::InvalidArgument("power family needs at least one seed".into()));
    };
    let m = first.m();
    let seeds: Vec<CliffordPolynomial> = seeds
        .iter()
        .enumerate()
        .map(|(k, s)| polyharmonic_seed(m, s, n, &format!("A{k}")))
        .collect::<Result<_>>()?;
    let table = ck_table(n)?;
    let top = seeds.len() - 1;

    // d^{2j-1} A_i, cached per (i, j)
    let odd_derivs: Vec<Vec<CliffordPolynomial>> = seeds
        .iter()
        .map(|a| {
            let mut list = Vec::with_capacity(n);
            let mut d = a.dirac_y(Side::Left);
            for j in 1..=n {
                if j > 1 {
                    d = d.dirac_y_pow(Side::Left, 2);
                }
                list.push(d.clone());
            }
            list
        })
        .collect();

    let mut out = SteeringExpression::zero(m);
    for (k, a) in seeds.iter().enumerate() {
        out.add_term(SteeringSymbol::power(k as u32, false), a);
    }
    for k in 1..=top + 2 * n - 1 {
        let mut b = CliffordPolynomial::zero(m, VarScope::y_only(m));
        for j in 1..=n.min(k.div_ceil(2)) {
            let i = k + 1 - 2 * j;
            if i > top {
                continue;
            }
            let d = &odd_derivs[i][j - 1];
            if d.is_zero() {
                continue;
            }
            b += &d.scale(&power_weight(table.get(j), j, k));
        }
        out.add_term(SteeringSymbol::power(k as u32, true), &b);
    }
    Ok(out)
}

/// `M - e1 M e1`.
fn sandwich_diff(p: &CliffordPolynomial) -> CliffordPolynomial {
    p - &p.e1_sandwich()
}

/// `d M + e1 (d M) e1` with `d` the left Dirac operator in `y`.
fn sandwich_sum_of_dirac(p: &CliffordPolynomial) -> CliffordPolynomial {
    let d = p.dirac_y(Side::Left);
    &d + &d.e1_sandwich()
}

/// Two-sided (left and right) monogenic functions from right monogenic
/// seeds `M(y)`:
///
/// * exp: `exp(z)(M - e1 M e1) - 1/2 exp(z bar)(dM + e1 dM e1)`, one seed;
/// * trig: `cos z (M - e1Me1) + sin z (N - e1Ne1)
///   + 1/2 cos(z bar)(dN + e1dNe1) - 1/2 sin(z bar)(dM + e1dMe1)`, seeds `M, N`;
/// * power: `sum_k z^k (M_k - e1M_ke1) - 1/(2k) z bar^k (dM_{k-1} + e1dM_{k-1}e1)`,
///   seeds `M_0..M_K`.
pub fn construct_two_sided(family: Family, seeds: &[CliffordPolynomial]) -> Result<SteeringExpression> {
    let Some(first) = seeds.first() else {
        return Err(Error::InvalidArgument("two-sided constructor needs a seed".into()));
    };
    let m = first.m();
    let expected = match family {
        Family::Exp => Some(1),
        Family::Trig => Some(2),
        Family::Power => None,
    };
    if let Some(count) = expected {
        if seeds.len() != count {
            return Err(Error::InvalidArgument(format!(
                "{family} two-sided constructor takes {count} seed(s), got {}",
                seeds.len()
            )));
        }
    }
    let seeds: Vec<CliffordPolynomial> = seeds
        .iter()
        .enumerate()
        .map(|(k, s)| right_monogenic_seed(m, s, &format!("M{k}")))
        .collect::<Result<_>>()?;
    let half = rational::frac(1, 2);
    let one = Rational::one();
    let mut out = SteeringExpression::zero(m);
    match family {
        Family::Exp => {
            let mm = &seeds[0];
            out.add_term(SteeringSymbol::exp(one.clone(), false), &sandwich_diff(mm));
            out.add_term(
                SteeringSymbol::exp(one, true),
                &sandwich_sum_of_dirac(mm).scale(&-&half),
            );
        }
        Family::Trig => {
            let (mm, nn) = (&seeds[0], &seeds[1]);
            out.add_term(SteeringSymbol::cos(one.clone(), false)?, &sandwich_diff(mm));
            out.add_term(SteeringSymbol::sin(one.clone(), false)?, &sandwich_diff(nn));
            out.add_term(
                SteeringSymbol::cos(one.clone(), true)?,
                &sandwich_sum_of_dirac(nn).scale(&half),
            );
            out.add_term(
                SteeringSymbol::sin(one, true)?,
                &sandwich_sum_of_dirac(mm).scale(&-&half),
            );
        }
        Family::Power => {
            for (k, mk) in seeds.iter().enumerate() {
                out.add_term(SteeringSymbol::power(k as u32, false), &sandwich_diff(mk));
                let weight = Rational::new((-1).into(), (2 * (k as i64 + 1)).into());
                out.add_term(
                    SteeringSymbol::power(k as u32 + 1, true),
                    &sandwich_sum_of_dirac(mk).scale(&weight),
                );
            }
        }
    }
    Ok(out)
}

fn inframonogenic_seed(m: u8, seed: &CliffordPolynomial) -> Result<CliffordPolynomial> {
    let seed = y_seed(m, seed)?;
    if !seed.dirac_y(Side::Left).dirac_y(Side::Right).is_zero() {
        return Err(Error::precondition(
            "seed I is not inframonogenic in y: d_y I d_y != 0",
        ));
    }
    Ok(seed)
}

/// `exp(z)(I - e1 I e1) + exp(z bar)(M + e1 M e1)` for an inframonogenic
/// `I(y)` and a right monogenic `M(y)`; the result satisfies
/// `d_X F d_X = 0`.
pub fn construct_inframonogenic(
    i_seed: &CliffordPolynomial,
    m_seed: &CliffordPolynomial,
) -> Result<SteeringExpression> {
    let m = i_seed.m();
    let i_seed = inframonogenic_seed(m, i_seed)?;
    let m_seed = right_monogenic_seed(m, m_seed, "M")?;
    SteeringExpression::from_terms(
        m,
        [
            (SteeringSymbol::exp(Rational::one(), false), sandwich_diff(&i_seed)),
            (SteeringSymbol::exp(Rational::one(), true), &m_seed + &m_seed.e1_sandwich()),
        ],
    )
}

/// `exp(z)(I - e1 I e1) - 1/2 exp(z bar)(dI + e1 dI e1)` for an
/// inframonogenic `I(y)`: a solution of the Lame-Navier system for every
/// choice of the parameters.
pub fn construct_lame_universal(i_seed: &CliffordPolynomial) -> Result<SteeringExpression> {
    let m = i_seed.m();
    let i_seed = inframonogenic_seed(m, i_seed)?;
    SteeringExpression::from_terms(
        m,
        [
            (SteeringSymbol::exp(Rational::one(), false), sandwich_diff(&i_seed)),
            (
                SteeringSymbol::exp(Rational::one(), true),
                sandwich_sum_of_dirac(&i_seed).scale(&rational::frac(-1, 2)),
            ),
        ],
    )
}

/// `exp(rz) H - 1/(2r) exp(r z bar) d_y H`, which satisfies `D F = r F` for
/// every harmonic `H(y)` and `r != 0`.
pub fn construct_eigen(r: &Rational, h: &CliffordPolynomial) -> Result<SteeringExpression> {
    if r.is_zero() {
        return Err(Error::ZeroRate);
    }
    let m = h.m();
    let h = y_seed(m, h)?;
    if !h.laplacian(&y_vars(m)).is_zero() {
        return Err(Error::precondition("seed H is not harmonic: Delta_y H != 0"));
    }
    let weight = -(Rational::one() / (r * rational::int(2)));
    let dh = h.dirac_y(Side::Left).scale(&weight);
    SteeringExpression::from_terms(
        m,
        [
            (SteeringSymbol::exp(r.clone(), false), h),
            (SteeringSymbol::exp(r.clone(), true), dh),
        ],
    )
}

/// Sign pattern of the trigonometric coefficients: `A2` takes `(-1)^k c_k`,
/// `B2` takes `(-1)^{k+1} c_k`. Returned as `(a2_weights, b2_weights)`.
pub fn trig_weights(n: usize) -> Result<(Vec<Rational>, Vec<Rational>)> {
    let table = ck_table(n)?;
    let a2 = table
        .values()
        .iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 0 { -c } else { c.clone() })
        .collect();
    let b2 = table
        .values()
        .iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c })
        .collect();
    Ok((a2, b2))
}

/// True when the weight list alternates starting from a positive entry.
pub fn alternates_from_positive(weights: &[Rational]) -> bool {
    weights
        .iter()
        .enumerate()
        .all(|(i, w)| if i % 2 == 0 { w.is_positive() } else { w.is_negative() })
}

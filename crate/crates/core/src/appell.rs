//! Generalized Appell polynomials
//! `P_k(X) = sum_{s=0}^k T_s^k X^{k-s} Xbar^s` in the paravector `X`.

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::clifford::check_dimension;
use crate::error::{Error, Result};
use crate::poly::{paravector_power, CliffordPolynomial};
use crate::rational::{self, binomial, Rational};

/// Rising factorial `a (a+1) ... (a+k-1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    let mut factor = a.clone();
    for _ in 0..k {
        acc *= &factor;
        factor += Rational::one();
    }
    acc
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct AppellCoefficient {
    pub k: usize,
    pub s: usize,
    pub m: u8,
    #[serde(with = "value_string")]
    pub value: Rational,
}

/// `T_s^k = C(k, s) ((m+1)/2)_{k-s} ((m-1)/2)_s / (m)_k`.
pub fn t_coeff(k: usize, s: usize, m: u8) -> Result<Rational> {
    check_dimension(m as usize)?;
    if s > k {
        return Err(Error::InvalidArgument(format!("need s <= k, got s = {s}, k = {k}")));
    }
    let mq = rational::int(i64::from(m));
    let half = rational::frac(1, 2);
    let up = (&mq + Rational::one()) * &half;
    let down = (&mq - Rational::one()) * &half;
    let num = Rational::from_integer(binomial(k as u64, s as u64))
        * pochhammer(&up, k - s)
        * pochhammer(&down, s);
    Ok(num / pochhammer(&mq, k))
}

pub fn appell_coefficients(k: usize, m: u8) -> Result<Vec<AppellCoefficient>> {
    (0..=k)
        .map(|s| {
            Ok(AppellCoefficient {
                k,
                s,
                m,
                value: t_coeff(k, s, m)?,
            })
        })
        .collect()
}

/// Expands `P_k` from paravector powers.
pub fn appell_poly(k: usize, m: u8) -> Result<CliffordPolynomial> {
    let mut out: Option<CliffordPolynomial> = None;
    for s in 0..=k {
        let term = paravector_power(m, k - s, false)?
            .poly_mul(&paravector_power(m, s, true)?)?
            .scale(&t_coeff(k, s, m)?);
        out = Some(match out {
            None => term,
            Some(acc) => &acc + &term,
        });
    }
    Ok(out.expect("at least one term"))
}

mod value_string {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::rational::{self, Rational};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&rational::to_fraction_string(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        rational::parse(&text).map_err(serde::de::Error::custom)
    }
}

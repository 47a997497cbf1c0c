//! Solutions of `a_0 D^n F + a_1 D^{n-1} F + ... + a_n F = 0` for the
//! hypercomplex derivative `D`, built from the roots of the characteristic
//! polynomial `a_0 t^n + ... + a_n`.
//!
//! Coefficient lists are always written leading coefficient first.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::construct::construct_eigen;
use super::expr::SteeringExpression;
use super::symbol::SteeringSymbol;
use crate::clifford::check_dimension;
use crate::error::{Error, Result};
use crate::poly::{CliffordPolynomial, Side, VarScope};
use crate::rational::{self, Rational};

/// A root of the characteristic polynomial with the seeds attached to it.
///
/// For `rate != 0` the harmonic seed `H` contributes
/// `exp(rate z) H - 1/(2 rate) exp(rate z bar) d_y H`. Each monogenic seed
/// `M_k` contributes `z^k exp(rate z) M_k`, so at most `multiplicity` of them
/// may be given.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RootSpec {
    #[serde(with = "rational_string")]
    pub rate: Rational,
    pub multiplicity: u32,
    #[serde(default)]
    pub harmonic: Option<CliffordPolynomial>,
    #[serde(default)]
    pub monogenic: Vec<CliffordPolynomial>,
}

/// `a_0 D^n + ... + a_n` (leading coefficient first) together with the roots
/// to use.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DSolveSpec {
    pub m: u8,
    #[serde(with = "rational_vec")]
    pub coeffs: Vec<Rational>,
    pub roots: Vec<RootSpec>,
}

impl RootSpec {
    /// Simple seeds for a root: `H = x2` when `rate != 0`, and `M_k = 1`
    /// for the terms `z^k exp(rate z)` not already covered by `H`.
    pub fn with_default_seeds(m: u8, rate: Rational, multiplicity: u32) -> Result<RootSpec> {
        let m = check_dimension(m as usize)?;
        let y = VarScope::y_only(m);
        let one = CliffordPolynomial::scalar(m, Rational::one(), y);
        if rate.is_zero() {
            return Ok(RootSpec {
                rate,
                multiplicity,
                harmonic: None,
                monogenic: vec![one; multiplicity as usize],
            });
        }
        let mut monogenic = vec![CliffordPolynomial::zero(m, y)];
        monogenic.extend((1..multiplicity).map(|_| one.clone()));
        Ok(RootSpec {
            rate,
            multiplicity,
            harmonic: Some(CliffordPolynomial::variable(m, 2, y)?),
            monogenic,
        })
    }
}

impl DSolveSpec {
    /// Factors the characteristic polynomial over the rationals and attaches
    /// [`RootSpec::with_default_seeds`] to every root.
    pub fn with_default_seeds(m: u8, coeffs: Vec<Rational>) -> Result<DSolveSpec> {
        let roots = rational_roots(&coeffs)?
            .into_iter()
            .map(|(rate, multiplicity)| RootSpec::with_default_seeds(m, rate, multiplicity))
            .collect::<Result<_>>()?;
        Ok(DSolveSpec { m, coeffs, roots })
    }
}

/// Checks `a_0 != 0` and returns the coefficients lowest degree first.
fn ascending(coeffs: &[Rational]) -> Result<Vec<Rational>> {
    match coeffs.first() {
        None => Err(Error::InvalidArgument("empty coefficient list".into())),
        Some(a0) if a0.is_zero() => Err(Error::InvalidArgument(
            "leading coefficient a0 must be nonzero".into(),
        )),
        Some(_) => Ok(coeffs.iter().rev().cloned().collect()),
    }
}

/// Synthetic division by `(x - root)`, coefficients lowest degree first.
fn divide_root(coeffs: &[Rational], root: &Rational) -> (Vec<Rational>, Rational) {
    let n = coeffs.len() - 1;
    let mut quotient = vec![Rational::zero(); n];
    let mut carry = Rational::zero();
    for i in (0..=n).rev() {
        let value = &coeffs[i] + &carry * root;
        if i == 0 {
            return (quotient, value);
        }
        quotient[i - 1] = value.clone();
        carry = value;
    }
    unreachable!()
}

/// How many times `t - root` divides the polynomial exactly. Coefficients are
/// lowest degree first with a nonzero last entry.
fn multiplicity_ascending(coeffs: &[Rational], root: &Rational) -> u32 {
    let mut current = coeffs.to_vec();
    let mut count = 0;
    while current.len() > 1 {
        let (q, rem) = divide_root(&current, root);
        if !rem.is_zero() {
            break;
        }
        current = q;
        count += 1;
    }
    count
}

/// Multiplicity of `root` in `a_0 t^n + ... + a_n`.
pub fn root_multiplicity(coeffs: &[Rational], root: &Rational) -> Result<u32> {
    Ok(multiplicity_ascending(&ascending(coeffs)?, root))
}

fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if n.is_multiple_of(&d) {
            out.push(d.clone());
            let other = &n / &d;
            if other != d {
                out.push(other);
            }
        }
        d += 1;
    }
    out
}

/// All rational roots with multiplicities, by the rational root test on the
/// integer-scaled polynomial. Fails with [`Error::Unfactored`] naming the
/// leftover factor when the polynomial does not split over the rationals.
pub fn rational_roots(coeffs: &[Rational]) -> Result<Vec<(Rational, u32)>> {
    let mut current = ascending(coeffs)?;
    let mut roots = Vec::new();

    let zeros = current.iter().take_while(|c| c.is_zero()).count();
    if zeros > 0 {
        roots.push((Rational::zero(), zeros as u32));
        current.drain(..zeros);
    }
    if current.len() > 1 {
        let lcm = current
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = current.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
        let lead = ints.last().expect("nonempty");
        let constant = &ints[0];
        let mut candidates = Vec::new();
        for p in positive_divisors(constant) {
            for q in positive_divisors(lead) {
                let r = Rational::new(p.clone(), q);
                candidates.push(r.clone());
                candidates.push(-r);
            }
        }
        candidates.sort();
        candidates.dedup();
        for r in candidates {
            let mult = multiplicity_ascending(&current, &r);
            for _ in 0..mult {
                current = divide_root(&current, &r).0;
            }
            if mult > 0 {
                roots.push((r, mult));
            }
            if current.len() == 1 {
                break;
            }
        }
    }
    if current.len() > 1 {
        return Err(Error::Unfactored {
            remaining: format_poly(&current),
        });
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(roots)
}

fn format_poly(coeffs: &[Rational]) -> String {
    let parts: Vec<String> = coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| match i {
            0 => rational::display(c),
            1 => format!("{}*t", rational::display(c)),
            _ => format!("{}*t^{i}", rational::display(c)),
        })
        .collect();
    parts.join(" + ")
}

/// Builds a solution of `sum_j a_j D^{n-j} F = 0` from the listed roots after
/// checking each multiplicity by exact division and each seed's condition.
pub fn dsolve(spec: &DSolveSpec) -> Result<SteeringExpression> {
    let m = check_dimension(spec.m as usize)?;
    let reduced = ascending(&spec.coeffs)?;
    let order = reduced.len() - 1;

    let mut total = 0u32;
    for root in &spec.roots {
        if root.multiplicity == 0 {
            return Err(Error::InvalidArgument("root multiplicity must be >= 1".into()));
        }
        let actual = multiplicity_ascending(&reduced, &root.rate);
        if actual < root.multiplicity {
            return Err(Error::NotARoot {
                rate: root.rate.clone(),
                multiplicity: root.multiplicity,
            });
        }
        total += root.multiplicity;
    }
    if total as usize > order {
        return Err(Error::InvalidArgument(format!(
            "root multiplicities sum to {total}, more than the order {order}"
        )));
    }

    let mut out = SteeringExpression::zero(m);
    for root in &spec.roots {
        if root.monogenic.len() > root.multiplicity as usize {
            return Err(Error::InvalidArgument(format!(
                "root {} of multiplicity {} takes at most {} monogenic seeds",
                rational::display(&root.rate),
                root.multiplicity,
                root.multiplicity
            )));
        }
        if let Some(h) = &root.harmonic {
            if root.rate.is_zero() {
                return Err(Error::InvalidArgument(
                    "the zero root takes monogenic seeds only".into(),
                ));
            }
            out += &construct_eigen(&root.rate, h)?;
        }
        for (k, seed) in root.monogenic.iter().enumerate() {
            if seed.m() != m {
                return Err(Error::DimensionMismatch {
                    left: m,
                    right: seed.m(),
                });
            }
            if seed.uses_var(0) || seed.uses_var(1) {
                return Err(Error::DependsOnZ {
                    var: if seed.uses_var(0) { 0 } else { 1 },
                });
            }
            if !seed.dirac_y(Side::Left).is_zero() {
                return Err(Error::precondition(format!(
                    "monogenic seed M{k} for root {} is not left monogenic in y",
                    rational::display(&root.rate)
                )));
            }
            let symbol = SteeringSymbol::power_exp(k as u32, root.rate.clone(), false);
            out += &SteeringExpression::term(symbol, seed.clone())?;
        }
    }
    Ok(out)
}

/// `sum_j a_j D^{n-j} F` for coefficients `a_0..a_n`.
pub fn apply_operator_polynomial(coeffs: &[Rational], f: &SteeringExpression) -> SteeringExpression {
    let mut out = SteeringExpression::zero(f.m());
    let mut power = f.clone();
    for (k, a) in coeffs.iter().rev().enumerate() {
        if k > 0 {
            power = power.hypercomplex_d();
        }
        if !a.is_zero() {
            out += &power.scale(a);
        }
    }
    out
}

mod rational_string {
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

mod rational_vec {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::rational::{self, Rational};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(rational::to_fraction_string))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let texts = Vec::<String>::deserialize(d)?;
        texts
            .iter()
            .map(|t| rational::parse(t).map_err(serde::de::Error::custom))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn multiplicities() {
        // (t - 1)^2 (t + 2) = t^3 - 3t + 2
        let p = ints(&[1, 0, -3, 2]);
        assert_eq!(root_multiplicity(&p, &int(1)).unwrap(), 2);
        assert_eq!(root_multiplicity(&p, &int(-2)).unwrap(), 1);
        assert_eq!(root_multiplicity(&p, &int(3)).unwrap(), 0);
        assert!(root_multiplicity(&ints(&[0, 1]), &int(0)).is_err());
    }

    #[test]
    fn rational_root_search() {
        assert_eq!(rational_roots(&ints(&[1, 0, -3, 2])).unwrap(), vec![(int(-2), 1), (int(1), 2)]);
        assert_eq!(rational_roots(&ints(&[2, -1])).unwrap(), vec![(frac(1, 2), 1)]);
        assert_eq!(rational_roots(&ints(&[1, 0, 0])).unwrap(), vec![(int(0), 2)]);
        assert_eq!(rational_roots(&ints(&[1, 1, -2])).unwrap(), vec![(int(-2), 1), (int(1), 1)]);
        let err = rational_roots(&ints(&[1, 0, 1])).unwrap_err();
        assert!(matches!(err, Error::Unfactored { .. }));
        assert!(rational_roots(&ints(&[0, 1])).is_err());
    }

    #[test]
    fn non_root_is_rejected() {
        let spec = DSolveSpec {
            m: 3,
            coeffs: ints(&[1, -1]),
            roots: vec![RootSpec {
                rate: int(2),
                multiplicity: 1,
                harmonic: Some(CliffordPolynomial::parse(3, "x2").unwrap()),
                monogenic: vec![],
            }],
        };
        assert!(matches!(dsolve(&spec), Err(Error::NotARoot { .. })));
    }

    #[test]
    fn default_seeds_solve() {
        for coeffs in [ints(&[1, -1]), ints(&[1, 1, -2]), ints(&[1, 0, 0]), ints(&[1, 0, -3, 2])] {
            let spec = DSolveSpec::with_default_seeds(3, coeffs.clone()).unwrap();
            let f = dsolve(&spec).unwrap();
            assert!(!f.is_zero());
            assert!(apply_operator_polynomial(&coeffs, &f).is_zero(), "{coeffs:?}");
        }
    }

    #[test]
    fn dsolve_document_json() {
        let json = r#"{"m":3,"coeffs":["1","-1"],"roots":[{"rate":"1","multiplicity":1,
            "harmonic":{"m":3,"vars":[2,3],"terms":[{"monomial":{"2":1},"coef":{"m":3,"terms":[{"blades":[],"coef":"1"}]}}]}}]}"#;
        let spec: DSolveSpec = serde_json::from_str(json).unwrap();
        assert_eq!(spec.roots[0].rate, int(1));
        let f = dsolve(&spec).unwrap();
        assert!(apply_operator_polynomial(&spec.coeffs, &f).is_zero());
    }
}

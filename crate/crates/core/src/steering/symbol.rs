use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::clifford::Multivector;
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Shape of a steering function of `w`, where `w` is `z = x0 + x1 e1` or its
/// conjugate.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum SymbolClass {
    /// `w^power * exp(rate * w)`. Covers constants, powers and exponentials.
    PowerExp { power: u32, rate: Rational },
    /// `cos(rate * w)`, `rate > 0`.
    Cos { rate: Rational },
    /// `sin(rate * w)`, `rate > 0`.
    Sin { rate: Rational },
}

/// Which partial derivative to take of a symbol.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Axis {
    X0,
    X1,
}

/// A member of the steering family together with its argument (`z` or
/// `z bar`). The constant symbol `1` is the only one with no argument and is
/// always stored with `bar = false`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "SymbolRepr", into = "SymbolRepr")]
pub struct SteeringSymbol {
    class: SymbolClass,
    bar: bool,
}

impl SteeringSymbol {
    pub fn constant() -> SteeringSymbol {
        SteeringSymbol::power_exp(0, Rational::zero(), false)
    }

    pub fn power_exp(power: u32, rate: Rational, bar: bool) -> SteeringSymbol {
        let bar = bar && !(power == 0 && rate.is_zero());
        SteeringSymbol {
            class: SymbolClass::PowerExp { power, rate },
            bar,
        }
    }

    /// `exp(rate * w)`.
    pub fn exp(rate: Rational, bar: bool) -> SteeringSymbol {
        SteeringSymbol::power_exp(0, rate, bar)
    }

    /// `w^power`.
    pub fn power(power: u32, bar: bool) -> SteeringSymbol {
        SteeringSymbol::power_exp(power, Rational::zero(), bar)
    }

    pub fn cos(rate: Rational, bar: bool) -> Result<SteeringSymbol> {
        check_trig_rate(&rate)?;
        Ok(SteeringSymbol {
            class: SymbolClass::Cos { rate },
            bar,
        })
    }

    pub fn sin(rate: Rational, bar: bool) -> Result<SteeringSymbol> {
        check_trig_rate(&rate)?;
        Ok(SteeringSymbol {
            class: SymbolClass::Sin { rate },
            bar,
        })
    }

    pub fn class(&self) -> &SymbolClass {
        &self.class
    }

    pub fn bar(&self) -> bool {
        self.bar
    }

    pub fn is_constant(&self) -> bool {
        matches!(&self.class, SymbolClass::PowerExp { power: 0, rate } if rate.is_zero())
    }

    /// `phi(z) -> phi(z bar)` and back; the constant is fixed.
    pub fn conjugate(&self) -> SteeringSymbol {
        SteeringSymbol {
            class: self.class.clone(),
            bar: !self.bar && !self.is_constant(),
        }
    }

    fn with_class(&self, class: SymbolClass) -> SteeringSymbol {
        match class {
            SymbolClass::PowerExp { power, rate } => SteeringSymbol::power_exp(power, rate, self.bar),
            class => SteeringSymbol { class, bar: self.bar },
        }
    }

    /// Derivative with respect to the symbol's own argument `w`, as a list of
    /// `(coefficient, symbol)` pairs.
    pub fn d_argument(&self) -> Vec<(Rational, SteeringSymbol)> {
        let mut out = Vec::new();
        match &self.class {
            SymbolClass::PowerExp { power, rate } => {
                if *power > 0 {
                    out.push((
                        rational::int(i64::from(*power)),
                        self.with_class(SymbolClass::PowerExp {
                            power: power - 1,
                            rate: rate.clone(),
                        }),
                    ));
                }
                if !rate.is_zero() {
                    out.push((rate.clone(), self.clone()));
                }
            }
            SymbolClass::Cos { rate } => {
                out.push((-rate, self.with_class(SymbolClass::Sin { rate: rate.clone() })));
            }
            SymbolClass::Sin { rate } => {
                out.push((rate.clone(), self.with_class(SymbolClass::Cos { rate: rate.clone() })));
            }
        }
        out
    }

    /// Partial derivative in `x0` or `x1` as `(factor, symbol)` pairs, where
    /// the factor lies in the span of `{1, e1}` and commutes with every
    /// symbol. Since `d w / d x1` is `e1` for `w = z` and `-e1` for
    /// `w = z bar`, the `x1` factors carry `e1` with that sign.
    pub fn d(&self, axis: Axis, m: u8) -> Vec<(Multivector, SteeringSymbol)> {
        self.d_argument()
            .into_iter()
            .map(|(c, s)| {
                let factor = match axis {
                    Axis::X0 => Multivector::scalar(m, c),
                    Axis::X1 => {
                        let c = if self.bar { -c } else { c };
                        Multivector::generator(m, 1)
                            .expect("m >= 2")
                            .scale(&c)
                    }
                };
                (factor, s)
            })
            .collect()
    }

    /// Value at `z = 0`.
    pub fn value_at_origin(&self) -> Rational {
        match &self.class {
            SymbolClass::PowerExp { power: 0, .. } | SymbolClass::Cos { .. } => Rational::one(),
            SymbolClass::PowerExp { .. } | SymbolClass::Sin { .. } => Rational::zero(),
        }
    }
}

fn check_trig_rate(rate: &Rational) -> Result<()> {
    if rate.is_positive() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "trigonometric rate must be positive, got {}",
            rational::display(rate)
        )))
    }
}

impl fmt::Display for SteeringSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = if self.bar { "zbar" } else { "z" };
        let scaled = |rate: &Rational| {
            if rate.is_one() {
                w.to_string()
            } else {
                format!("{}*{w}", rational::display(rate))
            }
        };
        match &self.class {
            SymbolClass::PowerExp { power, rate } => {
                let pow = match power {
                    0 => None,
                    1 => Some(w.to_string()),
                    p => Some(format!("{w}^{p}")),
                };
                let exp = (!rate.is_zero()).then(|| format!("exp({})", scaled(rate)));
                match (pow, exp) {
                    (None, None) => write!(f, "1"),
                    (Some(p), None) => write!(f, "{p}"),
                    (None, Some(e)) => write!(f, "{e}"),
                    (Some(p), Some(e)) => write!(f, "{p}*{e}"),
                }
            }
            SymbolClass::Cos { rate } => write!(f, "cos({})", scaled(rate)),
            SymbolClass::Sin { rate } => write!(f, "sin({})", scaled(rate)),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct SymbolRepr {
    bar: bool,
    kind: String,
    power: u32,
    rate: String,
}

impl From<SteeringSymbol> for SymbolRepr {
    fn from(s: SteeringSymbol) -> Self {
        let (kind, power, rate) = match s.class {
            SymbolClass::PowerExp { power, rate } => ("powexp", power, rate),
            SymbolClass::Cos { rate } => ("cos", 0, rate),
            SymbolClass::Sin { rate } => ("sin", 0, rate),
        };
        SymbolRepr {
            bar: s.bar,
            kind: kind.into(),
            power,
            rate: rational::to_fraction_string(&rate),
        }
    }
}

impl TryFrom<SymbolRepr> for SteeringSymbol {
    type Error = Error;

    fn try_from(repr: SymbolRepr) -> Result<Self> {
        let rate = rational::parse(&repr.rate)?;
        match repr.kind.as_str() {
            "powexp" => Ok(SteeringSymbol::power_exp(repr.power, rate, repr.bar)),
            "cos" | "sin" if repr.power != 0 => Err(Error::Parse(format!(
                "{} symbol must have power 0",
                repr.kind
            ))),
            "cos" => SteeringSymbol::cos(rate, repr.bar),
            "sin" => SteeringSymbol::sin(rate, repr.bar),
            other => Err(Error::Parse(format!("unknown symbol kind {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn conjugation() {
        let exp_z = SteeringSymbol::exp(int(1), false);
        assert_eq!(exp_z.conjugate(), SteeringSymbol::exp(int(1), true));
        assert_eq!(SteeringSymbol::power(3, false).conjugate(), SteeringSymbol::power(3, true));
        assert_eq!(SteeringSymbol::constant().conjugate(), SteeringSymbol::constant());
        assert_eq!(SteeringSymbol::power_exp(0, int(0), true), SteeringSymbol::constant());
    }

    #[test]
    fn derivative_table() {
        let m = 3;
        let exp_z = SteeringSymbol::exp(int(1), false);
        assert_eq!(exp_z.d(Axis::X0, m), vec![(Multivector::one(m), exp_z.clone())]);

        let z2 = SteeringSymbol::power(2, false);
        let e1 = Multivector::generator(m, 1).unwrap();
        assert_eq!(
            z2.d(Axis::X1, m),
            vec![(e1.scale(&int(2)), SteeringSymbol::power(1, false))]
        );
        let zb2 = SteeringSymbol::power(2, true);
        assert_eq!(
            zb2.d(Axis::X1, m),
            vec![(e1.scale(&int(-2)), SteeringSymbol::power(1, true))]
        );

        let cos_z = SteeringSymbol::cos(int(1), false).unwrap();
        let sin_z = SteeringSymbol::sin(int(1), false).unwrap();
        assert_eq!(cos_z.d(Axis::X0, m), vec![(Multivector::scalar(m, int(-1)), sin_z.clone())]);
        assert_eq!(sin_z.d(Axis::X0, m), vec![(Multivector::one(m), cos_z)]);

        // product rule: d/dz z e^{2z} = e^{2z} + 2 z e^{2z}
        let zexp = SteeringSymbol::power_exp(1, int(2), false);
        assert_eq!(
            zexp.d_argument(),
            vec![(int(1), SteeringSymbol::exp(int(2), false)), (int(2), zexp.clone())]
        );
        assert!(SteeringSymbol::constant().d_argument().is_empty());
    }

    #[test]
    fn trig_rate_must_be_positive() {
        assert!(SteeringSymbol::cos(int(0), false).is_err());
        assert!(SteeringSymbol::sin(int(-1), true).is_err());
    }

    #[test]
    fn origin_values() {
        assert_eq!(SteeringSymbol::exp(int(5), true).value_at_origin(), int(1));
        assert_eq!(SteeringSymbol::power(1, false).value_at_origin(), int(0));
        assert_eq!(SteeringSymbol::sin(int(1), false).unwrap().value_at_origin(), int(0));
        assert_eq!(SteeringSymbol::cos(int(1), true).unwrap().value_at_origin(), int(1));
    }

    #[test]
    fn display_and_json() {
        assert_eq!(SteeringSymbol::power_exp(2, int(3), true).to_string(), "zbar^2*exp(3*zbar)");
        assert_eq!(SteeringSymbol::constant().to_string(), "1");
        let s = SteeringSymbol::exp(int(1), true);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"bar":true,"kind":"powexp","power":0,"rate":"1/1"}"#);
        assert_eq!(serde_json::from_str::<SteeringSymbol>(&json).unwrap(), s);
        assert!(serde_json::from_str::<SteeringSymbol>(
            r#"{"bar":true,"kind":"tan","power":0,"rate":"1"}"#
        )
        .is_err());
    }
}

//! Small text syntax for polynomials.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := int ['/' int] | 'x' int ['^' int] | ('e' int)+ | '(' expr ')'
//! ```
//!
//! `e2e3` is the ordered product `e_2 e_3`; a fraction `1/2` is a single
//! rational literal.

use num_bigint::BigInt;
use num_traits::One;

use super::{CliffordPolynomial, Monomial, VarScope};
use crate::clifford::{check_dimension, Multivector};
use crate::error::{Error, Result};
use crate::rational::Rational;

pub(super) fn parse_polynomial(m: u8, text: &str) -> Result<CliffordPolynomial> {
    check_dimension(m as usize)?;
    let mut parser = Parser {
        chars: text.chars().filter(|c| !c.is_whitespace()).collect(),
        pos: 0,
        m,
    };
    let poly = parser.expr()?;
    if parser.pos != parser.chars.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    if poly.uses_var(0) || poly.uses_var(1) {
        Ok(poly)
    } else {
        poly.with_scope(VarScope::y_only(m))
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    m: u8,
}

impl Parser {
    fn error(&self, what: &str) -> Error {
        let text: String = self.chars.iter().collect();
        Error::Parse(format!("{what} at position {} in {text:?}", self.pos))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<String> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn small(&mut self) -> Result<usize> {
        self.digits()?
            .parse()
            .map_err(|_| self.error("number too large"))
    }

    fn expr(&mut self) -> Result<CliffordPolynomial> {
        let full = VarScope::full(self.m);
        let mut acc = CliffordPolynomial::zero(self.m, full);
        let mut negative = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        loop {
            let term = self.term()?;
            if negative {
                acc -= &term;
            } else {
                acc += &term;
            }
            if self.eat('+') {
                negative = false;
            } else if self.eat('-') {
                negative = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<CliffordPolynomial> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            let rhs = self.factor()?;
            acc = acc.poly_mul(&rhs)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<CliffordPolynomial> {
        let full = VarScope::full(self.m);
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some('x') => {
                self.pos += 1;
                let var = self.small()?;
                let exp = if self.eat('^') { self.small()? as u32 } else { 1 };
                if var > self.m as usize {
                    return Err(Error::VariableOutOfRange { var, m: self.m });
                }
                CliffordPolynomial::term(
                    Monomial::from_exponents([(var, exp)]),
                    Multivector::one(self.m),
                    full,
                )
            }
            Some('e') => {
                let mut gens = Vec::new();
                while self.eat('e') {
                    gens.push(self.small()?);
                }
                Ok(CliffordPolynomial::constant(
                    Multivector::basis(self.m, &gens)?,
                    full,
                ))
            }
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = self.digits()?.parse().expect("digits");
                let den: BigInt = if self.eat('/') {
                    self.digits()?.parse().expect("digits")
                } else {
                    BigInt::one()
                };
                if den == BigInt::from(0) {
                    return Err(self.error("zero denominator"));
                }
                Ok(CliffordPolynomial::scalar(self.m, Rational::new(num, den), full))
            }
            _ => Err(self.error("expected a factor")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::Blade;
    use crate::rational::frac;

    #[test]
    fn parses_products_and_fractions() {
        let p = parse_polynomial(4, "-1/2*x2^2*e3e2 + (x3 + 1)*e4").unwrap();
        let x2sq = Monomial::from_exponents([(2, 2)]);
        assert_eq!(
            p.coefficient(&x2sq).coefficient(Blade::from_mask(0b0110)),
            frac(1, 2)
        );
        assert_eq!(p.len(), 3);
        assert_eq!(p.scope(), VarScope::y_only(4));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_polynomial(4, "x2 +").is_err());
        assert!(parse_polynomial(4, "x9").is_err());
        assert!(parse_polynomial(4, "e5").is_err());
        assert!(parse_polynomial(4, "(x2").is_err());
        assert!(parse_polynomial(4, "1/0").is_err());
        assert!(parse_polynomial(4, "x2 y").is_err());
    }
}

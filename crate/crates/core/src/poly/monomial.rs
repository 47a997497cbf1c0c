use std::cmp::Ordering;
use std::fmt;

/// Product of commuting variables `x_i^{a_i}`, stored sparsely as
/// `(variable, exponent)` pairs sorted by variable with no zero exponents.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(Vec<(u8, u32)>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn var(i: usize) -> Monomial {
        Monomial(vec![(i as u8, 1)])
    }

    /// Builds from arbitrary `(variable, exponent)` pairs; repeated variables
    /// accumulate and zero exponents are dropped.
    pub fn from_exponents<I>(pairs: I) -> Monomial
    where
        I: IntoIterator<Item = (usize, u32)>,
    {
        let mut dense = [0u32; 32];
        for (v, e) in pairs {
            dense[v] += e;
        }
        Monomial(
            dense
                .iter()
                .enumerate()
                .filter(|(_, e)| **e > 0)
                .map(|(v, e)| (v as u8, *e))
                .collect(),
        )
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.0
            .iter()
            .find(|(v, _)| *v as usize == var)
            .map_or(0, |(_, e)| *e)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponents(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.0.iter().map(|(v, e)| (*v as usize, *e))
    }

    pub fn max_var(&self) -> Option<usize> {
        self.0.last().map(|(v, _)| *v as usize)
    }

    pub fn uses(&self, var: usize) -> bool {
        self.exponent(var) > 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (va, ea) = self.0[i];
            let (vb, eb) = other.0[j];
            match va.cmp(&vb) {
                Ordering::Less => {
                    out.push((va, ea));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((vb, eb));
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((va, ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    /// `d/dx_var`: the multiplicity factor and the lowered monomial, or
    /// `None` when the variable is absent.
    pub fn derivative(&self, var: usize) -> Option<(u32, Monomial)> {
        let pos = self.0.iter().position(|(v, _)| *v as usize == var)?;
        let mut rest = self.0.clone();
        let e = rest[pos].1;
        if e == 1 {
            rest.remove(pos);
        } else {
            rest[pos].1 = e - 1;
        }
        Some((e, Monomial(rest)))
    }
}

/// Graded lexicographic order with `x_0 > x_1 > ... > x_m`: total degree
/// first, then the first variable whose exponents differ decides.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let by_degree = self.degree().cmp(&other.degree());
        if by_degree != Ordering::Equal {
            return by_degree;
        }
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.0.get(i), other.0.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => {
                    if va != vb {
                        // the side holding the lower-indexed variable is larger
                        return vb.cmp(&va);
                    }
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (n, (v, e)) in self.0.iter().enumerate() {
            if n > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "x{v}")?;
            } else {
                write!(f, "x{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiply_and_differentiate() {
        let a = Monomial::from_exponents([(2, 1), (3, 2)]);
        let b = Monomial::from_exponents([(3, 1), (4, 1)]);
        assert_eq!(a.mul(&b), Monomial::from_exponents([(2, 1), (3, 3), (4, 1)]));
        assert_eq!(a.derivative(3), Some((2, Monomial::from_exponents([(2, 1), (3, 1)]))));
        assert_eq!(a.derivative(2), Some((1, Monomial::var(3).mul(&Monomial::var(3)))));
        assert_eq!(a.derivative(5), None);
        assert_eq!(a.degree(), 3);
    }

    #[test]
    fn graded_lex_order() {
        let x2 = Monomial::var(2);
        let x3 = Monomial::var(3);
        let x2x3 = x2.mul(&x3);
        let x2sq = x2.mul(&x2);
        let x3sq = x3.mul(&x3);
        assert!(Monomial::one() < x3);
        assert!(x3 < x2);
        assert!(x2 < x3sq);
        assert!(x3sq < x2x3);
        assert!(x2x3 < x2sq);
    }
}

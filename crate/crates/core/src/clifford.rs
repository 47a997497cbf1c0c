//! Exact arithmetic in the universal real Clifford algebra `R_{0,m}`.
//!
//! Generators satisfy `e_i^2 = -1` and `e_i e_j = -e_j e_i` for `i != j`.
//! A basis blade `e_A = e_{j1} e_{j2} ... e_{jk}` (ascending indices) is stored
//! as a bit set: bit `j - 1` is set iff `e_j` is a factor, so every valid mask
//! of an algebra with `m` generators is below `2^m`.
//!
//! A [`Multivector`] is a sparse map from blades to nonzero rationals.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

pub const MAX_GENERATORS: usize = 16;

pub(crate) fn check_dimension(m: usize) -> Result<u8> {
    if (2..=MAX_GENERATORS).contains(&m) {
        Ok(m as u8)
    } else {
        Err(Error::InvalidDimension(m))
    }
}

/// Basis blade `e_A` as a generator bit set.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Blade(u32);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    pub const fn from_mask(mask: u32) -> Blade {
        Blade(mask)
    }

    /// The single generator `e_j` (1-based).
    pub fn generator(j: usize) -> Blade {
        assert!((1..=MAX_GENERATORS).contains(&j), "generator index {j}");
        Blade(1 << (j - 1))
    }

    pub const fn mask(self) -> u32 {
        self.0
    }

    pub const fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, j: usize) -> bool {
        j >= 1 && self.0 & (1 << (j - 1)) != 0
    }

    /// Generator indices in ascending order.
    pub fn indices(self) -> Vec<usize> {
        (0..32).filter(|b| self.0 >> b & 1 == 1).map(|b| b + 1).collect()
    }

    pub fn fits(self, m: u8) -> bool {
        u64::from(self.0) < 1u64 << m
    }

    /// Geometric product of two blades: returns `(negative, blade)` such that
    /// `e_A e_B = (-1)^negative e_{A xor B}`.
    ///
    /// The sign counts the transpositions needed to merge `B` into `A`
    /// (pairs `i in A`, `j in B` with `i > j`) plus one flip for every
    /// generator squared away.
    pub fn product(self, other: Blade) -> (bool, Blade) {
        let mut a = self.0 >> 1;
        let mut swaps = 0u32;
        while a != 0 {
            swaps += (a & other.0).count_ones();
            a >>= 1;
        }
        let squares = (self.0 & other.0).count_ones();
        ((swaps + squares) % 2 == 1, Blade(self.0 ^ other.0))
    }

    /// Sign of the Clifford conjugate: `bar(e_A) = (-1)^{|A|(|A|+1)/2} e_A`.
    pub fn conjugation_negates(self) -> bool {
        let k = self.grade();
        (k * (k + 1) / 2) % 2 == 1
    }

    /// True when the blade contains an odd number of generators `e_j` with
    /// `j >= 2`. Such a blade anticommutes with `e_1` modulo its own `e_1`
    /// factor, which is what turns `phi(z)` into `phi(z bar)` when it is moved
    /// across.
    pub fn flips_z(self) -> bool {
        (self.0 >> 1).count_ones() % 2 == 1
    }
}

/// Canonical order: by grade, then by mask.
impl Ord for Blade {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grade()
            .cmp(&other.grade())
            .then(self.0.cmp(&other.0))
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "1");
        }
        for j in self.indices() {
            write!(f, "e{j}")?;
        }
        Ok(())
    }
}

/// Element of `R_{0,m}` with exact rational coefficients.
///
/// No stored coefficient is zero, so two multivectors are equal exactly when
/// their term maps are equal.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "MultivectorRepr", into = "MultivectorRepr")]
pub struct Multivector {
    m: u8,
    terms: BTreeMap<Blade, Rational>,
}

impl Multivector {
    pub fn zero(m: u8) -> Multivector {
        Multivector {
            m,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(m: u8, value: Rational) -> Multivector {
        let mut out = Multivector::zero(m);
        out.add_term(Blade::SCALAR, value);
        out
    }

    pub fn one(m: u8) -> Multivector {
        Multivector::scalar(m, Rational::one())
    }

    /// Generator `e_j`, `1 <= j <= m`.
    pub fn generator(m: u8, j: usize) -> Result<Multivector> {
        Multivector::basis(m, &[j])
    }

    /// The product `e_{j1} e_{j2} ...` in the given order (indices need not
    /// be sorted or distinct).
    pub fn basis(m: u8, indices: &[usize]) -> Result<Multivector> {
        check_dimension(m as usize)?;
        let mut negative = false;
        let mut blade = Blade::SCALAR;
        for &j in indices {
            if j == 0 || j > m as usize {
                return Err(Error::GeneratorOutOfRange { index: j, m });
            }
            let (neg, b) = blade.product(Blade::generator(j));
            negative ^= neg;
            blade = b;
        }
        let coef = if negative { -Rational::one() } else { Rational::one() };
        let mut out = Multivector::zero(m);
        out.add_term(blade, coef);
        Ok(out)
    }

    pub fn from_terms<I>(m: u8, terms: I) -> Result<Multivector>
    where
        I: IntoIterator<Item = (Blade, Rational)>,
    {
        check_dimension(m as usize)?;
        let mut out = Multivector::zero(m);
        for (blade, coef) in terms {
            if !blade.fits(m) {
                return Err(Error::GeneratorOutOfRange {
                    index: 32 - blade.mask().leading_zeros() as usize,
                    m,
                });
            }
            out.add_term(blade, coef);
        }
        Ok(out)
    }

    pub fn m(&self) -> u8 {
        self.m
    }

    pub fn terms(&self) -> impl Iterator<Item = (Blade, &Rational)> + '_ {
        self.terms.iter().map(|(b, c)| (*b, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, blade: Blade) -> Rational {
        self.terms.get(&blade).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scalar_part(&self) -> Rational {
        self.coefficient(Blade::SCALAR)
    }

    pub fn is_scalar(&self) -> bool {
        self.terms.keys().all(|b| *b == Blade::SCALAR)
    }

    pub(crate) fn add_term(&mut self, blade: Blade, coef: Rational) {
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(blade) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coef);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coef;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, factor: &Rational) -> Multivector {
        if factor.is_zero() {
            return Multivector::zero(self.m);
        }
        Multivector {
            m: self.m,
            terms: self
                .terms
                .iter()
                .map(|(b, c)| (*b, c * factor))
                .collect(),
        }
    }

    fn same_dim(&self, other: &Multivector) -> Result<()> {
        if self.m == other.m {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.m,
                right: other.m,
            })
        }
    }

    /// Bilinear extension of the blade product.
    pub fn geometric_product(&self, other: &Multivector) -> Result<Multivector> {
        self.same_dim(other)?;
        let mut out = Multivector::zero(self.m);
        for (ba, ca) in &self.terms {
            for (bb, cb) in &other.terms {
                let (negative, blade) = ba.product(*bb);
                let coef = ca * cb;
                out.add_term(blade, if negative { -coef } else { coef });
            }
        }
        Ok(out)
    }

    /// Left product by a single blade with a coefficient.
    pub(crate) fn lmul_blade(&self, blade: Blade, coef: &Rational) -> Multivector {
        let mut out = Multivector::zero(self.m);
        for (b, c) in &self.terms {
            let (negative, prod) = blade.product(*b);
            let value = coef * c;
            out.add_term(prod, if negative { -value } else { value });
        }
        out
    }

    /// Right product by a single blade with a coefficient.
    pub(crate) fn rmul_blade(&self, blade: Blade, coef: &Rational) -> Multivector {
        let mut out = Multivector::zero(self.m);
        for (b, c) in &self.terms {
            let (negative, prod) = b.product(blade);
            let value = c * coef;
            out.add_term(prod, if negative { -value } else { value });
        }
        out
    }

    /// Clifford conjugation, the anti-involution with `bar(e_i) = -e_i`.
    pub fn conjugate(&self) -> Multivector {
        Multivector {
            m: self.m,
            terms: self
                .terms
                .iter()
                .map(|(b, c)| (*b, if b.conjugation_negates() { -c } else { c.clone() }))
                .collect(),
        }
    }

    /// `[a]_k`: keeps exactly the blades of grade `k`.
    pub fn grade_project(&self, k: usize) -> Result<Multivector> {
        if k > self.m as usize {
            return Err(Error::GradeOutOfRange { k, m: self.m });
        }
        Ok(Multivector {
            m: self.m,
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| b.grade() == k)
                .map(|(b, c)| (*b, c.clone()))
                .collect(),
        })
    }

    /// The single grade present, if the element is homogeneous. Zero counts
    /// as homogeneous of every grade and reports `None`.
    pub fn homogeneous_grade(&self) -> Option<usize> {
        let mut grades = self.terms.keys().map(|b| b.grade());
        let first = grades.next()?;
        grades.all(|g| g == first).then_some(first)
    }

    /// `||a||^2 = [a bar(a)]_0 = sum_A a_A^2`.
    pub fn norm_sq(&self) -> Rational {
        self.terms
            .values()
            .fold(Rational::zero(), |acc, c| acc + c * c)
    }

    /// Inner and outer product of a 1-vector `v` with a `k`-vector `f`:
    /// `(1/2)[v f - (-1)^k f v]` and `(1/2)[v f + (-1)^k f v]`.
    pub fn inner_outer(v: &Multivector, f: &Multivector) -> Result<(Multivector, Multivector)> {
        v.same_dim(f)?;
        if !v.is_zero() && v.homogeneous_grade() != Some(1) {
            return Err(Error::NotHomogeneous {
                expected: "1-vector".into(),
            });
        }
        let k = match f.homogeneous_grade() {
            Some(k) => k,
            None if f.is_zero() => 0,
            None => {
                return Err(Error::NotHomogeneous {
                    expected: "k-vector".into(),
                })
            }
        };
        let vf = v.geometric_product(f)?;
        let fv = f.geometric_product(v)?;
        let signed_fv = if k % 2 == 0 { fv } else { -fv };
        let half = rational::frac(1, 2);
        let inner = (&vf - &signed_fv).scale(&half);
        let outer = (&vf + &signed_fv).scale(&half);
        Ok((inner, outer))
    }

    /// `e_1 a e_1`.
    pub fn e1_sandwich(&self) -> Multivector {
        let e1 = Blade::generator(1);
        let one = Rational::one();
        self.lmul_blade(e1, &one).rmul_blade(e1, &one)
    }

    /// Coefficient-wise map over blades with a sign: used for involutions.
    pub(crate) fn map_signs(&self, negate: impl Fn(Blade) -> bool) -> Multivector {
        Multivector {
            m: self.m,
            terms: self
                .terms
                .iter()
                .map(|(b, c)| (*b, if negate(*b) { -c } else { c.clone() }))
                .collect(),
        }
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (blade, coef)) in self.terms.iter().enumerate() {
            let negative = coef.is_negative();
            let mag = coef.abs();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if *blade == Blade::SCALAR {
                write!(f, "{}", rational::display(&mag))?;
            } else if mag.is_one() {
                write!(f, "{blade}")?;
            } else {
                write!(f, "{}*{blade}", rational::display(&mag))?;
            }
        }
        Ok(())
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.map_signs(|_| true)
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        -&self
    }
}

impl AddAssign<&Multivector> for Multivector {
    fn add_assign(&mut self, rhs: &Multivector) {
        assert_eq!(self.m, rhs.m, "multivector dimension mismatch");
        for (b, c) in &rhs.terms {
            self.add_term(*b, c.clone());
        }
    }
}

impl SubAssign<&Multivector> for Multivector {
    fn sub_assign(&mut self, rhs: &Multivector) {
        assert_eq!(self.m, rhs.m, "multivector dimension mismatch");
        for (b, c) in &rhs.terms {
            self.add_term(*b, -c);
        }
    }
}

impl Add for &Multivector {
    type Output = Multivector;
    fn add(self, rhs: &Multivector) -> Multivector {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &Multivector) -> Multivector {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for Multivector {
    type Output = Multivector;
    fn add(mut self, rhs: Multivector) -> Multivector {
        self += &rhs;
        self
    }
}

impl Sub for Multivector {
    type Output = Multivector;
    fn sub(mut self, rhs: Multivector) -> Multivector {
        self -= &rhs;
        self
    }
}

/// Geometric product. Panics on a dimension mismatch; use
/// [`Multivector::geometric_product`] for the checked form.
impl Mul for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: &Multivector) -> Multivector {
        self.geometric_product(rhs)
            .expect("multivector dimension mismatch")
    }
}

impl Mul for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: Multivector) -> Multivector {
        &self * &rhs
    }
}

#[derive(Serialize, Deserialize)]
struct MultivectorRepr {
    m: usize,
    terms: Vec<BladeTermRepr>,
}

#[derive(Serialize, Deserialize)]
struct BladeTermRepr {
    blades: Vec<usize>,
    coef: String,
}

impl From<Multivector> for MultivectorRepr {
    fn from(mv: Multivector) -> Self {
        MultivectorRepr {
            m: mv.m as usize,
            terms: mv
                .terms
                .iter()
                .map(|(b, c)| BladeTermRepr {
                    blades: b.indices(),
                    coef: rational::to_fraction_string(c),
                })
                .collect(),
        }
    }
}

impl TryFrom<MultivectorRepr> for Multivector {
    type Error = Error;

    fn try_from(repr: MultivectorRepr) -> Result<Self> {
        let m = check_dimension(repr.m)?;
        let mut out = Multivector::zero(m);
        for term in repr.terms {
            if term.blades.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Parse(format!(
                    "blade indices must be strictly ascending: {:?}",
                    term.blades
                )));
            }
            let mut mask = 0u32;
            for j in &term.blades {
                if *j == 0 || *j > m as usize {
                    return Err(Error::GeneratorOutOfRange { index: *j, m });
                }
                mask |= 1 << (j - 1);
            }
            out.add_term(Blade(mask), rational::parse(&term.coef)?);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn e(m: u8, idx: &[usize]) -> Multivector {
        Multivector::basis(m, idx).unwrap()
    }

    #[test]
    fn generator_squares_to_minus_one() {
        assert_eq!(&e(3, &[1]) * &e(3, &[1]), Multivector::scalar(3, int(-1)));
    }

    #[test]
    fn generators_anticommute() {
        assert_eq!(&e(3, &[2]) * &e(3, &[1]), -e(3, &[1, 2]));
        assert_eq!(e(3, &[2, 1]), -e(3, &[1, 2]));
    }

    #[test]
    fn one_plus_e1_times_one_minus_e1() {
        let one = Multivector::one(2);
        let a = &one + &e(2, &[1]);
        let b = &one - &e(2, &[1]);
        assert_eq!(&a * &b, Multivector::scalar(2, int(2)));
    }

    #[test]
    fn conjugation_signs() {
        assert_eq!(e(3, &[1]).conjugate(), -e(3, &[1]));
        assert_eq!(e(3, &[1, 2]).conjugate(), -e(3, &[1, 2]));
        assert_eq!(e(3, &[1, 2, 3]).conjugate(), e(3, &[1, 2, 3]));
        let seven = Multivector::scalar(3, int(7));
        assert_eq!(seven.conjugate(), seven);
    }

    #[test]
    fn grade_projection() {
        let a = &Multivector::scalar(3, int(2)) + &e(3, &[1]).scale(&int(3));
        assert_eq!(a.grade_project(0).unwrap(), Multivector::scalar(3, int(2)));
        assert!(e(3, &[1, 2]).grade_project(1).unwrap().is_zero());
        assert!(matches!(
            a.grade_project(4),
            Err(Error::GradeOutOfRange { k: 4, m: 3 })
        ));
    }

    #[test]
    fn norms() {
        let a = &Multivector::one(3) + &e(3, &[1]);
        assert_eq!(a.norm_sq(), int(2));
        assert_eq!(Multivector::zero(3).norm_sq(), int(0));
        let tri = e(3, &[1, 2, 3]);
        assert_eq!(tri.norm_sq(), int(1));
        assert_eq!((&tri * &tri.conjugate()).scalar_part(), int(1));
    }

    #[test]
    fn inner_and_outer() {
        let (inner, outer) = Multivector::inner_outer(&e(4, &[2]), &e(4, &[2, 3])).unwrap();
        assert_eq!(inner, -e(4, &[3]));
        assert!(outer.is_zero());
        let (inner, outer) = Multivector::inner_outer(&e(4, &[4]), &e(4, &[2, 3])).unwrap();
        assert!(inner.is_zero());
        assert_eq!(outer, e(4, &[2, 3, 4]));
        let mixed = &Multivector::one(4) + &e(4, &[1]);
        assert!(Multivector::inner_outer(&mixed, &e(4, &[2])).is_err());
        assert!(Multivector::inner_outer(&e(4, &[2]), &mixed).is_err());
    }

    #[test]
    fn e1_sandwich_values() {
        assert_eq!(Multivector::one(3).e1_sandwich(), Multivector::scalar(3, int(-1)));
        assert_eq!(e(3, &[2]).e1_sandwich(), e(3, &[2]));
        assert_eq!(e(3, &[1]).e1_sandwich(), -e(3, &[1]));
    }

    #[test]
    fn dimension_checks() {
        assert!(e(3, &[1]).geometric_product(&e(4, &[1])).is_err());
        assert!(Multivector::generator(3, 4).is_err());
        assert!(Multivector::generator(3, 0).is_err());
        assert!(Multivector::basis(17, &[]).is_err());
        assert!(Multivector::from_terms(2, [(Blade::from_mask(4), int(1))]).is_err());
    }

    #[test]
    fn json_shape() {
        let a = &e(4, &[2, 3]).scale(&frac(-1, 2)) + &Multivector::scalar(4, int(3));
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(
            json,
            r#"{"m":4,"terms":[{"blades":[],"coef":"3/1"},{"blades":[2,3],"coef":"-1/2"}]}"#
        );
        let back: Multivector = serde_json::from_str(&json).unwrap();
        assert_eq!(back, a);
        assert!(serde_json::from_str::<Multivector>(
            r#"{"m":4,"terms":[{"blades":[3,2],"coef":"1"}]}"#
        )
        .is_err());
        assert!(serde_json::from_str::<Multivector>(
            r#"{"m":4,"terms":[{"blades":[5],"coef":"1"}]}"#
        )
        .is_err());
    }

    #[test]
    fn display() {
        let a = &e(3, &[1, 2]).scale(&frac(-3, 2)) + &Multivector::one(3);
        assert_eq!(a.to_string(), "1 - 3/2*e1e2");
        assert_eq!(Multivector::zero(3).to_string(), "0");
    }
}

//! Polyharmonic seed bases by exact row reduction.
//!
//! `Delta^n` maps homogeneous polynomials of degree `d` to homogeneous
//! polynomials of degree `d - 2n`, so its kernel can be computed one degree at
//! a time from a small rational matrix in the monomial basis.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{CliffordPolynomial, Monomial, VarScope};
use crate::clifford::{Blade, Multivector};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// All monomials of total degree `d` in `vars`, leading (largest in graded
/// lex order) first.
pub fn homogeneous_monomials(vars: &[usize], d: u32) -> Vec<Monomial> {
    fn go(vars: &[usize], d: u32, prefix: &mut Vec<(usize, u32)>, out: &mut Vec<Monomial>) {
        match vars {
            [] => {
                if d == 0 {
                    out.push(Monomial::from_exponents(prefix.iter().copied()));
                }
            }
            [last] => {
                prefix.push((*last, d));
                out.push(Monomial::from_exponents(prefix.iter().copied()));
                prefix.pop();
            }
            [first, rest @ ..] => {
                for e in (0..=d).rev() {
                    prefix.push((*first, e));
                    go(rest, d - e, prefix, out);
                    prefix.pop();
                }
            }
        }
    }
    let mut sorted = vars.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut out = Vec::new();
    go(&sorted, d, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// In-place reduced row echelon form; returns pivot columns.
fn rref(rows: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Rational::one() / &rows[r][c];
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    *v -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of the kernel of `Delta^n` (Laplacian over `yvars`) on homogeneous
/// scalar polynomials of degree `d` in `yvars`, each multiplied by `pattern`.
///
/// The basis is read off the reduced row echelon form of the `Delta^n` matrix
/// over graded-lex ordered monomials, one vector per free column in column
/// order, so the result is deterministic.
pub fn polyharmonic_basis(
    m: u8,
    d: u32,
    n: usize,
    yvars: &[usize],
    pattern: &Multivector,
) -> Result<Vec<CliffordPolynomial>> {
    if n == 0 {
        return Err(Error::InvalidArgument("polyharmonic order must be >= 1".into()));
    }
    if pattern.m() != m {
        return Err(Error::DimensionMismatch {
            left: m,
            right: pattern.m(),
        });
    }
    if let Some(&var) = yvars.iter().find(|v| **v > m as usize) {
        return Err(Error::VariableOutOfRange { var, m });
    }
    let scope = VarScope::from_vars(yvars);
    let columns = homogeneous_monomials(yvars, d);
    let images: Vec<CliffordPolynomial> = columns
        .iter()
        .map(|mono| {
            CliffordPolynomial::term(mono.clone(), Multivector::one(m), scope)
                .map(|p| p.laplacian_pow(yvars, n))
        })
        .collect::<Result<_>>()?;

    let mut row_index: BTreeMap<Monomial, usize> = BTreeMap::new();
    for img in &images {
        for (mono, _) in img.terms() {
            let next = row_index.len();
            row_index.entry(mono.clone()).or_insert(next);
        }
    }
    let mut rows = vec![vec![Rational::zero(); columns.len()]; row_index.len()];
    for (c, img) in images.iter().enumerate() {
        for (mono, coef) in img.terms() {
            rows[row_index[mono]][c] = coef.scalar_part();
        }
    }
    let pivots = rref(&mut rows, columns.len());

    let mut basis = Vec::new();
    for free in (0..columns.len()).filter(|c| !pivots.contains(c)) {
        let mut vector = vec![Rational::zero(); columns.len()];
        vector[free] = Rational::one();
        for (row, &pc) in pivots.iter().enumerate() {
            vector[pc] = -rows[row][free].clone();
        }
        let terms = columns
            .iter()
            .zip(vector)
            .filter(|(_, v)| !v.is_zero())
            .map(|(mono, v)| (mono.clone(), pattern.scale(&v)));
        let poly = CliffordPolynomial::from_terms(m, scope, terms)?;
        if !poly.is_zero() {
            basis.push(poly);
        }
    }
    Ok(basis)
}

/// Rank of a family of polynomials viewed as vectors over the real basis
/// `{x^a e_A}`.
pub fn rank(polys: &[CliffordPolynomial]) -> usize {
    let mut coord: BTreeMap<(Monomial, Blade), usize> = BTreeMap::new();
    for p in polys {
        for (mono, coef) in p.terms() {
            for (blade, _) in coef.terms() {
                let next = coord.len();
                coord.entry((mono.clone(), blade)).or_insert(next);
            }
        }
    }
    let mut rows: Vec<Vec<Rational>> = polys
        .iter()
        .map(|p| {
            let mut row = vec![Rational::zero(); coord.len()];
            for (mono, coef) in p.terms() {
                for (blade, c) in coef.terms() {
                    row[coord[&(mono.clone(), blade)]] = c.clone();
                }
            }
            row
        })
        .collect();
    rref(&mut rows, coord.len()).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_enumeration() {
        let mons = homogeneous_monomials(&[2, 3, 4], 2);
        assert_eq!(mons.len(), 6);
        assert_eq!(mons[0], Monomial::from_exponents([(2, 2)]));
        assert_eq!(homogeneous_monomials(&[2, 3], 0), vec![Monomial::one()]);
        assert_eq!(homogeneous_monomials(&[], 0), vec![Monomial::one()]);
        assert!(homogeneous_monomials(&[], 1).is_empty());
    }

    #[test]
    fn rref_identifies_pivots() {
        let q = |n: i64| Rational::from_integer(n.into());
        let mut rows = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(7)]];
        let pivots = rref(&mut rows, 3);
        assert_eq!(pivots, vec![0, 2]);
        assert_eq!(rows[0], vec![q(1), q(2), q(0)]);
    }

    #[test]
    fn zero_order_rejected() {
        assert!(polyharmonic_basis(4, 2, 0, &[2, 3, 4], &Multivector::one(4)).is_err());
    }
}

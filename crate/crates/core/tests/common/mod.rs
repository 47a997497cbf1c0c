//! Oracles shared by the integration tests. Nothing here calls into the
//! crate's own closed forms: matrix powers are multiplied out, coefficient
//! tables are transcribed by hand, and a second Clifford product works on
//! index lists instead of bit masks.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use steering_core::poly::{polyharmonic_basis, y_vars};
use steering_core::rational::frac;
use steering_core::{Blade, CliffordPolynomial, Multivector, Rational, Side};

/// Integer polynomial in `x`, lowest power first.
pub type SmallPoly = Vec<i128>;

fn small_add(a: &SmallPoly, b: &SmallPoly) -> SmallPoly {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(out)
}

fn small_mul(a: &SmallPoly, b: &SmallPoly) -> SmallPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn trim(mut p: SmallPoly) -> SmallPoly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

/// `[[0, x], [x, 2]]^n` by repeated multiplication.
pub fn brute_matrix_power(n: usize) -> [[SmallPoly; 2]; 2] {
    let base: [[SmallPoly; 2]; 2] = [[vec![], vec![0, 1]], [vec![0, 1], vec![2]]];
    let mut acc: [[SmallPoly; 2]; 2] = [[vec![1], vec![]], [vec![], vec![1]]];
    for _ in 0..n {
        let mut next: [[SmallPoly; 2]; 2] = Default::default();
        for (i, row) in next.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = small_add(&small_mul(&acc[i][0], &base[0][j]), &small_mul(&acc[i][1], &base[1][j]));
            }
        }
        acc = next;
    }
    acc
}

/// Weights `(power of d_y, coefficient)` of the `exp(z bar)` part of the
/// displayed left `n`-monogenic exponential solutions, `n = 1..=5`.
pub fn displayed_exp_b(n: usize) -> Weights {
    let all = [
        (1, frac(-1, 2)),
        (3, frac(1, 8)),
        (5, frac(-1, 16)),
        (7, frac(5, 128)),
        (9, frac(-7, 256)),
    ];
    assert!((1..=5).contains(&n), "no display for n = {n}");
    all[..n].to_vec()
}

/// `(power of d_y, weight)` pairs.
pub type Weights = Vec<(usize, Rational)>;

/// Displayed trigonometric weights for `n = 2..=4`: `A2` in terms of `B1`
/// and `B2` in terms of `A1`.
pub fn displayed_trig(n: usize) -> (Weights, Weights) {
    let a2 = match n {
        2 => vec![(1, frac(1, 2)), (3, frac(1, 8))],
        3 => vec![(1, frac(1, 2)), (3, frac(1, 8)), (5, frac(1, 16))],
        4 => vec![(1, frac(1, 2)), (3, frac(1, 8)), (5, frac(1, 16)), (7, frac(5, 128))],
        _ => panic!("no display for n = {n}"),
    };
    let b2 = a2.iter().map(|(p, w)| (*p, -w.clone())).collect();
    (a2, b2)
}

/// Displayed `z bar^k` coefficients of the power series solutions of order
/// three as `(seed index, power of d_y, weight)`. Lower orders keep the
/// entries with `d_y` power at most `2n - 1`.
pub fn displayed_power_b(k: usize) -> Vec<(usize, usize, Rational)> {
    match k {
        0 => panic!("B_0 does not exist"),
        1 => vec![(0, 1, frac(-1, 2))],
        2 => vec![(1, 1, frac(-1, 4))],
        3 => vec![(0, 3, frac(1, 48)), (2, 1, frac(-1, 6))],
        4 => vec![(1, 3, frac(1, 192)), (3, 1, frac(-1, 8))],
        _ => {
            let k = k as i64;
            vec![
                (k as usize - 5, 5, frac(-1, 16 * k * (k - 1) * (k - 2) * (k - 3) * (k - 4))),
                (k as usize - 3, 3, frac(1, 8 * k * (k - 1) * (k - 2))),
                (k as usize - 1, 1, frac(-1, 2 * k)),
            ]
        }
    }
}

/// `sum_w weight * d_y^power h` with `d_y` acting from the left.
pub fn dirac_combination(h: &CliffordPolynomial, weights: &[(usize, Rational)]) -> CliffordPolynomial {
    let mut out = CliffordPolynomial::zero(h.m(), h.scope());
    for (power, w) in weights {
        out += &h.dirac_y_pow(Side::Left, *power).scale(w);
    }
    out
}

/// Homogeneous `Delta^n` kernel seeds of every degree up to `max_degree`,
/// each multiplied by every pattern.
pub fn kernel_seeds(m: u8, n: usize, max_degree: u32, patterns: &[Multivector]) -> Vec<CliffordPolynomial> {
    let yv = y_vars(m);
    let mut out = Vec::new();
    for d in 0..=max_degree {
        for pattern in patterns {
            out.extend(polyharmonic_basis(m, d, n, &yv, pattern).unwrap());
        }
    }
    out
}

pub fn mv(m: u8, text: &str) -> Multivector {
    CliffordPolynomial::parse(m, text).unwrap().value_at_origin()
}

pub fn poly(m: u8, text: &str) -> CliffordPolynomial {
    CliffordPolynomial::parse(m, text).unwrap()
}

/// Multivector keyed by sorted generator index lists.
pub type ListMv = BTreeMap<Vec<usize>, BigRational>;

pub fn to_list(a: &Multivector) -> ListMv {
    a.terms().map(|(b, c)| (b.indices(), c.clone())).collect()
}

pub fn from_list(m: u8, a: &ListMv) -> Multivector {
    let terms = a.iter().map(|(idx, c)| {
        let mask = idx.iter().fold(0u32, |acc, j| acc | 1 << (j - 1));
        (Blade::from_mask(mask), c.clone())
    });
    Multivector::from_terms(m, terms).unwrap()
}

/// Reduces a word in the generators: bubble sort with a sign per swap, then
/// `e_j e_j = -1` for adjacent equal letters.
fn reduce_word(mut word: Vec<usize>) -> (bool, Vec<usize>) {
    let mut negative = false;
    for i in 0..word.len() {
        for j in 0..word.len() - 1 - i {
            if word[j] > word[j + 1] {
                word.swap(j, j + 1);
                negative = !negative;
            }
        }
    }
    let mut out: Vec<usize> = Vec::with_capacity(word.len());
    for g in word {
        if out.last() == Some(&g) {
            out.pop();
            negative = !negative;
        } else {
            out.push(g);
        }
    }
    (negative, out)
}

pub fn list_product(a: &ListMv, b: &ListMv) -> ListMv {
    let mut out = ListMv::new();
    for (ia, ca) in a {
        for (ib, cb) in b {
            let word: Vec<usize> = ia.iter().chain(ib.iter()).copied().collect();
            let (negative, blade) = reduce_word(word);
            let mut c = ca * cb;
            if negative {
                c = -c;
            }
            let slot = out.entry(blade).or_insert_with(BigRational::zero);
            *slot += c;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

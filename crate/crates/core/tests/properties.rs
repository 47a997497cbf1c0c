mod common;

use num_bigint::BigInt;
use proptest::prelude::*;

use common::{from_list, list_product, to_list};
use steering_core::poly::{polyharmonic_basis, rank, y_vars};
use steering_core::steering::{construct_eigen, construct_exp_left};
use steering_core::verify::{infrapoly_residual, n_monogenic_residual};
use steering_core::{
    Blade, CliffordPolynomial, Monomial, Multivector, Rational, Residual, Side, SteeringExpression, SteeringSymbol,
    VarScope,
};

fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

fn multivector_in(m: u8, max_terms: usize) -> impl Strategy<Value = Multivector> {
    prop::collection::vec((0u32..1 << m, -9i64..=9, 1i64..=4), 0..=max_terms).prop_map(move |terms| {
        Multivector::from_terms(m, terms.into_iter().map(|(mask, n, d)| (Blade::from_mask(mask), ratio(n, d))))
            .unwrap()
    })
}

fn triple() -> impl Strategy<Value = (Multivector, Multivector, Multivector)> {
    (2u8..=5).prop_flat_map(|m| (multivector_in(m, 6), multivector_in(m, 6), multivector_in(m, 6)))
}

fn pair() -> impl Strategy<Value = (Multivector, Multivector)> {
    (2u8..=5).prop_flat_map(|m| (multivector_in(m, 8), multivector_in(m, 8)))
}

fn paravector_pair() -> impl Strategy<Value = (Multivector, Multivector)> {
    let para = |m: u8| {
        prop::collection::vec(-9i64..=9, m as usize + 1).prop_map(move |c| {
            let terms = c
                .iter()
                .enumerate()
                .map(|(j, v)| (if j == 0 { Blade::SCALAR } else { Blade::generator(j) }, ratio(*v, 1)));
            Multivector::from_terms(m, terms).unwrap()
        })
    };
    (2u8..=5).prop_flat_map(move |m| (para(m), para(m)))
}

/// Random polynomial in `vars` with at most four terms of degree <= 3 per
/// variable block.
fn poly_in(m: u8, vars: Vec<usize>) -> impl Strategy<Value = CliffordPolynomial> {
    let nv = vars.len();
    prop::collection::vec(
        (prop::collection::vec(0u32..=2, nv), multivector_in(m, 3)),
        1..=4,
    )
    .prop_map(move |terms| {
        let scope = VarScope::from_vars(&vars);
        let mut out = CliffordPolynomial::zero(m, scope);
        for (exps, coef) in terms {
            let mono = Monomial::from_exponents(vars.iter().copied().zip(exps));
            out += &CliffordPolynomial::term(mono, coef, scope).unwrap();
        }
        out
    })
}

fn full_poly() -> impl Strategy<Value = CliffordPolynomial> {
    (2u8..=4).prop_flat_map(|m| poly_in(m, (0..=m as usize).collect()))
}

fn y_poly_pair() -> impl Strategy<Value = (CliffordPolynomial, CliffordPolynomial)> {
    (2u8..=4).prop_flat_map(|m| (poly_in(m, y_vars(m)), poly_in(m, y_vars(m))))
}

fn all_vars(p: &CliffordPolynomial) -> Vec<usize> {
    (0..=p.m() as usize).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn product_agrees_with_word_reduction((a, b) in pair()) {
        let m = a.m();
        let want = from_list(m, &list_product(&to_list(&a), &to_list(&b)));
        prop_assert_eq!(a.geometric_product(&b).unwrap(), want);
    }

    #[test]
    fn product_is_associative((a, b, c) in triple()) {
        prop_assert_eq!((&a * &b) * c.clone(), &a * &(&b * &c));
    }

    #[test]
    fn conjugation_is_an_anti_involution((a, b) in pair()) {
        prop_assert_eq!((&a * &b).conjugate(), &b.conjugate() * &a.conjugate());
        prop_assert_eq!(a.conjugate().conjugate(), a);
    }

    #[test]
    fn norm_is_scalar_part_of_a_abar((a, _b) in pair()) {
        prop_assert_eq!((&a * &a.conjugate()).scalar_part(), a.norm_sq());
        prop_assert_eq!(a.conjugate().norm_sq(), a.norm_sq());
    }

    #[test]
    fn paravector_norm_is_multiplicative((x, y) in paravector_pair()) {
        prop_assert_eq!((&x * &y).norm_sq(), x.norm_sq() * y.norm_sq());
        prop_assert!((&x * &x.conjugate()).is_scalar());
    }

    #[test]
    fn laplacian_factors_through_cauchy_riemann(p in full_poly()) {
        let vars = all_vars(&p);
        let lap = p.laplacian(&vars);
        for side in [Side::Left, Side::Right] {
            prop_assert_eq!(p.cr_bar_apply(side).cr_apply(side), lap.clone());
            prop_assert_eq!(p.cr_apply(side).cr_bar_apply(side), lap.clone());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn dirac_squares_to_minus_laplacian(p in full_poly()) {
        let space: Vec<usize> = (1..=p.m() as usize).collect();
        for side in [Side::Left, Side::Right] {
            prop_assert_eq!(p.dirac_x(side).dirac_x(side), -p.laplacian(&space));
        }
    }

    #[test]
    fn left_and_right_operators_commute(p in full_poly()) {
        prop_assert_eq!(p.cr_apply(Side::Left).cr_apply(Side::Right), p.cr_apply(Side::Right).cr_apply(Side::Left));
    }

    #[test]
    fn infrapoly_order_does_not_matter(p in full_poly(), l in 0usize..=2, r in 0usize..=2) {
        let mut interleaved = p.clone();
        for _ in 0..r {
            interleaved = interleaved.cr_apply(Side::Right);
        }
        for _ in 0..l {
            interleaved = interleaved.cr_apply(Side::Left);
        }
        let report = infrapoly_residual(&p, l, r);
        match report.residual {
            Residual::Polynomial(residual) => prop_assert_eq!(residual, interleaved),
            other => prop_assert!(false, "unexpected residual {}", other),
        }
    }

    #[test]
    fn steering_calculus_matches_expansion((g, h) in y_poly_pair(), j in 0u32..=3, k in 0u32..=3) {
        let m = g.m();
        let f = SteeringExpression::from_terms(m, [
            (SteeringSymbol::power(j, false), g.clone()),
            (SteeringSymbol::power(k, true), h),
        ]).unwrap();
        let p = f.to_polynomial().unwrap();
        for side in [Side::Left, Side::Right] {
            prop_assert_eq!(f.cr(side).to_polynomial().unwrap(), p.cr_apply(side));
        }
        prop_assert_eq!(f.hypercomplex_d().to_polynomial().unwrap(), p.hypercomplex_d());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Solutions of order `n` solve every higher order as well, and adding a
    /// stray `exp(z bar)` term is always detected.
    #[test]
    fn ladder_and_perturbation(n in 1usize..=3, d in 0u32..=4, pick in 0usize..64, pattern in multivector_in(4, 3)) {
        prop_assume!(!pattern.is_zero());
        let basis = polyharmonic_basis(4, d, n, &y_vars(4), &pattern).unwrap();
        prop_assume!(!basis.is_empty());
        let h = &basis[pick % basis.len()];
        let f = construct_exp_left(h, n).unwrap();
        for order in n..=n + 1 {
            prop_assert!(n_monogenic_residual(&f, order, Side::Left).is_zero);
        }
        let stray = SteeringExpression::term(
            SteeringSymbol::exp(ratio(1, 1), true),
            CliffordPolynomial::constant(Multivector::generator(4, 2).unwrap(), VarScope::y_only(4)),
        ).unwrap();
        prop_assert!(!n_monogenic_residual(&(&f + &stray), n, Side::Left).is_zero);
    }

    #[test]
    fn eigenfunctions_for_random_rates(num in -6i64..=6, den in 1i64..=4, d in 0u32..=4, pick in 0usize..64, pattern in multivector_in(4, 3)) {
        prop_assume!(num != 0 && !pattern.is_zero());
        let r = ratio(num, den);
        let basis = polyharmonic_basis(4, d, 1, &y_vars(4), &pattern).unwrap();
        prop_assume!(!basis.is_empty());
        let f = construct_eigen(&r, &basis[pick % basis.len()]).unwrap();
        prop_assert_eq!(f.hypercomplex_d(), f.scale(&r));
        prop_assert!(f.cr_left().is_zero());
    }

    /// Kernel dimension is `#deg d - #deg (d - 2n)` because `Delta^n` maps
    /// onto the lower degree.
    #[test]
    fn basis_is_an_independent_kernel(m in 2u8..=5, n in 1usize..=3, d in 0u32..=6) {
        let yv = y_vars(m);
        let basis = polyharmonic_basis(m, d, n, &yv, &Multivector::one(m)).unwrap();
        for b in &basis {
            prop_assert!(b.laplacian_pow(&yv, n).is_zero());
            prop_assert_eq!(b.degree(), Some(d));
        }
        prop_assert_eq!(rank(&basis), basis.len());
        let count = |deg: i64| -> usize {
            if deg < 0 {
                return 0;
            }
            let k = yv.len() as u64;
            // C(deg + k - 1, k - 1)
            (1..k).fold(1u64, |acc, i| acc * (deg as u64 + i) / i) as usize
        };
        prop_assert_eq!(basis.len(), count(d as i64) - count(d as i64 - 2 * n as i64));
    }
}

#[test]
fn word_reduction_oracle_sanity() {
    let e = |j: usize| Multivector::generator(3, j).unwrap();
    assert_eq!(to_list(&(&e(1) * &e(1))), to_list(&Multivector::scalar(3, ratio(-1, 1))));
    let e12 = &e(1) * &e(2);
    let want = from_list(3, &list_product(&to_list(&e(2)), &to_list(&e(1))));
    assert_eq!(want, -e12);
}

mod common;

use common::poly;
use steering_core::rational::frac;
use steering_core::steering::{construct_two_sided, Family};
use steering_core::verify::n_monogenic_residual;
use steering_core::{CliffordPolynomial, Side, SteeringExpression, SteeringSymbol};

fn sandwich_sum_of_dirac(p: &CliffordPolynomial) -> CliffordPolynomial {
    let d = p.dirac_y(Side::Left);
    &d + &d.e1_sandwich()
}

/// Power series built with a constant term `A_0` and the usual
/// `B_1 = -1/2 (dM_0 + e1 dM_0 e1)`.
fn power_series_with_constant_term(a0: CliffordPolynomial, m0: &CliffordPolynomial) -> SteeringExpression {
    SteeringExpression::from_terms(
        4,
        [
            (SteeringSymbol::power(0, false), a0),
            (SteeringSymbol::power(1, true), sandwich_sum_of_dirac(m0).scale(&frac(-1, 2))),
        ],
    )
    .unwrap()
}

#[test]
fn bare_constant_term_is_not_two_sided() {
    let m0 = poly(4, "x2 + x3*e2e3");
    assert!(m0.dirac_y(Side::Right).is_zero());
    let f = power_series_with_constant_term(m0.clone(), &m0);
    // Right monogenicity survives; the left system breaks at the constant term.
    assert!(n_monogenic_residual(&f, 1, Side::Right).is_zero);
    assert!(!n_monogenic_residual(&f, 1, Side::Left).is_zero);
}

#[test]
fn sandwiched_constant_term_is_two_sided() {
    let m0 = poly(4, "x2 + x3*e2e3");
    let a0 = &m0 - &m0.e1_sandwich();
    let f = power_series_with_constant_term(a0, &m0);
    for side in [Side::Left, Side::Right] {
        assert!(n_monogenic_residual(&f, 1, side).is_zero);
    }
    assert_eq!(construct_two_sided(Family::Power, &[m0]).unwrap(), f);
}

#[test]
fn constant_term_keeps_the_b1_relation() {
    // B_1 = -1/2 d A_0 holds for A_0 = M_0 - e1 M_0 e1.
    let m0 = poly(4, "x2 + x3*e2e3 + 3*(x3 + x4*e3e4)");
    assert!(m0.dirac_y(Side::Right).is_zero());
    let f = construct_two_sided(Family::Power, std::slice::from_ref(&m0)).unwrap();
    let a0 = f.coefficient(&SteeringSymbol::power(0, false));
    let b1 = f.coefficient(&SteeringSymbol::power(1, true));
    assert_eq!(b1, a0.dirac_y(Side::Left).scale(&frac(-1, 2)));
}

//! Steering expressions `sum phi(z) G(y)` and the constructors built on them.
//!
//! Here `z = x0 + x1 e1` and `y = (x2, .., xm)`. The symbol family
//! `z^j exp(rate z)`, `cos(rate z)`, `sin(rate z)` and their `z bar`
//! counterparts is closed under `d/dz` and conjugation, so the
//! Cauchy-Riemann operators and the hypercomplex derivative map steering
//! expressions to steering expressions.

mod coeffs;
mod construct;
mod dsolve;
mod expr;
mod symbol;

pub use coeffs::{ck_table, odd_dirac_series, tn_apply, tn_closed_form, CoefficientTable, IntPoly, TnMatrix};
pub use construct::{
    alternates_from_positive, construct_eigen, construct_exp_left, construct_inframonogenic, construct_lame_universal,
    construct_power_left,
    construct_trig_left, construct_two_sided, power_weight, trig_weights, Family,
};
pub use dsolve::{apply_operator_polynomial, dsolve, rational_roots, root_multiplicity, DSolveSpec, RootSpec};
pub use expr::SteeringExpression;
pub use symbol::{Axis, SteeringSymbol, SymbolClass};

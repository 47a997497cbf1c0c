//! Exact symbolic engine for steering-type solutions of higher order
//! Cauchy-Riemann systems in `R^{m+1}`.
//!
//! The crate is layered bottom-up:
//!
//! * [`clifford`]: exact arithmetic in the real Clifford algebra `R_{0,m}`.
//! * [`poly`]: polynomials in the commuting variables `x_0..x_m` with
//!   multivector coefficients, plus the Dirac, Cauchy-Riemann and Laplace
//!   operators acting on them.
//! * [`steering`]: finite sums `sum phi(z) G(y)` where `phi` ranges over a
//!   family closed under conjugation and `d/dz`, the operators acting on them
//!   and the constructors for polymonogenic and related solutions.
//! * [`verify`]: residuals of every differential system, computed by literally
//!   applying the operators.
//! * [`appell`]: the generalized Appell sequence with Pochhammer coefficients.
//! * [`suite`]: the batch of named verification cases used by the CLI.
//!
//! Everything is exact: coefficients are arbitrary precision rationals and a
//! residual is zero only when its term map is empty.

pub mod appell;
pub mod clifford;
pub mod error;
pub mod poly;
pub mod rational;
pub mod steering;
pub mod suite;
pub mod verify;

pub use clifford::{Blade, Multivector};
pub use error::{Error, Result};
pub use poly::{CliffordPolynomial, Monomial, Side, VarScope};
pub use rational::Rational;
pub use steering::{
    CoefficientTable, DSolveSpec, IntPoly, RootSpec, SteeringExpression, SteeringSymbol,
    SymbolClass,
};
pub use verify::{CrField, Residual, ResidualReport};

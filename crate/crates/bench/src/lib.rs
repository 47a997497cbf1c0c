//! Fixtures shared by the benchmarks.

use steering_core::poly::{polyharmonic_basis, y_vars};
use steering_core::{CliffordPolynomial, Multivector, Result};

/// Every scalar `Delta_y^n`-kernel basis polynomial of degree `<= max_degree`
/// in dimension `m`.
pub fn kernel_seeds(m: u8, n: usize, max_degree: u32) -> Result<Vec<CliffordPolynomial>> {
    let yv = y_vars(m);
    let one = Multivector::one(m);
    let mut out = Vec::new();
    for d in 0..=max_degree {
        out.extend(polyharmonic_basis(m, d, n, &yv, &one)?);
    }
    Ok(out)
}

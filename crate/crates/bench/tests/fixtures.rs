use steering_bench::kernel_seeds;
use steering_core::poly::y_vars;

#[test]
fn seeds_are_polyharmonic_and_counted() {
    // three y variables: 1 + 3 + (6 - 1) + (10 - 3) harmonic polynomials up to degree 3
    let harmonic = kernel_seeds(4, 1, 3).unwrap();
    assert_eq!(harmonic.len(), 16);
    let yv = y_vars(4);
    for n in 1..=3 {
        for seed in kernel_seeds(4, n, 4).unwrap() {
            assert!(seed.laplacian_pow(&yv, n).is_zero());
        }
    }
}

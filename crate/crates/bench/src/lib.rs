//! Shared fixtures for the benchmark targets.

use num_rational::BigRational;
use onescale::scalar::parse_rational;
use onescale::series::SeedSeries;

/// The slightly nonlinear base-3 float seed used in the figure curves.
pub fn fig1_seed() -> SeedSeries<f64> {
    SeedSeries::polynomial(3, vec![3.0, 0.24, 0.0192]).expect("valid seed")
}

/// The exact two-coefficient seed whose expansion is the binomial family.
pub fn binomial_seed(d2: &str) -> SeedSeries<BigRational> {
    let coeffs = vec![parse_rational("2").unwrap(), parse_rational(d2).unwrap()];
    SeedSeries::polynomial(2, coeffs).expect("valid seed")
}

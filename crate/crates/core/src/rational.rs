//! Exact fractions for bounds and chromatic values.
//!
//! Every ratio in this crate is a `Rational`: reduced, positive
//! denominator, totally ordered. Floats never appear.

use num_rational::Ratio;

pub type Rational = Ratio<i64>;

/// `n / d` in lowest terms. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Ratio::new(n, d)
}

pub fn integer(n: i64) -> Rational {
    Ratio::from_integer(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_and_ordered() {
        assert_eq!(ratio(14, 4), ratio(7, 2));
        assert_eq!(ratio(7, 2).to_string(), "7/2");
        assert_eq!(integer(4).to_string(), "4");
        assert!(ratio(10, 3) < ratio(7, 2));
        assert!(ratio(7, 2) < integer(4));
    }
}

//! Exact sparse multivariate polynomial and rational-function arithmetic over
//! arbitrary-precision rationals, plus truncated power series and the
//! canonical text format.

mod gcd;
mod monomial;
mod parse;
mod poly;
mod ratfunc;
mod series;
mod var;

pub use gcd::{gcd_inner, normalize_primitive, poly_gcd, GcdError};
pub use monomial::Monomial;
pub use parse::{parse_poly, parse_ratfunc, ParseError};
pub use poly::{EvalError, Poly};
pub use ratfunc::{poly_substitute, ratfunc_eq, ratfunc_from_factored, RatFunc};
pub use series::{SeriesError, TruncatedSeries};
pub use var::Var;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

use num_traits::One;

/// Shorthand for an integer as a `BigRational`.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for `n/d` as a `BigRational`.
pub fn rat_frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Binomial coefficient over big integers; 0 outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    use num_traits::Zero;
    if k < 0 || k > n || n < 0 {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Factorial over big integers.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(4, 5), BigInt::from(0));
        assert_eq!(binomial(0, 0), BigInt::from(1));
        assert_eq!(binomial(10, 3), BigInt::from(120));
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
    }
}

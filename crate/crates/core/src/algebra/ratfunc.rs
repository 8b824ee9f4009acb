//! Rational functions: quotients of sparse polynomials.

use super::gcd::gcd_inner;
use super::poly::{EvalError, Poly};
use super::var::Var;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;
use std::fmt;

/// A quotient of polynomials. The denominator is nonzero, has coefficient
/// content 1 and a positive first (canonically smallest) coefficient.
///
/// Reduction to lowest terms is attempted after every operation but is an
/// optimization, not an invariant: equality is decided by cross-multiplication.
#[derive(Clone)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Build `num / den`. Panics when `den` is the zero polynomial.
    pub fn new(num: Poly, den: Poly) -> RatFunc {
        assert!(!den.is_zero(), "zero denominator");
        let mut rf = RatFunc { num, den };
        rf.reduce();
        rf
    }

    pub fn zero() -> RatFunc {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> RatFunc {
        RatFunc {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    pub fn int(n: i64) -> RatFunc {
        RatFunc {
            num: Poly::int(n),
            den: Poly::one(),
        }
    }

    pub fn constant(c: BigRational) -> RatFunc {
        RatFunc {
            num: Poly::constant(c),
            den: Poly::one(),
        }
    }

    pub fn var(v: Var) -> RatFunc {
        RatFunc {
            num: Poly::var(v),
            den: Poly::one(),
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    /// `Some(c)` when the value is a constant rational.
    pub fn as_constant(&self) -> Option<BigRational> {
        match (self.num.as_constant(), self.den.as_constant()) {
            (Some(n), Some(d)) => Some(n / d),
            _ => None,
        }
    }

    /// `Some(p)` when the denominator is 1 after reduction.
    pub fn as_poly(&self) -> Option<&Poly> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.num = Poly::zero();
            self.den = Poly::one();
            return;
        }
        // Cancel common monomial content.
        let mg = self.num.monomial_content().gcd(&self.den.monomial_content());
        if !mg.is_one() {
            self.num = self.num.div_monomial(&mg);
            self.den = self.den.div_monomial(&mg);
        }
        if let Some(c) = self.den.as_constant() {
            self.num = self.num.mul_scalar(&(BigRational::one() / c));
            self.den = Poly::one();
            return;
        }
        if self.num.as_constant().is_none() {
            if let Some(q) = self.num.exact_div(&self.den) {
                self.num = q;
                self.den = Poly::one();
                return;
            }
            let g = gcd_inner(&self.num, &self.den);
            if g.as_constant().is_none() {
                self.num = self.num.exact_div(&g).expect("gcd divides numerator");
                self.den = self.den.exact_div(&g).expect("gcd divides denominator");
            }
        }
        // Canonical scaling: denominator content 1, first coefficient positive.
        let mut c = self.den.content();
        if self.den.min_term().unwrap().1.is_negative() {
            c = -c;
        }
        let inv = BigRational::one() / c;
        self.num = self.num.mul_scalar(&inv);
        self.den = self.den.mul_scalar(&inv);
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        // Merge through the denominator gcd to curb growth.
        let g = if self.den.is_one() || other.den.is_one() {
            Poly::one()
        } else {
            gcd_inner(&self.den, &other.den)
        };
        let (d1, d2) = if g.is_one() {
            (self.den.clone(), other.den.clone())
        } else {
            (
                self.den.exact_div(&g).expect("gcd divides"),
                other.den.exact_div(&g).expect("gcd divides"),
            )
        };
        let num = self.num.mul(&d2).add(&other.num.mul(&d1));
        let den = self.den.mul(&d2);
        RatFunc::new(num, den)
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero();
        }
        RatFunc::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    /// Reciprocal. Panics on zero.
    pub fn inv(&self) -> RatFunc {
        assert!(!self.is_zero(), "inverse of zero");
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &RatFunc) -> RatFunc {
        assert!(!other.is_zero(), "division by zero");
        RatFunc::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn pow(&self, e: i64) -> RatFunc {
        if e == 0 {
            return RatFunc::one();
        }
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut result = RatFunc {
            num: base.num.pow(e.unsigned_abs() as u32),
            den: base.den.pow(e.unsigned_abs() as u32),
        };
        result.reduce();
        result
    }

    pub fn evaluate(&self, bindings: &HashMap<Var, BigRational>) -> Result<BigRational, EvalError> {
        let den = self.den.eval(bindings)?;
        if den.is_zero() {
            return Err(EvalError::DivisionByZero);
        }
        Ok(self.num.eval(bindings)? / den)
    }

    /// Replace a variable by a rational function.
    pub fn substitute(&self, v: Var, replacement: &RatFunc) -> RatFunc {
        let num = poly_substitute(&self.num, v, replacement);
        let den = poly_substitute(&self.den, v, replacement);
        num.div(&den)
    }

    /// Decompose as `c * m` when the value is a single monomial times a
    /// rational (denominator 1 and exactly one term).
    pub fn as_monomial(&self) -> Option<(super::monomial::Monomial, BigRational)> {
        if !self.den.is_one() || self.num.num_terms() != 1 {
            return None;
        }
        let (m, c) = &self.num.terms()[0];
        Some((m.clone(), c.clone()))
    }
}

/// Substitute a rational function for a variable of a polynomial.
pub fn poly_substitute(p: &Poly, v: Var, replacement: &RatFunc) -> RatFunc {
    let coeffs = p.coeffs_in(v);
    // Horner evaluation over the fraction field.
    let mut acc = RatFunc::zero();
    for c in coeffs.iter().rev() {
        acc = acc.mul(replacement).add(&RatFunc::from(c.clone()));
    }
    acc
}

impl PartialEq for RatFunc {
    /// Cross-multiplied equality; structural equality is a fast path.
    fn eq(&self, other: &Self) -> bool {
        if self.num == other.num && self.den == other.den {
            return true;
        }
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Eq for RatFunc {}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> RatFunc {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }
}

impl From<BigRational> for RatFunc {
    fn from(c: BigRational) -> RatFunc {
        RatFunc::constant(c)
    }
}

impl From<i64> for RatFunc {
    fn from(n: i64) -> RatFunc {
        RatFunc::int(n)
    }
}

impl From<BigInt> for RatFunc {
    fn from(n: BigInt) -> RatFunc {
        RatFunc::constant(BigRational::from_integer(n))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The equality primitive: true iff `x.num * y.den = y.num * x.den`.
pub fn ratfunc_eq(x: &RatFunc, y: &RatFunc) -> bool {
    x == y
}

/// Build a quotient from a numerator and a list of denominator factors,
/// cancelling each factor by exact division when possible. Cheaper than a
/// full gcd when the factors are known individually.
pub fn ratfunc_from_factored(num: Poly, den_factors: &[Poly]) -> RatFunc {
    let mut num = num;
    let mut den = Poly::one();
    for f in den_factors {
        assert!(!f.is_zero(), "zero denominator factor");
        match num.exact_div(f) {
            Some(q) => num = q,
            None => den = den.mul(f),
        }
    }
    RatFunc::new(num, den)
}

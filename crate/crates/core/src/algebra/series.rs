//! Truncated power series with rational-function coefficients.

use super::ratfunc::RatFunc;
use super::var::Var;
use std::fmt;

/// A power series in one formal variable, truncated at a fixed order: terms
/// of degree >= `order` are discarded. `coeffs.len() == order` always holds,
/// and arithmetic never extends the order (results use the minimum).
#[derive(Clone, PartialEq)]
pub struct TruncatedSeries {
    var: Var,
    coeffs: Vec<RatFunc>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeriesError {
    ZeroConstantTerm,
    OrderMismatchVariable,
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::ZeroConstantTerm => {
                f.write_str("series has zero constant term and cannot be inverted")
            }
            SeriesError::OrderMismatchVariable => {
                f.write_str("series use different formal variables")
            }
        }
    }
}

impl std::error::Error for SeriesError {}

impl TruncatedSeries {
    pub fn zero(var: Var, order: usize) -> TruncatedSeries {
        TruncatedSeries {
            var,
            coeffs: vec![RatFunc::zero(); order],
        }
    }

    pub fn one(var: Var, order: usize) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(var, order);
        if order > 0 {
            s.coeffs[0] = RatFunc::one();
        }
        s
    }

    pub fn from_coeffs(var: Var, coeffs: Vec<RatFunc>) -> TruncatedSeries {
        TruncatedSeries { var, coeffs }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, k: usize) -> RatFunc {
        self.coeffs.get(k).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> TruncatedSeries {
        let order = order.min(self.coeffs.len());
        TruncatedSeries {
            var: self.var,
            coeffs: self.coeffs[..order].to_vec(),
        }
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(other.order());
        let coeffs = (0..order)
            .map(|k| self.coeffs[k].add(&other.coeffs[k]))
            .collect();
        TruncatedSeries {
            var: self.var,
            coeffs,
        }
    }

    pub fn sub(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(other.order());
        let coeffs = (0..order)
            .map(|k| self.coeffs[k].sub(&other.coeffs[k]))
            .collect();
        TruncatedSeries {
            var: self.var,
            coeffs,
        }
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(other.order());
        let mut coeffs = vec![RatFunc::zero(); order];
        for (i, ci) in self.coeffs.iter().take(order).enumerate() {
            if ci.is_zero() {
                continue;
            }
            for (j, cj) in other.coeffs.iter().take(order - i).enumerate() {
                if cj.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&ci.mul(cj));
            }
        }
        TruncatedSeries {
            var: self.var,
            coeffs,
        }
    }

    pub fn scale(&self, c: &RatFunc) -> TruncatedSeries {
        TruncatedSeries {
            var: self.var,
            coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect(),
        }
    }

    /// Multiply by `var^k` (coefficients shift up; the tail is truncated).
    pub fn shift_up(&self, k: usize) -> TruncatedSeries {
        let order = self.order();
        let mut coeffs = vec![RatFunc::zero(); order];
        for i in 0..order.saturating_sub(k) {
            coeffs[i + k] = self.coeffs[i].clone();
        }
        TruncatedSeries {
            var: self.var,
            coeffs,
        }
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<TruncatedSeries, SeriesError> {
        let order = self.order();
        if order == 0 {
            return Ok(self.clone());
        }
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let c0_inv = c0.inv();
        let mut coeffs = vec![RatFunc::zero(); order];
        coeffs[0] = c0_inv.clone();
        for k in 1..order {
            let mut acc = RatFunc::zero();
            for i in 1..=k {
                if self.coeffs[i].is_zero() {
                    continue;
                }
                acc = acc.add(&self.coeffs[i].mul(&coeffs[k - i]));
            }
            coeffs[k] = acc.neg().mul(&c0_inv);
        }
        Ok(TruncatedSeries {
            var: self.var,
            coeffs,
        })
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if k == 0 {
                write!(f, "{c}")?;
            } else if k == 1 {
                write!(f, "({c})*{}", self.var)?;
            } else {
                write!(f, "({c})*{}^{k}", self.var)?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O({}^{})", self.var, self.order())
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> Var {
        Var::t()
    }

    #[test]
    fn geometric_series_inverse() {
        // 1/(1 - t) = 1 + t + t^2 + ...
        let mut s = TruncatedSeries::one(t(), 6);
        s = s.sub(&TruncatedSeries::one(t(), 6).shift_up(1));
        let inv = s.inverse().unwrap();
        for k in 0..6 {
            assert!(inv.coeff(k).is_one(), "coefficient {k}");
        }
        assert!(s.mul(&inv).coeff(0).is_one());
        assert!(s.mul(&inv).coeff(3).is_zero());
    }

    #[test]
    fn order_is_minimum() {
        let x = TruncatedSeries::one(t(), 8);
        let y = TruncatedSeries::one(t(), 5);
        assert_eq!(x.mul(&y).order(), 5);
        assert_eq!(x.add(&y).order(), 5);
    }

    #[test]
    fn inverse_needs_unit() {
        let s = TruncatedSeries::zero(t(), 4);
        assert_eq!(s.inverse(), Err(SeriesError::ZeroConstantTerm));
    }
}

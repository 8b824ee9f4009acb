//! Sparse multivariate polynomials over arbitrary-precision rationals.

use super::monomial::Monomial;
use super::var::Var;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeSet, HashMap};
use std::fmt;

/// A polynomial stored as a sorted term list (ascending graded-lex), with no
/// zero coefficients. Two polynomials are equal iff their term lists are.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: Vec<(Monomial, BigRational)>,
}

/// Errors from evaluating a polynomial or rational function at a point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EvalError {
    UnboundVariable(String),
    DivisionByZero,
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::UnboundVariable(name) => write!(f, "unbound variable {name}"),
            EvalError::DivisionByZero => write!(f, "denominator vanishes at the point"),
        }
    }
}

impl std::error::Error for EvalError {}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn one() -> Poly {
        Poly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: vec![(Monomial::one(), c)],
            }
        }
    }

    pub fn int(n: i64) -> Poly {
        Poly::constant(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn var(v: Var) -> Poly {
        Poly::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: u32) -> Poly {
        Poly::monomial(Monomial::var_pow(v, e), BigRational::one())
    }

    pub fn monomial(m: Monomial, c: BigRational) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    /// Build from arbitrary terms: sorts, merges duplicates, drops zeros.
    pub fn from_terms(terms: Vec<(Monomial, BigRational)>) -> Poly {
        let mut terms = terms;
        terms.sort_by(|x, y| x.0.cmp(&y.0));
        let mut out: Vec<(Monomial, BigRational)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Poly { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// `Some(c)` when the polynomial is a constant (including zero).
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 if self.terms[0].0.is_one() => Some(self.terms[0].1.clone()),
            _ => None,
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> &[(Monomial, BigRational)] {
        &self.terms
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        let mut set = BTreeSet::new();
        for (m, _) in &self.terms {
            set.extend(m.vars());
        }
        set
    }

    pub fn total_degree(&self) -> u64 {
        self.terms
            .iter()
            .map(|(m, _)| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_of(&self, v: Var) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.degree_of(v))
            .max()
            .unwrap_or(0)
    }

    /// The smallest term in the canonical order (the one printed first).
    pub fn min_term(&self) -> Option<&(Monomial, BigRational)> {
        self.terms.first()
    }

    /// The largest term in the canonical order.
    pub fn max_term(&self) -> Option<&(Monomial, BigRational)> {
        self.terms.last()
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out: Vec<(Monomial, BigRational)> =
            Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (m1, c1) = &self.terms[i];
            let (m2, c2) = &other.terms[j];
            match m1.cmp(m2) {
                std::cmp::Ordering::Less => {
                    out.push((m1.clone(), c1.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((m2.clone(), c2.clone()));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = c1 + c2;
                    if !c.is_zero() {
                        out.push((m1.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().cloned());
        Poly { terms: out }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul_scalar(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(n, k)| (n.mul(m), k * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_monomial(m, c);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_monomial(m, c);
        }
        if let Some(p) = self.mul_packed(other) {
            return p;
        }
        let mut acc: HashMap<Monomial, BigRational> =
            HashMap::with_capacity(self.terms.len() * other.terms.len() / 2 + 1);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                let c = c1 * c2;
                match acc.get_mut(&m) {
                    Some(slot) => *slot += c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let mut terms: Vec<(Monomial, BigRational)> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|x, y| x.0.cmp(&y.0));
        Poly { terms }
    }

    /// Multiplication fast path: when both operands live in at most four
    /// variables with small exponents, monomials pack into a `u64` key whose
    /// addition is monomial multiplication.
    fn mul_packed(&self, other: &Poly) -> Option<Poly> {
        let mut frame: Vec<Var> = Vec::with_capacity(4);
        for p in [self, other] {
            for (m, _) in &p.terms {
                for v in m.vars() {
                    if !frame.contains(&v) {
                        if frame.len() == 4 {
                            return None;
                        }
                        frame.push(v);
                    }
                }
            }
        }
        frame.sort();
        fn pack<'a>(p: &'a Poly, frame: &[Var]) -> Option<Vec<(u64, &'a BigRational)>> {
            p.terms
                .iter()
                .map(|(m, c)| {
                    let mut key = 0u64;
                    for (v, e) in m.exponents() {
                        if *e >= 1 << 15 {
                            return None;
                        }
                        let slot = frame.iter().position(|w| w == v).unwrap();
                        key |= (*e as u64) << (16 * slot);
                    }
                    Some((key, c))
                })
                .collect()
        }
        let lhs = pack(self, &frame)?;
        let rhs = pack(other, &frame)?;
        let mut acc: HashMap<u64, BigRational> =
            HashMap::with_capacity(lhs.len() * rhs.len() / 2 + 1);
        for (k1, c1) in &lhs {
            for (k2, c2) in &rhs {
                let k = k1 + k2;
                let c = *c1 * *c2;
                match acc.get_mut(&k) {
                    Some(slot) => *slot += c,
                    None => {
                        acc.insert(k, c);
                    }
                }
            }
        }
        let mut terms: Vec<(Monomial, BigRational)> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(key, c)| {
                let m = Monomial::from_pairs(
                    frame
                        .iter()
                        .enumerate()
                        .map(|(slot, &v)| (v, ((key >> (16 * slot)) & 0xffff) as u32)),
                );
                (m, c)
            })
            .collect();
        terms.sort_by(|x, y| x.0.cmp(&y.0));
        Some(Poly { terms })
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Exact division: `Some(q)` with `self = q * d` or `None` when `d` does
    /// not divide `self`. Division is driven by the largest term.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if let Some(c) = d.as_constant() {
            return Some(self.mul_scalar(&(BigRational::one() / c)));
        }
        let (dm, dc) = d.max_term().unwrap();
        let mut rem = self.clone();
        let mut quo: Vec<(Monomial, BigRational)> = Vec::new();
        while !rem.is_zero() {
            let (rm, rc) = rem.max_term().unwrap();
            let m = rm.try_div(dm)?;
            let c = rc / dc;
            rem = rem.sub(&d.mul_monomial(&m, &c));
            quo.push((m, c));
        }
        quo.reverse();
        Some(Poly { terms: quo })
    }

    /// Positive rational `c` such that `self / c` has coprime integer
    /// coefficients. Zero polynomial has content 1.
    pub fn content(&self) -> BigRational {
        if self.is_zero() {
            return BigRational::one();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for (_, c) in &self.terms {
            num_gcd = num_gcd.gcd(&c.numer().abs());
            den_lcm = den_lcm.lcm(c.denom());
        }
        BigRational::new(num_gcd, den_lcm)
    }

    /// Largest monomial dividing every term (1 for the zero polynomial).
    pub fn monomial_content(&self) -> Monomial {
        let mut iter = self.terms.iter();
        let mut g = match iter.next() {
            Some((m, _)) => m.clone(),
            None => return Monomial::one(),
        };
        for (m, _) in iter {
            if g.is_one() {
                break;
            }
            g = g.gcd(m);
        }
        g
    }

    pub fn div_monomial(&self, m: &Monomial) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(n, c)| {
                    (
                        n.try_div(m).expect("monomial does not divide every term"),
                        c.clone(),
                    )
                })
                .collect(),
        }
    }

    pub fn eval(&self, bindings: &HashMap<Var, BigRational>) -> Result<BigRational, EvalError> {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut value = c.clone();
            for &(v, e) in m.exponents() {
                let x = bindings
                    .get(&v)
                    .ok_or_else(|| EvalError::UnboundVariable(v.name().to_owned()))?;
                for _ in 0..e {
                    value *= x;
                }
            }
            total += value;
        }
        Ok(total)
    }

    /// Replace `v` by a polynomial.
    pub fn substitute(&self, v: Var, replacement: &Poly) -> Poly {
        let max_deg = self.degree_of(v);
        if max_deg == 0 {
            return self.clone();
        }
        let mut powers: Vec<Poly> = Vec::with_capacity(max_deg as usize + 1);
        powers.push(Poly::one());
        for k in 1..=max_deg {
            powers.push(powers[(k - 1) as usize].mul(replacement));
        }
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let e = m.degree_of(v);
            let rest = Monomial::from_pairs(
                m.exponents()
                    .iter()
                    .filter(|&&(w, _)| w != v)
                    .copied(),
            );
            out = out.add(&powers[e as usize].mul_monomial(&rest, c));
        }
        out
    }

    /// View as a univariate polynomial in `v`: coefficient of `v^k` at index `k`.
    pub fn coeffs_in(&self, v: Var) -> Vec<Poly> {
        let deg = self.degree_of(v) as usize;
        let mut out = vec![Poly::zero(); deg + 1];
        for (m, c) in &self.terms {
            let e = m.degree_of(v) as usize;
            let rest = Monomial::from_pairs(
                m.exponents()
                    .iter()
                    .filter(|&&(w, _)| w != v)
                    .copied(),
            );
            out[e] = out[e].add(&Poly::monomial(rest, c.clone()));
        }
        out
    }

    /// Reassemble from `coeffs_in` output.
    pub fn from_coeffs_in(v: Var, coeffs: &[Poly]) -> Poly {
        let mut out = Poly::zero();
        for (k, c) in coeffs.iter().enumerate() {
            out = out.add(&c.mul_monomial(&Monomial::var_pow(v, k as u32), &BigRational::one()));
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else if negative {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

//! q-Pochhammer and q-binomial primitives, the little q-Jacobi moment
//! sequence, and terminating (basic) hypergeometric evaluation.
//!
//! Square-root bases never appear explicitly: conjugate pairs `(x; q)_k
//! (-x; q)_k` are evaluated as `(x^2; q^2)_k`, which keeps every value inside
//! the rational function field of `q`, `a`, `b`.

use crate::algebra::{rat, BigInt, BigRational, Poly, RatFunc, Var};
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QSeriesError {
    NonTerminating,
    ZeroDenominatorFactor { index: usize },
    PoleInsideRange { k: usize },
}

impl fmt::Display for QSeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QSeriesError::NonTerminating => {
                f.write_str("no parameter forces the series to terminate")
            }
            QSeriesError::ZeroDenominatorFactor { index } => {
                write!(f, "denominator parameter {index} produces a zero factor")
            }
            QSeriesError::PoleInsideRange { k } => {
                write!(f, "denominator Pochhammer vanishes at term {k}")
            }
        }
    }
}

impl std::error::Error for QSeriesError {}

fn qvar() -> Poly {
    Poly::var(Var::q())
}

fn avar() -> Poly {
    Poly::var(Var::a())
}

fn bvar() -> Poly {
    Poly::var(Var::b())
}

/// `a*q^k` as a rational function.
pub fn aq_pow(k: u32) -> RatFunc {
    RatFunc::from(avar().mul(&qvar().pow(k)))
}

/// `b*q^k` as a rational function.
pub fn bq_pow(k: u32) -> RatFunc {
    RatFunc::from(bvar().mul(&qvar().pow(k)))
}

/// `a*b*q^k` as a rational function.
pub fn abq_pow(k: u32) -> RatFunc {
    RatFunc::from(avar().mul(&bvar()).mul(&qvar().pow(k)))
}

/// `q^k` as a rational function.
pub fn q_pow(k: u32) -> RatFunc {
    RatFunc::from(qvar().pow(k))
}

/// A q-shifted factorial `(x; step)_n` held unexpanded.
#[derive(Clone, Debug)]
pub struct QPochhammer {
    pub base: RatFunc,
    pub step: Poly,
    pub length: usize,
}

impl QPochhammer {
    pub fn new(base: RatFunc, length: usize) -> QPochhammer {
        QPochhammer {
            base,
            step: qvar(),
            length,
        }
    }

    pub fn with_step(base: RatFunc, step: Poly, length: usize) -> QPochhammer {
        QPochhammer { base, step, length }
    }

    /// Expand to the product `(1 - x)(1 - x s)...(1 - x s^{n-1})`.
    pub fn expand(&self) -> RatFunc {
        qpoch_step(&self.base, self.length, &self.step)
    }
}

/// `(x; q)_n` as an exact rational function.
pub fn qpoch(x: &RatFunc, n: usize) -> RatFunc {
    qpoch_step(x, n, &qvar())
}

/// `(x; s)_n` for an arbitrary polynomial step `s`.
pub fn qpoch_step(x: &RatFunc, n: usize, step: &Poly) -> RatFunc {
    let mut acc = RatFunc::one();
    let mut cur = x.clone();
    let step_rf = RatFunc::from(step.clone());
    for _ in 0..n {
        acc = acc.mul(&RatFunc::one().sub(&cur));
        cur = cur.mul(&step_rf);
    }
    acc
}

/// Gaussian binomial coefficient as a polynomial in `q`; zero outside
/// `0 <= k <= m`.
pub fn qbinom(m: i64, k: i64) -> Poly {
    if k < 0 || k > m || m < 0 {
        return Poly::zero();
    }
    let (m, k) = (m as usize, k as usize);
    // Pascal recurrence: [m, j] = [m-1, j-1] + q^j [m-1, j].
    let mut row: Vec<Poly> = vec![Poly::one()];
    for _ in 1..=m {
        let mut next: Vec<Poly> = Vec::with_capacity(row.len() + 1);
        next.push(Poly::one());
        for j in 1..row.len() {
            let shifted = row[j].mul(&qvar().pow(j as u32));
            next.push(row[j - 1].add(&shifted));
        }
        next.push(Poly::one());
        next.truncate(k + 1);
        row = next;
    }
    row.get(k).cloned().unwrap_or_else(Poly::one)
}

/// The moment `(aq; q)_n / (abq^2; q)_n` of the little q-Jacobi weight.
pub fn moment_mu(n: usize) -> RatFunc {
    qpoch(&aq_pow(1), n).div(&qpoch(&abq_pow(2), n))
}

/// Rising factorial `(x)_k = x (x+1) ... (x+k-1)`.
pub fn rising_factorial(x: &BigRational, k: usize) -> BigRational {
    let mut acc = BigRational::one();
    for i in 0..k {
        acc *= x + rat(i as i64);
    }
    acc
}

fn nonpositive_integer(x: &BigRational) -> Option<usize> {
    if !x.is_integer() || x.is_positive() {
        return None;
    }
    (-x.numer()).to_usize()
}

/// Terminating Gauss series `2F1(alpha, beta; gamma; x)` summed exactly.
/// One of `alpha`, `beta` must be a nonpositive integer.
pub fn f21_terminating(
    alpha: &BigRational,
    beta: &BigRational,
    gamma: &BigRational,
    x: &BigRational,
) -> Result<BigRational, QSeriesError> {
    let m = match (nonpositive_integer(alpha), nonpositive_integer(beta)) {
        (Some(p), Some(r)) => p.min(r),
        (Some(p), None) => p,
        (None, Some(r)) => r,
        (None, None) => return Err(QSeriesError::NonTerminating),
    };
    let mut total = BigRational::one();
    let mut term = BigRational::one();
    for k in 0..m {
        let kq = rat(k as i64);
        let den_factor = gamma + &kq;
        if den_factor.is_zero() {
            return Err(QSeriesError::PoleInsideRange { k: k + 1 });
        }
        term *= (alpha + &kq) * (beta + &kq) * x / ((rat(1) + &kq) * den_factor);
        total += &term;
    }
    Ok(total)
}

/// A parameter of a basic hypergeometric series.
#[derive(Clone, Debug)]
pub enum PhiParam {
    /// An ordinary base `x`, contributing `(x; q)_k`.
    Plain(RatFunc),
    /// The conjugate pair `±sqrt(x)`, contributing `(x; q^2)_k`.
    ConjugatePair(RatFunc),
}

impl PhiParam {
    fn factor_at(&self, k: usize) -> RatFunc {
        match self {
            PhiParam::Plain(x) => RatFunc::one().sub(&x.mul(&q_pow(k as u32))),
            PhiParam::ConjugatePair(x) => RatFunc::one().sub(&x.mul(&q_pow(2 * k as u32))),
        }
    }
}

/// A terminating basic hypergeometric series specification.
#[derive(Clone, Debug)]
pub struct HypSpec {
    pub numerator: Vec<PhiParam>,
    pub denominator: Vec<PhiParam>,
    pub argument: RatFunc,
    pub terminating_index: usize,
}

impl HypSpec {
    /// Build a spec, locating the terminating numerator parameter: a plain
    /// base equal to `q^{-m}` (or to 1, which terminates at 0).
    pub fn terminating(
        numerator: Vec<PhiParam>,
        denominator: Vec<PhiParam>,
        argument: RatFunc,
    ) -> Result<HypSpec, QSeriesError> {
        let mut m: Option<usize> = None;
        for p in &numerator {
            if let PhiParam::Plain(x) = p {
                if let Some(e) = negative_q_power(x) {
                    m = Some(m.map_or(e, |cur: usize| cur.min(e)));
                }
            }
        }
        match m {
            Some(terminating_index) => Ok(HypSpec {
                numerator,
                denominator,
                argument,
                terminating_index,
            }),
            None => Err(QSeriesError::NonTerminating),
        }
    }
}

/// `Some(m)` when `x = q^{-m}` exactly (including `m = 0` for `x = 1`).
fn negative_q_power(x: &RatFunc) -> Option<usize> {
    if !x.num().is_one() {
        return None;
    }
    let den = x.den();
    if den.num_terms() != 1 {
        return None;
    }
    let (m, c) = &den.terms()[0];
    if !c.is_one() {
        return None;
    }
    let exps = m.exponents();
    if exps.is_empty() {
        return Some(0);
    }
    if exps.len() == 1 && exps[0].0 == Var::q() {
        return Some(exps[0].1 as usize);
    }
    None
}

/// Sum a terminating basic hypergeometric series exactly:
/// `sum_k (numerator bases; q)_k / ((q; q)_k (denominator bases; q)_k) z^k`.
pub fn phi_terminating(spec: &HypSpec) -> Result<RatFunc, QSeriesError> {
    let m = spec.terminating_index;
    let mut total = RatFunc::one();
    let mut term = RatFunc::one();
    let mut z_pow = RatFunc::one();
    for k in 0..m {
        for p in &spec.numerator {
            term = term.mul(&p.factor_at(k));
        }
        let q_factor = RatFunc::one().sub(&q_pow(k as u32 + 1));
        term = term.div(&q_factor);
        for (index, p) in spec.denominator.iter().enumerate() {
            let f = p.factor_at(k);
            if f.is_zero() {
                return Err(QSeriesError::ZeroDenominatorFactor { index });
            }
            term = term.div(&f);
        }
        z_pow = z_pow.mul(&spec.argument);
        total = total.add(&term.mul(&z_pow));
    }
    Ok(total)
}

/// The very-well-poised ratio `(q sqrt(y), -q sqrt(y); q)_k / (sqrt(y),
/// -sqrt(y); q)_k` rationalized to `(1 - y q^{2k}) / (1 - y)`.
pub fn very_well_poised_factor(y: &RatFunc, k: usize) -> RatFunc {
    RatFunc::one()
        .sub(&y.mul(&q_pow(2 * k as u32)))
        .div(&RatFunc::one().sub(y))
}

/// Both sides of the terminating q-Dougall instance attached to the moments:
/// the finite sum on the left and `mu_{i+j} / (mu_i mu_j)` on the right.
pub fn q_dougall_sides(i: usize, j: usize) -> (RatFunc, RatFunc) {
    let abq = abq_pow(1);
    let m = i.min(j);
    let mut lhs = RatFunc::zero();
    // Running products of the k-indexed Pochhammer factors.
    let mut num_poch = RatFunc::one(); // (q, abq, bq; q)_k
    let mut den_poch = RatFunc::one(); // (aq, abq^{i+2}, abq^{j+2}; q)_k
    for k in 0..=m {
        if k > 0 {
            let kk = (k - 1) as u32;
            num_poch = num_poch
                .mul(&RatFunc::one().sub(&q_pow(kk + 1)))
                .mul(&RatFunc::one().sub(&abq_pow(kk + 1)))
                .mul(&RatFunc::one().sub(&bq_pow(kk + 1)));
            den_poch = den_poch
                .mul(&RatFunc::one().sub(&aq_pow(kk + 1)))
                .mul(&RatFunc::one().sub(&abq_pow(kk + 2 + i as u32)))
                .mul(&RatFunc::one().sub(&abq_pow(kk + 2 + j as u32)));
        }
        let a_q_power = RatFunc::from(avar().pow(k as u32).mul(&qvar().pow((k * k) as u32)));
        let term = a_q_power
            .mul(&RatFunc::from(qbinom(i as i64, k as i64)))
            .mul(&RatFunc::from(qbinom(j as i64, k as i64)))
            .mul(&num_poch)
            .mul(&very_well_poised_factor(&abq, k))
            .div(&den_poch);
        lhs = lhs.add(&term);
    }
    let rhs = moment_mu(i + j).div(&moment_mu(i).mul(&moment_mu(j)));
    (lhs, rhs)
}

/// The same q-Dougall instance assembled as a 6-phi-5 series through
/// [`phi_terminating`], with the square-root parameters as conjugate pairs.
pub fn q_dougall_phi65(i: usize, j: usize) -> Result<RatFunc, QSeriesError> {
    let abq = abq_pow(1);
    let abq3 = abq_pow(3);
    let spec = HypSpec::terminating(
        vec![
            PhiParam::Plain(abq.clone()),
            PhiParam::ConjugatePair(abq3),
            PhiParam::Plain(bq_pow(1)),
            PhiParam::Plain(q_pow(i as u32).inv()),
            PhiParam::Plain(q_pow(j as u32).inv()),
        ],
        vec![
            PhiParam::ConjugatePair(abq),
            PhiParam::Plain(aq_pow(1)),
            PhiParam::Plain(abq_pow(i as u32 + 2)),
            PhiParam::Plain(abq_pow(j as u32 + 2)),
        ],
        RatFunc::from(avar().mul(&qvar().pow((i + j + 1) as u32))),
    )?;
    phi_terminating(&spec)
}

/// Left and right sides of the 2F1 addition formula that LU-decomposes the
/// Motzkin Hankel matrix. The right side is the Motzkin number `M_{i+j}`.
pub fn addition_formula_sides(i: usize, j: usize) -> (BigRational, BigRational) {
    let motzkin_entry = |r: usize, k: usize| -> BigRational {
        // binom(r, k) * 2F1((k-r+1)/2, (k-r)/2; k+2; 4)
        let c = crate::algebra::binomial(r as i64, k as i64);
        if c.is_zero() {
            return BigRational::zero();
        }
        let alpha = BigRational::new(BigInt::from(k as i64 - r as i64 + 1), BigInt::from(2));
        let beta = BigRational::new(BigInt::from(k as i64 - r as i64), BigInt::from(2));
        let gamma = rat(k as i64 + 2);
        let f =
            f21_terminating(&alpha, &beta, &gamma, &rat(4)).expect("series terminates for k <= r");
        BigRational::from_integer(c) * f
    };
    let mut lhs = BigRational::zero();
    for k in 0..=i.min(j) {
        lhs += motzkin_entry(i, k) * motzkin_entry(j, k);
    }
    let alpha = BigRational::new(BigInt::from(1 - (i + j) as i64), BigInt::from(2));
    let beta = BigRational::new(-BigInt::from((i + j) as i64), BigInt::from(2));
    let rhs = f21_terminating(&alpha, &beta, &rat(2), &rat(4)).expect("series terminates");
    (lhs, rhs)
}

/// Exact integer power of a rational, with negative exponents allowed.
fn rational_pow(x: &BigRational, e: i64) -> BigRational {
    if e == 0 {
        return BigRational::one();
    }
    let mut acc = BigRational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= x;
    }
    if e < 0 {
        acc = BigRational::one() / acc;
    }
    acc
}

/// Check the quadratic transformation
/// `(1-z)^a 2F1(a, b; 2b; 2z) = 2F1(a/2, (a+1)/2; b+1/2; z^2/(1-z)^2)`
/// for a terminating instance (`a` a nonpositive integer, `z != 1`).
pub fn quadratic_transform_check(
    a_int: i64,
    b: &BigRational,
    z: &BigRational,
) -> Result<bool, QSeriesError> {
    assert!(a_int <= 0, "termination requires a nonpositive integer a");
    assert!(*z != rat(1), "z = 1 is a pole of (1-z)^a for a < 0");
    let a = rat(a_int);
    let one_minus_z = rat(1) - z;
    let lhs =
        rational_pow(&one_minus_z, a_int) * f21_terminating(&a, b, &(b * rat(2)), &(z * rat(2)))?;
    let half = rat_half();
    let rhs_arg = z * z / (&one_minus_z * &one_minus_z);
    let rhs = f21_terminating(
        &(&a * &half),
        &((&a + rat(1)) * &half),
        &(b + &half),
        &rhs_arg,
    )?;
    Ok(lhs == rhs)
}

fn rat_half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

/// Check the Burchnall–Chaundy expansion
/// `2F1(c-a, c-b; c; x) = sum_k (c-a)_k (a)_k (d)_k (c-b-d)_k /
/// (k! (c+k-1)_k (c)_{2k}) x^{2k} 2F1(c-a+k, c-b-d+k; c+2k; x)
/// 2F1(c-a+k, d+k; c+2k; x)`
/// at the terminating specialization `a = 3/2`, `b = 3+i+j`, `c = 3`,
/// `d = -j`, `x = 4`.
pub fn burchnall_chaundy_check(i: usize, j: usize) -> bool {
    let a = BigRational::new(BigInt::from(3), BigInt::from(2));
    let b = rat(3 + (i + j) as i64);
    let c = rat(3);
    let d = rat(-(j as i64));
    let x = rat(4);
    let c_minus_a = &c - &a; // 3/2
    let c_minus_b = &c - &b; // -(i+j)
    let c_minus_b_minus_d = &c_minus_b - &d; // -i
    let lhs = f21_terminating(&c_minus_a, &c_minus_b, &c, &x).expect("terminating by c - b");
    let mut rhs = BigRational::zero();
    let mut k = 0usize;
    loop {
        // (d)_k (c-b-d)_k vanish beyond min(i, j).
        let coeff = rising_factorial(&c_minus_a, k)
            * rising_factorial(&a, k)
            * rising_factorial(&d, k)
            * rising_factorial(&c_minus_b_minus_d, k);
        if coeff.is_zero() {
            break;
        }
        let denom = BigRational::from_integer(crate::algebra::factorial(k as u64))
            * rising_factorial(&(&c + rat(k as i64 - 1)), k)
            * rising_factorial(&c, 2 * k);
        let x_pow = rational_pow(&x, 2 * k as i64);
        let c2k = &c + rat(2 * k as i64);
        let f1 = f21_terminating(
            &(&c_minus_a + rat(k as i64)),
            &(&c_minus_b_minus_d + rat(k as i64)),
            &c2k,
            &x,
        )
        .expect("terminating by c-b-d+k");
        let f2 = f21_terminating(&(&c_minus_a + rat(k as i64)), &(&d + rat(k as i64)), &c2k, &x)
            .expect("terminating by d+k");
        rhs += coeff / denom * x_pow * f1 * f2;
        k += 1;
    }
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_ratfunc, ratfunc_eq};

    #[test]
    fn qpoch_basics() {
        assert!(qpoch(&aq_pow(1), 0).is_one());
        let expected: RatFunc = parse_ratfunc("(1 - a*q)*(1 - a*q^2)").unwrap();
        assert_eq!(qpoch(&aq_pow(1), 2), expected);
        // step q^2 rationalizes paired square-root bases
        let stepped = qpoch_step(&abq_pow(3), 2, &Poly::var_pow(Var::q(), 2));
        let expected: RatFunc = parse_ratfunc("(1 - a*b*q^3)*(1 - a*b*q^5)").unwrap();
        assert_eq!(stepped, expected);
    }

    #[test]
    fn qpoch_splitting() {
        // (x; q)_{m+n} = (x; q)_m (x q^m; q)_n
        let xs = [aq_pow(1), bq_pow(2), RatFunc::int(3)];
        for x in &xs {
            for m in 0..=6usize {
                for n in 0..=6usize {
                    let whole = qpoch(x, m + n);
                    let split = qpoch(x, m).mul(&qpoch(&x.mul(&q_pow(m as u32)), n));
                    assert!(ratfunc_eq(&whole, &split), "x={x} m={m} n={n}");
                }
            }
        }
    }

    #[test]
    fn qbinom_values() {
        assert_eq!(
            qbinom(2, 1),
            parse_ratfunc("1 + q").unwrap().as_poly().unwrap().clone()
        );
        let p42 = qbinom(4, 2);
        assert_eq!(p42.to_string(), "1 + q + 2*q^2 + q^3 + q^4");
        assert!(qbinom(3, 5).is_zero());
        assert!(qbinom(5, 0).is_one());
    }

    #[test]
    fn qbinom_pascal_and_symmetry() {
        for m in 1..=10i64 {
            for k in 0..=m {
                let lhs = qbinom(m, k);
                let rhs = qbinom(m - 1, k - 1)
                    .add(&qbinom(m - 1, k).mul(&Poly::var_pow(Var::q(), k as u32)));
                assert_eq!(lhs, rhs, "Pascal at ({m},{k})");
                assert_eq!(lhs, qbinom(m, m - k), "symmetry at ({m},{k})");
            }
        }
    }

    #[test]
    fn qbinom_matches_pochhammer_quotient() {
        for m in 0..=8i64 {
            for k in 0..=m {
                let quotient = qpoch(&q_pow(1), m as usize).div(
                    &qpoch(&q_pow(1), k as usize).mul(&qpoch(&q_pow(1), (m - k) as usize)),
                );
                assert!(ratfunc_eq(&RatFunc::from(qbinom(m, k)), &quotient));
            }
        }
    }

    #[test]
    fn moment_values() {
        assert!(moment_mu(0).is_one());
        let mu1: RatFunc = parse_ratfunc("(1 - a*q)/(1 - a*b*q^2)").unwrap();
        assert_eq!(moment_mu(1), mu1);
        let mu2: RatFunc =
            parse_ratfunc("((1 - a*q)*(1 - a*q^2))/((1 - a*b*q^2)*(1 - a*b*q^3))").unwrap();
        assert_eq!(moment_mu(2), mu2);
    }

    #[test]
    fn moment_shift_splits() {
        // mu_{n+t} = mu_t * (mu_n with a -> a q^t)
        let a = Var::a();
        for n in 0..=4usize {
            for t in 0..=4usize {
                let shifted =
                    moment_mu(n).substitute(a, &RatFunc::from(avar().mul(&qvar().pow(t as u32))));
                let product = moment_mu(t).mul(&shifted);
                assert!(ratfunc_eq(&moment_mu(n + t), &product), "n={n} t={t}");
            }
        }
    }

    fn rat_frac_local(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn f21_examples() {
        // one-step series: 1 - beta x / gamma
        assert_eq!(
            f21_terminating(&rat(-1), &rat(3), &rat(2), &rat(1)).unwrap(),
            rat_frac_local(-1, 2)
        );
        // empty numerator parameter
        assert_eq!(
            f21_terminating(&rat(0), &rat(7), &rat(5), &rat(9)).unwrap(),
            rat(1)
        );
        // Motzkin number M_2 = 2
        let m2 = f21_terminating(&rat_frac_local(-1, 2), &rat(-1), &rat(2), &rat(4)).unwrap();
        assert_eq!(m2, rat(2));
        assert_eq!(
            f21_terminating(&rat_frac_local(1, 2), &rat_frac_local(3, 2), &rat(2), &rat(4)),
            Err(QSeriesError::NonTerminating)
        );
    }

    #[test]
    fn phi_trivial_cases() {
        // numerator parameter 1 = q^0 kills every k >= 1 term
        let spec = HypSpec::terminating(
            vec![PhiParam::Plain(RatFunc::one()), PhiParam::Plain(bq_pow(1))],
            vec![PhiParam::Plain(abq_pow(2))],
            RatFunc::var(Var::t()),
        )
        .unwrap();
        assert_eq!(spec.terminating_index, 0);
        assert!(phi_terminating(&spec).unwrap().is_one());
    }

    #[test]
    fn phi_two_term_sum() {
        // 2phi1(q^{-1}, b; c; q, z) = 1 + (1-q^{-1})(1-b) z / ((1-q)(1-c))
        let b = RatFunc::var(Var::b());
        let c = RatFunc::var(Var::new("c"));
        let z = RatFunc::var(Var::new("z"));
        let spec = HypSpec::terminating(
            vec![PhiParam::Plain(q_pow(1).inv()), PhiParam::Plain(b.clone())],
            vec![PhiParam::Plain(c.clone())],
            z.clone(),
        )
        .unwrap();
        assert_eq!(spec.terminating_index, 1);
        let value = phi_terminating(&spec).unwrap();
        let expected = RatFunc::one().add(
            &RatFunc::one()
                .sub(&q_pow(1).inv())
                .mul(&RatFunc::one().sub(&b))
                .mul(&z)
                .div(&RatFunc::one().sub(&q_pow(1)).mul(&RatFunc::one().sub(&c))),
        );
        assert!(ratfunc_eq(&value, &expected));
    }

    #[test]
    fn phi65_matches_moment_ratio() {
        let lhs = q_dougall_phi65(2, 1).unwrap();
        let rhs = moment_mu(3).div(&moment_mu(2).mul(&moment_mu(1)));
        assert!(ratfunc_eq(&lhs, &rhs));
    }

    #[test]
    fn q_dougall_small() {
        let (l, r) = q_dougall_sides(0, 0);
        assert!(l.is_one() && r.is_one());
        let (l, r) = q_dougall_sides(1, 0);
        assert!(ratfunc_eq(&l, &r));
        assert!(l.is_one());
        let (l, r) = q_dougall_sides(2, 2);
        assert!(ratfunc_eq(&l, &r));
    }

    #[test]
    fn addition_formula_small() {
        let (l, r) = addition_formula_sides(0, 0);
        assert_eq!(l, rat(1));
        assert_eq!(r, rat(1));
        let (l, r) = addition_formula_sides(1, 0);
        assert_eq!(l, rat(1));
        assert_eq!(r, rat(1));
        let (l, r) = addition_formula_sides(2, 2);
        assert_eq!(l, rat(9), "M_4 = 9");
        assert_eq!(r, rat(9));
    }

    #[test]
    fn quadratic_transform_examples() {
        assert!(quadratic_transform_check(0, &rat_frac_local(3, 2), &rat(2)).unwrap());
        assert!(quadratic_transform_check(-2, &rat_frac_local(3, 2), &rat(2)).unwrap());
        assert!(quadratic_transform_check(-4, &rat_frac_local(5, 2), &rat(2)).unwrap());
    }

    #[test]
    fn burchnall_chaundy_examples() {
        assert!(burchnall_chaundy_check(0, 0));
        assert!(burchnall_chaundy_check(2, 1));
        assert!(burchnall_chaundy_check(3, 3));
    }
}

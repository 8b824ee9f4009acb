//! Closed-form right-hand sides for every determinant identity the crate
//! verifies, so checks read as "exact determinant equals evaluated formula".

use crate::algebra::{binomial, factorial, BigInt, BigRational, Poly, RatFunc, Var};
use crate::linalg::{det_exact, ExactMatrix};
use crate::qseries::{abq_pow, aq_pow, bq_pow, qpoch, q_pow};
use num_traits::{One, Zero};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosedFormError {
    UnsupportedShift { t: usize },
    NotAnInteger,
    LengthMismatch { expected: usize, got: usize },
}

impl fmt::Display for ClosedFormError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosedFormError::UnsupportedShift { t } => {
                write!(f, "no closed form for shift t={t}")
            }
            ClosedFormError::NotAnInteger => f.write_str("product did not reduce to an integer"),
            ClosedFormError::LengthMismatch { expected, got } => {
                write!(f, "expected {expected} shifts, got {got}")
            }
        }
    }
}

impl std::error::Error for ClosedFormError {}

/// The identities in the registry, one tag per verified determinant formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdentityId {
    QCatalanDet,
    QGeneralHankel,
    QKratt,
    KrattClassical,
    CatalanT,
    BT,
    DT,
    AignerM0,
    AignerM1,
    Schroder01,
    Schroder2,
    QSchroder01,
    QSchroder2,
    QSchroder3At1,
    Delannoy0,
    Delannoy1,
    Delannoy2,
    KrattLemma,
    ViennotT,
}

impl IdentityId {
    pub const ALL: [IdentityId; 19] = [
        IdentityId::QCatalanDet,
        IdentityId::QGeneralHankel,
        IdentityId::QKratt,
        IdentityId::KrattClassical,
        IdentityId::CatalanT,
        IdentityId::BT,
        IdentityId::DT,
        IdentityId::AignerM0,
        IdentityId::AignerM1,
        IdentityId::Schroder01,
        IdentityId::Schroder2,
        IdentityId::QSchroder01,
        IdentityId::QSchroder2,
        IdentityId::QSchroder3At1,
        IdentityId::Delannoy0,
        IdentityId::Delannoy1,
        IdentityId::Delannoy2,
        IdentityId::KrattLemma,
        IdentityId::ViennotT,
    ];

    pub fn slug(&self) -> &'static str {
        match self {
            IdentityId::QCatalanDet => "q-catalan-det",
            IdentityId::QGeneralHankel => "q-general-hankel",
            IdentityId::QKratt => "q-kratt",
            IdentityId::KrattClassical => "kratt-classical",
            IdentityId::CatalanT => "catalan-t",
            IdentityId::BT => "b-t",
            IdentityId::DT => "d-t",
            IdentityId::AignerM0 => "aigner-m0",
            IdentityId::AignerM1 => "aigner-m1",
            IdentityId::Schroder01 => "schroder-01",
            IdentityId::Schroder2 => "schroder-2",
            IdentityId::QSchroder01 => "q-schroder-01",
            IdentityId::QSchroder2 => "q-schroder-2",
            IdentityId::QSchroder3At1 => "q-schroder-3-at-1",
            IdentityId::Delannoy0 => "delannoy-0",
            IdentityId::Delannoy1 => "delannoy-1",
            IdentityId::Delannoy2 => "delannoy-2",
            IdentityId::KrattLemma => "kratt-lemma",
            IdentityId::ViennotT => "viennot-t",
        }
    }

    pub fn from_slug(slug: &str) -> Option<IdentityId> {
        IdentityId::ALL.iter().copied().find(|id| id.slug() == slug)
    }

    pub fn description(&self) -> &'static str {
        match self {
            IdentityId::QCatalanDet => {
                "Hankel determinant of the q-moment sequence equals its product formula"
            }
            IdentityId::QGeneralHankel => {
                "shifted q-moment Hankel determinant equals its product formula"
            }
            IdentityId::QKratt => {
                "generalized q-moment Hankel determinant over arbitrary row shifts"
            }
            IdentityId::KrattClassical => {
                "generalized Catalan Hankel determinant over arbitrary row shifts"
            }
            IdentityId::CatalanT => "shifted Catalan Hankel determinants",
            IdentityId::BT => "shifted Hankel determinants of binom(2n+1, n)",
            IdentityId::DT => "shifted Hankel determinants of central binomials",
            IdentityId::AignerM0 => "Motzkin Hankel determinants are 1",
            IdentityId::AignerM1 => "shifted Motzkin Hankel determinants follow the 1/0/-1 cycle",
            IdentityId::Schroder01 => "Schröder Hankel determinants, shifts 0 and 1",
            IdentityId::Schroder2 => "Schröder Hankel determinants, shift 2",
            IdentityId::QSchroder01 => "q-Schröder determinants, shifts 0 and 1",
            IdentityId::QSchroder2 => "q-Schröder determinants, shift 2",
            IdentityId::QSchroder3At1 => "q-Schröder determinant at q = 1, shift 3",
            IdentityId::Delannoy0 => "central Delannoy Hankel determinants, shift 0",
            IdentityId::Delannoy1 => "central Delannoy Hankel determinants, shift 1",
            IdentityId::Delannoy2 => "central Delannoy Hankel determinants, shift 2",
            IdentityId::KrattLemma => "determinant lemma for shifted linear-factor products",
            IdentityId::ViennotT => {
                "generic-weight Dyck Hankel determinants against the printed products"
            }
        }
    }

    /// Delannoy formulas are verified numerically, not proven.
    pub fn is_conjecture(&self) -> bool {
        matches!(
            self,
            IdentityId::Delannoy0 | IdentityId::Delannoy1 | IdentityId::Delannoy2
        )
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.slug())
    }
}

/// Product formula for the q-moment Hankel determinant of size `n`:
/// `a^{n(n-1)/2} q^{n(n-1)(2n-1)/6}
///  prod_{k=1}^{n} (q, aq, bq; q)_{n-k}
///  / ((a b q^{n-k+1}; q)_{n-k} (a b q^2; q)_{2(n-k)})`.
pub fn rhs_q_catalan_det(n: usize) -> RatFunc {
    assert!(n >= 1);
    let a_exp = (n * (n - 1) / 2) as u32;
    let q_exp = (n * (n - 1) * (2 * n - 1) / 6) as u32;
    let mut acc = RatFunc::from(
        Poly::var_pow(Var::a(), a_exp).mul(&Poly::var_pow(Var::q(), q_exp)),
    );
    for k in 1..=n {
        let m = n - k;
        acc = acc
            .mul(&qpoch(&q_pow(1), m))
            .mul(&qpoch(&aq_pow(1), m))
            .mul(&qpoch(&bq_pow(1), m))
            .div(&qpoch(&abq_pow(m as u32 + 1), m))
            .div(&qpoch(&abq_pow(2), 2 * m));
    }
    acc
}

/// Product formula for the shifted q-moment Hankel determinant:
/// `a^{n(n-1)/2} q^{n(n-1)(2n-1)/6 + n(n-1)t/2}
///  ((aq; q)_t / (abq^2; q)_t)^n
///  prod_{k=1}^{n} (q, aq^{t+1}, bq; q)_{n-k}
///  / ((a b q^{n-k+t+1}; q)_{n-k} (a b q^{t+2}; q)_{2(n-k)})`.
/// At `t = 0` this reduces to [`rhs_q_catalan_det`].
pub fn rhs_q_general(n: usize, t: usize) -> RatFunc {
    assert!(n >= 1);
    let a_exp = (n * (n - 1) / 2) as u32;
    let q_exp = (n * (n - 1) * (2 * n - 1) / 6 + n * (n - 1) * t / 2) as u32;
    let mut acc = RatFunc::from(
        Poly::var_pow(Var::a(), a_exp).mul(&Poly::var_pow(Var::q(), q_exp)),
    );
    acc = acc.mul(
        &qpoch(&aq_pow(1), t)
            .div(&qpoch(&abq_pow(2), t))
            .pow(n as i64),
    );
    for k in 1..=n {
        let m = n - k;
        acc = acc
            .mul(&qpoch(&q_pow(1), m))
            .mul(&qpoch(&aq_pow(t as u32 + 1), m))
            .mul(&qpoch(&bq_pow(1), m))
            .div(&qpoch(&abq_pow((m + t) as u32 + 1), m))
            .div(&qpoch(&abq_pow(t as u32 + 2), 2 * m));
    }
    acc
}

/// Product formula for the generalized q-moment Hankel determinant with row
/// shifts `ks`:
/// `a^{binom(n,2)} q^{binom(n+1,3)}
///  prod_i (aq; q)_{k_i} / (abq^2; q)_{k_i + n - 1}
///  prod_{i<j} (q^{k_i} - q^{k_j})
///  prod_i (bq; q)_i`.
pub fn rhs_q_kratt(ks: &[usize]) -> RatFunc {
    let n = ks.len();
    assert!(n >= 1);
    use num_traits::ToPrimitive;
    let a_exp = binomial(n as i64, 2).to_u32().unwrap();
    let q_exp = binomial(n as i64 + 1, 3).to_u32().unwrap();
    let mut acc = RatFunc::from(
        Poly::var_pow(Var::a(), a_exp).mul(&Poly::var_pow(Var::q(), q_exp)),
    );
    for (i, &k) in ks.iter().enumerate() {
        acc = acc
            .mul(&qpoch(&aq_pow(1), k))
            .div(&qpoch(&abq_pow(2), k + n - 1))
            .mul(&qpoch(&bq_pow(1), i));
    }
    for i in 0..n {
        for j in i + 1..n {
            let diff = RatFunc::from(
                Poly::var_pow(Var::q(), ks[i] as u32)
                    .sub(&Poly::var_pow(Var::q(), ks[j] as u32)),
            );
            acc = acc.mul(&diff);
        }
    }
    acc
}

/// Generalized Catalan Hankel determinant with row shifts `ks`:
/// `prod_{i<j} (k_j - k_i) prod_i (i+n)! (2k_i)! / ((2i)! k_i! (k_i+n)!)`.
pub fn rhs_kratt_classical(ks: &[usize]) -> Result<BigInt, ClosedFormError> {
    let n = ks.len() as i64;
    assert!(n >= 1);
    let mut acc = BigRational::one();
    for i in 0..ks.len() {
        for j in i + 1..ks.len() {
            acc *= BigRational::from_integer(BigInt::from(ks[j] as i64 - ks[i] as i64));
        }
    }
    for (i, &k) in ks.iter().enumerate() {
        let i = i as i64;
        let k = k as i64;
        acc *= BigRational::new(
            factorial((i + n) as u64) * factorial(2 * k as u64),
            factorial(2 * i as u64) * factorial(k as u64) * factorial((k + n) as u64),
        );
    }
    if !acc.is_integer() {
        return Err(ClosedFormError::NotAnInteger);
    }
    Ok(acc.to_integer())
}

/// Exact integer right-hand sides of the classical determinant identities.
/// `t` is ignored by the tags that fix their own shift.
pub fn rhs_classical(id: IdentityId, n: usize, t: usize) -> Result<BigInt, ClosedFormError> {
    let n_i = n as i64;
    let two = BigInt::from(2);
    let pow2 = |e: i64| -> BigInt {
        assert!(e >= 0, "negative power of two in a closed form");
        two.pow(e as u32)
    };
    match id {
        IdentityId::CatalanT => {
            // prod_{1 <= i <= j <= t-1} (i + j + 2n) / (i + j)
            let mut acc = BigRational::one();
            for i in 1..t as i64 {
                for j in i..t as i64 {
                    acc *= BigRational::new(BigInt::from(i + j + 2 * n_i), BigInt::from(i + j));
                }
            }
            if !acc.is_integer() {
                return Err(ClosedFormError::NotAnInteger);
            }
            Ok(acc.to_integer())
        }
        IdentityId::BT => {
            // prod_{1 <= i <= j <= t-1} (i + j - 1 + 2n) / (i + j - 1)
            let mut acc = BigRational::one();
            for i in 1..t as i64 {
                for j in i..t as i64 {
                    acc *= BigRational::new(
                        BigInt::from(i + j - 1 + 2 * n_i),
                        BigInt::from(i + j - 1),
                    );
                }
            }
            if !acc.is_integer() {
                return Err(ClosedFormError::NotAnInteger);
            }
            Ok(acc.to_integer())
        }
        IdentityId::DT => {
            // 2^n prod_{1 <= i < j <= t-1} (i + j + 2n) / (i + j)
            let mut acc = BigRational::from_integer(pow2(n_i));
            for i in 1..t as i64 {
                for j in i + 1..t as i64 {
                    acc *= BigRational::new(BigInt::from(i + j + 2 * n_i), BigInt::from(i + j));
                }
            }
            if !acc.is_integer() {
                return Err(ClosedFormError::NotAnInteger);
            }
            Ok(acc.to_integer())
        }
        IdentityId::AignerM0 => Ok(BigInt::one()),
        IdentityId::AignerM1 => Ok(match n % 6 {
            0 | 1 => BigInt::one(),
            2 | 5 => BigInt::zero(),
            _ => -BigInt::one(),
        }),
        IdentityId::Schroder01 => match t {
            0 => Ok(pow2(binomial_i64(n_i, 2))),
            1 => Ok(pow2(binomial_i64(n_i + 1, 2))),
            t => Err(ClosedFormError::UnsupportedShift { t }),
        },
        IdentityId::Schroder2 => {
            Ok(pow2(binomial_i64(n_i + 1, 2)) * (pow2(n_i + 1) - BigInt::one()))
        }
        IdentityId::Delannoy0 => Ok(pow2(binomial_i64(n_i + 1, 2) - 1)),
        IdentityId::Delannoy1 => {
            Ok(pow2(binomial_i64(n_i + 2, 2) - 2) + pow2(binomial_i64(n_i + 1, 2) - 1))
        }
        IdentityId::Delannoy2 => Ok(pow2(binomial_i64(n_i + 3, 2) - 3)
            + BigInt::from(2 * n_i + 1) * pow2(binomial_i64(n_i + 2, 2) - 2)
            - pow2(binomial_i64(n_i + 1, 2) - 1)),
        other => panic!("{other} has no classical integer right-hand side"),
    }
}

fn binomial_i64(n: i64, k: i64) -> i64 {
    use num_traits::ToPrimitive;
    binomial(n, k).to_i64().expect("small binomial")
}

/// Closed forms for the q-Schröder determinants:
/// shift 0 gives `prod_{k=1}^{n-1} (q^{2k-1} + 1)^{n-k}`;
/// shift 1 the same product with `n` replaced by `n + 1`;
/// shift 2 gives `q^{-1} prod_{k=1}^{n} (q^{2k-1} + 1)^{n+1-k}
/// (prod_{k=1}^{n+1} (q^{2k-1} + 1) - 1)`.
pub fn rhs_q_schroder(n: usize, t: usize) -> Result<RatFunc, ClosedFormError> {
    assert!(n >= 1);
    let q = Var::q();
    let factor = |k: usize| Poly::var_pow(q, 2 * k as u32 - 1).add(&Poly::one());
    let product = |m: usize| -> Poly {
        // prod_{k=1}^{m-1} (q^{2k-1} + 1)^{m-k}
        let mut acc = Poly::one();
        for k in 1..m {
            acc = acc.mul(&factor(k).pow((m - k) as u32));
        }
        acc
    };
    match t {
        0 => Ok(RatFunc::from(product(n))),
        1 => Ok(RatFunc::from(product(n + 1))),
        2 => {
            let mut tail = Poly::one();
            for k in 1..=n + 1 {
                tail = tail.mul(&factor(k));
            }
            let num = product(n + 1).mul(&tail.sub(&Poly::one()));
            Ok(RatFunc::new(num, Poly::var(q)))
        }
        t => Err(ClosedFormError::UnsupportedShift { t }),
    }
}

/// The shift-3 q-Schröder determinant at `q = 1`:
/// `2^{binom(n+3,2)} - (2n+3) 2^{binom(n+2,2)} - 2^{binom(n+1,2)}`.
pub fn rhs_s3_at_1(n: usize) -> BigInt {
    let n = n as i64;
    let two = BigInt::from(2);
    two.pow(binomial_i64(n + 3, 2) as u32)
        - BigInt::from(2 * n + 3) * two.pow(binomial_i64(n + 2, 2) as u32)
        - two.pow(binomial_i64(n + 1, 2) as u32)
}

/// Both sides of the determinant lemma for shifted linear-factor products:
/// the determinant of `(prod_{l<=j} (X_i + B_l) prod_{l>j} (X_i + A_l))`
/// and the product `prod_{i<j} (X_i - X_j) prod_{i<=j} (B_i - A_j)`.
/// Takes `n` values `xs` and `n - 1` values `as_` and `bs` (1-indexed in the
/// formula, so `as_[0]` is `A_1`).
pub fn kratt_lemma_sides(
    xs: &[Poly],
    as_: &[Poly],
    bs: &[Poly],
) -> Result<(Poly, Poly), ClosedFormError> {
    let n = xs.len();
    if as_.len() + 1 != n || bs.len() + 1 != n {
        return Err(ClosedFormError::LengthMismatch {
            expected: n.saturating_sub(1),
            got: as_.len().max(bs.len()),
        });
    }
    let matrix = ExactMatrix::from_fn(n, n, |i, j| {
        let mut entry = Poly::one();
        for l in 1..=j {
            entry = entry.mul(&xs[i].add(&bs[l - 1]));
        }
        for l in j + 1..n {
            entry = entry.mul(&xs[i].add(&as_[l - 1]));
        }
        RatFunc::from(entry)
    });
    let det = det_exact(&matrix).expect("square");
    let det_poly = det.as_poly().expect("polynomial entries").clone();
    let mut product = Poly::one();
    for i in 0..n {
        for j in i + 1..n {
            product = product.mul(&xs[i].sub(&xs[j]));
        }
    }
    for i in 1..n {
        for j in i..n {
            product = product.mul(&bs[i - 1].sub(&as_[j - 1]));
        }
    }
    Ok((det_poly, product))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratfunc_eq};
    use crate::linalg::hankel_matrix;
    use crate::qseries::moment_mu;
    use crate::sequences::SequenceKind;

    #[test]
    fn q_catalan_det_small() {
        assert!(rhs_q_catalan_det(1).is_one());
        let det2 = det_exact(&hankel_matrix(SequenceKind::QMoment, 2, 0)).unwrap();
        assert!(ratfunc_eq(&rhs_q_catalan_det(2), &det2));
        let det3 = det_exact(&hankel_matrix(SequenceKind::QMoment, 3, 0)).unwrap();
        assert!(ratfunc_eq(&rhs_q_catalan_det(3), &det3));
    }

    #[test]
    fn q_general_reduces_and_matches() {
        for n in 1..=3usize {
            assert!(ratfunc_eq(&rhs_q_general(n, 0), &rhs_q_catalan_det(n)));
        }
        assert!(ratfunc_eq(&rhs_q_general(1, 2), &moment_mu(2)));
        let det = det_exact(&hankel_matrix(SequenceKind::QMoment, 2, 1)).unwrap();
        assert!(ratfunc_eq(&rhs_q_general(2, 1), &det));
    }

    #[test]
    fn q_kratt_small() {
        // Single row: the formula collapses to the moment itself.
        for m in 0..=4usize {
            assert!(ratfunc_eq(&rhs_q_kratt(&[m]), &moment_mu(m)), "m={m}");
        }
        // Consecutive shifts reproduce the shifted Hankel formula.
        for t in 0..=2usize {
            let ks: Vec<usize> = (0..2).map(|i| i + t).collect();
            assert!(ratfunc_eq(&rhs_q_kratt(&ks), &rhs_q_general(2, t)), "t={t}");
        }
        // ks = [0, 2].
        let det = det_exact(&crate::linalg::generalized_hankel(
            SequenceKind::QMoment,
            &[0, 2],
        ))
        .unwrap();
        assert!(ratfunc_eq(&rhs_q_kratt(&[0, 2]), &det));
    }

    #[test]
    fn kratt_classical_small() {
        // Single row gives a Catalan number.
        for k in 0..=6usize {
            assert_eq!(
                rhs_kratt_classical(&[k]).unwrap(),
                crate::sequences::catalan(k)
            );
        }
        let det = det_exact(&crate::linalg::generalized_hankel(
            SequenceKind::Catalan,
            &[0, 2],
        ))
        .unwrap();
        assert_eq!(
            RatFunc::from(rhs_kratt_classical(&[0, 2]).unwrap()),
            det
        );
    }

    #[test]
    fn classical_values() {
        assert_eq!(
            rhs_classical(IdentityId::CatalanT, 3, 2).unwrap(),
            BigInt::from(4)
        );
        assert_eq!(
            rhs_classical(IdentityId::AignerM1, 3, 1).unwrap(),
            BigInt::from(-1)
        );
        assert_eq!(
            rhs_classical(IdentityId::Schroder01, 3, 0).unwrap(),
            BigInt::from(8)
        );
        assert_eq!(
            rhs_classical(IdentityId::Schroder2, 3, 2).unwrap(),
            BigInt::from(960)
        );
        assert_eq!(
            rhs_classical(IdentityId::Delannoy2, 2, 2).unwrap(),
            BigInt::from(204)
        );
        // Empty products at t <= 1.
        assert_eq!(
            rhs_classical(IdentityId::CatalanT, 5, 0).unwrap(),
            BigInt::one()
        );
        assert_eq!(
            rhs_classical(IdentityId::CatalanT, 5, 1).unwrap(),
            BigInt::one()
        );
    }

    #[test]
    fn q_schroder_closed_forms() {
        assert!(rhs_q_schroder(1, 0).unwrap().is_one());
        let t0n2 = rhs_q_schroder(2, 0).unwrap();
        assert_eq!(t0n2.to_string(), "1 + q");
        // Shift 2, n = 1: q^{-1} (q+1) ((q+1)(q^3+1) - 1); equals S_2(q).
        let v = rhs_q_schroder(1, 2).unwrap();
        let s2 = crate::sequences::q_schroder(2);
        assert!(ratfunc_eq(&v, &RatFunc::from(s2)));
        assert!(matches!(
            rhs_q_schroder(2, 5),
            Err(ClosedFormError::UnsupportedShift { t: 5 })
        ));
    }

    #[test]
    fn s3_at_one() {
        assert_eq!(rhs_s3_at_1(1), BigInt::from(22));
    }

    #[test]
    fn kratt_lemma_small() {
        // n = 1: empty products on both sides.
        let (d, p) = kratt_lemma_sides(&[Poly::var(Var::new("X_0"))], &[], &[]).unwrap();
        assert!(d.is_one() && p.is_one());
        // n = 2 symbolic: both sides are (X_0 - X_1)(B_1 - A_1).
        let xs = [Poly::var(Var::new("X_0")), Poly::var(Var::new("X_1"))];
        let as_ = [Poly::var(Var::new("A_1"))];
        let bs = [Poly::var(Var::new("B_1"))];
        let (d, p) = kratt_lemma_sides(&xs, &as_, &bs).unwrap();
        assert_eq!(d, p);
        let expected = xs[0].sub(&xs[1]).mul(&bs[0].sub(&as_[0]));
        assert_eq!(d, expected);
        // n = 3 symbolic.
        let xs: Vec<Poly> = (0..3).map(|i| Poly::var(Var::new(&format!("X_{i}")))).collect();
        let as_: Vec<Poly> = (1..3).map(|i| Poly::var(Var::new(&format!("A_{i}")))).collect();
        let bs: Vec<Poly> = (1..3).map(|i| Poly::var(Var::new(&format!("B_{i}")))).collect();
        let (d, p) = kratt_lemma_sides(&xs, &as_, &bs).unwrap();
        assert_eq!(d, p);
        // Length mismatch is rejected.
        assert!(kratt_lemma_sides(&xs, &as_[..1], &bs).is_err());
    }

    #[test]
    fn registry_slugs_unique() {
        let mut slugs: Vec<&str> = IdentityId::ALL.iter().map(|id| id.slug()).collect();
        slugs.sort();
        slugs.dedup();
        assert_eq!(slugs.len(), IdentityId::ALL.len());
        for id in IdentityId::ALL {
            assert_eq!(IdentityId::from_slug(id.slug()), Some(id));
        }
        assert!(IdentityId::from_slug("no-such-id").is_none());
        assert!(IdentityId::Delannoy1.is_conjecture());
        assert!(!IdentityId::QCatalanDet.is_conjecture());
    }

    #[test]
    fn uses_rat() {
        assert_eq!(rat(3), BigRational::from_integer(BigInt::from(3)));
    }
}

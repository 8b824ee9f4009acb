//! Exact dense linear algebra: Hankel matrix builders, fraction-free
//! determinants, the Desnanot–Jacobi identity, and LU decompositions (both
//! generic elimination and the closed-form q-Catalan / Motzkin entries).

use crate::algebra::{binomial, rat, ratfunc_eq, BigInt, BigRational, Poly, RatFunc, Var};
use crate::qseries::{self, abq_pow, aq_pow, bq_pow, moment_mu, qbinom, qpoch};
use crate::sequences::{seq_ratfunc_prefix, SequenceKind};
use num_traits::{One, Zero};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinalgError {
    NonSquare { rows: usize, cols: usize },
    TooSmall { size: usize },
    ZeroLeadingMinor { index: usize },
}

impl fmt::Display for LinalgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinalgError::NonSquare { rows, cols } => {
                write!(f, "matrix is {rows}x{cols}, not square")
            }
            LinalgError::TooSmall { size } => {
                write!(f, "matrix of size {size} is too small for this identity")
            }
            LinalgError::ZeroLeadingMinor { index } => {
                write!(f, "leading principal minor of order {index} vanishes")
            }
        }
    }
}

impl std::error::Error for LinalgError {}

/// A dense matrix of exact rational functions.
#[derive(Clone, PartialEq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<RatFunc>,
}

impl ExactMatrix {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> RatFunc) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        ExactMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn identity(n: usize) -> Self {
        ExactMatrix::from_fn(n, n, |i, j| {
            if i == j {
                RatFunc::one()
            } else {
                RatFunc::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &RatFunc {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: RatFunc) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn mul(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        ExactMatrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = RatFunc::zero();
            for k in 0..self.cols {
                let x = self.get(i, k);
                if x.is_zero() {
                    continue;
                }
                acc = acc.add(&x.mul(other.get(k, j)));
            }
            acc
        })
    }

    /// Entrywise substitution of a variable.
    pub fn substitute(&self, v: Var, replacement: &RatFunc) -> ExactMatrix {
        ExactMatrix::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j).substitute(v, replacement)
        })
    }

    /// Submatrix with the listed rows and columns removed (indices 0-based).
    pub fn minor_removing(&self, rows_out: &[usize], cols_out: &[usize]) -> ExactMatrix {
        let keep_rows: Vec<usize> = (0..self.rows).filter(|i| !rows_out.contains(i)).collect();
        let keep_cols: Vec<usize> = (0..self.cols).filter(|j| !cols_out.contains(j)).collect();
        ExactMatrix::from_fn(keep_rows.len(), keep_cols.len(), |i, j| {
            self.get(keep_rows[i], keep_cols[j]).clone()
        })
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

/// Hankel matrix `(a_{i+j+t})` of a sequence, size `n`.
pub fn hankel_matrix(kind: SequenceKind, n: usize, t: usize) -> ExactMatrix {
    assert!(n >= 1, "hankel matrix needs n >= 1");
    let values = seq_ratfunc_prefix(kind, 2 * (n - 1) + t);
    ExactMatrix::from_fn(n, n, |i, j| values[i + j + t].clone())
}

/// Generalized Hankel matrix `(a_{k_i + j})` with one row per shift.
pub fn generalized_hankel(kind: SequenceKind, ks: &[usize]) -> ExactMatrix {
    let n = ks.len();
    assert!(n >= 1, "needs at least one row index");
    let top = ks.iter().max().unwrap() + n - 1;
    let values = seq_ratfunc_prefix(kind, top);
    ExactMatrix::from_fn(n, n, |i, j| values[ks[i] + j].clone())
}

/// The three q-power dressings of the q-Schröder matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchroderVariant {
    /// `(q^{(i-j)(i-j-1)} S_{i+j+t}(q))`, 0-based indices.
    Plain,
    /// `(q^{2(n-i)(t+i+j-2)} S_{t+i+j-2}(q))`, 1-based indices.
    Hat,
    /// `(q^{-(t+i+j)(t+i+j-1)} S_{t+i+j-2}(q))`, 1-based indices.
    Tilde,
}

impl SchroderVariant {
    pub fn from_name(name: &str) -> Option<SchroderVariant> {
        match name {
            "plain" => Some(SchroderVariant::Plain),
            "hat" => Some(SchroderVariant::Hat),
            "tilde" => Some(SchroderVariant::Tilde),
            _ => None,
        }
    }
}

/// q-Schröder matrix of size `n` with shift `t`, in one of the three
/// dressings. Hat and Tilde use 1-based indices exactly as defined.
pub fn q_schroder_matrix(n: usize, t: usize, variant: SchroderVariant) -> ExactMatrix {
    assert!(n >= 1, "matrix needs n >= 1");
    let q = Var::q();
    let top = 2 * n + t;
    let s = crate::sequences::q_schroder_prefix(top);
    match variant {
        SchroderVariant::Plain => ExactMatrix::from_fn(n, n, |i, j| {
            let d = i as i64 - j as i64;
            let e = d * (d - 1);
            debug_assert!(e >= 0);
            RatFunc::from(s[i + j + t].mul(&Poly::var_pow(q, e as u32)))
        }),
        SchroderVariant::Hat => ExactMatrix::from_fn(n, n, |i0, j0| {
            let (i, j) = (i0 + 1, j0 + 1);
            let e = 2 * (n - i) * (t + i + j - 2);
            RatFunc::from(s[t + i + j - 2].mul(&Poly::var_pow(q, e as u32)))
        }),
        SchroderVariant::Tilde => ExactMatrix::from_fn(n, n, |i0, j0| {
            let (i, j) = (i0 + 1, j0 + 1);
            let e = (t + i + j) * (t + i + j - 1);
            RatFunc::new(s[t + i + j - 2].clone(), Poly::var_pow(q, e as u32))
        }),
    }
}

/// Exact determinant. Rows are cleared to a polynomial matrix (tracking the
/// denominators as a prefactor), eliminated fraction-free in the Bareiss
/// scheme with row pivoting, and the prefactor divided back at the end.
pub fn det_exact(m: &ExactMatrix) -> Result<RatFunc, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NonSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    if n == 0 {
        return Ok(RatFunc::one());
    }
    // Clear each row by the lcm of its entry denominators.
    let mut cleared: Vec<Vec<Poly>> = Vec::with_capacity(n);
    let mut den_factors: Vec<Poly> = Vec::with_capacity(n);
    let mut scalar = BigRational::one();
    for i in 0..n {
        let mut row_den = Poly::one();
        for j in 0..n {
            row_den = poly_lcm(&row_den, m.get(i, j).den());
        }
        let mut row: Vec<Poly> = (0..n)
            .map(|j| {
                let e = m.get(i, j);
                let cofactor = row_den.exact_div(e.den()).expect("lcm divides");
                e.num().mul(&cofactor)
            })
            .collect();
        // Pull out the rational content to keep Bareiss coefficients small.
        let mut content = BigRational::zero();
        for p in &row {
            if !p.is_zero() {
                let c = p.content();
                content = if content.is_zero() {
                    c
                } else {
                    gcd_rational(&content, &c)
                };
            }
        }
        if !content.is_zero() && !content.is_one() {
            let inv = BigRational::one() / &content;
            for p in &mut row {
                *p = p.mul_scalar(&inv);
            }
            scalar *= content;
        }
        cleared.push(row);
        den_factors.push(row_den);
    }
    let det_poly = bareiss(cleared);
    let num = det_poly.mul_scalar(&scalar);
    Ok(crate::algebra::ratfunc_from_factored(num, &den_factors))
}

fn gcd_rational(x: &BigRational, y: &BigRational) -> BigRational {
    use num_integer::Integer;
    BigRational::new(
        x.numer().gcd(y.numer()),
        x.denom().lcm(y.denom()),
    )
}

fn poly_lcm(a: &Poly, b: &Poly) -> Poly {
    if a.is_one() {
        return b.clone();
    }
    if b.is_one() {
        return a.clone();
    }
    if let Some(_q) = b.exact_div(a) {
        return b.clone();
    }
    if let Some(_q) = a.exact_div(b) {
        return a.clone();
    }
    let g = crate::algebra::gcd_inner(a, b);
    a.mul(&b.exact_div(&g).expect("gcd divides"))
}

/// Fraction-free Bareiss elimination on a square polynomial matrix.
fn bareiss(mut m: Vec<Vec<Poly>>) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::one();
    }
    let mut sign_negative = false;
    let mut prev = Poly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign_negative = !sign_negative;
                }
                None => return Poly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num
                    .exact_div(&prev)
                    .expect("Bareiss division is exact");
            }
            m[i][k] = Poly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign_negative {
        det.neg()
    } else {
        det
    }
}

/// Desnanot–Jacobi identity for a square matrix of size >= 2:
/// `det M * det M_core = det M_nw * det M_se - det M_ne * det M_sw`,
/// with the empty determinant equal to 1.
pub fn desnanot_jacobi_check(m: &ExactMatrix) -> Result<bool, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NonSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    if n < 2 {
        return Err(LinalgError::TooSmall { size: n });
    }
    let last = n - 1;
    let full = det_exact(m)?;
    let core = det_exact(&m.minor_removing(&[0, last], &[0, last]))?;
    let nw = det_exact(&m.minor_removing(&[0], &[0]))?;
    let se = det_exact(&m.minor_removing(&[last], &[last]))?;
    let ne = det_exact(&m.minor_removing(&[0], &[last]))?;
    let sw = det_exact(&m.minor_removing(&[last], &[0]))?;
    Ok(ratfunc_eq(
        &full.mul(&core),
        &nw.mul(&se).sub(&ne.mul(&sw)),
    ))
}

/// An LU factorization with unit-lower-triangular `L`.
#[derive(Clone, Debug)]
pub struct LUPair {
    pub l: ExactMatrix,
    pub u: ExactMatrix,
}

impl LUPair {
    /// Product of the diagonal of `U`, which equals the determinant.
    pub fn u_diagonal_product(&self) -> RatFunc {
        let mut acc = RatFunc::one();
        for i in 0..self.u.rows() {
            acc = acc.mul(self.u.get(i, i));
        }
        acc
    }
}

/// Doolittle elimination over the fraction field, refusing (never pivoting)
/// on a vanishing leading principal minor so the triangular structure stays
/// comparable with closed forms.
pub fn lu_generic(m: &ExactMatrix) -> Result<LUPair, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NonSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    let mut u = m.clone();
    let mut l = ExactMatrix::identity(n);
    for k in 0..n {
        let pivot = u.get(k, k).clone();
        if pivot.is_zero() {
            return Err(LinalgError::ZeroLeadingMinor { index: k + 1 });
        }
        for i in k + 1..n {
            let factor = u.get(i, k).div(&pivot);
            if factor.is_zero() {
                continue;
            }
            for j in k..n {
                let v = u.get(i, j).sub(&factor.mul(u.get(k, j)));
                u.set(i, j, v);
            }
            l.set(i, k, factor);
        }
    }
    Ok(LUPair { l, u })
}

/// Which triangular factor a closed-form entry belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LUSide {
    L,
    U,
}

/// Closed-form entries of the LU factors of the q-moment Hankel matrix.
///
/// `L`: `(mu_i / mu_j) * (abq^{j+2}; q)_j / (abq^{i+2}; q)_j * qbinom(i, j)`.
/// `U`: `a^i q^{i^2} mu_i mu_j qbinom(j, i)
///       * (q, abq, bq; q)_i (abq^3; q^2)_i
///       / ((abq; q^2)_i (aq, abq^{i+2}, abq^{j+2}; q)_i)`,
/// with the square-root-base pairs already rationalized through step `q^2`.
pub fn qcatalan_lu_entry(which: LUSide, i: usize, j: usize) -> RatFunc {
    let q2 = Poly::var_pow(Var::q(), 2);
    match which {
        LUSide::L => {
            let binom = qbinom(i as i64, j as i64);
            if binom.is_zero() {
                return RatFunc::zero();
            }
            moment_mu(i)
                .div(&moment_mu(j))
                .mul(&qpoch(&abq_pow(j as u32 + 2), j))
                .div(&qpoch(&abq_pow(i as u32 + 2), j))
                .mul(&RatFunc::from(binom))
        }
        LUSide::U => {
            let binom = qbinom(j as i64, i as i64);
            if binom.is_zero() {
                return RatFunc::zero();
            }
            let a_q_power = RatFunc::from(
                Poly::var_pow(Var::a(), i as u32).mul(&Poly::var_pow(Var::q(), (i * i) as u32)),
            );
            a_q_power
                .mul(&moment_mu(i))
                .mul(&moment_mu(j))
                .mul(&RatFunc::from(binom))
                .mul(&qpoch(&qseries::q_pow(1), i))
                .mul(&qpoch(&abq_pow(1), i))
                .mul(&qpoch(&bq_pow(1), i))
                .mul(&qseries::qpoch_step(&abq_pow(3), i, &q2))
                .div(&qseries::qpoch_step(&abq_pow(1), i, &q2))
                .div(&qpoch(&aq_pow(1), i))
                .div(&qpoch(&abq_pow(i as u32 + 2), i))
                .div(&qpoch(&abq_pow(j as u32 + 2), i))
        }
    }
}

/// Closed-form LU factors of the n-th q-moment Hankel matrix.
pub fn qcatalan_lu(n: usize) -> LUPair {
    LUPair {
        l: ExactMatrix::from_fn(n, n, |i, j| qcatalan_lu_entry(LUSide::L, i, j)),
        u: ExactMatrix::from_fn(n, n, |i, j| qcatalan_lu_entry(LUSide::U, i, j)),
    }
}

/// Closed-form entries of the LU factors of the Motzkin Hankel matrix:
/// `l_{ij} = binom(i, j) 2F1((j-i+1)/2, (j-i)/2; j+2; 4)` and the transpose
/// formula for `U`. Both factors have unit diagonal.
pub fn motzkin_lu_entry(which: LUSide, i: usize, j: usize) -> BigRational {
    let (r, c) = match which {
        LUSide::L => (i, j),
        LUSide::U => (j, i),
    };
    // For U the formula swaps the roles of i and j.
    let binom = binomial(r as i64, c as i64);
    if binom.is_zero() {
        return BigRational::zero();
    }
    let alpha = BigRational::new(BigInt::from(c as i64 - r as i64 + 1), BigInt::from(2));
    let beta = BigRational::new(BigInt::from(c as i64 - r as i64), BigInt::from(2));
    let gamma = rat(c as i64 + 2);
    let f = qseries::f21_terminating(&alpha, &beta, &gamma, &rat(4))
        .expect("series terminates for c <= r");
    BigRational::from_integer(binom) * f
}

/// Closed-form LU factors of the n-th Motzkin Hankel matrix.
pub fn motzkin_lu(n: usize) -> LUPair {
    LUPair {
        l: ExactMatrix::from_fn(n, n, |i, j| {
            RatFunc::constant(motzkin_lu_entry(LUSide::L, i, j))
        }),
        u: ExactMatrix::from_fn(n, n, |i, j| {
            RatFunc::constant(motzkin_lu_entry(LUSide::U, i, j))
        }),
    }
}

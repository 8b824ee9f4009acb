//! Exact generators for every sequence whose Hankel determinants the crate
//! verifies: Catalan, the central-binomial variants B and D, Motzkin, large
//! Schröder, the q-Schröder polynomials, diagonal Delannoy numbers, and the
//! little q-Jacobi moments.

use crate::algebra::{binomial, BigInt, Poly, RatFunc, Var};
use crate::qseries::moment_mu;
use num_traits::One;
use std::fmt;

/// The sequence families, with a uniform accessor. Integer-valued kinds carry
/// `BigInt` values; `QSchroder` carries polynomials in `q`; `QMoment` carries
/// rational functions in `q`, `a`, `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SequenceKind {
    Catalan,
    B,
    D,
    Motzkin,
    Schroder,
    QSchroder,
    DelannoyDiag,
    QMoment,
}

impl SequenceKind {
    pub const ALL: [SequenceKind; 8] = [
        SequenceKind::Catalan,
        SequenceKind::B,
        SequenceKind::D,
        SequenceKind::Motzkin,
        SequenceKind::Schroder,
        SequenceKind::QSchroder,
        SequenceKind::DelannoyDiag,
        SequenceKind::QMoment,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            SequenceKind::Catalan => "catalan",
            SequenceKind::B => "b",
            SequenceKind::D => "d",
            SequenceKind::Motzkin => "motzkin",
            SequenceKind::Schroder => "schroder",
            SequenceKind::QSchroder => "q-schroder",
            SequenceKind::DelannoyDiag => "delannoy-diag",
            SequenceKind::QMoment => "q-moment",
        }
    }

    pub fn from_name(name: &str) -> Option<SequenceKind> {
        SequenceKind::ALL.iter().copied().find(|k| k.name() == name)
    }

    pub fn is_integer_valued(&self) -> bool {
        !matches!(self, SequenceKind::QSchroder | SequenceKind::QMoment)
    }
}

impl fmt::Display for SequenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A sequence value of whichever type the kind produces.
#[derive(Clone, Debug, PartialEq)]
pub enum SeqValue {
    Int(BigInt),
    Poly(Poly),
    Rat(RatFunc),
}

impl SeqValue {
    pub fn to_ratfunc(&self) -> RatFunc {
        match self {
            SeqValue::Int(n) => RatFunc::from(n.clone()),
            SeqValue::Poly(p) => RatFunc::from(p.clone()),
            SeqValue::Rat(r) => r.clone(),
        }
    }
}

impl fmt::Display for SeqValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeqValue::Int(n) => write!(f, "{n}"),
            SeqValue::Poly(p) => write!(f, "{p}"),
            SeqValue::Rat(r) => write!(f, "{r}"),
        }
    }
}

/// Catalan number `binom(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> BigInt {
    let n = n as i64;
    binomial(2 * n, n) / BigInt::from(n + 1)
}

/// `binom(2n+1, n)`.
pub fn b_number(n: usize) -> BigInt {
    let n = n as i64;
    binomial(2 * n + 1, n)
}

/// Central binomial `binom(2n, n)`.
pub fn d_number(n: usize) -> BigInt {
    let n = n as i64;
    binomial(2 * n, n)
}

/// Motzkin numbers `M_0..M_n` via the convolution recurrence
/// `M_{n+1} = M_n + sum_k M_k M_{n-1-k}`.
pub fn motzkin_prefix(n: usize) -> Vec<BigInt> {
    let mut m: Vec<BigInt> = Vec::with_capacity(n + 1);
    m.push(BigInt::one());
    for i in 1..=n {
        let mut next = m[i - 1].clone();
        for k in 0..i.saturating_sub(1) {
            next += &m[k] * &m[i - 2 - k];
        }
        m.push(next);
    }
    m
}

pub fn motzkin(n: usize) -> BigInt {
    motzkin_prefix(n).pop().unwrap()
}

/// Large Schröder numbers `S_0..S_n` via
/// `S_n = S_{n-1} + sum_k S_k S_{n-1-k}`.
pub fn schroder_prefix(n: usize) -> Vec<BigInt> {
    let mut s: Vec<BigInt> = Vec::with_capacity(n + 1);
    s.push(BigInt::one());
    for i in 1..=n {
        let mut next = s[i - 1].clone();
        for k in 0..i {
            next += &s[k] * &s[i - 1 - k];
        }
        s.push(next);
    }
    s
}

pub fn schroder(n: usize) -> BigInt {
    schroder_prefix(n).pop().unwrap()
}

/// q-Schröder polynomials `S_0(q)..S_n(q)` via the recurrence
/// `S_n(q) = q^{2n-1} S_{n-1}(q)
///         + sum_{k=0}^{n-1} q^{2(k+1)(n-1-k)} S_{n-1-k}(q) S_k(q)`.
pub fn q_schroder_prefix(n: usize) -> Vec<Poly> {
    let q = Var::q();
    let mut s: Vec<Poly> = Vec::with_capacity(n + 1);
    s.push(Poly::one());
    for i in 1..=n {
        let mut next = s[i - 1].mul(&Poly::var_pow(q, (2 * i - 1) as u32));
        for k in 0..i {
            let e = 2 * (k + 1) * (i - 1 - k);
            let term = s[i - 1 - k].mul(&s[k]).mul(&Poly::var_pow(q, e as u32));
            next = next.add(&term);
        }
        s.push(next);
    }
    s
}

pub fn q_schroder(n: usize) -> Poly {
    q_schroder_prefix(n).pop().unwrap()
}

/// Delannoy number `D(a, b)` by dynamic programming over the full rectangle:
/// `D(a, b) = D(a-1, b) + D(a-1, b-1) + D(a, b-1)` with unit boundary.
pub fn delannoy(a: usize, b: usize) -> BigInt {
    let mut row: Vec<BigInt> = vec![BigInt::one(); b + 1];
    for _ in 1..=a {
        let mut next: Vec<BigInt> = Vec::with_capacity(b + 1);
        next.push(BigInt::one());
        for j in 1..=b {
            let v = &row[j] + &row[j - 1] + &next[j - 1];
            next.push(v);
        }
        row = next;
    }
    row.pop().unwrap()
}

/// Central Delannoy number `D(n, n)`.
pub fn delannoy_diag(n: usize) -> BigInt {
    delannoy(n, n)
}

/// Uniform accessor: the n-th value of a sequence kind.
pub fn seq_value(kind: SequenceKind, n: usize) -> SeqValue {
    match kind {
        SequenceKind::Catalan => SeqValue::Int(catalan(n)),
        SequenceKind::B => SeqValue::Int(b_number(n)),
        SequenceKind::D => SeqValue::Int(d_number(n)),
        SequenceKind::Motzkin => SeqValue::Int(motzkin(n)),
        SequenceKind::Schroder => SeqValue::Int(schroder(n)),
        SequenceKind::QSchroder => SeqValue::Poly(q_schroder(n)),
        SequenceKind::DelannoyDiag => SeqValue::Int(delannoy_diag(n)),
        SequenceKind::QMoment => SeqValue::Rat(moment_mu(n)),
    }
}

/// All values `0..=n` in one pass; the cheap way to fill Hankel matrices.
pub fn seq_prefix(kind: SequenceKind, n: usize) -> Vec<SeqValue> {
    match kind {
        SequenceKind::Motzkin => motzkin_prefix(n).into_iter().map(SeqValue::Int).collect(),
        SequenceKind::Schroder => schroder_prefix(n).into_iter().map(SeqValue::Int).collect(),
        SequenceKind::QSchroder => q_schroder_prefix(n)
            .into_iter()
            .map(SeqValue::Poly)
            .collect(),
        _ => (0..=n).map(|k| seq_value(kind, k)).collect(),
    }
}

/// Prefix of values as rational functions.
pub fn seq_ratfunc_prefix(kind: SequenceKind, n: usize) -> Vec<RatFunc> {
    seq_prefix(kind, n).iter().map(|v| v.to_ratfunc()).collect()
}

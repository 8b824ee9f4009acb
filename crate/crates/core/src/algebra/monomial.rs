//! Sparse monomials with a graded-lexicographic order.

use super::var::Var;
use smallvec::SmallVec;
use std::cmp::Ordering;
use std::fmt;

/// A power product of variables. The empty product is the constant `1`.
///
/// Exponents are strictly positive; entries are kept sorted by the canonical
/// variable order so equal monomials have identical representations.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: SmallVec<[(Var, u32); 4]>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn var(v: Var) -> Monomial {
        Monomial::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: u32) -> Monomial {
        let mut exps = SmallVec::new();
        if e > 0 {
            exps.push((v, e));
        }
        Monomial { exps }
    }

    /// Build from arbitrary (variable, exponent) pairs; repeated variables are
    /// merged and zero exponents dropped.
    pub fn from_pairs<I: IntoIterator<Item = (Var, u32)>>(pairs: I) -> Monomial {
        let mut exps: SmallVec<[(Var, u32); 4]> = pairs.into_iter().filter(|p| p.1 > 0).collect();
        exps.sort_by(|x, y| x.0.cmp(&y.0));
        let mut merged: SmallVec<[(Var, u32); 4]> = SmallVec::new();
        for (v, e) in exps {
            match merged.last_mut() {
                Some(last) if last.0 == v => last.1 += e,
                _ => merged.push((v, e)),
            }
        }
        Monomial { exps: merged }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&(_, e)| e as u64).sum()
    }

    pub fn degree_of(&self, v: Var) -> u32 {
        self.exps
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
            .unwrap_or(0)
    }

    pub fn exponents(&self) -> &[(Var, u32)] {
        &self.exps
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.exps.iter().map(|&(v, _)| v)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out: SmallVec<[(Var, u32); 4]> = SmallVec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            let (v1, e1) = self.exps[i];
            let (v2, e2) = other.exps[j];
            match v1.cmp(&v2) {
                Ordering::Less => {
                    out.push((v1, e1));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((v2, e2));
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((v1, e1 + e2));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.exps[i..]);
        out.extend_from_slice(&other.exps[j..]);
        Monomial { exps: out }
    }

    /// Divide by `other` if every exponent of `other` is covered.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out: SmallVec<[(Var, u32); 4]> = SmallVec::new();
        let mut i = 0;
        for &(v, e) in &other.exps {
            loop {
                if i >= self.exps.len() {
                    return None;
                }
                let (w, f) = self.exps[i];
                match w.cmp(&v) {
                    Ordering::Less => {
                        out.push((w, f));
                        i += 1;
                    }
                    Ordering::Equal => {
                        if f < e {
                            return None;
                        }
                        if f > e {
                            out.push((w, f - e));
                        }
                        i += 1;
                        break;
                    }
                    Ordering::Greater => return None,
                }
            }
        }
        out.extend_from_slice(&self.exps[i..]);
        Some(Monomial { exps: out })
    }

    /// Componentwise minimum of exponents.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out: SmallVec<[(Var, u32); 4]> = SmallVec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            let (v1, e1) = self.exps[i];
            let (v2, e2) = other.exps[j];
            match v1.cmp(&v2) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => {
                    out.push((v1, e1.min(e2)));
                    i += 1;
                    j += 1;
                }
            }
        }
        Monomial { exps: out }
    }
}

impl Ord for Monomial {
    /// Graded lex: first by total degree, then lexicographically along the
    /// canonical variable order (a higher exponent on an earlier variable
    /// makes the monomial larger).
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.exps.get(i), other.exps.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(v1, e1)), Some(&(v2, e2))) => match v1.cmp(&v2) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match e1.cmp(&e2) {
                        Ordering::Equal => {
                            i += 1;
                            j += 1;
                        }
                        ord => return ord,
                    },
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    /// Factors are printed alphabetically by name, e.g. `a*b*q^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut factors: Vec<(Var, u32)> = self.exps.to_vec();
        factors.sort_by(|x, y| x.0.name().cmp(y.0.name()));
        for (k, (v, e)) in factors.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

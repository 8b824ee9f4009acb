//! Polynomial GCD.
//!
//! The workhorse is a heuristic evaluation GCD: substitute a large integer
//! for one variable at a time, take the (recursive) GCD of the images,
//! reconstruct candidate coefficients by balanced base-xi expansion, and
//! verify by exact division. Verification makes the result exact; failures
//! retry with a larger evaluation point and ultimately fall back to a
//! primitive pseudo-remainder sequence. Cheap prefilters (divisibility
//! probes and a modular coprimality test) keep already-reduced fractions
//! cheap.

use super::poly::Poly;
use super::var::Var;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GcdError {
    BothZero,
}

impl fmt::Display for GcdError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GcdError::BothZero => f.write_str("gcd of two zero polynomials"),
        }
    }
}

impl std::error::Error for GcdError {}

/// Normalize so the first (canonically smallest) term has positive
/// coefficient and the coefficient content is 1.
pub fn normalize_primitive(p: &Poly) -> Poly {
    if p.is_zero() {
        return Poly::zero();
    }
    let mut c = p.content();
    if p.min_term().unwrap().1.is_negative() {
        c = -c;
    }
    p.mul_scalar(&(BigRational::one() / c))
}

/// A greatest common divisor, primitive with positive leading coefficient.
pub fn poly_gcd(p: &Poly, q: &Poly) -> Result<Poly, GcdError> {
    if p.is_zero() && q.is_zero() {
        return Err(GcdError::BothZero);
    }
    Ok(gcd_inner(p, q))
}

/// Total GCD including monomial content; returns a normalized primitive poly.
pub fn gcd_inner(p: &Poly, q: &Poly) -> Poly {
    if p.is_zero() {
        return normalize_primitive(q);
    }
    if q.is_zero() {
        return normalize_primitive(p);
    }
    let mp = p.monomial_content();
    let mq = q.monomial_content();
    let mg = mp.gcd(&mq);
    let p = normalize_primitive(&p.div_monomial(&mp));
    let q = normalize_primitive(&q.div_monomial(&mq));
    let core = gcd_primitive(&p, &q);
    normalize_primitive(&core.mul_monomial(&mg, &BigRational::one()))
}

/// GCD of two nonzero primitive polynomials with monomial content removed.
fn gcd_primitive(p: &Poly, q: &Poly) -> Poly {
    if p.as_constant().is_some() || q.as_constant().is_some() {
        return Poly::one();
    }
    if p == q {
        return p.clone();
    }
    // Divisibility probes catch nested denominators cheaply.
    if q.exact_div(p).is_some() {
        return p.clone();
    }
    if p.exact_div(q).is_some() {
        return q.clone();
    }
    if definitely_coprime_heuristic(p, q) {
        return Poly::one();
    }
    let pv = p.vars();
    let qv = q.vars();
    if pv.intersection(&qv).next().is_none() {
        // No shared variable: any common divisor would be constant.
        return Poly::one();
    }
    if let Some(g) = heuristic_gcd(p, q, 0) {
        return normalize_primitive(&g);
    }
    normalize_primitive(&prs_gcd(p, q))
}

// --- heuristic evaluation GCD ------------------------------------------------

const HEUGCD_MAX_DEPTH: usize = 8;
const HEUGCD_TRIES: usize = 8;

fn max_abs_int_coeff(p: &Poly) -> BigInt {
    // Inputs are primitive, so coefficients are integers.
    let mut m = BigInt::zero();
    for (_, c) in p.terms() {
        let n = c.numer().abs();
        if n > m {
            m = n;
        }
    }
    m
}

/// Heuristic GCD of two integer-coefficient polynomials. The result carries
/// the integer content: `gcd = gcd(contents) * gcd(primitive parts)`, which
/// the base-xi reconstruction of the level above depends on.
fn heuristic_gcd(p: &Poly, q: &Poly, depth: usize) -> Option<Poly> {
    if depth > HEUGCD_MAX_DEPTH {
        return None;
    }
    if p.is_zero() {
        return Some(q.clone());
    }
    if q.is_zero() {
        return Some(p.clone());
    }
    let cont_p = p.content();
    let cont_q = q.content();
    let c = BigRational::from_integer(cont_p.numer().gcd(cont_q.numer()));
    let p = p.mul_scalar(&(BigRational::one() / &cont_p));
    let q = q.mul_scalar(&(BigRational::one() / &cont_q));
    if p.as_constant().is_some() || q.as_constant().is_some() {
        // A primitive constant is a unit.
        return Some(Poly::constant(c));
    }
    let vars = p.vars();
    let v = match vars.intersection(&q.vars()).next() {
        Some(&v) => v,
        None => return Some(Poly::constant(c)),
    };
    let norm = max_abs_int_coeff(&p).min(max_abs_int_coeff(&q));
    let mut xi: BigInt = norm * 2 + BigInt::from(29);
    let max_deg = p.degree_of(v).max(q.degree_of(v)) as usize;
    for _ in 0..HEUGCD_TRIES {
        let point = Poly::constant(BigRational::from_integer(xi.clone()));
        let pe = p.substitute(v, &point);
        let qe = q.substitute(v, &point);
        if !pe.is_zero() && !qe.is_zero() {
            if let Some(gamma) = heuristic_gcd(&pe, &qe, depth + 1) {
                if let Some(g) = reconstruct(&gamma, v, &xi, max_deg) {
                    let g = normalize_primitive(&g);
                    if p.exact_div(&g).is_some() && q.exact_div(&g).is_some() {
                        return Some(g.mul_scalar(&c));
                    }
                }
            }
        }
        xi = xi * BigInt::from(3) + BigInt::from(17);
    }
    None
}

/// Balanced base-xi expansion of `gamma` along powers of `v`.
fn reconstruct(gamma: &Poly, v: Var, xi: &BigInt, max_deg: usize) -> Option<Poly> {
    let mut g = Poly::zero();
    let mut rest = gamma.clone();
    let mut i = 0usize;
    let half = xi / BigInt::from(2);
    while !rest.is_zero() {
        if i > max_deg {
            return None;
        }
        let mut slice_terms = Vec::with_capacity(rest.num_terms());
        for (m, c) in rest.terms() {
            debug_assert!(c.is_integer());
            let mut r = c.numer().mod_floor(xi);
            if r > half {
                r -= xi;
            }
            if !r.is_zero() {
                slice_terms.push((m.clone(), BigRational::from_integer(r)));
            }
        }
        let slice = Poly::from_terms(slice_terms);
        g = g.add(&slice.mul(&Poly::var_pow(v, i as u32)));
        rest = rest.sub(&slice);
        rest = rest.mul_scalar(&BigRational::new(BigInt::one(), xi.clone()));
        // Exact by construction: every coefficient of rest - slice is a
        // multiple of xi.
        debug_assert!(rest.terms().iter().all(|(_, c)| c.is_integer()));
        i += 1;
    }
    Some(g)
}

// --- primitive pseudo-remainder fallback -------------------------------------

fn prs_gcd(p: &Poly, q: &Poly) -> Poly {
    let pv = p.vars();
    let qv = q.vars();
    let common: Vec<Var> = pv.intersection(&qv).copied().collect();
    if common.is_empty() {
        return Poly::one();
    }
    // Main variable: smallest maximum degree keeps the remainder sequence short.
    let v = *common
        .iter()
        .min_by_key(|&&v| p.degree_of(v).max(q.degree_of(v)))
        .unwrap();
    let (hi, lo) = if p.degree_of(v) >= q.degree_of(v) {
        (p, q)
    } else {
        (q, p)
    };
    let hi_coeffs = hi.coeffs_in(v);
    let lo_coeffs = lo.coeffs_in(v);
    let cont_hi = coeff_chain_gcd(&hi_coeffs);
    let cont_lo = coeff_chain_gcd(&lo_coeffs);
    let cont = gcd_inner(&cont_hi, &cont_lo);
    let mut r0: Vec<Poly> = hi_coeffs
        .iter()
        .map(|c| c.exact_div(&cont_hi).expect("content divides"))
        .collect();
    let mut r1: Vec<Poly> = lo_coeffs
        .iter()
        .map(|c| c.exact_div(&cont_lo).expect("content divides"))
        .collect();
    loop {
        let rem = trim(pseudo_rem(&r0, &r1));
        if rem.is_empty() {
            let g = Poly::from_coeffs_in(v, &r1);
            let g_cont = coeff_chain_gcd(&r1);
            let g = g.exact_div(&g_cont).expect("content divides");
            return cont.mul(&g);
        }
        if rem.len() == 1 {
            // Nonzero remainder of degree 0 in v: the primitive parts are coprime.
            return cont;
        }
        let rem_cont = coeff_chain_gcd(&rem);
        r0 = r1;
        r1 = rem
            .iter()
            .map(|c| c.exact_div(&rem_cont).expect("content divides"))
            .collect();
    }
}

fn trim(mut v: Vec<Poly>) -> Vec<Poly> {
    while v.last().map(|p| p.is_zero()).unwrap_or(false) {
        v.pop();
    }
    v
}

fn coeff_chain_gcd(coeffs: &[Poly]) -> Poly {
    let mut g = Poly::zero();
    for c in coeffs {
        if c.is_zero() {
            continue;
        }
        g = gcd_inner(&g, c);
        if g.is_one() {
            break;
        }
    }
    if g.is_zero() {
        Poly::one()
    } else {
        g
    }
}

/// Pseudo-remainder of two univariate views (coefficients in the remaining
/// variables), premultiplying by the divisor's leading coefficient each step.
fn pseudo_rem(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r: Vec<Poly> = a.to_vec();
    loop {
        let r_trim = trim(r.clone());
        if r_trim.len() <= db {
            return r_trim;
        }
        let dr = r_trim.len() - 1;
        let lr = r_trim[dr].clone();
        // r <- lb * r - lr * x^(dr-db) * b
        let mut next = vec![Poly::zero(); dr];
        for (k, item) in next.iter_mut().enumerate() {
            let mut t = lb.mul(&r_trim[k]);
            if k >= dr - db {
                let j = k - (dr - db);
                t = t.sub(&lr.mul(&b[j]));
            }
            *item = t;
        }
        r = next;
    }
}

// --- modular coprimality precheck --------------------------------------------

const PRIMES: [u64; 3] = [1_000_000_007, 998_244_353, 754_974_721];

/// Heuristic test that two polynomials are coprime: project all but one
/// variable to fixed points modulo a word-size prime and run a univariate
/// Euclid. A constant gcd in every projection strongly suggests coprimality.
/// Used only to skip expensive reductions, never to assert equality.
fn definitely_coprime_heuristic(p: &Poly, q: &Poly) -> bool {
    let vars: Vec<Var> = p.vars().union(&q.vars()).copied().collect();
    if vars.is_empty() {
        return true;
    }
    'outer: for &keep in &vars {
        for (attempt, &prime) in PRIMES.iter().enumerate() {
            let (pu, qu) = match (
                project_mod_p(p, keep, &vars, prime, attempt as u64),
                project_mod_p(q, keep, &vars, prime, attempt as u64),
            ) {
                (Some(x), Some(y)) => (x, y),
                _ => continue,
            };
            // Degenerate projections (degree collapse) prove nothing.
            if degree_u(&pu) != p.degree_of(keep) as usize
                || degree_u(&qu) != q.degree_of(keep) as usize
            {
                continue;
            }
            if gcd_degree_mod_p(&pu, &qu, prime) == 0 {
                continue 'outer;
            }
            return false;
        }
        // No usable projection for this variable: stay conservative.
        return false;
    }
    true
}

fn degree_u(p: &[u64]) -> usize {
    p.iter().rposition(|&c| c != 0).unwrap_or(0)
}

fn project_mod_p(p: &Poly, keep: Var, vars: &[Var], prime: u64, salt: u64) -> Option<Vec<u64>> {
    let deg = p.degree_of(keep) as usize;
    let mut out = vec![0u64; deg + 1];
    // Deterministic evaluation points per (variable, salt).
    let point = |v: Var| -> u64 {
        let mut h: u64 = 0xcbf29ce484222325 ^ salt.wrapping_mul(0x9e3779b97f4a7c15);
        for byte in v.name().bytes() {
            h ^= byte as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
        2 + h % 97
    };
    let points: Vec<(Var, u64)> = vars
        .iter()
        .filter(|&&v| v != keep)
        .map(|&v| (v, point(v)))
        .collect();
    for (m, c) in p.terms() {
        let mut value = rational_mod_p(c, prime)?;
        for &(v, e) in m.exponents() {
            if v == keep {
                continue;
            }
            let x = points.iter().find(|&&(w, _)| w == v).map(|&(_, x)| x)?;
            value = mul_mod(value, pow_mod(x, e as u64, prime), prime);
        }
        let slot = m.degree_of(keep) as usize;
        out[slot] = (out[slot] + value) % prime;
    }
    Some(out)
}

fn rational_mod_p(c: &BigRational, prime: u64) -> Option<u64> {
    let p_big = BigInt::from(prime);
    let num = c.numer().mod_floor(&p_big).to_u64()?;
    let den = c.denom().mod_floor(&p_big).to_u64()?;
    if den == 0 {
        return None;
    }
    Some(mul_mod(num, pow_mod(den, prime - 2, prime), prime))
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    acc
}

fn gcd_degree_mod_p(a: &[u64], b: &[u64], prime: u64) -> usize {
    let mut a: Vec<u64> = a[..=degree_u(a)].to_vec();
    let mut b: Vec<u64> = b[..=degree_u(b)].to_vec();
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        if b.len() == 1 && b[0] == 0 {
            return a.len() - 1;
        }
        let db = b.len() - 1;
        let lb_inv = pow_mod(b[db], prime - 2, prime);
        while a.len() > db && !(a.len() == 1 && a[0] == 0) {
            let da = a.len() - 1;
            let f = mul_mod(a[da], lb_inv, prime);
            for j in 0..=db {
                let idx = da - db + j;
                let sub = mul_mod(f, b[j], prime);
                a[idx] = (a[idx] + prime - sub) % prime;
            }
            while a.len() > 1 && *a.last().unwrap() == 0 {
                a.pop();
            }
            if a.len() == 1 && a[0] == 0 {
                break;
            }
            if a.len() <= db {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Poly {
        Poly::var(Var::q())
    }

    fn a() -> Poly {
        Poly::var(Var::a())
    }

    fn b() -> Poly {
        Poly::var(Var::b())
    }

    #[test]
    fn gcd_factor() {
        let p = Poly::one().sub(&q().pow(2));
        let d = Poly::one().sub(&q());
        assert_eq!(poly_gcd(&p, &d).unwrap(), d);
    }

    #[test]
    fn gcd_with_zero() {
        let p = Poly::one()
            .sub(&q())
            .mul_scalar(&BigRational::new(BigInt::from(-3), BigInt::from(2)));
        let g = poly_gcd(&p, &Poly::zero()).unwrap();
        assert_eq!(g, Poly::one().sub(&q()));
        assert!(poly_gcd(&Poly::zero(), &Poly::zero()).is_err());
    }

    #[test]
    fn gcd_common_binomial() {
        // gcd((1-aq)(1-bq), (1-aq)(1+bq)) = 1 - a q, checked by exact division.
        let one = Poly::one();
        let aq = a().mul(&q());
        let bq = b().mul(&q());
        let p = one.sub(&aq).mul(&one.sub(&bq));
        let r = one.sub(&aq).mul(&one.add(&bq));
        let g = poly_gcd(&p, &r).unwrap();
        assert_eq!(g, one.sub(&aq));
        assert!(p.exact_div(&g).is_some());
        assert!(r.exact_div(&g).is_some());
    }

    #[test]
    fn gcd_multivariate_product() {
        let one = Poly::one();
        let g0 = one.add(&a().mul(&b())).add(&q());
        let p = g0.mul(&one.sub(&q().pow(3)));
        let r = g0.mul(&one.add(&q().add(&a())));
        let g = poly_gcd(&p, &r).unwrap();
        assert!(p.exact_div(&g).is_some());
        assert!(r.exact_div(&g).is_some());
        assert!(g.exact_div(&g0).is_some());
    }

    #[test]
    fn gcd_pochhammer_tails() {
        // Nested products with a large shared part, the shape produced by
        // moment denominators.
        let one = Poly::one();
        let factor = |k: u32| one.sub(&a().mul(&b()).mul(&q().pow(k)));
        let mut d1 = Poly::one();
        for k in 2..=8 {
            d1 = d1.mul(&factor(k));
        }
        let mut d2 = Poly::one();
        for k in 4..=10 {
            d2 = d2.mul(&factor(k));
        }
        let g = poly_gcd(&d1, &d2).unwrap();
        let mut expected = Poly::one();
        for k in 4..=8 {
            expected = expected.mul(&factor(k));
        }
        assert_eq!(g, normalize_primitive(&expected));
    }

    #[test]
    fn coprime_is_one() {
        let p = Poly::one().sub(&a().mul(&q()));
        let r = Poly::one().sub(&b().mul(&q().pow(2)));
        assert_eq!(poly_gcd(&p, &r).unwrap(), Poly::one());
    }
}

//! Weighted lattice-path enumeration: Dyck, Motzkin and Schröder paths,
//! height-dependent weight schemes, closed generating functions, the
//! non-intersecting-path determinant check, and the product formulas for
//! Hankel determinants of generic-weight Dyck path generating functions.

use crate::algebra::{binomial, ratfunc_eq, Poly, RatFunc, Var};
use crate::linalg::{det_exact, ExactMatrix};
use crate::qseries::{abq_pow, aq_pow, qbinom, qpoch, q_pow};
use num_traits::{One, ToPrimitive};
use std::collections::HashSet;
use std::fmt;

/// Hard cap on exhaustive enumeration, in steps.
pub const ENUMERATION_STEP_GUARD: i64 = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeError {
    SizeGuard { steps: i64 },
    UnsupportedStep { step: StepType },
    UnsupportedShift { t: usize },
    NotAClosedSchroderPath,
    HeightBoundExceeded { height: i64, bound: i64 },
    EndpointMismatch,
}

impl fmt::Display for LatticeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeError::SizeGuard { steps } => write!(
                f,
                "instance needs {steps} steps, beyond the exhaustive-enumeration guard of {ENUMERATION_STEP_GUARD}"
            ),
            LatticeError::UnsupportedStep { step } => {
                write!(f, "weight scheme does not cover {step:?} steps")
            }
            LatticeError::UnsupportedShift { t } => write!(f, "no product formula for shift t={t}"),
            LatticeError::NotAClosedSchroderPath => {
                f.write_str("path is not a Schröder path ending on the x-axis")
            }
            LatticeError::HeightBoundExceeded { height, bound } => {
                write!(f, "height {height} exceeds the declared bound {bound}")
            }
            LatticeError::EndpointMismatch => f.write_str("endpoints are unreachable"),
        }
    }
}

impl std::error::Error for LatticeError {}

/// A lattice step. Rise is `(1,1)`, fall `(1,-1)`, level `(1,0)`, and the
/// Schröder long level `(2,0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StepType {
    Rise,
    Fall,
    Level,
    LongLevel,
}

impl StepType {
    pub fn displacement(&self) -> (i64, i64) {
        match self {
            StepType::Rise => (1, 1),
            StepType::Fall => (1, -1),
            StepType::Level => (1, 0),
            StepType::LongLevel => (2, 0),
        }
    }
}

/// The step alphabet of a path family. Paths never go below the x-axis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathFamily {
    Dyck,
    Motzkin,
    Schroder,
}

impl PathFamily {
    pub fn steps(&self) -> &'static [StepType] {
        match self {
            PathFamily::Dyck => &[StepType::Rise, StepType::Fall],
            PathFamily::Motzkin => &[StepType::Rise, StepType::Fall, StepType::Level],
            PathFamily::Schroder => &[StepType::Rise, StepType::Fall, StepType::LongLevel],
        }
    }

    pub fn from_name(name: &str) -> Option<PathFamily> {
        match name {
            "dyck" => Some(PathFamily::Dyck),
            "motzkin" => Some(PathFamily::Motzkin),
            "schroder" => Some(PathFamily::Schroder),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            PathFamily::Dyck => "dyck",
            PathFamily::Motzkin => "motzkin",
            PathFamily::Schroder => "schroder",
        }
    }
}

/// A lattice path: a start point and a step list. Heights are derived.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePath {
    pub start: (i64, i64),
    pub steps: Vec<StepType>,
}

impl LatticePath {
    pub fn end(&self) -> (i64, i64) {
        let mut p = self.start;
        for s in &self.steps {
            let (dx, dy) = s.displacement();
            p = (p.0 + dx, p.1 + dy);
        }
        p
    }

    /// Every lattice point the path visits, including both endpoints.
    pub fn vertices(&self) -> Vec<(i64, i64)> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut p = self.start;
        out.push(p);
        for s in &self.steps {
            let (dx, dy) = s.displacement();
            p = (p.0 + dx, p.1 + dy);
            out.push(p);
        }
        out
    }

    /// Product of step weights; each step is weighted at its origin height.
    pub fn weight(&self, w: &dyn WeightScheme) -> RatFunc {
        let mut acc = RatFunc::one();
        let mut y = self.start.1;
        for s in &self.steps {
            acc = acc.mul(&w.weight(*s, y));
            y += s.displacement().1;
        }
        acc
    }
}

/// A deterministic mapping from (step type, origin height) to a weight.
pub trait WeightScheme {
    fn weight(&self, step: StepType, height: i64) -> RatFunc;
}

/// Every step has weight 1; generating functions become path counts.
pub struct UnitWeights;

impl WeightScheme for UnitWeights {
    fn weight(&self, _step: StepType, _height: i64) -> RatFunc {
        RatFunc::one()
    }
}

/// The fall-weight family `lambda_h` attached to the q-moment sequence:
/// odd height `2k+1` gives `q^k (1-aq^{k+1})(1-abq^{k+1}) /
/// ((1-abq^{2k+1})(1-abq^{2k+2}))`, even height `2k` gives
/// `a q^k (1-q^k)(1-bq^k) / ((1-abq^{2k})(1-abq^{2k+1}))`.
pub fn lambda_weight(h: usize) -> RatFunc {
    let k = (h / 2) as u32;
    if h % 2 == 1 {
        q_pow(k)
            .mul(&RatFunc::one().sub(&aq_pow(k + 1)))
            .mul(&RatFunc::one().sub(&abq_pow(k + 1)))
            .div(
                &RatFunc::one()
                    .sub(&abq_pow(2 * k + 1))
                    .mul(&RatFunc::one().sub(&abq_pow(2 * k + 2))),
            )
    } else {
        RatFunc::var(Var::a())
            .mul(&q_pow(k))
            .mul(&RatFunc::one().sub(&q_pow(k)))
            .mul(&RatFunc::one().sub(&RatFunc::var(Var::b()).mul(&q_pow(k))))
            .div(
                &RatFunc::one()
                    .sub(&abq_pow(2 * k))
                    .mul(&RatFunc::one().sub(&abq_pow(2 * k + 1))),
            )
    }
}

/// Dyck-path weights: rises are free, a fall from height `h` costs
/// `lambda_h`. Level steps are outside this scheme.
pub fn weight_qcatalan(step: StepType, h: i64) -> Result<RatFunc, LatticeError> {
    match step {
        StepType::Rise => Ok(RatFunc::one()),
        StepType::Fall => Ok(lambda_weight(h.max(0) as usize)),
        other => Err(LatticeError::UnsupportedStep { step: other }),
    }
}

/// [`weight_qcatalan`] as a scheme (falls weighted at their origin height).
pub struct QCatalanWeights;

impl WeightScheme for QCatalanWeights {
    fn weight(&self, step: StepType, height: i64) -> RatFunc {
        weight_qcatalan(step, height).expect("Dyck steps only")
    }
}

/// Motzkin-path weights built from the same `lambda` family: a rise at
/// height `h` carries `lambda_{2h+1}`, a fall `lambda_{2h}`, a level
/// `lambda_{2h} + lambda_{2h+1}`.
pub struct MotzkinMomentWeights;

impl WeightScheme for MotzkinMomentWeights {
    fn weight(&self, step: StepType, height: i64) -> RatFunc {
        let h = height.max(0) as usize;
        match step {
            StepType::Rise => lambda_weight(2 * h + 1),
            StepType::Fall => lambda_weight(2 * h),
            StepType::Level => lambda_weight(2 * h).add(&lambda_weight(2 * h + 1)),
            StepType::LongLevel => panic!("long level steps are not Motzkin steps"),
        }
    }
}

/// Fresh symbolic weights `a_h`, `b_h`, `c_h` per (type, height) pair, up to
/// a declared height bound.
pub struct GenericWeights {
    pub height_bound: i64,
}

impl GenericWeights {
    pub fn new(height_bound: i64) -> GenericWeights {
        GenericWeights { height_bound }
    }
}

/// The symbolic rise weight `a_h`.
pub fn rise_var(h: i64) -> Var {
    Var::new(&format!("a_{h}"))
}

/// The symbolic fall weight `b_h`.
pub fn fall_var(h: i64) -> Var {
    Var::new(&format!("b_{h}"))
}

/// The symbolic level weight `c_h`.
pub fn level_var(h: i64) -> Var {
    Var::new(&format!("c_{h}"))
}

impl WeightScheme for GenericWeights {
    fn weight(&self, step: StepType, height: i64) -> RatFunc {
        assert!(
            height <= self.height_bound,
            "height {height} beyond declared bound {}",
            self.height_bound
        );
        let v = match step {
            StepType::Rise => rise_var(height),
            StepType::Fall => fall_var(height),
            StepType::Level | StepType::LongLevel => level_var(height),
        };
        RatFunc::var(v)
    }
}

/// All paths of a family between two points, by depth-first search. Guarded:
/// the x-distance must not exceed [`ENUMERATION_STEP_GUARD`].
pub fn enumerate_paths(
    family: PathFamily,
    from: (i64, i64),
    to: (i64, i64),
) -> Result<Vec<LatticePath>, LatticeError> {
    let span = to.0 - from.0;
    if span < 0 || from.1 < 0 || to.1 < 0 {
        return Ok(Vec::new());
    }
    if span > ENUMERATION_STEP_GUARD {
        return Err(LatticeError::SizeGuard { steps: span });
    }
    let mut out = Vec::new();
    let mut stack: Vec<StepType> = Vec::new();
    fn dfs(
        family: PathFamily,
        at: (i64, i64),
        to: (i64, i64),
        stack: &mut Vec<StepType>,
        out: &mut Vec<LatticePath>,
        start: (i64, i64),
    ) {
        if at.0 == to.0 {
            if at.1 == to.1 {
                out.push(LatticePath {
                    start,
                    steps: stack.clone(),
                });
            }
            return;
        }
        for &s in family.steps() {
            let (dx, dy) = s.displacement();
            let next = (at.0 + dx, at.1 + dy);
            // Reachability pruning: stay on the lattice and inside the cone.
            if next.1 < 0 || next.0 > to.0 || (to.0 - next.0) < (to.1 - next.1).abs() {
                continue;
            }
            stack.push(s);
            dfs(family, next, to, stack, out, start);
            stack.pop();
        }
    }
    dfs(family, from, to, &mut stack, &mut out, from);
    Ok(out)
}

/// Sum of path weights over an exhaustive enumeration.
pub fn gf_paths_enum(
    family: PathFamily,
    from: (i64, i64),
    to: (i64, i64),
    w: &dyn WeightScheme,
) -> Result<RatFunc, LatticeError> {
    let mut acc = RatFunc::zero();
    for p in enumerate_paths(family, from, to)? {
        acc = acc.add(&p.weight(w));
    }
    Ok(acc)
}

/// Generating function of paths from `(0,0)` to `(m, n)` by forward dynamic
/// programming over (x, height). Empty families give 0.
pub fn gf_paths_dp(family: PathFamily, m: usize, n: usize, w: &dyn WeightScheme) -> RatFunc {
    let width = m + 1;
    let max_h = m + 1;
    // table[x][y]
    let mut table: Vec<Vec<RatFunc>> = vec![vec![RatFunc::zero(); max_h + 1]; width + 1];
    table[0][0] = RatFunc::one();
    for x in 0..width {
        for y in 0..=max_h {
            if table[x][y].is_zero() {
                continue;
            }
            let from = table[x][y].clone();
            for &s in family.steps() {
                let (dx, dy) = s.displacement();
                let nx = x + dx as usize;
                let ny = y as i64 + dy;
                if ny < 0 || nx > m || ny as usize > max_h {
                    continue;
                }
                let step_weight = w.weight(s, y as i64);
                let ny = ny as usize;
                table[nx][ny] = table[nx][ny].add(&from.mul(&step_weight));
            }
        }
    }
    if n > max_h {
        return RatFunc::zero();
    }
    table[m][n].clone()
}

/// The closed form of the Dyck path generating function under the q-moment
/// weights: `qbinom(floor(m/2), floor(n/2)) (a q^{1+ceil(n/2)}; q)_{(m-n)/2}
/// / (a b q^{2+n}; q)_{(m-n)/2}`. Zero when the parity mismatches or `n > m`.
pub fn closed_gf_dyck(m: usize, n: usize) -> RatFunc {
    if m % 2 != n % 2 || n > m {
        return RatFunc::zero();
    }
    let half = (m - n) / 2;
    let binom = qbinom((m / 2) as i64, (n / 2) as i64);
    let num = qpoch(&aq_pow(1 + n.div_ceil(2) as u32), half);
    let den = qpoch(&abq_pow(2 + n as u32), half);
    RatFunc::from(binom).mul(&num).div(&den)
}

/// Comparison record for the closed Motzkin generating function: the dynamic
/// programming value is authoritative; the printed formula is evaluated
/// verbatim with its `q^{binom(m,n)}` prefactor, and the pure q-power by
/// which the unprefixed formula differs from the DP value is reported.
#[derive(Clone, Debug)]
pub struct MotzkinGfComparison {
    pub dp: RatFunc,
    pub printed: RatFunc,
    pub matches_printed: bool,
    /// `e` with `dp = q^e * (formula without its q-power prefactor)`, when
    /// the ratio is a pure q-power.
    pub observed_q_exponent: Option<i64>,
}

/// Evaluate the closed Motzkin generating function claim at `(m, n)` and
/// report how it compares with the dynamic-programming value.
pub fn closed_gf_motzkin(m: usize, n: usize) -> Result<MotzkinGfComparison, LatticeError> {
    if n > m {
        return Err(LatticeError::EndpointMismatch);
    }
    let dp = gf_paths_dp(PathFamily::Motzkin, m, n, &MotzkinMomentWeights);
    let base = RatFunc::from(qbinom(m as i64, n as i64))
        .mul(&qpoch(&aq_pow(1), m))
        .mul(&RatFunc::one().sub(&abq_pow(2 * n as u32 + 1)))
        .div(&qpoch(&abq_pow(n as u32 + 1), m + 1));
    let printed_exponent = binomial(m as i64, n as i64);
    let printed = base.mul(&RatFunc::from(Poly::var_pow(
        Var::q(),
        printed_exponent.to_u32().unwrap_or(0),
    )));
    let matches_printed = ratfunc_eq(&dp, &printed);
    let observed_q_exponent = if base.is_zero() {
        None
    } else {
        pure_q_power(&dp.div(&base))
    };
    Ok(MotzkinGfComparison {
        dp,
        printed,
        matches_printed,
        observed_q_exponent,
    })
}

/// `Some(e)` when the value is exactly `q^e`.
fn pure_q_power(rf: &RatFunc) -> Option<i64> {
    let num = rf.num();
    let den = rf.den();
    let as_power = |p: &Poly| -> Option<i64> {
        if p.num_terms() != 1 {
            return None;
        }
        let (m, c) = &p.terms()[0];
        if !c.is_one() {
            return None;
        }
        let exps = m.exponents();
        match exps {
            [] => Some(0),
            [(v, e)] if *v == Var::q() => Some(*e as i64),
            _ => None,
        }
    };
    Some(as_power(num)? - as_power(den)?)
}

/// The triangle count below a Schröder path running from `(0,0)` back to the
/// axis: each rise from `(x, y)` contributes `x - y`, each long level
/// `x - y + 1`, falls contribute nothing.
pub fn omega_schroder(p: &LatticePath) -> Result<u64, LatticeError> {
    if p.start.1 != 0 || p.end().1 != 0 {
        return Err(LatticeError::NotAClosedSchroderPath);
    }
    let mut total: i64 = 0;
    let (mut x, mut y) = p.start;
    for s in &p.steps {
        match s {
            StepType::Rise => total += x - y,
            StepType::LongLevel => total += x - y + 1,
            StepType::Fall => {}
            StepType::Level => return Err(LatticeError::NotAClosedSchroderPath),
        }
        let (dx, dy) = s.displacement();
        x += dx;
        y += dy;
        if y < 0 {
            return Err(LatticeError::NotAClosedSchroderPath);
        }
    }
    Ok(total as u64)
}

/// The q-Schröder polynomial as a weighted path sum: `sum_P q^{omega(P)}`
/// over Schröder paths from the origin to `(2n, 0)`.
pub fn q_schroder_by_paths(n: usize) -> Result<Poly, LatticeError> {
    let q = Var::q();
    let mut acc = Poly::zero();
    for p in enumerate_paths(PathFamily::Schroder, (0, 0), (2 * n as i64, 0))? {
        let e = omega_schroder(&p)?;
        acc = acc.add(&Poly::var_pow(q, e as u32));
    }
    Ok(acc)
}

/// Result of the non-intersecting-path determinant check.
#[derive(Clone, Debug)]
pub struct LgvReport {
    /// The matrix `(h(u_i, v_j))` of single-path generating functions.
    pub matrix: ExactMatrix,
    /// Its determinant.
    pub det: RatFunc,
    /// The brute-force generating function of vertex-disjoint path tuples.
    pub brute: RatFunc,
}

impl LgvReport {
    pub fn holds(&self) -> bool {
        ratfunc_eq(&self.det, &self.brute)
    }
}

/// Non-intersecting Dyck-path check with the standard endpoint layout
/// `u_i = (x0 - 2(i-1), 0)`, `v_j = (x0 + 2(j+t-1), 0)` and `x0 = 2(n-1)`
/// so that all coordinates stay nonnegative.
pub fn lgv_check(
    n: usize,
    t: usize,
    w: &dyn WeightScheme,
    height_bound: i64,
) -> Result<LgvReport, LatticeError> {
    lgv_check_at(n, t, w, height_bound, 2 * (n as i64 - 1))
}

/// Same check at an explicit `x0`; determinants are translation invariant.
pub fn lgv_check_at(
    n: usize,
    t: usize,
    w: &dyn WeightScheme,
    height_bound: i64,
    x0: i64,
) -> Result<LgvReport, LatticeError> {
    assert!(n >= 1);
    let u = |i: usize| -> (i64, i64) { (x0 - 2 * (i as i64 - 1), 0) };
    let v = |j: usize| -> (i64, i64) { (x0 + 2 * (j as i64 + t as i64 - 1), 0) };
    let max_span = v(n).0 - u(n).0;
    if max_span > ENUMERATION_STEP_GUARD {
        return Err(LatticeError::SizeGuard { steps: max_span });
    }
    if 2 * (n as i64 + t as i64) > height_bound + 2 {
        // Paths can reach height span/2; insist the scheme covers it.
        let height = max_span / 2;
        if height > height_bound {
            return Err(LatticeError::HeightBoundExceeded {
                height,
                bound: height_bound,
            });
        }
    }
    // Heights are translation invariant, so h(u_i, v_j) depends on the span.
    let matrix = ExactMatrix::from_fn(n, n, |i0, j0| {
        let span = v(j0 + 1).0 - u(i0 + 1).0;
        if span < 0 {
            return RatFunc::zero();
        }
        gf_paths_dp(PathFamily::Dyck, span as usize, 0, w)
    });
    let det = det_exact(&matrix).expect("square by construction");
    // Brute force: all vertex-disjoint tuples (P_1, ..., P_n), P_i: u_i -> v_i.
    let candidate_paths: Vec<Vec<LatticePath>> = (1..=n)
        .map(|i| enumerate_paths(PathFamily::Dyck, u(i), v(i)))
        .collect::<Result<_, _>>()?;
    let vertex_sets: Vec<Vec<HashSet<(i64, i64)>>> = candidate_paths
        .iter()
        .map(|paths| {
            paths
                .iter()
                .map(|p| p.vertices().into_iter().collect())
                .collect()
        })
        .collect();
    let mut brute = RatFunc::zero();
    let mut chosen: Vec<usize> = Vec::with_capacity(n);
    fn rec(
        level: usize,
        n: usize,
        chosen: &mut Vec<usize>,
        candidate_paths: &[Vec<LatticePath>],
        vertex_sets: &[Vec<HashSet<(i64, i64)>>],
        w: &dyn WeightScheme,
        acc: &mut RatFunc,
    ) {
        if level == n {
            let mut weight = RatFunc::one();
            for (i, &pi) in chosen.iter().enumerate() {
                weight = weight.mul(&candidate_paths[i][pi].weight(w));
            }
            *acc = acc.add(&weight);
            return;
        }
        'next: for (pi, vs) in vertex_sets[level].iter().enumerate() {
            for (prev_level, &prev_pi) in chosen.iter().enumerate() {
                if !vertex_sets[prev_level][prev_pi].is_disjoint(vs) {
                    continue 'next;
                }
            }
            chosen.push(pi);
            rec(level + 1, n, chosen, candidate_paths, vertex_sets, w, acc);
            chosen.pop();
        }
    }
    rec(
        0,
        n,
        &mut chosen,
        &candidate_paths,
        &vertex_sets,
        w,
        &mut brute,
    );
    Ok(LgvReport { matrix, det, brute })
}

/// Hankel matrix `(G_{i+j+t})` of Dyck generating functions under a weight
/// scheme, where `G_m` is the generating function of paths to `(2m, 0)`.
pub fn dyck_hankel(n: usize, t: usize, w: &dyn WeightScheme) -> ExactMatrix {
    let top = 2 * (n - 1) + t;
    let gs: Vec<RatFunc> = (0..=top)
        .map(|m| gf_paths_dp(PathFamily::Dyck, 2 * m, 0, w))
        .collect();
    ExactMatrix::from_fn(n, n, |i, j| gs[i + j + t].clone())
}

fn product_range(factors: impl Iterator<Item = Var>) -> Poly {
    let mut acc = Poly::one();
    for v in factors {
        acc = acc.mul(&Poly::var(v));
    }
    acc
}

fn rise_run(lo: i64, hi: i64) -> Poly {
    product_range((lo..=hi).map(rise_var))
}

fn fall_run(lo: i64, hi: i64) -> Poly {
    product_range((lo..=hi).map(fall_var))
}

/// The printed product/sum formulas for `det (G_{i+j+t})` with generic
/// weights, evaluated verbatim for `t` in `0..=3`.
pub fn viennot_rhs(t: usize, n: usize) -> Result<Poly, LatticeError> {
    assert!(n >= 1);
    match t {
        0 => {
            let mut acc = Poly::one();
            for i in 1..=n as i64 {
                let base = rise_run(2 * i - 2, 2 * i - 1).mul(&fall_run(2 * i - 1, 2 * i));
                acc = acc.mul(&base.pow((n as i64 - i) as u32));
            }
            Ok(acc)
        }
        1 => {
            let mut acc = Poly::one();
            for i in 1..=n as i64 {
                let first = Poly::var(rise_var(2 * i - 2)).mul(&Poly::var(fall_var(2 * i - 1)));
                let second = Poly::var(rise_var(2 * i - 1)).mul(&Poly::var(fall_var(2 * i)));
                acc = acc.mul(&first.pow((n as i64 - i + 1) as u32));
                acc = acc.mul(&second.pow((n as i64 - i) as u32));
            }
            Ok(acc)
        }
        2 => {
            // Verbatim reading: both products run over i = 1..k, and the
            // b-run goes up to b_{2i-1} before the squared b_{2i-1}.
            let mut acc = Poly::zero();
            for k in 0..=n as i64 {
                let mut first = Poly::one();
                let mut second = Poly::one();
                for i in 1..=k {
                    first = first
                        .mul(&rise_run(0, 2 * i - 3))
                        .mul(&Poly::var_pow(rise_var(2 * i - 2), 2))
                        .mul(&fall_run(1, 2 * i - 1))
                        .mul(&Poly::var_pow(fall_var(2 * i - 1), 2));
                    second = second.mul(&rise_run(0, 2 * i - 1)).mul(&fall_run(1, 2 * i));
                }
                acc = acc.add(&first.mul(&second));
            }
            Ok(acc)
        }
        3 => {
            let mut acc = Poly::zero();
            for k in 0..=n as i64 {
                let mut first = Poly::zero();
                let mut second = Poly::zero();
                for l in 0..=k {
                    let mut f = Poly::one();
                    for i in 1..=l {
                        f = f
                            .mul(&rise_run(0, 2 * i - 3))
                            .mul(&Poly::var_pow(rise_var(2 * i - 2), 2))
                            .mul(&Poly::var(fall_var(2 * i - 1)));
                    }
                    for i in l + 1..=k {
                        f = f
                            .mul(&rise_run(0, 2 * i - 3))
                            .mul(&Poly::var(rise_var(2 * i - 2)))
                            .mul(&Poly::var(rise_var(2 * i - 1)))
                            .mul(&Poly::var(fall_var(2 * i)));
                    }
                    first = first.add(&f);
                    let mut g = Poly::one();
                    for i in 1..=l {
                        g = g
                            .mul(&fall_run(1, 2 * i - 2))
                            .mul(&Poly::var_pow(fall_var(2 * i - 1), 2))
                            .mul(&Poly::var(rise_var(2 * i - 2)));
                    }
                    for i in l + 1..=k {
                        g = g
                            .mul(&fall_run(1, 2 * i - 2))
                            .mul(&Poly::var(fall_var(2 * i - 1)))
                            .mul(&Poly::var(fall_var(2 * i)))
                            .mul(&Poly::var(rise_var(2 * i - 1)));
                    }
                    second = second.add(&g);
                }
                let mut tail = Poly::one();
                for i in k + 1..=n as i64 {
                    tail = tail.mul(&rise_run(0, 2 * i)).mul(&fall_run(1, 2 * i + 1));
                }
                acc = acc.add(&first.mul(&second).mul(&tail));
            }
            Ok(acc)
        }
        t => Err(LatticeError::UnsupportedShift { t }),
    }
}

/// The `t = 2` sum with the two suspected misprints repaired: the second
/// product runs over `i = k+1..n`, and the squared fall weight follows the
/// run `b_1..b_{2i-2}`. For `t` in `{0, 1, 3}` this coincides with
/// [`viennot_rhs`].
pub fn viennot_rhs_corrected(t: usize, n: usize) -> Result<Poly, LatticeError> {
    if t != 2 {
        return viennot_rhs(t, n);
    }
    let mut acc = Poly::zero();
    for k in 0..=n as i64 {
        let mut first = Poly::one();
        for i in 1..=k {
            first = first
                .mul(&rise_run(0, 2 * i - 3))
                .mul(&Poly::var_pow(rise_var(2 * i - 2), 2))
                .mul(&fall_run(1, 2 * i - 2))
                .mul(&Poly::var_pow(fall_var(2 * i - 1), 2));
        }
        let mut tail = Poly::one();
        for i in k + 1..=n as i64 {
            tail = tail.mul(&rise_run(0, 2 * i - 1)).mul(&fall_run(1, 2 * i));
        }
        acc = acc.add(&first.mul(&tail));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_ratfunc, rat};
    use crate::contfrac::SFraction;
    use crate::qseries::moment_mu;
    use crate::sequences::{catalan, motzkin, q_schroder, schroder};
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::ToPrimitive;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::collections::HashMap;

    #[test]
    fn enumerate_dyck_counts() {
        let paths = enumerate_paths(PathFamily::Dyck, (0, 0), (2, 0)).unwrap();
        assert_eq!(paths.len(), 1);
        assert_eq!(paths[0].steps, vec![StepType::Rise, StepType::Fall]);
        let paths = enumerate_paths(PathFamily::Dyck, (0, 0), (4, 0)).unwrap();
        assert_eq!(paths.len(), 2, "C_2 = 2");
        for n in 0..=7usize {
            let d = enumerate_paths(PathFamily::Dyck, (0, 0), (2 * n as i64, 0))
                .unwrap()
                .len();
            assert_eq!(BigInt::from(d), catalan(n), "Dyck n={n}");
            let m = enumerate_paths(PathFamily::Motzkin, (0, 0), (n as i64, 0))
                .unwrap()
                .len();
            assert_eq!(BigInt::from(m), motzkin(n), "Motzkin n={n}");
            let s = enumerate_paths(PathFamily::Schroder, (0, 0), (2 * n as i64, 0))
                .unwrap()
                .len();
            assert_eq!(BigInt::from(s), schroder(n), "Schröder n={n}");
        }
        assert!(matches!(
            enumerate_paths(PathFamily::Dyck, (0, 0), (26, 0)),
            Err(LatticeError::SizeGuard { .. })
        ));
    }

    #[test]
    fn dp_agrees_with_enumeration_under_random_weights() {
        struct TableWeights(HashMap<(StepType, i64), RatFunc>);
        impl WeightScheme for TableWeights {
            fn weight(&self, step: StepType, height: i64) -> RatFunc {
                self.0
                    .get(&(step, height))
                    .cloned()
                    .unwrap_or_else(RatFunc::one)
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut table = HashMap::new();
        for h in 0..=8i64 {
            for s in [StepType::Rise, StepType::Fall, StepType::Level, StepType::LongLevel] {
                table.insert(
                    (s, h),
                    RatFunc::constant(BigRational::new(
                        BigInt::from(rng.gen_range(1i64..=9)),
                        BigInt::from(rng.gen_range(1i64..=4)),
                    )),
                );
            }
        }
        let w = TableWeights(table);
        for family in [PathFamily::Dyck, PathFamily::Motzkin, PathFamily::Schroder] {
            for m in 0..=8usize {
                for n in 0..=m {
                    let dp = gf_paths_dp(family, m, n, &w);
                    let brute =
                        gf_paths_enum(family, (0, 0), (m as i64, n as i64), &w).unwrap();
                    assert!(ratfunc_eq(&dp, &brute), "{family:?} m={m} n={n}");
                }
            }
        }
    }

    #[test]
    fn dp_base_cases() {
        assert!(gf_paths_dp(PathFamily::Dyck, 0, 0, &QCatalanWeights).is_one());
        assert!(gf_paths_dp(PathFamily::Dyck, 0, 2, &QCatalanWeights).is_zero());
    }

    #[test]
    fn qcatalan_fall_weights() {
        let l1: RatFunc = parse_ratfunc("(1 - a*q)/(1 - a*b*q^2)").unwrap();
        assert_eq!(weight_qcatalan(StepType::Fall, 1).unwrap(), l1);
        let l2: RatFunc =
            parse_ratfunc("(a*q*(1 - q)*(1 - b*q))/((1 - a*b*q^2)*(1 - a*b*q^3))").unwrap();
        assert_eq!(weight_qcatalan(StepType::Fall, 2).unwrap(), l2);
        assert!(weight_qcatalan(StepType::Rise, 5).unwrap().is_one());
        assert!(matches!(
            weight_qcatalan(StepType::Level, 0),
            Err(LatticeError::UnsupportedStep { .. })
        ));
    }

    #[test]
    fn dyck_gf_closed_form_matches_dp() {
        for m in 0..=10usize {
            for n in 0..=m {
                let closed = closed_gf_dyck(m, n);
                if m % 2 != n % 2 {
                    assert!(closed.is_zero());
                    continue;
                }
                let dp = gf_paths_dp(PathFamily::Dyck, m, n, &QCatalanWeights);
                assert!(ratfunc_eq(&closed, &dp), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn dyck_gf_worked_example() {
        // GF of paths to (4, 0) equals mu_2 with its printed value.
        let gf = gf_paths_dp(PathFamily::Dyck, 4, 0, &QCatalanWeights);
        let printed: RatFunc =
            parse_ratfunc("((1 - a*q)*(1 - a*q^2))/((1 - a*b*q^2)*(1 - a*b*q^3))").unwrap();
        assert!(ratfunc_eq(&gf, &printed));
        assert!(ratfunc_eq(&closed_gf_dyck(4, 0), &moment_mu(2)));
        assert!(ratfunc_eq(&closed_gf_dyck(3, 1), &gf_paths_dp(PathFamily::Dyck, 3, 1, &QCatalanWeights)));
    }

    #[test]
    fn motzkin_gf_report() {
        let r = closed_gf_motzkin(0, 0).unwrap();
        assert!(r.dp.is_one());
        // Single level step at height 0: lambda_0 + lambda_1 = lambda_1.
        let r = closed_gf_motzkin(1, 0).unwrap();
        assert!(ratfunc_eq(&r.dp, &lambda_weight(1)));
        // Two steps to (2, 0): level^2 + rise*fall.
        let r = closed_gf_motzkin(2, 0).unwrap();
        let expected = lambda_weight(1)
            .mul(&lambda_weight(1))
            .add(&lambda_weight(1).mul(&lambda_weight(2)));
        assert!(ratfunc_eq(&r.dp, &expected));
        // Observed exponent law: binom(n, 2), not binom(m, n).
        for m in 0..=6usize {
            for n in 0..=m {
                let r = closed_gf_motzkin(m, n).unwrap();
                assert_eq!(
                    r.observed_q_exponent,
                    Some((binomial(n as i64, 2)).to_i64().unwrap()),
                    "m={m} n={n}"
                );
            }
        }
    }

    #[test]
    fn omega_calibration_small() {
        // n = 1: the long-level path has one triangle, rise-fall has none.
        let ll = LatticePath {
            start: (0, 0),
            steps: vec![StepType::LongLevel],
        };
        assert_eq!(omega_schroder(&ll).unwrap(), 1);
        let rf = LatticePath {
            start: (0, 0),
            steps: vec![StepType::Rise, StepType::Fall],
        };
        assert_eq!(omega_schroder(&rf).unwrap(), 0);
        for n in 0..=5usize {
            assert_eq!(q_schroder_by_paths(n).unwrap(), q_schroder(n), "n={n}");
        }
    }

    #[test]
    fn lgv_unique_tuple_cases() {
        // n=1, t=0: the empty path, determinant 1.
        let w = GenericWeights::new(16);
        let r = lgv_check(1, 0, &w, 16).unwrap();
        assert!(r.det.is_one());
        assert!(r.brute.is_one());
        // n=2, t=0: the unique non-intersecting pair.
        let r = lgv_check(2, 0, &w, 16).unwrap();
        let expected = RatFunc::from(
            Poly::var(rise_var(0))
                .mul(&Poly::var(fall_var(1)))
                .pow(2)
                .mul(&Poly::var(rise_var(1)))
                .mul(&Poly::var(fall_var(2))),
        );
        assert!(r.holds());
        assert!(ratfunc_eq(&r.brute, &expected));
    }

    #[test]
    fn lgv_matches_brute_force() {
        let w = GenericWeights::new(16);
        for n in 1..=3usize {
            for t in 0..=2usize {
                let r = lgv_check(n, t, &w, 16).unwrap();
                assert!(r.holds(), "n={n} t={t}");
                // The matrix is the Hankel matrix of the G_m.
                let hankel = dyck_hankel(n, t, &w);
                for i in 0..n {
                    for j in 0..n {
                        assert!(ratfunc_eq(r.matrix.get(i, j), hankel.get(i, j)));
                    }
                }
            }
        }
    }

    #[test]
    fn lgv_translation_invariance() {
        let w = GenericWeights::new(16);
        let a = lgv_check_at(2, 1, &w, 16, 2).unwrap();
        let b = lgv_check_at(2, 1, &w, 16, 6).unwrap();
        assert!(ratfunc_eq(&a.det, &b.det));
        assert!(ratfunc_eq(&a.brute, &b.brute));
    }

    #[test]
    fn viennot_products_match_determinants_for_t01() {
        let w = GenericWeights::new(16);
        for n in 1..=3usize {
            for t in 0..=1usize {
                let det = det_exact(&dyck_hankel(n, t, &w)).unwrap();
                let rhs = RatFunc::from(viennot_rhs(t, n).unwrap());
                assert!(ratfunc_eq(&det, &rhs), "t={t} n={n}");
            }
        }
    }

    #[test]
    fn viennot_t2_t3_comparison() {
        let w = GenericWeights::new(16);
        // t=2: the verbatim formula disagrees with the determinant (misprint);
        // the repaired reading agrees.
        for n in 1..=3usize {
            let det = det_exact(&dyck_hankel(n, 2, &w)).unwrap();
            let literal = RatFunc::from(viennot_rhs(2, n).unwrap());
            let corrected = RatFunc::from(viennot_rhs_corrected(2, n).unwrap());
            assert!(!ratfunc_eq(&det, &literal), "t=2 literal n={n}");
            assert!(ratfunc_eq(&det, &corrected), "t=2 corrected n={n}");
        }
        // t=3: the verbatim formula checks out as printed.
        for n in 1..=2usize {
            let det = det_exact(&dyck_hankel(n, 3, &w)).unwrap();
            let literal = RatFunc::from(viennot_rhs(3, n).unwrap());
            assert!(ratfunc_eq(&det, &literal), "t=3 n={n}");
        }
    }

    #[test]
    fn viennot_small_values() {
        assert!(viennot_rhs(0, 1).unwrap().is_one());
        let t1 = viennot_rhs(1, 1).unwrap();
        assert_eq!(
            t1,
            Poly::var(rise_var(0)).mul(&Poly::var(fall_var(1)))
        );
        assert!(matches!(
            viennot_rhs(4, 1),
            Err(LatticeError::UnsupportedShift { t: 4 })
        ));
    }

    #[test]
    fn flajolet_expansion_matches_path_series() {
        // S-fraction with lambda_h = a_{h-1} b_h expands to the generating
        // function of closed Dyck paths, order t^12 (depth 6).
        let lambdas: Vec<RatFunc> = (1..=6i64)
            .map(|h| RatFunc::var(rise_var(h - 1)).mul(&RatFunc::var(fall_var(h))))
            .collect();
        let sf = SFraction::new(lambdas);
        let series = sf.to_series(6).unwrap();
        let w = GenericWeights::new(16);
        for m in 0..6usize {
            let g = gf_paths_dp(PathFamily::Dyck, 2 * m, 0, &w);
            assert!(ratfunc_eq(&series.coeff(m), &g), "order {m}");
        }
    }

    #[test]
    fn unit_weight_counts() {
        for n in 0..=6usize {
            let gf = gf_paths_dp(PathFamily::Schroder, 2 * n, 0, &UnitWeights);
            assert_eq!(gf, RatFunc::from(schroder(n)), "n={n}");
        }
    }
}

//! Grid verification of the topological quandle axioms.
//!
//! Every check reduces to a residual per sampled tuple; a report keeps the
//! maximum and the tuple attaining it. A tuple whose evaluation leaves the
//! domain (or, for homeomorphism checks, breaks strict monotonicity) gets
//! residual `+∞` and is counted in [`VerificationReport::failures`]. Feeding
//! the witness back through [`VerificationReport::reevaluate`] reproduces the
//! residual exactly.
//!
//! Sweeps are split along the first sampled coordinate (`*_chunk`
//! functions) and recombined with [`VerificationReport::merge`], which is
//! deterministic regardless of how the work was partitioned.

use alloc::vec::Vec;
use core::ops::Range;

use super::point::{Domain, Point};
use super::quandle::{axis, ContinuumQuandle};
use super::ContinuumError;

pub const DEFAULT_TOLERANCE: f64 = 1e-9;
pub const DEFAULT_INVERSE_TOLERANCE: f64 = 1e-10;

/// The case split of the distributivity proof for the interval operation,
/// with `m` the midpoint. All but [`ProofCase::ActingLeft`] take `z > m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ProofCase {
    /// `z ≤ m`: every term is unchanged by `z`.
    ActingLeft,
    /// Case 1: `x, y ≥ m`.
    BothRight,
    /// Case 2: `x, y ≤ m`.
    BothLeft,
    /// Case 3: `x ≥ m ≥ y`.
    RightLeft,
    /// Case 4: `x ≤ m ≤ y`; checks `f(f(x,y),z) = f(f(x,z),y)` and the
    /// closed form with the product exponent.
    LeftRight,
}

impl ProofCase {
    pub const ALL: [ProofCase; 5] = [
        ProofCase::ActingLeft,
        ProofCase::BothRight,
        ProofCase::BothLeft,
        ProofCase::RightLeft,
        ProofCase::LeftRight,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProofCase::ActingLeft => "case_z_left",
            ProofCase::BothRight => "case_1_x_right_y_right",
            ProofCase::BothLeft => "case_2_x_left_y_left",
            ProofCase::RightLeft => "case_3_x_right_y_left",
            ProofCase::LeftRight => "case_4_x_left_y_right",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    /// `|f(x,x) − x|`; witness `[x]`.
    Idempotency,
    /// `|f(f(x,y),z) − f(f(x,z),f(y,z))|`; witness `[x, y, z]`.
    Distributivity,
    /// Strict monotonicity of `R_y` along first-axis lines, other
    /// coordinates unchanged, inverse round trip, and fixed endpoints on
    /// compact intervals; witness `[y, x_i, x_{i+1}]`.
    Homeomorphism,
    /// `|R_y⁻¹(R_y(x)) − x|`; witness `[y, x]`.
    Inverse,
    /// Distributivity restricted to one proof case; witness `[x, y, z]`.
    Case(ProofCase),
}

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::Idempotency => "idempotency",
            Check::Distributivity => "distributivity",
            Check::Homeomorphism => "homeomorphism",
            Check::Inverse => "inverse",
            Check::Case(c) => c.name(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub check: Check,
    /// Points per axis.
    pub grid: usize,
    /// Number of tuples evaluated.
    pub evaluated: u64,
    pub max_residual: f64,
    /// Tuple attaining `max_residual` (empty when nothing was evaluated).
    pub witness: Vec<Point>,
    /// Tuples with infinite residual.
    pub failures: u64,
    pub tolerance: f64,
    rank: u64,
}

impl VerificationReport {
    pub fn empty(check: Check, grid: usize, tolerance: f64) -> Self {
        VerificationReport {
            check,
            grid,
            evaluated: 0,
            max_residual: 0.0,
            witness: Vec::new(),
            failures: 0,
            tolerance,
            rank: u64::MAX,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0 && self.max_residual < self.tolerance
    }

    fn record(&mut self, residual: f64, rank: u64, witness: impl FnOnce() -> Vec<Point>) {
        self.evaluated += 1;
        let r = if residual.is_nan() { f64::INFINITY } else { residual };
        if r == f64::INFINITY {
            self.failures += 1;
        }
        if self.witness.is_empty() || r > self.max_residual || (r == self.max_residual && rank < self.rank)
        {
            self.max_residual = r;
            self.rank = rank;
            self.witness = witness();
        }
    }

    /// Combines two partial sweeps of the same check. The larger residual
    /// wins; ties go to the tuple enumerated first.
    pub fn merge(mut self, other: VerificationReport) -> VerificationReport {
        self.evaluated += other.evaluated;
        self.failures += other.failures;
        let take_other = !other.witness.is_empty()
            && (self.witness.is_empty()
                || other.max_residual > self.max_residual
                || (other.max_residual == self.max_residual && other.rank < self.rank));
        if take_other {
            self.max_residual = other.max_residual;
            self.rank = other.rank;
            self.witness = other.witness;
        }
        self
    }

    /// Recomputes the residual of the stored witness.
    pub fn reevaluate(&self, q: &ContinuumQuandle) -> Result<f64, ContinuumError> {
        let w = &self.witness;
        let need = match self.check {
            Check::Idempotency => 1,
            Check::Inverse => 2,
            _ => 3,
        };
        if w.len() != need {
            return Err(ContinuumError::InvalidParameter("report has no witness".into()));
        }
        Ok(match self.check {
            Check::Idempotency => idempotency_residual(q, &w[0]),
            Check::Distributivity => distributivity_residual(q, &w[0], &w[1], &w[2]),
            Check::Case(ProofCase::LeftRight) => case4_residual(q, &w[0], &w[1], &w[2])?,
            Check::Case(_) => distributivity_residual(q, &w[0], &w[1], &w[2]),
            Check::Inverse => inverse_residual(q, &w[0], &w[1]),
            Check::Homeomorphism => homeomorphism_step_residual(q, &w[0], &w[1], &w[2]),
        })
    }
}

#[inline]
fn finite_or_inf(r: f64) -> f64 {
    if r.is_nan() {
        f64::INFINITY
    } else {
        r
    }
}

pub fn idempotency_residual(q: &ContinuumQuandle, x: &Point) -> f64 {
    match q.eval(x, x) {
        Ok(v) => finite_or_inf(v.max_abs_diff(x)),
        Err(_) => f64::INFINITY,
    }
}

fn distributivity_sides(
    q: &ContinuumQuandle,
    x: &Point,
    y: &Point,
    z: &Point,
) -> Result<(Point, Point), ContinuumError> {
    let xy = q.eval(x, y)?;
    let lhs = q.eval(&xy, z)?;
    let xz = q.eval(x, z)?;
    let yz = q.eval(y, z)?;
    let rhs = q.eval(&xz, &yz)?;
    Ok((lhs, rhs))
}

pub fn distributivity_residual(q: &ContinuumQuandle, x: &Point, y: &Point, z: &Point) -> f64 {
    match distributivity_sides(q, x, y, z) {
        Ok((l, r)) => finite_or_inf(l.max_abs_diff(&r)),
        Err(_) => f64::INFINITY,
    }
}

/// Case 4 residual: the full identity, the reduced identity
/// `f(f(x,y),z) = f(f(x,z),y)`, and agreement with
/// `lo + half·u^{h(ε)h(ε′)}`.
pub fn case4_residual(
    q: &ContinuumQuandle,
    x: &Point,
    y: &Point,
    z: &Point,
) -> Result<f64, ContinuumError> {
    let (lo, mid, hi, exponent) = q
        .power_interval()
        .ok_or(ContinuumError::Unsupported { operation: "proof cases", kind: q.spec().kind() })?;
    let half = (hi - lo) / 2.0;
    let run = || -> Result<f64, ContinuumError> {
        let (lhs, rhs) = distributivity_sides(q, x, y, z)?;
        let reduced = q.eval(&q.eval(x, z)?, y)?;
        let mut r = lhs.max_abs_diff(&rhs).max(lhs.max_abs_diff(&reduced));
        let power = |p: &Point| if p.x() > mid { exponent.at(p.x() - mid) } else { 1.0 };
        let u = (x.x() - lo) / half;
        let closed = lo + half * libm::pow(u, power(y) * power(z));
        r = r.max((lhs.x() - closed).abs());
        Ok(finite_or_inf(r))
    };
    Ok(run().unwrap_or(f64::INFINITY))
}

pub fn inverse_residual(q: &ContinuumQuandle, y: &Point, x: &Point) -> f64 {
    let run = || -> Result<f64, ContinuumError> {
        let v = q.eval(x, y)?;
        let back = q.right_mul_inverse(y, &v)?;
        Ok(finite_or_inf(back.max_abs_diff(x)))
    };
    run().unwrap_or(f64::INFINITY)
}

/// Residual for consecutive samples `x0 < x1` on a first-axis line.
pub fn homeomorphism_step_residual(q: &ContinuumQuandle, y: &Point, x0: &Point, x1: &Point) -> f64 {
    let run = || -> Result<f64, ContinuumError> {
        let r0 = q.eval(x0, y)?;
        let r1 = q.eval(x1, y)?;
        let step = q.orientation() * (r1.x() - r0.x());
        if !(step > 0.0) {
            return Ok(f64::INFINITY);
        }
        let mut res = 0.0f64;
        for (p, rp) in [(x0, &r0), (x1, &r1)] {
            for (a, b) in p.coords()[1..].iter().zip(&rp.coords()[1..]) {
                res = res.max((a - b).abs());
            }
            res = res.max(inverse_residual(q, y, p));
        }
        if let Domain::Interval { lo, hi, closed: true } = *q.domain() {
            if x0.x() == lo {
                res = res.max((r0.x() - lo).abs());
            }
            if x1.x() == hi {
                res = res.max((r1.x() - hi).abs());
            }
        }
        Ok(finite_or_inf(res))
    };
    run().unwrap_or(f64::INFINITY)
}

pub fn verify_idempotency(
    q: &ContinuumQuandle,
    grid: usize,
    tol: f64,
) -> Result<VerificationReport, ContinuumError> {
    let samples = q.samples(grid)?;
    let mut rep = VerificationReport::empty(Check::Idempotency, grid, tol);
    for (i, x) in samples.iter().enumerate() {
        rep.record(idempotency_residual(q, x), i as u64, || alloc::vec![x.clone()]);
    }
    Ok(rep)
}

/// Distributivity over `samples³`, restricted to `x = samples[i]` with
/// `i ∈ outer`.
pub fn distributivity_chunk(
    q: &ContinuumQuandle,
    samples: &[Point],
    outer: Range<usize>,
    grid: usize,
    tol: f64,
) -> VerificationReport {
    let n = samples.len() as u64;
    let mut rep = VerificationReport::empty(Check::Distributivity, grid, tol);
    for i in outer {
        let x = &samples[i];
        for (j, y) in samples.iter().enumerate() {
            let xy = q.eval(x, y);
            for (k, z) in samples.iter().enumerate() {
                let r = match &xy {
                    Ok(xy) => match (q.eval(xy, z), q.eval(x, z), q.eval(y, z)) {
                        (Ok(l), Ok(xz), Ok(yz)) => match q.eval(&xz, &yz) {
                            Ok(r) => finite_or_inf(l.max_abs_diff(&r)),
                            Err(_) => f64::INFINITY,
                        },
                        _ => f64::INFINITY,
                    },
                    Err(_) => f64::INFINITY,
                };
                let rank = (i as u64 * n + j as u64) * n + k as u64;
                rep.record(r, rank, || alloc::vec![x.clone(), y.clone(), z.clone()]);
            }
        }
    }
    rep
}

pub fn verify_distributivity(
    q: &ContinuumQuandle,
    grid: usize,
    tol: f64,
) -> Result<VerificationReport, ContinuumError> {
    let samples = q.samples(grid)?;
    Ok(distributivity_chunk(q, &samples, 0..samples.len(), grid, tol))
}

/// Inverse round trips for `y = samples[i]`, `i ∈ outer`, against every
/// sampled `x`.
pub fn inverse_chunk(
    q: &ContinuumQuandle,
    samples: &[Point],
    outer: Range<usize>,
    grid: usize,
    tol: f64,
) -> VerificationReport {
    let n = samples.len() as u64;
    let mut rep = VerificationReport::empty(Check::Inverse, grid, tol);
    for i in outer {
        let y = &samples[i];
        for (j, x) in samples.iter().enumerate() {
            rep.record(inverse_residual(q, y, x), i as u64 * n + j as u64, || {
                alloc::vec![y.clone(), x.clone()]
            });
        }
    }
    rep
}

pub fn verify_inverse(
    q: &ContinuumQuandle,
    grid: usize,
    tol: f64,
) -> Result<VerificationReport, ContinuumError> {
    let samples = q.samples(grid)?;
    Ok(inverse_chunk(q, &samples, 0..samples.len(), grid, tol))
}

/// Consecutive sample pairs along first-axis lines. Samples vary fastest in
/// the first coordinate, so each line is a contiguous run.
fn line_pairs(samples: &[Point]) -> Vec<(usize, usize)> {
    samples
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0].coords()[1..] == w[1].coords()[1..])
        .map(|(i, _)| (i, i + 1))
        .collect()
}

fn homeomorphism_into(
    rep: &mut VerificationReport,
    q: &ContinuumQuandle,
    y: &Point,
    y_rank: u64,
    samples: &[Point],
    pairs: &[(usize, usize)],
) {
    let n = pairs.len() as u64;
    for (p, &(a, b)) in pairs.iter().enumerate() {
        let r = homeomorphism_step_residual(q, y, &samples[a], &samples[b]);
        rep.record(r, y_rank * n + p as u64, || {
            alloc::vec![y.clone(), samples[a].clone(), samples[b].clone()]
        });
    }
}

/// Checks that `R_y` is a homeomorphism on the sampled domain.
pub fn verify_homeomorphism(
    q: &ContinuumQuandle,
    y: &Point,
    grid: usize,
    tol: f64,
) -> Result<VerificationReport, ContinuumError> {
    if !q.domain().contains(y) {
        return Err(ContinuumError::OutOfDomain { point: y.coords().to_vec() });
    }
    let samples = q.samples(grid)?;
    let pairs = line_pairs(&samples);
    let mut rep = VerificationReport::empty(Check::Homeomorphism, grid, tol);
    homeomorphism_into(&mut rep, q, y, 0, &samples, &pairs);
    Ok(rep)
}

/// [`verify_homeomorphism`] for every sampled `y`.
pub fn verify_homeomorphism_all(
    q: &ContinuumQuandle,
    grid: usize,
    tol: f64,
) -> Result<VerificationReport, ContinuumError> {
    let samples = q.samples(grid)?;
    let pairs = line_pairs(&samples);
    let mut rep = VerificationReport::empty(Check::Homeomorphism, grid, tol);
    for (i, y) in samples.iter().enumerate() {
        homeomorphism_into(&mut rep, q, y, i as u64, &samples, &pairs);
    }
    Ok(rep)
}

/// Distributivity on the targeted subgrids of each proof case, for the unit
/// and closed interval operations. Each half-interval is sampled with
/// `grid` points; the open half `(m, hi]` omits `m`.
pub fn verify_proof_cases(
    q: &ContinuumQuandle,
    grid: usize,
    tol: f64,
) -> Result<Vec<VerificationReport>, ContinuumError> {
    let (lo, mid, hi, _) = q
        .power_interval()
        .ok_or(ContinuumError::Unsupported { operation: "proof cases", kind: q.spec().kind() })?;
    if grid < 2 {
        return Err(ContinuumError::GridTooSmall { per_axis: grid, min: 2 });
    }
    let pts = |v: Vec<f64>| -> Vec<Point> { v.into_iter().map(Point::scalar).collect() };
    let left = pts(axis(lo, mid, grid));
    let right = pts(axis(mid, hi, grid));
    let right_open = pts(axis(mid, hi, grid + 1).into_iter().skip(1).collect());
    let whole = pts(axis(lo, hi, grid));

    let mut out = Vec::new();
    for case in ProofCase::ALL {
        let (xs, ys, zs) = match case {
            ProofCase::ActingLeft => (&whole, &whole, &left),
            ProofCase::BothRight => (&right, &right, &right_open),
            ProofCase::BothLeft => (&left, &left, &right_open),
            ProofCase::RightLeft => (&right, &left, &right_open),
            ProofCase::LeftRight => (&left, &right, &right_open),
        };
        let mut rep = VerificationReport::empty(Check::Case(case), grid, tol);
        let (ny, nz) = (ys.len() as u64, zs.len() as u64);
        for (i, x) in xs.iter().enumerate() {
            for (j, y) in ys.iter().enumerate() {
                for (k, z) in zs.iter().enumerate() {
                    let r = match case {
                        ProofCase::LeftRight => case4_residual(q, x, y, z)?,
                        _ => distributivity_residual(q, x, y, z),
                    };
                    let rank = (i as u64 * ny + j as u64) * nz + k as u64;
                    rep.record(r, rank, || alloc::vec![x.clone(), y.clone(), z.clone()]);
                }
            }
        }
        out.push(rep);
    }
    Ok(out)
}

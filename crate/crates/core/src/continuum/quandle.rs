use alloc::boxed::Box;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::f64::consts::{FRAC_2_PI, FRAC_PI_2, FRAC_PI_4};

use smallvec::SmallVec;

use super::point::{Domain, Point};
use super::spec::{BallVariant, Chart, ContinuumSpec, Exponent};
use super::ContinuumError;

/// Half-width of the default sampling box used for unbounded domains.
pub const DEFAULT_BOX_HALF_WIDTH: f64 = 10.0;
/// Open domains are sampled this fraction of their width away from the
/// boundary.
pub const OPEN_MARGIN: f64 = 1e-6;
/// Largest `dim` accepted for the ball family.
pub const MAX_FAMILY_DIM: usize = 3;
/// Round-trip tolerance for chart validation.
pub const CHART_TOLERANCE: f64 = 1e-9;

/// `[lo, hi]` with the power-map operation: points left of the midpoint are
/// moved by points right of it.
#[derive(Debug, Clone, Copy)]
struct PowerInterval {
    lo: f64,
    mid: f64,
    hi: f64,
    half: f64,
    exponent: Exponent,
}

impl PowerInterval {
    fn new(lo: f64, hi: f64, exponent: Exponent) -> Self {
        let mid = (lo + hi) / 2.0;
        PowerInterval { lo, mid, hi, half: (hi - lo) / 2.0, exponent }
    }

    /// The exponent used by `y`, or `None` when `R_y` is the identity.
    #[inline]
    fn exponent_of(&self, y: f64) -> Option<f64> {
        (y > self.mid).then(|| self.exponent.at(y - self.mid))
    }

    #[inline]
    fn apply(&self, x: f64, y: f64) -> f64 {
        match self.exponent_of(y) {
            Some(e) if x < self.mid => {
                let u = (x - self.lo) / self.half;
                self.lo + self.half * libm::pow(u, e)
            }
            _ => x,
        }
    }

    #[inline]
    fn invert(&self, y: f64, v: f64) -> f64 {
        match self.exponent_of(y) {
            Some(e) if v < self.mid => {
                let u = (v - self.lo) / self.half;
                self.lo + self.half * libm::pow(u, 1.0 / e)
            }
            _ => v,
        }
    }

    fn validate_exponent(&self) -> Result<(), ContinuumError> {
        let h0 = self.exponent.at(0.0);
        if !((h0 - 1.0).abs() <= 1e-12) {
            return Err(ContinuumError::InvalidExponent { eps: 0.0, value: h0 });
        }
        const STEPS: usize = 1000;
        for i in 0..=STEPS {
            let eps = self.half * i as f64 / STEPS as f64;
            let h = self.exponent.at(eps);
            if !(h.is_finite() && h > 0.0) {
                return Err(ContinuumError::InvalidExponent { eps, value: h });
            }
        }
        Ok(())
    }
}

/// Ball operation in local coordinates of `B(center, radius)`.
#[derive(Debug, Clone)]
struct BallMap {
    center: Point,
    radius: f64,
    variant: BallVariant,
}

impl BallMap {
    fn contains(&self, p: &Point) -> bool {
        let d2: f64 =
            p.coords().iter().zip(self.center.coords()).map(|(a, c)| (a - c) * (a - c)).sum();
        d2 < self.radius * self.radius
    }

    #[inline]
    fn local(&self, p: &Point) -> SmallVec<[f64; 3]> {
        p.coords().iter().zip(self.center.coords()).map(|(a, c)| (a - c) / self.radius).collect()
    }

    /// `(c, chord_half, x⊥ factor)` needed to act on the first local
    /// coordinate of `x` by `y`, or `None` for the identity branch.
    #[inline]
    fn action(&self, xl: &[f64], yl: &[f64]) -> Option<(f64, f64, f64)> {
        if yl[0] <= 0.0 || xl[0] >= 0.0 {
            return None;
        }
        let y2: f64 = yl.iter().map(|c| c * c).sum();
        let c = yl[0] * (1.0 - y2);
        let perp2: f64 = xl[1..].iter().map(|c| c * c).sum();
        match self.variant {
            BallVariant::PaperFaithful => Some((c, 1.0, perp2)),
            BallVariant::InvariantExponent => Some((c, libm::sqrt(1.0 - perp2), perp2)),
        }
    }

    fn apply(&self, x: &Point, y: &Point) -> Point {
        let xl = self.local(x);
        let yl = self.local(y);
        let Some((c, s, perp2)) = self.action(&xl, &yl) else {
            return x.clone();
        };
        let t = xl[0];
        let t_new = match self.variant {
            BallVariant::PaperFaithful => {
                let e = 1.0 + c * (1.0 - t * t - perp2);
                -1.0 + libm::pow(t + 1.0, e)
            }
            BallVariant::InvariantExponent => {
                let e = 1.0 + c * (1.0 - perp2);
                -s + s * libm::pow((t + s) / s, e)
            }
        };
        let mut out = x.clone();
        out.coords_mut()[0] = self.center.x() + self.radius * t_new;
        out
    }

    fn invert(&self, y: &Point, v: &Point) -> Point {
        let vl = self.local(v);
        let yl = self.local(y);
        let Some((c, s, perp2)) = self.action(&vl, &yl) else {
            return v.clone();
        };
        let target = vl[0];
        let t = match self.variant {
            BallVariant::InvariantExponent => {
                let e = 1.0 + c * (1.0 - perp2);
                -s + s * libm::pow((target + s) / s, 1.0 / e)
            }
            BallVariant::PaperFaithful => {
                // t ↦ −1 + (t+1)^{1 + c(1 − t² − |x⊥|²)} is increasing on
                // [−1, 0], so bisect.
                let g = |t: f64| -1.0 + libm::pow(t + 1.0, 1.0 + c * (1.0 - t * t - perp2));
                let (mut lo, mut hi) = (-1.0f64, 0.0f64);
                for _ in 0..200 {
                    let mid = 0.5 * (lo + hi);
                    if mid <= lo || mid >= hi {
                        break;
                    }
                    if g(mid) < target {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                if (g(lo) - target).abs() <= (g(hi) - target).abs() {
                    lo
                } else {
                    hi
                }
            }
        };
        let mut out = v.clone();
        out.coords_mut()[0] = self.center.x() + self.radius * t;
        out
    }
}

#[derive(Debug, Clone)]
enum Kind {
    Power(PowerInterval),
    Family { blocks: Vec<PowerInterval>, knots: Vec<f64> },
    OpenG,
    Ball(BallMap),
    BallFamily(Vec<BallMap>),
    Chart { inner: Box<ContinuumQuandle>, chart: Arc<dyn Chart> },
    Arctan,
    Affine { t: f64 },
    Trivial,
}

/// A validated continuum quandle: a [`ContinuumSpec`] ready for evaluation.
#[derive(Debug, Clone)]
pub struct ContinuumQuandle {
    spec: ContinuumSpec,
    kind: Kind,
    domain: Domain,
    box_half_width: f64,
}

fn check_interval(a: f64, b: f64) -> Result<(), ContinuumError> {
    if a.is_finite() && b.is_finite() && a < b {
        Ok(())
    } else {
        Err(ContinuumError::InvalidParameter(format!("need finite a < b, got a = {a}, b = {b}")))
    }
}

impl ContinuumQuandle {
    pub fn new(spec: ContinuumSpec) -> Result<Self, ContinuumError> {
        let (kind, domain) = match &spec {
            ContinuumSpec::UnitInterval { exponent } => {
                let p = PowerInterval::new(0.0, 1.0, *exponent);
                p.validate_exponent()?;
                (Kind::Power(p), Domain::Interval { lo: 0.0, hi: 1.0, closed: true })
            }
            ContinuumSpec::ClosedInterval { a, b, exponent } => {
                check_interval(*a, *b)?;
                let p = PowerInterval::new(*a, *b, *exponent);
                p.validate_exponent()?;
                (Kind::Power(p), Domain::Interval { lo: *a, hi: *b, closed: true })
            }
            ContinuumSpec::TrivialInterval { a, b } => {
                check_interval(*a, *b)?;
                (Kind::Trivial, Domain::Interval { lo: *a, hi: *b, closed: true })
            }
            ContinuumSpec::OpenIntervalG => {
                (Kind::OpenG, Domain::Interval { lo: -1.0, hi: 1.0, closed: false })
            }
            ContinuumSpec::BallOmega { dim, variant, center, radius } => {
                if *dim == 0 || center.len() != *dim {
                    return Err(ContinuumError::InvalidParameter(format!(
                        "ball of dimension {dim} needs a centre with {dim} coordinates, got {}",
                        center.len()
                    )));
                }
                if !(radius.is_finite() && *radius > 0.0) || center.iter().any(|c| !c.is_finite())
                {
                    return Err(ContinuumError::InvalidParameter(format!(
                        "ball needs a finite centre and radius > 0, got radius {radius}"
                    )));
                }
                let center = Point::new(center);
                let map = BallMap { center: center.clone(), radius: *radius, variant: *variant };
                (Kind::Ball(map), Domain::Ball { center, radius: *radius })
            }
            ContinuumSpec::FamilyFn { n, a, b, exponent } => {
                check_interval(*a, *b)?;
                if *n == 0 {
                    return Err(ContinuumError::InvalidParameter("FamilyFn needs n >= 1".into()));
                }
                let mut knots: Vec<f64> =
                    (0..=*n).map(|k| a + (b - a) * (k as f64 / *n as f64)).collect();
                knots[*n] = *b;
                let blocks: Vec<PowerInterval> =
                    knots.windows(2).map(|w| PowerInterval::new(w[0], w[1], *exponent)).collect();
                for blk in &blocks {
                    blk.validate_exponent()?;
                }
                (Kind::Family { blocks, knots }, Domain::Interval { lo: *a, hi: *b, closed: true })
            }
            ContinuumSpec::FamilyOmegaN { n, dim, variant } => {
                if *n == 0 || *dim == 0 || *dim > MAX_FAMILY_DIM {
                    return Err(ContinuumError::InvalidParameter(format!(
                        "FamilyOmegaN needs n >= 1 and 1 <= dim <= {MAX_FAMILY_DIM}, got n = {n}, dim = {dim}"
                    )));
                }
                let radius = 1.0 / *n as f64;
                let balls = (1..*n)
                    .map(|k| {
                        let mut center = Point::zeros(*dim);
                        center.coords_mut()[0] = -1.0 + 2.0 * k as f64 / *n as f64;
                        BallMap { center, radius, variant: *variant }
                    })
                    .collect();
                (Kind::BallFamily(balls), Domain::Ball { center: Point::zeros(*dim), radius: 1.0 })
            }
            ContinuumSpec::ChartTransport { inner, chart } => {
                let inner_q = ContinuumQuandle::new((**inner).clone())?;
                if inner_q.dim() != chart.dim() {
                    return Err(ContinuumError::ChartMismatch(format!(
                        "chart {} has dimension {}, inner operation {}",
                        chart.name(),
                        chart.dim(),
                        inner_q.dim()
                    )));
                }
                let per_axis = if chart.dim() == 1 { 257 } else { 17 };
                for p in inner_q.samples(per_axis)? {
                    let back = chart.forward(&chart.inverse(&p));
                    let err = back.max_abs_diff(&p);
                    if !(err <= CHART_TOLERANCE) {
                        return Err(ContinuumError::ChartMismatch(format!(
                            "forward(inverse(p)) differs from p = {:?} by {err}",
                            p.coords()
                        )));
                    }
                }
                let domain = chart.manifold();
                (Kind::Chart { inner: Box::new(inner_q), chart: chart.clone() }, domain)
            }
            ContinuumSpec::RealLineArctan => (Kind::Arctan, Domain::Euclidean { dim: 1 }),
            ContinuumSpec::AffineLine { t } => {
                if !(t.is_finite() && *t != 0.0) {
                    return Err(ContinuumError::InvalidParameter(format!(
                        "affine quandle needs finite t != 0, got {t}"
                    )));
                }
                (Kind::Affine { t: *t }, Domain::Euclidean { dim: 1 })
            }
        };
        Ok(ContinuumQuandle { spec, kind, domain, box_half_width: DEFAULT_BOX_HALF_WIDTH })
    }

    /// Changes the box `[−w, w]ⁿ` on which unbounded domains are sampled.
    pub fn with_box_half_width(mut self, w: f64) -> Result<Self, ContinuumError> {
        if !(w.is_finite() && w > 0.0) {
            return Err(ContinuumError::InvalidParameter(format!("box half-width {w}")));
        }
        self.box_half_width = w;
        Ok(self)
    }

    pub fn spec(&self) -> &ContinuumSpec {
        &self.spec
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn dim(&self) -> usize {
        self.domain.dim()
    }

    pub fn box_half_width(&self) -> f64 {
        self.box_half_width
    }

    /// Whether this is a single power-map interval (unit or closed interval),
    /// the shape handled by the case-by-case distributivity check.
    pub(crate) fn power_interval(&self) -> Option<(f64, f64, f64, Exponent)> {
        match &self.kind {
            Kind::Power(p) => Some((p.lo, p.mid, p.hi, p.exponent)),
            _ => None,
        }
    }

    /// `+1` when right multiplications preserve orientation along the first
    /// axis, `−1` when they reverse it.
    pub fn orientation(&self) -> f64 {
        match self.kind {
            Kind::Affine { t } if t < 0.0 => -1.0,
            _ => 1.0,
        }
    }

    fn check(&self, p: &Point) -> Result<(), ContinuumError> {
        if p.dim() != self.dim() {
            return Err(ContinuumError::DimensionMismatch { expected: self.dim(), got: p.dim() });
        }
        if !self.domain.contains(p) {
            return Err(ContinuumError::OutOfDomain { point: p.coords().to_vec() });
        }
        Ok(())
    }

    /// `f(x, y)`.
    pub fn eval(&self, x: &Point, y: &Point) -> Result<Point, ContinuumError> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.eval_unchecked(x, y))
    }

    /// Scalar convenience for one-dimensional domains.
    pub fn eval1(&self, x: f64, y: f64) -> Result<f64, ContinuumError> {
        self.eval(&Point::scalar(x), &Point::scalar(y)).map(|p| p.x())
    }

    pub(crate) fn eval_unchecked(&self, x: &Point, y: &Point) -> Point {
        match &self.kind {
            Kind::Power(p) => Point::scalar(p.apply(x.x(), y.x())),
            Kind::Family { blocks, knots } => {
                Point::scalar(match family_block(knots, x.x(), y.x()) {
                    Some(k) => blocks[k].apply(x.x(), y.x()),
                    None => x.x(),
                })
            }
            Kind::OpenG => Point::scalar(open_g(x.x(), y.x())),
            Kind::Ball(b) => b.apply(x, y),
            Kind::BallFamily(balls) => match balls.iter().find(|b| b.contains(x)) {
                Some(b) if b.contains(y) => b.apply(x, y),
                _ => x.clone(),
            },
            Kind::Chart { inner, chart } => {
                if chart.in_patch(x) && chart.in_patch(y) {
                    chart.inverse(&inner.eval_unchecked(&chart.forward(x), &chart.forward(y)))
                } else {
                    x.clone()
                }
            }
            Kind::Arctan => Point::scalar(arctan_line(x.x(), y.x(), false)),
            Kind::Affine { t } => Point::scalar(t * x.x() + (1.0 - t) * y.x()),
            Kind::Trivial => x.clone(),
        }
    }

    /// `R_y(x) = f(x, y)`.
    pub fn right_mul(&self, y: &Point, x: &Point) -> Result<Point, ContinuumError> {
        self.eval(x, y)
    }

    /// `R_y⁻¹(v)`: the unique `x` with `f(x, y) = v`.
    pub fn right_mul_inverse(&self, y: &Point, v: &Point) -> Result<Point, ContinuumError> {
        self.check(y)?;
        self.check(v)?;
        Ok(self.invert_unchecked(y, v))
    }

    pub(crate) fn invert_unchecked(&self, y: &Point, v: &Point) -> Point {
        match &self.kind {
            Kind::Power(p) => Point::scalar(p.invert(y.x(), v.x())),
            Kind::Family { blocks, knots } => {
                // R_y preserves the west half of each block, so v lies in
                // the same block as its preimage.
                Point::scalar(match family_block(knots, v.x(), y.x()) {
                    Some(k) => blocks[k].invert(y.x(), v.x()),
                    None => v.x(),
                })
            }
            Kind::OpenG => Point::scalar(open_g_inverse(v.x(), y.x())),
            Kind::Ball(b) => b.invert(y, v),
            Kind::BallFamily(balls) => match balls.iter().find(|b| b.contains(v)) {
                Some(b) if b.contains(y) => b.invert(y, v),
                _ => v.clone(),
            },
            Kind::Chart { inner, chart } => {
                if chart.in_patch(v) && chart.in_patch(y) {
                    chart.inverse(&inner.invert_unchecked(&chart.forward(y), &chart.forward(v)))
                } else {
                    v.clone()
                }
            }
            Kind::Arctan => Point::scalar(arctan_line(v.x(), y.x(), true)),
            Kind::Affine { t } => Point::scalar((v.x() - (1.0 - t) * y.x()) / t),
            Kind::Trivial => v.clone(),
        }
    }

    /// Uniform sample of the domain with `per_axis` points per coordinate.
    ///
    /// Closed intervals include both endpoints. Open domains are sampled on
    /// the range shrunk by [`OPEN_MARGIN`] of their width; balls keep only
    /// the grid points strictly inside. Unbounded domains use the box
    /// `[−w, w]ⁿ`. The first coordinate varies fastest.
    pub fn samples(&self, per_axis: usize) -> Result<Vec<Point>, ContinuumError> {
        Ok(self.indexed_samples(per_axis)?.into_iter().map(|(_, p)| p).collect())
    }

    pub(crate) fn indexed_samples(
        &self,
        per_axis: usize,
    ) -> Result<Vec<(SmallVec<[usize; 3]>, Point)>, ContinuumError> {
        if per_axis < 2 {
            return Err(ContinuumError::GridTooSmall { per_axis, min: 2 });
        }
        let dim = self.dim();
        let axes: Vec<Vec<f64>> = match &self.domain {
            Domain::Interval { lo, hi, closed: true } => {
                alloc::vec![axis(*lo, *hi, per_axis)]
            }
            Domain::Interval { lo, hi, closed: false } => {
                let d = OPEN_MARGIN * (hi - lo);
                alloc::vec![axis(lo + d, hi - d, per_axis)]
            }
            Domain::Ball { center, radius } => {
                let d = OPEN_MARGIN * 2.0 * radius;
                center.coords().iter().map(|c| axis(c - radius + d, c + radius - d, per_axis)).collect()
            }
            Domain::Euclidean { dim } => {
                let w = self.box_half_width;
                (0..*dim).map(|_| axis(-w, w, per_axis)).collect()
            }
        };
        let total = per_axis.pow(dim as u32);
        let mut out = Vec::new();
        let mut idx: SmallVec<[usize; 3]> = SmallVec::from_elem(0, dim);
        for flat in 0..total {
            let mut r = flat;
            for slot in idx.iter_mut() {
                *slot = r % per_axis;
                r /= per_axis;
            }
            let coords: SmallVec<[f64; 3]> = idx.iter().zip(&axes).map(|(&i, a)| a[i]).collect();
            let p = Point::new(&coords);
            if self.domain.contains(&p) {
                out.push((idx.clone(), p));
            }
        }
        Ok(out)
    }
}

/// `per_axis` uniform points on `[lo, hi]` including both ends. Built from
/// `i/(per_axis−1)` so that grids whose spacings divide each other nest
/// exactly.
pub(crate) fn axis(lo: f64, hi: f64, per_axis: usize) -> Vec<f64> {
    let m = (per_axis - 1) as f64;
    let mut v: Vec<f64> = (0..per_axis).map(|i| lo + (hi - lo) * (i as f64 / m)).collect();
    v[per_axis - 1] = hi;
    v
}

/// Block `k` such that `x` lies in the open west half of block `k` and `y`
/// lies in the closed block `[x_k, x_{k+1}]`; `None` when the operation is
/// trivial.
#[inline]
fn family_block(knots: &[f64], x: f64, y: f64) -> Option<usize> {
    // Largest k with knots[k] <= x, capped at the last block.
    let last = knots.len() - 2;
    let k = knots.partition_point(|&t| t <= x).saturating_sub(1).min(last);
    let (lo, hi) = (knots[k], knots[k + 1]);
    let mid = (lo + hi) / 2.0;
    (x < mid && lo <= y && y <= hi).then_some(k)
}

#[inline]
fn open_g(x: f64, y: f64) -> f64 {
    if y <= 0.0 || x >= 0.0 {
        return x;
    }
    -1.0 + libm::pow(x + 1.0, 1.0 + y * (1.0 - y * y))
}

#[inline]
fn open_g_inverse(v: f64, y: f64) -> f64 {
    if y <= 0.0 || v >= 0.0 {
        return v;
    }
    -1.0 + libm::pow(v + 1.0, 1.0 / (1.0 + y * (1.0 - y * y)))
}

/// Closed-form real-line operation in angle coordinates `x = tan α`,
/// `y = tan β`.
#[inline]
fn arctan_line(x: f64, y: f64, inverse: bool) -> f64 {
    if x >= 0.0 || y <= 0.0 {
        return x;
    }
    let alpha = libm::atan(x);
    let beta = libm::atan(y);
    let h = if beta <= FRAC_PI_4 { 1.0 + beta } else { 1.0 + FRAC_PI_2 - beta };
    let e = if inverse { 1.0 / h } else { h };
    let scaled = FRAC_2_PI * (alpha + FRAC_PI_2);
    libm::tan(-FRAC_PI_2 + FRAC_PI_2 * libm::pow(scaled, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::continuum::spec::BallChart;

    fn q(spec: ContinuumSpec) -> ContinuumQuandle {
        ContinuumQuandle::new(spec).unwrap()
    }

    #[test]
    fn unit_interval_values() {
        let u = q(ContinuumSpec::unit_interval());
        assert_eq!(u.eval1(0.3, 0.4).unwrap(), 0.3);
        let v = u.eval1(0.25, 1.0).unwrap();
        assert!((v - 0.5 * 0.5f64.powf(1.5)).abs() < 1e-15);
        assert!((v - 0.176_776_695_296_636_9).abs() < 1e-12);
        // Exactly at the seam the identity branch is taken.
        assert_eq!(u.eval1(0.2, 0.5).unwrap(), 0.2);
        assert_eq!(u.eval1(0.7, 0.9).unwrap(), 0.7);
        assert!(u.eval1(1.2, 0.1).is_err());
        assert!(u.eval1(0.2, f64::NAN).is_err());
    }

    #[test]
    fn endpoints_and_midpoint_are_fixed() {
        let u = q(ContinuumSpec::unit_interval());
        for i in 0..=100 {
            let y = i as f64 / 100.0;
            for x in [0.0, 0.5, 1.0] {
                assert_eq!(u.eval1(x, y).unwrap(), x);
            }
        }
    }

    #[test]
    fn affine_value() {
        let a = q(ContinuumSpec::AffineLine { t: 2.0 });
        assert_eq!(a.eval1(1.0, 3.0).unwrap(), -1.0);
        assert!(ContinuumQuandle::new(ContinuumSpec::AffineLine { t: 0.0 }).is_err());
    }

    #[test]
    fn parameter_validation() {
        assert!(ContinuumQuandle::new(ContinuumSpec::closed_interval(1.0, 1.0)).is_err());
        assert!(ContinuumQuandle::new(ContinuumSpec::family_fn(0, 0.0, 1.0)).is_err());
        assert!(ContinuumQuandle::new(ContinuumSpec::BallOmega {
            dim: 2,
            variant: BallVariant::PaperFaithful,
            center: alloc::vec![0.0],
            radius: 1.0,
        })
        .is_err());
        assert!(ContinuumQuandle::new(ContinuumSpec::FamilyOmegaN {
            n: 3,
            dim: 4,
            variant: BallVariant::InvariantExponent
        })
        .is_err());
        fn bad(e: f64) -> f64 {
            1.0 - 4.0 * e
        }
        assert!(matches!(
            ContinuumQuandle::new(ContinuumSpec::UnitInterval { exponent: Exponent::Custom(bad) }),
            Err(ContinuumError::InvalidExponent { .. })
        ));
        fn offset(e: f64) -> f64 {
            2.0 + e
        }
        assert!(ContinuumQuandle::new(ContinuumSpec::UnitInterval {
            exponent: Exponent::Custom(offset)
        })
        .is_err());
    }

    #[test]
    fn open_boundaries_rejected() {
        let g = q(ContinuumSpec::OpenIntervalG);
        assert!(g.eval1(-1.0, 0.5).is_err());
        assert!(g.eval1(0.5, 1.0).is_err());
        let b = q(ContinuumSpec::unit_ball(2, BallVariant::PaperFaithful));
        assert!(b.eval(&Point::new(&[1.0, 0.0]), &Point::new(&[0.0, 0.0])).is_err());
        assert!(b.eval(&Point::new(&[0.1]), &Point::new(&[0.0, 0.0])).is_err());
    }

    #[test]
    fn family_one_is_the_closed_interval() {
        let f1 = q(ContinuumSpec::family_fn(1, -0.5, 2.0));
        let ci = q(ContinuumSpec::closed_interval(-0.5, 2.0));
        let s = f1.samples(61).unwrap();
        for x in &s {
            for y in &s {
                assert_eq!(f1.eval(x, y).unwrap(), ci.eval(x, y).unwrap());
            }
        }
    }

    #[test]
    fn family_blocks_act_only_within_themselves() {
        let f = q(ContinuumSpec::family_fn(2, 0.0, 1.0));
        // x in the west half of block 0, y in the east half of block 1.
        assert_eq!(f.eval1(0.1, 0.9).unwrap(), 0.1);
        // Same block.
        let v = f.eval1(0.1, 0.4).unwrap();
        let expected = 0.25 * (0.1f64 / 0.25).powf(1.0 + 0.15);
        assert!((v - expected).abs() < 1e-15);
    }

    #[test]
    fn family_jumps_in_y_at_interior_knots() {
        // The knot 1/2 is the east end of block 0 (maximal exponent) and the
        // west end of block 1 (identity); just above it, block 0 is no longer
        // acted on. So F_2 is not continuous in y there.
        let f = q(ContinuumSpec::family_fn(2, 0.0, 1.0));
        let at = f.eval1(0.1, 0.5).unwrap();
        let above = f.eval1(0.1, 0.5 + 1e-12).unwrap();
        assert_eq!(above, 0.1);
        assert!((at - above).abs() > 1e-3);
    }

    #[test]
    fn invariant_ball_in_one_dimension_is_g() {
        let b = q(ContinuumSpec::unit_ball(1, BallVariant::InvariantExponent));
        let g = q(ContinuumSpec::OpenIntervalG);
        for x in g.samples(41).unwrap() {
            for y in g.samples(41).unwrap() {
                let d = b.eval(&x, &y).unwrap().max_abs_diff(&g.eval(&x, &y).unwrap());
                assert!(d < 1e-15, "{x:?} {y:?}");
            }
        }
    }

    #[test]
    fn translated_ball_matches_ball_chart() {
        for variant in [BallVariant::PaperFaithful, BallVariant::InvariantExponent] {
            let direct = q(ContinuumSpec::BallOmega {
                dim: 2,
                variant,
                center: alloc::vec![0.5, -1.0],
                radius: 0.25,
            });
            let charted = q(ContinuumSpec::ChartTransport {
                inner: Box::new(ContinuumSpec::unit_ball(2, variant)),
                chart: Arc::new(BallChart { center: Point::new(&[0.5, -1.0]), radius: 0.25 }),
            });
            let s = direct.samples(9).unwrap();
            for x in &s {
                for y in &s {
                    let d = direct.eval(x, y).unwrap().max_abs_diff(&charted.eval(x, y).unwrap());
                    assert!(d < 1e-12);
                }
            }
            // Outside the patch the transported operation is trivial.
            let far = Point::new(&[3.0, 3.0]);
            assert_eq!(charted.eval(&far, &s[0]).unwrap(), far);
        }
    }

    #[test]
    fn arctan_routes_agree_on_a_few_points() {
        let direct = q(ContinuumSpec::RealLineArctan);
        let chart = q(ContinuumSpec::arctan_chart());
        for (x, y) in [(-1.0, 0.5), (-3.0, 2.0), (-0.2, 40.0), (1.0, 1.0), (-2.0, -1.0)] {
            let a = direct.eval1(x, y).unwrap();
            let b = chart.eval1(x, y).unwrap();
            assert!((a - b).abs() < 1e-12, "{x} {y}: {a} vs {b}");
        }
        // Nontrivial: negative x moves when y > 0.
        assert!(direct.eval1(-1.0, 1.0).unwrap() < -1.0);
    }

    #[test]
    fn inverses_round_trip() {
        let specs = [
            ContinuumSpec::unit_interval(),
            ContinuumSpec::family_fn(3, 0.0, 1.0),
            ContinuumSpec::OpenIntervalG,
            ContinuumSpec::RealLineArctan,
            ContinuumSpec::arctan_chart(),
            ContinuumSpec::AffineLine { t: -0.5 },
        ];
        for spec in specs {
            let qq = q(spec);
            let s = qq.samples(51).unwrap();
            for y in &s {
                for x in &s {
                    let v = qq.eval(x, y).unwrap();
                    let back = qq.right_mul_inverse(y, &v).unwrap();
                    let err = back.max_abs_diff(x);
                    assert!(err < 1e-10, "{}: y={y:?} x={x:?} err={err}", qq.spec().kind());
                }
            }
        }
    }

    #[test]
    fn samples_respect_domains() {
        let g = q(ContinuumSpec::OpenIntervalG);
        let s = g.samples(5).unwrap();
        assert_eq!(s.len(), 5);
        assert!((s[0].x() + 1.0 - 2e-6).abs() < 1e-15);
        let b = q(ContinuumSpec::unit_ball(2, BallVariant::PaperFaithful));
        let s = b.samples(21).unwrap();
        assert!(s.iter().all(|p| p.norm_sq() < 1.0));
        assert!(s.len() > 300 && s.len() < 441);
        assert!(g.samples(1).is_err());
    }
}

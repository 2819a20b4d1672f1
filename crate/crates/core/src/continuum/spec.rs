use alloc::boxed::Box;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, FRAC_PI_4};
use core::fmt;

use super::point::{Domain, Point};

/// Exponent `h(ε)` of the power maps `u ↦ u^{h(ε)}` used by the interval
/// constructions. `ε ≥ 0` is the distance of the acting point past the
/// midpoint.
#[derive(Clone, Copy)]
pub enum Exponent {
    /// `h(ε) = 1 + ε`.
    Linear,
    /// `1 + ε` up to `peak`, then `1 + 2·peak − ε`, returning to 1 at
    /// `ε = 2·peak`.
    Tent { peak: f64 },
    /// Any `h` with `h(0) = 1` and `h > 0` on the relevant range.
    Custom(fn(f64) -> f64),
}

impl Exponent {
    #[inline]
    pub fn at(self, eps: f64) -> f64 {
        match self {
            Exponent::Linear => 1.0 + eps,
            Exponent::Tent { peak } => {
                if eps <= peak {
                    1.0 + eps
                } else {
                    1.0 + 2.0 * peak - eps
                }
            }
            Exponent::Custom(h) => h(eps),
        }
    }
}

impl Default for Exponent {
    fn default() -> Self {
        Exponent::Linear
    }
}

impl fmt::Debug for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Linear => f.write_str("Linear"),
            Exponent::Tent { peak } => f.debug_struct("Tent").field("peak", peak).finish(),
            Exponent::Custom(_) => f.write_str("Custom(..)"),
        }
    }
}

/// Which exponent the open-ball operation uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BallVariant {
    /// Power map on `x₁ + 1` with exponent `1 + y₁(1−|y|²)(1−|x|²)`, exactly
    /// as displayed for the ball operation.
    PaperFaithful,
    /// Exponent `1 + y₁(1−|y|²)(1−|x⊥|²)` with `x⊥ = (x₂, …, xₙ)`, acting on
    /// the chord of the ball through `x` parallel to the first axis. The
    /// exponent is unchanged by the operation, so right multiplications
    /// commute.
    InvariantExponent,
}

/// A coordinate chart `U ⊂ X → V` used to transport an operation on `V` to a
/// manifold `X`.
pub trait Chart: fmt::Debug + Send + Sync {
    fn name(&self) -> String;
    fn dim(&self) -> usize;
    /// The manifold `X` carrying the transported operation.
    fn manifold(&self) -> Domain;
    /// Whether `x ∈ U`.
    fn in_patch(&self, x: &Point) -> bool;
    fn forward(&self, x: &Point) -> Point;
    fn inverse(&self, u: &Point) -> Point;
}

/// `arctan : ℝ → (−π/2, π/2)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct ArctanChart;

impl Chart for ArctanChart {
    fn name(&self) -> String {
        "arctan".into()
    }
    fn dim(&self) -> usize {
        1
    }
    fn manifold(&self) -> Domain {
        Domain::Euclidean { dim: 1 }
    }
    fn in_patch(&self, x: &Point) -> bool {
        x.dim() == 1 && x.is_finite()
    }
    fn forward(&self, x: &Point) -> Point {
        Point::scalar(libm::atan(x.x()))
    }
    fn inverse(&self, u: &Point) -> Point {
        Point::scalar(libm::tan(u.x()))
    }
}

/// `x ↦ (x − center)/radius`, sending the ball `B(center, radius) ⊂ ℝⁿ` onto
/// the open unit ball.
#[derive(Debug, Clone, PartialEq)]
pub struct BallChart {
    pub center: Point,
    pub radius: f64,
}

impl Chart for BallChart {
    fn name(&self) -> String {
        "ball".into()
    }
    fn dim(&self) -> usize {
        self.center.dim()
    }
    fn manifold(&self) -> Domain {
        Domain::Euclidean { dim: self.center.dim() }
    }
    fn in_patch(&self, x: &Point) -> bool {
        Domain::Ball { center: self.center.clone(), radius: self.radius }.contains(x)
    }
    fn forward(&self, x: &Point) -> Point {
        let mut p = x.clone();
        for (c, o) in p.coords_mut().iter_mut().zip(self.center.coords()) {
            *c = (*c - o) / self.radius;
        }
        p
    }
    fn inverse(&self, u: &Point) -> Point {
        let mut p = u.clone();
        for (c, o) in p.coords_mut().iter_mut().zip(self.center.coords()) {
            *c = o + self.radius * *c;
        }
        p
    }
}

/// Description of one continuum quandle construction. Plain data; turn it
/// into something evaluable with [`ContinuumQuandle::new`], which validates
/// the parameters.
///
/// [`ContinuumQuandle::new`]: super::ContinuumQuandle::new
#[derive(Debug, Clone)]
pub enum ContinuumSpec {
    /// `[0,1]`: `f(x,y) = ½(2x)^{h(ε)}` for `x < ½`, `y = ½ + ε > ½`, else `x`.
    UnitInterval { exponent: Exponent },
    /// The same construction rescaled to `[a,b]`.
    ClosedInterval { a: f64, b: f64, exponent: Exponent },
    /// `(−1,1)`: `g(x,y) = −1 + (x+1)^{1+y(1−y²)}` for `x < 0 < y`, else `x`.
    OpenIntervalG,
    /// Open ball `B(center, radius) ⊂ ℝ^dim`.
    BallOmega { dim: usize, variant: BallVariant, center: Vec<f64>, radius: f64 },
    /// `[a,b]` cut into `n` equal blocks, each carrying the closed-interval
    /// operation; points in different blocks act trivially.
    FamilyFn { n: usize, a: f64, b: f64, exponent: Exponent },
    /// Unit ball in `ℝ^dim` (`dim ≤ 3`) carrying `n − 1` disjoint ball
    /// operations centred at `(−1 + 2k/n, 0, …)` with radius `1/n`.
    FamilyOmegaN { n: usize, dim: usize, variant: BallVariant },
    /// `G(x,y) = φ⁻¹(inner(φ(x), φ(y)))` for `x, y` in the chart patch, `x`
    /// otherwise.
    ChartTransport { inner: Box<ContinuumSpec>, chart: Arc<dyn Chart> },
    /// The real-line quandle obtained from `arctan`, evaluated by its closed
    /// formula.
    RealLineArctan,
    /// `f_t(x,y) = t·x + (1−t)·y` on `ℝ`, `t ≠ 0`.
    AffineLine { t: f64 },
    /// `f(x,y) = x` on `[a,b]`.
    TrivialInterval { a: f64, b: f64 },
}

impl ContinuumSpec {
    pub fn unit_interval() -> Self {
        ContinuumSpec::UnitInterval { exponent: Exponent::Linear }
    }

    pub fn closed_interval(a: f64, b: f64) -> Self {
        ContinuumSpec::ClosedInterval { a, b, exponent: Exponent::Linear }
    }

    pub fn family_fn(n: usize, a: f64, b: f64) -> Self {
        ContinuumSpec::FamilyFn { n, a, b, exponent: Exponent::Linear }
    }

    pub fn unit_ball(dim: usize, variant: BallVariant) -> Self {
        ContinuumSpec::BallOmega { dim, variant, center: alloc::vec![0.0; dim], radius: 1.0 }
    }

    /// The chart construction with `φ = arctan` over the closed-interval
    /// operation on `[−π/2, π/2]` with the tent exponent peaking at `π/4`.
    /// Agrees with [`ContinuumSpec::RealLineArctan`].
    pub fn arctan_chart() -> Self {
        ContinuumSpec::ChartTransport {
            inner: Box::new(ContinuumSpec::ClosedInterval {
                a: -FRAC_PI_2,
                b: FRAC_PI_2,
                exponent: Exponent::Tent { peak: FRAC_PI_4 },
            }),
            chart: Arc::new(ArctanChart),
        }
    }

    /// Short human-readable name.
    pub fn kind(&self) -> &'static str {
        match self {
            ContinuumSpec::UnitInterval { .. } => "unit_interval",
            ContinuumSpec::ClosedInterval { .. } => "closed_interval",
            ContinuumSpec::OpenIntervalG => "open_interval_g",
            ContinuumSpec::BallOmega { .. } => "ball_omega",
            ContinuumSpec::FamilyFn { .. } => "family_fn",
            ContinuumSpec::FamilyOmegaN { .. } => "family_omega_n",
            ContinuumSpec::ChartTransport { .. } => "chart_transport",
            ContinuumSpec::RealLineArctan => "real_line_arctan",
            ContinuumSpec::AffineLine { .. } => "affine_line",
            ContinuumSpec::TrivialInterval { .. } => "trivial_interval",
        }
    }
}

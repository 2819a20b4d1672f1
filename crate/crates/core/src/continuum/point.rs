use core::fmt;

use smallvec::SmallVec;

/// A point of `ℝⁿ`. Dimensions up to three are stored inline.
#[derive(Clone, PartialEq, Default)]
pub struct Point(SmallVec<[f64; 3]>);

impl Point {
    pub fn new(coords: &[f64]) -> Self {
        Point(SmallVec::from_slice(coords))
    }

    pub fn scalar(x: f64) -> Self {
        let mut v = SmallVec::new();
        v.push(x);
        Point(v)
    }

    pub fn zeros(dim: usize) -> Self {
        Point(SmallVec::from_elem(0.0, dim))
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn coords_mut(&mut self) -> &mut [f64] {
        &mut self.0
    }

    /// First coordinate.
    #[inline]
    pub fn x(&self) -> f64 {
        self.0[0]
    }

    pub fn norm_sq(&self) -> f64 {
        self.0.iter().map(|c| c * c).sum()
    }

    /// Sup-norm distance; NaN anywhere yields `+∞`.
    pub fn max_abs_diff(&self, other: &Point) -> f64 {
        let mut m = 0.0f64;
        for (a, b) in self.0.iter().zip(other.0.iter()) {
            let d = (a - b).abs();
            if d.is_nan() {
                return f64::INFINITY;
            }
            m = m.max(d);
        }
        if self.dim() != other.dim() {
            return f64::INFINITY;
        }
        m
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|c| c.is_finite())
    }
}

impl From<f64> for Point {
    fn from(x: f64) -> Self {
        Point::scalar(x)
    }
}

impl From<&[f64]> for Point {
    fn from(c: &[f64]) -> Self {
        Point::new(c)
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// Where a continuum operation lives.
#[derive(Debug, Clone, PartialEq)]
pub enum Domain {
    /// `[lo, hi]` when `closed`, `(lo, hi)` otherwise.
    Interval { lo: f64, hi: f64, closed: bool },
    /// Open ball.
    Ball { center: Point, radius: f64 },
    /// All of `ℝⁿ`; sampled on a box.
    Euclidean { dim: usize },
}

impl Domain {
    pub fn dim(&self) -> usize {
        match self {
            Domain::Interval { .. } => 1,
            Domain::Ball { center, .. } => center.dim(),
            Domain::Euclidean { dim } => *dim,
        }
    }

    pub fn contains(&self, p: &Point) -> bool {
        if p.dim() != self.dim() || !p.is_finite() {
            return false;
        }
        match self {
            Domain::Interval { lo, hi, closed: true } => *lo <= p.x() && p.x() <= *hi,
            Domain::Interval { lo, hi, closed: false } => *lo < p.x() && p.x() < *hi,
            Domain::Ball { center, radius } => {
                let d2: f64 =
                    p.coords().iter().zip(center.coords()).map(|(a, c)| (a - c) * (a - c)).sum();
                d2 < radius * radius
            }
            Domain::Euclidean { .. } => true,
        }
    }

    pub fn is_compact_interval(&self) -> bool {
        matches!(self, Domain::Interval { closed: true, .. })
    }
}

//! Trivial locus `{x : f(x,y) = x for all y}` and the component-count
//! nonisomorphism certificate.
//!
//! Any isomorphism of topological quandles is a homeomorphism carrying the
//! trivial locus onto the trivial locus, so the number of interval
//! components, the number of isolated points, and whether the locus is the
//! whole space are all isomorphism invariants.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::Range;

use smallvec::SmallVec;

use super::point::{Domain, Point};
use super::quandle::ContinuumQuandle;
use super::ContinuumError;

#[derive(Debug, Clone, PartialEq)]
pub enum LocusReport {
    /// One-dimensional domains.
    Interval {
        /// Maximal runs of at least two consecutive trivial samples, as
        /// closed intervals `[first, last]`, sorted and disjoint.
        intervals: Vec<(f64, f64)>,
        /// Trivial samples whose neighbours are both nontrivial.
        isolated_points: Vec<f64>,
        /// Every sample is trivial.
        whole_domain: bool,
        grid: usize,
        tolerance: f64,
    },
    /// Ball domains: connected components (grid adjacency along the axes) of
    /// the sampled trivial and nontrivial sets.
    Ball {
        nontrivial_components: usize,
        trivial_components: usize,
        grid: usize,
        tolerance: f64,
    },
}

impl LocusReport {
    /// Positive-length components (one-dimensional case).
    pub fn interval_count(&self) -> Option<usize> {
        match self {
            LocusReport::Interval { intervals, .. } => Some(intervals.len()),
            LocusReport::Ball { .. } => None,
        }
    }
}

/// `max_y |f(x, y) − x|` for `x = xs[i]`, `i ∈ range`. Failed evaluations
/// count as `+∞`.
pub fn trivial_deviation_chunk(
    q: &ContinuumQuandle,
    xs: &[Point],
    ys: &[Point],
    range: Range<usize>,
) -> Vec<f64> {
    xs[range]
        .iter()
        .map(|x| {
            let mut worst = 0.0f64;
            for y in ys {
                let d = match q.eval(x, y) {
                    Ok(v) => v.max_abs_diff(x),
                    Err(_) => f64::INFINITY,
                };
                if d.is_nan() || d > worst {
                    worst = if d.is_nan() { f64::INFINITY } else { d };
                }
            }
            worst
        })
        .collect()
}

/// Trivial locus sampled on `grid` points per axis; `x` is trivial when
/// every sampled `y` moves it by at most `tol`.
pub fn trivial_locus(
    q: &ContinuumQuandle,
    grid: usize,
    tol: f64,
) -> Result<LocusReport, ContinuumError> {
    let samples = q.samples(grid)?;
    let dev = trivial_deviation_chunk(q, &samples, &samples, 0..samples.len());
    locus_from_deviations(q, grid, tol, &dev)
}

/// Builds the report from per-sample deviations (one per element of
/// `q.samples(grid)`, in order).
pub fn locus_from_deviations(
    q: &ContinuumQuandle,
    grid: usize,
    tol: f64,
    deviations: &[f64],
) -> Result<LocusReport, ContinuumError> {
    let indexed = q.indexed_samples(grid)?;
    if indexed.len() != deviations.len() {
        return Err(ContinuumError::InvalidParameter(alloc::format!(
            "{} deviations for {} samples",
            deviations.len(),
            indexed.len()
        )));
    }
    let trivial: Vec<bool> = deviations.iter().map(|&d| d <= tol).collect();
    match q.domain() {
        Domain::Ball { .. } => {
            let nontrivial_components = components(&indexed, &trivial, false);
            let trivial_components = components(&indexed, &trivial, true);
            Ok(LocusReport::Ball { nontrivial_components, trivial_components, grid, tolerance: tol })
        }
        d if d.dim() == 1 => {
            let xs: Vec<f64> = indexed.iter().map(|(_, p)| p.x()).collect();
            let mut intervals = Vec::new();
            let mut isolated_points = Vec::new();
            let mut i = 0;
            while i < xs.len() {
                if !trivial[i] {
                    i += 1;
                    continue;
                }
                let start = i;
                while i + 1 < xs.len() && trivial[i + 1] {
                    i += 1;
                }
                if i > start {
                    intervals.push((xs[start], xs[i]));
                } else {
                    isolated_points.push(xs[start]);
                }
                i += 1;
            }
            let whole_domain = trivial.iter().all(|&t| t);
            Ok(LocusReport::Interval { intervals, isolated_points, whole_domain, grid, tolerance: tol })
        }
        _ => Err(ContinuumError::Unsupported {
            operation: "trivial locus",
            kind: q.spec().kind(),
        }),
    }
}

/// Connected components of `{i : trivial[i] == want}` under axis
/// adjacency of grid indices.
fn components(indexed: &[(SmallVec<[usize; 3]>, Point)], trivial: &[bool], want: bool) -> usize {
    let lookup: BTreeMap<&[usize], usize> =
        indexed.iter().enumerate().map(|(i, (idx, _))| (idx.as_slice(), i)).collect();
    let mut seen = alloc::vec![false; indexed.len()];
    let mut count = 0;
    let mut stack = Vec::new();
    for start in 0..indexed.len() {
        if seen[start] || trivial[start] != want {
            continue;
        }
        count += 1;
        seen[start] = true;
        stack.push(start);
        while let Some(i) = stack.pop() {
            let idx = &indexed[i].0;
            for axis in 0..idx.len() {
                for delta in [-1isize, 1] {
                    let Some(v) = idx[axis].checked_add_signed(delta) else { continue };
                    let mut nb = idx.clone();
                    nb[axis] = v;
                    if let Some(&j) = lookup.get(nb.as_slice()) {
                        if !seen[j] && trivial[j] == want {
                            seen[j] = true;
                            stack.push(j);
                        }
                    }
                }
            }
        }
    }
    count
}

/// Which locus invariant separated two quandles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LocusInvariant {
    WholeDomain,
    IntervalComponents,
    IsolatedPoints,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certificate {
    Nonisomorphic { invariant: LocusInvariant, left: usize, right: usize },
    Inconclusive,
}

impl Certificate {
    pub fn is_nonisomorphic(&self) -> bool {
        matches!(self, Certificate::Nonisomorphic { .. })
    }
}

/// Compares two one-dimensional trivial loci.
pub fn certify(left: &LocusReport, right: &LocusReport) -> Result<Certificate, ContinuumError> {
    let (
        LocusReport::Interval { intervals: i1, isolated_points: p1, whole_domain: w1, .. },
        LocusReport::Interval { intervals: i2, isolated_points: p2, whole_domain: w2, .. },
    ) = (left, right)
    else {
        return Err(ContinuumError::Unsupported {
            operation: "nonisomorphism certificate",
            kind: "ball locus",
        });
    };
    let pairs = [
        (LocusInvariant::WholeDomain, *w1 as usize, *w2 as usize),
        (LocusInvariant::IntervalComponents, i1.len(), i2.len()),
        (LocusInvariant::IsolatedPoints, p1.len(), p2.len()),
    ];
    Ok(pairs
        .into_iter()
        .find(|(_, a, b)| a != b)
        .map_or(Certificate::Inconclusive, |(invariant, left, right)| {
            Certificate::Nonisomorphic { invariant, left, right }
        }))
}

/// Certificate for two operations on compact intervals.
pub fn nonisomorphism_certificate(
    q1: &ContinuumQuandle,
    q2: &ContinuumQuandle,
    grid: usize,
    tol: f64,
) -> Result<Certificate, ContinuumError> {
    for q in [q1, q2] {
        if !q.domain().is_compact_interval() {
            return Err(ContinuumError::Unsupported {
                operation: "nonisomorphism certificate",
                kind: q.spec().kind(),
            });
        }
    }
    certify(&trivial_locus(q1, grid, tol)?, &trivial_locus(q2, grid, tol)?)
}

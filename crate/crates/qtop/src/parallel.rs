//! Grid sweeps and tuple enumeration split across scoped worker threads.
//!
//! Work is cut into contiguous chunks of the outer loop and results are
//! combined in chunk order, so the output does not depend on the number of
//! workers.

use std::ops::Range;
use std::thread;

use qtop_core::braid::{fixed_points_in_range, tuple_count, BraidAction, BraidError, BraidWord, FixedPointSet};
use qtop_core::continuum::verify::{distributivity_chunk, inverse_chunk};
use qtop_core::continuum::{
    locus_from_deviations, trivial_deviation_chunk, ContinuumError, ContinuumQuandle, LocusReport,
    VerificationReport,
};
use qtop_core::finite::FiniteQuandle;

/// Worker count: `QTOP_THREADS` if set to a positive integer, otherwise the
/// available parallelism.
pub fn threads() -> usize {
    std::env::var("QTOP_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or_else(|| thread::available_parallelism().map_or(1, |n| n.get()))
}

/// Splits `0..len` into at most `parts` contiguous non-empty ranges.
pub fn chunks(len: usize, parts: usize) -> Vec<Range<usize>> {
    let parts = parts.clamp(1, len.max(1));
    let base = len / parts;
    let extra = len % parts;
    let mut out = Vec::with_capacity(parts);
    let mut start = 0;
    for k in 0..parts {
        let end = start + base + usize::from(k < extra);
        if end > start {
            out.push(start..end);
        }
        start = end;
    }
    out
}

fn map_chunks<T, F>(len: usize, workers: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(Range<usize>) -> T + Sync,
{
    let ranges = chunks(len, workers);
    if ranges.len() <= 1 {
        return ranges.into_iter().map(&f).collect();
    }
    thread::scope(|s| {
        let handles: Vec<_> = ranges.into_iter().map(|r| s.spawn(|| f(r))).collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    })
}

fn merge_all(parts: Vec<VerificationReport>, empty: VerificationReport) -> VerificationReport {
    parts.into_iter().fold(empty, VerificationReport::merge)
}

pub fn distributivity(
    q: &ContinuumQuandle,
    grid: usize,
    tol: f64,
    workers: usize,
) -> Result<VerificationReport, ContinuumError> {
    let samples = q.samples(grid)?;
    let parts = map_chunks(samples.len(), workers, |r| distributivity_chunk(q, &samples, r, grid, tol));
    Ok(merge_all(parts, distributivity_chunk(q, &samples, 0..0, grid, tol)))
}

pub fn inverse(
    q: &ContinuumQuandle,
    grid: usize,
    tol: f64,
    workers: usize,
) -> Result<VerificationReport, ContinuumError> {
    let samples = q.samples(grid)?;
    let parts = map_chunks(samples.len(), workers, |r| inverse_chunk(q, &samples, r, grid, tol));
    Ok(merge_all(parts, inverse_chunk(q, &samples, 0..0, grid, tol)))
}

pub fn trivial_locus(
    q: &ContinuumQuandle,
    grid: usize,
    tol: f64,
    workers: usize,
) -> Result<LocusReport, ContinuumError> {
    let samples = q.samples(grid)?;
    let dev: Vec<f64> = map_chunks(samples.len(), workers, |r| trivial_deviation_chunk(q, &samples, &samples, r))
        .into_iter()
        .flatten()
        .collect();
    locus_from_deviations(q, grid, tol, &dev)
}

pub fn fixed_points(
    q: &FiniteQuandle,
    w: &BraidWord,
    bound: u64,
    workers: usize,
) -> Result<FixedPointSet, BraidError> {
    let total = tuple_count(q, w, bound)?;
    let action = BraidAction::new(q)?;
    // Chunk over u64 indices via a usize proxy; `total` is at most `bound`.
    let len = usize::try_from(total).map_err(|_| BraidError::BoundExceeded {
        size: q.size(),
        strands: w.strands(),
        bound,
    })?;
    let tuples = map_chunks(len, workers, |r| {
        fixed_points_in_range(&action, w, r.start as u64..r.end as u64)
    })
    .into_iter()
    .flatten()
    .collect();
    Ok(FixedPointSet { strands: w.strands(), tuples })
}

#[cfg(test)]
mod tests {
    use super::*;
    use qtop_core::continuum::{verify_distributivity, BallVariant, ContinuumSpec};

    #[test]
    fn chunking_covers_everything() {
        for len in [0, 1, 5, 17, 100] {
            for parts in 1..8 {
                let c = chunks(len, parts);
                assert_eq!(c.iter().map(|r| r.len()).sum::<usize>(), len);
                assert!(c.windows(2).all(|w| w[0].end == w[1].start));
                assert!(c.iter().all(|r| !r.is_empty()));
            }
        }
    }

    #[test]
    fn worker_count_does_not_change_results() {
        let q = ContinuumQuandle::new(ContinuumSpec::unit_ball(1, BallVariant::PaperFaithful)).unwrap();
        let serial = verify_distributivity(&q, 25, 1e-9).unwrap();
        for workers in [1, 2, 3, 7] {
            let par = distributivity(&q, 25, 1e-9, workers).unwrap();
            assert_eq!(par.max_residual, serial.max_residual);
            assert_eq!(par.witness, serial.witness);
            assert_eq!(par.evaluated, serial.evaluated);
        }
        let r3 = qtop_core::finite::make_dihedral(3).unwrap();
        let w = BraidWord::new(3, vec![1, -2, 1]).unwrap();
        let a = fixed_points(&r3, &w, 1000, 1).unwrap();
        let b = fixed_points(&r3, &w, 1000, 4).unwrap();
        assert_eq!(a, b);
    }
}

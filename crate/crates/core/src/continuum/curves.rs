//! Tabulated right multiplications `R_y(x) = ½(2x)^{1+ε}`, `y = ½ + ε`, of
//! the unit-interval operation on `[0, ½]`.

use alloc::vec::Vec;

use super::quandle::{axis, ContinuumQuandle};
use super::spec::ContinuumSpec;
use super::ContinuumError;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveRow {
    pub x: f64,
    pub epsilon: f64,
    pub value: f64,
}

/// Rows for every `x` in a `samples`-point grid of `[0, ½]` and every
/// `ε ∈ epsilons`, sorted by `(x, ε)`.
pub fn right_mul_curves(epsilons: &[f64], samples: usize) -> Result<Vec<CurveRow>, ContinuumError> {
    if samples < 2 {
        return Err(ContinuumError::GridTooSmall { per_axis: samples, min: 2 });
    }
    if epsilons.is_empty() {
        return Err(ContinuumError::InvalidParameter("no epsilons given".into()));
    }
    if let Some(e) = epsilons.iter().find(|e| !(0.0..=0.5).contains(*e)) {
        return Err(ContinuumError::InvalidParameter(alloc::format!(
            "epsilon {e} outside [0, 1/2]"
        )));
    }
    let mut eps: Vec<f64> = epsilons.to_vec();
    eps.sort_by(f64::total_cmp);
    eps.dedup();
    let q = ContinuumQuandle::new(ContinuumSpec::unit_interval())?;
    let mut rows = Vec::with_capacity(samples * eps.len());
    for x in axis(0.0, 0.5, samples) {
        for &e in &eps {
            rows.push(CurveRow { x, epsilon: e, value: q.eval1(x, 0.5 + e)? });
        }
    }
    Ok(rows)
}

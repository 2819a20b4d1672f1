//! Minimal CSV emission: header row, comma separators, `.` decimals, LF
//! line endings. Floats use Rust's shortest round-trip formatting.

use std::fmt::Write as _;

use qtop_core::continuum::{CurveRow, LocusReport};

pub fn curves(rows: &[CurveRow]) -> String {
    let mut out = String::from("x,epsilon,value\n");
    for r in rows {
        writeln!(out, "{},{},{}", r.x, r.epsilon, r.value).expect("writing to a String");
    }
    out
}

/// One row per component: `kind,lo,hi` with kind `interval` or `point`.
/// Ball loci have no coordinates and are written as component counts.
pub fn locus(report: &LocusReport) -> String {
    let mut out = String::new();
    match report {
        LocusReport::Interval { intervals, isolated_points, .. } => {
            out.push_str("kind,lo,hi\n");
            for (lo, hi) in intervals {
                writeln!(out, "interval,{lo},{hi}").expect("writing to a String");
            }
            for p in isolated_points {
                writeln!(out, "point,{p},{p}").expect("writing to a String");
            }
        }
        LocusReport::Ball { nontrivial_components, trivial_components, .. } => {
            out.push_str("set,components\n");
            writeln!(out, "nontrivial,{nontrivial_components}").expect("writing to a String");
            writeln!(out, "trivial,{trivial_components}").expect("writing to a String");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curve_layout() {
        let rows = qtop_core::continuum::right_mul_curves(&[0.5], 3).unwrap();
        assert_eq!(curves(&rows), "x,epsilon,value\n0,0.5,0\n0.25,0.5,0.17677669529663687\n0.5,0.5,0.5\n");
    }

    #[test]
    fn locus_layout() {
        let l = LocusReport::Interval {
            intervals: vec![(0.5, 1.0)],
            isolated_points: vec![0.0],
            whole_domain: false,
            grid: 3,
            tolerance: 1e-9,
        };
        assert_eq!(locus(&l), "kind,lo,hi\ninterval,0.5,1\npoint,0,0\n");
    }
}

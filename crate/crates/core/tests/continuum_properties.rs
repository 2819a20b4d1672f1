use std::sync::Arc;

use proptest::prelude::*;
use qtop_core::continuum::verify::distributivity_chunk;
use qtop_core::continuum::*;

fn q(spec: ContinuumSpec) -> ContinuumQuandle {
    ContinuumQuandle::new(spec).unwrap()
}

/// Every construction expected to be a topological quandle, with the grid
/// used for it. Ball-based constructions in dimension ≥ 2 use coarser grids
/// because the cube of the in-ball sample count grows quickly.
fn quandle_specs() -> Vec<(&'static str, ContinuumSpec, usize)> {
    use BallVariant::InvariantExponent as Inv;
    vec![
        ("unit", ContinuumSpec::unit_interval(), 101),
        ("closed", ContinuumSpec::closed_interval(-2.0, 3.0), 101),
        (
            "closed_tent",
            ContinuumSpec::ClosedInterval { a: 1.0, b: 2.0, exponent: Exponent::Tent { peak: 0.25 } },
            101,
        ),
        ("open_g", ContinuumSpec::OpenIntervalG, 101),
        ("family_4", ContinuumSpec::family_fn(4, 0.0, 1.0), 101),
        ("arctan_line", ContinuumSpec::RealLineArctan, 101),
        ("chart_arctan", ContinuumSpec::arctan_chart(), 101),
        ("affine_2", ContinuumSpec::AffineLine { t: 2.0 }, 101),
        ("affine_-3", ContinuumSpec::AffineLine { t: -3.0 }, 101),
        ("trivial", ContinuumSpec::TrivialInterval { a: 0.0, b: 1.0 }, 101),
        ("ball1", ContinuumSpec::unit_ball(1, Inv), 101),
        ("ball2", ContinuumSpec::unit_ball(2, Inv), 11),
        ("ball3", ContinuumSpec::unit_ball(3, Inv), 7),
        (
            "ball2_translated",
            ContinuumSpec::BallOmega { dim: 2, variant: Inv, center: vec![1.0, -2.0], radius: 0.5 },
            11,
        ),
        ("omega_3", ContinuumSpec::FamilyOmegaN { n: 3, dim: 2, variant: Inv }, 11),
        (
            "ball_chart",
            ContinuumSpec::ChartTransport {
                inner: Box::new(ContinuumSpec::unit_ball(2, Inv)),
                chart: Arc::new(BallChart { center: Point::new(&[3.0, 1.0]), radius: 2.0 }),
            },
            11,
        ),
    ]
}

#[test]
fn axioms_hold_on_grids() {
    for (name, spec, grid) in quandle_specs() {
        let qq = q(spec);
        let i = verify_idempotency(&qq, grid, DEFAULT_TOLERANCE).unwrap();
        let d = verify_distributivity(&qq, grid, DEFAULT_TOLERANCE).unwrap();
        let h = verify_homeomorphism_all(&qq, grid, DEFAULT_TOLERANCE).unwrap();
        let v = verify_inverse(&qq, grid, DEFAULT_INVERSE_TOLERANCE).unwrap();
        for rep in [&i, &d, &h, &v] {
            assert!(rep.passed(), "{name}: {:?} residual {} witness {:?}", rep.check, rep.max_residual, rep.witness);
            assert!(rep.evaluated > 0);
        }
    }
}

#[test]
fn paper_faithful_ball_fails_with_reproducible_witness() {
    for dim in [1, 2] {
        let qq = q(ContinuumSpec::unit_ball(dim, BallVariant::PaperFaithful));
        let grid = if dim == 1 { 41 } else { 11 };
        assert!(verify_idempotency(&qq, grid, DEFAULT_TOLERANCE).unwrap().passed());
        assert!(verify_homeomorphism_all(&qq, grid, DEFAULT_TOLERANCE).unwrap().passed());
        let d = verify_distributivity(&qq, grid, DEFAULT_TOLERANCE).unwrap();
        assert!(!d.passed());
        assert_eq!(d.failures, 0, "no domain escapes expected");
        assert_eq!(d.reevaluate(&qq).unwrap(), d.max_residual);
    }
}

#[test]
fn refinement_never_lowers_the_residual() {
    // Axis grids with per-axis counts m and 2m − 1 are nested.
    for spec in [
        ContinuumSpec::unit_ball(1, BallVariant::PaperFaithful),
        ContinuumSpec::RealLineArctan,
        ContinuumSpec::unit_interval(),
    ] {
        let qq = q(spec);
        let mut last = 0.0;
        for grid in [6, 11, 21, 41] {
            let r = verify_distributivity(&qq, grid, DEFAULT_TOLERANCE).unwrap().max_residual;
            assert!(r >= last, "grid {grid}: {r} < {last}");
            last = r;
        }
    }
}

#[test]
fn chunked_sweeps_merge_to_the_whole() {
    let qq = q(ContinuumSpec::unit_ball(1, BallVariant::PaperFaithful));
    let grid = 31;
    let samples = qq.samples(grid).unwrap();
    let whole = verify_distributivity(&qq, grid, DEFAULT_TOLERANCE).unwrap();
    let cuts = [0, 7, 8, 20, samples.len()];
    let parts: Vec<_> = cuts
        .windows(2)
        .map(|w| distributivity_chunk(&qq, &samples, w[0]..w[1], grid, DEFAULT_TOLERANCE))
        .collect();
    let forward = parts.iter().cloned().reduce(|a, b| a.merge(b)).unwrap();
    let backward = parts.into_iter().rev().reduce(|a, b| a.merge(b)).unwrap();
    for m in [forward, backward] {
        assert_eq!(m.max_residual, whole.max_residual);
        assert_eq!(m.witness, whole.witness);
        assert_eq!(m.evaluated, whole.evaluated);
    }
}

#[test]
fn family_of_one_block_is_the_closed_interval() {
    let f1 = q(ContinuumSpec::family_fn(1, 0.0, 1.0));
    let c = q(ContinuumSpec::closed_interval(0.0, 1.0));
    let s = f1.samples(101).unwrap();
    for x in &s {
        for y in &s {
            assert_eq!(f1.eval(x, y).unwrap(), c.eval(x, y).unwrap());
        }
    }
}

#[test]
fn unit_interval_proof_cases() {
    let qq = q(ContinuumSpec::unit_interval());
    for rep in verify_proof_cases(&qq, 41, DEFAULT_TOLERANCE).unwrap() {
        assert!(rep.passed(), "{:?}: {}", rep.check, rep.max_residual);
        assert_eq!(rep.reevaluate(&qq).unwrap(), rep.max_residual);
    }
}

#[test]
fn unit_interval_right_multiplication_examples() {
    let qq = q(ContinuumSpec::unit_interval());
    let rep = verify_homeomorphism(&qq, &Point::scalar(0.9), 10_000, DEFAULT_TOLERANCE).unwrap();
    assert!(rep.passed() && rep.evaluated > 0);
    // Independent check: values at 10⁴ points are strictly increasing.
    let vals: Vec<f64> = (0..10_000).map(|k| qq.eval1(k as f64 / 9_999.0, 0.9).unwrap()).collect();
    assert!(vals.windows(2).all(|w| w[1] > w[0]));
    for k in 0..=100 {
        assert_eq!(qq.eval1(0.5, k as f64 / 100.0).unwrap(), 0.5);
    }
    // y = 1 is the steepest exponent; the inverse still round-trips.
    let one = Point::scalar(1.0);
    for k in 0..1000 {
        let x = k as f64 / 999.0;
        let v = qq.right_mul(&one, &Point::scalar(x)).unwrap();
        assert!((qq.right_mul_inverse(&one, &v).unwrap().x() - x).abs() < 1e-12, "x = {x}");
    }
}

#[test]
fn open_interval_tends_to_identity_near_one() {
    let qq = q(ContinuumSpec::OpenIntervalG);
    let samples = qq.samples(201).unwrap();
    let dev = |y: f64| samples.iter().map(|x| (qq.eval1(x.x(), y).unwrap() - x.x()).abs()).fold(0.0, f64::max);
    let d: Vec<f64> = [0.9, 0.99, 0.999, 0.9999].into_iter().map(dev).collect();
    assert!(d.windows(2).all(|w| w[1] < w[0]), "{d:?}");
    assert!(d[3] < 1e-3, "{d:?}");
}

proptest! {
    #[test]
    fn unit_interval_stays_in_range_and_is_monotone(x0 in 0.0f64..=1.0, x1 in 0.0f64..=1.0, y in 0.0f64..=1.0) {
        let qq = q(ContinuumSpec::unit_interval());
        let (a, b) = (qq.eval1(x0, y).unwrap(), qq.eval1(x1, y).unwrap());
        prop_assert!((0.0..=1.0).contains(&a));
        if x0 < x1 {
            prop_assert!(a <= b);
        }
        let back = qq.right_mul_inverse(&Point::scalar(y), &Point::scalar(a)).unwrap();
        prop_assert!((back.x() - x0).abs() < 1e-10);
    }

    #[test]
    fn invariant_ball_keeps_points_inside(
        x in proptest::collection::vec(-0.7f64..0.7, 2),
        y in proptest::collection::vec(-0.7f64..0.7, 2),
    ) {
        let qq = q(ContinuumSpec::unit_ball(2, BallVariant::InvariantExponent));
        let (x, y) = (Point::new(&x), Point::new(&y));
        let v = qq.eval(&x, &y).unwrap();
        prop_assert!(v.norm_sq() < 1.0);
        prop_assert_eq!(&v.coords()[1..], &x.coords()[1..]);
        let back = qq.right_mul_inverse(&y, &v).unwrap();
        prop_assert!(back.max_abs_diff(&x) < 1e-10);
    }
}

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use qtop_core::poly::*;

type Term = (u32, u32, i64, i64);

fn term() -> impl Strategy<Value = Term> {
    (0u32..=6, 0u32..=6, -5i64..=5, 1i64..=4).prop_filter("degree <= 6", |t| t.0 + t.1 <= 6)
}

/// `x + x(1 − x)·g(x, y)` meets the endpoint identities for any `g`, and
/// also idempotency when `g` has the factor `(x − y)`.
fn endpoint_preserving(g: &[Term], with_diagonal_factor: bool) -> BiPoly {
    let g = BiPoly::from_fractions(g.iter().copied()).unwrap();
    let mut terms: Vec<(u32, u32, BigRational)> = vec![(1, 0, BigRational::from_integer(1.into()))];
    let factors: Vec<(u32, u32, i64)> = if with_diagonal_factor {
        // x(1 − x)(x − y) = x² − xy − x³ + x²y
        vec![(2, 0, 1), (1, 1, -1), (3, 0, -1), (2, 1, 1)]
    } else {
        vec![(1, 0, 1), (2, 0, -1)]
    };
    for (i, j, c) in g.terms() {
        for &(fi, fj, fc) in &factors {
            terms.push((i + fi, j + fj, c * BigRational::from_integer(BigInt::from(fc))));
        }
    }
    BiPoly::from_terms(terms).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn forced_trivial_only_for_x(terms in proptest::collection::vec(term(), 0..6)) {
        let p = BiPoly::from_fractions(terms).unwrap();
        let v = check_polynomial_quandle(&p);
        prop_assert_eq!(v.is_forced_trivial(), p == BiPoly::x());
        let unresolved = matches!(v, QuandleVerdict::Unresolved { .. });
        prop_assert!(!unresolved);
    }

    #[test]
    fn deformations_of_x_are_caught(g in proptest::collection::vec(term(), 1..4), diag in any::<bool>()) {
        let p = endpoint_preserving(&g, diag);
        let v = check_polynomial_quandle(&p);
        prop_assert_eq!(v.is_forced_trivial(), p == BiPoly::x());
        if p != BiPoly::x() {
            let QuandleVerdict::Violated { step, .. } = v else { panic!("{v:?}") };
            prop_assert!(step >= QuandleStep::Idempotent);
        }
    }

    #[test]
    fn verdicts_ignore_common_factors(terms in proptest::collection::vec(term(), 0..6), k in 2i64..50) {
        let p = BiPoly::from_fractions(terms.clone()).unwrap();
        let scaled = BiPoly::from_fractions(terms.iter().map(|&(i, j, n, d)| (i, j, n * k, d * k))).unwrap();
        prop_assert_eq!(check_polynomial_quandle(&p), check_polynomial_quandle(&scaled));
        prop_assert_eq!(check_polynomial_rack(&p), check_polynomial_rack(&scaled));
        prop_assert_eq!(check_polynomial_quandle(&p), check_polynomial_quandle(&p));
    }

    #[test]
    fn accepted_racks_are_injective_on_samples(
        coeffs in proptest::collection::vec(-3i64..=3, 1..5),
        flip in any::<bool>(),
    ) {
        // x + x(1 − x)·h(x) with small h, optionally composed with 1 − x.
        let mut terms: Vec<(u32, u32, i64)> = vec![(1, 0, 1)];
        for (k, &c) in coeffs.iter().enumerate() {
            terms.push((k as u32 + 1, 0, c));
            terms.push((k as u32 + 2, 0, -c));
        }
        if flip {
            terms = terms.into_iter().map(|(i, j, c)| (i, j, -c)).collect();
            terms.push((0, 0, 1));
        }
        let p = BiPoly::from_ints(&terms).unwrap();
        let verdict = check_polynomial_rack(&p);
        let n = 10_000;
        let vals: Vec<f64> = (0..=n).map(|k| p.eval_f64(k as f64 / n as f64, 0.5)).collect();
        let strictly_monotone = vals.windows(2).all(|w| w[1] > w[0]) || vals.windows(2).all(|w| w[1] < w[0]);
        if verdict.is_valid() {
            prop_assert!(strictly_monotone, "{p} accepted but sampled values repeat");
        }
        // A strict reversal in the samples is a certificate against.
        let up = vals.windows(2).any(|w| w[1] > w[0] + 1e-12);
        let down = vals.windows(2).any(|w| w[1] < w[0] - 1e-12);
        if up && down {
            prop_assert!(!verdict.is_valid());
        }
    }
}

#[test]
fn rack_examples_from_the_docs() {
    let cube = BiPoly::from_ints(&[(3, 0, 1)]).unwrap();
    assert_eq!(check_polynomial_rack(&cube), RackVerdict::Valid { increasing: true });
    let flip = BiPoly::from_ints(&[(0, 0, 1), (1, 0, -1)]).unwrap();
    assert_eq!(check_polynomial_rack(&flip), RackVerdict::Valid { increasing: false });
}

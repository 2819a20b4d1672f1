use proptest::prelude::*;
use qtop_core::braid::*;
use qtop_core::finite::*;

fn quandles() -> Vec<FiniteQuandle> {
    let mut out = Vec::new();
    for n in 1..=5 {
        out.push(make_trivial(n).unwrap());
        out.push(make_dihedral(n).unwrap());
    }
    out.push(make_alexander(5, 2).unwrap());
    out.push(make_alexander(4, 3).unwrap());
    out
}

fn tuples(size: usize, strands: usize) -> Vec<Vec<usize>> {
    (0..size.pow(strands as u32))
        .map(|mut k| {
            let mut t = vec![0; strands];
            for s in t.iter_mut().rev() {
                *s = k % size;
                k /= size;
            }
            t
        })
        .collect()
}

#[test]
fn generators_act_bijectively() {
    for q in quandles() {
        for strands in 2..=3 {
            let all = tuples(q.size(), strands);
            for i in 1..strands as i32 {
                for letter in [i, -i] {
                    let w = BraidWord::new(strands, vec![letter]).unwrap();
                    let mut images: Vec<Vec<usize>> =
                        all.iter().map(|t| act(&q, &w, t).unwrap()).collect();
                    for (t, img) in all.iter().zip(&images) {
                        assert_eq!(&act(&q, &w.inverse(), img).unwrap(), t);
                    }
                    images.sort();
                    images.dedup();
                    assert_eq!(images.len(), all.len(), "{} letter {letter}", q.label());
                }
            }
        }
    }
}

#[test]
fn braid_relations_hold() {
    for q in quandles() {
        let all = tuples(q.size(), 4);
        let pairs = [
            (vec![1, 2, 1], vec![2, 1, 2]),
            (vec![2, 3, 2], vec![3, 2, 3]),
            (vec![1, 3], vec![3, 1]),
            (vec![-1, 2, 1], vec![2, 1, -2]),
        ];
        for (a, b) in pairs {
            let (wa, wb) = (BraidWord::new(4, a).unwrap(), BraidWord::new(4, b).unwrap());
            for t in &all {
                assert_eq!(act(&q, &wa, t).unwrap(), act(&q, &wb, t).unwrap());
            }
        }
    }
}

/// Fox colourings of the trefoil diagram with arcs a, b, c: at each crossing
/// twice the over-arc equals the sum of the under-arcs, mod p.
fn fox_trefoil(p: usize) -> usize {
    let mut count = 0;
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                if (2 * a) % p == (b + c) % p && (2 * b) % p == (a + c) % p && (2 * c) % p == (a + b) % p {
                    count += 1;
                }
            }
        }
    }
    count
}

#[test]
fn trefoil_counts_match_fox_colourings() {
    let trefoil = BraidWord::new(2, vec![1, 1, 1]).unwrap();
    for p in [3, 5, 7] {
        let q = make_dihedral(p).unwrap();
        assert_eq!(fixed_points(&q, &trefoil).unwrap().count(), fox_trefoil(p), "p = {p}");
    }
}

#[test]
fn diagonal_tuples_are_fixed() {
    for q in quandles() {
        let w = BraidWord::new(3, vec![1, -2, 2, 1, -1]).unwrap();
        let fp = fixed_points(&q, &w).unwrap();
        for a in 0..q.size() {
            assert!(fp.tuples.contains(&vec![a; 3]));
        }
    }
}

fn quandle_strategy() -> impl Strategy<Value = FiniteQuandle> {
    (0..quandles().len()).prop_map(|i| quandles().swap_remove(i))
}

fn word_strategy() -> impl Strategy<Value = BraidWord> {
    (2usize..=4).prop_flat_map(|n| {
        let letter = (1..n as i32).prop_flat_map(|i| prop_oneof![Just(i), Just(-i)]);
        proptest::collection::vec(letter, 0..=6).prop_map(move |l| BraidWord::new(n, l).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn markov_moves_preserve_fixed_point_counts(
        q in quandle_strategy(),
        w in word_strategy(),
        alpha in proptest::collection::vec(any::<prop::sample::Index>(), 0..=4),
        positive in any::<bool>(),
    ) {
        let n = w.strands();
        let letters: Vec<i32> = alpha
            .iter()
            .enumerate()
            .map(|(k, ix)| {
                let i = ix.index(n - 1) as i32 + 1;
                if k % 2 == 0 { i } else { -i }
            })
            .collect();
        let a = BraidWord::new(n, letters).unwrap();
        let base = fixed_points(&q, &w).unwrap().count();
        prop_assert_eq!(fixed_points(&q, &w.conjugate_by(&a).unwrap()).unwrap().count(), base);
        prop_assert_eq!(fixed_points(&q, &w.stabilize(positive)).unwrap().count(), base);
    }

    #[test]
    fn word_times_inverse_is_identity(q in quandle_strategy(), w in word_strategy()) {
        let id = w.concat(&w.inverse()).unwrap();
        for t in tuples(q.size(), w.strands()) {
            prop_assert_eq!(act(&q, &id, &t).unwrap(), t);
        }
    }
}

use proptest::prelude::*;
use qtop_core::finite::*;

/// Straight triple loop, kept independent of the library checker.
fn naive_is_quandle(n: usize, op: impl Fn(usize, usize) -> usize) -> bool {
    let idempotent = (0..n).all(|a| op(a, a) == a);
    let columns = (0..n).all(|b| {
        let mut seen = vec![false; n];
        (0..n).all(|a| !std::mem::replace(&mut seen[op(a, b)], true))
    });
    let distributive = (0..n).all(|a| {
        (0..n).all(|b| (0..n).all(|c| op(op(a, b), c) == op(op(a, c), op(b, c))))
    });
    idempotent && columns && distributive
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn alexander_minus_one_is_dihedral() {
    for n in 1..=32 {
        let a = make_alexander(n, -1).unwrap();
        let d = make_dihedral(n).unwrap();
        assert_eq!(a.rows(), d.rows(), "n = {n}");
    }
}

#[test]
fn integer_constructors_are_quandles_up_to_64() {
    for n in 1..=64 {
        assert!(check_quandle(&make_trivial(n).unwrap()).passed(), "trivial {n}");
        assert!(check_quandle(&make_dihedral(n).unwrap()).passed(), "dihedral {n}");
    }
    for n in [5usize, 12, 31, 64] {
        for t in (-(n as i64))..(n as i64) {
            if gcd(t, n as i64) == 1 {
                let q = make_alexander(n, t).unwrap();
                assert!(check_quandle(&q).passed(), "alexander({n},{t})");
            } else {
                assert!(make_alexander(n, t).is_err());
            }
        }
    }
}

#[test]
fn group_constructors_are_quandles() {
    let groups = [
        GroupTable::cyclic(9).unwrap(),
        GroupTable::dihedral(5).unwrap(),
        GroupTable::symmetric(4).unwrap(),
        GroupTable::alternating(4).unwrap(),
        GroupTable::quaternion().unwrap(),
    ];
    for g in &groups {
        assert!(check_quandle(&make_conj(g).unwrap()).passed(), "conj {}", g.label());
        assert!(check_quandle(&make_core(g).unwrap()).passed(), "core {}", g.label());
    }
    // Conj of an abelian group is trivial.
    let c = make_conj(&GroupTable::cyclic(6).unwrap()).unwrap();
    assert_eq!(c.rows(), make_trivial(6).unwrap().rows());
}

#[test]
fn inner_group_of_dihedral() {
    // Reflections x ↦ 2j − x generate all of D_n for odd n; for even n only
    // the even translations and their reflections.
    for n in 3..=12 {
        let s = inner_group(&make_dihedral(n).unwrap()).unwrap();
        let expect = if n % 2 == 1 { 2 * n } else { n };
        assert_eq!(s.order, expect, "n = {n}");
        assert_eq!(s.is_transitive(), n % 2 == 1);
    }
}

fn relabel(q: &FiniteQuandle, perm: &[usize]) -> FiniteQuandle {
    let n = q.size();
    let mut inv = vec![0; n];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    FiniteQuandle::from_fn(n, "relabelled", |a, b| perm[q.op(inv[a], inv[b])]).unwrap()
}

fn small_quandle() -> impl Strategy<Value = FiniteQuandle> {
    prop_oneof![
        (1usize..=9).prop_map(|n| make_dihedral(n).unwrap()),
        (1usize..=9).prop_map(|n| make_trivial(n).unwrap()),
        Just(make_alexander(7, 3).unwrap()),
        Just(make_alexander(8, 3).unwrap()),
        Just(make_conj(&GroupTable::symmetric(3).unwrap()).unwrap()),
        Just(make_core(&GroupTable::quaternion().unwrap()).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn checker_agrees_with_naive_oracle(n in 1usize..=4, seed in proptest::collection::vec(0usize..4, 16)) {
        let table: Vec<usize> = seed.iter().map(|v| v % n).collect();
        let op = |a: usize, b: usize| table[a * n + b];
        let q = FiniteQuandle::from_fn(n, "random", op).unwrap();
        prop_assert_eq!(check_quandle(&q).passed(), naive_is_quandle(n, op));
    }

    #[test]
    fn relabelling_gives_isomorphic_quandle(
        (q, perm) in small_quandle().prop_flat_map(|q| {
            let n = q.size();
            (Just(q), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        })
    ) {
        let r = relabel(&q, &perm);
        let phi = are_isomorphic(&q, &r).unwrap().expect("relabelled copy must be isomorphic");
        prop_assert!(check_isomorphism(&q, &r, &phi));
        let back = are_isomorphic(&r, &q).unwrap().expect("symmetric");
        prop_assert!(check_isomorphism(&r, &q, &back));
        prop_assert!(are_isomorphic(&q, &q).unwrap().is_some());
        let mut o1 = inner_group(&q).unwrap().orbit_sizes();
        let mut o2 = inner_group(&r).unwrap().orbit_sizes();
        o1.sort();
        o2.sort();
        prop_assert_eq!(o1, o2);
    }

    #[test]
    fn different_orbit_profiles_are_not_isomorphic(n in 3usize..=9) {
        let d = make_dihedral(n).unwrap();
        let t = make_trivial(n).unwrap();
        prop_assert!(are_isomorphic(&d, &t).unwrap().is_none());
    }
}

//! Property-based invariants over random words in several Coxeter systems,
//! exercising both backends (including affine, infinite groups).

use proptest::prelude::*;

use bruhat_core::lab::scans::degree_class_one;
use bruhat_core::lab::{verify_theorem1, verify_theorem2};
use bruhat_core::*;

/// (name, Coxeter matrix) pairs used by the generic-backend properties.
fn systems() -> Vec<(&'static str, CoxeterSystem)> {
    let m = |rows: Vec<Vec<i64>>| CoxeterSystem::root_lattice(CoxeterMatrix::new(&rows).unwrap());
    vec![
        ("A3", m(vec![vec![1, 3, 2], vec![3, 1, 3], vec![2, 3, 1]])),
        ("B3", m(vec![vec![1, 3, 2], vec![3, 1, 4], vec![2, 4, 1]])),
        ("G2", m(vec![vec![1, 6], vec![6, 1]])),
        (
            "affine A2",
            m(vec![vec![1, 3, 3], vec![3, 1, 3], vec![3, 3, 1]]),
        ),
        ("affine A1", m(vec![vec![1, 0], vec![0, 1]])),
        ("A4 perm", CoxeterSystem::type_a(4).unwrap()),
        ("A5 perm", CoxeterSystem::type_a(5).unwrap()),
    ]
}

fn word_for(sys: &CoxeterSystem, raw: &[usize]) -> Word {
    Word::from_indices(&raw.iter().map(|r| r % sys.rank() + 1).collect::<Vec<_>>())
}

fn arb_case(max_len: usize) -> impl Strategy<Value = (usize, Vec<usize>, Vec<usize>)> {
    (
        0..systems().len(),
        prop::collection::vec(0usize..16, 0..max_len),
        prop::collection::vec(0usize..16, 0..max_len),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn words_lengths_and_products((k, a, b) in arb_case(12)) {
        let (_, sys) = &systems()[k];
        let u = sys.eval(&word_for(sys, &a)).unwrap();
        let v = sys.eval(&word_for(sys, &b)).unwrap();
        prop_assert!(u.length() as usize <= a.len());
        let uv = sys.multiply(&u, &v);
        prop_assert!(uv.length() <= u.length() + v.length());
        prop_assert_eq!(uv.length() % 2, (u.length() + v.length()) % 2);
        let word = sys.reduced_word(&u);
        prop_assert_eq!(word.len() as u32, u.length());
        prop_assert!(sys.is_reduced(&word).unwrap());
        prop_assert_eq!(&sys.eval(&word).unwrap(), &u);
        prop_assert!(sys.multiply(&u, &sys.inverse(&u)).is_identity());
        prop_assert_eq!(sys.inverse(&u).length(), u.length());
        prop_assert_eq!(sys.parse_element(&sys.format_element(&u)).unwrap(), u.clone());
        prop_assert_eq!(sys.left_inversion_set(&u).len() as u32, u.length());
        for s in sys.generators() {
            let su = sys.lmul_gen(s, &u);
            prop_assert_eq!(sys.has_descent(&u, s, Side::Left), su.length() < u.length());
            let us = sys.rmul_gen(&u, s);
            prop_assert_eq!(sys.has_descent(&u, s, Side::Right), us.length() < u.length());
        }
    }

    #[test]
    fn parabolic_factorization_is_length_additive((k, a, _b) in arb_case(10), bits in 0u64..64) {
        let (_, sys) = &systems()[k];
        let w = sys.eval(&word_for(sys, &a)).unwrap();
        let j = GeneratorSet::from_bits(bits).intersection(sys.all_generators());
        for side in [Side::Left, Side::Right] {
            let f = sys.parabolic_decompose(&w, j, side).unwrap();
            prop_assert_eq!(f.parabolic.length() + f.minimal.length(), w.length());
            prop_assert!(sys.descents(&f.minimal, side).intersection(j).is_empty());
            prop_assert!(sys.support(&f.parabolic).is_subset(j));
            let back = match side {
                Side::Left => sys.multiply(&f.parabolic, &f.minimal),
                Side::Right => sys.multiply(&f.minimal, &f.parabolic),
            };
            prop_assert_eq!(back, w.clone());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    /// Both structure theorems on random small elements of every system,
    /// including infinite affine groups.
    #[test]
    fn theorems_hold_on_random_elements((k, a, _b) in arb_case(11)) {
        let (name, sys) = &systems()[k];
        let w = sys.eval(&word_for(sys, &a)).unwrap();
        let r = verify_theorem1(sys, &w);
        prop_assert!(r.passed(), "{}: {}", name, r);
        let r = verify_theorem2(sys, &w);
        prop_assert!(r.passed(), "{}: {}", name, r);
    }

    #[test]
    fn interval_order_matches_descent_recursion((k, a, _b) in arb_case(7)) {
        let (_, sys) = &systems()[k];
        let w = sys.eval(&word_for(sys, &a)).unwrap();
        let b = lower_interval(sys, &w);
        prop_assert_eq!(b.level_counts().iter().sum::<usize>(), b.len());
        for (i, u) in b.members().iter().enumerate() {
            prop_assert!(bruhat_leq(sys, u, &w));
            prop_assert!(b.degree_at(i) as u32 >= w.length(), "Deodhar");
            for (j, v) in b.members().iter().enumerate() {
                prop_assert_eq!(b.leq(i, j), bruhat_leq(sys, u, v));
            }
        }
        prop_assert!(degree_class_one(sys, &w).unwrap().is_empty());
    }

    #[test]
    fn partition_is_deterministic((k, a, _b) in arb_case(8)) {
        let (_, sys) = &systems()[k];
        let w = sys.eval(&word_for(sys, &a)).unwrap();
        let p1 = partition(sys, &w).unwrap();
        let p2 = partition(sys, &w).unwrap();
        prop_assert_eq!(p1.cosets(), p2.cosets());
        for pair in p1.cosets().windows(2) {
            prop_assert!(pair[0].max() > pair[1].max());
        }
    }
}

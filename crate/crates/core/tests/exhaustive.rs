//! Exhaustive structural properties over all of S4 (and aggregate counts
//! over S5 frozen from an independent brute-force oracle).

use std::collections::BTreeSet;

use bruhat_core::coset::{critical_set, min_set, project_up_greedy};
use bruhat_core::lab::{all_elements, verify_theorem1, verify_theorem2};
use bruhat_core::poset::check_graded;
use bruhat_core::*;

fn s(n: usize) -> (CoxeterSystem, Vec<Element>) {
    let sys = CoxeterSystem::type_a(n - 1).unwrap();
    let all = all_elements(&sys, 100).unwrap();
    (sys, all)
}

#[test]
fn length_is_subadditive_with_parity() {
    let (sys, all) = s(4);
    for u in &all {
        for v in &all {
            let uv = sys.multiply(u, v);
            assert!(uv.length() <= u.length() + v.length());
            assert_eq!(uv.length() % 2, (u.length() + v.length()) % 2);
        }
    }
}

#[test]
fn inversion_sets_have_length_many_elements_for_every_word() {
    let (sys, all) = s(4);
    for w in &all {
        let canonical = sys.left_inversion_set(w);
        assert_eq!(canonical.len() as u32, w.length());
        for word in sys.reduced_words(w, 1000) {
            let set: BTreeSet<_> = sys.inversions(&word).unwrap().into_iter().collect();
            assert_eq!(set, canonical);
        }
        assert_eq!(sys.right_inversion_set(w).len() as u32, w.length());
    }
}

#[test]
fn order_oracles_agree_and_enumeration_is_complete() {
    let (sys, all) = s(4);
    for w in &all {
        let b = lower_interval(&sys, w);
        let by_dot: Vec<&Element> = all
            .iter()
            .filter(|u| bruhat_leq_dot(&sys, u, w).unwrap())
            .collect();
        assert!(by_dot.iter().copied().eq(b.members().iter()));
        for (i, u) in b.members().iter().enumerate() {
            for (j, v) in b.members().iter().enumerate() {
                let graph = b.leq(i, j);
                assert_eq!(bruhat_leq(&sys, u, v), graph);
                assert_eq!(bruhat_leq_dot(&sys, u, v).unwrap(), graph);
            }
        }
    }
}

#[test]
fn edges_are_exactly_reflection_steps() {
    let (sys, all) = s(4);
    for w in &all {
        let b = lower_interval(&sys, w);
        for (i, u) in b.members().iter().enumerate() {
            for (j, v) in b.members().iter().enumerate() {
                let step =
                    u.length() < v.length() && sys.is_reflection(&sys.multiply(v, &sys.inverse(u)));
                assert_eq!(b.has_edge(i, j), step);
            }
        }
        let ranks: Vec<i64> = b.members().iter().map(|x| x.length() as i64).collect();
        assert!(check_graded(&quotient::order_relation(&b), &ranks).graded);
    }
}

#[test]
fn lifting_property() {
    let (sys, all) = s(4);
    for w in &all {
        for u in all.iter().filter(|u| bruhat_leq(&sys, u, w) && *u != w) {
            let ds = sys
                .descents(w, Side::Left)
                .difference(sys.descents(u, Side::Left));
            for t in ds.iter() {
                assert!(bruhat_leq(&sys, &sys.lmul_gen(t, u), w));
            }
        }
    }
}

#[test]
fn cosets_partition_and_are_intervals() {
    let (sys, all) = s(4);
    for w in &all {
        let b = lower_interval(&sys, w);
        let p = Partition::new(&sys, &b).unwrap();
        let mut seen = BTreeSet::new();
        for c in p.cosets() {
            for x in c.members() {
                assert!(seen.insert(x.clone()));
            }
            let slice = interval_slice(&sys, c.min(), c.max()).unwrap();
            assert_eq!(slice.members, c.members());
            // regularity of the induced graph
            let idx: BTreeSet<usize> = c.members().iter().map(|x| b.index_of(x).unwrap()).collect();
            for &i in &idx {
                let d = b
                    .lower_neighbours(i)
                    .iter()
                    .chain(b.upper_neighbours(i))
                    .filter(|k| idx.contains(k))
                    .count();
                assert_eq!(d as u32, c.side());
            }
            // extremes carry the expected descents
            assert!(c.left().is_subset(sys.descents(c.max(), Side::Left)));
            assert!(c.right().is_subset(sys.descents(c.max(), Side::Right)));
            assert!(c
                .left()
                .intersection(sys.descents(c.min(), Side::Left))
                .is_empty());
            assert!(c
                .right()
                .intersection(sys.descents(c.min(), Side::Right))
                .is_empty());
        }
        assert_eq!(seen.len(), b.len());
        let maxes: BTreeSet<_> = p.cosets().iter().map(|c| c.max().clone()).collect();
        let mins: BTreeSet<_> = p.cosets().iter().map(|c| c.min().clone()).collect();
        assert_eq!(
            critical_set(&sys, &b).into_iter().collect::<BTreeSet<_>>(),
            maxes
        );
        assert_eq!(min_set(&sys, &b).into_iter().collect::<BTreeSet<_>>(), mins);
    }
}

#[test]
fn projections_are_monotone_and_greedy_agrees() {
    let (sys, all) = s(4);
    for w in &all {
        let b = lower_interval(&sys, w);
        let up: Vec<Element> = b
            .members()
            .iter()
            .map(|u| project_up(&sys, w, u).unwrap())
            .collect();
        let down: Vec<Element> = b
            .members()
            .iter()
            .map(|u| project_down(&sys, w, u).unwrap())
            .collect();
        for (k, u) in b.members().iter().enumerate() {
            assert_eq!(project_up_greedy(&sys, w, u).unwrap(), up[k]);
            assert!(same_coset(&sys, w, u, &up[k]).unwrap());
            let (mid, side) = mid_side(&sys, w, u).unwrap();
            assert_eq!(mid + side, u.length());
        }
        for i in 0..b.len() {
            for j in 0..b.len() {
                if b.leq(i, j) {
                    assert!(bruhat_leq(&sys, &up[i], &up[j]));
                    assert!(bruhat_leq(&sys, &down[i], &down[j]));
                    assert!(down[i].length() <= down[j].length(), "mid monotone");
                }
            }
        }
    }
}

#[test]
fn side_monotone_within_cosets() {
    let (sys, all) = s(4);
    for w in &all {
        let p = partition(&sys, w).unwrap();
        for c in p.cosets() {
            for u in c.members() {
                for v in c.members() {
                    if bruhat_leq(&sys, u, v) {
                        assert!(u.length() - c.mid() <= v.length() - c.mid());
                    }
                }
            }
        }
    }
}

#[test]
fn quotient_structure_and_separated_consequences() {
    let (sys, all) = s(4);
    for w in &all {
        let q = quotient_interval(&sys, w).unwrap();
        assert_eq!(q.order().minimum(), Some(q.bottom()));
        assert_eq!(q.order().maximum(), Some(q.top()));
        assert!(q.cosets()[q.bottom()].contains(&sys.identity()));
        for c in 0..q.len() {
            for d in 0..q.len() {
                if q.leq(c, d) {
                    assert!(q.cosets()[c].mid() <= q.cosets()[d].mid());
                }
            }
        }
        let check = quotient_graph_check(&sys, &q);
        assert!(check.forward_violations.is_empty());
        if is_separated(&sys, w) {
            assert!(check.equivalence());
            let bottom = project_down(&sys, w, w).unwrap();
            let slice = interval_slice(&sys, &sys.identity(), &bottom).unwrap();
            assert_eq!(min_set(&sys, q.interval()), slice.members);
            let mids: Vec<i64> = q.cosets().iter().map(|c| c.mid() as i64).collect();
            assert!(check_graded(q.order(), &mids).graded);
            for c in 0..q.len() {
                for d in 0..q.len() {
                    if q.leq(c, d) {
                        assert!(q.cosets()[c].degree() <= q.cosets()[d].degree());
                    }
                }
            }
            let b = q.interval();
            let side =
                |i: usize| b.members()[i].length() - q.cosets()[q.partition().coset_of(i)].mid();
            for &(i, j) in b.edges() {
                assert!(side(i) <= side(j));
            }
        }
    }
}

#[test]
fn bottom_coset_is_faithful_everywhere() {
    let (sys, all) = s(4);
    for w in &all {
        let q = quotient_interval(&sys, w).unwrap();
        let bottom = &q.cosets()[q.bottom()];
        assert!(
            check_faithful(bottom.members(), q.interval())
                .unwrap()
                .graded
        );
    }
}

#[test]
fn theorems_hold_on_s4() {
    let (sys, all) = s(4);
    for w in &all {
        let r = verify_theorem1(&sys, w);
        assert!(r.passed(), "{r}");
        let r = verify_theorem2(&sys, w);
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn backends_agree_on_s4() {
    let (ta, all) = s(4);
    let rl = CoxeterSystem::root_lattice(CoxeterMatrix::type_a(3).unwrap());
    let to_rl = |x: &Element| rl.eval(&ta.reduced_word(x)).unwrap();
    let images: Vec<Element> = all.iter().map(to_rl).collect();
    assert_eq!(images.iter().collect::<BTreeSet<_>>().len(), 24);
    for (x, y) in all.iter().zip(&images) {
        assert_eq!(x.length(), y.length());
        for side in [Side::Left, Side::Right] {
            assert_eq!(ta.descents(x, side), rl.descents(y, side));
        }
        assert_eq!(ta.is_reflection(x), rl.is_reflection(y));
    }
    for (i, x) in all.iter().enumerate() {
        for (j, z) in all.iter().enumerate() {
            assert_eq!(
                to_rl(&ta.multiply(x, z)),
                rl.multiply(&images[i], &images[j])
            );
            assert_eq!(
                bruhat_leq(&ta, x, z),
                bruhat_leq(&rl, &images[i], &images[j])
            );
        }
    }
}

/// Aggregate values from the brute-force oracle.
#[test]
fn oracle_aggregates() {
    for (n, sum_b, sum_cosets, sum_arcs, separated, sum_edges) in
        [(4, 213, 30, 7, 24, 428), (5, 3781, 242, 187, 102, 12748)]
    {
        let (sys, all) = s(n);
        let (mut b_total, mut c_total, mut a_total, mut sep, mut e_total) = (0, 0, 0, 0, 0);
        for w in &all {
            let q = quotient_interval(&sys, w).unwrap();
            b_total += q.interval().len();
            e_total += q.interval().edges().len();
            c_total += q.len();
            a_total += q.arcs().len();
            sep += is_separated(&sys, w) as usize;
        }
        assert_eq!(
            (b_total, c_total, a_total, sep, e_total),
            (sum_b, sum_cosets, sum_arcs, separated, sum_edges),
            "S{n}"
        );
    }
}

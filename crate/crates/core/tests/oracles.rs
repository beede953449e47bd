//! Library operators against the brute-force references in `common`.

mod common;

use common::*;
use mullreg::{
    e_rim, enumerate_partitions, hook_profile, is_l_partition, ladder_counts, mullineux,
    partitions_up_to, regularise, s_operator, s_value, strip_i, strip_j, t_value, Node, Partition,
};

const N_MAX: usize = 12;
const E_VALUES: std::ops::RangeInclusive<usize> = 2..=6;

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn pairs(nodes: &[Node]) -> Vec<(usize, usize)> {
    nodes.iter().map(|n| (n.row, n.col)).collect()
}

#[test]
fn partition_counts_follow_the_recurrence() {
    let known = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];
    for (n, &count) in known.iter().enumerate() {
        assert_eq!(partition_count(n), count);
        assert_eq!(enumerate_partitions(n).count(), count, "n = {n}");
    }
    assert_eq!(partitions_up_to(N_MAX).count(), 272);
    assert_eq!(enumerate_partitions(20).count(), partition_count(20));
}

#[test]
fn enumeration_matches_recursive_generator_in_order() {
    for n in 0..=N_MAX {
        let ours: Vec<Vec<usize>> = enumerate_partitions(n).map(|q| q.into_parts()).collect();
        assert_eq!(ours, partitions_recursive(n), "n = {n}");
    }
}

#[test]
fn conjugate_and_regularity_match_diagram_transpose() {
    for lam in partitions_up_to(N_MAX) {
        let conj = lam.conjugate();
        assert_eq!(conj.parts(), conjugate_oracle(lam.parts()).as_slice());
        for e in E_VALUES {
            assert_eq!(
                lam.is_e_regular(e),
                is_regular_oracle(lam.parts(), e),
                "{lam} e={e}"
            );
            assert_eq!(
                lam.is_e_restricted(e),
                is_regular_oracle(conj.parts(), e),
                "{lam} e={e}"
            );
        }
    }
}

#[test]
fn regularisation_matches_node_sliding() {
    for lam in partitions_up_to(N_MAX) {
        for e in E_VALUES {
            let g = regularise(&lam, e);
            assert_eq!(
                g.parts(),
                regularise_oracle(lam.parts(), e).as_slice(),
                "{lam} e={e}"
            );
            let counts = ladder_counts(&lam, e);
            let oracle = ladder_counts_oracle(lam.parts(), e);
            assert_eq!(counts.iter().count(), oracle.len());
            for (ladder, c) in counts.iter() {
                assert_eq!(oracle[&ladder], c);
            }
        }
    }
}

#[test]
fn hook_profiles_match_cell_counting() {
    for lam in partitions_up_to(N_MAX) {
        let d = diagram(lam.parts());
        for e in E_VALUES {
            let profile = hook_profile(&lam, e);
            assert_eq!(profile.records.len(), lam.size());
            for rec in &profile.records {
                let (a, l) = arm_leg_oracle(&d, rec.node.row, rec.node.col);
                assert_eq!((rec.arm, rec.leg, rec.length), (a, l, a + l + 1));
            }
            let (w, steep, shallow, _) = hook_counts_oracle(lam.parts(), e);
            assert_eq!(
                (profile.w, profile.z, profile.z_conj),
                (w, steep, shallow),
                "{lam} e={e}"
            );
            assert_eq!(
                is_l_partition(&lam, e),
                is_l_partition_oracle(lam.parts(), e)
            );
        }
    }
}

#[test]
fn e_rim_matches_walk_over_explicit_rim() {
    for lam in partitions_up_to(N_MAX) {
        for e in E_VALUES {
            if !lam.is_e_regular(e) {
                assert!(e_rim(&lam, e).is_err());
                continue;
            }
            let rim = e_rim(&lam, e).unwrap();
            let oracle = e_rim_oracle(lam.parts(), e);
            assert_eq!(pairs(&rim.rim_nodes), oracle, "{lam} e={e}");
            assert_eq!(rim.r, oracle.len());
            assert_eq!(
                strip_i(&lam, e).unwrap().parts(),
                remove_cells(lam.parts(), &oracle).as_slice()
            );
        }
    }
}

#[test]
fn strip_j_restores_a_column_of_the_stripped_shape() {
    // Jλ is Iλ with a first column of length l′ prepended, so removing that
    // column again must give Iλ back.
    for lam in partitions_up_to(N_MAX) {
        for e in E_VALUES {
            if !lam.is_e_regular(e) || lam.is_empty() {
                continue;
            }
            let rim = e_rim(&lam, e).unwrap();
            let j = strip_j(&lam, e).unwrap();
            assert_eq!(j.num_parts(), rim.l_prime, "{lam} e={e}");
            assert_eq!(j.size() + rim.r, lam.size() + rim.l_prime);
            assert_eq!(j.remove_first_column(), strip_i(&lam, e).unwrap());
        }
    }
}

#[test]
fn mullineux_matches_search_over_original_definition() {
    for e in E_VALUES {
        let mut search = MullineuxSearch::new(e);
        for lam in partitions_up_to(10).filter(|q| q.is_e_regular(e)) {
            let ours = mullineux(&lam, e).unwrap();
            assert_eq!(
                ours.parts(),
                search.image(lam.parts()).as_slice(),
                "{lam} e={e}"
            );
        }
    }
}

#[test]
fn s_operator_matches_direct_construction() {
    for lam in partitions_up_to(N_MAX) {
        for e in 3..=6 {
            assert_eq!(s_value(&lam, e), s_oracle(lam.parts(), e));
            assert_eq!(
                t_value(&lam, e),
                s_oracle(&conjugate_oracle(lam.parts()), e)
            );
            if !is_l_partition_oracle(lam.parts(), e) {
                assert!(s_operator(&lam, e).is_err());
                continue;
            }
            let s = s_oracle(lam.parts(), e);
            let mut expected: Vec<usize> = lam.parts().to_vec();
            if s < expected.len() {
                expected.remove(s);
            }
            for part in expected.iter_mut().take(s) {
                *part -= e - 1;
            }
            expected.retain(|&x| x > 0);
            assert_eq!(
                s_operator(&lam, e).unwrap().parts(),
                expected.as_slice(),
                "{lam} e={e}"
            );
        }
    }
}

#[test]
fn worked_examples_agree_with_oracles() {
    assert_eq!(
        regularise_oracle(&[4, 3, 3, 3, 1, 1, 1, 1, 1], 3),
        vec![5, 4, 3, 3, 2, 1]
    );
    assert_eq!(e_rim_oracle(&[10, 6, 6, 4, 2], 3).len(), 11);
    assert_eq!(strip_i_oracle(&[10, 6, 6, 4, 2], 3).1, vec![7, 5, 4, 1]);
    assert_eq!(
        MullineuxSearch::new(3).image(&[3, 3, 2, 2, 1]),
        vec![6, 4, 1]
    );
    assert_eq!(
        MullineuxSearch::new(4).image(&[14, 10, 2, 2]),
        vec![5, 5, 4, 4, 3, 3, 2, 2]
    );
    assert_eq!(
        hook_counts_oracle(&[11, 2, 2, 1, 1, 1, 1, 1], 4),
        (5, 2, 3, 0)
    );
    assert_eq!(strip_j(&p(&[10, 6, 6, 4, 2]), 3).unwrap(), p(&[8, 6, 5, 2]));
}

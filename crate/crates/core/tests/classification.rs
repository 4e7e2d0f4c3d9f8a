use std::collections::BTreeMap;

use num_bigint::BigUint;
use sdcodes::circulant::LISTED_CODES;
use sdcodes::classify::exhaustive_orbit_count;
use sdcodes::counting::{all_class_representatives, sp2_order};
use sdcodes::*;

fn opts() -> ClassifyOptions {
    ClassifyOptions { exec: Exec::Sequential, ..Default::default() }
}

fn worked_matrix() -> StabilizerMatrix {
    StabilizerMatrix::new(
        3,
        vec![vec![1, 1, 0, 1], vec![1, 2, 1, 1], vec![0, 2, 1, 0], vec![1, 2, 2, 2]],
        vec![vec![0, 2, 0, 0], vec![1, 0, 1, 0], vec![0, 2, 1, 2], vec![0, 2, 0, 2]],
    )
    .unwrap()
}

fn four_cycle() -> WeightedGraph {
    WeightedGraph::from_rows(3, &[vec![0, 1, 1, 0], vec![1, 0, 0, 1], vec![1, 0, 0, 2], vec![0, 1, 2, 0]]).unwrap()
}

#[test]
fn worked_matrix_reduces_into_the_orbit_of_the_four_cycle() {
    let sf = standard_form(&worked_matrix()).unwrap();
    let engine = OrbitEngine::new(3, 4, Equivalence::Isomorphism, Exec::Sequential, DEFAULT_ORBIT_BUDGET).unwrap();
    assert!(engine.contains(&four_cycle(), &sf.graph).unwrap());
    let g = four_cycle();
    assert!(g.is_connected());
    assert_eq!(g.degrees(), vec![2, 2, 2, 2]);
    let w = weight_enumerator(&graph_code(&g), DEFAULT_ENUMERATION_CAP, Exec::Sequential).unwrap();
    assert_eq!(w, WeightEnumerator::from_terms(4, &[(0, 1), (3, 32), (4, 48)]));
}

#[test]
fn pipeline_agrees_with_exhaustive_partition() {
    for m in [2u8, 3] {
        let dbs = classify_up_to(m, 5, &opts()).unwrap();
        for n in 1..=5 {
            let direct = exhaustive_orbit_count(m, n, Exec::Sequential).unwrap();
            assert_eq!(direct, dbs[n - 1].i_count(), "m={m} n={n}");
        }
    }
}

#[test]
fn minimum_distance_is_least_orbit_degree_plus_one() {
    let dbs = classify_up_to(3, 6, &opts()).unwrap();
    for db in &dbs[1..] {
        for rep in &db.reps {
            let (delta, d) = orbit_min_degree_check(&graph_code(&rep.graph), DEFAULT_ORBIT_BUDGET, Exec::Sequential).unwrap();
            assert_eq!(d, delta + 1);
            assert_eq!(d, rep.d);
        }
    }
}

#[test]
fn hexacode_orbit_has_a_three_regular_graph() {
    let hexacode = WeightedGraph::circulant(2, &[0, 1, 1, 1, 0]).unwrap();
    let orbit = lc_orbit(&hexacode, DEFAULT_ORBIT_BUDGET, Exec::Sequential).unwrap();
    assert!(orbit.iter().any(|g| g.degrees().iter().all(|&d| d == 3)));
    assert_eq!(min_distance(&hexacode, Exec::Sequential), 4);
}

#[test]
fn listed_length_six_codes_over_f25_are_pairwise_inequivalent() {
    let codes: Vec<AdditiveCode> =
        LISTED_CODES.iter().filter(|c| c.m == 5 && c.n == 6).map(|c| graph_code(&c.graph().unwrap())).collect();
    assert_eq!(codes.len(), 5);
    for i in 0..codes.len() {
        for j in 0..codes.len() {
            let same = codes_equivalent(&codes[i], &codes[j], DEFAULT_ORBIT_BUDGET, Exec::Sequential).unwrap();
            assert_eq!(same, i == j, "{i} vs {j}");
        }
    }
}

#[test]
fn parallel_and_sequential_classifications_agree() {
    let seq = classify_up_to(4, 5, &opts()).unwrap();
    let par = classify_up_to(4, 5, &ClassifyOptions { exec: Exec::Parallel, ..Default::default() }).unwrap();
    assert_eq!(seq, par);
}

#[test]
fn enumerators_are_constant_on_each_orbit() {
    let dbs = classify_up_to(3, 5, &opts().with_enumerators()).unwrap();
    for db in &dbs[1..] {
        for rep in &db.reps {
            let w = rep.enumerator.as_ref().unwrap();
            for g in lc_orbit(&rep.graph, DEFAULT_ORBIT_BUDGET, Exec::Sequential).unwrap() {
                assert_eq!(&weight_enumerator(&graph_code(&g), DEFAULT_ENUMERATION_CAP, Exec::Sequential).unwrap(), w);
            }
        }
    }
}

#[test]
fn lengthening_keeps_only_the_target_distance() {
    let dbs = classify_up_to(3, 5, &opts()).unwrap();
    let six = lengthen_search(&dbs[4], 4, &opts()).unwrap();
    assert_eq!(six.i_count(), 1);
    assert_eq!(six.distance_counts(), BTreeMap::from([(4, 1)]));
    let stricter = OrbitDatabase { min_d: Some(3), ..dbs[4].clone() };
    assert!(matches!(lengthen_search(&stricter, 3, &opts()), Err(Error::IncompleteDatabase(_))));
}

#[test]
fn class_sizes_sum_to_the_mass() {
    for (m, max_n) in [(2u8, 4usize), (3, 3)] {
        let dbs = classify_up_to(m, max_n, &opts()).unwrap();
        for n in 1..=max_n {
            let classes = all_class_representatives(&dbs, n).unwrap();
            let group = BigUint::from(sp2_order(m)).pow(n as u32) * (1..=n as u64).product::<u64>();
            let mut sum = BigUint::from(0u32);
            for g in &classes {
                let aut = aut_order_bruteforce(&graph_code(g), 10_000_000).unwrap();
                assert!(m % 2 == 0 || aut >= 2);
                assert_eq!(&group % aut, BigUint::from(0u32));
                sum += &group / aut;
            }
            assert_eq!(sum, mass_total(m, n), "m={m} n={n}");
        }
    }
}

#[test]
fn mass_matches_the_subspace_count() {
    for (m, n) in [(2u8, 1usize), (2, 2), (3, 1), (3, 2)] {
        assert_eq!(BigUint::from(selfdual_count_oracle(m, n, 1 << 24).unwrap()), mass_total(m, n));
    }
    assert_eq!(mass_total(2, 4), BigUint::from(2295u32));
}

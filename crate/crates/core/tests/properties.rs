use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rustc_hash::FxHashSet;
use sdcodes::counting::sp2_elements;
use sdcodes::weights::weight_enumerator_naive;
use sdcodes::*;

fn graph_strategy(ms: &'static [u8], max_n: usize) -> impl Strategy<Value = WeightedGraph> {
    (proptest::sample::select(ms), 1..=max_n).prop_flat_map(|(m, n)| {
        proptest::collection::vec(0..m, n * (n - 1) / 2)
            .prop_map(move |upper| WeightedGraph::from_upper(m, n, &upper).unwrap())
    })
}

fn with_perm(g: WeightedGraph) -> impl Strategy<Value = (WeightedGraph, Vec<usize>)> {
    let n = g.n();
    (Just(g), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
}

fn unit(f: &Field, seed: u8) -> u8 {
    1 + seed % (f.m() - 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn lc_and_shift_have_inverses(g in graph_strategy(&[2, 3, 4, 5], 6), v in 0usize..6, s in any::<u8>()) {
        let v = v % g.n();
        let f = g.field();
        let a = unit(f, s);
        let h = g.generalized_lc(v, a).unwrap();
        prop_assert_eq!(&h.generalized_lc(v, f.neg(a)).unwrap(), &g);
        let w = g.weight_shift(v, a).unwrap();
        prop_assert_eq!(&w.weight_shift(v, f.inv(a)).unwrap(), &g);
    }

    #[test]
    fn canonical_form_ignores_labels((g, perm) in graph_strategy(&[2, 3, 4, 5], 7).prop_flat_map(with_perm)) {
        let h = g.permuted(&perm);
        prop_assert_eq!(canonical_form(&h), canonical_form(&g));
        let back = canonical_form(&g).graph(g.m());
        prop_assert_eq!(canonical_form(&back).bytes, canonical_form(&g).bytes);
    }

    #[test]
    fn switching_key_ignores_shifts_and_labels(
        (g, perm) in graph_strategy(&[2, 3, 4, 5], 7).prop_flat_map(with_perm),
        shifts in proptest::collection::vec(any::<u8>(), 7),
    ) {
        let f = g.field();
        let mut h = g.permuted(&perm);
        for v in 0..h.n() {
            h = h.weight_shift(v, unit(f, shifts[v])).unwrap();
        }
        let mut c = Canonizer::new(Equivalence::Switching);
        prop_assert_eq!(c.canonical_string(&h), c.canonical_string(&g));
    }

    #[test]
    fn enumerators_are_consistent(g in graph_strategy(&[2, 3, 4, 5], 6)) {
        let code = graph_code(&g);
        prop_assert!(code.is_self_dual());
        let w = weight_enumerator(&code, DEFAULT_ENUMERATION_CAP, Exec::Sequential).unwrap();
        prop_assert_eq!(&w, &weight_enumerator_naive(&code));
        prop_assert!(w.is_consistent(g.m()));
        prop_assert!(w.is_macwilliams_invariant(g.m()));
        prop_assert_eq!(w.coeffs()[0], 1);
        prop_assert!(w.coeffs()[1..].iter().all(|&a| a % (g.m() as u64 - 1) == 0));
        prop_assert_eq!(w.min_distance(), Some(min_distance(&g, Exec::Sequential)));
        prop_assert_eq!(w.total(), (g.m() as u128).pow(g.n() as u32));
    }

    #[test]
    fn enumerator_is_constant_along_lc_walks(g in graph_strategy(&[2, 3, 4, 5], 6), steps in proptest::collection::vec((0usize..6, any::<u8>(), any::<bool>()), 1..8)) {
        let f = g.field();
        let w0 = weight_enumerator(&graph_code(&g), DEFAULT_ENUMERATION_CAP, Exec::Sequential).unwrap();
        let mut h = g.clone();
        for (v, s, shift) in steps {
            let v = v % h.n();
            if shift {
                h = h.weight_shift(v, unit(f, s)).unwrap();
            } else {
                h = h.generalized_lc(v, unit(f, s)).unwrap();
            }
        }
        prop_assert_eq!(weight_enumerator(&graph_code(&h), DEFAULT_ENUMERATION_CAP, Exec::Sequential).unwrap(), w0);
    }

    #[test]
    fn direct_sum_takes_the_smaller_distance(a in graph_strategy(&[3], 4), b in graph_strategy(&[3], 4)) {
        let (ca, cb) = (graph_code(&a), graph_code(&b));
        let sum = ca.direct_sum(&cb).unwrap();
        let d = code_min_distance(&sum, Exec::Sequential).unwrap();
        prop_assert_eq!(d, min_distance(&a, Exec::Sequential).min(min_distance(&b, Exec::Sequential)));
        prop_assert_eq!(sum.graph().unwrap(), &a.disjoint_union(&b).unwrap());
    }

    #[test]
    fn hermitian_form_is_alternating_and_additive(
        m in proptest::sample::select(&[2u8, 3, 4, 5][..]),
        raw in proptest::collection::vec((any::<u8>(), any::<u8>(), any::<u8>()), 1..6),
    ) {
        let f = Field::standard(m).unwrap();
        let q = f.q() as u8;
        let u: Vec<u8> = raw.iter().map(|t| t.0 % q).collect();
        let v: Vec<u8> = raw.iter().map(|t| t.1 % q).collect();
        let w: Vec<u8> = raw.iter().map(|t| t.2 % q).collect();
        let uv = f.hermitian_form(&u, &v).unwrap();
        prop_assert_eq!(f.hermitian_form(&u, &u).unwrap(), 0);
        prop_assert_eq!(f.add(uv, f.hermitian_form(&v, &u).unwrap()), 0);
        let uw: Vec<u8> = u.iter().zip(&w).map(|(&x, &y)| f.ext_add(x, y)).collect();
        prop_assert_eq!(
            f.hermitian_form(&uw, &v).unwrap(),
            f.add(uv, f.hermitian_form(&w, &v).unwrap())
        );
    }
}

/// A random code equivalent to `graph_code(g)`: per-coordinate symplectic
/// maps, a coordinate permutation and invertible row operations.
fn scramble(g: &WeightedGraph, rng: &mut ChaCha8Rng) -> StabilizerMatrix {
    let f = g.field();
    let n = g.n();
    let s = StabilizerMatrix::from_graph(g);
    let group = sp2_elements(f);
    let perm: Vec<usize> = {
        let mut p: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            p.swap(i, rng.gen_range(0..=i));
        }
        p
    };
    let maps: Vec<[u8; 4]> = (0..n).map(|_| group[rng.gen_range(0..group.len())]).collect();
    let mut a = vec![vec![0u8; n]; n];
    let mut b = vec![vec![0u8; n]; n];
    for i in 0..n {
        for j in 0..n {
            let [p, q, r, t] = maps[j];
            let (x, z) = (s.a()[i][j], s.b()[i][j]);
            a[i][perm[j]] = f.add(f.mul(p, x), f.mul(q, z));
            b[i][perm[j]] = f.add(f.mul(r, x), f.mul(t, z));
        }
    }
    for _ in 0..3 * n {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let c = rng.gen_range(1..f.m());
        if i == j {
            for k in 0..n {
                a[i][k] = f.mul(c, a[i][k]);
                b[i][k] = f.mul(c, b[i][k]);
            }
        } else {
            for k in 0..n {
                a[i][k] = f.add(a[i][k], f.mul(c, a[j][k]));
                b[i][k] = f.add(b[i][k], f.mul(c, b[j][k]));
            }
        }
    }
    StabilizerMatrix::new(g.m(), a, b).expect("equivalent to a graph code")
}

#[test]
fn standard_form_lands_in_the_same_orbit() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for m in [2u8, 3] {
        for n in 1..=5 {
            for _ in 0..40 {
                let pairs = n * (n - 1) / 2;
                let upper: Vec<u8> = (0..pairs).map(|_| rng.gen_range(0..m)).collect();
                let g = WeightedGraph::from_upper(m, n, &upper).unwrap();
                let s = scramble(&g, &mut rng);
                let sf = standard_form(&s).unwrap();
                let engine = OrbitEngine::new(m, n, Equivalence::Isomorphism, Exec::Sequential, DEFAULT_ORBIT_BUDGET).unwrap();
                assert!(engine.contains(&g, &sf.graph).unwrap(), "m={m} g={g:?} s={s:?} -> {:?}", sf.graph);
                assert!(codes_equivalent(&s.to_code(), &graph_code(&g), DEFAULT_ORBIT_BUDGET, Exec::Sequential).unwrap());
            }
        }
    }
}

#[test]
fn binary_lc_complements_the_neighbourhood() {
    for n in 1..=6usize {
        let pairs = n * (n - 1) / 2;
        for bits in 0u32..(1 << pairs) {
            let upper: Vec<u8> = (0..pairs).map(|i| (bits >> i & 1) as u8).collect();
            let g = WeightedGraph::from_upper(2, n, &upper).unwrap();
            for v in 0..n {
                let nb: Vec<usize> = g.neighbors(v).collect();
                let mut h = g.clone();
                for (x, &i) in nb.iter().enumerate() {
                    for &j in &nb[x + 1..] {
                        h.set(i, j, 1 - h.weight(i, j));
                    }
                }
                assert_eq!(g.generalized_lc(v, 1).unwrap(), h);
            }
        }
    }
}

#[test]
fn orbit_membership_is_well_defined() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for m in [2u8, 3, 4, 5] {
        for n in 2..=5 {
            let upper: Vec<u8> = (0..n * (n - 1) / 2).map(|_| rng.gen_range(0..m)).collect();
            let g = WeightedGraph::from_upper(m, n, &upper).unwrap();
            let orbit = lc_orbit(&g, DEFAULT_ORBIT_BUDGET, Exec::Sequential).unwrap();
            let member = &orbit[rng.gen_range(0..orbit.len())];
            assert_eq!(lc_orbit(member, DEFAULT_ORBIT_BUDGET, Exec::Sequential).unwrap(), orbit);
        }
    }
}

#[test]
fn lc_closure_then_shifts_matches_interleaved_closure() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in 2..=5 {
        for _ in 0..10 {
            let upper: Vec<u8> = (0..n * (n - 1) / 2).map(|_| rng.gen_range(0..3)).collect();
            let g = WeightedGraph::from_upper(3, n, &upper).unwrap();
            let iso = OrbitEngine::new(3, n, Equivalence::Isomorphism, Exec::Sequential, DEFAULT_ORBIT_BUDGET).unwrap();
            let sw = OrbitEngine::new(3, n, Equivalence::Switching, Exec::Sequential, DEFAULT_ORBIT_BUDGET).unwrap();
            let mut c = sw.canonizer();
            let projected: BTreeSet<u128> =
                iso.members(&g).unwrap().into_iter().map(|k| sw.key(&mut c, &iso.codec().decode(k))).collect();
            let direct: BTreeSet<u128> = sw.members(&g).unwrap().into_iter().collect();
            assert_eq!(projected, direct);
        }
    }
}

#[test]
fn hermitian_and_symplectic_forms_vanish_together() {
    for m in [2u8, 3, 4, 5] {
        let f = Field::standard(m).unwrap();
        for x in 0..f.q() as u8 {
            for y in 0..f.q() as u8 {
                let (a, b) = f.ext_parts(x);
                let (a2, b2) = f.ext_parts(y);
                let h = f.hermitian_ip(&[x], &[y]).unwrap();
                let s = f.symplectic_ip(&[a, b], &[a2, b2]).unwrap();
                assert_eq!(h == 0, s == 0, "m={m} x={x} y={y}");
            }
        }
    }
}

#[test]
fn shared_seen_set_partitions_disjoint_orbits() {
    let engine = OrbitEngine::new(3, 4, Equivalence::Switching, Exec::Sequential, DEFAULT_ORBIT_BUDGET).unwrap();
    let mut seen = FxHashSet::default();
    let path = WeightedGraph::from_upper(3, 4, &[1, 0, 0, 1, 0, 1]).unwrap();
    let star = WeightedGraph::from_upper(3, 4, &[1, 1, 1, 0, 0, 0]).unwrap();
    let a = engine.explore(&path, &mut seen).unwrap();
    let b = engine.explore(&star, &mut seen).unwrap();
    assert_eq!(seen.len(), a.size + b.size);
}

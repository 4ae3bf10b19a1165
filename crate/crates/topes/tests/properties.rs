//! Property tests over seeded random realizable tope sets.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use topes::arrangement::{arrangement_topes, arrangement_topes_seq, random_non_acyclic_topes};
use topes::committees::{enumerate_committees3, enumerate_committees3_seq};
use topes::convexity::{build_lattice_with, classify, conv, ex, LatticeOptions};
use topes::graph::{build_graph, count_triangles, GraphKind, TriangleMethod};
use topes::sign::{parse_topes, reorient, validate, GroundSubset, ToposSet};

fn random_instance(seed: u64, n: usize) -> ToposSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_non_acyclic_topes(&mut rng, 3, n).2
}

fn subset(bits: u64, n: usize) -> GroundSubset {
    GroundSubset::from_elements((1..=n).filter(|e| bits & (1 << (e - 1)) != 0)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_instances_validate_and_round_trip(seed in any::<u64>(), n in 4usize..=6) {
        let ts = random_instance(seed, n);
        prop_assert!(validate(&ts, true).ok);
        prop_assert_eq!(parse_topes(&ts.to_string()).unwrap(), ts);
    }

    #[test]
    fn reorientation_is_an_involution_preserving_validity(
        seed in any::<u64>(),
        n in 4usize..=6,
        bits in any::<u64>(),
    ) {
        let ts = random_instance(seed, n);
        let a = subset(bits, n);
        let once = reorient(&ts, a).unwrap();
        prop_assert_eq!(once.len(), ts.len());
        prop_assert!(validate(&once, false).ok);
        prop_assert_eq!(reorient(&once, a).unwrap(), ts);
    }

    #[test]
    fn halfspaces_split_evenly(seed in any::<u64>(), n in 4usize..=6) {
        let ts = random_instance(seed, n);
        for e in 1..=n {
            let count = ts.positive_on(GroundSubset::singleton(e)).count_ones(..);
            prop_assert_eq!(count, ts.len() / 2);
        }
    }

    #[test]
    fn hull_is_extensive_monotone_idempotent(
        seed in any::<u64>(),
        n in 4usize..=6,
        bits_a in any::<u64>(),
        bits_b in any::<u64>(),
    ) {
        let ts = random_instance(seed, n);
        let a = subset(bits_a, n);
        let b = subset(bits_b, n).union(a);
        let hull_a = conv(&ts, a).unwrap();
        prop_assert!(a.is_subset_of(hull_a));
        prop_assert!(hull_a.is_subset_of(conv(&ts, b).unwrap()));
        prop_assert_eq!(conv(&ts, hull_a).unwrap(), hull_a);
    }

    #[test]
    fn extreme_points_generate_the_same_hull(
        seed in any::<u64>(),
        n in 4usize..=6,
        bits in any::<u64>(),
    ) {
        let ts = random_instance(seed, n);
        let a = subset(bits, n);
        let c = classify(&ts, a).unwrap();
        if c.acyclic {
            prop_assert_eq!(conv(&ts, ex(&ts, a).unwrap()).unwrap(), c.hull);
        }
        if c.free {
            prop_assert!(c.convex && c.acyclic);
        }
    }

    #[test]
    fn parallel_and_sequential_scans_agree(seed in any::<u64>(), n in 4usize..=6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (arr, flip, ts) = random_non_acyclic_topes(&mut rng, 3, n);
        prop_assert_eq!(arrangement_topes(&arr, flip).unwrap(), arrangement_topes_seq(&arr, flip).unwrap());
        prop_assert_eq!(
            enumerate_committees3(&ts, false),
            enumerate_committees3_seq(&ts, false)
        );
        let par = build_lattice_with(&ts, LatticeOptions::default()).unwrap();
        let seq = build_lattice_with(
            &ts,
            LatticeOptions { parallel: false, ..LatticeOptions::default() },
        )
        .unwrap();
        prop_assert_eq!(par.members(), seq.members());
    }

    #[test]
    fn triangle_methods_agree_on_random_instances(seed in any::<u64>(), n in 4usize..=6) {
        let ts = random_instance(seed, n);
        for kind in [GraphKind::Gamma, GraphKind::G, GraphKind::GammaMax] {
            let g = build_graph(&ts, kind);
            let direct = count_triangles(&g, TriangleMethod::Direct);
            prop_assert_eq!(direct, count_triangles(&g, TriangleMethod::Trace));
            prop_assert_eq!(direct, count_triangles(&g, TriangleMethod::Neighborhood));
        }
    }
}

mod common;

use crushtacean::automorphism::automorphisms;
use crushtacean::crushtacean::{
    detect_reflection_multiplicity, has_universal_region, knot_circles, validate_crushtacean,
    ReflectionMultiplicity,
};
use crushtacean::families::cycle_expand;
use crushtacean::graph::{faces, is_connected, is_k_connected, planar_embed, PaintedGraph};
use crushtacean::io::GraphDocument;
use crushtacean::permgroup::{identify, GroupId};
use crushtacean::Permutation;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn polyhedral(seed: u64, steps: usize) -> PaintedGraph {
    common::random_polyhedral_cubic(&mut ChaCha8Rng::seed_from_u64(seed), steps)
}

fn shuffled(n: usize, seed: u64) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    p
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn automorphism_order_is_relabeling_invariant(seed in any::<u64>(), steps in 0usize..8, perm_seed in any::<u64>()) {
        let g = polyhedral(seed, steps);
        let h = g.relabel(&shuffled(g.vertex_count(), perm_seed)).unwrap();
        prop_assert_eq!(
            automorphisms(&g, false).unwrap().order(),
            automorphisms(&h, false).unwrap().order()
        );
    }

    #[test]
    fn painted_group_is_a_subgroup(seed in any::<u64>(), steps in 0usize..6) {
        let g = common::expand(&polyhedral(seed, steps));
        let aut = automorphisms(&g, false).unwrap();
        let aut_p = automorphisms(&g, true).unwrap();
        prop_assert!(aut_p.is_subgroup_of(&aut));
        prop_assert_eq!(aut.order() % aut_p.order(), 0);
    }

    #[test]
    fn identify_ignores_relabeling(order in 1usize..=60, pick in any::<prop::sample::Index>(), perm_seed in any::<u64>()) {
        let cands = GroupId::candidates(order);
        prop_assume!(!cands.is_empty());
        let id = cands[pick.index(cands.len())];
        let g = id.realize().unwrap();
        let sigma = Permutation::from_images(&shuffled(g.degree(), perm_seed)).unwrap();
        prop_assert_eq!(identify(&g.conjugate(&sigma).unwrap()), id);
    }

    #[test]
    fn json_round_trip(seed in any::<u64>(), steps in 0usize..8) {
        let g = common::expand(&polyhedral(seed, steps));
        let rot = planar_embed(&g).unwrap();
        let doc = GraphDocument::with_rotation(g, rot);
        let text = doc.to_json();
        let back = GraphDocument::from_json(&text).unwrap();
        prop_assert_eq!(back.to_json(), text);
        prop_assert_eq!(back, doc);
    }

    #[test]
    fn euler_and_connectivity_chain(seed in any::<u64>(), steps in 0usize..10) {
        let g = polyhedral(seed, steps);
        let rot = planar_embed(&g).unwrap();
        let f = faces(&g, &rot).unwrap().len();
        prop_assert_eq!(g.vertex_count() + f, g.edge_count() + 2);
        prop_assert!(is_k_connected(&g, 3).unwrap());
        prop_assert!(is_k_connected(&g, 2).unwrap());
        prop_assert!(is_connected(&g));
    }

    #[test]
    fn expansion_invariants(seed in any::<u64>(), steps in 0usize..6) {
        let s = polyhedral(seed, steps);
        let (g, rot) = cycle_expand(&s, &planar_embed(&s).unwrap()).unwrap();
        let e0 = s.edge_count();
        prop_assert_eq!((g.vertex_count(), g.edge_count(), g.painted().len()), (2 * e0, 3 * e0, e0));
        prop_assert!(validate_crushtacean(&g).valid);
        prop_assert!(!has_universal_region(&g, &rot).unwrap());
        prop_assert_eq!(detect_reflection_multiplicity(&g).unwrap(), ReflectionMultiplicity::Unique);
        let ks = knot_circles(&g, &rot).unwrap();
        let arcs: usize = ks.knot_circles.iter().map(|k| k.arcs.len()).sum();
        prop_assert_eq!(arcs, 2 * g.painted().len());
    }
}

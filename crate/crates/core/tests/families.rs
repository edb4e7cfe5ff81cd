use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use coalition_core::enumerate::{enumerate_graphs, FullVertexCount, GraphFilter};
use coalition_core::families::{
    generate_family, recognize_f1, recognize_f2, recognize_h1, recognize_h2, validate_f1, validate_f2, validate_h1,
    validate_h2, FamilyId, FamilySpec,
};
use coalition_core::named::cycle;
use coalition_core::{sc_graph, sp_check, Graph};

const PER_FAMILY: usize = 500;
/// Vertices beyond the three fixed roles, so generated orders stay at most 9.
const EXTRA: usize = 6;

/// Random sizes respecting the family's cardinality constraints.
fn random_spec(family: FamilyId, rng: &mut ChaCha8Rng) -> FamilySpec {
    let seed = rng.gen();
    let sizes: Vec<(&str, usize)> = match family {
        FamilyId::F1 | FamilyId::H1 => {
            let total = rng.gen_range(1..=EXTRA);
            let q = match rng.gen_range(0..=total) {
                1 => 0,
                q => q,
            };
            let (kp, kq) = if family == FamilyId::F1 { ("P", "Q") } else { ("P1", "Q1") };
            vec![(kp, total - q), (kq, q)]
        }
        FamilyId::F2(1) | FamilyId::H2(1) => vec![("R1", rng.gen_range(1..=EXTRA))],
        FamilyId::F2(2) | FamilyId::H2(2) => {
            let l1 = rng.gen_range(1..EXTRA);
            vec![("L1", l1), ("R1", rng.gen_range(1..=EXTRA - l1))]
        }
        FamilyId::F2(_) => {
            let l1 = rng.gen_range(1..=EXTRA - 1);
            let r2 = rng.gen_range(1..=EXTRA - l1);
            let r1 = rng.gen_range(0..=EXTRA - l1 - r2);
            let l2 = rng.gen_range(0..=EXTRA - l1 - r2 - r1);
            let w = rng.gen_range(l2.max(1)..=l2 + l1 + r1 + r2);
            vec![("L1", l1), ("R1", r1), ("R2", r2), ("L2", l2), ("W", w)]
        }
        FamilyId::H2(_) => {
            let w = rng.gen_range(1..=EXTRA);
            let l1 = rng.gen_range(0..=EXTRA - w);
            let r1 = rng.gen_range(0..=EXTRA - w - l1);
            let r2 = rng.gen_range(0..=EXTRA - w - l1 - r1);
            vec![("L1", l1), ("R1", r1), ("R2", r2), ("W", w)]
        }
    };
    FamilySpec::new(family, &sizes, seed)
}

fn generated(family: FamilyId, seed: u64) -> Vec<(FamilySpec, Graph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..PER_FAMILY)
        .map(|_| {
            let spec = random_spec(family, &mut rng);
            let g = generate_family(&spec).unwrap_or_else(|e| panic!("{spec}: {e}"));
            (spec, g)
        })
        .collect()
}

#[test]
fn every_generated_member_is_recognized() {
    for (i, family) in FamilyId::ALL.into_iter().enumerate() {
        for (spec, g) in generated(family, i as u64) {
            assert!(g.order() <= 9, "{spec}");
            assert!(family.recognizes(&g), "{spec} produced an unrecognized graph");
            if let FamilyId::F2(_) = family {
                assert_eq!(g.min_degree(), 2, "{spec}");
                assert!(g.full_vertices().is_empty(), "{spec}");
            }
        }
    }
}

#[test]
fn generation_is_reproducible_from_the_spec_string() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for family in FamilyId::ALL {
        let spec = random_spec(family, &mut rng);
        let again = FamilySpec::parse(&spec.to_string()).unwrap();
        assert_eq!(generate_family(&spec).unwrap(), generate_family(&again).unwrap());
    }
}

#[test]
fn generated_f1_members_have_h1_coalition_graphs() {
    for (spec, g) in generated(FamilyId::F1, 40) {
        assert!(sp_check(&g).is_sp, "{spec}");
        let cg = sc_graph(&g).unwrap();
        assert!(recognize_h1(&cg).is_some(), "{spec}");
    }
}

#[test]
fn generated_f2_members_have_h2_coalition_graphs() {
    for k in 1..=3 {
        for (spec, g) in generated(FamilyId::F2(k), 50 + u64::from(k)) {
            assert!(sp_check(&g).is_sp, "{spec}");
            assert!(recognize_h2(&sc_graph(&g).unwrap()).is_some(), "{spec}");
        }
    }
}

#[test]
fn f1_is_exactly_the_sp_graphs_with_a_leaf_and_no_full_vertex() {
    for n in 1..=7 {
        for g in enumerate_graphs(n, &GraphFilter::delta(1).full(FullVertexCount::Exactly(0))).unwrap() {
            assert_eq!(recognize_f1(&g).is_some(), sp_check(&g).is_sp, "{g:?}");
        }
    }
}

#[test]
fn cycles_in_f2_are_c4_c5_c6() {
    let members: Vec<usize> = (3..=14).filter(|&n| recognize_f2(&cycle(n).unwrap()).is_some()).collect();
    assert_eq!(members, [4, 5, 6]);
}

#[test]
fn witnesses_on_all_small_graphs_are_sound() {
    for n in 1..=7 {
        for g in enumerate_graphs(n, &GraphFilter::all()).unwrap() {
            if let Some(w) = recognize_f1(&g) {
                assert!(validate_f1(&g, &w));
            }
            if let Some(w) = recognize_h1(&g) {
                assert!(validate_h1(&g, &w));
            }
            if let Some(w) = recognize_f2(&g) {
                assert!(validate_f2(&g, &w));
            }
            if let Some(w) = recognize_h2(&g) {
                assert!(validate_h2(&g, &w));
            }
        }
    }
}

use cominuscule::catalog::{catalog_up_to_dim, make_spec, SpaceFamily};
use cominuscule::foliations::rect_family;
use cominuscule::partitions::{hooks_q1, hooks_qm1, min_twist_grass, min_twist_grass_oracle, Partition};
use cominuscule::plethysm::{decompose, decompose_omega, dualize, omega_weights_upto, Method};
use cominuscule::twists::{h0_total, min_twist};
use cominuscule::{Family, LieType, RootSystem, Weight};
use num_bigint::BigUint;
use num_traits::Zero;
use proptest::prelude::*;

fn lie_type() -> impl Strategy<Value = LieType> {
    prop_oneof![
        (1usize..=6).prop_map(|r| LieType::new(Family::A, r).unwrap()),
        (2usize..=5).prop_map(|r| LieType::new(Family::B, r).unwrap()),
        (2usize..=5).prop_map(|r| LieType::new(Family::C, r).unwrap()),
        (4usize..=6).prop_map(|r| LieType::new(Family::D, r).unwrap()),
        Just(LieType::e6()),
        Just(LieType::e7()),
    ]
}

fn system_and_weight(lo: i64, hi: i64) -> impl Strategy<Value = (RootSystem, Weight)> {
    lie_type().prop_flat_map(move |t| {
        let rank = t.rank();
        (Just(RootSystem::new(t)), prop::collection::vec(lo..=hi, rank).prop_map(Weight::new))
    })
}

fn small_space() -> impl Strategy<Value = SpaceFamily> {
    prop::sample::select(catalog_up_to_dim(10))
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(0usize..8, 0..7).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn grass_case() -> impl Strategy<Value = (usize, usize, usize)> {
    (2usize..=12)
        .prop_flat_map(|n| (Just(n), 1..n))
        .prop_flat_map(|(n, k)| (Just(k), Just(n), 1..=k * (n - k)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugate_partition_is_an_involution(mu in partition()) {
        let d = mu.dual();
        prop_assert_eq!(d.size(), mu.size());
        prop_assert_eq!(d.rows(), mu.cols());
        prop_assert_eq!(d.dual(), mu);
    }

    #[test]
    fn hook_families_have_shifted_frobenius_coordinates(p in 0usize..10, n in 1usize..8) {
        for mu in hooks_q1(p, n) {
            prop_assert_eq!(mu.size(), 2 * p);
            prop_assert!(mu.rows() <= n);
            prop_assert!(mu.frobenius().iter().all(|&(a, b)| a == b + 1));
        }
        for mu in hooks_qm1(p, n) {
            prop_assert_eq!(mu.size(), 2 * p);
            prop_assert!(mu.rows() <= n);
            prop_assert!(mu.frobenius().iter().all(|&(a, b)| a + 1 == b));
        }
    }

    #[test]
    fn grassmannian_closed_form_matches_oracle((k, n, p) in grass_case()) {
        let oracle = min_twist_grass_oracle(k, n, p).unwrap();
        prop_assert_eq!(min_twist_grass(k, n, p).unwrap(), oracle.l);
        prop_assert!(!oracle.partitions.is_empty());
        prop_assert!(oracle.partitions.iter().all(|mu| mu.size() == p && mu.fits_in_box(k, n - k)));
    }

    #[test]
    fn reflections_are_involutions((sys, w) in system_and_weight(-5, 5), i in 0usize..8) {
        let i = i % sys.rank();
        let mut v = w.clone();
        sys.reflect(&mut v, i);
        sys.reflect(&mut v, i);
        prop_assert_eq!(v, w);
    }

    #[test]
    fn dominant_conjugate_is_a_class_invariant((sys, w) in system_and_weight(-4, 4), i in 0usize..8) {
        let dom = sys.dominant_conjugate(&w);
        prop_assert!(dom.is_dominant());
        prop_assert_eq!(sys.dominant_conjugate(&dom), dom.clone());
        let mut moved = w.clone();
        sys.reflect(&mut moved, i % sys.rank());
        prop_assert_eq!(sys.dominant_conjugate(&moved), dom);
        prop_assert_eq!(sys.pairing(&moved, &moved).unwrap(), sys.pairing(&w, &w).unwrap());
    }

    #[test]
    fn pairing_is_symmetric((sys, a) in system_and_weight(-4, 4), seed in prop::collection::vec(-4i64..=4, 7)) {
        let b = Weight::new(seed[..sys.rank()].to_vec());
        prop_assert_eq!(sys.pairing(&a, &b).unwrap(), sys.pairing(&b, &a).unwrap());
    }

    #[test]
    fn dual_module_has_the_same_dimension((sys, w) in system_and_weight(0, 3)) {
        let dual = sys.dual_weight(&w);
        prop_assert!(dual.is_dominant());
        prop_assert_eq!(sys.dual_weight(&dual), w.clone());
        prop_assert_eq!(sys.weyl_dim(&dual).unwrap(), sys.weyl_dim(&w).unwrap());
    }

    #[test]
    fn nilradical_is_abelian_and_graded_by_one(fam in small_space()) {
        let spec = make_spec(fam).unwrap();
        let k = spec.marked_node();
        prop_assert_eq!(spec.nilradical().len(), spec.dim());
        prop_assert!(spec.nilradical().iter().all(|r| r.simple[k] == 1));
        let c1 = spec.index_c1();
        let sum = spec.cotangent_weights().iter().fold(Weight::zero(spec.rank()), |acc, w| &acc + w);
        prop_assert_eq!(sum, -c1 * &spec.marked_fundamental());
    }

    #[test]
    fn exterior_powers_have_binomial_rank_and_obey_the_twist_lemma(fam in small_space(), p in 0usize..=10) {
        let spec = make_spec(fam).unwrap();
        let p = p.min(spec.dim());
        let report = decompose_omega(&spec, p, Method::WeightDP).unwrap();
        prop_assert!(report.rank_check.holds());
        prop_assert!(report.summands.iter().all(|s| s.lemma_consistent(&spec)));
    }

    #[test]
    fn complementary_grades_are_dual(fam in small_space(), p in 0usize..=10) {
        let spec = make_spec(fam).unwrap();
        let n = spec.dim();
        let p = p.min(n);
        let grades = omega_weights_upto(&spec, n).unwrap();
        let low = decompose(&grades[p], &spec).unwrap();
        let high = decompose(&grades[n - p], &spec).unwrap();
        let mut via_dual: Vec<Weight> = dualize(&spec, &low, n - p).unwrap().into_iter().map(|s| s.highest_weight).collect();
        let mut direct: Vec<Weight> = high.into_iter().map(|s| s.highest_weight).collect();
        via_dual.sort();
        direct.sort();
        prop_assert_eq!(via_dual, direct);
    }

    #[test]
    fn sections_appear_exactly_from_the_minimal_twist(fam in small_space(), p in 1usize..=10) {
        let spec = make_spec(fam).unwrap();
        let p = p.min(spec.dim());
        let report = decompose_omega(&spec, p, Method::WeightDP).unwrap();
        let l = min_twist(&spec, p, true).unwrap().l;
        prop_assert!(h0_total(&spec, &report, l - 1).unwrap().is_zero());
        let mut prev = BigUint::zero();
        for t in l..l + 3 {
            let h = h0_total(&spec, &report, t).unwrap();
            prop_assert!(h > prev);
            prev = h;
        }
    }

    #[test]
    fn flag_families_have_codimension_de((k, n, p) in grass_case()) {
        prop_assume!(2 * k <= n);
        for r in rect_family(k, n, p).unwrap() {
            prop_assert_eq!(r.degree, r.l - r.p as i64 - 1);
            let (d, e) = r.kind_de().unwrap();
            prop_assert_eq!(d * e, p);
            if r.minimal {
                prop_assert_eq!((d + e) as i64, r.l);
            }
        }
    }
}

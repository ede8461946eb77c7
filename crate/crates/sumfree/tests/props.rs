//! Property-based invariants for the core algebra: index encoding,
//! sumset laws, and invariance of the certified predicates.

use proptest::prelude::*;

use sumfree::certify::{affine_span_dim, is_sum_free};
use sumfree::group::{random_gl, GroupSpec, Vector};
use sumfree::set::{difference_set, sumset, GroupSet};
use sumfree::setfile::SetFile;

fn spec_strategy() -> impl Strategy<Value = GroupSpec> {
    prop_oneof![
        Just(GroupSpec::new(2, 4).unwrap()),
        Just(GroupSpec::new(3, 3).unwrap()),
        Just(GroupSpec::new(5, 2).unwrap()),
        Just(GroupSpec::new(7, 2).unwrap()),
        Just(GroupSpec::new(11, 1).unwrap()),
    ]
}

fn set_strategy() -> impl Strategy<Value = GroupSet> {
    (spec_strategy(), any::<u64>(), 0.0f64..0.5).prop_map(|(spec, seed, density)| {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut s = GroupSet::empty(spec);
        for i in 0..spec.order() {
            if rng.gen_bool(density) {
                s.insert(i);
            }
        }
        s
    })
}

proptest! {
    #[test]
    fn index_coords_round_trip((spec, raw) in spec_strategy().prop_flat_map(|s| (Just(s), 0u64..s.order()))) {
        let v = Vector::from_index(spec, raw);
        prop_assert_eq!(v.index(), raw);
        prop_assert_eq!(spec.index_of(v.coords()), raw);
    }

    #[test]
    fn add_sub_neg_consistent((spec, x, y) in spec_strategy().prop_flat_map(|s| (Just(s), 0u64..s.order(), 0u64..s.order()))) {
        prop_assert_eq!(spec.add_index(x, y), spec.add_index(y, x));
        prop_assert_eq!(spec.sub_index(spec.add_index(x, y), y), x);
        prop_assert_eq!(spec.add_index(x, spec.neg_index(x)), 0);
    }

    #[test]
    fn sumset_commutes_and_translates((a, b) in (set_strategy(), any::<u64>()).prop_flat_map(|(a, seed)| {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let spec = a.spec();
        let mut b = GroupSet::empty(spec);
        for i in 0..spec.order() {
            if rng.gen_bool(0.2) {
                b.insert(i);
            }
        }
        (Just(a), Just(b))
    })) {
        prop_assert_eq!(sumset(&a, &b).unwrap(), sumset(&b, &a).unwrap());
        // A - B = A + (-B)
        prop_assert_eq!(difference_set(&a, &b).unwrap(), sumset(&a, &b.negate()).unwrap());
        // translation acts additively on sumsets
        let t = 1 % a.spec().order();
        let lhs = sumset(&a.translate(t), &b).unwrap();
        let rhs = sumset(&a, &b).unwrap().translate(t);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn negate_and_dilate_are_involutive(a in set_strategy()) {
        prop_assert_eq!(a.negate().negate(), a.clone());
        let p = a.spec().p();
        if p > 2 {
            // dilating by c then c^{-1} is the identity
            let c = p - 1;
            let cinv = a.spec().inv(c);
            prop_assert_eq!(a.dilate(c).unwrap().dilate(cinv).unwrap(), a);
        }
    }

    #[test]
    fn sum_freeness_is_gl_and_negation_invariant((a, seed) in (set_strategy(), any::<u64>())) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let m = random_gl(a.spec(), &mut rng);
        let image = GroupSet::from_indices(a.spec(), a.indices().map(|i| m.apply_index(i)));
        prop_assert_eq!(is_sum_free(&image), is_sum_free(&a));
        prop_assert_eq!(is_sum_free(&a.negate()), is_sum_free(&a));
    }

    #[test]
    fn affine_span_dim_is_translation_invariant((a, t) in set_strategy().prop_flat_map(|a| {
        let order = a.spec().order();
        (Just(a), 0u64..order)
    })) {
        prop_assume!(!a.is_empty());
        let d = affine_span_dim(&a).unwrap();
        prop_assert_eq!(affine_span_dim(&a.translate(t)).unwrap(), d);
        prop_assert!(d <= a.spec().n());
    }

    #[test]
    fn set_file_round_trip(a in set_strategy()) {
        let json = SetFile::from_set(&a).to_json();
        let back = SetFile::from_json(&json).unwrap().to_set().unwrap();
        prop_assert_eq!(back, a);
    }
}

use ordlen::ordinal::{parse_ordinal, Ordinal, Truncation};
use ordlen::poset::{
    check_increasing_map, check_subset_lemma, product_order, random_increasing_map, random_poset,
    sum_order, FinitePoset,
};
use proptest::prelude::*;
use proptest::test_runner::RngSeed;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Ordinals with exponents below 6 and small coefficients.
fn ordinal(max_coef: u64) -> impl Strategy<Value = Ordinal> {
    proptest::collection::vec(0..=max_coef, 6).prop_map(|coefs| {
        Ordinal::from_coefficients(coefs.into_iter().enumerate().map(|(e, c)| (e as u64, c)))
            .unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 256,
        rng_seed: RngSeed::Fixed(0x0d1e_2024),
        failure_persistence: None,
        ..ProptestConfig::default()
    })]
    #[test]
    fn shuffle_is_commutative_and_associative(a in ordinal(20), b in ordinal(20), c in ordinal(20)) {
        prop_assert_eq!(a.shuffle_sum(&b).unwrap(), b.shuffle_sum(&a).unwrap());
        prop_assert_eq!(
            a.shuffle_sum(&b).unwrap().shuffle_sum(&c).unwrap(),
            a.shuffle_sum(&b.shuffle_sum(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn ordinal_sum_is_associative(a in ordinal(20), b in ordinal(20), c in ordinal(20)) {
        prop_assert_eq!(
            a.ord_sum(&b).unwrap().ord_sum(&c).unwrap(),
            a.ord_sum(&b.ord_sum(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn ordinal_sum_below_shuffle_sum(a in ordinal(20), b in ordinal(20)) {
        let plain = a.ord_sum(&b).unwrap();
        let natural = a.shuffle_sum(&b).unwrap();
        prop_assert!(plain <= natural);
        prop_assert!(plain.weaker_than(&natural));
        prop_assert!(a <= plain && b <= plain);
    }

    #[test]
    fn shuffle_matches_oracle(a in ordinal(1), b in ordinal(1)) {
        prop_assert_eq!(a.shuffle_sum(&b).unwrap(), a.shuffle_sum_oracle(&b).unwrap());
    }

    #[test]
    fn shuffle_is_strictly_monotone(a in ordinal(20), b in ordinal(20), c in ordinal(20)) {
        let (ac, bc) = (a.shuffle_sum(&c).unwrap(), b.shuffle_sum(&c).unwrap());
        prop_assert_eq!(a.cmp(&b), ac.cmp(&bc));
    }

    #[test]
    fn statistics(a in ordinal(20), b in ordinal(20)) {
        let s = a.shuffle_sum(&b).unwrap();
        prop_assert_eq!(s.valence(), a.valence() + b.valence());
        prop_assert_eq!(s.degree(), a.degree().max(b.degree()));
        if let (Some(x), Some(y)) = (a.order(), b.order()) {
            prop_assert_eq!(s.order(), Some(x.min(y)));
        }
        prop_assert_eq!(a.is_successor(), a.coefficient(0) > 0);
    }

    #[test]
    fn scalar_and_shift(a in ordinal(20), n in 0u64..5, k in 0u64..4) {
        let mut repeated = Ordinal::ZERO;
        for _ in 0..n {
            repeated = repeated.shuffle_sum(&a).unwrap();
        }
        prop_assert_eq!(a.scalar_mul(n).unwrap(), repeated);
        prop_assert_eq!(a.omega_shift(k).unwrap().degree(), a.degree().map(|d| d + k));
        prop_assert_eq!(a.omega_shift(k).unwrap().valence(), a.valence());
    }

    #[test]
    fn truncations_split(a in ordinal(20), e in 0u64..7) {
        let high = a.truncate(e, Truncation::Gt);
        let low = a.truncate(e, Truncation::Le);
        prop_assert_eq!(high.ord_sum(&low).unwrap(), a.clone());
        prop_assert_eq!(high.shuffle_sum(&low).unwrap(), a.clone());
        let ge = a.truncate(e, Truncation::Ge);
        let lt = a.truncate(e, Truncation::Lt);
        prop_assert_eq!(ge.shuffle_sum(&lt).unwrap(), a);
    }

    #[test]
    fn weaker_than_is_a_lattice_order(a in ordinal(20), b in ordinal(20)) {
        let j = a.join(&b);
        prop_assert!(a.weaker_than(&j) && b.weaker_than(&j));
        prop_assert!(a.weaker_than(&a));
        if a.weaker_than(&b) {
            prop_assert!(a <= b);
            prop_assert_eq!(j, b.clone());
        }
        if a.weaker_than(&b) && b.weaker_than(&a) {
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn text_and_json_round_trip(a in ordinal(1000)) {
        prop_assert_eq!(parse_ordinal(&a.to_string()).unwrap(), a.clone());
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<Ordinal>(&json).unwrap(), a);
    }

    #[test]
    fn product_formula(seed in any::<u64>(), np in 1usize..=8, nq in 1usize..=8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_poset(np, 0.4, &mut rng).unwrap();
        let q = random_poset(nq, 0.4, &mut rng).unwrap();
        let prod = product_order(&p, &q).unwrap();
        prop_assert_eq!(prod.length(), p.length().shuffle_sum(&q.length()).unwrap());
    }

    /// For finite posets the top of `P` itself adds one step below `Q`.
    #[test]
    fn sum_formula_with_top_step(seed in any::<u64>(), np in 1usize..=8, nq in 1usize..=8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_poset(np, 0.4, &mut rng).unwrap();
        let q = random_poset(nq, 0.4, &mut rng).unwrap();
        let expected = p.length().ord_sum(&Ordinal::finite(1)).unwrap().ord_sum(&q.length()).unwrap();
        prop_assert_eq!(sum_order(&p, &q).unwrap().length(), expected);
    }

    #[test]
    fn subset_lemma_on_sums(seed in any::<u64>(), np in 1usize..=6, nq in 1usize..=6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_poset(np, 0.4, &mut rng).unwrap();
        let q = random_poset(nq, 0.4, &mut rng).unwrap();
        let s = sum_order(&p, &q).unwrap();
        let a: Vec<usize> = (0..np).collect();
        let b: Vec<usize> = (np..np + nq).collect();
        prop_assert!(check_subset_lemma(&s, &a, &b).unwrap());
    }

    #[test]
    fn increasing_maps(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let body = random_poset(4, 0.3, &mut rng).unwrap();
        let rel = body.relations().iter().copied().chain((0..4).map(|v| (4, v)));
        let p = FinitePoset::new(5, rel).unwrap();
        let q = random_poset(10, 0.6, &mut rng).unwrap();
        if let Some(f) = random_increasing_map(&p, &q, &mut rng) {
            prop_assert!(check_increasing_map(&p, &q, &f).unwrap());
        }
    }
}

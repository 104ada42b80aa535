mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use pseudo_acyclic::*;

fn type_a(max_n: usize) -> impl Strategy<Value = QuiverMatrix> {
    (1..=max_n, any::<u64>()).prop_map(|(n, t)| common::random_type_a(&mut ChaCha8Rng::seed_from_u64(t), n))
}

fn type_a_with_walk(max_n: usize, max_len: usize) -> impl Strategy<Value = (QuiverMatrix, MutationSequence)> {
    (1..=max_n, any::<u64>(), 0..=max_len).prop_map(|(n, t, len)| {
        let mut rng = ChaCha8Rng::seed_from_u64(t);
        let b = common::random_type_a(&mut rng, n);
        (b, common::random_walk(&mut rng, n, len))
    })
}

fn unit_skew(n: usize) -> impl Strategy<Value = QuiverMatrix> {
    prop::collection::vec(-1i64..=1, n * (n - 1) / 2).prop_map(move |vals| {
        let mut m = IntMatrix::zeros(n, n);
        let mut it = vals.into_iter();
        for i in 0..n {
            for j in i + 1..n {
                let v = it.next().unwrap();
                m.set(i, j, v);
                m.set(j, i, -v);
            }
        }
        QuiverMatrix::new(m).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn constructed_ordering_is_valid_and_deterministic(b in type_a(7)) {
        let o = build_pseudo_acyclic_ordering(&b).unwrap();
        prop_assert!(ordering_valid(&b, &o).valid);
        prop_assert_eq!(build_pseudo_acyclic_ordering(&b).unwrap(), o);
    }

    #[test]
    fn valid_orderings_exist(b in type_a(6)) {
        prop_assert!(!enumerate_valid_orderings(&b, 7).unwrap().is_empty());
    }

    #[test]
    fn type_a_members_are_accepted(b in type_a(8)) {
        prop_assert!(validate_type_an(&b).accepted);
    }

    #[test]
    fn validator_matches_oracle_at_six(b in unit_skew(6).prop_filter("connected", QuiverMatrix::is_connected)) {
        prop_assert_eq!(validate_type_an(&b).accepted, an_membership_oracle(&b, 6).unwrap());
    }

    #[test]
    fn reflections_stay_consistent((b, w) in type_a_with_walk(6, 30)) {
        let (_, r) = apply_sequence_with_reflections(&Seed::initial(b.clone()), &ReflectionState::initial(b.n()), &w).unwrap();
        prop_assert!(r.check_consistency().is_ok());
        for x in r.reflections() {
            prop_assert!(word_mul(x, x).is_identity());
        }
        let (_, again) = apply_sequence_with_reflections(&Seed::initial(b.clone()), &ReflectionState::initial(b.n()), &w).unwrap();
        prop_assert_eq!(again, r);
    }

    #[test]
    fn walk_images_match_words((b, w) in type_a_with_walk(5, 12), chain_seed in any::<u64>()) {
        let mut chain: Vec<usize> = (1..=b.n()).collect();
        rand::seq::SliceRandom::shuffle(&mut chain[..], &mut ChaCha8Rng::seed_from_u64(chain_seed));
        let rep = GimRep::from_quiver(&b, &LinearOrdering::from_chain(chain).unwrap()).unwrap();
        let st = WalkState::initial(&b, &rep).run(&w).unwrap();
        prop_assert_eq!(&st.pi, &rep.reflections(&st.reflections).unwrap());
        let l = rep.l_matrix(&st.reflections).unwrap();
        prop_assert_eq!(&st.l, l.matrix());
    }

    #[test]
    fn generators_are_involutions(b in type_a(6), chain_seed in any::<u64>()) {
        let mut chain: Vec<usize> = (1..=b.n()).collect();
        rand::seq::SliceRandom::shuffle(&mut chain[..], &mut ChaCha8Rng::seed_from_u64(chain_seed));
        let rep = GimRep::from_quiver(&b, &LinearOrdering::from_chain(chain).unwrap()).unwrap();
        for g in rep.generators() {
            prop_assert!(g.mul(g).unwrap().is_identity());
        }
    }

    #[test]
    fn acyclic_pair_relations_hold_for_any_ordering(n in 1usize..=6, mask in any::<u64>(), chain_seed in any::<u64>()) {
        let b = QuiverMatrix::path_with_orientation(n, mask);
        let mut chain: Vec<usize> = (1..=n).collect();
        rand::seq::SliceRandom::shuffle(&mut chain[..], &mut ChaCha8Rng::seed_from_u64(chain_seed));
        let rep = GimRep::from_quiver(&b, &LinearOrdering::from_chain(chain).unwrap()).unwrap();
        prop_assert!(relation_failures(&b, rep.generators()).unwrap().is_empty());
    }

    #[test]
    fn swap_acts_as_transposition((b, p) in type_a_with_walk(5, 6), pick in any::<usize>()) {
        let n = b.n();
        let at = Seed::initial(b.clone()).apply(&p).unwrap();
        let pairs: Vec<(usize, usize)> = (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .filter(|&(i, j)| at.b.b(i, j).abs() == 1)
            .collect();
        prop_assume!(!pairs.is_empty());
        let (i, j) = pairs[pick % pairs.len()];
        let o = build_pseudo_acyclic_ordering(&b).unwrap();
        let r = check_swap_effect(&b, &o, &p, i, j).unwrap();
        prop_assert!(r.passed(), "{:?}", r);
    }

    #[test]
    fn text_round_trips((b, w) in type_a_with_walk(6, 10)) {
        prop_assert_eq!(QuiverMatrix::parse(&b.to_text()).unwrap(), b.clone());
        prop_assert_eq!(w.to_string().parse::<MutationSequence>().unwrap(), w.clone());
        let s = Seed::initial(b.clone()).apply(&w).unwrap();
        prop_assert_eq!(IntMatrix::parse_text(&s.c.to_text()).unwrap(), s.c.clone());
        let o = build_pseudo_acyclic_ordering(&b).unwrap();
        prop_assert_eq!(o.to_string().parse::<LinearOrdering>().unwrap(), o);
        let (_, r) = apply_sequence_with_reflections(&Seed::initial(b.clone()), &ReflectionState::initial(b.n()), &w).unwrap();
        for x in r.reflections() {
            prop_assert_eq!(&x.to_string().parse::<GroupWord>().unwrap(), x);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn parallel_search_matches_serial(b in type_a(4), chain_seed in any::<u64>()) {
        let mut chain: Vec<usize> = (1..=b.n()).collect();
        rand::seq::SliceRandom::shuffle(&mut chain[..], &mut ChaCha8Rng::seed_from_u64(chain_seed));
        let o = LinearOrdering::from_chain(chain).unwrap();
        let serial = bfs_verify(&b, &o, BfsOptions::default()).unwrap();
        let parallel = bfs_verify(&b, &o, BfsOptions { parallel: true, ..BfsOptions::default() }).unwrap();
        prop_assert_eq!(serial, parallel);
    }

    #[test]
    fn some_invalid_ordering_fails(b in type_a(4).prop_filter("has a triangle", |b| !find_triangles(b).is_empty())) {
        let bad = LinearOrdering::all(b.n()).find(|o| !ordering_valid(&b, o).valid).unwrap();
        prop_assert!(!bfs_verify(&b, &bad, BfsOptions::default()).unwrap().passed());
    }
}

#[test]
fn triangle_orders_partition() {
    let t = QuiverMatrix::oriented_triangle();
    let rev = QuiverMatrix::from_arrows(3, &[(2, 1), (3, 2), (1, 3)]).unwrap();
    let plus = TriangleConstraint::new(&t, 2, 3, 1).unwrap();
    let minus = TriangleConstraint::new(&rev, 2, 3, 1).unwrap();
    assert_eq!((plus.epsilon, minus.epsilon), (1, -1));
    let mut all: Vec<[usize; 3]> = plus.allowed_orders().into_iter().chain(minus.allowed_orders()).collect();
    all.sort();
    all.dedup();
    assert_eq!(all.len(), 6);
}

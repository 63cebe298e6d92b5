use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use signed_hom::combinatorics::{enumerate_bicompositions, enumerate_partitions, Bicomposition, NumericTableau, Partition};
use signed_hom::exact_linalg::{rank_bareiss, rank_rational, IntMatrix};
use signed_hom::hom_builder::HomContext;
use signed_hom::signed_module::SignedModule;
use signed_hom::specht::SpechtBasis;
use signed_hom::symgroup::{Permutation, YoungSubgroupSpec};

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    any::<u64>().prop_map(move |s| Permutation::random(n, &mut ChaCha8Rng::seed_from_u64(s)))
}

fn instance(max_n: usize) -> impl Strategy<Value = (Partition, Bicomposition)> {
    (1..=max_n).prop_flat_map(|n| {
        let parts = enumerate_partitions(n);
        let kinds = enumerate_bicompositions(n);
        (0..parts.len(), 0..kinds.len()).prop_map(move |(i, j)| (parts[i].clone(), kinds[j].clone()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn group_laws(n in 1usize..9, seeds in any::<(u64, u64)>()) {
        let mut r = ChaCha8Rng::seed_from_u64(seeds.0);
        let a = Permutation::random(n, &mut r);
        let b = Permutation::random(n, &mut ChaCha8Rng::seed_from_u64(seeds.1));
        prop_assert!((&a * &a.inverse()).is_identity());
        prop_assert_eq!((&a * &b).sign(), a.sign() * b.sign());
        let shown = a.to_string();
        prop_assert_eq!(Permutation::parse(&shown, n).unwrap(), a);
    }

    #[test]
    fn coset_decomposition_reconstructs((_, kind) in instance(7), seed in any::<u64>()) {
        let spec = YoungSubgroupSpec::new(&kind);
        let x = Permutation::random(kind.n(), &mut ChaCha8Rng::seed_from_u64(seed));
        let dec = spec.coset_decompose(&x);
        prop_assert_eq!(&dec.rep * &spec.embed(&dec.xi_alpha, &dec.xi_beta), x.clone());
        prop_assert_eq!(spec.minimal_rep(&dec.rep), dec.rep.clone());
        prop_assert_eq!(spec.beta_sign(&spec.embed(&dec.xi_alpha, &dec.xi_beta)), dec.xi_beta.sign());
    }

    #[test]
    fn conjugate_is_involution((shape, kind) in instance(8)) {
        prop_assert_eq!(shape.conjugate().conjugate(), shape);
        prop_assert_eq!(kind.swapped().swapped(), kind);
    }

    #[test]
    fn specht_action_is_a_homomorphism(n in 2usize..6, idx in any::<prop::sample::Index>(), s in any::<(u64, u64)>()) {
        let parts = enumerate_partitions(n);
        let shape = idx.get(&parts);
        let basis = SpechtBasis::new(shape);
        let a = Permutation::random(n, &mut ChaCha8Rng::seed_from_u64(s.0));
        let b = Permutation::random(n, &mut ChaCha8Rng::seed_from_u64(s.1));
        prop_assert_eq!(basis.action_matrix(&a).mul(&basis.action_matrix(&b)), basis.action_matrix(&(&a * &b)));
    }

    #[test]
    fn theta_commutes_with_random_elements((shape, kind) in instance(5), seed in any::<u64>()) {
        let ctx = HomContext::new(&shape, &kind).unwrap();
        let sigma = Permutation::random(shape.n(), &mut ChaCha8Rng::seed_from_u64(seed));
        let a = ctx.basis().action_matrix(&sigma);
        let b = SignedModule::new(&kind).matrix_of(&sigma).to_matrix();
        for d in ctx.gamma_sstd() {
            let ht = ctx.theta_matrix(&d).unwrap().entries.transpose();
            prop_assert_eq!(b.mul(&ht), ht.mul(&a));
        }
    }

    #[test]
    fn sign_rule((shape, kind) in instance(6), seed in any::<u64>()) {
        let ctx = HomContext::new(&shape, &kind).unwrap();
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let reps: Vec<_> = ctx.gamma().iter().filter(|d| ctx.in_r(d)).cloned().collect();
        prop_assume!(!reps.is_empty());
        let rep = &reps[seed as usize % reps.len()];
        let spec = ctx.frame().spec();
        let d = Permutation::random(shape.n(), &mut r);
        let (tau, sigma, xi, eta) =
            (ctx.row_group().random(&mut r), ctx.column_group().random(&mut r), spec.random(&mut r), spec.random(&mut r));
        let lhs = ctx.a_coeff_orbit(&(&(&sigma * &d) * &eta), &(&(&tau * rep) * &xi)).unwrap();
        let f = sigma.sign() * spec.beta_sign(&xi) * spec.beta_sign(&eta);
        prop_assert_eq!(lhs, BigInt::from(f) * ctx.a_coeff_orbit(&d, rep).unwrap());
    }

    #[test]
    fn preorder_is_transitive((shape, kind) in instance(6), a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let ctx = HomContext::new(&shape, &kind).unwrap();
        let n = shape.n();
        let [x, y, z] = [a, b, c].map(|s| Permutation::random(n, &mut ChaCha8Rng::seed_from_u64(s)));
        if ctx.preorder(&x, &y).forward && ctx.preorder(&y, &z).forward {
            prop_assert!(ctx.preorder(&x, &z).forward);
        }
        prop_assert!(ctx.preorder(&x, &x).equivalent());
    }

    #[test]
    fn straightening_is_equivariant(n in 2usize..7, idx in any::<prop::sample::Index>(), p in perm(6)) {
        let parts = enumerate_partitions(n);
        let shape = idx.get(&parts);
        let basis = SpechtBasis::new(shape);
        let full: Vec<usize> = p.images().iter().copied().filter(|&v| v < n).collect();
        let sigma = Permutation::from_images(full).unwrap();
        let t = sigma.act_on(&NumericTableau::initial(shape));
        let v = basis.straighten(&t);
        prop_assert_eq!(basis.expand(&v), signed_hom::specht::polytabloid_expansion(&t));
    }

    #[test]
    fn bareiss_matches_rational(rows in 1usize..6, cols in 1usize..6, entries in prop::collection::vec(-4i64..5, 36)) {
        let m: Vec<Vec<i64>> = (0..rows).map(|i| entries[i * cols..(i + 1) * cols].to_vec()).collect();
        let m = IntMatrix::from_i64(&m);
        prop_assert_eq!(rank_bareiss(&m), rank_rational(&m));
    }
}

use proptest::prelude::*;
use rand::Rng;
use slicerank_core::fixtures::{
    build_fn, build_lemma22_config, random_element, random_family, random_form, random_invertible,
    random_sliced_cubic, random_subspace, rng_from_seed, RandomFamilyParams,
};
use slicerank_core::ideal::{
    essential_variable_count, ideal_decomposition, ideal_membership, intersect_family_graded, linear_ideal_graded,
    multiply_by_linear, GradedSubspace,
};
use slicerank_core::slicerank::{
    bound_profile, irredundant_sum_check, l_space, pairwise_disjoint_triple, slice_rank, SearchBudget,
};
use num_rational::Rational64;
use slicerank_core::{Field, Fp, Monomial, Polynomial, Subspace};

fn x1x2x3(field: &Fp) -> Polynomial<Fp> {
    Polynomial::from_terms(field, 3, 3, [(Monomial::from_vars(3, &[0, 1, 2]), field.one())]).unwrap()
}

fn fixtures(field: &Fp) -> Vec<Polynomial<Fp>> {
    vec![x1x2x3(field), build_fn(field, 2).unwrap(), build_fn(field, 3).unwrap()]
}

#[test]
fn linear_ideal_dimension_closed_form() {
    let field = Fp::gf3();
    let mut rng = rng_from_seed(11);
    for n in 1..=8 {
        for p in 0..=n {
            let sub = loop {
                let s = random_subspace(&field, &mut rng, n, p);
                if s.dim() == p {
                    break s;
                }
            };
            let expected = p * n - p * p.saturating_sub(1) / 2;
            assert_eq!(linear_ideal_graded(&sub, 2).unwrap().dim(), expected, "n={n} p={p}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn linear_multiples_stay_in_the_ideal(seed in any::<u64>()) {
        let field = Fp::new(5).unwrap();
        let mut rng = rng_from_seed(seed);
        let n = rng.random_range(2..=7);
        let params = RandomFamilyParams {
            s: rng.random_range(1..=4),
            r: rng.random_range(1..=n.min(4)),
            n,
            force_trivial_intersection: false,
        };
        let fam = random_family(&field, seed, params).unwrap();
        let i1 = intersect_family_graded(&fam, 1).unwrap();
        let i2 = intersect_family_graded(&fam, 2).unwrap();
        prop_assert!(i2.contains(&multiply_by_linear(&i1).unwrap()));
        prop_assert_eq!(i1.space(), &fam.common_intersection());
    }

    #[test]
    fn membership_matches_graded_piece(seed in any::<u64>()) {
        let field = Fp::gf3();
        let mut rng = rng_from_seed(seed);
        let n = rng.random_range(1..=5);
        let d = rng.random_range(1..=3);
        let k = rng.random_range(0..=n);
        let p = random_subspace(&field, &mut rng, n, k);
        let graded = linear_ideal_graded(&p, d).unwrap();
        let f = if rng.random_bool(0.5) { random_element(&graded, &mut rng) } else { random_form(&field, &mut rng, n, d) };
        let member = ideal_membership(&f, &p).unwrap();
        prop_assert_eq!(member, graded.contains_polynomial(&f));
        let decomposition = ideal_decomposition(&f, &p).unwrap();
        prop_assert_eq!(decomposition.is_some(), member);
        if let Some(terms) = decomposition {
            let mut sum = Polynomial::zero(&field, n, d);
            for (ell, q) in terms {
                prop_assert!(p.contains_vector(&ell));
                sum = sum.add(&Polynomial::linear(&field, &ell).mul(&q).unwrap()).unwrap();
            }
            prop_assert_eq!(sum, f);
        }
    }
}

#[test]
fn rank_is_invariant_under_coordinate_changes() {
    let budget = SearchBudget::default();
    for p in [2, 3] {
        let field = Fp::new(p).unwrap();
        let mut rng = rng_from_seed(u64::from(p));
        for f in fixtures(&field) {
            let base = slice_rank(&f, &budget).unwrap().rank;
            for _ in 0..3 {
                let a = random_invertible(&field, &mut rng, f.num_vars());
                let moved = f.substitute(f.num_vars(), &a).unwrap();
                assert_eq!(slice_rank(&moved, &budget).unwrap().rank, base);
            }
        }
    }
}

/// With `x_i ↦ Σ_j a_ij x_j`, a linear form with coefficient row `c` becomes
/// `c·A`, so `L_{f∘A} = L_f · A`.
#[test]
fn l_space_is_equivariant() {
    let budget = SearchBudget::default();
    for p in [2, 3] {
        let field = Fp::new(p).unwrap();
        let mut rng = rng_from_seed(100 + u64::from(p));
        for f in fixtures(&field) {
            let n = f.num_vars();
            let base = l_space(&f, &budget).unwrap();
            let a = random_invertible(&field, &mut rng, n);
            let moved = l_space(&f.substitute(n, &a).unwrap(), &budget).unwrap();
            assert_eq!(moved.l_space, base.l_space.map_right(&a, n).unwrap());
            let mut image: Vec<Subspace<Fp>> =
                base.minimal_spaces.iter().map(|s| s.map_right(&a, n).unwrap()).collect();
            image.sort();
            assert_eq!(moved.minimal_spaces, image);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Every reported minimal space slices `f`, the rank is minimal, and the
    /// bounds attached to the rank hold.
    #[test]
    fn search_reports_are_consistent(seed in any::<u64>()) {
        let field = Fp::gf2();
        let mut rng = rng_from_seed(seed);
        let n = rng.random_range(3..=6);
        let count = rng.random_range(1..=2);
        let f = random_sliced_cubic(&field, &mut rng, n, count);
        let report = l_space(&f, &SearchBudget::default()).unwrap();
        prop_assert!(report.rank <= count);
        prop_assert!(!report.minimal_spaces.is_empty());
        for p in &report.minimal_spaces {
            prop_assert_eq!(p.dim(), report.rank);
            prop_assert!(ideal_membership(&f, p).unwrap());
        }
        prop_assert!(report.satisfies_bound());
        prop_assert_eq!(slice_rank(&f, &SearchBudget::default()).unwrap().rank, report.rank);
        if let Some(check) = irredundant_sum_check(&report) {
            prop_assert!(check.holds, "dim W = {} > {}", check.w_dim, check.bound);
        }
    }
}

/// `f` drawn from `(P1) ∩ (P2) ∩ (P3)` for the pairwise-disjoint normal form
/// with `r = 3`; whenever `𝒫_f` has three pairwise disjoint members the
/// essential variable count is at most `r(r+3)/2`.
#[test]
fn three_disjoint_minimal_spaces_bound_variables() {
    let field = Fp::gf2();
    let mut triggered = 0;
    for seed in 0..24u64 {
        let mut rng = rng_from_seed(seed);
        let k = rng.random_range(2..=3);
        let fam = build_lemma22_config(&field, 3, k).unwrap();
        let i3 = intersect_family_graded(&fam, 3).unwrap();
        let f = random_element(&i3, &mut rng);
        if f.is_zero() {
            continue;
        }
        let report = l_space(&f, &SearchBudget::default()).unwrap();
        if report.rank != 3 || pairwise_disjoint_triple(&report.minimal_spaces).is_none() {
            continue;
        }
        triggered += 1;
        let bound = bound_profile(report.rank).estimate_r33;
        let count = essential_variable_count(&f, 10_000_000).unwrap().count;
        assert!(Rational64::from_integer(count as i64) <= bound, "seed {seed}: {count} > {bound}");
    }
    assert!(triggered > 0, "no draw had three pairwise disjoint minimal spaces");
}

/// Below rank 3 the same bound fails: `x1 x2 x3` and `x1 y1 z1 + x2 y2 z2`
/// have three pairwise disjoint minimal spaces and depend on `3r` variables.
#[test]
fn variable_bound_needs_rank_three() {
    let field = Fp::gf2();
    let diagonal = Polynomial::from_terms(
        &field,
        6,
        3,
        [
            (Monomial::from_vars(6, &[0, 2, 4]), 1),
            (Monomial::from_vars(6, &[1, 3, 5]), 1),
        ],
    )
    .unwrap();
    for (f, r) in [(x1x2x3(&field), 1), (diagonal, 2)] {
        let report = l_space(&f, &SearchBudget::default()).unwrap();
        assert_eq!(report.rank, r);
        assert!(pairwise_disjoint_triple(&report.minimal_spaces).is_some());
        let count = essential_variable_count(&f, 1_000_000).unwrap().count;
        assert_eq!(count, 3 * r);
        assert!(Rational64::from_integer(count as i64) > bound_profile(r).estimate_r33);
    }
}

/// If `I_2 ⊆ (P)` for a minimal `P`, then `P ⊆ W`.
#[test]
fn quadratic_part_inside_a_minimal_space_forces_containment() {
    let field = Fp::gf2();
    let mut checked = 0;
    for seed in 0..200u64 {
        let mut rng = rng_from_seed(seed);
        let n = rng.random_range(3..=6);
        let params = RandomFamilyParams {
            s: rng.random_range(2..=3),
            r: rng.random_range(1..=2),
            n,
            force_trivial_intersection: true,
        };
        let Ok(fam) = random_family(&field, seed, params) else { continue };
        let f = random_element(&intersect_family_graded(&fam, 3).unwrap(), &mut rng);
        if f.is_zero() {
            continue;
        }
        let i2 = intersect_family_graded(&fam, 2).unwrap();
        let w = fam.sum_space();
        let report = l_space(&f, &SearchBudget::default()).unwrap();
        for p in &report.minimal_spaces {
            let p2: GradedSubspace<Fp> = linear_ideal_graded(p, 2).unwrap();
            if p2.contains(&i2) {
                checked += 1;
                assert!(w.contains(p), "seed {seed}");
            }
        }
    }
    assert!(checked > 0);
}

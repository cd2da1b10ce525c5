use proptest::prelude::*;
use rand::Rng;
use slicerank_core::fixtures::{random_form, random_invertible, random_matrix, random_subspace, rng_from_seed};
use slicerank_core::ideal::ideal_membership;
use slicerank_core::linalg::{complement_through, enumerate_subspaces, gaussian_binomial};
use slicerank_core::{Field, Fp, Polynomial, Rationals, Subspace};

/// Another generating set of `s`: an invertible recombination of its basis
/// plus two redundant random combinations.
fn regenerate<K: Field, R: Rng>(s: &Subspace<K>, rng: &mut R) -> Vec<Vec<K::Elem>> {
    let field = s.field();
    let mix = random_invertible(field, rng, s.dim().max(1));
    let mut rows: Vec<Vec<K::Elem>> = mix
        .iter()
        .take(s.dim())
        .map(|c| combine(field, c, s.basis(), s.ambient_dim()))
        .collect();
    let extra = random_matrix(field, rng, 2, s.dim());
    rows.extend(extra.iter().map(|c| combine(field, c, s.basis(), s.ambient_dim())));
    rows
}

fn combine<K: Field>(field: &K, coeffs: &[K::Elem], basis: &[Vec<K::Elem>], n: usize) -> Vec<K::Elem> {
    let mut v = vec![field.zero(); n];
    for (c, b) in coeffs.iter().zip(basis) {
        for (x, y) in v.iter_mut().zip(b) {
            *x = field.add(x, &field.mul(c, y));
        }
    }
    v
}

fn canonicity<K: Field>(field: &K, seed: u64) {
    let mut rng = rng_from_seed(seed);
    let n = rng.random_range(1..=7);
    let k = rng.random_range(0..=n);
    let s = random_subspace(field, &mut rng, n, k);
    let again = Subspace::from_rows(field, n, regenerate(&s, &mut rng)).unwrap();
    assert_eq!(again.basis(), s.basis());
    assert_eq!(again.pivots(), s.pivots());
}

fn dimension_formula<K: Field>(field: &K, seed: u64) {
    let mut rng = rng_from_seed(seed);
    let n = rng.random_range(1..=7);
    let (da, db) = (rng.random_range(0..=n), rng.random_range(0..=n));
    let a = random_subspace(field, &mut rng, n, da);
    let b = random_subspace(field, &mut rng, n, db);
    let sum = a.sum(&b).unwrap();
    let meet = a.intersect(&b).unwrap();
    assert_eq!(sum.dim() + meet.dim(), a.dim() + b.dim());
    assert!(sum.contains(&a) && sum.contains(&b));
    assert!(a.contains(&meet) && b.contains(&meet));
}

/// `Q`, then `A ⊆ Q` and `T ⊆ Q` with `A ∩ T = 0`, built from one random basis
/// of `Q` so the preconditions hold by construction.
fn complement_postcondition<K: Field>(field: &K, seed: u64) {
    let mut rng = rng_from_seed(seed);
    let n = rng.random_range(1..=7);
    let dq = rng.random_range(0..=n);
    let q = random_subspace(field, &mut rng, n, dq);
    let d = q.dim();
    let basis: Vec<Vec<K::Elem>> = random_invertible(field, &mut rng, d.max(1))
        .iter()
        .take(d)
        .map(|c| combine(field, c, q.basis(), n))
        .collect();
    let a_dim = rng.random_range(0..=d);
    let a = Subspace::from_rows(field, n, basis[..a_dim].to_vec()).unwrap();
    let t_dim = rng.random_range(0..=d - a_dim);
    let t_rows = basis[a_dim..a_dim + t_dim]
        .iter()
        .map(|v| {
            let shift = combine(field, &random_matrix(field, &mut rng, 1, a_dim)[0], a.basis(), n);
            v.iter().zip(&shift).map(|(x, y)| field.add(x, y)).collect()
        })
        .collect();
    let t = Subspace::from_rows(field, n, t_rows).unwrap();

    let c = complement_through(&q, &a, &t).unwrap();
    assert!(c.contains(&t));
    assert!(q.contains(&c));
    assert!(a.intersect(&c).unwrap().is_zero());
    assert_eq!(a.sum(&c).unwrap(), q);
    assert_eq!(a.dim() + c.dim(), q.dim());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn canonical_bases_gf2(seed in any::<u64>()) { canonicity(&Fp::gf2(), seed); }

    #[test]
    fn canonical_bases_gf5(seed in any::<u64>()) { canonicity(&Fp::new(5).unwrap(), seed); }

    #[test]
    fn canonical_bases_rationals(seed in any::<u64>()) { canonicity(&Rationals, seed); }

    #[test]
    fn dimension_formula_gf3(seed in any::<u64>()) { dimension_formula(&Fp::gf3(), seed); }

    #[test]
    fn dimension_formula_rationals(seed in any::<u64>()) { dimension_formula(&Rationals, seed); }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn complement_through_gf2(seed in any::<u64>()) { complement_postcondition(&Fp::gf2(), seed); }

    #[test]
    fn complement_through_gf5(seed in any::<u64>()) { complement_postcondition(&Fp::new(5).unwrap(), seed); }

    #[test]
    fn complement_through_rationals(seed in any::<u64>()) { complement_postcondition(&Rationals, seed); }
}

#[test]
fn enumeration_matches_gaussian_binomials() {
    for (p, field) in [(2u64, Fp::gf2()), (3, Fp::gf3())] {
        for n in 0..=6 {
            for k in 0..=n {
                let all: Vec<_> = enumerate_subspaces(&field, n, k, u64::MAX).unwrap().collect();
                // independent count: number of full-rank k×n matrices / |GL_k|
                let mut ordered: u128 = 1;
                let mut gl: u128 = 1;
                for i in 0..k as u32 {
                    ordered *= u128::from(p).pow(n as u32) - u128::from(p).pow(i);
                    gl *= u128::from(p).pow(k as u32) - u128::from(p).pow(i);
                }
                assert_eq!(all.len() as u128, ordered / gl, "q={p} n={n} k={k}");
                assert_eq!(gaussian_binomial(n, k, p), ordered / gl);
                let mut sorted = all.clone();
                sorted.sort();
                sorted.dedup();
                assert_eq!(sorted.len(), all.len(), "duplicates at q={p} n={n} k={k}");
                assert!(all.iter().all(|s| s.dim() == k));
            }
        }
    }
}

fn matmul(field: &Fp, a: &[Vec<u32>], b: &[Vec<u32>]) -> Vec<Vec<u32>> {
    a.iter().map(|row| combine(field, row, b, b[0].len())).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn substitution_is_functorial(seed in any::<u64>()) {
        let field = Fp::new(5).unwrap();
        let mut rng = rng_from_seed(seed);
        let (n, m, p) = (rng.random_range(1..=4), rng.random_range(1..=4), rng.random_range(1..=4));
        let d = rng.random_range(0..=3);
        let f = random_form(&field, &mut rng, n, d);
        let a = random_matrix(&field, &mut rng, n, m);
        let b = random_matrix(&field, &mut rng, m, p);
        let stepwise = f.substitute(m, &a).unwrap().substitute(p, &b).unwrap();
        let composite = f.substitute(p, &matmul(&field, &a, &b)).unwrap();
        prop_assert_eq!(stepwise, composite);
    }

    #[test]
    fn euler_identity(seed in any::<u64>(), p in prop::sample::select(vec![0u32, 5, 7])) {
        let mut rng = rng_from_seed(seed);
        let n = rng.random_range(1..=5);
        let d = rng.random_range(1..=4);
        if p == 0 {
            euler(&Rationals, &random_form(&Rationals, &mut rng, n, d));
        } else {
            let field = Fp::new(p).unwrap();
            euler(&field, &random_form(&field, &mut rng, n, d));
        }
    }

    #[test]
    fn reduction_detects_principal_membership(seed in any::<u64>()) {
        let field = Fp::gf3();
        let mut rng = rng_from_seed(seed);
        let n = rng.random_range(1..=5);
        let d = rng.random_range(1..=3);
        let ell = slicerank_core::fixtures::random_nonzero(&field, &mut rng, n);
        // half the draws are forced into (ℓ)
        let f = if rng.random_bool(0.5) {
            Polynomial::linear(&field, &ell).mul(&random_form(&field, &mut rng, n, d - 1)).unwrap()
        } else {
            random_form(&field, &mut rng, n, d)
        };
        let line = Subspace::from_rows(&field, n, vec![ell.clone()]).unwrap();
        let reduced_zero = f.reduce_mod_linear(&ell).unwrap().is_zero();
        prop_assert_eq!(reduced_zero, ideal_membership(&f, &line).unwrap());
    }
}

fn euler<K: Field>(field: &K, f: &Polynomial<K>) {
    let n = f.num_vars();
    let mut lhs = Polynomial::zero(field, n, f.degree());
    for i in 0..n {
        let xi = Polynomial::linear(field, &slicerank_core::linalg::Subspace::coordinate(field, n, &[i]).basis()[0]);
        lhs = lhs.add(&xi.mul(&f.partial_derivative(i).unwrap()).unwrap()).unwrap();
    }
    assert_eq!(lhs, f.scale(&field.from_i64(i64::from(f.degree()))));
}

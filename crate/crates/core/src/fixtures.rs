//! Constructive fixtures and seeded instance generators.
//!
//! Fixture coordinates follow the normal forms used in the arguments they
//! check: variables are named `x1, …`, `y1, …`, `z1, …` and indexed in
//! declaration order.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::{intersect_family_graded, linear_ideal_graded, GradedSubspace, LinearIdealFamily};
use crate::linalg::{span_intersect_all, span_sum_all, Subspace};
use crate::poly::{binomial, Monomial, Polynomial};

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn unit<K: Field>(field: &K, n: usize, i: usize) -> Vec<K::Elem> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

fn names(prefix: &str, count: usize) -> impl Iterator<Item = String> + '_ {
    (1..=count).map(move |i| format!("{prefix}{i}"))
}

/// Variables `x1..xr, y1..yr, z1..z(r−k)`.
pub fn lemma22_variable_names(r: usize, k: usize) -> Vec<String> {
    names("x", r).chain(names("y", r)).chain(names("z", r - k)).collect()
}

/// `P1 = ⟨x1..xr⟩`, `P2 = ⟨y1..yr⟩`, `P3 = ⟨x1+y1, …, xk+yk, z1, …, z(r−k)⟩`
/// in `3r − k` variables.
pub fn build_lemma22_config<K: Field>(field: &K, r: usize, k: usize) -> Result<LinearIdealFamily<K>> {
    if k > r {
        return Err(Error::InvalidParameters(format!("k = {k} exceeds r = {r}")));
    }
    let n = 3 * r - k;
    let x = |i: usize| i;
    let y = |i: usize| r + i;
    let z = |i: usize| 2 * r + i;
    let p1 = Subspace::coordinate(field, n, &(0..r).map(x).collect::<Vec<_>>());
    let p2 = Subspace::coordinate(field, n, &(0..r).map(y).collect::<Vec<_>>());
    let mut rows: Vec<Vec<K::Elem>> = (0..k)
        .map(|i| {
            let mut v = unit(field, n, x(i));
            v[y(i)] = field.one();
            v
        })
        .collect();
    rows.extend((0..r - k).map(|i| unit(field, n, z(i))));
    let p3 = Subspace::from_rows(field, n, rows)?;
    LinearIdealFamily::new(field, n, vec![p1, p2, p3])
}

/// The family `(x1..xk)`, `(y1..yk)`, `(x1+y1, …, xk+yk)` in `2k` variables.
pub fn segre_triple_family<K: Field>(field: &K, k: usize) -> Result<LinearIdealFamily<K>> {
    let n = 2 * k;
    let xs = Subspace::coordinate(field, n, &(0..k).collect::<Vec<_>>());
    let ys = Subspace::coordinate(field, n, &(k..n).collect::<Vec<_>>());
    let sums = (0..k)
        .map(|i| {
            let mut v = unit(field, n, i);
            v[k + i] = field.one();
            v
        })
        .collect();
    let diag = Subspace::from_rows(field, n, sums)?;
    LinearIdealFamily::new(field, n, vec![xs, ys, diag])
}

/// Span of the 2×2 minors `x_i y_j − x_j y_i`, `i < j ≤ k`, inside `S_2` of
/// the `2k` variables `x1..xk, y1..yk`.
pub fn segre_minor_span<K: Field>(field: &K, k: usize) -> Result<GradedSubspace<K>> {
    let n = 2 * k;
    let minus_one = field.neg(&field.one());
    let mut minors = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            minors.push(Polynomial::from_terms(
                field,
                n,
                2,
                [
                    (Monomial::from_vars(n, &[i, k + j]), field.one()),
                    (Monomial::from_vars(n, &[j, k + i]), minus_one.clone()),
                ],
            )?);
        }
    }
    GradedSubspace::span_of(field, n, 2, &minors)
}

/// Index of `y_ij` (`i < j`, zero-based) in the variable order of `f_n`.
pub fn fn_y_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    // pairs (a, b) with a < i come first: Σ_{a<i} (n − 1 − a)
    let before: usize = (0..i).map(|a| n - 1 - a).sum();
    n + before + (j - i - 1)
}

pub fn fn_num_vars(n: usize) -> usize {
    n + binomial(n, 2)
}

/// `x1..xn, y12, y13, …, y(n−1)n`; indices are joined by `_` once `n ≥ 10`.
pub fn fn_variable_names(n: usize) -> Vec<String> {
    let mut out: Vec<String> = names("x", n).collect();
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(if n >= 10 { format!("y{i}_{j}") } else { format!("y{i}{j}") });
        }
    }
    out
}

/// `f_n = Σ_{i<j} x_i x_j y_ij`.
pub fn build_fn<K: Field>(field: &K, n: usize) -> Result<Polynomial<K>> {
    if n < 2 {
        return Err(Error::InvalidParameters(format!("f_n needs n ≥ 2, got {n}")));
    }
    let nv = fn_num_vars(n);
    let mut terms = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            terms.push((Monomial::from_vars(nv, &[i, j, fn_y_index(n, i, j)]), field.one()));
        }
    }
    Polynomial::from_terms(field, nv, 3, terms)
}

/// Images for `x_n ↦ Σ c_i x_i`, `y_in ↦ 0`, identity elsewhere, landing in
/// the variables of `f_{n−1}`.
pub fn fn_restriction_images<K: Field>(field: &K, n: usize, coeffs: &[K::Elem]) -> Result<Vec<Vec<K::Elem>>> {
    if n < 3 || coeffs.len() != n - 1 {
        return Err(Error::InvalidParameters(format!(
            "restriction needs n ≥ 3 and n − 1 coefficients, got n = {n} and {} coefficients",
            coeffs.len()
        )));
    }
    let target = fn_num_vars(n - 1);
    let mut images = vec![vec![field.zero(); target]; fn_num_vars(n)];
    for i in 0..n - 1 {
        images[i] = unit(field, target, i);
    }
    images[n - 1][..n - 1].clone_from_slice(coeffs);
    for i in 0..n {
        for j in i + 1..n {
            if j < n - 1 {
                images[fn_y_index(n, i, j)] = unit(field, target, fn_y_index(n - 1, i, j));
            }
        }
    }
    Ok(images)
}

/// Which side of "common intersection of dim ≥ 2, or sum of dim ≤ 4" holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairwiseBranch {
    CommonCore,
    SmallSum,
    Both,
    Neither,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairwiseVerdict {
    pub branch: PairwiseBranch,
    pub common_dim: usize,
    pub sum_dim: usize,
}

/// For 3-dimensional spaces meeting pairwise in dimension 2.
pub fn check_pairwise_lemma<K: Field>(collection: &[Subspace<K>]) -> Result<PairwiseVerdict> {
    let first = collection
        .first()
        .ok_or_else(|| Error::InvalidParameters("empty collection".to_string()))?;
    for (i, a) in collection.iter().enumerate() {
        if a.dim() != 3 {
            return Err(Error::HypothesisViolated(format!("member {i} has dimension {}", a.dim())));
        }
        for (j, b) in collection.iter().enumerate().skip(i + 1) {
            let meet = a.intersect(b)?.dim();
            if meet != 2 {
                return Err(Error::HypothesisViolated(format!("members {i} and {j} meet in dimension {meet}")));
            }
        }
    }
    let common_dim = span_intersect_all(collection).expect("non-empty")?.dim();
    let sum_dim = span_sum_all(first.field(), first.ambient_dim(), collection)?.dim();
    let branch = match (common_dim >= 2, sum_dim <= 4) {
        (true, true) => PairwiseBranch::Both,
        (true, false) => PairwiseBranch::CommonCore,
        (false, true) => PairwiseBranch::SmallSum,
        (false, false) => PairwiseBranch::Neither,
    };
    Ok(PairwiseVerdict {
        branch,
        common_dim,
        sum_dim,
    })
}

/// What a fixture asserts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expected {
    Dimension(usize),
    GeneratorCount(usize),
    Rank(usize),
    LDim(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FixtureSubject<K: Field> {
    Family(LinearIdealFamily<K>),
    Polynomial(Polynomial<K>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureConfig<K: Field> {
    pub id: String,
    pub variables: Vec<String>,
    pub subject: FixtureSubject<K>,
    pub expected: Expected,
    pub description: &'static str,
}

pub const C3_CASES: [&str; 6] = ["1b", "1c", "1d", "1e", "1e_i", "case2"];

fn x_space<K: Field>(field: &K, n: usize, forms: &[&[(usize, i64)]]) -> Result<Subspace<K>> {
    let rows = forms
        .iter()
        .map(|form| {
            let mut v = vec![field.zero(); n];
            for &(i, c) in form.iter() {
                v[i - 1] = field.from_i64(c);
            }
            v
        })
        .collect();
    Subspace::from_rows(field, n, rows)
}

/// Coordinate configurations from the rank-3 case analysis with their
/// quadratic generator counts.
pub fn c3_fixture<K: Field>(field: &K, case_id: &str) -> Result<FixtureConfig<K>> {
    let p1: &[&[(usize, i64)]] = &[&[(1, 1)], &[(2, 1)], &[(3, 1)]];
    let p2: &[&[(usize, i64)]] = &[&[(4, 1)], &[(5, 1)], &[(6, 1)]];
    let (n, spaces, expected, description): (usize, Vec<&[&[(usize, i64)]]>, usize, &'static str) = match case_id {
        "1b" => (8, vec![p1, p2, &[&[(1, 1)], &[(7, 1)], &[(8, 1)]]], 3, "case 1.b: x1x4, x1x5, x1x6"),
        "1c" => (7, vec![p1, p2, &[&[(1, 1)], &[(2, 1), (4, 1)], &[(7, 1)]]], 3, "case 1.c: 3 quadratic generators"),
        "1d" => (7, vec![p1, p2, &[&[(1, 1)], &[(4, 1)], &[(7, 1)]]], 5, "case 1.d: x1x4, x1x5, x1x6, x2x4, x3x4"),
        "1e" => (7, vec![p1, p2, &[&[(1, 1)], &[(2, 1)], &[(7, 1)]]], 6, "case 1.e: 6 quadratic generators"),
        "1e_i" => (
            8,
            vec![p1, p2, &[&[(1, 1)], &[(2, 1)], &[(7, 1)]], &[&[(4, 1)], &[(5, 1)], &[(8, 1)]]],
            4,
            "case 1.e.(i): 4 quadratic generators",
        ),
        "case2" => (
            6,
            vec![p1, &[&[(1, 1)], &[(4, 1)], &[(5, 1)]], &[&[(2, 1)], &[(4, 1)], &[(6, 1)]]],
            6,
            "case 2: 6 quadratic generators",
        ),
        other => return Err(Error::UnknownFixture(other.to_string())),
    };
    let members = spaces.into_iter().map(|s| x_space(field, n, s)).collect::<Result<Vec<_>>>()?;
    Ok(FixtureConfig {
        id: format!("c3:{case_id}"),
        variables: names("x", n).collect(),
        subject: FixtureSubject::Family(LinearIdealFamily::new(field, n, members)?),
        expected: Expected::GeneratorCount(expected),
        description,
    })
}

/// In case 1.e every quadratic element of `I` lies in `(x1, x2)`.
pub fn c3_case_1e_containment<K: Field>(field: &K) -> Result<bool> {
    let FixtureSubject::Family(family) = c3_fixture(field, "1e")?.subject else {
        unreachable!("c3 fixtures are families");
    };
    let i2 = intersect_family_graded(&family, 2)?;
    let x1x2 = Subspace::coordinate(field, family.num_vars(), &[0, 1]);
    Ok(linear_ideal_graded(&x1x2, 2)?.contains(&i2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomFamilyParams {
    pub s: usize,
    pub r: usize,
    pub n: usize,
    pub force_trivial_intersection: bool,
}

pub const RESAMPLE_CAP: usize = 100;

pub fn random_matrix<K: Field, R: Rng>(field: &K, rng: &mut R, rows: usize, cols: usize) -> Vec<Vec<K::Elem>> {
    (0..rows)
        .map(|_| (0..cols).map(|_| field.sample_from(rng.random())).collect())
        .collect()
}

/// A uniformly random matrix that happens to be invertible (rejection sampling).
pub fn random_invertible<K: Field, R: Rng>(field: &K, rng: &mut R, n: usize) -> Vec<Vec<K::Elem>> {
    loop {
        let m = random_matrix(field, rng, n, n);
        if Subspace::from_rows(field, n, m.clone()).map(|s| s.dim()) == Ok(n) {
            return m;
        }
    }
}

pub fn random_subspace<K: Field, R: Rng>(field: &K, rng: &mut R, n: usize, dim: usize) -> Subspace<K> {
    Subspace::from_rows(field, n, random_matrix(field, rng, dim, n)).expect("rows have length n")
}

/// Random nonzero vector of `K^n`.
pub fn random_nonzero<K: Field, R: Rng>(field: &K, rng: &mut R, n: usize) -> Vec<K::Elem> {
    loop {
        let v: Vec<_> = (0..n).map(|_| field.sample_from(rng.random())).collect();
        if v.iter().any(|c| !field.is_zero(c)) {
            return v;
        }
    }
}

/// Family of `s` distinct members, each of dimension drawn uniformly from
/// `[1, r]` and spanned by a uniform random matrix.
pub fn random_family<K: Field>(field: &K, seed: u64, params: RandomFamilyParams) -> Result<LinearIdealFamily<K>> {
    let RandomFamilyParams {
        s,
        r,
        n,
        force_trivial_intersection,
    } = params;
    if s == 0 || s > 8 || r == 0 || r > 6 || n == 0 || n > 16 || r > n {
        return Err(Error::InvalidParameters(format!("random family needs 1 ≤ s ≤ 8, 1 ≤ r ≤ min(6, n), n ≤ 16; got s={s} r={r} n={n}")));
    }
    let mut rng = rng_from_seed(seed);
    for _ in 0..RESAMPLE_CAP {
        let mut members: Vec<Subspace<K>> = Vec::with_capacity(s);
        let mut attempts = 0;
        while members.len() < s && attempts < RESAMPLE_CAP * s {
            attempts += 1;
            let dim = rng.random_range(1..=r);
            let m = random_subspace(field, &mut rng, n, dim);
            if m.dim() > 0 && !members.contains(&m) {
                members.push(m);
            }
        }
        if members.len() < s {
            continue;
        }
        let family = LinearIdealFamily::new(field, n, members)?;
        if !force_trivial_intersection || family.common_intersection().is_zero() {
            return Ok(family);
        }
    }
    Err(Error::ResampleCapExceeded(RESAMPLE_CAP))
}

/// A uniformly random element of a graded subspace.
pub fn random_element<K: Field, R: Rng>(space: &GradedSubspace<K>, rng: &mut R) -> Polynomial<K> {
    let field = space.space().field();
    let width = space.space().ambient_dim();
    let mut v = vec![field.zero(); width];
    for row in space.space().basis() {
        let c = field.sample_from(rng.random());
        if field.is_zero(&c) {
            continue;
        }
        for (x, b) in v.iter_mut().zip(row) {
            *x = field.add(x, &field.mul(&c, b));
        }
    }
    Polynomial::from_coefficient_vector(field, space.num_vars(), space.degree(), &v).expect("width matches S_d")
}

/// Random homogeneous polynomial of the given degree (uniform coefficients).
pub fn random_form<K: Field, R: Rng>(field: &K, rng: &mut R, n: usize, degree: u32) -> Polynomial<K> {
    let terms = crate::poly::monomials_of_degree(n, degree)
        .into_iter()
        .map(|m| (m, field.sample_from(rng.random())))
        .collect::<Vec<_>>();
    Polynomial::from_terms(field, n, degree, terms).expect("monomials are homogeneous")
}

/// `Σ_{i<count} ℓ_i q_i` with random nonzero `ℓ_i` and random nonzero quadrics.
pub fn random_sliced_cubic<K: Field, R: Rng>(field: &K, rng: &mut R, n: usize, count: usize) -> Polynomial<K> {
    let mut f = Polynomial::zero(field, n, 3);
    for _ in 0..count {
        let ell = Polynomial::linear(field, &random_nonzero(field, rng, n));
        let q = loop {
            let q = random_form(field, rng, n, 2);
            if !q.is_zero() {
                break q;
            }
        };
        f = f.add(&ell.mul(&q).expect("same ring")).expect("same degree");
    }
    f
}

/// A collection of 3-spaces meeting pairwise in dimension 2, drawn either
/// around a random 2-dimensional core or inside a random 4-dimensional
/// envelope (equal odds), then moved by a random invertible change of
/// coordinates.
pub fn random_pairwise_collection<K: Field>(field: &K, seed: u64, n: usize, size: usize) -> Result<Vec<Subspace<K>>> {
    if !(4..=8).contains(&n) || size < 2 {
        return Err(Error::InvalidParameters(format!("pairwise collection needs 4 ≤ n ≤ 8 and size ≥ 2, got n={n} size={size}")));
    }
    let mut rng = rng_from_seed(seed);
    let core_regime = n >= 5 && rng.random_bool(0.5);
    let mut members: Vec<Subspace<K>> = Vec::new();
    let mut attempts = 0;
    if core_regime {
        let core = random_subspace(field, &mut rng, n, 2);
        let core = if core.dim() == 2 { core } else { Subspace::coordinate(field, n, &[0, 1]) };
        while members.len() < size && attempts < RESAMPLE_CAP * size {
            attempts += 1;
            let v = random_nonzero(field, &mut rng, n);
            let line = Subspace::from_rows(field, n, vec![v])?;
            let m = core.sum(&line)?;
            if m.dim() == 3 && !members.contains(&m) {
                members.push(m);
            }
        }
    } else {
        let envelope = loop {
            let e = random_subspace(field, &mut rng, n, 4);
            if e.dim() == 4 {
                break e;
            }
        };
        while members.len() < size && attempts < RESAMPLE_CAP * size {
            attempts += 1;
            let coeffs = random_matrix(field, &mut rng, 3, 4);
            let rows = coeffs
                .iter()
                .map(|c| {
                    let mut v = vec![field.zero(); n];
                    for (a, b) in c.iter().zip(envelope.basis()) {
                        for (x, y) in v.iter_mut().zip(b) {
                            *x = field.add(x, &field.mul(a, y));
                        }
                    }
                    v
                })
                .collect();
            let m = Subspace::from_rows(field, n, rows)?;
            if m.dim() == 3 && !members.contains(&m) {
                members.push(m);
            }
        }
    }
    if members.len() < 2 {
        return Err(Error::ResampleCapExceeded(RESAMPLE_CAP));
    }
    let g = random_invertible(field, &mut rng, n);
    members.iter().map(|m| m.map_right(&g, n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rationals};
    use crate::ideal::{intersect_family_graded, quadratic_generator_count};

    #[test]
    fn lemma22_small_cases() {
        let f = Fp::gf2();
        let fam = build_lemma22_config(&f, 2, 1).unwrap();
        assert_eq!(fam.num_vars(), 5);
        assert_eq!(intersect_family_graded(&fam, 2).unwrap().dim(), 0);
        let fam = build_lemma22_config(&f, 3, 3).unwrap();
        assert_eq!(intersect_family_graded(&fam, 2).unwrap().dim(), 3);
        let fam = build_lemma22_config(&f, 1, 0).unwrap();
        assert_eq!(intersect_family_graded(&fam, 2).unwrap().dim(), 0);
        for (i, a) in fam.members().iter().enumerate() {
            for b in &fam.members()[i + 1..] {
                assert!(a.intersect(b).unwrap().is_zero());
            }
        }
        assert!(build_lemma22_config(&f, 2, 3).is_err());
        assert_eq!(lemma22_variable_names(2, 1), ["x1", "x2", "y1", "y2", "z1"]);
    }

    #[test]
    fn segre_spans() {
        let f = Fp::new(5).unwrap();
        assert_eq!(segre_minor_span(&f, 1).unwrap().dim(), 0);
        assert_eq!(segre_minor_span(&f, 2).unwrap().dim(), 1);
        let s4 = segre_minor_span(&Rationals, 4).unwrap();
        assert_eq!(s4.dim(), 6);
        let triple = intersect_family_graded(&segre_triple_family(&Rationals, 4).unwrap(), 2).unwrap();
        assert_eq!(s4, triple);
    }

    #[test]
    fn fn_shapes() {
        let f = Fp::gf2();
        let f2 = build_fn(&f, 2).unwrap();
        assert_eq!(f2.num_vars(), 3);
        assert_eq!(f2.num_terms(), 1);
        assert_eq!(f2.format_with(&fn_variable_names(2)), "x1*x2*y12");
        let f3 = build_fn(&f, 3).unwrap();
        assert_eq!((f3.num_vars(), f3.num_terms()), (6, 3));
        let f4 = build_fn(&f, 4).unwrap();
        assert_eq!((f4.num_vars(), f4.num_terms()), (10, 6));
        assert!(build_fn(&f, 1).is_err());
        assert_eq!(fn_variable_names(3), ["x1", "x2", "x3", "y12", "y13", "y23"]);
        assert_eq!(fn_y_index(4, 2, 3), 9);
        assert_eq!(fn_variable_names(10)[10], "y1_2");
    }

    #[test]
    fn fn_restriction_identity() {
        let f = Fp::new(7).unwrap();
        let f4 = build_fn(&f, 4).unwrap();
        let images = fn_restriction_images(&f, 4, &[3, 5, 6]).unwrap();
        assert_eq!(f4.substitute(fn_num_vars(3), &images).unwrap(), build_fn(&f, 3).unwrap());
    }

    #[test]
    fn pairwise_examples() {
        let f = Fp::gf2();
        let c = |idx: &[usize]| Subspace::coordinate(&f, 5, idx);
        let core = [c(&[0, 1, 2]), c(&[0, 1, 3]), c(&[0, 1, 4])];
        assert_eq!(check_pairwise_lemma(&core).unwrap().branch, PairwiseBranch::CommonCore);

        let d = |idx: &[usize]| Subspace::coordinate(&f, 4, idx);
        let env = [d(&[0, 1, 2]), d(&[0, 1, 3]), d(&[0, 2, 3]), d(&[1, 2, 3])];
        let v = check_pairwise_lemma(&env).unwrap();
        assert_eq!((v.branch, v.common_dim, v.sum_dim), (PairwiseBranch::SmallSum, 0, 4));

        let g = |idx: &[usize]| Subspace::coordinate(&f, 6, idx);
        assert!(matches!(
            check_pairwise_lemma(&[g(&[0, 1, 2]), g(&[3, 4, 5])]),
            Err(Error::HypothesisViolated(_))
        ));
    }

    #[test]
    fn c3_counts() {
        let f = Fp::new(5).unwrap();
        for case in C3_CASES {
            let fx = c3_fixture(&f, case).unwrap();
            let FixtureSubject::Family(fam) = &fx.subject else { panic!() };
            let Expected::GeneratorCount(want) = fx.expected else { panic!() };
            assert_eq!(quadratic_generator_count(fam).unwrap(), want, "{case}");
        }
        assert!(c3_case_1e_containment(&f).unwrap());
        assert_eq!(c3_fixture(&f, "9z").unwrap_err(), Error::UnknownFixture("9z".into()));
    }

    #[test]
    fn random_families_are_deterministic() {
        let f = Fp::new(5).unwrap();
        let params = RandomFamilyParams {
            s: 2,
            r: 3,
            n: 8,
            force_trivial_intersection: true,
        };
        let a = random_family(&f, 0, params).unwrap();
        assert_eq!(a, random_family(&f, 0, params).unwrap());
        assert!(a.common_intersection().is_zero());
        assert!(intersect_family_graded(&a, 2).unwrap().dim() <= 9);

        let params = RandomFamilyParams {
            s: 4,
            r: 2,
            n: 6,
            force_trivial_intersection: false,
        };
        let b = random_family(&f, 1, params).unwrap();
        assert!(quadratic_generator_count(&b).unwrap() <= 4);
    }

    #[test]
    fn random_pairwise_satisfies_hypothesis() {
        let f = Fp::gf3();
        for seed in 0..20 {
            let c = random_pairwise_collection(&f, seed, 4 + (seed as usize % 5), 4).unwrap();
            let v = check_pairwise_lemma(&c).unwrap();
            assert_ne!(v.branch, PairwiseBranch::Neither);
        }
    }
}

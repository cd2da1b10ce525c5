//! Graded pieces of linear ideals `(P)` and of their intersections.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{Field, Fp};
use crate::linalg::{enumerate_subspaces, gaussian_binomial, kernel, span_intersect_all, span_sum_all, Subspace};
use crate::poly::{count_monomials, monomial_index, monomials_of_degree, Monomial, Polynomial};

/// A subspace of `S_d` in graded-lex monomial coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSubspace<K: Field> {
    num_vars: usize,
    degree: u32,
    space: Subspace<K>,
}

impl<K: Field> GradedSubspace<K> {
    pub fn new(num_vars: usize, degree: u32, space: Subspace<K>) -> Result<Self> {
        let expected = count_monomials(num_vars, degree);
        if space.ambient_dim() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                found: space.ambient_dim(),
            });
        }
        Ok(GradedSubspace { num_vars, degree, space })
    }

    /// Span of homogeneous polynomials of a common degree.
    pub fn span_of(field: &K, num_vars: usize, degree: u32, polys: &[Polynomial<K>]) -> Result<Self> {
        let mut rows = Vec::with_capacity(polys.len());
        for p in polys {
            if p.num_vars() != num_vars || p.field() != field {
                return Err(Error::AmbientMismatch);
            }
            if p.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: p.degree(),
                });
            }
            rows.push(p.coefficient_vector());
        }
        let space = Subspace::from_rows(field, count_monomials(num_vars, degree), rows)?;
        Self::new(num_vars, degree, space)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn space(&self) -> &Subspace<K> {
        &self.space
    }

    pub fn contains_polynomial(&self, f: &Polynomial<K>) -> bool {
        f.num_vars() == self.num_vars && f.degree() == self.degree && self.space.contains_vector(&f.coefficient_vector())
    }

    pub fn contains(&self, other: &Self) -> bool {
        self.num_vars == other.num_vars && self.degree == other.degree && self.space.contains(&other.space)
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        if self.num_vars != other.num_vars || self.degree != other.degree {
            return Err(Error::AmbientMismatch);
        }
        Self::new(self.num_vars, self.degree, self.space.intersect(&other.space)?)
    }

    /// Basis elements as polynomials.
    pub fn basis_polynomials(&self) -> Vec<Polynomial<K>> {
        self.space
            .basis()
            .iter()
            .map(|row| {
                Polynomial::from_coefficient_vector(self.space.field(), self.num_vars, self.degree, row)
                    .expect("basis rows have S_d length")
            })
            .collect()
    }
}

/// A finite, duplicate-free family of spaces of linear forms in `n` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearIdealFamily<K: Field> {
    field: K,
    num_vars: usize,
    members: Vec<Subspace<K>>,
}

impl<K: Field> LinearIdealFamily<K> {
    /// Repeated members are dropped, keeping first occurrences.
    pub fn new(field: &K, num_vars: usize, members: Vec<Subspace<K>>) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::EmptyFamily);
        }
        let mut unique: Vec<Subspace<K>> = Vec::with_capacity(members.len());
        for m in members {
            if m.ambient_dim() != num_vars || m.field() != field {
                return Err(Error::AmbientMismatch);
            }
            if !unique.contains(&m) {
                unique.push(m);
            }
        }
        Ok(LinearIdealFamily {
            field: field.clone(),
            num_vars,
            members: unique,
        })
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn members(&self) -> &[Subspace<K>] {
        &self.members
    }

    /// Largest member dimension.
    pub fn r(&self) -> usize {
        self.members.iter().map(Subspace::dim).max().unwrap_or(0)
    }

    /// `∩ P_i`, which is also `I_1`.
    pub fn common_intersection(&self) -> Subspace<K> {
        span_intersect_all(&self.members)
            .expect("family is non-empty")
            .expect("members share an ambient")
    }

    /// `W = Σ P_i`.
    pub fn sum_space(&self) -> Subspace<K> {
        span_sum_all(&self.field, self.num_vars, &self.members).expect("members share an ambient")
    }
}

/// `(P)_d = P · S_{d-1}`.
pub fn linear_ideal_graded<K: Field>(p: &Subspace<K>, degree: u32) -> Result<GradedSubspace<K>> {
    if degree < 1 {
        return Err(Error::DegreeTooSmall);
    }
    let field = p.field();
    let n = p.ambient_dim();
    let cofactors = monomials_of_degree(n, degree - 1);
    let width = count_monomials(n, degree);
    let mut rows = Vec::with_capacity(p.dim() * cofactors.len());
    for ell in p.basis() {
        for m in &cofactors {
            let mut v = vec![field.zero(); width];
            for (i, c) in ell.iter().enumerate().filter(|(_, c)| !field.is_zero(c)) {
                let prod = m.mul(&Monomial::var(n, i));
                v[monomial_index(&prod, degree, n)?] = c.clone();
            }
            rows.push(v);
        }
    }
    GradedSubspace::new(n, degree, Subspace::from_rows(field, width, rows)?)
}

/// `I_d` for `I = ∩ (P_i)`.
pub fn intersect_family_graded<K: Field>(family: &LinearIdealFamily<K>, degree: u32) -> Result<GradedSubspace<K>> {
    let mut members = family.members().iter();
    let first = members.next().ok_or(Error::EmptyFamily)?;
    let mut acc = linear_ideal_graded(first, degree)?;
    for p in members {
        if acc.dim() == 0 {
            break;
        }
        acc = acc.intersect(&linear_ideal_graded(p, degree)?)?;
    }
    Ok(acc)
}

/// `S_1 · V` for `V ⊆ S_{d}`, as a subspace of `S_{d+1}`.
pub fn multiply_by_linear<K: Field>(v: &GradedSubspace<K>) -> Result<GradedSubspace<K>> {
    let n = v.num_vars();
    let field = v.space().field();
    let polys: Vec<_> = v
        .basis_polynomials()
        .into_iter()
        .flat_map(|g| {
            (0..n).map(move |i| {
                let mut e = vec![field.zero(); n];
                e[i] = field.one();
                g.mul(&Polynomial::linear(field, &e)).expect("same ring")
            })
        })
        .collect();
    GradedSubspace::span_of(field, n, v.degree() + 1, &polys)
}

/// `dim I_d − dim S_1 · I_{d−1}`: the number of degree-`d` generators.
pub fn generator_count<K: Field>(family: &LinearIdealFamily<K>, degree: u32) -> Result<usize> {
    let top = intersect_family_graded(family, degree)?;
    if degree == 1 {
        return Ok(top.dim());
    }
    let below = intersect_family_graded(family, degree - 1)?;
    let generated = multiply_by_linear(&below)?;
    debug_assert!(top.contains(&generated));
    Ok(top.dim() - generated.dim())
}

pub fn quadratic_generator_count<K: Field>(family: &LinearIdealFamily<K>) -> Result<usize> {
    generator_count(family, 2)
}

/// Rewrites `f` in coordinates adapted to `P`: coordinate `c` for each pivot
/// column `c` of `P` becomes the basis form with that pivot, every other
/// coordinate stays `x_j`.
fn adapted_coordinates<K: Field>(f: &Polynomial<K>, p: &Subspace<K>) -> Result<Polynomial<K>> {
    let n = f.num_vars();
    if p.ambient_dim() != n || p.field() != f.field() {
        return Err(Error::AmbientMismatch);
    }
    let field = f.field();
    // x_c = y_c − Σ_{j free} a_cj y_j for pivots c; x_j = y_j otherwise.
    let mut images: Vec<Vec<K::Elem>> = (0..n)
        .map(|i| {
            let mut e = vec![field.zero(); n];
            e[i] = field.one();
            e
        })
        .collect();
    for (row, &c) in p.basis().iter().zip(p.pivots()) {
        let im = &mut images[c];
        for (j, a) in row.iter().enumerate() {
            if j != c && !field.is_zero(a) {
                im[j] = field.neg(a);
            }
        }
    }
    f.substitute(n, &images)
}

fn pivot_mask(n: usize, pivots: &[usize]) -> Vec<bool> {
    let mut mask = vec![false; n];
    for &c in pivots {
        mask[c] = true;
    }
    mask
}

/// `f ∈ (P)`: in coordinates adapted to `P`, every monomial of `f` must
/// involve one of the coordinates spanning `P`.
pub fn ideal_membership<K: Field>(f: &Polynomial<K>, p: &Subspace<K>) -> Result<bool> {
    if f.num_vars() != p.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: f.num_vars(),
            found: p.ambient_dim(),
        });
    }
    let g = adapted_coordinates(f, p)?;
    let mask = pivot_mask(f.num_vars(), p.pivots());
    let member = g.terms().all(|(m, _)| m.exponents().iter().zip(&mask).any(|(&e, &piv)| e > 0 && piv));
    Ok(member)
}

/// Writes `f = Σ ℓ_i q_i` with `ℓ_i` the basis of `P`, or `None` if `f ∉ (P)`.
#[allow(clippy::type_complexity)]
pub fn ideal_decomposition<K: Field>(
    f: &Polynomial<K>,
    p: &Subspace<K>,
) -> Result<Option<Vec<(Vec<K::Elem>, Polynomial<K>)>>> {
    if f.degree() == 0 {
        return Ok(f.is_zero().then(Vec::new));
    }
    let n = f.num_vars();
    let field = f.field();
    let g = adapted_coordinates(f, p)?;
    let mask = pivot_mask(n, p.pivots());
    let mut cofactors: Vec<Vec<(Monomial, K::Elem)>> = vec![Vec::new(); p.dim()];
    for (m, c) in g.terms() {
        let Some(slot) = p.pivots().iter().position(|&pc| m.exponents()[pc] > 0) else {
            return Ok(None);
        };
        debug_assert!(mask[p.pivots()[slot]]);
        let mut e = m.exponents().to_vec();
        e[p.pivots()[slot]] -= 1;
        cofactors[slot].push((Monomial::new(e), c.clone()));
    }
    // Back to x coordinates: y_c = ℓ_c(x), y_j = x_j.
    let mut images: Vec<Vec<K::Elem>> = (0..n)
        .map(|i| {
            let mut e = vec![field.zero(); n];
            e[i] = field.one();
            e
        })
        .collect();
    for (row, &c) in p.basis().iter().zip(p.pivots()) {
        images[c] = row.clone();
    }
    let mut out = Vec::with_capacity(p.dim());
    for (row, terms) in p.basis().iter().zip(cofactors) {
        let q = Polynomial::from_terms(field, n, f.degree() - 1, terms)?.substitute(n, &images)?;
        out.push((row.clone(), q));
    }
    Ok(Some(out))
}

/// `f ∈ S(V)`: in coordinates adapted to `V`, `f` only involves the
/// coordinates spanning `V`.
pub fn depends_only_on<K: Field>(f: &Polynomial<K>, v: &Subspace<K>) -> Result<bool> {
    let g = adapted_coordinates(f, v)?;
    let mask = pivot_mask(f.num_vars(), v.pivots());
    let inside = g.terms().all(|(m, _)| m.exponents().iter().zip(&mask).all(|(&e, &piv)| e == 0 || piv));
    Ok(inside)
}

/// Minimal `m` with `f ∈ S(V)`, `dim V = m`, together with such a `V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EssentialVariables<K: Field> {
    pub count: usize,
    pub witness: Subspace<K>,
}

/// Counts essential variables.
///
/// When `char = 0` or `char > deg f` this is one kernel computation:
/// `V` is the annihilator of `{u : Σ u_i ∂f/∂x_i = 0}`. In small
/// characteristic the derivative test is unsound, so subspaces are searched
/// exhaustively by increasing dimension, within `max_visits`.
pub fn essential_variable_count<K: Field>(f: &Polynomial<K>, max_visits: u64) -> Result<EssentialVariables<K>> {
    let n = f.num_vars();
    let field = f.field();
    let p = field.characteristic();
    if p == 0 || p > u64::from(f.degree()) {
        let partials = (0..n).map(|i| f.partial_derivative(i)).collect::<Result<Vec<_>>>()?;
        let vectors: Vec<_> = partials.iter().map(Polynomial::coefficient_vector).collect();
        let len = count_monomials(n, f.degree().saturating_sub(1));
        // Row j of the matrix holds coefficient j of every partial.
        let rows: Vec<Vec<K::Elem>> = (0..len).map(|j| vectors.iter().map(|v| v[j].clone()).collect()).collect();
        let directions = Subspace::from_rows(field, n, kernel(field, &rows, n))?;
        let witness = directions.annihilator();
        return Ok(EssentialVariables {
            count: witness.dim(),
            witness,
        });
    }
    let q = field.elements().ok_or(Error::InfiniteField)?.len() as u64;
    let mut spent: u128 = 0;
    for m in 0..=n {
        spent += gaussian_binomial(n, m, q);
        if spent > u128::from(max_visits) {
            return Err(Error::BudgetExceeded {
                needed: spent,
                cap: max_visits,
                ranks_excluded: m.checked_sub(1),
            });
        }
        for v in enumerate_subspaces(field, n, m, u64::MAX)? {
            if depends_only_on(f, &v)? {
                return Ok(EssentialVariables { count: m, witness: v });
            }
        }
    }
    unreachable!("f always lies in S(K^n)")
}

/// Independent oracle over GF(2): builds each `(P_i)_d` as an explicit set of
/// coefficient vectors by closing its generators `ℓ·m` under addition,
/// intersects the sets and returns `log2` of the resulting size.
pub fn brute_force_graded_intersection_oracle(family: &LinearIdealFamily<Fp>, degree: u32) -> Result<usize> {
    const MAX_COORDS: usize = 22;
    if family.field().modulus() != 2 {
        return Err(Error::RequiresGf2);
    }
    if degree < 1 {
        return Err(Error::DegreeTooSmall);
    }
    let n = family.num_vars();
    let width = count_monomials(n, degree);
    if width > MAX_COORDS {
        return Err(Error::BudgetExceeded {
            needed: 1u128 << width,
            cap: 1 << MAX_COORDS,
            ranks_excluded: None,
        });
    }
    let words = (1usize << width).div_ceil(64);
    let cofactors = monomials_of_degree(n, degree - 1);
    let mut common = vec![u64::MAX; words];
    for p in family.members() {
        let mut set = vec![0u64; words];
        set[0] = 1;
        let mut elements: Vec<u32> = vec![0];
        for ell in p.basis() {
            for m in &cofactors {
                let mut g: u32 = 0;
                for (i, &c) in ell.iter().enumerate() {
                    if c == 1 {
                        g ^= 1 << monomial_index(&m.mul(&Monomial::var(n, i)), degree, n)?;
                    }
                }
                if set[(g / 64) as usize] >> (g % 64) & 1 == 1 {
                    continue;
                }
                let shifted: Vec<u32> = elements.iter().map(|e| e ^ g).collect();
                for e in shifted {
                    set[(e / 64) as usize] |= 1 << (e % 64);
                    elements.push(e);
                }
            }
        }
        for (c, s) in common.iter_mut().zip(&set) {
            *c &= s;
        }
    }
    let size: u64 = common.iter().map(|w| u64::from(w.count_ones())).sum();
    debug_assert!(size.is_power_of_two());
    Ok(size.trailing_zeros() as usize)
}

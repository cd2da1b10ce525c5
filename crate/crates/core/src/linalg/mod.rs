//! Canonical subspaces of `K^n` and the row reduction behind them.
//!
//! A [`Subspace`] always stores its reduced row-echelon basis, so two
//! subspaces are equal as sets exactly when their stored bases are equal.

mod grassmann;

pub use grassmann::{
    enumerate_subspaces, gaussian_binomial, next_combination, plan_shards, CellWalker, Grassmannian,
    Shard,
};

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::field::Field;

/// Row-reduces `rows` in place, dropping zero rows. Returns pivot columns.
pub fn rref_in_place<K: Field>(field: &K, rows: &mut Vec<Vec<K::Elem>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == rows.len() {
            break;
        }
        let Some(found) = (rank..rows.len()).find(|&r| !field.is_zero(&rows[r][col])) else {
            continue;
        };
        rows.swap(rank, found);
        let inv = field.inv(&rows[rank][col]);
        if !field.is_one(&inv) {
            for x in rows[rank][col..].iter_mut() {
                *x = field.mul(x, &inv);
            }
        }
        let (head, tail) = rows.split_at_mut(rank);
        let (pivot_row, tail) = tail.split_first_mut().expect("pivot row exists");
        for other in head.iter_mut().chain(tail.iter_mut()) {
            if field.is_zero(&other[col]) {
                continue;
            }
            let factor = other[col].clone();
            for j in col..ncols {
                if field.is_zero(&pivot_row[j]) {
                    continue;
                }
                let t = field.mul(&factor, &pivot_row[j]);
                other[j] = field.sub(&other[j], &t);
            }
        }
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    pivots
}

/// Basis of `{u : M u = 0}` for the matrix with the given rows.
pub fn kernel<K: Field>(field: &K, rows: &[Vec<K::Elem>], ncols: usize) -> Vec<Vec<K::Elem>> {
    let mut m = rows.to_vec();
    let pivots = rref_in_place(field, &mut m, ncols);
    let mut is_pivot = vec![false; ncols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::with_capacity(ncols - pivots.len());
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut u = vec![field.zero(); ncols];
        u[free] = field.one();
        for (row, &pc) in m.iter().zip(&pivots) {
            u[pc] = field.neg(&row[free]);
        }
        basis.push(u);
    }
    basis
}

/// Dot product of two coefficient vectors.
pub fn dot<K: Field>(field: &K, a: &[K::Elem], b: &[K::Elem]) -> K::Elem {
    a.iter()
        .zip(b)
        .fold(field.zero(), |acc, (x, y)| field.add(&acc, &field.mul(x, y)))
}

/// A linear subspace of `K^n`, stored by its reduced row-echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<K: Field> {
    field: K,
    ambient: usize,
    rows: Vec<Vec<K::Elem>>,
    pivots: Vec<usize>,
}

impl<K: Field> Subspace<K> {
    /// Canonical span of `rows` inside `K^ambient`.
    pub fn from_rows(field: &K, ambient: usize, rows: Vec<Vec<K::Elem>>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != ambient) {
            return Err(Error::DimensionMismatch {
                expected: ambient,
                found: bad.len(),
            });
        }
        let mut rows = rows;
        let pivots = rref_in_place(field, &mut rows, ambient);
        Ok(Subspace {
            field: field.clone(),
            ambient,
            rows,
            pivots,
        })
    }

    /// Wraps rows that are already in reduced row-echelon form.
    pub(crate) fn from_rref_unchecked(field: &K, ambient: usize, rows: Vec<Vec<K::Elem>>, pivots: Vec<usize>) -> Self {
        debug_assert_eq!(rows.len(), pivots.len());
        Subspace {
            field: field.clone(),
            ambient,
            rows,
            pivots,
        }
    }

    pub fn zero(field: &K, ambient: usize) -> Self {
        Subspace {
            field: field.clone(),
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &K, ambient: usize) -> Self {
        Self::coordinate(field, ambient, &(0..ambient).collect::<Vec<_>>())
    }

    /// Span of the given standard basis vectors.
    pub fn coordinate(field: &K, ambient: usize, indices: &[usize]) -> Self {
        let rows = indices
            .iter()
            .map(|&i| {
                let mut v = vec![field.zero(); ambient];
                v[i] = field.one();
                v
            })
            .collect();
        Self::from_rows(field, ambient, rows).expect("coordinate rows have ambient length")
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<K::Elem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient || self.field != other.field {
            Err(Error::AmbientMismatch)
        } else {
            Ok(())
        }
    }

    /// Normal form of `v` modulo this subspace (pivot coordinates cleared).
    pub fn reduce(&self, v: &[K::Elem]) -> Vec<K::Elem> {
        let f = &self.field;
        let mut v = v.to_vec();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            if f.is_zero(&v[pc]) {
                continue;
            }
            let factor = v[pc].clone();
            for (x, r) in v.iter_mut().zip(row).skip(pc) {
                if !f.is_zero(r) {
                    *x = f.sub(x, &f.mul(&factor, r));
                }
            }
        }
        v
    }

    pub fn contains_vector(&self, v: &[K::Elem]) -> bool {
        v.len() == self.ambient && self.reduce(v).iter().all(|x| self.field.is_zero(x))
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Self) -> bool {
        self.ambient == other.ambient && other.rows.iter().all(|r| self.contains_vector(r))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let rows = self.rows.iter().chain(&other.rows).cloned().collect();
        Self::from_rows(&self.field, self.ambient, rows)
    }

    /// Vectors orthogonal to every basis row under the standard pairing.
    pub fn annihilator(&self) -> Self {
        let rows = kernel(&self.field, &self.rows, self.ambient);
        Self::from_rows(&self.field, self.ambient, rows).expect("kernel vectors have ambient length")
    }

    /// `A ∩ B`, computed as the annihilator of `ann(A) + ann(B)`.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        if self.contains(other) {
            return Ok(other.clone());
        }
        if other.contains(self) {
            return Ok(self.clone());
        }
        let stacked: Vec<_> = kernel(&self.field, &self.rows, self.ambient)
            .into_iter()
            .chain(kernel(&self.field, &other.rows, self.ambient))
            .collect();
        let rows = kernel(&self.field, &stacked, self.ambient);
        Self::from_rows(&self.field, self.ambient, rows)
    }

    /// Image under `v ↦ v · M` where `matrix` has `ambient` rows of length `target`.
    pub fn map_right(&self, matrix: &[Vec<K::Elem>], target: usize) -> Result<Self> {
        if matrix.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: matrix.len(),
            });
        }
        let f = &self.field;
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut out = vec![f.zero(); target];
                for (a, mrow) in row.iter().zip(matrix) {
                    if f.is_zero(a) {
                        continue;
                    }
                    for (o, m) in out.iter_mut().zip(mrow) {
                        *o = f.add(o, &f.mul(a, m));
                    }
                }
                out
            })
            .collect();
        Self::from_rows(f, target, rows)
    }
}

impl<K: Field> PartialOrd for Subspace<K> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: dimension, then pivot set, then basis entries row by row.
/// Within one Schubert cell this matches the enumeration order.
impl<K: Field> Ord for Subspace<K> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ambient
            .cmp(&other.ambient)
            .then_with(|| self.rows.len().cmp(&other.rows.len()))
            .then_with(|| self.pivots.cmp(&other.pivots))
            .then_with(|| self.rows.cmp(&other.rows))
    }
}

/// Sum of a sequence of subspaces of `K^ambient`.
pub fn span_sum_all<'a, K: Field + 'a>(
    field: &K,
    ambient: usize,
    spaces: impl IntoIterator<Item = &'a Subspace<K>>,
) -> Result<Subspace<K>> {
    let mut rows = Vec::new();
    for s in spaces {
        if s.ambient != ambient || s.field != *field {
            return Err(Error::AmbientMismatch);
        }
        rows.extend(s.rows.iter().cloned());
    }
    Subspace::from_rows(field, ambient, rows)
}

/// Intersection of a non-empty sequence of subspaces.
pub fn span_intersect_all<'a, K: Field + 'a>(
    spaces: impl IntoIterator<Item = &'a Subspace<K>>,
) -> Option<Result<Subspace<K>>> {
    let mut iter = spaces.into_iter();
    let first = iter.next()?.clone();
    Some(iter.try_fold(first, |acc, s| acc.intersect(s)))
}

/// Returns `C` with `A ⊕ C = Q` and `T ⊆ C`.
///
/// `C` starts from a basis of `T` and is extended greedily by basis rows of
/// `Q` that are independent of `A + C`.
pub fn complement_through<K: Field>(q: &Subspace<K>, a: &Subspace<K>, t: &Subspace<K>) -> Result<Subspace<K>> {
    q.check_compatible(a)?;
    q.check_compatible(t)?;
    if !q.contains(a) {
        return Err(Error::ComplementBaseNotInQ);
    }
    if !q.contains(t) {
        return Err(Error::ComplementTargetNotInQ);
    }
    if !a.intersect(t)?.is_zero() {
        return Err(Error::ComplementNotTransverse);
    }
    let mut running = a.sum(t)?;
    let mut c_rows: Vec<_> = t.rows.clone();
    for row in &q.rows {
        if running.contains_vector(row) {
            continue;
        }
        c_rows.push(row.clone());
        running = running.sum(&Subspace::from_rows(&q.field, q.ambient, vec![row.clone()])?)?;
    }
    Subspace::from_rows(&q.field, q.ambient, c_rows)
}

//! Enumeration of `Gr(k, F_q^n)` through reduced row-echelon normal forms.
//!
//! Subspaces are produced cell by cell: pivot sets in lexicographic order,
//! and within a pivot set the free entries run like an odometer (row-major,
//! last position fastest). Shards are contiguous index ranges of one cell.

use alloc::vec;
use alloc::vec::Vec;

use super::Subspace;
use crate::error::{Error, Result};
use crate::field::Field;

/// Number of `k`-dimensional subspaces of `F_q^n`, saturating at `u128::MAX`.
pub fn gaussian_binomial(n: usize, k: usize, q: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let q = u128::from(q);
    // [n k]_q = prod_{i<k} (q^{n-i} - 1) / (q^{i+1} - 1), exact at every step.
    let mut acc: u128 = 1;
    for i in 0..k {
        let Some(num) = checked_pow(q, n - i).map(|v| v - 1) else {
            return u128::MAX;
        };
        let den = checked_pow(q, i + 1).expect("denominator below numerator") - 1;
        let Some(prod) = acc.checked_mul(num) else {
            return u128::MAX;
        };
        acc = prod / den;
    }
    acc
}

fn checked_pow(base: u128, exp: usize) -> Option<u128> {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

/// Advances `comb` (strictly increasing, values below `n`) to the next
/// combination in lexicographic order.
pub fn next_combination(comb: &mut [usize], n: usize) -> bool {
    let k = comb.len();
    for i in (0..k).rev() {
        if comb[i] < n - k + i {
            comb[i] += 1;
            for j in i + 1..k {
                comb[j] = comb[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn free_positions(n: usize, pivots: &[usize]) -> Vec<(usize, usize)> {
    let mut is_pivot = vec![false; n];
    for &c in pivots {
        is_pivot[c] = true;
    }
    let mut out = Vec::new();
    for (row, &pc) in pivots.iter().enumerate() {
        out.extend((pc + 1..n).filter(|&c| !is_pivot[c]).map(|c| (row, c)));
    }
    out
}

/// A contiguous slice `[start, end)` of one Schubert cell.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Shard {
    pub index: usize,
    pub pivots: Vec<usize>,
    pub start: u64,
    pub end: u64,
}

impl Shard {
    pub fn len(&self) -> u64 {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.start == self.end
    }
}

/// Splits the enumeration of `k`-dimensional subspaces of `F_q^n` into
/// shards of at most `chunk` subspaces each, in enumeration order.
pub fn plan_shards(n: usize, k: usize, q: u64, chunk: u64) -> Vec<Shard> {
    assert!(chunk > 0 && k <= n);
    let mut shards = Vec::new();
    let mut pivots: Vec<usize> = (0..k).collect();
    loop {
        let free = free_positions(n, &pivots).len();
        let size = checked_pow(u128::from(q), free)
            .and_then(|v| u64::try_from(v).ok())
            .expect("cell size fits in u64; callers check the budget first");
        let mut start = 0;
        while start < size {
            let end = size.min(start + chunk);
            shards.push(Shard {
                index: shards.len(),
                pivots: pivots.clone(),
                start,
                end,
            });
            start = end;
        }
        if !next_combination(&mut pivots, n) {
            break;
        }
    }
    shards
}

/// Walks the subspaces of one Schubert cell, keeping a reusable RREF matrix.
pub struct CellWalker<K: Field> {
    elems: Vec<K::Elem>,
    pivots: Vec<usize>,
    free: Vec<(usize, usize)>,
    digits: Vec<usize>,
    rows: Vec<Vec<K::Elem>>,
}

impl<K: Field> CellWalker<K> {
    pub fn new(field: &K, n: usize, pivots: &[usize]) -> Result<Self> {
        let elems = field.elements().ok_or(Error::InfiniteField)?;
        let rows = pivots
            .iter()
            .map(|&pc| {
                let mut r = vec![field.zero(); n];
                r[pc] = field.one();
                r
            })
            .collect();
        let free = free_positions(n, pivots);
        Ok(CellWalker {
            elems,
            pivots: pivots.to_vec(),
            digits: vec![0; free.len()],
            free,
            rows,
        })
    }

    /// Jumps to the subspace with the given index inside the cell.
    pub fn seek(&mut self, mut index: u64) {
        let q = self.elems.len() as u64;
        for j in (0..self.free.len()).rev() {
            let d = (index % q) as usize;
            index /= q;
            self.digits[j] = d;
            let (r, c) = self.free[j];
            self.rows[r][c] = self.elems[d].clone();
        }
    }

    /// Steps to the next subspace; `false` once the cell wraps around.
    pub fn advance(&mut self) -> bool {
        let q = self.elems.len();
        for j in (0..self.free.len()).rev() {
            let (r, c) = self.free[j];
            self.digits[j] += 1;
            if self.digits[j] < q {
                self.rows[r][c] = self.elems[self.digits[j]].clone();
                return true;
            }
            self.digits[j] = 0;
            self.rows[r][c] = self.elems[0].clone();
        }
        false
    }

    pub fn rows(&self) -> &[Vec<K::Elem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn cell_size(&self) -> u128 {
        checked_pow(self.elems.len() as u128, self.free.len()).unwrap_or(u128::MAX)
    }
}

/// Iterator over all `k`-dimensional subspaces of `F_q^n` in canonical order.
pub struct Grassmannian<K: Field> {
    field: K,
    n: usize,
    pivots: Vec<usize>,
    walker: Option<CellWalker<K>>,
    pending: bool,
}

impl<K: Field> Iterator for Grassmannian<K> {
    type Item = Subspace<K>;

    fn next(&mut self) -> Option<Subspace<K>> {
        let walker = self.walker.as_mut()?;
        if !self.pending
            && !walker.advance() {
                if !next_combination(&mut self.pivots, self.n) {
                    self.walker = None;
                    return None;
                }
                *walker = CellWalker::new(&self.field, self.n, &self.pivots).expect("finite field checked");
            }
        self.pending = false;
        Some(Subspace::from_rref_unchecked(
            &self.field,
            self.n,
            walker.rows().to_vec(),
            walker.pivots().to_vec(),
        ))
    }
}

/// Every `k`-dimensional subspace of `F_q^n` exactly once.
///
/// Fails before producing anything when `[n k]_q` exceeds `cap`.
pub fn enumerate_subspaces<K: Field>(field: &K, n: usize, k: usize, cap: u64) -> Result<Grassmannian<K>> {
    if k > n {
        return Err(Error::InvalidParameters(alloc::format!("dimension {k} exceeds ambient {n}")));
    }
    let q = field.elements().ok_or(Error::InfiniteField)?.len() as u64;
    let count = gaussian_binomial(n, k, q);
    if count > u128::from(cap) {
        return Err(Error::BudgetExceeded {
            needed: count,
            cap,
            ranks_excluded: None,
        });
    }
    let pivots: Vec<usize> = (0..k).collect();
    let walker = CellWalker::new(field, n, &pivots)?;
    Ok(Grassmannian {
        field: field.clone(),
        n,
        pivots,
        walker: Some(walker),
        pending: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rationals};
    use alloc::collections::BTreeSet;

    #[test]
    fn small_counts() {
        assert_eq!(gaussian_binomial(2, 1, 2), 3);
        assert_eq!(gaussian_binomial(3, 3, 2), 1);
        assert_eq!(gaussian_binomial(4, 2, 2), 35);
        assert_eq!(gaussian_binomial(10, 3, 2), 6_347_715);
        assert_eq!(gaussian_binomial(10, 2, 2), 174_251);
        assert_eq!(gaussian_binomial(3, 5, 2), 0);
        assert_eq!(gaussian_binomial(200, 100, 3), u128::MAX);
    }

    #[test]
    fn enumeration_matches_counts() {
        let f = Fp::gf2();
        assert_eq!(enumerate_subspaces(&f, 2, 1, 100).unwrap().count(), 3);
        let full: Vec<_> = enumerate_subspaces(&f, 3, 3, 100).unwrap().collect();
        assert_eq!(full, vec![Subspace::full(&f, 3)]);
        assert_eq!(enumerate_subspaces(&f, 4, 2, 100).unwrap().count(), 35);
        let zero: Vec<_> = enumerate_subspaces(&f, 4, 0, 100).unwrap().collect();
        assert_eq!(zero, vec![Subspace::zero(&f, 4)]);
    }

    #[test]
    fn no_duplicates_and_gaussian_counts() {
        for q in [2u32, 3] {
            let f = Fp::new(q).unwrap();
            for n in 0..=6 {
                for k in 0..=n {
                    let expected = gaussian_binomial(n, k, u64::from(q));
                    if expected > 20_000 {
                        continue;
                    }
                    let all: Vec<_> = enumerate_subspaces(&f, n, k, u64::MAX).unwrap().collect();
                    assert_eq!(all.len() as u128, expected, "q={q} n={n} k={k}");
                    // Sorted canonical order and every element is a valid RREF.
                    assert!(all.windows(2).all(|w| w[0] < w[1]));
                    let set: BTreeSet<_> = all.iter().map(|s| s.basis().to_vec()).collect();
                    assert_eq!(set.len(), all.len());
                    for s in &all {
                        let again = Subspace::from_rows(&f, n, s.basis().to_vec()).unwrap();
                        assert_eq!(&again, s);
                    }
                }
            }
        }
    }

    #[test]
    fn budget_and_field_errors() {
        let f = Fp::gf2();
        assert!(matches!(
            enumerate_subspaces(&f, 10, 3, 1000),
            Err(Error::BudgetExceeded { needed: 6_347_715, .. })
        ));
        assert!(matches!(enumerate_subspaces(&Rationals, 3, 1, 1000), Err(Error::InfiniteField)));
    }

    #[test]
    fn shards_partition_the_enumeration() {
        let f = Fp::gf3();
        let (n, k) = (5, 2);
        let shards = plan_shards(n, k, 3, 7);
        let total: u64 = shards.iter().map(Shard::len).sum();
        assert_eq!(u128::from(total), gaussian_binomial(n, k, 3));
        let mut from_shards = Vec::new();
        for shard in &shards {
            let mut w = CellWalker::new(&f, n, &shard.pivots).unwrap();
            w.seek(shard.start);
            for i in shard.start..shard.end {
                from_shards.push(Subspace::from_rows(&f, n, w.rows().to_vec()).unwrap());
                let more = w.advance();
                assert!(more || i + 1 == shard.end);
            }
        }
        let direct: Vec<_> = enumerate_subspaces(&f, n, k, u64::MAX).unwrap().collect();
        assert_eq!(from_shards, direct);
    }
}

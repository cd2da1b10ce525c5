//! Slice rank, `𝒫_f` and `L_f` for cubics over prime fields.
//!
//! Rank `r` is found by scanning `Gr(r, F_q^n)` for `r = 0, 1, 2, …` and
//! testing `f ∈ (P)` for every candidate. Each pass is split into
//! [`Shard`]s; a [`ShardExecutor`] decides how shards are run (serially
//! here, in parallel and resumably in the `slicerank` crate). Results are
//! always reassembled in shard order, so they do not depend on scheduling.

use alloc::vec;
use alloc::vec::Vec;

use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec, Fp};
use crate::ideal::ideal_decomposition;
use crate::linalg::{gaussian_binomial, plan_shards, span_intersect_all, span_sum_all, CellWalker, Shard, Subspace};
use crate::poly::{binomial, Polynomial};

pub const DEFAULT_MAX_VISITS: u64 = 100_000_000;
pub const DEFAULT_SHARD_CHUNK: u64 = 1 << 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_visits: u64,
    pub shard_chunk: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_visits: DEFAULT_MAX_VISITS,
            shard_chunk: DEFAULT_SHARD_CHUNK,
        }
    }
}

impl SearchBudget {
    pub fn with_max_visits(max_visits: u64) -> Self {
        SearchBudget {
            max_visits,
            ..Self::default()
        }
    }
}

/// Membership test `f ∈ (P)` for a fixed cubic, specialised for the search
/// loop: `P` arrives as an RREF matrix, the pivot variables are solved for
/// and `f` is expanded into a dense cubic array over the free variables.
#[derive(Clone, Debug)]
pub struct CubicMembership {
    p: u32,
    n: usize,
    small: bool,
    terms: Vec<(u32, [usize; 3])>,
    acc: Vec<u64>,
    touched: Vec<usize>,
    images: Vec<Vec<(usize, u32)>>,
    pivot_row: Vec<Option<usize>>,
}

impl CubicMembership {
    pub fn new(f: &Polynomial<Fp>) -> Result<Self> {
        if f.degree() != 3 {
            return Err(Error::NotCubic(f.degree()));
        }
        let n = f.num_vars();
        let terms = f
            .terms()
            .map(|(m, &c)| {
                let v = m.vars();
                (c, [v[0], v[1], v[2]])
            })
            .collect();
        let p = f.field().modulus();
        Ok(CubicMembership {
            p,
            n,
            // p^4 < 2^32, so billions of unreduced products fit in a u64.
            small: p < 256,
            terms,
            acc: vec![0; n * n * n],
            touched: Vec::new(),
            images: vec![Vec::new(); n],
            pivot_row: vec![None; n],
        })
    }

    #[inline]
    fn mulmod(&self, a: u64, b: u64) -> u64 {
        if self.small {
            a * b
        } else {
            a * b % u64::from(self.p)
        }
    }

    /// `f ∈ (span of rows)`, where `rows` is in RREF with the given pivots.
    pub fn contains(&mut self, rows: &[Vec<u32>], pivots: &[usize]) -> bool {
        let n = self.n;
        let p = self.p;
        for v in 0..n {
            self.pivot_row[v] = None;
        }
        for (i, &c) in pivots.iter().enumerate() {
            self.pivot_row[c] = Some(i);
        }
        for v in 0..n {
            let img = &mut self.images[v];
            img.clear();
            match self.pivot_row[v] {
                None => img.push((v, 1)),
                Some(i) => {
                    // x_v = −Σ_{free j} row[j] x_j
                    for (j, &a) in rows[i].iter().enumerate() {
                        if j != v && a != 0 {
                            img.push((j, p - a));
                        }
                    }
                }
            }
        }
        let images = core::mem::take(&mut self.images);
        let mut acc = core::mem::take(&mut self.acc);
        for &(c, [a, b, d]) in &self.terms {
            for &(i, ci) in &images[a] {
                let c1 = self.mulmod(u64::from(c), u64::from(ci));
                for &(j, cj) in &images[b] {
                    let c2 = self.mulmod(c1, u64::from(cj));
                    for &(k, ck) in &images[d] {
                        let (mut x, mut y, mut z) = (i, j, k);
                        if x > y {
                            core::mem::swap(&mut x, &mut y);
                        }
                        if y > z {
                            core::mem::swap(&mut y, &mut z);
                        }
                        if x > y {
                            core::mem::swap(&mut x, &mut y);
                        }
                        let idx = (x * n + y) * n + z;
                        if acc[idx] == 0 {
                            self.touched.push(idx);
                        }
                        let term = self.mulmod(c2, u64::from(ck));
                        acc[idx] = if self.small {
                            acc[idx] + term
                        } else {
                            (acc[idx] + term) % u64::from(p)
                        };
                    }
                }
            }
        }
        let mut zero = true;
        for &idx in &self.touched {
            if !acc[idx].is_multiple_of(u64::from(p)) {
                zero = false;
            }
            acc[idx] = 0;
        }
        self.touched.clear();
        self.images = images;
        self.acc = acc;
        zero
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanMode {
    /// Stop at the first witness.
    First,
    /// Collect every witness.
    All,
}

/// Result of scanning one shard.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShardOutcome {
    pub shard: usize,
    pub visits: u64,
    pub witnesses: Vec<Subspace<Fp>>,
}

/// One rank pass over `Gr(rank, F_q^n)`.
#[derive(Clone, Debug)]
pub struct RankPass<'a> {
    pub f: &'a Polynomial<Fp>,
    pub rank: usize,
    pub shards: Vec<Shard>,
}

impl<'a> RankPass<'a> {
    pub fn new(f: &'a Polynomial<Fp>, rank: usize, chunk: u64) -> Self {
        let q = u64::from(f.field().modulus());
        RankPass {
            f,
            rank,
            shards: plan_shards(f.num_vars(), rank, q, chunk),
        }
    }

    pub fn total(&self) -> u64 {
        self.shards.iter().map(Shard::len).sum()
    }

    /// Scans one shard with a fresh tester.
    pub fn scan(&self, shard: &Shard, mode: ScanMode) -> ShardOutcome {
        let mut tester = CubicMembership::new(self.f).expect("pass is built from a cubic");
        self.scan_with(&mut tester, shard, mode)
    }

    pub fn scan_with(&self, tester: &mut CubicMembership, shard: &Shard, mode: ScanMode) -> ShardOutcome {
        let field = *self.f.field();
        let n = self.f.num_vars();
        let mut walker = CellWalker::new(&field, n, &shard.pivots).expect("prime fields are finite");
        walker.seek(shard.start);
        let mut visits = 0;
        let mut witnesses = Vec::new();
        for _ in shard.start..shard.end {
            visits += 1;
            if tester.contains(walker.rows(), walker.pivots()) {
                witnesses.push(Subspace::from_rref_unchecked(
                    &field,
                    n,
                    walker.rows().to_vec(),
                    walker.pivots().to_vec(),
                ));
                if mode == ScanMode::First {
                    break;
                }
            }
            walker.advance();
        }
        ShardOutcome {
            shard: shard.index,
            visits,
            witnesses,
        }
    }
}

/// Runs the shards of a rank pass.
///
/// In [`ScanMode::All`] every shard must be reported. In
/// [`ScanMode::First`] it is enough to report every shard up to and
/// including the first one (in shard order) that holds a witness.
pub trait ShardExecutor {
    fn run(&self, pass: &RankPass<'_>, mode: ScanMode) -> Result<Vec<ShardOutcome>>;
}

/// Runs shards one after another on the calling thread.
#[derive(Clone, Copy, Debug, Default)]
pub struct SerialExecutor;

impl ShardExecutor for SerialExecutor {
    fn run(&self, pass: &RankPass<'_>, mode: ScanMode) -> Result<Vec<ShardOutcome>> {
        let mut tester = CubicMembership::new(pass.f)?;
        let mut out = Vec::new();
        for shard in &pass.shards {
            let o = pass.scan_with(&mut tester, shard, mode);
            let found = !o.witnesses.is_empty();
            out.push(o);
            if found && mode == ScanMode::First {
                break;
            }
        }
        Ok(out)
    }
}

/// Aggregated result of one pass: witnesses in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PassSummary {
    pub visits: u64,
    pub shards: usize,
    pub witnesses: Vec<Subspace<Fp>>,
}

fn summarize(mut outcomes: Vec<ShardOutcome>, mode: ScanMode) -> PassSummary {
    outcomes.sort_by_key(|o| o.shard);
    let visits = outcomes.iter().map(|o| o.visits).sum();
    let shards = outcomes.len();
    let mut witnesses: Vec<_> = match mode {
        ScanMode::All => outcomes.into_iter().flat_map(|o| o.witnesses).collect(),
        ScanMode::First => outcomes
            .into_iter()
            .find_map(|o| o.witnesses.into_iter().next())
            .into_iter()
            .collect(),
    };
    witnesses.sort();
    witnesses.dedup();
    PassSummary {
        visits,
        shards,
        witnesses,
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct SearchStats {
    pub visits: u64,
    pub visits_per_rank: Vec<u64>,
    pub shards: usize,
    pub wall_seconds: Option<f64>,
}

/// Certified slice rank over the base field.
#[derive(Clone, Debug, PartialEq)]
pub struct SliceCertificate {
    pub f: Polynomial<Fp>,
    pub rank: usize,
    pub witness: Subspace<Fp>,
    /// `f = Σ ℓ_i q_i` with `ℓ_i` the witness basis.
    pub decomposition: Option<Vec<(Vec<u32>, Polynomial<Fp>)>>,
    /// Largest rank below `rank` that was searched exhaustively.
    pub ranks_excluded: Option<usize>,
    pub stats: SearchStats,
}

impl SliceCertificate {
    pub fn field(&self) -> FieldSpec {
        self.f.field().spec()
    }
}

/// Exact values of the bounds attached to rank `r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundProfile {
    pub r: usize,
    /// `n(r) = r² + (r+1)²/4 + r`, the upper bound on `dim L_f`.
    pub n_of_r: Rational64,
    /// `C(r+1, 2) + r`, the lower bound on `c(r)` quoted in the introduction.
    pub c_lower_intro: i64,
    /// `C(r+1, 2) + r + 1 = dim L_{f_{r+1}}`.
    pub c_lower_fn: i64,
    /// `r(r+3)/2`, the essential-variable bound with three disjoint members.
    pub estimate_r33: Rational64,
    /// `(r+1)²/4 + r`, the bound on `dim W` for irredundant subcollections.
    pub w_bound: Rational64,
}

pub fn bound_profile(r: usize) -> BoundProfile {
    let ri = r as i64;
    let w_bound = Rational64::new((ri + 1) * (ri + 1), 4) + Rational64::from_integer(ri);
    let choose = binomial(r + 1, 2) as i64;
    BoundProfile {
        r,
        n_of_r: Rational64::from_integer(ri * ri) + w_bound,
        c_lower_intro: choose + ri,
        c_lower_fn: choose + ri + 1,
        estimate_r33: Rational64::new(ri * (ri + 3), 2),
        w_bound,
    }
}

/// `𝒫_f`, `L_f` and the comparison against `n(r)`.
#[derive(Clone, Debug, PartialEq)]
pub struct LfReport {
    pub f: Polynomial<Fp>,
    pub rank: usize,
    pub minimal_spaces: Vec<Subspace<Fp>>,
    pub l_space: Subspace<Fp>,
    pub l_dim: usize,
    pub bound: BoundProfile,
    pub stats: SearchStats,
}

impl LfReport {
    pub fn field(&self) -> FieldSpec {
        self.f.field().spec()
    }

    /// `dim L_f ≤ n(r)`. A `false` here is a counterexample, not an error.
    pub fn satisfies_bound(&self) -> bool {
        Rational64::from_integer(self.l_dim as i64) <= self.bound.n_of_r
    }
}

fn check_budget(f: &Polynomial<Fp>, rank: usize, spent: u64, budget: &SearchBudget) -> Result<()> {
    let q = u64::from(f.field().modulus());
    let needed = u128::from(spent) + gaussian_binomial(f.num_vars(), rank, q);
    if needed > u128::from(budget.max_visits) {
        return Err(Error::BudgetExceeded {
            needed,
            cap: budget.max_visits,
            ranks_excluded: rank.checked_sub(1),
        });
    }
    Ok(())
}

fn with_excluded(err: Error, rank: usize) -> Error {
    match err {
        Error::DeadlineReached { visits, .. } => Error::DeadlineReached {
            visits,
            ranks_excluded: rank.checked_sub(1),
        },
        other => other,
    }
}

/// Minimal `r` with `f ∈ (P)` for some `r`-dimensional `P`, with a witness.
pub fn slice_rank_with<E: ShardExecutor>(
    f: &Polynomial<Fp>,
    budget: &SearchBudget,
    executor: &E,
) -> Result<SliceCertificate> {
    CubicMembership::new(f)?;
    let mut stats = SearchStats::default();
    for rank in 0..=f.num_vars() {
        check_budget(f, rank, stats.visits, budget)?;
        let pass = RankPass::new(f, rank, budget.shard_chunk);
        let outcomes = executor.run(&pass, ScanMode::First).map_err(|e| with_excluded(e, rank))?;
        let summary = summarize(outcomes, ScanMode::First);
        stats.visits += summary.visits;
        stats.visits_per_rank.push(summary.visits);
        stats.shards += summary.shards;
        if let Some(witness) = summary.witnesses.into_iter().next() {
            let decomposition = ideal_decomposition(f, &witness)?;
            return Ok(SliceCertificate {
                f: f.clone(),
                rank,
                witness,
                decomposition,
                ranks_excluded: rank.checked_sub(1),
                stats,
            });
        }
    }
    unreachable!("f lies in the ideal of the full space")
}

pub fn slice_rank(f: &Polynomial<Fp>, budget: &SearchBudget) -> Result<SliceCertificate> {
    slice_rank_with(f, budget, &SerialExecutor)
}

/// Every `r`-dimensional `P` with `f ∈ (P)`, in canonical order.
pub fn minimal_spaces_with<E: ShardExecutor>(
    f: &Polynomial<Fp>,
    rank: usize,
    budget: &SearchBudget,
    executor: &E,
) -> Result<Vec<Subspace<Fp>>> {
    CubicMembership::new(f)?;
    check_budget(f, rank, 0, budget)?;
    let pass = RankPass::new(f, rank, budget.shard_chunk);
    let outcomes = executor.run(&pass, ScanMode::All)?;
    Ok(summarize(outcomes, ScanMode::All).witnesses)
}

pub fn minimal_spaces(f: &Polynomial<Fp>, rank: usize, budget: &SearchBudget) -> Result<Vec<Subspace<Fp>>> {
    minimal_spaces_with(f, rank, budget, &SerialExecutor)
}

/// Slice rank, the full set `𝒫_f` and `L_f` in one sweep: each rank pass is
/// exhaustive, so the first non-empty pass is `𝒫_f` itself.
pub fn l_space_with<E: ShardExecutor>(f: &Polynomial<Fp>, budget: &SearchBudget, executor: &E) -> Result<LfReport> {
    CubicMembership::new(f)?;
    let field = *f.field();
    let n = f.num_vars();
    let mut stats = SearchStats::default();
    for rank in 0..=n {
        check_budget(f, rank, stats.visits, budget)?;
        let pass = RankPass::new(f, rank, budget.shard_chunk);
        let outcomes = executor.run(&pass, ScanMode::All).map_err(|e| with_excluded(e, rank))?;
        let summary = summarize(outcomes, ScanMode::All);
        stats.visits += summary.visits;
        stats.visits_per_rank.push(summary.visits);
        stats.shards += summary.shards;
        if !summary.witnesses.is_empty() {
            let l_space = span_sum_all(&field, n, &summary.witnesses)?;
            return Ok(LfReport {
                f: f.clone(),
                rank,
                l_dim: l_space.dim(),
                l_space,
                minimal_spaces: summary.witnesses,
                bound: bound_profile(rank),
                stats,
            });
        }
    }
    unreachable!("f lies in the ideal of the full space")
}

pub fn l_space(f: &Polynomial<Fp>, budget: &SearchBudget) -> Result<LfReport> {
    l_space_with(f, budget, &SerialExecutor)
}

/// Scans `spaces` in order, keeping a member whenever it strictly shrinks
/// the running intersection, and stops once the intersection is zero.
pub fn greedy_irredundant_subcollection<K: Field>(spaces: &[Subspace<K>]) -> Vec<Subspace<K>> {
    let mut kept: Vec<Subspace<K>> = Vec::new();
    let mut running: Option<Subspace<K>> = None;
    for s in spaces {
        let next = match &running {
            None => s.clone(),
            Some(r) => r.intersect(s).expect("members share an ambient"),
        };
        if running.as_ref().is_none_or(|r| next.dim() < r.dim()) {
            kept.push(s.clone());
            let done = next.is_zero();
            running = Some(next);
            if done {
                break;
            }
        }
    }
    kept
}

/// Outcome of the `dim W ≤ (r+1)²/4 + r` spot check on `𝒫_f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrredundantCheck {
    pub members: usize,
    pub w_dim: usize,
    pub bound: Rational64,
    pub holds: bool,
}

/// `None` when the greedy subcollection never reaches a zero intersection.
pub fn irredundant_sum_check(report: &LfReport) -> Option<IrredundantCheck> {
    let kept = greedy_irredundant_subcollection(&report.minimal_spaces);
    let meet = span_intersect_all(&kept)?.ok()?;
    if !meet.is_zero() {
        return None;
    }
    let field = *report.f.field();
    let w = span_sum_all(&field, report.f.num_vars(), &kept).ok()?;
    let bound = report.bound.w_bound;
    Some(IrredundantCheck {
        members: kept.len(),
        w_dim: w.dim(),
        bound,
        holds: Rational64::from_integer(w.dim() as i64) <= bound,
    })
}

/// Indices of three pairwise-disjoint members, if any.
pub fn pairwise_disjoint_triple<K: Field>(spaces: &[Subspace<K>]) -> Option<[usize; 3]> {
    let disjoint = |a: &Subspace<K>, b: &Subspace<K>| a.intersect(b).map(|s| s.is_zero()).unwrap_or(false);
    for i in 0..spaces.len() {
        for j in i + 1..spaces.len() {
            if !disjoint(&spaces[i], &spaces[j]) {
                continue;
            }
            for k in j + 1..spaces.len() {
                if disjoint(&spaces[i], &spaces[k]) && disjoint(&spaces[j], &spaces[k]) {
                    return Some([i, j, k]);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::ideal_membership;
    use crate::linalg::enumerate_subspaces;
    use crate::poly::Monomial;

    fn cubic(f: &Fp, n: usize, terms: &[[usize; 3]]) -> Polynomial<Fp> {
        Polynomial::from_terms(f, n, 3, terms.iter().map(|t| (Monomial::from_vars(n, t), 1))).unwrap()
    }

    #[test]
    fn tester_agrees_with_generic_membership() {
        for p in [2u32, 3, 5, 257] {
            let field = Fp::new(p).unwrap();
            let f = Polynomial::from_terms(
                &field,
                4,
                3,
                [
                    (Monomial::from_vars(4, &[0, 1, 2]), 1),
                    (Monomial::from_vars(4, &[1, 1, 3]), field.from_i64(-1)),
                    (Monomial::from_vars(4, &[0, 0, 0]), 2 % p),
                ],
            )
            .unwrap();
            let mut tester = CubicMembership::new(&f).unwrap();
            for k in 0..=2 {
                for s in enumerate_subspaces(&field, 4, k, u64::MAX).unwrap().take(3000) {
                    assert_eq!(tester.contains(s.basis(), s.pivots()), ideal_membership(&f, &s).unwrap());
                }
            }
        }
    }

    #[test]
    fn ranks_of_small_cubics() {
        let f = Fp::gf2();
        let budget = SearchBudget::default();
        let zero = Polynomial::zero(&f, 3, 3);
        assert_eq!(slice_rank(&zero, &budget).unwrap().rank, 0);

        let f2 = cubic(&f, 3, &[[0, 1, 2]]);
        let cert = slice_rank(&f2, &budget).unwrap();
        assert_eq!(cert.rank, 1);
        assert_eq!(cert.ranks_excluded, Some(0));
        assert!(ideal_membership(&f2, &cert.witness).unwrap());
        let parts = cert.decomposition.unwrap();
        let mut sum = Polynomial::zero(&f, 3, 3);
        for (l, q) in &parts {
            sum = sum.add(&Polynomial::linear(&f, l).mul(q).unwrap()).unwrap();
        }
        assert_eq!(sum, f2);
    }

    #[test]
    fn minimal_spaces_of_a_product() {
        let f = Fp::gf2();
        let x123 = cubic(&f, 3, &[[0, 1, 2]]);
        let spaces = minimal_spaces(&x123, 1, &SearchBudget::default()).unwrap();
        let expected: Vec<_> = (0..3).map(|i| Subspace::coordinate(&f, 3, &[i])).collect();
        let mut sorted = expected.clone();
        sorted.sort();
        assert_eq!(spaces, sorted);
        let report = l_space(&x123, &SearchBudget::default()).unwrap();
        assert_eq!(report.l_dim, 3);
        assert!(report.satisfies_bound());
        assert_eq!(report.stats.visits_per_rank, vec![1, 7]);
    }

    #[test]
    fn budget_exhaustion_reports_progress() {
        let f = Fp::gf2();
        let f3 = cubic(&f, 6, &[[0, 1, 3], [0, 2, 4], [1, 2, 5]]);
        let err = slice_rank(&f3, &SearchBudget::with_max_visits(100)).unwrap_err();
        assert_eq!(
            err,
            Error::BudgetExceeded {
                needed: 1 + 63 + 651,
                cap: 100,
                ranks_excluded: Some(1)
            }
        );
        let quadratic = Polynomial::from_terms(&f, 2, 2, [(Monomial::from_vars(2, &[0, 1]), 1)]).unwrap();
        assert_eq!(slice_rank(&quadratic, &SearchBudget::default()), Err(Error::NotCubic(2)));
    }

    #[test]
    fn bound_values() {
        let b1 = bound_profile(1);
        assert_eq!(b1.n_of_r, Rational64::from_integer(3));
        let b3 = bound_profile(3);
        assert_eq!(b3.n_of_r, Rational64::from_integer(16));
        assert_eq!(b3.c_lower_intro, 9);
        assert_eq!(b3.c_lower_fn, 10);
        assert_eq!(b3.estimate_r33, Rational64::from_integer(9));
        let b0 = bound_profile(0);
        assert_eq!(b0.n_of_r, Rational64::new(1, 4));
        assert_eq!(b0.c_lower_intro, 0);
        assert_eq!(bound_profile(2).n_of_r, Rational64::new(33, 4));
    }

    #[test]
    fn greedy_subcollection() {
        let f = Fp::gf2();
        let spaces = vec![
            Subspace::coordinate(&f, 4, &[0, 1]),
            Subspace::coordinate(&f, 4, &[0, 1]),
            Subspace::coordinate(&f, 4, &[0, 2]),
            Subspace::coordinate(&f, 4, &[1, 3]),
            Subspace::coordinate(&f, 4, &[2, 3]),
        ];
        let kept = greedy_irredundant_subcollection(&spaces);
        assert_eq!(kept, vec![spaces[0].clone(), spaces[2].clone(), spaces[3].clone()]);
        assert_eq!(pairwise_disjoint_triple(&spaces), None);
        let lines: Vec<_> = (0..3).map(|i| Subspace::coordinate(&f, 3, &[i])).collect();
        assert_eq!(pairwise_disjoint_triple(&lines), Some([0, 1, 2]));
    }
}

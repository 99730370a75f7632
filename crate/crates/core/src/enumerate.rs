//! Exhaustive, deterministic enumeration of trees rooted at 1 and of
//! G-configurations.
//!
//! Order is fixed: tree-vertex subsets by ascending bitmask over `{2, ..., n}`
//! (bit `v - 2` stands for vertex `v`), trees by lexicographic Prüfer
//! sequence over the subset's sorted labels, and arc assignments by
//! lexicographic tuples of distinct targets for the arc vertices taken in
//! ascending order.

use std::ops::Range;

use num_bigint::BigInt;
use rayon::prelude::*;
use thiserror::Error;

use crate::counting::{binomial, factorial, falling_factorial, power};
use crate::gconfig::{GConfiguration, Slot, ROOT};
use crate::tree::{decode_positions, LabeledRootedTree, Vertex};

/// Largest size the subset bitmask can describe.
pub const MAX_CONFIG_N: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("size must be at least 1")]
    ZeroSize,
    #[error(
        "{what} enumeration at n = {n} exceeds the guard limit {limit} (use --force to override)"
    )]
    LimitExceeded {
        what: &'static str,
        n: usize,
        limit: usize,
    },
    #[error("k = {k} is outside 1..={n}")]
    KOutOfRange { n: usize, k: usize },
}

/// Upper bounds on `n` that keep accidental runs from exploding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guard {
    pub max_tree_n: usize,
    pub max_config_n: usize,
}

impl Default for Guard {
    fn default() -> Self {
        Guard {
            max_tree_n: 10,
            max_config_n: 8,
        }
    }
}

impl Guard {
    /// Only the representational limit remains.
    pub fn unlimited() -> Self {
        Guard {
            max_tree_n: usize::MAX,
            max_config_n: MAX_CONFIG_N,
        }
    }

    pub fn check_trees(&self, n: usize) -> Result<(), EnumError> {
        if n == 0 {
            return Err(EnumError::ZeroSize);
        }
        if n > self.max_tree_n {
            return Err(EnumError::LimitExceeded {
                what: "tree",
                n,
                limit: self.max_tree_n,
            });
        }
        Ok(())
    }

    pub fn check_configs(&self, n: usize) -> Result<(), EnumError> {
        if n == 0 {
            return Err(EnumError::ZeroSize);
        }
        let limit = self.max_config_n.min(MAX_CONFIG_N);
        if n > limit {
            return Err(EnumError::LimitExceeded {
                what: "G-configuration",
                n,
                limit,
            });
        }
        Ok(())
    }
}

/// Cursor over all trees on a sorted label set with a fixed root, in
/// lexicographic Prüfer order.
#[derive(Debug, Clone)]
pub struct TreeEnumerator {
    labels: Vec<Vertex>,
    root_pos: usize,
    seq: Vec<usize>,
    /// Leading sequence positions held fixed (partitioning).
    frozen: usize,
    done: bool,
}

impl TreeEnumerator {
    /// `labels` must be sorted, non-empty, and contain `root`.
    pub fn on_labels(labels: Vec<Vertex>, root: Vertex) -> Self {
        let root_pos = labels
            .binary_search(&root)
            .expect("root must be one of the labels");
        let len = labels.len().saturating_sub(2);
        TreeEnumerator {
            labels,
            root_pos,
            seq: vec![0; len],
            frozen: 0,
            done: false,
        }
    }

    /// Trees on `[n]` whose Prüfer sequence starts with label `first`.
    /// Requires `n >= 3`.
    pub fn with_first_entry(n: usize, first: Vertex) -> Self {
        assert!(n >= 3 && first.0 >= 1 && first.index() <= n);
        let mut e = Self::on_labels(full_labels(n), ROOT);
        e.seq[0] = first.index() - 1;
        e.frozen = 1;
        e
    }

    fn advance(&mut self) {
        let k = self.labels.len();
        for i in (self.frozen..self.seq.len()).rev() {
            if self.seq[i] + 1 < k {
                self.seq[i] += 1;
                return;
            }
            self.seq[i] = 0;
        }
        self.done = true;
    }
}

impl Iterator for TreeEnumerator {
    type Item = LabeledRootedTree;

    fn next(&mut self) -> Option<LabeledRootedTree> {
        if self.done {
            return None;
        }
        let tree = decode_positions(&self.labels, &self.seq, self.root_pos);
        self.advance();
        Some(tree)
    }
}

fn full_labels(n: usize) -> Vec<Vertex> {
    (1..=n as u32).map(Vertex).collect()
}

/// All `n^(n-2)` trees on `[n]` rooted at 1.
pub fn all_trees(n: usize, guard: &Guard) -> Result<TreeEnumerator, EnumError> {
    guard.check_trees(n)?;
    Ok(TreeEnumerator::on_labels(full_labels(n), ROOT))
}

/// Disjoint cursors whose union is `all_trees(n)`, split on the first
/// Prüfer entry.
pub fn tree_partitions(n: usize, guard: &Guard) -> Result<Vec<TreeEnumerator>, EnumError> {
    guard.check_trees(n)?;
    if n < 3 {
        return Ok(vec![TreeEnumerator::on_labels(full_labels(n), ROOT)]);
    }
    Ok((1..=n as u32)
        .map(|first| TreeEnumerator::with_first_entry(n, Vertex(first)))
        .collect())
}

/// Lexicographic cursor over injective maps from `sources` into `targets`.
#[derive(Debug, Clone)]
struct InjectionCursor {
    choice: Vec<usize>,
    used: Vec<bool>,
    started: bool,
}

impl InjectionCursor {
    fn new(sources: usize, targets: usize) -> Self {
        debug_assert!(sources <= targets);
        InjectionCursor {
            choice: vec![0; sources],
            used: vec![false; targets],
            started: false,
        }
    }

    fn advance(&mut self) -> bool {
        if !self.started {
            self.started = true;
            for (i, c) in self.choice.iter_mut().enumerate() {
                *c = i;
                self.used[i] = true;
            }
            return true;
        }
        let r = self.choice.len();
        let t = self.used.len();
        for i in (0..r).rev() {
            let old = self.choice[i];
            self.used[old] = false;
            if let Some(next) = (old + 1..t).find(|&x| !self.used[x]) {
                self.choice[i] = next;
                self.used[next] = true;
                let mut cand = 0;
                for j in i + 1..r {
                    while self.used[cand] {
                        cand += 1;
                    }
                    self.choice[j] = cand;
                    self.used[cand] = true;
                }
                return true;
            }
        }
        false
    }
}

/// Cursor over G-configurations of size `n` whose tree-vertex mask falls in
/// a given range.
#[derive(Debug, Clone)]
pub struct GConfigEnumerator {
    n: usize,
    next_mask: u32,
    end_mask: u32,
    trees: Option<TreeEnumerator>,
    /// Tree part of the current configuration; arc slots are placeholders.
    template: Option<Vec<Slot>>,
    sources: Vec<usize>,
    arcs: InjectionCursor,
}

impl GConfigEnumerator {
    fn with_masks(n: usize, masks: Range<u32>) -> Self {
        GConfigEnumerator {
            n,
            next_mask: masks.start,
            end_mask: masks.end,
            trees: None,
            template: None,
            sources: Vec::new(),
            arcs: InjectionCursor::new(0, 0),
        }
    }

    /// Cursor restricted to a range of subset masks.
    pub fn mask_range(n: usize, masks: Range<u32>, guard: &Guard) -> Result<Self, EnumError> {
        guard.check_configs(n)?;
        let end = masks.end.min(mask_limit(n));
        Ok(Self::with_masks(n, masks.start.min(end)..end))
    }

    fn load_mask(&mut self, mask: u32) {
        let n = self.n;
        let mut labels = vec![ROOT];
        self.sources.clear();
        for v in 2..=n as u32 {
            if mask & (1 << (v - 2)) != 0 {
                labels.push(Vertex(v));
            } else {
                self.sources.push(v as usize);
            }
        }
        self.trees = Some(TreeEnumerator::on_labels(labels, ROOT));
    }

    fn build(&self) -> GConfiguration {
        let mut slots = self.template.clone().expect("template loaded");
        for (&src, &t) in self.sources.iter().zip(&self.arcs.choice) {
            // targets are 2..=n
            slots[src - 1] = Slot::Arc(Vertex(t as u32 + 2));
        }
        GConfiguration::from_slots_unchecked(slots)
    }
}

/// Number of tree-vertex subsets for size `n`, i.e. `2^(n-1)`.
/// Callers keep `n` within `1..=MAX_CONFIG_N`.
fn mask_limit(n: usize) -> u32 {
    u32::try_from(1u64 << (n - 1)).unwrap_or(u32::MAX)
}

impl Iterator for GConfigEnumerator {
    type Item = GConfiguration;

    fn next(&mut self) -> Option<GConfiguration> {
        loop {
            if self.template.is_some() {
                if self.arcs.advance() {
                    return Some(self.build());
                }
                self.template = None;
            }
            if let Some(tree) = self.trees.as_mut().and_then(Iterator::next) {
                let mut slots = vec![Slot::Arc(ROOT); self.n];
                slots[0] = Slot::Root;
                for (p, c) in tree.edges() {
                    slots[c.index() - 1] = Slot::Child(p);
                }
                self.template = Some(slots);
                self.arcs = InjectionCursor::new(self.sources.len(), self.n - 1);
                continue;
            }
            if self.next_mask >= self.end_mask {
                return None;
            }
            let mask = self.next_mask;
            self.next_mask += 1;
            self.load_mask(mask);
        }
    }
}

/// Every G-configuration of size `n`, each exactly once.
pub fn all_gconfigs(n: usize, guard: &Guard) -> Result<GConfigEnumerator, EnumError> {
    GConfigEnumerator::mask_range(n, 0..mask_limit(n.max(1)), guard)
}

/// Splits the subset masks of size `n` into at most `parts` contiguous
/// ranges, in enumeration order.
pub fn mask_partitions(n: usize, parts: usize) -> Vec<Range<u32>> {
    let total = mask_limit(n.max(1)) as u64;
    let parts = (parts.max(1) as u64).min(total);
    (0..parts)
        .map(|i| {
            let lo = total * i / parts;
            let hi = total * (i + 1) / parts;
            lo as u32..hi as u32
        })
        .collect()
}

/// Runs `work` on each item, on `jobs` threads when `jobs > 1`. Results come
/// back in input order regardless of scheduling.
pub fn run_partitioned<P, T, F>(items: Vec<P>, jobs: usize, work: F) -> Vec<T>
where
    P: Send,
    T: Send,
    F: Fn(P) -> T + Sync + Send,
{
    if jobs <= 1 {
        return items.into_iter().map(work).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    pool.install(|| items.into_par_iter().map(work).collect())
}

/// Closed-form number of G-configurations of size `n` with `k` tree
/// vertices: `C(n-1, k-1) * k^(k-2) * (n-1)!/(k-1)!`, reading `k^(k-2)` as 1
/// for `k = 1`.
pub fn gconfig_count_by_k(n: usize, k: usize) -> Result<BigInt, EnumError> {
    if k == 0 || k > n {
        return Err(EnumError::KOutOfRange { n, k });
    }
    let trees = if k >= 2 {
        power(k as u64, (k - 2) as u32)
    } else {
        BigInt::from(1)
    };
    Ok(binomial(n as u64 - 1, k as u64 - 1)
        * trees
        * falling_factorial(n as u64 - 1, (n - k) as u64))
}

/// The same count before fixing the root: `C(n,k) * k^(k-1) * (n-1)!/(k-1)!`.
pub fn rooted_gconfig_count_by_k(n: usize, k: usize) -> Result<BigInt, EnumError> {
    if k == 0 || k > n {
        return Err(EnumError::KOutOfRange { n, k });
    }
    Ok(binomial(n as u64, k as u64)
        * power(k as u64, (k - 1) as u32)
        * (factorial(n as u64 - 1) / factorial(k as u64 - 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn configs(n: usize) -> Vec<GConfiguration> {
        all_gconfigs(n, &Guard::default()).unwrap().collect()
    }

    #[test]
    fn tree_counts() {
        let g = Guard::default();
        assert_eq!(all_trees(1, &g).unwrap().count(), 1);
        assert_eq!(all_trees(2, &g).unwrap().count(), 1);
        assert_eq!(all_trees(3, &g).unwrap().count(), 3);
        let four: BTreeSet<String> = all_trees(4, &g).unwrap().map(|t| t.to_string()).collect();
        assert_eq!(four.len(), 16);
        assert!(all_trees(4, &g)
            .unwrap()
            .all(|t| t.root() == ROOT && t.spans(4)));
    }

    #[test]
    fn tree_partitions_cover_all_trees() {
        let g = Guard::default();
        for n in 1..=6 {
            let whole: Vec<String> = all_trees(n, &g).unwrap().map(|t| t.to_string()).collect();
            let parts: Vec<String> = tree_partitions(n, &g)
                .unwrap()
                .into_iter()
                .flatten()
                .map(|t| t.to_string())
                .collect();
            assert_eq!(whole, parts);
        }
    }

    #[test]
    fn guard_limits() {
        let g = Guard::default();
        assert!(matches!(
            all_trees(11, &g),
            Err(EnumError::LimitExceeded { limit: 10, .. })
        ));
        assert!(matches!(
            all_gconfigs(9, &g),
            Err(EnumError::LimitExceeded { limit: 8, .. })
        ));
        assert!(matches!(all_trees(0, &g), Err(EnumError::ZeroSize)));
        assert!(all_gconfigs(9, &Guard::unlimited()).is_ok());
        assert!(matches!(
            all_gconfigs(33, &Guard::unlimited()),
            Err(EnumError::LimitExceeded { limit: 32, .. })
        ));
    }

    #[test]
    fn injections_are_lexicographic() {
        let mut c = InjectionCursor::new(2, 3);
        let mut seen = Vec::new();
        while c.advance() {
            seen.push(c.choice.clone());
        }
        assert_eq!(
            seen,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![1, 0],
                vec![1, 2],
                vec![2, 0],
                vec![2, 1]
            ]
        );
        let mut empty = InjectionCursor::new(0, 3);
        assert!(empty.advance());
        assert!(!empty.advance());
    }

    #[test]
    fn small_sizes_by_hand() {
        let two: Vec<String> = configs(2).iter().map(|c| c.to_string()).collect();
        assert_eq!(
            two,
            vec!["n=2;V=1;edges=;arcs=2>2", "n=2;V=1,2;edges=1-2;arcs="]
        );

        let three = configs(3);
        assert_eq!(three.len(), 9);
        let per_k = |k| three.iter().filter(|c| c.k() == k).count();
        assert_eq!((per_k(1), per_k(2), per_k(3)), (2, 4, 3));
        let distinct: BTreeSet<String> = three.iter().map(|c| c.to_string()).collect();
        assert_eq!(distinct.len(), 9);

        assert_eq!(configs(1).len(), 1);
        assert!(configs(1)[0].is_spanning());
    }

    #[test]
    fn every_config_validates_and_is_unique() {
        for n in 1..=5 {
            let all = configs(n);
            assert!(all.iter().all(|c| c.violations().is_empty()));
            let distinct: BTreeSet<String> = all.iter().map(|c| c.to_string()).collect();
            assert_eq!(distinct.len(), all.len());
        }
    }

    #[test]
    fn mask_partitions_cover_enumeration() {
        let g = Guard::default();
        for n in 1..=5 {
            let whole: Vec<GConfiguration> = configs(n);
            for parts in [1, 2, 3, 7, 64] {
                let split: Vec<GConfiguration> = mask_partitions(n, parts)
                    .into_iter()
                    .flat_map(|r| GConfigEnumerator::mask_range(n, r, &g).unwrap())
                    .collect();
                assert_eq!(split, whole, "n={n} parts={parts}");
            }
        }
    }

    #[test]
    fn closed_form_small_values() {
        assert_eq!(gconfig_count_by_k(3, 2).unwrap(), BigInt::from(4));
        assert_eq!(gconfig_count_by_k(2, 1).unwrap(), BigInt::from(1));
        for n in 1..=9usize {
            let cayley = if n >= 2 {
                BigInt::from(n).pow(n as u32 - 2)
            } else {
                BigInt::from(1)
            };
            assert_eq!(gconfig_count_by_k(n, n).unwrap(), cayley);
        }
        assert!(matches!(
            gconfig_count_by_k(3, 0),
            Err(EnumError::KOutOfRange { .. })
        ));
        assert!(matches!(
            gconfig_count_by_k(3, 4),
            Err(EnumError::KOutOfRange { .. })
        ));
    }

    #[test]
    fn closed_form_matches_enumeration() {
        for n in 1..=6 {
            let all = configs(n);
            for k in 1..=n {
                let got = all.iter().filter(|c| c.k() == k).count();
                assert_eq!(
                    BigInt::from(got),
                    gconfig_count_by_k(n, k).unwrap(),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn tree_stream_equals_spanning_slice() {
        let g = Guard::default();
        for n in 1..=6 {
            let trees: BTreeSet<String> = all_trees(n, &g)
                .unwrap()
                .map(|t| GConfiguration::spanning(&t).unwrap().to_string())
                .collect();
            let slice: BTreeSet<String> = configs(n)
                .into_iter()
                .filter(|c| c.k() == n)
                .map(|c| c.to_string())
                .collect();
            assert_eq!(trees, slice);
        }
    }

    #[test]
    fn streams_are_deterministic() {
        assert_eq!(configs(4), configs(4));
    }

    #[test]
    fn partitioned_runner_keeps_order() {
        let out = run_partitioned((0..50).collect(), 4, |x: u32| x * 2);
        assert_eq!(out, (0..50).map(|x| x * 2).collect::<Vec<_>>());
    }
}

//! Exhaustive Gray-code search over vertex labellings.
//!
//! Vertex 0 is pinned to label 0: complementing a labelling swaps `v0` and
//! `v1` and leaves every edge label unchanged, so both imbalances are
//! preserved and only `2^(n-1)` labellings need visiting. The remaining
//! vertices are walked in reflected binary Gray-code order, one flip per
//! step, with the running balances updated from a single adjacency row.
//!
//! Multithreaded runs split the space into `2^b` blocks by fixing the labels
//! of the `b` highest-indexed vertices. Ties between minimisers are broken
//! towards the lexicographically smallest bit string (vertex 0 first), so the
//! result does not depend on how the space was split.

use std::ops::ControlFlow;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{BitIter, Graph};
use crate::labelling::Labelling;

/// Largest graph the exhaustive solver accepts.
pub const SOLVER_CAP: usize = 30;

/// Incremental state of a sweep: the current labelling plus running balances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepState {
    n: usize,
    labels: u64,
    same_count: Vec<u32>,
    v_diff: i32,
    e_diff: i32,
}

impl SweepState {
    /// Builds the state for `f` from scratch. Needs `g.n() <= 64`.
    pub fn new(g: &Graph, f: &Labelling) -> Result<Self> {
        if f.len() != g.n() {
            return Err(Error::Dimension(format!(
                "labelling has {} entries but the graph has {} vertices",
                f.len(),
                g.n()
            )));
        }
        if g.n() > 64 {
            return Err(Error::Capacity(format!(
                "sweep state holds at most 64 vertices, got {}",
                g.n()
            )));
        }
        Ok(Self::from_mask(g, f.mask()))
    }

    fn from_mask(g: &Graph, labels: u64) -> Self {
        let n = g.n();
        let mut same_count = vec![0u32; n];
        let mut v_diff = 0i32;
        let mut same_edges = 0i32;
        for (v, count) in same_count.iter_mut().enumerate() {
            let row = g.row_mask(v);
            let same = if labels >> v & 1 == 1 {
                v_diff -= 1;
                row & labels
            } else {
                v_diff += 1;
                row & !labels
            };
            *count = same.count_ones();
            same_edges += *count as i32;
        }
        // Every monochromatic edge was counted from both ends.
        let e0 = same_edges / 2;
        let e_diff = 2 * e0 - g.m() as i32;
        SweepState {
            n,
            labels,
            same_count,
            v_diff,
            e_diff,
        }
    }

    /// Complements the label of `v`.
    pub fn flip(&mut self, g: &Graph, v: usize) -> Result<()> {
        if v >= self.n || g.n() != self.n {
            return Err(Error::Dimension(format!(
                "cannot flip vertex {v} of a {}-vertex sweep on a {}-vertex graph",
                self.n,
                g.n()
            )));
        }
        self.flip_unchecked(g, v);
        Ok(())
    }

    #[inline]
    fn flip_unchecked(&mut self, g: &Graph, v: usize) {
        let row = g.row_mask(v);
        let bit = 1u64 << v;
        let was_one = self.labels & bit != 0;
        let same_mask = if was_one { row & self.labels } else { row & !self.labels };
        let same = same_mask.count_ones() as i32;
        let deg = row.count_ones() as i32;
        debug_assert_eq!(same as u32, self.same_count[v]);

        // Monochromatic edges at v become bichromatic and vice versa.
        self.e_diff += 2 * (deg - 2 * same);
        self.v_diff += if was_one { 2 } else { -2 };
        for u in BitIter(same_mask) {
            self.same_count[u] -= 1;
        }
        for u in BitIter(row & !same_mask) {
            self.same_count[u] += 1;
        }
        self.same_count[v] = (deg - same) as u32;
        self.labels ^= bit;
    }

    pub fn labelling(&self) -> Labelling {
        Labelling::from_mask(self.n, self.labels)
    }

    pub fn mask(&self) -> u64 {
        self.labels
    }

    /// Neighbours of `v` sharing its current label.
    pub fn same_count(&self, v: usize) -> u32 {
        self.same_count[v]
    }

    /// Running `v0 - v1`.
    pub fn v_diff(&self) -> i32 {
        self.v_diff
    }

    /// Running `e0 - e1`.
    pub fn e_diff(&self) -> i32 {
        self.e_diff
    }

    pub fn delta_v(&self) -> u32 {
        self.v_diff.unsigned_abs()
    }

    pub fn delta_e(&self) -> u32 {
        self.e_diff.unsigned_abs()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    pub threads: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { threads: 1 }
    }
}

/// Exact values of both measures with witnesses in normal form (vertex 0 labelled 0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactResult {
    /// Minimum of `delta_v + delta_e` over all labellings.
    pub d1: usize,
    pub d1_witness: Labelling,
    /// Minimum of `delta_e` over labellings with `delta_v <= 1`.
    pub d2: usize,
    pub d2_witness: Labelling,
    pub cordial: bool,
    pub labellings_visited: u64,
}

pub(crate) fn check_capacity(g: &Graph) -> Result<()> {
    if g.n() == 0 || g.n() > SOLVER_CAP {
        return Err(Error::Capacity(format!(
            "exhaustive search needs 1 <= n <= {SOLVER_CAP}, got n = {}",
            g.n()
        )));
    }
    Ok(())
}

/// Walks every labelling with vertex 0 labelled 0 whose top `fixed` vertices
/// carry `high`, calling `visit` after each step.
fn sweep_block<F>(g: &Graph, fixed: usize, high: u64, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&SweepState) -> ControlFlow<()>,
{
    let free = g.n() - 1 - fixed;
    let mut state = SweepState::from_mask(g, high << (free + 1));
    visit(&state)?;
    for step in 1u64..1u64 << free {
        state.flip_unchecked(g, 1 + step.trailing_zeros() as usize);
        visit(&state)?;
    }
    ControlFlow::Continue(())
}

/// Best candidate so far, ordered by (value, lexicographic key).
#[derive(Clone, Copy, Debug)]
struct Best {
    value: u32,
    key: u64,
    mask: u64,
}

impl Best {
    const NONE: Best = Best {
        value: u32::MAX,
        key: u64::MAX,
        mask: 0,
    };

    #[inline]
    fn offer(&mut self, value: u32, mask: u64, n: usize) {
        if value > self.value {
            return;
        }
        let key = lex_key(mask, n);
        if value < self.value || key < self.key {
            *self = Best { value, key, mask };
        }
    }

    fn merge(self, other: Best) -> Best {
        if (other.value, other.key) < (self.value, self.key) {
            other
        } else {
            self
        }
    }
}

/// Reverses the low `n` bits so that integer order matches bit-string order
/// with vertex 0 most significant.
#[inline]
fn lex_key(mask: u64, n: usize) -> u64 {
    mask.reverse_bits() >> (64 - n)
}

#[derive(Clone, Copy, Debug)]
struct BlockResult {
    d1: Best,
    d2: Best,
    visited: u64,
}

impl BlockResult {
    fn merge(self, other: BlockResult) -> BlockResult {
        BlockResult {
            d1: self.d1.merge(other.d1),
            d2: self.d2.merge(other.d2),
            visited: self.visited + other.visited,
        }
    }
}

fn solve_block(g: &Graph, fixed: usize, high: u64) -> BlockResult {
    let n = g.n();
    let mut d1 = Best::NONE;
    let mut d2 = Best::NONE;
    let mut visited = 0u64;
    let _ = sweep_block(g, fixed, high, |s| {
        visited += 1;
        let dv = s.delta_v();
        let de = s.delta_e();
        d1.offer(dv + de, s.labels, n);
        if dv <= 1 {
            d2.offer(de, s.labels, n);
        }
        ControlFlow::Continue(())
    });
    BlockResult { d1, d2, visited }
}

/// Number of high vertices fixed per block for a given thread count.
fn block_bits(n: usize, threads: usize) -> usize {
    if threads <= 1 {
        return 0;
    }
    let log = usize::BITS - (threads - 1).leading_zeros();
    // A few blocks per thread evens out the load.
    (log as usize + 2).min(n - 1)
}

/// Computes both measures exactly by visiting all `2^(n-1)` normal-form labellings.
pub fn solve_exact(g: &Graph, options: SolveOptions) -> Result<ExactResult> {
    check_capacity(g)?;
    let n = g.n();
    let threads = options.threads.max(1);
    let fixed = block_bits(n, threads);
    let blocks = 0..1u64 << fixed;

    let merged = if threads == 1 {
        blocks
            .map(|high| solve_block(g, fixed, high))
            .reduce(BlockResult::merge)
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::Parameter(format!("cannot start {threads} threads: {e}")))?;
        pool.install(|| {
            blocks
                .into_par_iter()
                .map(|high| solve_block(g, fixed, high))
                .reduce_with(BlockResult::merge)
        })
    }
    .expect("at least one block");

    let d1 = merged.d1.value as usize;
    let d2 = merged.d2.value as usize;
    debug_assert!(merged.d2.value != u32::MAX, "a friendly labelling always exists");
    Ok(ExactResult {
        d1,
        d1_witness: Labelling::from_mask(n, merged.d1.mask),
        d2,
        d2_witness: Labelling::from_mask(n, merged.d2.mask),
        cordial: d2 <= 1,
        labellings_visited: merged.visited,
    })
}

/// First cordial labelling in sweep order, if any.
pub fn find_cordial(g: &Graph) -> Result<Option<Labelling>> {
    check_capacity(g)?;
    let mut found = None;
    let _ = sweep_block(g, 0, 0, |s| {
        if s.delta_v() <= 1 && s.delta_e() <= 1 {
            found = Some(s.labelling());
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    Ok(found)
}

/// Whether some labelling has `delta_v <= 1` and `delta_e <= 1`. Stops at the first one found.
pub fn is_cordial(g: &Graph) -> Result<bool> {
    Ok(find_cordial(g)?.is_some())
}

/// Whether every friendly labelling is cordial.
pub fn is_uniformly_cordial(g: &Graph) -> Result<bool> {
    check_capacity(g)?;
    let flow = sweep_block(g, 0, 0, |s| {
        if s.delta_v() <= 1 && s.delta_e() > 1 {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    Ok(flow.is_continue())
}

/// Largest `delta_e` over friendly labellings.
pub fn max_friendly_delta_e(g: &Graph) -> Result<usize> {
    check_capacity(g)?;
    let mut worst = 0;
    let _ = sweep_block(g, 0, 0, |s| {
        if s.delta_v() <= 1 {
            worst = worst.max(s.delta_e());
        }
        ControlFlow::Continue(())
    });
    Ok(worst as usize)
}

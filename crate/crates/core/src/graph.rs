//! Simple undirected graphs stored as a symmetric bit matrix.
//!
//! Each adjacency row is a fixed run of `u64` words; bits past column `n - 1`
//! are always zero so that population counts over a row see only real
//! neighbours.

use std::fmt;

use crate::error::{Error, Result};

/// Largest vertex count a [`Graph`] will hold (the dense matrix costs n²/8 bytes).
pub const MAX_VERTICES: usize = 1 << 14;

const WORD_BITS: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words_per_row: usize,
    rows: Vec<u64>,
    m: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Size(format!(
                "{n} vertices exceeds the limit of {MAX_VERTICES}"
            )));
        }
        let words_per_row = n.div_ceil(WORD_BITS);
        Ok(Graph {
            n,
            words_per_row,
            rows: vec![0; n * words_per_row],
            m: 0,
        })
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Dimension(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::Structure(format!("self-loop at vertex {u}")));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    /// Adds `{u, v}` if absent. Callers guarantee `u != v` and both are in range.
    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        if self.has_edge(u, v) {
            return;
        }
        self.set_bit(u, v);
        self.set_bit(v, u);
        self.m += 1;
    }

    fn set_bit(&mut self, row: usize, col: usize) {
        self.rows[row * self.words_per_row + col / WORD_BITS] |= 1u64 << (col % WORD_BITS);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n
            && v < self.n
            && self.rows[u * self.words_per_row + v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    /// The adjacency row of `v` as packed words.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        let start = v * self.words_per_row;
        &self.rows[start..start + self.words_per_row]
    }

    /// The adjacency row of `v` as a single word. Only valid when `n <= 64`.
    #[inline]
    pub fn row_mask(&self, v: usize) -> u64 {
        debug_assert!(self.n <= WORD_BITS);
        self.rows[v * self.words_per_row]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(wi, &w)| {
            BitIter(w).map(move |b| wi * WORD_BITS + b)
        })
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m == self.n - 1 && self.is_connected()
    }

    /// Disjoint union of `self` and `other` with every cross pair joined.
    /// `self` keeps indices `0..n1`; `other` is shifted up by `n1`.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let n1 = self.n;
        let total = n1
            .checked_add(other.n)
            .filter(|&t| t <= MAX_VERTICES)
            .ok_or_else(|| {
                Error::Size(format!(
                    "join of {} and {} vertices exceeds the limit of {MAX_VERTICES}",
                    self.n, other.n
                ))
            })?;
        let mut g = Graph::empty(total)?;
        for (u, v) in self.edges() {
            g.insert_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.insert_edge(n1 + u, n1 + v);
        }
        for u in 0..n1 {
            for v in 0..other.n {
                g.insert_edge(u, n1 + v);
            }
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("m", &self.m)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Iterates set bit positions of a word, lowest first.
#[derive(Clone, Copy)]
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}

//! Reference solver: recomputes every count from the edge list for each of
//! the `2^(n-1)` normal-form labellings, in lexicographic order.
//!
//! Shares nothing with the Gray-code engine beyond the result type; it exists
//! to cross-check the engine and to give `bench` a baseline.

use crate::engine::{check_capacity, ExactResult};
use crate::error::Result;
use crate::graph::Graph;
use crate::labelling::Labelling;

pub fn solve_naive(g: &Graph) -> Result<ExactResult> {
    check_capacity(g)?;
    let n = g.n();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut labels = vec![0u8; n];
    let mut best1: Option<(usize, Vec<u8>)> = None;
    let mut best2: Option<(usize, Vec<u8>)> = None;
    let count = 1u64 << (n - 1);

    // Counter value x assigns vertex i (i >= 1) bit n-1-i of x, so increasing x
    // walks bit strings in lexicographic order. A strict `<` keeps the first,
    // hence lexicographically smallest, minimiser.
    for x in 0..count {
        for (i, l) in labels.iter_mut().enumerate().skip(1) {
            *l = (x >> (n - 1 - i) & 1) as u8;
        }
        let mut v0 = 0i64;
        let mut v1 = 0i64;
        for &l in &labels {
            if l == 0 {
                v0 += 1;
            } else {
                v1 += 1;
            }
        }
        let mut e0 = 0i64;
        let mut e1 = 0i64;
        for &(u, v) in &edges {
            if labels[u] == labels[v] {
                e0 += 1;
            } else {
                e1 += 1;
            }
        }
        let dv = (v0 - v1).unsigned_abs() as usize;
        let de = (e0 - e1).unsigned_abs() as usize;
        if best1.as_ref().is_none_or(|(b, _)| dv + de < *b) {
            best1 = Some((dv + de, labels.clone()));
        }
        if dv <= 1 && best2.as_ref().is_none_or(|(b, _)| de < *b) {
            best2 = Some((de, labels.clone()));
        }
    }

    let (d1, w1) = best1.expect("n >= 1");
    let (d2, w2) = best2.expect("a friendly labelling always exists");
    let to_labelling = |w: Vec<u8>| Labelling::from_bits(w.into_iter().map(|b| b == 1));
    Ok(ExactResult {
        d1,
        d1_witness: to_labelling(w1),
        d2,
        d2_witness: to_labelling(w2),
        cordial: d2 <= 1,
        labellings_visited: count,
    })
}

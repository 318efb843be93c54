//! Optimal labelling of a tree by stripping pairs of leaves.
//!
//! Leaves are removed two at a time until one or two vertices remain, the
//! base is labelled directly, and the pairs are re-attached in reverse order
//! with opposite labels. The result satisfies `v0 - v1 = n mod 2` and
//! `e0 - e1 = 0` for odd `n`, `e0 - e1 = ±1` for even `n`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labelling::{stats, Labelling};

struct LeafPair {
    x: usize,
    y: usize,
    /// Unique neighbours of `x` and `y` at removal time; may coincide.
    x_anchor: usize,
    y_anchor: usize,
}

pub fn tree_optimal_labelling(g: &Graph) -> Result<Labelling> {
    if !g.is_tree() {
        return Err(Error::Structure(format!(
            "expected a tree, got a graph with n = {} and m = {}{}",
            g.n(),
            g.m(),
            if g.is_connected() { "" } else { " (disconnected)" }
        )));
    }
    let n = g.n();
    let mut present = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    let mut pairs = Vec::with_capacity(n / 2);

    let anchor = |v: usize, present: &[bool]| {
        g.neighbors(v)
            .find(|&u| present[u])
            .expect("a leaf of a tree with >= 3 vertices has a neighbour")
    };

    while remaining >= 3 {
        let x = leaves.pop_first().expect("a tree has at least two leaves");
        let y = leaves.pop_first().expect("a tree has at least two leaves");
        let x_anchor = anchor(x, &present);
        let y_anchor = anchor(y, &present);
        present[x] = false;
        present[y] = false;
        degree[x_anchor] -= 1;
        degree[y_anchor] -= 1;
        for w in [x_anchor, y_anchor] {
            match degree[w] {
                1 => {
                    leaves.insert(w);
                }
                0 => {
                    leaves.remove(&w);
                }
                _ => {}
            }
        }
        remaining -= 2;
        pairs.push(LeafPair { x, y, x_anchor, y_anchor });
    }

    let mut f = Labelling::zeros(n);
    let base: Vec<usize> = (0..n).filter(|&v| present[v]).collect();
    // One vertex: label 0. Two adjacent vertices: 0 and 1.
    let (mut v_diff, mut e_diff): (i64, i64) = match base.as_slice() {
        [_] => (1, 0),
        [_, b] => {
            f.set(*b, true);
            (0, -1)
        }
        _ => unreachable!("stripping stops at one or two vertices"),
    };
    let mut order = base.len();

    for LeafPair { x, y, x_anchor, y_anchor } in pairs.into_iter().rev() {
        order += 2;
        let ax = f.get(x_anchor);
        let ay = f.get(y_anchor);
        if ax == ay {
            // The two new edges get opposite labels whichever way round.
            f.set(x, false);
            f.set(y, true);
        } else if order % 2 == 0 {
            if e_diff == -1 {
                f.set(x, ax);
                f.set(y, ay);
                e_diff += 2;
            } else {
                f.set(x, !ax);
                f.set(y, !ay);
                e_diff -= 2;
            }
        } else {
            // Attach x labelled 1, then choose y to cancel the edge imbalance,
            // and normalise the vertex balance by complementing if needed.
            f.set(x, true);
            v_diff -= 1;
            e_diff += if ax { 1 } else { -1 };
            let y_label = if e_diff == -1 { ay } else { !ay };
            f.set(y, y_label);
            v_diff += if y_label { -1 } else { 1 };
            e_diff += if y_label == ay { 1 } else { -1 };
            present[x] = true;
            present[y] = true;
            if v_diff < 0 {
                for v in (0..n).filter(|&v| present[v]) {
                    f.set(v, !f.get(v));
                }
                v_diff = -v_diff;
            }
        }
        present[x] = true;
        present[y] = true;
        debug_assert_eq!(v_diff, (order % 2) as i64);
    }

    let s = stats(g, &f)?;
    let parity = (n % 2) as i64;
    let edge_ok = if n % 2 == 1 { s.e_diff() == 0 } else { s.e_diff().abs() == 1 };
    if s.v_diff() != parity || !edge_ok || s.v_diff() != v_diff || s.e_diff() != e_diff {
        return Err(Error::Defect(format!(
            "tree labelling {f} has v0-v1 = {}, e0-e1 = {} on {n} vertices",
            s.v_diff(),
            s.e_diff()
        )));
    }
    Ok(f)
}

//! Binary vertex labellings and the vertex/edge balance statistics they induce.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A map `V -> {0, 1}`; bit `i` is the label of vertex `i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Labelling {
    n: usize,
    words: Vec<u64>,
}

impl Labelling {
    pub fn zeros(n: usize) -> Self {
        Labelling {
            n,
            words: vec![0; n.div_ceil(64)],
        }
    }

    /// Low `n` bits of `mask`, bit `i` for vertex `i`. Requires `n <= 64`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n <= 64, "from_mask supports at most 64 vertices");
        let mut l = Labelling::zeros(n);
        if n > 0 {
            l.words[0] = mask & low_bits(n);
        }
        l
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let bits: Vec<bool> = bits.into_iter().collect();
        let mut l = Labelling::zeros(bits.len());
        for (i, b) in bits.into_iter().enumerate() {
            l.set(i, b);
        }
        l
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, v: usize) -> bool {
        assert!(v < self.n);
        self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn set(&mut self, v: usize, label: bool) {
        assert!(v < self.n);
        let bit = 1u64 << (v % 64);
        if label {
            self.words[v / 64] |= bit;
        } else {
            self.words[v / 64] &= !bit;
        }
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// The first word; the whole labelling when `n <= 64`.
    pub fn mask(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }

    pub fn complement(&self) -> Labelling {
        let mut out = self.clone();
        for (i, w) in out.words.iter_mut().enumerate() {
            let width = (self.n - i * 64).min(64);
            *w = !*w & low_bits(width);
        }
        out
    }

    pub fn ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.n).map(|v| self.get(v))
    }

    /// `0`/`1` characters, vertex 0 first.
    pub fn to_bit_string(&self) -> String {
        self.iter().map(|b| if b { '1' } else { '0' }).collect()
    }
}

#[inline]
pub(crate) fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

impl fmt::Debug for Labelling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Labelling({})", self.to_bit_string())
    }
}

impl fmt::Display for Labelling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bit_string())
    }
}

impl FromStr for Labelling {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Parameter(format!("labelling character {c:?} is not 0 or 1"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Labelling::from_bits)
    }
}

/// Label counts for one (graph, labelling) pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LabellingStats {
    pub v0: usize,
    pub v1: usize,
    pub e0: usize,
    pub e1: usize,
    pub delta_v: usize,
    pub delta_e: usize,
}

impl LabellingStats {
    /// `v0 - v1`.
    pub fn v_diff(&self) -> i64 {
        self.v0 as i64 - self.v1 as i64
    }

    /// `e0 - e1`.
    pub fn e_diff(&self) -> i64 {
        self.e0 as i64 - self.e1 as i64
    }

    pub fn is_friendly(&self) -> bool {
        self.delta_v <= 1
    }

    pub fn is_cordial(&self) -> bool {
        self.delta_v <= 1 && self.delta_e <= 1
    }

    /// `delta_v + delta_e`, the quantity minimised by the first measure.
    pub fn total(&self) -> usize {
        self.delta_v + self.delta_e
    }
}

/// Counts vertices by label and edges by induced label `|f(x) - f(y)|`.
pub fn stats(g: &Graph, f: &Labelling) -> Result<LabellingStats> {
    if f.len() != g.n() {
        return Err(Error::Dimension(format!(
            "labelling has {} entries but the graph has {} vertices",
            f.len(),
            g.n()
        )));
    }
    let v1 = f.ones();
    let v0 = g.n() - v1;
    // Each bichromatic edge is seen once, from its 0-labelled endpoint.
    let mut e1 = 0usize;
    for v in (0..g.n()).filter(|&v| !f.get(v)) {
        e1 += g
            .row(v)
            .iter()
            .zip(f.words())
            .map(|(r, l)| (r & l).count_ones() as usize)
            .sum::<usize>();
    }
    let e0 = g.m() - e1;
    Ok(LabellingStats {
        v0,
        v1,
        e0,
        e1,
        delta_v: v0.abs_diff(v1),
        delta_e: e0.abs_diff(e1),
    })
}

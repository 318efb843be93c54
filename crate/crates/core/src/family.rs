//! Generators for the named graph families and seeded random graphs.
//!
//! Random sampling uses ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded from a
//! `u64`, so every sample is reproducible across platforms.

use std::collections::BTreeSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    /// The star K_{1,n}: centre 0, leaves `1..=n`.
    Star { n: usize },
    Multipartite { parts: Vec<usize> },
    /// Cycle on `0..n-1`, hub `n - 1`.
    Wheel { n: usize },
    /// Path on `0..n`, independent set on `n..n+m`.
    Fan { m: usize, n: usize },
    Join(Box<FamilySpec>, Box<FamilySpec>),
}

impl FamilySpec {
    pub fn tag(&self) -> &'static str {
        match self {
            FamilySpec::Path { .. } => "path",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::Star { .. } => "star",
            FamilySpec::Multipartite { .. } => "multipartite",
            FamilySpec::Wheel { .. } => "wheel",
            FamilySpec::Fan { .. } => "fan",
            FamilySpec::Join(..) => "join",
        }
    }

    /// Parameter rendering used in reports, e.g. `n=6`, `parts=3,3`, `m=2,n=3`.
    pub fn params(&self) -> String {
        match self {
            FamilySpec::Path { n }
            | FamilySpec::Cycle { n }
            | FamilySpec::Complete { n }
            | FamilySpec::Star { n }
            | FamilySpec::Wheel { n } => format!("n={n}"),
            FamilySpec::Multipartite { parts } => format!(
                "parts={}",
                parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
            ),
            FamilySpec::Fan { m, n } => format!("m={m},n={n}"),
            FamilySpec::Join(a, b) => format!("{a}+{b}"),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Parameter(msg));
        match self {
            FamilySpec::Path { n } | FamilySpec::Complete { n } if *n < 1 => {
                fail(format!("{} requires n >= 1, got {n}", self.tag()))
            }
            FamilySpec::Star { n } if *n < 1 => fail(format!("star requires n >= 1, got {n}")),
            FamilySpec::Cycle { n } if *n < 3 => fail(format!("cycle requires n >= 3, got {n}")),
            FamilySpec::Wheel { n } if *n < 4 => fail(format!("wheel requires n >= 4, got {n}")),
            FamilySpec::Fan { m, n } if *m < 1 || *n < 1 => {
                fail(format!("fan requires m >= 1 and n >= 1, got m={m}, n={n}"))
            }
            FamilySpec::Multipartite { parts } if parts.is_empty() => {
                fail("multipartite requires at least one part".into())
            }
            FamilySpec::Multipartite { parts } if parts.contains(&0) => {
                fail("multipartite parts must all be >= 1".into())
            }
            FamilySpec::Join(a, b) => {
                a.validate()?;
                b.validate()
            }
            _ => Ok(()),
        }
    }

    /// Vertex count of the generated graph.
    pub fn order(&self) -> usize {
        match self {
            FamilySpec::Path { n }
            | FamilySpec::Cycle { n }
            | FamilySpec::Complete { n }
            | FamilySpec::Wheel { n } => *n,
            FamilySpec::Star { n } => n + 1,
            FamilySpec::Multipartite { parts } => parts.iter().sum(),
            FamilySpec::Fan { m, n } => m + n,
            FamilySpec::Join(a, b) => a.order() + b.order(),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Join(a, b) => write!(f, "join({a}; {b})"),
            _ => write!(f, "{}({})", self.tag(), self.params()),
        }
    }
}

/// Builds the canonical graph for `spec`.
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    match spec {
        FamilySpec::Path { n } => Graph::from_edges(*n, (1..*n).map(|i| (i - 1, i))),
        FamilySpec::Cycle { n } => Graph::from_edges(*n, (0..*n).map(|i| (i, (i + 1) % n))),
        FamilySpec::Complete { n } => {
            Graph::from_edges(*n, (0..*n).flat_map(|u| (u + 1..*n).map(move |v| (u, v))))
        }
        FamilySpec::Star { n } => multipartite(&[1, *n]),
        FamilySpec::Multipartite { parts } => multipartite(parts),
        FamilySpec::Wheel { n } => {
            let rim = n - 1;
            let cycle = (0..rim).map(|i| (i, (i + 1) % rim));
            let spokes = (0..rim).map(|i| (i, rim));
            Graph::from_edges(*n, cycle.chain(spokes))
        }
        FamilySpec::Fan { m, n } => {
            let path = (1..*n).map(|i| (i - 1, i));
            let cross = (0..*n).flat_map(|v| (0..*m).map(move |u| (v, n + u)));
            Graph::from_edges(m + n, path.chain(cross))
        }
        FamilySpec::Join(a, b) => generate(a)?.join(&generate(b)?),
    }
}

fn multipartite(parts: &[usize]) -> Result<Graph> {
    let total: usize = parts.iter().sum();
    let mut block = Vec::with_capacity(total);
    for (i, &p) in parts.iter().enumerate() {
        block.extend(std::iter::repeat_n(i, p));
    }
    let block = &block;
    Graph::from_edges(
        total,
        (0..total).flat_map(move |u| {
            (u + 1..total)
                .filter(move |&v| block[u] != block[v])
                .map(move |v| (u, v))
        }),
    )
}

/// The PRNG used for every seeded sample in this crate.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform random labelled tree on `n` vertices, decoded from a random
/// Prüfer sequence.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    random_tree_with(n, &mut seeded_rng(seed))
}

pub fn random_tree_with<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Parameter("random tree requires n >= 1".into()));
    }
    if n <= 2 {
        return Graph::from_edges(n, (1..n).map(|i| (0, i)));
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    Graph::from_edges(n, prufer_decode(n, &code))
}

/// Decodes a Prüfer sequence of length `n - 2` into the tree's edges.
pub fn prufer_decode(n: usize, code: &[usize]) -> Vec<(usize, usize)> {
    debug_assert_eq!(code.len() + 2, n);
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in code {
        let leaf = leaves.pop_first().expect("a Prüfer sequence always leaves a leaf");
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.insert(c);
        }
    }
    let u = leaves.pop_first().unwrap();
    let v = leaves.pop_first().unwrap();
    edges.push((u, v));
    edges
}

/// Erdős–Rényi G(n, p).
pub fn random_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.insert_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// A random tree on `n >= 1` vertices plus each remaining pair independently
/// with probability `p`; always connected.
pub fn random_connected_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    let mut g = random_tree_with(n, rng)?;
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && rng.random_bool(p) {
                g.insert_edge(u, v);
            }
        }
    }
    Ok(g)
}

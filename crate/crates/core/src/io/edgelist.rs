//! Plain-text edge lists.
//!
//! ```text
//! # comment
//! n 3
//! 0 1
//! 1 2
//! ```
//!
//! The first non-comment line declares the vertex count; each later line is
//! one edge. `#` starts a comment anywhere on a line and blank lines are
//! skipped.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_index(tok: &str, line: usize) -> Result<usize> {
    tok.parse().map_err(|_| Error::Syntax {
        line,
        msg: format!("expected a non-negative integer, found {tok:?}"),
    })
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut graph: Option<Graph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        match (&mut graph, toks.as_slice()) {
            (None, ["n", count]) => graph = Some(Graph::empty(parse_index(count, line)?)?),
            (None, _) => {
                return Err(Error::Syntax {
                    line,
                    msg: format!("expected `n <count>`, found {content:?}"),
                })
            }
            (Some(g), [u, v]) => {
                let (u, v) = (parse_index(u, line)?, parse_index(v, line)?);
                if u >= g.n() || v >= g.n() {
                    return Err(Error::Validation {
                        line,
                        msg: format!("edge ({u}, {v}) out of range for {} vertices", g.n()),
                    });
                }
                if u == v {
                    return Err(Error::Validation {
                        line,
                        msg: format!("self-loop at vertex {u}"),
                    });
                }
                g.insert_edge(u, v);
            }
            (Some(_), _) => {
                return Err(Error::Syntax {
                    line,
                    msg: format!("expected `u v`, found {content:?}"),
                })
            }
        }
    }
    graph.ok_or(Error::Syntax {
        line: text.lines().count().max(1),
        msg: "missing `n <count>` line".into(),
    })
}

/// Writes `n <count>` and then each edge `u v` with `u < v`, in order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let g = parse_edge_list("n 3\n0 1\n1 2\n2 0\n").unwrap();
        assert_eq!((g.n(), g.m()), (3, 3));
    }

    #[test]
    fn duplicates_collapse() {
        let g = parse_edge_list("n 2\n0 1\n0 1\n").unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn comments_and_blanks() {
        let g = parse_edge_list("# header\n\n  n 4 # four\n0 1 # first\n\n2 3\n").unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert!(matches!(
            parse_edge_list("n 2\n0 0\n"),
            Err(Error::Validation { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("n 2\n0 2\n"),
            Err(Error::Validation { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("# c\nn 3\n0 1\n1 x\n"),
            Err(Error::Syntax { line: 4, .. })
        ));
        assert!(matches!(parse_edge_list("0 1\n"), Err(Error::Syntax { line: 1, .. })));
        assert!(matches!(parse_edge_list("n 3\n0 1 2\n"), Err(Error::Syntax { line: 2, .. })));
        assert!(matches!(parse_edge_list(""), Err(Error::Syntax { .. })));
    }

    #[test]
    fn writes_sorted_edges() {
        let g = Graph::from_edges(4, [(3, 2), (1, 0)]).unwrap();
        assert_eq!(write_edge_list(&g), "n 4\n0 1\n2 3\n");
    }
}

//! Plain-text edge lists.
//!
//! One edge per line as two whitespace-separated vertex labels. A line with
//! a single label declares a vertex without adding an edge (the only way to
//! describe isolated vertices). Blank lines and lines starting with `#` are
//! ignored. Labels are arbitrary tokens; vertices are numbered `0..n` in
//! order of first appearance.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// An edge that appeared more than once in the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DuplicateEdge {
    pub line: usize,
    pub u: String,
    pub v: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeList {
    pub graph: SimpleGraph,
    /// Original label of each vertex, indexed by internal id.
    pub labels: Vec<String>,
    pub duplicates: Vec<DuplicateEdge>,
}

pub fn parse_edge_list(text: &str) -> Result<EdgeList> {
    let mut ids: HashMap<&str, usize> = HashMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut edges = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        match tokens.as_slice() {
            [v] => {
                intern(&mut ids, &mut labels, v);
            }
            [u, v] => {
                if u == v {
                    return Err(Error::SelfLoop {
                        line,
                        label: u.to_string(),
                    });
                }
                let a = intern(&mut ids, &mut labels, u);
                let b = intern(&mut ids, &mut labels, v);
                edges.push((line, a, b));
            }
            _ => {
                return Err(Error::Parse {
                    line,
                    message: format!("expected one or two labels, found {}", tokens.len()),
                })
            }
        }
    }
    if labels.is_empty() {
        return Err(Error::EmptyInput);
    }

    let mut graph = SimpleGraph::new(labels.len());
    let mut duplicates = Vec::new();
    for (line, a, b) in edges {
        if !graph.add_edge(a, b)? {
            duplicates.push(DuplicateEdge {
                line,
                u: labels[a].clone(),
                v: labels[b].clone(),
            });
        }
    }
    Ok(EdgeList {
        graph,
        labels,
        duplicates,
    })
}

fn intern<'t>(
    ids: &mut HashMap<&'t str, usize>,
    labels: &mut Vec<String>,
    label: &'t str,
) -> usize {
    let next = labels.len();
    *ids.entry(label).or_insert_with(|| {
        labels.push(label.to_string());
        next
    })
}

pub fn read_edge_list(path: impl AsRef<Path>) -> Result<EdgeList> {
    parse_edge_list(&std::fs::read_to_string(path)?)
}

/// Serializes `g` with 0-based labels so that parsing the output yields the
/// same graph with the same numbering.
///
/// Edges are written ordered by their larger endpoint; single-label lines are
/// inserted wherever a vertex would otherwise first appear out of order.
pub fn write_edge_list(g: &SimpleGraph) -> String {
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.sort_by_key(|&(u, v)| (v, u));
    let mut out = String::new();
    let _ = writeln!(out, "# {} vertices, {} edges", g.order(), g.edge_count());
    let mut next = 0;
    for (u, v) in edges {
        if v >= next {
            for x in next..v {
                if !(x == u && u + 1 == v) {
                    let _ = writeln!(out, "{x}");
                }
            }
            next = v + 1;
        }
        let _ = writeln!(out, "{u} {v}");
    }
    for x in next..g.order() {
        let _ = writeln!(out, "{x}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_path() {
        let e = parse_edge_list("0 1\n1 2").unwrap();
        assert_eq!(e.graph.order(), 3);
        assert_eq!(e.graph.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert!(e.duplicates.is_empty());
    }

    #[test]
    fn reports_duplicates() {
        let e = parse_edge_list("0 1\n1 0\n").unwrap();
        assert_eq!(e.graph.edge_count(), 1);
        assert_eq!(
            e.duplicates,
            vec![DuplicateEdge {
                line: 2,
                u: "1".into(),
                v: "0".into()
            }]
        );
    }

    #[test]
    fn rejects_self_loops_and_garbage() {
        assert!(matches!(
            parse_edge_list("0 0"),
            Err(Error::SelfLoop { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("# c\n0 1\n1 2 3\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_edge_list("# only\n\n"),
            Err(Error::EmptyInput)
        ));
    }

    #[test]
    fn remaps_sparse_labels() {
        let e = parse_edge_list("# sparse\n10 7\n7 abc\n\n").unwrap();
        assert_eq!(e.labels, vec!["10", "7", "abc"]);
        assert_eq!(e.graph.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn isolated_vertices_are_declared() {
        let e = parse_edge_list("0\n1\n").unwrap();
        assert_eq!(e.graph.order(), 2);
        assert_eq!(e.graph.edge_count(), 0);
    }

    #[test]
    fn writer_round_trips_awkward_orders() {
        let g = SimpleGraph::from_edges(7, [(0, 5), (1, 2), (3, 4)]).unwrap();
        let text = write_edge_list(&g);
        assert_eq!(parse_edge_list(&text).unwrap().graph, g);

        let k4 =
            SimpleGraph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let text = write_edge_list(&k4);
        assert!(!text.lines().skip(1).any(|l| !l.contains(' ')), "{text}");
        assert_eq!(parse_edge_list(&text).unwrap().graph, k4);
    }
}

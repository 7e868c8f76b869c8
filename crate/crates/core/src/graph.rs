//! Simple undirected graphs.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// Neighbour lists are kept sorted, so two graphs with the same edge set
/// compare equal regardless of insertion order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SimpleGraph {
    adjacency: Vec<Vec<usize>>,
    edges: usize,
}

impl SimpleGraph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Self {
            adjacency: vec![Vec::new(); n],
            edges: 0,
        }
    }

    /// Builds a graph from an edge iterator. Duplicate edges are collapsed;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds the edge `{u, v}`. Returns `false` if it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        let n = self.order();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoopVertex(u));
        }
        match self.adjacency[u].binary_search(&v) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.adjacency[u].insert(pos, v);
                let pos = self.adjacency[v].binary_search(&u).unwrap_err();
                self.adjacency[v].insert(pos, u);
                self.edges += 1;
                Ok(true)
            }
        }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Dense row-major 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> Vec<f64> {
        let n = self.order();
        let mut a = vec![0.0; n * n];
        for (u, v) in self.edges() {
            a[u * n + v] = 1.0;
            a[v * n + u] = 1.0;
        }
        a
    }

    /// Hop distances from `source`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.order()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0) + 1;
            for &v in &self.adjacency[u] {
                if dist[v].is_none() {
                    dist[v] = Some(d);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    ///
    /// # Panics
    ///
    /// If `perm` is not a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.order(), "permutation length");
        let mut seen = vec![false; perm.len()];
        for &p in perm {
            assert!(p < perm.len() && !seen[p], "not a permutation");
            seen[p] = true;
        }
        Self::from_edges(self.order(), self.edges().map(|(u, v)| (perm[u], perm[v])))
            .expect("relabelling preserves simplicity")
    }
}

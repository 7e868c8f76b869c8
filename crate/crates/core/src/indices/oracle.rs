//! Reference index definitions for arbitrary simple graphs.
//!
//! These follow the textbook definitions directly (BFS from every vertex,
//! dense eigensolve) and serve as ground truth for [`super::fast`].

use crate::eigen::symmetric_eigenvalues;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::indices::GraphIndices;
use crate::spectrum::Spectrum;

/// All-pairs hop distances. Unreachable pairs are `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<Option<u32>>,
}

impl DistanceMatrix {
    pub fn new(g: &SimpleGraph) -> Self {
        let n = g.order();
        let mut d = Vec::with_capacity(n * n);
        for s in 0..n {
            d.extend(g.bfs_distances(s));
        }
        Self { n, d }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        self.d[u * self.n + v]
    }

    pub fn is_connected(&self) -> bool {
        self.d.iter().all(Option::is_some)
    }

    /// Number of vertices strictly closer to `u` than to `v`. Unreachable
    /// counts as infinitely far.
    pub fn closer_count(&self, u: usize, v: usize) -> usize {
        let far = |x: Option<u32>| x.unwrap_or(u32::MAX);
        (0..self.n)
            .filter(|&w| far(self.get(u, w)) < far(self.get(v, w)))
            .count()
    }
}

/// `log2 |E|`.
pub fn entropy(g: &SimpleGraph) -> Result<f64> {
    match g.edge_count() {
        0 => Err(Error::EmptyGraph),
        m => Ok((m as f64).log2()),
    }
}

/// Sum over edges of `1 / sqrt(deg u * deg v)`.
pub fn randic(g: &SimpleGraph) -> f64 {
    g.edges()
        .map(|(u, v)| 1.0 / ((g.degree(u) * g.degree(v)) as f64).sqrt())
        .sum()
}

pub fn wiener(g: &SimpleGraph) -> Result<u128> {
    wiener_from(&DistanceMatrix::new(g))
}

pub fn szeged(g: &SimpleGraph) -> Result<u128> {
    szeged_from(g, &DistanceMatrix::new(g))
}

pub fn copi(g: &SimpleGraph) -> Result<u128> {
    copi_from(g, &DistanceMatrix::new(g))
}

fn wiener_from(d: &DistanceMatrix) -> Result<u128> {
    let mut total = 0u128;
    for u in 0..d.order() {
        for v in u + 1..d.order() {
            total += d.get(u, v).ok_or(Error::Disconnected)? as u128;
        }
    }
    Ok(total)
}

fn szeged_from(g: &SimpleGraph, d: &DistanceMatrix) -> Result<u128> {
    if !d.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(g.edges()
        .map(|(u, v)| (d.closer_count(u, v) * d.closer_count(v, u)) as u128)
        .sum())
}

fn copi_from(g: &SimpleGraph, d: &DistanceMatrix) -> Result<u128> {
    if !d.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(g.edges()
        .map(|(u, v)| d.closer_count(u, v).abs_diff(d.closer_count(v, u)) as u128)
        .sum())
}

/// Adjacency eigenvalues by dense Jacobi iteration.
pub fn spectrum(g: &SimpleGraph) -> Spectrum {
    Spectrum::from_unsorted(symmetric_eigenvalues(g.adjacency_matrix(), g.order()))
}

pub fn estrada(g: &SimpleGraph) -> f64 {
    spectrum(g).estrada()
}

pub fn gutman_energy(g: &SimpleGraph) -> f64 {
    spectrum(g).energy()
}

pub fn resolvent_energy(g: &SimpleGraph) -> f64 {
    spectrum(g).resolvent_energy()
}

/// Every index of `g`. Distance-based indices are `None` for disconnected
/// graphs; an edgeless graph is an error.
pub fn indices(g: &SimpleGraph) -> Result<GraphIndices> {
    let entropy = entropy(g)?;
    let d = DistanceMatrix::new(g);
    let sp = spectrum(g);
    Ok(GraphIndices {
        edges: g.edge_count() as u64,
        entropy,
        randic: randic(g),
        wiener: wiener_from(&d).ok(),
        szeged: szeged_from(g, &d).ok(),
        copi: copi_from(g, &d).ok(),
        estrada: sp.estrada(),
        gutman: sp.energy(),
        resolvent: sp.resolvent_energy(),
    })
}

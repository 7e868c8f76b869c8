//! Dissimilarity between graphs of equal order: scaled-walk-matrix distance
//! and spectral distance.

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::indices::oracle;
use crate::quotient::QuotientMatrix;
use crate::sequence::CompactCreationSequence;

/// `n x n` matrix whose column `i` is `A^i 1 / Delta^i`, for `i = 0..n`.
///
/// Stored row-major by vertex. Every entry lies in `[0, 1]` because each
/// step divides by the maximum degree.
#[derive(Debug, Clone, PartialEq)]
pub struct ScaledWalkMatrix {
    n: usize,
    data: Vec<f64>,
}

impl ScaledWalkMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    /// Entry for vertex `v`, walk length `i`.
    pub fn get(&self, v: usize, i: usize) -> f64 {
        self.data[v * self.n + i]
    }

    pub fn column(&self, i: usize) -> Vec<f64> {
        (0..self.n).map(|v| self.get(v, i)).collect()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    /// Frobenius norm of the difference.
    pub fn distance(&self, other: &ScaledWalkMatrix) -> Result<f64> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt())
    }

    /// Largest absolute entry difference.
    pub fn max_deviation(&self, other: &ScaledWalkMatrix) -> Result<f64> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .fold(0.0, |m, (a, b)| f64::max(m, (a - b).abs())))
    }
}

/// Computes the scaled walk matrix by repeated scaled multiplication.
pub fn scaled_walk_matrix(g: &SimpleGraph) -> Result<ScaledWalkMatrix> {
    let n = g.order();
    let delta = g.max_degree();
    if delta == 0 {
        return Err(Error::NoEdges);
    }
    let delta = delta as f64;
    let mut data = vec![0.0; n * n];
    let mut w = vec![1.0; n];
    for i in 0..n {
        for (v, &x) in w.iter().enumerate() {
            data[v * n + i] = x;
        }
        w = (0..n)
            .map(|v| g.neighbors(v).iter().map(|&u| w[u]).sum::<f64>() / delta)
            .collect();
    }
    Ok(ScaledWalkMatrix { n, data })
}

/// Scaled walk vectors of an NSG, one row per cell.
///
/// Walk counts are constant on cells (`A^i 1 = X Q^i 1`), so only `r` rows
/// are computed, each step costing one `r x r` product.
#[derive(Debug, Clone, PartialEq)]
pub struct CellWalkMatrix {
    cells: Vec<usize>,
    n: usize,
    data: Vec<f64>,
}

impl CellWalkMatrix {
    pub fn new(a: &CompactCreationSequence) -> Self {
        let q = QuotientMatrix::new(a);
        let n = a.order();
        let r = a.cell_count();
        // the last clique vertex dominates, so the maximum degree is n - 1
        let delta = (n - 1) as f64;
        let mut data = vec![0.0; r * n];
        let mut w = vec![1.0; r];
        for i in 0..n {
            for (c, &x) in w.iter().enumerate() {
                data[c * n + i] = x;
            }
            w = q.apply(&w).into_iter().map(|x| x / delta).collect();
        }
        Self {
            cells: a.cells().to_vec(),
            n,
            data,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Entry for cell `c`, walk length `i`.
    pub fn get(&self, c: usize, i: usize) -> f64 {
        self.data[c * self.n + i]
    }

    /// Full per-vertex matrix, vertices in construction order.
    pub fn expand(&self) -> ScaledWalkMatrix {
        let n = self.n;
        let mut data = Vec::with_capacity(n * n);
        for (c, &size) in self.cells.iter().enumerate() {
            let row = &self.data[c * n..(c + 1) * n];
            for _ in 0..size {
                data.extend_from_slice(row);
            }
        }
        ScaledWalkMatrix { n, data }
    }

    /// Same as `self.expand().distance(target)` without materializing the
    /// expansion.
    pub fn distance_to(&self, target: &ScaledWalkMatrix) -> Result<f64> {
        let n = self.n;
        if target.n != n {
            return Err(Error::SizeMismatch {
                left: n,
                right: target.n,
            });
        }
        let mut sum = 0.0;
        let mut v = 0;
        for (c, &size) in self.cells.iter().enumerate() {
            let row = &self.data[c * n..(c + 1) * n];
            for _ in 0..size {
                let target_row = &target.data[v * n..(v + 1) * n];
                sum += row
                    .iter()
                    .zip(target_row)
                    .map(|(a, b)| (a - b) * (a - b))
                    .sum::<f64>();
                v += 1;
            }
        }
        Ok(sum.sqrt())
    }
}

/// Scaled walk matrix of the realized NSG, via the quotient matrix.
pub fn nsg_walk_vectors(a: &CompactCreationSequence) -> ScaledWalkMatrix {
    CellWalkMatrix::new(a).expand()
}

/// Frobenius distance between the scaled walk matrices, pairing vertices by
/// index. Each graph is scaled by its own maximum degree.
pub fn walk_distance(g1: &SimpleGraph, g2: &SimpleGraph) -> Result<f64> {
    if g1.order() != g2.order() {
        return Err(Error::SizeMismatch {
            left: g1.order(),
            right: g2.order(),
        });
    }
    scaled_walk_matrix(g1)?.distance(&scaled_walk_matrix(g2)?)
}

/// Euclidean distance between the non-increasing adjacency spectra.
pub fn spectral_distance(g1: &SimpleGraph, g2: &SimpleGraph) -> Result<f64> {
    if g1.order() != g2.order() {
        return Err(Error::SizeMismatch {
            left: g1.order(),
            right: g2.order(),
        });
    }
    oracle::spectrum(g1).distance(&oracle::spectrum(g2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(cells: &[usize]) -> CompactCreationSequence {
        CompactCreationSequence::new(cells.to_vec()).unwrap()
    }

    #[test]
    fn k2_walk_matrix() {
        let k2 = a(&[1, 1]).to_graph();
        let w = scaled_walk_matrix(&k2).unwrap();
        assert_eq!(w.as_slice(), &[1.0, 1.0, 1.0, 1.0]);
    }

    #[test]
    fn star_walk_columns() {
        let star = a(&[3, 1]).to_graph();
        let w = scaled_walk_matrix(&star).unwrap();
        let third = 1.0 / 3.0;
        assert_eq!(w.column(0), vec![1.0; 4]);
        let c1 = w.column(1);
        let c2 = w.column(2);
        for (got, want) in c1.iter().zip([third, third, third, 1.0]) {
            assert!((got - want).abs() < 1e-15);
        }
        for got in c2 {
            assert!((got - third).abs() < 1e-15);
        }
    }

    #[test]
    fn regular_graph_has_constant_columns() {
        let c5 = SimpleGraph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        let w = scaled_walk_matrix(&c5).unwrap();
        assert!(w.as_slice().iter().all(|&x| (x - 1.0).abs() < 1e-15));
    }

    #[test]
    fn edgeless_graph_has_no_walk_matrix() {
        assert!(matches!(
            scaled_walk_matrix(&SimpleGraph::new(3)),
            Err(Error::NoEdges)
        ));
    }

    #[test]
    fn nsg_walks_match_direct_iteration() {
        for cells in [
            &[1, 1][..],
            &[1, 4],
            &[2, 2, 3, 1, 1, 2],
            &[1, 2, 1, 1, 5, 2],
        ] {
            let seq = a(cells);
            let fast = nsg_walk_vectors(&seq);
            let slow = scaled_walk_matrix(&seq.to_graph()).unwrap();
            assert!(fast.max_deviation(&slow).unwrap() <= 1e-12, "{cells:?}");
        }
        let k5 = nsg_walk_vectors(&a(&[1, 4]));
        assert!(k5.as_slice().iter().all(|&x| (x - 1.0).abs() < 1e-15));
    }

    #[test]
    fn cell_distance_matches_expanded_distance() {
        let target = scaled_walk_matrix(&a(&[2, 2, 3, 1, 1, 2]).to_graph()).unwrap();
        let cand = CellWalkMatrix::new(&a(&[1, 3, 2, 1, 2, 2]));
        let d1 = cand.distance_to(&target).unwrap();
        let d2 = cand.expand().distance(&target).unwrap();
        assert!((d1 - d2).abs() < 1e-12);
    }

    #[test]
    fn spectral_distance_k2_vs_empty() {
        let k2 = a(&[1, 1]).to_graph();
        let d = spectral_distance(&k2, &SimpleGraph::new(2)).unwrap();
        assert!((d - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn size_mismatch() {
        let g = SimpleGraph::new(2);
        let h = SimpleGraph::new(3);
        assert!(matches!(
            spectral_distance(&g, &h),
            Err(Error::SizeMismatch { left: 2, right: 3 })
        ));
        assert!(matches!(
            walk_distance(&g, &h),
            Err(Error::SizeMismatch { .. })
        ));
    }
}

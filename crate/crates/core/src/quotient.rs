//! Quotient matrix of the NSG cell partition.
//!
//! Entry `(i, j)` counts the neighbours that any vertex of cell `i` has in
//! cell `j`, so `A X = X Q` for the cell indicator matrix `X`. Its
//! eigenvalues are the main eigenvalues of the adjacency matrix.

use crate::eigen::symmetric_eigenvalues;
use crate::sequence::CompactCreationSequence;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientMatrix {
    cells: Vec<usize>,
    entries: Vec<usize>,
}

impl QuotientMatrix {
    pub fn new(a: &CompactCreationSequence) -> Self {
        let cells = a.cells().to_vec();
        let r = cells.len();
        let mut entries = vec![0; r * r];
        for i in 0..r {
            let level_i = i / 2;
            for j in 0..r {
                let level_j = j / 2;
                let count = match (i % 2, j % 2) {
                    (0, 0) => 0,
                    (0, _) if level_j >= level_i => cells[j],
                    (0, _) => 0,
                    (_, 0) if level_j <= level_i => cells[j],
                    (_, 0) => 0,
                    _ if i == j => cells[j] - 1,
                    _ => cells[j],
                };
                entries[i * r + j] = count;
            }
        }
        Self { cells, entries }
    }

    /// Order `r` of the matrix.
    pub fn dim(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self) -> &[usize] {
        &self.cells
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries[i * self.dim() + j]
    }

    pub fn row(&self, i: usize) -> &[usize] {
        let r = self.dim();
        &self.entries[i * r..(i + 1) * r]
    }

    /// `Q v` for a vector indexed by cell.
    pub fn apply(&self, v: &[f64]) -> Vec<f64> {
        (0..self.dim())
            .map(|i| self.row(i).iter().zip(v).map(|(&q, &x)| q as f64 * x).sum())
            .collect()
    }

    /// `D^{1/2} Q D^{-1/2}` with `D = diag(cells)`, row-major.
    ///
    /// `D Q` counts edges between cells and is symmetric, so entry `(i, j)`
    /// equals `sqrt(Q_ij Q_ji)`.
    pub fn symmetrized(&self) -> Vec<f64> {
        let r = self.dim();
        let mut s = vec![0.0; r * r];
        for i in 0..r {
            for j in 0..r {
                s[i * r + j] = ((self.get(i, j) * self.get(j, i)) as f64).sqrt();
            }
        }
        s
    }

    /// Eigenvalues of `Q`, unsorted.
    pub fn eigenvalues(&self) -> Vec<f64> {
        symmetric_eigenvalues(self.symmetrized(), self.dim())
    }
}

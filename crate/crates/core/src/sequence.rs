//! Creation-sequence encodings of connected nested split graphs.
//!
//! A connected NSG on `n` vertices is built by adding vertices one at a time,
//! each either isolated (`0`) or dominating (`1`). The full creation sequence
//! records all `n` choices; the first is always `0` and the last always `1`.
//! Its run-length encoding is the compact creation sequence: odd-positioned
//! runs (1st, 3rd, ...) are co-cliques, even-positioned runs are cliques.
//!
//! Positions and cells are 0-based throughout this crate.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Full creation sequence `c = (c_1, ..., c_n)` with `c_1 = 0`, `c_n = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CreationSequence {
    bits: Vec<bool>,
}

impl CreationSequence {
    pub fn new(bits: Vec<bool>) -> Result<Self> {
        if bits.len() < 2 {
            return Err(Error::InvalidSequence(format!(
                "need at least 2 vertices, got {}",
                bits.len()
            )));
        }
        if bits[0] {
            return Err(Error::InvalidSequence("first bit must be 0".into()));
        }
        if !bits[bits.len() - 1] {
            return Err(Error::InvalidSequence("last bit must be 1".into()));
        }
        Ok(Self { bits })
    }

    /// Parses the minimum representation: the `n - 2` interior bits, with the
    /// leading `0` and trailing `1` implied. The empty string is `K_2`.
    pub fn from_minimum_representation(s: &str) -> Result<Self> {
        let mut bits = vec![false];
        bits.extend(parse_bits(s)?);
        bits.push(true);
        Self::new(bits)
    }

    /// Parses all `n` bits explicitly.
    pub fn from_full_bits(s: &str) -> Result<Self> {
        Self::new(parse_bits(s)?)
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Vertex count `n`.
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The interior bits `c_2 ... c_{n-1}` as a `0`/`1` string.
    pub fn minimum_representation(&self) -> String {
        bit_string(&self.bits[1..self.bits.len() - 1])
    }

    /// All `n` bits as a `0`/`1` string.
    pub fn full_bits(&self) -> String {
        bit_string(&self.bits)
    }

    /// Copy with bit `pos` inverted. Only interior positions `1..n-1` may be
    /// flipped.
    pub fn flipped(&self, pos: usize) -> Result<Self> {
        if pos == 0 || pos + 1 >= self.len() {
            return Err(Error::InvalidSequence(format!(
                "position {pos} is not an interior position of a length-{} sequence",
                self.len()
            )));
        }
        let mut bits = self.bits.clone();
        bits[pos] = !bits[pos];
        Ok(Self { bits })
    }

    pub fn to_compact(&self) -> CompactCreationSequence {
        let mut cells = Vec::new();
        let mut current = self.bits[0];
        let mut run = 0usize;
        for &b in &self.bits {
            if b == current {
                run += 1;
            } else {
                cells.push(run);
                current = b;
                run = 1;
            }
        }
        cells.push(run);
        CompactCreationSequence { cells }
    }

    /// Realizes the adjacency structure: for `i < j`, vertex `i` is adjacent
    /// to vertex `j` iff `c_j = 1`.
    pub fn to_graph(&self) -> SimpleGraph {
        let n = self.len();
        let mut g = SimpleGraph::new(n);
        for (j, &dominating) in self.bits.iter().enumerate() {
            if dominating {
                for i in 0..j {
                    g.add_edge(i, j).expect("valid vertex pair");
                }
            }
        }
        g
    }

    /// Recovers a creation sequence of `g` if it is a connected NSG, by
    /// repeatedly removing an isolated or dominating vertex. The result
    /// describes `g` up to relabelling.
    pub fn recognize(g: &SimpleGraph) -> Option<Self> {
        let n = g.order();
        if n < 2 {
            return None;
        }
        let mut degree = g.degrees();
        let mut alive = vec![true; n];
        let mut bits = vec![false; n];
        for remaining in (1..=n).rev() {
            let v = (0..n).find(|&v| alive[v] && (degree[v] == 0 || degree[v] + 1 == remaining))?;
            bits[remaining - 1] = remaining > 1 && degree[v] > 0;
            alive[v] = false;
            for &w in g.neighbors(v) {
                degree[w] -= 1;
            }
        }
        Self::new(bits).ok()
    }
}

impl fmt::Display for CreationSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.minimum_representation())
    }
}

impl From<&CompactCreationSequence> for CreationSequence {
    fn from(a: &CompactCreationSequence) -> Self {
        a.to_creation_sequence()
    }
}

/// Compact creation sequence `a = (a_1, ..., a_r)`: the run lengths of the
/// creation sequence. `r` is even and every run is non-empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CompactCreationSequence {
    cells: Vec<usize>,
}

impl CompactCreationSequence {
    pub fn new(cells: Vec<usize>) -> Result<Self> {
        if cells.len() < 2 || !cells.len().is_multiple_of(2) {
            return Err(Error::InvalidSequence(format!(
                "cell count must be even and at least 2, got {}",
                cells.len()
            )));
        }
        if let Some(i) = cells.iter().position(|&c| c == 0) {
            return Err(Error::InvalidSequence(format!("cell {i} is empty")));
        }
        Ok(Self { cells })
    }

    pub fn cells(&self) -> &[usize] {
        &self.cells
    }

    /// Vertex count `n`.
    pub fn order(&self) -> usize {
        self.cells.iter().sum()
    }

    /// Number of cells `r`.
    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    /// Number of levels `r / 2`; level `k` pairs co-clique `2k` with clique
    /// `2k + 1` (0-based cell indices).
    pub fn levels(&self) -> usize {
        self.cells.len() / 2
    }

    /// Size of the co-clique on level `k`.
    pub fn co_clique(&self, k: usize) -> usize {
        self.cells[2 * k]
    }

    /// Size of the clique on level `k`.
    pub fn clique(&self, k: usize) -> usize {
        self.cells[2 * k + 1]
    }

    /// Total number of co-clique vertices.
    pub fn co_clique_total(&self) -> usize {
        self.cells.iter().step_by(2).sum()
    }

    /// Total number of clique vertices.
    pub fn clique_total(&self) -> usize {
        self.cells.iter().skip(1).step_by(2).sum()
    }

    pub fn to_creation_sequence(&self) -> CreationSequence {
        let mut bits = Vec::with_capacity(self.order());
        for (i, &len) in self.cells.iter().enumerate() {
            bits.extend(std::iter::repeat_n(i % 2 == 1, len));
        }
        CreationSequence { bits }
    }

    /// Cell index of every vertex, in construction order.
    pub fn vertex_cells(&self) -> Vec<usize> {
        self.cells
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| std::iter::repeat_n(i, len))
            .collect()
    }

    pub fn to_graph(&self) -> SimpleGraph {
        self.to_creation_sequence().to_graph()
    }

    /// Canonicalizes a possibly degenerate cell list.
    ///
    /// The cells are expanded to bits by positional parity (empty cells
    /// contribute nothing, so their neighbours merge), the first bit is forced
    /// to `0`, and the result is re-compacted.
    pub fn normalize(raw_cells: &[usize]) -> Result<Self> {
        let mut bits = Vec::with_capacity(raw_cells.iter().sum());
        for (i, &len) in raw_cells.iter().enumerate() {
            bits.extend(std::iter::repeat_n(i % 2 == 1, len));
        }
        if bits.len() < 2 {
            return Err(Error::InvalidSequence(format!(
                "need at least 2 vertices, got {}",
                bits.len()
            )));
        }
        bits[0] = false;
        if !bits[bits.len() - 1] {
            return Err(Error::DisconnectedResult);
        }
        Ok(CreationSequence { bits }.to_compact())
    }
}

impl fmt::Display for CompactCreationSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.cells.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for CompactCreationSequence {
    type Err = Error;

    /// Parses the comma-separated form, e.g. `"1,2,1,1,5,2"`.
    fn from_str(s: &str) -> Result<Self> {
        let cells = s
            .split(',')
            .map(|t| {
                t.trim().parse::<usize>().map_err(|_| {
                    Error::InvalidSequence(format!("not a positive integer: {:?}", t.trim()))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(cells)
    }
}

impl From<&CreationSequence> for CompactCreationSequence {
    fn from(c: &CreationSequence) -> Self {
        c.to_compact()
    }
}

fn parse_bits(s: &str) -> Result<Vec<bool>> {
    s.trim()
        .chars()
        .map(|ch| match ch {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(Error::InvalidSequence(format!("not a bit: {other:?}"))),
        })
        .collect()
}

fn bit_string(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(v: &[u8]) -> CreationSequence {
        CreationSequence::new(v.iter().map(|&b| b == 1).collect()).unwrap()
    }

    fn compact(v: &[usize]) -> CompactCreationSequence {
        CompactCreationSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn compacts_worked_example() {
        let c = bits(&[0, 0, 1, 1, 0, 0, 0, 1, 0, 1, 1]);
        assert_eq!(c.to_compact(), compact(&[2, 2, 3, 1, 1, 2]));
        assert_eq!(c.minimum_representation(), "011000101");
        assert_eq!(
            CreationSequence::from_minimum_representation("011000101").unwrap(),
            c
        );
    }

    #[test]
    fn compacts_small_cases() {
        assert_eq!(bits(&[0, 1]).to_compact(), compact(&[1, 1]));
        assert_eq!(bits(&[0, 1, 1, 1, 1]).to_compact(), compact(&[1, 4]));
    }

    #[test]
    fn expands_compact_sequences() {
        assert_eq!(
            compact(&[2, 2, 3, 1, 1, 2]).to_creation_sequence(),
            bits(&[0, 0, 1, 1, 0, 0, 0, 1, 0, 1, 1])
        );
        assert_eq!(compact(&[1, 1]).to_creation_sequence(), bits(&[0, 1]));
        let c = compact(&[1, 2, 1, 1, 5, 2]).to_creation_sequence();
        assert_eq!(c.len(), 12);
        assert_eq!(c, bits(&[0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 1, 1]));
        assert_eq!(c.to_compact(), compact(&[1, 2, 1, 1, 5, 2]));
    }

    #[test]
    fn rejects_invalid_sequences() {
        assert!(CreationSequence::new(vec![false]).is_err());
        assert!(CreationSequence::new(vec![true, true]).is_err());
        assert!(CreationSequence::new(vec![false, false]).is_err());
        assert!(CompactCreationSequence::new(vec![1, 2, 3]).is_err());
        assert!(CompactCreationSequence::new(vec![1, 0]).is_err());
        assert!(CompactCreationSequence::new(vec![]).is_err());
        assert!("1,x".parse::<CompactCreationSequence>().is_err());
        assert!(CreationSequence::from_minimum_representation("0120").is_err());
    }

    #[test]
    fn parses_and_prints_comma_form() {
        let a: CompactCreationSequence = "1, 2,1,1,5,2".parse().unwrap();
        assert_eq!(a.to_string(), "1,2,1,1,5,2");
        assert_eq!(a.order(), 12);
        assert_eq!(a.levels(), 3);
        assert_eq!(a.co_clique(2), 5);
        assert_eq!(a.clique(0), 2);
    }

    #[test]
    fn normalizes_degenerate_sequences() {
        assert_eq!(
            CompactCreationSequence::normalize(&[0, 5]).unwrap(),
            compact(&[1, 4])
        );
        assert_eq!(
            CompactCreationSequence::normalize(&[2, 2, 0, 1, 1, 2]).unwrap(),
            compact(&[2, 3, 1, 2])
        );
        assert_eq!(
            CompactCreationSequence::normalize(&[1, 1]).unwrap(),
            compact(&[1, 1])
        );
        assert!(matches!(
            CompactCreationSequence::normalize(&[1, 2, 1, 0]),
            Err(Error::DisconnectedResult)
        ));
        assert!(CompactCreationSequence::normalize(&[1]).is_err());
    }

    #[test]
    fn realizes_adjacency() {
        let k2 = bits(&[0, 1]).to_graph();
        assert_eq!(k2.edges().collect::<Vec<_>>(), vec![(0, 1)]);

        let k5 = bits(&[0, 1, 1, 1, 1]).to_graph();
        assert_eq!(k5.edge_count(), 10);

        let star = compact(&[3, 1]).to_graph();
        assert_eq!(
            star.edges().collect::<Vec<_>>(),
            vec![(0, 3), (1, 3), (2, 3)]
        );
    }

    #[test]
    fn flips_interior_only() {
        let c = bits(&[0, 1, 1, 1, 1]);
        assert_eq!(c.flipped(1).unwrap(), bits(&[0, 0, 1, 1, 1]));
        assert!(c.flipped(0).is_err());
        assert!(c.flipped(4).is_err());
    }

    #[test]
    fn recognizes_relabelled_nsgs() {
        let a: CompactCreationSequence = "2,2,3,1,1,2".parse().unwrap();
        let g = a.to_graph();
        let perm: Vec<usize> = (0..g.order()).rev().collect();
        let c = CreationSequence::recognize(&g.relabel(&perm)).unwrap();
        assert_eq!(c.to_compact(), a);

        let p4 = SimpleGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(CreationSequence::recognize(&p4).is_none());
        assert!(CreationSequence::recognize(&SimpleGraph::new(2)).is_none());
    }
}

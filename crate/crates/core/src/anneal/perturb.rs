//! Neighbourhoods of the NSG state space.
//!
//! `hamming` and `edge` flip one interior bit of the creation sequence;
//! `move` shifts one vertex between cells at most two apart, or splits two
//! vertices off an end cell into two new singleton cells.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::error::{Error, Result};
use crate::sequence::{CompactCreationSequence, CreationSequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scheme {
    Hamming,
    Edge,
    Move,
}

impl Scheme {
    pub const ALL: [Scheme; 3] = [Scheme::Hamming, Scheme::Edge, Scheme::Move];

    pub fn name(self) -> &'static str {
        match self {
            Scheme::Hamming => "hamming",
            Scheme::Edge => "edge",
            Scheme::Move => "move",
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hamming" => Ok(Scheme::Hamming),
            "edge" => Ok(Scheme::Edge),
            "move" => Ok(Scheme::Move),
            other => Err(Error::InvalidConfig(format!(
                "unknown perturbation scheme {other:?}"
            ))),
        }
    }
}

/// Every interior position `1..n-1`.
pub fn hamming_positions(c: &CreationSequence) -> Vec<usize> {
    (1..c.len().saturating_sub(1)).collect()
}

/// Interior positions whose flip moves a single vertex between adjacent
/// cells: the two end positions, plus any position that differs from one
/// of its neighbours.
pub fn edge_positions(c: &CreationSequence) -> Vec<usize> {
    let n = c.len();
    if n < 3 {
        return Vec::new();
    }
    let bits = c.bits();
    (1..n - 1)
        .filter(|&i| i == 1 || i == n - 2 || bits[i] != bits[i - 1] || bits[i] != bits[i + 1])
        .collect()
}

/// All distinct `move` neighbours of `a`, excluding `a` itself and any
/// candidate whose normalization would disconnect the graph.
pub fn move_neighbors(a: &CompactCreationSequence) -> Vec<CompactCreationSequence> {
    let cells = a.cells();
    let r = cells.len();
    let mut raws: Vec<Vec<usize>> = Vec::new();

    for j in 0..r {
        for k in [
            j as isize - 2,
            j as isize - 1,
            j as isize + 1,
            j as isize + 2,
        ] {
            if k < 0 || k as usize >= r {
                continue;
            }
            let mut raw = cells.to_vec();
            raw[j] -= 1;
            raw[k as usize] += 1;
            raws.push(raw);
        }
    }
    for j in [0, 1] {
        if cells[j] >= 2 {
            let mut raw = vec![1, 1];
            raw.extend_from_slice(cells);
            raw[j + 2] -= 2;
            raws.push(raw);
        }
    }
    for j in [r - 2, r - 1] {
        if cells[j] >= 2 {
            let mut raw = cells.to_vec();
            raw[j] -= 2;
            raw.extend_from_slice(&[1, 1]);
            raws.push(raw);
        }
    }

    let mut seen = HashSet::new();
    raws.into_iter()
        .filter_map(|raw| CompactCreationSequence::normalize(&raw).ok())
        .filter(|b| b != a && seen.insert(b.clone()))
        .collect()
}

/// The full neighbourhood of `a` under `scheme`, as compact sequences.
pub fn neighbors(scheme: Scheme, a: &CompactCreationSequence) -> Vec<CompactCreationSequence> {
    let c = a.to_creation_sequence();
    let flip_all = |positions: Vec<usize>| {
        positions
            .into_iter()
            .map(|p| c.flipped(p).expect("interior position").to_compact())
            .collect()
    };
    match scheme {
        Scheme::Hamming => flip_all(hamming_positions(&c)),
        Scheme::Edge => flip_all(edge_positions(&c)),
        Scheme::Move => move_neighbors(a),
    }
}

/// Flips one interior bit chosen uniformly.
pub fn perturb_hamming<R: Rng + ?Sized>(
    c: &CreationSequence,
    rng: &mut R,
) -> Result<CreationSequence> {
    flip_one(c, &hamming_positions(c), rng)
}

/// Flips one bit chosen uniformly from [`edge_positions`].
pub fn perturb_edge<R: Rng + ?Sized>(
    c: &CreationSequence,
    rng: &mut R,
) -> Result<CreationSequence> {
    flip_one(c, &edge_positions(c), rng)
}

/// Picks one of [`move_neighbors`] uniformly.
pub fn perturb_move<R: Rng + ?Sized>(
    a: &CompactCreationSequence,
    rng: &mut R,
) -> Result<CompactCreationSequence> {
    let mut candidates = move_neighbors(a);
    if candidates.is_empty() {
        return Err(Error::NoNeighbors);
    }
    let i = rng.random_range(0..candidates.len());
    Ok(candidates.swap_remove(i))
}

fn flip_one<R: Rng + ?Sized>(
    c: &CreationSequence,
    positions: &[usize],
    rng: &mut R,
) -> Result<CreationSequence> {
    if positions.is_empty() {
        return Err(Error::NoNeighbors);
    }
    let pos = positions[rng.random_range(0..positions.len())];
    c.flipped(pos)
}

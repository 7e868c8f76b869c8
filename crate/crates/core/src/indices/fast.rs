//! Closed-form indices of a nested split graph, evaluated directly on its
//! compact creation sequence.
//!
//! Every vertex of a cell has the same degree and the same distance profile,
//! so each index reduces to sums over levels. All level sums are cumulative,
//! so the combinatorial indices cost `O(r)` and the spectral ones cost an
//! `r x r` eigensolve instead of an `n x n` one.

use crate::indices::GraphIndices;
use crate::quotient::QuotientMatrix;
use crate::sequence::CompactCreationSequence;
use crate::spectrum::Spectrum;

/// Cumulative level sums shared by the index formulas.
///
/// Level `k` (0-based) holds co-clique `co[k]` and clique `cl[k]`. Suffix
/// vectors carry a trailing zero so that `delta[k + 1]` is defined on the
/// last level.
#[derive(Debug, Clone, PartialEq)]
pub struct PrefixSums {
    co: Vec<u64>,
    cl: Vec<u64>,
    /// `delta[k] = sum_{j >= k} cl[j]`; identical to the edge-count `kappa`.
    delta: Vec<u64>,
    /// `gamma[k] = sum_{j >= k} co[j]`.
    gamma: Vec<u64>,
    /// `epsilon[k] = sum_{j <= k} co[j]`.
    epsilon: Vec<u64>,
    /// `zeta[k] = sum_{j <= k} cl[j]`.
    zeta: Vec<u64>,
    /// `eta[k] = sum_{j >= k} cl[j] * epsilon[j]`.
    eta: Vec<u64>,
    /// `a_i / sqrt(rho_i)` for every cell.
    alpha: Vec<f64>,
    /// `beta[k] = sum_{j >= k} alpha` over clique cells.
    beta: Vec<f64>,
}

impl PrefixSums {
    pub fn new(a: &CompactCreationSequence) -> Self {
        let h = a.levels();
        let co: Vec<u64> = (0..h).map(|k| a.co_clique(k) as u64).collect();
        let cl: Vec<u64> = (0..h).map(|k| a.clique(k) as u64).collect();

        let suffix = |v: &[u64]| {
            let mut s = vec![0u64; v.len() + 1];
            for k in (0..v.len()).rev() {
                s[k] = s[k + 1] + v[k];
            }
            s
        };
        let prefix = |v: &[u64]| {
            v.iter()
                .scan(0u64, |acc, &x| {
                    *acc += x;
                    Some(*acc)
                })
                .collect::<Vec<_>>()
        };
        let delta = suffix(&cl);
        let gamma = suffix(&co);
        let epsilon = prefix(&co);
        let zeta = prefix(&cl);
        let weighted: Vec<u64> = cl.iter().zip(&epsilon).map(|(c, e)| c * e).collect();
        let eta = suffix(&weighted);

        let mut alpha = Vec::with_capacity(2 * h);
        for k in 0..h {
            let rho_co = delta[k];
            let rho_cl = epsilon[k] + delta[0] - 1;
            alpha.push(co[k] as f64 / (rho_co as f64).sqrt());
            alpha.push(cl[k] as f64 / (rho_cl as f64).sqrt());
        }
        let mut beta = vec![0.0; h + 1];
        for k in (0..h).rev() {
            beta[k] = beta[k + 1] + alpha[2 * k + 1];
        }

        Self {
            co,
            cl,
            delta,
            gamma,
            epsilon,
            zeta,
            eta,
            alpha,
            beta,
        }
    }

    pub fn levels(&self) -> usize {
        self.co.len()
    }

    pub fn order(&self) -> u64 {
        self.gamma[0] + self.delta[0]
    }

    pub fn kappa(&self) -> &[u64] {
        &self.delta
    }

    pub fn delta(&self) -> &[u64] {
        &self.delta
    }

    pub fn gamma(&self) -> &[u64] {
        &self.gamma
    }

    pub fn epsilon(&self) -> &[u64] {
        &self.epsilon
    }

    pub fn zeta(&self) -> &[u64] {
        &self.zeta
    }

    pub fn eta(&self) -> &[u64] {
        &self.eta
    }

    pub fn alpha(&self) -> &[f64] {
        &self.alpha
    }

    pub fn beta(&self) -> &[f64] {
        &self.beta
    }

    pub fn edge_count(&self) -> u64 {
        let kappa = self.delta[0];
        let cross: u64 = self.co.iter().zip(&self.delta).map(|(a, k)| a * k).sum();
        kappa * kappa.saturating_sub(1) / 2 + cross
    }

    pub fn entropy(&self) -> f64 {
        (self.edge_count() as f64).log2()
    }

    pub fn cell_degrees(&self) -> CellDegrees {
        let mut degrees = Vec::with_capacity(2 * self.levels());
        for k in 0..self.levels() {
            degrees.push(self.delta[k]);
            degrees.push(self.epsilon[k] + self.delta[0] - 1);
        }
        CellDegrees(degrees)
    }

    pub fn randic(&self) -> f64 {
        let h = self.levels();
        let mut r = 0.0;
        for k in 0..h {
            r += self.alpha[2 * k] * self.beta[k];
            if k + 1 < h {
                r += self.alpha[2 * k + 1] * self.beta[k + 1];
            }
            let a = self.cl[k] as f64;
            let rho = (self.epsilon[k] + self.delta[0] - 1) as f64;
            r += a * (a - 1.0) / (2.0 * rho);
        }
        r
    }

    pub fn wiener(&self) -> u128 {
        let h = self.levels();
        let mut w: i128 = 0;
        for k in 0..h {
            let co = self.co[k] as i128;
            let cl = self.cl[k] as i128;
            w += co * (co - 1 + self.delta[k] as i128) + cl * (cl - 1) / 2;
            if k + 1 < h {
                let gamma = self.gamma[k + 1] as i128;
                let delta = self.delta[k + 1] as i128;
                w += 2 * co * gamma + cl * (delta + 2 * gamma);
            }
        }
        w as u128
    }

    pub fn szeged(&self) -> u128 {
        let h = self.levels();
        let mut sz: i128 = 0;
        for k in 0..h {
            let cl = self.cl[k] as i128;
            sz += cl * (cl - 1) / 2;
            if k + 1 < h {
                let delta = self.delta[k + 1] as i128;
                let eps = self.epsilon[k] as i128;
                sz += cl * (delta * (1 - eps) + self.eta[k + 1] as i128);
            }
            let co = self.co[k] as i128;
            if k == 0 {
                sz += co * self.eta[0] as i128;
            } else {
                sz += co * (self.eta[k] as i128 + self.delta[k] as i128 * self.zeta[k - 1] as i128);
            }
        }
        sz as u128
    }

    pub fn copi(&self) -> u128 {
        let h = self.levels();
        let mut total: i128 = 0;
        for k in 0..h {
            if k + 1 < h {
                let cl = self.cl[k] as i128;
                total += cl
                    * (self.eta[k + 1] as i128
                        - self.delta[k + 1] as i128 * self.epsilon[k] as i128);
            }
            let co = self.co[k] as i128;
            let eta = self.eta[k] as i128;
            let delta = self.delta[k] as i128;
            if k == 0 {
                total += co * (eta - delta);
            } else {
                total += co * (delta * (self.zeta[k - 1] as i128 - 1) + eta);
            }
        }
        total as u128
    }
}

/// Common vertex degree of each cell, in cell order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellDegrees(pub Vec<u64>);

impl CellDegrees {
    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }
}

/// The adjacency spectrum split into the `r` main eigenvalues (those of the
/// quotient matrix) and the two non-main eigenvalues `-1` and `0`.
#[derive(Debug, Clone, PartialEq)]
pub struct NsgSpectrum {
    pub main: Vec<f64>,
    /// Multiplicity of `-1`: one less than each clique size, summed.
    pub minus_one: usize,
    /// Multiplicity of `0`: one less than each co-clique size, summed.
    pub zero: usize,
}

impl NsgSpectrum {
    pub fn new(a: &CompactCreationSequence) -> Self {
        let h = a.levels();
        Self {
            main: QuotientMatrix::new(a).eigenvalues(),
            minus_one: a.clique_total() - h,
            zero: a.co_clique_total() - h,
        }
    }

    pub fn order(&self) -> usize {
        self.main.len() + self.minus_one + self.zero
    }

    pub fn to_spectrum(&self) -> Spectrum {
        let mut values = self.main.clone();
        values.extend(std::iter::repeat_n(-1.0, self.minus_one));
        values.extend(std::iter::repeat_n(0.0, self.zero));
        Spectrum::from_unsorted(values)
    }

    pub fn estrada(&self) -> f64 {
        self.minus_one as f64 * (-1.0f64).exp()
            + self.zero as f64
            + self.main.iter().map(|l| l.exp()).sum::<f64>()
    }

    pub fn gutman(&self) -> f64 {
        self.minus_one as f64 + self.main.iter().map(|l| l.abs()).sum::<f64>()
    }

    pub fn resolvent(&self) -> f64 {
        let n = self.order() as f64;
        self.minus_one as f64 / (n + 1.0)
            + self.zero as f64 / n
            + self.main.iter().map(|l| 1.0 / (n - l)).sum::<f64>()
    }
}

pub fn edge_count(a: &CompactCreationSequence) -> u64 {
    PrefixSums::new(a).edge_count()
}

/// `log2` of the edge count.
pub fn entropy(a: &CompactCreationSequence) -> f64 {
    PrefixSums::new(a).entropy()
}

pub fn cell_degrees(a: &CompactCreationSequence) -> CellDegrees {
    PrefixSums::new(a).cell_degrees()
}

pub fn randic(a: &CompactCreationSequence) -> f64 {
    PrefixSums::new(a).randic()
}

pub fn wiener(a: &CompactCreationSequence) -> u128 {
    PrefixSums::new(a).wiener()
}

pub fn szeged(a: &CompactCreationSequence) -> u128 {
    PrefixSums::new(a).szeged()
}

pub fn copi(a: &CompactCreationSequence) -> u128 {
    PrefixSums::new(a).copi()
}

pub fn nsg_spectrum(a: &CompactCreationSequence) -> Spectrum {
    NsgSpectrum::new(a).to_spectrum()
}

pub fn estrada(a: &CompactCreationSequence) -> f64 {
    NsgSpectrum::new(a).estrada()
}

pub fn gutman_energy(a: &CompactCreationSequence) -> f64 {
    NsgSpectrum::new(a).gutman()
}

pub fn resolvent_energy(a: &CompactCreationSequence) -> f64 {
    NsgSpectrum::new(a).resolvent()
}

/// All indices, sharing one [`PrefixSums`] and one eigensolve.
pub fn indices(a: &CompactCreationSequence) -> GraphIndices {
    let sums = PrefixSums::new(a);
    let spectrum = NsgSpectrum::new(a);
    GraphIndices {
        edges: sums.edge_count(),
        entropy: sums.entropy(),
        randic: sums.randic(),
        wiener: Some(sums.wiener()),
        szeged: Some(sums.szeged()),
        copi: Some(sums.copi()),
        estrada: spectrum.estrada(),
        gutman: spectrum.gutman(),
        resolvent: spectrum.resolvent(),
    }
}

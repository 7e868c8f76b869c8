//! Simulated annealing over connected nested split graphs on a fixed number
//! of vertices.

mod perturb;
mod schedule;
mod timeline;

pub use perturb::{
    edge_positions, hamming_positions, move_neighbors, neighbors, perturb_edge, perturb_hamming,
    perturb_move, Scheme,
};
pub use schedule::{accept, Schedule};
pub use timeline::{Timeline, TimelineRecord};

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::distance::{scaled_walk_matrix, CellWalkMatrix, ScaledWalkMatrix};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::indices::{fast, oracle};
use crate::sequence::{CompactCreationSequence, CreationSequence};
use crate::spectrum::Spectrum;
use timeline::WindowCounter;

/// Which graph distance is minimized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Metric {
    Walk,
    Spectral,
}

impl Metric {
    pub fn name(self) -> &'static str {
        match self {
            Metric::Walk => "walk",
            Metric::Spectral => "spectral",
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for Metric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "walk" => Ok(Metric::Walk),
            "spectral" => Ok(Metric::Spectral),
            other => Err(Error::InvalidConfig(format!("unknown metric {other:?}"))),
        }
    }
}

/// Energy function: distance from a fixed target graph to a candidate NSG.
///
/// The target's walk matrix or spectrum is computed once; candidates go
/// through the quotient-matrix fast paths. For the walk metric, NSG vertex
/// `i` (construction order) is paired with target vertex `i`.
#[derive(Debug, Clone)]
pub enum Objective {
    Walk(ScaledWalkMatrix),
    Spectral(Spectrum),
}

impl Objective {
    pub fn new(metric: Metric, target: &SimpleGraph) -> Result<Self> {
        Ok(match metric {
            Metric::Walk => Objective::Walk(scaled_walk_matrix(target)?),
            Metric::Spectral => Objective::Spectral(oracle::spectrum(target)),
        })
    }

    pub fn order(&self) -> usize {
        match self {
            Objective::Walk(w) => w.order(),
            Objective::Spectral(s) => s.len(),
        }
    }

    /// # Panics
    ///
    /// If `a` has a different vertex count from the target.
    pub fn energy(&self, a: &CompactCreationSequence) -> f64 {
        let result = match self {
            Objective::Walk(target) => CellWalkMatrix::new(a).distance_to(target),
            Objective::Spectral(target) => fast::nsg_spectrum(a).distance(target),
        };
        result.expect("candidate order matches target")
    }
}

#[derive(Debug, Clone)]
pub struct AnnealConfig {
    pub scheme: Scheme,
    pub metric: Metric,
    pub schedule: Schedule,
    pub seed: u64,
    /// Steps per telemetry window; `None` means `steps / 100`.
    pub window: Option<usize>,
}

impl AnnealConfig {
    pub fn new(scheme: Scheme, metric: Metric, schedule: Schedule, seed: u64) -> Self {
        Self {
            scheme,
            metric,
            schedule,
            seed,
            window: None,
        }
    }

    pub fn window_size(&self) -> usize {
        self.window
            .unwrap_or(self.schedule.steps() / 100)
            .clamp(1, self.schedule.steps())
    }
}

/// A point in the state space with its energy cached.
#[derive(Debug, Clone, PartialEq)]
pub struct AnnealState {
    compact: CompactCreationSequence,
    creation: CreationSequence,
    energy: f64,
}

impl AnnealState {
    pub fn from_compact(compact: CompactCreationSequence, objective: &Objective) -> Self {
        let energy = objective.energy(&compact);
        let creation = compact.to_creation_sequence();
        Self {
            compact,
            creation,
            energy,
        }
    }

    pub fn from_creation(creation: CreationSequence, objective: &Objective) -> Self {
        let compact = creation.to_compact();
        let energy = objective.energy(&compact);
        Self {
            compact,
            creation,
            energy,
        }
    }

    pub fn compact(&self) -> &CompactCreationSequence {
        &self.compact
    }

    pub fn creation(&self) -> &CreationSequence {
        &self.creation
    }

    pub fn energy(&self) -> f64 {
        self.energy
    }

    /// Draws a neighbour under `scheme` and evaluates its energy.
    pub fn perturb<R: Rng + ?Sized>(
        &self,
        scheme: Scheme,
        objective: &Objective,
        rng: &mut R,
    ) -> Result<Self> {
        Ok(match scheme {
            Scheme::Hamming => {
                Self::from_creation(perturb_hamming(&self.creation, rng)?, objective)
            }
            Scheme::Edge => Self::from_creation(perturb_edge(&self.creation, rng)?, objective),
            Scheme::Move => Self::from_compact(perturb_move(&self.compact, rng)?, objective),
        })
    }
}

/// Uniformly random creation sequence on `n` vertices.
pub fn initial_state<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<CreationSequence> {
    if n < 2 {
        return Err(Error::InvalidSequence(format!(
            "need at least 2 vertices, got {n}"
        )));
    }
    let mut bits = Vec::with_capacity(n);
    bits.push(false);
    bits.extend((0..n - 2).map(|_| rng.random::<bool>()));
    bits.push(true);
    CreationSequence::new(bits)
}

#[derive(Debug, Clone)]
pub struct AnnealOutcome {
    /// Lowest-energy state seen during the run.
    pub best: CompactCreationSequence,
    pub best_energy: f64,
    /// State of the chain after the last step.
    pub last: CompactCreationSequence,
    pub last_energy: f64,
    pub accepted: usize,
    pub timeline: Timeline,
}

/// Runs one annealing chain toward `target`.
///
/// The run is fully determined by `config` (including the seed).
pub fn anneal(target: &SimpleGraph, config: &AnnealConfig) -> Result<AnnealOutcome> {
    let n = target.order();
    if n < 3 {
        return Err(Error::InvalidConfig(format!(
            "annealing needs at least 3 vertices, got {n}"
        )));
    }
    let objective = Objective::new(config.metric, target)?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let schedule = &config.schedule;

    let mut current = AnnealState::from_creation(initial_state(n, &mut rng)?, &objective);
    let mut best = current.clone();
    let mut accepted = 0;
    let mut window = WindowCounter::new(config.window_size());
    let mut timeline = Timeline::default();

    for step in 0..schedule.steps() {
        let temperature = schedule.temperature(step);
        let candidate = current.perturb(config.scheme, &objective, &mut rng)?;
        let delta = candidate.energy - current.energy;
        let u: f64 = rng.random();
        let ok = accept(delta, temperature, u);
        window.record(ok, delta < 0.0);
        if ok {
            accepted += 1;
            current = candidate;
            if current.energy < best.energy {
                best = current.clone();
            }
        }
        if window.is_full() || (step + 1 == schedule.steps() && !window.is_empty()) {
            let (acceptance_rate, improvement_rate) = window.drain();
            timeline.records.push(TimelineRecord {
                step,
                temperature,
                current_energy: current.energy,
                best_energy: best.energy,
                acceptance_rate,
                improvement_rate,
            });
        }
    }

    Ok(AnnealOutcome {
        best: best.compact,
        best_energy: best.energy,
        last: current.compact,
        last_energy: current.energy,
        accepted,
        timeline,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(cells: &[usize]) -> CompactCreationSequence {
        CompactCreationSequence::new(cells.to_vec()).unwrap()
    }

    #[test]
    fn initial_state_is_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert_eq!(initial_state(2, &mut rng).unwrap().to_compact(), a(&[1, 1]));
        for _ in 0..20 {
            let c = initial_state(9, &mut rng).unwrap();
            assert_eq!(c.len(), 9);
            assert!(c.to_graph().is_connected());
        }
        let x = initial_state(5, &mut ChaCha8Rng::seed_from_u64(3)).unwrap();
        let y = initial_state(5, &mut ChaCha8Rng::seed_from_u64(3)).unwrap();
        assert_eq!(x, y);
        assert!(initial_state(1, &mut rng).is_err());
    }

    #[test]
    fn complete_graph_is_found() {
        let k5 = a(&[1, 4]).to_graph();
        for scheme in Scheme::ALL {
            let config = AnnealConfig::new(
                scheme,
                Metric::Spectral,
                Schedule::new(100.0, 1e-7, 5_000).unwrap(),
                11,
            );
            let out = anneal(&k5, &config).unwrap();
            assert_eq!(out.best, a(&[1, 4]), "{scheme}");
            assert!(out.best_energy < 1e-9);
        }
    }

    #[test]
    fn timeline_shape() {
        let target = a(&[2, 2, 3, 1, 1, 2]).to_graph();
        let mut config = AnnealConfig::new(
            Scheme::Move,
            Metric::Walk,
            Schedule::new(100.0, 1e-7, 1_050).unwrap(),
            5,
        );
        config.window = Some(100);
        let out = anneal(&target, &config).unwrap();
        let steps: Vec<usize> = out.timeline.records.iter().map(|r| r.step).collect();
        assert_eq!(steps.len(), 11);
        assert_eq!(steps[0], 99);
        assert_eq!(*steps.last().unwrap(), 1_049);
        for pair in out.timeline.records.windows(2) {
            assert!(pair[1].best_energy <= pair[0].best_energy);
        }
        assert!(out.best_energy <= out.last_energy);
    }

    #[test]
    fn rejects_tiny_targets() {
        let config = AnnealConfig::new(Scheme::Hamming, Metric::Spectral, Schedule::default(), 0);
        assert!(anneal(&a(&[1, 1]).to_graph(), &config).is_err());
        let edgeless = SimpleGraph::new(5);
        let config = AnnealConfig::new(Scheme::Hamming, Metric::Walk, Schedule::default(), 0);
        assert!(matches!(anneal(&edgeless, &config), Err(Error::NoEdges)));
    }
}

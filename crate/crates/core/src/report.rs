//! Machine-readable results of an approximation run.

use std::io;
use std::time::Instant;

use sha2::{Digest, Sha256};

use crate::anneal::{anneal, AnnealConfig, AnnealOutcome};
use crate::error::{Error, Result};
use crate::indices::{fast, oracle, GraphIndices};
use crate::io::EdgeList;
use crate::sequence::CompactCreationSequence;

/// Hex SHA-256 of the raw input text.
pub fn digest(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

#[derive(Debug, Clone)]
pub struct RunReport {
    pub input_digest: String,
    pub vertices: usize,
    pub edges: usize,
    pub config: AnnealConfig,
    pub runs: usize,
    /// Seed of the run that produced `best`.
    pub best_seed: u64,
    pub best: CompactCreationSequence,
    pub best_energy: f64,
    pub last: CompactCreationSequence,
    pub last_energy: f64,
    pub wall_time_secs: f64,
    pub vertex_labels: Vec<String>,
    /// `None` when the input has no edges.
    pub input_indices: Option<GraphIndices>,
    pub nsg_indices: GraphIndices,
}

impl RunReport {
    /// Field names excluded from determinism comparisons.
    pub const VOLATILE_FIELDS: [&'static str; 1] = ["wall_time_secs"];

    /// `key,value` rows describing the run.
    pub fn write_summary_csv<W: io::Write>(&self, writer: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        w.write_record(["key", "value"])?;
        let schedule = &self.config.schedule;
        let rows: Vec<(&str, String)> = vec![
            ("input_sha256", self.input_digest.clone()),
            ("vertices", self.vertices.to_string()),
            ("edges", self.edges.to_string()),
            ("metric", self.config.metric.to_string()),
            ("perturbation", self.config.scheme.to_string()),
            ("t0", schedule.initial().to_string()),
            ("t1", schedule.final_temperature().to_string()),
            ("steps", schedule.steps().to_string()),
            ("seed", self.config.seed.to_string()),
            ("runs", self.runs.to_string()),
            ("best_seed", self.best_seed.to_string()),
            ("best_compact", self.best.to_string()),
            ("best_energy", self.best_energy.to_string()),
            ("final_compact", self.last.to_string()),
            ("final_energy", self.last_energy.to_string()),
            ("vertex_labels", self.vertex_labels.join(" ")),
            ("wall_time_secs", self.wall_time_secs.to_string()),
        ];
        for (k, v) in rows {
            w.write_record([k, v.as_str()])?;
        }
        w.flush()?;
        Ok(())
    }

    /// Indices of the input graph (oracle) and of the best NSG (fast).
    pub fn write_indices_csv<W: io::Write>(&self, writer: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        let mut header = vec!["graph", "method"];
        header.extend(GraphIndices::NAMES);
        w.write_record(&header)?;
        if let Some(input) = &self.input_indices {
            let mut row = vec!["input".to_string(), "oracle".to_string()];
            row.extend(input.full_precision());
            w.write_record(&row)?;
        }
        let mut row = vec!["nsg".to_string(), "fast".to_string()];
        row.extend(self.nsg_indices.full_precision());
        w.write_record(&row)?;
        w.flush()?;
        Ok(())
    }
}

/// Runs `runs` independent chains (seeds `config.seed`, `config.seed + 1`,
/// ...) on separate threads and reports the best. Ties go to the lower seed.
pub fn approximate(
    input: &EdgeList,
    input_digest: &str,
    config: &AnnealConfig,
    runs: usize,
) -> Result<(RunReport, AnnealOutcome)> {
    if runs == 0 {
        return Err(Error::InvalidConfig("runs must be at least 1".into()));
    }
    let started = Instant::now();
    let configs: Vec<AnnealConfig> = (0..runs as u64)
        .map(|i| AnnealConfig {
            seed: config.seed.wrapping_add(i),
            ..config.clone()
        })
        .collect();
    let outcomes: Vec<Result<AnnealOutcome>> = if runs == 1 {
        vec![anneal(&input.graph, &configs[0])]
    } else {
        std::thread::scope(|s| {
            let handles: Vec<_> = configs
                .iter()
                .map(|c| s.spawn(|| anneal(&input.graph, c)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("annealing thread panicked"))
                .collect()
        })
    };

    let mut best: Option<(u64, AnnealOutcome)> = None;
    for (c, outcome) in configs.iter().zip(outcomes) {
        let outcome = outcome?;
        if best
            .as_ref()
            .is_none_or(|(_, b)| outcome.best_energy < b.best_energy)
        {
            best = Some((c.seed, outcome));
        }
    }
    let (best_seed, outcome) = best.expect("at least one run");
    let wall_time_secs = started.elapsed().as_secs_f64();

    let input_indices = match oracle::indices(&input.graph) {
        Ok(ix) => Some(ix),
        Err(Error::EmptyGraph) => None,
        Err(e) => return Err(e),
    };
    let report = RunReport {
        input_digest: input_digest.to_string(),
        vertices: input.graph.order(),
        edges: input.graph.edge_count(),
        config: config.clone(),
        runs,
        best_seed,
        best: outcome.best.clone(),
        best_energy: outcome.best_energy,
        last: outcome.last.clone(),
        last_energy: outcome.last_energy,
        wall_time_secs,
        vertex_labels: input.labels.clone(),
        input_indices,
        nsg_indices: fast::indices(&outcome.best),
    };
    Ok((report, outcome))
}

use std::io;

use crate::error::Result;

/// One telemetry sample, taken at the end of a window of steps.
#[derive(Debug, Clone, PartialEq)]
pub struct TimelineRecord {
    /// Index of the last step in the window.
    pub step: usize,
    pub temperature: f64,
    pub current_energy: f64,
    pub best_energy: f64,
    /// Fraction of proposals accepted within the window.
    pub acceptance_rate: f64,
    /// Fraction of proposals with negative energy change within the window.
    pub improvement_rate: f64,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Timeline {
    pub records: Vec<TimelineRecord>,
}

impl Timeline {
    pub const HEADER: [&'static str; 6] = [
        "step",
        "temperature",
        "current_energy",
        "best_energy",
        "acceptance_rate",
        "improvement_rate",
    ];

    pub fn write_csv<W: io::Write>(&self, writer: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        w.write_record(Self::HEADER)?;
        for r in &self.records {
            w.write_record([
                r.step.to_string(),
                r.temperature.to_string(),
                r.current_energy.to_string(),
                r.best_energy.to_string(),
                r.acceptance_rate.to_string(),
                r.improvement_rate.to_string(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }
}

/// Accumulates per-window counters.
#[derive(Debug)]
pub(crate) struct WindowCounter {
    size: usize,
    steps: usize,
    accepted: usize,
    improved: usize,
}

impl WindowCounter {
    pub(crate) fn new(size: usize) -> Self {
        Self {
            size: size.max(1),
            steps: 0,
            accepted: 0,
            improved: 0,
        }
    }

    pub(crate) fn record(&mut self, accepted: bool, improved: bool) {
        self.steps += 1;
        self.accepted += usize::from(accepted);
        self.improved += usize::from(improved);
    }

    pub(crate) fn is_full(&self) -> bool {
        self.steps >= self.size
    }

    pub(crate) fn is_empty(&self) -> bool {
        self.steps == 0
    }

    /// Returns `(acceptance_rate, improvement_rate)` and resets.
    pub(crate) fn drain(&mut self) -> (f64, f64) {
        let steps = self.steps.max(1) as f64;
        let rates = (self.accepted as f64 / steps, self.improved as f64 / steps);
        self.steps = 0;
        self.accepted = 0;
        self.improved = 0;
        rates
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_header_and_rows() {
        let t = Timeline {
            records: vec![TimelineRecord {
                step: 9,
                temperature: 1.5,
                current_energy: 2.0,
                best_energy: 0.5,
                acceptance_rate: 1.0,
                improvement_rate: 0.5,
            }],
        };
        let mut out = Vec::new();
        t.write_csv(&mut out).unwrap();
        assert_eq!(
            String::from_utf8(out).unwrap(),
            "step,temperature,current_energy,best_energy,acceptance_rate,improvement_rate\n\
             9,1.5,2,0.5,1,0.5\n"
        );
    }

    #[test]
    fn window_rates() {
        let mut w = WindowCounter::new(4);
        w.record(true, true);
        w.record(true, false);
        w.record(false, false);
        assert!(!w.is_full());
        w.record(true, false);
        assert!(w.is_full());
        assert_eq!(w.drain(), (0.75, 0.25));
        assert!(w.is_empty());
    }
}

use crate::error::{Error, Result};

/// Geometric cooling from `initial` to `final_temperature` over `steps` steps.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Schedule {
    initial: f64,
    final_temperature: f64,
    steps: usize,
}

impl Schedule {
    pub fn new(initial: f64, final_temperature: f64, steps: usize) -> Result<Self> {
        if !(final_temperature > 0.0 && initial > final_temperature && initial.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "temperatures must satisfy t0 > t1 > 0, got t0={initial}, t1={final_temperature}"
            )));
        }
        if steps < 2 {
            return Err(Error::InvalidConfig(format!(
                "need at least 2 steps, got {steps}"
            )));
        }
        Ok(Self {
            initial,
            final_temperature,
            steps,
        })
    }

    pub fn initial(&self) -> f64 {
        self.initial
    }

    pub fn final_temperature(&self) -> f64 {
        self.final_temperature
    }

    pub fn steps(&self) -> usize {
        self.steps
    }

    /// `T(t) = T0 (T1 / T0)^(t / (N - 1))`, log-linear in the step index.
    pub fn temperature(&self, step: usize) -> f64 {
        if step + 1 >= self.steps {
            return self.final_temperature;
        }
        let fraction = step as f64 / (self.steps - 1) as f64;
        self.initial * (self.final_temperature / self.initial).powf(fraction)
    }
}

impl Default for Schedule {
    /// `10^2` down to `10^-7` over one million steps.
    fn default() -> Self {
        Self {
            initial: 1e2,
            final_temperature: 1e-7,
            steps: 1_000_000,
        }
    }
}

/// Metropolis rule: always accept an improvement, otherwise accept iff
/// `u < exp(-delta_e / temperature)`. Ties (`delta_e == 0`) take the second
/// branch and pass for any `u < 1`.
pub fn accept(delta_e: f64, temperature: f64, u: f64) -> bool {
    delta_e < 0.0 || u < (-delta_e / temperature).exp()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn endpoints_and_midpoint() {
        let s = Schedule::new(100.0, 1e-7, 1_000_000).unwrap();
        assert_eq!(s.temperature(0), 100.0);
        assert_eq!(s.temperature(999_999), 1e-7);
        // (N - 1) / 2 is not an integer; interpolate the two neighbours
        let mid = (s.temperature(499_999) * s.temperature(500_000)).sqrt();
        assert!((mid / 10f64.powf(-2.5) - 1.0).abs() < 1e-9);
    }

    #[test]
    fn odd_step_count_hits_midpoint_exactly() {
        let s = Schedule::new(100.0, 1e-7, 1_000_001).unwrap();
        assert!((s.temperature(500_000) / 10f64.powf(-2.5) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn temperature_decreases() {
        let s = Schedule::new(10.0, 0.1, 50).unwrap();
        for t in 1..50 {
            assert!(s.temperature(t) < s.temperature(t - 1));
        }
    }

    #[test]
    fn rejects_bad_schedules() {
        assert!(Schedule::new(1.0, 2.0, 10).is_err());
        assert!(Schedule::new(1.0, 0.0, 10).is_err());
        assert!(Schedule::new(1.0, 0.5, 1).is_err());
    }

    #[test]
    fn acceptance_rule() {
        assert!(accept(-1.0, 1e-9, 0.999));
        assert!(accept(0.0, 1.0, 0.5));
        assert!(!accept(1.0, 0.1, 0.5));
        assert!(accept(1.0, 0.1, 1e-5));
        for u in [0.0, 1e-300, 1e-10, 0.5, 0.999_999] {
            assert!(!accept(1.0, 1e-12, u));
        }
    }
}

use crate::error::{Error, Result};

/// Real eigenvalues sorted in non-increasing order.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum(Vec<f64>);

impl Spectrum {
    pub fn from_unsorted(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Self(values)
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn largest(&self) -> Option<f64> {
        self.0.first().copied()
    }

    /// Euclidean distance between the two sorted eigenvalue vectors.
    pub fn distance(&self, other: &Spectrum) -> Result<f64> {
        if self.len() != other.len() {
            return Err(Error::SizeMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(self
            .0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt())
    }

    /// Largest elementwise deviation between the two sorted vectors.
    pub fn max_deviation(&self, other: &Spectrum) -> Result<f64> {
        if self.len() != other.len() {
            return Err(Error::SizeMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(self
            .0
            .iter()
            .zip(&other.0)
            .fold(0.0, |m, (a, b)| f64::max(m, (a - b).abs())))
    }

    pub fn estrada(&self) -> f64 {
        self.0.iter().map(|l| l.exp()).sum()
    }

    pub fn energy(&self) -> f64 {
        self.0.iter().map(|l| l.abs()).sum()
    }

    /// `sum 1 / (n - lambda)` with `n` the number of eigenvalues.
    pub fn resolvent_energy(&self) -> f64 {
        let n = self.len() as f64;
        self.0.iter().map(|l| 1.0 / (n - l)).sum()
    }
}

impl AsRef<[f64]> for Spectrum {
    fn as_ref(&self) -> &[f64] {
        &self.0
    }
}

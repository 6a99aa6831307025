use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const SUM_TOL: f64 = 1e-9;

/// Positive weights, each in `(0, 1]`, summing to 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct WeightVector(Vec<f64>);

impl WeightVector {
    pub fn new(w: Vec<f64>) -> Result<Self> {
        if w.is_empty() {
            return Err(Error::BadParameter("weight vector is empty".into()));
        }
        if let Some((j, x)) = w
            .iter()
            .enumerate()
            .find(|(_, x)| !(x.is_finite() && **x > 0.0 && **x <= 1.0))
        {
            return Err(Error::BadParameter(format!(
                "weight {j} = {x} is outside (0, 1]"
            )));
        }
        let sum: f64 = w.iter().sum();
        if (sum - 1.0).abs() > SUM_TOL {
            return Err(Error::BadParameter(format!(
                "weights sum to {sum}, expected 1"
            )));
        }
        Ok(WeightVector(w))
    }

    /// `n` equal weights. `1/n` is computed once and the last entry absorbs
    /// the rounding remainder.
    pub fn equal(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::BadParameter("weight vector is empty".into()));
        }
        let share = 1.0 / n as f64;
        let mut w = vec![share; n];
        w[n - 1] = 1.0 - share * (n - 1) as f64;
        WeightVector::new(w)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub(crate) fn check_len(&self, n: usize) -> Result<()> {
        if self.len() != n {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                found: n,
            });
        }
        Ok(())
    }
}

impl TryFrom<Vec<f64>> for WeightVector {
    type Error = Error;

    fn try_from(w: Vec<f64>) -> Result<Self> {
        WeightVector::new(w)
    }
}

impl From<WeightVector> for Vec<f64> {
    fn from(w: WeightVector) -> Self {
        w.0
    }
}

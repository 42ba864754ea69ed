use rayon::prelude::*;

use crate::dat::{ErrorRecord, ErrorTable};
use crate::system::System;
use crate::{Error, Result};

/// Relative representation error over an evenly spaced range.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub systems: Vec<System>,
    pub min: f64,
    pub max: f64,
    pub step: f64,
}

impl SweepConfig {
    /// Samples `min, min + step, …` up to and including `max` (up to
    /// roundoff in the sample count).
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    pub fn samples(&self) -> Result<Vec<f64>> {
        if !(self.step > 0.0) || !self.step.is_finite() {
            return Err(Error::Config("step must be positive".into()));
        }
        if !(self.min <= self.max) {
            return Err(Error::Config("min must not exceed max".into()));
        }
        if self.min <= 0.0 && self.max >= 0.0 {
            return Err(Error::Config("sweep range must exclude 0".into()));
        }
        let count = ((self.max - self.min) / self.step + 1e-9).floor() as usize + 1;
        Ok((0..count).map(|i| self.min + i as f64 * self.step).collect())
    }
}

/// `|round(x) - x| / |x|` for every sample and system; overflow shows as `inf`.
pub fn repr_error_sweep(cfg: &SweepConfig) -> Result<ErrorTable> {
    let xs = cfg.samples()?;
    let records = xs
        .par_iter()
        .map(|&x| {
            let errors = cfg
                .systems
                .iter()
                .map(|s| s.round(x).map(|r| relative_error(r, x)))
                .collect::<Result<Vec<_>>>()?;
            Ok(ErrorRecord { key: x, errors })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ErrorTable {
        key_name: "x".into(),
        columns: cfg.systems.iter().map(System::column_name).collect(),
        records,
    })
}

fn relative_error(rounded: f64, x: f64) -> f64 {
    if !rounded.is_finite() {
        return f64::INFINITY;
    }
    (rounded - x).abs() / x.abs()
}

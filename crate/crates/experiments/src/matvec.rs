//! Normwise backward error of `y = A x` computed in simulated arithmetic.
//!
//! Inputs are drawn in binary64, rounded into the system, and every
//! product and every running-sum addition (left to right) is one rounded
//! operation of the system. The error is `‖ŷ - y‖∞ / (‖A‖∞ ‖x‖∞)` against
//! the binary64 product of the unrounded inputs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rayon::prelude::*;

use crate::dat::{ErrorRecord, ErrorTable};
use crate::system::{Arithmetic, System};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct MatvecConfig {
    pub systems: Vec<System>,
    pub dims: Vec<usize>,
    /// Entries of `A` are uniform on `(lo, hi)`; `x` is uniform on `(0, 1)`.
    pub lo: f64,
    pub hi: f64,
    pub seed: u64,
}

impl MatvecConfig {
    // negated comparisons so NaN bounds are rejected
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    fn validate(&self) -> Result<()> {
        if self.dims.contains(&0) {
            return Err(Error::Config("dimensions must be positive".into()));
        }
        if self.dims.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Config("dimensions must be sorted ascending".into()));
        }
        if !(self.lo < self.hi) || !self.lo.is_finite() || !self.hi.is_finite() {
            return Err(Error::Config("need finite lo < hi".into()));
        }
        Ok(())
    }
}

/// A problem instance: row-major `A` (n×n) and `x`.
#[derive(Debug, Clone, PartialEq)]
pub struct Problem {
    pub n: usize,
    pub a: Vec<f64>,
    pub x: Vec<f64>,
}

impl Problem {
    /// Draws from the ChaCha20 stream `n` of `seed`, so every dimension has
    /// its own independent substream.
    pub fn generate(n: usize, lo: f64, hi: f64, seed: u64) -> Self {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        rng.set_stream(n as u64);
        let a = (0..n * n).map(|_| open_uniform(&mut rng, lo, hi)).collect();
        let x = (0..n).map(|_| open_uniform(&mut rng, 0.0, 1.0)).collect();
        Problem { n, a, x }
    }

    pub fn reference(&self) -> Vec<f64> {
        self.a.chunks(self.n).map(|row| row.iter().zip(&self.x).map(|(a, x)| a * x).sum()).collect()
    }

    /// `‖ŷ - y‖∞ / (‖A‖∞ ‖x‖∞)`, `inf` if any component of `ŷ` is not finite.
    pub fn backward_error(&self, computed: &[f64]) -> f64 {
        if computed.iter().any(|v| !v.is_finite()) {
            return f64::INFINITY;
        }
        let y = self.reference();
        let resid = computed.iter().zip(&y).map(|(c, y)| (c - y).abs()).fold(0.0, f64::max);
        let norm_a =
            self.a.chunks(self.n).map(|r| r.iter().map(|v| v.abs()).sum::<f64>()).fold(0.0, f64::max);
        let norm_x = self.x.iter().map(|v| v.abs()).fold(0.0, f64::max);
        resid / (norm_a * norm_x)
    }

    pub fn simulate<A: Arithmetic>(&self, arith: &A) -> Vec<f64> {
        let x: Vec<A::Value> = self.x.iter().map(|&v| arith.convert(v)).collect();
        self.a
            .par_chunks(self.n)
            .map(|row| {
                let mut acc = arith.zero();
                for (&a, &xj) in row.iter().zip(&x) {
                    let p = arith.mul(arith.convert(a), xj);
                    acc = arith.add(acc, p);
                }
                arith.to_f64(acc)
            })
            .collect()
    }

    pub fn simulate_system(&self, system: &System) -> Vec<f64> {
        match system {
            System::Sli(f) => self.simulate(f),
            System::Float(f) => self.simulate(f),
        }
    }
}

fn open_uniform(rng: &mut ChaCha20Rng, lo: f64, hi: f64) -> f64 {
    loop {
        let v = rng.gen_range(lo..hi);
        if v > lo {
            return v;
        }
    }
}

/// One record per dimension, keyed by `n`.
pub fn matvec_backward_error(cfg: &MatvecConfig) -> Result<ErrorTable> {
    cfg.validate()?;
    let records = cfg
        .dims
        .iter()
        .map(|&n| {
            let p = Problem::generate(n, cfg.lo, cfg.hi, cfg.seed);
            let errors = cfg.systems.iter().map(|s| p.backward_error(&p.simulate_system(s))).collect();
            ErrorRecord { key: n as f64, errors }
        })
        .collect();
    Ok(ErrorTable {
        key_name: "n".into(),
        columns: cfg.systems.iter().map(System::column_name).collect(),
        records,
    })
}

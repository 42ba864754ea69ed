use std::fmt;
use std::str::FromStr;

use sli_core::minifloat::{fl, fl_op, Op};
use sli_core::{FloatFormat, SliFormat, SliNumber};

/// A number system compared in the experiments.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum System {
    Sli(SliFormat),
    Float(FloatFormat),
}

impl System {
    /// Column name in data files: `level-index` for SLI, the format name
    /// for floats.
    pub fn column_name(&self) -> String {
        match self {
            System::Sli(_) => "level-index".to_string(),
            System::Float(f) => f.to_string(),
        }
    }

    /// Nearest value of the system to `x`, as binary64.
    pub fn round(&self, x: f64) -> crate::Result<f64> {
        Ok(match self {
            System::Sli(f) => sli_core::encode(x, *f)?.to_f64(),
            System::Float(f) => fl(x, *f),
        })
    }
}

impl FromStr for System {
    type Err = sli_core::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.starts_with("sli") {
            return s.parse().map(System::Sli);
        }
        s.parse().map(System::Float)
    }
}

impl fmt::Display for System {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            System::Sli(s) => s.fmt(f),
            System::Float(x) => x.fmt(f),
        }
    }
}

/// Scalar arithmetic simulated in some number system.
pub trait Arithmetic: Sync {
    type Value: Copy + Send + Sync;

    fn convert(&self, x: f64) -> Self::Value;
    fn to_f64(&self, v: Self::Value) -> f64;
    fn zero(&self) -> Self::Value;
    fn add(&self, a: Self::Value, b: Self::Value) -> Self::Value;
    fn mul(&self, a: Self::Value, b: Self::Value) -> Self::Value;
}

impl Arithmetic for FloatFormat {
    type Value = f64;

    fn convert(&self, x: f64) -> f64 {
        fl(x, *self)
    }

    fn to_f64(&self, v: f64) -> f64 {
        v
    }

    fn zero(&self) -> f64 {
        0.0
    }

    fn add(&self, a: f64, b: f64) -> f64 {
        fl_op(a, b, Op::Add, *self)
    }

    fn mul(&self, a: f64, b: f64) -> f64 {
        fl_op(a, b, Op::Mul, *self)
    }
}

/// Panics on non-finite input; experiment inputs are finite by construction.
impl Arithmetic for SliFormat {
    type Value = SliNumber;

    fn convert(&self, x: f64) -> SliNumber {
        sli_core::encode(x, *self).expect("finite input")
    }

    fn to_f64(&self, v: SliNumber) -> f64 {
        v.to_f64()
    }

    fn zero(&self) -> SliNumber {
        SliNumber::zero(*self)
    }

    fn add(&self, a: SliNumber, b: SliNumber) -> SliNumber {
        a + b
    }

    fn mul(&self, a: SliNumber, b: SliNumber) -> SliNumber {
        a * b
    }
}

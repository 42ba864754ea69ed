//! Parametric binary floating point simulated in binary64.
//!
//! A format is `(p, e_max)` with `e_min = 1 - e_max`; values are
//! `±2^(e-p+1)·m` with gradual underflow at `e_min` and round to nearest,
//! ties to even. Results are returned as the binary64 number equal to the
//! target-format value.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FloatFormat {
    precision: u32,
    e_max: i32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    Add,
    Sub,
    Mul,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FloatClass {
    Zero,
    Subnormal,
    Normal,
    Infinite,
    Nan,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FloatEntry {
    /// Magnitude pattern `exponent | trailing significand`, no sign bit.
    pub pattern: u64,
    pub width: u32,
    pub value: f64,
    pub class: FloatClass,
}

impl FloatFormat {
    /// 5-bit toy format: 3 exponent bits, 2 stored significand bits.
    pub const TOY5: FloatFormat = FloatFormat { precision: 3, e_max: 3 };
    pub const BINARY16: FloatFormat = FloatFormat { precision: 11, e_max: 15 };
    pub const BFLOAT16: FloatFormat = FloatFormat { precision: 8, e_max: 127 };

    pub fn new(precision: u32, e_max: i32) -> Result<Self> {
        if !(2..=53).contains(&precision) {
            return Err(Error::InvalidFormat("precision must be in 2..=53"));
        }
        if !(1..=1023).contains(&e_max) {
            return Err(Error::InvalidFormat("e_max must be in 1..=1023"));
        }
        if 1 - e_max - precision as i32 + 1 < -1074 {
            return Err(Error::InvalidFormat("subnormals fall below binary64"));
        }
        Ok(FloatFormat { precision, e_max })
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn e_max(&self) -> i32 {
        self.e_max
    }

    pub fn e_min(&self) -> i32 {
        1 - self.e_max
    }

    /// `2^e_max · (2 - 2^(1-p))`.
    pub fn max_finite(&self) -> f64 {
        libm::ldexp(2.0 - libm::ldexp(1.0, 1 - self.precision as i32), self.e_max)
    }

    pub fn min_normal(&self) -> f64 {
        libm::ldexp(1.0, self.e_min())
    }

    pub fn min_subnormal(&self) -> f64 {
        libm::ldexp(1.0, self.e_min() - self.precision as i32 + 1)
    }

    /// `2^-p`.
    pub fn unit_roundoff(&self) -> f64 {
        libm::ldexp(1.0, -(self.precision as i32))
    }

    /// Exponent field width of the IEEE layout, when `e_max = 2^(w-1) - 1`.
    pub fn exponent_bits(&self) -> Option<u32> {
        let w = (self.e_max as u32 + 1).trailing_zeros() + 1;
        (self.e_max as i64 == (1i64 << (w - 1)) - 1).then_some(w)
    }

    /// Round `x` to this format.
    pub fn round(&self, x: f64) -> f64 {
        fl(x, *self)
    }
}

/// Nearest value of `fmt` to `x`, ties to even; `±∞` past the overflow
/// threshold `2^e_max (2 - 2^-p)`.
pub fn fl(x: f64, fmt: FloatFormat) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    let a = libm::fabs(x);
    let (_, e) = libm::frexp(a);
    let exp = (e - 1).max(fmt.e_min());
    let shift = exp - fmt.precision as i32 + 1;
    let m = libm::rint(libm::ldexp(a, -shift));
    let r = libm::ldexp(m, shift);
    let r = if r > fmt.max_finite() { f64::INFINITY } else { r };
    libm::copysign(r, x)
}

/// One simulated operation: the binary64 result rounded once to `fmt`.
pub fn fl_op(x: f64, y: f64, op: Op, fmt: FloatFormat) -> f64 {
    let v = match op {
        Op::Add => x + y,
        Op::Sub => x - y,
        Op::Mul => x * y,
    };
    fl(v, fmt)
}

pub const ENUMERATION_LIMIT: u32 = 24;

/// All nonnegative patterns of `fmt` in ascending order (the negative half
/// mirrors them under the sign bit).
pub fn enumerate_floats(fmt: FloatFormat) -> Result<Vec<FloatEntry>> {
    let w = fmt.exponent_bits().ok_or(Error::InvalidFormat("e_max has no IEEE exponent field"))?;
    let t = fmt.precision - 1;
    let width = w + t;
    if width + 1 > ENUMERATION_LIMIT {
        return Err(Error::Capacity { width: width + 1, limit: ENUMERATION_LIMIT });
    }
    let bias = fmt.e_max;
    let all_ones = (1u64 << w) - 1;
    Ok((0..1u64 << width)
        .map(|pattern| {
            let ef = pattern >> t;
            let m = pattern & ((1 << t) - 1);
            let (value, class) = if ef == all_ones {
                if m == 0 {
                    (f64::INFINITY, FloatClass::Infinite)
                } else {
                    (f64::NAN, FloatClass::Nan)
                }
            } else if ef == 0 {
                let v = libm::ldexp(m as f64, fmt.e_min() - t as i32);
                (v, if m == 0 { FloatClass::Zero } else { FloatClass::Subnormal })
            } else {
                let v = libm::ldexp((m | 1 << t) as f64, ef as i32 - bias - t as i32);
                (v, FloatClass::Normal)
            };
            FloatEntry { pattern, width, value, class }
        })
        .collect())
}

impl FromStr for FloatFormat {
    type Err = Error;

    /// `binary16`, `bfloat16`, `toy5` or `b<p>e<e_max>`.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "binary16" | "half" => Ok(Self::BINARY16),
            "bfloat16" => Ok(Self::BFLOAT16),
            "toy5" => Ok(Self::TOY5),
            _ => {
                let body = s.strip_prefix('b').ok_or(Error::UnknownFormat)?;
                let (p, e) = body.split_once('e').ok_or(Error::UnknownFormat)?;
                let p = p.parse().map_err(|_| Error::UnknownFormat)?;
                let e = e.parse().map_err(|_| Error::UnknownFormat)?;
                FloatFormat::new(p, e)
            }
        }
    }
}

impl fmt::Display for FloatFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::BINARY16 => f.write_str("binary16"),
            Self::BFLOAT16 => f.write_str("bfloat16"),
            Self::TOY5 => f.write_str("toy5"),
            _ => write!(f, "b{}e{}", self.precision, self.e_max),
        }
    }
}

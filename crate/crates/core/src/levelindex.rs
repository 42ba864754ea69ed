//! The generalized exponential `φ` and generalized logarithm `ψ`.
//!
//! `φ(ζ)` is `ζ` below 1 and `exp(φ(ζ - 1))` above, so an integer part `l`
//! contributes `l` nested exponentials around the fractional part. `ψ` is
//! its inverse: it takes logarithms until the argument drops below 1 and
//! counts them.
//!
//! Internally ζ is carried as a [`Zeta`] (integer level plus fraction) so
//! the fraction keeps full binary64 precision at every level.

use core::cmp::Ordering;
use core::f64::consts::LN_10;

use crate::error::{Error, Result};

/// An unrounded generalized logarithm `ζ = level + frac`, `frac ∈ [0, 1)`.
///
/// Level 0 denotes a plain value in `[0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Zeta {
    pub level: u32,
    pub frac: f64,
}

impl Zeta {
    pub const ZERO: Zeta = Zeta { level: 0, frac: 0.0 };
    pub const ONE: Zeta = Zeta { level: 1, frac: 0.0 };

    pub fn new(level: u32, frac: f64) -> Self {
        debug_assert!((0.0..1.0).contains(&frac), "fraction {frac} out of [0, 1)");
        Zeta { level, frac }
    }

    /// Splits a nonnegative finite binary64 ζ.
    pub fn from_f64(zeta: f64) -> Result<Self> {
        if !zeta.is_finite() || zeta < 0.0 {
            return Err(Error::Domain("zeta must be finite and nonnegative"));
        }
        let level = libm::floor(zeta);
        if level > u32::MAX as f64 {
            return Err(Error::Domain("zeta too large"));
        }
        Ok(Zeta { level: level as u32, frac: zeta - level })
    }

    pub fn to_f64(self) -> f64 {
        self.level as f64 + self.frac
    }

    /// `ζ - 1`; the caller guarantees `level ≥ 1`.
    pub(crate) fn lower(self) -> Zeta {
        debug_assert!(self.level >= 1);
        Zeta { level: self.level - 1, frac: self.frac }
    }

    pub(crate) fn raise(self, by: u32) -> Zeta {
        Zeta { level: self.level + by, frac: self.frac }
    }

    /// `φ(ζ)` in binary64; `+∞` once an intermediate overflows.
    pub fn phi(self) -> f64 {
        let mut v = self.frac;
        for _ in 0..self.level {
            v = crate::math::exp(v);
            if v == f64::INFINITY {
                break;
            }
        }
        v
    }

    /// `ln φ(ζ)`, finite for one level more than [`Zeta::phi`].
    pub fn ln_phi(self) -> f64 {
        match self.level {
            0 => crate::math::log(self.frac),
            _ => self.lower().phi(),
        }
    }

    /// `log10 φ(ζ)`.
    pub fn log10_phi(self) -> f64 {
        self.ln_phi() / LN_10
    }

    /// `ψ(x)` for finite `x ≥ 0`.
    pub fn psi(x: f64) -> Result<Self> {
        if !x.is_finite() || x < 0.0 {
            return Err(Error::Domain("psi needs a finite nonnegative argument"));
        }
        Ok(Self::psi_unchecked(x))
    }

    pub(crate) fn psi_unchecked(mut x: f64) -> Self {
        let mut level = 0;
        while x >= 1.0 {
            x = crate::math::log(x);
            level += 1;
        }
        Zeta { level, frac: x }
    }

    /// `ψ(1/v)` for `v ∈ (0, 1)`, computed as `1 + ψ(-ln v)`.
    pub(crate) fn psi_recip(v: f64) -> Self {
        debug_assert!(v > 0.0 && v < 1.0);
        Self::psi_unchecked(-crate::math::log(v)).raise(1)
    }
}

impl PartialOrd for Zeta {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.level.cmp(&other.level) {
            Ordering::Equal => self.frac.partial_cmp(&other.frac),
            o => Some(o),
        }
    }
}

/// `φ(ζ)` for finite `ζ ≥ 0`. Overflows to `+∞` for large ζ; see [`log_phi10`].
pub fn phi(zeta: f64) -> Result<f64> {
    Zeta::from_f64(zeta).map(Zeta::phi)
}

/// `ψ(x)` for finite `x ≥ 0`, the inverse of [`phi`].
pub fn psi(x: f64) -> Result<f64> {
    Zeta::psi(x).map(Zeta::to_f64)
}

/// `log10 φ(ζ)`, evaluated one level down so that magnitudes far beyond
/// binary64 (e.g. `φ(4.75) ≈ 10^1758`) stay finite.
pub fn log_phi10(zeta: f64) -> Result<f64> {
    Zeta::from_f64(zeta).map(Zeta::log10_phi)
}

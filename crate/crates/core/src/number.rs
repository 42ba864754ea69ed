use core::fmt;

use crate::error::{Error, Result};
use crate::format::SliFormat;
use crate::levelindex::Zeta;

/// One quantized value of an [`SliFormat`].
///
/// The magnitude is `φ(level + index)` when `inverse` is false (`r = +1`)
/// and `1/φ(level + index)` otherwise (`r = -1`). Value 1 is always stored
/// with `r = +1`; the `r = -1` pattern with level 1 and index 0 is the zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SliNumber {
    format: SliFormat,
    zero: bool,
    negative: bool,
    inverse: bool,
    level: u32,
    index: u64,
}

/// Result of [`round_index`]: level, integer index `k` (index = `k / 2^p_i`)
/// and whether the value was clamped to the largest ζ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Quantized {
    pub level: u32,
    pub index_raw: u64,
    pub saturated: bool,
}

/// Rounds ζ ≥ 1 to the format's index grid, ties away from zero.
pub fn round_index(zeta: f64, fmt: SliFormat) -> Result<Quantized> {
    let z = Zeta::from_f64(zeta)?;
    if z.level < 1 {
        return Err(Error::Domain("zeta below 1 has no SLI level"));
    }
    Ok(quantize(z, fmt))
}

pub(crate) fn quantize(z: Zeta, fmt: SliFormat) -> Quantized {
    debug_assert!(z.level >= 1 && !z.frac.is_nan());
    let scale = fmt.index_scale();
    let saturate = Quantized { level: fmt.max_level(), index_raw: scale - 1, saturated: true };
    if z.level > fmt.max_level() {
        return saturate;
    }
    let mut level = z.level;
    let mut k = libm::round(z.frac * scale as f64) as u64;
    if k >= scale {
        level += 1;
        k = 0;
    }
    if level > fmt.max_level() {
        return saturate;
    }
    Quantized { level, index_raw: k, saturated: false }
}

/// Converts a binary64 value to the nearest SLI number (index rounded to
/// nearest, ties away).
pub fn encode(x: f64, fmt: SliFormat) -> Result<SliNumber> {
    if !x.is_finite() {
        return Err(Error::Domain("cannot encode a non-finite value"));
    }
    if x == 0.0 {
        return Ok(SliNumber::zero(fmt));
    }
    let negative = x < 0.0;
    if negative && !fmt.is_signed() {
        return Err(Error::Domain("negative value in an unsigned format"));
    }
    let a = libm::fabs(x);
    let band = 1.0 + libm::ldexp(1.0, -(fmt.index_bits() as i32) - 2);
    if a < band && a > 1.0 / band {
        return Ok(SliNumber::one(fmt).with_negative(negative));
    }
    let (inverse, z) = if a >= 1.0 { (false, Zeta::psi_unchecked(a)) } else { (true, Zeta::psi_recip(a)) };
    Ok(SliNumber::from_quantized(fmt, negative, inverse, quantize(z, fmt)))
}

/// The binary64 image of `n`: `±φ(ζ)^(±1)`, `±∞` beyond binary64 range.
pub fn decode(n: &SliNumber) -> f64 {
    n.to_f64()
}

impl SliNumber {
    pub const fn zero(format: SliFormat) -> Self {
        SliNumber { format, zero: true, negative: false, inverse: false, level: 1, index: 0 }
    }

    pub const fn one(format: SliFormat) -> Self {
        SliNumber { format, zero: false, negative: false, inverse: false, level: 1, index: 0 }
    }

    /// Builds a nonzero number from its fields; `index_raw` is `index · 2^p_i`.
    ///
    /// The `r = -1` duplicate of one is canonicalized to `r = +1`.
    pub fn from_parts(
        format: SliFormat,
        negative: bool,
        inverse: bool,
        level: u32,
        index_raw: u64,
    ) -> Result<Self> {
        if negative && !format.is_signed() {
            return Err(Error::Domain("negative value in an unsigned format"));
        }
        if level < 1 || level > format.max_level() {
            return Err(Error::Domain("level out of range"));
        }
        if index_raw >= format.index_scale() {
            return Err(Error::Domain("index out of range"));
        }
        let inverse = inverse && !(level == 1 && index_raw == 0);
        Ok(SliNumber { format, zero: false, negative, inverse, level, index: index_raw })
    }

    pub(crate) fn from_quantized(format: SliFormat, negative: bool, inverse: bool, q: Quantized) -> Self {
        let inverse = inverse && !(q.level == 1 && q.index_raw == 0);
        SliNumber { format, zero: false, negative, inverse, level: q.level, index: q.index_raw }
    }

    /// Largest representable magnitude.
    pub fn max_value(format: SliFormat) -> Self {
        SliNumber {
            format,
            zero: false,
            negative: false,
            inverse: false,
            level: format.max_level(),
            index: format.index_scale() - 1,
        }
    }

    /// Smallest positive representable magnitude.
    pub fn min_positive(format: SliFormat) -> Self {
        SliNumber { inverse: true, ..Self::max_value(format) }
    }

    pub(crate) fn with_negative(mut self, negative: bool) -> Self {
        if !self.zero {
            self.negative = negative;
        }
        self
    }

    pub fn format(&self) -> SliFormat {
        self.format
    }

    pub fn is_zero(&self) -> bool {
        self.zero
    }

    pub fn is_negative(&self) -> bool {
        !self.zero && self.negative
    }

    /// `s(x)`: -1 for negative numbers, +1 otherwise.
    pub fn sign(&self) -> i8 {
        if self.is_negative() {
            -1
        } else {
            1
        }
    }

    /// `r(x)`: +1 for magnitudes ≥ 1, -1 below.
    pub fn reciprocal(&self) -> i8 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn is_inverse(&self) -> bool {
        !self.zero && self.inverse
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    /// Integer index `k`, the index being `k / 2^p_i`.
    pub fn index_raw(&self) -> u64 {
        self.index
    }

    pub fn index(&self) -> f64 {
        self.index as f64 / self.format.index_scale() as f64
    }

    /// `ζ = level + index`.
    pub fn zeta(&self) -> Zeta {
        Zeta { level: self.level, frac: self.index() }
    }

    pub fn to_f64(&self) -> f64 {
        if self.zero {
            return 0.0;
        }
        let z = self.zeta();
        // 1/φ(ζ) = exp(-φ(ζ-1)) keeps small magnitudes accurate
        let mag = if self.inverse { crate::math::exp(-z.lower().phi()) } else { z.phi() };
        if self.negative {
            -mag
        } else {
            mag
        }
    }

    /// `log10 |x|`, finite for every nonzero number of every format.
    pub fn log10_magnitude(&self) -> f64 {
        if self.zero {
            return f64::NEG_INFINITY;
        }
        let l = self.zeta().log10_phi();
        if self.inverse {
            -l
        } else {
            l
        }
    }

    pub fn neg(&self) -> Self {
        let mut n = *self;
        if !n.zero {
            n.negative = !n.negative;
        }
        n
    }

    pub fn abs(&self) -> Self {
        let mut n = *self;
        n.negative = false;
        n
    }

    /// Position in ascending value order; zero has rank 0 and negation
    /// negates the rank. Adjacent representable values differ by one.
    pub fn rank(&self) -> i64 {
        if self.zero {
            return 0;
        }
        let pos = self.zeta_position() as i64;
        let top = self.max_position() as i64;
        let r = if self.inverse { top - pos + 1 } else { top + 1 + pos };
        if self.negative {
            -r
        } else {
            r
        }
    }

    fn zeta_position(&self) -> u64 {
        (self.level as u64 - 1) * self.format.index_scale() + self.index
    }

    fn max_position(&self) -> u64 {
        self.format.max_level() as u64 * self.format.index_scale() - 1
    }

    fn set_position(&mut self, pos: u64) {
        let scale = self.format.index_scale();
        self.level = (pos / scale) as u32 + 1;
        self.index = pos % scale;
    }

    /// Next larger magnitude, `None` above the maximum.
    fn magnitude_up(&self) -> Option<Self> {
        let mut n = *self;
        if n.zero {
            return Some(Self::min_positive(self.format).with_negative(false));
        }
        let pos = n.zeta_position();
        if n.inverse {
            n.set_position(pos - 1);
            if pos == 1 {
                n.inverse = false;
            }
        } else {
            if pos == n.max_position() {
                return None;
            }
            n.set_position(pos + 1);
        }
        Some(n)
    }

    /// Next smaller magnitude, zero below the minimum.
    fn magnitude_down(&self) -> Self {
        let mut n = *self;
        let pos = n.zeta_position();
        if n.inverse {
            if pos == n.max_position() {
                return Self::zero(self.format);
            }
            n.set_position(pos + 1);
        } else if pos == 0 {
            n.inverse = true;
            n.set_position(1);
        } else {
            n.set_position(pos - 1);
        }
        n
    }

    /// The adjacent representable value above this one.
    pub fn next_up(&self) -> Result<Self> {
        if self.is_negative() {
            Ok(self.magnitude_down())
        } else {
            self.magnitude_up().ok_or(Error::Range)
        }
    }

    /// The adjacent representable value below this one.
    pub fn next_down(&self) -> Result<Self> {
        if self.zero {
            if self.format.is_signed() {
                return Ok(Self::min_positive(self.format).neg());
            }
            return Err(Error::Range);
        }
        if self.negative {
            self.magnitude_up().ok_or(Error::Range)
        } else {
            Ok(self.magnitude_down())
        }
    }

    /// Distance to [`next_up`](Self::next_up) in binary64; `+∞` when the
    /// neighbour lies beyond binary64 range.
    pub fn spacing(&self) -> Result<f64> {
        let up = self.next_up()?.to_f64();
        if up.is_infinite() {
            return Ok(f64::INFINITY);
        }
        Ok(up - self.to_f64())
    }
}

impl fmt::Display for SliNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.zero {
            return f.write_str("0");
        }
        let v = self.to_f64();
        if v.is_finite() && v != 0.0 {
            write!(f, "{v}")
        } else {
            let s = if self.negative { "-" } else { "" };
            write!(f, "{s}1e{:.4}", self.log10_magnitude())
        }
    }
}

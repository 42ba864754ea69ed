use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// Widths of one SLI system.
///
/// Levels run from 1 to `2^level_bits` (the level field stores `level - 1`),
/// the index is a fixed-point fraction with `index_bits` bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SliFormat {
    level_bits: u8,
    index_bits: u8,
    signed: bool,
}

impl SliFormat {
    pub const MAX_LEVEL_BITS: u32 = 6;
    pub const MAX_INDEX_BITS: u32 = 52;

    /// Signed 16-bit system with a 2-bit level and a 12-bit index.
    pub const SLI_2_12: SliFormat = SliFormat { level_bits: 2, index_bits: 12, signed: true };

    pub const fn new(level_bits: u32, index_bits: u32, signed: bool) -> Result<Self> {
        if level_bits < 1 || level_bits > Self::MAX_LEVEL_BITS {
            return Err(Error::InvalidFormat("level bits must be in 1..=6"));
        }
        if index_bits < 1 || index_bits > Self::MAX_INDEX_BITS {
            return Err(Error::InvalidFormat("index bits must be in 1..=52"));
        }
        Ok(SliFormat { level_bits: level_bits as u8, index_bits: index_bits as u8, signed })
    }

    pub const fn level_bits(&self) -> u32 {
        self.level_bits as u32
    }

    pub const fn index_bits(&self) -> u32 {
        self.index_bits as u32
    }

    pub const fn is_signed(&self) -> bool {
        self.signed
    }

    /// Largest level, `2^level_bits`.
    pub const fn max_level(&self) -> u32 {
        1 << self.level_bits
    }

    /// Number of index steps per level, `2^index_bits`.
    pub const fn index_scale(&self) -> u64 {
        1 << self.index_bits
    }

    /// Index machine epsilon `2^-index_bits`.
    pub fn epsilon(&self) -> f64 {
        1.0 / self.index_scale() as f64
    }

    /// Total width of a packed word in bits.
    pub const fn width(&self) -> u32 {
        self.signed as u32 + 1 + self.level_bits as u32 + self.index_bits as u32
    }

    /// Largest representable ζ, `max_level + (2^p_i - 1)/2^p_i`.
    pub fn max_zeta(&self) -> f64 {
        self.max_level() as f64 + (self.index_scale() - 1) as f64 / self.index_scale() as f64
    }
}

impl Default for SliFormat {
    fn default() -> Self {
        Self::SLI_2_12
    }
}

/// Parses `sli<level_bits>.<index_bits>` with an optional trailing `u` for
/// unsigned systems, e.g. `sli2.12` or `sli2.2u`.
impl FromStr for SliFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.strip_prefix("sli").ok_or(Error::UnknownFormat)?;
        let (body, signed) = match body.strip_suffix('u') {
            Some(b) => (b, false),
            None => (body, true),
        };
        let (l, i) = body.split_once('.').ok_or(Error::UnknownFormat)?;
        let l: u32 = l.parse().map_err(|_| Error::UnknownFormat)?;
        let i: u32 = i.parse().map_err(|_| Error::UnknownFormat)?;
        SliFormat::new(l, i, signed)
    }
}

impl fmt::Display for SliFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sli{}.{}", self.level_bits, self.index_bits)?;
        if !self.signed {
            f.write_str("u")?;
        }
        Ok(())
    }
}

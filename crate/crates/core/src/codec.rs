//! Packed bit layout and exhaustive enumeration.
//!
//! Fields from the most significant bit: sign (signed formats only, 0 for
//! positive), reciprocal (1 for `r = +1`), `level - 1` in `p_l` bits and the
//! integer index in `p_i` bits. The all-zeros word is zero; in signed formats
//! the word with only the sign bit set is a negative zero that unpacks to zero.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::format::SliFormat;
use crate::levelindex::Zeta;
use crate::number::SliNumber;

/// An unsigned word of `width` bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BitWord {
    width: u32,
    bits: u64,
}

impl BitWord {
    pub fn new(width: u32, bits: u64) -> Result<Self> {
        if width == 0 || width > 64 || (width < 64 && bits >> width != 0) {
            return Err(Error::Domain("bits do not fit the word width"));
        }
        Ok(BitWord { width, bits })
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }
}

/// MSB-first binary string, e.g. `10000`.
impl fmt::Display for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in (0..self.width).rev() {
            f.write_str(if self.bits >> i & 1 == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

struct Fields {
    negative: bool,
    reciprocal: bool,
    level: u32,
    index: u64,
}

fn split(w: BitWord, fmt: SliFormat) -> Result<Fields> {
    if w.width != fmt.width() {
        return Err(Error::FormatMismatch);
    }
    let pi = fmt.index_bits();
    let pl = fmt.level_bits();
    let b = w.bits;
    Ok(Fields {
        negative: fmt.is_signed() && (b >> (pi + pl + 1)) & 1 == 1,
        reciprocal: (b >> (pi + pl)) & 1 == 1,
        level: ((b >> pi) & ((1 << pl) - 1)) as u32 + 1,
        index: b & (fmt.index_scale() - 1),
    })
}

pub fn pack(n: &SliNumber) -> BitWord {
    let fmt = n.format();
    let width = fmt.width();
    if n.is_zero() {
        return BitWord { width, bits: 0 };
    }
    let pi = fmt.index_bits();
    let pl = fmt.level_bits();
    let mut bits = n.index_raw() | (n.level() as u64 - 1) << pi;
    if !n.is_inverse() {
        bits |= 1 << (pi + pl);
    }
    if n.is_negative() {
        bits |= 1 << (pi + pl + 1);
    }
    BitWord { width, bits }
}

pub fn unpack(w: BitWord, fmt: SliFormat) -> Result<SliNumber> {
    let f = split(w, fmt)?;
    if !f.reciprocal && f.level == 1 && f.index == 0 {
        return Ok(SliNumber::zero(fmt));
    }
    SliNumber::from_parts(fmt, f.negative, !f.reciprocal, f.level, f.index)
}

/// Value of a word read straight from the definition `s·φ(ζ)^r`, ignoring
/// the zero convention (the all-zeros word reads as 1). Returns the binary64
/// value and `log10 |value|`.
pub fn raw_value(w: BitWord, fmt: SliFormat) -> Result<(f64, f64)> {
    let f = split(w, fmt)?;
    let z = Zeta { level: f.level, frac: f.index as f64 / fmt.index_scale() as f64 };
    let (mag, log) = if f.reciprocal {
        (z.phi(), z.log10_phi())
    } else {
        (crate::math::exp(-z.lower().phi()), -z.log10_phi())
    };
    Ok((if f.negative { -mag } else { mag }, log))
}

/// One enumerated pattern.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Entry {
    pub word: BitWord,
    /// Binary64 value; `±∞` or `0` when outside binary64 range.
    pub value: f64,
    /// `log10 |value|`, finite for every nonzero pattern.
    pub log10_magnitude: f64,
}

pub const ENUMERATION_LIMIT: u32 = 24;

/// Every pattern of `fmt` in ascending unsigned order with its value.
///
/// With `raw` the values follow the definition for every word (the table
/// view: `00…0` reads as 1); otherwise the zero convention applies.
pub fn enumerate(fmt: SliFormat, raw: bool) -> Result<Vec<Entry>> {
    let width = fmt.width();
    if width > ENUMERATION_LIMIT {
        return Err(Error::Capacity { width, limit: ENUMERATION_LIMIT });
    }
    (0..1u64 << width)
        .map(|bits| {
            let word = BitWord { width, bits };
            let (value, log10_magnitude) = if raw {
                raw_value(word, fmt)?
            } else {
                let n = unpack(word, fmt)?;
                (n.to_f64(), n.log10_magnitude())
            };
            Ok(Entry { word, value, log10_magnitude })
        })
        .collect()
}

impl SliNumber {
    pub fn to_bits(&self) -> BitWord {
        pack(self)
    }

    pub fn from_bits(w: BitWord, fmt: SliFormat) -> Result<Self> {
        unpack(w, fmt)
    }
}

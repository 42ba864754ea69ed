//! Symmetric level-index (SLI) arithmetic simulated in binary64.
//!
//! A nonzero real `x` is held as `x = s · φ(ζ)^r` where `s` and `r` are
//! ±1 and `ζ = l + f` splits into an integer level `l ≥ 1` and an index
//! `f ∈ [0, 1)`. The generalized exponential `φ` applies `l` nested
//! exponentials to `f`; its inverse `ψ` takes repeated logarithms.
//!
//! The crate provides
//!
//! - [`SliFormat`]: one SLI system, described by its level and index widths,
//! - [`SliNumber`]: a quantized value of a format, with [`encode`] and
//!   [`decode`] against binary64,
//! - [`codec`]: the packed bit layout `sign | reciprocal | level-1 | index`
//!   and exhaustive enumeration of small formats,
//! - [`arith`]: the four basic operations computed with the Clenshaw–Olver
//!   sequence kernels,
//! - [`minifloat`]: a parametric IEEE-style binary float simulator used as
//!   a baseline (binary16, bfloat16, toy formats).
//!
//! Everything here is pure. The crate builds `no_std` (with `alloc`) when
//! the default `std` feature is off; `std` only selects the platform math
//! library over `libm` for `exp` and `ln`.
//!
//! ```
//! use sli_core::{encode, SliFormat};
//!
//! let fmt: SliFormat = "sli2.12".parse().unwrap();
//! let x = encode(core::f64::consts::PI, fmt).unwrap();
//! assert_eq!(x.level(), 2);
//! assert_eq!(x.index_raw(), 554);
//!
//! let sq = x.mul(&x).unwrap();
//! assert_eq!(sq.index_raw(), 3393);
//! ```

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod arith;
pub mod codec;
mod error;
mod format;
pub mod levelindex;
mod math;
pub mod minifloat;
mod number;

pub use arith::{add, compare, div, mul, sub};
pub use codec::{enumerate, pack, unpack, BitWord, Entry};
pub use error::{Error, Result};
pub use format::SliFormat;
pub use levelindex::{log_phi10, phi, psi, Zeta};
pub use minifloat::FloatFormat;
pub use number::{decode, encode, round_index, Quantized, SliNumber};

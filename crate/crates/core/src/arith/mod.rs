//! The four basic operations on [`SliNumber`]s.
//!
//! Signs are stripped and operations reduced to magnitudes. Magnitudes
//! stay unrounded as `(r, ζ)` pairs through the whole computation and are
//! quantized once at the end. Reciprocal operands are handled by
//!
//! - `φ(X) ± 1/φ(Y)`: the kernel seeded with `b_0 = a_0/φ(Y)`,
//! - `1/φ(X) + 1/φ(Y) = (φ(X) + φ(Y)) / (φ(X)φ(Y))`,
//! - `1/φ(X) - 1/φ(Y) = (φ(Y) - φ(X)) / (φ(X)φ(Y))`,
//! - products and quotients by swapping multiplication and division.

use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::levelindex::Zeta;
use crate::number::{quantize, SliNumber};

pub mod kernel;

pub use kernel::{li_add_sub, li_add_sub_traced, li_mul_div, Addend, SequenceState};

/// An unrounded positive magnitude: `φ(ζ)`, or `1/φ(ζ)` when `inverse`.
#[derive(Debug, Clone, Copy, PartialEq)]
struct Mag {
    inverse: bool,
    zeta: Zeta,
}

impl Mag {
    fn new(inverse: bool, zeta: Zeta) -> Self {
        debug_assert!(zeta.level >= 1);
        // 1/φ(1) is 1
        let inverse = inverse && zeta != Zeta::ONE;
        Mag { inverse, zeta }
    }

    fn of(n: &SliNumber) -> Self {
        Mag::new(n.is_inverse(), n.zeta())
    }

    fn recip(self) -> Self {
        Mag::new(!self.inverse, self.zeta)
    }

    fn plain(self) -> Self {
        Mag { inverse: false, zeta: self.zeta }
    }

    /// Turns a kernel result (level 0 = residual value `v < 1`) into a
    /// magnitude.
    fn from_kernel(z: Zeta) -> Self {
        if z.level >= 1 {
            return Mag::new(false, z);
        }
        if z.frac <= 0.0 {
            // lost to cancellation; below every representable magnitude
            return Mag::new(true, Zeta { level: 1 << 10, frac: 0.0 });
        }
        Mag::new(true, Zeta::psi_recip(z.frac))
    }

    fn cmp(&self, other: &Self) -> Ordering {
        let by_zeta = |a: &Zeta, b: &Zeta| a.partial_cmp(b).unwrap_or(Ordering::Equal);
        match (self.inverse, other.inverse) {
            (false, false) => by_zeta(&self.zeta, &other.zeta),
            (true, true) => by_zeta(&other.zeta, &self.zeta),
            (true, false) => Ordering::Less,
            (false, true) => Ordering::Greater,
        }
    }

    fn mul(self, other: Self) -> Self {
        let (x, y) = (self.zeta, other.zeta);
        match (self.inverse, other.inverse) {
            (false, false) => Mag::new(false, li_mul_div(x, y, false).0),
            (true, true) => Mag::new(true, li_mul_div(x, y, false).0),
            (false, true) => {
                let (z, flip) = li_mul_div(x, y, true);
                Mag::new(flip, z)
            }
            (true, false) => {
                let (z, flip) = li_mul_div(y, x, true);
                Mag::new(flip, z)
            }
        }
    }

    fn div(self, other: Self) -> Self {
        self.mul(other.recip())
    }

    fn add(self, other: Self) -> Self {
        let (x, y) = if self.cmp(&other) == Ordering::Less { (other, self) } else { (self, other) };
        match (x.inverse, y.inverse) {
            (false, false) => Mag::from_kernel(li_add_sub(x.zeta, Addend::Li(y.zeta), false)),
            (false, true) => Mag::from_kernel(li_add_sub(x.zeta, Addend::Reciprocal(y.zeta), false)),
            _ => {
                let (xp, yp) = (x.plain(), y.plain());
                xp.add(yp).div(xp.mul(yp))
            }
        }
    }

    /// `self - other` for `self > other`.
    fn sub(self, other: Self) -> Self {
        debug_assert_eq!(self.cmp(&other), Ordering::Greater);
        match (self.inverse, other.inverse) {
            (false, false) => Mag::from_kernel(li_add_sub(self.zeta, Addend::Li(other.zeta), true)),
            (false, true) => Mag::from_kernel(li_add_sub(self.zeta, Addend::Reciprocal(other.zeta), true)),
            _ => {
                let (xp, yp) = (self.plain(), other.plain());
                yp.sub(xp).div(xp.mul(yp))
            }
        }
    }

    fn materialize(self, negative: bool, like: &SliNumber) -> Result<SliNumber> {
        let fmt = like.format();
        if negative && !fmt.is_signed() {
            return Err(Error::Domain("negative result in an unsigned format"));
        }
        Ok(SliNumber::from_quantized(fmt, negative, self.inverse, quantize(self.zeta, fmt)))
    }
}

fn same_format(x: &SliNumber, y: &SliNumber) -> Result<()> {
    if x.format() != y.format() {
        return Err(Error::FormatMismatch);
    }
    Ok(())
}

/// `x + y`, rounded once.
pub fn add(x: &SliNumber, y: &SliNumber) -> Result<SliNumber> {
    same_format(x, y)?;
    if y.is_zero() {
        return Ok(canonical(x));
    }
    if x.is_zero() {
        return Ok(canonical(y));
    }
    let (mx, my) = (Mag::of(x), Mag::of(y));
    if x.is_negative() == y.is_negative() {
        return mx.add(my).materialize(x.is_negative(), x);
    }
    match mx.cmp(&my) {
        Ordering::Equal => Ok(SliNumber::zero(x.format())),
        Ordering::Greater => mx.sub(my).materialize(x.is_negative(), x),
        Ordering::Less => my.sub(mx).materialize(y.is_negative(), x),
    }
}

/// `x - y`, rounded once.
pub fn sub(x: &SliNumber, y: &SliNumber) -> Result<SliNumber> {
    same_format(x, y)?;
    if y.is_zero() {
        return Ok(canonical(x));
    }
    if !x.format().is_signed() && !x.is_zero() {
        // unsigned: only x ≥ y is representable
        return match Mag::of(x).cmp(&Mag::of(y)) {
            Ordering::Equal => Ok(SliNumber::zero(x.format())),
            Ordering::Greater => Mag::of(x).sub(Mag::of(y)).materialize(false, x),
            Ordering::Less => Err(Error::Domain("negative result in an unsigned format")),
        };
    }
    if !x.format().is_signed() {
        return Err(Error::Domain("negative result in an unsigned format"));
    }
    add(x, &y.neg())
}

/// `x · y`, rounded once.
pub fn mul(x: &SliNumber, y: &SliNumber) -> Result<SliNumber> {
    same_format(x, y)?;
    if x.is_zero() || y.is_zero() {
        return Ok(SliNumber::zero(x.format()));
    }
    Mag::of(x).mul(Mag::of(y)).materialize(x.is_negative() != y.is_negative(), x)
}

/// `x / y`, rounded once. Dividing by zero (including `0/0`) is an error.
pub fn div(x: &SliNumber, y: &SliNumber) -> Result<SliNumber> {
    same_format(x, y)?;
    if y.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if x.is_zero() {
        return Ok(SliNumber::zero(x.format()));
    }
    Mag::of(x).div(Mag::of(y)).materialize(x.is_negative() != y.is_negative(), x)
}

/// Total order consistent with the represented values.
pub fn compare(x: &SliNumber, y: &SliNumber) -> Result<Ordering> {
    same_format(x, y)?;
    Ok(x.rank().cmp(&y.rank()))
}

fn canonical(x: &SliNumber) -> SliNumber {
    if x.is_zero() {
        SliNumber::zero(x.format())
    } else {
        *x
    }
}

impl SliNumber {
    pub fn add(&self, other: &SliNumber) -> Result<SliNumber> {
        add(self, other)
    }

    pub fn sub(&self, other: &SliNumber) -> Result<SliNumber> {
        sub(self, other)
    }

    pub fn mul(&self, other: &SliNumber) -> Result<SliNumber> {
        mul(self, other)
    }

    pub fn div(&self, other: &SliNumber) -> Result<SliNumber> {
        div(self, other)
    }

    pub fn compare(&self, other: &SliNumber) -> Result<Ordering> {
        compare(self, other)
    }
}

impl PartialOrd for SliNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        compare(self, other).ok()
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $f:ident) => {
        /// Panics on mismatched formats (and, for division, on a zero divisor).
        impl core::ops::$trait for SliNumber {
            type Output = SliNumber;

            fn $method(self, rhs: SliNumber) -> SliNumber {
                match $f(&self, &rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("{e}"),
                }
            }
        }
    };
}

binop!(Add, add, add);
binop!(Sub, sub, sub);
binop!(Mul, mul, mul);
binop!(Div, div, div);

impl core::ops::Neg for SliNumber {
    type Output = SliNumber;

    fn neg(self) -> SliNumber {
        SliNumber::neg(&self)
    }
}

//! Transcendental functions: the platform's via `std` when that feature is
//! on, `libm` otherwise.

#[cfg(feature = "std")]
mod imp {
    pub fn exp(x: f64) -> f64 {
        x.exp()
    }
    pub fn expm1(x: f64) -> f64 {
        x.exp_m1()
    }
    pub fn log(x: f64) -> f64 {
        x.ln()
    }
    pub fn log1p(x: f64) -> f64 {
        x.ln_1p()
    }
}

#[cfg(not(feature = "std"))]
mod imp {
    pub use libm::{exp, expm1, log, log1p};
}

pub(crate) use imp::*;

//! Clenshaw–Olver sequences for level-index addition and subtraction.
//!
//! With `X = l + f ≥ Y = m + g` and `φ(X) ± φ(Y) = φ(Z)`:
//!
//! ```text
//! a_j = 1/φ(X-j)       a_{l-1} = e^{-f},        a_{j-1} = e^{-1/a_j}
//! b_j = φ(Y-j)/φ(X-j)  b_{m-1} = a_{m-1} e^g,   b_{j-1} = e^{-(1-b_j)/a_j}
//! c_j = φ(Z-j)/φ(X-j)  c_0 = 1 ± b_0,           c_j = 1 + a_j ln c_{j-1}
//! ```
//!
//! The `c` sequence stops at the first `j` with `c_j < a_j`, giving
//! `Z = j + c_j/a_j`; otherwise `Z = l + ψ(f + ln c_{l-1})`.
//!
//! `1 - b_j` is carried through `expm1` and `ln c_j` through `ln_1p`, which
//! keeps cancellations near `b_0 = 1` accurate.

use alloc::vec::Vec;

use crate::levelindex::Zeta;

/// Second operand of [`li_add_sub`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Addend {
    /// `φ(Y)`; level 0 means the plain value `g ∈ [0, 1)`.
    Li(Zeta),
    /// `1/φ(Y)` for `Y ≥ 1`. Seeds `b_0 = a_0/φ(Y)` directly.
    Reciprocal(Zeta),
}

/// The sequences of one kernel run, indexed by `j`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SequenceState {
    pub a: Vec<f64>,
    /// `b_j` for `j < max(m, 1)`.
    pub b: Vec<f64>,
    /// `c_0 … c_n`, ending at the termination point.
    pub c: Vec<f64>,
    /// `Some(j)` when `c_j < a_j` stopped the sequence, `None` when it ran
    /// through level `l`.
    pub terminated_at: Option<usize>,
}

/// `φ(X) ± φ(Y)` as an unrounded ζ. Level 0 in the result is a residual
/// value below 1. Requires `φ(X) ≥ φ(Y)` (and strictly greater for
/// subtraction to give a nonzero result).
pub fn li_add_sub(x: Zeta, y: Addend, subtract: bool) -> Zeta {
    run(x, y, subtract, &mut None)
}

/// [`li_add_sub`] that also returns the sequences.
pub fn li_add_sub_traced(x: Zeta, y: Addend, subtract: bool) -> (Zeta, SequenceState) {
    let mut st = Some(SequenceState::default());
    let z = run(x, y, subtract, &mut st);
    (z, st.unwrap_or_default())
}

/// `φ(X)·φ(Y)` or `φ(X)/φ(Y)` for `X, Y ≥ 1` via
/// `φ(X)φ(Y) = exp(φ(X-1) + φ(Y-1))`.
///
/// Returns the ζ of the result (≥ 1) and whether it is the reciprocal of
/// the true value, which happens for a quotient below 1.
pub fn li_mul_div(x: Zeta, y: Zeta, divide: bool) -> (Zeta, bool) {
    debug_assert!(x.level >= 1 && y.level >= 1);
    let (x1, y1) = (x.lower(), y.lower());
    if !divide {
        let (big, small) = if x1 >= y1 { (x1, y1) } else { (y1, x1) };
        return (li_add_sub(big, Addend::Li(small), false).raise(1), false);
    }
    if x1 >= y1 {
        (li_add_sub(x1, Addend::Li(y1), true).raise(1), false)
    } else {
        (li_add_sub(y1, Addend::Li(x1), true).raise(1), true)
    }
}

fn run(x: Zeta, y: Addend, subtract: bool, trace: &mut Option<SequenceState>) -> Zeta {
    let l = x.level as usize;
    let f = x.frac;

    if l == 0 {
        // both operands are plain values below 1
        let g = match y {
            Addend::Li(y) => {
                debug_assert_eq!(y.level, 0);
                y.frac
            }
            Addend::Reciprocal(y) => crate::math::exp(-y.lower().phi()),
        };
        let v = if subtract { (f - g).max(0.0) } else { f + g };
        return Zeta::psi_unchecked(v);
    }

    let mut a = Vec::with_capacity(l);
    let mut ln_a = Vec::with_capacity(l);
    a.resize(l, 0.0);
    ln_a.resize(l, 0.0);
    ln_a[l - 1] = -f;
    a[l - 1] = crate::math::exp(-f);
    for j in (1..l).rev() {
        ln_a[j - 1] = -1.0 / a[j];
        a[j - 1] = crate::math::exp(ln_a[j - 1]);
    }

    // b_0 and q_0 = 1 - b_0
    let mut bs = Vec::new();
    let (b0, q0) = match y {
        Addend::Li(y) if y.level == 0 => {
            let b = a[0] * y.frac;
            bs.push(b);
            (b, 1.0 - b)
        }
        Addend::Li(y) => {
            let m = y.level as usize;
            debug_assert!(m <= l);
            let t = ln_a[m - 1] + y.frac;
            let (mut b, mut q) = (crate::math::exp(t), -crate::math::expm1(t));
            bs.resize(m, 0.0);
            bs[m - 1] = b;
            for j in (1..m).rev() {
                let t = if q == 0.0 { 0.0 } else { -q / a[j] };
                b = crate::math::exp(t);
                q = -crate::math::expm1(t);
                bs[j - 1] = b;
            }
            (b, q)
        }
        Addend::Reciprocal(y) => {
            let t = ln_a[0] - y.lower().phi();
            let b = crate::math::exp(t);
            bs.push(b);
            (b, -crate::math::expm1(t))
        }
    };

    let mut cs = Vec::new();
    let mut result = None;
    if subtract && q0 <= 0.0 {
        result = Some(Zeta::ZERO);
    } else {
        // ln c_j
        let mut ln_c = if subtract { crate::math::log(q0) } else { crate::math::log1p(b0) };
        let mut c = if subtract { q0 } else { 1.0 + b0 };
        for (j, &aj) in a.iter().enumerate().take(l) {
            if j > 0 {
                let t = aj * ln_c;
                c = 1.0 + t;
                ln_c = crate::math::log1p(t);
            }
            cs.push(c);
            if c < aj {
                if let Some(st) = trace.as_mut() {
                    st.terminated_at = Some(j);
                }
                result = Some(Zeta { level: j as u32, frac: (c / aj).clamp(0.0, 1.0 - f64::EPSILON / 2.0) });
                break;
            }
        }
        if result.is_none() {
            let top = Zeta::psi_unchecked((f + ln_c).max(0.0));
            result = Some(top.raise(l as u32));
        }
    }

    if let Some(st) = trace.as_mut() {
        st.a = a;
        st.b = bs;
        st.c = cs;
    }
    result.unwrap_or(Zeta::ZERO)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: f64) -> Zeta {
        Zeta::from_f64(v).unwrap()
    }

    fn phi_sum(x: f64, y: f64) -> f64 {
        z(x).phi() + z(y).phi()
    }

    #[test]
    fn add_matches_binary64() {
        for (x, y) in [(2.5, 1.0), (2.5, 2.2), (1.9, 1.9), (2.99, 2.99), (3.4, 1.2), (3.0, 2.999), (1.0, 0.3)]
        {
            let got = li_add_sub(z(x), Addend::Li(z(y)), false).to_f64();
            let want = crate::psi(phi_sum(x, y)).unwrap();
            assert!((got - want).abs() < 1e-10, "{x}+{y}: {got} vs {want}");
        }
    }

    #[test]
    fn sub_matches_binary64() {
        for (x, y) in [(2.5, 1.0), (2.5, 2.2), (1.9, 1.2), (3.4, 3.39), (3.0, 2.999), (2.0, 1.999)] {
            let got = li_add_sub(z(x), Addend::Li(z(y)), true);
            let want = z(x).phi() - z(y).phi();
            let got_val = if got.level == 0 { got.frac } else { got.phi() };
            assert!((got_val - want).abs() <= 1e-12 * want, "{x}-{y}: {got_val} vs {want}");
        }
    }

    #[test]
    fn reciprocal_addend() {
        for (x, y) in [(2.5, 1.5), (1.0, 2.0), (1.2, 1.01), (3.3, 3.0)] {
            let r = 1.0 / z(y).phi();
            let s = li_add_sub(z(x), Addend::Reciprocal(z(y)), false);
            assert!((s.phi() - (z(x).phi() + r)).abs() < 1e-12 * s.phi());
            let d = li_add_sub(z(x), Addend::Reciprocal(z(y)), true);
            let v = if d.level == 0 { d.frac } else { d.phi() };
            assert!((v - (z(x).phi() - r)).abs() < 1e-12 * v.max(1e-3), "{x} {y}");
        }
    }

    #[test]
    fn equal_subtraction_is_zero() {
        assert_eq!(li_add_sub(z(2.0), Addend::Li(z(2.0)), true), Zeta::ZERO);
        assert_eq!(li_add_sub(z(0.4), Addend::Li(z(0.4)), true), Zeta::ZERO);
    }

    #[test]
    fn trace_shapes() {
        let (_, st) = li_add_sub_traced(z(3.5), Addend::Li(z(2.25)), false);
        assert_eq!(st.a.len(), 3);
        assert_eq!(st.b.len(), 2);
        assert_eq!(st.c.len(), 3);
        assert_eq!(st.terminated_at, None);
        assert!(st.a.iter().all(|&a| a > 0.0 && a <= 1.0));
        assert!(st.b.iter().all(|&b| (0.0..=1.0).contains(&b)));

        // e^0.9 - e^0.8 < 1 stops at j = 0
        let (r, st) = li_add_sub_traced(z(1.9), Addend::Li(z(1.8)), true);
        assert_eq!(st.terminated_at, Some(0));
        assert_eq!(r.level, 0);
    }

    #[test]
    fn mul_div() {
        let pi = Zeta::new(2, 554.0 / 4096.0);
        let (sq, flip) = li_mul_div(pi, pi, false);
        assert!(!flip);
        assert!((sq.to_f64() - 2.8284010868099453).abs() < 1e-12);

        let x = z(2.7);
        assert_eq!(li_mul_div(x, Zeta::ONE, false).0, x);
        assert_eq!(li_mul_div(x, Zeta::ONE, true).0, x);

        let six = Zeta::psi(6.0).unwrap();
        let two = Zeta::psi(2.0).unwrap();
        let (q, flip) = li_mul_div(six, two, true);
        assert!(!flip);
        assert!((q.phi() - 3.0).abs() < 1e-12);
        let (q, flip) = li_mul_div(two, six, true);
        assert!(flip);
        assert!((q.phi() - 3.0).abs() < 1e-12);
    }
}

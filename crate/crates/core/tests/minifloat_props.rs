use proptest::prelude::*;
use sli_core::minifloat::{enumerate_floats, fl, FloatClass};
use sli_core::FloatFormat;

const FORMATS: [FloatFormat; 3] = [FloatFormat::TOY5, FloatFormat::BINARY16, FloatFormat::BFLOAT16];

#[test]
fn toy5_column() {
    let expected = [
        0.0, 0.0625, 0.125, 0.1875, 0.25, 0.3125, 0.375, 0.4375, 0.5, 0.625, 0.75, 0.875, 1.0, 1.25, 1.5,
        1.75, 2.0, 2.5, 3.0, 3.5, 4.0, 5.0, 6.0, 7.0, 8.0, 10.0, 12.0, 14.0,
    ];
    let t = enumerate_floats(FloatFormat::TOY5).unwrap();
    for (e, want) in t.iter().zip(expected) {
        assert_eq!(e.value, want, "pattern {:05b}", e.pattern);
    }
    assert_eq!(t[28].value, f64::INFINITY);
    assert!(t[29..].iter().all(|e| e.class == FloatClass::Nan));
}

#[test]
fn enumerated_values_are_fixed_points() {
    for fmt in FORMATS {
        for e in enumerate_floats(fmt).unwrap() {
            if e.class != FloatClass::Nan {
                assert_eq!(fl(e.value, fmt), e.value, "{fmt} {:b}", e.pattern);
                assert_eq!(fl(-e.value, fmt), -e.value);
            }
        }
    }
}

#[test]
fn rounding_to_nearest_matches_enumeration() {
    // brute-force nearest over the toy table, ties to the even pattern
    let t = enumerate_floats(FloatFormat::TOY5).unwrap();
    let finite: Vec<_> = t.iter().filter(|e| e.value.is_finite()).collect();
    for k in 0..=1600 {
        let x = k as f64 / 100.0;
        let mut best = finite[0];
        for e in &finite {
            let (d, db) = ((e.value - x).abs(), (best.value - x).abs());
            if d < db || (d == db && e.pattern % 2 == 0) {
                best = e;
            }
        }
        let threshold = 15.0;
        let want = if x >= threshold { f64::INFINITY } else { best.value };
        assert_eq!(fl(x, FloatFormat::TOY5), want, "x={x}");
    }
}

proptest! {
    #[test]
    fn idempotent(x in proptest::num::f64::NORMAL | proptest::num::f64::SUBNORMAL) {
        for fmt in FORMATS {
            let once = fl(x, fmt);
            prop_assert_eq!(fl(once, fmt).to_bits(), once.to_bits());
        }
    }

    #[test]
    fn monotone(a in -1e5f64..1e5, b in -1e5f64..1e5) {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        for fmt in FORMATS {
            prop_assert!(fl(lo, fmt) <= fl(hi, fmt));
        }
    }

    #[test]
    fn relative_error_bound(e in -14i32..15, m in 1.0f64..2.0) {
        let x = m * 2f64.powi(e);
        for fmt in [FloatFormat::BINARY16, FloatFormat::BFLOAT16] {
            let r = fl(x, fmt);
            prop_assert!((r - x).abs() <= fmt.unit_roundoff() * x.abs());
        }
    }
}

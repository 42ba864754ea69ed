//! Sequence-kernel arithmetic checked against decode → binary64 op → encode.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sli_core::arith::{li_add_sub_traced, Addend};
use sli_core::{add, compare, decode, div, encode, mul, sub, Error, SliFormat, SliNumber, Zeta};

const F: SliFormat = SliFormat::SLI_2_12;

fn log_uniform(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    let s = if rng.gen::<bool>() { 1.0 } else { -1.0 };
    s * 10f64.powf(rng.gen_range(lo.log10()..hi.log10()))
}

fn random_word(rng: &mut ChaCha8Rng, fmt: SliFormat) -> SliNumber {
    let bits = rng.gen_range(0..1u64 << fmt.width());
    SliNumber::from_bits(sli_core::BitWord::new(fmt.width(), bits).unwrap(), fmt).unwrap()
}

type Op = fn(&SliNumber, &SliNumber) -> sli_core::Result<SliNumber>;
type Reference = fn(f64, f64) -> f64;

const OPS: [(&str, Op, Reference); 4] = [
    ("add", add, |a, b| a + b),
    ("sub", sub, |a, b| a - b),
    ("mul", mul, |a, b| a * b),
    ("div", div, |a, b| a / b),
];

#[test]
fn oracle_equivalence_within_one_ulp() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (name, op, exact) in OPS {
        let mut worst = 0;
        for _ in 0..10_000 {
            let x = encode(log_uniform(&mut rng, 1e-6, 1e6), F).unwrap();
            let y = encode(log_uniform(&mut rng, 1e-6, 1e6), F).unwrap();
            let got = op(&x, &y).unwrap();
            let want = encode(exact(decode(&x), decode(&y)), F).unwrap();
            let d = (got.rank() - want.rank()).abs();
            assert!(d <= 1, "{name}({x}, {y}) = {got}, oracle {want}");
            worst = worst.max(d);
        }
        eprintln!("{name}: worst rank distance {worst}");
    }
}

#[test]
fn closure_over_whole_format() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20_000 {
        let x = random_word(&mut rng, F);
        let y = random_word(&mut rng, F);
        for (name, op, _) in OPS {
            match op(&x, &y) {
                Ok(r) => {
                    let again = SliNumber::from_bits(r.to_bits(), F).unwrap();
                    assert_eq!(again, r, "{name}: invalid encoding");
                    assert!(r.is_zero() || r.log10_magnitude().is_finite(), "{name}");
                }
                Err(Error::DivisionByZero) => assert!(y.is_zero() && name == "div"),
                Err(e) => panic!("{name}({x}, {y}): {e}"),
            }
        }
    }
}

#[test]
fn commutativity_and_sign_algebra() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..10_000 {
        let x = random_word(&mut rng, F);
        let y = random_word(&mut rng, F);
        assert_eq!(add(&x, &y).unwrap(), add(&y, &x).unwrap());
        assert_eq!(mul(&x, &y).unwrap(), mul(&y, &x).unwrap());
        assert_eq!(x.neg().neg(), x);
        assert_eq!(mul(&x.neg(), &y).unwrap(), mul(&x, &y).unwrap().neg());
    }
}

#[test]
fn reciprocal_algebra() {
    let one = SliNumber::one(F);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..10_000 {
        let x = random_word(&mut rng, F);
        if x.is_zero() {
            continue;
        }
        let r = div(&one, &x).unwrap();
        assert_eq!(div(&one, &r).unwrap(), x, "1/(1/{x})");
    }
}

#[test]
fn compare_agrees_with_decode() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..10_000 {
        let x = encode(log_uniform(&mut rng, 1e-6, 1e6), F).unwrap();
        let y = encode(log_uniform(&mut rng, 1e-6, 1e6), F).unwrap();
        let by_value = decode(&x).partial_cmp(&decode(&y)).unwrap();
        assert_eq!(compare(&x, &y).unwrap(), by_value);
    }
}

#[test]
fn sequence_sanity() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..10_000 {
        let a = encode(log_uniform(&mut rng, 1.0, 1e6).abs(), F).unwrap().zeta();
        let b = encode(log_uniform(&mut rng, 1.0, 1e6).abs(), F).unwrap().zeta();
        let (x, y) = if a >= b { (a, b) } else { (b, a) };
        for subtract in [false, true] {
            if subtract && x == y {
                continue;
            }
            let (_, st) = li_add_sub_traced(x, Addend::Li(y), subtract);
            assert!(st.a.iter().all(|&v| v > 0.0 && v <= 1.0), "{:?}", st.a);
            assert!(st.b.iter().all(|&v| (0.0..=1.0).contains(&v)));
            assert!(st.a.len() == x.level as usize);
            if let Some(j) = st.terminated_at {
                assert!(j < x.level as usize);
            }
        }
    }
}

#[test]
fn kernel_example_with_value_one() {
    let x = Zeta::from_f64(2.5).unwrap();
    let (z, _) = li_add_sub_traced(x, Addend::Li(Zeta::ONE), false);
    let want = sli_core::psi(sli_core::phi(2.5).unwrap() + 1.0).unwrap();
    assert!((z.to_f64() - want).abs() < 1e-10);
}

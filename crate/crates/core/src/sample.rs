//! Deterministic random sampling of exact points, digit strings and geodesics.
//!
//! Every sample index gets its own ChaCha stream derived from the seed, so
//! results do not depend on thread scheduling.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::ecf::{ecf_value, EcfDigit, Sign};
use crate::numeric::{BoundaryPoint, Rational};

/// Independent generator for sample `index` under `seed`.
pub fn rng_for(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Uniform-ish rational strictly inside `(lo, hi)` with denominator at most `max_den`.
pub fn rational_in<R: Rng>(rng: &mut R, lo: &Rational, hi: &Rational, max_den: i64) -> Rational {
    assert!(lo < hi, "empty interval");
    loop {
        let den = rng.gen_range(2..=max_den.max(2));
        let d = BigInt::from(den);
        let lo_n: BigInt = (lo * Rational::from_integer(d.clone())).floor().to_integer() + 1;
        let hi_n: BigInt = (hi * Rational::from_integer(d.clone())).ceil().to_integer() - 1;
        if lo_n > hi_n {
            continue;
        }
        let span = (&hi_n - &lo_n).to_i64().unwrap_or(i64::MAX - 1);
        let num = lo_n + rng.gen_range(0..=span);
        return Rational::new(num, d);
    }
}

/// Like [`rational_in`] but never an integer.
pub fn non_integer_in<R: Rng>(rng: &mut R, lo: &Rational, hi: &Rational, max_den: i64) -> Rational {
    loop {
        let r = rational_in(rng, lo, hi, max_den);
        if !r.denom().is_one() {
            return r;
        }
    }
}

pub fn sign<R: Rng>(rng: &mut R) -> Sign {
    if rng.gen_bool(0.5) {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// Random even digit with `a` in `{2, 4, ..., max_a}`.
pub fn ecf_digit<R: Rng>(rng: &mut R, max_a: i64) -> EcfDigit {
    EcfDigit::new(2 * rng.gen_range(1..=max_a / 2), sign(rng))
}

/// Canonical finite digit string: the last sign is `+1`, so tail 0 is the expansion's own end.
pub fn canonical_digits<R: Rng>(rng: &mut R, len: usize, max_a: i64) -> Vec<EcfDigit> {
    let mut v: Vec<EcfDigit> = (0..len).map(|_| ecf_digit(rng, max_a)).collect();
    if let Some(last) = v.last_mut() {
        last.eps = Sign::Plus;
    }
    v
}

/// Geodesic with rational endpoints, `|fwd| > 1` and `|bwd| < 1`, built from
/// `len` random even digits on each side.
pub fn even_geodesic<R: Rng>(rng: &mut R, len: usize, max_a: i64) -> (BoundaryPoint, BoundaryPoint) {
    let lead = ecf_digit(rng, max_a);
    let t = ecf_value(&canonical_digits(rng, len, max_a), &BoundaryPoint::zero());
    let abs_fwd = match lead.eps {
        Sign::Plus => t.add(&BoundaryPoint::from(lead.a.clone())),
        Sign::Minus => BoundaryPoint::from(lead.a.clone()).sub(&t),
    }
    .expect("finite");
    let eps = sign(rng);
    let y = ecf_value(&canonical_digits(rng, len, max_a), &BoundaryPoint::zero());
    let y = sign(rng).apply(&y);
    (eps.apply(&abs_fwd), eps.flip().apply(&y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    #[test]
    fn streams_are_reproducible() {
        let a: Vec<u32> = (0..4).map(|i| rng_for(7, i).gen()).collect();
        let b: Vec<u32> = (0..4).map(|i| rng_for(7, i).gen()).collect();
        assert_eq!(a, b);
        assert_ne!(a[0], a[1]);
    }

    #[test]
    fn rationals_stay_inside() {
        let mut rng = rng_for(1, 0);
        for _ in 0..500 {
            let r = rational_in(&mut rng, &rat(1, 3), &rat(1, 2), 50);
            assert!(r > rat(1, 3) && r < rat(1, 2));
            let s = non_integer_in(&mut rng, &rat(1, 1), &rat(9, 1), 7);
            assert!(!s.is_integer());
        }
    }

    #[test]
    fn geodesics_have_expected_shape() {
        for i in 0..50 {
            let (f, b) = even_geodesic(&mut rng_for(3, i), 10, 8);
            assert!(f.abs().cmp_int(1).is_gt());
            assert!(b.abs().cmp_int(1).is_lt());
        }
    }
}

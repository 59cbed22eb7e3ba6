//! Seeded randomness. Every random object in the crate is a pure function of
//! an explicit `(seed, stream)` pair.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::Scalar;

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64, stream: u64) -> SeededRng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

/// Uniform integer in `[-bound, bound]`.
pub fn small_int(rng: &mut SeededRng, bound: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(rng.gen_range(-bound..=bound)))
}

/// Nonzero integer in `[-bound, bound]`.
pub fn small_nonzero(rng: &mut SeededRng, bound: i64) -> Scalar {
    loop {
        let v = rng.gen_range(-bound..=bound);
        if v != 0 {
            return Scalar::from_integer(BigInt::from(v));
        }
    }
}

/// Fraction `a / b` with `|a| <= bound`, `1 <= b <= bound`.
pub fn small_fraction(rng: &mut SeededRng, bound: i64) -> Scalar {
    let a = rng.gen_range(-bound..=bound);
    let b = rng.gen_range(1..=bound);
    Scalar::new(BigInt::from(a), BigInt::from(b))
}

pub fn int_vector(rng: &mut SeededRng, len: usize, bound: i64) -> Vec<Scalar> {
    (0..len).map(|_| small_int(rng, bound)).collect()
}

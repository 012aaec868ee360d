//! Exact arithmetic: arbitrary-precision integers and rationals, integer
//! square roots, and the LCD / primitive reductions used on projective
//! rational vectors.
//!
//! Everything here is exact; no floating point is used anywhere in the
//! crate's computational core. A lattice embedding is an integer identity
//! and a single rounding error would invalidate it.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

use crate::error::{Error, Result};

/// Signed arbitrary-precision integer.
pub type Int = BigInt;

/// Exact rational. `BigRational` keeps values reduced with a positive
/// denominator, which makes LCD and primitivity checks direct.
pub type Rat = BigRational;

/// Shorthand constructor, mostly for tests and fixtures.
pub fn int(x: i64) -> Int {
    Int::from(x)
}

/// Shorthand rational constructor.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(int(num), int(den))
}

/// Exact integer square root: `Some(k)` iff `k * k == n`.
///
/// The floor square root is computed first and the result is accepted only
/// after squaring it back, so correctness does not depend on the root
/// finder's internals.
pub fn int_sqrt(n: &Int) -> Result<Option<Int>> {
    if n.is_negative() {
        return Err(Error::NegativeRadicand);
    }
    let k = n.sqrt();
    if &(&k * &k) == n {
        Ok(Some(k))
    } else {
        Ok(None)
    }
}

/// GCD of a slice of integers; zero for an empty slice.
pub fn vec_gcd(values: &[Int]) -> Int {
    values.iter().fold(Int::zero(), |acc, v| acc.gcd(v))
}

/// Least common denominator of a nonempty list of rationals: the LCM of
/// the reduced denominators. Always >= 1.
pub fn lcd(values: &[Rat]) -> Int {
    assert!(!values.is_empty(), "lcd of empty list");
    values.iter().fold(Int::one(), |acc, v| acc.lcm(v.denom()))
}

/// Primitive reduction of a projective rational vector with scalar slot 1.
///
/// Multiplying through by the LCD of the components and dividing by the
/// GCD of the resulting integers leaves the LCD in the scalar slot.
pub fn primitive_reduce(v: &[Rat]) -> Result<Vec<Int>> {
    if v.is_empty() || !v[0].is_one() {
        return Err(Error::ScalarNotUnit);
    }
    let l = lcd(v);
    let scaled: Vec<Int> = v
        .iter()
        .map(|x| {
            let t = x * Rat::from_integer(l.clone());
            debug_assert!(t.is_integer());
            t.to_integer()
        })
        .collect();
    let g = vec_gcd(&scaled);
    Ok(scaled.into_iter().map(|x| x / &g).collect())
}

/// Divide an integer vector by the GCD of its components (no-op on the
/// zero vector). The sign pattern is left untouched.
pub fn reduce_int_vec(v: &[Int]) -> Vec<Int> {
    let g = vec_gcd(v);
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

/// Rounding `<x> = floor(x + 1/2)`, evaluated exactly.
/// Halves round up: `<1/2> = 1`, `<-1/2> = 0`.
pub fn round_half_up(x: &Rat) -> Int {
    let two = int(2);
    let num = x.numer() * &two + x.denom();
    let den = x.denom() * &two;
    num.div_floor(&den)
}

/// True iff every prime factor of `n` is congruent to 1 mod 4.
/// In particular `n` must be odd; `n = 1` qualifies vacuously.
pub fn all_prime_factors_1mod4(n: &Int) -> bool {
    let mut m = n.abs();
    if m.is_zero() {
        return false;
    }
    let four = int(4);
    let mut d = int(2);
    while (&d * &d) <= m {
        while (&m % &d).is_zero() {
            if !(&d % &four).is_one() {
                return false;
            }
            m /= &d;
        }
        d += 1;
    }
    if m.is_one() {
        true
    } else {
        (&m % &four).is_one()
    }
}

/// Floor square root for `u64`, exact.
pub(crate) fn isqrt64(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut x = (n as f64).sqrt() as u64 + 1;
    while x * x > n {
        x -= 1;
    }
    while (x + 1).checked_mul(x + 1).is_some_and(|s| s <= n) {
        x += 1;
    }
    x
}

/// `Some(k)` iff `k * k == n`, for `u64`.
pub(crate) fn is_square64(n: u64) -> Option<u64> {
    let k = isqrt64(n);
    if k * k == n {
        Some(k)
    } else {
        None
    }
}

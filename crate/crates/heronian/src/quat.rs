//! Lipschitz-integer quaternions: Hamilton product, norm, conjugate,
//! rounding, one-sided remainders and the Euclidean GCD with abort
//! detection, plus associate normalization.
//!
//! Quaternion GCDs exist whenever at least one argument has odd norm; the
//! remainder loop aborts when the norm fails to decrease, which is the
//! even-norm obstruction surfaced as [`Error::GcdAbort`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::Zero;

use crate::error::{Error, Result};
use crate::exact::{reduce_int_vec, round_half_up, Int, Rat};

/// Which one-sided operation is meant: `Left` is `mod_L` / `GCD_L`
/// (divisors multiply on the left), `Right` the mirror image.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

/// Integer quaternion `s + p i + q j + r k`.
///
/// Doubles as a projective point (scalar slot = LCD) and as a rotor.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Quat {
    pub s: Int,
    pub p: Int,
    pub q: Int,
    pub r: Int,
}

impl Quat {
    pub fn new(s: Int, p: Int, q: Int, r: Int) -> Self {
        Quat { s, p, q, r }
    }

    pub fn of(s: i64, p: i64, q: i64, r: i64) -> Self {
        Quat::new(Int::from(s), Int::from(p), Int::from(q), Int::from(r))
    }

    pub fn zero() -> Self {
        Quat::of(0, 0, 0, 0)
    }

    pub fn one() -> Self {
        Quat::of(1, 0, 0, 0)
    }

    pub fn from_scalar(s: Int) -> Self {
        Quat::new(s, Int::zero(), Int::zero(), Int::zero())
    }

    /// The eight Lipschitz units +-1, +-i, +-j, +-k.
    pub fn units() -> Vec<Quat> {
        let mut out = Vec::with_capacity(8);
        for u in [
            Quat::of(1, 0, 0, 0),
            Quat::of(0, 1, 0, 0),
            Quat::of(0, 0, 1, 0),
            Quat::of(0, 0, 0, 1),
        ] {
            out.push(-&u);
            out.push(u);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.s.is_zero() && self.p.is_zero() && self.q.is_zero() && self.r.is_zero()
    }

    pub fn conj(&self) -> Self {
        Quat::new(self.s.clone(), -&self.p, -&self.q, -&self.r)
    }

    /// `s^2 + p^2 + q^2 + r^2`.
    pub fn norm(&self) -> Int {
        &self.s * &self.s + &self.p * &self.p + &self.q * &self.q + &self.r * &self.r
    }

    pub fn components(&self) -> [&Int; 4] {
        [&self.s, &self.p, &self.q, &self.r]
    }

    pub fn from_components(c: Vec<Int>) -> Self {
        assert_eq!(c.len(), 4);
        let mut it = c.into_iter();
        Quat::new(
            it.next().unwrap(),
            it.next().unwrap(),
            it.next().unwrap(),
            it.next().unwrap(),
        )
    }

    /// Divide by the GCD of the components (primitive reduction of a
    /// projective integer vector). Sign pattern is untouched.
    pub fn reduced(&self) -> Self {
        let v = [
            self.s.clone(),
            self.p.clone(),
            self.q.clone(),
            self.r.clone(),
        ];
        Quat::from_components(reduce_int_vec(&v))
    }
}

impl fmt::Display for Quat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{},{}]", self.s, self.p, self.q, self.r)
    }
}

impl Add for &Quat {
    type Output = Quat;
    fn add(self, rhs: &Quat) -> Quat {
        Quat::new(
            &self.s + &rhs.s,
            &self.p + &rhs.p,
            &self.q + &rhs.q,
            &self.r + &rhs.r,
        )
    }
}

impl Sub for &Quat {
    type Output = Quat;
    fn sub(self, rhs: &Quat) -> Quat {
        Quat::new(
            &self.s - &rhs.s,
            &self.p - &rhs.p,
            &self.q - &rhs.q,
            &self.r - &rhs.r,
        )
    }
}

impl Neg for &Quat {
    type Output = Quat;
    fn neg(self) -> Quat {
        Quat::new(-&self.s, -&self.p, -&self.q, -&self.r)
    }
}

/// Hamilton product; associative, norm-multiplicative, not commutative.
impl Mul for &Quat {
    type Output = Quat;
    fn mul(self, rhs: &Quat) -> Quat {
        let (s1, p1, q1, r1) = (&self.s, &self.p, &self.q, &self.r);
        let (s2, p2, q2, r2) = (&rhs.s, &rhs.p, &rhs.q, &rhs.r);
        Quat::new(
            s1 * s2 - p1 * p2 - q1 * q2 - r1 * r2,
            s1 * p2 + p1 * s2 + q1 * r2 - r1 * q2,
            s1 * q2 - p1 * r2 + q1 * s2 + r1 * p2,
            s1 * r2 + p1 * q2 - q1 * p2 + r1 * s2,
        )
    }
}

/// Quaternion with exact rational components; transient inside remainder
/// computations (`conj(Y)/norm(Y)` is the commutative inverse of `Y`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuatRat {
    pub c: [Rat; 4],
}

impl QuatRat {
    pub fn new(c: [Rat; 4]) -> Self {
        QuatRat { c }
    }

    /// `x / d` componentwise.
    pub fn from_quat_div(x: &Quat, d: &Int) -> Self {
        QuatRat::new([
            Rat::new(x.s.clone(), d.clone()),
            Rat::new(x.p.clone(), d.clone()),
            Rat::new(x.q.clone(), d.clone()),
            Rat::new(x.r.clone(), d.clone()),
        ])
    }
}

/// Componentwise `<x> = floor(x + 1/2)`.
pub fn round(x: &QuatRat) -> Quat {
    Quat::new(
        round_half_up(&x.c[0]),
        round_half_up(&x.c[1]),
        round_half_up(&x.c[2]),
        round_half_up(&x.c[3]),
    )
}

/// One-sided remainder:
/// `x mod_L y = x - y * <conj(y) x / norm(y)>`,
/// `x mod_R y = x - <x conj(y) / norm(y)> * y`.
///
/// No guarantee the norm decreases; the GCD loop checks.
pub fn rem(x: &Quat, y: &Quat, side: Side) -> Result<Quat> {
    if y.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let n = y.norm();
    match side {
        Side::Left => {
            let t = &y.conj() * x;
            let q = round(&QuatRat::from_quat_div(&t, &n));
            Ok(x - &(y * &q))
        }
        Side::Right => {
            let t = x * &y.conj();
            let q = round(&QuatRat::from_quat_div(&t, &n));
            Ok(x - &(&q * y))
        }
    }
}

/// One-sided Euclidean GCD. Aborts with [`Error::GcdAbort`] when the norm
/// fails to decrease, which can only happen when both norms are even.
/// The result is normalized to its canonical associate.
pub fn gcd(y: &Quat, z: &Quat, side: Side) -> Result<Quat> {
    if y.is_zero() && z.is_zero() {
        return Err(Error::GcdOfZeros);
    }
    let mut a = y.clone();
    let mut b = z.clone();
    while !b.is_zero() {
        let r = rem(&a, &b, side)?;
        if r.norm() >= b.norm() {
            return Err(Error::GcdAbort);
        }
        a = b;
        b = r;
    }
    let unit_side = match side {
        Side::Left => Side::Right,
        Side::Right => Side::Left,
    };
    Ok(canonical_associate(&a, unit_side))
}

/// Among the eight unit multiples of `x` on the given side, return the one
/// with lexicographically greatest `(s, p, q, r)`.
///
/// A left GCD is unique modulo units on the *right* and vice versa; pass
/// the side the units act on.
pub fn canonical_associate(x: &Quat, unit_side: Side) -> Quat {
    Quat::units()
        .iter()
        .map(|u| match unit_side {
            Side::Right => x * u,
            Side::Left => u * x,
        })
        .max()
        .unwrap()
}

/// Exact one-sided divisibility: `Side::Left` asks whether `x = d * u` for
/// some integer quaternion `u`.
pub fn divides(d: &Quat, x: &Quat, side: Side) -> bool {
    cofactor(d, x, side).is_some()
}

/// The exact cofactor of a one-sided division, when it exists:
/// `Some(u)` with `x = d * u` (left) or `x = u * d` (right).
pub fn cofactor(d: &Quat, x: &Quat, side: Side) -> Option<Quat> {
    if d.is_zero() {
        return x.is_zero().then(Quat::zero);
    }
    let n = d.norm();
    let t = match side {
        Side::Left => &d.conj() * x,
        Side::Right => x * &d.conj(),
    };
    let mut out = Vec::with_capacity(4);
    for c in t.components() {
        if !(c % &n).is_zero() {
            return None;
        }
        out.push(c / &n);
    }
    Some(Quat::from_components(out))
}

/// The 24 rotations fixing the unit cube, as integer rotor representatives
/// (scalar multiples represent the same rotation):
/// 1; i, j, k; the six 1 +- axis; the six axis +- axis; the eight
/// 1 +- i +- j +- k.
pub fn cube_rotors() -> Vec<Quat> {
    let mut out = vec![
        Quat::of(1, 0, 0, 0),
        Quat::of(0, 1, 0, 0),
        Quat::of(0, 0, 1, 0),
        Quat::of(0, 0, 0, 1),
    ];
    for sign in [1i64, -1] {
        out.push(Quat::of(1, sign, 0, 0));
        out.push(Quat::of(1, 0, sign, 0));
        out.push(Quat::of(1, 0, 0, sign));
        out.push(Quat::of(0, 1, sign, 0));
        out.push(Quat::of(0, 1, 0, sign));
        out.push(Quat::of(0, 0, 1, sign));
    }
    for sp in [1i64, -1] {
        for sq in [1i64, -1] {
            for sr in [1i64, -1] {
                out.push(Quat::of(1, sp, sq, sr));
            }
        }
    }
    debug_assert_eq!(out.len(), 24);
    out
}

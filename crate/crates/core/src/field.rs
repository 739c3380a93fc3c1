//! Exact arithmetic in the biquadratic field ℚ(√2, √5).
//!
//! Every element is stored on the basis `{1, √2, √5, √10}` with reduced
//! arbitrary-precision rational coefficients, so two values are equal exactly
//! when their coefficient vectors are equal. Ordering is decided exactly by
//! squaring out one radical at a time; floating point never takes part in a
//! comparison.

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The golden ratio τ = (1 + √5)/2 in binary64.
pub const TAU: f64 = 1.618_033_988_749_895;
/// Its conjugate σ = (1 − √5)/2 = 1 − τ.
pub const SIGMA: f64 = -0.618_033_988_749_895;

/// An element `c0 + c1·√2 + c2·√5 + c3·√10` of ℚ(√2, √5).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactScalar {
    c: [BigRational; 4],
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl ExactScalar {
    pub fn new(c0: BigRational, c1: BigRational, c2: BigRational, c3: BigRational) -> Self {
        Self {
            c: [c0, c1, c2, c3],
        }
    }

    /// Builds `n0/d + n1/d·√2 + n2/d·√5 + n3/d·√10`.
    pub fn from_parts(n: [i64; 4], d: i64) -> Self {
        Self {
            c: [q(n[0], d), q(n[1], d), q(n[2], d), q(n[3], d)],
        }
    }

    pub fn rational(n: i64, d: i64) -> Self {
        Self::from_parts([n, 0, 0, 0], d)
    }

    pub fn integer(n: i64) -> Self {
        Self::rational(n, 1)
    }

    pub fn zero() -> Self {
        Self::integer(0)
    }

    pub fn one() -> Self {
        Self::integer(1)
    }

    pub fn sqrt2() -> Self {
        Self::from_parts([0, 1, 0, 0], 1)
    }

    pub fn sqrt5() -> Self {
        Self::from_parts([0, 0, 1, 0], 1)
    }

    pub fn sqrt10() -> Self {
        Self::from_parts([0, 0, 0, 1], 1)
    }

    /// The golden ratio τ = (1 + √5)/2.
    pub fn tau() -> Self {
        Self::from_parts([1, 0, 1, 0], 2)
    }

    /// The conjugate golden ratio σ = (1 − √5)/2.
    pub fn sigma() -> Self {
        Self::from_parts([1, 0, -1, 0], 2)
    }

    /// 1/√2 = √2/2.
    pub fn inv_sqrt2() -> Self {
        Self::from_parts([0, 1, 0, 0], 2)
    }

    /// Rational coefficients on the basis `{1, √2, √5, √10}`.
    pub fn coefficients(&self) -> &[BigRational; 4] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.c[1..].iter().all(Zero::is_zero)
    }

    /// Multiplies by the rational `n/d`.
    pub fn scale(&self, n: i64, d: i64) -> Self {
        let f = q(n, d);
        Self {
            c: [
                &self.c[0] * &f,
                &self.c[1] * &f,
                &self.c[2] * &f,
                &self.c[3] * &f,
            ],
        }
    }

    /// Galois conjugate √2 ↦ −√2.
    fn conj_sqrt2(&self) -> Self {
        Self::new(
            self.c[0].clone(),
            -&self.c[1],
            self.c[2].clone(),
            -&self.c[3],
        )
    }

    /// Galois conjugate √5 ↦ −√5.
    fn conj_sqrt5(&self) -> Self {
        Self::new(
            self.c[0].clone(),
            self.c[1].clone(),
            -&self.c[2],
            -&self.c[3],
        )
    }

    /// Multiplicative inverse, computed through the two Galois conjugates.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let a = self.conj_sqrt2();
        // self·a lies in ℚ(√5); multiplying by its conjugate lands in ℚ.
        let n = self * &a;
        let b = n.conj_sqrt5();
        let norm = (&n * &b).c[0].clone();
        let num = &a * &b;
        let inv = norm.recip();
        Ok(Self {
            c: [
                &num.c[0] * &inv,
                &num.c[1] * &inv,
                &num.c[2] * &inv,
                &num.c[3] * &inv,
            ],
        })
    }

    /// Exact sign: −1, 0 or +1.
    pub fn signum(&self) -> i32 {
        // Write the value as u + v·√2 with u, v in ℚ(√5).
        let u = Q5::new(self.c[0].clone(), self.c[2].clone());
        let v = Q5::new(self.c[1].clone(), self.c[3].clone());
        let su = u.signum();
        let sv = v.signum();
        if su == 0 {
            return sv;
        }
        if sv == 0 || su == sv {
            return su;
        }
        // Opposite signs: compare u² against 2v².
        let diff = u.square().sub(&v.square().double());
        if diff.signum() > 0 {
            su
        } else {
            sv
        }
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Nearest binary64 to the exact value.
    pub fn embed(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        if self.is_rational() {
            return self.c[0].to_f64().unwrap_or(f64::NAN);
        }
        let roots = scaled_roots();
        let scale = BigInt::one() << EMBED_BITS;
        let mut acc = self.c[0].clone();
        for (coef, root) in self.c[1..].iter().zip(roots.iter()) {
            if !coef.is_zero() {
                acc += coef * BigRational::new(root.clone(), scale.clone());
            }
        }
        acc.to_f64().unwrap_or(f64::NAN)
    }
}

const EMBED_BITS: usize = 256;

/// ⌊√n · 2^EMBED_BITS⌋ for n = 2, 5, 10.
fn scaled_roots() -> &'static [BigInt; 3] {
    static ROOTS: OnceLock<[BigInt; 3]> = OnceLock::new();
    ROOTS.get_or_init(|| {
        let s2 = BigInt::one() << (2 * EMBED_BITS);
        [
            (&s2 * BigInt::from(2)).sqrt(),
            (&s2 * BigInt::from(5)).sqrt(),
            (&s2 * BigInt::from(10)).sqrt(),
        ]
    })
}

/// Elements `a + b√5` of ℚ(√5), used only by the sign test.
struct Q5 {
    a: BigRational,
    b: BigRational,
}

impl Q5 {
    fn new(a: BigRational, b: BigRational) -> Self {
        Self { a, b }
    }

    fn signum(&self) -> i32 {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        if sa == 0 {
            return sb;
        }
        if sb == 0 || sa == sb {
            return sa;
        }
        let lhs = &self.a * &self.a;
        let rhs = &self.b * &self.b * BigRational::from_integer(BigInt::from(5));
        match lhs.cmp(&rhs) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    fn square(&self) -> Self {
        let five = BigRational::from_integer(BigInt::from(5));
        let two = BigRational::from_integer(BigInt::from(2));
        Self {
            a: &self.a * &self.a + &self.b * &self.b * five,
            b: &self.a * &self.b * two,
        }
    }

    fn double(&self) -> Self {
        let two = BigRational::from_integer(BigInt::from(2));
        Self {
            a: &self.a * &two,
            b: &self.b * &two,
        }
    }

    fn sub(&self, other: &Self) -> Self {
        Self {
            a: &self.a - &other.a,
            b: &self.b - &other.b,
        }
    }
}

fn sign_of(r: &BigRational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl Default for ExactScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for ExactScalar {
    fn from(n: i64) -> Self {
        Self::integer(n)
    }
}

impl PartialOrd for ExactScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        (self - other).signum().cmp(&0)
    }
}

impl<'a> Add<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: &ExactScalar) -> ExactScalar {
        ExactScalar {
            c: [
                &self.c[0] + &rhs.c[0],
                &self.c[1] + &rhs.c[1],
                &self.c[2] + &rhs.c[2],
                &self.c[3] + &rhs.c[3],
            ],
        }
    }
}

impl<'a> Sub<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: &ExactScalar) -> ExactScalar {
        ExactScalar {
            c: [
                &self.c[0] - &rhs.c[0],
                &self.c[1] - &rhs.c[1],
                &self.c[2] - &rhs.c[2],
                &self.c[3] - &rhs.c[3],
            ],
        }
    }
}

impl<'a> Mul<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: &ExactScalar) -> ExactScalar {
        let [a0, a1, a2, a3] = &self.c;
        let [b0, b1, b2, b3] = &rhs.c;
        let two = BigRational::from_integer(BigInt::from(2));
        let five = BigRational::from_integer(BigInt::from(5));
        let ten = BigRational::from_integer(BigInt::from(10));
        // √2·√5 = √10, √2·√10 = 2√5, √5·√10 = 5√2.
        ExactScalar {
            c: [
                a0 * b0 + &two * a1 * b1 + &five * a2 * b2 + &ten * a3 * b3,
                a0 * b1 + a1 * b0 + &five * (a2 * b3 + a3 * b2),
                a0 * b2 + a2 * b0 + &two * (a1 * b3 + a3 * b1),
                a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1,
            ],
        }
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar {
            c: [-&self.c[0], -&self.c[1], -&self.c[2], -&self.c[3]],
        }
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for ExactScalar {
            type Output = ExactScalar;
            fn $m(self, rhs: ExactScalar) -> ExactScalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $m(self, rhs: &ExactScalar) -> ExactScalar {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<'a> Div<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;

    /// Panics on a zero divisor; use [`ExactScalar::inverse`] to handle it.
    fn div(self, rhs: &'a ExactScalar) -> ExactScalar {
        let inv = rhs.inverse().expect("division by zero in ℚ(√2, √5)");
        self * &inv
    }
}

impl Div for ExactScalar {
    type Output = ExactScalar;

    fn div(self, rhs: ExactScalar) -> ExactScalar {
        &self / &rhs
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const RADICALS: [&str; 4] = ["", "sqrt2", "sqrt5", "sqrt10"];
        let mut out = String::new();
        for (i, c) in self.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = fmt_rational(&c.abs());
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if i == 0 {
                out.push_str(&mag);
            } else if mag == "1" {
                out.push_str(RADICALS[i]);
            } else {
                out.push_str(&format!("{mag}*{}", RADICALS[i]));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactScalar({self})")
    }
}

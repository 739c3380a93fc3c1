//! Quaternions over a generic scalar and the `[p, q]` / `[p, q]*` action
//! formalism for orthogonal maps of 3-space.
//!
//! A rotation `[p, q]` sends `v ↦ p·v·q`; a rotary reflection `[p, q]*` sends
//! `v ↦ p·v̄·q`. Because `[p, q]` and `[−p, −q]` act identically, every
//! [`GroupElement`] is stored with the first nonzero component of `p`
//! positive, which makes element equality componentwise.

use std::cmp::Ordering;
use std::fmt::{self, Debug};
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::ExactScalar;

/// Absolute tolerance under which two binary64 coordinates are identified.
pub const POINT_TOLERANCE: f64 = 1e-9;

/// Scalars a quaternion can be built over: the exact field or binary64.
pub trait Scalar: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    fn inv_sqrt2() -> Self;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;
    /// Division by a nonzero integer.
    fn div_int(&self, n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn to_f64(&self) -> f64;
    /// Equality for exact scalars, closeness within [`POINT_TOLERANCE`] for floats.
    fn near(&self, other: &Self) -> bool;
    fn total_cmp(&self, other: &Self) -> Ordering;
}

impl Scalar for ExactScalar {
    fn zero() -> Self {
        ExactScalar::zero()
    }
    fn one() -> Self {
        ExactScalar::one()
    }
    fn from_int(n: i64) -> Self {
        ExactScalar::integer(n)
    }
    fn inv_sqrt2() -> Self {
        ExactScalar::inv_sqrt2()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negate(&self) -> Self {
        -self
    }
    fn div_int(&self, n: i64) -> Self {
        self.scale(1, n)
    }
    fn is_zero(&self) -> bool {
        ExactScalar::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        ExactScalar::is_negative(self)
    }
    fn to_f64(&self) -> f64 {
        self.embed()
    }
    fn near(&self, other: &Self) -> bool {
        self == other
    }
    fn total_cmp(&self, other: &Self) -> Ordering {
        self.cmp(other)
    }
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_int(n: i64) -> Self {
        n as f64
    }
    fn inv_sqrt2() -> Self {
        std::f64::consts::FRAC_1_SQRT_2
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negate(&self) -> Self {
        -self
    }
    fn div_int(&self, n: i64) -> Self {
        self / n as f64
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn is_negative(&self) -> bool {
        *self < 0.0
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn near(&self, other: &Self) -> bool {
        (self - other).abs() <= POINT_TOLERANCE
    }
    fn total_cmp(&self, other: &Self) -> Ordering {
        f64::total_cmp(self, other)
    }
}

/// `q0 + q1·e1 + q2·e2 + q3·e3`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quaternion<S> {
    pub q0: S,
    pub q1: S,
    pub q2: S,
    pub q3: S,
}

impl<S: Scalar> Quaternion<S> {
    pub fn new(q0: S, q1: S, q2: S, q3: S) -> Self {
        Self { q0, q1, q2, q3 }
    }

    /// The pure quaternion `x·e1 + y·e2 + z·e3`.
    pub fn pure(x: S, y: S, z: S) -> Self {
        Self::new(S::zero(), x, y, z)
    }

    pub fn zero() -> Self {
        Self::new(S::zero(), S::zero(), S::zero(), S::zero())
    }

    pub fn one() -> Self {
        Self::new(S::one(), S::zero(), S::zero(), S::zero())
    }

    /// The imaginary unit `e_i`, `i ∈ {1, 2, 3}`.
    pub fn unit(i: usize) -> Self {
        let mut c = [S::zero(), S::zero(), S::zero(), S::zero()];
        c[i] = S::one();
        Self::from_array(c)
    }

    pub fn from_array([q0, q1, q2, q3]: [S; 4]) -> Self {
        Self { q0, q1, q2, q3 }
    }

    pub fn components(&self) -> [&S; 4] {
        [&self.q0, &self.q1, &self.q2, &self.q3]
    }

    pub fn conj(&self) -> Self {
        Self::new(
            self.q0.clone(),
            self.q1.negate(),
            self.q2.negate(),
            self.q3.negate(),
        )
    }

    pub fn is_pure(&self) -> bool {
        self.q0.is_zero()
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Quaternion<T> {
        Quaternion::new(f(&self.q0), f(&self.q1), f(&self.q2), f(&self.q3))
    }

    pub fn scaled(&self, k: &S) -> Self {
        self.map(|c| c.times(k))
    }

    pub fn div_int(&self, n: i64) -> Self {
        self.map(|c| c.div_int(n))
    }

    /// Hamilton product with `e_i e_j = −δ_ij + ε_ijk e_k`.
    pub fn multiply(&self, b: &Self) -> Self {
        let a = self;
        let t = |x: &S, y: &S| x.times(y);
        Self::new(
            t(&a.q0, &b.q0)
                .minus(&t(&a.q1, &b.q1))
                .minus(&t(&a.q2, &b.q2))
                .minus(&t(&a.q3, &b.q3)),
            t(&a.q0, &b.q1)
                .plus(&t(&a.q1, &b.q0))
                .plus(&t(&a.q2, &b.q3))
                .minus(&t(&a.q3, &b.q2)),
            t(&a.q0, &b.q2)
                .minus(&t(&a.q1, &b.q3))
                .plus(&t(&a.q2, &b.q0))
                .plus(&t(&a.q3, &b.q1)),
            t(&a.q0, &b.q3)
                .plus(&t(&a.q1, &b.q2))
                .minus(&t(&a.q2, &b.q1))
                .plus(&t(&a.q3, &b.q0)),
        )
    }

    /// `(p, q) = ½(p̄q + q̄p)`, the Euclidean inner product on ℝ⁴.
    pub fn scalar_product(&self, other: &Self) -> S {
        self.q0
            .times(&other.q0)
            .plus(&self.q1.times(&other.q1))
            .plus(&self.q2.times(&other.q2))
            .plus(&self.q3.times(&other.q3))
    }

    pub fn norm_sqr(&self) -> S {
        self.scalar_product(self)
    }

    pub fn near(&self, other: &Self) -> bool {
        self.components()
            .iter()
            .zip(other.components())
            .all(|(a, b)| a.near(b))
    }

    /// Lexicographic order on `(q0, q1, q2, q3)`.
    pub fn total_cmp(&self, other: &Self) -> Ordering {
        self.components()
            .iter()
            .zip(other.components())
            .map(|(a, b)| a.total_cmp(b))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    }

    pub fn to_f64(&self) -> Quaternion<f64> {
        self.map(|c| c.to_f64())
    }
}

impl Quaternion<f64> {
    /// Imaginary part as a 3-vector.
    pub fn vector(&self) -> [f64; 3] {
        [self.q1, self.q2, self.q3]
    }

    pub fn from_vector([x, y, z]: [f64; 3]) -> Self {
        Self::pure(x, y, z)
    }
}

impl<S: Scalar> Mul for &Quaternion<S> {
    type Output = Quaternion<S>;
    fn mul(self, rhs: &Quaternion<S>) -> Quaternion<S> {
        self.multiply(rhs)
    }
}

impl<S: Scalar> Add for &Quaternion<S> {
    type Output = Quaternion<S>;
    fn add(self, rhs: &Quaternion<S>) -> Quaternion<S> {
        Quaternion::new(
            self.q0.plus(&rhs.q0),
            self.q1.plus(&rhs.q1),
            self.q2.plus(&rhs.q2),
            self.q3.plus(&rhs.q3),
        )
    }
}

impl<S: Scalar> Sub for &Quaternion<S> {
    type Output = Quaternion<S>;
    fn sub(self, rhs: &Quaternion<S>) -> Quaternion<S> {
        Quaternion::new(
            self.q0.minus(&rhs.q0),
            self.q1.minus(&rhs.q1),
            self.q2.minus(&rhs.q2),
            self.q3.minus(&rhs.q3),
        )
    }
}

impl<S: Scalar> Neg for &Quaternion<S> {
    type Output = Quaternion<S>;
    fn neg(self) -> Quaternion<S> {
        self.map(|c| c.negate())
    }
}

impl<S: Debug> Debug for Quaternion<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({:?}; {:?}, {:?}, {:?})",
            self.q0, self.q1, self.q2, self.q3
        )
    }
}

impl<S: fmt::Display> fmt::Display for Quaternion<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}) + ({})e1 + ({})e2 + ({})e3",
            self.q0, self.q1, self.q2, self.q3
        )
    }
}

/// An orthogonal map of 3-space written as `[p, q]` or `[p, q]*`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupElement<S> {
    p: Quaternion<S>,
    q: Quaternion<S>,
    star: bool,
}

impl<S: Scalar> GroupElement<S> {
    /// Builds the element and fixes the sign of the pair.
    pub fn new(p: Quaternion<S>, q: Quaternion<S>, star: bool) -> Self {
        let flip = p
            .components()
            .into_iter()
            .find(|c| !c.is_zero())
            .is_some_and(|c| c.is_negative());
        if flip {
            Self {
                p: -&p,
                q: -&q,
                star,
            }
        } else {
            Self { p, q, star }
        }
    }

    pub fn identity() -> Self {
        Self::new(Quaternion::one(), Quaternion::one(), false)
    }

    /// `[p, p̄]`, the rotation conjugating by the unit quaternion `p`.
    pub fn rotation(p: Quaternion<S>) -> Self {
        let q = p.conj();
        Self::new(p, q, false)
    }

    /// `[p, p̄]*`.
    pub fn rotary_reflection(p: Quaternion<S>) -> Self {
        let q = p.conj();
        Self::new(p, q, true)
    }

    /// The reflection in the plane orthogonal to `alpha`, `[α/√2, −α/√2]*`.
    ///
    /// `alpha` must be pure with `(α, α) = 2`.
    pub fn reflection_from_root(alpha: &Quaternion<S>) -> Result<Self> {
        if !alpha.is_pure() {
            return Err(Error::InvalidRoot(format!("{alpha:?} is not pure")));
        }
        if !alpha.norm_sqr().near(&S::from_int(2)) {
            return Err(Error::InvalidRoot(format!(
                "{alpha:?} has squared norm {:?}, expected 2",
                alpha.norm_sqr()
            )));
        }
        let half = alpha.scaled(&S::inv_sqrt2());
        let neg = -&half;
        Ok(Self::new(half, neg, true))
    }

    pub fn p(&self) -> &Quaternion<S> {
        &self.p
    }

    pub fn q(&self) -> &Quaternion<S> {
        &self.q
    }

    pub fn is_star(&self) -> bool {
        self.star
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn apply(&self, v: &Quaternion<S>) -> Quaternion<S> {
        if self.star {
            self.p.multiply(&v.conj()).multiply(&self.q)
        } else {
            self.p.multiply(v).multiply(&self.q)
        }
    }

    /// The element acting as `self ∘ other`, i.e. `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        let (p, q) = if self.star {
            (
                self.p.multiply(&other.q.conj()),
                other.p.conj().multiply(&self.q),
            )
        } else {
            (self.p.multiply(&other.p), other.q.multiply(&self.q))
        };
        Self::new(p, q, self.star ^ other.star)
    }

    /// Inverse for unit `p`, `q`.
    pub fn inverse(&self) -> Self {
        if self.star {
            Self::new(self.q.clone(), self.p.clone(), true)
        } else {
            Self::new(self.p.conj(), self.q.conj(), false)
        }
    }

    /// Smallest `n ≥ 1` with `selfⁿ = 1`, searched up to `limit`.
    pub fn order(&self, limit: usize) -> Option<usize> {
        let mut acc = self.clone();
        for n in 1..=limit {
            if acc.is_identity() {
                return Some(n);
            }
            acc = self.compose(&acc);
        }
        None
    }

    pub fn total_cmp(&self, other: &Self) -> Ordering {
        self.star
            .cmp(&other.star)
            .then_with(|| self.p.total_cmp(&other.p))
            .then_with(|| self.q.total_cmp(&other.q))
    }

    pub fn to_f64(&self) -> GroupElement<f64> {
        GroupElement {
            p: self.p.to_f64(),
            q: self.q.to_f64(),
            star: self.star,
        }
    }
}

impl<S: Debug> Debug for GroupElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{:?}, {:?}]{}",
            self.p,
            self.q,
            if self.star { "*" } else { "" }
        )
    }
}

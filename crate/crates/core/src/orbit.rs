//! Orbits of vectors under finite groups.

use crate::coxeter::{CoxeterSystem, DynkinVector, FiniteGroup, GroupKind};
use crate::field::ExactScalar;
use crate::quaternion::{GroupElement, Quaternion, Scalar};

/// Scalars whose group elements a [`FiniteGroup`] carries.
pub trait GroupScalar: Scalar {
    fn elements_of(group: &FiniteGroup) -> &[GroupElement<Self>];
    fn weight_vector(system: &CoxeterSystem, d: &DynkinVector<Self>) -> Quaternion<Self>;
}

impl GroupScalar for ExactScalar {
    fn elements_of(group: &FiniteGroup) -> &[GroupElement<Self>] {
        group.elements()
    }
    fn weight_vector(system: &CoxeterSystem, d: &DynkinVector<Self>) -> Quaternion<Self> {
        system.vector(d)
    }
}

impl GroupScalar for f64 {
    fn elements_of(group: &FiniteGroup) -> &[GroupElement<Self>] {
        group.numeric()
    }
    fn weight_vector(system: &CoxeterSystem, d: &DynkinVector<Self>) -> Quaternion<Self> {
        system.vector_f64(d)
    }
}

/// A deduplicated, sorted set of images of one vector.
#[derive(Debug, Clone, PartialEq)]
pub struct Orbit<S> {
    pub points: Vec<Quaternion<S>>,
    pub group: GroupKind,
}

/// Removes near-duplicates (exact duplicates for exact scalars) and sorts.
pub fn dedup_points<S: Scalar>(
    points: impl IntoIterator<Item = Quaternion<S>>,
) -> Vec<Quaternion<S>> {
    let mut out: Vec<Quaternion<S>> = Vec::new();
    for p in points {
        if !out.iter().any(|q| q.near(&p)) {
            out.push(p);
        }
    }
    out.sort_by(|a, b| a.total_cmp(b));
    out
}

impl<S: GroupScalar> Orbit<S> {
    /// `{g·v : g ∈ group}`.
    pub fn generate(group: &FiniteGroup, v: &Quaternion<S>) -> Self {
        let points = dedup_points(S::elements_of(group).iter().map(|g| g.apply(v)));
        Self {
            points,
            group: group.kind(),
        }
    }

    /// Union of several orbits, deduplicated.
    pub fn union(parts: &[&Orbit<S>], group: GroupKind) -> Self {
        let points = dedup_points(parts.iter().flat_map(|o| o.points.iter().cloned()));
        Self { points, group }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, v: &Quaternion<S>) -> bool {
        self.points.iter().any(|p| p.near(v))
    }

    /// Same point set, within [`crate::POINT_TOLERANCE`] for binary64.
    pub fn same_set(&self, other: &[Quaternion<S>]) -> bool {
        self.len() == dedup_points(other.iter().cloned()).len()
            && other.iter().all(|p| self.contains(p))
    }

    /// Image of every point under `g`.
    pub fn transformed(&self, g: &GroupElement<S>, group: GroupKind) -> Self {
        let points = dedup_points(self.points.iter().map(|p| g.apply(p)));
        Self { points, group }
    }

    pub fn scaled(&self, k: &S) -> Self {
        Self {
            points: self.points.iter().map(|p| p.scaled(k)).collect(),
            group: self.group,
        }
    }

    pub fn to_f64(&self) -> Orbit<f64> {
        Orbit {
            points: dedup_points(self.points.iter().map(Quaternion::to_f64)),
            group: self.group,
        }
    }

    pub fn vectors(&self) -> Vec<[f64; 3]> {
        self.points.iter().map(|p| p.to_f64().vector()).collect()
    }
}

/// `O(Λ)` for `Λ = a1ω1 + a2ω2 + a3ω3`.
pub fn orbit<S: GroupScalar>(
    group: &FiniteGroup,
    seed: &DynkinVector<S>,
    system: &CoxeterSystem,
) -> Orbit<S> {
    Orbit::generate(group, &S::weight_vector(system, seed))
}

/// Arithmetic mean of a nonempty list of points.
pub fn face_center<S: Scalar>(points: &[Quaternion<S>]) -> Quaternion<S> {
    assert!(!points.is_empty(), "face_center of an empty list");
    let sum = points.iter().fold(Quaternion::zero(), |acc, p| &acc + p);
    sum.div_int(points.len() as i64)
}

//! Constructions of the named solids as unions of group orbits.
//!
//! Classical solids (tetrahedron, icosahedron, dodecahedron, the fixed
//! pyritohedron) are built in exact arithmetic. The snub solids depend on a
//! root of a cubic and are built in binary64.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::coxeter::{full, proper, pyritohedral, system, DiagramId, DynkinVector, GroupKind};
use crate::error::{Error, Result};
use crate::field::{ExactScalar, TAU};
use crate::orbit::{face_center, Orbit};
use crate::quaternion::{GroupElement, Quaternion};
use crate::roots;

type E = ExactScalar;
type Q = Quaternion<E>;
type F = Quaternion<f64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SolidKind {
    Tetrahedron,
    Icosahedron,
    Dodecahedron,
    Pyritohedron,
    SnubCube,
    SnubDodecahedron,
    PentagonalIcositetrahedron,
    PentagonalHexacontahedron,
    QuasiregularUnion,
    FundamentalOrbit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Handedness {
    Left,
    Right,
    Achiral,
}

impl fmt::Display for Handedness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Left => "left",
            Self::Right => "right",
            Self::Achiral => "achiral",
        })
    }
}

/// What was built, with the parameters and derived constants.
#[derive(Debug, Clone, Serialize)]
pub struct SolidSpec {
    pub kind: SolidKind,
    pub name: String,
    pub handedness: Handedness,
    pub parameters: BTreeMap<String, f64>,
    pub constants: BTreeMap<String, f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub convention: Option<String>,
}

impl SolidSpec {
    pub fn new(kind: SolidKind, name: impl Into<String>, handedness: Handedness) -> Self {
        Self {
            kind,
            name: name.into(),
            handedness,
            parameters: BTreeMap::new(),
            constants: BTreeMap::new(),
            convention: None,
        }
    }

    pub fn with_parameter(mut self, key: &str, value: f64) -> Self {
        self.parameters.insert(key.to_string(), value);
        self
    }

    pub fn with_constant(mut self, key: &str, value: f64) -> Self {
        self.constants.insert(key.to_string(), value);
        self
    }

    pub fn with_convention(mut self, note: &str) -> Self {
        self.convention = Some(note.to_string());
        self
    }
}

fn int(n: i64) -> E {
    E::integer(n)
}

fn pure(x: E, y: E, z: E) -> Q {
    Quaternion::pure(x, y, z)
}

/// Vector part of the product of two pure quaternions.
pub fn cross<S: crate::Scalar>(a: &Quaternion<S>, b: &Quaternion<S>) -> Quaternion<S> {
    let mut c = a.multiply(b);
    c.q0 = S::zero();
    c
}

/// Tetrahedron `O(Λ_I)` from `Λ_I = ½(e1 + e2 + e3)` under the proper
/// A1³ group, and its mirror image `O(r1Λ_I)`.
pub fn tetrahedron_pair() -> (Orbit<E>, Orbit<E>) {
    let sys = system(DiagramId::A1A1A1);
    let a = E::inv_sqrt2();
    let seed = sys.vector(&DynkinVector::new(a.clone(), a.clone(), a));
    let group = proper(DiagramId::A1A1A1);
    let [r1, _, _] = sys.generators();
    (
        Orbit::generate(group, &seed),
        Orbit::generate(group, &r1.apply(&seed)),
    )
}

/// Seeds `Λ = a2(xω1 + ω2 + xω3)` of the two A3 icosahedra, from the roots
/// `x = τ` and `x = σ` of `x³ − x² − x = 0`.
pub fn icosahedron_seeds() -> (Q, Q) {
    let sys = system(DiagramId::A3);
    let seed = |x: E, a2: E| sys.vector(&DynkinVector::new(&x * &a2, a2.clone(), &x * &a2));
    let tau = E::tau();
    let lambda_1 = seed(tau.clone(), E::sigma().scale(-1, 2));
    let lambda_2 = seed(E::sigma(), (&tau * &tau).scale(1, 2));
    (lambda_1, lambda_2)
}

/// The icosahedra `O(Λ_I)` and `O(Λ_II)` under the proper A3 group.
pub fn icosahedron_pair() -> (Orbit<E>, Orbit<E>) {
    let (l1, l2) = icosahedron_seeds();
    let group = proper(DiagramId::A3);
    (Orbit::generate(group, &l1), Orbit::generate(group, &l2))
}

/// The regular dodecahedron as the three A4 orbits of its face centres.
#[derive(Debug, Clone)]
pub struct DodecahedronConstruction {
    /// `⅓(Λ + r2r1Λ + r2r3Λ)`.
    pub b2: Q,
    /// Scale putting `λb2` in the plane through `ω1` with normal `Λ_I`.
    pub lambda: E,
    pub orbits: [Orbit<E>; 3],
}

pub fn dodecahedron_from_dual() -> DodecahedronConstruction {
    let sys = system(DiagramId::A3);
    let [r1, r2, r3] = sys.generators();
    let (lam, _) = icosahedron_seeds();
    let b2 = face_center(&[
        lam.clone(),
        r2.compose(&r1).apply(&lam),
        r2.compose(&r3).apply(&lam),
    ]);
    let w1 = &sys.weights[0];
    let lambda = &w1.scalar_product(&lam) / &b2.scalar_product(&lam);
    let group = proper(DiagramId::A3);
    let orbits = [
        Orbit::generate(group, &b2.scaled(&lambda)),
        Orbit::generate(group, w1),
        Orbit::generate(group, &sys.weights[2]),
    ];
    DodecahedronConstruction { b2, lambda, orbits }
}

/// The pyritohedron whose pentagons pass through the cube vertices
/// `½(±e1 ± e2 ± e3)`.
#[derive(Debug, Clone)]
pub struct PyritohedronConstruction {
    /// Face centres of the irregular icosahedron, up to scale.
    pub d: [Q; 3],
    /// Normal of the plane through `d2, d4, d5`.
    pub normal: Q,
    /// Solved from `(ρd2 − ω1)·D = 0`.
    pub rho: E,
    /// Orbits of `ρd2` (under Th), `ω1` and `ω3` (under A4).
    pub orbits: [Orbit<E>; 3],
}

impl PyritohedronConstruction {
    pub fn points(&self) -> Orbit<E> {
        Orbit::union(
            &[&self.orbits[0], &self.orbits[1], &self.orbits[2]],
            GroupKind::Pyritohedral,
        )
    }
}

pub fn pyritohedron_fixed() -> PyritohedronConstruction {
    let sys = system(DiagramId::A3);
    let (tau, sigma) = (E::tau(), E::sigma());
    let long = &tau - &sigma.scale(2, 1);
    let d2 = pure(int(0), long.clone(), -&sigma);
    let d4 = pure(sigma.clone(), int(0), long.clone());
    let d5 = pure(-&sigma, int(0), long);
    let normal = cross(&(&d4 - &d2), &(&d5 - &d2));
    let w1 = &sys.weights[0];
    let rho = &w1.scalar_product(&normal) / &d2.scalar_product(&normal);
    let a4 = proper(DiagramId::A3);
    let orbits = [
        Orbit::generate(pyritohedral(), &d2.scaled(&rho)),
        Orbit::generate(a4, w1),
        Orbit::generate(a4, &sys.weights[2]),
    ];
    PyritohedronConstruction {
        d: [d2, d4, d5],
        normal,
        rho,
        orbits,
    }
}

/// One member of the pyritohedron family: `{±ae_i ± be_j}` with
/// `b = a² − 2a`, together with the cube `(±e1 ± e2 ± e3)`.
#[derive(Debug, Clone)]
pub struct PyritohedronFamily {
    pub a: f64,
    pub b: f64,
    pub orbits: [Orbit<f64>; 2],
}

impl PyritohedronFamily {
    pub fn points(&self) -> Orbit<f64> {
        Orbit::union(&[&self.orbits[0], &self.orbits[1]], GroupKind::Pyritohedral)
    }
}

/// Builds the family member for `a`. Outside `1 < a ≤ 2` the twelve points
/// fall inside or onto the cube and the pentagons collapse.
pub fn pyritohedron_family(a: f64) -> Result<PyritohedronFamily> {
    if !(a.is_finite() && a > 1.0 && a <= 2.0) {
        return Err(Error::DegenerateParameter(format!(
            "pyritohedron parameter a = {a} is outside (1, 2]"
        )));
    }
    let b = a * a - 2.0 * a;
    let th = pyritohedral();
    let orbits = [
        Orbit::generate(th, &F::pure(a, b, 0.0)),
        Orbit::generate(th, &F::pure(1.0, 1.0, 1.0)),
    ];
    Ok(PyritohedronFamily { a, b, orbits })
}

/// A snub solid: the solved cubic root, the seed and both mirror orbits.
#[derive(Debug, Clone)]
pub struct SnubSolid {
    pub diagram: DiagramId,
    pub x: f64,
    pub y: f64,
    /// Dynkin indices of the left seed.
    pub dynkin: DynkinVector<f64>,
    /// `Λ_I`.
    pub seed: F,
    pub left: Orbit<f64>,
    pub right: Orbit<f64>,
}

impl SnubSolid {
    fn from_seed(diagram: DiagramId, x: f64, y: f64, dynkin: DynkinVector<f64>) -> Self {
        let sys = system(diagram);
        let seed = sys.vector_f64(&dynkin);
        let r1 = sys.generators()[0].to_f64();
        let group = proper(diagram);
        Self {
            diagram,
            x,
            y,
            left: Orbit::generate(group, &seed),
            right: Orbit::generate(group, &r1.apply(&seed)),
            dynkin,
            seed,
        }
    }

    /// The three squared-edge expressions that must agree at the seed,
    /// normalised by `a2²`.
    pub fn edge_expressions(&self) -> [f64; 3] {
        let d = &self.dynkin;
        let (a1, a2, a3) = (d.a1 / d.a2, 1.0, d.a3 / d.a2);
        match self.diagram {
            DiagramId::B3 => [
                a1 * a1 + a1 * a2 + a2 * a2,
                a2 * a2 + std::f64::consts::SQRT_2 * a2 * a3 + a3 * a3,
                a1 * a1 + a3 * a3,
            ],
            _ => [
                a1 * a1 + TAU * a1 * a2 + a2 * a2,
                a2 * a2 + a2 * a3 + a3 * a3,
                a1 * a1 + a3 * a3,
            ],
        }
    }

    pub fn spec(&self, handedness: Handedness) -> SolidSpec {
        let (kind, name) = match self.diagram {
            DiagramId::B3 => (SolidKind::SnubCube, "snub-cube"),
            _ => (SolidKind::SnubDodecahedron, "snub-dodecahedron"),
        };
        let spec = SolidSpec::new(kind, name, handedness)
            .with_constant("x", self.x)
            .with_constant("y", self.y);
        match self.diagram {
            DiagramId::B3 => spec.with_convention("x = a1/a2, y = a3/a2"),
            _ => spec.with_convention("y = a1/a2, x = a3/a2"),
        }
    }
}

/// Snub cube: `x³ − x² − x − 1 = 0`, `y = (x² − 1)/√2`, seed
/// `Λ_I = a2(xω1 + ω2 + yω3)` with `a2 = 2/(x² + 1)`, so that
/// `Λ_I = xe1 + e2 + x⁻¹e3`.
pub fn snub_cube_pair() -> Result<SnubSolid> {
    let x = roots::snub_cube_root()?;
    let y = (x * x - 1.0) / std::f64::consts::SQRT_2;
    let a2 = 2.0 / (x * x + 1.0);
    Ok(SnubSolid::from_seed(
        DiagramId::B3,
        x,
        y,
        DynkinVector::new(a2 * x, a2, a2 * y),
    ))
}

/// Snub dodecahedron: `x³ − x² − x − τ = 0`, `y = τ/(x − 1)`, seed
/// `Λ_I = a2(yω1 + ω2 + xω3)` with `a2 = √2`. Here `y = a1/a2` and
/// `x = a3/a2`, the reverse of the snub cube.
pub fn snub_dodecahedron_pair() -> Result<SnubSolid> {
    let x = roots::snub_dodecahedron_root()?;
    let y = TAU / (x - 1.0);
    let a2 = std::f64::consts::SQRT_2;
    Ok(SnubSolid::from_seed(
        DiagramId::H3,
        x,
        y,
        DynkinVector::new(a2 * y, a2, a2 * x),
    ))
}

/// Catalan dual of a snub solid, as three orbits of face-centre directions
/// scaled into the planes with normals at the snub vertices.
#[derive(Debug, Clone)]
pub struct CatalanDual {
    /// `⅓(Λ + r2r1Λ + r2r3Λ)`, the centre of the third face type.
    pub face_center: F,
    /// `K` in the face plane `v·Λ_I = K`.
    pub plane_constant: f64,
    /// Scales applied to `ω1`, `ω3` and the face centre.
    pub scales: [f64; 3],
    pub orbits: [Orbit<f64>; 3],
}

impl CatalanDual {
    pub fn points(&self) -> Orbit<f64> {
        Orbit::union(
            &[&self.orbits[0], &self.orbits[1], &self.orbits[2]],
            self.orbits[0].group,
        )
    }

    /// Scaled face-centre vertex.
    pub fn scaled_face_center(&self) -> F {
        self.face_center.scaled(&self.scales[2])
    }
}

fn catalan_dual(snub: &SnubSolid, reference: usize) -> CatalanDual {
    let sys = system(snub.diagram);
    let [r1, r2, r3] = sys.generators().map(|g| g.to_f64());
    let lam = &snub.seed;
    let center = face_center(&[
        lam.clone(),
        r2.compose(&r1).apply(lam),
        r2.compose(&r3).apply(lam),
    ]);
    let anchors = [
        sys.weights[0].to_f64(),
        sys.weights[2].to_f64(),
        center.clone(),
    ];
    let k = anchors[reference].scalar_product(lam);
    let scales = anchors.clone().map(|a| k / a.scalar_product(lam));
    let group = proper(snub.diagram);
    let orbits = std::array::from_fn(|i| Orbit::generate(group, &anchors[i].scaled(&scales[i])));
    CatalanDual {
        face_center: center,
        plane_constant: k,
        scales,
        orbits,
    }
}

/// Pentagonal icositetrahedron: `O(λω1) ∪ O(ω3) ∪ O(ηc2)` with faces in the
/// planes `v·Λ = ω3·Λ` for `Λ` in the left snub cube.
pub fn snub_cube_dual(snub: &SnubSolid) -> CatalanDual {
    catalan_dual(snub, 1)
}

/// Pentagonal hexacontahedron: `O(ω1) ∪ λO(ω3) ∪ ρO(c2)` with faces in the
/// planes `v·Λ = ω1·Λ`.
pub fn snub_dodecahedron_dual(snub: &SnubSolid) -> CatalanDual {
    catalan_dual(snub, 0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum UnionKind {
    Icosahedral,
    SnubCube,
    SnubDodecahedron,
}

/// Orbit of `Λ_I` under the full reflection group, the union of both
/// mirror images.
pub fn quasiregular_union(kind: UnionKind) -> Result<Orbit<f64>> {
    Ok(match kind {
        UnionKind::Icosahedral => {
            let (l1, _) = icosahedron_seeds();
            Orbit::generate(full(DiagramId::A3), &l1).to_f64()
        }
        UnionKind::SnubCube => Orbit::generate(full(DiagramId::B3), &snub_cube_pair()?.seed),
        UnionKind::SnubDodecahedron => {
            Orbit::generate(full(DiagramId::H3), &snub_dodecahedron_pair()?.seed)
        }
    })
}

/// `O(ω_index)` under the full group of `id`, `index` in `1..=3`.
pub fn fundamental_orbit(id: DiagramId, index: usize) -> Result<Orbit<E>> {
    if !(1..=3).contains(&index) {
        return Err(Error::InvalidArgument(format!(
            "weight index {index} is not 1, 2 or 3"
        )));
    }
    Ok(Orbit::generate(full(id), &system(id).weights[index - 1]))
}

/// The reflection `r1` of `id`, used as the default mirror.
pub fn mirror(id: DiagramId) -> GroupElement<E> {
    let [r1, _, _] = system(id).generators();
    r1
}

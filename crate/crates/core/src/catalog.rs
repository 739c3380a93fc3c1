//! Named solids with their meshes, symmetry groups and mirror maps.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::analysis::{analyze, chirality_test, AnalysisReport, ChiralityReport};
use crate::coxeter::{full, proper, pyritohedral, DiagramId, FiniteGroup, GroupKind};
use crate::error::{Error, Result};
use crate::field::{ExactScalar, SIGMA, TAU};
use crate::hull::{build_faces, Point, Polyhedron};
use crate::orbit::Orbit;
use crate::quaternion::GroupElement;
use crate::solids::{self, Handedness, SolidKind, SolidSpec, UnionKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NamedSolid {
    Tetrahedron,
    Icosahedron,
    Dodecahedron,
    Pyritohedron,
    SnubCube,
    SnubDodecahedron,
    PentagonalIcositetrahedron,
    PentagonalHexacontahedron,
    IcosaUnion,
    SnubCubeUnion,
    SnubDodecaUnion,
    FundamentalOrbit,
}

impl NamedSolid {
    /// Every solid that needs no extra arguments.
    pub const NAMED: [NamedSolid; 11] = [
        Self::Tetrahedron,
        Self::Icosahedron,
        Self::Dodecahedron,
        Self::Pyritohedron,
        Self::SnubCube,
        Self::SnubDodecahedron,
        Self::PentagonalIcositetrahedron,
        Self::PentagonalHexacontahedron,
        Self::IcosaUnion,
        Self::SnubCubeUnion,
        Self::SnubDodecaUnion,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Tetrahedron => "tetrahedron",
            Self::Icosahedron => "icosahedron",
            Self::Dodecahedron => "dodecahedron",
            Self::Pyritohedron => "pyritohedron",
            Self::SnubCube => "snub-cube",
            Self::SnubDodecahedron => "snub-dodecahedron",
            Self::PentagonalIcositetrahedron => "pentagonal-icositetrahedron",
            Self::PentagonalHexacontahedron => "pentagonal-hexacontahedron",
            Self::IcosaUnion => "icosa-union",
            Self::SnubCubeUnion => "snub-cube-union",
            Self::SnubDodecaUnion => "snub-dodeca-union",
            Self::FundamentalOrbit => "fundamental-orbit",
        }
    }

    /// Solids that come in a left and a right form.
    pub fn is_chiral_kind(self) -> bool {
        matches!(
            self,
            Self::SnubCube
                | Self::SnubDodecahedron
                | Self::PentagonalIcositetrahedron
                | Self::PentagonalHexacontahedron
        )
    }

    pub fn kind(self) -> SolidKind {
        match self {
            Self::Tetrahedron => SolidKind::Tetrahedron,
            Self::Icosahedron => SolidKind::Icosahedron,
            Self::Dodecahedron => SolidKind::Dodecahedron,
            Self::Pyritohedron => SolidKind::Pyritohedron,
            Self::SnubCube => SolidKind::SnubCube,
            Self::SnubDodecahedron => SolidKind::SnubDodecahedron,
            Self::PentagonalIcositetrahedron => SolidKind::PentagonalIcositetrahedron,
            Self::PentagonalHexacontahedron => SolidKind::PentagonalHexacontahedron,
            Self::IcosaUnion | Self::SnubCubeUnion | Self::SnubDodecaUnion => {
                SolidKind::QuasiregularUnion
            }
            Self::FundamentalOrbit => SolidKind::FundamentalOrbit,
        }
    }
}

impl fmt::Display for NamedSolid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedSolid {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace('_', "-");
        NamedSolid::NAMED
            .into_iter()
            .chain([NamedSolid::FundamentalOrbit])
            .find(|n| n.name() == key)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown solid '{s}'")))
    }
}

/// Optional construction arguments.
#[derive(Debug, Clone, Default)]
pub struct SolidOptions {
    pub handedness: Option<Handedness>,
    /// Pyritohedron family parameter `a`.
    pub param: Option<f64>,
    /// Diagram and weight index of a fundamental orbit.
    pub diagram: Option<DiagramId>,
    pub weight: Option<usize>,
}

impl SolidOptions {
    pub fn handed(handedness: Handedness) -> Self {
        Self {
            handedness: Some(handedness),
            ..Self::default()
        }
    }

    pub fn param(a: f64) -> Self {
        Self {
            param: Some(a),
            ..Self::default()
        }
    }

    /// Rejects arguments that do not apply to `solid`.
    pub fn check(&self, solid: NamedSolid) -> Result<()> {
        if self.handedness.is_some() && !solid.is_chiral_kind() {
            return Err(Error::InvalidArgument(format!(
                "--handedness applies only to snub solids and their duals, not {solid}"
            )));
        }
        if self.handedness == Some(Handedness::Achiral) {
            return Err(Error::InvalidArgument(
                "handedness must be left or right".into(),
            ));
        }
        if self.param.is_some() && solid != NamedSolid::Pyritohedron {
            return Err(Error::InvalidArgument(format!(
                "--param applies only to the pyritohedron, not {solid}"
            )));
        }
        let fundamental = solid == NamedSolid::FundamentalOrbit;
        if fundamental && (self.diagram.is_none() || self.weight.is_none()) {
            return Err(Error::InvalidArgument(
                "fundamental-orbit needs --diagram and --weight".into(),
            ));
        }
        if !fundamental && (self.diagram.is_some() || self.weight.is_some()) {
            return Err(Error::InvalidArgument(format!(
                "--diagram and --weight apply only to fundamental-orbit, not {solid}"
            )));
        }
        Ok(())
    }
}

/// A constructed solid with everything needed to export and analyse it.
#[derive(Debug, Clone)]
pub struct Solid {
    pub spec: SolidSpec,
    pub polyhedron: Polyhedron,
    /// Sizes of the group orbits the vertex set is made of.
    pub orbit_sizes: Vec<usize>,
    /// Group used for the transitivity flags.
    pub symmetry: &'static FiniteGroup,
    /// Proper rotations searched for a mirror-to-original map.
    pub search_group: &'static FiniteGroup,
    /// Improper element producing the mirror image.
    pub mirror: GroupElement<ExactScalar>,
}

impl Solid {
    pub fn vertices(&self) -> &[Point] {
        &self.polyhedron.vertices
    }

    pub fn analyze(&self) -> AnalysisReport {
        analyze(&self.polyhedron, self.symmetry)
    }

    pub fn chirality(&self) -> ChiralityReport {
        chirality_test(self.vertices(), self.search_group, &self.mirror)
    }
}

struct Parts {
    spec: SolidSpec,
    orbits: Vec<Orbit<f64>>,
    symmetry: &'static FiniteGroup,
    search: DiagramId,
    mirror: DiagramId,
}

fn exact(orbits: &[&Orbit<ExactScalar>]) -> Vec<Orbit<f64>> {
    orbits.iter().map(|o| o.to_f64()).collect()
}

fn build_parts(solid: NamedSolid, opts: &SolidOptions) -> Result<Parts> {
    use DiagramId::*;
    let hand = opts.handedness.unwrap_or(if solid.is_chiral_kind() {
        Handedness::Left
    } else {
        Handedness::Achiral
    });
    let spec = |kind: NamedSolid| SolidSpec::new(kind.kind(), kind.name(), hand);
    Ok(match solid {
        NamedSolid::Tetrahedron => {
            let (l, _) = solids::tetrahedron_pair();
            Parts {
                spec: spec(solid).with_constant("a", std::f64::consts::FRAC_1_SQRT_2),
                orbits: exact(&[&l]),
                symmetry: proper(A1A1A1),
                search: B3,
                mirror: A1A1A1,
            }
        }
        NamedSolid::Icosahedron => {
            let (l, _) = solids::icosahedron_pair();
            Parts {
                spec: spec(solid)
                    .with_constant("x", TAU)
                    .with_constant("a2", -SIGMA / 2.0),
                orbits: exact(&[&l]),
                symmetry: proper(H3),
                search: B3,
                mirror: A3,
            }
        }
        NamedSolid::Dodecahedron => {
            let d = solids::dodecahedron_from_dual();
            Parts {
                spec: spec(solid).with_constant("lambda", d.lambda.embed()),
                orbits: exact(&d.orbits.each_ref()),
                symmetry: proper(H3),
                search: H3,
                mirror: H3,
            }
        }
        NamedSolid::Pyritohedron => match opts.param {
            None => {
                let p = solids::pyritohedron_fixed();
                Parts {
                    spec: spec(solid).with_constant("rho", p.rho.embed()),
                    orbits: exact(&p.orbits.each_ref()),
                    symmetry: pyritohedral(),
                    search: B3,
                    mirror: B3,
                }
            }
            Some(a) => {
                let p = solids::pyritohedron_family(a)?;
                Parts {
                    spec: spec(solid).with_parameter("a", a).with_constant("b", p.b),
                    orbits: p.orbits.to_vec(),
                    symmetry: pyritohedral(),
                    search: B3,
                    mirror: B3,
                }
            }
        },
        NamedSolid::SnubCube | NamedSolid::SnubDodecahedron => {
            let (s, id) = if solid == NamedSolid::SnubCube {
                (solids::snub_cube_pair()?, B3)
            } else {
                (solids::snub_dodecahedron_pair()?, H3)
            };
            let orbit = match hand {
                Handedness::Right => s.right.clone(),
                _ => s.left.clone(),
            };
            Parts {
                spec: s.spec(hand),
                orbits: vec![orbit],
                symmetry: proper(id),
                search: id,
                mirror: id,
            }
        }
        NamedSolid::PentagonalIcositetrahedron | NamedSolid::PentagonalHexacontahedron => {
            let cube = solid == NamedSolid::PentagonalIcositetrahedron;
            let (s, id) = if cube {
                (solids::snub_cube_pair()?, B3)
            } else {
                (solids::snub_dodecahedron_pair()?, H3)
            };
            let dual = if cube {
                solids::snub_cube_dual(&s)
            } else {
                solids::snub_dodecahedron_dual(&s)
            };
            let mut orbits = dual.orbits.to_vec();
            if hand == Handedness::Right {
                let m = solids::mirror(id).to_f64();
                orbits = orbits.iter().map(|o| o.transformed(&m, o.group)).collect();
            }
            let [s1, _, s3] = dual.scales;
            let base = s
                .spec(hand)
                .with_constant("plane_constant", dual.plane_constant);
            let spec = if cube {
                base.with_constant("lambda", s1).with_constant("eta", s3)
            } else {
                base.with_constant("lambda", dual.scales[1])
                    .with_constant("rho", s3)
            };
            Parts {
                spec: SolidSpec {
                    kind: solid.kind(),
                    name: solid.name().into(),
                    ..spec
                },
                orbits,
                symmetry: proper(id),
                search: id,
                mirror: id,
            }
        }
        NamedSolid::IcosaUnion => Parts {
            spec: spec(solid).with_constant("x", TAU),
            orbits: vec![solids::quasiregular_union(UnionKind::Icosahedral)?],
            symmetry: full(A3),
            search: B3,
            mirror: A3,
        },
        NamedSolid::SnubCubeUnion | NamedSolid::SnubDodecaUnion => {
            let (kind, s, id) = if solid == NamedSolid::SnubCubeUnion {
                (UnionKind::SnubCube, solids::snub_cube_pair()?, B3)
            } else {
                (
                    UnionKind::SnubDodecahedron,
                    solids::snub_dodecahedron_pair()?,
                    H3,
                )
            };
            let mut spec = s.spec(hand);
            spec.kind = solid.kind();
            spec.name = solid.name().into();
            Parts {
                spec,
                orbits: vec![solids::quasiregular_union(kind)?],
                symmetry: full(id),
                search: id,
                mirror: id,
            }
        }
        NamedSolid::FundamentalOrbit => {
            let (Some(id), Some(w)) = (opts.diagram, opts.weight) else {
                return Err(Error::InvalidArgument(
                    "fundamental-orbit needs a diagram and a weight index".into(),
                ));
            };
            let o = solids::fundamental_orbit(id, w)?;
            Parts {
                spec: spec(solid)
                    .with_parameter("weight", w as f64)
                    .with_convention(&format!("orbit of weight {w} under W({id})")),
                orbits: exact(&[&o]),
                symmetry: full(id),
                search: id,
                mirror: id,
            }
        }
    })
}

/// Constructs `solid` and its mesh.
pub fn build(solid: NamedSolid, opts: &SolidOptions) -> Result<Solid> {
    opts.check(solid)?;
    let parts = build_parts(solid, opts)?;
    let orbit_sizes = parts.orbits.iter().map(Orbit::len).collect();
    let union = Orbit::union(
        &parts.orbits.iter().collect::<Vec<_>>(),
        GroupKind::Generated,
    );
    let polyhedron = build_faces(&union.vectors())?;
    Ok(Solid {
        spec: parts.spec,
        polyhedron,
        orbit_sizes,
        symmetry: parts.symmetry,
        search_group: proper(parts.search),
        mirror: solids::mirror(parts.mirror),
    })
}

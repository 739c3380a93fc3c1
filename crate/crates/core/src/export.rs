//! Deterministic OFF, OBJ and JSON output.
//!
//! Coordinates are rounded to an integer number of `10^-precision` units
//! before anything else, then vertices are sorted on the rounded values, so
//! the output does not depend on floating-point noise below the printed
//! precision.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::analysis::{AnalysisReport, ChiralityReport, EdgeClass};
use crate::catalog::Solid;
use crate::coxeter::{DiagramId, FiniteGroup, RelationReport};
use crate::error::{Error, Result};
use crate::field::ExactScalar;
use crate::hull::{canonical_faces, Point, Polyhedron};
use crate::quaternion::{GroupElement, Quaternion};

pub const DEFAULT_PRECISION: usize = 12;
pub const MAX_PRECISION: usize = 15;

pub fn check_precision(p: usize) -> Result<usize> {
    if (1..=MAX_PRECISION).contains(&p) {
        Ok(p)
    } else {
        Err(Error::InvalidArgument(format!(
            "precision {p} is outside 1..={MAX_PRECISION}"
        )))
    }
}

/// `v · 10^precision`, rounded half away from zero.
pub fn round_key(v: f64, precision: usize) -> i64 {
    (v * 10f64.powi(precision as i32)).round() as i64
}

/// Decimal text of a rounded key; never prints `-0`.
pub fn format_key(key: i64, precision: usize) -> String {
    let unit = 10u64.pow(precision as u32);
    let mag = key.unsigned_abs();
    let sign = if key < 0 { "-" } else { "" };
    format!(
        "{sign}{}.{:0width$}",
        mag / unit,
        mag % unit,
        width = precision
    )
}

pub fn format_number(v: f64, precision: usize) -> String {
    format_key(round_key(v, precision), precision)
}

/// A mesh with rounded, sorted vertices and canonically ordered faces.
#[derive(Debug, Clone, PartialEq)]
pub struct RoundedMesh {
    pub precision: usize,
    pub vertices: Vec<[i64; 3]>,
    pub faces: Vec<Vec<usize>>,
}

impl RoundedMesh {
    pub fn new(p: &Polyhedron, precision: usize) -> Self {
        let keys: Vec<[i64; 3]> = p
            .vertices
            .iter()
            .map(|v| v.map(|c| round_key(c, precision)))
            .collect();
        let mut order: Vec<usize> = (0..keys.len()).collect();
        order.sort_by_key(|&i| keys[i]);
        let mut rank = vec![0; keys.len()];
        for (new, &old) in order.iter().enumerate() {
            rank[old] = new;
        }
        let mut faces: Vec<Vec<usize>> = p
            .faces
            .iter()
            .map(|f| f.iter().map(|&i| rank[i]).collect())
            .collect();
        canonical_faces(&mut faces);
        Self {
            precision,
            vertices: order.iter().map(|&i| keys[i]).collect(),
            faces,
        }
    }

    pub fn edge_count(&self) -> usize {
        let total: usize = self.faces.iter().map(Vec::len).sum();
        total / 2
    }

    fn coords(&self, v: &[i64; 3]) -> [String; 3] {
        v.map(|k| format_key(k, self.precision))
    }

    pub fn to_off(&self) -> String {
        let mut out = String::from("OFF\n");
        let _ = writeln!(
            out,
            "{} {} {}",
            self.vertices.len(),
            self.faces.len(),
            self.edge_count()
        );
        for v in &self.vertices {
            let _ = writeln!(out, "{}", self.coords(v).join(" "));
        }
        for f in &self.faces {
            let idx: Vec<String> = f.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "{} {}", f.len(), idx.join(" "));
        }
        out
    }

    pub fn to_obj(&self, name: &str) -> String {
        let mut out = format!("o {name}\n");
        for v in &self.vertices {
            let _ = writeln!(out, "v {}", self.coords(v).join(" "));
        }
        for f in &self.faces {
            let idx: Vec<String> = f.iter().map(|i| (i + 1).to_string()).collect();
            let _ = writeln!(out, "f {}", idx.join(" "));
        }
        out
    }
}

/// Vertices and faces read back from OFF text.
#[derive(Debug, Clone, PartialEq)]
pub struct OffMesh {
    pub vertices: Vec<Point>,
    pub faces: Vec<Vec<usize>>,
}

pub fn parse_off(text: &str) -> Result<OffMesh> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());
    let bad = |m: &str| Error::Parse(m.to_string());
    if lines.next() != Some("OFF") {
        return Err(bad("missing OFF header"));
    }
    let counts: Vec<usize> = lines
        .next()
        .ok_or_else(|| bad("missing count line"))?
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| bad("bad count")))
        .collect::<Result<_>>()?;
    let [nv, nf, _] = counts[..] else {
        return Err(bad("count line needs three integers"));
    };
    let mut vertices = Vec::with_capacity(nv);
    for _ in 0..nv {
        let xs: Vec<f64> = lines
            .next()
            .ok_or_else(|| bad("truncated vertex list"))?
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| bad("bad coordinate")))
            .collect::<Result<_>>()?;
        let [x, y, z] = xs[..] else {
            return Err(bad("vertex needs three coordinates"));
        };
        vertices.push([x, y, z]);
    }
    let mut faces = Vec::with_capacity(nf);
    for _ in 0..nf {
        let ix: Vec<usize> = lines
            .next()
            .ok_or_else(|| bad("truncated face list"))?
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| bad("bad face index")))
            .collect::<Result<_>>()?;
        match ix.split_first() {
            Some((&n, rest)) if n == rest.len() && rest.iter().all(|&i| i < nv) => {
                faces.push(rest.to_vec())
            }
            _ => return Err(bad("malformed face")),
        }
    }
    Ok(OffMesh { vertices, faces })
}

#[derive(Serialize)]
struct EdgeClassJson {
    length: String,
    count: usize,
}

#[derive(Serialize)]
pub struct AnalysisJson {
    vertices: usize,
    edges: usize,
    faces: usize,
    euler_characteristic: i64,
    edge_lengths: Vec<EdgeClassJson>,
    face_inventory: BTreeMap<String, usize>,
    vertex_transitive: bool,
    face_transitive: bool,
    regular: bool,
    planarity_residual: String,
}

fn sci(v: f64) -> String {
    format!("{v:.3e}")
}

pub fn analysis_json(r: &AnalysisReport, precision: usize) -> AnalysisJson {
    AnalysisJson {
        vertices: r.vertices,
        edges: r.edges,
        faces: r.faces,
        euler_characteristic: r.euler_characteristic,
        edge_lengths: r
            .edge_lengths
            .iter()
            .map(|EdgeClass { length, count }| EdgeClassJson {
                length: format_number(*length, precision),
                count: *count,
            })
            .collect(),
        face_inventory: r
            .face_inventory
            .iter()
            .map(|(k, v)| (k.to_string(), *v))
            .collect(),
        vertex_transitive: r.vertex_transitive,
        face_transitive: r.face_transitive,
        regular: r.regular,
        planarity_residual: sci(r.planarity_residual),
    }
}

#[derive(Serialize)]
pub struct ElementJson {
    p: [String; 4],
    q: [String; 4],
    star: bool,
}

fn quaternion_strings(q: &Quaternion<ExactScalar>) -> [String; 4] {
    q.components().map(|c| c.to_string())
}

pub fn element_json(g: &GroupElement<ExactScalar>) -> ElementJson {
    ElementJson {
        p: quaternion_strings(g.p()),
        q: quaternion_strings(g.q()),
        star: g.is_star(),
    }
}

#[derive(Serialize)]
pub struct ChiralityJson {
    chiral: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<ElementJson>,
    group_searched: String,
    group_order: usize,
    max_match_residual: String,
}

pub fn chirality_json(c: &ChiralityReport) -> ChiralityJson {
    ChiralityJson {
        chiral: c.is_chiral,
        witness: c.witness.as_ref().map(element_json),
        group_searched: c.group_searched.clone(),
        group_order: c.group_order,
        max_match_residual: sci(c.max_match_residual),
    }
}

fn constants_json(solid: &Solid, precision: usize) -> BTreeMap<String, String> {
    solid
        .spec
        .constants
        .iter()
        .chain(&solid.spec.parameters)
        .map(|(k, v)| (k.clone(), format_number(*v, precision)))
        .collect()
}

#[derive(Serialize)]
struct GenerateJson {
    solid: String,
    handedness: String,
    constants: BTreeMap<String, String>,
    vertices: Vec<[String; 3]>,
    faces: Vec<Vec<usize>>,
    analysis: AnalysisJson,
}

fn to_pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report types serialize");
    s.push('\n');
    s
}

/// The `generate --format json` document.
pub fn solid_json(solid: &Solid, precision: usize) -> String {
    let mesh = RoundedMesh::new(&solid.polyhedron, precision);
    to_pretty(&GenerateJson {
        solid: solid.spec.name.clone(),
        handedness: solid.spec.handedness.to_string(),
        constants: constants_json(solid, precision),
        vertices: mesh.vertices.iter().map(|v| mesh.coords(v)).collect(),
        faces: mesh.faces.clone(),
        analysis: analysis_json(&solid.analyze(), precision),
    })
}

#[derive(Serialize)]
struct AnalyzeJson {
    solid: String,
    handedness: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    convention: Option<String>,
    constants: BTreeMap<String, String>,
    orbit_sizes: Vec<usize>,
    symmetry_group: String,
    analysis: AnalysisJson,
    chirality: ChiralityJson,
}

/// The `analyze` document.
pub fn analyze_json(solid: &Solid, precision: usize) -> String {
    to_pretty(&AnalyzeJson {
        solid: solid.spec.name.clone(),
        handedness: solid.spec.handedness.to_string(),
        convention: solid.spec.convention.clone(),
        constants: constants_json(solid, precision),
        orbit_sizes: solid.orbit_sizes.clone(),
        symmetry_group: format!(
            "{} (order {})",
            solid.symmetry.kind(),
            solid.symmetry.order()
        ),
        analysis: analysis_json(&solid.analyze(), precision),
        chirality: chirality_json(&solid.chirality()),
    })
}

#[derive(Serialize)]
struct RelationJson {
    relation: String,
    expected_order: usize,
    computed_order: Option<usize>,
    pass: bool,
}

#[derive(Serialize)]
struct GroupJson {
    diagram: String,
    order: usize,
    proper_order: usize,
    relations: Vec<RelationJson>,
    elements: Vec<ElementJson>,
}

/// The `group` document.
pub fn group_json(
    id: DiagramId,
    group: &FiniteGroup,
    proper: &FiniteGroup,
    relations: &RelationReport,
) -> String {
    to_pretty(&GroupJson {
        diagram: id.to_string(),
        order: group.order(),
        proper_order: proper.order(),
        relations: relations
            .checks
            .iter()
            .map(|c| RelationJson {
                relation: c.name.clone(),
                expected_order: c.expected,
                computed_order: c.computed,
                pass: c.passed(),
            })
            .collect(),
        elements: group.elements().iter().map(element_json).collect(),
    })
}

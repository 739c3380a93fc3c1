//! Combinatorial and metric reports on polyhedra, and the chirality test.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::coxeter::FiniteGroup;
use crate::field::ExactScalar;
use crate::hull::{distance, dot, norm, scale, Point, Polyhedron};
use crate::orbit::Orbit;
use crate::quaternion::{GroupElement, Quaternion};

/// Tolerance of the witness search in [`chirality_test`].
pub const MATCH_TOLERANCE: f64 = 1e-8;

/// Relative tolerance used to cluster lengths and norms.
pub const METRIC_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct EdgeClass {
    pub length: f64,
    pub count: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub euler_characteristic: i64,
    pub edge_lengths: Vec<EdgeClass>,
    /// Polygon size → number of faces.
    pub face_inventory: BTreeMap<usize, usize>,
    pub vertex_transitive: bool,
    pub face_transitive: bool,
    pub regular: bool,
    pub planarity_residual: f64,
}

fn to_quaternion(p: &Point) -> Quaternion<f64> {
    Quaternion::from_vector(*p)
}

fn all_close(values: &[f64], tol: f64) -> bool {
    let (lo, hi) = values
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
            (lo.min(v), hi.max(v))
        });
    values.is_empty() || hi - lo <= tol
}

/// Groups sorted values whose neighbours differ by at most `tol`.
pub fn cluster(mut values: Vec<f64>, tol: f64) -> Vec<EdgeClass> {
    values.sort_by(f64::total_cmp);
    let mut classes: Vec<(f64, f64, usize)> = Vec::new();
    for v in values {
        match classes.last_mut() {
            Some((_, last, count)) if v - *last <= tol => {
                *last = v;
                *count += 1;
            }
            _ => classes.push((v, v, 1)),
        }
    }
    classes
        .into_iter()
        .map(|(first, _, count)| EdgeClass {
            length: first,
            count,
        })
        .collect()
}

/// Whether `points` is a single orbit of `group`.
pub fn is_single_orbit(points: &[Point], group: &FiniteGroup) -> bool {
    let Some(first) = points.first() else {
        return true;
    };
    let orbit = Orbit::generate(group, &to_quaternion(first));
    let all: Vec<_> = points.iter().map(to_quaternion).collect();
    orbit.same_set(&all)
}

pub fn analyze(p: &Polyhedron, group: &FiniteGroup) -> AnalysisReport {
    let edges = p.edges();
    let radius = p.vertices.iter().map(norm).fold(0.0, f64::max).max(1.0);
    let tol = METRIC_TOLERANCE * radius;
    let lengths: Vec<f64> = edges
        .iter()
        .map(|&(a, b)| distance(&p.vertices[a], &p.vertices[b]))
        .collect();
    let edge_lengths = cluster(lengths, tol);
    let mut face_inventory = BTreeMap::new();
    for f in &p.faces {
        *face_inventory.entry(f.len()).or_insert(0) += 1;
    }
    let norms: Vec<f64> = p.vertices.iter().map(norm).collect();
    let equal_norms = all_close(&norms, tol);
    let vertex_transitive = equal_norms && is_single_orbit(&p.vertices, group);
    let normals: Vec<Point> = (0..p.faces.len()).map(|f| p.face_normal(f)).collect();
    let face_transitive = is_single_orbit(&normals, group);
    let mut degree = vec![0usize; p.vertices.len()];
    for &(a, b) in &edges {
        degree[a] += 1;
        degree[b] += 1;
    }
    let regular = edge_lengths.len() == 1
        && face_inventory.len() == 1
        && equal_norms
        && degree.iter().all(|&d| d == degree[0]);
    AnalysisReport {
        vertices: p.vertices.len(),
        edges: edges.len(),
        faces: p.faces.len(),
        euler_characteristic: p.euler_characteristic(),
        edge_lengths,
        face_inventory,
        vertex_transitive,
        face_transitive,
        regular,
        planarity_residual: p.planarity_residual(),
    }
}

/// Largest distance in a greedy nearest-neighbour matching of `a` onto `b`,
/// or `None` when the sizes differ.
pub fn match_residual(a: &[Point], b: &[Point]) -> Option<f64> {
    if a.len() != b.len() {
        return None;
    }
    let mut used = vec![false; b.len()];
    let mut worst: f64 = 0.0;
    for p in a {
        let (j, d) = b
            .iter()
            .enumerate()
            .filter(|(j, _)| !used[*j])
            .map(|(j, q)| (j, distance(p, q)))
            .min_by(|x, y| x.1.total_cmp(&y.1))?;
        used[j] = true;
        worst = worst.max(d);
    }
    Some(worst)
}

/// True when the two point sets match one-to-one within `tol`.
pub fn set_equal(a: &[Point], b: &[Point], tol: f64) -> bool {
    match_residual(a, b).is_some_and(|r| r <= tol)
}

pub fn apply_to_points(g: &GroupElement<ExactScalar>, points: &[Point]) -> Vec<Point> {
    let g = g.to_f64();
    points
        .iter()
        .map(|p| g.apply(&to_quaternion(p)).vector())
        .collect()
}

#[derive(Debug, Clone)]
pub struct ChiralityReport {
    pub is_chiral: bool,
    /// A proper rotation carrying the solid onto its mirror image.
    pub witness: Option<GroupElement<ExactScalar>>,
    pub group_searched: String,
    pub group_order: usize,
    /// Matching residual of the witness, or of the best candidate when
    /// the solid is chiral.
    pub max_match_residual: f64,
}

/// Searches `group` for a rotation `g` with `g(left) = mirror(left)`.
pub fn chirality_test(
    left: &[Point],
    group: &FiniteGroup,
    mirror: &GroupElement<ExactScalar>,
) -> ChiralityReport {
    let right = apply_to_points(mirror, left);
    let mut best = f64::INFINITY;
    let mut witness = None;
    for (g, gf) in group.elements().iter().zip(group.numeric()) {
        let image: Vec<Point> = left
            .iter()
            .map(|p| gf.apply(&to_quaternion(p)).vector())
            .collect();
        let r = match_residual(&image, &right).unwrap_or(f64::INFINITY);
        if r <= MATCH_TOLERANCE {
            witness = Some(g.clone());
            best = r;
            break;
        }
        best = best.min(r);
    }
    ChiralityReport {
        is_chiral: witness.is_none(),
        witness,
        group_searched: group.kind().to_string(),
        group_order: group.order(),
        max_match_residual: best,
    }
}

/// For each normal, the indices of the points farthest along it.
pub fn faces_by_normals(points: &[Point], normals: &[Point], tol: f64) -> Vec<Vec<usize>> {
    normals
        .iter()
        .map(|n| {
            let u = scale(n, 1.0 / norm(n));
            let heights: Vec<f64> = points.iter().map(|p| dot(&u, p)).collect();
            let top = heights.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            (0..points.len())
                .filter(|&i| top - heights[i] <= tol)
                .collect()
        })
        .collect()
}

/// Spread of the heights of `points` along `normal`.
pub fn coplanarity_residual(points: &[Point], normal: &Point) -> f64 {
    let u = scale(normal, 1.0 / norm(normal));
    let h: Vec<f64> = points.iter().map(|p| dot(&u, p)).collect();
    let lo = h.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = h.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    hi - lo
}

//! Convex hulls of small point sets as polygonal meshes.

use std::collections::HashMap;

use crate::error::{Error, Result};

pub type Point = [f64; 3];

/// Relative tolerance for plane membership and convexity.
pub const HULL_TOLERANCE: f64 = 1e-9;

pub fn sub(a: &Point, b: &Point) -> Point {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

pub fn dot(a: &Point, b: &Point) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn cross(a: &Point, b: &Point) -> Point {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

pub fn norm(a: &Point) -> f64 {
    dot(a, a).sqrt()
}

pub fn scale(a: &Point, k: f64) -> Point {
    [a[0] * k, a[1] * k, a[2] * k]
}

pub fn distance(a: &Point, b: &Point) -> f64 {
    norm(&sub(a, b))
}

pub fn centroid(points: &[Point]) -> Point {
    let n = points.len() as f64;
    let s = points.iter().fold([0.0; 3], |acc, p| {
        [acc[0] + p[0], acc[1] + p[1], acc[2] + p[2]]
    });
    scale(&s, 1.0 / n)
}

/// A convex polyhedron: vertices and counter-clockwise (seen from outside)
/// faces.
#[derive(Debug, Clone, PartialEq)]
pub struct Polyhedron {
    pub vertices: Vec<Point>,
    pub faces: Vec<Vec<usize>>,
}

impl Polyhedron {
    /// Undirected edges `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges: Vec<_> = self
            .faces
            .iter()
            .flat_map(|f| {
                (0..f.len()).map(move |k| {
                    let (a, b) = (f[k], f[(k + 1) % f.len()]);
                    (a.min(b), a.max(b))
                })
            })
            .collect();
        edges.sort_unstable();
        edges.dedup();
        edges
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges().len() as i64 + self.faces.len() as i64
    }

    pub fn face_points(&self, face: usize) -> Vec<Point> {
        self.faces[face].iter().map(|&i| self.vertices[i]).collect()
    }

    /// Unit outward normal by Newell's method.
    pub fn face_normal(&self, face: usize) -> Point {
        let pts = self.face_points(face);
        let mut n = [0.0; 3];
        for k in 0..pts.len() {
            let (a, b) = (&pts[k], &pts[(k + 1) % pts.len()]);
            n[0] += (a[1] - b[1]) * (a[2] + b[2]);
            n[1] += (a[2] - b[2]) * (a[0] + b[0]);
            n[2] += (a[0] - b[0]) * (a[1] + b[1]);
        }
        scale(&n, 1.0 / norm(&n))
    }

    /// Largest distance of a face vertex from its face plane.
    pub fn planarity_residual(&self) -> f64 {
        (0..self.faces.len())
            .map(|f| {
                let pts = self.face_points(f);
                let n = self.face_normal(f);
                let c = centroid(&pts);
                pts.iter()
                    .map(|p| dot(&n, &sub(p, &c)).abs())
                    .fold(0.0, f64::max)
            })
            .fold(0.0, f64::max)
    }

    fn length_scale(&self) -> f64 {
        let c = centroid(&self.vertices);
        self.vertices
            .iter()
            .map(|p| distance(p, &c))
            .fold(0.0, f64::max)
            .max(f64::MIN_POSITIVE)
    }

    /// Checks planar, strictly convex, outward faces, a closed 2-manifold
    /// edge structure and Euler characteristic 2.
    pub fn validate(&self) -> Result<()> {
        let s = self.length_scale();
        let tol = HULL_TOLERANCE * s;
        let center = centroid(&self.vertices);
        let mut directed: HashMap<(usize, usize), usize> = HashMap::new();
        for (f, face) in self.faces.iter().enumerate() {
            if face.len() < 3 {
                return Err(Error::DegenerateHull(format!(
                    "face {f} has {} vertices",
                    face.len()
                )));
            }
            let n = self.face_normal(f);
            let pts = self.face_points(f);
            let c = centroid(&pts);
            if dot(&n, &sub(&c, &center)) <= 0.0 {
                return Err(Error::DegenerateHull(format!("face {f} is not outward")));
            }
            for k in 0..pts.len() {
                if dot(&n, &sub(&pts[k], &c)).abs() > tol {
                    return Err(Error::DegenerateHull(format!("face {f} is not planar")));
                }
                let (a, b, d) = (
                    &pts[k],
                    &pts[(k + 1) % pts.len()],
                    &pts[(k + 2) % pts.len()],
                );
                if dot(&cross(&sub(b, a), &sub(d, b)), &n) <= tol * s {
                    return Err(Error::DegenerateHull(format!(
                        "face {f} is not strictly convex"
                    )));
                }
                *directed
                    .entry((face[k], face[(k + 1) % face.len()]))
                    .or_default() += 1;
            }
        }
        for (&(a, b), &count) in &directed {
            if count != 1 || directed.get(&(b, a)) != Some(&1) {
                return Err(Error::DegenerateHull(format!(
                    "edge ({a}, {b}) is not shared by exactly two faces"
                )));
            }
        }
        let used: std::collections::HashSet<usize> = self.faces.iter().flatten().copied().collect();
        if used.len() != self.vertices.len() {
            return Err(Error::DegenerateHull(format!(
                "{} of {} points are not hull vertices",
                self.vertices.len() - used.len(),
                self.vertices.len()
            )));
        }
        let chi = self.euler_characteristic();
        if chi != 2 {
            return Err(Error::DegenerateHull(format!("Euler characteristic {chi}")));
        }
        Ok(())
    }
}

/// Orders the members of a face counter-clockwise about `normal`.
fn order_face(points: &[Point], members: &mut [usize], normal: &Point) {
    let pts: Vec<Point> = members.iter().map(|&i| points[i]).collect();
    let c = centroid(&pts);
    let u0 = sub(&pts[0], &c);
    let u = scale(&u0, 1.0 / norm(&u0));
    let w = cross(normal, &u);
    let angle = |i: usize| {
        let d = sub(&points[i], &c);
        dot(&d, &w).atan2(dot(&d, &u))
    };
    members.sort_by(|&a, &b| angle(a).total_cmp(&angle(b)));
}

/// Rotates each face to start at its smallest index and sorts the faces.
pub fn canonical_faces(faces: &mut [Vec<usize>]) {
    for f in faces.iter_mut() {
        if let Some(k) = f.iter().enumerate().min_by_key(|(_, &v)| v).map(|(k, _)| k) {
            f.rotate_left(k);
        }
    }
    faces.sort();
}

/// Convex hull of points in convex position, with coplanar facets merged
/// into polygons.
///
/// Every supporting plane through three input points becomes one face,
/// holding all points within tolerance of the plane. `O(n⁴)` in the worst
/// case, which is fine for the 4–120 point sets built here.
pub fn build_faces(vertices: &[Point]) -> Result<Polyhedron> {
    let n = vertices.len();
    if n < 4 {
        return Err(Error::DegenerateHull(format!(
            "{n} points cannot bound a solid"
        )));
    }
    let c = centroid(vertices);
    let s = vertices.iter().map(|p| distance(p, &c)).fold(0.0, f64::max);
    if s == 0.0 || !s.is_finite() {
        return Err(Error::DegenerateHull("points coincide".into()));
    }
    let tol = HULL_TOLERANCE * s;
    let idx = |i: usize, j: usize, k: usize| (i * n + j) * n + k;
    let mut covered = vec![false; n * n * n];
    let mut faces = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                if covered[idx(i, j, k)] {
                    continue;
                }
                let raw = cross(
                    &sub(&vertices[j], &vertices[i]),
                    &sub(&vertices[k], &vertices[i]),
                );
                let len = norm(&raw);
                if len <= tol * s {
                    continue;
                }
                let mut normal = scale(&raw, 1.0 / len);
                let offset = dot(&normal, &vertices[i]);
                let (mut above, mut below) = (false, false);
                for p in vertices {
                    let d = dot(&normal, p) - offset;
                    above |= d > tol;
                    below |= d < -tol;
                    if above && below {
                        break;
                    }
                }
                if above && below {
                    continue;
                }
                if above {
                    normal = scale(&normal, -1.0);
                }
                let mut members: Vec<usize> = (0..n)
                    .filter(|&m| {
                        (dot(&normal, &vertices[m]) - dot(&normal, &vertices[i])).abs() <= tol
                    })
                    .collect();
                for (x, &a) in members.iter().enumerate() {
                    for (y, &b) in members.iter().enumerate().skip(x + 1) {
                        for &d in &members[y + 1..] {
                            covered[idx(a, b, d)] = true;
                        }
                    }
                }
                order_face(vertices, &mut members, &normal);
                faces.push(members);
            }
        }
    }
    if faces.len() < 4 {
        return Err(Error::DegenerateHull(format!(
            "point set is flat ({} supporting planes)",
            faces.len()
        )));
    }
    canonical_faces(&mut faces);
    let poly = Polyhedron {
        vertices: vertices.to_vec(),
        faces,
    };
    poly.validate()?;
    Ok(poly)
}

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;

use chiral_core::analysis::{
    apply_to_points, chirality_test, coplanarity_residual, faces_by_normals, match_residual,
    set_equal,
};
use chiral_core::catalog::{build, NamedSolid, Solid, SolidOptions};
use chiral_core::coxeter::{
    full, identity3, mat_mul, pyritohedral, simple_roots, system, DiagramId, Matrix3,
};
use chiral_core::export::{RoundedMesh, DEFAULT_PRECISION};
use chiral_core::field::{ExactScalar as E, SIGMA, TAU};
use chiral_core::hull::{build_faces, cross, distance, dot, norm, scale, Point, Polyhedron};
use chiral_core::quaternion::{GroupElement, Quaternion};
use chiral_core::{coxeter, solids, Orbit};

type Q = Quaternion<E>;

#[derive(Default)]
struct Report {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Report {
    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn note(&mut self, what: impl Into<String>) {
        self.notes.push(what.into());
    }
}

type Criterion = (&'static str, fn(&mut Report));

fn main() {
    let criteria: [Criterion; 11] = [
        ("group orders", group_orders),
        ("generator relations", generator_relations),
        ("Cartan dualities", cartan_dualities),
        ("printed coordinate sets", printed_sets),
        ("snub cube", snub_cube),
        ("snub dodecahedron", snub_dodecahedron),
        ("achirality witnesses", achirality_witnesses),
        ("dual counts", dual_counts),
        ("dual coplanarity", dual_coplanarity),
        ("pyritohedron family", pyritohedron_family),
        ("determinism and golden meshes", determinism),
    ];
    let mut failed = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let mut report = Report::default();
        if let Err(e) = catch_unwind(AssertUnwindSafe(|| run(&mut report))) {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            report.failures.push(format!("panicked: {msg}"));
        }
        let status = if report.failures.is_empty() {
            "PASS"
        } else {
            failed += 1;
            "FAIL"
        };
        println!("{status} {:>2}  {title}", i + 1);
        for f in &report.failures {
            println!("         fail: {f}");
        }
        for n in &report.notes {
            println!("         note: {n}");
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}

// Exact helpers

fn int(n: i64) -> E {
    E::integer(n)
}

fn pure(t: [E; 3]) -> Q {
    let [x, y, z] = t;
    Quaternion::pure(x, y, z)
}

fn cyclic<T: Clone>(t: [T; 3]) -> [[T; 3]; 3] {
    let [a, b, c] = t;
    [
        [a.clone(), b.clone(), c.clone()],
        [c.clone(), a.clone(), b.clone()],
        [b, c, a],
    ]
}

/// Every sign choice on the nonzero entries.
fn all_signs(t: &[E; 3]) -> Vec<[E; 3]> {
    let mut out = Vec::new();
    for mask in 0..8u32 {
        if (0..3).any(|i| mask >> i & 1 == 1 && t[i].is_zero()) {
            continue;
        }
        out.push(std::array::from_fn(|i| {
            if mask >> i & 1 == 1 {
                -&t[i]
            } else {
                t[i].clone()
            }
        }));
    }
    out
}

/// `k{±t1 e1 ± t2 e2 ± t3 e3}` over the cyclic permutations of `t`.
fn printed(t: [E; 3], k: &E) -> Vec<Q> {
    cyclic(t)
        .iter()
        .flat_map(all_signs)
        .map(|v| pure(v).scaled(k))
        .collect()
}

fn sorted(mut v: Vec<Q>) -> Vec<Q> {
    v.sort_by(Quaternion::total_cmp);
    v
}

fn same_exact(orbit: &Orbit<E>, expected: Vec<Q>) -> bool {
    let mut expected = sorted(expected);
    expected.dedup();
    sorted(orbit.points.clone()) == expected
}

fn vectors<S: chiral_core::Scalar>(o: &Orbit<S>) -> Vec<Point> {
    o.points.iter().map(|p| p.to_f64().vector()).collect()
}

fn normalized(points: &[Point]) -> Vec<Point> {
    let r = points.iter().map(norm).fold(0.0, f64::max);
    points.iter().map(|p| scale(p, 1.0 / r)).collect()
}

// Float reflection-matrix oracle

type M = [[f64; 3]; 3];

const SQRT2: f64 = std::f64::consts::SQRT_2;

fn oracle_roots(id: DiagramId) -> [Point; 3] {
    match id {
        DiagramId::A1A1A1 => [[SQRT2, 0.0, 0.0], [0.0, SQRT2, 0.0], [0.0, 0.0, SQRT2]],
        DiagramId::A3 => [[1.0, 1.0, 0.0], [0.0, -1.0, 1.0], [-1.0, 1.0, 0.0]],
        DiagramId::B3 => [[1.0, -1.0, 0.0], [0.0, 1.0, -1.0], [0.0, 0.0, SQRT2]],
        DiagramId::H3 => [
            [-SQRT2, 0.0, 0.0],
            [TAU / SQRT2, 1.0 / SQRT2, SIGMA / SQRT2],
            [0.0, -SQRT2, 0.0],
        ],
    }
}

fn reflection(a: &Point) -> M {
    let n = dot(a, a);
    std::array::from_fn(|i| {
        std::array::from_fn(|j| f64::from(u8::from(i == j)) - 2.0 * a[i] * a[j] / n)
    })
}

fn mul(a: &M, b: &M) -> M {
    std::array::from_fn(|i| std::array::from_fn(|j| (0..3).map(|k| a[i][k] * b[k][j]).sum()))
}

fn det(m: &M) -> f64 {
    dot(&m[0], &cross(&m[1], &m[2]))
}

fn key(m: &M) -> [i64; 9] {
    std::array::from_fn(|i| (m[i / 3][i % 3] * 1e8).round() as i64)
}

const I3: M = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];

fn matrix_group(gens: &[M]) -> Vec<M> {
    let mut seen = std::collections::BTreeSet::from([key(&I3)]);
    let mut all = vec![I3];
    let mut i = 0;
    while i < all.len() && all.len() <= 1000 {
        for g in gens {
            let m = mul(&all[i], g);
            if seen.insert(key(&m)) {
                all.push(m);
            }
        }
        i += 1;
    }
    all
}

fn matrix_order(m: &M) -> usize {
    let mut p = *m;
    for n in 1..=20 {
        if key(&p) == key(&I3) {
            return n;
        }
        p = mul(&p, m);
    }
    0
}

// Cubic oracle

/// Real root of `x³ + bx² + cx + d` with positive discriminant, by Cardano.
fn cardano(b: f64, c: f64, d: f64) -> f64 {
    let p = c - b * b / 3.0;
    let q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
    let disc = q * q / 4.0 + p * p * p / 27.0;
    assert!(disc > 0.0);
    let s = disc.sqrt();
    (-q / 2.0 + s).cbrt() + (-q / 2.0 - s).cbrt() - b / 3.0
}

fn default_solid(s: NamedSolid) -> Solid {
    build(s, &SolidOptions::default()).expect("solid builds")
}

/// Edges counted as pairs of vertices at the shortest distance.
fn shortest_pairs(points: &[Point], tol: f64) -> (usize, f64, f64) {
    let mut d = Vec::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            d.push(distance(&points[i], &points[j]));
        }
    }
    let min = d.iter().copied().fold(f64::INFINITY, f64::min);
    let edges: Vec<f64> = d.into_iter().filter(|&x| x - min <= tol).collect();
    let max = edges.iter().copied().fold(0.0, f64::max);
    (edges.len(), min, max)
}

fn parallel(a: &Point, b: &Point) -> bool {
    norm(&cross(a, b)) <= 1e-9 * norm(a) * norm(b) && dot(a, b) > 0.0
}

/// Every hull face normal is parallel to exactly one of `normals`, and
/// each of `normals` is used once.
fn normals_match(p: &Polyhedron, normals: &[Point]) -> bool {
    let mut used = vec![false; normals.len()];
    for f in 0..p.faces.len() {
        let n = p.face_normal(f);
        match normals.iter().position(|m| parallel(&n, m)) {
            Some(i) if !used[i] => used[i] = true,
            _ => return false,
        }
    }
    used.iter().all(|&u| u)
}

fn max_plane_residual(p: &Polyhedron) -> f64 {
    (0..p.faces.len())
        .map(|f| {
            let pts = p.face_points(f);
            let n = cross(
                &chiral_core::hull::sub(&pts[1], &pts[0]),
                &chiral_core::hull::sub(&pts[2], &pts[0]),
            );
            coplanarity_residual(&pts, &n)
        })
        .fold(0.0, f64::max)
}

// 1

fn group_orders(r: &mut Report) {
    let expected = [
        (DiagramId::A1A1A1, 8, 4),
        (DiagramId::A3, 24, 12),
        (DiagramId::B3, 48, 24),
        (DiagramId::H3, 120, 60),
    ];
    for (id, order, proper_order) in expected {
        let g = full(id);
        let p = coxeter::proper(id);
        r.check(
            g.order() == order,
            format!("|W({id})| = {}, want {order}", g.order()),
        );
        r.check(
            p.order() == proper_order,
            format!("|W({id})/C2| = {}, want {proper_order}", p.order()),
        );
        r.check(
            g.is_group() && p.is_group(),
            format!("W({id}) is not closed"),
        );
        r.check(p.is_subset_of(g), format!("W({id})/C2 ⊄ W({id})"));

        let roots = oracle_roots(id);
        let lib: Vec<Point> = simple_roots(id)
            .iter()
            .map(|a| a.to_f64().vector())
            .collect();
        r.check(
            roots.iter().zip(&lib).all(|(a, b)| distance(a, b) < 1e-12),
            format!("{id} simple roots differ from the oracle"),
        );
        let mats = matrix_group(&roots.map(|a| reflection(&a)));
        let rotations = mats.iter().filter(|m| det(m) > 0.0).count();
        r.check(
            mats.len() == order && rotations == proper_order,
            format!("matrix oracle gives {} / {rotations} for {id}", mats.len()),
        );
    }
}

// 2

fn generator_relations(r: &mut Report) {
    for (id, want) in [
        (DiagramId::A3, [3, 3, 2]),
        (DiagramId::B3, [3, 4, 2]),
        (DiagramId::H3, [5, 3, 2]),
    ] {
        let report = system(id).verify_relations();
        r.check(
            report.passed(),
            format!("{id}: exact relations fail: {report:?}"),
        );
        r.check(
            id.relation_orders() == want,
            format!("{id}: relation orders {:?}", id.relation_orders()),
        );
        let [r1, r2, r3] = oracle_roots(id).map(|a| reflection(&a));
        let a = mul(&r1, &r2);
        let b = mul(&r2, &r3);
        let got = [
            matrix_order(&a),
            matrix_order(&b),
            matrix_order(&mul(&a, &b)),
        ];
        r.check(got == want, format!("{id}: matrix oracle orders {got:?}"));

        let [g1, g2, g3] = system(id).generators();
        let a = g1.compose(&g2);
        let b = g2.compose(&g3);
        let ab = a.compose(&b);
        let exact = [a.order(20), b.order(20), ab.order(20)];
        r.check(
            exact == want.map(Some),
            format!("{id}: exact element orders {exact:?}"),
        );
    }
}

// 3

fn matrix(rows: [[E; 3]; 3], k: &E) -> Matrix3 {
    rows.map(|row| row.map(|x| &x * k))
}

fn printed_inverse(id: DiagramId) -> Matrix3 {
    let t = E::tau();
    let t2 = &t * &t;
    let t3 = &t2 * &t;
    match id {
        DiagramId::A1A1A1 => matrix(
            [
                [int(1), int(0), int(0)],
                [int(0), int(1), int(0)],
                [int(0), int(0), int(1)],
            ],
            &E::rational(1, 2),
        ),
        DiagramId::A3 => matrix(
            [
                [int(3), int(2), int(1)],
                [int(2), int(4), int(2)],
                [int(1), int(2), int(3)],
            ],
            &E::rational(1, 4),
        ),
        DiagramId::B3 => matrix(
            [
                [int(1), int(1), E::inv_sqrt2()],
                [int(1), int(2), E::sqrt2()],
                [E::inv_sqrt2(), E::sqrt2(), E::rational(3, 2)],
            ],
            &int(1),
        ),
        DiagramId::H3 => matrix(
            [
                [t2.scale(3, 1), t3.scale(2, 1), t3.clone()],
                [t3.scale(2, 1), t2.scale(4, 1), t2.scale(2, 1)],
                [t3, t2.scale(2, 1), &t + &int(2)],
            ],
            &E::rational(1, 2),
        ),
    }
}

fn show(m: &Matrix3) -> String {
    let rows: Vec<String> = m
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        })
        .collect();
    format!("[{}]", rows.join("; "))
}

fn cartan_dualities(r: &mut Report) {
    for id in DiagramId::ALL {
        let sys = system(id);
        let delta = |i: usize, j: usize| int(i64::from(i == j));
        for i in 0..3 {
            for j in 0..3 {
                let aw = sys.roots[i].scalar_product(&sys.weights[j]);
                r.check(
                    aw == delta(i, j),
                    format!("{id}: (α{}, ω{}) = {aw}", i + 1, j + 1),
                );
                let aa = sys.roots[i].scalar_product(&sys.roots[j]);
                r.check(
                    aa == sys.cartan[i][j],
                    format!("{id}: C[{i}][{j}] is not (αi, αj)"),
                );
                let ww = sys.weights[i].scalar_product(&sys.weights[j]);
                r.check(
                    ww == sys.cartan_inv[i][j],
                    format!("{id}: (ωi, ωj) ≠ C⁻¹[{i}][{j}]"),
                );
            }
        }
        r.check(
            mat_mul(&sys.cartan, &sys.cartan_inv) == identity3(),
            format!("{id}: C·C⁻¹ ≠ I"),
        );
        let want = printed_inverse(id);
        r.check(
            sys.cartan_inv == want,
            format!(
                "{id}: printed C⁻¹ {} differs from the exact inverse {}",
                show(&want),
                show(&sys.cartan_inv)
            ),
        );
    }
}

// 4

fn printed_sets(r: &mut Report) {
    let h = E::rational(1, 2);
    let (one, zero) = (int(1), int(0));
    let (t, s) = (E::tau(), E::sigma());

    let (tl, tr) = solids::tetrahedron_pair();
    let tet =
        |v: [[i64; 3]; 4]| -> Vec<Q> { v.iter().map(|p| pure(p.map(int)).scaled(&h)).collect() };
    let eq20 = tet([[1, 1, 1], [1, -1, -1], [-1, -1, 1], [-1, 1, -1]]);
    let eq21 = tet([[-1, -1, -1], [-1, 1, 1], [1, -1, 1], [1, 1, -1]]);
    r.check(same_exact(&tl, eq20.clone()), "tetrahedron O(Λ_I)");
    r.check(same_exact(&tr, eq21.clone()), "tetrahedron O(Λ_II)");

    let (il, ir) = solids::icosahedron_pair();
    let eq28 = printed([one.clone(), t.clone(), zero.clone()], &h);
    let eq29 = printed([t.clone(), one.clone(), zero.clone()], &h);
    r.check(
        eq28.len() == 12 && same_exact(&il, eq28),
        "icosahedron O(Λ_I)",
    );
    r.check(
        eq29.len() == 12 && same_exact(&ir, eq29),
        "icosahedron O(Λ_II)",
    );

    let d = solids::dodecahedron_from_dual();
    let eq31 = printed([t.clone(), s.clone(), zero.clone()], &h);
    r.check(same_exact(&d.orbits[0], eq31), "dodecahedron A4(λb2)");
    r.check(same_exact(&d.orbits[1], eq20), "dodecahedron A4(ω1)");
    r.check(same_exact(&d.orbits[2], eq21), "dodecahedron A4(ω3)");

    let p = solids::pyritohedron_fixed();
    let rho = &(&int(205) - &s.scale(280, 1)) / &int(1210);
    r.check(
        p.rho == rho,
        format!("ρ = {}, printed (205 − 280σ)/1210", p.rho),
    );
    let long = &t - &s.scale(2, 1);
    let twelve = printed([long, s.clone(), zero], &rho);
    r.check(
        twelve.len() == 12 && same_exact(&p.orbits[0], twelve),
        "pyritohedron ρ-orbit",
    );
    let cube = printed([one.clone(), one.clone(), one], &h);
    let both = Orbit::union(&[&p.orbits[1], &p.orbits[2]], coxeter::GroupKind::Generated);
    r.check(
        both.len() == 8 && same_exact(&both, cube),
        "pyritohedron O(ω1) ⊕ O(ω3)",
    );
    r.check(p.points().len() == 20, "pyritohedron has 20 points");
}

// 5

fn snub_cube(r: &mut Report) {
    let s = solids::snub_cube_pair().expect("snub cube root");
    let x = s.x;
    r.check((x - 1.8393).abs() <= 5e-4, format!("x = {x}, paper 1.8393"));
    let oracle = cardano(-1.0, -1.0, -1.0);
    r.check(
        (x - oracle).abs() <= 1e-12,
        format!("x = {x}, Cardano {oracle}"),
    );

    let with_parity = |t: [f64; 3], parity: u32| -> Vec<Point> {
        cyclic(t)
            .into_iter()
            .flat_map(|c| {
                (0..8u32)
                    .filter(move |m| m.count_ones() % 2 == parity)
                    .map(move |m| {
                        std::array::from_fn(|i| if m >> i & 1 == 1 { -c[i] } else { c[i] })
                    })
            })
            .collect()
    };
    let t1 = [x, 1.0, 1.0 / x];
    let t2 = [1.0, x, 1.0 / x];
    let left: Vec<Point> = with_parity(t1, 0)
        .into_iter()
        .chain(with_parity(t2, 1))
        .collect();
    let orbit = vectors(&s.left);
    r.check(
        orbit.len() == 24,
        format!("orbit has {} points", orbit.len()),
    );
    let res = match_residual(&normalized(&orbit), &normalized(&left)).unwrap_or(f64::INFINITY);
    r.check(
        res <= 1e-9,
        format!("orbit vs printed set residual {res:e}"),
    );
    let literal: Vec<Point> = [0, 1]
        .into_iter()
        .flat_map(|p| with_parity(t1, p))
        .collect();
    let shared = literal
        .iter()
        .filter(|p| orbit.iter().any(|q| distance(p, q) < 1e-9))
        .count();
    r.note(format!(
        "printed ± signs read with even parity on (x, 1, x⁻¹) and odd on (1, x, x⁻¹); \
         independent signs would share {shared} of 24 points"
    ));

    let proper = coxeter::proper(DiagramId::B3);
    let c = chirality_test(&orbit, proper, &solids::mirror(DiagramId::B3));
    r.check(
        c.is_chiral && c.group_order == 24,
        format!("chiral = {}, searched {}", c.is_chiral, c.group_order),
    );
    let every_mirror = full(DiagramId::B3)
        .improper_elements()
        .all(|m| chirality_test(&orbit, proper, m).is_chiral);
    r.check(every_mirror, "verdict depends on the mirror");
    r.note(format!(
        "closest rotation misses by {:.3}",
        c.max_match_residual
    ));
}

// 6

fn snub_dodecahedron(r: &mut Report) {
    let s = solids::snub_dodecahedron_pair().expect("snub dodecahedron root");
    let x = s.x;
    r.check(
        (x - 1.94315).abs() <= 5e-5,
        format!("x = {x}, paper 1.94315"),
    );
    let oracle = cardano(-1.0, -1.0, -TAU);
    r.check(
        (x - oracle).abs() <= 1e-12,
        format!("x = {x}, Cardano {oracle}"),
    );
    let orbit = vectors(&s.left);
    r.check(
        orbit.len() == 60,
        format!("orbit has {} points", orbit.len()),
    );

    let (pairs, min, max) = shortest_pairs(&orbit, 1e-9);
    r.check(pairs == 150, format!("{pairs} shortest vertex pairs"));
    let solid = default_solid(NamedSolid::SnubDodecahedron);
    let p = &solid.polyhedron;
    let lengths: Vec<f64> = p
        .edges()
        .iter()
        .map(|&(a, b)| distance(&p.vertices[a], &p.vertices[b]))
        .collect();
    let spread = lengths.iter().copied().fold(0.0, f64::max)
        - lengths.iter().copied().fold(f64::INFINITY, f64::min);
    r.check(
        spread <= 1e-9,
        format!("hull edge lengths spread {spread:e}"),
    );
    r.check((max - min) <= 1e-9, "shortest pairs differ in length");

    let proper = coxeter::proper(DiagramId::H3);
    let c = chirality_test(&orbit, proper, &solids::mirror(DiagramId::H3));
    r.check(
        c.is_chiral && c.group_order == 60,
        format!("chiral = {}, searched {}", c.is_chiral, c.group_order),
    );
    let every_mirror = full(DiagramId::H3)
        .improper_elements()
        .all(|m| chirality_test(&orbit, proper, m).is_chiral);
    r.check(every_mirror, "verdict depends on the mirror");
}

// 7

fn witness_loop(r: &mut Report, name: &str, left: &[Point], mirror: &GroupElement<E>) {
    let proper = coxeter::proper(DiagramId::B3);
    let c = chirality_test(left, proper, mirror);
    match &c.witness {
        Some(g) => {
            r.check(
                proper.contains(g),
                format!("{name}: witness not in W(B3)/C2"),
            );
            let image = apply_to_points(g, left);
            let target = apply_to_points(mirror, left);
            r.check(
                set_equal(&image, &target, 1e-8),
                format!("{name}: witness fails recheck"),
            );
            r.note(format!("{name}: search found {g:?}"));
        }
        None => r.failures.push(format!("{name}: no witness in W(B3)/C2")),
    }
}

fn achirality_witnesses(r: &mut Report) {
    let h = E::inv_sqrt2();
    let zero = int(0);

    let (tl, tr) = solids::tetrahedron_pair();
    let d = GroupElement::new(
        pure([zero.clone(), h.clone(), h.clone()]),
        pure([zero.clone(), -&h, -&h]),
        false,
    );
    r.check(
        coxeter::proper(DiagramId::B3).contains(&d),
        "tetrahedron d ∉ W(B3)/C2",
    );
    let image: Vec<Q> = tl.points.iter().map(|p| d.apply(p)).collect();
    r.check(
        sorted(image) == tr.points,
        "d O(Λ_I) ≠ O(Λ_II) for the tetrahedron",
    );
    witness_loop(
        r,
        "tetrahedron",
        &vectors(&tl),
        &solids::mirror(DiagramId::A1A1A1),
    );

    let (il, ir) = solids::icosahedron_pair();
    let d = GroupElement::new(
        Quaternion::new(h.clone(), h.clone(), zero.clone(), zero.clone()),
        Quaternion::new(h.clone(), -&h, zero.clone(), zero),
        false,
    );
    r.check(
        coxeter::proper(DiagramId::B3).contains(&d),
        "icosahedron d ∉ W(B3)/C2",
    );
    let image: Vec<Q> = il.points.iter().map(|p| d.apply(p)).collect();
    r.check(
        sorted(image) == ir.points,
        "d O(Λ_I) ≠ O(Λ_II) for the icosahedron",
    );
    let r1 = solids::mirror(DiagramId::A3);
    let mirrored: Vec<Q> = il.points.iter().map(|p| r1.apply(p)).collect();
    r.check(sorted(mirrored) == ir.points, "r1 O(Λ_I) ≠ O(Λ_II)");
    witness_loop(r, "icosahedron", &vectors(&il), &r1);
}

// 8

fn dual_counts(r: &mut Report) {
    let cube = solids::snub_cube_pair().expect("snub cube");
    let dodeca = solids::snub_dodecahedron_pair().expect("snub dodecahedron");
    let cases = [
        (
            NamedSolid::PentagonalIcositetrahedron,
            vectors(&cube.left),
            38,
            60,
            24,
            vec![6, 8, 24],
        ),
        (
            NamedSolid::PentagonalHexacontahedron,
            vectors(&dodeca.left),
            92,
            180,
            60,
            vec![12, 20, 60],
        ),
    ];
    for (name, primal, v, e, f, orbits) in cases {
        let solid = default_solid(name);
        let a = solid.analyze();
        let mut sizes = solid.orbit_sizes.clone();
        sizes.sort_unstable();
        r.check(
            sizes == orbits,
            format!("{name}: orbits {sizes:?}, want {orbits:?}"),
        );
        r.check(
            a.vertices == v,
            format!("{name}: V = {}, want {v}", a.vertices),
        );
        r.check(a.faces == f, format!("{name}: F = {}, want {f}", a.faces));
        r.check(
            a.face_inventory.get(&5) == Some(&f),
            format!("{name}: faces {:?}, want {f} pentagons", a.face_inventory),
        );
        // faces from the primal vertices as plane normals, independent of the hull
        let planes = faces_by_normals(&solid.polyhedron.vertices, &primal, 1e-9);
        let incidences: usize = planes.iter().map(Vec::len).sum();
        let oracle_e = incidences / 2;
        r.check(
            a.edges == e,
            format!(
                "{name}: E = {} (hull), {oracle_e} (face-plane oracle), want {e}; \
                 V − E + F with E = {e} gives {}",
                a.edges,
                v as i64 - e as i64 + f as i64
            ),
        );
        r.check(
            a.edges == oracle_e,
            format!("{name}: hull and oracle disagree"),
        );
    }
    for name in NamedSolid::NAMED {
        let p = &default_solid(name).polyhedron;
        r.check(
            p.euler_characteristic() == 2,
            format!("{name}: χ = {}", p.euler_characteristic()),
        );
        r.check(p.validate().is_ok(), format!("{name}: invalid mesh"));
    }
}

// 9

fn dual_coplanarity(r: &mut Report) {
    let d = solids::dodecahedron_from_dual();
    let s = E::sigma();
    r.check(
        d.lambda == (&s * &s).scale(3, 1),
        format!("λ = {}, want 3σ²", d.lambda),
    );

    let cube = solids::snub_cube_pair().expect("snub cube");
    let x = cube.x;
    let lam = [x, 1.0, 1.0 / x];
    let w1 = [1.0, 0.0, 0.0];
    let w3 = [1.0 / SQRT2; 3];
    let c2 = [2.0 * x + 1.0, 1.0, x * x];
    let k = dot(&w3, &lam);
    let lambda = k / dot(&w1, &lam);
    let eta = k / dot(&c2, &lam);
    r.check(
        (lambda - x / SQRT2).abs() <= 1e-12,
        format!("λ = {lambda}, want x/√2"),
    );
    r.check(
        (eta - 1.0 / (x * x * SQRT2)).abs() <= 1e-12,
        format!("η = {eta}, want x⁻²/√2"),
    );
    let dual = solids::snub_cube_dual(&cube);
    r.check(
        (dual.scales[0] - lambda).abs() <= 1e-12,
        "library λ differs",
    );
    let eta_c2 = dual.scaled_face_center().vector();
    r.check(
        distance(&eta_c2, &scale(&c2, eta)) <= 1e-12,
        "library ηc2 differs",
    );

    let dodeca = solids::snub_dodecahedron_pair().expect("snub dodecahedron");
    let x = dodeca.x;
    let lam = [SIGMA * (x * x - 1.0), -x, 1.0 - TAU * x * x * x];
    let sys = system(DiagramId::H3);
    let w1 = sys.weights[0].to_f64().vector();
    let w3 = sys.weights[2].to_f64().vector();
    let solved = dot(&w1, &lam) / dot(&w3, &lam);
    let eq43 = (-3.0 * SIGMA * x * x + TAU * x + 2.0 + SIGMA) / (x * x + (2.0 + SIGMA) * x + 1.0);
    r.check(
        (solved - eq43).abs() <= 1e-9,
        format!("λ solved {solved}, closed form {eq43}"),
    );
    let hexa = solids::snub_dodecahedron_dual(&dodeca);
    r.check((hexa.scales[1] - solved).abs() <= 1e-9, "library λ differs");

    let t3 = TAU * TAU * TAU;
    let k44 = (3.0 * TAU * x * x + t3 * x + TAU + 2.0)
        / ((21.0 * TAU + 20.0) * x * x + (21.0 * TAU + 17.0) * x + 21.0 * TAU + 11.0)
        / SQRT2;
    let eq44 = scale(
        &[
            (2.0 * SIGMA - 1.0) * x * x - TAU * x - 1.0,
            -x * x + 3.0 * TAU * x + 3.0,
            -t3 * (x * x * x + SIGMA),
        ],
        k44,
    );
    let solved = hexa.scaled_face_center().vector();
    let gap = distance(&eq44, &solved);
    if gap > 1e-9 {
        r.note(format!(
            "ρc2 closed form {eq44:.6?} does not match the coplanarity solve {solved:.6?} \
             (gap {gap:.3e}, parallel: {})",
            parallel(&eq44, &solved)
        ));
    }
    let plane = dot(&solved, &lam) - dot(&w1, &lam);
    r.check(
        plane.abs() <= 1e-9,
        format!("ρc2 off the face plane by {plane:e}"),
    );

    for (name, primal) in [
        (NamedSolid::PentagonalIcositetrahedron, vectors(&cube.left)),
        (NamedSolid::PentagonalHexacontahedron, vectors(&dodeca.left)),
    ] {
        let solid = default_solid(name);
        let p = &solid.polyhedron;
        let groups = faces_by_normals(&p.vertices, &primal, 1e-9);
        let worst = groups
            .iter()
            .zip(&primal)
            .map(|(g, n)| {
                let pts: Vec<Point> = g.iter().map(|&i| p.vertices[i]).collect();
                coplanarity_residual(&pts, n)
            })
            .fold(0.0, f64::max);
        r.check(
            groups.iter().all(|g| g.len() == 5),
            format!("{name}: a plane holds ≠ 5 points"),
        );
        r.check(
            worst <= 1e-9,
            format!("{name}: coplanarity residual {worst:e}"),
        );
        r.check(
            max_plane_residual(p) <= 1e-9,
            format!("{name}: hull faces not planar"),
        );
        r.check(
            normals_match(p, &primal),
            format!("{name}: face normals are not the primal vertices"),
        );
    }

    let p = solids::pyritohedron_fixed();
    let points = p.points();
    let th = pyritohedral();
    let mut all_five = true;
    let mut normals = Vec::new();
    for g in th.elements() {
        let n = g.apply(&p.normal);
        let h: Vec<E> = points.points.iter().map(|v| v.scalar_product(&n)).collect();
        let top = h.iter().max().expect("points").clone();
        all_five &= h.iter().filter(|&v| *v == top).count() == 5;
        normals.push(n.to_f64().vector());
    }
    r.check(
        all_five,
        "fixed pyritohedron: a face plane does not hold exactly 5 points",
    );
    let normal = pure([int(0), int(5), &int(7) + &s]);
    r.check(
        solids::cross(&p.normal, &normal).norm_sqr().is_zero(),
        format!("D = {} is not ∥ 5e2 + (7 + σ)e3", p.normal),
    );
    let hull = build_faces(&vectors(&points)).expect("pyritohedron hull");
    r.check(
        max_plane_residual(&hull) <= 1e-9,
        "fixed pyritohedron faces not planar",
    );
    r.check(
        hull.faces.len() == 12 && normals_match(&hull, &dedup(normals)),
        "fixed pyritohedron normals",
    );

    for a in [1.2, 1.5, TAU, 1.9, 2.0] {
        let fam = solids::pyritohedron_family(a).expect("family member");
        let hull = build_faces(&vectors(&fam.points())).expect("family hull");
        let normals = dedup(vectors(&Orbit::generate(
            th,
            &Quaternion::pure(1.0, 0.0, a - 1.0),
        )));
        r.check(
            max_plane_residual(&hull) <= 1e-9,
            format!("a = {a}: faces not planar"),
        );
        r.check(
            normals_match(&hull, &normals),
            format!("a = {a}: normals are not Th(1, 0, a − 1)"),
        );
    }
}

fn dedup(mut v: Vec<Point>) -> Vec<Point> {
    let mut out: Vec<Point> = Vec::new();
    v.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
    for p in v {
        if !out.iter().any(|q| distance(q, &p) < 1e-9) {
            out.push(p);
        }
    }
    out
}

// 10

fn pyritohedron_family(r: &mut Report) {
    for a in [1.2, 1.5, TAU, 1.9, 2.0] {
        let fam = solids::pyritohedron_family(a).expect("family member");
        r.check(
            (fam.b - (a * a - 2.0 * a)).abs() < 1e-15,
            format!("a = {a}: b = {}", fam.b),
        );
        let hull = build_faces(&vectors(&fam.points())).expect("family hull");
        let residual = max_plane_residual(&hull).max(hull.planarity_residual());
        r.check(
            residual < 1e-10,
            format!("a = {a}: planarity residual {residual:e}"),
        );
        let (v, sides) = if a < 2.0 { (20, 5) } else { (14, 4) };
        r.check(
            hull.vertices.len() == v
                && hull.faces.len() == 12
                && hull.faces.iter().all(|f| f.len() == sides),
            format!(
                "a = {a}: {} vertices, faces {:?}",
                hull.vertices.len(),
                hull.faces.iter().map(Vec::len).collect::<Vec<_>>()
            ),
        );
        r.check(hull.euler_characteristic() == 2, format!("a = {a}: χ ≠ 2"));
    }

    let regular = vectors(&solids::pyritohedron_family(TAU).expect("a = τ").points());
    let d = solids::dodecahedron_from_dual();
    let eq31 = Orbit::union(
        &[&d.orbits[0], &d.orbits[1], &d.orbits[2]],
        coxeter::GroupKind::Generated,
    );
    r.check(
        set_equal(&normalized(&regular), &normalized(&vectors(&eq31)), 1e-9),
        "a = τ is not the dodecahedron of the three A4 orbits",
    );
    let report = chiral_core::analyze(&build_faces(&regular).expect("hull"), pyritohedral());
    r.check(report.regular, "a = τ is not regular");

    let rhombic = vectors(&solids::pyritohedron_family(2.0).expect("a = 2").points());
    let mut want: Vec<Point> = Vec::new();
    for i in 0..3 {
        for sgn in [-2.0, 2.0] {
            let mut p = [0.0; 3];
            p[i] = sgn;
            want.push(p);
        }
    }
    for m in 0..8u32 {
        want.push(std::array::from_fn(|i| {
            if m >> i & 1 == 1 {
                -1.0
            } else {
                1.0
            }
        }));
    }
    r.check(
        set_equal(&rhombic, &want, 1e-12),
        "a = 2 is not the rhombic dodecahedron",
    );
}

// 11

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("golden")
}

fn determinism(r: &mut Report) {
    let bless = std::env::var_os("UPDATE_GOLDEN").is_some();
    for name in NamedSolid::NAMED {
        let first = RoundedMesh::new(&default_solid(name).polyhedron, DEFAULT_PRECISION).to_off();
        let second = RoundedMesh::new(&default_solid(name).polyhedron, DEFAULT_PRECISION).to_off();
        r.check(first == second, format!("{name}: two runs differ"));
        let path = golden_dir().join(format!("{name}.off"));
        if bless {
            std::fs::create_dir_all(golden_dir()).expect("golden dir");
            std::fs::write(&path, &first).expect("write golden");
            continue;
        }
        match std::fs::read_to_string(&path) {
            Ok(golden) => r.check(
                golden == first,
                format!("{name}: differs from {}", path.display()),
            ),
            Err(e) => r.failures.push(format!("{name}: {}: {e}", path.display())),
        }
    }
    if bless {
        r.note("golden meshes rewritten");
    }
}

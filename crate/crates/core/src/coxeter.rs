//! The four rank-3 Coxeter systems with quaternionic simple roots, their
//! Cartan data and fundamental weights, and the finite groups they generate.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::ExactScalar;
use crate::quaternion::{GroupElement, Quaternion};

pub type ExactQuaternion = Quaternion<ExactScalar>;
pub type ExactElement = GroupElement<ExactScalar>;
pub type Matrix3 = [[ExactScalar; 3]; 3];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum DiagramId {
    A1A1A1,
    A3,
    B3,
    H3,
}

impl DiagramId {
    pub const ALL: [DiagramId; 4] = [Self::A1A1A1, Self::A3, Self::B3, Self::H3];

    /// Order of the full reflection group.
    pub fn group_order(self) -> usize {
        match self {
            Self::A1A1A1 => 8,
            Self::A3 => 24,
            Self::B3 => 48,
            Self::H3 => 120,
        }
    }

    /// Orders of `a = r1r2`, `b = r2r3` and `ab`.
    pub fn relation_orders(self) -> [usize; 3] {
        match self {
            Self::A1A1A1 => [2, 2, 2],
            Self::A3 => [3, 3, 2],
            Self::B3 => [3, 4, 2],
            Self::H3 => [5, 3, 2],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::A1A1A1 => "A1A1A1",
            Self::A3 => "A3",
            Self::B3 => "B3",
            Self::H3 => "H3",
        }
    }
}

impl fmt::Display for DiagramId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DiagramId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "A1A1A1" | "A1XA1XA1" | "A1^3" | "A13" => Ok(Self::A1A1A1),
            "A3" => Ok(Self::A3),
            "B3" => Ok(Self::B3),
            "H3" => Ok(Self::H3),
            _ => Err(Error::InvalidArgument(format!("unknown diagram '{s}'"))),
        }
    }
}

/// Simple roots, Cartan matrix, its inverse and the fundamental weights.
#[derive(Debug, Clone)]
pub struct CoxeterSystem {
    pub id: DiagramId,
    pub roots: [ExactQuaternion; 3],
    pub cartan: Matrix3,
    pub cartan_inv: Matrix3,
    pub weights: [ExactQuaternion; 3],
}

fn int(n: i64) -> ExactScalar {
    ExactScalar::integer(n)
}

fn pure(x: ExactScalar, y: ExactScalar, z: ExactScalar) -> ExactQuaternion {
    Quaternion::pure(x, y, z)
}

/// Simple roots, each of squared norm 2.
///
/// The H3 roots are `−√2e1`, `(τe1 + e2 + σe3)/√2` and `−√2e2`: the overall
/// signs give the off-diagonal Cartan entries −τ, −1 and orient the weight
/// basis so that the snub seeds come out with the tabulated signs.
pub fn simple_roots(id: DiagramId) -> [ExactQuaternion; 3] {
    let r2 = ExactScalar::sqrt2();
    match id {
        DiagramId::A1A1A1 => [
            pure(r2.clone(), int(0), int(0)),
            pure(int(0), r2.clone(), int(0)),
            pure(int(0), int(0), r2),
        ],
        DiagramId::A3 => [
            pure(int(1), int(1), int(0)),
            pure(int(0), int(-1), int(1)),
            pure(int(-1), int(1), int(0)),
        ],
        DiagramId::B3 => [
            pure(int(1), int(-1), int(0)),
            pure(int(0), int(1), int(-1)),
            pure(int(0), int(0), r2),
        ],
        DiagramId::H3 => {
            let h = ExactScalar::inv_sqrt2();
            [
                pure(-&r2, int(0), int(0)),
                pure(
                    &ExactScalar::tau() * &h,
                    h.clone(),
                    &ExactScalar::sigma() * &h,
                ),
                pure(int(0), -&r2, int(0)),
            ]
        }
    }
}

/// Exact inverse of a 3×3 matrix over the field, by the adjugate.
pub fn invert3(m: &Matrix3) -> Result<Matrix3> {
    let c = |i: usize, j: usize| {
        let (r0, r1) = ((i + 1) % 3, (i + 2) % 3);
        let (c0, c1) = ((j + 1) % 3, (j + 2) % 3);
        &(&m[r0][c0] * &m[r1][c1]) - &(&m[r0][c1] * &m[r1][c0])
    };
    let det = &(&(&m[0][0] * &c(0, 0)) + &(&m[0][1] * &c(0, 1))) + &(&m[0][2] * &c(0, 2));
    let inv_det = det.inverse()?;
    Ok(std::array::from_fn(|i| {
        std::array::from_fn(|j| &c(j, i) * &inv_det)
    }))
}

pub fn mat_mul(a: &Matrix3, b: &Matrix3) -> Matrix3 {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            (0..3).fold(ExactScalar::zero(), |acc, k| &acc + &(&a[i][k] * &b[k][j]))
        })
    })
}

pub fn identity3() -> Matrix3 {
    std::array::from_fn(|i| std::array::from_fn(|j| int((i == j) as i64)))
}

/// Closed-form inverse Cartan matrices as tabulated in the literature, kept
/// separately from the computed inverse so the two can be compared.
pub fn tabulated_cartan_inverse(id: DiagramId) -> Matrix3 {
    let r = ExactScalar::rational;
    let h = ExactScalar::inv_sqrt2();
    let r2 = ExactScalar::sqrt2();
    match id {
        DiagramId::A1A1A1 => [
            [r(1, 2), r(0, 1), r(0, 1)],
            [r(0, 1), r(1, 2), r(0, 1)],
            [r(0, 1), r(0, 1), r(1, 2)],
        ],
        DiagramId::A3 => [
            [r(3, 4), r(2, 4), r(1, 4)],
            [r(2, 4), r(4, 4), r(2, 4)],
            [r(1, 4), r(2, 4), r(3, 4)],
        ],
        DiagramId::B3 => [
            [int(1), int(1), h.clone()],
            [int(1), int(2), r2.clone()],
            [h, r2, r(3, 2)],
        ],
        DiagramId::H3 => {
            let t = ExactScalar::tau();
            let t2 = &t * &t;
            let t3 = &t2 * &t;
            let half = |x: ExactScalar| x.scale(1, 2);
            [
                [half(t2.scale(3, 1)), half(t3.scale(2, 1)), half(t3.clone())],
                [
                    half(t3.scale(2, 1)),
                    half(t2.scale(4, 1)),
                    half(t2.scale(2, 1)),
                ],
                [half(t3), half(t2.scale(2, 1)), half(&t + &int(2))],
            ]
        }
    }
}

impl CoxeterSystem {
    pub fn build(id: DiagramId) -> Self {
        let roots = simple_roots(id);
        let cartan: Matrix3 =
            std::array::from_fn(|i| std::array::from_fn(|j| roots[i].scalar_product(&roots[j])));
        let cartan_inv = invert3(&cartan).expect("Cartan matrices of finite type are invertible");
        let weights = std::array::from_fn(|i| {
            (0..3).fold(Quaternion::zero(), |acc, j| {
                &acc + &roots[j].scaled(&cartan_inv[i][j])
            })
        });
        Self {
            id,
            roots,
            cartan,
            cartan_inv,
            weights,
        }
    }

    /// The three simple reflections.
    pub fn generators(&self) -> [ExactElement; 3] {
        std::array::from_fn(|i| {
            GroupElement::reflection_from_root(&self.roots[i])
                .expect("simple roots are pure with squared norm 2")
        })
    }

    /// `Λ = a1ω1 + a2ω2 + a3ω3`.
    pub fn vector(&self, d: &DynkinVector<ExactScalar>) -> ExactQuaternion {
        let a = [&d.a1, &d.a2, &d.a3];
        (0..3).fold(Quaternion::zero(), |acc, i| {
            &acc + &self.weights[i].scaled(a[i])
        })
    }

    pub fn vector_f64(&self, d: &DynkinVector<f64>) -> Quaternion<f64> {
        let a = [d.a1, d.a2, d.a3];
        (0..3).fold(Quaternion::zero(), |acc, i| {
            &acc + &self.weights[i].to_f64().scaled(&a[i])
        })
    }

    pub fn full_group(&self) -> FiniteGroup {
        generate_group(
            &self.generators(),
            GroupKind::Full(self.id),
            10 * self.id.group_order(),
        )
        .expect("simple reflections generate a finite group of the expected order")
    }

    /// Orders of `a = r1r2`, `b = r2r3` and `ab` against the expected values.
    pub fn verify_relations(&self) -> RelationReport {
        let [r1, r2, r3] = self.generators();
        let a = r1.compose(&r2);
        let b = r2.compose(&r3);
        let ab = a.compose(&b);
        let expected = self.id.relation_orders();
        let checks = [("a = r1r2", a), ("b = r2r3", b), ("ab", ab)]
            .into_iter()
            .zip(expected)
            .map(|((name, g), want)| RelationCheck {
                name: name.to_string(),
                expected: want,
                computed: g.order(2 * self.id.group_order()),
            })
            .collect();
        RelationReport {
            diagram: self.id,
            checks,
        }
    }
}

/// Coordinates `(a1 a2 a3)` of a vector in the weight basis.
#[derive(Debug, Clone, PartialEq)]
pub struct DynkinVector<S> {
    pub a1: S,
    pub a2: S,
    pub a3: S,
}

impl<S> DynkinVector<S> {
    pub fn new(a1: S, a2: S, a3: S) -> Self {
        Self { a1, a2, a3 }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationCheck {
    pub name: String,
    pub expected: usize,
    pub computed: Option<usize>,
}

impl RelationCheck {
    pub fn passed(&self) -> bool {
        self.computed == Some(self.expected)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationReport {
    pub diagram: DiagramId,
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(RelationCheck::passed)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupKind {
    Full(DiagramId),
    Proper(DiagramId),
    Pyritohedral,
    Generated,
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Full(d) => write!(f, "W({d})"),
            Self::Proper(d) => write!(f, "W({d})/C2"),
            Self::Pyritohedral => f.write_str("Th"),
            Self::Generated => f.write_str("generated"),
        }
    }
}

/// A finite group of orthogonal maps, stored as a sorted set of canonical
/// elements alongside their binary64 images.
#[derive(Clone)]
pub struct FiniteGroup {
    kind: GroupKind,
    elements: Vec<ExactElement>,
    numeric: Vec<GroupElement<f64>>,
}

impl FiniteGroup {
    pub fn from_elements(
        kind: GroupKind,
        elements: impl IntoIterator<Item = ExactElement>,
    ) -> Self {
        let mut elements: Vec<_> = elements
            .into_iter()
            .collect::<HashSet<_>>()
            .into_iter()
            .collect();
        elements.sort_by(|a, b| a.total_cmp(b));
        let numeric = elements.iter().map(GroupElement::to_f64).collect();
        Self {
            kind,
            elements,
            numeric,
        }
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[ExactElement] {
        &self.elements
    }

    pub fn numeric(&self) -> &[GroupElement<f64>] {
        &self.numeric
    }

    pub fn contains(&self, g: &ExactElement) -> bool {
        self.elements.binary_search_by(|e| e.total_cmp(g)).is_ok()
    }

    pub fn is_subset_of(&self, other: &FiniteGroup) -> bool {
        self.elements.iter().all(|g| other.contains(g))
    }

    pub fn same_elements(&self, other: &FiniteGroup) -> bool {
        self.elements == other.elements
    }

    /// Closed under composition and inverses, and contains the identity.
    pub fn is_group(&self) -> bool {
        self.contains(&GroupElement::identity())
            && self.elements.iter().all(|g| self.contains(&g.inverse()))
            && self
                .elements
                .iter()
                .all(|g| self.elements.iter().all(|h| self.contains(&g.compose(h))))
    }

    /// The orientation-preserving elements.
    pub fn proper_subgroup(&self) -> FiniteGroup {
        let kind = match self.kind {
            GroupKind::Full(d) => GroupKind::Proper(d),
            k => k,
        };
        FiniteGroup::from_elements(kind, self.elements.iter().filter(|g| !g.is_star()).cloned())
    }

    pub fn improper_elements(&self) -> impl Iterator<Item = &ExactElement> {
        self.elements.iter().filter(|g| g.is_star())
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.kind, self.order())
    }
}

/// Breadth-first closure of `gens` under composition.
pub fn generate_group(gens: &[ExactElement], kind: GroupKind, limit: usize) -> Result<FiniteGroup> {
    let identity = GroupElement::identity();
    let mut seen: HashSet<ExactElement> = HashSet::from([identity.clone()]);
    let mut frontier = vec![identity];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for g in &frontier {
            for s in gens {
                let h = s.compose(g);
                if seen.insert(h.clone()) {
                    if seen.len() > limit {
                        return Err(Error::ClosureOverflow { limit });
                    }
                    next.push(h);
                }
            }
        }
        frontier = next;
    }
    Ok(FiniteGroup::from_elements(kind, seen))
}

/// The 24 units of the binary tetrahedral group:
/// `±1, ±e_i, ½(±1 ± e1 ± e2 ± e3)`.
pub fn binary_tetrahedral() -> Vec<ExactQuaternion> {
    let mut out = Vec::with_capacity(24);
    for i in 0..4 {
        for s in [1, -1] {
            let mut c = [int(0), int(0), int(0), int(0)];
            c[i] = int(s);
            out.push(Quaternion::from_array(c));
        }
    }
    for signs in 0..16u32 {
        let c = std::array::from_fn(|k| {
            ExactScalar::rational(if signs >> k & 1 == 1 { -1 } else { 1 }, 2)
        });
        out.push(Quaternion::from_array(c));
    }
    out
}

/// The 24 units of the coset `O \ T`: `(±1 ± e_i)/√2` and `(±e_i ± e_j)/√2`.
pub fn octahedral_coset() -> Vec<ExactQuaternion> {
    let h = ExactScalar::inv_sqrt2();
    let mut out = Vec::with_capacity(24);
    for i in 0..4 {
        for j in (i + 1)..4 {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut c = [int(0), int(0), int(0), int(0)];
                c[i] = h.scale(si, 1);
                c[j] = h.scale(sj, 1);
                out.push(Quaternion::from_array(c));
            }
        }
    }
    out
}

/// `{[p, p̄] ⊕ [t, t̄]*}` with `p ∈ T`, `t ∈ O \ T`; the same set of actions
/// as the reflection group W(A3).
pub fn tetrahedral_from_binary_groups() -> FiniteGroup {
    let rotations = binary_tetrahedral().into_iter().map(GroupElement::rotation);
    let reflections = octahedral_coset()
        .into_iter()
        .map(GroupElement::rotary_reflection);
    FiniteGroup::from_elements(GroupKind::Full(DiagramId::A3), rotations.chain(reflections))
}

/// `{[T, T̄] ⊕ [T, T̄]* ⊕ [T', T̄'] ⊕ [T', T̄']*}`, the same set of actions as
/// W(B3).
pub fn octahedral_from_binary_groups() -> FiniteGroup {
    let units: Vec<_> = binary_tetrahedral()
        .into_iter()
        .chain(octahedral_coset())
        .collect();
    let rot = units.iter().cloned().map(GroupElement::rotation);
    let refl = units.iter().cloned().map(GroupElement::rotary_reflection);
    FiniteGroup::from_elements(GroupKind::Full(DiagramId::B3), rot.chain(refl))
}

/// The pyritohedral group `Th = {[T, T̄] ⊕ [T, T̄]*}` of order 24.
pub fn pyritohedral_group() -> FiniteGroup {
    let t = binary_tetrahedral();
    let rot = t.iter().cloned().map(GroupElement::rotation);
    let refl = t.iter().cloned().map(GroupElement::rotary_reflection);
    FiniteGroup::from_elements(GroupKind::Pyritohedral, rot.chain(refl))
}

/// Shared, lazily built system for `id`.
pub fn system(id: DiagramId) -> &'static CoxeterSystem {
    static SYSTEMS: [OnceLock<CoxeterSystem>; 4] = [const { OnceLock::new() }; 4];
    SYSTEMS[id as usize].get_or_init(|| CoxeterSystem::build(id))
}

/// Shared full reflection group W(id).
pub fn full(id: DiagramId) -> &'static FiniteGroup {
    static GROUPS: [OnceLock<FiniteGroup>; 4] = [const { OnceLock::new() }; 4];
    GROUPS[id as usize].get_or_init(|| system(id).full_group())
}

/// Shared proper rotation subgroup of W(id).
pub fn proper(id: DiagramId) -> &'static FiniteGroup {
    static GROUPS: [OnceLock<FiniteGroup>; 4] = [const { OnceLock::new() }; 4];
    GROUPS[id as usize].get_or_init(|| full(id).proper_subgroup())
}

/// Shared pyritohedral group.
pub fn pyritohedral() -> &'static FiniteGroup {
    static GROUP: OnceLock<FiniteGroup> = OnceLock::new();
    GROUP.get_or_init(pyritohedral_group)
}

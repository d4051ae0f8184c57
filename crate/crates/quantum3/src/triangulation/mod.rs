//! Ordered generalized Δ-complexes of closed oriented 3-manifolds.
//!
//! A tetrahedron is a sorted 4-tuple of distinct global vertex classes (the
//! global index order is the vertex order). Face `f` of a tetrahedron is the
//! side opposite local vertex `f`. Gluings pair faces carrying identical
//! vertex-class triples, so the identification is the unique order-preserving
//! bijection. The orientation sign of a tetrahedron is relative to its sorted
//! vertex listing; glued faces must induce opposite orientations, which for
//! face `f` of tetrahedron `t` means the induced sign is `sign(t) * (-1)^f`.

pub mod builders;
pub mod pachner;

use std::collections::HashMap;

use thiserror::Error;

/// Local edges of a tetrahedron in lexicographic order of vertex pairs.
pub const LOCAL_EDGES: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// A (tetrahedron, local face) incidence; face `f` is opposite local vertex `f`.
pub type FaceSlot = (usize, u8);

/// One violation found while building a triangulation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum BuildViolation {
    #[error("tetrahedron {tet} has a repeated vertex class")]
    RepeatedVertex { tet: usize },
    #[error("tetrahedron {tet} lists vertices out of increasing order")]
    UnorderedTetrahedron { tet: usize },
    #[error("tetrahedron {tet} refers to vertex {vertex} beyond the vertex list")]
    VertexOutOfRange { tet: usize, vertex: usize },
    #[error("face ({tet}, {face}) is glued more than once")]
    DoublyGluedFace { tet: usize, face: u8 },
    #[error("face ({tet}, {face}) is glued to itself")]
    SelfGluedFace { tet: usize, face: u8 },
    #[error("face ({tet}, {face}) is not glued")]
    UngluedFace { tet: usize, face: u8 },
    #[error("gluing ({a_tet},{a_face}) ~ ({b_tet},{b_face}) does not preserve the vertex order: triples differ")]
    NonOrderPreservingGluing { a_tet: usize, a_face: u8, b_tet: usize, b_face: u8 },
    #[error("gluing references tetrahedron {tet} out of range")]
    GluingOutOfRange { tet: usize },
    #[error("orientation signs are not coherent (complex unorientable or bad signs)")]
    IncoherentOrientation,
    #[error("orientation list has wrong length {got}, expected {expected}")]
    BadOrientationLength { got: usize, expected: usize },
    #[error("orientation entries must be +1 or -1")]
    BadOrientationValue,
}

#[derive(Debug, Error)]
#[error("invalid triangulation: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
pub struct BuildError(pub Vec<BuildViolation>);

/// A validated closed oriented triangulation with derived edge and triangle
/// classes.
#[derive(Debug, Clone)]
pub struct Triangulation {
    n_vertices: usize,
    tets: Vec<[usize; 4]>,
    gluings: HashMap<FaceSlot, FaceSlot>,
    signs: Vec<i8>,
    edge_class: Vec<[usize; 6]>,
    n_edge_classes: usize,
    triangle_pairs: Vec<(FaceSlot, FaceSlot)>,
}

/// Vertex triple of face `f` of a sorted tetrahedron, in increasing order.
pub fn face_vertices(tet: &[usize; 4], f: u8) -> [usize; 3] {
    let mut out = [0usize; 3];
    let mut idx = 0;
    for (i, &v) in tet.iter().enumerate() {
        if i != f as usize {
            out[idx] = v;
            idx += 1;
        }
    }
    out
}

impl Triangulation {
    /// Validates raw data and derives edge/triangle classes.
    ///
    /// `gluing_pairs` lists each identification once; `signs` assigns the
    /// orientation of the manifold restricted to each tetrahedron relative to
    /// its sorted vertex listing.
    pub fn build(
        n_vertices: usize,
        tets: Vec<[usize; 4]>,
        gluing_pairs: &[(FaceSlot, FaceSlot)],
        signs: Vec<i8>,
    ) -> Result<Self, BuildError> {
        let mut violations = Vec::new();
        for (t, tet) in tets.iter().enumerate() {
            let mut seen = *tet;
            seen.sort_unstable();
            if seen.windows(2).any(|w| w[0] == w[1]) {
                violations.push(BuildViolation::RepeatedVertex { tet: t });
                continue;
            }
            if tet.windows(2).any(|w| w[0] > w[1]) {
                violations.push(BuildViolation::UnorderedTetrahedron { tet: t });
            }
            for &v in tet.iter() {
                if v >= n_vertices {
                    violations.push(BuildViolation::VertexOutOfRange { tet: t, vertex: v });
                }
            }
        }
        if !violations.is_empty() {
            return Err(BuildError(violations));
        }
        let mut gluings: HashMap<FaceSlot, FaceSlot> = HashMap::new();
        for &(a, b) in gluing_pairs {
            for &(t, f) in [&a, &b] {
                if t >= tets.len() {
                    violations.push(BuildViolation::GluingOutOfRange { tet: t });
                }
                if f > 3 {
                    violations.push(BuildViolation::GluingOutOfRange { tet: t });
                }
            }
            if !violations.is_empty() {
                return Err(BuildError(violations));
            }
            if a == b {
                violations.push(BuildViolation::SelfGluedFace { tet: a.0, face: a.1 });
                continue;
            }
            if gluings.contains_key(&a) {
                violations.push(BuildViolation::DoublyGluedFace { tet: a.0, face: a.1 });
                continue;
            }
            if gluings.contains_key(&b) {
                violations.push(BuildViolation::DoublyGluedFace { tet: b.0, face: b.1 });
                continue;
            }
            if face_vertices(&tets[a.0], a.1) != face_vertices(&tets[b.0], b.1) {
                violations.push(BuildViolation::NonOrderPreservingGluing {
                    a_tet: a.0,
                    a_face: a.1,
                    b_tet: b.0,
                    b_face: b.1,
                });
                continue;
            }
            gluings.insert(a, b);
            gluings.insert(b, a);
        }
        for t in 0..tets.len() {
            for f in 0..4u8 {
                if !gluings.contains_key(&(t, f)) {
                    violations.push(BuildViolation::UngluedFace { tet: t, face: f });
                }
            }
        }
        if !violations.is_empty() {
            return Err(BuildError(violations));
        }
        if signs.len() != tets.len() {
            return Err(BuildError(vec![BuildViolation::BadOrientationLength {
                got: signs.len(),
                expected: tets.len(),
            }]));
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(BuildError(vec![BuildViolation::BadOrientationValue]));
        }
        // coherence: glued faces induce opposite orientations
        for (&(t, f), &(t2, f2)) in gluings.iter() {
            let lhs = signs[t] as i32 * if f % 2 == 0 { 1 } else { -1 };
            let rhs = signs[t2] as i32 * if f2 % 2 == 0 { 1 } else { -1 };
            if lhs != -rhs {
                return Err(BuildError(vec![BuildViolation::IncoherentOrientation]));
            }
        }
        // derive edge classes by union-find over local edges
        let n_slots = tets.len() * 6;
        let mut parent: Vec<usize> = (0..n_slots).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut triangle_pairs = Vec::new();
        for (&(t, f), &(t2, f2)) in gluings.iter() {
            if (t, f) < (t2, f2) {
                triangle_pairs.push(((t, f), (t2, f2)));
            }
            let fv: Vec<usize> = (0..4).filter(|&v| v != f as usize).collect();
            let fv2: Vec<usize> = (0..4).filter(|&v| v != f2 as usize).collect();
            for i in 0..3 {
                for j in (i + 1)..3 {
                    let e1 = LOCAL_EDGES.iter().position(|&p| p == (fv[i], fv[j])).unwrap();
                    let e2 = LOCAL_EDGES.iter().position(|&p| p == (fv2[i], fv2[j])).unwrap();
                    let ra = find(&mut parent, t * 6 + e1);
                    let rb = find(&mut parent, t2 * 6 + e2);
                    if ra != rb {
                        parent[ra] = rb;
                    }
                }
            }
        }
        triangle_pairs.sort_unstable();
        let mut class_of_root: HashMap<usize, usize> = HashMap::new();
        let mut edge_class = vec![[0usize; 6]; tets.len()];
        for t in 0..tets.len() {
            for e in 0..6 {
                let r = find(&mut parent, t * 6 + e);
                let next = class_of_root.len();
                let c = *class_of_root.entry(r).or_insert(next);
                edge_class[t][e] = c;
            }
        }
        let n_edge_classes = class_of_root.len();
        Ok(Triangulation {
            n_vertices,
            tets,
            gluings,
            signs,
            edge_class,
            n_edge_classes,
            triangle_pairs,
        })
    }

    /// Builds with orientation signs computed by coherence propagation,
    /// starting from `+` on tetrahedron 0 of each connected component.
    pub fn build_oriented(
        n_vertices: usize,
        tets: Vec<[usize; 4]>,
        gluing_pairs: &[(FaceSlot, FaceSlot)],
    ) -> Result<Self, BuildError> {
        let mut gl: HashMap<FaceSlot, FaceSlot> = HashMap::new();
        for &(a, b) in gluing_pairs {
            gl.insert(a, b);
            gl.insert(b, a);
        }
        let n = tets.len();
        let mut signs = vec![0i8; n];
        for start in 0..n {
            if signs[start] != 0 {
                continue;
            }
            signs[start] = 1;
            let mut stack = vec![start];
            while let Some(t) = stack.pop() {
                for f in 0..4u8 {
                    let Some(&(t2, f2)) = gl.get(&(t, f)) else {
                        continue;
                    };
                    let want = -signs[t]
                        * if f % 2 == 0 { 1 } else { -1 }
                        * if f2 % 2 == 0 { 1 } else { -1 };
                    if signs[t2] == 0 {
                        signs[t2] = want;
                        stack.push(t2);
                    } else if signs[t2] != want {
                        return Err(BuildError(vec![BuildViolation::IncoherentOrientation]));
                    }
                }
            }
        }
        Self::build(n_vertices, tets, gluing_pairs, signs)
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn n_tets(&self) -> usize {
        self.tets.len()
    }

    pub fn n_edge_classes(&self) -> usize {
        self.n_edge_classes
    }

    pub fn n_triangle_classes(&self) -> usize {
        self.triangle_pairs.len()
    }

    pub fn tet(&self, t: usize) -> &[usize; 4] {
        &self.tets[t]
    }

    pub fn tets(&self) -> &[[usize; 4]] {
        &self.tets
    }

    pub fn sign(&self, t: usize) -> i8 {
        self.signs[t]
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn glued_to(&self, slot: FaceSlot) -> FaceSlot {
        self.gluings[&slot]
    }

    pub fn gluing_pairs(&self) -> &[(FaceSlot, FaceSlot)] {
        &self.triangle_pairs
    }

    /// Edge class of local edge `e` (0..6) of tetrahedron `t`.
    pub fn edge_class(&self, t: usize, e: usize) -> usize {
        self.edge_class[t][e]
    }

    /// All (tet, local edge) incidences of each edge class.
    pub fn edge_incidences(&self) -> Vec<Vec<(usize, usize)>> {
        let mut out = vec![Vec::new(); self.n_edge_classes];
        for t in 0..self.tets.len() {
            for e in 0..6 {
                out[self.edge_class[t][e]].push((t, e));
            }
        }
        out
    }

    /// `V - E + F - T`; zero for closed 3-manifolds.
    pub fn euler_characteristic(&self) -> i64 {
        self.n_vertices as i64 - self.n_edge_classes as i64 + self.triangle_pairs.len() as i64
            - self.tets.len() as i64
    }

    /// Per triangle class, the edge classes `(e01, e12, e02)` of its three
    /// sides in the order used by the admissibility condition
    /// `N^{s(02)}_{s(01), s(12)} = 1`.
    pub fn triangle_edge_classes(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::with_capacity(self.triangle_pairs.len());
        for &((t, f), _) in &self.triangle_pairs {
            let fv: Vec<usize> = (0..4).filter(|&v| v != f as usize).collect();
            let e01 = LOCAL_EDGES.iter().position(|&p| p == (fv[0], fv[1])).unwrap();
            let e12 = LOCAL_EDGES.iter().position(|&p| p == (fv[1], fv[2])).unwrap();
            let e02 = LOCAL_EDGES.iter().position(|&p| p == (fv[0], fv[2])).unwrap();
            out.push((
                self.edge_class[t][e01],
                self.edge_class[t][e12],
                self.edge_class[t][e02],
            ));
        }
        out
    }

    /// Relabels vertex classes by `perm` (old id -> new id), re-sorting each
    /// tetrahedron and adjusting orientation signs by the sorting parity.
    pub fn relabel_vertices(&self, perm: &[usize]) -> Result<Triangulation, BuildError> {
        assert_eq!(perm.len(), self.n_vertices);
        let mut tets = Vec::with_capacity(self.tets.len());
        let mut signs = Vec::with_capacity(self.tets.len());
        let mut locmaps = Vec::with_capacity(self.tets.len());
        for (t, tet) in self.tets.iter().enumerate() {
            let nv: Vec<usize> = tet.iter().map(|&v| perm[v]).collect();
            let mut order: Vec<usize> = (0..4).collect();
            order.sort_by_key(|&q| nv[q]);
            let mut parity = 1i8;
            for i in 0..4 {
                for j in (i + 1)..4 {
                    if order[i] > order[j] {
                        parity = -parity;
                    }
                }
            }
            let mut sorted = [0usize; 4];
            for (q, &old) in order.iter().enumerate() {
                sorted[q] = nv[old];
            }
            tets.push(sorted);
            signs.push(self.signs[t] * parity);
            locmaps.push(order);
        }
        let mut pairs = Vec::new();
        for &((t, f), (t2, f2)) in &self.triangle_pairs {
            let nf = locmaps[t].iter().position(|&o| o == f as usize).unwrap() as u8;
            let nf2 = locmaps[t2].iter().position(|&o| o == f2 as usize).unwrap() as u8;
            pairs.push(((t, nf), (t2, nf2)));
        }
        Triangulation::build(self.n_vertices, tets, &pairs, signs)
    }

    /// Canonical renumbering: tetrahedra sorted lexicographically (ties broken
    /// by gluing structure), used by the move-inverse tests to compare
    /// triangulations that differ only by tetrahedron order.
    pub fn normalized(&self) -> Triangulation {
        let mut order: Vec<usize> = (0..self.tets.len()).collect();
        order.sort_by_key(|&t| (self.tets[t], self.signs[t]));
        let mut inv = vec![0usize; order.len()];
        for (new, &old) in order.iter().enumerate() {
            inv[old] = new;
        }
        let tets: Vec<[usize; 4]> = order.iter().map(|&t| self.tets[t]).collect();
        let signs: Vec<i8> = order.iter().map(|&t| self.signs[t]).collect();
        let mut pairs = Vec::new();
        for &((t, f), (t2, f2)) in &self.triangle_pairs {
            let a = (inv[t], f);
            let b = (inv[t2], f2);
            pairs.push(if a < b { (a, b) } else { (b, a) });
        }
        pairs.sort_unstable();
        Triangulation::build(self.n_vertices, tets, &pairs, signs).expect("renumbering is valid")
    }

    /// Structural equality after canonical renumbering of tetrahedra (vertex
    /// classes are compared literally).
    pub fn same_as(&self, other: &Triangulation) -> bool {
        if self.n_vertices != other.n_vertices || self.tets.len() != other.tets.len() {
            return false;
        }
        let a = self.normalized();
        let b = other.normalized();
        a.tets == b.tets && a.signs == b.signs && {
            let mut pa = a.triangle_pairs.clone();
            let mut pb = b.triangle_pairs.clone();
            pa.sort_unstable();
            pb.sort_unstable();
            pa == pb
        }
    }
}

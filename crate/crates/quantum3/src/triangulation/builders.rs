//! Builtin triangulations: the 3-sphere, S¹×S², and the lens spaces L(p,1).

use std::collections::HashMap;

use super::{face_vertices, FaceSlot, Triangulation};

/// Boundary of the 4-simplex: 5 vertices, 5 tetrahedra.
pub fn sphere_s3() -> Triangulation {
    let mut tets = Vec::new();
    for omit in 0..5usize {
        let mut tet = [0usize; 4];
        let mut idx = 0;
        for v in 0..5 {
            if v != omit {
                tet[idx] = v;
                idx += 1;
            }
        }
        tets.push(tet);
    }
    let pairs = pair_by_triple(&tets);
    Triangulation::build_oriented(5, tets, &pairs).expect("S3 complex is valid")
}

/// Pairs faces carrying identical vertex triples; panics unless every triple
/// occurs exactly twice. Suitable for complexes without repeated face triples.
fn pair_by_triple(tets: &[[usize; 4]]) -> Vec<(FaceSlot, FaceSlot)> {
    let mut by_triple: HashMap<[usize; 3], Vec<FaceSlot>> = HashMap::new();
    for (t, tet) in tets.iter().enumerate() {
        for f in 0..4u8 {
            by_triple.entry(face_vertices(tet, f)).or_default().push((t, f));
        }
    }
    let mut pairs: Vec<(FaceSlot, FaceSlot)> = by_triple
        .into_values()
        .map(|slots| {
            assert_eq!(slots.len(), 2, "face triple not shared by exactly two slots");
            (slots[0].min(slots[1]), slots[0].max(slots[1]))
        })
        .collect();
    pairs.sort_unstable();
    pairs
}

/// S¹ × S²: product of a two-triangle sphere ("pillow") with a circle of
/// `layers` segments, each prism split into three tetrahedra along the
/// staircase diagonals. 6·layers tetrahedra.
pub fn s1_x_s2() -> Triangulation {
    s1_x_s2_layered(2)
}

pub fn s1_x_s2_layered(layers: usize) -> Triangulation {
    assert!(layers >= 2, "need at least two layers");
    let mut tets: Vec<[usize; 4]> = Vec::new();
    // owner: (surface face, layer, position in prism)
    let mut owner: Vec<(usize, usize, usize)> = Vec::new();
    for k in 0..layers {
        for face in 0..2usize {
            let b = [k * 3, k * 3 + 1, k * 3 + 2];
            let kk = (k + 1) % layers;
            let t = [kk * 3, kk * 3 + 1, kk * 3 + 2];
            for (w, tet) in [
                [b[0], b[1], b[2], t[2]],
                [b[0], b[1], t[1], t[2]],
                [b[0], t[0], t[1], t[2]],
            ]
            .into_iter()
            .enumerate()
            {
                let mut s = tet;
                s.sort_unstable();
                tets.push(s);
                owner.push((face, k, w));
            }
        }
    }
    let mut by_triple: HashMap<[usize; 3], Vec<FaceSlot>> = HashMap::new();
    for (t, tet) in tets.iter().enumerate() {
        for f in 0..4u8 {
            by_triple.entry(face_vertices(tet, f)).or_default().push((t, f));
        }
    }
    let mut pairs = Vec::new();
    for slots in by_triple.into_values() {
        match slots.len() {
            2 => pairs.push((slots[0], slots[1])),
            4 => {
                // the two prisms over a layer share all face triples:
                // glue within the same surface face (A with A, B with B)
                for face in 0..2usize {
                    let grp: Vec<FaceSlot> = slots
                        .iter()
                        .copied()
                        .filter(|&(t, _)| owner[t].0 == face)
                        .collect();
                    assert_eq!(grp.len(), 2, "prism face grouping failed");
                    pairs.push((grp[0], grp[1]));
                }
            }
            n => panic!("face triple occurs {n} times"),
        }
    }
    pairs.sort_unstable();
    Triangulation::build_oriented(3 * layers, tets, &pairs).expect("S1xS2 complex is valid")
}

/// Lens space L(p,1): the join of two 2p-gons (a triangulation of S³ with
/// 4p² tetrahedra) divided by the free Z/p rotation, yielding 4p tetrahedra
/// on 4 vertex classes.
pub fn lens(p: usize) -> Triangulation {
    assert!(p >= 2, "lens(p) needs p >= 2");
    let n = 2 * p;
    // orbit representative of the tetrahedron (a_i, a_{i+1}, b_j, b_{j+1})
    let rep = |i: usize, j: usize| -> (usize, usize) {
        let shift = i - (i % 2); // even amount to subtract from both coordinates
        (i % 2, (j + n - shift % n) % n)
    };
    let mut ids: HashMap<(usize, usize), usize> = HashMap::new();
    let mut keys: Vec<(usize, usize)> = Vec::new();
    for i in 0..2usize {
        for j in 0..n {
            keys.push((i, j));
        }
    }
    keys.sort_unstable();
    for (q, &k) in keys.iter().enumerate() {
        ids.insert(k, q);
    }
    // vertex classes: a0, a1, b0, b1 -> 0, 1, 2, 3; each tetrahedron uses all four
    let tets: Vec<[usize; 4]> = keys.iter().map(|_| [0usize, 1, 2, 3]).collect();
    let mut pairs = Vec::new();
    let mut add = |a: FaceSlot, b: FaceSlot| {
        let p = (a.min(b), a.max(b));
        if !pairs.contains(&p) {
            pairs.push(p);
        }
    };
    for &(i, j) in &keys {
        let t = ids[&rep(i, j)];
        // the face opposite a_i is shared with tetrahedron (i+1, j); in both
        // tetrahedra the omitted vertex is in class i % 2, which is also its
        // local index in the sorted listing (0,1,2,3)
        let t2 = ids[&rep(i + 1, j)];
        add((t, (i % 2) as u8), (t2, (i % 2) as u8));
        // the face opposite b_{j+1} is shared with tetrahedron (i, j+1)...
        let t3 = ids[&rep(i, (j + 1) % n)];
        add((t, (2 + (j % 2)) as u8), (t3, (2 + (j % 2)) as u8));
    }
    pairs.sort_unstable();
    Triangulation::build_oriented(4, tets, &pairs).expect("lens complex is valid")
}

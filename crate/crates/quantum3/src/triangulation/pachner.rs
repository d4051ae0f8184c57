//! Pachner moves on ordered generalized Δ-complexes: 2-3, 1-4, and their
//! inverses 3-2 and 4-1, plus a seeded random-walk fuzzer.

use std::collections::HashMap;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use super::{face_vertices, FaceSlot, Triangulation, LOCAL_EDGES};

#[derive(Debug, Error, PartialEq)]
pub enum MoveError {
    #[error("triangle class index {0} out of range")]
    BadTriangle(usize),
    #[error("tetrahedron index {0} out of range")]
    BadTet(usize),
    #[error("edge class index {0} out of range")]
    BadEdge(usize),
    #[error("vertex class index {0} out of range")]
    BadVertex(usize),
    #[error("2-3 move needs the two triangle incidences in distinct tetrahedra")]
    SameTetTriangle,
    #[error("2-3 move refused: the two apexes are the same vertex class")]
    CoincidentApexes,
    #[error("3-2 move refused: edge class does not have exactly three incidences in three distinct tetrahedra")]
    NotATripleEdge,
    #[error("3-2 move refused: the surrounding tetrahedra do not form a bipyramid")]
    NotABipyramid,
    #[error("4-1 move refused: vertex star is not the cone over a tetrahedron boundary")]
    NotAConePoint,
    #[error("move produced an invalid complex: {0}")]
    Rewire(String),
}

fn rebuild(
    n_vertices: usize,
    tets: Vec<[usize; 4]>,
    gluings: &HashMap<FaceSlot, FaceSlot>,
    signs: Vec<Option<i8>>,
) -> Result<Triangulation, MoveError> {
    // propagate unknown signs from known neighbours
    let mut signs: Vec<i8> = {
        let mut s: Vec<i8> = signs.into_iter().map(|x| x.unwrap_or(0)).collect();
        loop {
            let mut changed = false;
            for (&(t, f), &(t2, f2)) in gluings.iter() {
                if s[t] != 0 && s[t2] == 0 {
                    s[t2] = -s[t]
                        * if f % 2 == 0 { 1 } else { -1 }
                        * if f2 % 2 == 0 { 1 } else { -1 };
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        s
    };
    // isolated components (cannot happen for honest moves) default to +
    for s in signs.iter_mut() {
        if *s == 0 {
            *s = 1;
        }
    }
    let mut pairs: Vec<(FaceSlot, FaceSlot)> = gluings
        .iter()
        .filter(|(a, b)| a < b)
        .map(|(&a, &b)| (a, b))
        .collect();
    pairs.sort_unstable();
    Triangulation::build(n_vertices, tets, &pairs, signs).map_err(|e| MoveError::Rewire(e.to_string()))
}

/// 2-3 move on triangle class `t_idx` (an index into `gluing_pairs()`):
/// replaces the two tetrahedra sharing the triangle by three around the new
/// edge joining the opposite apexes. Returns the new triangulation and the
/// edge class of the created edge (where the inverse 3-2 move applies).
pub fn pachner_23(tri: &Triangulation, t_idx: usize) -> Result<(Triangulation, usize), MoveError> {
    let pairs = tri.gluing_pairs();
    if t_idx >= pairs.len() {
        return Err(MoveError::BadTriangle(t_idx));
    }
    let ((t1, f1), (t2, f2)) = pairs[t_idx];
    if t1 == t2 {
        return Err(MoveError::SameTetTriangle);
    }
    let a = *tri.tet(t1);
    let b = *tri.tet(t2);
    let shared = face_vertices(&a, f1);
    let u = a[f1 as usize];
    let w = b[f2 as usize];
    if u == w {
        return Err(MoveError::CoincidentApexes);
    }
    let [x, y, z] = shared;
    let mk = |p: usize, q: usize| -> [usize; 4] {
        let mut s = [u, w, p, q];
        s.sort_unstable();
        s
    };
    let new_tets = [mk(x, y), mk(x, z), mk(y, z)];
    let mut tets: Vec<[usize; 4]> = tri.tets().to_vec();
    let mut gl: HashMap<FaceSlot, FaceSlot> = tri
        .gluing_pairs()
        .iter()
        .flat_map(|&(a, b)| [(a, b), (b, a)])
        .collect();
    // collect external partners of the bipyramid keyed by face triple
    let mut ext: HashMap<[usize; 3], FaceSlot> = HashMap::new();
    for (t, fskip) in [(t1, f1), (t2, f2)] {
        for f in 0..4u8 {
            if f == fskip {
                continue;
            }
            let partner = gl[&(t, f)];
            ext.insert(face_vertices(tri.tet(t), f), partner);
        }
    }
    for t in [t1, t2] {
        for f in 0..4u8 {
            if let Some(p) = gl.remove(&(t, f)) {
                gl.remove(&p);
            }
        }
    }
    let idx = [t1, t2, tets.len()];
    tets[t1] = new_tets[0];
    tets[t2] = new_tets[1];
    tets.push(new_tets[2]);
    let mut signs: Vec<Option<i8>> = tri.signs().iter().map(|&s| Some(s)).collect();
    signs[t1] = None;
    signs[t2] = None;
    signs.push(None);
    // wire the new tetrahedra: internal faces match among themselves,
    // external faces take the recorded partners
    let mut by_triple: HashMap<[usize; 3], Vec<FaceSlot>> = HashMap::new();
    for &t in &idx {
        for f in 0..4u8 {
            by_triple.entry(face_vertices(&tets[t], f)).or_default().push((t, f));
        }
    }
    for (triple, slots) in by_triple {
        match slots.len() {
            2 => {
                gl.insert(slots[0], slots[1]);
                gl.insert(slots[1], slots[0]);
            }
            1 => {
                let partner = *ext
                    .get(&triple)
                    .ok_or_else(|| MoveError::Rewire(format!("no partner for {triple:?}")))?;
                gl.insert(slots[0], partner);
                gl.insert(partner, slots[0]);
            }
            n => return Err(MoveError::Rewire(format!("triple {triple:?} occurs {n} times"))),
        }
    }
    let out = rebuild(tri.n_vertices(), tets, &gl, signs)?;
    // locate the created edge {u, w} in the appended tetrahedron
    let last = idx[2];
    let tet = out.tet(last);
    let pu = tet.iter().position(|&v| v == u).unwrap();
    let pw = tet.iter().position(|&v| v == w).unwrap();
    let pair = (pu.min(pw), pu.max(pw));
    let le = LOCAL_EDGES.iter().position(|&p| p == pair).unwrap();
    let created = out.edge_class(last, le);
    Ok((out, created))
}

/// 1-4 move: cones tetrahedron `t0` from a new vertex class appended at the
/// end of the vertex order.
pub fn pachner_14(tri: &Triangulation, t0: usize) -> Result<Triangulation, MoveError> {
    if t0 >= tri.n_tets() {
        return Err(MoveError::BadTet(t0));
    }
    let old = *tri.tet(t0);
    let w = tri.n_vertices(); // appended last, so it sorts last
    let mut tets: Vec<[usize; 4]> = tri.tets().to_vec();
    let mut gl: HashMap<FaceSlot, FaceSlot> = tri
        .gluing_pairs()
        .iter()
        .flat_map(|&(a, b)| [(a, b), (b, a)])
        .collect();
    let idx = [t0, tets.len(), tets.len() + 1, tets.len() + 2];
    let mut new_tets = Vec::with_capacity(4);
    for f in 0..4u8 {
        let fv = face_vertices(&old, f);
        new_tets.push([fv[0], fv[1], fv[2], w]);
    }
    let ext: Vec<FaceSlot> = (0..4u8).map(|f| gl[&(t0, f)]).collect();
    for f in 0..4u8 {
        if let Some(p) = gl.remove(&(t0, f)) {
            gl.remove(&p);
        }
    }
    tets[t0] = new_tets[0];
    tets.push(new_tets[1]);
    tets.push(new_tets[2]);
    tets.push(new_tets[3]);
    let mut signs: Vec<Option<i8>> = tri.signs().iter().map(|&s| Some(s)).collect();
    signs[t0] = None;
    signs.extend([None, None, None]);
    // external faces: the new vertex sorts last, so face 3 of new tet idx[f]
    // is the original face f of the old tetrahedron
    for f in 0..4usize {
        let mut partner = ext[f];
        if partner.0 == t0 {
            partner = (idx[partner.1 as usize], 3);
        }
        gl.insert((idx[f], 3), partner);
        gl.insert(partner, (idx[f], 3));
    }
    // internal faces pair by triple among the four new tetrahedra
    let mut by_triple: HashMap<[usize; 3], Vec<FaceSlot>> = HashMap::new();
    for &t in &idx {
        for f in 0..3u8 {
            by_triple.entry(face_vertices(&tets[t], f)).or_default().push((t, f));
        }
    }
    for (triple, slots) in by_triple {
        if slots.len() != 2 {
            return Err(MoveError::Rewire(format!("cone face {triple:?} occurs {} times", slots.len())));
        }
        gl.insert(slots[0], slots[1]);
        gl.insert(slots[1], slots[0]);
    }
    rebuild(tri.n_vertices() + 1, tets, &gl, signs)
}

/// 3-2 move at edge class `e_idx`: inverse of 2-3. The edge must have exactly
/// three incidences forming a bipyramid.
pub fn pachner_32(tri: &Triangulation, e_idx: usize) -> Result<Triangulation, MoveError> {
    if e_idx >= tri.n_edge_classes() {
        return Err(MoveError::BadEdge(e_idx));
    }
    let incidences = &tri.edge_incidences()[e_idx];
    if incidences.len() != 3 {
        return Err(MoveError::NotATripleEdge);
    }
    let tids: Vec<usize> = incidences.iter().map(|&(t, _)| t).collect();
    if tids[0] == tids[1] || tids[0] == tids[2] || tids[1] == tids[2] {
        return Err(MoveError::NotATripleEdge);
    }
    // each tetrahedron contains the edge (u, w) plus two outer vertices
    let (t_a, e_a) = incidences[0];
    let (ua, wa) = LOCAL_EDGES[e_a];
    let u = tri.tet(t_a)[ua];
    let w = tri.tet(t_a)[wa];
    let mut outer: Vec<[usize; 2]> = Vec::new();
    for &(t, e) in incidences.iter() {
        let (lu, lw) = LOCAL_EDGES[e];
        let tet = tri.tet(t);
        if !(tet[lu] == u && tet[lw] == w) {
            return Err(MoveError::NotABipyramid);
        }
        let rest: Vec<usize> = (0..4).filter(|&q| q != lu && q != lw).map(|q| tet[q]).collect();
        outer.push([rest[0], rest[1]]);
    }
    // outer pairs must be {x,y},{x,z},{y,z} for distinct x,y,z
    let mut xyz: Vec<usize> = outer.iter().flatten().copied().collect();
    xyz.sort_unstable();
    xyz.dedup();
    if xyz.len() != 3 {
        return Err(MoveError::NotABipyramid);
    }
    let (x, y, z) = (xyz[0], xyz[1], xyz[2]);
    if [u, w].contains(&x) || [u, w].contains(&y) || [u, w].contains(&z) {
        return Err(MoveError::NotABipyramid);
    }
    {
        let mut pairs: Vec<[usize; 2]> = outer
            .iter()
            .map(|p| {
                let mut q = *p;
                q.sort_unstable();
                q
            })
            .collect();
        pairs.sort_unstable();
        if pairs != vec![[x, y], [x, z], [y, z]] {
            return Err(MoveError::NotABipyramid);
        }
    }
    // the three internal faces (u,w,·) must be glued among the three tetrahedra
    let mut gl: HashMap<FaceSlot, FaceSlot> = tri
        .gluing_pairs()
        .iter()
        .flat_map(|&(a, b)| [(a, b), (b, a)])
        .collect();
    for &(t, _) in incidences.iter() {
        for f in 0..4u8 {
            let fv = face_vertices(tri.tet(t), f);
            if fv.contains(&u) && fv.contains(&w) {
                let (t2, _) = gl[&(t, f)];
                if !tids.contains(&t2) || t2 == t {
                    return Err(MoveError::NotABipyramid);
                }
            }
        }
    }
    // external faces: per tetrahedron, the two faces avoiding the edge
    let mut ext: HashMap<[usize; 3], FaceSlot> = HashMap::new();
    for &(t, _) in incidences.iter() {
        for f in 0..4u8 {
            let fv = face_vertices(tri.tet(t), f);
            if fv.contains(&u) && fv.contains(&w) {
                continue;
            }
            let partner = gl[&(t, f)];
            ext.insert(fv, partner);
        }
    }
    let mut sorted_tids = tids.clone();
    sorted_tids.sort_unstable();
    let (keep_a, keep_b, drop_t) = (sorted_tids[0], sorted_tids[1], sorted_tids[2]);
    let mut tets: Vec<[usize; 4]> = tri.tets().to_vec();
    let mut signs: Vec<Option<i8>> = tri.signs().iter().map(|&s| Some(s)).collect();
    for &t in &tids {
        for f in 0..4u8 {
            if let Some(p) = gl.remove(&(t, f)) {
                gl.remove(&p);
            }
        }
    }
    let mk = |apex: usize| -> [usize; 4] {
        let mut s = [x, y, z, apex];
        s.sort_unstable();
        s
    };
    tets[keep_a] = mk(u);
    tets[keep_b] = mk(w);
    signs[keep_a] = None;
    signs[keep_b] = None;
    // remove drop_t by swapping in the last tetrahedron
    let last = tets.len() - 1;
    let remap = |slot: FaceSlot| -> FaceSlot {
        if slot.0 == last {
            (drop_t, slot.1)
        } else {
            slot
        }
    };
    if drop_t != last {
        tets.swap(drop_t, last);
        signs.swap(drop_t, last);
        let entries: Vec<(FaceSlot, FaceSlot)> = gl.drain().collect();
        for (a, b) in entries {
            gl.insert(remap(a), remap(b));
        }
        let ext_entries: Vec<([usize; 3], FaceSlot)> = ext.drain().collect();
        for (k, v) in ext_entries {
            ext.insert(k, remap(v));
        }
    }
    tets.pop();
    signs.pop();
    // wire the two new tetrahedra
    let keep = [keep_a, keep_b];
    let mut by_triple: HashMap<[usize; 3], Vec<FaceSlot>> = HashMap::new();
    for &t in &keep {
        for f in 0..4u8 {
            by_triple.entry(face_vertices(&tets[t], f)).or_default().push((t, f));
        }
    }
    for (triple, slots) in by_triple {
        match slots.len() {
            2 => {
                gl.insert(slots[0], slots[1]);
                gl.insert(slots[1], slots[0]);
            }
            1 => {
                let partner = *ext
                    .get(&triple)
                    .ok_or_else(|| MoveError::Rewire(format!("no partner for {triple:?}")))?;
                gl.insert(slots[0], partner);
                gl.insert(partner, slots[0]);
            }
            n => return Err(MoveError::Rewire(format!("triple {triple:?} occurs {n} times"))),
        }
    }
    rebuild(tri.n_vertices(), tets, &gl, signs)
}

/// 4-1 move at vertex class `w`: inverse of 1-4. The vertex star must be the
/// cone over the boundary of a tetrahedron.
pub fn pachner_41(tri: &Triangulation, w: usize) -> Result<Triangulation, MoveError> {
    if w >= tri.n_vertices() {
        return Err(MoveError::BadVertex(w));
    }
    let star: Vec<usize> = (0..tri.n_tets()).filter(|&t| tri.tet(t).contains(&w)).collect();
    if star.len() != 4 {
        return Err(MoveError::NotAConePoint);
    }
    let mut others: Vec<usize> = star
        .iter()
        .flat_map(|&t| tri.tet(t).iter().copied().filter(|&v| v != w))
        .collect();
    others.sort_unstable();
    others.dedup();
    if others.len() != 4 {
        return Err(MoveError::NotAConePoint);
    }
    let base: [usize; 4] = [others[0], others[1], others[2], others[3]];
    // each star tetrahedron must be base minus one vertex, plus w
    for &t in &star {
        let tet = tri.tet(t);
        let missing: Vec<usize> = base.iter().copied().filter(|v| !tet.contains(v)).collect();
        if missing.len() != 1 {
            return Err(MoveError::NotAConePoint);
        }
    }
    let mut gl: HashMap<FaceSlot, FaceSlot> = tri
        .gluing_pairs()
        .iter()
        .flat_map(|&(a, b)| [(a, b), (b, a)])
        .collect();
    // faces containing w must be glued within the star; the four outer faces
    // (those avoiding w) are the faces of the new tetrahedron
    let mut ext: HashMap<[usize; 3], FaceSlot> = HashMap::new();
    for &t in &star {
        for f in 0..4u8 {
            let fv = face_vertices(tri.tet(t), f);
            if fv.contains(&w) {
                let (t2, _) = gl[&(t, f)];
                if !star.contains(&t2) {
                    return Err(MoveError::NotAConePoint);
                }
            } else {
                let partner = gl[&(t, f)];
                if star.contains(&partner.0) {
                    return Err(MoveError::NotAConePoint);
                }
                ext.insert(fv, partner);
            }
        }
    }
    if ext.len() != 4 {
        return Err(MoveError::NotAConePoint);
    }
    for &t in &star {
        for f in 0..4u8 {
            if let Some(p) = gl.remove(&(t, f)) {
                gl.remove(&p);
            }
        }
    }
    // drop the three highest star tets, replace the lowest by the base tet
    let mut sorted_star = star.clone();
    sorted_star.sort_unstable();
    let keep = sorted_star[0];
    let mut tets: Vec<[usize; 4]> = tri.tets().to_vec();
    let mut signs: Vec<Option<i8>> = tri.signs().iter().map(|&s| Some(s)).collect();
    tets[keep] = base;
    signs[keep] = None;
    // remove the other three from the end, remapping swapped slots
    let mut to_remove = vec![sorted_star[1], sorted_star[2], sorted_star[3]];
    while let Some(t) = to_remove.pop() {
        let last = tets.len() - 1;
        if t != last {
            tets.swap(t, last);
            signs.swap(t, last);
            let entries: Vec<(FaceSlot, FaceSlot)> = gl.drain().collect();
            let remap = |slot: FaceSlot| -> FaceSlot {
                if slot.0 == last {
                    (t, slot.1)
                } else {
                    slot
                }
            };
            for (a, b) in entries {
                gl.insert(remap(a), remap(b));
            }
            let ext_entries: Vec<([usize; 3], FaceSlot)> = ext.drain().collect();
            for (k, v) in ext_entries {
                ext.insert(k, remap(v));
            }
            to_remove.iter_mut().for_each(|q| {
                if *q == last {
                    *q = t;
                }
            });
        }
        tets.pop();
        signs.pop();
    }
    let keep = tets.iter().position(|&t| t == base).unwrap();
    for f in 0..4u8 {
        let triple = face_vertices(&base, f);
        let partner = *ext
            .get(&triple)
            .ok_or_else(|| MoveError::Rewire(format!("no partner for {triple:?}")))?;
        gl.insert((keep, f), partner);
        gl.insert(partner, (keep, f));
    }
    // drop vertex w and compact vertex ids
    let mut perm: Vec<usize> = Vec::with_capacity(tri.n_vertices());
    let mut next = 0usize;
    for v in 0..tri.n_vertices() {
        if v == w {
            perm.push(usize::MAX);
        } else {
            perm.push(next);
            next += 1;
        }
    }
    for tet in tets.iter_mut() {
        for v in tet.iter_mut() {
            *v = perm[*v];
        }
    }
    rebuild(tri.n_vertices() - 1, tets, &gl, signs)
}

/// One applicable move in a fuzz walk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Move {
    Expand23(usize),
    Expand14(usize),
    Shrink32(usize),
    Shrink41(usize),
}

/// Seeded random walk applying `n_moves` applicable Pachner moves, shrinking
/// whenever the complex exceeds `max_tets`. Returns each intermediate
/// triangulation together with the move that produced it.
pub fn fuzz_walk(
    start: &Triangulation,
    n_moves: usize,
    seed: u64,
    max_tets: usize,
) -> Vec<(Move, Triangulation)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut current = start.clone();
    let mut out = Vec::with_capacity(n_moves);
    for _ in 0..n_moves {
        let oversized = current.n_tets() >= max_tets;
        let mut applied = None;
        if oversized {
            // scan all shrinking candidates in a shuffled order; take the first
            use rand::seq::SliceRandom;
            let mut cands: Vec<(u8, usize)> = (0..current.n_edge_classes())
                .map(|e| (2u8, e))
                .chain((0..current.n_vertices()).map(|v| (3u8, v)))
                .collect();
            cands.shuffle(&mut rng);
            for (kind, idx) in cands {
                let result = match kind {
                    2 => pachner_32(&current, idx).map(|tr| (Move::Shrink32(idx), tr)),
                    _ => pachner_41(&current, idx).map(|tr| (Move::Shrink41(idx), tr)),
                };
                if let Ok(found) = result {
                    applied = Some(found);
                    break;
                }
            }
        }
        if applied.is_none() {
            for _attempt in 0..200 {
                // at a dead end above the cap only the +1 move is allowed,
                // so the size stays pinned near the cap
                let kind = if oversized { 0 } else { rng.gen_range(0..4u8) };
                let result = match kind {
                    0 => {
                        let t = rng.gen_range(0..current.gluing_pairs().len());
                        pachner_23(&current, t).map(|(tr, _)| (Move::Expand23(t), tr))
                    }
                    1 => {
                        let t = rng.gen_range(0..current.n_tets());
                        pachner_14(&current, t).map(|tr| (Move::Expand14(t), tr))
                    }
                    2 => {
                        let e = rng.gen_range(0..current.n_edge_classes());
                        pachner_32(&current, e).map(|tr| (Move::Shrink32(e), tr))
                    }
                    _ => {
                        let v = rng.gen_range(0..current.n_vertices());
                        pachner_41(&current, v).map(|tr| (Move::Shrink41(v), tr))
                    }
                };
                if let Ok(found) = result {
                    applied = Some(found);
                    break;
                }
            }
        }
        let Some((mv, tr)) = applied else {
            break; // nothing applicable in the attempt budget
        };
        current = tr.clone();
        out.push((mv, tr));
    }
    out
}

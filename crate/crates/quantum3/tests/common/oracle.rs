//! Independent pentagon/hexagon solver used to regenerate the builtin
//! constants from scratch.
//!
//! The solver knows only the fusion ring. It computes Frobenius-Perron
//! dimensions by power iteration, solves the pentagon equations for real
//! orthogonal F-matrices in the unit gauge by damped Gauss-Newton from many
//! seeded random starts, canonicalizes the leftover sign gauge, and then
//! solves the hexagon equations for the R-symbols given the F-data. Nothing
//! here reads the shipped 6j/R tables; tests compare its output against them.

use std::collections::HashMap;

use num_complex::Complex64;
use quantum3::category::FusionRing;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

type C = Complex64;

/// Frobenius-Perron dimension of each label: the dominant eigenvalue of its
/// left-multiplication matrix, by power iteration.
pub fn fp_dims(ring: &FusionRing) -> Vec<f64> {
    let r = ring.rank();
    (0..r)
        .map(|i| {
            // power iteration on N_i + I; the shift breaks the sign symmetry
            // of spectra like {-sqrt2, 0, sqrt2}
            let mut v = vec![1f64; r];
            let mut lambda = 1f64;
            for _ in 0..6000 {
                let mut w = v.clone();
                for j in 0..r {
                    for k in 0..r {
                        if ring.adm(i, j, k) {
                            w[k] += v[j];
                        }
                    }
                }
                lambda = w.iter().fold(0f64, |a, &b| a.max(b.abs()));
                if lambda == 0.0 {
                    return 0.0;
                }
                for x in w.iter_mut() {
                    *x /= lambda;
                }
                v = w;
            }
            lambda - 1.0
        })
        .collect()
}

/// One F-matrix family with explicit row/col label lists.
#[derive(Debug, Clone)]
pub struct Family {
    pub key: [usize; 4],
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

fn families(ring: &FusionRing) -> Vec<Family> {
    let r = ring.rank();
    let mut out = Vec::new();
    for a in 0..r {
        for b in 0..r {
            for c in 0..r {
                for d in 0..r {
                    let rows: Vec<usize> =
                        (0..r).filter(|&e| ring.adm(a, b, e) && ring.adm(e, c, d)).collect();
                    let cols: Vec<usize> =
                        (0..r).filter(|&f| ring.adm(b, c, f) && ring.adm(a, f, d)).collect();
                    if !rows.is_empty() {
                        assert_eq!(rows.len(), cols.len(), "family dimension mismatch");
                        out.push(Family { key: [a, b, c, d], rows, cols });
                    }
                }
            }
        }
    }
    out
}

/// Reference to one F entry: either the constant 1 (unit gauge) or a slot in
/// the unknown vector. Entries outside any family are represented by None at
/// resolution time and drop the whole term.
#[derive(Debug, Clone, Copy)]
enum Ref {
    Const,
    Slot(usize),
}

struct PentagonSystem {
    n_slots: usize,
    /// (lhs pair, rhs triples): residual = lhs1*lhs2 - sum(rhs)
    instances: Vec<([Ref; 2], Vec<[Ref; 3]>)>,
    /// per-family slot grids for the orthogonality constraints
    unknown_grids: Vec<Vec<Vec<usize>>>,
    slots: Vec<([usize; 4], usize, usize)>,
    gauge_keys: Vec<(usize, usize, usize)>,
    fams: Vec<Family>,
}

fn build_pentagon_system(ring: &FusionRing) -> PentagonSystem {
    let fams = families(ring);
    let mut slot_of: HashMap<([usize; 4], usize, usize), usize> = HashMap::new();
    let mut slots = Vec::new();
    let mut unknown_grids = Vec::new();
    for fam in &fams {
        let [a, b, c, _] = fam.key;
        if a == 0 || b == 0 || c == 0 {
            continue;
        }
        let mut grid = vec![vec![0usize; fam.cols.len()]; fam.rows.len()];
        for (ri, &e) in fam.rows.iter().enumerate() {
            for (ci, &f) in fam.cols.iter().enumerate() {
                let s = slots.len();
                slot_of.insert((fam.key, e, f), s);
                slots.push((fam.key, ri, ci));
                grid[ri][ci] = s;
            }
        }
        unknown_grids.push(grid);
    }
    let lookup = |a: usize, b: usize, c: usize, d: usize, e: usize, f: usize| -> Option<Ref> {
        let fam = fams.iter().find(|fm| fm.key == [a, b, c, d])?;
        if !fam.rows.contains(&e) || !fam.cols.contains(&f) {
            return None;
        }
        if a == 0 || b == 0 || c == 0 {
            Some(Ref::Const)
        } else {
            Some(Ref::Slot(slot_of[&([a, b, c, d], e, f)]))
        }
    };
    let r = ring.rank();
    let mut instances = Vec::new();
    for a in 0..r {
        for b in 0..r {
            for f in (0..r).filter(|&f| ring.adm(a, b, f)) {
                for c in 0..r {
                    for g in (0..r).filter(|&g| ring.adm(f, c, g)) {
                        for d in 0..r {
                            for e in 0..r {
                                if !ring.adm(g, d, e) {
                                    continue;
                                }
                                for l in (0..r).filter(|&l| ring.adm(c, d, l)) {
                                    for k in 0..r {
                                        if !(ring.adm(b, l, k) && ring.adm(a, k, e)) {
                                            continue;
                                        }
                                        let lhs1 = lookup(f, c, d, e, g, l);
                                        let lhs2 = lookup(a, b, l, e, f, k);
                                        let lhs = match (lhs1, lhs2) {
                                            (Some(x), Some(y)) => Some([x, y]),
                                            _ => None,
                                        };
                                        let mut rhs = Vec::new();
                                        for h in 0..r {
                                            let t1 = lookup(a, b, c, g, f, h);
                                            let t2 = lookup(a, h, d, e, g, k);
                                            let t3 = lookup(b, c, d, k, h, l);
                                            if let (Some(x), Some(y), Some(z)) = (t1, t2, t3) {
                                                rhs.push([x, y, z]);
                                            }
                                        }
                                        if lhs.is_none() && rhs.is_empty() {
                                            continue;
                                        }
                                        instances.push((
                                            lhs.unwrap_or([Ref::Const, Ref::Const].map(|_| Ref::Slot(usize::MAX))),
                                            rhs,
                                        ));
                                        // a missing LHS with nonempty RHS is a
                                        // structural zero: encode by a marker
                                        if lhs.is_none() {
                                            let last = instances.len() - 1;
                                            instances[last].0 = [Ref::Slot(usize::MAX), Ref::Slot(usize::MAX)];
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    let gauge_keys: Vec<(usize, usize, usize)> = {
        let mut out = Vec::new();
        for a in 1..r {
            for b in 1..r {
                for c in 0..r {
                    if ring.adm(a, b, c) {
                        out.push((a, b, c));
                    }
                }
            }
        }
        out
    };
    PentagonSystem { n_slots: slots.len(), instances, unknown_grids, slots, gauge_keys, fams }
}

impl PentagonSystem {
    fn residuals(&self, x: &[f64], out: &mut Vec<f64>) {
        out.clear();
        let val = |r: Ref| -> f64 {
            match r {
                Ref::Const => 1.0,
                Ref::Slot(usize::MAX) => 0.0,
                Ref::Slot(s) => x[s],
            }
        };
        for (lhs, rhs) in &self.instances {
            let l = val(lhs[0]) * val(lhs[1]);
            let mut s = 0f64;
            for t in rhs {
                s += val(t[0]) * val(t[1]) * val(t[2]);
            }
            out.push(l - s);
        }
        // orthogonality: F F^T = I per unknown family
        for grid in &self.unknown_grids {
            let n = grid.len();
            for i in 0..n {
                for j in 0..n {
                    let mut s = 0f64;
                    for q in 0..n {
                        s += x[grid[i][q]] * x[grid[j][q]];
                    }
                    out.push(s - if i == j { 1.0 } else { 0.0 });
                }
            }
        }
    }

    /// Levenberg-Marquardt least squares from one start; returns a solution
    /// when the residual drops below 1e-12.
    fn solve_from(&self, start: &[f64]) -> Option<Vec<f64>> {
        let n = self.n_slots;
        let mut x = start.to_vec();
        let mut r = Vec::new();
        let mut r2 = Vec::new();
        self.residuals(&x, &mut r);
        let mut lambda = 1e-3;
        for _ in 0..300 {
            let norm: f64 = r.iter().map(|v| v * v).sum::<f64>();
            if norm.sqrt() < 1e-13 {
                break;
            }
            // numerical Jacobian
            let m = r.len();
            let mut jt_j = vec![0f64; n * n];
            let mut jt_r = vec![0f64; n];
            let h = 1e-7;
            let mut cols = vec![vec![0f64; m]; n];
            for q in 0..n {
                let old = x[q];
                x[q] = old + h;
                self.residuals(&x, &mut r2);
                x[q] = old;
                for i in 0..m {
                    cols[q][i] = (r2[i] - r[i]) / h;
                }
            }
            for qa in 0..n {
                for qb in qa..n {
                    let mut s = 0f64;
                    for i in 0..m {
                        s += cols[qa][i] * cols[qb][i];
                    }
                    jt_j[qa * n + qb] = s;
                    jt_j[qb * n + qa] = s;
                }
                let mut s = 0f64;
                for i in 0..m {
                    s += cols[qa][i] * r[i];
                }
                jt_r[qa] = s;
            }
            // try a damped step
            let mut improved = false;
            for _ in 0..25 {
                let mut a = jt_j.clone();
                for q in 0..n {
                    a[q * n + q] += lambda;
                }
                let rhs: Vec<f64> = jt_r.iter().map(|v| -v).collect();
                let Some(dx) = solve_linear(n, &a, &rhs) else {
                    lambda *= 10.0;
                    continue;
                };
                let xn: Vec<f64> = x.iter().zip(&dx).map(|(a, b)| a + b).collect();
                self.residuals(&xn, &mut r2);
                let norm2: f64 = r2.iter().map(|v| v * v).sum::<f64>();
                if norm2 < norm {
                    x = xn;
                    std::mem::swap(&mut r, &mut r2);
                    lambda = (lambda * 0.3).max(1e-12);
                    improved = true;
                    break;
                }
                lambda *= 10.0;
            }
            if !improved {
                break;
            }
        }
        self.residuals(&x, &mut r);
        let worst = r.iter().fold(0f64, |a, &b| a.max(b.abs()));
        if worst < 1e-11 {
            Some(x)
        } else {
            None
        }
    }

    fn apply_gauge(&self, x: &[f64], signs: &[f64]) -> Vec<f64> {
        let g = |a: usize, b: usize, c: usize| -> f64 {
            if a == 0 || b == 0 {
                1.0
            } else {
                signs[self.gauge_keys.iter().position(|&k| k == (a, b, c)).unwrap()]
            }
        };
        let mut y = x.to_vec();
        for (idx, &(key, ri, ci)) in self.slots.iter().enumerate() {
            let [a, b, c, d] = key;
            let fam = self.fams.iter().find(|fm| fm.key == key).unwrap();
            let e = fam.rows[ri];
            let f = fam.cols[ci];
            y[idx] = x[idx] * g(a, b, e) * g(e, c, d) / (g(b, c, f) * g(a, f, d));
        }
        y
    }

    fn canonicalize(&self, x: &[f64]) -> Vec<f64> {
        let k = self.gauge_keys.len();
        let mut best: Option<Vec<f64>> = None;
        for mask in 0..(1u32 << k) {
            let signs: Vec<f64> = (0..k)
                .map(|q| if mask & (1 << q) != 0 { -1.0 } else { 1.0 })
                .collect();
            let y: Vec<f64> = self
                .apply_gauge(x, &signs)
                .iter()
                .map(|v| (v * 1e8).round() / 1e8)
                .collect();
            if best.as_ref().map_or(true, |b| lex_gt(&y, b)) {
                best = Some(y);
            }
        }
        best.unwrap()
    }
}

fn lex_gt(a: &[f64], b: &[f64]) -> bool {
    for (x, y) in a.iter().zip(b) {
        if x > y {
            return true;
        }
        if x < y {
            return false;
        }
    }
    false
}

fn solve_linear(n: usize, a: &[f64], b: &[f64]) -> Option<Vec<f64>> {
    let mut m = a.to_vec();
    let mut x = b.to_vec();
    for col in 0..n {
        let pivot = (col..n).max_by(|&p, &q| m[p * n + col].abs().partial_cmp(&m[q * n + col].abs()).unwrap())?;
        if m[pivot * n + col].abs() < 1e-300 {
            return None;
        }
        if pivot != col {
            for k in 0..n {
                m.swap(col * n + k, pivot * n + k);
            }
            x.swap(col, pivot);
        }
        let p = m[col * n + col];
        for k in col..n {
            m[col * n + k] /= p;
        }
        x[col] /= p;
        for row in 0..n {
            if row == col {
                continue;
            }
            let f = m[row * n + col];
            if f == 0.0 {
                continue;
            }
            for k in col..n {
                m[row * n + k] -= f * m[col * n + k];
            }
            x[row] -= f * x[col];
        }
    }
    Some(x)
}

/// A solved, canonicalized F-data set: map from (family, e, f) to the value.
pub struct SolvedF {
    pub entries: HashMap<([usize; 4], usize, usize), f64>,
}

impl SolvedF {
    pub fn el(&self, a: usize, b: usize, c: usize, d: usize, e: usize, f: usize) -> f64 {
        if a == 0 || b == 0 || c == 0 {
            1.0
        } else {
            self.entries.get(&([a, b, c, d], e, f)).copied().unwrap_or(0.0)
        }
    }
}

/// Solves the pentagon equations in the real orthogonal unit gauge and
/// returns all distinct canonicalized solutions, lexicographically largest
/// first.
pub fn solve_pentagon(ring: &FusionRing, n_starts: usize, seed: u64) -> Vec<SolvedF> {
    let sys = build_pentagon_system(ring);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut canon: Vec<Vec<f64>> = Vec::new();
    for _ in 0..n_starts {
        let start: Vec<f64> = (0..sys.n_slots).map(|_| rng.gen_range(-1.5..1.5)).collect();
        if let Some(x) = sys.solve_from(&start) {
            let c = sys.canonicalize(&x);
            if !canon.iter().any(|s| {
                s.iter().zip(&c).all(|(a, b)| (a - b).abs() < 1e-6)
            }) {
                canon.push(c);
            }
        }
    }
    canon.sort_by(|a, b| if lex_gt(a, b) { std::cmp::Ordering::Less } else { std::cmp::Ordering::Greater });
    canon
        .into_iter()
        .map(|x| {
            let mut entries = HashMap::new();
            for (idx, &(key, ri, ci)) in sys.slots.iter().enumerate() {
                let fam = sys.fams.iter().find(|fm| fm.key == key).unwrap();
                entries.insert((key, fam.rows[ri], fam.cols[ci]), x[idx]);
            }
            SolvedF { entries }
        })
        .collect()
}

/// One braiding solution: R-symbols and the derived twists.
pub struct SolvedR {
    pub rsym: HashMap<[usize; 3], C>,
    pub twists: Vec<C>,
}

/// Solves both hexagon equations for the R-symbols given solved F-data.
/// Returns all distinct solutions.
pub fn solve_hexagon(ring: &FusionRing, f: &SolvedF, dims: &[f64], n_starts: usize, seed: u64) -> Vec<SolvedR> {
    let r = ring.rank();
    // F matrices and inverses as dense lookups (real orthogonal: inverse = transpose)
    let fel = |a: usize, b: usize, c: usize, d: usize, e: usize, ff: usize| -> f64 {
        if !(ring.adm(a, b, e) && ring.adm(e, c, d) && ring.adm(b, c, ff) && ring.adm(a, ff, d)) {
            return 0.0;
        }
        f.el(a, b, c, d, e, ff)
    };
    let finv = |a: usize, b: usize, c: usize, d: usize, ff: usize, e: usize| -> f64 {
        fel(a, b, c, d, e, ff) // orthogonal gauge: [(F)^{-1}]_{fe} = F_{ef}
    };
    let keys: Vec<[usize; 3]> = {
        let mut out = Vec::new();
        for a in 1..r {
            for b in 1..r {
                for c in 0..r {
                    if ring.adm(a, b, c) {
                        out.push([a, b, c]);
                    }
                }
            }
        }
        out
    };
    let k = keys.len();
    let slot = |a: usize, b: usize, c: usize| -> Option<usize> {
        if a == 0 || b == 0 {
            None
        } else {
            keys.iter().position(|&x| x == [a, b, c])
        }
    };
    // unknowns: R (k complex) and Rinv (k complex) -> 4k reals
    let resid = |x: &[f64], out: &mut Vec<C>| {
        out.clear();
        let rv = |a: usize, b: usize, c: usize| -> C {
            if !ring.adm(a, b, c) {
                return C::new(0.0, 0.0);
            }
            match slot(a, b, c) {
                None => C::new(1.0, 0.0),
                Some(s) => C::new(x[2 * s], x[2 * s + 1]),
            }
        };
        let rinv = |a: usize, b: usize, c: usize| -> C {
            if !ring.adm(a, b, c) {
                return C::new(0.0, 0.0);
            }
            match slot(a, b, c) {
                None => C::new(1.0, 0.0),
                Some(s) => C::new(x[2 * k + 2 * s], x[2 * k + 2 * s + 1]),
            }
        };
        for a in 0..r {
            for b in 0..r {
                for c in 0..r {
                    for d in 0..r {
                        let fs: Vec<usize> =
                            (0..r).filter(|&q| ring.adm(b, c, q) && ring.adm(a, q, d)).collect();
                        for &f1 in &fs {
                            for &f2 in &fs {
                                let mut rhs1 = C::new(0.0, 0.0);
                                let mut rhs2 = C::new(0.0, 0.0);
                                for e in 0..r {
                                    for g in 0..r {
                                        let t = finv(a, b, c, d, f1, e) * fel(b, a, c, d, e, g) * finv(b, c, a, d, g, f2);
                                        if t != 0.0 {
                                            rhs1 += C::new(t, 0.0) * rv(a, b, e) * rv(a, c, g);
                                        }
                                        let t2 = fel(b, c, a, d, f1, g) * finv(b, a, c, d, g, e) * fel(a, b, c, d, e, f2);
                                        if t2 != 0.0 {
                                            rhs2 += C::new(t2, 0.0) * rinv(a, c, g) * rinv(a, b, e);
                                        }
                                    }
                                }
                                let lhs1 = if f1 == f2 { rv(a, f1, d) } else { C::new(0.0, 0.0) };
                                let lhs2 = if f1 == f2 { rinv(a, f1, d) } else { C::new(0.0, 0.0) };
                                out.push(lhs1 - rhs1);
                                out.push(lhs2 - rhs2);
                            }
                        }
                    }
                }
            }
        }
        // R * Rinv = 1 on every admissible triple
        for &[a, b, c] in &keys {
            out.push(rv(a, b, c) * rinv(a, b, c) - C::new(1.0, 0.0));
        }
    };
    let n = 4 * k;
    let real_resid = |x: &[f64], buf: &mut Vec<C>, out: &mut Vec<f64>| {
        resid(x, buf);
        out.clear();
        for z in buf.iter() {
            out.push(z.re);
            out.push(z.im);
        }
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sols: Vec<Vec<f64>> = Vec::new();
    for _ in 0..n_starts {
        let mut x: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let mut buf = Vec::new();
        let mut rr = Vec::new();
        let mut r2 = Vec::new();
        real_resid(&x, &mut buf, &mut rr);
        let mut lambda = 1e-3;
        for _ in 0..300 {
            let norm: f64 = rr.iter().map(|v| v * v).sum();
            if norm.sqrt() < 1e-13 {
                break;
            }
            let m = rr.len();
            let h = 1e-7;
            let mut cols = vec![vec![0f64; m]; n];
            for q in 0..n {
                let old = x[q];
                x[q] = old + h;
                real_resid(&x, &mut buf, &mut r2);
                x[q] = old;
                for i in 0..m {
                    cols[q][i] = (r2[i] - rr[i]) / h;
                }
            }
            let mut jt_j = vec![0f64; n * n];
            let mut jt_r = vec![0f64; n];
            for qa in 0..n {
                for qb in qa..n {
                    let mut s = 0f64;
                    for i in 0..m {
                        s += cols[qa][i] * cols[qb][i];
                    }
                    jt_j[qa * n + qb] = s;
                    jt_j[qb * n + qa] = s;
                }
                let mut s = 0f64;
                for i in 0..m {
                    s += cols[qa][i] * rr[i];
                }
                jt_r[qa] = s;
            }
            let mut improved = false;
            for _ in 0..25 {
                let mut a = jt_j.clone();
                for q in 0..n {
                    a[q * n + q] += lambda;
                }
                let rhs: Vec<f64> = jt_r.iter().map(|v| -v).collect();
                let Some(dx) = solve_linear(n, &a, &rhs) else {
                    lambda *= 10.0;
                    continue;
                };
                let xn: Vec<f64> = x.iter().zip(&dx).map(|(a, b)| a + b).collect();
                real_resid(&xn, &mut buf, &mut r2);
                let norm2: f64 = r2.iter().map(|v| v * v).sum();
                if norm2 < norm {
                    x = xn;
                    std::mem::swap(&mut rr, &mut r2);
                    lambda = (lambda * 0.3).max(1e-12);
                    improved = true;
                    break;
                }
                lambda *= 10.0;
            }
            if !improved {
                break;
            }
        }
        real_resid(&x, &mut buf, &mut rr);
        // the F-data itself carries the pentagon solver's ~1e-9 error, which
        // floors the reachable hexagon residual
        let worst = rr.iter().fold(0f64, |a, &b| a.max(b.abs()));
        if worst < 3e-8 {
            let rounded: Vec<f64> = x.iter().take(2 * k).map(|v| (v * 1e8).round() / 1e8).collect();
            if !sols
                .iter()
                .any(|s| s.iter().zip(&rounded).all(|(a, b)| (a - b).abs() < 1e-6))
            {
                sols.push(rounded);
            }
        }
    }
    sols.into_iter()
        .map(|x| {
            let mut rsym = HashMap::new();
            for a in 0..r {
                for b in 0..r {
                    for c in 0..r {
                        if !ring.adm(a, b, c) {
                            continue;
                        }
                        let v = match slot(a, b, c) {
                            None => C::new(1.0, 0.0),
                            Some(s) => C::new(x[2 * s], x[2 * s + 1]),
                        };
                        rsym.insert([a, b, c], v);
                    }
                }
            }
            let twists: Vec<C> = (0..r)
                .map(|i| {
                    let mut s = C::new(0.0, 0.0);
                    for c in 0..r {
                        if ring.adm(i, i, c) {
                            s += C::new(dims[c], 0.0) * rsym[&[i, i, c]];
                        }
                    }
                    s / C::new(dims[i], 0.0)
                })
                .collect();
            SolvedR { rsym, twists }
        })
        .collect()
}

/// Unnormalized S-matrix from R-data by the monodromy formula
/// `S_ij = Σ_c d_c R^{ij}_c R^{ji}_c`; used to filter modular braidings.
pub fn monodromy_s(ring: &FusionRing, dims: &[f64], r_data: &SolvedR) -> Vec<Vec<C>> {
    let r = ring.rank();
    let mut s = vec![vec![C::new(0.0, 0.0); r]; r];
    for i in 0..r {
        for j in 0..r {
            for c in 0..r {
                if ring.adm(i, j, c) {
                    s[i][j] += C::new(dims[c], 0.0) * r_data.rsym[&[i, j, c]] * r_data.rsym[&[j, i, c]];
                }
            }
        }
    }
    s
}

/// |det| of a small complex matrix (Gaussian elimination).
pub fn det_norm(m: &[Vec<C>]) -> f64 {
    let n = m.len();
    let mut a: Vec<C> = m.iter().flatten().copied().collect();
    let mut det = C::new(1.0, 0.0);
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&p, &q| a[p * n + col].norm().partial_cmp(&a[q * n + col].norm()).unwrap())
            .unwrap();
        if a[pivot * n + col].norm() == 0.0 {
            return 0.0;
        }
        if pivot != col {
            for k in 0..n {
                a.swap(col * n + k, pivot * n + k);
            }
            det = -det;
        }
        let p = a[col * n + col];
        det *= p;
        for row in col + 1..n {
            let f = a[row * n + col] / p;
            for k in col..n {
                let t = a[col * n + k];
                a[row * n + k] -= f * t;
            }
        }
    }
    det.norm()
}

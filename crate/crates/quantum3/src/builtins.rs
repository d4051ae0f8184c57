//! Builtin category data sets: pointed Z/n categories, Fibonacci, and Ising.
//!
//! The numeric tables are written as closed-form expressions in the unitary
//! gauge; the `oracle_builtins` integration test re-derives every entry with
//! an independent pentagon/hexagon solver and compares.

use std::collections::HashMap;
use std::f64::consts::PI;

use crate::category::{invert, FusionRing, Label, ModularData, SixKey, SphericalData};
use crate::scalar::{real, Scalar, ONE};

/// Golden ratio, the quantum dimension of the nontrivial Fibonacci object.
pub const GOLDEN: f64 = 1.618033988749894848204586834365638118;

/// F-matrix provider for builtin construction: rows, cols, and the row-major
/// matrix of a family, or the implicit all-ones 1x1 for unlisted families.
struct RawF<'a> {
    ring: &'a FusionRing,
    tables: HashMap<[Label; 4], Vec<Scalar>>,
}

impl<'a> RawF<'a> {
    fn family(&self, a: Label, b: Label, c: Label, d: Label) -> Option<(Vec<Label>, Vec<Label>, Vec<Scalar>)> {
        let rows: Vec<Label> = self
            .ring
            .labels()
            .filter(|&e| self.ring.adm(a, b, e) && self.ring.adm(e, c, d))
            .collect();
        let cols: Vec<Label> = self
            .ring
            .labels()
            .filter(|&f| self.ring.adm(b, c, f) && self.ring.adm(a, f, d))
            .collect();
        if rows.is_empty() {
            return None;
        }
        let mat = match self.tables.get(&[a, b, c, d]) {
            Some(m) => m.clone(),
            None => {
                assert_eq!(rows.len(), 1, "missing F table for ({a},{b},{c};{d})");
                vec![ONE]
            }
        };
        Some((rows, cols, mat))
    }
}

/// Builds the stored 6j table `G(i,j,k,l,m,n) = [(F^{ikl}_n)^{-1}]_{m,j} / sqrt(d_j d_m)`.
fn sixj_from_f(ring: &FusionRing, qdim: &[Scalar], raw: &RawF) -> HashMap<SixKey, Scalar> {
    let mut out = HashMap::new();
    for i in ring.labels() {
        for k in ring.labels() {
            for l in ring.labels() {
                for n in ring.labels() {
                    let Some((rows, cols, mat)) = raw.family(i, k, l, n) else {
                        continue;
                    };
                    let nn = rows.len();
                    let finv = invert(nn, &mat).expect("builtin F-matrix invertible");
                    // finv is row-major over (cols x rows) after inversion of (rows x cols):
                    // invert() returns the inverse of the square matrix as laid out, so
                    // finv[fi * nn + ei] = [(F)^{-1}]_{f,e} with f over cols, e over rows.
                    for (fi, &m) in cols.iter().enumerate() {
                        for (ei, &j) in rows.iter().enumerate() {
                            let g = finv[fi * nn + ei] / (qdim[j] * qdim[m]).sqrt();
                            out.insert([i, j, k, l, m, n], g);
                        }
                    }
                }
            }
        }
    }
    out
}

/// Pointed category of Z/n-graded lines: fusion `i + j mod n`, trivial
/// associator, all quantum dimensions 1.
pub fn vec_zn(n: usize) -> SphericalData {
    assert!(n >= 1, "vec_zn needs n >= 1");
    let mut triples = Vec::new();
    for i in 0..n {
        for j in 0..n {
            triples.push((i, j, (i + j) % n));
        }
    }
    let dual: Vec<Label> = (0..n).map(|i| (n - i) % n).collect();
    let ring = FusionRing::new(n, &triples, dual).unwrap();
    let qdim = vec![ONE; n];
    let raw = RawF { ring: &ring, tables: HashMap::new() };
    let sixj = sixj_from_f(&ring, &qdim, &raw);
    SphericalData::new(ring, qdim, sixj).unwrap()
}

/// `vec_zn` with the trivial (symmetric) braiding and trivial twists.
/// Ribbon but never modular for n > 1.
pub fn vec_zn_trivially_braided(n: usize) -> ModularData {
    let base = vec_zn(n);
    let mut rsym = HashMap::new();
    for (i, j, k) in base.ring.admissible_triples() {
        rsym.insert([i, j, k], ONE);
    }
    let twist = vec![ONE; n];
    ModularData::new(base, rsym, twist).unwrap()
}

/// Fibonacci modular category: labels `0 = 1`, `1 = τ` with `τ⊗τ = 1 ⊕ τ`.
pub fn fibonacci() -> ModularData {
    let ring = FusionRing::new(
        2,
        &[(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0), (1, 1, 1)],
        vec![0, 1],
    )
    .unwrap();
    let phi = GOLDEN;
    let qdim = vec![ONE, real(phi)];
    let isq = real(1.0 / phi.sqrt());
    let mut tables = HashMap::new();
    // [F^{τττ}_τ] over rows/cols (1, τ)
    tables.insert(
        [1, 1, 1, 1],
        vec![real(1.0 / phi), isq, isq, real(-1.0 / phi)],
    );
    // [F^{τττ}_1] is the 1x1 identity, listed for clarity
    tables.insert([1, 1, 1, 0], vec![ONE]);
    let raw = RawF { ring: &ring, tables };
    let sixj = sixj_from_f(&ring, &qdim, &raw);
    let base = SphericalData::new(ring, qdim, sixj).unwrap();

    let mut rsym = HashMap::new();
    for (i, j, k) in base.ring.admissible_triples() {
        rsym.insert([i, j, k], ONE);
    }
    rsym.insert([1, 1, 0], Scalar::from_polar(1.0, -4.0 * PI / 5.0));
    rsym.insert([1, 1, 1], Scalar::from_polar(1.0, 3.0 * PI / 5.0));
    let twist = vec![ONE, Scalar::from_polar(1.0, 4.0 * PI / 5.0)];
    ModularData::new(base, rsym, twist).unwrap()
}

/// Ising modular category: labels `0 = 1`, `1 = σ`, `2 = ψ` with
/// `σ⊗σ = 1 ⊕ ψ`, positive Frobenius-Schur indicator, `twist(σ) = exp(iπ/8)`.
pub fn ising() -> ModularData {
    let mut triples = vec![(1, 1, 0), (1, 1, 2), (1, 2, 1), (2, 1, 1), (2, 2, 0)];
    for i in 0..3 {
        triples.push((0, i, i));
        if i != 0 {
            triples.push((i, 0, i));
        }
    }
    let ring = FusionRing::new(3, &triples, vec![0, 1, 2]).unwrap();
    let s2 = 2f64.sqrt();
    let qdim = vec![ONE, real(s2), ONE];
    let isq = real(1.0 / s2);
    let mut tables = HashMap::new();
    // [F^{σσσ}_σ] over rows/cols (1, ψ)
    tables.insert([1, 1, 1, 1], vec![isq, isq, isq, -isq]);
    // scalar families fixed by the pentagon in the unitary gauge
    for (key, v) in [
        ([1, 1, 2, 0], 1.0),
        ([1, 1, 2, 2], 1.0),
        ([1, 2, 1, 0], 1.0),
        ([1, 2, 1, 2], -1.0),
        ([1, 2, 2, 1], 1.0),
        ([2, 1, 1, 0], 1.0),
        ([2, 1, 1, 2], 1.0),
        ([2, 1, 2, 1], -1.0),
        ([2, 2, 1, 1], 1.0),
        ([2, 2, 2, 2], 1.0),
    ] {
        tables.insert(key, vec![real(v)]);
    }
    let raw = RawF { ring: &ring, tables };
    let sixj = sixj_from_f(&ring, &qdim, &raw);
    let base = SphericalData::new(ring, qdim, sixj).unwrap();

    let mut rsym = HashMap::new();
    for (i, j, k) in base.ring.admissible_triples() {
        rsym.insert([i, j, k], ONE);
    }
    rsym.insert([1, 1, 0], Scalar::from_polar(1.0, -PI / 8.0));
    rsym.insert([1, 1, 2], Scalar::from_polar(1.0, 3.0 * PI / 8.0));
    rsym.insert([1, 2, 1], Scalar::new(0.0, -1.0));
    rsym.insert([2, 1, 1], Scalar::new(0.0, -1.0));
    rsym.insert([2, 2, 0], real(-1.0));
    let twist = vec![ONE, Scalar::from_polar(1.0, PI / 8.0), real(-1.0)];
    ModularData::new(base, rsym, twist).unwrap()
}

/// Looks up a builtin by CLI name.
pub fn by_name(name: &str) -> Option<BuiltinData> {
    match name {
        "vec_z2" => Some(BuiltinData::Spherical(vec_zn(2))),
        "vec_z3" => Some(BuiltinData::Spherical(vec_zn(3))),
        "fibonacci" => Some(BuiltinData::Modular(fibonacci())),
        "ising" => Some(BuiltinData::Modular(ising())),
        _ => None,
    }
}

pub const BUILTIN_NAMES: [&str; 4] = ["vec_z2", "vec_z3", "fibonacci", "ising"];

/// A builtin data set, braided or not.
pub enum BuiltinData {
    Spherical(SphericalData),
    Modular(ModularData),
}

impl BuiltinData {
    pub fn spherical(&self) -> &SphericalData {
        match self {
            BuiltinData::Spherical(s) => s,
            BuiltinData::Modular(m) => &m.base,
        }
    }

    pub fn modular(&self) -> Option<&ModularData> {
        match self {
            BuiltinData::Spherical(_) => None,
            BuiltinData::Modular(m) => Some(m),
        }
    }
}

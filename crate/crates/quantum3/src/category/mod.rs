//! Fusion-ring, spherical, and modular category data in the multiplicity-free
//! scalar gauge, together with the conventions every other module relies on.
//!
//! # Convention ledger
//!
//! Labels are `0..rank`, with `0` the unit object. Fusion coefficients are
//! 0/1 (multiplicity-free). All conventions below are pinned operationally by
//! the validator and golden-value test suites.
//!
//! **F-matrices.** For a family `(a, b, c; d)` the matrix `[F^{abc}_d]_{e,f}`
//! changes basis from the left-nested splitting tree (`e` in `a⊗b`) to the
//! right-nested one (`f` in `b⊗c`). Unit gauge: `F = 1` whenever one of
//! `a, b, c` is the unit.
//!
//! **Stored 6j-symbols.** The table entry `G(i,j,k,l,m,n)` is supported on
//! 6-tuples with admissible triangles `(i,k→j)`, `(k,l→m)`, `(j,l→n)`,
//! `(i,m→n)` and is normalized so that
//!
//! ```text
//!     G(i,j,k,l,m,n) = [(F^{ikl}_n)^{-1}]_{m,j} / sqrt(d_j d_m),
//! ```
//!
//! i.e. the positive 6j evaluated on normalized bases with the triangle
//! copairing weights absorbed symmetrically. The negative (orientation
//! reversed) symbol is the complex conjugate of the stored entry; this is the
//! unitary-gauge convention used by all builtin data.
//!
//! **Pentagon identity** (Biedenharn-Elliott), in stored-G form, for all
//! label 9-tuples `(a,b,c,d,e,f,g,k,l)`:
//!
//! ```text
//!     G(a,f,b,l,k,e) G(f,g,c,d,l,e)
//!         = Σ_h  d_h  G(a,f,b,c,h,g) G(a,g,h,d,k,e) G(b,h,c,d,l,k)
//! ```
//!
//! **Orthonormality**, for every frame `(i,k,l,n)` and admissible `j, j'`:
//!
//! ```text
//!     Σ_m  d_m  G(i,j,k,l,m,n) conj(G(i,j',k,l,m,n)) = δ_{jj'} / d_j
//! ```
//!
//! **R-symbols.** `R^{ab}_c` is the scalar by which the braiding acts on the
//! splitting vertex: `c_{a,b} ∘ Y^{ab}_c = R^{ab}_c Y^{ba}_c`. The hexagon
//! identities checked by the validator are, for all `(a,b,c,d)` and
//! admissible `f, f'`:
//!
//! ```text
//!  H1:  δ_{ff'} R^{af}_d = Σ_{e,g} [(F^{abc}_d)^{-1}]_{fe} R^{ab}_e
//!                                  [F^{bac}_d]_{eg} R^{ac}_g [(F^{bca}_d)^{-1}]_{gf'}
//!  H2:  δ_{ff'} (R^{af}_d)^{-1} = Σ_{g,e} [F^{bca}_d]_{fg} (R^{ac}_g)^{-1}
//!                                  [(F^{bac}_d)^{-1}]_{ge} (R^{ab}_e)^{-1} [F^{abc}_d]_{ef'}
//! ```
//!
//! **Twists.** `twist(i)` is the scalar of the ribbon twist on `i`; the
//! ribbon relation `twist(i) d_i = Σ_c d_c R^{ii}_c` ties it to the braiding.
//! A positively kinked strand evaluates to `twist(color)` times the plain
//! strand.

pub mod modular;
pub mod validate;

use std::collections::HashMap;

use thiserror::Error;

use crate::scalar::{Scalar, Tolerance, ONE, ZERO};

/// Index of a simple object; `0` is the unit.
pub type Label = usize;

/// Key of a 6j entry in the order `(i, j, k, l, m, n)`.
pub type SixKey = [Label; 6];

#[derive(Debug, Error, PartialEq)]
pub enum CategoryError {
    #[error("label {0} out of range for rank {1}")]
    LabelOutOfRange(Label, usize),
    #[error("dual map has wrong length {0} for rank {1}")]
    BadDualLength(usize, usize),
    #[error("qdim table has wrong length {0} for rank {1}")]
    BadQdimLength(usize, usize),
    #[error("twist table has wrong length {0} for rank {1}")]
    BadTwistLength(usize, usize),
    #[error("6j entry {0:?} violates a triangle condition")]
    InadmissibleSixj(SixKey),
    #[error("R-symbol entry {0:?} violates the fusion rule")]
    InadmissibleRsym([Label; 3]),
    #[error("missing admissible 6j entry at {0:?}")]
    MissingSixj(SixKey),
    #[error("missing admissible R-symbol at {0:?}")]
    MissingRsym([Label; 3]),
    #[error("F-matrix family ({0}, {1}, {2}; {3}) is singular")]
    SingularF(Label, Label, Label, Label),
    #[error("fusion ring of braided data must be commutative: N^{2}_{{{0},{1}}} != N^{2}_{{{1},{0}}}")]
    NoncommutativeFusion(Label, Label, Label),
}

/// Multiplicity-free fusion ring: 0/1 structure constants plus the dual involution.
#[derive(Debug, Clone, PartialEq)]
pub struct FusionRing {
    rank: usize,
    fusion: Vec<bool>, // [i*rank*rank + j*rank + k]
    dual: Vec<Label>,
}

impl FusionRing {
    /// Builds a ring from the list of admissible triples `(i, j, k)` with
    /// `N^k_{ij} = 1`. Bounds are enforced here; the fusion axioms are the
    /// business of [`validate::validate_fusion_ring`].
    pub fn new(rank: usize, triples: &[(Label, Label, Label)], dual: Vec<Label>) -> Result<Self, CategoryError> {
        if dual.len() != rank {
            return Err(CategoryError::BadDualLength(dual.len(), rank));
        }
        for &d in &dual {
            if d >= rank {
                return Err(CategoryError::LabelOutOfRange(d, rank));
            }
        }
        let mut fusion = vec![false; rank * rank * rank];
        for &(i, j, k) in triples {
            for &x in &[i, j, k] {
                if x >= rank {
                    return Err(CategoryError::LabelOutOfRange(x, rank));
                }
            }
            fusion[(i * rank + j) * rank + k] = true;
        }
        Ok(FusionRing { rank, fusion, dual })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn labels(&self) -> impl Iterator<Item = Label> {
        0..self.rank
    }

    /// `N^k_{ij} = 1`?
    pub fn adm(&self, i: Label, j: Label, k: Label) -> bool {
        self.fusion[(i * self.rank + j) * self.rank + k]
    }

    pub fn dual(&self, i: Label) -> Label {
        self.dual[i]
    }

    pub fn admissible_triples(&self) -> Vec<(Label, Label, Label)> {
        let mut out = Vec::new();
        for i in self.labels() {
            for j in self.labels() {
                for k in self.labels() {
                    if self.adm(i, j, k) {
                        out.push((i, j, k));
                    }
                }
            }
        }
        out
    }
}

/// Spherical data: quantum dimensions plus the scalar 6j table.
#[derive(Debug, Clone)]
pub struct SphericalData {
    pub ring: FusionRing,
    qdim: Vec<Scalar>,
    sixj: HashMap<SixKey, Scalar>,
}

impl SphericalData {
    pub fn new(
        ring: FusionRing,
        qdim: Vec<Scalar>,
        sixj: HashMap<SixKey, Scalar>,
    ) -> Result<Self, CategoryError> {
        if qdim.len() != ring.rank() {
            return Err(CategoryError::BadQdimLength(qdim.len(), ring.rank()));
        }
        for key in sixj.keys() {
            let &[i, j, k, l, m, n] = key;
            for &x in key {
                if x >= ring.rank() {
                    return Err(CategoryError::LabelOutOfRange(x, ring.rank()));
                }
            }
            if !(ring.adm(i, k, j) && ring.adm(k, l, m) && ring.adm(j, l, n) && ring.adm(i, m, n)) {
                return Err(CategoryError::InadmissibleSixj(*key));
            }
        }
        Ok(SphericalData { ring, qdim, sixj })
    }

    pub fn rank(&self) -> usize {
        self.ring.rank()
    }

    pub fn qdim(&self, i: Label) -> Scalar {
        self.qdim[i]
    }

    pub fn qdims(&self) -> &[Scalar] {
        &self.qdim
    }

    /// Stored 6j entry; structural zeros (inadmissible tuples) return 0.
    pub fn sixj(&self, i: Label, j: Label, k: Label, l: Label, m: Label, n: Label) -> Scalar {
        self.sixj.get(&[i, j, k, l, m, n]).copied().unwrap_or(ZERO)
    }

    pub fn sixj_table(&self) -> &HashMap<SixKey, Scalar> {
        &self.sixj
    }

    pub fn sixj_table_mut(&mut self) -> &mut HashMap<SixKey, Scalar> {
        &mut self.sixj
    }

    /// Is the 6-tuple admissible (all four triangle conditions)?
    pub fn sixj_admissible(&self, key: &SixKey) -> bool {
        let &[i, j, k, l, m, n] = key;
        self.ring.adm(i, k, j)
            && self.ring.adm(k, l, m)
            && self.ring.adm(j, l, n)
            && self.ring.adm(i, m, n)
    }

    /// All admissible 6-tuples of this ring.
    pub fn admissible_sixj_keys(&self) -> Vec<SixKey> {
        let r = self.ring.rank();
        let mut out = Vec::new();
        for i in 0..r {
            for k in 0..r {
                for j in 0..r {
                    if !self.ring.adm(i, k, j) {
                        continue;
                    }
                    for l in 0..r {
                        for m in 0..r {
                            if !self.ring.adm(k, l, m) {
                                continue;
                            }
                            for n in 0..r {
                                if self.ring.adm(j, l, n) && self.ring.adm(i, m, n) {
                                    out.push([i, j, k, l, m, n]);
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Σ_i d_i².
    pub fn global_dim(&self) -> Scalar {
        self.qdim.iter().map(|d| d * d).sum()
    }

    /// All F-matrix families reconstructed from the stored 6j table.
    pub fn f_cache(&self) -> Result<FCache, CategoryError> {
        FCache::build(self)
    }
}

/// Braided/ribbon extension: R-symbols and twists on top of spherical data.
#[derive(Debug, Clone)]
pub struct ModularData {
    pub base: SphericalData,
    rsym: HashMap<[Label; 3], Scalar>,
    twist: Vec<Scalar>,
}

impl ModularData {
    pub fn new(
        base: SphericalData,
        rsym: HashMap<[Label; 3], Scalar>,
        twist: Vec<Scalar>,
    ) -> Result<Self, CategoryError> {
        if twist.len() != base.rank() {
            return Err(CategoryError::BadTwistLength(twist.len(), base.rank()));
        }
        for key in rsym.keys() {
            let &[a, b, c] = key;
            for &x in key {
                if x >= base.rank() {
                    return Err(CategoryError::LabelOutOfRange(x, base.rank()));
                }
            }
            if !base.ring.adm(a, b, c) {
                return Err(CategoryError::InadmissibleRsym(*key));
            }
        }
        Ok(ModularData { base, rsym, twist })
    }

    pub fn rank(&self) -> usize {
        self.base.rank()
    }

    pub fn rsym(&self, a: Label, b: Label, c: Label) -> Scalar {
        self.rsym.get(&[a, b, c]).copied().unwrap_or(ZERO)
    }

    pub fn rsym_table(&self) -> &HashMap<[Label; 3], Scalar> {
        &self.rsym
    }

    pub fn twist(&self, i: Label) -> Scalar {
        self.twist[i]
    }

    pub fn twists(&self) -> &[Scalar] {
        &self.twist
    }
}

/// One F-matrix family `(a, b, c; d)` with both directions precomputed.
#[derive(Debug, Clone)]
pub struct FFamily {
    /// labels `e` with `N^e_{ab}` and `N^d_{ec}` nonzero
    pub rows: Vec<Label>,
    /// labels `f` with `N^f_{bc}` and `N^d_{af}` nonzero
    pub cols: Vec<Label>,
    /// `[F^{abc}_d]_{e,f}`, row-major over `rows x cols`
    pub f: Vec<Scalar>,
    /// `[(F^{abc}_d)^{-1}]_{f,e}`, row-major over `cols x rows`
    pub finv: Vec<Scalar>,
}

impl FFamily {
    pub fn f_el(&self, e: Label, f: Label) -> Scalar {
        match (
            self.rows.iter().position(|&x| x == e),
            self.cols.iter().position(|&x| x == f),
        ) {
            (Some(r), Some(c)) => self.f[r * self.cols.len() + c],
            _ => ZERO,
        }
    }

    pub fn finv_el(&self, f: Label, e: Label) -> Scalar {
        match (
            self.cols.iter().position(|&x| x == f),
            self.rows.iter().position(|&x| x == e),
        ) {
            (Some(c), Some(r)) => self.finv[c * self.rows.len() + r],
            _ => ZERO,
        }
    }
}

/// All F-matrix families of a spherical data set, reconstructed from G:
/// `[(F^{abc}_d)^{-1}]_{f,e} = G(a,e,b,c,f,d) sqrt(d_e d_f)`,
/// and `F` by numerical inversion of the (tiny) family matrices.
#[derive(Debug, Clone)]
pub struct FCache {
    families: HashMap<[Label; 4], FFamily>,
}

impl FCache {
    pub fn build(data: &SphericalData) -> Result<Self, CategoryError> {
        let r = data.rank();
        let ring = &data.ring;
        let mut families = HashMap::new();
        for a in 0..r {
            for b in 0..r {
                for c in 0..r {
                    for d in 0..r {
                        let rows: Vec<Label> =
                            (0..r).filter(|&e| ring.adm(a, b, e) && ring.adm(e, c, d)).collect();
                        let cols: Vec<Label> =
                            (0..r).filter(|&f| ring.adm(b, c, f) && ring.adm(a, f, d)).collect();
                        if rows.is_empty() && cols.is_empty() {
                            continue;
                        }
                        if rows.len() != cols.len() {
                            // dimension mismatch: impossible for honest category data,
                            // flagged as a singular family
                            return Err(CategoryError::SingularF(a, b, c, d));
                        }
                        let n = rows.len();
                        let mut finv = vec![ZERO; n * n];
                        for (ci, &f) in cols.iter().enumerate() {
                            for (ri, &e) in rows.iter().enumerate() {
                                let g = data.sixj(a, e, b, c, f, d);
                                let w = (data.qdim(e) * data.qdim(f)).sqrt();
                                finv[ci * n + ri] = g * w;
                            }
                        }
                        let f = invert(n, &finv).ok_or(CategoryError::SingularF(a, b, c, d))?;
                        families.insert([a, b, c, d], FFamily { rows, cols, f, finv });
                    }
                }
            }
        }
        Ok(FCache { families })
    }

    pub fn family(&self, a: Label, b: Label, c: Label, d: Label) -> Option<&FFamily> {
        self.families.get(&[a, b, c, d])
    }

    /// `[F^{abc}_d]_{e,f}`; 0 when out of support.
    pub fn f_el(&self, a: Label, b: Label, c: Label, d: Label, e: Label, f: Label) -> Scalar {
        self.family(a, b, c, d).map_or(ZERO, |fam| fam.f_el(e, f))
    }

    /// `[(F^{abc}_d)^{-1}]_{f,e}`; 0 when out of support.
    pub fn finv_el(&self, a: Label, b: Label, c: Label, d: Label, f: Label, e: Label) -> Scalar {
        self.family(a, b, c, d).map_or(ZERO, |fam| fam.finv_el(f, e))
    }
}

/// Gauss-Jordan inversion with partial pivoting; `None` when singular.
/// `m` is row-major `n x n`; the result is the row-major inverse.
pub(crate) fn invert(n: usize, m: &[Scalar]) -> Option<Vec<Scalar>> {
    let mut a = m.to_vec();
    let mut inv = vec![ZERO; n * n];
    for i in 0..n {
        inv[i * n + i] = ONE;
    }
    for col in 0..n {
        let pivot = (col..n).max_by(|&r1, &r2| {
            a[r1 * n + col]
                .norm()
                .partial_cmp(&a[r2 * n + col].norm())
                .unwrap()
        })?;
        if a[pivot * n + col].norm() < 1e-300 {
            return None;
        }
        if pivot != col {
            for k in 0..n {
                a.swap(col * n + k, pivot * n + k);
                inv.swap(col * n + k, pivot * n + k);
            }
        }
        let p = a[col * n + col];
        for k in 0..n {
            a[col * n + k] /= p;
            inv[col * n + k] /= p;
        }
        for row in 0..n {
            if row == col {
                continue;
            }
            let factor = a[row * n + col];
            if factor == ZERO {
                continue;
            }
            for k in 0..n {
                let t = a[col * n + k];
                a[row * n + k] -= factor * t;
                let t = inv[col * n + k];
                inv[row * n + k] -= factor * t;
            }
        }
    }
    Some(inv)
}

/// Determinant of a row-major complex matrix via LU with partial pivoting.
pub(crate) fn determinant(n: usize, m: &[Scalar]) -> Scalar {
    let mut a = m.to_vec();
    let mut det = ONE;
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&r1, &r2| {
                a[r1 * n + col]
                    .norm()
                    .partial_cmp(&a[r2 * n + col].norm())
                    .unwrap()
            })
            .unwrap();
        if a[pivot * n + col].norm() == 0.0 {
            return ZERO;
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
            let factor = a[row * n + col] / p;
            for k in col..n {
                let t = a[col * n + k];
                a[row * n + k] -= factor * t;
            }
        }
    }
    det
}

/// Structural completeness: every admissible 6-tuple must have a stored entry.
pub fn completeness_check(data: &SphericalData) -> Result<(), CategoryError> {
    for key in data.admissible_sixj_keys() {
        if !data.sixj_table().contains_key(&key) {
            return Err(CategoryError::MissingSixj(key));
        }
    }
    Ok(())
}

/// Structural completeness of braided data: every admissible triple needs an R-symbol,
/// and the fusion ring must be commutative.
pub fn braided_completeness_check(data: &ModularData) -> Result<(), CategoryError> {
    let ring = &data.base.ring;
    for i in ring.labels() {
        for j in ring.labels() {
            for k in ring.labels() {
                if ring.adm(i, j, k) != ring.adm(j, i, k) {
                    return Err(CategoryError::NoncommutativeFusion(i, j, k));
                }
                if ring.adm(i, j, k) && !data.rsym_table().contains_key(&[i, j, k]) {
                    return Err(CategoryError::MissingRsym([i, j, k]));
                }
            }
        }
    }
    completeness_check(&data.base)
}

/// Convenience: `|a - b|` residual magnitude bounded check against a tolerance.
pub fn within(tol: &Tolerance, residual: f64) -> bool {
    residual <= tol.eps
}

//! Algebraic validators: fusion axioms, pentagon, orthonormality, hexagons.
//!
//! Violations are report entries, not failures; identity checkers return the
//! worst residual so callers can compare against their tolerance.

use std::fmt;

use super::{braided_completeness_check, completeness_check, CategoryError, FusionRing, Label, ModularData, SphericalData};
use crate::scalar::{Scalar, Tolerance, ZERO};

/// One violated fusion-ring axiom, with the indices where it fails.
#[derive(Debug, Clone, PartialEq)]
pub enum FusionViolation {
    /// `N^k_{0j} != δ_{jk}` or `N^k_{i0} != δ_{ik}`
    Unit { i: Label, j: Label },
    /// `N^0_{ij} != δ_{j, dual(i)}`
    Duality { i: Label, j: Label },
    /// `dual(dual(i)) != i`
    DualInvolution { i: Label },
    /// `dual(0) != 0`
    DualUnit,
    /// associativity sum mismatch at `(i, j, k, l)`
    Associativity { i: Label, j: Label, k: Label, l: Label },
}

impl fmt::Display for FusionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FusionViolation::Unit { i, j } => write!(f, "unit axiom violated at ({i}, {j})"),
            FusionViolation::Duality { i, j } => write!(f, "duality axiom violated at ({i}, {j})"),
            FusionViolation::DualInvolution { i } => write!(f, "dual map is not an involution at {i}"),
            FusionViolation::DualUnit => write!(f, "dual of the unit is not the unit"),
            FusionViolation::Associativity { i, j, k, l } => {
                write!(f, "associativity violated at ({i}, {j}, {k}, {l})")
            }
        }
    }
}

/// Checks the fusion-ring axioms; an empty report means the ring is valid.
pub fn validate_fusion_ring(ring: &FusionRing) -> Vec<FusionViolation> {
    let mut report = Vec::new();
    let r = ring.rank();
    for i in 0..r {
        // the Unit violation names the broken product: (0, i) or (i, 0)
        if (0..r).any(|j| ring.adm(0, i, j) != (i == j)) {
            report.push(FusionViolation::Unit { i: 0, j: i });
        }
        if (0..r).any(|j| ring.adm(i, 0, j) != (i == j)) && i != 0 {
            report.push(FusionViolation::Unit { i, j: 0 });
        }
        for j in 0..r {
            let dual_ok = ring.adm(i, j, 0) == (j == ring.dual(i));
            if !dual_ok {
                report.push(FusionViolation::Duality { i, j });
            }
        }
        if ring.dual(ring.dual(i)) != i {
            report.push(FusionViolation::DualInvolution { i });
        }
    }
    if ring.dual(0) != 0 {
        report.push(FusionViolation::DualUnit);
    }
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                for l in 0..r {
                    let lhs: usize = (0..r)
                        .filter(|&m| ring.adm(i, j, m) && ring.adm(m, k, l))
                        .count();
                    let rhs: usize = (0..r)
                        .filter(|&m| ring.adm(j, k, m) && ring.adm(i, m, l))
                        .count();
                    if lhs != rhs {
                        report.push(FusionViolation::Associativity { i, j, k, l });
                    }
                }
            }
        }
    }
    report
}

/// Max residual of the Biedenharn-Elliott identity in stored-G form.
///
/// Requires a structurally complete table (every admissible tuple present).
pub fn check_pentagon(data: &SphericalData) -> Result<f64, CategoryError> {
    completeness_check(data)?;
    let r = data.rank();
    let ring = &data.ring;
    let mut worst = 0f64;
    for a in 0..r {
        for b in 0..r {
            for f in 0..r {
                if !ring.adm(a, b, f) {
                    continue;
                }
                for c in 0..r {
                    for g in 0..r {
                        if !ring.adm(f, c, g) {
                            continue;
                        }
                        for d in 0..r {
                            for e in 0..r {
                                for k in 0..r {
                                    if !ring.adm(a, k, e) {
                                        continue;
                                    }
                                    for l in 0..r {
                                        let lhs = data.sixj(a, f, b, l, k, e)
                                            * data.sixj(f, g, c, d, l, e);
                                        let mut rhs = ZERO;
                                        for h in 0..r {
                                            let t = data.sixj(a, f, b, c, h, g)
                                                * data.sixj(a, g, h, d, k, e)
                                                * data.sixj(b, h, c, d, l, k);
                                            if t != ZERO {
                                                rhs += data.qdim(h) * t;
                                            }
                                        }
                                        worst = worst.max((lhs - rhs).norm());
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(worst)
}

/// Max residual of the orthonormality relation in stored-G form.
pub fn check_orthonormality(data: &SphericalData) -> Result<f64, CategoryError> {
    completeness_check(data)?;
    let r = data.rank();
    let ring = &data.ring;
    let mut worst = 0f64;
    for i in 0..r {
        for k in 0..r {
            for l in 0..r {
                for n in 0..r {
                    let js: Vec<Label> = (0..r)
                        .filter(|&j| ring.adm(i, k, j) && ring.adm(j, l, n))
                        .collect();
                    for &j in &js {
                        for &j2 in &js {
                            let mut s = ZERO;
                            for m in 0..r {
                                let t = data.sixj(i, j, k, l, m, n)
                                    * data.sixj(i, j2, k, l, m, n).conj();
                                if t != ZERO {
                                    s += data.qdim(m) * t;
                                }
                            }
                            let target = if j == j2 {
                                Scalar::new(1.0, 0.0) / data.qdim(j)
                            } else {
                                ZERO
                            };
                            worst = worst.max((s - target).norm());
                        }
                    }
                }
            }
        }
    }
    Ok(worst)
}

/// Max residual of the two hexagon identities (H1 and H2 of the module docs).
pub fn check_hexagon(data: &ModularData) -> Result<f64, CategoryError> {
    braided_completeness_check(data)?;
    let fc = data.base.f_cache()?;
    let r = data.rank();
    let ring = &data.base.ring;
    let mut worst = 0f64;
    for a in 0..r {
        for b in 0..r {
            for c in 0..r {
                for d in 0..r {
                    let fs: Vec<Label> = (0..r)
                        .filter(|&f| ring.adm(b, c, f) && ring.adm(a, f, d))
                        .collect();
                    for &f in &fs {
                        for &f2 in &fs {
                            let mut rhs1 = ZERO;
                            let mut rhs2 = ZERO;
                            for e in 0..r {
                                if !ring.adm(a, b, e) {
                                    continue;
                                }
                                for g in 0..r {
                                    if !ring.adm(a, c, g) {
                                        continue;
                                    }
                                    rhs1 += fc.finv_el(a, b, c, d, f, e)
                                        * data.rsym(a, b, e)
                                        * fc.f_el(b, a, c, d, e, g)
                                        * data.rsym(a, c, g)
                                        * fc.finv_el(b, c, a, d, g, f2);
                                    let re = data.rsym(a, b, e);
                                    let rg = data.rsym(a, c, g);
                                    if re != ZERO && rg != ZERO {
                                        rhs2 += fc.f_el(b, c, a, d, f, g) / rg
                                            * fc.finv_el(b, a, c, d, g, e)
                                            / re
                                            * fc.f_el(a, b, c, d, e, f2);
                                    }
                                }
                            }
                            let raf = data.rsym(a, f, d);
                            let lhs1 = if f == f2 { raf } else { ZERO };
                            worst = worst.max((lhs1 - rhs1).norm());
                            let lhs2 = if f == f2 && raf != ZERO {
                                Scalar::new(1.0, 0.0) / raf
                            } else {
                                ZERO
                            };
                            worst = worst.max((lhs2 - rhs2).norm());
                        }
                    }
                }
            }
        }
    }
    Ok(worst)
}

/// Max residual of the ribbon relation `twist(i) d_i = Σ_c d_c R^{ii}_c`
/// and the self-duality `twist(dual(i)) = twist(i)`.
pub fn check_ribbon(data: &ModularData) -> Result<f64, CategoryError> {
    braided_completeness_check(data)?;
    let mut worst = 0f64;
    for i in data.base.ring.labels() {
        let mut s = ZERO;
        for c in data.base.ring.labels() {
            if data.base.ring.adm(i, i, c) {
                s += data.base.qdim(c) * data.rsym(i, i, c);
            }
        }
        worst = worst.max((s - data.twist(i) * data.base.qdim(i)).norm());
        worst = worst.max((data.twist(data.base.ring.dual(i)) - data.twist(i)).norm());
    }
    Ok(worst)
}

/// Structural + numeric sanity of spherical data used by the CLI `validate`:
/// qdim(0)=1, qdim(dual)=qdim, qdim != 0, dim != 0.
pub fn spherical_sanity(data: &SphericalData, tol: &Tolerance) -> Vec<String> {
    let mut issues = Vec::new();
    if !tol.approx_eq(data.qdim(0), Scalar::new(1.0, 0.0)) {
        issues.push(format!("qdim(0) = {} but the unit must have dimension 1", data.qdim(0)));
    }
    for i in data.ring.labels() {
        if data.qdim(i).norm() <= tol.eps {
            issues.push(format!("qdim({i}) is zero"));
        }
        let d = data.ring.dual(i);
        if !tol.approx_eq(data.qdim(i), data.qdim(d)) {
            issues.push(format!("qdim({i}) != qdim(dual {d})"));
        }
    }
    if data.global_dim().norm() <= tol.eps {
        issues.push("global dimension is zero".to_string());
    }
    issues
}

//! Operations on modular data: S-matrix, Gauss sums, modularity test.

use super::{determinant, CategoryError, ModularData};
use crate::diagram::{evaluate_colored, hopf_link, DiagramError};
use crate::scalar::{Scalar, Tolerance, ZERO};

/// The (unnormalized) S-matrix `S_{i,j} = tr(c_{j,i} c_{i,j})`, computed by
/// evaluating the Hopf-link diagram for every pair of colors.
pub fn s_matrix(data: &ModularData) -> Result<Vec<Vec<Scalar>>, DiagramError> {
    let r = data.rank();
    let fc = data
        .base
        .f_cache()
        .map_err(|e| DiagramError::Category(e.to_string()))?;
    let template = hopf_link(Some(0), Some(0), 0, 0, true)
        .compile()
        .expect("hopf template compiles");
    let mut s = vec![vec![ZERO; r]; r];
    for i in 0..r {
        for j in 0..r {
            let mut coloring = std::collections::BTreeMap::new();
            coloring.insert(0, i);
            coloring.insert(1, j);
            s[i][j] = evaluate_colored(data, &fc, &template, &coloring)?;
        }
    }
    Ok(s)
}

/// The Gauss sums `Δ± = Σ_i twist(i)^{±1} dim(i)²`.
pub fn delta_pm(data: &ModularData) -> (Scalar, Scalar) {
    let mut dp = ZERO;
    let mut dm = ZERO;
    for i in data.base.ring.labels() {
        let d2 = data.base.qdim(i) * data.base.qdim(i);
        dp += data.twist(i) * d2;
        dm += d2 / data.twist(i);
    }
    (dp, dm)
}

/// A ribbon fusion category is modular when its S-matrix is invertible.
pub fn is_modular(data: &ModularData, tol: &Tolerance) -> Result<bool, DiagramError> {
    let s = s_matrix(data)?;
    let r = data.rank();
    let flat: Vec<Scalar> = s.iter().flatten().copied().collect();
    let det = determinant(r, &flat);
    Ok(det.norm() > tol.eps)
}

/// Residuals of the S-matrix postconditions: `S_{0,j} = qdim(j)` and symmetry.
pub fn s_matrix_sanity(data: &ModularData, s: &[Vec<Scalar>]) -> f64 {
    let r = data.rank();
    let mut worst = 0f64;
    for j in 0..r {
        worst = worst.max((s[0][j] - data.base.qdim(j)).norm());
        for i in 0..r {
            worst = worst.max((s[i][j] - s[j][i]).norm());
        }
    }
    worst
}

/// Residual of `Δ+ Δ- = dim`, which holds for modular data.
pub fn delta_product_residual(data: &ModularData) -> f64 {
    let (dp, dm) = delta_pm(data);
    (dp * dm - data.base.global_dim()).norm()
}

#[derive(Debug, thiserror::Error)]
pub enum ModularError {
    #[error(transparent)]
    Category(#[from] CategoryError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

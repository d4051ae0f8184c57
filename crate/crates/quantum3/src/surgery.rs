//! Surgery invariants: linking matrices with exact integer inertia, the
//! normalized surgery invariant `WRT`, its TQFT normalization `τ`, mirrors,
//! and the Verlinde dimension formula.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::category::{modular, ModularData};
use crate::diagram::{powi, evaluate_kirby, ComponentId, DiagramError, Event, MorseDiagram};
use crate::scalar::{Scalar, Tolerance, ONE};

#[derive(Debug, Error)]
pub enum SurgeryError {
    #[error("surgery component {0} must not carry a color")]
    ColoredSurgeryComponent(ComponentId),
    #[error("Wilson component {0} must carry a color")]
    UncoloredWilson(ComponentId),
    #[error("unknown surgery component {0}")]
    UnknownSurgeryComponent(ComponentId),
    #[error("category is not modular (S-matrix not invertible)")]
    NotModular,
    #[error("sqrt_dim² differs from the global dimension")]
    BadSquareRoot,
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// A framed link diagram whose listed components are surgered; the remaining
/// components are a colored Wilson link evaluated inside the surgered
/// manifold.
#[derive(Debug, Clone)]
pub struct SurgeryPresentation {
    pub diagram: MorseDiagram,
    pub surgery: BTreeSet<ComponentId>,
}

impl SurgeryPresentation {
    pub fn new(diagram: MorseDiagram, surgery: BTreeSet<ComponentId>) -> Result<Self, SurgeryError> {
        for (&c, comp) in diagram.components.iter() {
            if surgery.contains(&c) {
                if comp.color.is_some() {
                    return Err(SurgeryError::ColoredSurgeryComponent(c));
                }
            } else if comp.color.is_none() {
                return Err(SurgeryError::UncoloredWilson(c));
            }
        }
        for &c in &surgery {
            if !diagram.components.contains_key(&c) {
                return Err(SurgeryError::UnknownSurgeryComponent(c));
            }
        }
        Ok(SurgeryPresentation { diagram, surgery })
    }

    /// All-crossings-swapped, all-framings-negated presentation; surgery on
    /// the result yields the orientation-reversed manifold.
    pub fn mirror(&self) -> SurgeryPresentation {
        let mut diagram = self.diagram.clone();
        for comp in diagram.components.values_mut() {
            comp.framing = -comp.framing;
        }
        for slice in diagram.slices.iter_mut() {
            for ev in slice.iter_mut() {
                if let Event::Cross { positive, .. } = ev {
                    *positive = !*positive;
                }
            }
        }
        SurgeryPresentation { diagram, surgery: self.surgery.clone() }
    }
}

/// Symmetric integer matrix of framings (diagonal) and linking numbers.
#[derive(Debug, Clone, PartialEq)]
pub struct LinkingMatrix {
    pub components: Vec<ComponentId>,
    pub entries: Vec<Vec<i64>>,
}

/// Builds the linking matrix of the surgery components.
pub fn linking_matrix(p: &SurgeryPresentation) -> Result<LinkingMatrix, SurgeryError> {
    let compiled = p.diagram.compile()?;
    let comps: Vec<ComponentId> = p.surgery.iter().copied().collect();
    let m = comps.len();
    let mut entries = vec![vec![0i64; m]; m];
    for (i, &a) in comps.iter().enumerate() {
        entries[i][i] = p.diagram.components[&a].framing;
        for (j, &b) in comps.iter().enumerate().skip(i + 1) {
            let lk = compiled.linking_number(a, b)?;
            entries[i][j] = lk;
            entries[j][i] = lk;
        }
    }
    Ok(LinkingMatrix { components: comps, entries })
}

/// Exact inertia `(e_plus, e_minus, nullity)` of a symmetric integer matrix,
/// computed by rational symmetric congruence elimination (no floating point).
pub fn signature_counts(b: &LinkingMatrix) -> (usize, usize, usize) {
    let m = b.entries.len();
    let mut a: Vec<Vec<BigRational>> = (0..m)
        .map(|i| (0..m).map(|j| BigRational::from(BigInt::from(b.entries[i][j]))).collect())
        .collect();
    let mut alive: Vec<usize> = (0..m).collect();
    let (mut e_plus, mut e_minus, mut nullity) = (0usize, 0usize, 0usize);
    while !alive.is_empty() {
        // prefer a nonzero diagonal pivot
        if let Some(pos) = alive.iter().position(|&i| !a[i][i].is_zero()) {
            let p = alive[pos];
            if a[p][p].is_positive() {
                e_plus += 1;
            } else {
                e_minus += 1;
            }
            let pivot = a[p][p].clone();
            alive.remove(pos);
            for &i in &alive {
                let f = &a[i][p] / &pivot;
                if f.is_zero() {
                    continue;
                }
                for &j in &alive {
                    let sub = &f * &a[p][j];
                    a[i][j] = &a[i][j] - &sub;
                }
            }
            for &i in &alive {
                a[i][p] = BigRational::zero();
                a[p][i] = BigRational::zero();
            }
            continue;
        }
        // all live diagonals zero: hunt for an off-diagonal hyperbolic pair
        let mut found = None;
        'hunt: for (pi, &i) in alive.iter().enumerate() {
            for &j in alive.iter().skip(pi + 1) {
                if !a[i][j].is_zero() {
                    found = Some((i, j));
                    break 'hunt;
                }
            }
        }
        let Some((p, q)) = found else {
            nullity += alive.len();
            break;
        };
        // congruence by e_p' = e_p + e_q, e_q' = e_p - e_q turns the block
        // [[0, x], [x, 0]] into diag(2x, -2x)
        let others: Vec<usize> = alive.iter().copied().filter(|&k| k != p && k != q).collect();
        for &k in &others {
            let new_pk = &a[p][k] + &a[q][k];
            let new_qk = &a[p][k] - &a[q][k];
            a[p][k] = new_pk.clone();
            a[k][p] = new_pk;
            a[q][k] = new_qk.clone();
            a[k][q] = new_qk;
        }
        let x = a[p][q].clone();
        let two = BigRational::from(BigInt::from(2));
        a[p][p] = &two * &x;
        a[q][q] = -(&two * &x);
        a[p][q] = BigRational::zero();
        a[q][p] = BigRational::zero();
    }
    debug_assert_eq!(e_plus + e_minus + nullity, m);
    (e_plus, e_minus, nullity)
}

/// `WRT(M_L, K) = Δ+^{-e+} Δ-^{-e-} ⟨L(Ω) ∪ K⟩` for a modular category.
pub fn wrt(
    cat: &ModularData,
    p: &SurgeryPresentation,
    tol: &Tolerance,
    workers: usize,
) -> Result<Scalar, SurgeryError> {
    if !modular::is_modular(cat, tol)? {
        return Err(SurgeryError::NotModular);
    }
    wrt_unchecked(cat, p, workers)
}

/// `wrt` without the modularity precheck; used internally and by tests that
/// construct the category themselves.
pub fn wrt_unchecked(
    cat: &ModularData,
    p: &SurgeryPresentation,
    workers: usize,
) -> Result<Scalar, SurgeryError> {
    Ok(wrt_with_bracket(cat, p, workers)?.1)
}

/// Returns `(raw bracket, normalized wrt)`: the Kirby-colored link evaluation
/// before and after the `Δ±` normalization.
pub fn wrt_with_bracket(
    cat: &ModularData,
    p: &SurgeryPresentation,
    workers: usize,
) -> Result<(Scalar, Scalar), SurgeryError> {
    let lk = linking_matrix(p)?;
    let (e_plus, e_minus, _) = signature_counts(&lk);
    let bracket = if p.diagram.components.is_empty() {
        ONE
    } else {
        evaluate_kirby(cat, &p.diagram, &p.surgery, workers)?
    };
    let (dp, dm) = modular::delta_pm(cat);
    let normalized = bracket * powi(dp, -(e_plus as i64)) * powi(dm, -(e_minus as i64));
    Ok((bracket, normalized))
}

/// `τ(M) = 𝒹^{-b₁(M) - 1} WRT(M)` with `b₁` the nullity of the linking
/// matrix and `𝒹` a chosen square root of the global dimension.
pub fn tau(
    cat: &ModularData,
    sqrt_dim: Scalar,
    p: &SurgeryPresentation,
    tol: &Tolerance,
    workers: usize,
) -> Result<Scalar, SurgeryError> {
    if !tol.approx_eq(sqrt_dim * sqrt_dim, cat.base.global_dim()) {
        return Err(SurgeryError::BadSquareRoot);
    }
    let lk = linking_matrix(p)?;
    let (_, _, nullity) = signature_counts(&lk);
    let w = wrt(cat, p, tol, workers)?;
    Ok(w * powi(sqrt_dim, -(nullity as i64) - 1))
}

/// Verlinde dimension `dim(B)^{g-1} Σ_i dim(i)^{2-2g}` of the genus-`g`
/// surface block space.
pub fn verlinde_dim(cat: &ModularData, genus: u32) -> Scalar {
    let dim = cat.base.global_dim();
    let e = 2i64 - 2 * genus as i64;
    let sum: Scalar = (0..cat.rank()).map(|i| powi(cat.base.qdim(i), e)).sum();
    powi(dim, genus as i64 - 1) * sum
}

/// Free-function form of [`SurgeryPresentation::mirror`].
pub fn mirror(p: &SurgeryPresentation) -> SurgeryPresentation {
    p.mirror()
}

/// Empty-link presentation of the 3-sphere.
pub fn s3_presentation() -> SurgeryPresentation {
    SurgeryPresentation {
        diagram: MorseDiagram { components: Default::default(), slices: Vec::new() },
        surgery: BTreeSet::new(),
    }
}

/// Single unknot with the given framing; surgery yields a lens space
/// (or S¹×S² at framing 0, S³ at framing ±1).
pub fn unknot_presentation(framing: i64) -> SurgeryPresentation {
    let diagram = crate::diagram::unknot(None, framing);
    SurgeryPresentation::new(diagram, BTreeSet::from([0])).expect("valid presentation")
}

//! The state-sum invariant: direct enumeration over admissible edge colorings
//! and tensor-network contraction with variable-elimination planning.
//!
//! The sum computed is `dim(C)^{-v} Σ_s Π_e dim(s(e)) Π_Δ G^{±}(Δ, s)` where
//! `v` counts vertex classes, states run over edge-class colorings admissible
//! on every triangle class, and each tetrahedron contributes the stored
//! 6j-symbol `G(s(01), s(02), s(12), s(23), s(13), s(03))` — conjugated when
//! its orientation sign is negative.

use thiserror::Error;

use crate::category::{completeness_check, CategoryError, SphericalData};
use crate::diagram::powi;
use crate::scalar::{Scalar, ONE, ZERO};
use crate::triangulation::Triangulation;

#[derive(Debug, Error)]
pub enum StateSumError {
    #[error("admissible state count exceeds the cap {cap}; use contraction instead")]
    StateCapExceeded { cap: u64 },
    #[error("intermediate tensor over {arity} variables would have {entries} entries, beyond the cap {cap}; offending elimination at variable {variable}")]
    WidthCapExceeded { variable: usize, arity: usize, entries: u64, cap: u64 },
    #[error("elimination order is not a permutation of the network variables")]
    BadEliminationOrder,
    #[error(transparent)]
    Category(#[from] CategoryError),
}

/// An edge-class coloring of a triangulation.
#[derive(Debug, Clone, PartialEq)]
pub struct State {
    pub assignment: Vec<usize>,
}

/// Hypergraph of per-tetrahedron 6j factors over edge-class variables.
#[derive(Debug, Clone)]
pub struct EdgeTensorNetwork {
    pub rank: usize,
    pub n_vars: usize,
    pub factors: Vec<Factor>,
    /// unary weight folded in when any variable is summed out: `label ↦ dim(label)`
    pub weights: Vec<Scalar>,
    /// number of vertex classes (exponent of the `dim(C)^{-v}` prefactor)
    pub n_vertices: usize,
    pub global_dim: Scalar,
}

/// One dense factor over a sorted list of distinct variables.
#[derive(Debug, Clone)]
pub struct Factor {
    pub vars: Vec<usize>,
    /// row-major over `rank^vars.len()` entries, first variable slowest
    pub data: Vec<Scalar>,
}

/// Contraction strategies for [`tv_contract`] and [`elimination_order`].
#[derive(Debug, Clone, PartialEq)]
pub enum Strategy {
    MinDegree,
    MinFill,
    Given(Vec<usize>),
}

/// Per-triangle admissibility data `(e01, e12, e02)` plus per-tet lookups.
fn triangle_constraints(tri: &Triangulation) -> Vec<(usize, usize, usize)> {
    tri.triangle_edge_classes()
}

/// The stored 6j value of tetrahedron `t` under `labels`, with the
/// orientation sign applied (negative sign takes the conjugate).
fn tet_factor(cat: &SphericalData, tri: &Triangulation, t: usize, labels: &[usize]) -> Scalar {
    let e = |le: usize| labels[tri.edge_class(t, le)];
    // local edges 01,02,03,12,13,23 -> slots (i, j, n, k, m, l)
    let g = cat.sixj(e(0), e(1), e(3), e(5), e(4), e(2));
    if tri.sign(t) > 0 {
        g
    } else {
        g.conj()
    }
}

/// Shared enumeration core: backtracks over edge classes, pruning on the
/// triangle constraints whose last edge just got assigned.
fn enumerate_inner(
    cat: &SphericalData,
    tri: &Triangulation,
    cap: u64,
) -> Result<(Scalar, u64), StateSumError> {
    struct Ctx<'a> {
        cat: &'a SphericalData,
        tri: &'a Triangulation,
        cons_by_edge: Vec<Vec<(usize, usize, usize)>>,
        tets_by_edge: Vec<Vec<usize>>,
        labels: Vec<usize>,
        total: Scalar,
        count: u64,
        cap: u64,
    }
    fn rec(ctx: &mut Ctx, depth: usize, weight: Scalar) -> Result<(), StateSumError> {
        if depth == ctx.labels.len() {
            ctx.count += 1;
            if ctx.count > ctx.cap {
                return Err(StateSumError::StateCapExceeded { cap: ctx.cap });
            }
            ctx.total += weight;
            return Ok(());
        }
        for lab in 0..ctx.cat.rank() {
            ctx.labels[depth] = lab;
            let ok = ctx.cons_by_edge[depth].iter().all(|&(a, b, c)| {
                ctx.cat
                    .ring
                    .adm(ctx.labels[a], ctx.labels[b], ctx.labels[c])
            });
            if !ok {
                continue;
            }
            let mut w = weight * ctx.cat.qdim(lab);
            for &t in &ctx.tets_by_edge[depth] {
                w *= tet_factor(ctx.cat, ctx.tri, t, &ctx.labels);
            }
            rec(ctx, depth + 1, w)?;
        }
        Ok(())
    }
    let n_edges = tri.n_edge_classes();
    let mut cons_by_edge: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); n_edges];
    for c in triangle_constraints(tri) {
        let last = c.0.max(c.1).max(c.2);
        cons_by_edge[last].push(c);
    }
    let mut tets_by_edge: Vec<Vec<usize>> = vec![Vec::new(); n_edges];
    for t in 0..tri.n_tets() {
        let last = (0..6).map(|e| tri.edge_class(t, e)).max().unwrap();
        tets_by_edge[last].push(t);
    }
    let mut ctx = Ctx {
        cat,
        tri,
        cons_by_edge,
        tets_by_edge,
        labels: vec![0usize; n_edges],
        total: ZERO,
        count: 0,
        cap,
    };
    rec(&mut ctx, 0, ONE)?;
    Ok((ctx.total, ctx.count))
}

/// Direct state enumeration. Errors out once the admissible state count
/// passes `cap_states`.
pub fn tv_enumerate(
    cat: &SphericalData,
    tri: &Triangulation,
    cap_states: u64,
) -> Result<(Scalar, u64), StateSumError> {
    completeness_check(cat)?;
    let (total, count) = enumerate_inner(cat, tri, cap_states)?;
    let dim = cat.global_dim();
    let v = tri.n_vertices() as i64;
    Ok((total * powi(dim, -v), count))
}

/// Builds the edge tensor network whose full contraction reproduces the
/// enumeration value.
pub fn build_network(cat: &SphericalData, tri: &Triangulation) -> Result<EdgeTensorNetwork, StateSumError> {
    completeness_check(cat)?;
    let rank = cat.rank();
    let n_vars = tri.n_edge_classes();
    let mut factors = Vec::with_capacity(tri.n_tets());
    let mut labels = vec![0usize; n_vars];
    for t in 0..tri.n_tets() {
        let mut vars: Vec<usize> = (0..6).map(|e| tri.edge_class(t, e)).collect();
        vars.sort_unstable();
        vars.dedup();
        let k = vars.len();
        let mut data = vec![ZERO; rank.pow(k as u32)];
        for (idx, slot) in data.iter_mut().enumerate() {
            let mut rem = idx;
            for q in (0..k).rev() {
                labels[vars[q]] = rem % rank;
                rem /= rank;
            }
            *slot = tet_factor(cat, tri, t, &labels);
        }
        factors.push(Factor { vars, data });
    }
    let weights: Vec<Scalar> = (0..rank).map(|i| cat.qdim(i)).collect();
    Ok(EdgeTensorNetwork {
        rank,
        n_vars,
        factors,
        weights,
        n_vertices: tri.n_vertices(),
        global_dim: cat.global_dim(),
    })
}

/// Elimination order for the network under a strategy, with the induced
/// width (maximum intermediate tensor arity, counting the variable being
/// summed).
pub fn elimination_order(
    net: &EdgeTensorNetwork,
    strategy: &Strategy,
) -> Result<(Vec<usize>, usize), StateSumError> {
    if let Strategy::Given(order) = strategy {
        let mut seen = vec![false; net.n_vars];
        if order.len() != net.n_vars {
            return Err(StateSumError::BadEliminationOrder);
        }
        for &v in order {
            if v >= net.n_vars || seen[v] {
                return Err(StateSumError::BadEliminationOrder);
            }
            seen[v] = true;
        }
        let width = simulate_width(net, order);
        return Ok((order.clone(), width));
    }
    // primal graph
    let mut adj: Vec<std::collections::BTreeSet<usize>> =
        vec![std::collections::BTreeSet::new(); net.n_vars];
    for f in &net.factors {
        for (qi, &a) in f.vars.iter().enumerate() {
            for &b in f.vars.iter().skip(qi + 1) {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
    }
    let mut alive: Vec<bool> = vec![true; net.n_vars];
    let mut order = Vec::with_capacity(net.n_vars);
    let mut width = 0usize;
    for _ in 0..net.n_vars {
        let pick = (0..net.n_vars)
            .filter(|&v| alive[v])
            .min_by_key(|&v| {
                let cost = match strategy {
                    Strategy::MinDegree => adj[v].len(),
                    Strategy::MinFill => {
                        let ns: Vec<usize> = adj[v].iter().copied().collect();
                        let mut fill = 0usize;
                        for (qi, &a) in ns.iter().enumerate() {
                            for &b in ns.iter().skip(qi + 1) {
                                if !adj[a].contains(&b) {
                                    fill += 1;
                                }
                            }
                        }
                        fill
                    }
                    Strategy::Given(_) => unreachable!(),
                };
                (cost, v)
            })
            .expect("a live variable remains");
        let ns: Vec<usize> = adj[pick].iter().copied().collect();
        width = width.max(ns.len() + 1);
        for (qi, &a) in ns.iter().enumerate() {
            adj[a].remove(&pick);
            for &b in ns.iter().skip(qi + 1) {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        adj[pick].clear();
        alive[pick] = false;
        order.push(pick);
    }
    Ok((order, width))
}

fn simulate_width(net: &EdgeTensorNetwork, order: &[usize]) -> usize {
    let mut scopes: Vec<Vec<usize>> = net.factors.iter().map(|f| f.vars.clone()).collect();
    let mut width = 0usize;
    for &v in order {
        let mut merged: std::collections::BTreeSet<usize> = std::collections::BTreeSet::new();
        let mut rest = Vec::new();
        for s in scopes.into_iter() {
            if s.contains(&v) {
                merged.extend(s);
            } else {
                rest.push(s);
            }
        }
        if merged.is_empty() {
            merged.insert(v);
        }
        width = width.max(merged.len());
        merged.remove(&v);
        if !merged.is_empty() {
            rest.push(merged.into_iter().collect());
        }
        scopes = rest;
    }
    width
}

/// Dense intermediate tensor over a sorted variable scope.
struct Tensor {
    vars: Vec<usize>,
    data: Vec<Scalar>,
}

/// Contraction outcome: value plus plan statistics.
#[derive(Debug, Clone)]
pub struct ContractionResult {
    pub value: Scalar,
    pub width: usize,
    pub order: Vec<usize>,
}

/// Contracts the network fully along an elimination order, summing each
/// variable out with its `dim` weight, then applies the global prefactor.
pub fn contract_network(
    net: &EdgeTensorNetwork,
    order: &[usize],
    cap_entries: u64,
) -> Result<ContractionResult, StateSumError> {
    let rank = net.rank;
    let mut tensors: Vec<Tensor> = net
        .factors
        .iter()
        .map(|f| Tensor { vars: f.vars.clone(), data: f.data.clone() })
        .collect();
    let mut scalar = ONE;
    let mut width = 0usize;
    for &v in order {
        let (bucket, rest): (Vec<Tensor>, Vec<Tensor>) =
            tensors.into_iter().partition(|t| t.vars.contains(&v));
        tensors = rest;
        let mut scope: Vec<usize> = bucket.iter().flat_map(|t| t.vars.iter().copied()).collect();
        scope.push(v);
        scope.sort_unstable();
        scope.dedup();
        width = width.max(scope.len());
        let entries = (rank as u64).checked_pow(scope.len() as u32).unwrap_or(u64::MAX);
        if entries > cap_entries {
            return Err(StateSumError::WidthCapExceeded {
                variable: v,
                arity: scope.len(),
                entries,
                cap: cap_entries,
            });
        }
        let out_vars: Vec<usize> = scope.iter().copied().filter(|&u| u != v).collect();
        let v_pos = scope.iter().position(|&u| u == v).unwrap();
        // strides of each bucket tensor w.r.t. the merged scope
        let plans: Vec<(Vec<usize>, &Tensor)> = bucket
            .iter()
            .map(|t| {
                let pos: Vec<usize> = t
                    .vars
                    .iter()
                    .map(|tv| scope.iter().position(|&u| u == *tv).unwrap())
                    .collect();
                (pos, t)
            })
            .collect();
        let out_len = rank.pow(out_vars.len() as u32);
        let mut data = vec![ZERO; out_len];
        let mut assign = vec![0usize; scope.len()];
        let total = rank.pow(scope.len() as u32);
        for flat in 0..total {
            // decode assignment (first variable slowest)
            let mut rem = flat;
            for q in (0..scope.len()).rev() {
                assign[q] = rem % rank;
                rem /= rank;
            }
            let mut prod = net.weights[assign[v_pos]];
            for (pos, t) in &plans {
                let mut idx = 0usize;
                for &p in pos {
                    idx = idx * rank + assign[p];
                }
                let x = t.data[idx];
                if x == ZERO {
                    prod = ZERO;
                    break;
                }
                prod *= x;
            }
            if prod == ZERO {
                continue;
            }
            let mut out_idx = 0usize;
            for (q, _) in scope.iter().enumerate() {
                if q != v_pos {
                    out_idx = out_idx * rank + assign[q];
                }
            }
            data[out_idx] += prod;
        }
        if out_vars.is_empty() {
            scalar *= data[0];
        } else {
            tensors.push(Tensor { vars: out_vars, data });
        }
    }
    for t in tensors {
        debug_assert!(t.vars.is_empty());
        scalar *= t.data[0];
    }
    let value = scalar * powi(net.global_dim, -(net.n_vertices as i64));
    Ok(ContractionResult { value, width, order: order.to_vec() })
}

/// The state-sum invariant by network contraction under a strategy.
pub fn tv_contract(
    cat: &SphericalData,
    tri: &Triangulation,
    strategy: &Strategy,
    cap_entries: u64,
) -> Result<ContractionResult, StateSumError> {
    let net = build_network(cat, tri)?;
    let (order, _) = elimination_order(&net, strategy)?;
    contract_network(&net, &order, cap_entries)
}

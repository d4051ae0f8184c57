//! Quantum invariants of closed oriented 3-manifolds from fusion category data.
//!
//! The crate computes the Turaev-Viro-Barrett-Westbury state-sum invariant
//! from spherical fusion category data (multiplicity-free, scalar 6j-symbols)
//! and the Witten-Reshetikhin-Turaev surgery invariant from modular category
//! data, and cross-checks the two through the identity
//! `|M| = τ(M) · τ(-M)` for modular inputs.
//!
//! Module map:
//! - [`category`] — fusion rings, spherical/modular data, algebraic validators
//!   (pentagon, orthonormality, hexagons), S-matrix, Gauss sums. The module
//!   docs fix all index conventions.
//! - [`builtins`] — `vec_zn`, `fibonacci`, `ising` data sets.
//! - [`diagram`] — Morse-diagram evaluation of colored framed oriented links
//!   (the graphical calculus engine), including Kirby-color sums.
//! - [`triangulation`] — ordered generalized Δ-complexes of closed oriented
//!   3-manifolds, Pachner moves, builtin triangulations.
//! - [`state_sum`] — the state-sum invariant by direct enumeration and by
//!   tensor-network contraction with variable-elimination planning.
//! - [`surgery`] — linking matrices, exact integer inertia, `WRT`, `τ`, and
//!   the Verlinde dimension formula.
//! - [`io`] — JSON file formats for category data, triangulations, diagrams,
//!   and surgery presentations.
//! - [`cli`] — the `quantum3` command-line interface.
//!
//! Start with the `examples/` directory: each example is a runnable tour of
//! one capability (`cargo run --release --example tv_golden_values`, ...).

pub mod builtins;
pub mod category;
pub mod cli;
pub mod config;
pub mod diagram;
pub mod io;
pub mod state_sum;
pub mod surgery;
pub mod triangulation;

mod scalar;

pub use scalar::{real, scalar, Scalar, Tolerance};

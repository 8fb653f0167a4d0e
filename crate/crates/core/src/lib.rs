//! Exact Kronecker coefficients of the symmetric group.
//!
//! The fast path covers `g_{μ,ν}^λ` with `ℓ(μ), ℓ(ν) ≤ 2` and `ℓ(λ) ≤ 3`,
//! counted as lattice points. A character-table oracle handles everything
//! else and cross-checks the fast path. On top of both sit stretching
//! quasipolynomials `N ↦ g_{Nμ,Nν}^{Nλ}` and searches for triples where they
//! misbehave.

pub mod engine;
pub mod error;
pub mod hunt;
pub mod kron2row;
pub mod oracle;
pub mod partition;
pub mod poly;
pub mod quasi;
pub mod reduced;
pub mod selftest;
pub mod stretch;

/// Multiplicities: Kronecker, Kostka and Littlewood–Richardson coefficients.
pub type Coeff = u128;

pub use engine::{kron_auto, kron_with, Method};
pub use error::{Error, Result};
pub use kron2row::{kron_two_row, reduce_by_determinants, Reduction};
pub use oracle::{kostka, lr_coeff, Oracle};
pub use partition::{KronTriple, Partition};
pub use poly::{Polynomial, Rational};
pub use quasi::{QuasiPolynomial, ShapeDecomposition};
pub use reduced::{kron_from_reduced_2x2, rkron_one_row, rkron_stabilized, ReducedIndex};
pub use stretch::{
    analyze_triple, AnalysisConfig, HypothesisReport, Index, SaturationDomain, StretchSamples,
};

//! Discrete Morse theory for Kozlov's field `M` on `Ω_n` and its extension
//! `W` on `CΩ_n`.
//!
//! [`MorseComplex`] classifies every cell, projects cells onto critical cells
//! along upper gradient paths (`psi`), flows critical cells down to cycles
//! (`phi`), lifts critical duals to cocycles and assembles the Morse
//! coboundary. All multiplicities are taken mod 2.

mod acyclic;
mod basis;
mod engine;
mod field;
mod lambda;

pub use acyclic::{check_acyclic, validate_matching, AcyclicityVerdict, MatchingReport};
pub use basis::{critical_cells, MorseBasis};
pub use engine::{MorseComplex, PhiFlow};
pub use field::{
    alpha_beta, classify_m, classify_w, is_kozlov_critical, AlphaBeta, CellStatus, KozlovField, StatusKind,
    VectorField, WField,
};
pub use lambda::{lambda_endpoint, lambda_path, noncollapsible_facets, unique_noncollapsible_face, LambdaPath};

//! Cells of `Ω_n` and `CΩ_n`, their integer codes and the mod-2 boundary.
//!
//! Both spaces are cyclic arrangements of "vertex" blocks and "edge" blocks:
//! `Ω_n` has blocks `A, B, C, D` around a two-vertex circle, `CΩ_n` has
//! `x1, y1, …, x4, y4` around the 4-cycle whose vertices 3 and 4 are anchored.
//! An element in an edge block sits on that edge; its two faces move it to
//! the edge's endpoints.

mod cell;
mod chain;
mod comega;
mod complex;
mod omega;

pub use cell::{Cell, CellId, GroundParams, Space};
pub use chain::{boundary, chain_boundary, Chain};
pub use comega::CCell;
pub use complex::{cell_counts, enumerate_cells, CellComplex};
pub use omega::OmegaCell;

//! Exact GF(2) computations on the anchored configuration spaces of a circle
//! with two anchored points.
//!
//! The crate builds the cubical complex `Ω_n` (cells `(A, B, C, D)`) and its
//! cubical-set refinement `CΩ_n` (cells `(x1, y1, …, x4, y4)`), runs discrete
//! Morse theory with Kozlov's field `M` and its extension `W`, computes cup
//! products both by closed forms and by a brute-force cochain oracle, and
//! derives certified bounds for the (higher) topological complexity.
//!
//! Module map:
//!
//! * [`gf2`]: bit-packed vectors and matrices over the two-element field.
//! * [`cubical`]: cells, encoding, enumeration, boundary and coboundary.
//! * [`morse`]: vector fields, critical cells, gradient paths, Morse cochains.
//! * [`cup`]: cochain cup product, the cohomology ring and the Betti oracle.
//! * [`tc`]: zero-divisor products in tensor powers and TC / TC_s bounds.

pub mod cubical;
pub mod cup;
pub mod error;
pub mod gf2;
pub mod mask;
pub mod morse;
pub mod tc;

pub use cubical::{CCell, Cell, CellComplex, CellId, Chain, GroundParams, OmegaCell, Space};
pub use error::{Error, Result};
pub use gf2::{GF2Matrix, GF2Vector};
pub use mask::SubsetMask;

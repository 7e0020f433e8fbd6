//! Cup products on `CΩ_n` with `Z_2` coefficients, from single cubes up to
//! the multiplicative structure of the critical basis.

mod cells;
mod cochain;
mod generators;
mod oracle;
mod ring;

pub use cells::{cup_cells, splits};
pub use cochain::{coboundary, cup_cochains, Cochain};
pub use generators::{factorize, product_of_1cells};
pub use oracle::{betti_oracle, BettiReport, ORACLE_MAX_N};
pub use ring::{CohomologyClass, CupRing, RingTable};

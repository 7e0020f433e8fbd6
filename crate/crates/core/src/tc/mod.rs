//! Zero-divisor cup-length bounds for the (higher) topological complexity
//! of `CΩ_n`, computed in the tensor powers of the critical basis.

mod bounds;
mod cover;
mod tensor;
mod verify;

pub use bounds::{tc_bounds, tcs_bounds, tcs_bounds_for_j, tcs_bounds_with, BoundsReport, ZeroDivisorRoute, MAX_S};
pub use cover::{build_cover_sets, CoverSets};
pub use tensor::{
    diagonal_image, tensor_multiply, zero_divisor, zero_divisor_product, TensorClass, TensorTerm, ZeroDivisorProduct,
};
pub use verify::certificate_coefficient;

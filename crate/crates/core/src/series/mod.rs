//! Truncated series arithmetic in the tower `τ ⊂ q ⊂ u`.

mod kernel;
mod product;
mod qlaurent;
mod truncated;

pub use kernel::{
    divide_by_kernel, extract_kernel_basis, reconstruct_from_basis, KernelRing, RingLaurent,
};
pub use product::{expand_product, ProductFactor, Sign};
pub use qlaurent::{Monomial, QLaurent};
pub use truncated::UTruncatedSeries;

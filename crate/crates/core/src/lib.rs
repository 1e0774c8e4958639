//! Exact computations in the split octonions and the Albert algebra H₃(O).
//!
//! Everything is computed over ℚ(√3) with arbitrary-precision rationals, so
//! every identity check is an exact equality.

pub mod albert;
pub mod composition;
pub mod construct;
pub mod error;
pub mod linalg;
pub mod sample;
pub mod scalar;
pub mod structure;

pub use albert::{AlbertElem, LinOp27};
pub use composition::{Oct, Quat, StandardBasis};
pub use error::{AlgebraError, Result};
pub use linalg::Subspace;
pub use scalar::{Rat, Scalar};

//! Split quaternions, split octonions and the standard octonion basis.

pub mod identities;
pub mod oct;
pub mod quat;
pub mod vdbs;

pub use oct::Oct;
pub use quat::Quat;
pub use vdbs::{vdbs_build, vdbs_verify, StandardBasis, VdbsReport};

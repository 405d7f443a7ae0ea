//! Command implementations behind the `nglab` binary, shared with the
//! acceptance tests.

pub mod analyze;
pub mod enumerate;
pub mod tables;
pub mod verify;

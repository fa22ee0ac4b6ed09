//! Test-support crate: deterministic corpus generators and brute-force
//! oracles. Deliberately independent of the main library so the oracles
//! cannot inherit its bugs.

pub mod desk;
pub mod gen;
pub mod oracle;

//! Command-line front end for `poisson-core`.

pub mod input;
pub mod oracle;
pub mod report;
pub mod table;

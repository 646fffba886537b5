//! Command-line front end for `gmcone`: seeded verification suites, pairing
//! and convergence tables, and SVG figures.

pub mod config;
pub mod converge;
pub mod pair;
pub mod parse;
pub mod plot;
pub mod report;
pub mod sampling;
pub mod suites;

//! Lower bounds on the weighted maximum cut, the cuts that attain them,
//! and exact solvers for small graphs.

pub mod cut;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod spanning;
pub mod bounds;
pub mod coloring;
pub mod subcubic;
pub mod oracle;
pub mod cli;

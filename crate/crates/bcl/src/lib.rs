//! Command line front end for the Boolean graph toolkit: spec strings,
//! JSON and DOT formats, property reports and the regression table.

pub mod check;
pub mod cli;
mod error;
pub mod io;
pub mod report;
pub mod spec;

pub use error::CliError;

//! Command-line front end for `lieface`: algebra files, table rendering and
//! the published-value check.

pub mod algebra_file;
pub mod app;
pub mod check;
pub mod fixtures;
pub mod render;

pub use app::run;

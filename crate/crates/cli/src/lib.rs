//! Command-line front end: expression parsing, JSON encoding and the
//! `quatpoly` command dispatcher.

mod app;
pub mod expr;
pub mod json;

pub use app::*;

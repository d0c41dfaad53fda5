//! Command-line front end: expression parser, evaluation and commands.

mod commands;
mod eval;
mod parse;

pub use commands::run;
pub use eval::{expr_to_poly, expr_to_words, write_term};
pub use parse::{parse_expr, Base, Expr, Factor, ParseError, Sign, Term};

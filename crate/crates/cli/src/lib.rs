//! Command-line front end for the `hopfcalc-core` kernel.

pub mod checks;
pub mod commands;
pub mod expr;
pub mod output;
pub mod surface;

pub use commands::{run_command, Cli, VERB_TABLE};
pub use expr::{parse_expr, parse_tensor, parse_value, ExprError, ParseError, Value};
pub use output::{format_lc, Format};
pub use surface::{Algebra, AlgebraParams, Surface, ALGEBRA_NAMES};

//! Text formats: the polynomial grammar and problem files.

mod parser;
mod problem;

pub use parser::{parse_polynomial, parse_vector};
pub use problem::ProblemFile;

//! Concrete syntax for signatures and elements.
//!
//! Elements follow the grammar
//!
//! ```text
//! element  := term (("+" | "-") term)*
//! term     := [rational "*"] factor ("*" factor)* ["D" index]
//! factor   := "e^{" integer "*" var ["^" positive-integer] "}" | var ["^" integer]
//! var      := ("x" | "y") index
//! rational := integer ["/" positive-integer]
//! ```
//!
//! with whitespace ignored. A bare rational is a constant and `D1` alone is
//! `∂_1`. The printer emits the canonical form, which parses back to the
//! same element.

mod parse;
mod print;
mod signature;

pub use parse::parse_element;
pub use print::{print_element, print_terms};

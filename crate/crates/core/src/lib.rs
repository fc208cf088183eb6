//! Exact computer algebra for Lie algebras of exponential-polynomial vector
//! fields and Poisson brackets.
//!
//! The crate covers generalized Witt algebras `W(n)`, `W(n, i*)`, `W+(1)`,
//! the divergence-free algebras `S(n)`, and Poisson algebras `H(n)`,
//! `H(n,n)`, `H(n,0)`, `H(n,n,i*)` together with their centerless quotients.
//! Coefficients are arbitrary-precision rationals throughout.
//!
//! * [`element`] and [`monomial`]: canonical sparse elements, arithmetic and
//!   partial derivatives.
//! * [`bracket`]: Witt and Poisson brackets, Hamiltonian fields, divergence.
//! * [`grading`]: grade keys, homogeneous decomposition, monomial orders
//!   and element statistics.
//! * [`structure`]: centers, ad-diagonal elements, derivation checks and
//!   the `W+(1)` automorphism test on truncated windows.
//! * [`ideal`]: the constructive ideal-generation tactics and truncated
//!   ideal saturation.
//! * [`text`], [`json`], [`cli`]: concrete syntax, JSON reports and the
//!   command-line front end.

pub mod bracket;
pub mod cli;
pub mod element;
pub mod error;
pub mod grading;
pub mod ideal;
pub mod json;
pub mod linalg;
pub mod monomial;
pub mod random;
pub mod signature;
pub mod structure;
pub mod text;
pub mod window;

pub use bracket::{
    bracket, divergence, hamiltonian_field, is_divergence_free, jacobi_residual, poisson_bracket,
    witt_bracket,
};
pub use element::Element;
pub use error::{Error, Result};
pub use monomial::{MonoKey, Monomial};
pub use signature::{AlgebraSignature, BracketKind, ExpSlot, Family, PolyDomain, Side, Var};
pub use text::{parse_element, print_element};
pub use window::TruncationCaps;

/// Exact coefficient field.
pub type Rational = num_rational::BigRational;

//! Exact computation with the C*-algebras of the ax+b-semigroup over `N`
//! and its extension by the flip over `Z`.
//!
//! * [`word`]: normal forms of words, with the gauge expectations and the trace.
//! * [`oracle`]: the representation on `ℓ²(Z)` as partial affine maps.
//! * [`profinite`]: residue towers for `Ẑ` and the ax+b action on finite adeles.
//! * [`ktheory`]: presented abelian groups and the Pimsner-Voiculescu step.
//! * [`suites`]: bounded verification runs shared by the tests and the CLI.
//!
//! ```
//! use axb_core::word::trace_tau;
//! use axb_core::{Algebra, Mode};
//!
//! let q = Algebra::new(Mode::Z);
//! let x = q.parse("f u f").unwrap();
//! assert_eq!(x, q.parse("U").unwrap());
//! assert_eq!(trace_tau(&q.parse("s7 S7").unwrap()).to_string(), "1/7");
//! ```

pub mod arith;
pub mod error;
pub mod ktheory;
pub mod oracle;
pub mod profinite;
pub mod suites;
pub mod word;

pub use error::{Error, Result};
pub use word::{Algebra, Coeff, Letter, Mode, Monomial, NormalFormElement};

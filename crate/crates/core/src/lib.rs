//! Graded weight posets `Δ(1)` coming from Z-gradings of the finite-dimensional
//! simple Lie algebras.
//!
//! The crate builds root systems from their Cartan data, cuts out the posets
//! `[α_i]` (1-standard gradings) and the extra-special `Δ(1)`, and provides the
//! enumerative machinery needed to study them: lower ideals and antichains,
//! `M`- and `N`-polynomials, the Kostant–Macdonald rank product, order-reversing
//! involutions coming from longest Weyl group elements, rowmotion orbits and the
//! cyclic sieving criterion.
//!
//! Everything is exact integer arithmetic; results are deterministic.

pub mod error;
pub mod gradings;
pub mod patterns;
pub mod involution;
pub mod polynomial;
pub mod poset;
pub mod render;
pub mod root_system;
pub mod rowmotion;
pub mod verify;

pub use error::{Error, Result};
pub use gradings::{delta1, delta1_extra_special, invariants_report, Delta1, GradingKind, InvariantsReport};
pub use involution::Involution;
pub use polynomial::{IntPolynomial, RationalProduct};
pub use poset::{ElementSet, GradedPoset, Limits};
pub use root_system::{Family, ReflectionWord, Root, RootSystem};

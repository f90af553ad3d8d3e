//! Exact computation in twisted Yetter-Drinfeld categories over finite
//! abelian groups.
//!
//! The crate is layered bottom-up:
//!
//! * [`scalars`] — exact cyclotomic arithmetic (no floating point anywhere);
//! * [`linalg`] — exact matrices, reduced row echelon form, kernels;
//! * [`groups`] — finite abelian groups, subgroups, Smith normal form,
//!   linear congruence solving;
//! * [`cocycles`] — normalized 3-cocycle representatives, evaluation,
//!   verification, the induced 2-cochain calculus, and quasi-characters;
//! * [`yd`] — twisted Yetter-Drinfeld modules: construction, verification,
//!   simple-module classification, tensor/dual, support restriction, cover
//!   lifting, twisting, and diagonalization;
//! * [`nichols`] — braided symmetrizers, Hilbert series data, generalized
//!   Dynkin diagrams, and finiteness decisions;
//! * [`coboundary`] — deciding coboundary-ness of a 3-cocycle and solving
//!   for an explicit, pointwise-verified 2-cochain antiderivative;
//! * [`boson`] — truncated Nichols algebras and their biproducts with the
//!   group algebra, plus coquasi-Hopf axiom checks;
//! * [`fixtures`] — named built-in example modules used by the CLI.

#![warn(missing_docs)]

pub mod boson;
pub mod coboundary;
pub mod cocycles;
pub mod fixtures;
pub mod groups;
pub mod linalg;
pub mod nichols;
pub mod scalars;
pub mod yd;

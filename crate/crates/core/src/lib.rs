//! Exact-arithmetic toolkit for Hankel determinants of Catalan-family
//! sequences and their q-analogues.
//!
//! The crate builds everything from one algebraic core: sparse multivariate
//! polynomials over big rationals ([`algebra`]). On top of that sit
//! q-Pochhammer/hypergeometric primitives ([`qseries`]), the sequence
//! generators ([`sequences`]), weighted lattice-path enumeration
//! ([`lattice`]), exact Hankel linear algebra ([`linalg`]), continued
//! fractions and orthogonal polynomials ([`contfrac`]), closed-form
//! right-hand sides ([`closed_forms`]), and the identity-verification
//! registry ([`verify`]).

pub mod algebra;
pub mod closed_forms;
pub mod contfrac;
pub mod lattice;
pub mod linalg;
pub mod qseries;
pub mod sequences;
pub mod verify;

pub use algebra::{BigInt, BigRational, Monomial, Poly, RatFunc, TruncatedSeries, Var};

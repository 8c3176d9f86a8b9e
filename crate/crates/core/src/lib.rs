//! Relation Gelfand-Tsetlin modules for `gl_n` in exact arithmetic.
//!
//! The crate builds the graph of a Gelfand-Tsetlin tableau, decides whether
//! it is a relation graph, constructs the twisted highest weight tableau
//! `T_σ(σ⁻¹(λ+℘))` for a permutation `σ`, applies the Gelfand-Tsetlin
//! formulas (optionally twisted by `σ`), and realizes localization along a
//! lowering operator as surgery on graphs.
//!
//! All numeric types are generic over [`scalars::Field`]; the aliases below
//! fix the arbitrary-precision [`Rational`] default or the 64-bit
//! [`Rational64`] backend.

pub mod action;
pub mod graph;
pub mod localization;
pub mod scalars;
pub mod sigma;
pub mod tableau;
pub mod weights;

pub use action::{GtSignature, ModuleVector};
pub use graph::{GtGraph, Obstruction, Vertex};
pub use localization::ModuleSpec;
pub use scalars::Field;
pub use sigma::{Permutation, SigmaGraph};
pub use tableau::{BasisWindow, Tableau};

/// Arbitrary-precision rational scalar.
pub type Rational = num_rational::BigRational;

/// Rational scalar with `i64` numerator and denominator.
pub type Rational64 = num_rational::Rational64;

pub type Tableau64 = tableau::Tableau<Rational64>;
pub type ModuleVector64 = action::ModuleVector<Rational64>;
pub type ModuleSpec64 = localization::ModuleSpec<Rational64>;

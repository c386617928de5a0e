//! Generalized preprojective algebras `Π(C, D)` of symmetrizable Cartan
//! matrices, their ideal semigroups, Weyl groups, and support τ-tilting
//! modules.
//!
//! The pipeline is: validate Cartan data ([`cartan`]), build the algebra by
//! a noncommutative Gröbner basis ([`pathalg`]), work with right modules
//! ([`repmod`]), and compare the ideals `I_w` with the Weyl group
//! ([`coxeter`], [`tautilt`]).

#![allow(clippy::needless_range_loop, clippy::type_complexity, clippy::len_without_is_empty)]

pub mod cartan;
pub mod cli;
pub mod coxeter;
pub mod error;
pub mod field;
pub mod linalg;
pub mod pathalg;
pub mod repmod;
pub mod tautilt;

pub use cartan::{CartanData, CartanMatrix, DoubledQuiver, Orientation, Symmetrizer, SymmetrizerRequest};
pub use coxeter::{enumerate_weyl, WeylElement, WeylGroup};
pub use error::{Error, Result};
pub use field::{Field, FieldSpec, PrimeField, Rational};
pub use pathalg::FiniteDimAlgebra;
pub use repmod::{ModuleRep, Morphism};
pub use tautilt::{IdealSemigroup, MutationGraph, SttPair};

//! Finite-dimensional right `Π`-modules: homomorphisms, presentations,
//! `τ`, the Nakayama functor, `Ext¹`, and isomorphism tests.
//!
//! Everything here is an inherent method of
//! [`FiniteDimAlgebra`](crate::pathalg::FiniteDimAlgebra), since every
//! computation needs the multiplication table.

mod hom;
mod iso;
mod module;
mod presentation;
mod tau;

pub use module::{ModuleRep, Morphism, StructureSeries};
pub use presentation::Presentation;

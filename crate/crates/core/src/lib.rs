//! Finite and symbolically presented algebraic structures, with detectors for
//! weak substructures inside strong ones (a semigroup inside a group, a
//! semiring inside a ring, a semifield inside a field) and for the classical
//! strong-inside-weak direction (a group inside a semigroup, a field inside a
//! ring).
//!
//! Finite structures are Cayley tables over dense element indices
//! ([`finite`]). Infinite subsets of the rationals such as `nZ+`, `Z+ ∪ {0}`
//! or `Q+` are handled exactly by [`symbolic`]. Every detection produces a
//! [`detect::Certificate`] that can be re-verified independently.

pub mod automata;
pub mod constructors;
pub mod descriptor;
pub mod detect;
pub mod error;
pub mod finite;
pub mod ideals;
pub mod linear;
pub mod rational;
pub mod report;
pub mod symbolic;

pub use error::{Error, Result};
pub use finite::{AxiomReport, FiniteMagma, FiniteRingTable};
pub use rational::Rat;
pub use symbolic::LatticeSet;

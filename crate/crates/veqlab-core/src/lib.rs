//! Core library for `veqlab`: a workbench that constructs, enumerates, and
//! exhaustively verifies complex-valued solutions of twisted Van Vleck and
//! d'Alembert functional equations on finite semigroups and monoids.
//!
//! The pieces, bottom-up:
//!
//! * [`semigroup`] — Cayley-table semigroups, associativity checks, centers,
//!   and the standard small families used as test carriers.
//! * [`morphism`] — involutive anti-morphisms τ and automorphisms σ, with
//!   validation and capped exhaustive enumeration.
//! * [`cyclo`] — exact arithmetic in ℚ(ζ_N), the value domain of every map in
//!   the workbench, including the textual literal grammar.
//! * [`characters`] — enumeration of all multiplicative functions G → ℂ and
//!   the admissible twists μ with μ(x·m(x)) = 1.
//! * [`engine`] — the functional-equation machinery: instance validation,
//!   exhaustive verification, closed-form solution construction, the lemma
//!   identity suite, the d'Alembert bridge, and the brute-force oracle.

pub mod characters;
pub mod cyclo;
pub mod engine;
pub mod morphism;
pub mod semigroup;

pub use characters::{element_profiles, enumerate_characters, Character, ElementProfile};
pub use cyclo::{parse_cyclo, Cyclo, Rational};
pub use engine::{Equation, Instance, Solution};
pub use morphism::{Morphism, MorphismKind};
pub use semigroup::FiniteSemigroup;

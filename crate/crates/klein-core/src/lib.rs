//! Discrete invariants of Klein surfaces, made computable.
//!
//! A Klein surface is a Riemann surface together with an anti-holomorphic
//! involution. This crate implements the finite, exact side of their theory
//! and a small numerical solver on top of it:
//!
//! - [`surface`]: the classification of topological types `(g, k, a)` and the
//!   passage between a type and its quotient surface (the double construction).
//! - [`fpgroup`]: finitely presented groups carrying a surjection onto `Z/2Z`
//!   (the homotopy exact sequence data), index-two kernel presentations via
//!   Reidemeister–Schreier rewriting, and abelianization invariants.
//! - [`covers`]: finite covers as permutation actions, their enumeration,
//!   connectivity and Galois classification, and restriction of a real cover
//!   to its underlying complex cover.
//! - [`repvar`]: numerical unitary representation varieties for augmented
//!   presentations, the restriction map to the kernel, the involution kappa
//!   and certified fixed-point verification.
//!
//! All values are immutable; every operation is safe to call concurrently.

pub mod covers;
pub mod error;
pub mod fpgroup;
pub mod repvar;
pub mod surface;

pub use covers::PermutationAction;
pub use error::Error;
pub use fpgroup::{AugmentedPresentation, Presentation, Word, Z2};
pub use surface::{CompactSurface, TopologicalType};

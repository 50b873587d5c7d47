//! Moduli of Hessian K3 surfaces: exact arithmetic, the lattice `M` and its
//! orthogonal group, the Hermitian modular group of degree two over the
//! Eisenstein integers, the isomorphism between them, cubic-surface
//! invariants and Heegner divisors.

pub mod correspondence;
pub mod cubic_invariants;
pub mod error;
pub mod heegner;
pub mod exact_arith;
pub mod hermitian_group;
pub mod lattice_m;
pub mod period_domain;
pub mod sample;
pub mod verify;

pub use error::{Error, Result};
pub use exact_arith::{Eisenstein, Matrix, PolyZ, Rational, TowerNumber};

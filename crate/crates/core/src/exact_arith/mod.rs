//! Exact arithmetic: Eisenstein integers, the field `Q(i, √3)`, small
//! square matrices and multivariate integer polynomials.

pub mod eis_big;
pub mod eisenstein;
pub mod matrix;
pub mod poly;
pub mod tower;

pub use eis_big::EisBig;
pub use eisenstein::{
    adjoint2, eis_divmod, eis_gcd_ext, g2_column_reduce, inverse2, is_g2, is_identity_mod2,
    size_reduce_g2, EisMatrix2, Eisenstein,
};
pub use matrix::{det_dense, Matrix, Ring};
pub use poly::{Monomial, PolyZ};
pub use tower::{sign_quadratic, tower_sign_real, TowerNumber};

use num_bigint::BigInt;

pub type Rational = num_rational::BigRational;

/// `n / d` as an exact rational. Panics on `d == 0`.
pub fn rat(n: i128, d: i128) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rint(n: i128) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

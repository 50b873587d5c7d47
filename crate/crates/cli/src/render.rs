//! Exact JSON renderings; every number is a string or an integer.

use hessian_moduli::exact_arith::{Eisenstein, Matrix, Rational, Ring, TowerNumber};
use hessian_moduli::period_domain::{HermitianPoint, PeriodPoint};
use serde_json::{json, Value};

pub fn rational(x: &Rational) -> Value {
    Value::String(x.to_string())
}

pub fn tower(x: &TowerNumber) -> Value {
    json!([rational(&x.a), rational(&x.b), rational(&x.c), rational(&x.d)])
}

/// JSON integer, or a decimal string beyond 64 bits.
pub fn int(x: i128) -> Value {
    i64::try_from(x).map_or_else(|_| Value::String(x.to_string()), Value::from)
}

pub fn eisenstein(x: &Eisenstein) -> Value {
    json!([int(x.a), int(x.b)])
}

pub fn matrix<T: Ring, const N: usize>(m: &Matrix<T, N>, f: impl Fn(&T) -> Value) -> Value {
    Value::Array(
        m.rows()
            .iter()
            .map(|row| Value::Array(row.iter().map(&f).collect()))
            .collect(),
    )
}

pub fn int_matrix<const N: usize>(m: &Matrix<i128, N>) -> Value {
    matrix(m, |x| int(*x))
}

pub fn eis_matrix<const N: usize>(m: &Matrix<Eisenstein, N>) -> Value {
    matrix(m, eisenstein)
}

pub fn tau(t: &HermitianPoint) -> Value {
    matrix(t.tau(), tower)
}

pub fn period_point(z: &PeriodPoint) -> Value {
    Value::Array(z.coords().iter().map(tower).collect())
}

pub fn display_list<T: std::fmt::Display>(xs: &[T]) -> Value {
    Value::Array(xs.iter().map(|x| Value::String(x.to_string())).collect())
}

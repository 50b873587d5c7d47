//! Typed values from JSON: rationals as "p/q" strings (integers also
//! accepted), Eisenstein integers as `[a, b]`, tower numbers as four
//! rationals `[a, b, c, d]` meaning `a + b√3 + c·i + d·i√3`, matrices
//! row-major.

use std::io::Read;
use std::str::FromStr;

use hessian_moduli::exact_arith::{Eisenstein, Matrix, Rational, TowerNumber};
use hessian_moduli::hermitian_group::HermMatrix4;
use hessian_moduli::lattice_m::OrthMatrix;
use hessian_moduli::period_domain::{HermitianPoint, PeriodPoint};
use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("{field}: {msg}")]
    Field { field: String, msg: String },
    #[error("{source_name}: invalid JSON at line {line}, column {column}: {msg}")]
    Json {
        source_name: String,
        line: usize,
        column: usize,
        msg: String,
    },
    #[error("{0}: {1}")]
    Io(String, std::io::Error),
}

fn field_err(field: &str, msg: impl Into<String>) -> InputError {
    InputError::Field {
        field: field.to_string(),
        msg: msg.into(),
    }
}

/// Reads an argument that is inline JSON, `@path`, or `-` for stdin.
pub fn load(arg: &str, field: &str) -> Result<Value, InputError> {
    let (text, source_name) = if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| InputError::Io("stdin".into(), e))?;
        (s, "stdin".to_string())
    } else if let Some(path) = arg.strip_prefix('@') {
        let s = std::fs::read_to_string(path).map_err(|e| InputError::Io(path.into(), e))?;
        (s, path.to_string())
    } else {
        (arg.to_string(), format!("--{field}"))
    };
    serde_json::from_str(&text).map_err(|e| InputError::Json {
        source_name,
        line: e.line(),
        column: e.column(),
        msg: e.to_string(),
    })
}

pub fn rational(v: &Value, field: &str) -> Result<Rational, InputError> {
    let text = match v {
        Value::String(s) => s.trim().to_string(),
        Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
        _ => return Err(field_err(field, "expected a rational as a \"p/q\" string")),
    };
    if let Some((_, d)) = text.split_once('/') {
        if d.trim().trim_start_matches(['+', '-']).chars().all(|c| c == '0') {
            return Err(field_err(field, "denominator is zero"));
        }
    }
    Rational::from_str(&text).map_err(|_| field_err(field, format!("cannot parse rational '{text}'")))
}

pub fn integer(v: &Value, field: &str) -> Result<i128, InputError> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(i128::from)
            .ok_or_else(|| field_err(field, "expected an integer")),
        Value::String(s) => s.trim().parse().map_err(|_| field_err(field, format!("cannot parse integer '{s}'"))),
        _ => Err(field_err(field, "expected an integer")),
    }
}

fn array<'a>(v: &'a Value, len: usize, field: &str) -> Result<&'a [Value], InputError> {
    match v {
        Value::Array(xs) if xs.len() == len => Ok(xs),
        Value::Array(xs) => Err(field_err(field, format!("expected {len} entries, found {}", xs.len()))),
        _ => Err(field_err(field, format!("expected an array of {len} entries"))),
    }
}

pub fn fixed<T, const N: usize>(
    v: &Value,
    field: &str,
    f: impl Fn(&Value, &str) -> Result<T, InputError>,
) -> Result<[T; N], InputError> {
    let xs = array(v, N, field)?;
    let parsed: Vec<T> = xs
        .iter()
        .enumerate()
        .map(|(i, x)| f(x, &format!("{field}[{i}]")))
        .collect::<Result<_, _>>()?;
    Ok(parsed.try_into().unwrap_or_else(|_| unreachable!("length checked")))
}

pub fn eisenstein(v: &Value, field: &str) -> Result<Eisenstein, InputError> {
    let [a, b] = fixed(v, field, integer)?;
    Ok(Eisenstein::new(a, b))
}

/// Four rationals, or a single rational for a rational number.
pub fn tower(v: &Value, field: &str) -> Result<TowerNumber, InputError> {
    if !v.is_array() {
        return Ok(TowerNumber::rational(rational(v, field)?));
    }
    let [a, b, c, d] = fixed(v, field, rational)?;
    Ok(TowerNumber::new(a, b, c, d))
}

pub fn matrix<T: hessian_moduli::exact_arith::Ring, const N: usize>(
    v: &Value,
    field: &str,
    f: impl Fn(&Value, &str) -> Result<T, InputError> + Copy,
) -> Result<Matrix<T, N>, InputError> {
    let rows: [[T; N]; N] = fixed(v, field, |row, name| fixed(row, name, f))?;
    Ok(Matrix::new(rows))
}

pub fn orth_matrix(v: &Value, field: &str) -> Result<OrthMatrix, InputError> {
    matrix(v, field, integer)
}

pub fn herm_matrix(v: &Value, field: &str) -> Result<HermMatrix4, InputError> {
    matrix(v, field, eisenstein)
}

pub fn lambda(v: &Value, field: &str) -> Result<[Rational; 5], InputError> {
    fixed(v, field, rational)
}

pub fn tau(v: &Value, field: &str) -> Result<HermitianPoint, InputError> {
    Ok(HermitianPoint::new(matrix(v, field, tower)?))
}

pub fn period_point(v: &Value, field: &str) -> Result<PeriodPoint, InputError> {
    let coords: [TowerNumber; 6] = fixed(v, field, tower)?;
    PeriodPoint::new(coords).map_err(|e| field_err(field, e.to_string()))
}

//! Eisenstein integers with arbitrary-precision coordinates, used where
//! intermediate values of a reduction outgrow `i128`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::eisenstein::Eisenstein;
use super::matrix::Matrix;
use crate::error::{Error, Result};

/// `a + bω` with `a, b ∈ Z`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct EisBig {
    pub a: BigInt,
    pub b: BigInt,
}

impl EisBig {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Self {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn conj(&self) -> Self {
        Self {
            a: &self.a - &self.b,
            b: -&self.b,
        }
    }

    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    /// `2·Re`.
    pub fn re2(&self) -> BigInt {
        &self.a + &self.a - &self.b
    }

    pub fn is_even(&self) -> bool {
        self.a.is_even() && self.b.is_even()
    }

    pub fn to_small(&self) -> Result<Eisenstein> {
        match (self.a.to_i128(), self.b.to_i128()) {
            (Some(a), Some(b)) => Ok(Eisenstein::new(a, b)),
            _ => Err(Error::Overflow("Eisenstein integer")),
        }
    }

    /// Componentwise nearest integer of `x/y` in the `(1, ω)` basis.
    pub fn rounded_quotient(x: &Self, y: &Self) -> Result<Self> {
        let n = y.norm();
        if n.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let p = x * &y.conj();
        Ok(Self {
            a: round_div(&p.a, &n),
            b: round_div(&p.b, &n),
        })
    }

    /// `κ` minimizing `N(x − κy)`, searched on the 3×3 block around the rounded quotient.
    pub fn nearest_multiple(x: &Self, y: &Self) -> Result<Self> {
        let q0 = Self::rounded_quotient(x, y)?;
        let mut best: Option<(BigInt, Self)> = None;
        for da in -1..=1 {
            for db in -1..=1 {
                let k = Self::new(&q0.a + da, &q0.b + db);
                let n = (x - &(&k * y)).norm();
                if best.as_ref().is_none_or(|(bn, _)| n < *bn) {
                    best = Some((n, k));
                }
            }
        }
        Ok(best.expect("nine candidates").1)
    }
}

/// Nearest integer to `n/d` for any nonzero `d`.
pub fn nearest_int(n: &BigInt, d: &BigInt) -> Result<BigInt> {
    if d.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    Ok(if d.is_negative() {
        round_div(&-n, &-d)
    } else {
        round_div(n, d)
    })
}

/// Nearest integer to `n/d` for `d > 0`, halves rounded up.
pub fn round_div(n: &BigInt, d: &BigInt) -> BigInt {
    debug_assert!(d.is_positive());
    let two = BigInt::from(2);
    (n * &two + d).div_floor(&(d * &two))
}

impl From<Eisenstein> for EisBig {
    fn from(x: Eisenstein) -> Self {
        Self::new(x.a, x.b)
    }
}

impl Add for EisBig {
    type Output = EisBig;
    fn add(self, o: Self) -> Self {
        Self {
            a: self.a + o.a,
            b: self.b + o.b,
        }
    }
}

impl Sub for EisBig {
    type Output = EisBig;
    fn sub(self, o: Self) -> Self {
        Self {
            a: self.a - o.a,
            b: self.b - o.b,
        }
    }
}

impl Sub for &EisBig {
    type Output = EisBig;
    fn sub(self, o: Self) -> EisBig {
        EisBig {
            a: &self.a - &o.a,
            b: &self.b - &o.b,
        }
    }
}

impl Mul for &EisBig {
    type Output = EisBig;
    fn mul(self, o: Self) -> EisBig {
        let bd = &self.b * &o.b;
        EisBig {
            a: &self.a * &o.a - &bd,
            b: &self.a * &o.b + &self.b * &o.a - bd,
        }
    }
}

impl Mul for EisBig {
    type Output = EisBig;
    fn mul(self, o: Self) -> Self {
        &self * &o
    }
}

impl Neg for EisBig {
    type Output = EisBig;
    fn neg(self) -> Self {
        Self {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl Zero for EisBig {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for EisBig {
    fn one() -> Self {
        Self::new(1, 0)
    }
}

impl fmt::Display for EisBig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}ω", self.a, self.b)
    }
}

impl fmt::Debug for EisBig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn widen<const N: usize>(m: &Matrix<Eisenstein, N>) -> Matrix<EisBig, N> {
    m.map(|x| EisBig::from(*x))
}

pub fn narrow<const N: usize>(m: &Matrix<EisBig, N>) -> Result<Matrix<Eisenstein, N>> {
    let mut out = Matrix::<Eisenstein, N>::zero();
    for i in 0..N {
        for j in 0..N {
            out[(i, j)] = m[(i, j)].to_small()?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn agrees_with_small() {
        let xs = [
            Eisenstein::new(3, -2),
            Eisenstein::new(-7, 5),
            Eisenstein::OMEGA2,
            Eisenstein::new(0, 4),
        ];
        for &x in &xs {
            let bx = EisBig::from(x);
            assert_eq!(bx.conj().to_small().unwrap(), x.conj());
            assert_eq!(bx.norm(), BigInt::from(x.norm()));
            assert_eq!(bx.re2(), BigInt::from(x.re2()));
            assert_eq!(bx.is_even(), x.is_even());
            for &y in &xs {
                let by = EisBig::from(y);
                assert_eq!((&bx * &by).to_small().unwrap(), x * y);
                assert_eq!((bx.clone() + by.clone()).to_small().unwrap(), x + y);
                let q = EisBig::rounded_quotient(&bx, &by).unwrap();
                assert!((&bx - &(&q * &by)).norm() < by.norm());
            }
        }
    }

    #[test]
    fn overflow_is_reported() {
        let big = EisBig::new(BigInt::from(i128::MAX) * 4, 0);
        assert_eq!(big.to_small(), Err(Error::Overflow("Eisenstein integer")));
        assert_eq!(
            round_div(&BigInt::from(-7), &BigInt::from(2)),
            BigInt::from(-3)
        );
    }
}

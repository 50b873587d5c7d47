//! Exact arithmetic in the quartic field `Q(i, √3)`.
//!
//! An element is `a + b√3 + c·i + d·√3·i` with rational `a, b, c, d`. The
//! field contains `ω = −1/2 + (√3/2)i`, so both the period domain and the
//! Hermitian upper half space admit exact sample points.

use crate::error::{Error, Result};
use crate::exact_arith::eisenstein::Eisenstein;
use crate::exact_arith::Rational;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TowerNumber {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `(p + q√3)(r + s√3)`
fn qmul(p: &Rational, s1: &Rational, r: &Rational, s2: &Rational) -> (Rational, Rational) {
    (p * r + s1 * s2 * q(3), p * s2 + s1 * r)
}

impl TowerNumber {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        Self { a, b, c, d }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::new(q(a), q(b), q(c), q(d))
    }

    pub fn rational(x: Rational) -> Self {
        Self::new(x, Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn int(n: i64) -> Self {
        Self::rational(q(n))
    }

    /// Gaussian rational `re + im·i`.
    pub fn gaussian(re: Rational, im: Rational) -> Self {
        Self::new(re, Rational::zero(), im, Rational::zero())
    }

    pub fn i() -> Self {
        Self::from_ints(0, 0, 1, 0)
    }

    pub fn sqrt3() -> Self {
        Self::from_ints(0, 1, 0, 0)
    }

    /// `ω = (−1/2, 0, 0, 1/2)`.
    pub fn omega() -> Self {
        let half = Rational::new(BigInt::from(1), BigInt::from(2));
        Self::new(-half.clone(), Rational::zero(), Rational::zero(), half)
    }

    pub fn from_eisenstein(x: Eisenstein) -> Self {
        Self::from(x)
    }

    pub fn conj(&self) -> Self {
        Self::new(
            self.a.clone(),
            self.b.clone(),
            -self.c.clone(),
            -self.d.clone(),
        )
    }

    /// Real part `a + b√3` as a real element.
    pub fn re(&self) -> Self {
        Self::new(
            self.a.clone(),
            self.b.clone(),
            Rational::zero(),
            Rational::zero(),
        )
    }

    /// Imaginary part `c + d√3` as a real element.
    pub fn im(&self) -> Self {
        Self::new(
            self.c.clone(),
            self.d.clone(),
            Rational::zero(),
            Rational::zero(),
        )
    }

    pub fn is_real(&self) -> bool {
        self.c.is_zero() && self.d.is_zero()
    }

    /// Multiplicative inverse; fails only for zero.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        // x = u + v·i with u, v ∈ Q(√3); x⁻¹ = (u − v·i)/(u² + v²)
        let (uu0, uu1) = qmul(&self.a, &self.b, &self.a, &self.b);
        let (vv0, vv1) = qmul(&self.c, &self.d, &self.c, &self.d);
        let (n0, n1) = (uu0 + vv0, uu1 + vv1);
        // (n0 + n1√3)⁻¹ = (n0 − n1√3)/(n0² − 3n1²)
        let den = &n0 * &n0 - &n1 * &n1 * q(3);
        let (r0, r1) = (&n0 / &den, -(&n1 / &den));
        let (a, b) = qmul(&self.a, &self.b, &r0, &r1);
        let (c, d) = qmul(&self.c, &self.d, &r0, &r1);
        Ok(Self::new(a, b, -c, -d))
    }

    pub fn try_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(&self.a * s, &self.b * s, &self.c * s, &self.d * s)
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        (self.b.is_zero() && self.c.is_zero() && self.d.is_zero()).then_some(&self.a)
    }
}

/// Exact sign of a real element `a + b√3`.
pub fn tower_sign_real(x: &TowerNumber) -> Result<Ordering> {
    if !x.is_real() {
        return Err(Error::NotReal);
    }
    Ok(sign_quadratic(&x.a, &x.b))
}

/// Sign of `a + b√3`, decided from the signs of `a`, `b` and `a²` vs `3b²`.
pub fn sign_quadratic(a: &Rational, b: &Rational) -> Ordering {
    let sa = a.cmp(&Rational::zero());
    let sb = b.cmp(&Rational::zero());
    match (sa, sb) {
        (Ordering::Equal, s) | (s, Ordering::Equal) => s,
        (s, t) if s == t => s,
        _ => {
            let a2 = a * a;
            let b2 = b * b * q(3);
            // a and b√3 have opposite signs; the larger magnitude wins
            match a2.cmp(&b2) {
                Ordering::Greater => sa,
                Ordering::Less => sb,
                Ordering::Equal => Ordering::Equal,
            }
        }
    }
}

impl From<Eisenstein> for TowerNumber {
    fn from(x: Eisenstein) -> Self {
        // a + bω = (a − b/2) + (b/2)√3·i
        let half = Rational::new(BigInt::from(1), BigInt::from(2));
        let a = Rational::from_integer(BigInt::from(x.a));
        let b = Rational::from_integer(BigInt::from(x.b));
        Self::new(a - &b * &half, Rational::zero(), Rational::zero(), b * half)
    }
}

impl From<Rational> for TowerNumber {
    fn from(x: Rational) -> Self {
        Self::rational(x)
    }
}

impl Add<&TowerNumber> for &TowerNumber {
    type Output = TowerNumber;
    fn add(self, o: &TowerNumber) -> TowerNumber {
        TowerNumber::new(
            &self.a + &o.a,
            &self.b + &o.b,
            &self.c + &o.c,
            &self.d + &o.d,
        )
    }
}

impl Sub<&TowerNumber> for &TowerNumber {
    type Output = TowerNumber;
    fn sub(self, o: &TowerNumber) -> TowerNumber {
        TowerNumber::new(
            &self.a - &o.a,
            &self.b - &o.b,
            &self.c - &o.c,
            &self.d - &o.d,
        )
    }
}

impl Mul<&TowerNumber> for &TowerNumber {
    type Output = TowerNumber;
    fn mul(self, o: &TowerNumber) -> TowerNumber {
        // (u + v i)(u' + v' i) = (uu' − vv') + (uv' + vu') i
        let (uu0, uu1) = qmul(&self.a, &self.b, &o.a, &o.b);
        let (vv0, vv1) = qmul(&self.c, &self.d, &o.c, &o.d);
        let (uv0, uv1) = qmul(&self.a, &self.b, &o.c, &o.d);
        let (vu0, vu1) = qmul(&self.c, &self.d, &o.a, &o.b);
        TowerNumber::new(uu0 - vv0, uu1 - vv1, uv0 + vu0, uv1 + vu1)
    }
}

impl Neg for &TowerNumber {
    type Output = TowerNumber;
    fn neg(self) -> TowerNumber {
        TowerNumber::new(
            -self.a.clone(),
            -self.b.clone(),
            -self.c.clone(),
            -self.d.clone(),
        )
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for TowerNumber {
            type Output = TowerNumber;
            fn $m(self, o: TowerNumber) -> TowerNumber { (&self).$m(&o) }
        }
        impl $tr<&TowerNumber> for TowerNumber {
            type Output = TowerNumber;
            fn $m(self, o: &TowerNumber) -> TowerNumber { (&self).$m(o) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for TowerNumber {
    type Output = TowerNumber;
    fn neg(self) -> TowerNumber {
        -&self
    }
}

impl Zero for TowerNumber {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }
}

impl One for TowerNumber {
    fn one() -> Self {
        Self::int(1)
    }
}

fn fmt_part(f: &mut fmt::Formatter<'_>, first: &mut bool, x: &Rational, unit: &str) -> fmt::Result {
    if x.is_zero() {
        return Ok(());
    }
    let neg = x.is_negative();
    let mag = x.abs();
    if *first {
        if neg {
            write!(f, "-")?;
        }
    } else {
        write!(f, "{}", if neg { " - " } else { " + " })?;
    }
    *first = false;
    if unit.is_empty() || !mag.is_one() {
        write!(f, "{mag}")?;
    }
    write!(f, "{unit}")
}

impl fmt::Display for TowerNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        fmt_part(f, &mut first, &self.a, "")?;
        fmt_part(f, &mut first, &self.b, "√3")?;
        fmt_part(f, &mut first, &self.c, "i")?;
        fmt_part(f, &mut first, &self.d, "√3i")
    }
}

impl fmt::Debug for TowerNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

//! Sparse polynomials in five variables with integer coefficients.

use crate::exact_arith::Rational;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub const NVARS: usize = 5;

/// Exponent vector.
pub type Monomial = [u8; NVARS];

/// Sparse polynomial `Σ c_m x^m` over `Z`; zero coefficients are never stored.
///
/// Coefficients are `i128` with checked arithmetic: overflow panics instead
/// of silently wrapping.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct PolyZ {
    terms: BTreeMap<Monomial, i128>,
}

fn mono_mul(a: &Monomial, b: &Monomial) -> Monomial {
    std::array::from_fn(|i| a[i].checked_add(b[i]).expect("PolyZ exponent overflow"))
}

impl PolyZ {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: i128) -> Self {
        Self::monomial(c, [0; NVARS])
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn monomial(c: i128, exps: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(exps, c);
        }
        Self { terms }
    }

    /// The variable `x_i`.
    pub fn var(i: usize) -> Self {
        let mut e = [0; NVARS];
        e[i] = 1;
        Self::monomial(1, e)
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Monomial, i128)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: i128) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(m).or_insert(0);
        *entry = entry.checked_add(c).expect("PolyZ coefficient overflow");
        if *entry == 0 {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &i128)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> i128 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|m| m.iter().map(|&e| e as u32).sum())
            .max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self
            .terms
            .keys()
            .map(|m| m.iter().map(|&e| e as u32).sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn scale(&self, s: i128) -> Self {
        if s == 0 {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, c.checked_mul(s).expect("PolyZ coefficient overflow")))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Rewrites every monomial through `f`; coefficients of colliding images add up.
    pub fn map_monomials(&self, mut f: impl FnMut(&Monomial) -> Monomial) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (f(m), *c)))
    }

    /// Restriction to `x_i = 0` for every `i` in `vars`.
    pub fn set_zero(&self, vars: &[usize]) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| vars.iter().all(|&i| m[i] == 0))
                .map(|(m, c)| (*m, *c))
                .collect(),
        }
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, point: &[Rational; NVARS]) -> Rational {
        let mut powers: Vec<Vec<Rational>> = Vec::with_capacity(NVARS);
        for (i, x) in point.iter().enumerate() {
            let maxe = self.terms.keys().map(|m| m[i]).max().unwrap_or(0) as usize;
            let mut pw = Vec::with_capacity(maxe + 1);
            pw.push(Rational::one());
            for k in 1..=maxe {
                let next = &pw[k - 1] * x;
                pw.push(next);
            }
            powers.push(pw);
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = Rational::from_integer(BigInt::from(*c));
            for i in 0..NVARS {
                if m[i] > 0 {
                    t *= &powers[i][m[i] as usize];
                }
            }
            acc += t;
        }
        acc
    }

    pub fn eval_int(&self, point: &[i64; NVARS]) -> Rational {
        self.eval(&point.map(|x| Rational::from_integer(BigInt::from(x))))
    }
}

impl Add<&PolyZ> for &PolyZ {
    type Output = PolyZ;
    fn add(self, o: &PolyZ) -> PolyZ {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, *c);
        }
        out
    }
}

impl Sub<&PolyZ> for &PolyZ {
    type Output = PolyZ;
    fn sub(self, o: &PolyZ) -> PolyZ {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, c.checked_neg().expect("PolyZ coefficient overflow"));
        }
        out
    }
}

impl Mul<&PolyZ> for &PolyZ {
    type Output = PolyZ;
    fn mul(self, o: &PolyZ) -> PolyZ {
        let mut acc: HashMap<Monomial, i128> = HashMap::with_capacity(self.len() * o.len() / 4 + 1);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let prod = c1.checked_mul(*c2).expect("PolyZ coefficient overflow");
                let e = acc.entry(mono_mul(m1, m2)).or_insert(0);
                *e = e.checked_add(prod).expect("PolyZ coefficient overflow");
            }
        }
        PolyZ {
            terms: acc.into_iter().filter(|(_, c)| *c != 0).collect(),
        }
    }
}

impl Neg for &PolyZ {
    type Output = PolyZ;
    fn neg(self) -> PolyZ {
        self.scale(-1)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for PolyZ {
            type Output = PolyZ;
            fn $m(self, o: PolyZ) -> PolyZ { (&self).$m(&o) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Debug for PolyZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (i, e) in m.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*x{i}")?,
                    _ => write!(f, "*x{i}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

/// Multiplies the polynomials `x_i − x_j` for `i < j`.
pub fn vandermonde() -> PolyZ {
    let mut p = PolyZ::one();
    for i in 0..NVARS {
        for j in i + 1..NVARS {
            p = &p * &(&PolyZ::var(i) - &PolyZ::var(j));
        }
    }
    p
}

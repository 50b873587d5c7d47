//! The Eisenstein integers `Z[ω]`, `ω = e^{2πi/3}`.
//!
//! Elements are stored in the `(1, ω)` basis. Multiplication uses
//! `ω² = −1 − ω`, so the representation is closed under all ring operations.

use crate::error::{Error, Result};
use crate::exact_arith::matrix::Matrix;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// `a + bω`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Eisenstein {
    pub a: i128,
    pub b: i128,
}

/// 2×2 matrices over `Z[ω]`.
pub type EisMatrix2 = Matrix<Eisenstein, 2>;

impl Eisenstein {
    pub const ZERO: Self = Self { a: 0, b: 0 };
    pub const ONE: Self = Self { a: 1, b: 0 };
    pub const OMEGA: Self = Self { a: 0, b: 1 };
    pub const OMEGA2: Self = Self { a: -1, b: -1 };

    pub const fn new(a: i128, b: i128) -> Self {
        Self { a, b }
    }

    pub const fn int(a: i128) -> Self {
        Self { a, b: 0 }
    }

    /// The six units in the fixed tie-break order `1, −1, ω, −ω, ω², −ω²`.
    pub const UNITS: [Eisenstein; 6] = [
        Self::new(1, 0),
        Self::new(-1, 0),
        Self::new(0, 1),
        Self::new(0, -1),
        Self::new(-1, -1),
        Self::new(1, 1),
    ];

    pub fn conj(self) -> Self {
        // conj(ω) = ω² = −1 − ω
        Self::new(self.a - self.b, -self.b)
    }

    /// `|x|² = a² − ab + b²`.
    pub fn checked_add(self, o: Self) -> Option<Self> {
        Some(Self::new(
            self.a.checked_add(o.a)?,
            self.b.checked_add(o.b)?,
        ))
    }

    pub fn norm(self) -> i128 {
        self.a * self.a - self.a * self.b + self.b * self.b
    }

    pub fn is_unit(self) -> bool {
        self.norm() == 1
    }

    /// `2·Re(x) = 2a − b`.
    pub fn re2(self) -> i128 {
        2 * self.a - self.b
    }

    /// `(2/√3)·Im(x) = b`, the ω-coordinate.
    pub fn im_omega(self) -> i128 {
        self.b
    }

    /// The real integer `x` if `x ∈ Z`.
    pub fn as_integer(self) -> Option<i128> {
        (self.b == 0).then_some(self.a)
    }

    /// Residue in `F₄ = Z[ω]/2` as a pair of bits.
    pub fn mod2(self) -> (u8, u8) {
        (self.a.rem_euclid(2) as u8, self.b.rem_euclid(2) as u8)
    }

    pub fn is_even(self) -> bool {
        self.mod2() == (0, 0)
    }

    pub fn pow(self, e: u32) -> Self {
        (0..e).fold(Self::ONE, |acc, _| acc * self)
    }

    /// Multiplicative inverse when `x` is a unit.
    pub fn unit_inverse(self) -> Option<Self> {
        self.is_unit().then(|| self.conj())
    }

    /// `x / y` when `y` divides `x` exactly.
    pub fn div_exact(self, y: Self) -> Option<Self> {
        if y.is_zero() {
            return None;
        }
        let n = y.norm();
        let p = self * y.conj();
        (p.a % n == 0 && p.b % n == 0).then(|| Self::new(p.a / n, p.b / n))
    }

    pub fn divides(self, x: Self) -> bool {
        if self.is_zero() {
            return x.is_zero();
        }
        x.div_exact(self).is_some()
    }

    /// Canonical associate: the unique associate with `a > b ≥ 0`
    /// (the sector `0 ≤ arg < π/3`). Returns `(u·x, u)`.
    pub fn canonical_associate(self) -> (Self, Self) {
        if self.is_zero() {
            return (self, Self::ONE);
        }
        for u in Self::UNITS {
            let y = u * self;
            if y.a > y.b && y.b >= 0 {
                return (y, u);
            }
        }
        unreachable!("every nonzero Eisenstein integer has an associate in the first sector")
    }
}

fn round_half_toward_zero(num: i128, den: i128) -> i128 {
    debug_assert!(den > 0);
    let fl = num.div_euclid(den);
    let rem = num.rem_euclid(den);
    if 2 * rem > den {
        fl + 1
    } else if 2 * rem < den {
        fl
    } else if fl >= 0 {
        // exact half, positive side
        fl
    } else {
        fl + 1
    }
}

/// Euclidean division: `x = q·y + r` with `norm(r) < norm(y)`.
///
/// `q` is the componentwise nearest integer of `x/y` in the `(1, ω)` basis,
/// with halves rounded toward zero; this gives `norm(r) ≤ ¾·norm(y)`.
pub fn eis_divmod(x: Eisenstein, y: Eisenstein) -> Result<(Eisenstein, Eisenstein)> {
    if y.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    let n = y.norm();
    let p = x * y.conj();
    let q = Eisenstein::new(
        round_half_toward_zero(p.a, n),
        round_half_toward_zero(p.b, n),
    );
    let r = x - q * y;
    debug_assert!(r.norm() < n);
    Ok((q, r))
}

/// Extended gcd: `α·x + β·y = δ`, with `δ` the canonical associate of the
/// last nonzero remainder of the Euclidean chain.
pub fn eis_gcd_ext(
    alpha: Eisenstein,
    beta: Eisenstein,
) -> Result<(Eisenstein, Eisenstein, Eisenstein)> {
    if alpha.is_zero() && beta.is_zero() {
        return Err(Error::BothZero);
    }
    let (mut r0, mut r1) = (alpha, beta);
    let (mut s0, mut s1) = (Eisenstein::ONE, Eisenstein::ZERO);
    let (mut t0, mut t1) = (Eisenstein::ZERO, Eisenstein::ONE);
    while !r1.is_zero() {
        let (q, r) = eis_divmod(r0, r1)?;
        (r0, r1) = (r1, r);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    let (delta, u) = r0.canonical_associate();
    Ok((delta, u * s0, u * t0))
}

/// Finds `A ∈ G(2)` with `A·(α, β)ᵀ = (δ, 0)ᵀ`, where `(δ) = (α, β)` and
/// `α/δ ≡ 1 mod 2`.
pub fn g2_column_reduce(alpha: Eisenstein, beta: Eisenstein) -> Result<(EisMatrix2, Eisenstein)> {
    if alpha.mod2() != (1, 0) || !beta.is_even() {
        return Err(Error::NotCongruent);
    }
    if beta.is_zero() {
        return Ok((EisMatrix2::identity(), alpha));
    }
    let (delta0, x0, y0) = eis_gcd_ext(alpha, beta)?;
    // δ is coprime to 2 (it divides the odd α), so exactly one of
    // δ, ωδ, ω²δ makes α/δ ≡ 1 mod 2.
    for k in 0..3u32 {
        let u = Eisenstein::OMEGA.pow(k);
        let delta = u * delta0;
        let a1 = alpha
            .div_exact(delta)
            .ok_or_else(|| Error::Invariant("gcd does not divide alpha".into()))?;
        if a1.mod2() != (1, 0) {
            continue;
        }
        let b1 = beta
            .div_exact(delta)
            .ok_or_else(|| Error::Invariant("gcd does not divide beta".into()))?;
        // (α/(uδ₀))·(u x₀) + (β/(uδ₀))·(u y₀) = 1
        let (x, y) = (u * x0, u * y0);
        let a = EisMatrix2::new([[x - b1 * y, y + a1 * y], [-b1, a1]]);
        debug_assert_eq!(a.det(), Eisenstein::ONE);
        return Ok((a, delta));
    }
    Err(Error::Invariant(
        "no associate of the gcd satisfies alpha/delta = 1 mod 2".into(),
    ))
}

/// Shrinks row 1 by an even multiple of row 2. Determinant, parity and the
/// image of any vector killed by row 2 are unchanged.
pub fn size_reduce_g2(a: &EisMatrix2) -> EisMatrix2 {
    let (r1, r2) = ([a[(0, 0)], a[(0, 1)]], [a[(1, 0)], a[(1, 1)]]);
    let den = 2 * (r2[0].norm() + r2[1].norm());
    if den == 0 {
        return a.clone();
    }
    let num = r1[0] * r2[0].conj() + r1[1] * r2[1].conj();
    let k = Eisenstein::new(
        round_half_toward_zero(num.a, den),
        round_half_toward_zero(num.b, den),
    );
    let two_k = k + k;
    EisMatrix2::new([[r1[0] - two_k * r2[0], r1[1] - two_k * r2[1]], r2])
}

/// Inverse of a 2×2 matrix over `Z[ω]` whose determinant is a unit.
pub fn inverse2(m: &EisMatrix2) -> Result<EisMatrix2> {
    let d = m.det();
    let dinv = d.unit_inverse().ok_or(Error::NotInvertible)?;
    Ok(EisMatrix2::new([
        [m[(1, 1)] * dinv, -m[(0, 1)] * dinv],
        [-m[(1, 0)] * dinv, m[(0, 0)] * dinv],
    ]))
}

/// Conjugate transpose.
pub fn adjoint2(m: &EisMatrix2) -> EisMatrix2 {
    EisMatrix2::from_fn(|i, j| m[(j, i)].conj())
}

pub fn is_g2(m: &EisMatrix2) -> bool {
    m.det().is_unit() && is_identity_mod2(m)
}

pub fn is_identity_mod2<const N: usize>(m: &Matrix<Eisenstein, N>) -> bool {
    (0..N).all(|i| {
        (0..N).all(|j| {
            (m[(i, j)]
                - if i == j {
                    Eisenstein::ONE
                } else {
                    Eisenstein::ZERO
                })
            .is_even()
        })
    })
}

impl Add for Eisenstein {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.a + o.a, self.b + o.b)
    }
}

impl AddAssign for Eisenstein {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl Sub for Eisenstein {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for Eisenstein {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b)
    }
}

impl Mul for Eisenstein {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let bd = self.b * o.b;
        Self::new(self.a * o.a - bd, self.a * o.b + self.b * o.a - bd)
    }
}

impl Zero for Eisenstein {
    fn zero() -> Self {
        Self::ZERO
    }
    fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }
}

impl One for Eisenstein {
    fn one() -> Self {
        Self::ONE
    }
}

impl From<i128> for Eisenstein {
    fn from(a: i128) -> Self {
        Self::int(a)
    }
}

impl fmt::Display for Eisenstein {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, 1) => write!(f, "ω"),
            (0, -1) => write!(f, "-ω"),
            (0, b) => write!(f, "{b}ω"),
            (a, 1) => write!(f, "{a}+ω"),
            (a, -1) => write!(f, "{a}-ω"),
            (a, b) if b > 0 => write!(f, "{a}+{b}ω"),
            (a, b) => write!(f, "{a}{b}ω"),
        }
    }
}

impl fmt::Debug for Eisenstein {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const W: Eisenstein = Eisenstein::OMEGA;

    fn e(a: i128, b: i128) -> Eisenstein {
        Eisenstein::new(a, b)
    }

    #[test]
    fn omega_relation() {
        assert_eq!(W * W, -Eisenstein::ONE - W);
        assert_eq!(W * W * W, Eisenstein::ONE);
        assert_eq!(W.conj(), W * W);
    }

    #[test]
    fn units_are_the_norm_one_elements() {
        let mut found = vec![];
        for a in -3..=3 {
            for b in -3..=3 {
                if e(a, b).norm() == 1 {
                    found.push(e(a, b));
                }
            }
        }
        found.sort();
        let mut units = Eisenstein::UNITS.to_vec();
        units.sort();
        assert_eq!(found, units);
    }

    #[test]
    fn divmod_examples() {
        assert_eq!(
            eis_divmod(W, Eisenstein::ONE).unwrap(),
            (W, Eisenstein::ZERO)
        );
        // 5 = (2+ω)(2−2ω) − 1
        assert_eq!(eis_divmod(e(5, 0), e(2, 1)).unwrap(), (e(2, -2), e(-1, 0)));
        assert_eq!(e(2, 1) * e(2, -2) - Eisenstein::ONE, e(5, 0));
        // halves toward zero force q = 0
        assert_eq!(
            eis_divmod(e(1, 1), e(2, 0)).unwrap(),
            (Eisenstein::ZERO, e(1, 1))
        );
        assert_eq!(eis_divmod(W, Eisenstein::ZERO), Err(Error::ZeroDivisor));
    }

    #[test]
    fn gcd_examples() {
        let (d, x, y) = eis_gcd_ext(e(3, 0), e(0, 2)).unwrap();
        assert_eq!((d, x, y), (Eisenstein::ONE, Eisenstein::ONE, e(1, 1)));
        let (d, x, y) = eis_gcd_ext(e(2, 0), e(1, 1)).unwrap();
        assert_eq!((d, x, y), (Eisenstein::ONE, Eisenstein::ZERO, -W));
        let alpha = e(-4, 7);
        let (d, x, y) = eis_gcd_ext(alpha, Eisenstein::ZERO).unwrap();
        assert_eq!(d, alpha.canonical_associate().0);
        assert!(x.is_unit());
        assert_eq!(y, Eisenstein::ZERO);
        assert_eq!(
            eis_gcd_ext(Eisenstein::ZERO, Eisenstein::ZERO),
            Err(Error::BothZero)
        );
    }

    #[test]
    fn size_reduction_keeps_invariants() {
        let (a, _) = g2_column_reduce(e(47, 12), e(-30, 8)).unwrap();
        let s = size_reduce_g2(&a);
        assert!(is_g2(&s));
        assert_eq!(s.det(), Eisenstein::ONE);
        assert_eq!(
            s.mul_vec(&[e(47, 12), e(-30, 8)]),
            a.mul_vec(&[e(47, 12), e(-30, 8)])
        );
        let size = |m: &EisMatrix2| m.rows().iter().flatten().map(|x| x.norm()).max().unwrap();
        assert!(size(&s) <= size(&a));
    }

    #[test]
    fn column_reduce_examples() {
        let (a, d) = g2_column_reduce(Eisenstein::ONE, Eisenstein::ZERO).unwrap();
        assert!(a.is_identity());
        assert_eq!(d, Eisenstein::ONE);

        let (a, d) = g2_column_reduce(e(3, 0), e(0, 2)).unwrap();
        assert_eq!(
            a,
            EisMatrix2::new([[e(3, 0), e(4, 4)], [e(0, -2), e(3, 0)]])
        );
        assert_eq!(d, Eisenstein::ONE);
        assert!(is_g2(&a));
        assert_eq!(
            a.mul_vec(&[e(3, 0), e(0, 2)]),
            [Eisenstein::ONE, Eisenstein::ZERO]
        );

        let (a, d) = g2_column_reduce(e(1, 2), Eisenstein::ZERO).unwrap();
        assert!(a.is_identity());
        assert_eq!(d, e(1, 2));

        assert_eq!(
            g2_column_reduce(e(2, 0), e(0, 2)).unwrap_err(),
            Error::NotCongruent
        );
        assert_eq!(
            g2_column_reduce(e(1, 0), e(1, 0)).unwrap_err(),
            Error::NotCongruent
        );
    }

    #[test]
    fn euclidean_property_bulk() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10_000 {
            let x = e(rng.gen_range(-50..=50), rng.gen_range(-50..=50));
            let y = e(rng.gen_range(-50..=50), rng.gen_range(-50..=50));
            if y.is_zero() {
                continue;
            }
            let (q, r) = eis_divmod(x, y).unwrap();
            assert!(r.norm() < y.norm());
            assert!(4 * r.norm() <= 3 * y.norm());
            assert_eq!(q * y + r, x);
        }
    }

    fn eis() -> impl Strategy<Value = Eisenstein> {
        (-200i128..=200, -200i128..=200).prop_map(|(a, b)| e(a, b))
    }

    proptest! {
        #[test]
        fn gcd_bezout_and_divides(a in eis(), b in eis()) {
            prop_assume!(!(a.is_zero() && b.is_zero()));
            let (d, x, y) = eis_gcd_ext(a, b).unwrap();
            prop_assert_eq!(a * x + b * y, d);
            prop_assert!(d.divides(a));
            prop_assert!(d.divides(b));
            prop_assert_eq!(d.canonical_associate().0, d);
        }

        #[test]
        fn column_reduce_postconditions(a in eis(), b in eis()) {
            let alpha = e(2 * a.a + 1, 2 * a.b);
            let beta = e(2 * b.a, 2 * b.b);
            let (m, d) = g2_column_reduce(alpha, beta).unwrap();
            prop_assert!(is_g2(&m));
            prop_assert_eq!(m.det(), Eisenstein::ONE);
            prop_assert_eq!(m.mul_vec(&[alpha, beta]), [d, Eisenstein::ZERO]);
            prop_assert_eq!(alpha.div_exact(d).unwrap().mod2(), (1, 0));
        }

        #[test]
        fn norm_is_multiplicative(a in eis(), b in eis()) {
            prop_assert_eq!((a * b).norm(), a.norm() * b.norm());
            prop_assert!(a.norm() >= 0);
            prop_assert_eq!(a.norm() == 0, a.is_zero());
        }
    }
}

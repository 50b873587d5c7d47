//! The Hermitian modular group `HΓ ⊂ GL₄(Z[ω])`, its level-2 subgroups,
//! the Möbius action on `H₂` and the involutions `T` and `W`.

pub mod decompose;
pub mod f4;
pub mod phi9;

pub use decompose::{decompose_hgamma0, decompose_hgamma1, GenWordH, HToken};
pub use f4::{F4Matrix, F4};
pub use phi9::{phi9_coset_classify, CosetClass, GElement};

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_arith::{
    adjoint2, inverse2, is_identity_mod2, EisMatrix2, Eisenstein, Matrix, TowerNumber,
};
use crate::period_domain::{HermitianPoint, TowerMatrix2};

pub type HermMatrix4 = Matrix<Eisenstein, 4>;

/// Finest congruence class; the order is by inclusion, coarsest first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HMembership {
    NotInHGamma,
    HGamma,
    HGamma0,
    HGamma1,
}

impl fmt::Display for HMembership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HMembership::NotInHGamma => "not_in_HGamma",
            HMembership::HGamma => "HGamma",
            HMembership::HGamma0 => "HGamma0",
            HMembership::HGamma1 => "HGamma1",
        })
    }
}

/// Hermitian `B = [[m₁, m₃+ωm₄], [m₃+ω²m₄, m₂]]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct HermB {
    pub m: [i128; 4],
}

impl HermB {
    pub const fn new(m1: i128, m2: i128, m3: i128, m4: i128) -> Self {
        Self {
            m: [m1, m2, m3, m4],
        }
    }

    pub fn matrix(&self) -> EisMatrix2 {
        let [m1, m2, m3, m4] = self.m;
        EisMatrix2::new([
            [Eisenstein::int(m1), Eisenstein::new(m3, m4)],
            [Eisenstein::new(m3 - m4, -m4), Eisenstein::int(m2)],
        ])
    }

    /// Inverse of [`HermB::matrix`]; fails unless `b* = b`.
    pub fn from_matrix(b: &EisMatrix2) -> Result<Self> {
        if adjoint2(b) != *b {
            return Err(Error::NotMember("Hermitian 2x2 matrix"));
        }
        let (m1, m2) = (b[(0, 0)].a, b[(1, 1)].a);
        let off = b[(0, 1)];
        Ok(Self::new(m1, m2, off.a, off.b))
    }

    pub fn neg(self) -> Self {
        Self {
            m: self.m.map(|x| -x),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.m == [0; 4]
    }
}

pub fn from_blocks(a: &EisMatrix2, b: &EisMatrix2, c: &EisMatrix2, d: &EisMatrix2) -> HermMatrix4 {
    HermMatrix4::from_fn(|i, j| {
        let blk = match (i < 2, j < 2) {
            (true, true) => a,
            (true, false) => b,
            (false, true) => c,
            (false, false) => d,
        };
        blk[(i % 2, j % 2)]
    })
}

/// `(A, B, C, D)` of `[[A, B], [C, D]]`.
pub fn blocks(g: &HermMatrix4) -> (EisMatrix2, EisMatrix2, EisMatrix2, EisMatrix2) {
    let blk = |r: usize, c: usize| EisMatrix2::from_fn(|i, j| g[(r + i, c + j)]);
    (blk(0, 0), blk(0, 2), blk(2, 0), blk(2, 2))
}

pub fn adjoint4(g: &HermMatrix4) -> HermMatrix4 {
    HermMatrix4::from_fn(|i, j| g[(j, i)].conj())
}

/// `J = [[0, I₂], [−I₂, 0]]`.
pub fn j_matrix() -> HermMatrix4 {
    let i = EisMatrix2::identity();
    let z = EisMatrix2::zero();
    from_blocks(&z, &i, &-&i, &z)
}

/// `g(A) = [[A, 0], [0, (A*)⁻¹]]`.
pub fn g_a(a: &EisMatrix2) -> Result<HermMatrix4> {
    let d = inverse2(&adjoint2(a))?;
    let z = EisMatrix2::zero();
    Ok(from_blocks(a, &z, &z, &d))
}

/// `[[I₂, B], [0, I₂]]`.
pub fn g_b_upper(b: &HermB) -> HermMatrix4 {
    let i = EisMatrix2::identity();
    from_blocks(&i, &b.matrix(), &EisMatrix2::zero(), &i)
}

/// `[[I₂, 0], [2B, I₂]]`.
pub fn g_b_lower(b: &HermB) -> HermMatrix4 {
    let i = EisMatrix2::identity();
    let two_b = b.matrix().map(|x| *x + *x);
    from_blocks(&i, &EisMatrix2::zero(), &two_b, &i)
}

pub fn is_in_hgamma(g: &HermMatrix4) -> bool {
    let j = j_matrix();
    &(&adjoint4(g) * &j) * g == j
}

pub fn membership(g: &HermMatrix4) -> HMembership {
    if !is_in_hgamma(g) {
        return HMembership::NotInHGamma;
    }
    let (a, _, c, _) = blocks(g);
    if !(0..2).all(|i| (0..2).all(|j| c[(i, j)].is_even())) {
        return HMembership::HGamma;
    }
    if is_identity_mod2(&a) {
        HMembership::HGamma1
    } else {
        HMembership::HGamma0
    }
}

/// `g⁻¹ = −J g* J` for `g ∈ HΓ`.
pub fn hgamma_inverse(g: &HermMatrix4) -> Result<HermMatrix4> {
    if !is_in_hgamma(g) {
        return Err(Error::NotMember("HGamma"));
    }
    let j = j_matrix();
    Ok(-&(&(&j * &adjoint4(g)) * &j))
}

pub(crate) fn to_tower2(m: &EisMatrix2) -> TowerMatrix2 {
    TowerMatrix2::from_fn(|i, j| TowerNumber::from(m[(i, j)]))
}

pub fn tower_inverse2(m: &TowerMatrix2) -> Result<TowerMatrix2> {
    let dinv = m.det().inv()?;
    Ok(TowerMatrix2::new([
        [&m[(1, 1)] * &dinv, -(&m[(0, 1)] * &dinv)],
        [-(&m[(1, 0)] * &dinv), &m[(0, 0)] * &dinv],
    ]))
}

fn add2(x: &TowerMatrix2, y: &TowerMatrix2) -> TowerMatrix2 {
    TowerMatrix2::from_fn(|i, j| &x[(i, j)] + &y[(i, j)])
}

/// `(Aτ + B)(Cτ + D)⁻¹`.
pub fn moebius(g: &HermMatrix4, tau: &HermitianPoint) -> Result<HermitianPoint> {
    if !is_in_hgamma(g) {
        return Err(Error::NotMember("HGamma"));
    }
    if !tau.is_in_h2() {
        return Err(Error::NotInH2);
    }
    let (a, b, c, d) = blocks(g);
    let t = tau.tau();
    let num = add2(&(&to_tower2(&a) * t), &to_tower2(&b));
    let den = add2(&(&to_tower2(&c) * t), &to_tower2(&d));
    let den_inv =
        tower_inverse2(&den).map_err(|_| Error::Invariant("C tau + D is singular on H2".into()))?;
    let image = HermitianPoint::new(&num * &den_inv);
    if !image.is_in_h2() {
        return crate::error::invariant("Moebius image left H2");
    }
    Ok(image)
}

/// `τ ↦ ᵗτ`.
pub fn involution_t(tau: &HermitianPoint) -> HermitianPoint {
    HermitianPoint::new(tau.tau().transpose())
}

/// `τ ↦ −½τ⁻¹`, the Möbius action of `W = [[0, −I₂], [2I₂, 0]]`.
pub fn involution_w(tau: &HermitianPoint) -> Result<HermitianPoint> {
    let inv = tower_inverse2(tau.tau())?;
    let minus_half = TowerNumber::rational(crate::exact_arith::rat(-1, 2));
    Ok(HermitianPoint::new(inv.map(|x| x * &minus_half)))
}

/// `W = [[0, −I₂], [2I₂, 0]]`.
pub fn w_matrix() -> HermMatrix4 {
    let i = EisMatrix2::identity();
    let z = EisMatrix2::zero();
    from_blocks(&z, &-&i, &i.map(|x| *x + *x), &z)
}

/// `W g W⁻¹ = [[D, −C/2], [−2B, A]]`; needs `C ≡ 0 mod 2`.
pub fn conjugate_by_w(g: &HermMatrix4) -> Result<HermMatrix4> {
    let (a, b, c, d) = blocks(g);
    let half = |x: &Eisenstein| {
        if x.is_even() {
            Ok(Eisenstein::new(-x.a / 2, -x.b / 2))
        } else {
            Err(Error::NotCongruent)
        }
    };
    let mut c2 = EisMatrix2::zero();
    for i in 0..2 {
        for j in 0..2 {
            c2[(i, j)] = half(&c[(i, j)])?;
        }
    }
    Ok(from_blocks(&d, &c2, &b.map(|x| -(*x + *x)), &a))
}

/// Entrywise conjugate `ḡ`; `T∘g∘T` acts as `ḡ`.
pub fn conj_entries(g: &HermMatrix4) -> HermMatrix4 {
    g.map(|x| x.conj())
}

pub(crate) fn is_identity2(m: &EisMatrix2) -> bool {
    m[(0, 0)].is_one() && m[(1, 1)].is_one() && m[(0, 1)].is_zero() && m[(1, 0)].is_zero()
}

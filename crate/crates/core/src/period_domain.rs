//! Exact points of the type-IV domain `D_M`, its two components, the
//! projective action of `O(M)`, and the map `Ψ` onto the Hermitian upper half
//! space of degree two.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_arith::{tower_sign_real, Matrix, TowerNumber};
use crate::lattice_m::{gram, is_orthogonal, OrthMatrix};

pub type TowerMatrix2 = Matrix<TowerNumber, 2>;

/// Projective point of `P⁵(Q(i,√3))`, first coordinate scaled to 1 when nonzero.
#[derive(Clone, PartialEq, Eq)]
pub struct PeriodPoint {
    coords: [TowerNumber; 6],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    Plus,
    Minus,
    None,
}

impl PeriodPoint {
    /// Fails only for the zero vector.
    pub fn new(coords: [TowerNumber; 6]) -> Result<Self> {
        if coords.iter().all(|c| c.is_zero()) {
            return Err(Error::ZeroVector);
        }
        if coords[0].is_zero() {
            return Ok(Self { coords });
        }
        let s = coords[0].inv()?;
        Ok(Self {
            coords: coords.map(|c| &c * &s),
        })
    }

    pub fn from_integers(re: [i128; 6], im: [i128; 6]) -> Result<Self> {
        let coords = std::array::from_fn(|k| {
            TowerNumber::gaussian(
                crate::exact_arith::rint(re[k]),
                crate::exact_arith::rint(im[k]),
            )
        });
        Self::new(coords)
    }

    pub fn coords(&self) -> &[TowerNumber; 6] {
        &self.coords
    }

    /// Coordinate `z_k`, 1-based.
    pub fn z(&self, k: usize) -> &TowerNumber {
        &self.coords[k - 1]
    }

    pub fn conj(&self) -> Self {
        Self {
            coords: self.coords.clone().map(|c| c.conj()),
        }
    }

    pub fn in_chart(&self) -> bool {
        !self.coords[0].is_zero()
    }
}

impl fmt::Display for PeriodPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, " : ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for PeriodPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `ᵗx Q y` over `Q(i,√3)`, without conjugation.
pub fn tower_pairing(x: &[TowerNumber; 6], y: &[TowerNumber; 6]) -> TowerNumber {
    let q = gram();
    let mut acc = TowerNumber::zero();
    for i in 0..6 {
        for j in 0..6 {
            let qij = q[(i, j)];
            if qij != 0 {
                acc = acc + (&x[i] * &y[j]).scale(&crate::exact_arith::rint(qij));
            }
        }
    }
    acc
}

/// `−2(z₃z₄ − z₅² + z₅z₆ − z₆²)`.
pub fn chart_z2(
    z3: &TowerNumber,
    z4: &TowerNumber,
    z5: &TowerNumber,
    z6: &TowerNumber,
) -> TowerNumber {
    let inner = z3 * z4 - z5 * z5 + z5 * z6 - z6 * z6;
    -(&inner + &inner)
}

pub fn dm_from_chart(
    z3: TowerNumber,
    z4: TowerNumber,
    z5: TowerNumber,
    z6: TowerNumber,
) -> PeriodPoint {
    let z2 = chart_z2(&z3, &z4, &z5, &z6);
    PeriodPoint {
        coords: [TowerNumber::one(), z2, z3, z4, z5, z6],
    }
}

/// `ᵗzQz̄`; real for every `z`.
pub fn positivity_value(z: &PeriodPoint) -> TowerNumber {
    tower_pairing(&z.coords, &z.conj().coords)
}

pub fn dm_membership(z: &PeriodPoint) -> Membership {
    if !tower_pairing(&z.coords, &z.coords).is_zero() {
        return Membership::None;
    }
    match tower_sign_real(&positivity_value(z)) {
        Ok(Ordering::Greater) => {}
        _ => return Membership::None,
    }
    // Im(z₃ z̄₁) is invariant under real rescaling and equals Im z₃ in the chart
    let y = (z.z(3) * &z.z(1).conj()).im();
    match tower_sign_real(&y) {
        Ok(Ordering::Greater) => Membership::Plus,
        Ok(Ordering::Less) => Membership::Minus,
        _ => Membership::None,
    }
}

/// Linear action `z ↦ gz`, renormalized to the affine chart.
pub fn act(g: &OrthMatrix, z: &PeriodPoint) -> Result<PeriodPoint> {
    if !is_orthogonal(g) {
        return Err(Error::NotOrthogonal);
    }
    let coords: [TowerNumber; 6] = std::array::from_fn(|i| {
        (0..6).fold(TowerNumber::zero(), |acc, j| {
            let gij = g[(i, j)];
            if gij == 0 {
                acc
            } else {
                acc + z.coords[j].scale(&crate::exact_arith::rint(gij))
            }
        })
    });
    if coords[0].is_zero() {
        return Err(Error::ChartEscape);
    }
    PeriodPoint::new(coords)
}

/// A 2×2 matrix `τ` over `Q(i,√3)`, viewed as a candidate point of `H₂`.
#[derive(Clone, PartialEq, Eq)]
pub struct HermitianPoint {
    tau: TowerMatrix2,
}

impl HermitianPoint {
    pub fn new(tau: TowerMatrix2) -> Self {
        Self { tau }
    }

    pub fn tau(&self) -> &TowerMatrix2 {
        &self.tau
    }

    pub fn into_tau(self) -> TowerMatrix2 {
        self.tau
    }

    pub fn entry(&self, i: usize, j: usize) -> &TowerNumber {
        &self.tau[(i, j)]
    }

    /// `Y = (τ − τ*)/(2i)`.
    pub fn imaginary_part(&self) -> TowerMatrix2 {
        let minus_half_i =
            TowerNumber::gaussian(crate::exact_arith::rint(0), crate::exact_arith::rat(-1, 2));
        Matrix::from_fn(|i, j| &(&self.tau[(i, j)] - &self.tau[(j, i)].conj()) * &minus_half_i)
    }

    pub fn is_in_h2(&self) -> bool {
        let y = self.imaginary_part();
        let y11 = matches!(tower_sign_real(&y[(0, 0)]), Ok(Ordering::Greater));
        y11 && matches!(tower_sign_real(&y.det()), Ok(Ordering::Greater))
    }

    pub fn det(&self) -> TowerNumber {
        self.tau.det()
    }
}

impl fmt::Display for HermitianPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.tau, f)
    }
}

impl fmt::Debug for HermitianPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.tau, f)
    }
}

/// `[1:z₂:…:z₆] ↦ [[z₃, z₅+ωz₆], [z₅+ω²z₆, z₄]]`.
pub fn psi(z: &PeriodPoint) -> Result<HermitianPoint> {
    if dm_membership(z) != Membership::Plus {
        return Err(Error::NotInDomain);
    }
    Ok(psi_unchecked(z))
}

/// `Ψ` without the membership test; requires `z₁ = 1`.
pub(crate) fn psi_unchecked(z: &PeriodPoint) -> HermitianPoint {
    let w = TowerNumber::omega();
    let w2 = &w * &w;
    let (z3, z4, z5, z6) = (z.z(3), z.z(4), z.z(5), z.z(6));
    HermitianPoint::new(Matrix::new([
        [z3.clone(), z5 + &(&w * z6)],
        [z5 + &(&w2 * z6), z4.clone()],
    ]))
}

pub fn psi_inv(tau: &HermitianPoint) -> Result<PeriodPoint> {
    if !tau.is_in_h2() {
        return Err(Error::NotInH2);
    }
    let w = TowerNumber::omega();
    let w2 = &w * &w;
    let t12 = tau.entry(0, 1);
    let t21 = tau.entry(1, 0);
    let z6 = (t12 - t21).try_div(&(&w - &w2))?;
    let z5 = t12 - &(&w * &z6);
    Ok(dm_from_chart(
        tau.entry(0, 0).clone(),
        tau.entry(1, 1).clone(),
        z5,
        z6,
    ))
}

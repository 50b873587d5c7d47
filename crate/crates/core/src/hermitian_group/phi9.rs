//! Cosets of `HΓ₀(2)` in the half-integral group `G` stabilizing the orbit
//! of the non-symmetric Heegner divisor.
//!
//! An element `g = [[A, B/2], [2C, D]]` of `G` is stored as the integral
//! matrix `h = [[A, B], [C, D]] ∈ HΓ`; `g = S h S⁻¹` with `S = diag(1,1,2,2)`,
//! so products in `G` are products of the stored matrices.

use std::fmt;

use super::{blocks, from_blocks, is_in_hgamma, membership, HMembership, HermB, HermMatrix4};
use crate::error::{Error, Result};
use crate::exact_arith::{EisMatrix2, Eisenstein};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GElement {
    scaled: HermMatrix4,
}

impl GElement {
    /// `h ↦ S h S⁻¹`; requires `h ∈ HΓ`.
    pub fn from_scaled(h: HermMatrix4) -> Result<Self> {
        if !is_in_hgamma(&h) {
            return Err(Error::NotMember("G (scaled matrix must lie in HGamma)"));
        }
        Ok(Self { scaled: h })
    }

    /// Embeds `g ∈ HΓ₀(2)` as `[[A, 2B], [C/2, D]]`.
    pub fn from_hgamma0(g: &HermMatrix4) -> Result<Self> {
        if membership(g) < HMembership::HGamma0 {
            return Err(Error::NotMember("HGamma0(2)"));
        }
        let (a, b, c, d) = blocks(g);
        let b2 = b.map(|x| *x + *x);
        let c2 = c.map(|x| Eisenstein::new(x.a / 2, x.b / 2));
        Self::from_scaled(from_blocks(&a, &b2, &c2, &d))
    }

    /// `rᵢ = [[I, Bᵢ/2], [0, I]]`, `i ∈ 1..=4`.
    pub fn coset_rep(i: usize) -> Result<Self> {
        let b = coset_b(i)?;
        Self::from_scaled(super::g_b_upper(&b))
    }

    pub fn scaled(&self) -> &HermMatrix4 {
        &self.scaled
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self {
            scaled: &self.scaled * &o.scaled,
        }
    }

    /// The integral matrix `g` when `B ≡ 0 mod 2`, which is then in `HΓ₀(2)`.
    pub fn to_integral(&self) -> Option<HermMatrix4> {
        let (a, b, c, d) = blocks(&self.scaled);
        if !(0..2).all(|i| (0..2).all(|j| b[(i, j)].is_even())) {
            return None;
        }
        let bh = b.map(|x| Eisenstein::new(x.a / 2, x.b / 2));
        let c2 = c.map(|x| *x + *x);
        Some(from_blocks(&a, &bh, &c2, &d))
    }
}

/// `B₁ = E₁₁`, `B₂ = E₂₂`, `B₃ = [[0, ω], [ω², 0]]`, `B₄ = [[0, ω²], [ω, 0]]`.
pub fn coset_b(i: usize) -> Result<HermB> {
    match i {
        1 => Ok(HermB::new(1, 0, 0, 0)),
        2 => Ok(HermB::new(0, 1, 0, 0)),
        3 => Ok(HermB::new(0, 0, 0, 1)),
        4 => Ok(HermB::new(0, 0, -1, -1)),
        _ => Err(Error::Precondition(format!(
            "coset index {i} outside 1..=4"
        ))),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CosetClass {
    Coset(u8),
    Uncovered,
}

impl fmt::Display for CosetClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CosetClass::Coset(i) => write!(f, "{i}"),
            CosetClass::Uncovered => f.write_str("uncovered"),
        }
    }
}

/// Smallest `i` with `g·rᵢ⁻¹ ∈ HΓ₀(2)`.
///
/// `g·rᵢ⁻¹` has blocks `[[A, (B − ABᵢ)/2], [2C, D − CBᵢ]]`, so the test is
/// `B ≡ A·Bᵢ mod 2`.
pub fn phi9_coset_classify(g: &GElement) -> CosetClass {
    let (a, b, _, _) = blocks(&g.scaled);
    for i in 1..=4 {
        let bi = coset_b(i).expect("index in range").matrix();
        let ab: EisMatrix2 = &a * &bi;
        if (0..2).all(|r| (0..2).all(|c| (b[(r, c)] - ab[(r, c)]).is_even())) {
            return CosetClass::Coset(i as u8);
        }
    }
    CosetClass::Uncovered
}

#[cfg(test)]
mod tests {
    use crate::sample::random_hgamma0;
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn representatives_classify_to_themselves() {
        for i in 1..=4 {
            let r = GElement::coset_rep(i).unwrap();
            assert_eq!(phi9_coset_classify(&r), CosetClass::Coset(i as u8));
        }
        assert!(coset_b(5).is_err());
        assert_eq!(coset_b(4).unwrap().matrix()[(0, 1)], Eisenstein::OMEGA2);
    }

    #[test]
    fn translates_of_representatives() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..100 {
            let h = GElement::from_hgamma0(&random_hgamma0(&mut rng, 4)).unwrap();
            assert_eq!(phi9_coset_classify(&h), CosetClass::Uncovered);
            for i in 1..=4 {
                let g = h.mul(&GElement::coset_rep(i).unwrap());
                let got = phi9_coset_classify(&g);
                let CosetClass::Coset(j) = got else {
                    panic!("h·r{i} uncovered")
                };
                // the class is a coset invariant: g·rⱼ⁻¹ is integral
                let rj_inv = GElement::from_scaled(super::super::g_b_upper(
                    &coset_b(j as usize).unwrap().neg(),
                ))
                .unwrap();
                let back = g.mul(&rj_inv).to_integral().expect("integral");
                assert!(membership(&back) >= HMembership::HGamma0);
                assert_eq!(j as usize, i);
            }
        }
    }

    #[test]
    fn integral_embedding() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        let g = random_hgamma0(&mut rng, 3);
        let e = GElement::from_hgamma0(&g).unwrap();
        assert_eq!(e.to_integral().unwrap(), g);
        assert!(GElement::from_hgamma0(&super::super::j_matrix()).is_err());
        let mut bad = HermMatrix4::identity();
        bad[(0, 3)] = Eisenstein::OMEGA;
        assert!(GElement::from_scaled(bad).is_err());
    }
}

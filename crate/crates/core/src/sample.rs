//! Seeded random generation of exact test data: points of `D_M⁺` and `H₂`,
//! and words in the generators of the groups involved.

use rand::Rng;

use crate::correspondence::{GenWordO, OToken};
use crate::exact_arith::{rat, EisMatrix2, Eisenstein, Matrix, TowerNumber};
use crate::heegner::Locus;
use crate::hermitian_group::{
    f4, g_a, g_b_lower, g_b_upper, GenWordH, HToken, HermB, HermMatrix4,
};
use crate::lattice_m::{named, OrthMatrix};
use crate::period_domain::{
    dm_from_chart, dm_membership, psi_inv, HermitianPoint, Membership, PeriodPoint,
};

fn gaussian<R: Rng>(rng: &mut R, re: (i128, i128, i128), im: (i128, i128, i128)) -> TowerNumber {
    TowerNumber::gaussian(
        rat(rng.gen_range(re.0..=re.1), re.2),
        rat(rng.gen_range(im.0..=im.1), im.2),
    )
}

/// Point of `D_M⁺` in the chart `z₁ = 1` with Gaussian-rational `z₃..z₆`.
pub fn random_period_point<R: Rng>(rng: &mut R) -> PeriodPoint {
    loop {
        let z3 = gaussian(rng, (-6, 6, 3), (2, 8, 2));
        let z4 = gaussian(rng, (-6, 6, 3), (2, 8, 2));
        let z5 = gaussian(rng, (-4, 4, 3), (-2, 2, 4));
        let z6 = gaussian(rng, (-4, 4, 3), (-2, 2, 4));
        let z = dm_from_chart(z3, z4, z5, z6);
        // Im z₃·Im z₄ ≥ 1 dominates the A₂ part, so this never retries
        if dm_membership(&z) == Membership::Plus {
            return z;
        }
    }
}

/// Point of `H₂` with `Im τ` positive definite and `τ` not Hermitian-symmetric.
pub fn random_tau<R: Rng>(rng: &mut R) -> HermitianPoint {
    let y11 = gaussian(rng, (-6, 6, 3), (2, 6, 2));
    let y22 = gaussian(rng, (-6, 6, 3), (2, 6, 2));
    // τ₂₁ = conj(τ₁₂) + i·s gives Im τ = [[y₁₁, s/2], [s/2, y₂₂]], positive for |s| ≤ 1
    let x12 = &gaussian(rng, (-6, 6, 3), (-4, 4, 2))
        + &(&TowerNumber::omega() * &gaussian(rng, (-6, 6, 3), (-4, 4, 2)));
    let s = TowerNumber::gaussian(rat(0, 1), rat(rng.gen_range(-1..=1), 1));
    let x21 = &x12.conj() + &s;
    HermitianPoint::new(Matrix::new([[y11, x12], [x21, y22]]))
}

/// Symmetric `τ ∈ H₂` with entries in `Q(i, √3)`.
pub fn random_symmetric_tau<R: Rng>(rng: &mut R) -> HermitianPoint {
    let mut entry = |im: (i128, i128, i128)| {
        TowerNumber::new(
            rat(rng.gen_range(-6..=6), 3),
            rat(rng.gen_range(-2..=2), 2),
            rat(rng.gen_range(im.0..=im.1), im.2),
            rat(0, 1),
        )
    };
    let y11 = entry((2, 6, 2));
    let y22 = entry((2, 6, 2));
    // |Im τ₁₂| ≤ 1/2 keeps Im τ positive definite
    let x12 = entry((-1, 1, 2));
    HermitianPoint::new(Matrix::new([[y11, x12.clone()], [x12, y22]]))
}

/// Point of `D_M⁺` on the Heegner divisor of `locus`, in the chart `z₁ = 1`.
pub fn random_on_locus<R: Rng>(rng: &mut R, locus: Locus) -> PeriodPoint {
    loop {
        let z = match locus {
            Locus::Node => {
                // solve 2 det τ = −1 for τ₂₂
                let t11 = gaussian(rng, (-3, 3, 2), (1, 4, 1));
                let t12 = gaussian(rng, (-1, 1, 4), (-1, 1, 4));
                let t21 = gaussian(rng, (-1, 1, 4), (-1, 1, 4));
                let num = &(&t12 * &t21) - &TowerNumber::rational(rat(1, 2));
                let t22 = num.try_div(&t11).expect("t11 has positive imaginary part");
                let tau = HermitianPoint::new(Matrix::new([[t11, t12], [t21, t22]]));
                if !tau.is_in_h2() {
                    continue;
                }
                psi_inv(&tau).expect("tau lies in H2")
            }
            _ => {
                let base = random_period_point(rng);
                let z5 = base.z(5).clone();
                let z6 = match locus {
                    Locus::Eckardt => &z5 + &z5,
                    Locus::Ns => TowerNumber::rational(rat(0, 1)),
                    _ => TowerNumber::rational(rat(1, 2)),
                };
                dm_from_chart(base.z(3).clone(), base.z(4).clone(), z5, z6)
            }
        };
        if dm_membership(&z) == Membership::Plus {
            return z;
        }
    }
}

/// Element of `G(2)` as a product of elementary level-2 matrices.
pub fn random_g2<R: Rng>(rng: &mut R, len: usize) -> EisMatrix2 {
    let mut m = EisMatrix2::identity();
    for _ in 0..len {
        let x = Eisenstein::new(2 * rng.gen_range(-1..=1), 2 * rng.gen_range(-1..=1));
        let (o, i) = (Eisenstein::ZERO, Eisenstein::ONE);
        let e = match rng.gen_range(0..3) {
            0 => EisMatrix2::new([[i, x], [o, i]]),
            1 => EisMatrix2::new([[i, o], [x, i]]),
            _ => EisMatrix2::new([[-i, o], [o, i]]),
        };
        m = &m * &e;
    }
    m
}

pub fn random_hermb<R: Rng>(rng: &mut R) -> HermB {
    HermB::new(
        rng.gen_range(-2..=2),
        rng.gen_range(-2..=2),
        rng.gen_range(-2..=2),
        rng.gen_range(-2..=2),
    )
}

/// Word in `g(A)`, `A ∈ G(2)`, `g(B)` and `g(B)_*`: an element of `HΓ₁(2)`.
pub fn random_hgamma1_word<R: Rng>(rng: &mut R, len: usize) -> GenWordH {
    GenWordH(
        (0..len)
            .map(|_| match rng.gen_range(0..3) {
                0 => HToken::A(random_g2(rng, 2)),
                1 => HToken::BUpper(random_hermb(rng)),
                _ => HToken::BLower(random_hermb(rng)),
            })
            .collect(),
    )
}

pub fn random_hgamma1<R: Rng>(rng: &mut R, len: usize) -> HermMatrix4 {
    let mut g = HermMatrix4::identity();
    for _ in 0..len {
        let t = match rng.gen_range(0..3) {
            0 => g_a(&random_g2(rng, 2)).expect("G(2) is invertible"),
            1 => g_b_upper(&random_hermb(rng)),
            _ => g_b_lower(&random_hermb(rng)),
        };
        g = &g * &t;
    }
    g
}

/// Element of `GL₂(Z[ω])` as a word in lifts of generators of `GL₂(F₄)`.
pub fn random_gl2<R: Rng>(rng: &mut R, len: usize) -> EisMatrix2 {
    let gens = f4::section_generators();
    let mut m = EisMatrix2::identity();
    for _ in 0..len {
        m = &m * &gens[rng.gen_range(0..gens.len())];
    }
    m
}

pub fn random_hgamma0<R: Rng>(rng: &mut R, len: usize) -> HermMatrix4 {
    let mut g = random_hgamma1(rng, len);
    for _ in 0..2 {
        g = &g_a(&random_gl2(rng, 3)).expect("GL2 is invertible") * &g;
    }
    g
}

fn small_vec<R: Rng>(rng: &mut R) -> [i128; 4] {
    std::array::from_fn(|_| rng.gen_range(-1..=1))
}

pub fn random_so0_word<R: Rng>(rng: &mut R, len: usize) -> GenWordO {
    GenWordO(
        (0..len)
            .map(|_| match rng.gen_range(0..9) {
                0 => OToken::H(small_vec(rng)),
                1 => OToken::HPrime(small_vec(rng)),
                2 => OToken::G1(rng.gen_range(-2..=2)),
                3 => OToken::G2(rng.gen_range(-2..=2)),
                4 => OToken::G1Conj(rng.gen_range(-2..=2)),
                5 => OToken::I42,
                6 => OToken::NegI42,
                7 => OToken::U0U1,
                _ => OToken::U2(rng.gen_range(1..=2)),
            })
            .collect(),
    )
}

/// Element of `SO⁺(M)₀`.
pub fn random_so0<R: Rng>(rng: &mut R, len: usize) -> OrthMatrix {
    random_so0_word(rng, len)
        .product()
        .expect("short words stay in range")
}

/// Element of `O⁺(M)` covering all four cosets of `SO⁺(M)₀`.
pub fn random_o_plus<R: Rng>(rng: &mut R, len: usize) -> OrthMatrix {
    let mut g = random_so0(rng, len);
    if rng.gen_bool(0.5) {
        g = &named::w_lift() * &g;
    }
    if rng.gen_bool(0.5) {
        g = &named::u1() * &g;
    }
    g
}

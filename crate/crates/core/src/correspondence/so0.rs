//! Constructive generation of `SO⁺(M)₀`: column-by-column reduction of an
//! element to the identity by left multiplication with generators.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{
    i42_preimage, narrow6, prime_to_lower, psi_big, swap_matrix, translation_h_big,
    translation_h_prime_big, u2_preimage, widen6, BigOrth,
};
use crate::error::{invariant, Error, Result};
use crate::exact_arith::eis_big::{nearest_int, widen, EisBig};
use crate::exact_arith::{EisMatrix2, Eisenstein};
use crate::hermitian_group::{HToken, HermB};
use crate::lattice_m::{block_parity, named, orientation, BlockParity, OrthMatrix, Orientation};

/// Generators of `SO⁺(M)₀`. `H(m)` stands for `h₁^m₁ h₂^m₂ h₃^m₃ h₄^m₄`,
/// `HPrime(m)` for the same product of the `hᵢ′`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum OToken {
    H([i128; 4]),
    HPrime([i128; 4]),
    G1(i128),
    G2(i128),
    /// Powers of `u₀g₁u₀`.
    G1Conj(i128),
    I42,
    NegI42,
    U0U1,
    /// `u₂^k`, `k ∈ {0, 1, 2}`.
    U2(u8),
}

fn lower_unipotent(k: Eisenstein) -> EisMatrix2 {
    EisMatrix2::new([[Eisenstein::ONE, Eisenstein::ZERO], [k, Eisenstein::ONE]])
}

impl OToken {
    /// Hermitian partner: `g(B)`, `g(B)_*` or `g(A)`.
    pub fn herm_token(&self) -> HToken {
        match *self {
            OToken::H(m) => HToken::BUpper(HermB { m }),
            OToken::HPrime(m) => HToken::BLower(prime_to_lower(m)),
            OToken::G1(k) => HToken::A(lower_unipotent(Eisenstein::new(k, 0))),
            OToken::G2(k) => HToken::A(lower_unipotent(Eisenstein::new(-k, -k))),
            OToken::G1Conj(k) => HToken::A(EisMatrix2::new([
                [Eisenstein::ONE, Eisenstein::new(k, 0)],
                [Eisenstein::ZERO, Eisenstein::ONE],
            ])),
            OToken::I42 | OToken::NegI42 => HToken::A(i42_preimage()),
            OToken::U0U1 => HToken::A(swap_matrix()),
            OToken::U2(k) => HToken::A(u2_preimage().pow(k as u64)),
        }
    }

    pub fn matrix_big(&self) -> BigOrth {
        let neg_i42 = || widen6(&named::i24());
        match *self {
            OToken::H(m) => translation_h_big(&m.map(BigInt::from)),
            OToken::HPrime(m) => translation_h_prime_big(&m.map(BigInt::from)),
            OToken::NegI42 => neg_i42(),
            _ => {
                let HToken::A(a) = self.herm_token() else {
                    unreachable!("remaining tokens come from g(A)")
                };
                psi_big(&widen(&a))
            }
        }
    }

    pub fn matrix(&self) -> Result<OrthMatrix> {
        narrow6(&self.matrix_big())
    }

    pub fn inverse(&self) -> OToken {
        match *self {
            OToken::H(m) => OToken::H(m.map(|x| -x)),
            OToken::HPrime(m) => OToken::HPrime(m.map(|x| -x)),
            OToken::G1(k) => OToken::G1(-k),
            OToken::G2(k) => OToken::G2(-k),
            OToken::G1Conj(k) => OToken::G1Conj(-k),
            OToken::U2(k) => OToken::U2((3 - k % 3) % 3),
            t @ (OToken::I42 | OToken::NegI42 | OToken::U0U1) => t,
        }
    }

    fn is_trivial(&self) -> bool {
        match *self {
            OToken::H(m) | OToken::HPrime(m) => m == [0; 4],
            OToken::G1(k) | OToken::G2(k) | OToken::G1Conj(k) => k == 0,
            OToken::U2(k) => k % 3 == 0,
            _ => false,
        }
    }
}

impl fmt::Display for OToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OToken::H(m) => write!(f, "h({},{},{},{})", m[0], m[1], m[2], m[3]),
            OToken::HPrime(m) => write!(f, "h'({},{},{},{})", m[0], m[1], m[2], m[3]),
            OToken::G1(k) => write!(f, "g1^{k}"),
            OToken::G2(k) => write!(f, "g2^{k}"),
            OToken::G1Conj(k) => write!(f, "(u0g1u0)^{k}"),
            OToken::I42 => f.write_str("I42"),
            OToken::NegI42 => f.write_str("-I42"),
            OToken::U0U1 => f.write_str("u0u1"),
            OToken::U2(k) => write!(f, "u2^{k}"),
        }
    }
}

/// Word in the generators of `SO⁺(M)₀`, read left to right as a matrix product.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GenWordO(pub Vec<OToken>);

impl GenWordO {
    pub fn product_big(&self) -> BigOrth {
        self.0
            .iter()
            .fold(BigOrth::identity(), |acc, t| &acc * &t.matrix_big())
    }

    pub fn product(&self) -> Result<OrthMatrix> {
        narrow6(&self.product_big())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for GenWordO {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("·")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

fn small(x: &BigInt) -> Result<i128> {
    x.to_i128().ok_or(Error::Overflow("generator exponent"))
}

struct Reducer {
    x: BigOrth,
    ops: Vec<OToken>,
}

impl Reducer {
    fn apply(&mut self, t: OToken) {
        if t.is_trivial() {
            return;
        }
        self.x = &t.matrix_big() * &self.x;
        self.ops.push(t);
    }

    fn col(&self, j: usize) -> [BigInt; 6] {
        std::array::from_fn(|i| self.x[(i, j)].clone())
    }

    /// Euclid on the entries `(p, q)` of column `j`, `p` odd: `up(k)` maps
    /// `p ↦ p − 2kq` and `down(k)` maps `q ↦ q + kp`, until `q = 0`.
    fn odd_euclid(
        &mut self,
        j: usize,
        (ip, iq): (usize, usize),
        up: impl Fn(i128) -> OToken,
        down: impl Fn(i128) -> OToken,
    ) -> Result<()> {
        loop {
            let c = self.col(j);
            let (p, q) = (&c[ip], &c[iq]);
            if q.is_zero() {
                return Ok(());
            }
            if p.is_zero() {
                return invariant("odd pivot vanished");
            }
            let before = p.abs() + q.abs();
            if q.abs() >= p.abs() {
                self.apply(down(small(&-nearest_int(q, p)?)?));
            } else {
                self.apply(up(small(&nearest_int(p, &(q * 2))?)?));
            }
            let c = self.col(j);
            if c[ip].abs() + c[iq].abs() >= before {
                return invariant("odd Euclid step did not decrease");
            }
        }
    }

    /// Shrinks `z = x[(i5, j)] + ω x[(i6, j)]` by subtracting multiples of
    /// rational pivots until `z = 0`. `shift(κ, first)` subtracts `κ` times
    /// the first or second pivot.
    fn shrink(
        &mut self,
        j: usize,
        pivots: (usize, usize),
        shift: impl Fn(&mut Self, &EisBig, bool) -> Result<()>,
    ) -> Result<()> {
        loop {
            let c = self.col(j);
            let z = EisBig::new(c[4].clone(), c[5].clone());
            if z.is_zero() {
                return Ok(());
            }
            let (p1, p2) = (&c[pivots.0], &c[pivots.1]);
            if p1.is_zero() || p2.is_zero() {
                return invariant("isotropy relation violated: pivot vanished with z ≠ 0");
            }
            let first = p1.abs() <= p2.abs();
            let p = EisBig::new(if first { p1.clone() } else { p2.clone() }, 0);
            let kappa = EisBig::nearest_multiple(&z, &p)?;
            shift(self, &kappa, first)?;
            let c = self.col(j);
            if EisBig::new(c[4].clone(), c[5].clone()).norm() >= z.norm() {
                return invariant("reduction of z did not decrease its norm");
            }
        }
    }
}

fn check_so0(x: &OrthMatrix) -> Result<()> {
    if orientation(x)? != Orientation::Plus {
        return Err(Error::NotOrientationPreserving);
    }
    if x.det() != 1 {
        return Err(Error::NotMember("SO+(M)0 (determinant must be 1)"));
    }
    if block_parity(x)? != BlockParity::Diagonal {
        return Err(Error::NotMember("SO+(M)0 (upper-left block must be I2 mod 2)"));
    }
    Ok(())
}

/// Writes `X ∈ SO⁺(M)₀` as a word whose product is exactly `X`.
pub fn decompose_so0(x: &OrthMatrix) -> Result<GenWordO> {
    check_so0(x)?;
    let mut r = Reducer {
        x: widen6(x),
        ops: Vec::new(),
    };

    // column 2: clear a₃ with h₂ and h₁′
    r.odd_euclid(
        1,
        (1, 2),
        |k| OToken::H([0, k, 0, 0]),
        |k| OToken::HPrime([k, 0, 0, 0]),
    )?;
    // a₁a₂ = 2|a₅ + ωa₆|²: shrink z with h(0,0,·,·) and h′(0,0,·,·)
    r.shrink(1, (0, 1), |r, k, first| {
        let m = [0, 0, small(&-&k.a)?, small(&-&k.b)?];
        r.apply(if first { OToken::H(m) } else { OToken::HPrime(m) });
        Ok(())
    })?;
    let c = r.col(1);
    if !c[0].is_zero() {
        return invariant("a1 must vanish once a3 = z = 0");
    }
    r.odd_euclid(
        1,
        (1, 3),
        |k| OToken::H([k, 0, 0, 0]),
        |k| OToken::HPrime([0, k, 0, 0]),
    )?;
    let a2 = r.col(1)[1].clone();
    if a2 == -BigInt::one() {
        r.apply(OToken::NegI42);
    } else if !a2.is_one() {
        return invariant("column 2 is not primitive");
    }
    // column 2 is e₂, hence row 1 is e₁ᵀ; strip the translation part
    let c = r.col(0);
    let m: [i128; 4] = [small(&-&c[2])?, small(&-&c[3])?, small(&-&c[4])?, small(&-&c[5])?];
    r.apply(OToken::H(m));
    for i in 0..6 {
        for j in 0..2 {
            let want = if i == j { BigInt::one() } else { BigInt::zero() };
            if r.x[(i, j)] != want || r.x[(j, i)] != want {
                return invariant("expected the block form I2 ⊕ X'");
            }
        }
    }

    // column 4: b₃b₄ = |b₅ + ωb₆|²
    r.shrink(3, (2, 3), |r, k, first| {
        if first {
            r.apply(OToken::G1(small(&-&k.a)?));
            r.apply(OToken::G2(small(&-&k.b)?));
        } else {
            // κ = p + qω²; the ω² direction is u₂⁻¹(u₀g₁u₀)u₂
            let p = small(&(&k.a - &k.b))?;
            let q = small(&-&k.b)?;
            r.apply(OToken::G1Conj(-p));
            if q != 0 {
                r.apply(OToken::U2(1));
                r.apply(OToken::G1Conj(-q));
                r.apply(OToken::U2(2));
            }
        }
        Ok(())
    })?;
    if r.col(3)[3].is_zero() {
        r.apply(OToken::U0U1);
    }
    let b = r.col(3);
    if !(b[2].is_zero() && b[3].is_one()) {
        return invariant("column 4 did not reduce to e4");
    }

    // residual g₁ˣg₂ʸ times a unit of the A₂ block
    let y = narrow6(&r.x)?;
    let mut tail = None;
    'search: for s in [false, true] {
        for k in 0..3u8 {
            let rot = GenWordO(
                [OToken::I42, OToken::U2(k)]
                    .into_iter()
                    .filter(|t| s || *t != OToken::I42)
                    .collect(),
            );
            let rot_inv = GenWordO(rot.0.iter().rev().map(OToken::inverse).collect());
            let t = &y * &rot_inv.product()?;
            let (p, q) = (t[(4, 2)], t[(5, 2)]);
            let unip = GenWordO(vec![OToken::G1(p), OToken::G2(q)]);
            if unip.product()? == t {
                tail = Some(
                    unip.0
                        .into_iter()
                        .chain(rot.0)
                        .filter(|t| !t.is_trivial())
                        .collect::<Vec<_>>(),
                );
                break 'search;
            }
        }
    }
    let Some(tail) = tail else {
        return invariant("residual is not g1^x g2^y times a unit of A2");
    };

    let mut word: Vec<OToken> = r.ops.iter().map(OToken::inverse).collect();
    word.extend(tail);
    let word = GenWordO(word);
    if word.product_big() != widen6(x) {
        return invariant("word product differs from the input");
    }
    Ok(word)
}

//! Dictionary between `O⁺(M)` acting on `D_M⁺` and the Hermitian modular
//! group acting on `H₂`, realized on generators.

pub mod so0;

pub use so0::{decompose_so0, GenWordO, OToken};

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exact_arith::eis_big::{widen, EisBig};
use crate::exact_arith::{EisMatrix2, Eisenstein, Matrix};
use crate::hermitian_group::{
    involution_t, involution_w, moebius, GenWordH, HToken, HermB, HermMatrix4,
};
use crate::lattice_m::{
    block_parity, is_orthogonal, named, orientation, translation_h, BlockParity, OrthMatrix,
    Orientation,
};
use crate::period_domain::{act, psi, HermitianPoint, PeriodPoint};

pub type BigOrth = Matrix<BigInt, 6>;

pub(crate) fn widen6(m: &OrthMatrix) -> BigOrth {
    m.map(|x| BigInt::from(*x))
}

pub(crate) fn narrow6(m: &BigOrth) -> Result<OrthMatrix> {
    let mut out = OrthMatrix::zero();
    for i in 0..6 {
        for j in 0..6 {
            out[(i, j)] = m[(i, j)]
                .to_i128()
                .ok_or(Error::Overflow("orthogonal matrix entry"))?;
        }
    }
    Ok(out)
}

/// `ψ(A)` over arbitrary-precision Eisenstein integers.
///
/// For `x = p + qω` the entries use `2·Re x = 2p − q` and `(2/√3)·Im x = q`.
pub fn psi_big(a: &Matrix<EisBig, 2>) -> BigOrth {
    let (a1, a2, a3, a4) = (&a[(0, 0)], &a[(0, 1)], &a[(1, 0)], &a[(1, 1)]);
    let w = EisBig::new(0, 1);
    let m = |x: &EisBig, y: &EisBig| x * &y.conj();
    let wm = |x: EisBig| &w * &x;
    let (a12, a34) = (m(a1, a2), m(a3, a4));
    let tail = [
        [a1.norm(), a2.norm(), a12.re2(), wm(a12.clone()).re2()],
        [a3.norm(), a4.norm(), a34.re2(), wm(a34.clone()).re2()],
        [
            wm(m(a3, a1)).b,
            wm(m(a4, a2)).b,
            wm(m(a4, a1) + m(a3, a2)).b,
            (m(a4, a1) - wm(m(a2, a3))).b,
        ],
        [
            m(a1, a3).b,
            m(a2, a4).b,
            (m(a1, a4) + m(a2, a3)).b,
            wm(m(a1, a4) - m(a3, a2)).b,
        ],
    ];
    let mut out = BigOrth::identity();
    for (i, row) in tail.into_iter().enumerate() {
        for (j, x) in row.into_iter().enumerate() {
            out[(2 + i, 2 + j)] = x;
        }
    }
    out
}

/// The homomorphism `ψ: GL₂(Z[ω]) → SO⁺(M)`, trivial exactly on the unit scalars.
pub fn psi_hom(a: &EisMatrix2) -> Result<OrthMatrix> {
    if !a.det().is_unit() {
        return Err(Error::NotInvertible);
    }
    narrow6(&psi_big(&widen(a)))
}

/// `h'(m) = g₀·h(m)·g₀`: `h(m)` with the first two rows and columns swapped.
fn swap12(m: &BigOrth) -> BigOrth {
    let p = |i: usize| match i {
        0 => 1,
        1 => 0,
        k => k,
    };
    Matrix::from_fn(|i, j| m[(p(i), p(j))].clone())
}

pub(crate) fn translation_h_big(m: &[BigInt; 4]) -> BigOrth {
    let qt = [[0, 2, 0, 0], [2, 0, 0, 0], [0, 0, -4, 2], [0, 0, 2, -4]];
    let qm: [BigInt; 4] =
        std::array::from_fn(|i| (0..4).map(|j| &m[j] * qt[i][j]).sum::<BigInt>());
    let mqm: BigInt = (0..4).map(|i| &m[i] * &qm[i]).sum();
    let mut h = BigOrth::identity();
    h[(1, 0)] = -(mqm / BigInt::from(2));
    for k in 0..4 {
        h[(2 + k, 0)] = m[k].clone();
        h[(1, 2 + k)] = -qm[k].clone();
    }
    h
}

pub(crate) fn translation_h_prime_big(m: &[BigInt; 4]) -> BigOrth {
    swap12(&translation_h_big(m))
}

/// Coefficients `m` of `h'(m)` corresponding to `g(B)_*`.
///
/// Conjugating by `g₀` is `W` composed with `τ ↦ J τᵀ J⁻¹`, which sends
/// `B(m₁, m₂, m₃, m₄)` to `−B(m₂, m₁, −m₃, −m₄)`.
pub fn lower_to_prime(b: &HermB) -> [i128; 4] {
    let [b1, b2, b3, b4] = b.m;
    [-b2, -b1, b3, b4]
}

pub fn prime_to_lower(m: [i128; 4]) -> HermB {
    HermB::new(-m[1], -m[0], m[2], m[3])
}

/// Hermitian side of a dictionary entry: `τ ↦ Tᵗ(Wʷ(word·τ))`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HermImage {
    pub uses_t: bool,
    pub uses_w: bool,
    pub word: GenWordH,
}

impl HermImage {
    pub fn word(tokens: Vec<HToken>) -> Self {
        Self {
            uses_t: false,
            uses_w: false,
            word: GenWordH(tokens),
        }
    }

    pub fn with_flags(uses_t: bool, uses_w: bool, tokens: Vec<HToken>) -> Self {
        Self {
            uses_t,
            uses_w,
            word: GenWordH(tokens),
        }
    }

    pub fn act(&self, tau: &HermitianPoint) -> Result<HermitianPoint> {
        let mut t = if self.word.is_empty() {
            tau.clone()
        } else {
            moebius(&self.word.product()?, tau)?
        };
        if self.uses_w {
            t = involution_w(&t)?;
        }
        if self.uses_t {
            t = involution_t(&t);
        }
        Ok(t)
    }

    /// Product of the word as a matrix of `HΓ`.
    pub fn matrix(&self) -> Result<HermMatrix4> {
        self.word.product()
    }
}

impl fmt::Display for HermImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.uses_t {
            f.write_str("T·")?;
        }
        if self.uses_w {
            f.write_str("W·")?;
        }
        write!(f, "{}", self.word)
    }
}

#[derive(Clone, Debug)]
pub struct DictionaryEntry {
    pub name: &'static str,
    pub orth: OrthMatrix,
    pub herm: HermImage,
}

fn e(a: i128, b: i128) -> Eisenstein {
    Eisenstein::new(a, b)
}

fn m2(rows: [[Eisenstein; 2]; 2]) -> EisMatrix2 {
    EisMatrix2::new(rows)
}

pub fn swap_matrix() -> EisMatrix2 {
    m2([[e(0, 0), e(1, 0)], [e(1, 0), e(0, 0)]])
}

/// `diag(1, −1)`, whose image under `ψ` is `I₄,₂ = I₄ ⊕ (−I₂)`.
pub fn i42_preimage() -> EisMatrix2 {
    m2([[e(1, 0), e(0, 0)], [e(0, 0), e(-1, 0)]])
}

/// `diag(ω, 1)`, with `ψ` image `u₂`: it multiplies `τ₁₂ = z₅ + ωz₆` by `ω`
/// and fixes the diagonal of `τ`.
pub fn u2_preimage() -> EisMatrix2 {
    m2([[e(0, 1), e(0, 0)], [e(0, 0), e(1, 0)]])
}

/// `[[0, −1], [1, −1]]`, the matrix listed alongside `u₂` in the classical
/// dictionary; its image moves `τ₁₁`, so it is not `u₂`.
pub fn u2_listed_preimage() -> EisMatrix2 {
    m2([[e(0, 0), e(-1, 0)], [e(1, 0), e(-1, 0)]])
}

/// Named generators of `O⁺(M)` with their Hermitian counterparts.
#[derive(Clone, Debug)]
pub struct GeneratorTable {
    pub entries: Vec<DictionaryEntry>,
}

impl GeneratorTable {
    pub fn standard() -> Self {
        let a = |m: EisMatrix2| HToken::A(m);
        let j2 = m2([[e(0, 0), e(1, 0)], [e(-1, 0), e(0, 0)]]);
        let j2d = m2([[e(0, 0), e(-1, 0)], [e(-1, 0), e(0, 0)]]);
        let mut entries = vec![
            DictionaryEntry {
                name: "g0",
                orth: named::g0(),
                herm: HermImage::with_flags(true, true, vec![a(j2.clone())]),
            },
            DictionaryEntry {
                name: "g1",
                orth: named::g1(),
                herm: HermImage::word(vec![a(m2([[e(1, 0), e(0, 0)], [e(1, 0), e(1, 0)]]))]),
            },
            DictionaryEntry {
                name: "g2",
                orth: named::g2(),
                herm: HermImage::word(vec![a(m2([[e(1, 0), e(0, 0)], [e(-1, -1), e(1, 0)]]))]),
            },
            DictionaryEntry {
                name: "u0",
                orth: named::u0(),
                herm: HermImage::with_flags(true, false, vec![a(j2d)]),
            },
            DictionaryEntry {
                name: "u1",
                orth: named::u1(),
                herm: HermImage::with_flags(true, false, vec![]),
            },
            DictionaryEntry {
                name: "u2",
                orth: named::u2(),
                herm: HermImage::word(vec![a(u2_preimage())]),
            },
            DictionaryEntry {
                name: "I42",
                orth: named::i42(),
                herm: HermImage::word(vec![a(i42_preimage())]),
            },
            DictionaryEntry {
                name: "-I42",
                orth: named::i24(),
                herm: HermImage::word(vec![a(i42_preimage())]),
            },
            DictionaryEntry {
                name: "u0g1u0",
                orth: named::g1_conj(),
                herm: HermImage::word(vec![a(m2([[e(1, 0), e(1, 0)], [e(0, 0), e(1, 0)]]))]),
            },
            DictionaryEntry {
                name: "u0u1",
                orth: &named::u0() * &named::u1(),
                herm: HermImage::word(vec![a(swap_matrix())]),
            },
            DictionaryEntry {
                name: "g0u0I42",
                orth: named::w_lift(),
                herm: HermImage::with_flags(false, true, vec![]),
            },
            DictionaryEntry {
                name: "g0I42",
                orth: &named::g0() * &named::i42(),
                herm: HermImage::with_flags(true, true, vec![a(swap_matrix())]),
            },
        ];
        const H_NAMES: [&str; 4] = ["h1", "h2", "h3", "h4"];
        const HP_NAMES: [&str; 4] = ["h1'", "h2'", "h3'", "h4'"];
        for i in 0..4 {
            let mut m = [0i128; 4];
            m[i] = 1;
            entries.push(DictionaryEntry {
                name: H_NAMES[i],
                orth: translation_h(m),
                herm: HermImage::word(vec![HToken::BUpper(HermB { m })]),
            });
            entries.push(DictionaryEntry {
                name: HP_NAMES[i],
                orth: named::h_prime(m),
                herm: HermImage::word(vec![HToken::BLower(prime_to_lower(m))]),
            });
        }
        Self { entries }
    }

    pub fn get(&self, name: &str) -> Option<&DictionaryEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}

/// Exact check of `Ψ(g·z) = (Hermitian side)(Ψ(z))`.
pub fn equivariance_check(entry: &DictionaryEntry, z: &PeriodPoint) -> Result<bool> {
    equivariance_check_pair(&entry.orth, &entry.herm, z)
}

pub fn equivariance_check_pair(g: &OrthMatrix, herm: &HermImage, z: &PeriodPoint) -> Result<bool> {
    let lhs = psi(&act(g, z)?)?;
    let rhs = herm.act(&psi(z)?)?;
    Ok(lhs == rhs)
}

/// Hermitian word acting on `H₂` as `g` acts on `D_M⁺`.
pub fn orth_to_herm(g: &OrthMatrix) -> Result<HermImage> {
    if !is_orthogonal(g) {
        return Err(Error::NotOrthogonal);
    }
    if orientation(g)? != Orientation::Plus {
        return Err(Error::NotOrientationPreserving);
    }
    let mut x = g.clone();
    let uses_t = x.det() == -1;
    if uses_t {
        x = &named::u1() * &x;
    }
    let uses_w = block_parity(&x)? == BlockParity::Antidiagonal;
    if uses_w {
        x = &named::w_lift() * &x;
    }
    let word = decompose_so0(&x)?;
    Ok(HermImage {
        uses_t,
        uses_w,
        word: GenWordH(word.0.iter().map(OToken::herm_token).collect()),
    })
}

/// Orthogonal image of a Hermitian word, defined up to `±I₆`.
pub fn herm_to_orth(img: &HermImage) -> Result<OrthMatrix> {
    let mut acc = BigOrth::identity();
    if img.uses_t {
        acc = widen6(&named::u1());
    }
    if img.uses_w {
        acc = &acc * &widen6(&named::w_lift());
    }
    for t in &img.word.0 {
        let m = match t {
            HToken::A(a) => {
                if !a.det().is_unit() {
                    return Err(Error::NotInvertible);
                }
                psi_big(&widen(a))
            }
            HToken::BUpper(b) => translation_h_big(&b.m.map(BigInt::from)),
            HToken::BLower(b) => translation_h_prime_big(&lower_to_prime(b).map(BigInt::from)),
        };
        acc = &acc * &m;
    }
    narrow6(&acc)
}

/// Whether two orthogonal matrices agree up to sign.
pub fn equal_mod_sign(a: &OrthMatrix, b: &OrthMatrix) -> bool {
    a == b || *a == b.map(|x| -x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermitian_group::{membership, HMembership};
    use num_traits::Zero;
    use crate::lattice_m::{is_in_enr, is_plus};
    use crate::sample;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn psi_examples() {
        assert!(psi_hom(&EisMatrix2::identity()).unwrap().is_identity());
        for u in Eisenstein::UNITS {
            assert!(psi_hom(&EisMatrix2::scalar(u)).unwrap().is_identity());
        }
        let t = GeneratorTable::standard();
        for name in ["g1", "g2", "u2", "I42", "u0g1u0", "u0u1"] {
            let entry = t.get(name).unwrap();
            let HToken::A(a) = &entry.herm.word.0[0] else {
                unreachable!()
            };
            assert_eq!(psi_hom(a).unwrap(), entry.orth, "{name}");
        }
        assert_ne!(psi_hom(&u2_listed_preimage()).unwrap(), named::u2());
        let singular = m2([[e(1, 0), e(1, 0)], [e(1, 0), e(1, 0)]]);
        assert!(matches!(psi_hom(&singular), Err(Error::NotInvertible)));
        let two = EisMatrix2::scalar(e(2, 0));
        assert!(psi_hom(&two).is_err());
    }

    #[test]
    fn psi_is_homomorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let mut nonscalar_trivial = 0;
        for _ in 0..200 {
            let a = sample::random_gl2(&mut rng, 4);
            let b = sample::random_gl2(&mut rng, 4);
            let pa = psi_hom(&a).unwrap();
            assert!(is_orthogonal(&pa) && is_plus(&pa) && pa.det() == 1);
            assert_eq!(psi_hom(&(&a * &b)).unwrap(), &pa * &psi_hom(&b).unwrap());
            let scalar = a[(0, 1)].is_zero() && a[(1, 0)].is_zero() && a[(0, 0)] == a[(1, 1)];
            if !scalar && pa.is_identity() {
                nonscalar_trivial += 1;
            }
        }
        assert_eq!(nonscalar_trivial, 0);
    }

    #[test]
    fn level_two_congruence() {
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        for _ in 0..100 {
            let a = sample::random_g2(&mut rng, 3);
            let p = psi_hom(&a).unwrap();
            assert!(p.map(|x| x.rem_euclid(2)).is_identity());
        }
        let p = psi_hom(&swap_matrix()).unwrap();
        assert!(!p.map(|x| x.rem_euclid(2)).is_identity());
    }

    #[test]
    fn dictionary_is_sound() {
        let table = GeneratorTable::standard();
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        let points: Vec<PeriodPoint> = (0..20).map(|_| sample::random_period_point(&mut rng)).collect();
        for entry in &table.entries {
            assert!(is_orthogonal(&entry.orth), "{}", entry.name);
            assert!(is_plus(&entry.orth), "{}", entry.name);
            for z in &points {
                assert!(equivariance_check(entry, z).unwrap(), "{} at {z}", entry.name);
            }
        }
    }

    #[test]
    fn dictionary_examples_at_base_point() {
        let q0 = PeriodPoint::from_integers([1, 8, 0, 0, 0, 0], [0, 0, 2, 2, 0, 0]).unwrap();
        let table = GeneratorTable::standard();
        for name in ["h1", "u1", "g0u0I42"] {
            assert!(equivariance_check(table.get(name).unwrap(), &q0).unwrap());
        }
        // the identity is not a valid partner of h1
        let h1 = table.get("h1").unwrap();
        assert!(!equivariance_check_pair(&h1.orth, &HermImage::word(vec![]), &q0).unwrap());
    }

    #[test]
    fn orth_to_herm_examples() {
        let img = orth_to_herm(&translation_h([0, 1, 0, 0])).unwrap();
        assert!(!img.uses_t && !img.uses_w);
        assert_eq!(img.word.0, vec![HToken::BUpper(HermB::new(0, 1, 0, 0))]);
        let img = orth_to_herm(&named::u1()).unwrap();
        assert!(img.uses_t && !img.uses_w && img.word.is_empty());
        let img = orth_to_herm(&named::w_lift()).unwrap();
        assert!(!img.uses_t && img.uses_w && img.word.is_empty());
        let minus = named::neg_identity();
        assert!(orth_to_herm(&minus).unwrap().word.product().is_ok());
        let mut bad = OrthMatrix::identity();
        bad[(0, 1)] = 1;
        assert!(matches!(orth_to_herm(&bad), Err(Error::NotOrthogonal)));
    }

    #[test]
    fn herm_to_orth_examples() {
        assert!(herm_to_orth(&HermImage::word(vec![])).unwrap().is_identity());
        let mut rng = ChaCha8Rng::seed_from_u64(34);
        for _ in 0..20 {
            let a = sample::random_g2(&mut rng, 3);
            let g = herm_to_orth(&HermImage::word(vec![HToken::A(a)])).unwrap();
            assert!(is_in_enr(&g).unwrap());
        }
        let bad = HermImage::word(vec![HToken::A(EisMatrix2::scalar(e(2, 0)))]);
        assert!(herm_to_orth(&bad).is_err());
    }

    #[test]
    fn round_trips() {
        let mut rng = ChaCha8Rng::seed_from_u64(35);
        let points: Vec<PeriodPoint> = (0..3).map(|_| sample::random_period_point(&mut rng)).collect();
        for _ in 0..50 {
            let g = sample::random_o_plus(&mut rng, 6);
            let img = orth_to_herm(&g).unwrap();
            assert!(membership(&img.matrix().unwrap()) >= HMembership::HGamma0);
            let back = herm_to_orth(&img).unwrap();
            assert!(equal_mod_sign(&back, &g));
            for z in &points {
                assert!(equivariance_check_pair(&g, &img, z).unwrap());
            }
        }
    }

    #[test]
    fn index_two_split() {
        let mut rng = ChaCha8Rng::seed_from_u64(36);
        let w = named::w_lift();
        for _ in 0..50 {
            let mut g = sample::random_so0(&mut rng, 6);
            if rng.gen_bool(0.5) {
                g = &w * &g;
            }
            let in0 = |x: &OrthMatrix| block_parity(x).unwrap() == BlockParity::Diagonal;
            assert_eq!(g.det(), 1);
            assert!(in0(&g) ^ in0(&(&w * &g)));
        }
    }

    #[test]
    fn enr_transport() {
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        for _ in 0..100 {
            let word = sample::random_hgamma1_word(&mut rng, 6);
            let g = herm_to_orth(&HermImage { uses_t: false, uses_w: false, word }).unwrap();
            assert!(is_in_enr(&g).unwrap());
        }
        let odd = herm_to_orth(&HermImage::word(vec![HToken::A(swap_matrix())])).unwrap();
        assert!(!is_in_enr(&odd).unwrap());
    }
}

//! Division algorithm writing elements of `HΓ₁(2)` as words in `g(A)`,
//! `g(B)` and `g(B)_*`, and the reduction of `HΓ₀(2)` to `HΓ₁(2)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::f4::{section, F4Matrix};
use super::{
    blocks, g_a, g_b_lower, g_b_upper, is_identity2, membership, HMembership, HermB, HermMatrix4,
};
use crate::error::{invariant, Error, Result};
use crate::exact_arith::eis_big::{self, narrow, widen, EisBig};
use crate::exact_arith::{
    g2_column_reduce, inverse2, size_reduce_g2, EisMatrix2, Eisenstein, Matrix,
};

#[derive(Clone, PartialEq, Eq)]
pub enum HToken {
    /// `g(A)` for `A ∈ GL₂(Z[ω])`.
    A(EisMatrix2),
    /// `g(B) = [[I, B], [0, I]]`.
    BUpper(HermB),
    /// `g(B)_* = [[I, 0], [2B, I]]`.
    BLower(HermB),
}

impl HToken {
    pub fn matrix(&self) -> HermMatrix4 {
        match self {
            HToken::A(a) => g_a(a).expect("token matrices are invertible"),
            HToken::BUpper(b) => g_b_upper(b),
            HToken::BLower(b) => g_b_lower(b),
        }
    }

    pub fn inverse(&self) -> HToken {
        match self {
            HToken::A(a) => HToken::A(inverse2(a).expect("token matrices are invertible")),
            HToken::BUpper(b) => HToken::BUpper(b.neg()),
            HToken::BLower(b) => HToken::BLower(b.neg()),
        }
    }

    fn is_trivial(&self) -> bool {
        match self {
            HToken::A(a) => is_identity2(a),
            HToken::BUpper(b) | HToken::BLower(b) => b.is_zero(),
        }
    }
}

impl fmt::Display for HToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HToken::A(a) => write!(f, "gA({a})"),
            HToken::BUpper(b) => write!(f, "gB{:?}", b.m),
            HToken::BLower(b) => write!(f, "gB*{:?}", b.m),
        }
    }
}

impl fmt::Debug for HToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct GenWordH(pub Vec<HToken>);

impl GenWordH {
    /// Product of the token matrices; prefixes may be far larger than the
    /// result, so it is formed in arbitrary precision.
    pub fn product(&self) -> Result<HermMatrix4> {
        let big = self
            .0
            .iter()
            .fold(Matrix::<EisBig, 4>::identity(), |acc, t| {
                &acc * &widen(&t.matrix())
            });
        narrow(&big)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn push(&mut self, t: HToken) {
        if !t.is_trivial() {
            self.0.push(t);
        }
    }
}

impl fmt::Display for GenWordH {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, t) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" · ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// Left multiplications applied so far, in order. The working matrix is
/// kept in arbitrary precision: intermediate entries grow polynomially in
/// the input even when the final word is small.
struct Reducer {
    g: Matrix<EisBig, 4>,
    ops: Vec<HToken>,
}

impl Reducer {
    fn apply(&mut self, t: HToken) {
        if t.is_trivial() {
            return;
        }
        self.g = &widen(&t.matrix()) * &self.g;
        self.ops.push(t);
    }

    fn col(&self, j: usize) -> [EisBig; 4] {
        std::array::from_fn(|i| self.g[(i, j)].clone())
    }
}

fn small(k: &BigInt) -> Result<i128> {
    k.to_i128()
        .ok_or(Error::Overflow("translation coefficient"))
}

/// Nearest integer to `n/d`, `d ≠ 0`.
fn round_div(n: &BigInt, d: &BigInt) -> BigInt {
    if d.is_negative() {
        eis_big::round_div(&-n, &-d)
    } else {
        eis_big::round_div(n, d)
    }
}

/// `(p, q)` with `y = (p/q)·x`, `q > 0`, `gcd(p, q) = 1`; `None` if `y/x ∉ Q`.
fn rational_ratio(x: &EisBig, y: &EisBig) -> Option<(BigInt, BigInt)> {
    if &x.a * &y.b != &x.b * &y.a {
        return None;
    }
    let (p, q) = if !x.a.is_zero() {
        (&y.a, &x.a)
    } else {
        (&y.b, &x.b)
    };
    let mut g = p.gcd(q);
    if q.is_negative() {
        g = -g;
    }
    Some((p / &g, q / &g))
}

fn e11(k: i128) -> HermB {
    HermB::new(k, 0, 0, 0)
}

fn e22(k: i128) -> HermB {
    HermB::new(0, k, 0, 0)
}

/// `HermB` with off-diagonal entry `B₁₂ = x`.
fn off_diag(x: Eisenstein) -> HermB {
    HermB::new(0, 0, x.a, x.b)
}

/// Unit `ε` maximizing `Re(conj(u)·ε·v)`, first in the fixed unit order on ties.
pub fn best_unit(u: &EisBig, v: &EisBig) -> Eisenstein {
    let base = &u.conj() * v;
    let mut best = Eisenstein::UNITS[0];
    let mut best_val = (&EisBig::from(best) * &base).re2();
    for e in Eisenstein::UNITS.into_iter().skip(1) {
        let val = (&EisBig::from(e) * &base).re2();
        if val > best_val {
            best = e;
            best_val = val;
        }
    }
    best
}

/// Nonzero `κ` minimizing `N(x − κy)`. The candidates are the six units
/// (headed by the best-aligned one) and the rounded quotient with its unit
/// neighbours, so the result is never worse than the best unit step.
fn translation_quotient(x: &EisBig, y: &EisBig) -> Result<Eisenstein> {
    let q0 = EisBig::rounded_quotient(x, y)?.to_small()?;
    let mut cands = vec![best_unit(y, x)];
    cands.extend(Eisenstein::UNITS);
    cands.push(q0);
    for u in Eisenstein::UNITS {
        cands.push(
            q0.checked_add(u)
                .ok_or(Error::Overflow("translation coefficient"))?,
        );
    }
    let residual = |k: Eisenstein| (x - &(&EisBig::from(k) * y)).norm();
    let mut best = cands[0];
    let mut best_norm = residual(best);
    for k in cands.into_iter().filter(|k| !k.is_zero()) {
        let n = residual(k);
        if n < best_norm {
            best = k;
            best_norm = n;
        }
    }
    Ok(best)
}

/// Integer Euclid on the rational pair `(rows[top], rows[bottom])` of column
/// `col`, clearing the bottom entry with `g(kE)` and `g(kE)_*`.
fn odd_euclid(
    r: &mut Reducer,
    col: usize,
    top: usize,
    bottom: usize,
    e: fn(i128) -> HermB,
) -> Result<()> {
    loop {
        let c = r.col(col);
        let (x, y) = (&c[top], &c[bottom]);
        if y.is_zero() {
            return Ok(());
        }
        let Some((p, q)) = rational_ratio(x, y) else {
            return invariant("isotropy forces a rational ratio in the reduced column");
        };
        let before = p.abs() + q.abs();
        let (p2, q2) = if q.abs() > p.abs() {
            // x += k·y adds k·p to q
            let k = -round_div(&q, &p);
            r.apply(HToken::BUpper(e(small(&k)?)));
            let q2 = &q + &k * &p;
            (p, q2)
        } else {
            // y += 2k·x
            let k = -round_div(&p, &(&q * 2));
            r.apply(HToken::BLower(e(small(&k)?)));
            let p2 = &p + &k * &q * 2;
            (p2, q)
        };
        if p2.abs() + q2.abs() >= before {
            return invariant("odd Euclid step failed to decrease");
        }
    }
}

/// Clears `β = x₄` against `α = x₁` in a column of shape `(α, 0, 0, β)`.
fn twisted_reduction(r: &mut Reducer) -> Result<()> {
    loop {
        let c = r.col(0);
        let (alpha, beta) = (&c[0], &c[3]);
        if beta.is_zero() {
            return Ok(());
        }
        let (na, nb) = (alpha.norm(), beta.norm());
        if &na * 4 < &nb * 3 {
            // β ← β − 2κα through B₂₁ = −κ
            let k = translation_quotient(beta, &(alpha.clone() + alpha.clone()))?;
            r.apply(HToken::BLower(off_diag(-k.conj())));
            if r.col(0)[3].norm() >= nb {
                return invariant("lower translation failed to decrease |beta|");
            }
        } else {
            // α ← α − κβ through B₁₂ = −κ
            let k = translation_quotient(alpha, beta)?;
            r.apply(HToken::BUpper(off_diag(-k)));
            if r.col(0)[0].norm() >= na {
                return invariant("upper translation failed to decrease |alpha|");
            }
        }
        let c = r.col(0);
        if !(c[1].is_zero() && c[2].is_zero()) {
            return invariant("translation step broke the column shape");
        }
    }
}

fn is_plus_minus_one(x: &EisBig) -> bool {
    x.b.is_zero() && x.a.abs().is_one()
}

/// Word in `g(A)` (`A ∈ G(2)`), `g(B)` and `g(B)_*` whose product is `g`.
pub fn decompose_hgamma1(g: &HermMatrix4) -> Result<GenWordH> {
    if membership(g) != HMembership::HGamma1 {
        return Err(Error::NotMember("HGamma1(2)"));
    }
    let mut r = Reducer {
        g: widen(g),
        ops: Vec::new(),
    };

    // (i) second entry of column 1 to zero inside G(2)
    let (a, _) = g2_column_reduce(g[(0, 0)], g[(1, 0)])?;
    r.apply(HToken::A(size_reduce_g2(&a)));
    if !r.col(0)[1].is_zero() {
        return invariant("column reduction left a nonzero entry");
    }

    // (ii) x₃ against x₁, then x₄ against x₁
    odd_euclid(&mut r, 0, 0, 2, e11)?;
    twisted_reduction(&mut r)?;
    let c = r.col(0);
    if !is_plus_minus_one(&c[0]) || c[1..].iter().any(|x| !x.is_zero()) {
        return invariant("first column did not reduce to ±e1");
    }

    // (iii) second column: the third entry vanishes by isotropy
    if !r.col(1)[2].is_zero() {
        return invariant("isotropy forces a zero in the second column");
    }
    odd_euclid(&mut r, 1, 1, 3, e22)?;
    let c = r.col(1);
    if !is_plus_minus_one(&c[1]) || !c[3].is_zero() {
        return invariant("second column did not reduce");
    }

    // (iv) residual [[A, B], [0, D]] = g(A)·g(A⁻¹B)
    let (ra, rb, rc, _) = blocks(&narrow(&r.g)?);
    if !(0..2).all(|i| (0..2).all(|j| rc[(i, j)].is_zero())) {
        return invariant("residual has nonzero C block");
    }
    let ainv = inverse2(&ra)?;
    let b = HermB::from_matrix(&(&ainv * &rb))
        .map_err(|_| Error::Invariant("A^-1 B is not Hermitian".into()))?;

    let mut word = GenWordH::default();
    for t in r.ops.iter() {
        word.push(t.inverse());
    }
    word.push(HToken::A(ra));
    word.push(HToken::BUpper(b));
    if word.product()? != *g {
        return invariant("decomposition does not multiply back");
    }
    Ok(word)
}

/// `g = g(A)·w` with `A` the stored lift of `g mod 2` and `w` a word for an
/// element of `HΓ₁(2)`.
pub fn decompose_hgamma0(g: &HermMatrix4) -> Result<(EisMatrix2, GenWordH)> {
    let f = f_mod2(g)?;
    let a = section(&f)
        .ok_or_else(|| Error::Invariant("A block is singular mod 2".into()))?
        .clone();
    let rest = &g_a(&inverse2(&a)?)? * g;
    let word = decompose_hgamma1(&rest)?;
    Ok((a, word))
}

/// `[[A, B], [C, D]] ↦ A mod 2`.
pub fn f_mod2(g: &HermMatrix4) -> Result<F4Matrix> {
    if membership(g) < HMembership::HGamma0 {
        return Err(Error::NotMember("HGamma0(2)"));
    }
    let (a, _, _, _) = blocks(g);
    Ok(F4Matrix::reduce(&a))
}

#[cfg(test)]
mod tests {
    use crate::sample::*;
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn trivial_cases() {
        assert!(decompose_hgamma1(&HermMatrix4::identity())
            .unwrap()
            .is_empty());
        let b = HermB::new(1, 0, 0, 0);
        let w = decompose_hgamma1(&g_b_lower(&b)).unwrap();
        assert_eq!(w.0, vec![HToken::BLower(b)]);
        let w = decompose_hgamma1(&g_b_upper(&b)).unwrap();
        assert_eq!(w.0, vec![HToken::BUpper(b)]);
        assert_eq!(
            decompose_hgamma1(&super::super::j_matrix()),
            Err(Error::NotMember("HGamma1(2)"))
        );
    }

    #[test]
    fn rounding() {
        let b = |n: i64| BigInt::from(n);
        assert_eq!(round_div(&b(7), &b(2)), b(4));
        assert_eq!(round_div(&b(-7), &b(2)), b(-3));
        assert_eq!(round_div(&b(5), &b(-3)), b(-2));
        let e = |a: i128, c: i128| EisBig::from(Eisenstein::new(a, c));
        assert_eq!(rational_ratio(&e(3, 3), &e(-2, -2)), Some((b(-2), b(3))));
        assert_eq!(rational_ratio(&e(0, -3), &e(0, 6)), Some((b(-2), b(1))));
        assert_eq!(rational_ratio(&e(1, 0), &e(0, 1)), None);
    }

    #[test]
    fn random_words_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let g = random_hgamma1(&mut rng, 12);
            let w = decompose_hgamma1(&g).unwrap();
            assert_eq!(w.product().unwrap(), g);
            for t in &w.0 {
                let m = membership(&t.matrix());
                assert_eq!(m, HMembership::HGamma1, "{t}");
            }
        }
    }

    #[test]
    fn hgamma0_round_trip() {
        let swap = EisMatrix2::new([
            [Eisenstein::ZERO, Eisenstein::ONE],
            [Eisenstein::ONE, Eisenstein::ZERO],
        ]);
        let (a, w) = decompose_hgamma0(&g_a(&swap).unwrap()).unwrap();
        assert_eq!(F4Matrix::reduce(&a), F4Matrix::reduce(&swap));
        assert_eq!(
            &g_a(&a).unwrap() * &w.product().unwrap(),
            g_a(&swap).unwrap()
        );
        let (a, w) = decompose_hgamma0(&HermMatrix4::identity()).unwrap();
        assert!(is_identity2(&a) && w.is_empty());

        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..100 {
            let g = random_hgamma0(&mut rng, 6);
            let (a, w) = decompose_hgamma0(&g).unwrap();
            assert_eq!(&g_a(&a).unwrap() * &w.product().unwrap(), g);
            assert_eq!(membership(&w.product().unwrap()), HMembership::HGamma1);
        }
    }

    #[test]
    fn kernel_of_f_is_hgamma1() {
        use super::super::f4::F4Matrix;
        assert_eq!(
            f_mod2(&HermMatrix4::identity()).unwrap(),
            F4Matrix::IDENTITY
        );
        assert_eq!(
            f_mod2(&g_b_lower(&HermB::new(1, 1, 1, 0))).unwrap(),
            F4Matrix::IDENTITY
        );
        let swap = EisMatrix2::new([
            [Eisenstein::ZERO, Eisenstein::ONE],
            [Eisenstein::ONE, Eisenstein::ZERO],
        ]);
        assert_eq!(
            f_mod2(&g_a(&swap).unwrap()).unwrap(),
            F4Matrix::reduce(&swap)
        );
        assert!(f_mod2(&super::super::j_matrix()).is_err());
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..200 {
            let g = random_hgamma0(&mut rng, 3);
            let in_kernel = f_mod2(&g).unwrap() == F4Matrix::IDENTITY;
            assert_eq!(in_kernel, membership(&g) == HMembership::HGamma1);
        }
    }
}

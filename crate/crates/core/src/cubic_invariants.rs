//! Cubic surfaces in Sylvester form `ΣXᵢ = 0, ΣλᵢXᵢ³ = 0`: classical
//! invariants, discriminant loci and the Hessian quartic.

use std::sync::OnceLock;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact_arith::poly::NVARS;
use crate::exact_arith::{rint, Monomial, PolyZ, Rational};

/// Projective parameter `[λ₀ : … : λ₄]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SylvesterParam {
    lambda: [Rational; 5],
}

impl SylvesterParam {
    pub fn new(lambda: [Rational; 5]) -> Result<Self> {
        if lambda.iter().all(Zero::is_zero) {
            return Err(Error::ZeroVector);
        }
        Ok(Self { lambda })
    }

    pub fn from_ints(l: [i64; 5]) -> Result<Self> {
        Self::new(l.map(|x| rint(x as i128)))
    }

    pub fn lambda(&self) -> &[Rational; 5] {
        &self.lambda
    }

    pub fn has_sylvester_form(&self) -> bool {
        !elem_sym(self)[4].is_zero()
    }

    pub fn scaled(&self, c: &Rational) -> Result<Self> {
        Self::new(self.lambda.clone().map(|x| x * c))
    }

    pub fn permuted(&self, p: [usize; 5]) -> Self {
        Self {
            lambda: std::array::from_fn(|i| self.lambda[p[i]].clone()),
        }
    }

    /// Primitive integer representative of the projective point.
    pub fn integral(&self) -> Result<[i128; 5]> {
        let den = self
            .lambda
            .iter()
            .fold(num_bigint::BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let nums = self.lambda.clone().map(|x| (x * Rational::from_integer(den.clone())).to_integer());
        let g = nums
            .iter()
            .fold(num_bigint::BigInt::zero(), |acc, x| acc.gcd(x));
        let mut out = [0i128; 5];
        for (o, n) in out.iter_mut().zip(nums.iter()) {
            *o = (n / &g)
                .to_i128()
                .ok_or(Error::Overflow("Sylvester parameter"))?;
        }
        Ok(out)
    }
}

/// `(σ₁, …, σ₅)`, the coefficients of `Π(t + λᵢ)`.
pub fn elem_sym(l: &SylvesterParam) -> [Rational; 5] {
    // c[k] = coefficient of t^(n−k) after n factors
    let mut c: Vec<Rational> = vec![Rational::one()];
    for x in &l.lambda {
        let mut next = c.clone();
        next.push(Rational::zero());
        for k in 1..next.len() {
            next[k] = &c.get(k).cloned().unwrap_or_else(Rational::zero) + &(&c[k - 1] * x);
        }
        c = next;
    }
    std::array::from_fn(|k| c[k + 1].clone())
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InvariantSet {
    pub i8: Rational,
    pub i16: Rational,
    pub i24: Rational,
    pub i32: Rational,
    pub i40: Rational,
    pub i100: Rational,
}

/// `Δ(λ) = Π_{i<j}(λᵢ − λⱼ)`.
pub fn eckardt_delta(l: &SylvesterParam) -> Rational {
    let mut d = Rational::one();
    for i in 0..5 {
        for j in i + 1..5 {
            d *= &l.lambda[i] - &l.lambda[j];
        }
    }
    d
}

pub fn classical_invariants(l: &SylvesterParam) -> InvariantSet {
    let [s1, s2, s3, s4, s5] = elem_sym(l);
    let p = |x: &Rational, e: i32| x.pow(e);
    InvariantSet {
        i8: &s4 * &s4 - rint(4) * &s3 * &s5,
        i16: p(&s5, 3) * &s1,
        i24: p(&s5, 4) * &s4,
        i32: p(&s5, 6) * &s2,
        i40: p(&s5, 8),
        i100: p(&s5, 18) * eckardt_delta(l),
    }
}

/// `(I₈² − 2⁶I₁₆)² − 2¹⁴(I₃₂ + 2⁻³I₈I₂₄)`.
pub fn delta_sing_from_invariants(inv: &InvariantSet) -> Rational {
    let a = &inv.i8 * &inv.i8 - rint(64) * &inv.i16;
    &a * &a - rint(1 << 14) * (&inv.i32 + &inv.i8 * &inv.i24 / rint(8))
}

/// `I₈I₂₄ + 8I₃₂`.
pub fn kummer_invariant(inv: &InvariantSet) -> Rational {
    &inv.i8 * &inv.i24 + rint(8) * &inv.i32
}

fn subsets(k: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << NVARS)
        .filter(move |m| m.count_ones() as usize == k)
        .map(|m| (0..NVARS).filter(|&i| m >> i & 1 == 1).collect())
}

/// `σ₁, …, σ₅` as polynomials in `λ₀..λ₄`.
pub fn elem_sym_polys() -> [PolyZ; 5] {
    std::array::from_fn(|k| {
        subsets(k + 1).fold(PolyZ::zero(), |acc, s| {
            let mut e: Monomial = [0; NVARS];
            for i in s {
                e[i] = 1;
            }
            &acc + &PolyZ::monomial(1, e)
        })
    })
}

/// `Δ_Sing` as a degree-32 polynomial, expanded without radicals.
///
/// With `sᵢ = λᵢ^{-1/2}`, the product over `ε ∈ {±1}⁴` of `s₀ + Σεᵢsᵢ` is
/// even in every `sᵢ`; substituting `sᵢ² = μᵢ = 1/λᵢ` and multiplying by
/// `(Πλᵢ)⁸` sends `μ^e` to `λ^(8−e)`.
pub fn delta_sing_poly() -> &'static PolyZ {
    static P: OnceLock<PolyZ> = OnceLock::new();
    P.get_or_init(|| {
        let mut prod = PolyZ::one();
        for signs in 0u32..16 {
            let mut f = PolyZ::var(0);
            for i in 1..NVARS {
                let v = PolyZ::var(i);
                f = if signs >> (i - 1) & 1 == 1 { &f - &v } else { &f + &v };
            }
            prod = &prod * &f;
        }
        PolyZ::from_terms(prod.terms().map(|(m, &c)| {
            debug_assert!(m.iter().all(|e| e % 2 == 0), "odd exponent in Δ_Sing expansion");
            (m.map(|e| 8 - e / 2), c)
        }))
    })
}

/// The invariant expression `(I₈² − 2⁶I₁₆)² − 2¹⁴I₃₂ − 2¹¹I₈I₂₄` as a polynomial.
pub fn delta_sing_invariant_poly() -> &'static PolyZ {
    static P: OnceLock<PolyZ> = OnceLock::new();
    P.get_or_init(|| {
        let [s1, s2, s3, s4, s5] = elem_sym_polys();
        let s5_3 = s5.pow(3);
        let s5_4 = &s5_3 * &s5;
        let i8 = &(&s4 * &s4) - &(&s3 * &s5).scale(4);
        let i16 = &s5_3 * &s1;
        let i24 = &s5_4 * &s4;
        let i32 = &s5.pow(6) * &s2;
        let a = &(&i8 * &i8) - &i16.scale(64);
        &(&(&a * &a) - &i32.scale(1 << 14)) - &(&i8 * &i24).scale(1 << 11)
    })
}

pub fn delta_sing(l: &SylvesterParam) -> Rational {
    delta_sing_poly().eval(l.lambda())
}

/// The cubic `Σμᵢ³ − Σ_{i≠j}μᵢ²μⱼ + 2Σ_{i<j<k}μᵢμⱼμₖ` at `μᵢ = 1/λᵢ`.
///
/// The middle sum runs over ordered pairs (20 terms), the last over
/// unordered triples (10 terms).
pub fn delta_km(l: &SylvesterParam) -> Result<Rational> {
    if l.lambda.iter().any(Zero::is_zero) {
        return Err(Error::SylvesterDegenerate);
    }
    let mu: Vec<Rational> = l.lambda.iter().map(|x| x.recip()).collect();
    Ok(delta_km_cubic(&mu))
}

fn delta_km_cubic(mu: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for i in 0..5 {
        acc += mu[i].pow(3);
        for j in 0..5 {
            if i != j {
                acc -= &mu[i] * &mu[i] * &mu[j];
            }
        }
    }
    for t in subsets(3) {
        acc += rint(2) * &mu[t[0]] * &mu[t[1]] * &mu[t[2]];
    }
    acc
}

/// `σ₅³·Δ_Km(1/λ)`, cleared: `μ^e ↦ λ^(3−e)`.
pub fn delta_km_cleared_poly() -> PolyZ {
    let mut terms: Vec<(Monomial, i128)> = Vec::new();
    let unit = |i: usize, k: u8| {
        let mut e: Monomial = [0; NVARS];
        e[i] = k;
        e
    };
    for i in 0..NVARS {
        terms.push((unit(i, 3), 1));
        for j in 0..NVARS {
            if i != j {
                let mut e = unit(i, 2);
                e[j] = 1;
                terms.push((e, -1));
            }
        }
    }
    for t in subsets(3) {
        let mut e: Monomial = [0; NVARS];
        for i in t {
            e[i] = 1;
        }
        terms.push((e, 2));
    }
    PolyZ::from_terms(terms.into_iter().map(|(m, c)| (m.map(|e| 3 - e), c)))
}

/// `σ₄³ − 4σ₃σ₄σ₅ + 8σ₂σ₅²`.
pub fn delta_km_sigma_poly() -> PolyZ {
    let [_, s2, s3, s4, s5] = elem_sym_polys();
    &(&s4.pow(3) - &(&(&s3 * &s4) * &s5).scale(4)) + &(&s2 * &(&s5 * &s5)).scale(8)
}

/// The Hessian `H_λ`: the hyperplane `ΣXᵢ` and the quartic
/// `Σᵢ Π_{j≠i} λⱼXⱼ`, the numerator of `Σ 1/(λᵢXᵢ)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HessianEquations {
    pub linear: PolyZ,
    pub quartic: PolyZ,
}

/// Uses the primitive integer representative of `λ`, so the quartic is
/// determined up to a nonzero constant.
pub fn hessian_equations(l: &SylvesterParam) -> Result<HessianEquations> {
    let li = l.integral()?;
    let linear = (0..NVARS).fold(PolyZ::zero(), |acc, i| &acc + &PolyZ::var(i));
    let quartic = (0..NVARS).fold(PolyZ::zero(), |acc, i| &acc + &cofactor(&li, i));
    Ok(HessianEquations { linear, quartic })
}

/// `Π_{j≠i} λⱼXⱼ`.
fn cofactor(li: &[i128; 5], i: usize) -> PolyZ {
    let mut e: Monomial = [1; NVARS];
    e[i] = 0;
    let c = (0..NVARS).filter(|&j| j != i).map(|j| li[j]).product();
    PolyZ::monomial(c, e)
}

/// The ten nodes `P_ijk = {Xᵢ = Xⱼ = Xₖ = 0} ∩ H_λ`, keyed by the 3-subset.
pub fn hessian_singular_points() -> Vec<([usize; 3], [i128; 5])> {
    subsets(3)
        .map(|t| {
            let rest: Vec<usize> = (0..NVARS).filter(|i| !t.contains(i)).collect();
            let mut x = [0i128; 5];
            x[rest[0]] = 1;
            x[rest[1]] = -1;
            ([t[0], t[1], t[2]], x)
        })
        .collect()
}

/// Whether `q` vanishes identically on `{Xᵢ = Xⱼ = 0}`.
pub fn quartic_vanishes_on_line(q: &PolyZ, i: usize, j: usize) -> bool {
    q.set_zero(&[i, j]).is_zero()
}

pub fn hessian_line_check(l: &SylvesterParam, i: usize, j: usize) -> Result<bool> {
    if i >= NVARS || j >= NVARS || i == j {
        return Err(Error::Precondition(format!("line index pair ({i}, {j}) is invalid")));
    }
    Ok(quartic_vanishes_on_line(&hessian_equations(l)?.quartic, i, j))
}

/// Checks that `ι(X)ᵢ = 1/(λᵢXᵢ)` swaps `eq₁ = ΣXᵢ` and `eq₂ = Σ1/(λᵢXᵢ)`
/// and is an involution, as identities of cleared polynomials.
///
/// Over the common denominator `D = Πλᵢ Xᵢ`, `ι(X)ᵢ = Nᵢ/D` with
/// `Nᵢ = Π_{j≠i}λⱼXⱼ`. Then `eq₁(ι(X))·D = ΣNᵢ`, and both `eq₂(ι(X))` and
/// `ι(ι(X))ᵢ` are built from the monomial quotients `D/(λᵢNᵢ)`.
pub fn enriques_involution_check(l: &SylvesterParam) -> Result<bool> {
    let li = l.integral()?;
    if li.contains(&0) {
        return Err(Error::SylvesterDegenerate);
    }
    let eqs = hessian_equations(l)?;
    let d_coeff: i128 = li.iter().try_fold(1i128, |acc, &x| acc.checked_mul(x)).ok_or(Error::Overflow("Hessian denominator"))?;
    let d = PolyZ::monomial(d_coeff, [1; NVARS]);
    let n: Vec<PolyZ> = (0..NVARS).map(|i| cofactor(&li, i)).collect();
    let eq1_of_iota = n.iter().fold(PolyZ::zero(), |acc, p| &acc + p);
    let swap1 = eq1_of_iota == eqs.quartic;
    let mut eq2_of_iota = PolyZ::zero();
    let mut involution = true;
    for i in 0..NVARS {
        let q = monomial_quotient(&d, &n[i].scale(li[i]))?;
        involution &= q == PolyZ::var(i);
        eq2_of_iota = &eq2_of_iota + &q;
    }
    Ok(swap1 && eq2_of_iota == eqs.linear && involution)
}

/// Exact quotient of single-term polynomials; errors if it does not exist.
fn monomial_quotient(a: &PolyZ, b: &PolyZ) -> Result<PolyZ> {
    let single = |p: &PolyZ| -> Result<(Monomial, i128)> {
        let mut it = p.terms();
        match (it.next(), it.next()) {
            (Some((m, &c)), None) => Ok((*m, c)),
            _ => Err(Error::Precondition("expected a single-term polynomial".into())),
        }
    };
    let ((ma, ca), (mb, cb)) = (single(a)?, single(b)?);
    if ca % cb != 0 || (0..NVARS).any(|k| mb[k] > ma[k]) {
        return Err(Error::Invariant("monomial quotient is not integral".into()));
    }
    Ok(PolyZ::monomial(ca / cb, std::array::from_fn(|k| ma[k] - mb[k])))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LocusReport {
    pub sylvester_degenerate: bool,
    pub singular: bool,
    pub eckardt: bool,
    pub kummer: bool,
}

pub fn classify(l: &SylvesterParam) -> LocusReport {
    let inv = classical_invariants(l);
    LocusReport {
        sylvester_degenerate: elem_sym(l)[4].is_zero(),
        singular: delta_sing(l).is_zero(),
        eckardt: eckardt_delta(l).is_zero(),
        kummer: kummer_invariant(&inv).is_zero(),
    }
}

/// Sign of a rational as -1, 0, 1.
pub fn signum(x: &Rational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rat;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn lam(l: [i64; 5]) -> SylvesterParam {
        SylvesterParam::from_ints(l).unwrap()
    }

    fn random_lambda(rng: &mut ChaCha8Rng) -> SylvesterParam {
        SylvesterParam::new(std::array::from_fn(|_| {
            let n = rng.gen_range(1..=9) * if rng.gen_bool(0.5) { 1 } else { -1 };
            rat(n, rng.gen_range(1..=4))
        }))
        .unwrap()
    }

    #[test]
    fn elem_sym_examples() {
        assert_eq!(elem_sym(&lam([1; 5])), [5, 10, 10, 5, 1].map(rint));
        assert_eq!(elem_sym(&lam([1, 2, 3, 4, 5])), [15, 85, 225, 274, 120].map(rint));
        assert!(elem_sym(&lam([0, 2, 3, 4, 5]))[4].is_zero());
        assert!(SylvesterParam::from_ints([0; 5]).is_err());
        let polys = elem_sym_polys();
        for (p, v) in polys.iter().zip(elem_sym(&lam([1, 2, 3, 4, 5]))) {
            assert_eq!(p.eval_int(&[1, 2, 3, 4, 5]), v);
        }
    }

    #[test]
    fn invariant_examples() {
        let inv = classical_invariants(&lam([1; 5]));
        assert_eq!(
            [inv.i8, inv.i16, inv.i24, inv.i32, inv.i40, inv.i100],
            [-15, 5, 5, 10, 1, 0].map(rint)
        );
        let l = lam([0, 1, 2, 3, 4]);
        let inv = classical_invariants(&l);
        let s4 = elem_sym(&l)[3].clone();
        assert_eq!(inv.i8, &s4 * &s4);
        assert!([inv.i16, inv.i24, inv.i32, inv.i40, inv.i100].iter().all(Zero::is_zero));
        assert!(classical_invariants(&lam([1, 1, 2, 3, 4])).i100.is_zero());
    }

    #[test]
    fn delta_sing_examples() {
        let l = lam([1; 5]);
        assert_eq!(delta_sing(&l), rint(-1215));
        assert_eq!(delta_sing_from_invariants(&classical_invariants(&l)), rint(-1215));
        let l = SylvesterParam::new([rint(1), rint(1), rint(1), rint(1), rat(1, 16)]).unwrap();
        assert!(delta_sing(&l).is_zero());
        assert_eq!(delta_sing_poly().total_degree(), Some(32));
        assert!(delta_sing_poly().is_homogeneous());
    }

    #[test]
    fn delta_sing_identity() {
        assert_eq!(delta_sing_poly(), delta_sing_invariant_poly());
    }

    #[test]
    fn delta_km_examples() {
        let l = lam([1; 5]);
        assert_eq!(delta_km(&l).unwrap(), rint(5));
        assert_eq!(kummer_invariant(&classical_invariants(&l)), rint(5));
        assert_eq!(delta_km_cleared_poly(), delta_km_sigma_poly());
        let l = lam([1, 2, 3, 4, 5]);
        let twice = l.scaled(&rint(2)).unwrap();
        assert_eq!(delta_km(&twice).unwrap() * rint(8), delta_km(&l).unwrap());
        assert!(matches!(delta_km(&lam([0, 1, 1, 1, 1])), Err(Error::SylvesterDegenerate)));
    }

    #[test]
    fn hessian_examples() {
        let h = hessian_equations(&lam([1; 5])).unwrap();
        let expect = (0..5).fold(PolyZ::zero(), |acc, i| {
            let mut e = [1u8; 5];
            e[i] = 0;
            &acc + &PolyZ::monomial(1, e)
        });
        assert_eq!(h.quartic, expect);
        let pts = hessian_singular_points();
        assert_eq!(pts.len(), 10);
        assert_eq!(pts[0], ([0, 1, 2], [0, 0, 0, 1, -1]));
        let distinct: std::collections::BTreeSet<_> = pts.iter().map(|p| p.1).collect();
        assert_eq!(distinct.len(), 10);
        let mut perturbed = h.quartic.clone();
        perturbed = &perturbed + &PolyZ::monomial(1, [4, 0, 0, 0, 0]);
        assert!(!quartic_vanishes_on_line(&perturbed, 1, 2));
        assert!(hessian_line_check(&lam([1; 5]), 1, 1).is_err());
    }

    #[test]
    fn hessian_at_random_parameters() {
        let mut rng = ChaCha8Rng::seed_from_u64(51);
        for _ in 0..12 {
            let l = random_lambda(&mut rng);
            let h = hessian_equations(&l).unwrap();
            for (_, x) in hessian_singular_points() {
                let p = x.map(rint);
                assert!(h.linear.eval(&p).is_zero() && h.quartic.eval(&p).is_zero());
            }
            for i in 0..5 {
                for j in i + 1..5 {
                    assert!(hessian_line_check(&l, i, j).unwrap());
                }
            }
            assert!(enriques_involution_check(&l).unwrap());
            // a point with Σ1/(λᵢXᵢ) = 0 lies on the quartic
            let xs: Vec<Rational> = (0..4).map(|_| rat(rng.gen_range(1..=7), rng.gen_range(1..=3))).collect();
            let s: Rational = (0..4).map(|i| (&l.lambda()[i] * &xs[i]).recip()).sum();
            if !s.is_zero() {
                let x4 = -(&l.lambda()[4] * &s).recip();
                let p = [xs[0].clone(), xs[1].clone(), xs[2].clone(), xs[3].clone(), x4];
                assert!(h.quartic.eval(&p).is_zero());
            }
        }
    }

    #[test]
    fn classify_examples() {
        let r = classify(&lam([1; 5]));
        assert!(!r.singular && r.eckardt && !r.kummer && !r.sylvester_degenerate);
        let r = classify(&SylvesterParam::new([rint(1), rint(1), rint(1), rint(1), rat(1, 16)]).unwrap());
        assert!(r.singular);
        assert!(classify(&lam([0, 1, 1, 1, 1])).sylvester_degenerate);
    }

    #[test]
    fn permutation_invariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(52);
        let check = |l: &SylvesterParam, p: [usize; 5]| {
            let q = l.permuted(p);
            assert_eq!(elem_sym(l), elem_sym(&q));
            let (a, b) = (classical_invariants(l), classical_invariants(&q));
            assert_eq!([&a.i8, &a.i16, &a.i24, &a.i32, &a.i40], [&b.i8, &b.i16, &b.i24, &b.i32, &b.i40]);
            assert_eq!(a.i100.abs(), b.i100.abs());
            assert_eq!(delta_sing(l), delta_sing(&q));
            assert_eq!(delta_km(l).unwrap(), delta_km(&q).unwrap());
        };
        for _ in 0..100 {
            let l = random_lambda(&mut rng);
            let mut p = [0, 1, 2, 3, 4];
            for i in (1..5).rev() {
                p.swap(i, rng.gen_range(0..=i));
            }
            check(&l, p);
        }
        let l = lam([1, 2, 3, 5, 8]);
        let mut count = 0;
        for code in 0..120usize {
            // Lehmer code to permutation
            let mut pool = vec![0, 1, 2, 3, 4];
            let mut c = code;
            let mut p = [0usize; 5];
            for (k, slot) in p.iter_mut().enumerate() {
                let f = (1..5 - k).product::<usize>();
                *slot = pool.remove(c / f);
                c %= f;
            }
            check(&l, p);
            count += 1;
        }
        assert_eq!(count, 120);
    }

    #[test]
    fn homogeneity_degrees() {
        let mut rng = ChaCha8Rng::seed_from_u64(53);
        let l = lam([1, 2, 3, 5, 8]);
        let degree = |f: &dyn Fn(&SylvesterParam) -> Rational| -> i32 {
            let base = f(&l);
            let two = f(&l.scaled(&rint(2)).unwrap());
            let r = two / base;
            let (n, d) = (r.numer().clone(), r.denom().clone());
            let e = if n > d { n.bits() as i32 - 1 } else { -(d.bits() as i32 - 1) };
            assert_eq!(rint(2).pow(e), r);
            e
        };
        let inv = |k: usize| {
            move |x: &SylvesterParam| {
                let i = classical_invariants(x);
                [i.i8, i.i16, i.i24, i.i32, i.i40, i.i100][k].clone()
            }
        };
        let degs: Vec<i32> = (0..6).map(|k| degree(&inv(k))).collect();
        assert_eq!(degs, vec![8, 16, 24, 32, 40, 100]);
        assert_eq!(degree(&|x| delta_sing(x)), 32);
        assert_eq!(degree(&|x| delta_km(x).unwrap()), -3);
        for _ in 0..10 {
            let c = rat(rng.gen_range(1..=9) * if rng.gen_bool(0.5) { 1 } else { -1 }, rng.gen_range(1..=5));
            let s = l.scaled(&c).unwrap();
            let (a, b) = (classical_invariants(&l), classical_invariants(&s));
            for (k, (x, y)) in [(a.i8, b.i8), (a.i16, b.i16), (a.i24, b.i24), (a.i32, b.i32), (a.i40, b.i40), (a.i100, b.i100)]
                .into_iter()
                .enumerate()
            {
                assert_eq!(y, x * c.pow(degs[k]));
            }
            assert_eq!(classify(&s), classify(&l));
        }
    }
}

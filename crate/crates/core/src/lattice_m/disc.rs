//! The discriminant group `M̌/M ≅ (Z/2)⁴ ⊕ Z/3`, its quadratic form and
//! automorphisms.

use super::{is_orthogonal, OrthMatrix};
use crate::error::{invariant, Error, Result};
use crate::exact_arith::{rat, Rational};
use num_integer::Integer;
use num_traits::Zero;
use std::fmt;

/// Coset `(0, 0, c3/2, c4/2, c5/6, c6/6) + M` with `c5 + c6 ≡ 0 mod 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiscElement {
    c3: u8,
    c4: u8,
    c5: u8,
    c6: u8,
}

pub const ORDER: usize = 48;

impl DiscElement {
    pub const ZERO: Self = Self {
        c3: 0,
        c4: 0,
        c5: 0,
        c6: 0,
    };

    /// `n1 d1 + n2 d2 + n3 d3 + n4 d4` with `d1 = e3/2`, `d2 = e4/2`,
    /// `d3 = e5/6 + e6/3`, `d4 = e5/3 + e6/6`.
    pub fn combination(n: [i64; 4]) -> Self {
        Self::from_numerators(n[0], n[1], n[2] + 2 * n[3], 2 * n[2] + n[3])
    }

    pub fn generator(i: usize) -> Self {
        let mut n = [0; 4];
        n[i] = 1;
        Self::combination(n)
    }

    fn from_numerators(c3: i64, c4: i64, c5: i64, c6: i64) -> Self {
        let e = Self {
            c3: c3.rem_euclid(2) as u8,
            c4: c4.rem_euclid(2) as u8,
            c5: c5.rem_euclid(6) as u8,
            c6: c6.rem_euclid(6) as u8,
        };
        debug_assert!((e.c5 + e.c6) % 3 == 0);
        e
    }

    /// Canonical representative with every coordinate in `[0, 1)`.
    pub fn representative(&self) -> [Rational; 6] {
        [
            Rational::zero(),
            Rational::zero(),
            rat(self.c3 as i128, 2),
            rat(self.c4 as i128, 2),
            rat(self.c5 as i128, 6),
            rat(self.c6 as i128, 6),
        ]
    }

    /// `6·x` as an integer vector.
    fn scaled(&self) -> [i128; 6] {
        [
            0,
            0,
            3 * self.c3 as i128,
            3 * self.c4 as i128,
            self.c5 as i128,
            self.c6 as i128,
        ]
    }

    pub fn index(&self) -> usize {
        let t = (self.c6 / 3) as usize;
        self.c3 as usize + 2 * self.c4 as usize + 4 * (self.c5 as usize + 6 * t)
    }

    pub fn from_index(i: usize) -> Self {
        let (c3, c4, r) = ((i % 2) as u8, ((i / 2) % 2) as u8, i / 4);
        let c5 = (r % 6) as u8;
        let c6 = (3 - c5 % 3) % 3 + 3 * (r / 6) as u8;
        Self { c3, c4, c5, c6 }
    }

    pub fn all() -> Vec<Self> {
        (0..ORDER).map(Self::from_index).collect()
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::from_numerators(
            (self.c3 + o.c3) as i64,
            (self.c4 + o.c4) as i64,
            (self.c5 + o.c5) as i64,
            (self.c6 + o.c6) as i64,
        )
    }

    pub fn neg(&self) -> Self {
        Self::from_numerators(
            -(self.c3 as i64),
            -(self.c4 as i64),
            -(self.c5 as i64),
            -(self.c6 as i64),
        )
    }

    pub fn times(&self, k: i64) -> Self {
        Self::from_numerators(
            k * self.c3 as i64,
            k * self.c4 as i64,
            k * self.c5 as i64,
            k * self.c6 as i64,
        )
    }

    pub fn order(&self) -> u32 {
        (1..=6)
            .find(|&k| self.times(k as i64) == Self::ZERO)
            .expect("exponent divides 6")
    }

    /// `ᵗxQx` on the canonical representative (not reduced).
    pub fn raw_value(&self) -> Rational {
        let (c3, c4, c5, c6) = (
            self.c3 as i128,
            self.c4 as i128,
            self.c5 as i128,
            self.c6 as i128,
        );
        rat(c3 * c4, 1) - rat(c5 * c5 - c5 * c6 + c6 * c6, 9)
    }
}

impl fmt::Display for DiscElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.representative();
        write!(
            f,
            "({}, {}, {}, {}, {}, {})",
            r[0], r[1], r[2], r[3], r[4], r[5]
        )
    }
}

fn reduce_mod(x: Rational, m: i64) -> Rational {
    let m = Rational::from_integer(m.into());
    let q = (&x / &m).floor();
    x - q * m
}

/// Value of the discriminant quadratic form in `[0, 2)`.
pub fn disc_form_value(x: &DiscElement) -> Rational {
    reduce_mod(x.raw_value(), 2)
}

/// Value of the discriminant bilinear form in `[0, 1)`.
pub fn disc_bilinear_value(x: &DiscElement, y: &DiscElement) -> Rational {
    let (a, b) = (x.scaled(), y.scaled());
    let q = super::gram();
    let qb = q.mul_vec(&b);
    let s: i128 = a.iter().zip(qb.iter()).map(|(u, v)| u * v).sum();
    reduce_mod(rat(s, 36), 1)
}

/// The five isotropic classes of order two.
pub fn isotropic_involutions() -> [DiscElement; 5] {
    let c = DiscElement::combination;
    [
        c([1, 0, 0, 0]),
        c([0, 1, 0, 0]),
        c([1, 1, 1, 1]),
        c([1, 1, 3, 0]),
        c([1, 1, 0, 3]),
    ]
}

/// Automorphism of the discriminant group, stored as its table on the 48 elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiscAut {
    table: Vec<u8>,
}

impl DiscAut {
    pub fn identity() -> Self {
        Self {
            table: (0..ORDER as u8).collect(),
        }
    }

    pub fn inversion() -> Self {
        Self {
            table: DiscElement::all()
                .iter()
                .map(|e| e.neg().index() as u8)
                .collect(),
        }
    }

    pub fn apply(&self, x: &DiscElement) -> DiscElement {
        DiscElement::from_index(self.table[x.index()] as usize)
    }

    /// `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            table: other
                .table
                .iter()
                .map(|&i| self.table[i as usize])
                .collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.table.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    pub fn preserves_form(&self) -> bool {
        DiscElement::all()
            .iter()
            .all(|x| disc_form_value(x) == disc_form_value(&self.apply(x)))
    }

    pub fn preserves_bilinear(&self) -> bool {
        let all = DiscElement::all();
        all.iter().all(|x| {
            let gx = self.apply(x);
            all.iter()
                .all(|y| disc_bilinear_value(x, y) == disc_bilinear_value(&gx, &self.apply(y)))
        })
    }

    /// Fixes every element of order dividing 2.
    pub fn fixes_two_torsion(&self) -> bool {
        DiscElement::all()
            .iter()
            .filter(|x| x.times(2) == DiscElement::ZERO)
            .all(|x| self.apply(x) == *x)
    }

    pub fn images_of_generators(&self) -> [DiscElement; 4] {
        std::array::from_fn(|i| self.apply(&DiscElement::generator(i)))
    }

    /// Induced permutation of the five isotropic involutions.
    pub fn to_s5(&self) -> Result<S5Perm> {
        let v = isotropic_involutions();
        let mut p = [0u8; 5];
        for (i, vi) in v.iter().enumerate() {
            let img = self.apply(vi);
            match v.iter().position(|w| *w == img) {
                Some(j) => p[i] = j as u8,
                None => {
                    return invariant("automorphism does not permute the isotropic involutions")
                }
            }
        }
        Ok(S5Perm(p))
    }
}

/// Induced action of `g ∈ O(M)` on `M̌/M`.
pub fn disc_action(g: &OrthMatrix) -> Result<DiscAut> {
    if !is_orthogonal(g) {
        return Err(Error::NotOrthogonal);
    }
    let mut table = Vec::with_capacity(ORDER);
    for x in DiscElement::all() {
        let y = g.mul_vec(&x.scaled());
        if y[0] % 6 != 0 || y[1] % 6 != 0 || y[2] % 3 != 0 || y[3] % 3 != 0 {
            return invariant("image of a dual vector left the dual lattice");
        }
        let to64 = |v: i128| (v.rem_euclid(6)) as i64;
        let img =
            DiscElement::from_numerators(to64(y[2] / 3), to64(y[3] / 3), to64(y[4]), to64(y[5]));
        if disc_form_value(&img) != disc_form_value(&x) {
            return invariant("induced map does not preserve the discriminant form");
        }
        table.push(img.index() as u8);
    }
    Ok(DiscAut { table })
}

/// Permutation of `v1..v5` induced by `g`.
pub fn to_s5(g: &OrthMatrix) -> Result<S5Perm> {
    disc_action(g)?.to_s5()
}

/// Every automorphism of `M̌/M` preserving the discriminant form.
///
/// Candidates are fixed by the images of `d1..d4`: isotropic involutions for
/// `d1, d2` and elements of order six with the matching form value for
/// `d3, d4`. A candidate is kept when the induced map is well defined,
/// bijective, and preserves both the quadratic and the bilinear form.
pub fn enumerate_disc_orthogonal() -> Vec<DiscAut> {
    let all = DiscElement::all();
    let gens: [DiscElement; 4] = std::array::from_fn(DiscElement::generator);
    let candidates: Vec<Vec<DiscElement>> = gens
        .iter()
        .map(|d| {
            all.iter()
                .filter(|x| x.order() == d.order() && disc_form_value(x) == disc_form_value(d))
                .copied()
                .collect()
        })
        .collect();

    let mut out = Vec::new();
    for &i1 in &candidates[0] {
        for &i2 in &candidates[1] {
            for &i3 in &candidates[2] {
                for &i4 in &candidates[3] {
                    if let Some(aut) = extend_linearly([i1, i2, i3, i4]) {
                        if aut.preserves_form() && aut.preserves_bilinear() {
                            out.push(aut);
                        }
                    }
                }
            }
        }
    }
    out.sort();
    out
}

fn extend_linearly(images: [DiscElement; 4]) -> Option<DiscAut> {
    let mut table = [u8::MAX; ORDER];
    for n1 in 0..2 {
        for n2 in 0..2 {
            for n3 in 0..6 {
                for n4 in 0..6 {
                    let n = [n1, n2, n3, n4];
                    let x = DiscElement::combination(n);
                    let y = images
                        .iter()
                        .zip(n.iter())
                        .fold(DiscElement::ZERO, |acc, (img, &k)| acc.add(&img.times(k)));
                    let slot = &mut table[x.index()];
                    if *slot == u8::MAX {
                        *slot = y.index() as u8;
                    } else if *slot != y.index() as u8 {
                        return None;
                    }
                }
            }
        }
    }
    let mut seen = [false; ORDER];
    for &t in &table {
        if t == u8::MAX || seen[t as usize] {
            return None;
        }
        seen[t as usize] = true;
    }
    Some(DiscAut {
        table: table.to_vec(),
    })
}

/// Permutation of five labels; `self.0[i]` is the image of label `i` (0-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct S5Perm(pub [u8; 5]);

impl S5Perm {
    pub fn identity() -> Self {
        Self([0, 1, 2, 3, 4])
    }

    /// From disjoint cycles written with 1-based labels, e.g. `&[&[1, 4], &[3, 5]]`.
    pub fn from_cycles(cycles: &[&[u8]]) -> Self {
        let mut p = Self::identity().0;
        for c in cycles {
            for k in 0..c.len() {
                p[(c[k] - 1) as usize] = c[(k + 1) % c.len()] - 1;
            }
        }
        Self(p)
    }

    pub fn apply(&self, i: u8) -> u8 {
        self.0[i as usize]
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        Self(std::array::from_fn(|i| self.0[other.0[i] as usize]))
    }

    pub fn inverse(&self) -> Self {
        let mut p = [0u8; 5];
        for (i, &j) in self.0.iter().enumerate() {
            p[j as usize] = i as u8;
        }
        Self(p)
    }

    pub fn is_even(&self) -> bool {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        transpositions.is_even()
    }

    /// Nontrivial cycles with 1-based labels, each starting at its smallest label.
    pub fn cycles(&self) -> Vec<Vec<u8>> {
        let mut seen = [false; 5];
        let mut out = Vec::new();
        for start in 0..5u8 {
            if seen[start as usize] {
                continue;
            }
            let mut c = vec![start + 1];
            seen[start as usize] = true;
            let mut j = self.apply(start);
            while j != start {
                seen[j as usize] = true;
                c.push(j + 1);
                j = self.apply(j);
            }
            if c.len() > 1 {
                out.push(c);
            }
        }
        out
    }
}

impl fmt::Display for S5Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for x in c {
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

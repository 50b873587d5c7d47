//! The field `F₄ = Z[ω]/2` and `GL₂(F₄)`.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use crate::exact_arith::{EisMatrix2, Eisenstein};
use crate::lattice_m::disc::S5Perm;

/// Element of `F₄`, bits `(a, b)` of `a + bω mod 2`: 0, 1, ω = 2, ω² = 3.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F4(u8);

impl F4 {
    pub const ZERO: F4 = F4(0);
    pub const ONE: F4 = F4(1);
    pub const OMEGA: F4 = F4(2);
    pub const OMEGA2: F4 = F4(3);
    pub const ALL: [F4; 4] = [F4::ZERO, F4::ONE, F4::OMEGA, F4::OMEGA2];

    pub fn reduce(x: Eisenstein) -> Self {
        let (a, b) = x.mod2();
        F4(a | (b << 1))
    }

    pub fn lift(self) -> Eisenstein {
        Eisenstein::new((self.0 & 1) as i128, (self.0 >> 1) as i128)
    }

    pub fn add(self, o: Self) -> Self {
        F4(self.0 ^ o.0)
    }

    pub fn mul(self, o: Self) -> Self {
        let (a, b) = (self.0 & 1, self.0 >> 1);
        let (c, d) = (o.0 & 1, o.0 >> 1);
        // (a + bω)(c + dω) with ω² = 1 + ω in characteristic 2
        let re = (a & c) ^ (b & d);
        let om = (a & d) ^ (b & c) ^ (b & d);
        F4(re | (om << 1))
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn inv(self) -> Option<Self> {
        F4::ALL.into_iter().find(|&y| self.mul(y) == F4::ONE)
    }
}

impl fmt::Display for F4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(["0", "1", "ω", "ω²"][self.0 as usize])
    }
}

impl fmt::Debug for F4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F4Matrix(pub [[F4; 2]; 2]);

impl F4Matrix {
    pub const IDENTITY: F4Matrix = F4Matrix([[F4::ONE, F4::ZERO], [F4::ZERO, F4::ONE]]);

    pub fn reduce(m: &EisMatrix2) -> Self {
        F4Matrix([
            [F4::reduce(m[(0, 0)]), F4::reduce(m[(0, 1)])],
            [F4::reduce(m[(1, 0)]), F4::reduce(m[(1, 1)])],
        ])
    }

    pub fn lift(&self) -> EisMatrix2 {
        EisMatrix2::from_fn(|i, j| self.0[i][j].lift())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let e = |i: usize, j: usize| self.0[i][0].mul(o.0[0][j]).add(self.0[i][1].mul(o.0[1][j]));
        F4Matrix([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn det(&self) -> F4 {
        self.0[0][0]
            .mul(self.0[1][1])
            .add(self.0[0][1].mul(self.0[1][0]))
    }

    pub fn is_invertible(&self) -> bool {
        !self.det().is_zero()
    }

    pub fn all() -> impl Iterator<Item = F4Matrix> {
        (0u16..256).map(|n| {
            let e = |k: u16| F4(((n >> (2 * k)) & 3) as u8);
            F4Matrix([[e(0), e(1)], [e(2), e(3)]])
        })
    }

    /// Action on the five points of `P¹(F₄)`, listed by [`projective_line`].
    pub fn projective_permutation(&self) -> S5Perm {
        let pts = projective_line();
        let mut img = [0u8; 5];
        for (k, &(x, y)) in pts.iter().enumerate() {
            let u = self.0[0][0].mul(x).add(self.0[0][1].mul(y));
            let v = self.0[1][0].mul(x).add(self.0[1][1].mul(y));
            img[k] = pts
                .iter()
                .position(|&p| p == normalize_point(u, v))
                .expect("invertible matrix") as u8;
        }
        S5Perm(img)
    }
}

impl fmt::Display for F4Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.0[0][0], self.0[0][1], self.0[1][0], self.0[1][1]
        )
    }
}

impl fmt::Debug for F4Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `[1:0], [0:1], [1:1], [1:ω], [1:ω²]`.
pub fn projective_line() -> [(F4, F4); 5] {
    [
        (F4::ONE, F4::ZERO),
        (F4::ZERO, F4::ONE),
        (F4::ONE, F4::ONE),
        (F4::ONE, F4::OMEGA),
        (F4::ONE, F4::OMEGA2),
    ]
}

fn normalize_point(u: F4, v: F4) -> (F4, F4) {
    match u.inv() {
        Some(s) => (F4::ONE, v.mul(s)),
        None => (F4::ZERO, F4::ONE),
    }
}

/// Integral lifts in `GL₂(Z[ω])` generating `GL₂(F₄)` after reduction.
pub fn section_generators() -> [EisMatrix2; 4] {
    let (o, i, w) = (Eisenstein::ZERO, Eisenstein::ONE, Eisenstein::OMEGA);
    [
        EisMatrix2::new([[i, i], [o, i]]),
        EisMatrix2::new([[i, o], [i, i]]),
        EisMatrix2::new([[w, o], [o, i]]),
        EisMatrix2::new([[o, i], [i, o]]),
    ]
}

/// Fixed integral lift of every element of `GL₂(F₄)`, found by breadth-first
/// search over words in [`section_generators`].
pub fn section_table() -> &'static HashMap<F4Matrix, EisMatrix2> {
    static TABLE: OnceLock<HashMap<F4Matrix, EisMatrix2>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let gens = section_generators();
        let mut table = HashMap::new();
        let mut queue = VecDeque::new();
        table.insert(F4Matrix::IDENTITY, EisMatrix2::identity());
        queue.push_back(EisMatrix2::identity());
        while let Some(m) = queue.pop_front() {
            for g in &gens {
                let next = &m * g;
                let key = F4Matrix::reduce(&next);
                if let std::collections::hash_map::Entry::Vacant(e) = table.entry(key) {
                    e.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
        table
    })
}

/// The lift of `m`; `None` if `m` is singular.
pub fn section(m: &F4Matrix) -> Option<&'static EisMatrix2> {
    section_table().get(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn field_axioms() {
        for x in F4::ALL {
            assert_eq!(x.add(x), F4::ZERO);
            assert_eq!(x.mul(F4::ONE), x);
            if !x.is_zero() {
                assert_eq!(x.mul(x.inv().unwrap()), F4::ONE);
            }
            for y in F4::ALL {
                assert_eq!(x.mul(y), y.mul(x));
                assert_eq!(F4::reduce(x.lift() * y.lift()), x.mul(y));
                assert_eq!(F4::reduce(x.lift() + y.lift()), x.add(y));
            }
        }
        assert_eq!(F4::OMEGA.mul(F4::OMEGA), F4::OMEGA2);
        assert_eq!(F4::reduce(Eisenstein::OMEGA2), F4::OMEGA2);
    }

    #[test]
    fn group_order() {
        assert_eq!(F4Matrix::all().filter(F4Matrix::is_invertible).count(), 180);
        let table = section_table();
        assert_eq!(table.len(), 180);
        for (k, v) in table {
            assert_eq!(&F4Matrix::reduce(v), k);
            assert!(v.det().is_unit());
        }
    }

    #[test]
    fn projective_quotient_is_even() {
        let scalars: Vec<F4Matrix> = [F4::ONE, F4::OMEGA, F4::OMEGA2]
            .iter()
            .map(|&s| F4Matrix([[s, F4::ZERO], [F4::ZERO, s]]))
            .collect();
        let mut classes = BTreeSet::new();
        let mut perms = BTreeSet::new();
        for m in F4Matrix::all().filter(F4Matrix::is_invertible) {
            let class: BTreeSet<F4Matrix> = scalars.iter().map(|s| s.mul(&m)).collect();
            classes.insert(class);
            let p = m.projective_permutation();
            assert!(p.is_even(), "{m} gives {p}");
            perms.insert(p.0);
        }
        assert_eq!(classes.len(), 60);
        assert_eq!(perms.len(), 60);
    }
}

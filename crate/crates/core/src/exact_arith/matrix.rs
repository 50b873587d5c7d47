//! Fixed-size square matrices over any commutative ring.

use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

/// Minimal commutative-ring bound used by [`Matrix`].
pub trait Ring: Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self> {}

impl<T> Ring for T where T: Clone + PartialEq + Zero + One + Neg<Output = T> + Sub<Output = T> {}

/// Row-major `N × N` matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T, const N: usize> {
    rows: [[T; N]; N],
}

impl<T: Ring, const N: usize> Matrix<T, N> {
    pub fn new(rows: [[T; N]; N]) -> Self {
        Self { rows }
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> T) -> Self {
        Self {
            rows: std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))),
        }
    }

    pub fn zero() -> Self {
        Self::from_fn(|_, _| T::zero())
    }

    pub fn identity() -> Self {
        Self::from_fn(|i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn scalar(s: T) -> Self {
        Self::from_fn(|i, j| if i == j { s.clone() } else { T::zero() })
    }

    pub fn rows(&self) -> &[[T; N]; N] {
        &self.rows
    }

    pub fn into_rows(self) -> [[T; N]; N] {
        self.rows
    }

    pub fn column(&self, j: usize) -> [T; N] {
        std::array::from_fn(|i| self.rows[i][j].clone())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.rows[j][i].clone())
    }

    pub fn map<U: Ring>(&self, mut f: impl FnMut(&T) -> U) -> Matrix<U, N> {
        Matrix::from_fn(|i, j| f(&self.rows[i][j]))
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn mul_vec(&self, v: &[T; N]) -> [T; N] {
        std::array::from_fn(|i| {
            let mut acc = T::zero();
            for (a, x) in self.rows[i].iter().zip(v.iter()) {
                acc = acc + a.clone() * x.clone();
            }
            acc
        })
    }

    /// `self^e` for `e >= 0`.
    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Determinant by cofactor expansion (N is at most 6 here).
    pub fn det(&self) -> T {
        let rows: Vec<Vec<T>> = self.rows.iter().map(|r| r.to_vec()).collect();
        det_dense(&rows)
    }
}

pub fn det_dense<T: Ring>(m: &[Vec<T>]) -> T {
    let n = m.len();
    match n {
        0 => T::one(),
        1 => m[0][0].clone(),
        2 => m[0][0].clone() * m[1][1].clone() - m[0][1].clone() * m[1][0].clone(),
        _ => {
            let mut acc = T::zero();
            for col in 0..n {
                if m[0][col].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<T>> = m[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|(j, _)| *j != col)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let term = m[0][col].clone() * det_dense(&minor);
                acc = if col % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        }
    }
}

impl<T: Ring, const N: usize> Index<(usize, usize)> for Matrix<T, N> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.rows[i][j]
    }
}

impl<T: Ring, const N: usize> IndexMut<(usize, usize)> for Matrix<T, N> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.rows[i][j]
    }
}

impl<T: Ring, const N: usize> Mul for &Matrix<T, N> {
    type Output = Matrix<T, N>;
    fn mul(self, rhs: Self) -> Matrix<T, N> {
        Matrix::from_fn(|i, j| {
            let mut acc = T::zero();
            for k in 0..N {
                if self.rows[i][k].is_zero() {
                    continue;
                }
                acc = acc + self.rows[i][k].clone() * rhs.rows[k][j].clone();
            }
            acc
        })
    }
}

impl<T: Ring, const N: usize> Mul for Matrix<T, N> {
    type Output = Matrix<T, N>;
    fn mul(self, rhs: Self) -> Matrix<T, N> {
        &self * &rhs
    }
}

impl<T: Ring, const N: usize> Add for &Matrix<T, N> {
    type Output = Matrix<T, N>;
    fn add(self, rhs: Self) -> Matrix<T, N> {
        Matrix::from_fn(|i, j| self.rows[i][j].clone() + rhs.rows[i][j].clone())
    }
}

impl<T: Ring, const N: usize> Sub for &Matrix<T, N> {
    type Output = Matrix<T, N>;
    fn sub(self, rhs: Self) -> Matrix<T, N> {
        Matrix::from_fn(|i, j| self.rows[i][j].clone() - rhs.rows[i][j].clone())
    }
}

impl<T: Ring, const N: usize> Neg for &Matrix<T, N> {
    type Output = Matrix<T, N>;
    fn neg(self) -> Matrix<T, N> {
        self.map(|x| -x.clone())
    }
}

impl<T: Ring, const N: usize> Neg for Matrix<T, N> {
    type Output = Matrix<T, N>;
    fn neg(self) -> Matrix<T, N> {
        -&self
    }
}

impl<T: Ring + fmt::Display, const N: usize> fmt::Debug for Matrix<T, N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
        }
        write!(f, "]")
    }
}

impl<T: Ring + fmt::Display, const N: usize> fmt::Display for Matrix<T, N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

//! The even lattice `M = U ⊕ U(2) ⊕ A2(2)` of signature (2,4) and its
//! integral orthogonal group.
//!
//! Vectors are column vectors in the standard basis `e1..e6`; matrices act
//! on the left.

pub mod complement;
pub mod disc;

pub use complement::{orthogonal_complement, Complement};
pub use disc::{
    disc_action, disc_form_value, enumerate_disc_orthogonal, to_s5, DiscAut, DiscElement, S5Perm,
};

use crate::error::{invariant, Error, Result};
use crate::exact_arith::Matrix;

/// 6×6 integer matrix acting on `M`.
pub type OrthMatrix = Matrix<i128, 6>;

/// Gram matrix `Q` of `M`.
pub fn gram() -> OrthMatrix {
    Matrix::new([
        [0, 1, 0, 0, 0, 0],
        [1, 0, 0, 0, 0, 0],
        [0, 0, 0, 2, 0, 0],
        [0, 0, 2, 0, 0, 0],
        [0, 0, 0, 0, -4, 2],
        [0, 0, 0, 0, 2, -4],
    ])
}

/// `12·Q⁻¹`, integral.
fn gram_inverse_times_12() -> OrthMatrix {
    Matrix::new([
        [0, 12, 0, 0, 0, 0],
        [12, 0, 0, 0, 0, 0],
        [0, 0, 0, 6, 0, 0],
        [0, 0, 6, 0, 0, 0],
        [0, 0, 0, 0, -4, -2],
        [0, 0, 0, 0, -2, -4],
    ])
}

/// `ᵗx Q y`.
pub fn pairing(x: &[i128; 6], y: &[i128; 6]) -> i128 {
    let q = gram();
    let qy = q.mul_vec(y);
    x.iter().zip(qy.iter()).map(|(a, b)| a * b).sum()
}

pub fn is_orthogonal(g: &OrthMatrix) -> bool {
    let q = gram();
    &(&g.transpose() * &q) * g == q
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Plus,
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlockParity {
    Diagonal,
    Antidiagonal,
}

/// Reference point `[1 : 8 : 2i : 2i : 0 : 0]` of `D_M⁺`, as (real, imaginary) integer parts.
pub const BASE_POINT_RE: [i128; 6] = [1, 8, 0, 0, 0, 0];
pub const BASE_POINT_IM: [i128; 6] = [0, 0, 2, 2, 0, 0];

/// Whether `g` preserves the component `D_M⁺`.
///
/// The image of the Gaussian-integral base point is again Gaussian-integral;
/// its component is the sign of `Im(w3 / w1) = Im(w3·w̄1) / |w1|²`.
pub fn orientation(g: &OrthMatrix) -> Result<Orientation> {
    if !is_orthogonal(g) {
        return Err(Error::NotOrthogonal);
    }
    let re = g.mul_vec(&BASE_POINT_RE);
    let im = g.mul_vec(&BASE_POINT_IM);
    if re[0] == 0 && im[0] == 0 {
        return invariant("image of the base point left the affine chart");
    }
    let s = im[2] * re[0] - re[2] * im[0];
    match s.signum() {
        1 => Ok(Orientation::Plus),
        -1 => Ok(Orientation::Minus),
        _ => invariant("image of the base point lies on the real boundary"),
    }
}

pub fn is_plus(g: &OrthMatrix) -> bool {
    matches!(orientation(g), Ok(Orientation::Plus))
}

/// Inverse of an element of `O(M)`: `Q⁻¹ ᵗg Q`.
pub fn orth_inverse(g: &OrthMatrix) -> Result<OrthMatrix> {
    if !is_orthogonal(g) {
        return Err(Error::NotOrthogonal);
    }
    let m = &(&gram_inverse_times_12() * &g.transpose()) * &gram();
    let mut out = OrthMatrix::zero();
    for i in 0..6 {
        for j in 0..6 {
            if m[(i, j)] % 12 != 0 {
                return invariant("Q^-1 gᵀ Q is not integral");
            }
            out[(i, j)] = m[(i, j)] / 12;
        }
    }
    Ok(out)
}

/// `g^k` for any integer `k`; `g` must be in `O(M)` when `k < 0`.
pub fn orth_pow(g: &OrthMatrix, k: i128) -> Result<OrthMatrix> {
    let base = if k < 0 { orth_inverse(g)? } else { g.clone() };
    Ok(base.pow(k.unsigned_abs() as u64))
}

/// `Q' = U(2) ⊕ A2(2)`, the Gram matrix of `e3..e6`.
pub fn gram_tail() -> Matrix<i128, 4> {
    Matrix::new([[0, 2, 0, 0], [2, 0, 0, 0], [0, 0, -4, 2], [0, 0, 2, -4]])
}

/// Unipotent element `h(m)` fixing `e2`, with first column `(1, a21, m)`.
pub fn translation_h(m: [i128; 4]) -> OrthMatrix {
    let qm = gram_tail().mul_vec(&m);
    let mqm: i128 = m.iter().zip(qm.iter()).map(|(a, b)| a * b).sum();
    // ᵗmQ'm is even because Q' is an even form
    let a21 = -mqm / 2;
    let mut h = OrthMatrix::identity();
    h[(1, 0)] = a21;
    for k in 0..4 {
        h[(2 + k, 0)] = m[k];
        h[(1, 2 + k)] = -qm[k];
    }
    h
}

/// Parity class of the upper-left 2×2 block.
pub fn block_parity(g: &OrthMatrix) -> Result<BlockParity> {
    if !is_orthogonal(g) {
        return Err(Error::NotOrthogonal);
    }
    let p = |i, j| g[(i, j)].rem_euclid(2);
    match (p(0, 0), p(0, 1), p(1, 0), p(1, 1)) {
        (1, 0, 0, 1) => Ok(BlockParity::Diagonal),
        (0, 1, 1, 0) => Ok(BlockParity::Antidiagonal),
        _ => invariant("upper-left block is neither I2 nor the swap mod 2"),
    }
}

fn require_plus(g: &OrthMatrix) -> Result<()> {
    match orientation(g)? {
        Orientation::Plus => Ok(()),
        Orientation::Minus => Err(Error::NotOrientationPreserving),
    }
}

fn column_congruent(
    g: &OrthMatrix,
    coeffs: &[(usize, i128)],
    target: &[(usize, i128)],
    modulus: i128,
) -> bool {
    (0..6).all(|row| {
        let lhs: i128 = coeffs.iter().map(|&(c, k)| k * g[(row, c)]).sum();
        let rhs: i128 = target
            .iter()
            .filter(|&&(c, _)| c == row)
            .map(|&(_, k)| k)
            .sum();
        (lhs - rhs).rem_euclid(modulus) == 0
    })
}

/// Kernel of the action on the discriminant group, tested through column congruences.
pub fn is_in_k3(g: &OrthMatrix) -> Result<bool> {
    require_plus(g)?;
    Ok(column_congruent(g, &[(2, 1)], &[(2, 1)], 2)
        && column_congruent(g, &[(3, 1)], &[(3, 1)], 2)
        && column_congruent(g, &[(4, 1), (5, 2)], &[(4, 1), (5, 2)], 6)
        && column_congruent(g, &[(4, 2), (5, 1)], &[(4, 2), (5, 1)], 6))
}

/// Columns 3..6 congruent to `e3..e6` mod 2.
pub fn is_in_enr(g: &OrthMatrix) -> Result<bool> {
    require_plus(g)?;
    Ok((2..6).all(|c| column_congruent(g, &[(c, 1)], &[(c, 1)], 2)))
}

/// Named elements of `O⁺(M)`.
pub mod named {
    use super::{translation_h, OrthMatrix};
    use crate::exact_arith::Matrix;

    fn block(upper: [[i128; 2]; 2], mid: [[i128; 2]; 2], lower: [[i128; 2]; 2]) -> OrthMatrix {
        let mut g = OrthMatrix::zero();
        for (k, b) in [upper, mid, lower].iter().enumerate() {
            for i in 0..2 {
                for j in 0..2 {
                    g[(2 * k + i, 2 * k + j)] = b[i][j];
                }
            }
        }
        g
    }

    const ID: [[i128; 2]; 2] = [[1, 0], [0, 1]];
    const SWAP: [[i128; 2]; 2] = [[0, 1], [1, 0]];

    fn tail(t: [[i128; 4]; 4]) -> OrthMatrix {
        let mut g = OrthMatrix::identity();
        for i in 0..4 {
            for j in 0..4 {
                g[(2 + i, 2 + j)] = t[i][j];
            }
        }
        g
    }

    pub fn g0() -> OrthMatrix {
        block(SWAP, ID, ID)
    }

    pub fn g1() -> OrthMatrix {
        tail([[1, 0, 0, 0], [1, 1, 2, -1], [1, 0, 1, 0], [0, 0, 0, 1]])
    }

    pub fn g2() -> OrthMatrix {
        tail([[1, 0, 0, 0], [1, 1, -1, 2], [0, 0, 1, 0], [1, 0, 0, 1]])
    }

    pub fn u0() -> OrthMatrix {
        block(ID, SWAP, ID)
    }

    pub fn u1() -> OrthMatrix {
        block(ID, ID, [[1, -1], [0, -1]])
    }

    pub fn u2() -> OrthMatrix {
        block(ID, ID, [[0, -1], [1, -1]])
    }

    /// `I4 ⊕ (−I2)`.
    pub fn i42() -> OrthMatrix {
        block(ID, ID, [[-1, 0], [0, -1]])
    }

    /// `(−I4) ⊕ I2`.
    pub fn i24() -> OrthMatrix {
        block([[-1, 0], [0, -1]], [[-1, 0], [0, -1]], ID)
    }

    pub fn h(i: usize) -> OrthMatrix {
        let mut m = [0; 4];
        m[i] = 1;
        translation_h(m)
    }

    /// `g0 · h(m) · g0`.
    pub fn h_prime(m: [i128; 4]) -> OrthMatrix {
        let g0 = g0();
        &(&g0 * &translation_h(m)) * &g0
    }

    /// `u0 g1 u0`.
    pub fn g1_conj() -> OrthMatrix {
        let u0 = u0();
        &(&u0 * &g1()) * &u0
    }

    /// `g0 u0 I4,2`, the element acting as `τ ↦ −½τ⁻¹` on the Hermitian side.
    pub fn w_lift() -> OrthMatrix {
        &(&g0() * &u0()) * &i42()
    }

    pub fn neg_identity() -> OrthMatrix {
        Matrix::scalar(-1)
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;
    use proptest::prelude::*;

    fn diag(d: [i128; 6]) -> OrthMatrix {
        Matrix::from_fn(|i, j| if i == j { d[i] } else { 0 })
    }

    #[test]
    fn gram_shape() {
        let q = gram();
        assert_eq!(q, q.transpose());
        assert_eq!(q.det(), 48);
        // orthogonal basis with two positive and four negative norms
        let basis: [[i128; 6]; 6] = [
            [1, 1, 0, 0, 0, 0],
            [0, 0, 1, 1, 0, 0],
            [1, -1, 0, 0, 0, 0],
            [0, 0, 1, -1, 0, 0],
            [0, 0, 0, 0, 1, 0],
            [0, 0, 0, 0, 1, 2],
        ];
        for i in 0..6 {
            for j in 0..6 {
                let p = pairing(&basis[i], &basis[j]);
                if i == j {
                    assert_eq!(p > 0, i < 2);
                } else {
                    assert_eq!(p, 0);
                }
            }
        }
        assert_ne!(Matrix::new(basis).det(), 0);
    }

    #[test]
    fn orthogonality_examples() {
        assert!(is_orthogonal(&OrthMatrix::identity()));
        assert!(is_orthogonal(&g1()));
        assert!(!is_orthogonal(&diag([2, 1, 1, 1, 1, 1])));
        for g in [g0(), g1(), g2(), u0(), u1(), u2(), i42(), i24(), w_lift()] {
            assert!(is_orthogonal(&g));
            assert_eq!(orientation(&g).unwrap(), Orientation::Plus, "{g}");
            assert!(g.det() == 1 || g.det() == -1);
        }
    }

    #[test]
    fn orientation_examples() {
        assert_eq!(
            orientation(&OrthMatrix::identity()).unwrap(),
            Orientation::Plus
        );
        assert_eq!(orientation(&neg_identity()).unwrap(), Orientation::Plus);
        assert_eq!(
            orientation(&diag([1, 1, -1, -1, 1, 1])).unwrap(),
            Orientation::Minus
        );
        assert_eq!(
            orientation(&diag([2, 1, 1, 1, 1, 1])),
            Err(Error::NotOrthogonal)
        );
    }

    #[test]
    fn translation_examples() {
        assert!(translation_h([0; 4]).is_identity());
        let h1 = translation_h([1, 0, 0, 0]);
        assert_eq!(h1[(1, 0)], 0);
        assert_eq!(
            [h1[(1, 2)], h1[(1, 3)], h1[(1, 4)], h1[(1, 5)]],
            [0, -2, 0, 0]
        );
        assert_eq!(orientation(&h1).unwrap(), Orientation::Plus);
    }

    #[test]
    fn translations_form_a_group_small_box() {
        let r = -1..=1;
        for a in itertools_box(r.clone()) {
            for b in itertools_box(r.clone()) {
                let sum = [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]];
                assert_eq!(&translation_h(a) * &translation_h(b), translation_h(sum));
            }
        }
    }

    fn itertools_box(r: std::ops::RangeInclusive<i128>) -> Vec<[i128; 4]> {
        let mut out = Vec::new();
        for a in r.clone() {
            for b in r.clone() {
                for c in r.clone() {
                    for d in r.clone() {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
        out
    }

    #[test]
    fn parity_examples() {
        assert_eq!(
            block_parity(&OrthMatrix::identity()).unwrap(),
            BlockParity::Diagonal
        );
        assert_eq!(block_parity(&g0()).unwrap(), BlockParity::Antidiagonal);
        assert_eq!(
            block_parity(&translation_h([1, 1, 1, 1])).unwrap(),
            BlockParity::Diagonal
        );
        assert_eq!(block_parity(&w_lift()).unwrap(), BlockParity::Antidiagonal);
    }

    #[test]
    fn congruence_kernels() {
        assert!(is_in_k3(&g0()).unwrap());
        assert!(!is_in_k3(&neg_identity()).unwrap());
        assert!(is_in_enr(&neg_identity()).unwrap());
        assert!(!is_in_enr(&u1()).unwrap());
        assert_eq!(
            is_in_k3(&diag([1, 1, -1, -1, 1, 1])),
            Err(Error::NotOrientationPreserving)
        );
    }

    #[test]
    fn inverse_is_two_sided() {
        for g in [
            g0(),
            g1(),
            g2(),
            u1(),
            u2(),
            translation_h([1, -2, 3, 1]),
            w_lift(),
        ] {
            let gi = orth_inverse(&g).unwrap();
            assert!((&g * &gi).is_identity());
            assert!((&gi * &g).is_identity());
        }
        assert_eq!(
            orth_pow(&g1(), -3).unwrap(),
            orth_inverse(&g1().pow(3)).unwrap()
        );
    }

    proptest! {
        #[test]
        fn translation_law(a in proptest::array::uniform4(-20i128..=20), b in proptest::array::uniform4(-20i128..=20)) {
            let h = translation_h(a);
            prop_assert!(is_orthogonal(&h));
            prop_assert_eq!(orientation(&h).unwrap(), Orientation::Plus);
            let s = [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]];
            prop_assert_eq!(&h * &translation_h(b), translation_h(s));
        }
    }
}

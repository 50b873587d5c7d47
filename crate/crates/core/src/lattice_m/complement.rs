//! Orthogonal complements of primitive vectors in `M`.

use super::gram;
use crate::error::{Error, Result};
use crate::exact_arith::det_dense;
use num_integer::Integer;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Complement {
    pub basis: Vec<[i128; 6]>,
    pub gram: Vec<Vec<i128>>,
}

impl Complement {
    pub fn gram_det(&self) -> i128 {
        det_dense(&self.gram)
    }
}

/// Integral basis of the kernel of the linear form `x ↦ w·x` on `Z⁶`.
///
/// Column operations bring `w` to `(g, 0, …, 0)`; the accumulated unimodular
/// matrix then has the kernel basis in its last five columns.
pub fn integer_kernel(w: [i128; 6]) -> Vec<[i128; 6]> {
    let mut w = w;
    // u[j] is column j of the accumulated unimodular matrix
    let mut u: [[i128; 6]; 6] = std::array::from_fn(|j| std::array::from_fn(|i| (i == j) as i128));
    loop {
        let pivot = (0..6)
            .filter(|&j| w[j] != 0)
            .min_by_key(|&j| (w[j].abs(), j));
        let Some(p) = pivot else { break };
        let mut done = true;
        for j in 0..6 {
            if j == p || w[j] == 0 {
                continue;
            }
            let q = w[j] / w[p];
            w[j] -= q * w[p];
            for i in 0..6 {
                u[j][i] -= q * u[p][i];
            }
            if w[j] != 0 {
                done = false;
            }
        }
        if done {
            w.swap(0, p);
            u.swap(0, p);
            break;
        }
    }
    u[1..].to_vec()
}

pub fn gram_of(basis: &[[i128; 6]]) -> Vec<Vec<i128>> {
    basis
        .iter()
        .map(|x| basis.iter().map(|y| super::pairing(x, y)).collect())
        .collect()
}

/// Basis and Gram matrix of `{x ∈ M : ᵗxQv = 0}`.
pub fn orthogonal_complement(v: [i128; 6]) -> Result<Complement> {
    if v.iter().all(|&x| x == 0) {
        return Err(Error::ZeroVector);
    }
    let g = v.iter().fold(0i128, |acc, &x| acc.gcd(&x));
    if g != 1 {
        return Err(Error::Precondition(format!(
            "vector is not primitive (content {g})"
        )));
    }
    let w = gram().mul_vec(&v);
    let basis = integer_kernel(w);
    let gram = gram_of(&basis);
    Ok(Complement { basis, gram })
}

#[cfg(test)]
mod tests {
    use super::super::pairing;
    use super::*;
    use proptest::prelude::*;

    fn diag(d: &[i128]) -> Vec<Vec<i128>> {
        (0..d.len())
            .map(|i| {
                (0..d.len())
                    .map(|j| if i == j { d[i] } else { 0 })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn node_vector() {
        let v = [1, -1, 0, 0, 0, 0];
        let listed = [
            [1, 1, 1, 0, 0, 0],
            [3, 3, 0, -3, 1, 2],
            [1, 1, 1, -1, 0, 0],
            [-1, -1, 0, 1, 0, -1],
            [-1, -1, 0, 1, -1, -1],
        ];
        for b in &listed {
            assert_eq!(pairing(b, &v), 0);
        }
        assert_eq!(gram_of(&listed), diag(&[2, 6, -2, -2, -2]));
        let c = orthogonal_complement(v).unwrap();
        assert_eq!(c.basis.len(), 5);
        for b in &c.basis {
            assert_eq!(pairing(b, &v), 0);
        }
        assert_eq!(c.gram_det(), det_dense(&gram_of(&listed)));
    }

    #[test]
    fn eckardt_vector() {
        let e5 = [0, 0, 0, 0, 1, 0];
        let c = orthogonal_complement(e5).unwrap();
        let last = [0, 0, 0, 0, 1, 2];
        assert_eq!(pairing(&last, &last), -12);
        let listed = [
            [1, 0, 0, 0, 0, 0],
            [0, 1, 0, 0, 0, 0],
            [0, 0, 1, 0, 0, 0],
            [0, 0, 0, 1, 0, 0],
            last,
        ];
        for b in listed.iter().chain(c.basis.iter()) {
            assert_eq!(pairing(b, &e5), 0);
        }
        assert_eq!(det_dense(&gram_of(&listed)), c.gram_det());
    }

    #[test]
    fn kummer_vector() {
        let v = [0, 3, 0, 0, 1, 2];
        let listed = [
            [0, 1, 0, 0, 0, 0],
            [2, 1, 0, 0, 1, 1],
            [0, 0, 1, 0, 0, 0],
            [0, 0, 0, 1, 0, 0],
            [0, 1, 0, 0, 1, 0],
        ];
        for b in &listed {
            assert_eq!(pairing(b, &v), 0);
        }
        let g = gram_of(&listed);
        let expect = vec![
            vec![0, 2, 0, 0, 0],
            vec![2, 0, 0, 0, 0],
            vec![0, 0, 0, 2, 0],
            vec![0, 0, 2, 0, 0],
            vec![0, 0, 0, 0, -4],
        ];
        assert_eq!(g, expect);
        assert_eq!(orthogonal_complement(v).unwrap().gram_det(), det_dense(&g));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(orthogonal_complement([0; 6]), Err(Error::ZeroVector));
        assert!(matches!(
            orthogonal_complement([2, 0, 0, 0, 0, 2]),
            Err(Error::Precondition(_))
        ));
    }

    proptest! {
        #[test]
        fn kernel_is_primitive_basis(v in proptest::array::uniform6(-9i128..=9)) {
            prop_assume!(v.iter().any(|&x| x != 0));
            let g = v.iter().fold(0i128, |acc, &x| acc.gcd(&x));
            let v = v.map(|x| x / g);
            let c = orthogonal_complement(v).unwrap();
            prop_assert_eq!(c.basis.len(), 5);
            for b in &c.basis {
                prop_assert_eq!(pairing(b, &v), 0);
            }
            for i in 0..5 {
                for j in 0..5 {
                    prop_assert_eq!(c.gram[i][j], c.gram[j][i]);
                }
            }
            let vv = pairing(&v, &v);
            let d = c.gram_det();
            if vv != 0 {
                prop_assert_eq!((48 * vv) % d, 0, "det {} does not divide {}", d, 48 * vv);
            }
            // saturated: the 5×5 minors of the basis are coprime
            let minors_gcd = (0..6).fold(0i128, |acc, skip| {
                let m: Vec<Vec<i128>> = c
                    .basis
                    .iter()
                    .map(|r| (0..6).filter(|&k| k != skip).map(|k| r[k]).collect())
                    .collect();
                acc.gcd(&det_dense(&m))
            });
            prop_assert_eq!(minors_gcd, 1);
        }
    }
}

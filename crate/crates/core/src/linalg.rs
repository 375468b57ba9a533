//! Small dense exact-rational linear algebra.

use num_rational::BigRational;
use num_traits::{One, Zero};

pub type QMatrix = Vec<Vec<BigRational>>;

pub fn from_integers(m: &[Vec<i64>]) -> QMatrix {
    m.iter()
        .map(|row| {
            row.iter()
                .map(|&x| BigRational::from_integer(x.into()))
                .collect()
        })
        .collect()
}

pub fn identity(n: usize) -> QMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

pub fn mul(a: &QMatrix, b: &QMatrix) -> QMatrix {
    let n = a.len();
    let k = b.len();
    let m = if k == 0 { 0 } else { b[0].len() };
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..k).fold(BigRational::zero(), |acc, t| acc + &a[i][t] * &b[t][j]))
                .collect()
        })
        .collect()
}

pub fn mul_vec(a: &QMatrix, v: &[BigRational]) -> Vec<BigRational> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(BigRational::zero(), |acc, (x, y)| acc + x * y)
        })
        .collect()
}

/// Gauss-Jordan inverse; `None` when singular.
pub fn inverse(a: &QMatrix) -> Option<QMatrix> {
    let n = a.len();
    let mut aug: QMatrix = a
        .iter()
        .zip(identity(n))
        .map(|(row, id)| row.iter().cloned().chain(id).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, pivot);
        let inv = BigRational::one() / &aug[col][col];
        for x in aug[col].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let factor = aug[r][col].clone();
                for c in 0..2 * n {
                    let delta = &factor * &aug[col][c];
                    aug[r][c] -= delta;
                }
            }
        }
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Determinant by fraction-preserving elimination.
pub fn determinant(a: &QMatrix) -> BigRational {
    let n = a.len();
    let mut m = a.clone();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            m.swap(col, pivot);
            det = -det;
        }
        det *= &m[col][col];
        for r in col + 1..n {
            if !m[r][col].is_zero() {
                let factor = &m[r][col] / &m[col][col];
                for c in col..n {
                    let delta = &factor * &m[col][c];
                    m[r][c] -= delta;
                }
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_a2_cartan() {
        let a = from_integers(&[vec![2, -1], vec![-1, 2]]);
        let inv = inverse(&a).unwrap();
        assert_eq!(mul(&a, &inv), identity(2));
        assert_eq!(inv[0][0], BigRational::new(2.into(), 3.into()));
        assert_eq!(inv[0][1], BigRational::new(1.into(), 3.into()));
    }

    #[test]
    fn singular_matrix_has_no_inverse() {
        let a = from_integers(&[vec![1, 2], vec![2, 4]]);
        assert!(inverse(&a).is_none());
        assert!(determinant(&a).is_zero());
    }

    #[test]
    fn determinant_with_row_swap() {
        let a = from_integers(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(determinant(&a), -BigRational::one());
    }
}

//! Small dense matrices over `Q(q)`.

use crate::qcoeff::{RationalFunction, Scalar};

pub type Matrix = Vec<Vec<RationalFunction>>;

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { RationalFunction::one() } else { RationalFunction::zero() }).collect())
        .collect()
}

pub fn transpose(a: &Matrix) -> Matrix {
    if a.is_empty() {
        return Vec::new();
    }
    (0..a[0].len()).map(|j| a.iter().map(|row| row[j].clone()).collect()).collect()
}

pub fn mul(a: &Matrix, b: &Matrix) -> Matrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            assert_eq!(row.len(), inner, "dimension mismatch");
            (0..cols)
                .map(|j| {
                    let mut acc = RationalFunction::zero();
                    for (k, x) in row.iter().enumerate() {
                        if !x.is_zero() && !b[k][j].is_zero() {
                            acc = &acc + &(x * &b[k][j]);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// `v A` for a row vector `v`.
pub fn row_times(v: &[RationalFunction], a: &Matrix) -> Vec<RationalFunction> {
    let cols = a.first().map_or(0, Vec::len);
    let mut out = vec![RationalFunction::zero(); cols];
    for (k, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in a[k].iter().enumerate() {
            if !y.is_zero() {
                out[j] = &out[j] + &(x * y);
            }
        }
    }
    out
}

pub fn dot(u: &[RationalFunction], v: &[RationalFunction]) -> RationalFunction {
    u.iter().zip(v).filter(|(a, b)| !a.is_zero() && !b.is_zero()).fold(RationalFunction::zero(), |acc, (a, b)| &acc + &(a * b))
}

/// Inverse of a lower unitriangular matrix by forward substitution.
pub fn lower_unitriangular_inverse(m: &Matrix) -> Matrix {
    let n = m.len();
    let mut inv = identity(n);
    for i in 0..n {
        debug_assert!(m[i][i].is_one(), "diagonal entry {i} is not 1");
        for j in 0..i {
            // (M inv)[i][j] = 0 = inv[i][j] + sum_{j<=k<i} M[i][k] inv[k][j]
            let mut acc = RationalFunction::zero();
            for k in j..i {
                if !m[i][k].is_zero() && !inv[k][j].is_zero() {
                    acc = &acc + &(&m[i][k] * &inv[k][j]);
                }
            }
            inv[i][j] = acc.negated();
        }
    }
    inv
}

/// Determinant by elimination over `Q(q)`.
pub fn determinant(a: &Matrix) -> RationalFunction {
    let n = a.len();
    let mut m = a.clone();
    let mut det = RationalFunction::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return RationalFunction::zero();
        };
        if p != col {
            m.swap(p, col);
            det = det.negated();
        }
        let pivot = m[col][col].clone();
        det = &det * &pivot;
        let inv = pivot.inverse().expect("pivot is nonzero");
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] * &inv;
            for c in col..n {
                if !m[col][c].is_zero() {
                    m[r][c] = &m[r][c] - &(&factor * &m[col][c]);
                }
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcoeff::quantum_int;

    #[test]
    fn inverse_of_unitriangular() {
        let mut m = identity(3);
        m[1][0] = quantum_int(2);
        m[2][0] = RationalFunction::q();
        m[2][1] = quantum_int(3).inverse().unwrap();
        let inv = lower_unitriangular_inverse(&m);
        assert_eq!(mul(&m, &inv), identity(3));
        assert_eq!(mul(&inv, &m), identity(3));
        assert!(determinant(&m).is_one());
    }

    #[test]
    fn two_by_two_determinant() {
        let m = vec![
            vec![quantum_int(2), RationalFunction::one()],
            vec![RationalFunction::one(), RationalFunction::q()],
        ];
        let want = &(&quantum_int(2) * &RationalFunction::q()) - &RationalFunction::one();
        assert_eq!(determinant(&m), want);
    }
}

//! Exact linear algebra over the rationals: fraction-free rank and the
//! inertia signature of symmetric matrices by congruence reduction.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatrixError {
    #[error("matrix must be nonempty and rectangular")]
    Shape,
    #[error("operation requires a square matrix")]
    NotSquare,
    #[error("operation requires a symmetric matrix")]
    NotSymmetric,
}

/// A dense matrix of exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: Vec<Vec<Rational>>,
}

impl RationalMatrix {
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, MatrixError> {
        let cols = match rows.first() {
            None => return Err(MatrixError::Shape),
            Some(r) => r.len(),
        };
        if cols == 0 || rows.iter().any(|r| r.len() != cols) {
            return Err(MatrixError::Shape);
        }
        Ok(RationalMatrix { rows })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows: vec![vec![Rational::zero(); cols]; rows],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size, size);
        for i in 0..size {
            m.rows[i][i] = Rational::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.rows[0].len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.rows[i][j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.rows[i]
    }

    pub fn transpose(&self) -> RationalMatrix {
        let mut t = Self::zeros(self.cols(), self.rows());
        for i in 0..self.rows() {
            for j in 0..self.cols() {
                t.rows[j][i] = self.rows[i][j].clone();
            }
        }
        t
    }

    pub fn matmul(&self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols(), rhs.rows(), "dimension mismatch");
        let mut out = Self::zeros(self.rows(), rhs.cols());
        for i in 0..self.rows() {
            for j in 0..rhs.cols() {
                let mut sum = Rational::zero();
                for k in 0..self.cols() {
                    sum += &self.rows[i][k] * &rhs.rows[k][j];
                }
                out.rows[i][j] = sum;
            }
        }
        out
    }

    pub fn is_square(&self) -> bool {
        self.rows() == self.cols()
    }

    pub fn is_symmetric(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows() {
            for j in 0..i {
                if self.rows[i][j] != self.rows[j][i] {
                    return false;
                }
            }
        }
        true
    }

    /// `(M + M^T) / 2`; leaves the associated quadratic form unchanged.
    pub fn symmetric_part(&self) -> Result<RationalMatrix, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare);
        }
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        let mut out = Self::zeros(self.rows(), self.cols());
        for i in 0..self.rows() {
            for j in 0..self.cols() {
                out.rows[i][j] = (&self.rows[i][j] + &self.rows[j][i]) * &half;
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(crate::rational::format_rational).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Exact rank by fraction-free (Bareiss) elimination: rows are scaled to
/// integers, then eliminated with exact divisions by the previous pivot.
pub fn rank(matrix: &RationalMatrix) -> usize {
    let rows = matrix.rows();
    let cols = matrix.cols();
    // scale each row by the lcm of its denominators; rank is unchanged
    let mut a: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| {
            let lcm = matrix.row(i).iter().fold(BigInt::one(), |acc, v| {
                acc.lcm(v.denom())
            });
            matrix
                .row(i)
                .iter()
                .map(|v| v.numer() * (&lcm / v.denom()))
                .collect()
        })
        .collect();

    let mut r = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pivot_row) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, pivot_row);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let numerator = &a[i][j] * &a[r][c] - &a[i][c] * &a[r][j];
                debug_assert!((&numerator % &prev).is_zero(), "Bareiss division not exact");
                a[i][j] = numerator / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// Inertia signature of a symmetric real quadratic form: the counts of
/// positive, negative, and zero pivots of any congruence diagonalization,
/// invariant by Sylvester's law.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InertiaSignature {
    pub r_plus: usize,
    pub r_minus: usize,
    pub r_zero: usize,
}

impl InertiaSignature {
    pub fn rank(&self) -> usize {
        self.r_plus + self.r_minus
    }

    pub fn dimension(&self) -> usize {
        self.r_plus + self.r_minus + self.r_zero
    }
}

impl fmt::Display for InertiaSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(r+ = {}, r- = {}, r0 = {})", self.r_plus, self.r_minus, self.r_zero)
    }
}

/// Exact inertia by symmetric congruence reduction.
///
/// Pivots on a nonzero diagonal entry when one exists; when the trailing
/// block has an all-zero diagonal but some nonzero entry `a[i][l]`, the
/// congruence adding row and column `l` to `i` creates the diagonal entry
/// `2*a[i][l]` (characteristic zero) and reduction continues. Signs of the
/// resulting pivots give the signature.
pub fn inertia(matrix: &RationalMatrix) -> Result<InertiaSignature, MatrixError> {
    if !matrix.is_symmetric() {
        return Err(MatrixError::NotSymmetric);
    }
    let m = matrix.rows();
    let mut a: Vec<Vec<Rational>> = matrix.rows.clone();
    let mut signature = InertiaSignature {
        r_plus: 0,
        r_minus: 0,
        r_zero: 0,
    };

    for k in 0..m {
        if a[k][k].is_zero() {
            if let Some(j) = (k + 1..m).find(|&j| !a[j][j].is_zero()) {
                swap_symmetric(&mut a, k, j);
            } else if let Some((i, l)) = first_offdiag_nonzero(&a, k) {
                // row/col addition makes a[i][i] = 2*a[i][l] nonzero
                add_row_col(&mut a, i, l);
                if i != k {
                    swap_symmetric(&mut a, k, i);
                }
            } else {
                signature.r_zero += m - k;
                break;
            }
        }
        let pivot = a[k][k].clone();
        if pivot.is_positive() {
            signature.r_plus += 1;
        } else {
            signature.r_minus += 1;
        }
        for i in k + 1..m {
            if a[i][k].is_zero() {
                continue;
            }
            let factor = &a[i][k] / &pivot;
            for j in 0..m {
                let delta = &factor * &a[k][j];
                a[i][j] -= delta;
            }
            for j in 0..m {
                let delta = &factor * &a[j][k];
                a[j][i] -= delta;
            }
        }
    }
    debug_assert_eq!(signature.dimension(), m);
    Ok(signature)
}

fn swap_symmetric(a: &mut [Vec<Rational>], i: usize, j: usize) {
    a.swap(i, j);
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

fn first_offdiag_nonzero(a: &[Vec<Rational>], from: usize) -> Option<(usize, usize)> {
    let m = a.len();
    for i in from..m {
        for l in i + 1..m {
            if !a[i][l].is_zero() {
                return Some((i, l));
            }
        }
    }
    None
}

fn add_row_col(a: &mut Vec<Vec<Rational>>, i: usize, l: usize) {
    let m = a.len();
    for j in 0..m {
        let v = a[l][j].clone();
        a[i][j] += v;
    }
    for row in a.iter_mut().take(m) {
        let v = row[l].clone();
        row[i] += v;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn from_ints(entries: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_rows(
            entries
                .iter()
                .map(|row| row.iter().map(|&v| rat_int(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&from_ints(&[&[1, 1], &[1, 1]])), 1);
        assert_eq!(rank(&from_ints(&[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2]])), 3);
        let ones = RationalMatrix::from_rows(vec![vec![rat_int(1); 5]; 5]).unwrap();
        assert_eq!(rank(&ones), 1);
        assert_eq!(rank(&RationalMatrix::zeros(3, 4)), 0);
    }

    #[test]
    fn rank_handles_fractions() {
        let m = RationalMatrix::from_rows(vec![
            vec![rat(1, 2), rat(1, 3)],
            vec![rat(3, 2), rat_int(1)],
        ])
        .unwrap();
        assert_eq!(rank(&m), 1);
    }

    #[test]
    fn inertia_of_diagonal() {
        let m = from_ints(&[&[1, 0, 0], &[0, -2, 0], &[0, 0, 0]]);
        assert_eq!(
            inertia(&m).unwrap(),
            InertiaSignature {
                r_plus: 1,
                r_minus: 1,
                r_zero: 1
            }
        );
    }

    #[test]
    fn inertia_of_hyperbolic_plane() {
        // congruent to diag(2, -1/2)
        let m = from_ints(&[&[0, 1], &[1, 0]]);
        assert_eq!(
            inertia(&m).unwrap(),
            InertiaSignature {
                r_plus: 1,
                r_minus: 1,
                r_zero: 0
            }
        );
    }

    #[test]
    fn inertia_rejects_asymmetric_input() {
        let m = from_ints(&[&[0, 1], &[2, 0]]);
        assert_eq!(inertia(&m), Err(MatrixError::NotSymmetric));
    }

    #[test]
    fn zero_matrix_signature() {
        let m = RationalMatrix::zeros(4, 4);
        assert_eq!(
            inertia(&m).unwrap(),
            InertiaSignature {
                r_plus: 0,
                r_minus: 0,
                r_zero: 4
            }
        );
    }

    fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
        rat(rng.gen_range(-6i64..7), rng.gen_range(1i64..4))
    }

    fn random_symmetric(rng: &mut ChaCha8Rng, m: usize) -> RationalMatrix {
        let mut a = RationalMatrix::zeros(m, m);
        for i in 0..m {
            for j in 0..=i {
                let v = random_rational(rng);
                a.set(i, j, v.clone());
                a.set(j, i, v);
            }
        }
        a
    }

    // Random invertible matrix as a product of elementary operations.
    fn random_invertible(rng: &mut ChaCha8Rng, m: usize) -> RationalMatrix {
        let mut s = RationalMatrix::identity(m);
        for _ in 0..3 * m {
            let i = rng.gen_range(0..m);
            let j = rng.gen_range(0..m);
            if i == j {
                let scale = rat_int(*[-3, -2, -1, 1, 2, 3].get(rng.gen_range(0..6)).unwrap());
                for c in 0..m {
                    let v = s.entry(i, c) * &scale;
                    s.set(i, c, v);
                }
            } else {
                let factor = random_rational(rng);
                for c in 0..m {
                    let v = s.entry(i, c) + &(&factor * s.entry(j, c));
                    s.set(i, c, v);
                }
            }
        }
        s
    }

    // Plain rational Gaussian elimination, used as the rank oracle.
    fn rank_oracle(matrix: &RationalMatrix) -> usize {
        let mut a: Vec<Vec<Rational>> = (0..matrix.rows())
            .map(|i| matrix.row(i).to_vec())
            .collect();
        let (rows, cols) = (matrix.rows(), matrix.cols());
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            for i in r + 1..rows {
                if a[i][c].is_zero() {
                    continue;
                }
                let f = &a[i][c] / &a[r][c];
                for j in c..cols {
                    let delta = &f * &a[r][j];
                    a[i][j] -= delta;
                }
            }
            r += 1;
        }
        r
    }

    #[test]
    fn bareiss_rank_matches_rational_elimination() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..60 {
            let rows = rng.gen_range(1..6);
            let cols = rng.gen_range(1..6);
            let mut m = RationalMatrix::zeros(rows, cols);
            for i in 0..rows {
                for j in 0..cols {
                    // sprinkle zeros to hit rank-deficient cases
                    if rng.gen_range(0..3) == 0 {
                        continue;
                    }
                    m.set(i, j, random_rational(&mut rng));
                }
            }
            assert_eq!(rank(&m), rank_oracle(&m));
        }
    }

    #[test]
    fn sylvester_invariance_under_congruence() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let m = rng.gen_range(1..=6);
            let a = random_symmetric(&mut rng, m);
            let s = random_invertible(&mut rng, m);
            let congruent = s.transpose().matmul(&a).matmul(&s);
            let sig_a = inertia(&a).unwrap();
            let sig_c = inertia(&congruent).unwrap();
            assert_eq!(sig_a, sig_c, "inertia changed under congruence");
            assert_eq!(rank(&a), sig_a.rank(), "rank != r+ + r-");
        }
    }
}

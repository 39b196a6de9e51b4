//! Dense matrices over the Gaussian integers.

use std::ops::Mul;

use nalgebra::DMatrix;
use num_complex::{Complex, Complex64};

pub type GaussInt = Complex<i32>;

const ZERO: GaussInt = Complex::new(0, 0);
const ONE: GaussInt = Complex::new(1, 0);

/// Row-major square matrix with Gaussian-integer entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    dim: usize,
    data: Vec<GaussInt>,
}

impl ExactMatrix {
    pub fn identity(dim: usize) -> Self {
        let mut data = vec![ZERO; dim * dim];
        for i in 0..dim {
            data[i * dim + i] = ONE;
        }
        Self { dim, data }
    }

    pub fn from_rows(rows: &[&[GaussInt]]) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        Self { dim, data: rows.iter().flat_map(|r| r.iter().copied()).collect() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> GaussInt {
        self.data[row * self.dim + col]
    }

    pub fn kron(&self, other: &Self) -> Self {
        let dim = self.dim * other.dim;
        let mut data = vec![ZERO; dim * dim];
        for r1 in 0..self.dim {
            for c1 in 0..self.dim {
                let a = self.get(r1, c1);
                if a == ZERO {
                    continue;
                }
                for r2 in 0..other.dim {
                    for c2 in 0..other.dim {
                        data[(r1 * other.dim + r2) * dim + c1 * other.dim + c2] = a * other.get(r2, c2);
                    }
                }
            }
        }
        Self { dim, data }
    }

    pub fn scale(&self, s: GaussInt) -> Self {
        Self { dim: self.dim, data: self.data.iter().map(|&x| x * s).collect() }
    }

    pub fn conjugate_transpose(&self) -> Self {
        let mut data = vec![ZERO; self.data.len()];
        for r in 0..self.dim {
            for c in 0..self.dim {
                data[c * self.dim + r] = self.get(r, c).conj();
            }
        }
        Self { dim: self.dim, data }
    }

    pub fn transpose(&self) -> Self {
        let mut data = vec![ZERO; self.data.len()];
        for r in 0..self.dim {
            for c in 0..self.dim {
                data[c * self.dim + r] = self.get(r, c);
            }
        }
        Self { dim: self.dim, data }
    }

    pub fn is_real(&self) -> bool {
        self.data.iter().all(|z| z.im == 0)
    }

    pub fn is_hermitian(&self) -> bool {
        *self == self.conjugate_transpose()
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    pub fn trace(&self) -> GaussInt {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// `tr(self† · other)`, the Hilbert-Schmidt inner product.
    pub fn inner(&self, other: &Self) -> GaussInt {
        self.data.iter().zip(&other.data).map(|(a, b)| a.conj() * b).sum()
    }

    /// Non-zero entries as `(row, col, value)`.
    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, GaussInt)> + '_ {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, z)| **z != ZERO)
            .map(move |(k, &z)| (k / self.dim, k % self.dim, z))
    }

    pub fn to_complex(&self) -> DMatrix<Complex64> {
        DMatrix::from_fn(self.dim, self.dim, |r, c| {
            let z = self.get(r, c);
            Complex64::new(f64::from(z.re), f64::from(z.im))
        })
    }
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;

    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let mut data = vec![ZERO; n * n];
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a == ZERO {
                    continue;
                }
                for c in 0..n {
                    let b = rhs.data[k * n + c];
                    if b != ZERO {
                        data[r * n + c] += a * b;
                    }
                }
            }
        }
        ExactMatrix { dim: n, data }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const I: GaussInt = Complex::new(0, 1);

    #[test]
    fn kron_and_product() {
        let x = ExactMatrix::from_rows(&[&[ZERO, ONE], &[ONE, ZERO]]);
        let xx = x.kron(&x);
        assert_eq!(xx.get(0, 3), ONE);
        assert_eq!(xx.get(0, 0), ZERO);
        assert_eq!(&xx * &xx, ExactMatrix::identity(4));
    }

    #[test]
    fn hermitian_checks() {
        let y = ExactMatrix::from_rows(&[&[ZERO, -I], &[I, ZERO]]);
        assert!(y.is_hermitian());
        assert!(!y.is_real());
        assert!(!y.is_symmetric());
        assert_eq!(y.inner(&y), Complex::new(2, 0));
    }
}

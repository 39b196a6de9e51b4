//! Reference matrices built in floating point with nalgebra, independently
//! of the crate's exact tables.

#![allow(dead_code)]

use gbit::GbitKind;
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn sigma(letter: char) -> DMatrix<Complex64> {
    match letter {
        'I' => DMatrix::identity(2, 2),
        'X' => DMatrix::from_row_slice(2, 2, &[c(0., 0.), c(1., 0.), c(1., 0.), c(0., 0.)]),
        'Y' => DMatrix::from_row_slice(2, 2, &[c(0., 0.), c(0., -1.), c(0., 1.), c(0., 0.)]),
        'Z' => DMatrix::from_row_slice(2, 2, &[c(1., 0.), c(0., 0.), c(0., 0.), c(-1., 0.)]),
        _ => panic!("unknown letter {letter}"),
    }
}

/// Pauli string for a question index: qubits 1,2,3 = X,Y,Z; rebits 1,2,3 = X,Z,Y.
pub fn pauli(kind: GbitKind, digits: &[u8]) -> DMatrix<Complex64> {
    let letters = match kind {
        GbitKind::Qubit => ['I', 'X', 'Y', 'Z'],
        GbitKind::Rebit => ['I', 'X', 'Z', 'Y'],
    };
    digits.iter().fold(DMatrix::identity(1, 1), |acc, &d| acc.kronecker(&sigma(letters[usize::from(d)])))
}

pub fn pauli_str(kind: GbitKind, s: &str) -> DMatrix<Complex64> {
    let digits: Vec<u8> = s.bytes().map(|b| b - b'0').collect();
    pauli(kind, &digits)
}

pub fn close(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>, tol: f64) -> bool {
    (a - b).norm() < tol
}

/// Normalized projection of `|0…0>`, or of the first basis vector with a
/// non-zero image, onto the common `+1` eigenspace of `ops`.
pub fn common_eigenstate(dim: usize, ops: &[DMatrix<Complex64>]) -> DMatrix<Complex64> {
    let id = DMatrix::<Complex64>::identity(dim, dim);
    let projector = ops.iter().fold(id.clone(), |acc, p| acc * (&id + p).scale(0.5));
    for k in 0..dim {
        let v: DVector<Complex64> = projector.column(k).into_owned();
        if v.norm() > 1e-6 {
            let v = v.unscale(v.norm());
            return &v * v.adjoint();
        }
    }
    panic!("empty eigenspace")
}

/// `tr(ρ (I + P) / 2)`.
pub fn born(rho: &DMatrix<Complex64>, p: &DMatrix<Complex64>) -> f64 {
    let d = rho.nrows();
    (rho * (DMatrix::identity(d, d) + p).scale(0.5)).trace().re
}

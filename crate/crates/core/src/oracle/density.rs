use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use super::{cached_matrix_of, OracleError};
use crate::question::{enumerate_complete_set, QuestionIndex};
use crate::state::BlochState;
use crate::system::SystemKind;

/// Largest accepted `|ρ - ρ†|` entry.
pub const HERMITIAN_TOLERANCE: f64 = 1e-10;
/// Smallest accepted eigenvalue for a physical state.
pub const PSD_TOLERANCE: f64 = -1e-10;

/// Hermitian `2^n x 2^n` matrix whose trace is the presence probability.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: DMatrix<Complex64>,
}

impl DensityMatrix {
    /// Validates shape and hermiticity, then symmetrizes away round-off.
    pub fn new(matrix: DMatrix<Complex64>) -> Result<Self, OracleError> {
        let (rows, cols) = matrix.shape();
        if rows != cols || !rows.is_power_of_two() || rows < 2 {
            return Err(OracleError::BadShape { rows, cols });
        }
        let adjoint = matrix.adjoint();
        let deviation = (&matrix - &adjoint).iter().map(|z| z.norm()).fold(0.0, f64::max);
        if deviation > HERMITIAN_TOLERANCE {
            return Err(OracleError::NotHermitian(deviation));
        }
        Ok(Self { matrix: (matrix + adjoint).scale(0.5) })
    }

    pub fn maximally_mixed(n: usize) -> Self {
        let d = 1usize << n;
        Self { matrix: DMatrix::identity(d, d).scale(1.0 / d as f64) }
    }

    /// `|ψ⟩⟨ψ| / ⟨ψ|ψ⟩`.
    pub fn from_pure(psi: &DVector<Complex64>) -> Result<Self, OracleError> {
        let norm2 = psi.norm_squared();
        if norm2 == 0.0 {
            return Err(OracleError::ZeroProbability(0.0));
        }
        Self::new(psi * psi.adjoint() / Complex64::new(norm2, 0.0))
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn n(&self) -> usize {
        self.dim().trailing_zeros() as usize
    }

    /// Presence probability `p = tr ρ`.
    pub fn trace(&self) -> f64 {
        self.matrix.trace().re
    }

    pub fn purity(&self) -> f64 {
        (&self.matrix * &self.matrix).trace().re
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        self.matrix.clone().symmetric_eigenvalues().iter().copied().collect()
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues().into_iter().fold(f64::INFINITY, f64::min)
    }

    /// Positive semidefinite within [`PSD_TOLERANCE`].
    pub fn is_physical(&self) -> bool {
        self.min_eigenvalue() >= PSD_TOLERANCE
    }

    /// `U ρ U†`.
    pub fn conjugate_by(&self, u: &DMatrix<Complex64>) -> Result<Self, OracleError> {
        Self::new(u * &self.matrix * u.adjoint())
    }

    /// Rows of `[re, im]` pairs.
    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<Vec<[f64; 2]>> = (0..self.dim())
            .map(|r| (0..self.dim()).map(|c| [self.matrix[(r, c)].re, self.matrix[(r, c)].im]).collect())
            .collect();
        serde_json::json!(rows)
    }
}

fn check_dim(rho: &DensityMatrix, q: &QuestionIndex) -> Result<(), OracleError> {
    if rho.n() != q.n() {
        return Err(OracleError::LengthMismatch { left: rho.n(), right: q.n() });
    }
    Ok(())
}

/// `tr(ρ P(q))`, the Bloch component of `q`.
pub fn expectation(rho: &DensityMatrix, q: &QuestionIndex) -> Result<f64, OracleError> {
    check_dim(rho, q)?;
    let p = cached_matrix_of(q)?;
    let m = rho.matrix();
    Ok(p
        .matrix
        .nonzeros()
        .map(|(r, c, v)| (m[(c, r)] * Complex64::new(f64::from(v.re), f64::from(v.im))).re)
        .sum())
}

/// Born rule for the `yes` answer: `tr(ρ (I + P) / 2)`, clamped to `[0, 1]`.
pub fn born_probability(rho: &DensityMatrix, q: &QuestionIndex) -> Result<f64, OracleError> {
    let y = 0.5 * (rho.trace() + expectation(rho, q)?);
    Ok(y.clamp(0.0, 1.0))
}

/// `Π ρ Π / tr(Π ρ Π)` with `Π = (I ± P) / 2`.
pub fn lueders_update(rho: &DensityMatrix, q: &QuestionIndex, answer: bool) -> Result<DensityMatrix, OracleError> {
    check_dim(rho, q)?;
    let p = cached_matrix_of(q)?.matrix.to_complex();
    let d = rho.dim();
    let sign = if answer { 1.0 } else { -1.0 };
    let projector = (DMatrix::<Complex64>::identity(d, d) + p.scale(sign)).scale(0.5);
    let unnormalized = &projector * rho.matrix() * &projector;
    let prob = unnormalized.trace().re;
    if prob <= 1e-14 {
        return Err(OracleError::ZeroProbability(prob));
    }
    DensityMatrix::new(unnormalized.unscale(prob))
}

/// `ρ = 2^-n (p I + Σ_i r_i P_i)` with `r = 2y - p`.
pub fn bloch_to_density(state: &BlochState) -> Result<DensityMatrix, OracleError> {
    let sys = state.system();
    let d = sys.hilbert_dimension();
    let mut m = DMatrix::<Complex64>::identity(d, d).scale(state.presence());
    for (q, r) in state.questions().iter().zip(state.bloch_vector()) {
        if r == 0.0 {
            continue;
        }
        for (row, col, v) in cached_matrix_of(q)?.matrix.nonzeros() {
            m[(row, col)] += Complex64::new(f64::from(v.re), f64::from(v.im)) * r;
        }
    }
    DensityMatrix::new(m.unscale(d as f64))
}

/// Inverse of [`bloch_to_density`]: `y_i = (tr(ρ P_i) + p) / 2`.
///
/// For rebit systems only the real-symmetric components survive.
pub fn density_to_bloch(rho: &DensityMatrix, sys: SystemKind) -> Result<BlochState, OracleError> {
    if rho.dim() != sys.hilbert_dimension() {
        return Err(OracleError::DimensionMismatch { expected: sys.hilbert_dimension(), got: rho.dim() });
    }
    let p = rho.trace();
    let set = enumerate_complete_set(sys);
    let r = set
        .iter()
        .map(|q| expectation(rho, q))
        .collect::<Result<Vec<_>, _>>()?;
    BlochState::from_bloch_vector(sys, r, p.clamp(0.0, 1.0))
        .map_err(|e| OracleError::InvalidState(e.to_string()))
}

//! Information-preserving time evolution of Bloch states.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::{BlochState, StateError};
use crate::oracle::{bloch_to_density, cached_matrix_of, density_to_bloch};
use crate::question::enumerate_complete_set;
use crate::system::{GbitKind, SystemKind};

const STRUCTURE_TOLERANCE: f64 = 1e-12;

/// Generator of a one-parameter evolution group.
#[derive(Debug, Clone, PartialEq)]
pub enum EvolutionGenerator {
    /// Antisymmetric `D x D` matrix acting directly on the Bloch vector; its
    /// flow stays in `SO(D)`.
    Landscape(DMatrix<f64>),
    /// Traceless Hermitian `2^n x 2^n` Hamiltonian acting by conjugation.
    Quantum(DMatrix<Complex64>),
}

impl EvolutionGenerator {
    pub fn landscape(g: DMatrix<f64>) -> Result<Self, StateError> {
        if !g.is_square() {
            return Err(StateError::NotAntisymmetric(f64::INFINITY));
        }
        let deviation = (&g + g.transpose()).amax();
        if deviation > STRUCTURE_TOLERANCE {
            return Err(StateError::NotAntisymmetric(deviation));
        }
        Ok(Self::Landscape((&g - g.transpose()).scale(0.5)))
    }

    /// The trace part of `h` only contributes a global phase and is dropped.
    pub fn quantum(h: DMatrix<Complex64>) -> Result<Self, StateError> {
        if !h.is_square() {
            return Err(StateError::NotHermitian(f64::INFINITY));
        }
        let deviation = (&h - h.adjoint()).iter().map(|z| z.norm()).fold(0.0, f64::max);
        if deviation > STRUCTURE_TOLERANCE {
            return Err(StateError::NotHermitian(deviation));
        }
        let d = h.nrows();
        let mut h = (&h + h.adjoint()).scale(0.5);
        let shift = h.trace() / Complex64::new(d as f64, 0.0);
        for i in 0..d {
            h[(i, i)] -= shift;
        }
        Ok(Self::Quantum(h))
    }
}

/// `exp(-i h t)` for Hermitian `h`, via its eigendecomposition.
pub fn unitary_from_hermitian(h: &DMatrix<Complex64>, t: f64) -> DMatrix<Complex64> {
    let sym = (h + h.adjoint()).scale(0.5);
    let eig = sym.symmetric_eigen();
    let phases = DMatrix::from_diagonal(&eig.eigenvalues.map(|l| Complex64::from_polar(1.0, -l * t)));
    &eig.eigenvectors * phases * eig.eigenvectors.adjoint()
}

/// `exp(t g)` for real antisymmetric `g`, using that `i g` is Hermitian.
pub fn rotation_from_antisymmetric(g: &DMatrix<f64>, t: f64) -> DMatrix<f64> {
    let ig = g.map(|x| Complex64::new(0.0, x));
    unitary_from_hermitian(&ig, t).map(|z| z.re)
}

/// Evolves `state` for time `dt`.
///
/// Landscape flows may rotate a Bloch vector out of the probability range for
/// `n >= 2`, since `SO(D)` is larger than the physical group; that surfaces
/// as [`StateError::ProbabilityOutOfRange`]. Rebit Hamiltonians must be
/// purely imaginary so that the evolution stays real orthogonal.
pub fn evolve(state: &BlochState, gen: &EvolutionGenerator, dt: f64) -> Result<BlochState, StateError> {
    let sys = state.system();
    match gen {
        EvolutionGenerator::Landscape(g) => {
            let d = sys.complete_set_size();
            if g.nrows() != d {
                return Err(StateError::DimensionMismatch { expected: d, got: g.nrows() });
            }
            let r = nalgebra::DVector::from_vec(state.bloch_vector());
            let rotated = rotation_from_antisymmetric(g, dt) * r;
            BlochState::from_bloch_vector(sys, rotated.iter().copied().collect(), state.presence())
        }
        EvolutionGenerator::Quantum(h) => {
            let d = sys.hilbert_dimension();
            if h.nrows() != d {
                return Err(StateError::DimensionMismatch { expected: d, got: h.nrows() });
            }
            if sys.kind == GbitKind::Rebit {
                let real_part = h.iter().map(|z| z.re.abs()).fold(0.0, f64::max);
                if real_part > STRUCTURE_TOLERANCE {
                    return Err(StateError::NotRebitGenerator(real_part));
                }
            }
            let rho = bloch_to_density(state)?;
            let evolved = rho.conjugate_by(&unitary_from_hermitian(h, dt))?;
            Ok(density_to_bloch(&evolved, sys)?)
        }
    }
}

/// Bloch-space matrix `T_ij = tr(P_i U P_j U†) / 2^n` of the conjugation by
/// `U = exp(-i h dt)`.
pub fn induced_bloch_map(sys: SystemKind, h: &DMatrix<Complex64>, dt: f64) -> Result<DMatrix<f64>, StateError> {
    let u = unitary_from_hermitian(h, dt);
    let questions = enumerate_complete_set(sys);
    let paulis = questions
        .iter()
        .map(|q| Ok(cached_matrix_of(q)?.matrix.to_complex()))
        .collect::<Result<Vec<_>, StateError>>()?;
    let conjugated: Vec<_> = paulis.iter().map(|p| &u * p * u.adjoint()).collect();
    let d = questions.len();
    let scale = sys.hilbert_dimension() as f64;
    Ok(DMatrix::from_fn(d, d, |i, j| {
        // P_i is Hermitian, so tr(P_i M) = Σ conj(P_i)_{rc} M_{rc}
        paulis[i].iter().zip(conjugated[j].iter()).map(|(a, b)| (a.conj() * b).re).sum::<f64>() / scale
    }))
}

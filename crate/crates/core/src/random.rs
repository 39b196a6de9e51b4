//! Random states and generators for property checks and simulations.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::oracle::{density_to_bloch, DensityMatrix};
use crate::question::QuestionIndex;
use crate::state::BlochState;
use crate::system::{GbitKind, SystemKind};

fn gaussian<R: Rng + ?Sized>(rng: &mut R, real_only: bool) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = if real_only { 0.0 } else { rng.sample(StandardNormal) };
    Complex64::new(re, im)
}

/// Haar-random pure state (real for rebits).
pub fn random_pure_density<R: Rng + ?Sized>(sys: SystemKind, rng: &mut R) -> DensityMatrix {
    let real = sys.kind == GbitKind::Rebit;
    let psi = DVector::from_fn(sys.hilbert_dimension(), |_, _| gaussian(rng, real));
    DensityMatrix::from_pure(&psi).expect("non-zero vector")
}

/// `G G† / tr(G G†)` with Gaussian `G`; full rank almost surely.
pub fn random_mixed_density<R: Rng + ?Sized>(sys: SystemKind, rng: &mut R) -> DensityMatrix {
    let real = sys.kind == GbitKind::Rebit;
    let d = sys.hilbert_dimension();
    let g = DMatrix::from_fn(d, d, |_, _| gaussian(rng, real));
    let m = &g * g.adjoint();
    let tr = m.trace();
    DensityMatrix::new(m / tr).expect("G G† is Hermitian")
}

pub fn random_pure_state<R: Rng + ?Sized>(sys: SystemKind, rng: &mut R) -> BlochState {
    density_to_bloch(&random_pure_density(sys, rng), sys).expect("valid state")
}

pub fn random_mixed_state<R: Rng + ?Sized>(sys: SystemKind, rng: &mut R) -> BlochState {
    density_to_bloch(&random_mixed_density(sys, rng), sys).expect("valid state")
}

/// Random traceless Hamiltonian. For rebits it is `i A` with `A` real
/// antisymmetric, so the evolution is real orthogonal.
pub fn random_hamiltonian<R: Rng + ?Sized>(sys: SystemKind, rng: &mut R) -> DMatrix<Complex64> {
    let d = sys.hilbert_dimension();
    let h = match sys.kind {
        GbitKind::Qubit => {
            let g = DMatrix::from_fn(d, d, |_, _| gaussian(rng, false));
            (&g + g.adjoint()).scale(0.5)
        }
        GbitKind::Rebit => {
            let a = random_antisymmetric(d, rng);
            a.map(|x| Complex64::new(0.0, x))
        }
    };
    let shift = h.trace() / Complex64::new(d as f64, 0.0);
    &h - DMatrix::from_diagonal_element(d, d, shift)
}

pub fn random_antisymmetric<R: Rng + ?Sized>(d: usize, rng: &mut R) -> DMatrix<f64> {
    let a = DMatrix::from_fn(d, d, |_, _| rng.sample::<f64, _>(StandardNormal));
    &a - a.transpose()
}

/// Uniformly random member of the complete set.
pub fn random_question<R: Rng + ?Sized>(sys: SystemKind, rng: &mut R) -> QuestionIndex {
    loop {
        let digits: Vec<u8> = (0..sys.n).map(|_| rng.random_range(0..4u8)).collect();
        if let Ok(q) = QuestionIndex::new(sys.kind, digits) {
            return q;
        }
    }
}

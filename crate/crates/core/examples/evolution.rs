//! Unitary evolution as a rotation of the Bloch vector.

use std::f64::consts::PI;

use gbit::random::random_hamiltonian;
use gbit::state::{evolve, induced_bloch_map, information_total, BlochState, EvolutionGenerator};
use gbit::SystemKind;
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let sys = SystemKind::qubits(1);
    let h = DMatrix::from_row_slice(2, 2, &[0.5.into(), 0.0.into(), 0.0.into(), (-0.5).into()]);
    let gen = EvolutionGenerator::quantum(h).unwrap();
    let plus_x = BlochState::new(sys, vec![1.0, 0.5, 0.5], 1.0).unwrap();
    for k in 0..=4 {
        let t = k as f64 * PI / 4.0;
        let s = evolve(&plus_x, &gen, t).unwrap();
        println!("t = {k}pi/4: y = {:.3?}  I = {:.3}", s.y(), information_total(&s));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let sys = SystemKind::qubits(2);
    let h: DMatrix<Complex64> = random_hamiltonian(sys, &mut rng);
    let t = induced_bloch_map(sys, &h, 0.8).unwrap();
    let dev = (t.transpose() * &t - DMatrix::identity(15, 15)).amax();
    println!("two qubits: induced 15x15 map, |T^T T - I| = {dev:.1e}, det = {:.6}", t.determinant());
}

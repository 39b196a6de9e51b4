//! The quadratic information measure on a few states.

use gbit::oracle::{density_to_bloch, lueders_update, DensityMatrix};
use gbit::question::QuestionIndex;
use gbit::state::{classify, convex_mix, information_total, BlochState};
use gbit::{GbitKind, SystemKind};

fn main() {
    let sys = SystemKind::qubits(2);
    let q = |s| QuestionIndex::parse(GbitKind::Qubit, s).unwrap();

    let mixed = BlochState::no_information(sys);
    let mut rho = DensityMatrix::maximally_mixed(2);
    rho = lueders_update(&rho, &q("11"), true).unwrap();
    rho = lueders_update(&rho, &q("22"), true).unwrap();
    let bell = density_to_bloch(&rho, sys).unwrap();

    let mut rho = DensityMatrix::maximally_mixed(2);
    rho = lueders_update(&rho, &q("30"), true).unwrap();
    rho = lueders_update(&rho, &q("03"), true).unwrap();
    let product = density_to_bloch(&rho, sys).unwrap();

    for (name, s) in [("no information", &mixed), ("bell", &bell), ("|z+ z+>", &product)] {
        println!("{name:>16}: I = {:.6} bits, {:?}", information_total(s), classify(s).unwrap());
    }
    let half = convex_mix(0.5, &bell, &product).unwrap();
    println!("{:>16}: I = {:.6} bits, {:?}", "50/50 mixture", information_total(&half), classify(&half).unwrap());
}

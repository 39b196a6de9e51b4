//! Single shots on a Bell pair: repeated questions repeat, complementary
//! ones scramble.

use gbit::oracle::DensityMatrix;
use gbit::question::QuestionIndex;
use gbit::sim::{run_shots, Interrogation, Preparation};
use gbit::state::information_total;
use gbit::{GbitKind, SystemKind};

fn main() {
    let sys = SystemKind::qubits(2);
    let q = |s| QuestionIndex::parse(GbitKind::Qubit, s).unwrap();
    let bell: DensityMatrix = Preparation::Bell.density(sys).unwrap();
    let script = vec![q("33"), q("30"), q("03"), q("10"), q("30")];
    let i = Interrogation::new(sys, bell, script, 99).unwrap();
    for t in run_shots(&i, 5).unwrap() {
        let line: Vec<String> = t
            .records
            .iter()
            .map(|r| format!("Q{}={} (p={:.2}, I={:.1})", r.question, if r.answer { "y" } else { "n" }, r.pre_probability, information_total(&r.post_state)))
            .collect();
        println!("shot {}: {}", t.shot, line.join("  "));
    }
}

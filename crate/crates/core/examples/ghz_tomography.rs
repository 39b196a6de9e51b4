//! Frequency tomography of the GHZ preparation.

use gbit::oracle::born_probability;
use gbit::question::{logical_closure, QuestionIndex, SignedQuestion};
use gbit::sim::{run_tomography, Preparation, TomographySchedule};
use gbit::{GbitKind, SystemKind};

fn main() {
    let sys = SystemKind::qubits(3);
    let gens: Vec<SignedQuestion> =
        ["211", "121", "112"].iter().map(|s| SignedQuestion::parse(GbitKind::Qubit, s).unwrap()).collect();
    let closure = logical_closure(&gens).unwrap();
    let names: Vec<String> = closure.iter().map(|s| s.to_string()).collect();
    println!("implied: {}", names.join(" "));

    let rho = Preparation::Ghz.density(sys).unwrap();
    let questions: Vec<QuestionIndex> = ["211", "121", "112", "222", "330", "111"]
        .iter()
        .map(|s| QuestionIndex::parse(GbitKind::Qubit, s).unwrap())
        .collect();
    let shots = 20_000;
    let report = run_tomography(sys, &rho, shots, &questions, TomographySchedule::PerQuestion, 2024).unwrap();
    print!("{}", report.to_table());
    for e in &report.estimates {
        let exact = born_probability(&rho, &e.question).unwrap();
        let z = (e.estimate - exact).abs() * (shots as f64).sqrt();
        println!("Q{}: Born {exact:.3}, |error| sqrt(n) = {z:.2}", e.question);
    }
}

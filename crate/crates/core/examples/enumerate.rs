//! Complete question sets and their sizes for qubits and rebits.

use gbit::question::enumerate_complete_set;
use gbit::SystemKind;

fn main() {
    for n in 1..=4 {
        let q = enumerate_complete_set(SystemKind::qubits(n));
        let r = enumerate_complete_set(SystemKind::rebits(n));
        println!("n={n}: {} qubit questions, {} rebit questions", q.len(), r.len());
    }

    let two_rebits = enumerate_complete_set(SystemKind::rebits(2));
    let names: Vec<String> = two_rebits.iter().map(|q| format!("Q{q}")).collect();
    println!("two rebits: {}", names.join(" "));
}

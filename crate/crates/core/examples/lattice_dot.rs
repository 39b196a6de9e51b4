//! Writes the two-qubit compatibility lattice as Graphviz DOT.
//!
//! `cargo run --example lattice_dot > qubit2.dot && dot -Tsvg qubit2.dot`

use gbit::question::build_lattice;
use gbit::SystemKind;

fn main() {
    let g = build_lattice(SystemKind::qubits(2));
    let odd = g.triangles().iter().filter(|t| t.parity.is_odd()).count();
    eprintln!("{} triangles ({odd} odd), {} edges", g.triangles().len(), g.edges().len());
    print!("{}", g.to_dot());
}

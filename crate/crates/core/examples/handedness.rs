//! Which parity patterns over a triple of gbits hang together.

use std::collections::BTreeMap;

use gbit::question::{handedness_consistency, triple_is_consistent, GbitPair, Parity};

fn main() {
    let both = [Parity::Even, Parity::Odd];
    for ab in both {
        for ac in both {
            for bc in both {
                let mark = if triple_is_consistent(ab, ac, bc) { "ok" } else { "--" };
                println!("{mark}  AB {ab:?}  AC {ac:?}  BC {bc:?}");
            }
        }
    }

    // all pairs odd: ordinary quantum theory on four qubits
    let all_odd: BTreeMap<GbitPair, Parity> = (0..4)
        .flat_map(|a| (a + 1..4).map(move |b| (GbitPair::new(a, b), Parity::Odd)))
        .collect();
    println!("four gbits, every pair odd: {}", handedness_consistency(4, &all_odd).unwrap());
}

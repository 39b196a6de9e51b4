//! Informational tangles of three-qubit states.

use gbit::oracle::{density_to_bloch, lueders_update, DensityMatrix};
use gbit::question::{enumerate_complete_set, QuestionIndex};
use gbit::random::random_pure_state;
use gbit::state::{tangles, tangles_about};
use gbit::{GbitKind, SystemKind};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let sys = SystemKind::qubits(3);
    let q = |s: &str| QuestionIndex::parse(GbitKind::Qubit, s).unwrap();

    let mut rho = DensityMatrix::maximally_mixed(3);
    for g in ["211", "121", "112"] {
        rho = lueders_update(&rho, &q(g), true).unwrap();
    }
    let ghz = density_to_bloch(&rho, sys).unwrap();
    println!("ghz: {:?}", tangles(&ghz).unwrap());

    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let s = random_pure_state(sys, &mut rng);
    for focus in 0..3 {
        let t = tangles_about(&s, focus).unwrap();
        println!(
            "random, focus {focus}: {:.4} >= {:.4} + {:.4}  (slack {:.4})",
            t.focus_rest, t.focus_first, t.focus_second, t.three_tangle
        );
    }

    // after Q110 and Q220 are answered, these questions touching C remain open
    let open: Vec<String> = enumerate_complete_set(sys)
        .iter()
        .filter(|c| c.digits()[2] != 0)
        .filter(|c| c.is_compatible(&q("110")).unwrap() && c.is_compatible(&q("220")).unwrap())
        .map(|c| c.to_string())
        .collect();
    println!("compatible with Q110 and Q220: {}", open.join(" "));
}

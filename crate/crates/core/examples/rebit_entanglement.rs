//! For two rebits, knowing the correlation-of-correlations Q33 already
//! leaves every individual question at 1/2.

use gbit::oracle::{born_probability, lueders_update, matrix_of, DensityMatrix};
use gbit::question::{enumerate_complete_set, QuestionIndex};
use gbit::{GbitKind, SystemKind};

fn main() {
    let sys = SystemKind::rebits(2);
    for q in &enumerate_complete_set(sys) {
        let p = matrix_of(q).unwrap().matrix;
        println!("Q{q}: real {} symmetric {}", p.is_real(), p.is_symmetric());
    }

    let q33 = QuestionIndex::parse(GbitKind::Rebit, "33").unwrap();
    for answer in [true, false] {
        let rho = lueders_update(&DensityMatrix::maximally_mixed(2), &q33, answer).unwrap();
        let individuals: Vec<String> = enumerate_complete_set(sys)
            .iter()
            .filter(|q| q.weight() == 1)
            .map(|q| format!("y{q}={:.2}", born_probability(&rho, q).unwrap()))
            .collect();
        println!("Q33 = {answer}: {}", individuals.join(" "));
    }
}

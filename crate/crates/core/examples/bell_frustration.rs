//! No assignment of definite values to the individual questions reproduces
//! the correlations of a Bell state.

use gbit::question::{
    frustration_check, relation_over_individuals, xnor_compose, Frustration, IndividualVariables, SignedQuestion,
};
use gbit::{GbitKind, SystemKind};

fn sq(s: &str) -> SignedQuestion {
    SignedQuestion::parse(GbitKind::Qubit, s).unwrap()
}

fn main() {
    let sys = SystemKind::qubits(2);
    let vars = IndividualVariables::new(sys);

    // Q11 = Q22 = yes fixes Q33 = no, and Q12 <-> Q21 = Q33
    println!("Q11 <-> Q22 = {}", xnor_compose(&sq("11"), &sq("22")).unwrap());
    println!("Q12 <-> Q21 = {}", xnor_compose(&sq("12"), &sq("21")).unwrap());

    for last in [false, true] {
        let constraints = vec![
            relation_over_individuals(&vars, &[sq("11")], true).unwrap(),
            relation_over_individuals(&vars, &[sq("22")], true).unwrap(),
            relation_over_individuals(&vars, &[sq("12"), sq("21")], last).unwrap(),
        ];
        match frustration_check(&constraints, vars.count()).unwrap() {
            Frustration::Satisfiable { witness } => println!("Q12<->Q21 = {last}: satisfiable, e.g. {witness:?}"),
            Frustration::Frustrated { inconsistent } => {
                println!("Q12<->Q21 = {last}: frustrated, constraints {inconsistent:?} clash")
            }
        }
    }
}

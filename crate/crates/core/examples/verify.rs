//! Oracle cross-checks and statistical axiom checks for a small system.

use gbit::sim::validate_axioms;
use gbit::verify::run_verification;
use gbit::SystemKind;

fn main() {
    let sys = SystemKind::rebits(3);
    let report = run_verification(sys, 7).unwrap();
    print!("{}", report.to_table());
    let axioms = validate_axioms(sys, 5_000, 7).unwrap();
    print!("{}", axioms.to_table());
    let ok = report.all_passed() && axioms.all_passed();
    println!("{}", if ok { "all checks pass" } else { "some checks FAILED" });
    std::process::exit(if ok { 0 } else { 1 });
}

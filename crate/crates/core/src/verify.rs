//! Cross-checks of the symbolic rules against the matrix oracle.

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::oracle::{
    bloch_to_density, born_probability, cached_matrix_of, commutes, density_to_bloch, lueders_update, max_gbits,
    product, ExactMatrix, OracleError,
};
use crate::question::{build_lattice, enumerate_complete_set, xnor_compose, Composition, QuestionIndex, Sign};
use crate::random::{random_hamiltonian, random_mixed_density, random_mixed_state, random_pure_state};
use crate::state::{evolve, induced_bloch_map, information_total, EvolutionGenerator};
use crate::system::{GbitKind, SystemKind};

/// Pairs are checked exhaustively up to this many gbits and sampled above it.
pub const EXHAUSTIVE_MAX_GBITS: usize = 3;
const SAMPLED_PAIRS: usize = 10_000;
/// Checks on floating-point density matrices run up to this many gbits.
pub const DENSE_STATE_MAX_GBITS: usize = 5;
/// Operator products are identified by brute-force projection, which costs
/// `16^n`; above five gbits only this many products are checked.
const LARGE_PRODUCT_CASES: usize = 200;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub cases: usize,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub sys: SystemKind,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_table(&self) -> String {
        let mut out = format!("{:<40} {:>6} {:>9}  {}\n", "check", "result", "cases", "detail");
        for c in &self.checks {
            out += &format!(
                "{:<40} {:>6} {:>9}  {}\n",
                c.name,
                if c.passed { "pass" } else { "FAIL" },
                c.cases,
                c.detail
            );
        }
        out
    }
}

type Outcome = Result<(bool, usize, String), String>;

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn pairs(questions: &[QuestionIndex], n: usize, rng: &mut ChaCha8Rng) -> Vec<(QuestionIndex, QuestionIndex)> {
    if n <= EXHAUSTIVE_MAX_GBITS {
        questions.iter().flat_map(|a| questions.iter().map(move |b| (a.clone(), b.clone()))).collect()
    } else {
        (0..SAMPLED_PAIRS)
            .map(|_| (questions.choose(rng).unwrap().clone(), questions.choose(rng).unwrap().clone()))
            .collect()
    }
}

fn count_check(sys: SystemKind, questions: &[QuestionIndex]) -> Outcome {
    let n = sys.n as u32;
    let expected = match sys.kind {
        GbitKind::Qubit => 4usize.pow(n) - 1,
        GbitKind::Rebit => 2usize.pow(n - 1) * (2usize.pow(n) + 1) - 1,
    };
    Ok((questions.len() == expected, 1, format!("{} questions, closed form {expected}", questions.len())))
}

fn compatibility_check(pairs: &[(QuestionIndex, QuestionIndex)]) -> Outcome {
    let mut bad = Vec::new();
    for (a, b) in pairs {
        if a.is_compatible(b).map_err(err)? != commutes(a, b).map_err(err)? {
            bad.push(format!("{a}/{b}"));
        }
    }
    Ok((bad.is_empty(), pairs.len(), mismatch_detail(&bad)))
}

fn mismatch_detail(bad: &[String]) -> String {
    match bad.first() {
        None => "no mismatches".into(),
        Some(first) => format!("{} mismatches, first {first}", bad.len()),
    }
}

/// Pairs whose composition is checked against the exact operator product.
fn composition_check(pairs: &[(QuestionIndex, QuestionIndex)], max_cases: usize) -> Outcome {
    let mut bad = Vec::new();
    let mut cases = 0;
    for (a, b) in pairs {
        if cases == max_cases {
            break;
        }
        if !a.is_compatible(b).map_err(err)? {
            continue;
        }
        cases += 1;
        let symbolic = xnor_compose(&a.clone().positive(), &b.clone().positive()).map_err(err)?;
        let exact = product(a, b).map_err(err)?;
        let sign = match exact.phase {
            0 => Sign::Plus,
            2 => Sign::Minus,
            _ => {
                bad.push(format!("{a}/{b}"));
                continue;
            }
        };
        let expected = match exact.index {
            None if sign == Sign::Plus => Composition::AlwaysTrue,
            None => Composition::AlwaysFalse,
            Some(q) => Composition::Question(if sign == Sign::Plus { q.positive() } else { q.negative() }),
        };
        if symbolic != expected {
            bad.push(format!("{a}/{b}"));
        }
    }
    Ok((bad.is_empty(), cases, mismatch_detail(&bad)))
}

fn associativity_check(questions: &[QuestionIndex], rng: &mut ChaCha8Rng) -> Outcome {
    let mut cases = 0;
    let mut bad = Vec::new();
    for _ in 0..20 * SAMPLED_PAIRS {
        if cases == 2000 {
            break;
        }
        let t: Vec<&QuestionIndex> = (0..3).map(|_| questions.choose(rng).unwrap()).collect();
        let compatible =
            t[0].is_compatible(t[1]).map_err(err)? && t[0].is_compatible(t[2]).map_err(err)? && t[1].is_compatible(t[2]).map_err(err)?;
        if !compatible {
            continue;
        }
        cases += 1;
        let [a, b, c] = [0, 1, 2].map(|k| Composition::Question(t[k].clone().positive()));
        let left = a.compose(&b).and_then(|ab| ab.compose(&c)).map_err(err)?;
        let right = b.compose(&c).and_then(|bc| a.compose(&bc)).map_err(err)?;
        if left != right {
            bad.push(format!("{}/{}/{}", t[0], t[1], t[2]));
        }
    }
    Ok((bad.is_empty() && cases > 0, cases, mismatch_detail(&bad)))
}

fn operator_check(sys: SystemKind, questions: &[QuestionIndex]) -> Outcome {
    let identity = ExactMatrix::identity(sys.hilbert_dimension());
    let mut bad = Vec::new();
    for q in questions {
        let p = &cached_matrix_of(q).map_err(err)?.matrix;
        let structured = match sys.kind {
            GbitKind::Qubit => p.is_hermitian(),
            GbitKind::Rebit => p.is_real() && p.is_symmetric(),
        };
        if !structured || p * p != identity {
            bad.push(q.to_string());
        }
    }
    Ok((bad.is_empty(), questions.len(), mismatch_detail(&bad)))
}

fn round_trip_check(sys: SystemKind, rng: &mut ChaCha8Rng) -> Outcome {
    let trials = 20;
    let mut worst: f64 = 0.0;
    for _ in 0..trials {
        let state = random_mixed_state(sys, rng);
        let rho = bloch_to_density(&state).map_err(err)?;
        let back = density_to_bloch(&rho, sys).map_err(err)?;
        for (k, q) in state.questions().iter().enumerate() {
            worst = worst
                .max((back.y()[k] - state.y()[k]).abs())
                .max((born_probability(&rho, q).map_err(err)? - state.y()[k]).abs());
        }
    }
    Ok((worst < 1e-10, trials, format!("largest deviation {worst:.1e}")))
}

fn lattice_check(sys: SystemKind) -> Outcome {
    let (triangles, edges, degrees) = match sys.kind {
        GbitKind::Qubit => (15, 45, (3, 6, 8)),
        GbitKind::Rebit => (6, 18, (2, 4, 4)),
    };
    let g = build_lattice(sys);
    let degrees_ok = (0..g.vertices().len())
        .all(|v| (g.triangle_degree(v), g.compatible_degree(v), g.complementary_degree(v)) == degrees);
    Ok((
        g.triangles().len() == triangles && g.edges().len() == edges && degrees_ok,
        g.vertices().len(),
        format!("{} triangles, {} edges", g.triangles().len(), g.edges().len()),
    ))
}

fn lueders_check(sys: SystemKind, questions: &[QuestionIndex], rng: &mut ChaCha8Rng) -> Outcome {
    let trials = 50;
    let mut worst: f64 = 0.0;
    for _ in 0..trials {
        let rho = random_mixed_density(sys, rng);
        let q = questions.choose(rng).unwrap();
        let answer = rng.random::<bool>();
        let after = lueders_update(&rho, q, answer).map_err(err)?;
        let repeat = born_probability(&after, q).map_err(err)?;
        worst = worst.max((repeat - if answer { 1.0 } else { 0.0 }).abs());
        if let Some(other) = questions.iter().find(|o| *o != q && o.is_compatible(q).unwrap_or(false)) {
            let p = born_probability(&rho, q).map_err(err)?;
            let mut averaged = 0.0;
            for (branch, weight) in [(true, p), (false, 1.0 - p)] {
                if weight > 1e-12 {
                    averaged += weight * born_probability(&lueders_update(&rho, q, branch).map_err(err)?, other).map_err(err)?;
                }
            }
            worst = worst.max((averaged - born_probability(&rho, other).map_err(err)?).abs());
        }
    }
    Ok((worst < 1e-10, trials, format!("repeat and compatible-marginal deviation {worst:.1e}")))
}

fn conservation_check(sys: SystemKind, rng: &mut ChaCha8Rng) -> Outcome {
    let trials = 20;
    let mut worst: f64 = 0.0;
    for _ in 0..trials {
        let state = random_pure_state(sys, rng);
        let gen = EvolutionGenerator::quantum(random_hamiltonian(sys, rng)).map_err(err)?;
        let after = evolve(&state, &gen, rng.random_range(-3.0..3.0)).map_err(err)?;
        worst = worst.max((information_total(&after) - information_total(&state)).abs());
    }
    Ok((worst < 1e-9, trials, format!("largest |I(t) - I(0)| {worst:.1e}")))
}

fn orthogonality_check(sys: SystemKind, rng: &mut ChaCha8Rng) -> Outcome {
    let t = induced_bloch_map(sys, &random_hamiltonian(sys, rng), rng.random_range(0.1..2.0)).map_err(err)?;
    let d = t.nrows();
    let deviation = (t.transpose() * &t - nalgebra::DMatrix::<f64>::identity(d, d)).amax();
    let det = if d <= 64 { t.determinant() } else { f64::NAN };
    let det_ok = det.is_nan() || (det - 1.0).abs() < 1e-6;
    Ok((deviation < 1e-8 && det_ok, 1, format!("|TᵀT - I| = {deviation:.1e}, det {det:.6}")))
}

/// Runs every check for `sys`. Fails only if the system exceeds the oracle cap.
pub fn run_verification(sys: SystemKind, seed: u64) -> Result<VerifyReport, OracleError> {
    if sys.n > max_gbits() {
        return Err(OracleError::TooLarge { n: sys.n, cap: max_gbits() });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let questions: Vec<QuestionIndex> = enumerate_complete_set(sys).iter().cloned().collect();
    let pairs = pairs(&questions, sys.n, &mut rng);
    let mut checks = Vec::new();
    let mut record = |name: &'static str, outcome: Outcome| {
        checks.push(match outcome {
            Ok((passed, cases, detail)) => CheckResult { name, passed, cases, detail },
            Err(e) => CheckResult { name, passed: false, cases: 0, detail: format!("error: {e}") },
        })
    };
    record("complete-set size", count_check(sys, &questions));
    record("compatible iff commuting", compatibility_check(&pairs));
    record("composition matches operator product", composition_check(&pairs, if sys.n <= 5 { usize::MAX } else { LARGE_PRODUCT_CASES }));
    record("composition is associative", associativity_check(&questions, &mut rng));
    record("operators are structured involutions", operator_check(sys, &questions));
    if sys.n == 2 {
        record("two-gbit lattice degrees", lattice_check(sys));
    }
    if sys.n <= DENSE_STATE_MAX_GBITS {
        record("bloch round trip and Born rule", round_trip_check(sys, &mut rng));
        record("lueders repeatability and marginals", lueders_check(sys, &questions, &mut rng));
        record("information conserved by evolution", conservation_check(sys, &mut rng));
        record("induced bloch map is a rotation", orthogonality_check(sys, &mut rng));
    }
    Ok(VerifyReport { sys, seed, checks })
}

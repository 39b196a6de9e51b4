//! Acceptance criteria, one line each. Runs without the libtest harness so
//! the pass/fail lines are always printed.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use gbit::oracle::{
    bloch_to_density, born_probability, commutes, density_to_bloch, lueders_update, matrix_of, product_sign,
    DensityMatrix,
};
use gbit::question::{
    build_lattice, enumerate_complete_set, frustration_check, handedness_consistency, logical_closure,
    relation_over_individuals, triple_is_consistent, xnor_compose, Composition, Frustration, GbitPair,
    IndividualVariables, Parity, QuestionIndex, SignedQuestion, XorConstraint,
};
use gbit::random::{
    random_antisymmetric, random_hamiltonian, random_mixed_state, random_pure_density, random_pure_state,
};
use gbit::sim::{run_tomography, validate_axioms, Preparation, TomographySchedule};
use gbit::state::{
    classify, convex_mix, evolve, information_total, tangles, tangles_about, BlochState, EvolutionGenerator,
    InfoClassification,
};
use gbit::{GbitKind, SystemKind};
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn q(kind: GbitKind, s: &str) -> QuestionIndex {
    QuestionIndex::parse(kind, s).unwrap()
}

fn sq(kind: GbitKind, s: &str) -> SignedQuestion {
    SignedQuestion::parse(kind, s).unwrap()
}

fn both_kinds(n: usize) -> [SystemKind; 2] {
    [SystemKind::qubits(n), SystemKind::rebits(n)]
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let took = start.elapsed();
    ensure(took < limit, format!("took {took:?}, limit {limit:?}"))?;
    Ok(took)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let expected_qubit = [3, 15, 63, 255];
    let expected_rebit = [2, 9, 35, 135];
    for n in 1..=4usize {
        let qubit = enumerate_complete_set(SystemKind::qubits(n)).len();
        let rebit = enumerate_complete_set(SystemKind::rebits(n)).len();
        // independent count over all digit tuples
        let tuples = (0..4usize.pow(n as u32)).map(|code| (0..n).map(|a| code / 4usize.pow(a as u32) % 4).collect::<Vec<_>>());
        let brute_rebit =
            tuples.filter(|t| t.iter().any(|&d| d != 0) && t.iter().filter(|&&d| d == 3).count() % 2 == 0).count();
        let closed_qubit = 4usize.pow(n as u32) - 1;
        let closed_rebit = 2usize.pow(n as u32 - 1) * (2usize.pow(n as u32) + 1) - 1;
        ensure(
            qubit == expected_qubit[n - 1] && qubit == closed_qubit,
            format!("qubit n={n}: {qubit} vs {}", expected_qubit[n - 1]),
        )?;
        ensure(
            rebit == expected_rebit[n - 1] && rebit == closed_rebit && rebit == brute_rebit,
            format!("rebit n={n}: {rebit} vs {}", expected_rebit[n - 1]),
        )?;
    }
    let took = within(start, Duration::from_secs(1))?;
    Ok(format!("qubit 3/15/63/255, rebit 2/9/35/135 in {took:.1?}"))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut pairs = 0;
    for sys in both_kinds(3) {
        let set = enumerate_complete_set(sys);
        for a in &set {
            for b in &set {
                let compatible = a.is_compatible(b).map_err(|e| e.to_string())?;
                ensure(compatible == commutes(a, b).map_err(|e| e.to_string())?, format!("{a} {b}"))?;
                pairs += 1;
            }
        }
    }
    let took = within(start, Duration::from_secs(30))?;
    Ok(format!("{pairs} ordered pairs at n=3 agree in {took:.1?}"))
}

fn criterion_3() -> Outcome {
    let mut checked = 0;
    for n in 1..=3 {
        for sys in both_kinds(n) {
            let set = enumerate_complete_set(sys);
            for a in &set {
                for b in &set {
                    if a == b || !a.is_compatible(b).unwrap() {
                        continue;
                    }
                    let c = xnor_compose(&a.clone().positive(), &b.clone().positive()).map_err(|e| e.to_string())?;
                    let c = c.question().ok_or(format!("{a} {b} composed to a constant"))?;
                    let sign = product_sign(a, b).map_err(|e| e.to_string())?;
                    ensure(c.sign == sign, format!("{a} ∘ {b}: symbolic {} vs oracle {sign:?}", c.sign.value()))?;
                    // and against the reference matrices
                    let prod = common::pauli(sys.kind, a.digits()) * common::pauli(sys.kind, b.digits());
                    let third = common::pauli(sys.kind, c.index.digits()).scale(c.sign.value() as f64);
                    ensure(common::close(&prod, &third, 1e-12), format!("{a} ∘ {b} reference"))?;
                    checked += 1;
                }
            }
        }
    }
    let k = GbitKind::Qubit;
    let bell = xnor_compose(&sq(k, "11"), &sq(k, "22")).unwrap();
    let swapped = xnor_compose(&sq(k, "12"), &sq(k, "21")).unwrap();
    ensure(bell == Composition::Question(sq(k, "!33")), format!("Q11∘Q22 = {bell}"))?;
    ensure(swapped == Composition::Question(sq(k, "33")), format!("Q12∘Q21 = {swapped}"))?;
    Ok(format!("{checked} compatible pairs, Q11∘Q22 = {bell}, Q12∘Q21 = {swapped}"))
}

fn criterion_4() -> Outcome {
    let mut parts = Vec::new();
    for (sys, triangles, edges, degrees) in
        [(SystemKind::qubits(2), 15, 45, (3, 6, 8)), (SystemKind::rebits(2), 6, 18, (2, 4, 4))]
    {
        let g = build_lattice(sys);
        ensure(g.triangles().len() == triangles, format!("{sys}: {} triangles", g.triangles().len()))?;
        ensure(g.edges().len() == edges, format!("{sys}: {} edges", g.edges().len()))?;
        for v in 0..g.vertices().len() {
            let d = (g.triangle_degree(v), g.compatible_degree(v), g.complementary_degree(v));
            ensure(d == degrees, format!("{sys}: vertex {} has {d:?}", g.vertices()[v]))?;
        }
        parts.push(format!("{sys}: {triangles} triangles, {edges} edges, degrees {degrees:?}"));
    }
    Ok(parts.join("; "))
}

fn brute_satisfiable(constraints: &[XorConstraint], num_vars: usize) -> bool {
    (0u32..1 << num_vars).any(|bits| {
        let a: Vec<bool> = (0..num_vars).map(|i| bits >> i & 1 == 1).collect();
        constraints.iter().all(|c| c.is_satisfied_by(&a))
    })
}

fn criterion_5() -> Outcome {
    let k = GbitKind::Qubit;
    let vars = IndividualVariables::new(SystemKind::qubits(2));
    let bell = |last: bool| {
        vec![
            relation_over_individuals(&vars, &[sq(k, "11")], true).unwrap(),
            relation_over_individuals(&vars, &[sq(k, "22")], true).unwrap(),
            relation_over_individuals(&vars, &[sq(k, "12"), sq(k, "21")], last).unwrap(),
        ]
    };
    let frustrated = frustration_check(&bell(false), vars.count()).unwrap();
    ensure(matches!(frustrated, Frustration::Frustrated { .. }), "Bell instance is not frustrated")?;
    ensure(!brute_satisfiable(&bell(false), vars.count()), "brute force satisfies the Bell instance")?;
    let flipped = frustration_check(&bell(true), vars.count()).unwrap();
    ensure(flipped.is_satisfiable(), "flipped instance is frustrated")?;

    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut instances = 0;
    let mut frustrated_count = 0;
    for num_vars in 1..=12usize {
        for _ in 0..300 {
            let constraints: Vec<XorConstraint> = (0..rng.random_range(1..=2 * num_vars))
                .map(|_| {
                    let vars: Vec<usize> = (0..rng.random_range(1..=num_vars.min(4))).map(|_| rng.random_range(0..num_vars)).collect();
                    XorConstraint::xor(vars, rng.random())
                })
                .collect();
            let solver = frustration_check(&constraints, num_vars).unwrap();
            ensure(solver.is_satisfiable() == brute_satisfiable(&constraints, num_vars), format!("{constraints:?}"))?;
            if let Frustration::Satisfiable { witness } = &solver {
                ensure(constraints.iter().all(|c| c.is_satisfied_by(witness)), "witness violates a constraint")?;
            } else {
                frustrated_count += 1;
            }
            instances += 1;
        }
    }
    Ok(format!(
        "Bell instance frustrated, flipped satisfiable; solver = brute force on {instances} random instances ({frustrated_count} frustrated), 1..12 vars"
    ))
}

fn criterion_6() -> Outcome {
    let both = [Parity::Even, Parity::Odd];
    let mut consistent = BTreeSet::new();
    for ab in both {
        for ac in both {
            for bc in both {
                let map: BTreeMap<GbitPair, Parity> =
                    [(GbitPair::new(0, 1), ab), (GbitPair::new(0, 2), ac), (GbitPair::new(1, 2), bc)].into();
                let by_map = handedness_consistency(3, &map).unwrap();
                ensure(by_map == triple_is_consistent(ab, ac, bc), "triple check disagrees with map check")?;
                if by_map {
                    consistent.insert([ab, ac, bc].map(Parity::is_odd));
                }
            }
        }
    }
    // independent route: flip the orientation of Y on any subset of gbits and
    // read each pair's parity off the sign of XX·YY relative to ZZ
    let mut realizable = BTreeSet::new();
    for flips in 0..8u8 {
        let y = |g: u8| common::sigma('Y').scale(if flips >> g & 1 == 1 { -1.0 } else { 1.0 });
        let parity = |a: u8, b: u8| {
            let xx = common::sigma('X').kronecker(&common::sigma('X'));
            let yy = y(a).kronecker(&y(b));
            let zz = common::sigma('Z').kronecker(&common::sigma('Z'));
            common::close(&(xx * yy), &(-zz), 1e-12)
        };
        realizable.insert([parity(0, 1), parity(0, 2), parity(1, 2)]);
    }
    ensure(consistent.len() == 4, format!("{} consistent assignments", consistent.len()))?;
    ensure(consistent == realizable, "consistent assignments differ from the realizable ones")?;
    Ok("4 of 8 parity assignments consistent, matching the orientation flips".into())
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 1..=3 {
        for sys in both_kinds(n) {
            let mixed = BlochState::no_information(sys);
            ensure(information_total(&mixed) == 0.0, format!("{sys}: I(mixed) != 0"))?;
            ensure(classify(&mixed).unwrap() == InfoClassification::TotallyMixed, "mixed class")?;
            for _ in 0..100 {
                let rho = random_pure_density(sys, &mut rng);
                let s = density_to_bloch(&rho, sys).unwrap();
                let info = information_total(&s);
                ensure((info - sys.max_information()).abs() <= 1e-9, format!("{sys}: pure I = {info}"))?;
                let purity = rho.purity();
                ensure(
                    (classify(&s).unwrap() == InfoClassification::Pure) == ((purity - 1.0).abs() <= 1e-9),
                    format!("{sys}: purity {purity}"),
                )?;
            }
        }
    }
    let sys = SystemKind::qubits(2);
    let bell = density_to_bloch(&Preparation::Bell.density(sys).unwrap(), sys).unwrap();
    let info = information_total(&bell);
    ensure((info - 3.0).abs() <= 1e-12, format!("Bell I = {info}"))?;
    Ok(format!("I(mixed)=0, I(pure)=2^n-1 on 600 states, Bell I = {info}"))
}

fn scaled_to_unit_ball(s: &BlochState) -> BlochState {
    let r = s.bloch_vector();
    let norm = r.iter().map(|x| x * x).sum::<f64>().sqrt();
    let scale = if norm > 1.0 { 1.0 / norm } else { 1.0 };
    BlochState::from_bloch_vector(s.system(), r.iter().map(|x| x * scale).collect(), 1.0).unwrap()
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut worst: f64 = 0.0;
    let mut worst_group: f64 = 0.0;
    for n in 1..=3 {
        for sys in both_kinds(n) {
            for variant in 0..2 {
                for _ in 0..100 {
                    // a Bloch vector of length <= 1 stays inside [0, 1] under any rotation
                    let (state, gen) = if variant == 0 {
                        let g = random_antisymmetric(sys.complete_set_size(), &mut rng);
                        (scaled_to_unit_ball(&random_mixed_state(sys, &mut rng)), EvolutionGenerator::landscape(g).unwrap())
                    } else {
                        let h = random_hamiltonian(sys, &mut rng);
                        (random_mixed_state(sys, &mut rng), EvolutionGenerator::quantum(h).unwrap())
                    };
                    let (t1, t2) = (rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0));
                    let after = evolve(&state, &gen, t1).map_err(|e| e.to_string())?;
                    worst = worst.max((information_total(&after) - information_total(&state)).abs());
                    let stepwise = evolve(&after, &gen, t2).map_err(|e| e.to_string())?;
                    let direct = evolve(&state, &gen, t1 + t2).map_err(|e| e.to_string())?;
                    for (a, b) in stepwise.y().iter().zip(direct.y()) {
                        worst_group = worst_group.max((a - b).abs());
                    }
                }
            }
        }
    }
    ensure(worst < 1e-9, format!("|I(t) - I(0)| = {worst:e}"))?;
    ensure(worst_group < 1e-9, format!("group law deviation {worst_group:e}"))?;
    Ok(format!("1200 evolutions, max |dI| = {worst:.1e}, group law deviation {worst_group:.1e}"))
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut mixes = 0;
    for n in 1..=3 {
        for sys in both_kinds(n) {
            for _ in 0..50 {
                let a = random_pure_state(sys, &mut rng);
                let b = if rng.random() { random_pure_state(sys, &mut rng) } else { random_mixed_state(sys, &mut rng) };
                let lambda = rng.random_range(0.001..0.999);
                let m = convex_mix(lambda, &a, &b).unwrap();
                let (im, ia, ib) = (information_total(&m), information_total(&a), information_total(&b));
                ensure(im < ia.max(ib), format!("{sys}: I(mix) = {im} vs {ia}, {ib}"))?;
                mixes += 1;

                let s = random_mixed_state(sys, &mut rng);
                let lambda = rng.random_range(0.0..1.0);
                let r: Vec<f64> = s.bloch_vector().iter().map(|x| lambda * x).collect();
                let scaled = BlochState::from_bloch_vector(sys, r, 1.0).unwrap();
                let diff = (information_total(&scaled) - lambda * lambda * information_total(&s)).abs();
                ensure(diff <= 1e-12, format!("{sys}: homogeneity off by {diff:e}"))?;
            }
        }
    }
    Ok(format!("{mixes} strict mixtures, I(λr) = λ²I(r) to 1e-12"))
}

fn criterion_10() -> Outcome {
    let k = GbitKind::Qubit;
    let sys = SystemKind::qubits(3);
    let (ab1, ab2) = (q(k, "110"), q(k, "220"));
    let found: BTreeSet<String> = enumerate_complete_set(sys)
        .iter()
        .filter(|c| c.digits()[2] != 0)
        .filter(|c| commutes(c, &ab1).unwrap() && commutes(c, &ab2).unwrap())
        .map(|c| c.to_string())
        .collect();
    let symbolic: BTreeSet<String> = enumerate_complete_set(sys)
        .iter()
        .filter(|c| c.digits()[2] != 0)
        .filter(|c| c.is_compatible(&ab1).unwrap() && c.is_compatible(&ab2).unwrap())
        .map(|c| c.to_string())
        .collect();
    ensure(found == symbolic, "symbolic and oracle compatibility disagree")?;

    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..100 {
        let s = random_mixed_state(sys, &mut rng);
        for focus in 0..3 {
            let t = tangles_about(&s, focus).unwrap();
            ensure(t.focus_rest >= t.focus_first + t.focus_second, "τ̃ inequality violated")?;
            let slack = t.focus_rest - t.focus_first - t.focus_second;
            ensure((slack - t.three_tangle).abs() < 1e-12 && t.three_tangle >= 0.0, "slack is not Σα_ijk")?;
        }
    }
    let t = tangles(&density_to_bloch(&Preparation::Ghz.density(sys).unwrap(), sys).unwrap()).unwrap();
    ensure(t.three_tangle > 0.0, "GHZ three-tangle vanishes")?;

    // individuals of C, Q11k and Q22k (correlations of the answered pair with C), and Q33k
    let from_lemmas: BTreeSet<String> =
        ["00", "11", "22", "33"].iter().flat_map(|ab| (1..=3).map(move |k| format!("{ab}{k}"))).collect();
    ensure(found == from_lemmas, format!("compatible set {found:?} is not {{00k, 11k, 22k, 33k}}"))?;

    let stated: BTreeSet<String> = ["001", "002", "003", "331", "332", "333"].map(String::from).into();
    let found_list = found.iter().cloned().collect::<Vec<_>>().join(" ");
    ensure(
        found == stated,
        format!(
            "τ̃ inequality holds on 100 states, but the questions touching C compatible with Q110 and Q220 are \
             {{{found_list}}}, not {{00k}} ∪ {{33k}}; Q11k and Q22k also commute with both (the set equals {{00k, 11k, 22k, 33k}})"
        ),
    )?;
    Ok("compatible set is {00k} ∪ {33k}; τ̃ inequality holds".into())
}

fn criterion_11() -> Outcome {
    let start = Instant::now();
    let k = GbitKind::Qubit;
    let sys = SystemKind::qubits(3);
    let gens = [q(k, "211"), q(k, "121"), q(k, "112")];
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i + 1..] {
            ensure(a.is_compatible(b).unwrap() && commutes(a, b).unwrap(), format!("{a} {b} complementary"))?;
        }
    }
    // no generator is implied by the other two
    for (i, g) in gens.iter().enumerate() {
        let others: Vec<&QuestionIndex> = gens.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, o)| o).collect();
        let implied = xnor_compose(&others[0].clone().positive(), &others[1].clone().positive()).unwrap();
        ensure(implied.question().is_none_or(|s| &s.index != g), format!("{g} is implied"))?;
    }
    let closure = logical_closure(&gens.iter().cloned().map(QuestionIndex::positive).collect::<Vec<_>>()).unwrap();
    let indices: BTreeSet<String> = closure.iter().map(|s| s.index.to_string()).collect();
    ensure(closure.len() == 7, format!("closure has {} members", closure.len()))?;
    for bipartite in ["330", "303", "033"] {
        ensure(indices.contains(bipartite), format!("closure lacks {bipartite}"))?;
    }

    // oracle Born values from a reference GHZ state built with nalgebra
    let ops: Vec<DMatrix<Complex64>> = ["211", "121", "112"].iter().map(|s| common::pauli_str(k, s)).collect();
    let reference = common::common_eigenstate(8, &ops);
    let rho = Preparation::Ghz.density(sys).unwrap();
    ensure(common::close(rho.matrix(), &reference, 1e-10), "GHZ preset differs from the reference state")?;

    let shots = 100_000u64;
    let tested: Vec<QuestionIndex> = ["211", "121", "112", "222", "330", "111"].iter().map(|s| q(k, s)).collect();
    let report = run_tomography(sys, &rho, shots, &tested, TomographySchedule::PerQuestion, 11).unwrap();
    let bound = 5.0 / (shots as f64).sqrt();
    for e in &report.estimates {
        let truth = common::born(&reference, &common::pauli(k, e.question.digits()));
        ensure((e.estimate - truth).abs() <= bound, format!("{}: {} vs {truth}", e.question, e.estimate))?;
    }
    let took = within(start, Duration::from_secs(60))?;
    let names: Vec<String> = closure.iter().map(|s| s.to_string()).collect();
    Ok(format!("closure {{{}}}, tomography at 1e5 shots within 5/√n in {took:.1?}", names.join(" ")))
}

fn criterion_12() -> Outcome {
    let sys = SystemKind::qubits(2);
    let a = validate_axioms(sys, 10_000, 12).map_err(|e| e.to_string())?;
    let b = validate_axioms(sys, 10_000, 12).map_err(|e| e.to_string())?;
    ensure(a == b, "reports differ under a fixed seed")?;
    for name in ["repeatability", "compatible-independent invariance"] {
        let c = a.check(name).ok_or(format!("missing check {name}"))?;
        ensure(c.passed, format!("{name}: observed {} expected {} bound {}", c.observed, c.expected, c.bound))?;
    }
    ensure(a.all_passed(), a.to_table())?;
    let inv = a.check("compatible-independent invariance").unwrap();
    Ok(format!(
        "all {} checks pass at 1e4 trials, invariance |Δ| = {:.4} <= {:.4}, reproducible",
        a.checks.len(),
        (inv.observed - inv.expected).abs(),
        inv.bound
    ))
}

fn criterion_13() -> Outcome {
    let mut operators = 0;
    for n in 1..=3 {
        for question in &enumerate_complete_set(SystemKind::rebits(n)) {
            let m = matrix_of(question).unwrap().matrix;
            ensure(m.is_real() && m.is_symmetric(), format!("{question} is not real symmetric"))?;
            operators += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut closures = 0;
    for n in 2..=4 {
        let set = enumerate_complete_set(SystemKind::rebits(n)).members().to_vec();
        while closures < 300 * (n - 1) {
            let gens: Vec<QuestionIndex> = (0..rng.random_range(1..=3)).map(|_| set[rng.random_range(0..set.len())].clone()).collect();
            if !gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_compatible(b).unwrap())) {
                continue;
            }
            let signed: Vec<SignedQuestion> =
                gens.into_iter().map(|g| if rng.random() { g.positive() } else { g.negative() }).collect();
            if let Ok(closure) = logical_closure(&signed) {
                for s in closure {
                    ensure(s.index.digits().iter().filter(|&&d| d == 3).count() % 2 == 0, format!("{s} has odd 3s"))?;
                }
                closures += 1;
            }
        }
    }
    let k = GbitKind::Rebit;
    let sys = SystemKind::rebits(2);
    let q33 = q(k, "33");
    for answer in [true, false] {
        let rho = lueders_update(&DensityMatrix::maximally_mixed(2), &q33, answer).unwrap();
        let yy = common::pauli_str(k, "33").scale(if answer { 1.0 } else { -1.0 });
        let reference = (DMatrix::<Complex64>::identity(4, 4) + yy).scale(0.25);
        ensure(common::close(rho.matrix(), &reference, 1e-12), "Q33 state differs from (I ± YY)/4")?;
        let state = density_to_bloch(&rho, sys).unwrap();
        for individual in enumerate_complete_set(sys).iter().filter(|q| q.weight() == 1) {
            let y = born_probability(&rho, individual).unwrap();
            let y_ref = common::born(&reference, &common::pauli(k, individual.digits()));
            ensure((y - 0.5).abs() < 1e-12 && (y_ref - 0.5).abs() < 1e-12, format!("y{individual} = {y}"))?;
            ensure(state.probability_of(individual) == Some(y), "Bloch state disagrees")?;
        }
        let back = bloch_to_density(&state).unwrap();
        ensure(common::close(back.matrix(), &reference, 1e-12), "round trip")?;
    }
    Ok(format!("{operators} rebit operators real symmetric, {closures} closures keep even 3s, Q33 known ⇒ individuals at 1/2"))
}

fn main() {
    let criteria: [Criterion; 13] = [
        ("counting", criterion_1),
        ("compatibility equals commutation", criterion_2),
        ("composition parity", criterion_3),
        ("lattice degrees", criterion_4),
        ("frustration", criterion_5),
        ("handedness", criterion_6),
        ("information measure", criterion_7),
        ("conservation", criterion_8),
        ("mixing and homogeneity", criterion_9),
        ("monogamy", criterion_10),
        ("ghz", criterion_11),
        ("axiom validation", criterion_12),
        ("rebit structure", criterion_13),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or(p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}

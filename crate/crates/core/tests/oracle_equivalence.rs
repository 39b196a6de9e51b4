mod common;

use gbit::oracle::{commutes, matrix_of, product, product_sign, simultaneous_eigenbasis_exists};
use gbit::question::{enumerate_complete_set, xnor_compose, Composition, QuestionIndex, Sign};
use gbit::{GbitKind, SystemKind};
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn reference(kind: GbitKind, digits: &[u8]) -> DMatrix<Complex64> {
    common::pauli(kind, digits)
}

fn close(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> bool {
    (a - b).norm() < 1e-12
}

fn check_pair(a: &QuestionIndex, b: &QuestionIndex) {
    let (pa, pb) = (reference(a.kind(), a.digits()), reference(b.kind(), b.digits()));
    let commute = close(&(&pa * &pb), &(&pb * &pa));
    assert_eq!(commute, a.is_compatible(b).unwrap(), "{a} {b}");
    assert_eq!(commute, commutes(a, b).unwrap(), "{a} {b}");
    if !commute {
        assert!(xnor_compose(&a.clone().positive(), &b.clone().positive()).is_err());
        return;
    }
    let prod = &pa * &pb;
    let symbolic = xnor_compose(&a.clone().positive(), &b.clone().positive()).unwrap();
    let expected = match &symbolic {
        Composition::AlwaysTrue => DMatrix::identity(prod.nrows(), prod.nrows()),
        Composition::AlwaysFalse => -DMatrix::<Complex64>::identity(prod.nrows(), prod.nrows()),
        Composition::Question(s) => {
            let m = reference(s.index.kind(), s.index.digits());
            if s.sign == Sign::Minus { -m } else { m }
        }
    };
    assert!(close(&prod, &expected), "{a} ∘ {b} = {symbolic}");
    if a != b {
        let sign = product_sign(a, b).unwrap();
        assert_eq!(sign, symbolic.question().unwrap().sign, "{a} {b}");
        assert_eq!(product(a, b).unwrap().index.as_ref(), Some(&symbolic.question().unwrap().index));
    }
}

#[test]
fn crate_matrices_match_reference() {
    for sys in [SystemKind::qubits(3), SystemKind::rebits(3)] {
        for q in &enumerate_complete_set(sys) {
            assert!(close(&matrix_of(q).unwrap().matrix.to_complex(), &reference(q.kind(), q.digits())), "{q}");
        }
    }
}

#[test]
fn exhaustive_up_to_three_gbits() {
    for n in 1..=3 {
        for sys in [SystemKind::qubits(n), SystemKind::rebits(n)] {
            let set = enumerate_complete_set(sys);
            for a in &set {
                for b in &set {
                    check_pair(a, b);
                }
            }
        }
    }
}

#[test]
fn sampled_four_and_five_gbits() {
    let mut rng = ChaCha8Rng::seed_from_u64(45);
    for n in [4, 5] {
        for sys in [SystemKind::qubits(n), SystemKind::rebits(n)] {
            let set = enumerate_complete_set(sys);
            for _ in 0..400 {
                check_pair(set.members().choose(&mut rng).unwrap(), set.members().choose(&mut rng).unwrap());
            }
        }
    }
}

#[test]
fn pairwise_compatible_sets_share_an_eigenbasis() {
    let q = |s: &str| QuestionIndex::parse(GbitKind::Qubit, s).unwrap();
    assert!(simultaneous_eigenbasis_exists(&[q("211"), q("121"), q("112")]).unwrap());
    assert!(!simultaneous_eigenbasis_exists(&[q("11"), q("22"), q("10")]).unwrap());
}

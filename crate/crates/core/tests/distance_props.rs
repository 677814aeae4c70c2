mod common;

use common::{css_code, lightest_logical};
use proptest::prelude::*;
use surgeon_core::distance::*;
use surgeon_core::f2::BitVec;
use surgeon_core::{Basis, CssCode, SubsystemCode};

/// Dressed distance by enumerating all of F2^n: `v` must satisfy the checks
/// and pair to 1 with some retained logical of the other type.
fn brute_dressed(code: &CssCode, retained_partners: &[BitVec], basis: Basis) -> Option<usize> {
    let n = code.n();
    (1u64..1 << n)
        .map(|m| BitVec::from_bits((0..n).map(|q| m >> q & 1 == 1)))
        .filter(|v| code.check(basis).mul_vec(v).is_zero() && retained_partners.iter().any(|x| v.dot(x)))
        .map(|v| v.weight())
        .min()
}

fn demote(code: &CssCode, mask: &[bool]) -> Option<(SubsystemCode, Vec<BitVec>, Vec<BitVec>)> {
    let lb = code.logical_basis();
    let k = lb.k();
    let gauge: Vec<usize> = (0..k).filter(|&i| mask[i % mask.len()]).collect();
    if gauge.len() == k {
        return None;
    }
    let pick = |v: &[BitVec], keep: bool| -> Vec<BitVec> {
        (0..k).filter(|i| gauge.contains(i) != keep).map(|i| v[i].clone()).collect()
    };
    let sub = SubsystemCode::new(code.clone(), pick(&lb.z_logicals, false), pick(&lb.x_logicals, false)).unwrap();
    Some((sub, pick(&lb.z_logicals, true), pick(&lb.x_logicals, true)))
}

proptest! {
    #![proptest_config(common::config(150))]

    #[test]
    fn subsystem_distance_matches_brute_force(code in css_code(4..=14, 5), mask in prop::collection::vec(any::<bool>(), 1..6)) {
        prop_assume!(code.num_logicals() > 0);
        let Some((sub, kept_z, kept_x)) = demote(&code, &mask) else { return Ok(()); };
        let engine = Engine::exhaustive();
        let dz = subsystem_distance(&sub, Some(Basis::Z), &engine).unwrap();
        let dx = subsystem_distance(&sub, Some(Basis::X), &engine).unwrap();
        prop_assert_eq!(Some(dz.value), brute_dressed(&code, &kept_x, Basis::Z));
        prop_assert_eq!(Some(dx.value), brute_dressed(&code, &kept_z, Basis::X));
        prop_assert!(dz.exact);
        let both = subsystem_distance(&sub, None, &engine).unwrap();
        prop_assert_eq!(both.value, dz.value.min(dx.value));
    }

    #[test]
    fn engines_agree(code in css_code(4..=12, 5)) {
        prop_assume!(code.num_logicals() > 0);
        for basis in [Basis::Z, Basis::X] {
            let brute = lightest_logical(&code, basis).unwrap().weight();
            let exhaustive = distance_exhaustive(&code, basis).unwrap();
            prop_assert_eq!(exhaustive.value, brute);
            prop_assert!(code.is_logical(&exhaustive.witness, basis).unwrap());
            prop_assert_eq!(exhaustive.witness.weight(), brute);
            match distance_weight_increment(&code, basis, code.n()).unwrap() {
                IncrementOutcome::Found(r) => prop_assert_eq!(r.value, brute),
                IncrementOutcome::GreaterThan(_) => prop_assert!(false, "a logical always exists"),
            }
            if brute > 1 {
                prop_assert_eq!(distance_weight_increment(&code, basis, brute - 1).unwrap(), IncrementOutcome::GreaterThan(brute - 1));
            }
            let ris = distance_ris(&code, basis, &RisOptions::new(30, 11)).unwrap();
            prop_assert!(ris.value >= brute);
            prop_assert!(!ris.exact);
            prop_assert!(code.is_logical(&ris.witness, basis).unwrap());
        }
    }

    #[test]
    fn ris_is_deterministic(code in css_code(6..=14, 5), seed in any::<u64>()) {
        prop_assume!(code.num_logicals() > 0);
        let options = RisOptions::new(40, seed);
        let a = distance_ris(&code, Basis::Z, &options).unwrap();
        let b = distance_ris(&code, Basis::Z, &options).unwrap();
        prop_assert_eq!(a, b);
    }
}

#[test]
fn ris_is_independent_of_thread_count() {
    let code = surgeon_core::products::lcs_code(2, 4).unwrap();
    let options = RisOptions::new(200, 5);
    let run = |threads: usize| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| distance_ris(&code, Basis::X, &options).unwrap())
    };
    assert_eq!(run(1), run(4));
}

#[test]
fn budget_and_empty_code_errors() {
    let code = surgeon_core::products::lcs_code(3, 6).unwrap();
    assert!(matches!(distance_exhaustive(&code, Basis::Z), Err(surgeon_core::Error::BudgetExceeded { .. })));
    let trivial = surgeon_core::products::tensor_product(
        &surgeon_core::products::path_code(2).unwrap(),
        &surgeon_core::products::path_code(2).unwrap(),
    );
    assert_eq!(trivial.num_logicals(), 0);
    assert!(matches!(distance_exhaustive(&trivial, Basis::Z), Err(surgeon_core::Error::NoLogicals)));
    assert!(matches!(distance_ris(&trivial, Basis::Z, &RisOptions::default()), Err(surgeon_core::Error::NoLogicals)));
}

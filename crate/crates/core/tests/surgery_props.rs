//! Postconditions of randomly generated merges and measurements.
//!
//! Every merge runs the coequaliser's own commuting-square assertions; the
//! checks here cover the homology-level semantics and the index bookkeeping.

mod common;

use common::{css_code, lightest_logical, matrix};
use proptest::prelude::*;
use surgeon_core::f2::{BitMatrix, BitVec, Echelon};
use surgeon_core::surgery::*;
use surgeon_core::{Basis, CssCode};

fn check_common(out: &MergeOutcome, n_before: usize) -> Result<(), TestCaseError> {
    let code = &out.code;
    prop_assert!(code.validate().is_ok());
    prop_assert!(code.px().mul(&code.pz().transpose()).is_zero());
    prop_assert_eq!(out.inclusion.shape(), (n_before, code.n()));
    prop_assert!((0..n_before).all(|q| out.inclusion.row_weight(q) == 1));
    prop_assert!(out.inclusion.column_weights().iter().all(|&w| w <= 1));
    prop_assert_eq!(out.old_logicals.k() + out.new_logicals.k(), code.num_logicals());
    prop_assert_eq!(out.new_qubits.len(), code.n() - n_before);
    let sub = &out.subsystem;
    prop_assert_eq!(sub.num_gauge(), out.new_logicals.k());
    // Pairing of the full logical basis is the identity.
    let mut z = out.old_logicals.z_logicals.clone();
    z.extend(out.new_logicals.z_logicals.iter().cloned());
    let mut x = out.old_logicals.x_logicals.clone();
    x.extend(out.new_logicals.x_logicals.iter().cloned());
    for (i, zi) in z.iter().enumerate() {
        for (j, xj) in x.iter().enumerate() {
            prop_assert_eq!(zi.dot(xj), i == j);
        }
    }
    Ok(())
}

fn same_outcome(a: &MergeOutcome, b: &MergeOutcome) -> bool {
    a.code.px() == b.code.px()
        && a.code.pz() == b.code.pz()
        && a.inclusion == b.inclusion
        && a.new_qubits == b.new_qubits
        && a.new_z_checks == b.new_z_checks
        && a.new_x_checks == b.new_x_checks
}

fn dual_of(out: MergeOutcome) -> MergeOutcome {
    // Re-dualizing through the public X-basis entry points is the property under test;
    // this swaps only the fields compared by `same_outcome`.
    MergeOutcome {
        code: out.code.dualize(),
        new_z_checks: out.new_x_checks.clone(),
        new_x_checks: out.new_z_checks.clone(),
        ..out
    }
}

/// Lightest logical that is not homologous to `u`.
fn second_logical(code: &CssCode, u: &BitVec) -> Option<BitVec> {
    let n = code.n();
    let stabilizers = Echelon::from_matrix_rows(code.pz());
    (1u64..1 << n)
        .map(|m| BitVec::from_bits((0..n).map(|q| m >> q & 1 == 1)))
        .filter(|v| code.px().mul_vec(v).is_zero() && !stabilizers.contains(v) && !stabilizers.contains(&v.xor(u)))
        .min_by_key(|v| (v.weight(), v.support()))
}

fn z_stabilizer(code: &CssCode, v: &BitVec) -> bool {
    code.is_stabilizer(v, Basis::Z).unwrap()
}

proptest! {
    #![proptest_config(common::config(200))]

    #[test]
    fn external_merges(code in css_code(4..=10, 4), r in 1usize..=2) {
        prop_assume!(code.num_logicals() > 0);
        let k = code.num_logicals();
        let n = code.n();
        for basis in [Basis::Z, Basis::X] {
            let u = lightest_logical(&code, basis).unwrap();
            let out = external_merge(&code, &code, &u, &u, basis, r).unwrap().expect("identical subcomplexes always span");
            check_common(&out, 2 * n)?;
            let v = code.restricted_matrix(&u, basis).unwrap();
            prop_assert_eq!(out.code.n(), 2 * n + (r - 1) * v.num_qubits() + r * v.num_checks());
            prop_assert_eq!(out.old_logicals.k(), 2 * k - 1);
            let both = u.concat(&u);
            let pushed = out.push_forward(&both);
            prop_assert!(out.code.is_stabilizer(&pushed, basis).unwrap());
            // Each copy of u stays a logical of the merged code.
            let first = out.push_forward(&u.concat(&BitVec::zeros(n)));
            prop_assert!(out.code.is_logical(&first, basis).unwrap());
            if basis == Basis::X {
                let dual = external_merge(&code.dualize(), &code.dualize(), &u, &u, Basis::Z, r).unwrap().unwrap();
                prop_assert!(same_outcome(&out, &dual_of(dual)));
            }
        }
    }

    #[test]
    fn measurements(code in css_code(4..=10, 4), r in 1usize..=3) {
        prop_assume!(code.num_logicals() > 0);
        let k = code.num_logicals();
        for basis in [Basis::Z, Basis::X] {
            let u = lightest_logical(&code, basis).unwrap();
            let out = single_qubit_measure(&code, &u, basis, r).unwrap();
            check_common(&out, code.n())?;
            prop_assert_eq!(out.old_logicals.k(), k - 1);
            prop_assert!(out.code.is_stabilizer(&out.push_forward(&u), basis).unwrap());
            let parallel = parallel_single_qubit_measure(&code, std::slice::from_ref(&u), basis, r).unwrap();
            prop_assert!(same_outcome(&out, &parallel));
        }
    }

    #[test]
    fn internal_merges(code in css_code(5..=10, 4), r in 1usize..=2) {
        prop_assume!(code.num_logicals() > 1);
        let u = lightest_logical(&code, Basis::Z).unwrap();
        let v = second_logical(&code, &u).unwrap();
        prop_assume!(code.is_irreducible(&v, Basis::Z).unwrap());
        prop_assert!(matches!(internal_merge(&code, &u, &u, Basis::Z, r), Err(surgeon_core::Error::Homologous)));
        if let Some(out) = internal_merge(&code, &u, &v, Basis::Z, r).unwrap() {
            check_common(&out, code.n())?;
            prop_assert_eq!(out.old_logicals.k(), code.num_logicals() - 1);
            prop_assert!(z_stabilizer(&out.code, &out.push_forward(&u.xor(&v))));
            prop_assert!(!z_stabilizer(&out.code, &out.push_forward(&u)));
        }
    }

    #[test]
    fn parallel_external_merges(code in css_code(4..=9, 4)) {
        prop_assume!(code.num_logicals() > 0);
        let u = lightest_logical(&code, Basis::Z).unwrap();
        let basis = code.logical_basis();
        let pairs: Vec<MergePair> = std::iter::once(u.clone())
            .chain(basis.z_logicals.iter().filter(|z| code.is_irreducible(z, Basis::Z).unwrap()).take(1).cloned())
            .map(|z| MergePair::new(z.clone(), z))
            .collect();
        let out = parallel_external_merge(&code, &code, &pairs, Basis::Z, 1).unwrap().unwrap();
        check_common(&out, 2 * code.n())?;
        for pair in &pairs {
            prop_assert!(z_stabilizer(&out.code, &out.push_forward(&pair.u.concat(&pair.v))));
        }
        let empty = parallel_external_merge(&code, &code, &[], Basis::Z, 1).unwrap().unwrap();
        prop_assert_eq!(empty.code.n(), 2 * code.n());
        prop_assert!(empty.new_qubits.is_empty());
    }

    #[test]
    fn span_search_is_symmetric_and_exact((m, rp, cp) in matrix(1..=5, 1..=6).prop_flat_map(|m| {
        let (r, c) = m.shape();
        (Just(m), Just((0..r).collect::<Vec<_>>()).prop_shuffle(), Just((0..c).collect::<Vec<_>>()).prop_shuffle())
    })) {
        let (r, c) = m.shape();
        let mut p = BitMatrix::zeros(r, c);
        for (i, &pi) in rp.iter().enumerate() { for (j, &pj) in cp.iter().enumerate() { if m.get(i, j) { p.set(pi, pj, true); } } }
        let span = find_matrix_span(&m, &p).expect("a permuted matrix is isomorphic");
        prop_assert!(span.is_valid(&m, &p));
        prop_assert!(find_matrix_span(&p, &m).is_some());
        prop_assert!(span.inverse().is_valid(&p, &m));
    }
}

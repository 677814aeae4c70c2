//! Shared strategies for the property suites.
#![allow(dead_code)]

use proptest::prelude::*;
use surgeon_core::f2::{BitMatrix, BitVec, Echelon};
use surgeon_core::products::ClassicalCode;
use surgeon_core::{Basis, CssCode};

pub fn matrix(rows: std::ops::RangeInclusive<usize>, cols: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = BitMatrix> {
    (rows, cols).prop_flat_map(|(r, c)| {
        prop::collection::vec(any::<bool>(), r * c).prop_map(move |bits| {
            let mut m = BitMatrix::zeros(r, c);
            for (i, b) in bits.into_iter().enumerate() {
                if b {
                    m.set(i / c, i % c, true);
                }
            }
            m
        })
    })
}

pub fn vector(n: usize) -> impl Strategy<Value = BitVec> {
    prop::collection::vec(any::<bool>(), n).prop_map(BitVec::from_bits)
}

pub fn classical(max_n: usize) -> impl Strategy<Value = ClassicalCode> {
    matrix(1..=max_n, 1..=max_n).prop_map(ClassicalCode::new)
}

/// Random CSS code: random X checks, Z checks drawn from their kernel.
pub fn css_code(n: std::ops::RangeInclusive<usize>, max_checks: usize) -> impl Strategy<Value = CssCode> {
    n.prop_flat_map(move |n| (matrix(1..=max_checks, n..=n), matrix(1..=max_checks, 1..=n), Just(n))).prop_map(|(px, mix, n)| {
        let kernel = px.kernel_basis();
        let mut pz = BitMatrix::zeros(mix.rows(), n);
        for i in 0..mix.rows() {
            let mut row = BitVec::zeros(n);
            for (j, k) in kernel.iter().enumerate() {
                if j < mix.cols() && mix.get(i, j) {
                    row.xor_assign(k);
                }
            }
            for q in row.support() {
                pz.set(i, q, true);
            }
        }
        CssCode::new(px, pz).expect("Z checks lie in the kernel of the X checks")
    })
}

/// Lightest logical by plain enumeration; minimum-weight logicals are irreducible.
pub fn lightest_logical(code: &CssCode, basis: Basis) -> Option<BitVec> {
    let n = code.n();
    assert!(n <= 20, "enumeration is for small codes");
    let stabilizers = Echelon::from_matrix_rows(code.stabilizers(basis));
    (1u64..1 << n)
        .map(|m| BitVec::from_bits((0..n).map(|q| m >> q & 1 == 1)))
        .filter(|v| code.check(basis).mul_vec(v).is_zero() && !stabilizers.contains(v))
        .min_by_key(|v| (v.weight(), v.support()))
}

/// Case count without regression files.
pub fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, failure_persistence: None, ..ProptestConfig::default() }
}

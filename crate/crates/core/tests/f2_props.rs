mod common;

use common::{matrix, vector};
use proptest::prelude::*;
use surgeon_core::f2::{quotient_basis, span_dim, BitMatrix, BitVec, Echelon, F2Error};

/// Rank by brute force: the number of distinct vectors in the row space is 2^rank.
fn brute_rank(m: &BitMatrix) -> usize {
    let rows = m.row_vecs();
    let mut seen = std::collections::BTreeSet::new();
    for mask in 0u32..1 << rows.len() {
        let mut v = BitVec::zeros(m.cols());
        for (i, r) in rows.iter().enumerate() {
            if mask >> i & 1 == 1 {
                v.xor_assign(r);
            }
        }
        seen.insert(v.support());
    }
    seen.len().trailing_zeros() as usize
}

proptest! {
    #![proptest_config(common::config(300))]

    #[test]
    fn rank_matches_brute_force(m in matrix(1..=8, 1..=10)) {
        prop_assert_eq!(m.rank(), brute_rank(&m));
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn rank_nullity(m in matrix(1..=10, 1..=12)) {
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.rank() + kernel.len(), m.cols());
        prop_assert_eq!(span_dim(&kernel), kernel.len());
        for v in &kernel {
            prop_assert!(m.mul_vec(v).is_zero());
        }
    }

    #[test]
    fn image_basis_spans_the_column_space(m in matrix(1..=10, 1..=10)) {
        let image = m.image_basis();
        prop_assert_eq!(image.len(), m.rank());
        for v in &image {
            prop_assert!(m.solve(v).unwrap().is_some());
        }
        let rows = m.row_space_basis();
        prop_assert_eq!(rows.len(), m.rank());
    }

    #[test]
    fn solve_is_consistent((m, x, b) in (1usize..=8, 1usize..=8).prop_flat_map(|(r, c)| (matrix(r..=r, c..=c), vector(c), vector(r)))) {
        let y = m.solve(&m.mul_vec(&x)).unwrap().expect("image vectors are solvable");
        prop_assert_eq!(m.mul_vec(&y), m.mul_vec(&x));
        let augmented = m.hstack(&BitMatrix::from_columns(std::slice::from_ref(&b), m.rows()));
        let solvable = augmented.rank() == m.rank();
        match m.solve(&b).unwrap() {
            Some(y) => { prop_assert!(solvable); prop_assert_eq!(m.mul_vec(&y), b); }
            None => prop_assert!(!solvable),
        }
    }

    #[test]
    fn transpose_and_products((a, b, c) in (1usize..=6, 1usize..=6, 1usize..=6, 1usize..=6)
        .prop_flat_map(|(p, q, r, s)| (matrix(p..=p, q..=q), matrix(q..=q, r..=r), matrix(r..=r, s..=s)))) {
        prop_assert_eq!(a.transpose().transpose(), a.clone());
        prop_assert_eq!(a.mul(&b).transpose(), b.transpose().mul(&a.transpose()));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn kron_mixed_product((a, b, c, d) in (1usize..=3, 1usize..=3, 1usize..=3, 1usize..=3, 1usize..=3, 1usize..=3)
        .prop_flat_map(|(p, q, r, s, t, u)| (matrix(p..=p, q..=q), matrix(s..=s, t..=t), matrix(q..=q, r..=r), matrix(t..=t, u..=u)))) {
        let left = a.kron(&b).mul(&c.kron(&d));
        prop_assert_eq!(left, a.mul(&c).kron(&b.mul(&d)));
    }

    #[test]
    fn quotient_complements((big, pick) in matrix(1..=8, 1..=10).prop_flat_map(|m| { let r = m.rows(); (Just(m), prop::collection::vec(any::<bool>(), r)) })) {
        let big_rows = big.row_vecs();
        let small: Vec<BitVec> = big_rows.iter().zip(&pick).filter(|(_, &p)| p).map(|(v, _)| v.clone()).collect();
        let q = quotient_basis(&big_rows, &small).unwrap();
        prop_assert_eq!(q.len(), span_dim(&big_rows) - span_dim(&small));
        let mut all = small.clone();
        all.extend(q);
        prop_assert_eq!(span_dim(&all), span_dim(&big_rows));
    }

    #[test]
    fn quotient_rejects_non_subspaces(m in matrix(2..=6, 2..=8), v in vector(8)) {
        let big = m.row_vecs();
        let v = BitVec::from_bits((0..m.cols()).map(|i| v.get(i)));
        let inside = Echelon::from_vectors(m.cols(), &big).contains(&v);
        let result = quotient_basis(&big, std::slice::from_ref(&v));
        prop_assert_eq!(result.is_ok(), inside);
        if !inside {
            prop_assert!(matches!(result, Err(F2Error::NotASubspace)));
        }
    }
}

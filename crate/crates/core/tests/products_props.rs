mod common;

use common::classical;
use proptest::prelude::*;
use surgeon_core::distance::distance_exhaustive;
use surgeon_core::products::*;
use surgeon_core::Basis;

fn monomials(max: usize) -> impl Strategy<Value = Vec<(usize, usize)>> {
    prop::collection::vec((0..max, 0..max), 1..=4)
}

proptest! {
    #![proptest_config(common::config(250))]

    #[test]
    fn tensor_parameter_law(a in classical(8), b in classical(8)) {
        let code = tensor_product(&a, &b);
        prop_assert!(code.validate().is_ok());
        prop_assert_eq!(code.n(), a.n_t() * b.n() + a.n() * b.n_t());
        prop_assert_eq!(code.num_logicals(), a.k_t() * b.k() + a.k() * b.k_t());
    }

    #[test]
    fn bivariate_ring_homomorphism(p in monomials(5), q in monomials(5)) {
        let (ell, m) = (5, 4);
        let p = BivariatePoly::from_terms(ell, m, p.into_iter().map(|(a, b)| (a, b % m)));
        let q = BivariatePoly::from_terms(ell, m, q.into_iter().map(|(a, b)| (a, b % m)));
        prop_assert_eq!(p.mul(&q).unwrap().matrix(), p.matrix().mul(&q.matrix()));
        prop_assert_eq!(p.add(&q).unwrap().matrix(), {
            let mut s = p.matrix();
            s.paste(&q.matrix(), 0, 0);
            s
        });
        let text = p.to_string();
        prop_assert_eq!(BivariatePoly::parse(&text, ell, m).unwrap(), p);
    }

    #[test]
    fn generalised_bicycle_codes_are_valid(a in prop::collection::vec(0usize..9, 1..=4), b in prop::collection::vec(0usize..9, 1..=4)) {
        let (a, b) = (CirculantPoly::from_exponents(9, a), CirculantPoly::from_exponents(9, b));
        let code = gb_code(9, &a, &b).unwrap();
        prop_assert!(code.validate().is_ok());
        prop_assert_eq!(code.n(), 18);
    }

    #[test]
    fn bivariate_bicycle_codes_are_valid(a in monomials(4), b in monomials(4)) {
        let a = BivariatePoly::from_terms(4, 3, a.into_iter().map(|(x, y)| (x, y % 3)));
        let b = BivariatePoly::from_terms(4, 3, b.into_iter().map(|(x, y)| (x, y % 3)));
        let code = bb_code(4, 3, &a, &b).unwrap();
        prop_assert!(code.validate().is_ok());
        prop_assert_eq!(code.n(), 24);
    }
}

#[test]
fn lcs_parameters() {
    for (l, ell) in [(1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (2, 6), (3, 5), (3, 6)] {
        let code = lcs_code(l, ell).unwrap();
        assert_eq!(code.n(), ((l + 1) * (l + 1) + l * l) * ell, "LCS({l},{ell}) length");
        assert_eq!(code.num_logicals(), ell, "LCS({l},{ell}) dimension");
        assert!(code.validate().is_ok());
    }
    assert!(lcs_code(0, 3).is_err());
}

#[test]
fn lcs_small_distance() {
    let code = lcs_code(1, 3).unwrap();
    assert_eq!(distance_exhaustive(&code, Basis::Z).unwrap().value, 3);
    assert_eq!(distance_exhaustive(&code, Basis::X).unwrap().value, 3);
}

#[test]
fn generalised_bicycle_from_literature() {
    let a = CirculantPoly::from_exponents(63, [0, 1, 14, 16, 22]);
    let b = CirculantPoly::from_exponents(63, [0, 3, 13, 20, 42]);
    let code = gb_code(63, &a, &b).unwrap();
    assert_eq!((code.n(), code.num_logicals()), (126, 28));
    assert!(gb_code(62, &a, &b).is_err());
}

#[test]
fn gross_code_parameters() {
    let code = gross_code();
    assert_eq!((code.n(), code.num_logicals(), code.omega()), (144, 12, 6));
    let a = BivariatePoly::parse("x3,y1,y2", 12, 6).unwrap();
    let b = BivariatePoly::parse("y3,x1,x2", 12, 6).unwrap();
    let parsed = bb_code(12, 6, &a, &b).unwrap();
    assert_eq!(parsed.px(), code.px());
    assert_eq!(parsed.pz(), code.pz());
    let one = BivariatePoly::one(12, 6);
    assert!(bb_code(12, 6, &one, &one).unwrap().validate().is_ok());
}

#[test]
fn path_gadgets() {
    for r in 1..5 {
        let p = path_code(r).unwrap();
        assert_eq!((p.check.rows(), p.check.cols()), (r + 1, r));
        assert_eq!(p.k(), 0);
        assert_eq!(p.k_t(), 1);
    }
    assert!(path_code(0).is_err());
    assert!(truncated_path_code(0).is_err());
}

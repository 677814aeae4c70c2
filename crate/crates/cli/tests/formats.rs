use proptest::prelude::*;
use surgeon_cli::bench::{self, BenchReport, BenchSpec};
use surgeon_cli::formats::{emit_logical, emit_matrix, parse_alist, parse_logical, parse_matrix};
use surgeon_core::catalog::steane;
use surgeon_core::surgery::{external_merge, merge_report, MergeReport};
use surgeon_core::{Basis, BitMatrix, BitVec};

fn matrix() -> impl Strategy<Value = BitMatrix> {
    (0usize..6, 1usize..9).prop_flat_map(|(r, c)| {
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

/// Independent alist writer: column lists then row lists, zero padded.
fn to_alist(m: &BitMatrix) -> String {
    let (rows, cols) = m.shape();
    let col_lists: Vec<Vec<usize>> = (0..cols).map(|j| (0..rows).filter(|&i| m.get(i, j)).map(|i| i + 1).collect()).collect();
    let row_lists: Vec<Vec<usize>> = (0..rows).map(|i| (0..cols).filter(|&j| m.get(i, j)).map(|j| j + 1).collect()).collect();
    let max_c = col_lists.iter().map(Vec::len).max().unwrap_or(0);
    let max_r = row_lists.iter().map(Vec::len).max().unwrap_or(0);
    let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
    let pad = |v: &[usize], to: usize| {
        let mut v = v.to_vec();
        v.resize(to.max(1), 0);
        join(&v)
    };
    let mut out = format!("{cols} {rows}\n{max_c} {max_r}\n");
    out += &format!("{}\n", join(&col_lists.iter().map(Vec::len).collect::<Vec<_>>()));
    out += &format!("{}\n", join(&row_lists.iter().map(Vec::len).collect::<Vec<_>>()));
    for c in &col_lists {
        out += &format!("{}\n", pad(c, max_c));
    }
    for r in &row_lists {
        out += &format!("{}\n", pad(r, max_r));
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn code_files_round_trip(m in matrix()) {
        let text = emit_matrix(&m);
        prop_assert!(text.ends_with('\n'));
        prop_assert_eq!(parse_matrix(&text).unwrap(), m.clone());
        prop_assert_eq!(emit_matrix(&parse_matrix(&text).unwrap()), text);
    }

    #[test]
    fn logical_files_round_trip(bits in prop::collection::vec(any::<bool>(), 1..40)) {
        let v = BitVec::from_bits(bits);
        prop_assert_eq!(parse_logical(&emit_logical(&v)).unwrap(), v);
    }

    #[test]
    fn alist_import_matches_dense(m in matrix().prop_filter("rows", |m| m.rows() > 0)) {
        prop_assert_eq!(parse_alist(&to_alist(&m)).unwrap(), m);
    }
}

#[test]
fn merge_reports_round_trip_through_json() {
    let c = steane();
    let u = surgeon_core::distance::distance_exhaustive(&c, Basis::Z).unwrap().witness;
    let report = merge_report(&external_merge(&c, &c, &u, &u, Basis::Z, 1).unwrap().unwrap());
    let back: MergeReport = serde_json::from_str(&serde_json::to_string(&report).unwrap()).unwrap();
    assert_eq!(back, report);
}

#[test]
fn bench_reports_round_trip_through_json() {
    let spec =
        BenchSpec::parse("[[row]]\nfamily = \"lcs\"\nl = 1\nell = 3\noperation = \"single_measure\"\ndepth = 1\n").unwrap();
    let report = bench::run(&spec).unwrap();
    let back: BenchReport = serde_json::from_str(&serde_json::to_string(&report).unwrap()).unwrap();
    assert_eq!(back, report);
}

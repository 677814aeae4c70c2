//! Choosing irreducible logical representatives for surgery.
//!
//! Surgery cost depends strongly on which representative of a logical class is
//! used. The functions here make that choice deterministic.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::codes::{Basis, CssCode};
use crate::distance::{eliminate_in_order, for_each_kernel_support, ris_trial};
use crate::f2::{BitVec, Echelon};

/// First irreducible logical of `weight` in lexicographic order of support,
/// preferring one whose subcomplex has `weight − 1` checks.
pub fn first_irreducible_of_weight(code: &CssCode, basis: Basis, weight: usize) -> Option<BitVec> {
    let stabilizers = Echelon::from_matrix_rows(code.stabilizers(basis));
    let mut fallback = None;
    let mut preferred = None;
    for_each_kernel_support(code.check(basis), weight, |support| {
        let v = BitVec::from_support(code.n(), support);
        if stabilizers.contains(&v) {
            return false;
        }
        let Ok(sub) = code.restricted_matrix(&v, basis) else {
            return false;
        };
        if sub.num_checks() + 1 == weight {
            preferred = Some(v);
            return true;
        }
        fallback.get_or_insert(v);
        false
    });
    preferred.or(fallback)
}

/// Lightest irreducible representative found for each class of `reps`.
///
/// Each class is searched by random information sets over the stabilizers
/// plus the class representative; candidates are ordered by weight and then
/// lexicographically by support.
pub fn light_irreducible_representatives(
    code: &CssCode,
    basis: Basis,
    reps: &[BitVec],
    trials: usize,
    seed: u64,
) -> Vec<Option<BitVec>> {
    let stabilizers = code.stabilizers(basis).row_space_basis();
    let span = Echelon::from_vectors(code.n(), &stabilizers);
    reps.iter()
        .map(|rep| {
            let mut generator = stabilizers.clone();
            generator.push(rep.clone());
            let accept = |v: &BitVec| !span.contains(v) && code.is_irreducible(v, basis).unwrap_or(false);
            (0..trials)
                .filter_map(|t| ris_trial(&generator, code.n(), seed, t, false, &accept).map(|(w, _, v)| (w, v.support(), v)))
                .min_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)))
                .map(|(_, _, v)| v)
        })
        .collect()
}

/// Distinct lightest logicals supported inside `block`, sorted by support.
///
/// Searches the kernel of the check matrix restricted to `block` by random
/// information sets and keeps every reduced row of the least weight seen.
pub fn block_logicals(code: &CssCode, basis: Basis, block: &[usize], trials: usize, seed: u64) -> Vec<BitVec> {
    let n = code.n();
    let generator: Vec<BitVec> =
        code.check(basis).select_columns(block).kernel_basis().iter().map(|v| v.embed(block, n)).collect();
    let stabilizers = Echelon::from_matrix_rows(code.stabilizers(basis));
    let found: Vec<Vec<BitVec>> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(t as u64);
            let mut order = block.to_vec();
            order.shuffle(&mut rng);
            let rows = eliminate_in_order(&generator, &order);
            let logical: Vec<BitVec> = rows.into_iter().filter(|r| !stabilizers.contains(r)).collect();
            let least = logical.iter().map(BitVec::weight).min().unwrap_or(usize::MAX);
            logical.into_iter().filter(|r| r.weight() == least).collect()
        })
        .collect();
    let least = found.iter().flatten().map(BitVec::weight).min();
    let mut out: Vec<BitVec> = found.into_iter().flatten().filter(|v| Some(v.weight()) == least).collect();
    out.sort_by_key(|v| v.support());
    out.dedup();
    out
}

/// Greedily keeps the vectors of `candidates`, in order, that add a new logical class.
pub fn independent_classes(code: &CssCode, basis: Basis, candidates: &[BitVec]) -> Vec<BitVec> {
    let mut span = Echelon::from_matrix_rows(code.stabilizers(basis));
    candidates.iter().filter(|v| span.insert(v)).cloned().collect()
}

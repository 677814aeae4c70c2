//! Code distance: exhaustive enumeration, weight increment, random information
//! sets, and the dressed distance of subsystem codes.
//!
//! The Z distance is the least weight of a vector in `ker P_X` outside the row
//! space of `P_Z`; the X distance is the same with the matrices swapped.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::codes::{Basis, CssCode, SubsystemCode};
use crate::error::{Error, Result};
use crate::f2::{BitMatrix, BitVec, Echelon};

/// Largest kernel dimension the exhaustive engine accepts by default.
pub const EXHAUSTIVE_BUDGET: usize = 26;

/// Default number of information sets for the randomized engine.
pub const DEFAULT_RIS_TRIALS: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Exhaustive,
    WeightIncrement,
    Ris,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceReport {
    pub value: usize,
    pub exact: bool,
    pub method: Method,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub basis: Basis,
    pub witness: BitVec,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RisOptions {
    pub trials: usize,
    pub seed: u64,
    /// Also scan sums of pairs of reduced rows.
    pub pair_sums: bool,
}

impl Default for RisOptions {
    fn default() -> Self {
        Self { trials: DEFAULT_RIS_TRIALS, seed: 0, pair_sums: false }
    }
}

impl RisOptions {
    pub fn new(trials: usize, seed: u64) -> Self {
        Self { trials, seed, pair_sums: false }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Engine {
    Exhaustive { budget: usize },
    WeightIncrement { max_weight: usize },
    Ris(RisOptions),
}

impl Engine {
    pub fn exhaustive() -> Self {
        Engine::Exhaustive { budget: EXHAUSTIVE_BUDGET }
    }
}

/// Result of a bounded weight-increment search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IncrementOutcome {
    Found(DistanceReport),
    /// No logical of weight at most this bound exists.
    GreaterThan(usize),
}

fn require_logicals(code: &CssCode) -> Result<()> {
    if code.num_logicals() == 0 {
        Err(Error::NoLogicals)
    } else {
        Ok(())
    }
}

/// Exact distance by walking every coset of the stabilizers in the kernel.
pub fn distance_exhaustive(code: &CssCode, basis: Basis) -> Result<DistanceReport> {
    distance_exhaustive_with_budget(code, basis, EXHAUSTIVE_BUDGET)
}

pub fn distance_exhaustive_with_budget(code: &CssCode, basis: Basis, budget: usize) -> Result<DistanceReport> {
    require_logicals(code)?;
    let n = code.n();
    let stabilizers = code.stabilizers(basis).row_space_basis();
    let logicals = code.homology_basis(basis);
    let dim = stabilizers.len() + logicals.len();
    if dim > budget || dim >= 63 {
        return Err(Error::BudgetExceeded { dim, budget });
    }
    // Bits 0..k select logical representatives, the rest select stabilizers.
    let generators: Vec<&BitVec> = logicals.iter().chain(&stabilizers).collect();
    let k = logicals.len();
    let mut current = vec![0u64; n.div_ceil(64)];
    let mut best: Option<(usize, Vec<u64>)> = None;
    for step in 1u64..(1u64 << dim) {
        let flip = step.trailing_zeros() as usize;
        for (c, g) in current.iter_mut().zip(generators[flip].words()) {
            *c ^= g;
        }
        let gray = step ^ (step >> 1);
        if gray & ((1 << k) - 1) == 0 {
            continue;
        }
        let weight: usize = current.iter().map(|w| w.count_ones() as usize).sum();
        if best.as_ref().is_none_or(|(w, _)| weight < *w) {
            best = Some((weight, current.clone()));
        }
    }
    let (value, words) = best.expect("k ≥ 1 leaves a nonzero logical coset");
    Ok(DistanceReport {
        value,
        exact: true,
        method: Method::Exhaustive,
        trials: None,
        seed: None,
        basis,
        witness: BitVec::from_words(n, &words),
    })
}

/// Depth-first enumeration of supports of a fixed weight whose columns sum to zero.
///
/// Supports are visited in lexicographic order; `visit` returns true to stop.
pub fn for_each_kernel_support<F>(check: &BitMatrix, weight: usize, mut visit: F)
where
    F: FnMut(&[usize]) -> bool,
{
    let columns: Vec<Vec<u64>> = {
        let t = check.transpose();
        (0..t.rows()).map(|j| t.row(j).words().to_vec()).collect()
    };
    let n = check.cols();
    let words = check.rows().div_ceil(64);
    let mut chosen = Vec::with_capacity(weight);
    let mut syndromes = vec![vec![0u64; words]; weight + 1];
    fn recurse<F: FnMut(&[usize]) -> bool>(
        start: usize,
        n: usize,
        weight: usize,
        columns: &[Vec<u64>],
        chosen: &mut Vec<usize>,
        syndromes: &mut [Vec<u64>],
        visit: &mut F,
    ) -> bool {
        let depth = chosen.len();
        if depth == weight {
            return syndromes[depth].iter().all(|&w| w == 0) && visit(chosen);
        }
        for j in start..=n - (weight - depth) {
            let (lo, hi) = syndromes.split_at_mut(depth + 1);
            for ((d, s), c) in hi[0].iter_mut().zip(&lo[depth]).zip(&columns[j]) {
                *d = s ^ c;
            }
            chosen.push(j);
            let stop = recurse(j + 1, n, weight, columns, chosen, syndromes, visit);
            chosen.pop();
            if stop {
                return true;
            }
        }
        false
    }
    if weight == 0 || weight > n {
        return;
    }
    recurse(0, n, weight, &columns, &mut chosen, &mut syndromes, &mut visit);
}

/// Logicals of exactly `weight`, in lexicographic order of support.
pub fn logicals_of_weight(code: &CssCode, basis: Basis, weight: usize, limit: Option<usize>) -> Vec<BitVec> {
    let stabilizers = Echelon::from_matrix_rows(code.stabilizers(basis));
    let mut out = Vec::new();
    for_each_kernel_support(code.check(basis), weight, |support| {
        let v = BitVec::from_support(code.n(), support);
        if !stabilizers.contains(&v) {
            out.push(v);
        }
        limit.is_some_and(|l| out.len() >= l)
    });
    out
}

/// Exact distance by trying supports of weight 1, 2, … up to `max_weight`.
pub fn distance_weight_increment(code: &CssCode, basis: Basis, max_weight: usize) -> Result<IncrementOutcome> {
    require_logicals(code)?;
    for w in 1..=max_weight.min(code.n()) {
        if let Some(witness) = logicals_of_weight(code, basis, w, Some(1)).pop() {
            return Ok(IncrementOutcome::Found(DistanceReport {
                value: w,
                exact: true,
                method: Method::WeightIncrement,
                trials: None,
                seed: None,
                basis,
                witness,
            }));
        }
    }
    Ok(IncrementOutcome::GreaterThan(max_weight))
}

/// Row-reduces `generator` choosing pivots in the column order `order`.
///
/// Returns the reduced nonzero rows. Pivoting in permuted order is the same as
/// permuting, eliminating and permuting back.
pub(crate) fn eliminate_in_order(generator: &[BitVec], order: &[usize]) -> Vec<BitVec> {
    let mut rows: Vec<BitVec> = generator.to_vec();
    let mut rank = 0;
    for &c in order {
        if rank == rows.len() {
            break;
        }
        let Some(p) = (rank..rows.len()).find(|&i| rows[i].get(c)) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row.get(c) {
                row.xor_assign(&pivot);
            }
        }
        rank += 1;
    }
    rows.truncate(rank);
    rows
}

/// One random information set: the lightest valid vector among reduced rows.
///
/// Candidates are ranked by `(weight, position)`; pair sums, when enabled,
/// follow all single rows in position order.
pub(crate) fn ris_trial<F>(
    generator: &[BitVec],
    n: usize,
    seed: u64,
    trial: usize,
    pair_sums: bool,
    accept: &F,
) -> Option<(usize, usize, BitVec)>
where
    F: Fn(&BitVec) -> bool,
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let rows = eliminate_in_order(generator, &order);
    let mut candidates: Vec<(usize, usize, BitVec)> = rows.iter().enumerate().map(|(i, r)| (r.weight(), i, r.clone())).collect();
    if pair_sums {
        let mut position = rows.len();
        for i in 0..rows.len() {
            for j in i + 1..rows.len() {
                let sum = rows[i].xor(&rows[j]);
                candidates.push((sum.weight(), position, sum));
                position += 1;
            }
        }
    }
    candidates.sort_by_key(|c| (c.0, c.1));
    candidates.into_iter().find(|(_, _, v)| accept(v))
}

/// Upper bound on the distance from random information sets.
///
/// Trials run in parallel; the result is the minimum over `(weight, trial, row)`
/// and so does not depend on scheduling.
pub fn distance_ris(code: &CssCode, basis: Basis, options: &RisOptions) -> Result<DistanceReport> {
    require_logicals(code)?;
    if options.trials == 0 {
        return Err(Error::InvalidParameter("RIS needs at least one trial".into()));
    }
    let generator = code.check(basis).kernel_basis();
    let stabilizers = Echelon::from_matrix_rows(code.stabilizers(basis));
    let accept = |v: &BitVec| !stabilizers.contains(v);
    let n = code.n();
    let best = (0..options.trials)
        .into_par_iter()
        .filter_map(|t| ris_trial(&generator, n, options.seed, t, options.pair_sums, &accept).map(|(w, row, v)| ((w, t, row), v)))
        .min_by(|a, b| a.0.cmp(&b.0))
        .expect("every information set of a code with k ≥ 1 contains a logical");
    Ok(DistanceReport {
        value: best.0 .0,
        exact: false,
        method: Method::Ris,
        trials: Some(options.trials),
        seed: Some(options.seed),
        basis,
        witness: best.1,
    })
}

/// Runs `engine` for one basis. Weight increment past its bound is a budget error.
pub fn distance(code: &CssCode, basis: Basis, engine: &Engine) -> Result<DistanceReport> {
    match engine {
        Engine::Exhaustive { budget } => distance_exhaustive_with_budget(code, basis, *budget),
        Engine::WeightIncrement { max_weight } => match distance_weight_increment(code, basis, *max_weight)? {
            IncrementOutcome::Found(report) => Ok(report),
            IncrementOutcome::GreaterThan(w) => Err(Error::BudgetExceeded { dim: w + 1, budget: w }),
        },
        Engine::Ris(options) => distance_ris(code, basis, options),
    }
}

/// `min(d_Z, d_X)`; the Z report wins ties.
pub fn code_distance(code: &CssCode, engine: &Engine) -> Result<DistanceReport> {
    let z = distance(code, Basis::Z, engine)?;
    let x = distance(code, Basis::X, engine)?;
    Ok(if x.value < z.value { x } else { z })
}

/// Dressed distance: gauge logicals are appended to the stabilizers before the search.
///
/// With `basis = None` both bases are computed and the smaller is returned.
pub fn subsystem_distance(sub: &SubsystemCode, basis: Option<Basis>, engine: &Engine) -> Result<DistanceReport> {
    let one = |b: Basis| distance(&sub.dressed_code(b)?, b, engine);
    match basis {
        Some(b) => one(b),
        None => {
            let z = one(Basis::Z)?;
            let x = one(Basis::X)?;
            Ok(if x.value < z.value { x } else { z })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn steane_distances() {
        let c = catalog::steane();
        let ex = distance_exhaustive(&c, Basis::Z).unwrap();
        assert_eq!((ex.value, ex.exact), (3, true));
        assert!(c.is_logical(&ex.witness, Basis::Z).unwrap());
        assert_eq!(ex.witness.weight(), 3);
        let ris = distance_ris(&c, Basis::Z, &RisOptions::new(100, 7)).unwrap();
        assert_eq!((ris.value, ris.exact), (3, false));
    }

    #[test]
    fn weight_increment_bounds() {
        let c = catalog::shor();
        match distance_weight_increment(&c, Basis::Z, 5).unwrap() {
            IncrementOutcome::Found(r) => assert_eq!(r.value, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(distance_weight_increment(&c, Basis::Z, 0).unwrap(), IncrementOutcome::GreaterThan(0));
        assert_eq!(distance_weight_increment(&c, Basis::Z, 2).unwrap(), IncrementOutcome::GreaterThan(2));
    }

    #[test]
    fn no_logicals_is_an_error() {
        let c = CssCode::new(BitMatrix::identity(2), BitMatrix::zeros(0, 2)).unwrap();
        assert_eq!(distance_exhaustive(&c, Basis::Z), Err(Error::NoLogicals));
        assert_eq!(distance_ris(&c, Basis::Z, &RisOptions::new(5, 0)), Err(Error::NoLogicals));
    }

    #[test]
    fn budget_is_enforced() {
        let c = catalog::quantum_reed_muller();
        assert!(matches!(distance_exhaustive_with_budget(&c, Basis::Z, 3), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn eliminating_in_identity_order_gives_rref() {
        let m = BitMatrix::from_dense(&[[1, 1, 0, 1], [0, 1, 1, 1]]);
        let rows = eliminate_in_order(&m.row_vecs(), &[0, 1, 2, 3]);
        assert_eq!(BitMatrix::from_rows(&rows, 4), m.rref().0);
    }
}

//! Benchmark harness: runs merge and measurement sweeps described in a TOML file.
//!
//! ```toml
//! [[row]]
//! family = "lcs"
//! l = 1
//! ell = 3
//! operation = "ext_merge"
//! basis = "z"
//! max_depth = 3
//! ```
//!
//! Rows run in parallel; results are reported in file order.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use surgeon_core::catalog::small_set;
use surgeon_core::distance::{code_distance, distance, subsystem_distance, Engine};
use surgeon_core::products::{bb_code, gb_code, lcs_code, BivariatePoly, CirculantPoly};
use surgeon_core::surgery::logicals::{first_irreducible_of_weight, light_irreducible_representatives};
use surgeon_core::surgery::{
    escalate_depth, external_merge, internal_merge, merge_report, parallel_external_merge, parallel_single_qubit_measure,
    single_qubit_measure, surface_baseline, MergeOutcome, MergePair, SurfaceBaseline,
};
use surgeon_core::{Basis, BitVec, CssCode, Error};

use crate::{CliError, EngineKind, VERSION};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    SmallSet,
    Lcs,
    Gb,
    Bb,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Operation {
    ExtMerge,
    IntMerge,
    SingleMeasure,
    ParallelExtMerge,
    ParallelMeasure,
}

fn default_true() -> bool {
    true
}

fn default_trials() -> usize {
    1_000
}

fn default_logical_trials() -> usize {
    200
}

fn default_seed() -> u64 {
    1
}

/// One sweep.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RowSpec {
    pub family: Family,
    #[serde(default)]
    pub l: Option<usize>,
    #[serde(default)]
    pub ell: Option<usize>,
    #[serde(default)]
    pub m: Option<usize>,
    #[serde(default)]
    pub a: Option<String>,
    #[serde(default)]
    pub b: Option<String>,
    pub operation: Operation,
    #[serde(default = "default_basis")]
    pub basis: Basis,
    /// Fixed depth. Without it the depth escalates up to `max_depth` until
    /// the dressed distance reaches the initial code distance.
    #[serde(default)]
    pub depth: Option<usize>,
    #[serde(default)]
    pub max_depth: Option<usize>,
    /// Compute distances; escalation needs them.
    #[serde(default = "default_true")]
    pub distance: bool,
    #[serde(default)]
    pub engine: EngineKind,
    #[serde(default = "default_trials")]
    pub trials: usize,
    #[serde(default = "default_seed")]
    pub seed: u64,
    #[serde(default)]
    pub max_weight: Option<usize>,
    /// Logical weight for the small example set; defaults to the distance.
    #[serde(default)]
    pub weight: Option<usize>,
    /// Trials of the search for light representatives of each logical class.
    #[serde(default = "default_logical_trials")]
    pub logical_trials: usize,
}

fn default_basis() -> Basis {
    Basis::Z
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BenchSpec {
    #[serde(default)]
    pub row: Vec<RowSpec>,
}

impl BenchSpec {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::Parse(format!("bench spec: {e}")))
    }
}

/// One merge or measurement of a sweep.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub label: String,
    /// `None` when no monic span exists or no representative was found.
    pub r: Option<usize>,
    pub n_before: usize,
    pub n_after: Option<usize>,
    pub new_qubits: Option<usize>,
    pub ancilla_ratio: Option<f64>,
    pub omega_before: usize,
    pub omega: Option<usize>,
    pub distance: Option<usize>,
    /// Whether the initial distance was preserved; `None` without distances.
    pub preserved: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub succeeded: usize,
    pub attempted: usize,
    pub mean_r: Option<f64>,
    pub mean_ancilla_ratio: Option<f64>,
    pub mean_omega: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RowResult {
    pub spec: RowSpec,
    pub code: String,
    pub n: usize,
    pub k: usize,
    pub distance: Option<usize>,
    pub records: Vec<Record>,
    pub summary: Summary,
    pub baseline: Option<SurfaceBaseline>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub version: String,
    pub rows: Vec<RowResult>,
}

fn require<T: Copy>(value: Option<T>, name: &str, family: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Parse(format!("bench spec: {family} rows need `{name}`")))
}

fn param_error(e: Error) -> CliError {
    CliError::Parse(format!("bench spec: {e}"))
}

/// Builds the row's code with a display name; `None` for the small example set.
fn build_code(spec: &RowSpec) -> Result<Option<(String, CssCode)>, CliError> {
    let text = |p: &Option<String>, name: &str, family: &str| {
        p.clone().ok_or_else(|| CliError::Parse(format!("bench spec: {family} rows need `{name}`")))
    };
    Ok(match spec.family {
        Family::SmallSet => None,
        Family::Lcs => {
            let (l, ell) = (require(spec.l, "l", "lcs")?, require(spec.ell, "ell", "lcs")?);
            Some((format!("LCS({l},{ell})"), lcs_code(l, ell).map_err(param_error)?))
        }
        Family::Gb => {
            let ell = require(spec.ell, "ell", "gb")?;
            let a = CirculantPoly::parse(&text(&spec.a, "a", "gb")?, ell).map_err(param_error)?;
            let b = CirculantPoly::parse(&text(&spec.b, "b", "gb")?, ell).map_err(param_error)?;
            Some((format!("GB(ell={ell})"), gb_code(ell, &a, &b).map_err(param_error)?))
        }
        Family::Bb => {
            let (ell, m) = (require(spec.ell, "ell", "bb")?, require(spec.m, "m", "bb")?);
            let a = BivariatePoly::parse(&text(&spec.a, "a", "bb")?, ell, m).map_err(param_error)?;
            let b = BivariatePoly::parse(&text(&spec.b, "b", "bb")?, ell, m).map_err(param_error)?;
            Some((format!("BB(ell={ell},m={m})"), bb_code(ell, m, &a, &b).map_err(param_error)?))
        }
    })
}

struct Runner {
    engine: Engine,
    distances: bool,
    depth: Option<usize>,
    max_depth: usize,
}

impl Runner {
    fn new(spec: &RowSpec) -> Result<Self, CliError> {
        if spec.depth.is_some() && spec.max_depth.is_some() {
            return Err(CliError::Parse("bench spec: set either `depth` or `max_depth`, not both".into()));
        }
        if spec.depth == Some(0) || spec.max_depth == Some(0) {
            return Err(CliError::Parse("bench spec: depths start at 1".into()));
        }
        if spec.depth.is_none() && !spec.distance {
            return Err(CliError::Parse("bench spec: depth escalation needs `distance = true`".into()));
        }
        Ok(Self {
            engine: spec.engine.engine(spec.trials, spec.seed, spec.max_weight),
            distances: spec.distance,
            depth: spec.depth,
            max_depth: spec.max_depth.unwrap_or(4),
        })
    }

    /// Runs one operation under the depth policy; `build(r)` returns `None` without a span.
    fn record<F>(
        &self,
        label: String,
        n_before: usize,
        omega_before: usize,
        target: Option<usize>,
        mut build: F,
    ) -> Result<Record, CliError>
    where
        F: FnMut(usize) -> surgeon_core::Result<Option<MergeOutcome>>,
    {
        let empty = Record {
            label: label.clone(),
            r: None,
            n_before,
            n_after: None,
            new_qubits: None,
            ancilla_ratio: None,
            omega_before,
            omega: None,
            distance: None,
            preserved: None,
        };
        let (outcome, dressed) = match self.depth {
            Some(r) => {
                let Some(outcome) = build(r)? else { return Ok(empty) };
                let dressed = if self.distances { dressed_distance(&outcome, &self.engine)? } else { None };
                (outcome, dressed)
            }
            None => {
                let Some(found) = escalate_depth(target.unwrap_or(0), self.max_depth, &self.engine, build)? else {
                    return Ok(empty);
                };
                (found.outcome, found.distance.map(|d| d.value))
            }
        };
        let report = merge_report(&outcome);
        Ok(Record {
            r: Some(report.r),
            n_after: Some(report.n_after),
            new_qubits: Some(report.new_qubits),
            ancilla_ratio: Some(report.ancilla_ratio),
            omega_before: report.omega_before,
            omega: Some(report.omega),
            distance: dressed,
            preserved: match (dressed, target) {
                (Some(d), Some(t)) => Some(d >= t),
                (None, Some(_)) if self.distances => Some(true),
                _ => None,
            },
            ..empty
        })
    }
}

/// Dressed distance of the result; `None` when no logical survives.
fn dressed_distance(outcome: &MergeOutcome, engine: &Engine) -> Result<Option<usize>, CliError> {
    match subsystem_distance(&outcome.subsystem, None, engine) {
        Ok(report) => Ok(Some(report.value)),
        Err(Error::NoLogicals) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

fn summarize(records: &[Record]) -> Summary {
    let done: Vec<&Record> = records.iter().filter(|r| r.r.is_some()).collect();
    let mean =
        |f: &dyn Fn(&Record) -> f64| (!done.is_empty()).then(|| done.iter().map(|r| f(r)).sum::<f64>() / done.len() as f64);
    Summary {
        succeeded: done.len(),
        attempted: records.len(),
        mean_r: mean(&|r| r.r.unwrap_or(0) as f64),
        mean_ancilla_ratio: mean(&|r| r.ancilla_ratio.unwrap_or(0.0)),
        mean_omega: mean(&|r| r.omega.unwrap_or(0) as f64),
    }
}

fn run_small_set(spec: &RowSpec, runner: &Runner) -> Result<RowResult, CliError> {
    let codes = small_set();
    let basis = spec.basis;
    let exhaustive = Engine::exhaustive();
    let mut chosen: Vec<(&str, &CssCode, Option<BitVec>, usize)> = Vec::new();
    for (name, code) in &codes {
        let d = distance(code, basis, &exhaustive)?.value;
        chosen.push((
            name,
            code,
            first_irreducible_of_weight(code, basis, spec.weight.unwrap_or(d)),
            code_distance(code, &exhaustive)?.value,
        ));
    }
    let mut records = Vec::new();
    match spec.operation {
        Operation::ExtMerge => {
            for i in 0..chosen.len() {
                for j in i..chosen.len() {
                    let (a, b) = (&chosen[i], &chosen[j]);
                    let label = format!("{}-{}", a.0, b.0);
                    let n_before = a.1.n() + b.1.n();
                    let omega_before = a.1.omega().max(b.1.omega());
                    let target = runner.distances.then_some(a.3.min(b.3));
                    let record = match (&a.2, &b.2) {
                        (Some(u), Some(v)) => {
                            runner.record(label, n_before, omega_before, target, |r| external_merge(a.1, b.1, u, v, basis, r))?
                        }
                        _ => runner.record(label, n_before, omega_before, target, |_| Ok(None))?,
                    };
                    records.push(record);
                }
            }
        }
        Operation::SingleMeasure => {
            for (name, code, u, _) in &chosen {
                let record = match u {
                    // Measuring the only logical leaves nothing to protect.
                    Some(u) => runner.record(name.to_string(), code.n(), code.omega(), runner.distances.then_some(0), |r| {
                        single_qubit_measure(code, u, basis, r).map(Some)
                    })?,
                    None => runner.record(name.to_string(), code.n(), code.omega(), None, |_| Ok(None))?,
                };
                records.push(record);
            }
        }
        _ => return Err(CliError::Parse("bench spec: the small example set supports ext_merge and single_measure".into())),
    }
    Ok(RowResult {
        spec: spec.clone(),
        code: "small set".into(),
        n: 0,
        k: 0,
        distance: None,
        summary: summarize(&records),
        records,
        baseline: None,
    })
}

fn run_family(spec: &RowSpec, runner: &Runner, name: String, code: CssCode) -> Result<RowResult, CliError> {
    let basis = spec.basis;
    let d = if runner.distances { Some(code_distance(&code, &runner.engine)?.value) } else { None };
    let reps = light_irreducible_representatives(&code, basis, &code.homology_basis(basis), spec.logical_trials, spec.seed);
    let (n, omega) = (code.n(), code.omega());
    let label = |i: usize| format!("logical {i}");
    let mut records = Vec::new();
    match spec.operation {
        Operation::ExtMerge => {
            for (i, u) in reps.iter().enumerate() {
                records.push(runner.record(label(i), 2 * n, omega, d, |r| match u {
                    Some(u) => external_merge(&code, &code, u, u, basis, r),
                    None => Ok(None),
                })?);
            }
        }
        Operation::SingleMeasure => {
            for (i, u) in reps.iter().enumerate() {
                records.push(runner.record(label(i), n, omega, d, |r| match u {
                    Some(u) => single_qubit_measure(&code, u, basis, r).map(Some),
                    None => Ok(None),
                })?);
            }
        }
        Operation::IntMerge => {
            for i in 0..reps.len().saturating_sub(1) {
                let name = format!("logicals {i}+{}", i + 1);
                records.push(runner.record(name, n, omega, d, |r| match (&reps[i], &reps[i + 1]) {
                    (Some(u), Some(v)) => internal_merge(&code, u, v, basis, r),
                    _ => Ok(None),
                })?);
            }
        }
        Operation::ParallelExtMerge => {
            let pairs: Vec<MergePair> = reps.iter().flatten().map(|u| MergePair::new(u.clone(), u.clone())).collect();
            records.push(runner.record(format!("{} pairs", pairs.len()), 2 * n, omega, d, |r| {
                parallel_external_merge(&code, &code, &pairs, basis, r)
            })?);
        }
        Operation::ParallelMeasure => {
            let all: Vec<BitVec> = reps.iter().flatten().cloned().collect();
            records.push(runner.record(format!("{} logicals", all.len()), n, omega, d, |r| {
                parallel_single_qubit_measure(&code, &all, basis, r).map(Some)
            })?);
        }
    }
    let k = code.num_logicals();
    let baseline_distance = match spec.family {
        Family::Lcs => spec.l.zip(spec.ell).map(|(l, ell)| ell.min(2 * l + 1)),
        _ => d,
    };
    let baseline = match baseline_distance {
        Some(bd) if bd >= 2 => Some(surface_baseline(k, bd)?),
        _ => None,
    };
    Ok(RowResult { spec: spec.clone(), code: name, n, k, distance: d, summary: summarize(&records), records, baseline })
}

pub fn run_row(spec: &RowSpec) -> Result<RowResult, CliError> {
    let runner = Runner::new(spec)?;
    match build_code(spec)? {
        None => run_small_set(spec, &runner),
        Some((name, code)) => run_family(spec, &runner, name, code),
    }
}

pub fn run(spec: &BenchSpec) -> Result<BenchReport, CliError> {
    let rows = spec.row.par_iter().map(run_row).collect::<Result<Vec<_>, _>>()?;
    Ok(BenchReport { version: VERSION.into(), rows })
}

fn cell<T: std::fmt::Display>(v: Option<T>) -> String {
    v.map_or_else(|| "-".into(), |x| x.to_string())
}

/// Plain-text rendering: one block per row, records in order, then the means.
pub fn render(report: &BenchReport) -> String {
    let mut out = String::new();
    for row in &report.rows {
        let spec = &row.spec;
        let d = row.distance.map_or_else(String::new, |d| format!(",{d}"));
        let params = if row.n > 0 { format!(" [[{},{}{d}]]", row.n, row.k) } else { String::new() };
        let _ = writeln!(out, "# {}{params} {:?} {}", row.code, spec.operation, spec.basis);
        let _ = writeln!(
            out,
            "{:<18} {:>3} {:>8} {:>8} {:>7} {:>7} {:>3} {:>4}",
            "operation", "r", "n_before", "n_after", "ratio", "omega", "d", "kept"
        );
        for rec in &row.records {
            let kept = rec.preserved.map(|p| if p { "yes" } else { "no" });
            let _ = writeln!(
                out,
                "{:<18} {:>3} {:>8} {:>8} {:>7} {:>7} {:>3} {:>4}",
                rec.label,
                cell(rec.r),
                rec.n_before,
                cell(rec.n_after),
                cell(rec.ancilla_ratio.map(|x| format!("{x:.3}"))),
                format!(
                    "{}{}",
                    cell(rec.omega),
                    rec.omega.map_or(String::new(), |w| format!("({:+})", w as isize - rec.omega_before as isize))
                ),
                cell(rec.distance),
                cell(kept),
            );
        }
        let s = &row.summary;
        let _ = writeln!(
            out,
            "mean r {} ratio {} omega {} ({}/{} succeeded)",
            cell(s.mean_r.map(|x| format!("{x:.2}"))),
            cell(s.mean_ancilla_ratio.map(|x| format!("{x:.3}"))),
            cell(s.mean_omega.map(|x| format!("{x:.2}"))),
            s.succeeded,
            s.attempted
        );
        if let Some(b) = &row.baseline {
            let _ = writeln!(
                out,
                "surface code: merge {}+{}={}, parallel {}+{}={}",
                b.n_initial,
                b.merge_ancilla,
                b.merge_total(),
                b.n_initial,
                b.parallel_ancilla,
                b.parallel_total()
            );
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_spec_gives_an_empty_table() {
        let spec = BenchSpec::parse("").unwrap();
        let report = run(&spec).unwrap();
        assert!(report.rows.is_empty());
        assert_eq!(render(&report), "");
    }

    #[test]
    fn unknown_fields_and_bad_policies_are_rejected() {
        assert!(BenchSpec::parse("[[row]]\nfamily = \"lcs\"\noperation = \"ext_merge\"\ncolour = 1\n").is_err());
        let spec =
            BenchSpec::parse("[[row]]\nfamily = \"lcs\"\nl = 1\nell = 3\noperation = \"ext_merge\"\ndepth = 1\nmax_depth = 2\n")
                .unwrap();
        assert!(matches!(run(&spec), Err(CliError::Parse(_))));
        let spec = BenchSpec::parse("[[row]]\nfamily = \"lcs\"\nell = 3\noperation = \"ext_merge\"\n").unwrap();
        assert!(matches!(run(&spec), Err(CliError::Parse(_))));
    }
}

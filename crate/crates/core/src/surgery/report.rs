//! Figures of merit for merges, surface-code baselines and depth escalation.

use serde::{Deserialize, Serialize};

use crate::distance::{subsystem_distance, DistanceReport, Engine};
use crate::error::{Error, Result};

use super::merge::MergeOutcome;

/// Summary of one merge or measurement.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MergeReport {
    pub r: usize,
    pub n_before: usize,
    pub n_after: usize,
    pub new_qubits: usize,
    pub new_z_checks: usize,
    pub new_x_checks: usize,
    pub k_old: usize,
    pub k_new: usize,
    pub omega: usize,
    pub omega_before: usize,
    /// New data qubits over initial data qubits.
    pub ancilla_ratio: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subsystem_distance: Option<DistanceReport>,
}

pub fn merge_report(outcome: &MergeOutcome) -> MergeReport {
    let ratio = if outcome.n_before == 0 { 0.0 } else { outcome.new_qubits.len() as f64 / outcome.n_before as f64 };
    MergeReport {
        r: outcome.depth,
        n_before: outcome.n_before,
        n_after: outcome.code.n(),
        new_qubits: outcome.new_qubits.len(),
        new_z_checks: outcome.new_z_checks.len(),
        new_x_checks: outcome.new_x_checks.len(),
        k_old: outcome.old_logicals.k(),
        k_new: outcome.new_logicals.k(),
        omega: outcome.code.omega(),
        omega_before: outcome.omega_before,
        ancilla_ratio: ratio,
        subsystem_distance: None,
    }
}

/// Lattice surgery costs with unrotated surface code patches of distance `d`,
/// one patch per logical qubit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceBaseline {
    /// Two blocks of `k` patches.
    pub n_initial: usize,
    /// One merge between two patches.
    pub merge_ancilla: usize,
    /// `k` simultaneous merges.
    pub parallel_ancilla: usize,
    /// One block of `k` patches.
    pub measure_initial: usize,
    pub measure_ancilla: usize,
}

impl SurfaceBaseline {
    pub fn merge_total(&self) -> usize {
        self.n_initial + self.merge_ancilla
    }

    pub fn parallel_total(&self) -> usize {
        self.n_initial + self.parallel_ancilla
    }
}

pub fn surface_baseline(k: usize, d: usize) -> Result<SurfaceBaseline> {
    if d < 2 {
        return Err(Error::InvalidParameter(format!("surface code distance must be at least 2, got {d}")));
    }
    let patch = d * d + (d - 1) * (d - 1);
    Ok(SurfaceBaseline {
        n_initial: 2 * k * patch,
        merge_ancilla: d - 1,
        parallel_ancilla: k * (d - 1),
        measure_initial: k * patch,
        measure_ancilla: 0,
    })
}

/// A merge at the smallest depth that reached the target distance.
#[derive(Clone, Debug)]
pub struct Escalation {
    pub outcome: MergeOutcome,
    /// `None` when no logical survives the operation.
    pub distance: Option<DistanceReport>,
    /// Whether the target was met; false means `max_depth` was hit first.
    pub reached: bool,
}

/// Tries depths `1..=max_depth` until the dressed distance is at least `target`.
///
/// `build` returning `None` (no span) ends the search with `None`.
pub fn escalate_depth<F>(target: usize, max_depth: usize, engine: &Engine, mut build: F) -> Result<Option<Escalation>>
where
    F: FnMut(usize) -> Result<Option<MergeOutcome>>,
{
    if max_depth == 0 {
        return Err(Error::InvalidParameter("depth must be at least 1".into()));
    }
    for r in 1..=max_depth {
        let Some(outcome) = build(r)? else {
            return Ok(None);
        };
        let distance = match subsystem_distance(&outcome.subsystem, None, engine) {
            Ok(report) => Some(report),
            Err(Error::NoLogicals) => None,
            Err(e) => return Err(e),
        };
        let reached = distance.as_ref().is_none_or(|d| d.value >= target);
        if reached || r == max_depth {
            return Ok(Some(Escalation { outcome, distance, reached }));
        }
    }
    unreachable!("the last depth always returns")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn baseline_rows() {
        let b = surface_baseline(3, 3).unwrap();
        assert_eq!((b.n_initial, b.merge_ancilla, b.merge_total()), (78, 2, 80));
        let b = surface_baseline(6, 6).unwrap();
        assert_eq!((b.n_initial, b.merge_ancilla, b.merge_total()), (732, 5, 737));
        assert_eq!(surface_baseline(1, 2).unwrap().n_initial, 10);
        assert!(surface_baseline(1, 1).is_err());
    }
}

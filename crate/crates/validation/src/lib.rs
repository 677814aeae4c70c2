//! Published reference values that the acceptance harness compares against.
//!
//! The tables are kept apart from the harness so that they can be read and
//! audited on their own.

/// Order of the small example set, matching `catalog::small_set`.
pub const SMALL_SET: [&str; 5] = ["Shor", "QRM", "Steane", "RotSurf", "Surf"];

/// `ω_after − ω_before` for r=1 merges between weight-3 logicals.
///
/// Entry `(i, j, z, x)` with `i <= j` indexes [`SMALL_SET`]; `x` is `None`
/// when one of the codes has no weight-3 X logical.
pub const SMALL_SET_OMEGA_DELTAS: [(usize, usize, usize, Option<usize>); 15] = [
    (0, 0, 1, Some(0)),
    (0, 1, 1, None),
    (0, 2, 1, Some(0)),
    (0, 3, 1, Some(0)),
    (0, 4, 1, Some(0)),
    (1, 1, 1, None),
    (1, 2, 1, None),
    (1, 3, 1, None),
    (1, 4, 1, None),
    (2, 2, 1, Some(1)),
    (2, 3, 1, Some(1)),
    (2, 4, 1, Some(1)),
    (3, 3, 1, Some(1)),
    (3, 4, 1, Some(1)),
    (4, 4, 0, Some(1)),
];

/// `(L, ℓ)` grid of lift-connected surface codes.
pub const LCS_GRID: [(usize, usize); 8] = [(1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (2, 6), (3, 5), (3, 6)];

/// Sorted ancilla ratios of the three individual Z merges on LCS(1,3), to two decimals.
pub const LCS_1_3_RATIOS: [f64; 3] = [0.1, 0.17, 0.17];

/// Existence bound on the ancilla ratio of an individual LCS(1,3) merge.
pub const LCS_RATIO_BOUND: f64 = 0.2;

/// One surface-code comparison row: `(L, ℓ, n_initial, ancilla, total)`.
pub type SurfaceRow = (usize, usize, usize, usize, usize);

/// Surface-code cost of a single merge next to each LCS grid point.
pub const SURFACE_MERGE_ROWS: [SurfaceRow; 8] = [
    (1, 3, 78, 2, 80),
    (1, 4, 104, 2, 106),
    (1, 5, 130, 2, 132),
    (2, 4, 200, 3, 203),
    (2, 5, 410, 4, 414),
    (2, 6, 492, 4, 496),
    (3, 5, 410, 4, 414),
    (3, 6, 732, 5, 737),
];

/// Surface-code cost of `ℓ` parallel merges, as published.
pub const SURFACE_PARALLEL_ROWS: [SurfaceRow; 8] = [
    (1, 3, 78, 6, 84),
    (1, 4, 104, 6, 110),
    (1, 5, 130, 6, 136),
    (2, 4, 200, 12, 212),
    (2, 5, 410, 20, 430),
    (2, 6, 492, 24, 416),
    (3, 5, 410, 20, 430),
    (3, 6, 732, 30, 762),
];

/// Gross code reference counts.
pub mod gross {
    pub const N: usize = 144;
    pub const K: usize = 12;
    pub const OMEGA: usize = 6;
    pub const DISTANCE: usize = 12;
    pub const RIS_TRIALS: usize = 10_000;
    /// Same-block external Z merge at r=1.
    pub const MERGE_NEW_QUBITS: usize = 18;
    pub const MERGE_OMEGA: usize = 7;
    /// Single-qubit X measurement of an unprimed logical at r=3: data, checks.
    pub const MEASURE_R3: (usize, usize) = (78, 72);
    /// Single-qubit X measurement of a primed logical at r=1: data, checks.
    pub const MEASURE_R1: (usize, usize) = (18, 12);
    /// Feasible internal merges among the 12 translates of each family:
    /// X unprimed, X primed, Z unprimed, Z primed.
    pub const INTERNAL_FEASIBLE: [usize; 4] = [12, 0, 3, 12];
}

//! External merges, internal merges and single-qubit logical measurements.
//!
//! Every operation is carried out in the Z basis; X-basis operations dualize
//! the input, run the Z-basis operation and dualize the result.
//!
//! Index layout of a result: host qubits and checks keep their indices, gadget
//! qubits and checks follow in gadget order with the glued copies removed.

use serde::{Deserialize, Serialize};

use crate::codes::{Basis, CssCode, LogicalBasis, LogicalSubcomplex, SubsystemCode};
use crate::error::{Error, Result};
use crate::f2::{quotient_basis, BitMatrix, BitVec, Echelon};
use crate::products::{gadget_tensor, Gadget};

use super::colimit::{coequalise, ChainInclusion};
use super::span::{find_monic_span, MonicSpan};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Operation {
    ExternalMerge,
    InternalMerge,
    SingleQubitMeasure,
}

/// Everything produced by a merge or measurement.
#[derive(Clone, Debug)]
pub struct MergeOutcome {
    pub operation: Operation,
    pub basis: Basis,
    pub depth: usize,
    pub code: CssCode,
    /// Old qubit (row) to new qubit (column); one 1 per row.
    pub inclusion: BitMatrix,
    pub new_qubits: Vec<usize>,
    pub new_z_checks: Vec<usize>,
    pub new_x_checks: Vec<usize>,
    /// Logicals inherited from the initial code(s).
    pub old_logicals: LogicalBasis,
    /// Logicals introduced by the gluing; these are the gauge qubits.
    pub new_logicals: LogicalBasis,
    pub subsystem: SubsystemCode,
    /// Qubit count of the initial code(s).
    pub n_before: usize,
    /// ω of the initial code(s).
    pub omega_before: usize,
}

impl MergeOutcome {
    /// Image of an initial-code vector in the merged code.
    pub fn push_forward(&self, v: &BitVec) -> BitVec {
        let map: Vec<usize> = (0..self.n_before).map(|q| self.inclusion.row(q).support()[0]).collect();
        v.embed(&map, self.code.n())
    }

    fn dualize(self) -> Self {
        let subsystem = SubsystemCode {
            base: self.subsystem.base.dualize(),
            gauge_z: self.subsystem.gauge_x,
            gauge_x: self.subsystem.gauge_z,
        };
        Self {
            basis: self.basis.dual(),
            code: self.code.dualize(),
            new_z_checks: self.new_x_checks,
            new_x_checks: self.new_z_checks,
            old_logicals: self.old_logicals.dualize(),
            new_logicals: self.new_logicals.dualize(),
            subsystem,
            ..self
        }
    }
}

/// A Z-basis gluing in progress: the host grows by one gadget per step.
struct Gluing {
    code: CssCode,
    n_before: usize,
    mx_before: usize,
    mz_before: usize,
    omega_before: usize,
    /// Initial qubit to current qubit.
    qubit_map: Vec<usize>,
    /// Initial X check to current X check.
    check_map: Vec<usize>,
}

impl Gluing {
    fn new(code: CssCode) -> Self {
        let (n, mx) = (code.n(), code.px().rows());
        Self {
            n_before: n,
            mx_before: mx,
            mz_before: code.pz().rows(),
            omega_before: code.omega(),
            qubit_map: (0..n).collect(),
            check_map: (0..mx).collect(),
            code,
        }
    }

    fn host_inclusion(&self, qubits: &[usize], checks: &[usize]) -> ChainInclusion {
        ChainInclusion {
            qubits: qubits.iter().map(|&q| self.qubit_map[q]).collect(),
            checks: checks.iter().map(|&c| self.check_map[c]).collect(),
        }
    }

    /// Appends `gadget` and identifies `host` with the gadget copy `local`.
    fn attach(&mut self, v: &BitMatrix, gadget: &CssCode, host: ChainInclusion, local: ChainInclusion) -> Result<()> {
        let (n, mx) = (self.code.n(), self.code.px().rows());
        self.code = self.code.direct_sum(gadget);
        let q = coequalise(&self.code, v, &host, &local.offset(n, mx))?;
        self.apply(&q.qubit_map, &q.check_map);
        self.code = q.code;
        Ok(())
    }

    /// Glues `(P ⊗ V)` between two host copies of `v`: copy 0 onto `first`, copy `r` onto `second`.
    fn merge(
        &mut self,
        v: &LogicalSubcomplex,
        first: (&[usize], &[usize]),
        second: (&[usize], &[usize]),
        r: usize,
    ) -> Result<()> {
        let gadget = gadget_tensor(Gadget::Merge, v, r)?;
        let (q, c) = (v.num_qubits(), v.num_checks());
        let (n, mx) = (self.code.n(), self.code.px().rows());
        let copy = |p: usize| ChainInclusion {
            qubits: (0..q).map(|j| n + p * q + j).collect(),
            checks: (0..c).map(|i| mx + p * c + i).collect(),
        };
        let a = self.host_inclusion(first.0, first.1);
        let b = self.host_inclusion(second.0, second.1);
        self.code = self.code.direct_sum(&gadget);
        let q1 = coequalise(&self.code, &v.matrix, &a, &copy(0))?;
        self.apply(&q1.qubit_map, &q1.check_map);
        self.code = q1.code;
        let relabel = |f: ChainInclusion| ChainInclusion {
            qubits: f.qubits.iter().map(|&x| q1.qubit_map[x]).collect(),
            checks: f.checks.iter().map(|&x| q1.check_map[x]).collect(),
        };
        let q2 = coequalise(&self.code, &v.matrix, &relabel(b), &relabel(copy(r)))?;
        self.apply(&q2.qubit_map, &q2.check_map);
        self.code = q2.code;
        Ok(())
    }

    fn apply(&mut self, qubits: &[usize], checks: &[usize]) {
        for m in self.qubit_map.iter_mut() {
            *m = qubits[*m];
        }
        for m in self.check_map.iter_mut() {
            *m = checks[*m];
        }
    }

    /// Glues `(V ⊗ S)` onto one host copy of `v` through its first copy.
    fn measure(&mut self, v: &LogicalSubcomplex, r: usize) -> Result<()> {
        let gadget = gadget_tensor(Gadget::Measure, v, r)?;
        let (q, c) = (v.num_qubits(), v.num_checks());
        let first = ChainInclusion { qubits: (0..q).map(|j| c * r + j * r).collect(), checks: (0..c).map(|i| i * r).collect() };
        let host = self.host_inclusion(&v.qubit_map, &v.check_map);
        self.attach(&v.matrix, &gadget, host, first)
    }

    /// Assembles the outcome. `initial_z` are Z logicals of the initial code(s),
    /// `trivial` are initial vectors that must now be Z stabilizers.
    fn finish(self, operation: Operation, depth: usize, initial_z: &[BitVec], trivial: &[BitVec]) -> Result<MergeOutcome> {
        let code = self.code;
        let n = code.n();
        let mut inclusion = BitMatrix::zeros(self.n_before, n);
        for (q, &t) in self.qubit_map.iter().enumerate() {
            inclusion.set(q, t, true);
        }
        let stabilizers = code.pz().row_space_basis();
        let stabilizer_span = Echelon::from_vectors(n, &stabilizers);
        for v in trivial {
            assert!(stabilizer_span.contains(&v.embed(&self.qubit_map, n)), "glued logical must become a stabilizer");
        }
        let pushed: Vec<BitVec> = initial_z.iter().map(|v| v.embed(&self.qubit_map, n)).collect();
        let mut with_pushed = stabilizers.clone();
        with_pushed.extend(pushed.iter().cloned());
        let old_z = quotient_basis(&with_pushed, &stabilizers)?;
        let mut with_old = stabilizers.clone();
        with_old.extend(old_z.iter().cloned());
        let new_z = quotient_basis(&code.px().kernel_basis(), &with_old)?;
        let mut all_z = old_z.clone();
        all_z.extend(new_z.iter().cloned());
        let x = code.dual_basis(&all_z, Basis::Z)?;
        let (old_x, new_x) = x.split_at(old_z.len());
        let subsystem = SubsystemCode { base: code.clone(), gauge_z: new_z.clone(), gauge_x: new_x.to_vec() };
        Ok(MergeOutcome {
            operation,
            basis: Basis::Z,
            depth,
            new_qubits: (self.n_before..n).collect(),
            new_z_checks: (self.mz_before..code.pz().rows()).collect(),
            new_x_checks: (self.mx_before..code.px().rows()).collect(),
            inclusion,
            old_logicals: LogicalBasis { z_logicals: old_z, x_logicals: old_x.to_vec() },
            new_logicals: LogicalBasis { z_logicals: new_z, x_logicals: new_x.to_vec() },
            subsystem,
            n_before: self.n_before,
            omega_before: self.omega_before,
            code,
        })
    }
}

fn in_basis(code: &CssCode, basis: Basis) -> CssCode {
    match basis {
        Basis::Z => code.clone(),
        Basis::X => code.dualize(),
    }
}

fn out_of_basis(outcome: MergeOutcome, basis: Basis) -> MergeOutcome {
    match basis {
        Basis::Z => outcome,
        Basis::X => outcome.dualize(),
    }
}

/// Host qubits and checks of `second` matched to the columns and rows of `first`.
fn spanned(first: &LogicalSubcomplex, second: &LogicalSubcomplex, span: &MonicSpan) -> (Vec<usize>, Vec<usize>) {
    let qubits = span.qubit_bijection.iter().map(|&j| second.qubit_map[j]).collect();
    let checks = span.check_bijection.iter().map(|&i| second.check_map[i]).collect();
    debug_assert!(span.is_valid(&first.matrix, &second.matrix));
    (qubits, checks)
}

fn check_depth(r: usize) -> Result<()> {
    if r == 0 {
        Err(Error::InvalidParameter("depth must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// One pair of logicals for a (parallel) external merge.
#[derive(Clone, Debug)]
pub struct MergePair {
    pub u: BitVec,
    pub v: BitVec,
    /// Known span from `u`'s subcomplex to `v`'s; searched for when absent.
    pub span: Option<MonicSpan>,
}

impl MergePair {
    pub fn new(u: BitVec, v: BitVec) -> Self {
        Self { u, v, span: None }
    }
}

/// Parity measurement of `u` in `c` with `v` in `d` by a depth-`r` gadget.
///
/// Returns `None` when the two logical subcomplexes admit no monic span.
pub fn external_merge(c: &CssCode, d: &CssCode, u: &BitVec, v: &BitVec, basis: Basis, r: usize) -> Result<Option<MergeOutcome>> {
    parallel_external_merge(c, d, &[MergePair::new(u.clone(), v.clone())], basis, r)
}

/// Like [`external_merge`] with a caller-supplied span.
pub fn external_merge_with_span(
    c: &CssCode,
    d: &CssCode,
    u: &BitVec,
    v: &BitVec,
    span: &MonicSpan,
    basis: Basis,
    r: usize,
) -> Result<Option<MergeOutcome>> {
    let pair = MergePair { u: u.clone(), v: v.clone(), span: Some(span.clone()) };
    parallel_external_merge(c, d, &[pair], basis, r)
}

/// Merges every pair at a common depth against one accumulated code.
pub fn parallel_external_merge(
    c: &CssCode,
    d: &CssCode,
    pairs: &[MergePair],
    basis: Basis,
    r: usize,
) -> Result<Option<MergeOutcome>> {
    check_depth(r)?;
    let (c, d) = (in_basis(c, basis), in_basis(d, basis));
    let (nc, mxc) = (c.n(), c.px().rows());
    let mut plans = Vec::with_capacity(pairs.len());
    for pair in pairs {
        let vu = c.restricted_matrix(&pair.u, Basis::Z)?;
        let vv = d.restricted_matrix(&pair.v, Basis::Z)?;
        let span = match &pair.span {
            Some(s) if s.is_valid(&vu.matrix, &vv.matrix) => s.clone(),
            Some(_) => return Err(Error::InvalidInclusion("supplied span does not match the subcomplexes".into())),
            None => match find_monic_span(&vu, &vv) {
                Some(s) => s,
                None => return Ok(None),
            },
        };
        let (q, ch) = spanned(&vu, &vv, &span);
        let shifted = (q.iter().map(|x| x + nc).collect::<Vec<_>>(), ch.iter().map(|x| x + mxc).collect::<Vec<_>>());
        plans.push((vu, shifted));
    }
    let mut gluing = Gluing::new(c.direct_sum(&d));
    let mut trivial = Vec::new();
    for (vu, (q, ch)) in &plans {
        gluing.merge(vu, (&vu.qubit_map, &vu.check_map), (q, ch), r)?;
        let mut both = BitVec::from_support(nc + d.n(), &vu.qubit_map);
        for &x in q {
            both.flip(x);
        }
        trivial.push(both);
    }
    let zeros_c = BitVec::zeros(nc);
    let zeros_d = BitVec::zeros(d.n());
    let mut initial: Vec<BitVec> = c.logical_basis().z_logicals.iter().map(|z| z.concat(&zeros_d)).collect();
    initial.extend(d.logical_basis().z_logicals.iter().map(|z| zeros_c.concat(z)));
    let outcome = gluing.finish(Operation::ExternalMerge, r, &initial, &trivial)?;
    Ok(Some(out_of_basis(outcome, basis)))
}

/// Parity measurement of two logicals of the same code.
///
/// Returns `None` when the subcomplexes share a qubit or a check, or admit no span.
pub fn internal_merge(c: &CssCode, u: &BitVec, v: &BitVec, basis: Basis, r: usize) -> Result<Option<MergeOutcome>> {
    check_depth(r)?;
    let c = in_basis(c, basis);
    let vu = c.restricted_matrix(u, Basis::Z)?;
    let vv = c.restricted_matrix(v, Basis::Z)?;
    if c.is_stabilizer(&u.xor(v), Basis::Z)? {
        return Err(Error::Homologous);
    }
    if vu.qubit_map.iter().any(|q| vv.qubit_map.contains(q)) || vu.check_map.iter().any(|x| vv.check_map.contains(x)) {
        return Ok(None);
    }
    let Some(span) = find_monic_span(&vu, &vv) else {
        return Ok(None);
    };
    let (q, ch) = spanned(&vu, &vv, &span);
    let mut gluing = Gluing::new(c.clone());
    gluing.merge(&vu, (&vu.qubit_map, &vu.check_map), (&q, &ch), r)?;
    let outcome = gluing.finish(Operation::InternalMerge, r, &c.logical_basis().z_logicals, &[u.xor(v)])?;
    Ok(Some(out_of_basis(outcome, basis)))
}

/// Single-qubit logical measurement of `v` with a depth-`r` gadget.
pub fn single_qubit_measure(c: &CssCode, v: &BitVec, basis: Basis, r: usize) -> Result<MergeOutcome> {
    parallel_single_qubit_measure(c, std::slice::from_ref(v), basis, r)
}

/// Measures several logicals, one gadget each, against one accumulated code.
pub fn parallel_single_qubit_measure(c: &CssCode, logicals: &[BitVec], basis: Basis, r: usize) -> Result<MergeOutcome> {
    check_depth(r)?;
    let c = in_basis(c, basis);
    let subs = logicals.iter().map(|v| c.restricted_matrix(v, Basis::Z)).collect::<Result<Vec<_>>>()?;
    let mut gluing = Gluing::new(c.clone());
    for sub in &subs {
        gluing.measure(sub, r)?;
    }
    let outcome = gluing.finish(Operation::SingleQubitMeasure, r, &c.logical_basis().z_logicals, logicals)?;
    Ok(out_of_basis(outcome, basis))
}

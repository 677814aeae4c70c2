//! CSS codes viewed as three-term chain complexes over F2.
//!
//! A code is the complex `F2^{m_Z} --∂2--> F2^n --∂1--> F2^{m_X}` with
//! `∂2 = P_Zᵀ` and `∂1 = P_X`. Z logicals are classes in `ker P_X / im P_Zᵀ`
//! and X logicals are classes in `ker P_Z / im P_Xᵀ`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::f2::{invert, quotient_basis, BitMatrix, BitVec, Echelon};

/// Pauli type of a logical operator or surgery.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Z,
    X,
}

impl Basis {
    pub fn dual(self) -> Basis {
        match self {
            Basis::Z => Basis::X,
            Basis::X => Basis::Z,
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Z => "z",
            Basis::X => "x",
        })
    }
}

impl std::str::FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "z" => Ok(Basis::Z),
            "x" => Ok(Basis::X),
            other => Err(Error::InvalidParameter(format!("unknown basis `{other}`"))),
        }
    }
}

/// Offending (X-check, Z-check) pairs with odd overlap.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<(usize, usize)>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A CSS code given by its two check matrices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CssCode {
    px: BitMatrix,
    pz: BitMatrix,
}

impl fmt::Debug for CssCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CssCode(n={}, m_x={}, m_z={})", self.n(), self.px.rows(), self.pz.rows())
    }
}

impl CssCode {
    /// Builds a code, rejecting mismatched widths and non-orthogonal checks.
    pub fn new(px: BitMatrix, pz: BitMatrix) -> Result<Self> {
        if px.cols() != pz.cols() {
            return Err(Error::DimensionMismatch { expected: px.cols(), found: pz.cols() });
        }
        let code = Self { px, pz };
        let report = code.validate();
        if report.is_ok() {
            Ok(code)
        } else {
            Err(Error::NotOrthogonal { violations: report.violations.len() })
        }
    }

    /// Builds a code without checking orthogonality.
    pub fn new_unchecked(px: BitMatrix, pz: BitMatrix) -> Self {
        assert_eq!(px.cols(), pz.cols(), "check matrices must have equal width");
        Self { px, pz }
    }

    pub fn px(&self) -> &BitMatrix {
        &self.px
    }

    pub fn pz(&self) -> &BitMatrix {
        &self.pz
    }

    pub fn n(&self) -> usize {
        self.px.cols()
    }

    /// The matrix whose kernel contains the logicals of `basis`.
    pub fn check(&self, basis: Basis) -> &BitMatrix {
        match basis {
            Basis::Z => &self.px,
            Basis::X => &self.pz,
        }
    }

    /// The matrix whose row space holds the stabilizers of `basis`.
    pub fn stabilizers(&self, basis: Basis) -> &BitMatrix {
        match basis {
            Basis::Z => &self.pz,
            Basis::X => &self.px,
        }
    }

    pub fn validate(&self) -> ValidationReport {
        let product = self.px.mul(&self.pz.transpose());
        let mut violations = Vec::new();
        for i in 0..product.rows() {
            violations.extend(product.row(i).support().into_iter().map(|j| (i, j)));
        }
        ValidationReport { violations }
    }

    pub fn num_logicals(&self) -> usize {
        self.n() - self.px.rank() - self.pz.rank()
    }

    /// Swaps the roles of the two check matrices.
    pub fn dualize(&self) -> CssCode {
        Self { px: self.pz.clone(), pz: self.px.clone() }
    }

    /// Maximum row or column weight over both check matrices.
    pub fn omega(&self) -> usize {
        self.px.max_weight().max(self.pz.max_weight())
    }

    /// Disjoint union; the qubits and checks of `other` follow those of `self`.
    pub fn direct_sum(&self, other: &CssCode) -> CssCode {
        Self { px: self.px.block_diag(&other.px), pz: self.pz.block_diag(&other.pz) }
    }

    fn check_len(&self, v: &BitVec) -> Result<()> {
        if v.len() == self.n() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.n(), found: v.len() })
        }
    }

    pub fn is_logical(&self, v: &BitVec, basis: Basis) -> Result<bool> {
        self.check_len(v)?;
        if v.is_zero() || !self.check(basis).mul_vec(v).is_zero() {
            return Ok(false);
        }
        Ok(!Echelon::from_matrix_rows(self.stabilizers(basis)).contains(v))
    }

    /// True when `v` is a logical whose support contains no other kernel vector.
    pub fn is_irreducible(&self, v: &BitVec, basis: Basis) -> Result<bool> {
        if !self.is_logical(v, basis)? {
            return Ok(false);
        }
        let support = v.support();
        Ok(self.check(basis).select_columns(&support).rank() + 1 == support.len())
    }

    /// Whether `v` lies in the stabilizer span of `basis`.
    pub fn is_stabilizer(&self, v: &BitVec, basis: Basis) -> Result<bool> {
        self.check_len(v)?;
        Ok(Echelon::from_matrix_rows(self.stabilizers(basis)).contains(v))
    }

    /// The logical operator subcomplex of an irreducible logical.
    pub fn restricted_matrix(&self, v: &BitVec, basis: Basis) -> Result<LogicalSubcomplex> {
        if !self.is_irreducible(v, basis)? {
            return Err(if self.is_logical(v, basis)? { Error::NotIrreducible } else { Error::NotLogical });
        }
        let qubit_map = v.support();
        let columns = self.check(basis).select_columns(&qubit_map);
        let check_map: Vec<usize> = (0..columns.rows()).filter(|&i| columns.row_weight(i) > 0).collect();
        Ok(LogicalSubcomplex { matrix: columns.select_rows(&check_map), qubit_map, check_map, basis })
    }

    /// Homology representatives for `basis`, by Gaussian elimination.
    pub fn homology_basis(&self, basis: Basis) -> Vec<BitVec> {
        let kernel = self.check(basis).kernel_basis();
        let image = self.stabilizers(basis).row_vecs();
        quotient_basis(&kernel, &image).expect("stabilizers lie in the kernel of a valid code")
    }

    /// Paired logical bases with identity pairing matrix.
    pub fn logical_basis(&self) -> LogicalBasis {
        let z = self.homology_basis(Basis::Z);
        self.logical_basis_from_z(z).expect("the computed Z representatives form a basis")
    }

    /// Completes Z representatives of a full homology basis with the dual X basis.
    pub fn logical_basis_from_z(&self, z_logicals: Vec<BitVec>) -> Result<LogicalBasis> {
        let x_logicals = self.dual_basis(&z_logicals, Basis::Z)?;
        Ok(LogicalBasis { z_logicals, x_logicals })
    }

    /// Representatives of the opposite basis pairing to the identity with `reps`.
    ///
    /// `reps` must be a basis of the homology for `basis`.
    pub fn dual_basis(&self, reps: &[BitVec], basis: Basis) -> Result<Vec<BitVec>> {
        for v in reps {
            self.check_len(v)?;
        }
        let other = self.homology_basis(basis.dual());
        if reps.len() != other.len() {
            return Err(Error::NotAHomologyBasis);
        }
        let n = self.n();
        let pairing = BitMatrix::from_rows(reps, n).mul(&BitMatrix::from_rows(&other, n).transpose());
        let inverse = invert(&pairing).ok_or(Error::NotAHomologyBasis)?;
        let transformed = inverse.transpose().mul(&BitMatrix::from_rows(&other, n));
        Ok(transformed.row_vecs())
    }

    pub fn params(&self) -> CodeParams {
        CodeParams { n: self.n(), k: self.num_logicals(), d: None, d_z: None, d_x: None, omega: self.omega() }
    }
}

/// Paired homology and cohomology bases.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct LogicalBasis {
    pub z_logicals: Vec<BitVec>,
    pub x_logicals: Vec<BitVec>,
}

impl LogicalBasis {
    pub fn k(&self) -> usize {
        self.z_logicals.len()
    }

    pub fn get(&self, basis: Basis) -> &[BitVec] {
        match basis {
            Basis::Z => &self.z_logicals,
            Basis::X => &self.x_logicals,
        }
    }

    /// Matrix of `z_i · x_j`.
    pub fn pairing(&self) -> BitMatrix {
        let mut m = BitMatrix::zeros(self.z_logicals.len(), self.x_logicals.len());
        for (i, z) in self.z_logicals.iter().enumerate() {
            for (j, x) in self.x_logicals.iter().enumerate() {
                m.set(i, j, z.dot(x));
            }
        }
        m
    }

    /// Swaps the Z and X sides, matching [`CssCode::dualize`].
    pub fn dualize(&self) -> LogicalBasis {
        LogicalBasis { z_logicals: self.x_logicals.clone(), x_logicals: self.z_logicals.clone() }
    }
}

/// A CSS code with some logical qubits demoted to gauge qubits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsystemCode {
    pub base: CssCode,
    pub gauge_z: Vec<BitVec>,
    pub gauge_x: Vec<BitVec>,
}

impl SubsystemCode {
    pub fn new(base: CssCode, gauge_z: Vec<BitVec>, gauge_x: Vec<BitVec>) -> Result<Self> {
        for v in &gauge_z {
            if !base.is_logical(v, Basis::Z)? {
                return Err(Error::NotLogical);
            }
        }
        for v in &gauge_x {
            if !base.is_logical(v, Basis::X)? {
                return Err(Error::NotLogical);
            }
        }
        Ok(Self { base, gauge_z, gauge_x })
    }

    pub fn gauge(&self, basis: Basis) -> &[BitVec] {
        match basis {
            Basis::Z => &self.gauge_z,
            Basis::X => &self.gauge_x,
        }
    }

    /// Number of gauge qubits, taken as the larger of the two gauge spans.
    pub fn num_gauge(&self) -> usize {
        let n = self.base.n();
        let dim = |vs: &[BitVec]| Echelon::from_vectors(n, vs).dim();
        dim(&self.gauge_z).max(dim(&self.gauge_x))
    }

    /// Number of retained logical qubits.
    pub fn num_logicals(&self) -> usize {
        self.base.num_logicals() - self.num_gauge()
    }

    /// The CSS code whose `basis` logicals are the dressed logicals of `self`.
    pub fn dressed_code(&self, basis: Basis) -> Result<CssCode> {
        let n = self.base.n();
        match basis {
            Basis::Z => {
                let pz = self.base.pz().vstack(&BitMatrix::from_rows(&self.gauge_z, n));
                CssCode::new(self.base.px().clone(), pz)
            }
            Basis::X => {
                let px = self.base.px().vstack(&BitMatrix::from_rows(&self.gauge_x, n));
                CssCode::new(px, self.base.pz().clone())
            }
        }
    }
}

/// Summary parameters of a code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
    pub d_z: Option<usize>,
    pub d_x: Option<usize>,
    pub omega: usize,
}

/// The check matrix restricted to the support of an irreducible logical.
///
/// Columns follow ascending host qubit index; rows follow ascending host check
/// index with all-zero rows removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogicalSubcomplex {
    pub matrix: BitMatrix,
    /// Column to host qubit.
    pub qubit_map: Vec<usize>,
    /// Row to host check.
    pub check_map: Vec<usize>,
    pub basis: Basis,
}

impl LogicalSubcomplex {
    /// `|V_1|`, the number of qubits.
    pub fn num_qubits(&self) -> usize {
        self.matrix.cols()
    }

    /// `|V_0|`, the number of checks.
    pub fn num_checks(&self) -> usize {
        self.matrix.rows()
    }

    /// The logical this subcomplex was built from.
    pub fn logical(&self, n: usize) -> BitVec {
        BitVec::from_support(n, &self.qubit_map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hamming() -> BitMatrix {
        BitMatrix::from_dense(&[[0, 0, 0, 1, 1, 1, 1], [0, 1, 1, 0, 0, 1, 1], [1, 0, 1, 0, 1, 0, 1]])
    }

    fn steane() -> CssCode {
        CssCode::new(hamming(), hamming()).unwrap()
    }

    #[test]
    fn steane_is_valid_and_encodes_one_qubit() {
        let c = steane();
        assert!(c.validate().is_ok());
        assert_eq!(c.num_logicals(), 1);
        let lb = c.logical_basis();
        assert_eq!(lb.k(), 1);
        assert_eq!(lb.pairing(), BitMatrix::identity(1));
        assert_eq!(c.dualize(), c);
    }

    #[test]
    fn odd_overlap_is_reported() {
        let m = BitMatrix::from_dense(&[[1, 1, 0], [0, 1, 1]]);
        let c = CssCode::new_unchecked(m.clone(), m.clone());
        assert!(!c.validate().is_ok());
        assert!(matches!(CssCode::new(m.clone(), m), Err(Error::NotOrthogonal { .. })));
        let empty = CssCode::new(BitMatrix::zeros(0, 4), BitMatrix::zeros(0, 4)).unwrap();
        assert!(empty.validate().is_ok());
        assert_eq!(empty.num_logicals(), 4);
    }

    #[test]
    fn steane_weight_three_logical_restricts_to_repetition() {
        let c = steane();
        let v = BitVec::from_support(7, &[0, 1, 2]);
        assert!(c.is_logical(&v, Basis::Z).unwrap());
        assert!(c.is_irreducible(&v, Basis::Z).unwrap());
        let sub = c.restricted_matrix(&v, Basis::Z).unwrap();
        assert_eq!(sub.matrix.shape(), (2, 3));
        assert_eq!(sub.matrix.rank(), 2);
        assert_eq!(sub.matrix.kernel_basis(), vec![BitVec::ones(3)]);
        assert_eq!(sub.qubit_map, vec![0, 1, 2]);
        let stab = c.pz().row(0);
        assert!(!c.is_logical(&stab, Basis::Z).unwrap());
        assert_eq!(c.restricted_matrix(&stab, Basis::Z), Err(Error::NotLogical));
    }

    #[test]
    fn dual_basis_rejects_non_basis() {
        let c = steane();
        let zero = BitVec::zeros(7);
        assert_eq!(c.dual_basis(&[zero], Basis::Z), Err(Error::NotAHomologyBasis));
        assert_eq!(c.dual_basis(&[], Basis::Z), Err(Error::NotAHomologyBasis));
    }
}

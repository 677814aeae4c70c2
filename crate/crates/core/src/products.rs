//! Code constructors: classical codes, tensor and lifted products, gadget
//! complexes and the LCS, GB and BB families.
//!
//! A classical code is a one-step complex `C_1 -> C_0` given by its check
//! matrix. The tensor product of `A: C_1 -> C_0` and `B: D_1 -> D_0` has
//!
//! ```text
//! T_1 = C_0⊗D_1 ⊕ C_1⊗D_0
//! P_X = ( id⊗B | A⊗id )
//! P_Z = ( Aᵀ⊗id | id⊗Bᵀ )
//! ```
//!
//! with Kronecker indices `c * |D| + d`. The lifted product uses the same
//! block layout with every ring entry expanded to a permutation-sum matrix.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::codes::{CssCode, LogicalSubcomplex};
use crate::error::{Error, Result};
use crate::f2::BitMatrix;

/// A classical code given by its check matrix `C_1 -> C_0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalCode {
    pub check: BitMatrix,
}

impl ClassicalCode {
    pub fn new(check: BitMatrix) -> Self {
        Self { check }
    }

    /// Block length `n`, the dimension of `C_1`.
    pub fn n(&self) -> usize {
        self.check.cols()
    }

    pub fn k(&self) -> usize {
        self.n() - self.check.rank()
    }

    /// Block length of the transpose code.
    pub fn n_t(&self) -> usize {
        self.check.rows()
    }

    pub fn k_t(&self) -> usize {
        self.n_t() - self.check.rank()
    }

    pub fn transpose(&self) -> ClassicalCode {
        Self { check: self.check.transpose() }
    }

    /// The `(n-1) × n` check matrix of the length-`n` repetition code.
    pub fn repetition(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter("repetition code needs n ≥ 2".into()));
        }
        let supports: Vec<Vec<usize>> = (0..n - 1).map(|i| vec![i, i + 1]).collect();
        Ok(Self::new(BitMatrix::from_row_supports(n - 1, n, &supports)))
    }
}

impl From<&LogicalSubcomplex> for ClassicalCode {
    fn from(v: &LogicalSubcomplex) -> Self {
        Self::new(v.matrix.clone())
    }
}

/// Tensor product of two classical codes.
pub fn tensor_product(a: &ClassicalCode, b: &ClassicalCode) -> CssCode {
    let lifted = |m: &BitMatrix| RingMatrix::from_f2(m);
    lifted_product(&lifted(&a.check), &lifted(&b.check)).expect("F2 entries share the trivial ring")
}

/// Depth-`r` path gadget: the `(r+1) × r` incidence matrix of a path graph.
pub fn path_code(r: usize) -> Result<ClassicalCode> {
    if r == 0 {
        return Err(Error::InvalidParameter("depth must be at least 1".into()));
    }
    let mut m = BitMatrix::zeros(r + 1, r);
    for j in 0..r {
        m.set(j, j, true);
        m.set(j + 1, j, true);
    }
    Ok(ClassicalCode::new(m))
}

/// Depth-`r` measurement gadget: a path whose last vertex has been removed.
pub fn truncated_path_code(r: usize) -> Result<ClassicalCode> {
    if r == 0 {
        return Err(Error::InvalidParameter("depth must be at least 1".into()));
    }
    let mut m = BitMatrix::zeros(r, r);
    for j in 0..r {
        m.set(j, j, true);
        if j + 1 < r {
            m.set(j + 1, j, true);
        }
    }
    Ok(ClassicalCode::new(m))
}

/// Which gadget complex to build around a logical subcomplex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gadget {
    /// `(P ⊗ V)` for merges. Copies of `V_1` are the first `(r+1)·|V_1|` qubits,
    /// copy `p` at offset `p·|V_1|`; copy `p` of `V_0` is X-checks `p·|V_0|..`.
    Merge,
    /// `(V ⊗ S)` for single-qubit measurement. Copy `s` of `V_1` holds qubits
    /// `|V_0|·r + i·r + s` and copy `s` of `V_0` holds X-checks `c·r + s`.
    Measure,
}

/// Builds the gadget complex of depth `r` around `v`.
pub fn gadget_tensor(kind: Gadget, v: &LogicalSubcomplex, r: usize) -> Result<CssCode> {
    let vc = ClassicalCode::from(v);
    Ok(match kind {
        Gadget::Merge => tensor_product(&path_code(r)?, &vc),
        Gadget::Measure => tensor_product(&vc, &truncated_path_code(r)?),
    })
}

/// Element of `F2[x, y] / (x^ℓ − 1, y^m − 1)`, stored as its set of monomials.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BivariatePoly {
    pub ell: usize,
    pub m: usize,
    terms: BTreeSet<(usize, usize)>,
}

impl BivariatePoly {
    pub fn zero(ell: usize, m: usize) -> Self {
        assert!(ell >= 1 && m >= 1, "moduli must be positive");
        Self { ell, m, terms: BTreeSet::new() }
    }

    pub fn one(ell: usize, m: usize) -> Self {
        Self::from_terms(ell, m, [(0, 0)])
    }

    /// Sums monomials `x^i y^j`; repeated monomials cancel.
    pub fn from_terms<I: IntoIterator<Item = (usize, usize)>>(ell: usize, m: usize, terms: I) -> Self {
        let mut p = Self::zero(ell, m);
        for (i, j) in terms {
            p.toggle(i % ell, j % m);
        }
        p
    }

    fn toggle(&mut self, i: usize, j: usize) {
        if !self.terms.remove(&(i, j)) {
            self.terms.insert((i, j));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.terms.iter().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(Self::from_terms(self.ell, self.m, self.terms().chain(other.terms())))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let products = self.terms().flat_map(|(a, b)| other.terms().map(move |(c, d)| (a + c, b + d)));
        Ok(Self::from_terms(self.ell, self.m, products))
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if (self.ell, self.m) == (other.ell, other.m) {
            Ok(())
        } else {
            Err(Error::ModulusMismatch)
        }
    }

    /// The `ℓm × ℓm` matrix with `x = S_ℓ ⊗ I_m` and `y = I_ℓ ⊗ S_m`.
    ///
    /// Row `i·m + j` of `x^a y^b` has its one at column `((i+a) mod ℓ)·m + (j+b) mod m`.
    pub fn matrix(&self) -> BitMatrix {
        let size = self.ell * self.m;
        let mut out = BitMatrix::zeros(size, size);
        for (a, b) in self.terms() {
            for i in 0..self.ell {
                for j in 0..self.m {
                    out.flip(i * self.m + j, ((i + a) % self.ell) * self.m + (j + b) % self.m);
                }
            }
        }
        out
    }

    /// Parses comma-separated monomials such as `x3,y1,y2` or `1,x1y2`; `0` is the zero polynomial.
    pub fn parse(s: &str, ell: usize, m: usize) -> Result<Self> {
        if ell == 0 || m == 0 {
            return Err(Error::InvalidParameter("moduli must be positive".into()));
        }
        if s.trim() == "0" {
            return Ok(Self::zero(ell, m));
        }
        let mut terms = Vec::new();
        for token in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            terms.push(parse_monomial(token)?);
        }
        Ok(Self::from_terms(ell, m, terms))
    }
}

fn parse_monomial(token: &str) -> Result<(usize, usize)> {
    let bad = || Error::InvalidParameter(format!("bad monomial `{token}`"));
    if token == "1" {
        return Ok((0, 0));
    }
    let (mut i, mut j) = (0, 0);
    let mut rest = token;
    while let Some(var) = rest.chars().next() {
        let digits: String = rest[1..].chars().take_while(char::is_ascii_digit).collect();
        let exponent = if digits.is_empty() { 1 } else { digits.parse().map_err(|_| bad())? };
        match var {
            'x' => i += exponent,
            'y' => j += exponent,
            _ => return Err(bad()),
        }
        rest = &rest[1 + digits.len()..];
    }
    Ok((i, j))
}

impl fmt::Debug for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(a, b)| match (a, b) {
                (0, 0) => "1".to_string(),
                (a, 0) => format!("x{a}"),
                (0, b) => format!("y{b}"),
                (a, b) => format!("x{a}y{b}"),
            })
            .collect();
        f.write_str(&parts.join(","))
    }
}

/// Element of `F2[x] / (x^ℓ − 1)`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CirculantPoly {
    pub ell: usize,
    terms: BTreeSet<usize>,
}

impl CirculantPoly {
    pub fn from_exponents<I: IntoIterator<Item = usize>>(ell: usize, exponents: I) -> Self {
        assert!(ell >= 1, "modulus must be positive");
        let mut terms = BTreeSet::new();
        for e in exponents {
            if !terms.remove(&(e % ell)) {
                terms.insert(e % ell);
            }
        }
        Self { ell, terms }
    }

    pub fn exponents(&self) -> impl Iterator<Item = usize> + '_ {
        self.terms.iter().copied()
    }

    pub fn to_bivariate(&self) -> BivariatePoly {
        BivariatePoly::from_terms(self.ell, 1, self.exponents().map(|e| (e, 0)))
    }

    /// `ℓ × ℓ` circulant; row `i` has ones at columns `(i + e) mod ℓ`.
    pub fn matrix(&self) -> BitMatrix {
        self.to_bivariate().matrix()
    }

    /// Parses `1,x1,x14` style input; `y` is rejected.
    pub fn parse(s: &str, ell: usize) -> Result<Self> {
        let p = BivariatePoly::parse(s, ell, 1)?;
        if s.contains('y') {
            return Err(Error::InvalidParameter("circulant polynomials use only x".into()));
        }
        Ok(Self::from_exponents(ell, p.terms().map(|(a, _)| a)))
    }
}

impl fmt::Debug for CirculantPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_bivariate())
    }
}

/// Matrix over `F2[x, y] / (x^ℓ − 1, y^m − 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingMatrix {
    pub rows: usize,
    pub cols: usize,
    pub ell: usize,
    pub m: usize,
    entries: Vec<BivariatePoly>,
}

impl RingMatrix {
    pub fn zeros(rows: usize, cols: usize, ell: usize, m: usize) -> Self {
        Self { rows, cols, ell, m, entries: vec![BivariatePoly::zero(ell, m); rows * cols] }
    }

    pub fn identity(n: usize, ell: usize, m: usize) -> Self {
        let mut out = Self::zeros(n, n, ell, m);
        for i in 0..n {
            out.set(i, i, BivariatePoly::one(ell, m));
        }
        out
    }

    /// Embeds an F2 matrix over the trivial ring `ℓ = m = 1`.
    pub fn from_f2(a: &BitMatrix) -> Self {
        let mut out = Self::zeros(a.rows(), a.cols(), 1, 1);
        for i in 0..a.rows() {
            for j in a.row(i).support() {
                out.set(i, j, BivariatePoly::one(1, 1));
            }
        }
        out
    }

    pub fn get(&self, i: usize, j: usize) -> &BivariatePoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: BivariatePoly) {
        assert_eq!((p.ell, p.m), (self.ell, self.m), "entry from a different ring");
        self.entries[i * self.cols + j] = p;
    }

    /// Entry-wise transpose; ring elements are not conjugated.
    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows, self.ell, self.m);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Transpose with every monomial inverted, so that `λ(Mᴴ) = λ(M)ᵀ`.
    pub fn conjugate_transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows, self.ell, self.m);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let p = self.get(i, j);
                let inverted = p.terms().map(|(a, b)| ((self.ell - a) % self.ell, (self.m - b) % self.m));
                out.set(j, i, BivariatePoly::from_terms(self.ell, self.m, inverted));
            }
        }
        out
    }

    /// Expands each entry to its `ℓm × ℓm` matrix.
    pub fn lift(&self) -> BitMatrix {
        let s = self.ell * self.m;
        let mut out = BitMatrix::zeros(self.rows * s, self.cols * s);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let p = self.get(i, j);
                if !p.is_zero() {
                    out.paste(&p.matrix(), i * s, j * s);
                }
            }
        }
        out
    }

    fn kron(&self, other: &Self) -> Result<Self> {
        if (self.ell, self.m) != (other.ell, other.m) {
            return Err(Error::ModulusMismatch);
        }
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols, self.ell, self.m);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * other.rows + k, j * other.cols + l, a.mul(b)?);
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Tensor product of two one-step complexes over a group-algebra ring, lifted to F2.
///
/// `∂_1 = ( id⊗B | A⊗id )` and `∂_2 = ( A⊗id ; id⊗B )` over the ring, then
/// `P_X = λ(∂_1)` and `P_Z = λ(∂_2)ᵀ`.
pub fn lifted_product(a: &RingMatrix, b: &RingMatrix) -> Result<CssCode> {
    if (a.ell, a.m) != (b.ell, b.m) {
        return Err(Error::ModulusMismatch);
    }
    let id = |n| RingMatrix::identity(n, a.ell, a.m);
    let (c0, c1, d0, d1) = (a.rows, a.cols, b.rows, b.cols);
    let px = id(c0).kron(b)?.lift().hstack(&a.kron(&id(d0))?.lift());
    let boundary2 = a.kron(&id(d1))?.lift().vstack(&id(c1).kron(b)?.lift());
    CssCode::new(px, boundary2.transpose())
}

/// Lift-connected surface code `LCS(L, ℓ)`.
///
/// `B` is `L × (L+1)` over `F2[x]/(x^ℓ − 1)` with `B_{i,i} = 1` and
/// `B_{i,i+1} = 1 + x`, and the code is the lifted product of `Bᵀ` with `B`.
pub fn lcs_code(l: usize, ell: usize) -> Result<CssCode> {
    if l < 1 || ell < 2 {
        return Err(Error::InvalidParameter("LCS needs L ≥ 1 and ℓ ≥ 2".into()));
    }
    let mut b = RingMatrix::zeros(l, l + 1, ell, 1);
    for i in 0..l {
        b.set(i, i, BivariatePoly::one(ell, 1));
        b.set(i, i + 1, BivariatePoly::from_terms(ell, 1, [(0, 0), (1, 0)]));
    }
    lifted_product(&b.conjugate_transpose(), &b)
}

/// Two-block code with `P_X = (A | B)` and `P_Z = (Bᵀ | Aᵀ)`.
fn two_block(a: &BitMatrix, b: &BitMatrix) -> Result<CssCode> {
    CssCode::new(a.hstack(b), b.transpose().hstack(&a.transpose()))
}

/// Generalised bicycle code over `F2[x]/(x^ℓ − 1)`.
pub fn gb_code(ell: usize, a: &CirculantPoly, b: &CirculantPoly) -> Result<CssCode> {
    if a.ell != ell || b.ell != ell {
        return Err(Error::ModulusMismatch);
    }
    two_block(&a.matrix(), &b.matrix())
}

/// Bivariate bicycle code; qubits `0..ℓm` form the unprimed block.
pub fn bb_code(ell: usize, m: usize, a: &BivariatePoly, b: &BivariatePoly) -> Result<CssCode> {
    if (a.ell, a.m) != (ell, m) || (b.ell, b.m) != (ell, m) {
        return Err(Error::ModulusMismatch);
    }
    two_block(&a.matrix(), &b.matrix())
}

/// The ⟦144,12,12⟧ gross code: `ℓ = 12`, `m = 6`, `A = x³+y+y²`, `B = y³+x+x²`.
pub fn gross_code() -> CssCode {
    let a = BivariatePoly::from_terms(12, 6, [(3, 0), (0, 1), (0, 2)]);
    let b = BivariatePoly::from_terms(12, 6, [(0, 3), (1, 0), (2, 0)]);
    bb_code(12, 6, &a, &b).expect("gross code polynomials are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circulant_of_x() {
        let p = CirculantPoly::from_exponents(3, [1]);
        assert_eq!(p.matrix(), BitMatrix::from_dense(&[[0, 1, 0], [0, 0, 1], [1, 0, 0]]));
        assert_eq!(CirculantPoly::from_exponents(3, [0]).matrix(), BitMatrix::identity(3));
    }

    #[test]
    fn gadgets() {
        assert_eq!(path_code(1).unwrap().check, BitMatrix::from_dense(&[[1], [1]]));
        assert_eq!(truncated_path_code(3).unwrap().check, BitMatrix::from_dense(&[[1, 0, 0], [1, 1, 0], [0, 1, 1]]));
        assert!(path_code(0).is_err());
        assert!(truncated_path_code(0).is_err());
        let p = path_code(3).unwrap();
        assert_eq!((p.k(), p.k_t()), (0, 1));
        let s = truncated_path_code(4).unwrap();
        assert_eq!((s.k(), s.k_t()), (0, 0));
    }

    #[test]
    fn surface_code_from_repetition() {
        let a = ClassicalCode::repetition(3).unwrap();
        let c = tensor_product(&a, &a.transpose());
        assert_eq!((c.n(), c.num_logicals()), (13, 1));
    }

    #[test]
    fn polynomial_parsing() {
        let p = BivariatePoly::parse("x3,y1,y2", 12, 6).unwrap();
        assert_eq!(p, BivariatePoly::from_terms(12, 6, [(3, 0), (0, 1), (0, 2)]));
        assert_eq!(BivariatePoly::parse("1", 4, 4).unwrap(), BivariatePoly::one(4, 4));
        assert_eq!(BivariatePoly::parse("x1y2", 4, 4).unwrap(), BivariatePoly::from_terms(4, 4, [(1, 2)]));
        assert_eq!(BivariatePoly::parse("x,x", 4, 4).unwrap(), BivariatePoly::zero(4, 4));
        assert!(BivariatePoly::parse("z2", 4, 4).is_err());
        assert!(CirculantPoly::parse("y1", 4).is_err());
        assert_eq!(p.to_string(), "y1,y2,x3");
    }

    #[test]
    fn gross_parameters() {
        let c = gross_code();
        assert_eq!((c.n(), c.num_logicals(), c.omega()), (144, 12, 6));
    }

    #[test]
    fn modulus_mismatch_is_rejected() {
        let a = CirculantPoly::from_exponents(3, [0]);
        let b = CirculantPoly::from_exponents(4, [0]);
        assert_eq!(gb_code(3, &a, &b), Err(Error::ModulusMismatch));
    }
}

//! Coequalisers of pairs of basis-preserving chain maps.
//!
//! Given `f, g: V → R` with `V = (V_1 → V_0)` and disjoint images, the
//! coequaliser `T` identifies `f(e)` with `g(e)` for every basis element `e`.
//! Z checks are untouched (`T_2 = R_2`). The Z-check matrix is obtained by
//! XOR-ing the identified qubit columns; the X-check matrix by XOR-ing the
//! identified check rows and then taking the common value of the identified
//! qubit columns.

use crate::codes::CssCode;
use crate::error::{Error, Result};
use crate::f2::BitMatrix;

/// Basis-preserving chain map from a one-step complex into a code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainInclusion {
    /// `V_1` basis element to host qubit.
    pub qubits: Vec<usize>,
    /// `V_0` basis element to host X check.
    pub checks: Vec<usize>,
}

impl ChainInclusion {
    /// Shifts every index, for maps into a direct summand.
    pub fn offset(&self, qubits: usize, checks: usize) -> Self {
        Self {
            qubits: self.qubits.iter().map(|q| q + qubits).collect(),
            checks: self.checks.iter().map(|c| c + checks).collect(),
        }
    }
}

/// A coequaliser together with its quotient maps.
#[derive(Clone, Debug)]
pub struct Coequaliser {
    pub code: CssCode,
    /// Host qubit to quotient qubit.
    pub qubit_map: Vec<usize>,
    /// Host X check to quotient X check.
    pub check_map: Vec<usize>,
}

fn injective(map: &[usize], bound: usize) -> bool {
    let mut seen = vec![false; bound];
    map.iter().all(|&i| i < bound && !std::mem::replace(&mut seen[i], true))
}

/// Checks that `f` is an injective chain map `V → R`.
fn validate_inclusion(host: &CssCode, v: &BitMatrix, f: &ChainInclusion, name: &str) -> Result<()> {
    let bad = |what: &str| Err(Error::InvalidInclusion(format!("{name}: {what}")));
    if f.qubits.len() != v.cols() || f.checks.len() != v.rows() {
        return bad("sizes differ from the subcomplex");
    }
    if !injective(&f.qubits, host.n()) || !injective(&f.checks, host.px().rows()) {
        return bad("not injective");
    }
    let mut in_image = vec![false; host.px().rows()];
    for &h in &f.checks {
        in_image[h] = true;
    }
    let columns = host.px().select_columns(&f.qubits);
    if (0..columns.rows()).any(|i| columns.row_weight(i) > 0 && !in_image[i]) {
        return bad("a qubit meets a check outside the image");
    }
    if columns.select_rows(&f.checks) != *v {
        return bad("does not commute with the differential");
    }
    Ok(())
}

/// Collapses each pair onto its lower index and compacts; returns the old-to-new map.
fn collapse(size: usize, pairs: impl Iterator<Item = (usize, usize)>) -> (Vec<usize>, usize) {
    let mut target: Vec<usize> = (0..size).collect();
    for (a, b) in pairs {
        let (lo, hi) = (a.min(b), a.max(b));
        target[hi] = lo;
    }
    let mut compact = vec![usize::MAX; size];
    let mut next = 0;
    for i in 0..size {
        if target[i] == i {
            compact[i] = next;
            next += 1;
        }
    }
    ((0..size).map(|i| compact[target[i]]).collect(), next)
}

fn quotient_matrix(map: &[usize], size: usize) -> BitMatrix {
    let mut m = BitMatrix::zeros(size, map.len());
    for (i, &t) in map.iter().enumerate() {
        m.set(t, i, true);
    }
    m
}

/// Coequaliser of `f, g: V → host`, with the commuting squares asserted exactly.
pub fn coequalise(host: &CssCode, v: &BitMatrix, f: &ChainInclusion, g: &ChainInclusion) -> Result<Coequaliser> {
    validate_inclusion(host, v, f, "first map")?;
    validate_inclusion(host, v, g, "second map")?;
    if f.qubits.iter().any(|q| g.qubits.contains(q)) || f.checks.iter().any(|c| g.checks.contains(c)) {
        return Err(Error::InvalidInclusion("images overlap".into()));
    }
    let (px, pz) = (host.px(), host.pz());
    let (qubit_map, n) = collapse(host.n(), f.qubits.iter().copied().zip(g.qubits.iter().copied()));
    let (check_map, m_x) = collapse(px.rows(), f.checks.iter().copied().zip(g.checks.iter().copied()));

    // coeq_1 ∘ ∂_2: XOR identified qubit columns of P_Z.
    let mut new_pz = BitMatrix::zeros(pz.rows(), n);
    for i in 0..pz.rows() {
        for q in pz.row(i).support() {
            new_pz.flip(i, qubit_map[q]);
        }
    }
    // coeq_0 ∘ ∂_1: XOR identified check rows, then take identified columns once.
    let mut rows_merged = BitMatrix::zeros(m_x, px.cols());
    for (i, &target) in check_map.iter().enumerate() {
        for q in px.row(i).support() {
            rows_merged.flip(target, q);
        }
    }
    let mut representative = vec![usize::MAX; n];
    for q in 0..host.n() {
        if representative[qubit_map[q]] == usize::MAX {
            representative[qubit_map[q]] = q;
        }
    }
    let new_px = rows_merged.select_columns(&representative);

    let coeq1 = quotient_matrix(&qubit_map, n);
    let coeq0 = quotient_matrix(&check_map, m_x);
    assert_eq!(coeq0.mul(px), new_px.mul(&coeq1), "X-check square must commute");
    assert_eq!(coeq1.mul(&pz.transpose()), new_pz.transpose(), "Z-check square must commute");
    let code = CssCode::new(new_px, new_pz)?;
    Ok(Coequaliser { code, qubit_map, check_map })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::products::{path_code, tensor_product, ClassicalCode};

    #[test]
    fn identifying_the_ends_of_a_path_tensor() {
        // (P ⊗ V) with V = [1] and r = 1 is a 2-qubit repetition gadget.
        let v = BitMatrix::identity(1);
        let w = tensor_product(&path_code(1).unwrap(), &ClassicalCode::new(v.clone()));
        assert_eq!(w.n(), 3);
        let f = ChainInclusion { qubits: vec![0], checks: vec![0] };
        let g = ChainInclusion { qubits: vec![1], checks: vec![1] };
        let t = coequalise(&w, &v, &f, &g).unwrap();
        assert_eq!(t.code.n(), 2);
        assert_eq!(t.qubit_map, vec![0, 0, 1]);
        assert!(coequalise(&w, &v, &f, &f).is_err());
    }

    #[test]
    fn non_chain_maps_are_rejected() {
        let v = BitMatrix::identity(1);
        let w = tensor_product(&path_code(1).unwrap(), &ClassicalCode::new(v.clone()));
        let f = ChainInclusion { qubits: vec![2], checks: vec![0] };
        let g = ChainInclusion { qubits: vec![1], checks: vec![1] };
        assert!(matches!(coequalise(&w, &v, &f, &g), Err(Error::InvalidInclusion(_))));
    }
}

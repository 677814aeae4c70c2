//! Small named codes used in examples and tests.

use crate::codes::{Basis, CssCode};
use crate::f2::{BitMatrix, BitVec};
use crate::products::{tensor_product, ClassicalCode};

fn from_supports(n: usize, rows: &[&[usize]]) -> BitMatrix {
    let supports: Vec<Vec<usize>> = rows.iter().map(|r| r.to_vec()).collect();
    BitMatrix::from_row_supports(rows.len(), n, &supports)
}

/// ⟦7,1,3⟧ Steane code; both check matrices are the Hamming(7,4) checks.
pub fn steane() -> CssCode {
    let h = BitMatrix::from_dense(&[[0, 0, 0, 1, 1, 1, 1], [0, 1, 1, 0, 0, 1, 1], [1, 0, 1, 0, 1, 0, 1]]);
    CssCode::new(h.clone(), h).expect("Hamming checks are self-orthogonal")
}

/// ⟦9,1,3⟧ Shor code.
pub fn shor() -> CssCode {
    let px = from_supports(9, &[&[0, 1, 2, 3, 4, 5], &[3, 4, 5, 6, 7, 8]]);
    let pz = from_supports(9, &[&[0, 1], &[1, 2], &[3, 4], &[4, 5], &[6, 7], &[7, 8]]);
    CssCode::new(px, pz).expect("Shor checks commute")
}

/// ⟦15,1,3⟧ quantum Reed-Muller code with `d_X = 7`.
///
/// Qubit `q` stands for the nonzero 4-bit number `q + 1`. X checks are the four
/// coordinate functions; Z checks add their six pairwise products.
pub fn quantum_reed_muller() -> CssCode {
    let bit = |b: usize| -> Vec<usize> { (0..15).filter(|q| (q + 1) >> b & 1 == 1).collect() };
    let linear: Vec<Vec<usize>> = (0..4).map(bit).collect();
    let mut quadratic = linear.clone();
    for a in 0..4 {
        for b in a + 1..4 {
            quadratic.push((0..15).filter(|q| (q + 1) >> a & 1 == 1 && (q + 1) >> b & 1 == 1).collect());
        }
    }
    let px = BitMatrix::from_row_supports(4, 15, &linear);
    let pz = BitMatrix::from_row_supports(10, 15, &quadratic);
    CssCode::new(px, pz).expect("Reed-Muller checks are orthogonal")
}

/// ⟦9,1,3⟧ rotated surface code on a 3×3 grid, qubit `3i + j`.
pub fn rotated_surface() -> CssCode {
    let px = from_supports(9, &[&[0, 1, 3, 4], &[4, 5, 7, 8], &[1, 2], &[6, 7]]);
    let pz = from_supports(9, &[&[1, 2, 4, 5], &[3, 4, 6, 7], &[0, 3], &[5, 8]]);
    CssCode::new(px, pz).expect("rotated surface checks commute")
}

/// ⟦13,1,3⟧ unrotated surface code, the tensor product of a repetition code with its transpose.
pub fn unrotated_surface() -> CssCode {
    let rep = ClassicalCode::repetition(3).expect("length 3 is valid");
    tensor_product(&rep, &rep.transpose())
}

/// ⟦18,2,3⟧ toric code, the tensor product of two cyclic repetition codes.
pub fn toric() -> CssCode {
    let cyclic = ClassicalCode::new(BitMatrix::from_dense(&[[1, 1, 0], [0, 1, 1], [1, 0, 1]]));
    tensor_product(&cyclic, &cyclic)
}

/// The five codes of the small example set, with display names.
pub fn small_set() -> Vec<(&'static str, CssCode)> {
    vec![
        ("Shor", shor()),
        ("QRM", quantum_reed_muller()),
        ("Steane", steane()),
        ("RotSurf", rotated_surface()),
        ("Surf", unrotated_surface()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameters() {
        for (code, n) in
            [(steane(), 7), (shor(), 9), (quantum_reed_muller(), 15), (rotated_surface(), 9), (unrotated_surface(), 13)]
        {
            assert_eq!((code.n(), code.num_logicals()), (n, 1));
        }
        assert_eq!((toric().n(), toric().num_logicals()), (18, 2));
    }
}

/// Weight-12 irreducible logical families of the gross code, six per family.
///
/// With `f = 1+x+x²+x³+x⁶+x⁷+x⁸+x⁹+(x+x⁵+x⁷+x¹¹)y³`,
/// `g = x+x²y+(1+x)y²+x²y³+y⁴` and `h = 1+(1+x)y+y²+(1+x)y³`, and `α` running
/// over the translates `{1, y, x²y, x²y⁵, x³y², x⁴}`:
/// X logicals `(αf | 0)` and `(αg | αh)`, Z logicals `(0 | (αf)ᵀ)` and
/// `((αh)ᵀ | (αg)ᵀ)`, where `ᵀ` inverts every monomial.
#[derive(Clone, Debug)]
pub struct GrossLogicals {
    /// `(αf | 0)`: supported on the unprimed block.
    pub x_unprimed: Vec<BitVec>,
    /// `(αg | αh)`.
    pub x_primed: Vec<BitVec>,
    /// `((αh)ᵀ | (αg)ᵀ)`.
    pub z_unprimed: Vec<BitVec>,
    /// `(0 | (αf)ᵀ)`: supported on the primed block.
    pub z_primed: Vec<BitVec>,
}

impl GrossLogicals {
    pub fn get(&self, basis: Basis, primed: bool) -> &[BitVec] {
        match (basis, primed) {
            (Basis::X, false) => &self.x_unprimed,
            (Basis::X, true) => &self.x_primed,
            (Basis::Z, false) => &self.z_unprimed,
            (Basis::Z, true) => &self.z_primed,
        }
    }
}

pub fn gross_logicals() -> GrossLogicals {
    const ELL: usize = 12;
    const M: usize = 6;
    let f = [(0, 0), (1, 0), (2, 0), (3, 0), (6, 0), (7, 0), (8, 0), (9, 0), (1, 3), (5, 3), (7, 3), (11, 3)];
    let g = [(1, 0), (2, 1), (0, 2), (1, 2), (2, 3), (0, 4)];
    let h = [(0, 0), (0, 1), (1, 1), (0, 2), (0, 3), (1, 3)];
    let translates = [(0, 0), (0, 1), (2, 1), (2, 5), (3, 2), (4, 0)];
    // Qubit of monomial x^a y^b shifted by α, optionally inverted, in block `block`.
    let qubit = |(a, b): (usize, usize), (s, t): (usize, usize), inverse: bool, block: usize| {
        let (a, b) = ((a + s) % ELL, (b + t) % M);
        let (a, b) = if inverse { ((ELL - a) % ELL, (M - b) % M) } else { (a, b) };
        block * ELL * M + a * M + b
    };
    let vector = |parts: &[(&[(usize, usize)], usize)], alpha: (usize, usize), inverse: bool| {
        let support: Vec<usize> =
            parts.iter().flat_map(|&(p, block)| p.iter().map(move |&m| qubit(m, alpha, inverse, block))).collect();
        BitVec::from_support(2 * ELL * M, &support)
    };
    let family = |parts: &[(&[(usize, usize)], usize)], inverse: bool| -> Vec<BitVec> {
        translates.iter().map(|&alpha| vector(parts, alpha, inverse)).collect()
    };
    GrossLogicals {
        x_unprimed: family(&[(&f, 0)], false),
        x_primed: family(&[(&g, 0), (&h, 1)], false),
        z_unprimed: family(&[(&h, 0), (&g, 1)], true),
        z_primed: family(&[(&f, 1)], true),
    }
}

//! Monic spans between logical operator subcomplexes.
//!
//! A span exists when the two restricted matrices are equal up to row and
//! column permutations, which is an isomorphism problem between their Tanner
//! graphs with the column/row classes kept apart.

use std::collections::VecDeque;

use crate::codes::LogicalSubcomplex;
use crate::f2::BitMatrix;

/// Bijections with `first[i][j] = second[check_bijection[i]][qubit_bijection[j]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonicSpan {
    /// Column of the first subcomplex to column of the second.
    pub qubit_bijection: Vec<usize>,
    /// Row of the first subcomplex to row of the second.
    pub check_bijection: Vec<usize>,
}

impl MonicSpan {
    pub fn identity(qubits: usize, checks: usize) -> Self {
        Self { qubit_bijection: (0..qubits).collect(), check_bijection: (0..checks).collect() }
    }

    /// Whether the bijections carry `first` onto `second` exactly.
    pub fn is_valid(&self, first: &BitMatrix, second: &BitMatrix) -> bool {
        if first.shape() != second.shape()
            || self.qubit_bijection.len() != first.cols()
            || self.check_bijection.len() != first.rows()
            || !is_permutation(&self.qubit_bijection)
            || !is_permutation(&self.check_bijection)
        {
            return false;
        }
        (0..first.rows())
            .all(|i| (0..first.cols()).all(|j| first.get(i, j) == second.get(self.check_bijection[i], self.qubit_bijection[j])))
    }

    pub fn inverse(&self) -> MonicSpan {
        MonicSpan {
            qubit_bijection: invert_permutation(&self.qubit_bijection),
            check_bijection: invert_permutation(&self.check_bijection),
        }
    }
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter().all(|&i| i < p.len() && !std::mem::replace(&mut seen[i], true))
}

fn invert_permutation(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &j) in p.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

/// Tanner-graph vertex: a column or a row.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Vertex {
    Col(usize),
    Row(usize),
}

struct Graph<'a> {
    m: &'a BitMatrix,
    col_degree: Vec<usize>,
    row_degree: Vec<usize>,
}

impl<'a> Graph<'a> {
    fn new(m: &'a BitMatrix) -> Self {
        Self { m, col_degree: m.column_weights(), row_degree: (0..m.rows()).map(|i| m.row_weight(i)).collect() }
    }

    fn degree_multisets(&self) -> (Vec<usize>, Vec<usize>) {
        let mut c = self.col_degree.clone();
        let mut r = self.row_degree.clone();
        c.sort_unstable();
        r.sort_unstable();
        (c, r)
    }

    /// Breadth-first order over all components, lowest index first.
    fn bfs_order(&self) -> Vec<Vertex> {
        let (rows, cols) = self.m.shape();
        let mut seen_col = vec![false; cols];
        let mut seen_row = vec![false; rows];
        let mut order = Vec::with_capacity(rows + cols);
        let roots = (0..cols).map(Vertex::Col).chain((0..rows).map(Vertex::Row));
        for root in roots {
            let fresh = match root {
                Vertex::Col(j) => !std::mem::replace(&mut seen_col[j], true),
                Vertex::Row(i) => !std::mem::replace(&mut seen_row[i], true),
            };
            if !fresh {
                continue;
            }
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                order.push(v);
                match v {
                    Vertex::Col(j) => {
                        for (i, seen) in seen_row.iter_mut().enumerate().take(rows) {
                            if self.m.get(i, j) && !std::mem::replace(seen, true) {
                                queue.push_back(Vertex::Row(i));
                            }
                        }
                    }
                    Vertex::Row(i) => {
                        for j in self.m.row(i).support() {
                            if !std::mem::replace(&mut seen_col[j], true) {
                                queue.push_back(Vertex::Col(j));
                            }
                        }
                    }
                }
            }
        }
        order
    }
}

struct Search<'a> {
    g1: Graph<'a>,
    g2: Graph<'a>,
    order: Vec<Vertex>,
    col_map: Vec<Option<usize>>,
    row_map: Vec<Option<usize>>,
    col_used: Vec<bool>,
    row_used: Vec<bool>,
    mapped_cols: Vec<usize>,
    mapped_rows: Vec<usize>,
}

impl Search<'_> {
    fn col_consistent(&self, j: usize, target: usize) -> bool {
        self.g1.col_degree[j] == self.g2.col_degree[target]
            && self.mapped_rows.iter().all(|&i| self.g1.m.get(i, j) == self.g2.m.get(self.row_map[i].unwrap(), target))
    }

    fn row_consistent(&self, i: usize, target: usize) -> bool {
        self.g1.row_degree[i] == self.g2.row_degree[target]
            && self.mapped_cols.iter().all(|&j| self.g1.m.get(i, j) == self.g2.m.get(target, self.col_map[j].unwrap()))
    }

    /// Candidates with the same index first, then ascending.
    fn candidates(own: usize, count: usize) -> impl Iterator<Item = usize> {
        std::iter::once(own).filter(move |&o| o < count).chain((0..count).filter(move |&c| c != own))
    }

    fn run(&mut self, depth: usize) -> bool {
        let Some(&v) = self.order.get(depth) else {
            return true;
        };
        match v {
            Vertex::Col(j) => {
                for t in Self::candidates(j, self.col_used.len()) {
                    if self.col_used[t] || !self.col_consistent(j, t) {
                        continue;
                    }
                    self.col_map[j] = Some(t);
                    self.col_used[t] = true;
                    self.mapped_cols.push(j);
                    if self.run(depth + 1) {
                        return true;
                    }
                    self.mapped_cols.pop();
                    self.col_used[t] = false;
                    self.col_map[j] = None;
                }
            }
            Vertex::Row(i) => {
                for t in Self::candidates(i, self.row_used.len()) {
                    if self.row_used[t] || !self.row_consistent(i, t) {
                        continue;
                    }
                    self.row_map[i] = Some(t);
                    self.row_used[t] = true;
                    self.mapped_rows.push(i);
                    if self.run(depth + 1) {
                        return true;
                    }
                    self.mapped_rows.pop();
                    self.row_used[t] = false;
                    self.row_map[i] = None;
                }
            }
        }
        false
    }
}

/// First isomorphism between the restricted matrices, by deterministic backtracking.
pub fn find_matrix_span(first: &BitMatrix, second: &BitMatrix) -> Option<MonicSpan> {
    if first.shape() != second.shape() {
        return None;
    }
    let (g1, g2) = (Graph::new(first), Graph::new(second));
    if g1.degree_multisets() != g2.degree_multisets() {
        return None;
    }
    let order = g1.bfs_order();
    let (rows, cols) = first.shape();
    let mut search = Search {
        g1,
        g2,
        order,
        col_map: vec![None; cols],
        row_map: vec![None; rows],
        col_used: vec![false; cols],
        row_used: vec![false; rows],
        mapped_cols: Vec::with_capacity(cols),
        mapped_rows: Vec::with_capacity(rows),
    };
    if !search.run(0) {
        return None;
    }
    let span = MonicSpan {
        qubit_bijection: search.col_map.into_iter().map(Option::unwrap).collect(),
        check_bijection: search.row_map.into_iter().map(Option::unwrap).collect(),
    };
    debug_assert!(span.is_valid(first, second));
    Some(span)
}

/// Span between two logical operator subcomplexes, if one exists.
pub fn find_monic_span(first: &LogicalSubcomplex, second: &LogicalSubcomplex) -> Option<MonicSpan> {
    find_matrix_span(&first.matrix, &second.matrix)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identical_matrices_map_identically() {
        let m = BitMatrix::from_dense(&[[1, 1, 0], [0, 1, 1]]);
        assert_eq!(find_matrix_span(&m, &m), Some(MonicSpan::identity(3, 2)));
    }

    #[test]
    fn permuted_matrices_are_matched() {
        let a = BitMatrix::from_dense(&[[1, 1, 0], [0, 1, 1]]);
        let b = BitMatrix::from_dense(&[[0, 1, 1], [1, 0, 1]]);
        let span = find_matrix_span(&a, &b).unwrap();
        assert!(span.is_valid(&a, &b));
        assert!(span.inverse().is_valid(&b, &a));
    }

    #[test]
    fn mismatched_shapes_have_no_span() {
        let rep = BitMatrix::from_dense(&[[1, 1, 0], [0, 1, 1]]);
        let cyc = BitMatrix::from_dense(&[[1, 1, 0], [0, 1, 1], [1, 0, 1]]);
        assert_eq!(find_matrix_span(&rep, &cyc), None);
        let path = BitMatrix::from_dense(&[[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1]]);
        let star = BitMatrix::from_dense(&[[1, 1, 0, 0], [0, 1, 1, 0], [0, 1, 0, 1]]);
        assert_eq!(find_matrix_span(&path, &star), None);
    }
}

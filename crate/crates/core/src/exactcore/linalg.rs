//! Exact sparse Gaussian elimination with deterministic pivoting.
//!
//! Rows are inserted one at a time into an [`EchelonBasis`]; pivots are always
//! the smallest surviving column, so results depend only on the order rows are
//! presented in, never on hashing or thread scheduling.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::rational::{Scalar, Q};

/// A sparse vector: `(column, value)` pairs with strictly increasing columns
/// and no stored zeros.
pub type SparseVec<S> = Vec<(usize, S)>;

/// Row echelon form of the span of the inserted rows. Every stored row has
/// leading coefficient one.
#[derive(Clone, Debug)]
pub struct EchelonBasis<S> {
    rows: BTreeMap<usize, SparseVec<S>>,
}

impl<S: Scalar> Default for EchelonBasis<S> {
    fn default() -> Self {
        Self::new()
    }
}

impl<S: Scalar> EchelonBasis<S> {
    pub fn new() -> Self {
        EchelonBasis { rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Residual of `row` after eliminating every pivot column.
    pub fn reduce(&self, row: &[(usize, S)]) -> SparseVec<S> {
        let mut work: BTreeMap<usize, S> = row.iter().filter(|(_, v)| !v.is_zero()).cloned().collect();
        let mut cursor = 0usize;
        loop {
            let next = work.range(cursor..).map(|(c, _)| *c).find(|c| self.rows.contains_key(c));
            let Some(col) = next else { break };
            let coef = work.remove(&col).expect("entry present");
            for (c, v) in self.rows[&col].iter().skip(1) {
                let delta = coef.times(v);
                match work.get_mut(c) {
                    Some(w) => {
                        *w = w.minus(&delta);
                        if w.is_zero() {
                            work.remove(c);
                        }
                    }
                    None => {
                        work.insert(*c, delta.negated());
                    }
                }
            }
            cursor = col + 1;
        }
        work.into_iter().collect()
    }

    pub fn contains(&self, row: &[(usize, S)]) -> bool {
        self.reduce(row).is_empty()
    }

    /// Inserts `row`; returns whether it enlarged the span.
    pub fn insert(&mut self, row: &[(usize, S)]) -> bool {
        let residual = self.reduce(row);
        let Some((lead, lead_val)) = residual.first().cloned() else {
            return false;
        };
        let inv = lead_val.inv().expect("nonzero leading entry");
        let normalized: SparseVec<S> = residual
            .into_iter()
            .map(|(c, v)| if c == lead { (c, S::one()) } else { (c, v.times(&inv)) })
            .collect();
        self.rows.insert(lead, normalized);
        true
    }

    /// Fully reduced rows (reduced row echelon form), keyed by pivot column.
    pub fn reduced_rows(&self) -> BTreeMap<usize, SparseVec<S>> {
        let mut done: BTreeMap<usize, SparseVec<S>> = BTreeMap::new();
        for (&pivot, row) in self.rows.iter().rev() {
            let reducer = EchelonBasis { rows: done.clone() };
            let mut rest = reducer.reduce(&row[1..]);
            rest.insert(0, (pivot, S::one()));
            done.insert(pivot, rest);
        }
        done
    }

    /// Basis of `{x : r . x = 0 for every inserted row r}` in `S^ncols`, one
    /// vector per free column in increasing order, with a one in that column.
    pub fn nullspace(&self, ncols: usize) -> Vec<Vec<S>> {
        let rref = self.reduced_rows();
        let mut out = Vec::new();
        for free in (0..ncols).filter(|c| !rref.contains_key(c)) {
            let mut v = vec![S::zero(); ncols];
            v[free] = S::one();
            for (&pivot, row) in &rref {
                if let Some((_, val)) = row.iter().find(|(c, _)| *c == free) {
                    v[pivot] = val.negated();
                }
            }
            out.push(v);
        }
        out
    }
}

/// Rank of a list of sparse rows.
pub fn rank<S: Scalar>(rows: &[SparseVec<S>]) -> usize {
    let mut basis = EchelonBasis::new();
    for r in rows {
        basis.insert(r);
    }
    basis.rank()
}

/// Right nullspace of the matrix with the given sparse rows.
pub fn nullspace<S: Scalar>(rows: &[SparseVec<S>], ncols: usize) -> Vec<Vec<S>> {
    let mut basis = EchelonBasis::new();
    for r in rows {
        basis.insert(r);
    }
    basis.nullspace(ncols)
}

/// Converts a dense vector to sparse form.
pub fn sparse_from_dense<S: Scalar>(v: &[S]) -> SparseVec<S> {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

/// Solves a small dense square system over `Q`; `None` if singular.
pub(crate) fn solve_square(mut a: Vec<Vec<Q>>, mut b: Vec<Q>) -> Option<Vec<Q>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        b.swap(col, piv);
        let inv = a[col][col].recip();
        for j in col..n {
            a[col][j] = &a[col][j] * &inv;
        }
        b[col] = &b[col] * &inv;
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in col..n {
                    let d = &f * &a[col][j];
                    a[r][j] -= d;
                }
                let d = &f * &b[col];
                b[r] -= d;
            }
        }
    }
    debug_assert!((0..n).all(|i| a[i][i].is_one()));
    Some(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rational::{q, qi};

    fn row(v: &[i64]) -> SparseVec<Q> {
        sparse_from_dense(&v.iter().map(|&x| qi(x)).collect::<Vec<_>>())
    }

    #[test]
    fn rank_and_nullspace_small() {
        let rows = vec![row(&[1, 2, 3]), row(&[2, 4, 6]), row(&[0, 1, 1])];
        assert_eq!(rank(&rows), 2);
        let ns = nullspace(&rows, 3);
        assert_eq!(ns.len(), 1);
        for r in &rows {
            let dot: Q = r.iter().map(|(c, v)| v * &ns[0][*c]).sum();
            assert!(dot.is_zero());
        }
        assert_eq!(ns[0], vec![qi(-1), qi(-1), qi(1)]);
    }

    #[test]
    fn empty_matrix_has_full_nullspace() {
        let ns = nullspace::<Q>(&[], 2);
        assert_eq!(ns, vec![vec![qi(1), qi(0)], vec![qi(0), qi(1)]]);
    }

    #[test]
    fn membership() {
        let mut b = EchelonBasis::new();
        assert!(b.insert(&row(&[0, 2, 1])));
        assert!(b.insert(&row(&[1, 0, 1])));
        assert!(!b.insert(&row(&[2, 4, 4])));
        assert!(b.contains(&row(&[1, 2, 2])));
        assert!(!b.contains(&row(&[0, 0, 1])));
    }

    #[test]
    fn dense_solver() {
        let a = vec![vec![qi(2), qi(1)], vec![qi(1), qi(3)]];
        let x = solve_square(a, vec![qi(1), qi(0)]).unwrap();
        assert_eq!(x, vec![q(3, 5), q(-1, 5)]);
        assert!(solve_square(vec![vec![qi(1), qi(2)], vec![qi(2), qi(4)]], vec![qi(1), qi(1)]).is_none());
    }
}

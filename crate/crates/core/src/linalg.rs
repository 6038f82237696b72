//! Dense exact linear algebra over a cyclotomic field.
//!
//! Row reduction uses a fixed pivot rule (first nonzero column, lowest row
//! index) so every derived basis — kernels, complements, quotient coordinates —
//! is deterministic and suitable for golden-file comparisons.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cyclotomic::{CycField, CycScalar};

/// Error from [`linear_solve`]: the system has no solution. Degenerate inputs
/// (empty systems, underdetermined systems) are not errors; see
/// [`LinearSolution::unique`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Inconsistent;

impl fmt::Display for Inconsistent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "linear system is inconsistent")
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Inconsistent {}

/// A dense matrix of [`CycScalar`]s sharing one field context.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    field: Arc<CycField>,
    rows: usize,
    cols: usize,
    data: Vec<CycScalar>,
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} over Q(z{})", self.rows, self.cols, self.field.conductor())?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl ExactMatrix {
    pub fn zeros(field: &Arc<CycField>, rows: usize, cols: usize) -> Self {
        ExactMatrix {
            field: Arc::clone(field),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &Arc<CycField>, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Build from row vectors, coercing every entry to the lcm of the
    /// conductors present (plus the ambient field's).
    pub fn from_rows(field: &Arc<CycField>, rows: Vec<Vec<CycScalar>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut target = Arc::clone(field);
        for r in &rows {
            assert_eq!(r.len(), ncols, "ragged rows");
            for e in r {
                if e.conductor() != target.conductor() {
                    let (a, _) = CycScalar::coerced_pair(&target.zero(), e);
                    target = Arc::clone(a.field());
                }
            }
        }
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in rows {
            for e in r {
                let (v, _) = CycScalar::coerced_pair(&e, &target.zero());
                data.push(v);
            }
        }
        ExactMatrix {
            field: target,
            rows: nrows,
            cols: ncols,
            data,
        }
    }

    pub fn from_fn(
        field: &Arc<CycField>,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> CycScalar,
    ) -> Self {
        let rowvecs = (0..rows)
            .map(|i| (0..cols).map(|j| f(i, j)).collect())
            .collect();
        Self::from_rows(field, rowvecs)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &CycScalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycScalar) {
        let (v, _) = CycScalar::coerced_pair(&v, &self.field.zero());
        assert_eq!(v.conductor(), self.field.conductor(), "conductor mismatch in set");
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[CycScalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<CycScalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> ExactMatrix {
        Self::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mat_mul(&self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in mat_mul");
        let mut out = ExactMatrix::zeros(&self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let t = out.get(i, j).add(&a.mul(b));
                    out.data[i * rhs.cols + j] = t;
                }
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[CycScalar]) -> Vec<CycScalar> {
        assert_eq!(v.len(), self.cols, "dimension mismatch in apply");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for j in 0..self.cols {
                    let a = self.get(i, j);
                    if !a.is_zero() && !v[j].is_zero() {
                        acc = acc.add(&a.mul(&v[j]));
                    }
                }
                acc
            })
            .collect()
    }

    /// Reduced row echelon form with the deterministic pivot rule.
    pub fn row_reduce(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row >= m.rows {
                break;
            }
            let found = (pivot_row..m.rows).find(|&r| !m.get(r, col).is_zero());
            let Some(r) = found else { continue };
            if r != pivot_row {
                for j in 0..m.cols {
                    m.data.swap(r * m.cols + j, pivot_row * m.cols + j);
                }
            }
            let inv = m.get(pivot_row, col).inv().expect("pivot is nonzero");
            for j in col..m.cols {
                let v = m.get(pivot_row, j).mul(&inv);
                m.data[pivot_row * m.cols + j] = v;
            }
            for r2 in 0..m.rows {
                if r2 == pivot_row || m.get(r2, col).is_zero() {
                    continue;
                }
                let factor = m.get(r2, col).clone();
                for j in col..m.cols {
                    let v = m.get(r2, j).sub(&factor.mul(m.get(pivot_row, j)));
                    m.data[r2 * m.cols + j] = v;
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        let rank = pivots.len();
        Rref {
            matrix: m,
            pivots,
            rank,
        }
    }

    pub fn rank(&self) -> usize {
        self.row_reduce().rank
    }

    /// Basis of the right kernel `{v : Mv = 0}`, one vector per free column,
    /// in ascending free-column order.
    pub fn kernel_basis(&self) -> Vec<Vec<CycScalar>> {
        let rref = self.row_reduce();
        let mut basis = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &p in &rref.pivots {
            is_pivot[p] = true;
        }
        for fc in 0..self.cols {
            if is_pivot[fc] {
                continue;
            }
            let mut v = vec![self.field.zero(); self.cols];
            v[fc] = self.field.one();
            for (row, &pc) in rref.pivots.iter().enumerate() {
                v[pc] = rref.matrix.get(row, fc).neg();
            }
            basis.push(v);
        }
        basis
    }

    /// Inverse of a square matrix, if it exists.
    pub fn invert(&self) -> Option<ExactMatrix> {
        assert_eq!(self.rows, self.cols, "invert requires a square matrix");
        let n = self.rows;
        let mut aug = ExactMatrix::zeros(&self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, self.field.one());
        }
        let rref = aug.row_reduce();
        if rref.pivots.len() < n || rref.pivots[n - 1] >= n {
            return None;
        }
        let mut out = ExactMatrix::zeros(&self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, rref.matrix.get(i, n + j).clone());
            }
        }
        Some(out)
    }
}

/// Result of [`ExactMatrix::row_reduce`].
#[derive(Debug, Clone)]
pub struct Rref {
    pub matrix: ExactMatrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// Outcome of a consistent [`linear_solve`].
#[derive(Debug, Clone)]
pub struct LinearSolution {
    /// A solution; the one with all free variables set to zero.
    pub solution: Vec<CycScalar>,
    /// Whether the solution is unique (no free columns).
    pub unique: bool,
}

/// Solve `M x = b` exactly. Inconsistent systems are an error; degenerate
/// (underdetermined) systems succeed with `unique = false`.
pub fn linear_solve(m: &ExactMatrix, b: &[CycScalar]) -> Result<LinearSolution, Inconsistent> {
    assert_eq!(b.len(), m.rows(), "right-hand side has wrong length");
    let field = m.field();
    let mut aug = ExactMatrix::from_fn(field, m.rows(), m.cols() + 1, |i, j| {
        if j < m.cols() {
            m.get(i, j).clone()
        } else {
            b[i].clone()
        }
    });
    // from_fn may widen the field if b has a larger conductor
    let rref = aug.row_reduce();
    aug = rref.matrix;
    if rref.pivots.last().is_some_and(|&p| p == m.cols()) {
        return Err(Inconsistent);
    }
    let afield = aug.field().clone();
    let mut x = vec![afield.zero(); m.cols()];
    for (row, &pc) in rref.pivots.iter().enumerate() {
        x[pc] = aug.get(row, m.cols()).clone();
    }
    Ok(LinearSolution {
        unique: rref.rank == m.cols(),
        solution: x,
    })
}

/// Indices of the standard basis vectors spanning a deterministic complement
/// of the row span of `span_rows` inside the ambient space: the non-pivot
/// columns after row reduction.
pub fn subspace_complement(span_rows: &ExactMatrix) -> Vec<usize> {
    let rref = span_rows.row_reduce();
    let mut is_pivot = vec![false; span_rows.cols()];
    for &p in &rref.pivots {
        is_pivot[p] = true;
    }
    (0..span_rows.cols()).filter(|&c| !is_pivot[c]).collect()
}

/// Scaled accumulation `acc += c * v` for scalar vectors.
pub fn vec_add_scaled(acc: &mut [CycScalar], c: &CycScalar, v: &[CycScalar]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v.iter()) {
        if !x.is_zero() {
            *a = a.add(&c.mul(x));
        }
    }
}

/// Exact equality of scalar vectors.
pub fn vec_eq(a: &[CycScalar], b: &[CycScalar]) -> bool {
    a.len() == b.len() && a.iter().zip(b.iter()).all(|(x, y)| x == y)
}

/// Componentwise difference `a - b`.
pub fn vec_sub(a: &[CycScalar], b: &[CycScalar]) -> Vec<CycScalar> {
    a.iter().zip(b.iter()).map(|(x, y)| x.sub(y)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_rref_is_identity() {
        let f = CycField::new(1).unwrap();
        let m = ExactMatrix::identity(&f, 4);
        let rref = m.row_reduce();
        assert_eq!(rref.rank, 4);
        assert_eq!(rref.matrix, m);
        assert!(m.kernel_basis().is_empty());
    }

    #[test]
    fn zero_matrix_rank_zero() {
        let f = CycField::new(1).unwrap();
        let m = ExactMatrix::zeros(&f, 3, 3);
        let rref = m.row_reduce();
        assert_eq!(rref.rank, 0);
        assert_eq!(rref.matrix, m);
        assert_eq!(m.kernel_basis().len(), 3);
    }

    #[test]
    fn dependent_rows_detected() {
        // second row is zeta_4 times the first
        let f = CycField::new(4).unwrap();
        let z = f.root(1);
        let m = ExactMatrix::from_rows(
            &f,
            vec![
                vec![z.clone(), f.one()],
                vec![f.from_integer(-1), z.clone()],
            ],
        );
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn complement_of_e1_in_dim3() {
        let f = CycField::new(1).unwrap();
        let span = ExactMatrix::from_rows(&f, vec![vec![f.one(), f.zero(), f.zero()]]);
        assert_eq!(subspace_complement(&span), vec![1, 2]);
    }

    #[test]
    fn solve_invertible_system_and_substitute() {
        let f = CycField::new(3).unwrap();
        let z = f.root(1);
        let m = ExactMatrix::from_rows(
            &f,
            vec![
                vec![f.one(), z.clone(), f.zero()],
                vec![f.zero(), f.one(), z.clone()],
                vec![z.clone(), f.zero(), f.one()],
            ],
        );
        let b = vec![f.from_integer(1), f.from_integer(2), f.root(2)];
        let sol = linear_solve(&m, &b).unwrap();
        assert!(sol.unique);
        assert!(vec_eq(&m.apply(&sol.solution), &b));
    }

    #[test]
    fn inconsistent_vs_degenerate() {
        let f = CycField::new(1).unwrap();
        let m = ExactMatrix::from_rows(
            &f,
            vec![
                vec![f.one(), f.one()],
                vec![f.one(), f.one()],
            ],
        );
        let bad = linear_solve(&m, &[f.one(), f.from_integer(2)]);
        assert_eq!(bad.unwrap_err(), Inconsistent);
        let ok = linear_solve(&m, &[f.one(), f.one()]).unwrap();
        assert!(!ok.unique);
        assert!(vec_eq(&m.apply(&ok.solution), &[f.one(), f.one()]));
    }

    #[test]
    fn invert_round_trips() {
        let f = CycField::new(4).unwrap();
        let z = f.root(1);
        let m = ExactMatrix::from_rows(
            &f,
            vec![
                vec![f.one(), z.clone()],
                vec![z.clone(), f.one()],
            ],
        );
        let inv = m.invert().unwrap();
        assert_eq!(m.mat_mul(&inv), ExactMatrix::identity(&f, 2));
        let singular = ExactMatrix::from_rows(
            &f,
            vec![
                vec![z.clone(), f.one()],
                vec![f.from_integer(-1), z.clone()],
            ],
        );
        assert!(singular.invert().is_none());
    }
}

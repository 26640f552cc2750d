use crate::error::{Error, Result};

use super::field::Field;

/// Dense row-major matrix over an exact field. The field itself is passed to
/// each operation; the matrix only stores canonical elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<F: Field> {
    rows: usize,
    cols: usize,
    entries: Vec<F::Elem>,
}

impl<F: Field> Matrix<F> {
    pub fn new(rows: usize, cols: usize, entries: Vec<F::Elem>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::LengthMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from equal-length rows. `cols` is needed for the
    /// zero-row case.
    pub fn from_rows(cols: usize, rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        let n_rows = rows.len();
        let mut entries = Vec::with_capacity(n_rows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::LengthMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Self::new(n_rows, cols, entries)
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<F::Elem>]) -> Result<Self> {
        let cols = columns.len();
        for c in columns {
            if c.len() != rows {
                return Err(Error::LengthMismatch {
                    expected: rows,
                    found: c.len(),
                });
            }
        }
        let entries = (0..rows)
            .flat_map(|r| columns.iter().map(move |c| c[r].clone()))
            .collect();
        Self::new(rows, cols, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[F::Elem] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let entries = (0..self.cols)
            .flat_map(|c| (0..self.rows).map(move |r| self.get(r, c).clone()))
            .collect();
        Self {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn mul_vec(&self, field: &F, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.cols, "vector length must equal column count");
        (0..self.rows)
            .map(|r| dot(field, self.row(r), v))
            .collect()
    }

    pub fn rank(&self, field: &F) -> usize {
        field.rank(self)
    }

    /// Basis of the right null space in reduced row echelon form.
    pub fn kernel_basis(&self, field: &F) -> Vec<Vec<F::Elem>> {
        let mut rows = self.to_rows();
        let pivots = row_echelon(field, &mut rows, true);
        let mut basis = Vec::with_capacity(self.cols - pivots.len());
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![field.zero(); self.cols];
            v[free] = field.one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = field.neg(&rows[i][free]);
            }
            basis.push(v);
        }
        row_space_basis(field, basis, self.cols)
    }

    /// One solution of `M x = b` with free variables set to zero, or `None`
    /// when the system is inconsistent.
    pub fn solve(&self, field: &F, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
        assert_eq!(b.len(), self.rows, "right-hand side length must equal row count");
        let mut rows: Vec<Vec<F::Elem>> = (0..self.rows)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.push(b[r].clone());
                row
            })
            .collect();
        let pivots = row_echelon(field, &mut rows, true);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![field.zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = rows[i][self.cols].clone();
        }
        Some(x)
    }
}

pub fn dot<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> F::Elem {
    a.iter()
        .zip(b)
        .fold(field.zero(), |acc, (x, y)| field.add(&acc, &field.mul(x, y)))
}

/// In-place Gaussian elimination with first-nonzero pivoting in column
/// order. Returns the pivot columns; rows beyond their count are zero.
/// With `reduced`, pivots are scaled to 1 and cleared above as well.
pub fn row_echelon<F: Field>(field: &F, rows: &mut [Vec<F::Elem>], reduced: bool) -> Vec<usize> {
    let Some(cols) = rows.first().map(Vec::len) else {
        return Vec::new();
    };
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows.len() {
            break;
        }
        let Some(p) = (rank..rows.len()).find(|&r| !field.is_zero(&rows[r][col])) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = field.inv(&rows[rank][col]).expect("pivot is nonzero");
        for x in rows[rank][col..].iter_mut() {
            *x = field.mul(x, &inv);
        }
        let pivot_row = rows[rank].clone();
        let start = if reduced { 0 } else { rank + 1 };
        for (r, row) in rows.iter_mut().enumerate().skip(start) {
            if r == rank || field.is_zero(&row[col]) {
                continue;
            }
            let factor = row[col].clone();
            for c in col..cols {
                let t = field.mul(&factor, &pivot_row[c]);
                row[c] = field.sub(&row[c], &t);
            }
        }
        pivots.push(col);
        rank += 1;
    }
    pivots
}

/// Reduced echelon basis of the span of `vectors` (each of length `len`).
pub fn row_space_basis<F: Field>(field: &F, mut vectors: Vec<Vec<F::Elem>>, len: usize) -> Vec<Vec<F::Elem>> {
    debug_assert!(vectors.iter().all(|v| v.len() == len));
    let rank = row_echelon(field, &mut vectors, true).len();
    vectors.truncate(rank);
    vectors
}

/// Span membership against a reduced echelon basis.
#[derive(Debug, Clone)]
pub struct EchelonSpan<F: Field> {
    basis: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> EchelonSpan<F> {
    pub fn new(field: &F, vectors: Vec<Vec<F::Elem>>, len: usize) -> Self {
        let basis = row_space_basis(field, vectors, len);
        let pivots = basis
            .iter()
            .map(|v| v.iter().position(|x| !field.is_zero(x)).expect("basis rows are nonzero"))
            .collect();
        Self { basis, pivots }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<F::Elem>] {
        &self.basis
    }

    /// True iff `v` reduces to zero against the basis, i.e. adjoining it
    /// leaves the rank unchanged.
    pub fn contains(&self, field: &F, v: &[F::Elem]) -> bool {
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if field.is_zero(&r[p]) {
                continue;
            }
            let factor = r[p].clone();
            for (x, y) in r.iter_mut().zip(row).skip(p) {
                *x = field.sub(x, &field.mul(&factor, y));
            }
        }
        r.iter().all(|x| field.is_zero(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{PrimeField, Rationals};
    use num_rational::BigRational;

    fn q(v: i64) -> BigRational {
        Rationals.from_i64(v)
    }

    fn qmat(rows: usize, cols: usize, vals: &[i64]) -> Matrix<Rationals> {
        Matrix::new(rows, cols, vals.iter().map(|&v| q(v)).collect()).unwrap()
    }

    #[test]
    fn rank_trivial_cases() {
        let f = PrimeField::default();
        assert_eq!(Matrix::identity(&f, 3).rank(&f), 3);
        assert_eq!(Matrix::<PrimeField>::new(2, 2, vec![1; 4]).unwrap().rank(&f), 1);
        assert_eq!(Matrix::zeros(&f, 4, 7).rank(&f), 0);
        assert_eq!(Matrix::identity(&Rationals, 3).rank(&Rationals), 3);
        assert_eq!(qmat(2, 2, &[1, 1, 1, 1]).rank(&Rationals), 1);
        assert_eq!(Matrix::zeros(&Rationals, 4, 7).rank(&Rationals), 0);
    }

    #[test]
    fn kernel_of_row_of_ones() {
        let m = qmat(1, 2, &[1, 1]);
        let k = m.kernel_basis(&Rationals);
        assert_eq!(k, vec![vec![q(1), q(-1)]]);
        assert!(Matrix::identity(&Rationals, 3).kernel_basis(&Rationals).is_empty());
    }

    #[test]
    fn kernel_of_rank_two() {
        let m = qmat(2, 4, &[1, 2, 3, 4, 0, 1, 5, -2]);
        let k = m.kernel_basis(&Rationals);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.mul_vec(&Rationals, v).iter().all(|x| *x == q(0)));
        }
    }

    #[test]
    fn solve_cases() {
        let f = PrimeField::default();
        let b = vec![5, 7, 11];
        assert_eq!(Matrix::identity(&f, 3).solve(&f, &b), Some(b));
        let m = qmat(1, 2, &[1, 1]);
        assert_eq!(m.solve(&Rationals, &[q(0)]), Some(vec![q(0), q(0)]));
        let m = qmat(2, 2, &[1, 1, 2, 2]);
        assert_eq!(m.solve(&Rationals, &[q(1), q(3)]), None);
        assert_eq!(m.solve(&Rationals, &[q(1), q(2)]), Some(vec![q(1), q(0)]));
    }

    #[test]
    fn bareiss_agrees_with_elimination() {
        let m = qmat(3, 4, &[2, -4, 6, 8, 1, -2, 3, 4, 0, 3, -1, 5]);
        let mut rows = m.to_rows();
        let plain = row_echelon(&Rationals, &mut rows, false).len();
        assert_eq!(m.rank(&Rationals), plain);
        assert_eq!(plain, 2);
    }

    #[test]
    fn echelon_span_membership() {
        let f = PrimeField::new(11).unwrap();
        let span = EchelonSpan::new(&f, vec![vec![1, 2, 0], vec![0, 1, 1]], 3);
        assert_eq!(span.dim(), 2);
        assert!(span.contains(&f, &[2, 5, 1]));
        assert!(!span.contains(&f, &[0, 0, 1]));
    }
}

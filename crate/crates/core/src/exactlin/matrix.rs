use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::scalar::{Field, Scalar};
use super::subspace::Subspace;
use crate::error::{dim_err, Error, Result};

/// A dense matrix over an exact field, stored row-major.
///
/// A matrix with `rows = d_out` and `cols = d_in` represents a linear map
/// `k^{d_in} -> k^{d_out}` acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Reduced row-echelon form together with rank and pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub reduced: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_fn(
        field: Field,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let s = f(r, c);
                assert_eq!(s.field(), field, "entry ({r},{c}) has the wrong field");
                data.push(s);
            }
        }
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Builds a matrix from rows; every entry must lie in `field`.
    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != c {
                return dim_err(format!("row {i} has {} entries, expected {c}", row.len()));
            }
            for s in row {
                if s.field() != field {
                    return Err(Error::FieldMismatch(field, s.field()));
                }
                data.push(s);
            }
        }
        Ok(Matrix {
            field,
            rows: r,
            cols: c,
            data,
        })
    }

    /// Integer matrix, convenient for tests and built-in examples.
    pub fn from_ints(field: Field, rows: usize, cols: usize, entries: &[i64]) -> Matrix {
        assert_eq!(entries.len(), rows * cols);
        Matrix::from_fn(field, rows, cols, |r, c| field.int(entries[r * cols + c]))
    }

    pub fn column_vector(field: Field, v: &[Scalar]) -> Matrix {
        Matrix::from_fn(field, v.len(), 1, |r, _| v[r].clone())
    }

    pub fn row_vector(field: Field, v: &[Scalar]) -> Matrix {
        Matrix::from_fn(field, 1, v.len(), |_, c| v[c].clone())
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(field: Field, rows: usize, cols: &[Vec<Scalar>]) -> Matrix {
        Matrix::from_fn(field, rows, cols.len(), |r, c| cols[c][r].clone())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, s: Scalar) {
        assert_eq!(s.field(), self.field, "entry has the wrong field");
        self.data[r * self.cols + c] = s;
    }

    pub(crate) fn entry_mut(&mut self, r: usize, c: usize) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |r, c| {
            self.get(c, r).clone()
        })
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    fn check_same(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same(other)?;
        if self.cols != other.rows {
            return dim_err(format!(
                "cannot compose {}x{} with {}x{}",
                self.rows, self.cols, other.rows, other.cols
            ));
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    out.data[i * other.cols + j].add_mul(a, b);
                }
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return dim_err("shape mismatch in addition");
        }
        Ok(Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn try_sub(&self, other: &Matrix) -> Result<Matrix> {
        self.try_add(&-other)
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length does not match matrix");
        (0..self.rows)
            .map(|r| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    acc.add_mul(a, b);
                }
                acc
            })
            .collect()
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        assert_eq!(self.field, other.field);
        Matrix::from_fn(self.field, self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        })
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        assert_eq!(self.field, other.field);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, self.rows, cols.len(), |r, c| {
            self.get(r, cols[c]).clone()
        })
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, rows.len(), self.cols, |r, c| {
            self.get(rows[r], c).clone()
        })
    }

    /// Reduced row-echelon form by Gauss-Jordan elimination.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    m.data.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            for j in c..cols {
                let v = m.get(r, j) * &inv;
                m.data[r * cols + j] = v;
            }
            let pivot_row: Vec<Scalar> = m.row(r)[c..].to_vec();
            crate::par::eliminate_rows(&mut m.data, cols, r, c, &pivot_row);
            pivots.push(c);
            r += 1;
        }
        Rref {
            reduced: m,
            rank: r,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// The null space `{x : self x = 0}`.
    pub fn kernel(&self) -> Subspace {
        let rr = self.rref();
        let mut basis = Vec::new();
        for f in (0..self.cols).filter(|c| !rr.pivots.contains(c)) {
            let mut v = vec![self.field.zero(); self.cols];
            v[f] = self.field.one();
            for (i, &pc) in rr.pivots.iter().enumerate() {
                v[pc] = -rr.reduced.get(i, f);
            }
            basis.push(v);
        }
        Subspace::span(self.field, self.cols, &basis)
    }

    /// The column space.
    pub fn image(&self) -> Subspace {
        Subspace::span(self.field, self.rows, &self.columns())
    }

    /// One solution of `self x = b` with free variables set to zero.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        let rhs = Matrix::column_vector(self.field, b);
        self.solve_matrix(&rhs).map(|x| x.column(0))
    }

    /// One solution `X` of `self X = b`, free variables zero.
    pub fn solve_matrix(&self, b: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, b.rows, "right-hand side has wrong height");
        let aug = self.hstack(b);
        let rr = aug.rref();
        if rr.pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(self.field, self.cols, b.cols);
        for (i, &pc) in rr.pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.data[pc * b.cols + j] = rr.reduced.get(i, self.cols + j).clone();
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let x = self.solve_matrix(&Matrix::identity(self.field, self.rows))?;
        (self.rank() == self.rows).then_some(x)
    }

    /// Kronecker product, with `(i, j) -> i * other.rows + j` on rows and
    /// likewise on columns. Panics on field mismatch; see [`super::kron`].
    pub fn kron(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.field, other.field, "field mismatch in kron");
        let (r2, c2) = (other.rows, other.cols);
        let mut out = Matrix::zeros(self.field, self.rows * r2, self.cols * c2);
        let oc = self.cols * c2;
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..r2 {
                    for l in 0..c2 {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.data[(i * r2 + k) * oc + j * c2 + l] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    #[track_caller]
    fn mul(self, rhs: &Matrix) -> Matrix {
        match self.try_mul(rhs) {
            Ok(m) => m,
            Err(e) => panic!("{e}"),
        }
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    #[track_caller]
    fn add(self, rhs: &Matrix) -> Matrix {
        match self.try_add(rhs) {
            Ok(m) => m,
            Err(e) => panic!("{e}"),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    #[track_caller]
    fn sub(self, rhs: &Matrix) -> Matrix {
        match self.try_sub(rhs) {
            Ok(m) => m,
            Err(e) => panic!("{e}"),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|s| s.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Matrices serialize as an array of rows.
impl serde::Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.rows))?;
        for r in 0..self.rows {
            seq.serialize_element(self.row(r))?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn rref_of_known_matrix() {
        let m = Matrix::from_ints(q(), 3, 4, &[1, 2, 1, 0, 2, 4, 0, 2, 3, 6, 1, 2]);
        let rr = m.rref();
        assert_eq!(rr.rank, 2);
        assert_eq!(rr.pivots, vec![0, 2]);
        let expect = Matrix::from_ints(q(), 3, 4, &[1, 2, 0, 1, 0, 0, 1, -1, 0, 0, 0, 0]);
        assert_eq!(rr.reduced, expect);
    }

    #[test]
    fn kernel_is_annihilated() {
        let m = Matrix::from_ints(q(), 2, 4, &[1, 2, 3, 4, 2, 4, 6, 9]);
        let k = m.kernel();
        assert_eq!(k.dim(), 2);
        for v in k.vectors() {
            assert!(m.apply(&v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn solve_and_inverse() {
        let m = Matrix::from_ints(q(), 2, 2, &[2, 1, 1, 1]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(q(), 2));
        let b = vec![q().int(3), q().int(2)];
        assert_eq!(m.solve(&b).unwrap(), vec![q().int(1), q().int(1)]);
        let sing = Matrix::from_ints(q(), 2, 2, &[1, 2, 2, 4]);
        assert!(sing.inverse().is_none());
        assert!(sing.solve(&[q().int(1), q().int(0)]).is_none());
    }

    #[test]
    fn kron_index_convention() {
        let a = Matrix::from_ints(q(), 2, 1, &[1, 2]);
        let b = Matrix::from_ints(q(), 2, 1, &[3, 5]);
        let k = a.kron(&b);
        assert_eq!(
            k.column(0),
            vec![q().int(3), q().int(5), q().int(6), q().int(10)]
        );
    }

    #[test]
    fn field_mismatch_is_an_error() {
        let a = Matrix::identity(q(), 2);
        let b = Matrix::identity(Field::prime(5).unwrap(), 2);
        assert!(matches!(a.try_mul(&b), Err(Error::FieldMismatch(..))));
        assert!(Matrix::from_rows(q(), vec![vec![Field::prime(5).unwrap().one()]]).is_err());
    }

    #[test]
    fn prime_field_rank_differs() {
        // det = 5 vanishes mod 5 but not over Q.
        let m_q = Matrix::from_ints(q(), 2, 2, &[1, 2, 3, 11]);
        let f5 = Field::prime(5).unwrap();
        let m_5 = Matrix::from_ints(f5, 2, 2, &[1, 2, 3, 11]);
        assert_eq!(m_q.rank(), 2);
        assert_eq!(m_5.rank(), 1);
    }
}

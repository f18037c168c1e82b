use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

use super::echelon::Echelon;
use super::subspace::Subspace;

/// Dense row-major matrix over a single field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    spec: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Index of `e_j ⊗ e_k` in the Kronecker basis of `V ⊗ W` with `dim W = right_dim`.
///
/// Every tensor in the crate uses this convention: `(j, k) ↦ j·right_dim + k`.
#[inline]
pub fn tensor_index(j: usize, k: usize, right_dim: usize) -> usize {
    j * right_dim + k
}

impl Matrix {
    pub fn zeros(spec: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            spec,
            rows,
            cols,
            data: vec![spec.zero(); rows * cols],
        }
    }

    pub fn identity(spec: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(spec, n, n);
        for i in 0..n {
            m.data[i * n + i] = spec.one();
        }
        m
    }

    pub fn from_fn(spec: FieldSpec, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { spec, rows, cols, data }
    }

    /// Builds a matrix from row vectors; every entry must belong to `spec`.
    pub fn from_rows(spec: FieldSpec, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::dims(format!("row {i} has length {}, expected {cols}", row.len())));
            }
            for s in row {
                if s.spec() != spec {
                    return Err(Error::FieldMismatch {
                        left: spec,
                        right: s.spec(),
                    });
                }
                data.push(s);
            }
        }
        Ok(Matrix {
            spec,
            rows: n,
            cols,
            data,
        })
    }

    pub fn from_columns(spec: FieldSpec, rows: usize, columns: &[Vec<Scalar>]) -> Result<Self> {
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::dims(format!("column {j} has length {}, expected {rows}", c.len())));
            }
        }
        Ok(Self::from_fn(spec, rows, columns.len(), |i, j| columns[j][i].clone()))
    }

    /// Convenience constructor from small integers.
    pub fn from_i64(spec: FieldSpec, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_fn(spec, rows.len(), cols, |i, j| spec.from_i64(rows[i][j]))
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        debug_assert_eq!(value.spec(), self.spec);
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vectors(&self) -> impl Iterator<Item = &[Scalar]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    /// Entries in row-major order (the `vec` of the matrix).
    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn from_entries(spec: FieldSpec, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::dims(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        Ok(Matrix { spec, rows, cols, data })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| {
                let e = self.get(i, j);
                if i == j { e.is_one() } else { e.is_zero() }
            }))
    }

    fn same_field(&self, other: &Matrix) -> Result<()> {
        if self.spec != other.spec {
            return Err(Error::FieldMismatch {
                left: self.spec,
                right: other.spec,
            });
        }
        Ok(())
    }

    pub fn checked_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        self.same_field(rhs)?;
        if self.cols != rhs.rows {
            return Err(Error::dims(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.spec, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j].add_mul_assign(a, b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix product; panics on shape or field mismatch.
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        self.checked_mul(rhs).expect("matrix product")
    }

    pub fn checked_mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::dims(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        let mut out = vec![self.spec.zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() {
                    o.add_mul_assign(a, x);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.checked_mul_vec(v).expect("matrix-vector product")
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.spec, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn checked_add(&self, rhs: &Matrix) -> Result<Matrix> {
        self.same_field(rhs)?;
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::dims("matrix sum of different shapes"));
        }
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.add(b)).collect();
        Ok(Matrix { data, ..self.clone_shape() })
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        self.checked_add(rhs).expect("matrix sum")
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        self.add(&rhs.scale(&self.spec.from_i64(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a.mul(c)).collect();
        Matrix { data, ..self.clone_shape() }
    }

    fn clone_shape(&self) -> Matrix {
        Matrix {
            spec: self.spec,
            rows: self.rows,
            cols: self.cols,
            data: Vec::new(),
        }
    }

    /// Linear combination `Σ c_i · m_i` of equally shaped matrices.
    pub fn combination(spec: FieldSpec, rows: usize, cols: usize, terms: &[(Scalar, &Matrix)]) -> Matrix {
        let mut out = Matrix::zeros(spec, rows, cols);
        for (c, m) in terms {
            if c.is_zero() {
                continue;
            }
            for (o, a) in out.data.iter_mut().zip(&m.data) {
                if !a.is_zero() {
                    o.add_mul_assign(c, a);
                }
            }
        }
        out
    }

    /// Kronecker product; entry `(i·rows(b) + k, j·cols(b) + l)` is `a[i][j]·b[k][l]`.
    pub fn kron(&self, rhs: &Matrix) -> Result<Matrix> {
        self.same_field(rhs)?;
        let (r, c) = (self.rows * rhs.rows, self.cols * rhs.cols);
        let mut out = Matrix::zeros(self.spec, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        let b = rhs.get(k, l);
                        if !b.is_zero() {
                            out.set(tensor_index(i, k, rhs.rows), tensor_index(j, l, rhs.cols), a.mul(b));
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn vstack(&self, lower: &Matrix) -> Result<Matrix> {
        self.same_field(lower)?;
        if self.cols != lower.cols {
            return Err(Error::dims("vstack of matrices with different column counts"));
        }
        let mut data = self.data.clone();
        data.extend(lower.data.iter().cloned());
        Ok(Matrix {
            spec: self.spec,
            rows: self.rows + lower.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn hstack(&self, right: &Matrix) -> Result<Matrix> {
        self.same_field(right)?;
        if self.rows != right.rows {
            return Err(Error::dims("hstack of matrices with different row counts"));
        }
        Ok(Matrix::from_fn(self.spec, self.rows, self.cols + right.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                right.get(i, j - self.cols).clone()
            }
        }))
    }

    /// The reduced row-echelon form (zero rows dropped) together with the rank.
    pub fn rref(&self) -> (Matrix, usize) {
        let mut e = Echelon::new(self.spec, self.cols);
        for row in self.row_vectors() {
            e.insert(row.to_vec());
        }
        let rank = e.rank();
        (e.to_matrix(), rank)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// `{v : self · v = 0}`.
    pub fn kernel(&self) -> Subspace {
        let (r, _) = self.rref();
        Subspace::from_rref(r).complement_kernel()
    }

    pub fn row_space(&self) -> Subspace {
        Subspace::from_rows(self)
    }

    /// Column space (image of `v ↦ self · v`).
    pub fn image(&self) -> Subspace {
        Subspace::from_rows(&self.transpose())
    }

    /// Some solution of `self · x = b`, with free variables set to zero, or
    /// `None` if the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if b.len() != self.rows {
            return Err(Error::dims(format!("right-hand side of length {} for {} rows", b.len(), self.rows)));
        }
        let aug = Matrix::from_fn(self.spec, self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let (r, _) = aug.rref();
        let mut x = vec![self.spec.zero(); self.cols];
        for row in r.row_vectors() {
            let pivot = row.iter().position(|s| !s.is_zero()).expect("rref rows are nonzero");
            if pivot == self.cols {
                return Ok(None);
            }
            x[pivot] = row[self.cols].clone();
        }
        Ok(Some(x))
    }

    /// Inverse of a square matrix, `None` if singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(self.spec, n)).ok()?;
        let (r, rank) = aug.rref();
        if rank < n || !(0..n).all(|i| r.get(i, i).is_one()) {
            return None;
        }
        Some(Matrix::from_fn(self.spec, n, n, |i, j| r.get(i, n + j).clone()))
    }

    /// Trace of a square matrix.
    pub fn trace(&self) -> Scalar {
        let mut t = self.spec.zero();
        for i in 0..self.rows.min(self.cols) {
            t = t.add(self.get(i, i));
        }
        t
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix<{}> {}x{} [", self.spec, self.rows, self.cols)?;
        for row in self.row_vectors() {
            let cells: Vec<String> = row.iter().map(|s| s.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

use super::echelon::Echelon;
use super::matrix::Matrix;

/// A subspace of `F^n`, stored by its reduced row-echelon basis.
///
/// The basis is canonical, so equality, hashing and ordering are structural.
/// The coordinates of a vector in the span are its entries at the pivot
/// columns.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(spec: FieldSpec, ambient: usize) -> Self {
        Subspace {
            basis: Matrix::zeros(spec, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(spec: FieldSpec, ambient: usize) -> Self {
        Subspace {
            basis: Matrix::identity(spec, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub(crate) fn from_echelon(e: Echelon) -> Self {
        let (spec, cols) = (e.spec(), e.cols());
        let (rows, pivots) = e.into_parts();
        Subspace {
            basis: Matrix::from_rows(spec, cols, rows).expect("echelon rows"),
            pivots,
        }
    }

    /// Wraps a matrix already in reduced row-echelon form without zero rows.
    pub(crate) fn from_rref(basis: Matrix) -> Self {
        let pivots = basis
            .row_vectors()
            .map(|r| r.iter().position(|s| !s.is_zero()).expect("rref rows are nonzero"))
            .collect();
        Subspace { basis, pivots }
    }

    pub fn span(spec: FieldSpec, ambient: usize, vectors: &[Vec<Scalar>]) -> Result<Self> {
        let mut e = Echelon::new(spec, ambient);
        for v in vectors {
            if v.len() != ambient {
                return Err(Error::dims(format!("vector of length {} in F^{ambient}", v.len())));
            }
            if let Some(s) = v.iter().find(|s| s.spec() != spec) {
                return Err(Error::FieldMismatch {
                    left: spec,
                    right: s.spec(),
                });
            }
            e.insert(v.clone());
        }
        Ok(Self::from_echelon(e))
    }

    /// Span of the rows of `m`.
    pub fn from_rows(m: &Matrix) -> Self {
        let mut e = Echelon::new(m.spec(), m.cols());
        for r in m.row_vectors() {
            e.insert(r.to_vec());
        }
        Self::from_echelon(e)
    }

    /// Span of the columns of `m`.
    pub fn from_columns(m: &Matrix) -> Self {
        m.image()
    }

    pub fn spec(&self) -> FieldSpec {
        self.basis.spec()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn codim(&self) -> usize {
        self.ambient_dim() - self.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim()
    }

    /// The canonical basis as the rows of a matrix.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vectors().map(<[Scalar]>::to_vec).collect()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.spec(), self.ambient_dim());
        for r in self.basis.row_vectors() {
            e.insert(r.to_vec());
        }
        e
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        if v.len() != self.ambient_dim() {
            return false;
        }
        self.coordinates(v).is_some()
    }

    /// Coordinates of `v` in the canonical basis, `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if v.len() != self.ambient_dim() {
            return None;
        }
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut w = v.to_vec();
        for (c, row) in coords.iter().zip(self.basis.row_vectors()) {
            if c.is_zero() {
                continue;
            }
            let neg = c.neg();
            for (x, r) in w.iter_mut().zip(row) {
                if !r.is_zero() {
                    x.add_mul_assign(&neg, r);
                }
            }
        }
        w.iter().all(Scalar::is_zero).then_some(coords)
    }

    /// The vector with the given coordinates.
    pub fn vector(&self, coords: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coords.len(), self.dim(), "coordinate length");
        let mut v = vec![self.spec().zero(); self.ambient_dim()];
        for (c, row) in coords.iter().zip(self.basis.row_vectors()) {
            if c.is_zero() {
                continue;
            }
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    x.add_mul_assign(c, r);
                }
            }
        }
        v
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim() == other.ambient_dim()
            && self.dim() <= other.dim()
            && self.basis.row_vectors().all(|r| other.contains(r))
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.spec() != other.spec() {
            return Err(Error::FieldMismatch {
                left: self.spec(),
                right: other.spec(),
            });
        }
        if self.ambient_dim() != other.ambient_dim() {
            return Err(Error::dims(format!(
                "subspaces of F^{} and F^{}",
                self.ambient_dim(),
                other.ambient_dim()
            )));
        }
        Ok(())
    }

    pub fn try_sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let mut e = self.echelon();
        for r in other.basis.row_vectors() {
            if e.is_full() {
                break;
            }
            e.insert(r.to_vec());
        }
        Ok(Self::from_echelon(e))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        self.try_sum(other).expect("subspace sum")
    }

    /// Intersection by the Zassenhaus block `[[U, U], [W, 0]]`: the rows of
    /// its echelon form whose left half vanishes span `U ∩ W`.
    pub fn try_intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        if self.is_zero() || other.is_full() {
            return Ok(self.clone());
        }
        if other.is_zero() || self.is_full() {
            return Ok(other.clone());
        }
        let n = self.ambient_dim();
        let spec = self.spec();
        let mut e = Echelon::new(spec, 2 * n);
        for r in self.basis.row_vectors() {
            let mut v = r.to_vec();
            v.extend(r.iter().cloned());
            e.insert(v);
        }
        for r in other.basis.row_vectors() {
            let mut v = r.to_vec();
            v.extend(std::iter::repeat_n(spec.zero(), n));
            e.insert(v);
        }
        let mut out = Echelon::new(spec, n);
        for (row, &p) in e.rows().iter().zip(e.pivots()) {
            if p >= n {
                out.insert(row[n..].to_vec());
            }
        }
        Ok(Self::from_echelon(out))
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        self.try_intersect(other).expect("subspace intersection")
    }

    /// Annihilator `{v : ⟨b, v⟩ = 0 for all basis vectors b}` under the
    /// standard pairing.
    pub fn perp(&self) -> Subspace {
        self.complement_kernel()
    }

    /// Null space of the basis matrix, read off from the reduced form.
    pub(crate) fn complement_kernel(&self) -> Subspace {
        let n = self.ambient_dim();
        let spec = self.spec();
        let mut is_pivot = vec![false; n];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut e = Echelon::new(spec, n);
        for f in (0..n).filter(|&c| !is_pivot[c]) {
            let mut v = vec![spec.zero(); n];
            v[f] = spec.one();
            for (row, &p) in self.basis.row_vectors().zip(&self.pivots) {
                v[p] = row[f].neg();
            }
            e.insert(v);
        }
        Self::from_echelon(e)
    }

    /// Columns outside the pivot set; the matching standard vectors span a
    /// complement.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient_dim()];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient_dim()).filter(|&c| !is_pivot[c]).collect()
    }

    /// Surjection `F^n → F^(n−d)` with kernel exactly this subspace. Row `j`
    /// reads the coordinate at the `j`-th non-pivot column after subtracting
    /// the part in the span.
    pub fn quotient_map(&self) -> Matrix {
        let n = self.ambient_dim();
        let spec = self.spec();
        let free = self.non_pivots();
        let mut p = Matrix::zeros(spec, free.len(), n);
        for (j, &c) in free.iter().enumerate() {
            p.set(j, c, spec.one());
            for (row, &piv) in self.basis.row_vectors().zip(&self.pivots) {
                if !row[c].is_zero() {
                    p.set(j, piv, row[c].neg());
                }
            }
        }
        p
    }

    /// `{v : m·v ∈ self}` for a linear map `m` into the ambient space.
    pub fn preimage(&self, m: &Matrix) -> Result<Subspace> {
        if m.rows() != self.ambient_dim() {
            return Err(Error::dims(format!(
                "map with {} rows into F^{}",
                m.rows(),
                self.ambient_dim()
            )));
        }
        if self.is_full() {
            return Ok(Subspace::full(m.spec(), m.cols()));
        }
        Ok(self.quotient_map().checked_mul(m)?.kernel())
    }

    /// `m·self` for a linear map `m` out of the ambient space.
    pub fn image_under(&self, m: &Matrix) -> Result<Subspace> {
        if m.cols() != self.ambient_dim() {
            return Err(Error::dims(format!(
                "map with {} columns on F^{}",
                m.cols(),
                self.ambient_dim()
            )));
        }
        let mut e = Echelon::new(m.spec(), m.rows());
        for r in self.basis.row_vectors() {
            e.insert(m.checked_mul_vec(r)?);
        }
        Ok(Self::from_echelon(e))
    }

    pub fn is_invariant_under(&self, m: &Matrix) -> bool {
        m.is_square()
            && m.cols() == self.ambient_dim()
            && self.basis.row_vectors().all(|r| self.contains(&m.mul_vec(r)))
    }

    /// Matrix of `m` restricted to this (invariant) subspace, in the canonical
    /// basis: column `i` holds the coordinates of `m·b_i`.
    pub fn restrict(&self, m: &Matrix) -> Result<Matrix> {
        let d = self.dim();
        let mut cols = Vec::with_capacity(d);
        for r in self.basis.row_vectors() {
            let img = m.checked_mul_vec(r)?;
            cols.push(
                self.coordinates(&img)
                    .ok_or_else(|| Error::InvalidParameter("subspace is not invariant".into()))?,
            );
        }
        Matrix::from_columns(self.spec(), d, &cols)
    }

    /// Matrix of the map induced by `m` on the quotient by this (invariant)
    /// subspace, in the coordinates given by [`Subspace::quotient_map`].
    pub fn induced_on_quotient(&self, m: &Matrix) -> Result<Matrix> {
        if !self.is_invariant_under(m) {
            return Err(Error::InvalidParameter("subspace is not invariant".into()));
        }
        let p = self.quotient_map();
        let spec = self.spec();
        let n = self.ambient_dim();
        let free = self.non_pivots();
        let lift: Vec<Vec<Scalar>> = free
            .iter()
            .map(|&c| {
                let mut v = vec![spec.zero(); n];
                v[c] = spec.one();
                v
            })
            .collect();
        let cols: Vec<Vec<Scalar>> = lift.iter().map(|v| p.mul_vec(&m.mul_vec(v))).collect();
        Matrix::from_columns(spec, free.len(), &cols)
    }

    /// Standard-basis extension of the canonical basis to a basis of the
    /// ambient space, as the rows of an invertible matrix.
    pub fn extended_basis(&self) -> Matrix {
        let spec = self.spec();
        let n = self.ambient_dim();
        let mut rows = self.basis_vectors();
        for c in self.non_pivots() {
            let mut v = vec![spec.zero(); n];
            v[c] = spec.one();
            rows.push(v);
        }
        Matrix::from_rows(spec, n, rows).expect("extended basis")
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subspace {
    /// By ambient dimension, then dimension, then basis entries.
    fn cmp(&self, other: &Self) -> Ordering {
        self.ambient_dim()
            .cmp(&other.ambient_dim())
            .then(self.dim().cmp(&other.dim()))
            .then_with(|| self.basis.entries().cmp(other.basis.entries()))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace<{}>(dim {} in {}) [", self.spec(), self.dim(), self.ambient_dim())?;
        for (i, r) in self.basis.row_vectors().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let cells: Vec<String> = r.iter().map(|s| s.to_string()).collect();
            write!(f, "({})", cells.join(" "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for Subspace {
    /// `span{(1 0 2), (0 1 1)}` in the canonical basis.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{{")?;
        for (i, r) in self.basis.row_vectors().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let cells: Vec<String> = r.iter().map(|s| s.to_string()).collect();
            write!(f, "({})", cells.join(" "))?;
        }
        write!(f, "}}")
    }
}

impl serde::Serialize for Subspace {
    /// `{"dim": d, "basis": [["1", "0"], …]}` in the canonical basis.
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let rows: Vec<Vec<String>> = self
            .basis
            .row_vectors()
            .map(|r| r.iter().map(|x| x.to_string()).collect())
            .collect();
        let mut st = serializer.serialize_struct("Subspace", 2)?;
        st.serialize_field("dim", &self.dim())?;
        st.serialize_field("basis", &rows)?;
        st.end()
    }
}

use crate::field::{FieldSpec, Scalar};

use super::matrix::Matrix;

/// Incrementally maintained reduced row-echelon basis.
///
/// Rows are kept sorted by pivot column, normalised to a leading one, and
/// every pivot column is zero in all other rows. Large constraint systems are
/// fed in row by row so only the independent rows are ever stored.
#[derive(Clone, Debug)]
pub struct Echelon {
    spec: FieldSpec,
    cols: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(spec: FieldSpec, cols: usize) -> Self {
        Echelon {
            spec,
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    /// Subtracts the stored rows from `v` so that `v` vanishes on every pivot.
    pub fn reduce(&self, v: &mut [Scalar]) {
        debug_assert_eq!(v.len(), self.cols);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].neg();
            for (x, r) in v.iter_mut().zip(row).skip(p) {
                if !r.is_zero() {
                    x.add_mul_assign(&c, r);
                }
            }
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Scalar::is_zero)
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<Scalar>) -> bool {
        assert_eq!(v.len(), self.cols, "echelon row length");
        self.reduce(&mut v);
        let Some(q) = v.iter().position(|s| !s.is_zero()) else {
            return false;
        };
        let inv = v[q].inv().expect("nonzero pivot");
        for x in v.iter_mut().skip(q) {
            if !x.is_zero() {
                *x = x.mul(&inv);
            }
        }
        for row in &mut self.rows {
            if row[q].is_zero() {
                continue;
            }
            let c = row[q].neg();
            for (x, r) in row.iter_mut().zip(&v).skip(q) {
                if !r.is_zero() {
                    x.add_mul_assign(&c, r);
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < q);
        self.pivots.insert(at, q);
        self.rows.insert(at, v);
        true
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols
    }

    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_rows(self.spec, self.cols, self.rows.clone()).expect("echelon rows")
    }

    pub fn into_parts(self) -> (Vec<Vec<Scalar>>, Vec<usize>) {
        (self.rows, self.pivots)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_keeps_reduced_form() {
        let q = FieldSpec::Rationals;
        let mut e = Echelon::new(q, 3);
        assert!(e.insert(vec![q.from_i64(0), q.from_i64(2), q.from_i64(4)]));
        assert!(e.insert(vec![q.from_i64(3), q.from_i64(1), q.from_i64(0)]));
        assert!(!e.insert(vec![q.from_i64(3), q.from_i64(3), q.from_i64(4)]));
        assert_eq!(e.pivots(), &[0, 1]);
        let m = e.to_matrix();
        assert_eq!(
            m,
            Matrix::from_rows(q, 3, vec![
                vec![q.one(), q.zero(), q.fraction(-2, 3).unwrap()],
                vec![q.zero(), q.one(), q.from_i64(2)],
            ])
            .unwrap()
        );
    }
}

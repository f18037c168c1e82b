use crate::axioms::{Axiom, AxiomReport, AxiomViolation};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{tensor_index, Echelon, Matrix, Subspace};

use super::coalgebra::unit;

/// A finite-dimensional associative unital algebra by structure constants.
///
/// `mul` is `d × d²`: column [`tensor_index`]`(j, k, d)` holds `e_j · e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSC {
    dim: usize,
    mul: Matrix,
    one: Vec<Scalar>,
    products: Vec<Vec<(usize, Scalar)>>,
}

impl AlgebraSC {
    /// Checks shapes only; the axioms are left to [`AlgebraSC::validate`].
    pub fn unchecked(mul: Matrix, one: Vec<Scalar>) -> Result<Self> {
        let d = mul.rows();
        if mul.cols() != d * d {
            return Err(Error::dims(format!("multiplication must be {d}x{}, got {}x{}", d * d, mul.rows(), mul.cols())));
        }
        if one.len() != d {
            return Err(Error::dims(format!("unit has {} entries, expected {d}", one.len())));
        }
        let products = (0..d * d)
            .map(|col| {
                (0..d)
                    .filter_map(|i| {
                        let c = mul.get(i, col);
                        (!c.is_zero()).then(|| (i, c.clone()))
                    })
                    .collect()
            })
            .collect();
        Ok(AlgebraSC { dim: d, mul, one, products })
    }

    pub fn new(mul: Matrix, one: Vec<Scalar>) -> Result<Self> {
        let a = Self::unchecked(mul, one)?;
        let report = a.validate();
        if !report.passed() {
            return Err(Error::InvalidAlgebra(report.to_string()));
        }
        Ok(a)
    }

    /// Builds an algebra from a product table on basis elements.
    pub fn from_table(
        spec: FieldSpec,
        dim: usize,
        mut product: impl FnMut(usize, usize) -> Vec<Scalar>,
        one: Vec<Scalar>,
    ) -> Result<Self> {
        let mut mul = Matrix::zeros(spec, dim, dim * dim);
        for j in 0..dim {
            for k in 0..dim {
                let v = product(j, k);
                if v.len() != dim {
                    return Err(Error::dims("product vector of wrong length"));
                }
                for (i, x) in v.into_iter().enumerate() {
                    if !x.is_zero() {
                        mul.set(i, tensor_index(j, k, dim), x);
                    }
                }
            }
        }
        Self::new(mul, one)
    }

    pub fn spec(&self) -> FieldSpec {
        self.mul.spec()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mul(&self) -> &Matrix {
        &self.mul
    }

    pub fn one(&self) -> &[Scalar] {
        &self.one
    }

    pub fn basis_element(&self, i: usize) -> Vec<Scalar> {
        unit(self.spec(), self.dim, i)
    }

    fn basis_product(&self, j: usize, k: usize) -> &[(usize, Scalar)] {
        &self.products[tensor_index(j, k, self.dim)]
    }

    pub fn product(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.spec().zero(); self.dim];
        for (j, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a.mul(b);
                for (i, c) in self.basis_product(j, k) {
                    out[*i].add_mul_assign(&ab, c);
                }
            }
        }
        out
    }

    /// Matrix of `y ↦ x·y`.
    pub fn left_mult(&self, x: &[Scalar]) -> Matrix {
        let d = self.dim;
        let mut m = Matrix::zeros(self.spec(), d, d);
        for (j, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for k in 0..d {
                for (i, c) in self.basis_product(j, k) {
                    let v = m.get(*i, k).add(&a.mul(c));
                    m.set(*i, k, v);
                }
            }
        }
        m
    }

    /// Matrix of `y ↦ y·x`.
    pub fn right_mult(&self, x: &[Scalar]) -> Matrix {
        let d = self.dim;
        let mut m = Matrix::zeros(self.spec(), d, d);
        for (k, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for j in 0..d {
                for (i, c) in self.basis_product(j, k) {
                    let v = m.get(*i, j).add(&a.mul(c));
                    m.set(*i, j, v);
                }
            }
        }
        m
    }

    pub fn validate(&self) -> AxiomReport {
        let d = self.dim;
        let mut report = AxiomReport::default();
        'outer: for a in 0..d {
            for b in 0..d {
                let ab = self.product(&self.basis_element(a), &self.basis_element(b));
                for c in 0..d {
                    let lhs = self.product(&ab, &self.basis_element(c));
                    let bc = self.product(&self.basis_element(b), &self.basis_element(c));
                    let rhs = self.product(&self.basis_element(a), &bc);
                    if let Some(i) = (0..d).find(|&i| lhs[i] != rhs[i]) {
                        report.record(AxiomViolation {
                            axiom: Axiom::Associativity,
                            position: format!("(e_{a}·e_{b})·e_{c} at e_{i}"),
                            left: lhs[i].clone(),
                            right: rhs[i].clone(),
                        });
                        break 'outer;
                    }
                }
            }
        }
        for k in 0..d {
            let e = self.basis_element(k);
            for (axiom, v) in [
                (Axiom::LeftUnit, self.product(&self.one, &e)),
                (Axiom::RightUnit, self.product(&e, &self.one)),
            ] {
                if report.has(axiom) {
                    continue;
                }
                if let Some(i) = (0..d).find(|&i| v[i] != e[i]) {
                    report.record(AxiomViolation {
                        axiom,
                        position: format!("e_{k} at e_{i}"),
                        left: v[i].clone(),
                        right: e[i].clone(),
                    });
                }
            }
        }
        report
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.dim;
        (0..d).all(|j| (0..d).all(|k| self.basis_product(j, k) == self.basis_product(k, j)))
    }

    /// The opposite algebra, `e_j ·ᵒᵖ e_k = e_k · e_j`.
    pub fn opposite(&self) -> AlgebraSC {
        let d = self.dim;
        let mul = Matrix::from_fn(self.spec(), d, d * d, |i, col| {
            let (j, k) = (col / d, col % d);
            self.mul.get(i, tensor_index(k, j, d)).clone()
        });
        AlgebraSC::unchecked(mul, self.one.clone()).expect("opposite shape")
    }

    /// Direct product `A × B`; the basis of `B` follows that of `A`.
    pub fn direct_product(&self, other: &AlgebraSC) -> Result<AlgebraSC> {
        let (d, e) = (self.dim, other.dim);
        let spec = self.spec();
        let mut one = self.one.clone();
        one.extend(other.one.iter().cloned());
        AlgebraSC::from_table(
            spec,
            d + e,
            |j, k| {
                let mut v = vec![spec.zero(); d + e];
                if j < d && k < d {
                    for (i, c) in self.basis_product(j, k) {
                        v[*i] = c.clone();
                    }
                } else if j >= d && k >= d {
                    for (i, c) in other.basis_product(j - d, k - d) {
                        v[d + i] = c.clone();
                    }
                }
                v
            },
            one,
        )
    }

    /// Span of all products `x·y` with `x ∈ I`, `y ∈ J`.
    pub fn subspace_product(&self, i: &Subspace, j: &Subspace) -> Subspace {
        let mut e = Echelon::new(self.spec(), self.dim);
        for x in i.basis().row_vectors() {
            for y in j.basis().row_vectors() {
                if e.is_full() {
                    break;
                }
                e.insert(self.product(x, y));
            }
        }
        Subspace::from_rows(&e.to_matrix())
    }

    /// `I^k`, with `I^0` the whole algebra.
    pub fn subspace_power(&self, i: &Subspace, k: usize) -> Subspace {
        let mut p = Subspace::full(self.spec(), self.dim);
        for _ in 0..k {
            p = self.subspace_product(&p, i);
        }
        p
    }

    /// Smallest `k ≥ 1` with `I^k = 0`, if any.
    pub fn nilpotency_index(&self, i: &Subspace) -> Option<usize> {
        if i.is_zero() {
            return Some(1);
        }
        let mut p = i.clone();
        for k in 1..=self.dim + 1 {
            if p.is_zero() {
                return Some(k);
            }
            p = self.subspace_product(&p, i);
        }
        None
    }

    pub fn is_left_ideal(&self, s: &Subspace) -> bool {
        (0..self.dim).all(|k| s.is_invariant_under(&self.left_mult(&self.basis_element(k))))
    }

    pub fn is_right_ideal(&self, s: &Subspace) -> bool {
        (0..self.dim).all(|k| s.is_invariant_under(&self.right_mult(&self.basis_element(k))))
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        self.is_left_ideal(s) && self.is_right_ideal(s)
    }

    /// `A / I` for a two-sided ideal `I`, together with the projection
    /// `A → A/I` (see [`Subspace::quotient_map`]).
    pub fn quotient(&self, ideal: &Subspace) -> Result<(AlgebraSC, Matrix)> {
        if ideal.ambient_dim() != self.dim {
            return Err(Error::dims("ideal lives in a different space"));
        }
        if !self.is_ideal(ideal) {
            return Err(Error::InvalidParameter("subspace is not a two-sided ideal".into()));
        }
        let p = ideal.quotient_map();
        let lifts = ideal.non_pivots();
        let q = lifts.len();
        let mut mul = Matrix::zeros(self.spec(), q, q * q);
        for (a, &ja) in lifts.iter().enumerate() {
            for (b, &jb) in lifts.iter().enumerate() {
                let mut v = vec![self.spec().zero(); self.dim];
                for (i, c) in self.basis_product(ja, jb) {
                    v[*i] = c.clone();
                }
                for (r, x) in p.mul_vec(&v).into_iter().enumerate() {
                    mul.set(r, tensor_index(a, b, q), x);
                }
            }
        }
        let one = p.mul_vec(&self.one);
        Ok((AlgebraSC::unchecked(mul, one)?, p))
    }

    /// `M_n(F)` with `E_ij` at index `i·n + j`.
    pub fn full_matrix(spec: FieldSpec, n: usize) -> Result<AlgebraSC> {
        if n == 0 {
            return Err(Error::InvalidParameter("matrix size must be at least 1".into()));
        }
        let le = vec![vec![true; n]; n];
        Self::incidence(spec, &le)
    }

    /// Incidence algebra of a preorder given by `le[i][j] ⟺ i ≤ j`
    /// (reflexive and transitive): basis `e_ij` for `i ≤ j`, ordered
    /// lexicographically, with `e_ij·e_jk = e_ik`.
    pub fn incidence(spec: FieldSpec, le: &[Vec<bool>]) -> Result<AlgebraSC> {
        let n = le.len();
        for i in 0..n {
            if le[i].len() != n || !le[i][i] {
                return Err(Error::InvalidParameter("relation must be square and reflexive".into()));
            }
            for j in 0..n {
                for k in 0..n {
                    if le[i][j] && le[j][k] && !le[i][k] {
                        return Err(Error::InvalidParameter("relation must be transitive".into()));
                    }
                }
            }
        }
        let pairs = incidence_pairs(le);
        let index = |i: usize, j: usize| pairs.iter().position(|&p| p == (i, j));
        let d = pairs.len();
        let mut one = vec![spec.zero(); d];
        for i in 0..n {
            one[index(i, i).expect("reflexive")] = spec.one();
        }
        Self::from_table(
            spec,
            d,
            |a, b| {
                let mut v = vec![spec.zero(); d];
                let ((i, j), (k, l)) = (pairs[a], pairs[b]);
                if j == k {
                    v[index(i, l).expect("transitive")] = spec.one();
                }
                v
            },
            one,
        )
    }

    /// Upper triangular `n × n` matrices.
    pub fn upper_triangular(spec: FieldSpec, n: usize) -> Result<AlgebraSC> {
        let le: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| i <= j).collect()).collect();
        Self::incidence(spec, &le)
    }
}

/// Basis pairs of an incidence algebra in the order used by
/// [`AlgebraSC::incidence`].
pub fn incidence_pairs(le: &[Vec<bool>]) -> Vec<(usize, usize)> {
    let n = le.len();
    (0..n)
        .flat_map(|i| (0..n).filter(move |&j| le[i][j]).map(move |j| (i, j)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_algebra_is_noncommutative_and_valid() {
        let q = FieldSpec::Rationals;
        let m2 = AlgebraSC::full_matrix(q, 2).unwrap();
        assert_eq!(m2.dim(), 4);
        assert!(!m2.is_commutative());
        assert!(m2.validate().passed());
        assert!(!m2.opposite().is_commutative());
    }

    #[test]
    fn broken_associativity_is_located() {
        let q = FieldSpec::Rationals;
        let m2 = AlgebraSC::full_matrix(q, 2).unwrap();
        let mut mul = m2.mul().clone();
        mul.set(0, tensor_index(0, 1, 4), q.one());
        let bad = AlgebraSC::unchecked(mul, m2.one().to_vec()).unwrap();
        let r = bad.validate();
        assert!(!r.passed());
    }

    #[test]
    fn quotient_of_upper_triangular_by_radical() {
        let f3 = FieldSpec::prime(3).unwrap();
        let t = AlgebraSC::upper_triangular(f3, 2).unwrap();
        // basis e00, e01, e11: the radical is span{e01}
        let rad = Subspace::span(f3, 3, &[t.basis_element(1)]).unwrap();
        assert!(t.is_ideal(&rad));
        let (qa, p) = t.quotient(&rad).unwrap();
        assert_eq!(qa.dim(), 2);
        assert_eq!(p.rows(), 2);
        assert!(qa.validate().passed());
        assert!(qa.is_commutative());
        assert_eq!(t.nilpotency_index(&rad), Some(2));
    }
}

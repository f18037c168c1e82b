use crate::axioms::{Axiom, AxiomReport, AxiomViolation};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{tensor_index, Matrix, Subspace};

use super::algebra::AlgebraSC;

/// A finite-dimensional coalgebra given by structure constants.
///
/// `delta` is `n² × n`: column `i` holds `Δ(e_i)` in the basis `e_j ⊗ e_k`,
/// row [`tensor_index`]`(j, k, n)`. `epsilon` holds `ε(e_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra {
    dim: usize,
    delta: Matrix,
    epsilon: Vec<Scalar>,
    terms: Vec<Vec<(usize, usize, Scalar)>>,
}

fn sparse_terms(delta: &Matrix, n: usize) -> Vec<Vec<(usize, usize, Scalar)>> {
    (0..n)
        .map(|i| {
            let mut t = Vec::new();
            for j in 0..n {
                for k in 0..n {
                    let c = delta.get(tensor_index(j, k, n), i);
                    if !c.is_zero() {
                        t.push((j, k, c.clone()));
                    }
                }
            }
            t
        })
        .collect()
}

impl Coalgebra {
    /// Checks shapes only; the axioms are left to [`Coalgebra::validate`].
    pub fn unchecked(delta: Matrix, epsilon: Vec<Scalar>) -> Result<Self> {
        let n = delta.cols();
        if delta.rows() != n * n {
            return Err(Error::dims(format!(
                "comultiplication must be {}x{n}, got {}x{}",
                n * n,
                delta.rows(),
                delta.cols()
            )));
        }
        if epsilon.len() != n {
            return Err(Error::dims(format!("counit has {} entries, expected {n}", epsilon.len())));
        }
        if n == 0 {
            return Err(Error::InvalidCoalgebra("a coalgebra must be nonzero".into()));
        }
        if let Some(s) = epsilon.iter().find(|s| s.spec() != delta.spec()) {
            return Err(Error::FieldMismatch {
                left: delta.spec(),
                right: s.spec(),
            });
        }
        let terms = sparse_terms(&delta, n);
        Ok(Coalgebra {
            dim: n,
            delta,
            epsilon,
            terms,
        })
    }

    /// Builds and validates a coalgebra.
    pub fn new(delta: Matrix, epsilon: Vec<Scalar>) -> Result<Self> {
        let c = Self::unchecked(delta, epsilon)?;
        let report = c.validate();
        if !report.passed() {
            return Err(Error::InvalidCoalgebra(report.to_string()));
        }
        Ok(c)
    }

    /// Builds a coalgebra from triples `(i, j, k, c)` meaning that `e_j ⊗ e_k`
    /// occurs in `Δ(e_i)` with coefficient `c`. Repeated triples add up.
    pub fn from_terms(
        spec: FieldSpec,
        dim: usize,
        terms: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
        epsilon: Vec<Scalar>,
    ) -> Result<Self> {
        let mut delta = Matrix::zeros(spec, dim * dim, dim);
        for (i, j, k, c) in terms {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::dims(format!("index ({i}, {j}, {k}) out of range for dimension {dim}")));
            }
            let r = tensor_index(j, k, dim);
            let v = delta.get(r, i).try_add(&c)?;
            delta.set(r, i, v);
        }
        Self::new(delta, epsilon)
    }

    pub fn spec(&self) -> FieldSpec {
        self.delta.spec()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn delta(&self) -> &Matrix {
        &self.delta
    }

    pub fn epsilon(&self) -> &[Scalar] {
        &self.epsilon
    }

    /// Nonzero `(j, k, c)` with `c · e_j ⊗ e_k` a summand of `Δ(e_i)`.
    pub fn terms(&self, i: usize) -> &[(usize, usize, Scalar)] {
        &self.terms[i]
    }

    pub fn validate(&self) -> AxiomReport {
        let n = self.dim;
        let spec = self.spec();
        let mut report = AxiomReport::default();
        for i in 0..n {
            if report.has(Axiom::Coassociativity) {
                break;
            }
            let mut lhs = vec![spec.zero(); n * n * n];
            let mut rhs = vec![spec.zero(); n * n * n];
            for (j, k, c) in &self.terms[i] {
                for (a, b, d) in &self.terms[*j] {
                    lhs[tensor_index(tensor_index(*a, *b, n), *k, n)].add_mul_assign(c, d);
                }
                for (a, b, d) in &self.terms[*k] {
                    rhs[tensor_index(tensor_index(*j, *a, n), *b, n)].add_mul_assign(c, d);
                }
            }
            if let Some(r) = (0..n * n * n).find(|&r| lhs[r] != rhs[r]) {
                let (a, b, k) = (r / (n * n), (r / n) % n, r % n);
                report.record(AxiomViolation {
                    axiom: Axiom::Coassociativity,
                    position: format!("Δ(e_{i}) at e_{a}⊗e_{b}⊗e_{k}"),
                    left: lhs[r].clone(),
                    right: rhs[r].clone(),
                });
            }
        }
        for i in 0..n {
            let mut left = vec![spec.zero(); n];
            let mut right = vec![spec.zero(); n];
            for (j, k, c) in &self.terms[i] {
                left[*k].add_mul_assign(&self.epsilon[*j], c);
                right[*j].add_mul_assign(&self.epsilon[*k], c);
            }
            for (axiom, side) in [(Axiom::LeftCounit, &left), (Axiom::RightCounit, &right)] {
                if report.has(axiom) {
                    continue;
                }
                if let Some(r) = (0..n).find(|&r| side[r] != if r == i { spec.one() } else { spec.zero() }) {
                    report.record(AxiomViolation {
                        axiom,
                        position: format!("e_{i} at e_{r}"),
                        left: side[r].clone(),
                        right: if r == i { spec.one() } else { spec.zero() },
                    });
                }
            }
        }
        report
    }

    /// `Δ(v)` as an `n × n` matrix whose `(j, k)` entry is the coefficient of
    /// `e_j ⊗ e_k`.
    pub fn coproduct(&self, v: &[Scalar]) -> Matrix {
        let n = self.dim;
        let mut data = vec![self.spec().zero(); n * n];
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, k, c) in &self.terms[i] {
                data[tensor_index(*j, *k, n)].add_mul_assign(x, c);
            }
        }
        Matrix::from_entries(self.spec(), n, n, data).expect("coproduct shape")
    }

    pub fn counit(&self, v: &[Scalar]) -> Scalar {
        let mut s = self.spec().zero();
        for (x, e) in v.iter().zip(&self.epsilon) {
            s.add_mul_assign(x, e);
        }
        s
    }

    /// Whether `Δ = τ ∘ Δ` with `τ` the tensor flip.
    pub fn is_cocommutative(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| self.delta.get(tensor_index(j, k, n), i) == self.delta.get(tensor_index(k, j, n), i))))
    }

    /// The convolution algebra `C*` in the dual basis: `(e_j*·e_k*)(e_i)` is
    /// the coefficient of `e_j ⊗ e_k` in `Δ(e_i)`, and the unit is `ε`.
    pub fn dual_algebra(&self) -> AlgebraSC {
        let a = AlgebraSC::unchecked(self.delta.transpose(), self.epsilon.clone()).expect("dual algebra shape");
        debug_assert!(a.validate().passed(), "dual of a valid coalgebra is an algebra");
        a
    }

    /// The coalgebra dual to a finite-dimensional algebra.
    pub fn dual_of(a: &AlgebraSC) -> Result<Coalgebra> {
        Coalgebra::new(a.mul().transpose(), a.one().to_vec())
    }

    /// Matrix of the left action `f ⇀ c = Σ c₁ f(c₂)` on `C`.
    pub fn left_action(&self, f: &[Scalar]) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zeros(self.spec(), n, n);
        for i in 0..n {
            for (j, k, c) in &self.terms[i] {
                if !f[*k].is_zero() {
                    let v = m.get(*j, i).add(&c.mul(&f[*k]));
                    m.set(*j, i, v);
                }
            }
        }
        m
    }

    /// Matrix of the right action `c ↼ f = Σ f(c₁) c₂` on `C`.
    pub fn right_action(&self, f: &[Scalar]) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zeros(self.spec(), n, n);
        for i in 0..n {
            for (j, k, c) in &self.terms[i] {
                if !f[*j].is_zero() {
                    let v = m.get(*k, i).add(&c.mul(&f[*j]));
                    m.set(*k, i, v);
                }
            }
        }
        m
    }

    /// The left actions of the dual basis functionals `e_k*`.
    pub fn left_action_basis(&self) -> Vec<Matrix> {
        (0..self.dim).map(|k| self.left_action(&unit(self.spec(), self.dim, k))).collect()
    }

    /// The right actions of the dual basis functionals `e_k*`.
    pub fn right_action_basis(&self) -> Vec<Matrix> {
        (0..self.dim).map(|k| self.right_action(&unit(self.spec(), self.dim, k))).collect()
    }

    fn check_subspace(&self, s: &Subspace) -> Result<()> {
        if s.ambient_dim() != self.dim {
            return Err(Error::dims(format!("subspace of F^{} in a coalgebra of dimension {}", s.ambient_dim(), self.dim)));
        }
        if s.spec() != self.spec() {
            return Err(Error::FieldMismatch {
                left: self.spec(),
                right: s.spec(),
            });
        }
        Ok(())
    }

    /// Right coideal test: `Δ(K) ⊆ K ⊗ C`.
    pub fn is_right_coideal(&self, k: &Subspace) -> Result<bool> {
        self.check_subspace(k)?;
        Ok(k.basis().row_vectors().all(|v| {
            let x = self.coproduct(v);
            (0..self.dim).all(|col| k.contains(&x.column(col)))
        }))
    }

    /// Left coideal test: `Δ(K) ⊆ C ⊗ K`.
    pub fn is_left_coideal(&self, k: &Subspace) -> Result<bool> {
        self.check_subspace(k)?;
        Ok(k.basis().row_vectors().all(|v| {
            let x = self.coproduct(v);
            (0..self.dim).all(|row| k.contains(x.row(row)))
        }))
    }

    /// `Δ(B) ⊆ (B ⊗ C) ∩ (C ⊗ B)`.
    pub fn is_bicoideal(&self, k: &Subspace) -> Result<bool> {
        Ok(self.is_right_coideal(k)? && self.is_left_coideal(k)?)
    }

    /// `Δ(S) ⊆ S ⊗ S`.
    pub fn is_subcoalgebra(&self, s: &Subspace) -> Result<bool> {
        self.is_bicoideal(s)
    }

    /// `K ∧ L = Δ⁻¹(K ⊗ C + C ⊗ L)`, computed as the kernel of
    /// `(π_K ⊗ π_L) ∘ Δ` where `π_K`, `π_L` are surjections with kernels
    /// `K`, `L`.
    pub fn wedge(&self, k: &Subspace, l: &Subspace) -> Result<Subspace> {
        self.check_subspace(k)?;
        self.check_subspace(l)?;
        let n = self.dim;
        if k.is_full() || l.is_full() {
            return Ok(Subspace::full(self.spec(), n));
        }
        let pk = k.quotient_map();
        let pl_t = l.quotient_map().transpose();
        let (r, s) = (pk.rows(), pl_t.cols());
        let mut constraints = Matrix::zeros(self.spec(), r * s, n);
        for i in 0..n {
            let x = pk.mul(&Matrix::from_entries(self.spec(), n, n, self.delta.column(i)).expect("square")).mul(&pl_t);
            for (idx, v) in x.entries().iter().enumerate() {
                if !v.is_zero() {
                    constraints.set(idx, i, v.clone());
                }
            }
        }
        Ok(constraints.kernel())
    }

    /// The same coalgebra in the basis `T e_i`: `Δ' = (T ⊗ T) Δ T⁻¹`,
    /// `ε' = ε T⁻¹`. Under it a subspace `K` corresponds to `T·K`.
    pub fn transform(&self, t: &Matrix) -> Result<Coalgebra> {
        let n = self.dim;
        if t.rows() != n || t.cols() != n {
            return Err(Error::dims(format!("basis change must be {n}x{n}")));
        }
        let t_inv = t
            .inverse()
            .ok_or_else(|| Error::InvalidParameter("basis change is singular".into()))?;
        let t_tr = t.transpose();
        let mut delta = Matrix::zeros(self.spec(), n * n, n);
        let mut epsilon = Vec::with_capacity(n);
        for i in 0..n {
            let pre = t_inv.column(i);
            let x = t.mul(&self.coproduct(&pre)).mul(&t_tr);
            for (idx, v) in x.entries().iter().enumerate() {
                delta.set(idx, i, v.clone());
            }
            epsilon.push(self.counit(&pre));
        }
        Coalgebra::new(delta, epsilon)
    }

    /// Direct sum `C ⊕ D`; the basis of `D` follows that of `C`.
    pub fn direct_sum(&self, other: &Coalgebra) -> Result<Coalgebra> {
        if self.spec() != other.spec() {
            return Err(Error::FieldMismatch {
                left: self.spec(),
                right: other.spec(),
            });
        }
        let n = self.dim;
        let mut terms = Vec::new();
        for i in 0..n {
            terms.extend(self.terms[i].iter().map(|(j, k, c)| (i, *j, *k, c.clone())));
        }
        for i in 0..other.dim {
            terms.extend(other.terms[i].iter().map(|(j, k, c)| (n + i, n + j, n + k, c.clone())));
        }
        let mut eps = self.epsilon.clone();
        eps.extend(other.epsilon.iter().cloned());
        Coalgebra::from_terms(self.spec(), n + other.dim, terms, eps)
    }

    /// Tensor product `C ⊗ D` with basis `e_i ⊗ f_j` at index `i·dim D + j`.
    pub fn tensor(&self, other: &Coalgebra) -> Result<Coalgebra> {
        if self.spec() != other.spec() {
            return Err(Error::FieldMismatch {
                left: self.spec(),
                right: other.spec(),
            });
        }
        let m = other.dim;
        let mut terms = Vec::new();
        let mut eps = Vec::with_capacity(self.dim * m);
        for i in 0..self.dim {
            for i2 in 0..m {
                for (j, k, c) in &self.terms[i] {
                    for (j2, k2, d) in &other.terms[i2] {
                        terms.push((tensor_index(i, i2, m), tensor_index(*j, *j2, m), tensor_index(*k, *k2, m), c.mul(d)));
                    }
                }
                eps.push(self.epsilon[i].mul(&other.epsilon[i2]));
            }
        }
        Coalgebra::from_terms(self.spec(), self.dim * m, terms, eps)
    }
}

/// The standard basis vector `e_k` of `F^n`.
pub fn unit(spec: FieldSpec, n: usize, k: usize) -> Vec<Scalar> {
    let mut v = vec![spec.zero(); n];
    v[k] = spec.one();
    v
}

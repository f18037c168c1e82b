use std::sync::Arc;

use crate::axioms::{Axiom, AxiomReport, AxiomViolation};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{tensor_index, Matrix, Subspace};

use super::coalgebra::{unit, Coalgebra};

/// A finite-dimensional right comodule.
///
/// `rho` is `(m·n) × m`: column `a` holds `ρ(f_a)` in the basis `f_b ⊗ e_k`,
/// row [`tensor_index`]`(b, k, n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comodule {
    coalgebra: Arc<Coalgebra>,
    dim: usize,
    rho: Matrix,
    terms: Vec<Vec<(usize, usize, Scalar)>>,
}

impl Comodule {
    /// Checks shapes only; the axioms are left to [`Comodule::validate`].
    pub fn unchecked(coalgebra: Arc<Coalgebra>, rho: Matrix) -> Result<Self> {
        let n = coalgebra.dim();
        let m = rho.cols();
        if rho.rows() != m * n {
            return Err(Error::dims(format!("coaction must be {}x{m}, got {}x{}", m * n, rho.rows(), rho.cols())));
        }
        if rho.spec() != coalgebra.spec() {
            return Err(Error::FieldMismatch {
                left: coalgebra.spec(),
                right: rho.spec(),
            });
        }
        let terms = (0..m)
            .map(|a| {
                let mut t = Vec::new();
                for b in 0..m {
                    for k in 0..n {
                        let c = rho.get(tensor_index(b, k, n), a);
                        if !c.is_zero() {
                            t.push((b, k, c.clone()));
                        }
                    }
                }
                t
            })
            .collect();
        Ok(Comodule {
            coalgebra,
            dim: m,
            rho,
            terms,
        })
    }

    pub fn new(coalgebra: Arc<Coalgebra>, rho: Matrix) -> Result<Self> {
        let c = Self::unchecked(coalgebra, rho)?;
        let report = c.validate();
        if !report.passed() {
            return Err(Error::InvalidComodule(report.to_string()));
        }
        Ok(c)
    }

    /// Builds a comodule from triples `(a, b, k, c)`: `f_b ⊗ e_k` occurs in
    /// `ρ(f_a)` with coefficient `c`. Repeated triples add up.
    pub fn from_terms(
        coalgebra: Arc<Coalgebra>,
        dim: usize,
        terms: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<Self> {
        let n = coalgebra.dim();
        let mut rho = Matrix::zeros(coalgebra.spec(), dim * n, dim);
        for (a, b, k, c) in terms {
            if a >= dim || b >= dim || k >= n {
                return Err(Error::dims(format!("index ({a}, {b}, {k}) out of range")));
            }
            let r = tensor_index(b, k, n);
            let v = rho.get(r, a).try_add(&c)?;
            rho.set(r, a, v);
        }
        Self::new(coalgebra, rho)
    }

    /// `C` as a right comodule over itself, `ρ = Δ`.
    pub fn regular(coalgebra: Arc<Coalgebra>) -> Self {
        let rho = coalgebra.delta().clone();
        Self::unchecked(coalgebra, rho).expect("regular comodule shape")
    }

    pub fn coalgebra(&self) -> &Arc<Coalgebra> {
        &self.coalgebra
    }

    pub fn spec(&self) -> FieldSpec {
        self.coalgebra.spec()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rho(&self) -> &Matrix {
        &self.rho
    }

    /// Nonzero `(b, k, c)` with `c · f_b ⊗ e_k` a summand of `ρ(f_a)`.
    pub fn terms(&self, a: usize) -> &[(usize, usize, Scalar)] {
        &self.terms[a]
    }

    pub fn validate(&self) -> AxiomReport {
        let m = self.dim;
        let c = &self.coalgebra;
        let n = c.dim();
        let spec = self.spec();
        let mut report = AxiomReport::default();
        for a in 0..m {
            let mut lhs = vec![spec.zero(); m * n * n];
            let mut rhs = vec![spec.zero(); m * n * n];
            for (cc, l, x) in &self.terms[a] {
                for (b, k, y) in &self.terms[*cc] {
                    lhs[tensor_index(tensor_index(*b, *k, n), *l, n)].add_mul_assign(x, y);
                }
            }
            for (b, j, x) in &self.terms[a] {
                for (k, l, y) in c.terms(*j) {
                    rhs[tensor_index(tensor_index(*b, *k, n), *l, n)].add_mul_assign(x, y);
                }
            }
            if let Some(r) = (0..m * n * n).find(|&r| lhs[r] != rhs[r]) {
                let (b, k, l) = (r / (n * n), (r / n) % n, r % n);
                report.record(AxiomViolation {
                    axiom: Axiom::CoactionCoassociativity,
                    position: format!("ρ(f_{a}) at f_{b}⊗e_{k}⊗e_{l}"),
                    left: lhs[r].clone(),
                    right: rhs[r].clone(),
                });
                break;
            }
        }
        for a in 0..m {
            let mut v = vec![spec.zero(); m];
            for (b, k, x) in &self.terms[a] {
                v[*b].add_mul_assign(x, &c.epsilon()[*k]);
            }
            if let Some(b) = (0..m).find(|&b| v[b] != if a == b { spec.one() } else { spec.zero() }) {
                report.record(AxiomViolation {
                    axiom: Axiom::CoactionCounit,
                    position: format!("f_{a} at f_{b}"),
                    left: v[b].clone(),
                    right: if a == b { spec.one() } else { spec.zero() },
                });
                break;
            }
        }
        report
    }

    /// `ρ(v)` as an `m × n` matrix whose `(b, k)` entry is the coefficient of
    /// `f_b ⊗ e_k`.
    pub fn coaction(&self, v: &[Scalar]) -> Matrix {
        let n = self.coalgebra.dim();
        let mut data = vec![self.spec().zero(); self.dim * n];
        for (a, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, k, c) in &self.terms[a] {
                data[tensor_index(*b, *k, n)].add_mul_assign(x, c);
            }
        }
        Matrix::from_entries(self.spec(), self.dim, n, data).expect("coaction shape")
    }

    /// Matrix of the rational action `f ⇀ m = Σ m⟨0⟩ f(m⟨1⟩)`.
    pub fn action(&self, f: &[Scalar]) -> Matrix {
        let m = self.dim;
        let mut out = Matrix::zeros(self.spec(), m, m);
        for a in 0..m {
            for (b, k, c) in &self.terms[a] {
                if !f[*k].is_zero() {
                    let v = out.get(*b, a).add(&c.mul(&f[*k]));
                    out.set(*b, a, v);
                }
            }
        }
        out
    }

    /// The actions of the dual basis functionals `e_k*`; the action of
    /// `e_j*·e_k*` is the product of the `j`-th and `k`-th matrices.
    pub fn action_basis(&self) -> Vec<Matrix> {
        let n = self.coalgebra.dim();
        (0..n).map(|k| self.action(&unit(self.spec(), n, k))).collect()
    }

    /// The comodule whose rational action of `e_k*` is `action[k]`; inverse
    /// of [`Comodule::action_basis`].
    pub fn from_rational_action(coalgebra: Arc<Coalgebra>, action: &[Matrix]) -> Result<Self> {
        let n = coalgebra.dim();
        if action.len() != n {
            return Err(Error::dims(format!("{} action matrices for a coalgebra of dimension {n}", action.len())));
        }
        let m = action[0].rows();
        let mut rho = Matrix::zeros(coalgebra.spec(), m * n, m);
        for (k, a) in action.iter().enumerate() {
            if a.rows() != m || a.cols() != m {
                return Err(Error::dims("action matrices of different sizes"));
            }
            for b in 0..m {
                for c in 0..m {
                    rho.set(tensor_index(b, k, n), c, a.get(b, c).clone());
                }
            }
        }
        Self::new(coalgebra, rho)
    }

    /// The rational `C*`-module, one matrix per dual basis functional.
    pub fn rational_rep(&self) -> crate::modrep::ModuleRep {
        let algebra = Arc::new(self.coalgebra.dual_algebra());
        crate::modrep::ModuleRep::for_algebra_unchecked(algebra, self.dim, self.action_basis())
    }

    /// Simple comodules of a composition series, via the rational module.
    pub fn composition_factors(&self, settings: &crate::settings::Settings) -> Result<Vec<Comodule>> {
        self.rational_rep()
            .composition_factors(settings)?
            .iter()
            .map(|f| Comodule::from_rational_action(self.coalgebra.clone(), f.generators()))
            .collect()
    }

    fn check_subspace(&self, k: &Subspace) -> Result<()> {
        if k.ambient_dim() != self.dim || k.spec() != self.spec() {
            return Err(Error::dims(format!(
                "subspace of F^{} in a comodule of dimension {}",
                k.ambient_dim(),
                self.dim
            )));
        }
        Ok(())
    }

    /// `ρ(K) ⊆ K ⊗ C`.
    pub fn is_subcomodule(&self, k: &Subspace) -> Result<bool> {
        self.check_subspace(k)?;
        let n = self.coalgebra.dim();
        Ok(k.basis().row_vectors().all(|v| {
            let x = self.coaction(v);
            (0..n).all(|col| k.contains(&x.column(col)))
        }))
    }

    /// The subcomodule `K` in its canonical basis.
    pub fn sub(&self, k: &Subspace) -> Result<Comodule> {
        self.check_subspace(k)?;
        let n = self.coalgebra.dim();
        let d = k.dim();
        let mut rho = Matrix::zeros(self.spec(), d * n, d);
        for (i, v) in k.basis().row_vectors().enumerate() {
            let x = self.coaction(v);
            for col in 0..n {
                let coords = k
                    .coordinates(&x.column(col))
                    .ok_or_else(|| Error::InvalidComodule("subspace is not a subcomodule".into()))?;
                for (j, c) in coords.into_iter().enumerate() {
                    if !c.is_zero() {
                        rho.set(tensor_index(j, col, n), i, c);
                    }
                }
            }
        }
        Comodule::unchecked(self.coalgebra.clone(), rho)
    }

    /// `M/K` together with the projection `M → M/K`
    /// ([`Subspace::quotient_map`]).
    pub fn quotient(&self, k: &Subspace) -> Result<(Comodule, Matrix)> {
        if !self.is_subcomodule(k)? {
            return Err(Error::InvalidComodule("subspace is not a subcomodule".into()));
        }
        let n = self.coalgebra.dim();
        let p = k.quotient_map();
        let lifts = k.non_pivots();
        let q = lifts.len();
        let mut rho = Matrix::zeros(self.spec(), q * n, q);
        for (i, &c) in lifts.iter().enumerate() {
            let x = self.coaction(&unit(self.spec(), self.dim, c));
            for col in 0..n {
                for (j, v) in p.mul_vec(&x.column(col)).into_iter().enumerate() {
                    if !v.is_zero() {
                        rho.set(tensor_index(j, col, n), i, v);
                    }
                }
            }
        }
        Ok((Comodule::unchecked(self.coalgebra.clone(), rho)?, p))
    }

    /// `M ⊕ N`; the basis of `N` follows that of `M`.
    pub fn direct_sum(&self, other: &Comodule) -> Result<Comodule> {
        if self.coalgebra != other.coalgebra {
            return Err(Error::InvalidComodule("direct sum of comodules over different coalgebras".into()));
        }
        let m = self.dim;
        let mut terms = Vec::new();
        for a in 0..m {
            terms.extend(self.terms[a].iter().map(|(b, k, c)| (a, *b, *k, c.clone())));
        }
        for a in 0..other.dim {
            terms.extend(other.terms[a].iter().map(|(b, k, c)| (m + a, m + b, *k, c.clone())));
        }
        Comodule::from_terms(self.coalgebra.clone(), m + other.dim, terms)
    }

    /// The same comodule in the basis `T f_a`: `ρ' = (T ⊗ id) ρ T⁻¹`.
    pub fn transform(&self, t: &Matrix) -> Result<Comodule> {
        let m = self.dim;
        if t.rows() != m || t.cols() != m {
            return Err(Error::dims(format!("basis change must be {m}x{m}")));
        }
        let t_inv = t
            .inverse()
            .ok_or_else(|| Error::InvalidParameter("basis change is singular".into()))?;
        let n = self.coalgebra.dim();
        let mut rho = Matrix::zeros(self.spec(), m * n, m);
        for a in 0..m {
            let x = t.mul(&self.coaction(&t_inv.column(a)));
            for (idx, v) in x.entries().iter().enumerate() {
                rho.set(idx, a, v.clone());
            }
        }
        Comodule::new(self.coalgebra.clone(), rho)
    }

    /// Whether `f` (an `m × m` matrix) is colinear: `(f ⊗ id) ∘ ρ = ρ ∘ f`.
    pub fn is_colinear(&self, f: &Matrix) -> bool {
        (0..self.dim).all(|a| {
            let lhs = f.mul(&self.coaction(&unit(self.spec(), self.dim, a)));
            let rhs = self.coaction(&f.column(a));
            lhs == rhs
        })
    }

    /// Colinear maps `self → other` (`dim other × dim self` matrices), as a
    /// subspace of row-major flattened matrices.
    pub fn hom_space(&self, other: &Comodule) -> Result<Subspace> {
        if self.coalgebra != other.coalgebra {
            return Err(Error::InvalidComodule("comodules over different coalgebras".into()));
        }
        let act_a = self.action_basis();
        let act_b = other.action_basis();
        crate::modrep::intertwiners(self.spec(), &act_a, &act_b)
    }
}

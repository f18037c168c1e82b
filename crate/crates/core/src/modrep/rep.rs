use std::sync::Arc;

use crate::coalg::{unit, AlgebraSC};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{Echelon, Matrix, Subspace};

/// A finite-dimensional module given by the matrices of a generating set.
///
/// When `algebra` is present the matrices are the actions of its basis
/// elements, in order; otherwise they are just generators of the acting
/// algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleRep {
    spec: FieldSpec,
    dim: usize,
    action: Vec<Matrix>,
    algebra: Option<Arc<AlgebraSC>>,
}

impl ModuleRep {
    /// A module for the algebra generated by `action`.
    pub fn new(spec: FieldSpec, dim: usize, action: Vec<Matrix>) -> Result<Self> {
        for a in &action {
            if a.spec() != spec {
                return Err(Error::FieldMismatch {
                    left: spec,
                    right: a.spec(),
                });
            }
            if a.rows() != dim || a.cols() != dim {
                return Err(Error::dims(format!("action matrix is {}x{}, expected {dim}x{dim}", a.rows(), a.cols())));
            }
        }
        Ok(ModuleRep {
            spec,
            dim,
            action,
            algebra: None,
        })
    }

    /// A module for `algebra`, one matrix per basis element. The structure
    /// constants and the unit are checked.
    pub fn for_algebra(algebra: Arc<AlgebraSC>, dim: usize, action: Vec<Matrix>) -> Result<Self> {
        if action.len() != algebra.dim() {
            return Err(Error::dims(format!(
                "{} action matrices for an algebra of dimension {}",
                action.len(),
                algebra.dim()
            )));
        }
        let mut rep = Self::new(algebra.spec(), dim, action)?;
        let one = rep.element_action(algebra.one());
        if !one.is_identity() && dim > 0 {
            return Err(Error::InvalidParameter("the unit does not act as the identity".into()));
        }
        for j in 0..algebra.dim() {
            for k in 0..algebra.dim() {
                let prod = algebra.product(&algebra.basis_element(j), &algebra.basis_element(k));
                if rep.element_action(&prod) != rep.action[j].mul(&rep.action[k]) {
                    return Err(Error::InvalidParameter(format!(
                        "action does not respect the product e_{j}·e_{k}"
                    )));
                }
            }
        }
        rep.algebra = Some(algebra);
        Ok(rep)
    }

    /// Skips the relation check; the caller guarantees it.
    pub(crate) fn for_algebra_unchecked(algebra: Arc<AlgebraSC>, dim: usize, action: Vec<Matrix>) -> Self {
        ModuleRep {
            spec: algebra.spec(),
            dim,
            action,
            algebra: Some(algebra),
        }
    }

    /// The left regular module `A` acting on itself.
    pub fn regular(algebra: Arc<AlgebraSC>) -> Self {
        let action = (0..algebra.dim()).map(|i| algebra.left_mult(&algebra.basis_element(i))).collect();
        let d = algebra.dim();
        Self::for_algebra_unchecked(algebra, d, action)
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.action
    }

    pub fn algebra(&self) -> Option<&Arc<AlgebraSC>> {
        self.algebra.as_ref()
    }

    /// Action of `Σ x_i e_i`; requires the per-basis form.
    pub fn element_action(&self, x: &[Scalar]) -> Matrix {
        let terms: Vec<(Scalar, &Matrix)> = x.iter().cloned().zip(&self.action).collect();
        Matrix::combination(self.spec, self.dim, self.dim, &terms)
    }

    /// The same module with extra generators appended (the algebra link is
    /// dropped).
    pub fn with_generators(&self, extra: &[Matrix]) -> Result<Self> {
        let mut action = self.action.clone();
        action.extend(extra.iter().cloned());
        Self::new(self.spec, self.dim, action)
    }

    /// Transposed action, a module for the opposite algebra on the dual.
    pub fn dual(&self) -> ModuleRep {
        ModuleRep {
            spec: self.spec,
            dim: self.dim,
            action: self.action.iter().map(Matrix::transpose).collect(),
            algebra: None,
        }
    }

    /// Smallest invariant subspace containing all `vectors`.
    pub fn spin_all(&self, vectors: &[Vec<Scalar>]) -> Subspace {
        let mut e = Echelon::new(self.spec, self.dim);
        let mut queue: Vec<Vec<Scalar>> = Vec::new();
        for v in vectors {
            if e.insert(v.clone()) {
                queue.push(v.clone());
            }
        }
        while let Some(v) = queue.pop() {
            if e.is_full() {
                break;
            }
            for a in &self.action {
                let w = a.mul_vec(&v);
                if e.insert(w.clone()) {
                    queue.push(w);
                }
            }
        }
        Subspace::from_rows(&e.to_matrix())
    }

    /// The submodule generated by `v`.
    pub fn spin(&self, v: &[Scalar]) -> Result<Subspace> {
        if v.len() != self.dim {
            return Err(Error::dims(format!("vector of length {} in a module of dimension {}", v.len(), self.dim)));
        }
        Ok(self.spin_all(&[v.to_vec()]))
    }

    pub fn is_submodule(&self, s: &Subspace) -> bool {
        s.ambient_dim() == self.dim && self.action.iter().all(|a| s.is_invariant_under(a))
    }

    /// The action restricted to an invariant subspace, in its canonical basis.
    pub fn submodule(&self, s: &Subspace) -> Result<ModuleRep> {
        let action = self.action.iter().map(|a| s.restrict(a)).collect::<Result<Vec<_>>>()?;
        Ok(ModuleRep {
            spec: self.spec,
            dim: s.dim(),
            action,
            algebra: self.algebra.clone(),
        })
    }

    /// The induced action on the quotient by an invariant subspace.
    pub fn quotient(&self, s: &Subspace) -> Result<ModuleRep> {
        let action = self.action.iter().map(|a| s.induced_on_quotient(a)).collect::<Result<Vec<_>>>()?;
        Ok(ModuleRep {
            spec: self.spec,
            dim: s.codim(),
            action,
            algebra: self.algebra.clone(),
        })
    }

    /// Module homomorphisms `self → other` (matrices `dim other × dim self`,
    /// flattened row-major).
    pub fn hom_space(&self, other: &ModuleRep) -> Result<Subspace> {
        if self.action.len() != other.action.len() {
            return Err(Error::dims("modules with different numbers of generators"));
        }
        intertwiners(self.spec, &self.action, &other.action)
    }

    /// Whether two modules are isomorphic, assuming both are irreducible.
    pub fn is_isomorphic_simple(&self, other: &ModuleRep) -> Result<bool> {
        Ok(self.dim == other.dim && !self.hom_space(other)?.is_zero())
    }

    /// Algebra elements acting as zero, for per-basis modules.
    pub fn annihilator(&self) -> Result<Subspace> {
        let alg = self
            .algebra
            .as_ref()
            .ok_or_else(|| Error::InvalidParameter("annihilator needs an algebra basis action".into()))?;
        Ok(annihilator_of(self.spec, alg.dim(), &[self]))
    }
}

/// `⋂ ann(M)` over the given per-basis modules, as a subspace of the algebra.
pub(crate) fn annihilator_of(spec: FieldSpec, algebra_dim: usize, modules: &[&ModuleRep]) -> Subspace {
    let mut e = Echelon::new(spec, algebra_dim);
    'outer: for m in modules {
        for r in 0..m.dim {
            for c in 0..m.dim {
                if e.is_full() {
                    break 'outer;
                }
                let row: Vec<Scalar> = m.action.iter().map(|a| a.get(r, c).clone()).collect();
                e.insert(row);
            }
        }
    }
    Subspace::from_rows(&e.to_matrix()).perp()
}

/// Solutions `F` (`dim B × dim A`, flattened row-major) of `F·A_x = B_x·F`
/// for every generator index `x`.
pub fn intertwiners(spec: FieldSpec, a: &[Matrix], b: &[Matrix]) -> Result<Subspace> {
    if a.len() != b.len() {
        return Err(Error::dims("different numbers of generators"));
    }
    let da = a.first().map_or(0, Matrix::rows);
    let db = b.first().map_or(0, Matrix::rows);
    if a.is_empty() {
        return Err(Error::InvalidParameter("hom space of modules without generators".into()));
    }
    let unknowns = da * db;
    let mut e = Echelon::new(spec, unknowns);
    for (ax, bx) in a.iter().zip(b) {
        for r in 0..db {
            for j in 0..da {
                if e.is_full() {
                    break;
                }
                let mut row = vec![spec.zero(); unknowns];
                for c in 0..da {
                    let x = ax.get(c, j);
                    if !x.is_zero() {
                        row[r * da + c] = row[r * da + c].add(x);
                    }
                }
                for i in 0..db {
                    let x = bx.get(r, i);
                    if !x.is_zero() {
                        row[i * da + j] = row[i * da + j].sub(x);
                    }
                }
                e.insert(row);
            }
        }
    }
    Ok(Subspace::from_rows(&e.to_matrix()).perp())
}

/// Unflattens a row-major vector into a matrix.
pub fn unflatten(spec: FieldSpec, rows: usize, cols: usize, v: &[Scalar]) -> Matrix {
    Matrix::from_entries(spec, rows, cols, v.to_vec()).expect("flattened matrix length")
}

/// The standard basis of `F^n`.
pub(crate) fn standard_basis(spec: FieldSpec, n: usize) -> Vec<Vec<Scalar>> {
    (0..n).map(|i| unit(spec, n, i)).collect()
}

use std::sync::Arc;

use crate::coalg::{AlgebraSC, Comodule};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{Echelon, Matrix, Subspace};
use crate::modrep::{intertwiners, unflatten, ModuleRep};

/// The colinear endomorphisms of a comodule with the opposite composition
/// `f·g := g∘f`, so that maps act on the right of `M`.
#[derive(Clone, Debug)]
pub struct EndoAlgebra {
    comodule: Comodule,
    span: Subspace,
    basis: Vec<Matrix>,
    algebra: Arc<AlgebraSC>,
    action: Vec<Matrix>,
}

impl EndoAlgebra {
    /// Solves the colinearity equations `f·A_k = A_k·f` for the rational
    /// actions `A_k` of the dual basis, which are `(f⊗id)∘ρ = ρ∘f` written
    /// out coefficientwise.
    pub fn new(comodule: &Comodule) -> Result<Self> {
        let m = comodule.dim();
        let spec = comodule.spec();
        let action = comodule.action_basis();
        let span = intertwiners(spec, &action, &action)?;
        let basis: Vec<Matrix> = span.basis_vectors().iter().map(|v| unflatten(spec, m, m, v)).collect();
        let d = basis.len();
        let mut mul = Matrix::zeros(spec, d, d * d);
        for (a, fa) in basis.iter().enumerate() {
            for (b, fb) in basis.iter().enumerate() {
                let prod = fb.mul(fa);
                let coords = span
                    .coordinates(prod.entries())
                    .ok_or_else(|| Error::InvalidComodule("colinear maps not closed under composition".into()))?;
                for (r, x) in coords.into_iter().enumerate() {
                    mul.set(r, a * d + b, x);
                }
            }
        }
        let one = span
            .coordinates(Matrix::identity(spec, m).entries())
            .ok_or_else(|| Error::InvalidComodule("identity is not colinear".into()))?;
        let algebra = Arc::new(AlgebraSC::unchecked(mul, one)?);
        Ok(EndoAlgebra {
            comodule: comodule.clone(),
            span,
            basis,
            algebra,
            action,
        })
    }

    pub fn comodule(&self) -> &Comodule {
        &self.comodule
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Basis matrices, in the canonical order of the flattened span.
    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn algebra(&self) -> &Arc<AlgebraSC> {
        &self.algebra
    }

    /// The rational actions of the dual basis functionals on `M`.
    pub fn rational_action(&self) -> &[Matrix] {
        &self.action
    }

    /// The map `Σ x_i f_i`.
    pub fn matrix_of(&self, x: &[Scalar]) -> Matrix {
        let m = self.comodule.dim();
        let terms: Vec<(Scalar, &Matrix)> = x.iter().cloned().zip(&self.basis).collect();
        Matrix::combination(self.comodule.spec(), m, m, &terms)
    }

    /// Coordinates of a colinear map, `None` if it is not colinear.
    pub fn coordinates(&self, f: &Matrix) -> Option<Vec<Scalar>> {
        self.span.coordinates(f.entries())
    }

    fn check_sub(&self, k: &Subspace) -> Result<()> {
        if k.ambient_dim() != self.comodule.dim() || k.spec() != self.comodule.spec() {
            return Err(Error::dims(format!(
                "subspace of F^{} in a comodule of dimension {}",
                k.ambient_dim(),
                self.comodule.dim()
            )));
        }
        Ok(())
    }

    fn check_ideal(&self, i: &Subspace) -> Result<()> {
        if i.ambient_dim() != self.dim() || i.spec() != self.comodule.spec() {
            return Err(Error::dims(format!(
                "subspace of F^{} in an endomorphism algebra of dimension {}",
                i.ambient_dim(),
                self.dim()
            )));
        }
        Ok(())
    }

    /// `An(K) = {f ∈ E : f(K) = 0}`, in coordinates of E.
    pub fn an(&self, k: &Subspace) -> Result<Subspace> {
        self.check_sub(k)?;
        let spec = self.comodule.spec();
        let d = self.dim();
        let images: Vec<Vec<Vec<Scalar>>> = k
            .basis_vectors()
            .iter()
            .map(|v| self.basis.iter().map(|f| f.mul_vec(v)).collect())
            .collect();
        let mut e = Echelon::new(spec, d);
        for per_vector in &images {
            for r in 0..self.comodule.dim() {
                if e.is_full() {
                    break;
                }
                e.insert(per_vector.iter().map(|w| w[r].clone()).collect());
            }
        }
        Ok(Subspace::from_rows(&e.to_matrix()).perp())
    }

    /// `Ke(I) = ⋂ ker f` over `f ∈ I`.
    pub fn ke(&self, i: &Subspace) -> Result<Subspace> {
        self.check_ideal(i)?;
        let m = self.comodule.dim();
        let mut e = Echelon::new(self.comodule.spec(), m);
        for x in i.basis().row_vectors() {
            for row in self.matrix_of(x).row_vectors() {
                if e.is_full() {
                    break;
                }
                e.insert(row.to_vec());
            }
        }
        Ok(Subspace::from_rows(&e.to_matrix()).perp())
    }

    /// `(X : Y) = ⋂ f⁻¹(Y)` over colinear `f` with `f(X) = 0`; the whole
    /// comodule when no such `f` is nonzero.
    pub fn internal_coproduct(&self, x: &Subspace, y: &Subspace) -> Result<Subspace> {
        self.check_sub(y)?;
        let an = self.an(x)?;
        Ok(self.coproduct_with(&an, y))
    }

    /// `⋂ f⁻¹(Y)` over `f ∈ I`.
    pub(crate) fn coproduct_with(&self, an: &Subspace, y: &Subspace) -> Subspace {
        let m = self.comodule.dim();
        let p = y.quotient_map();
        let mut e = Echelon::new(self.comodule.spec(), m);
        for x in an.basis().row_vectors() {
            let g = p.mul(&self.matrix_of(x));
            for row in g.row_vectors() {
                if e.is_full() {
                    break;
                }
                e.insert(row.to_vec());
            }
        }
        Subspace::from_rows(&e.to_matrix()).perp()
    }

    /// `Ke(An(X)·An(Y))`, where the product in E is `f·g = g∘f`.
    pub fn ke_of_product(&self, x: &Subspace, y: &Subspace) -> Result<Subspace> {
        let prod = self.algebra.subspace_product(&self.an(x)?, &self.an(y)?);
        self.ke(&prod)
    }

    /// Invariant under both the rational action and every colinear map.
    pub fn is_fully_invariant(&self, k: &Subspace) -> Result<bool> {
        self.check_sub(k)?;
        Ok(self.action.iter().chain(&self.basis).all(|a| k.is_invariant_under(a)))
    }

    /// `M` as a module over the algebra generated by the rational action and
    /// E together; its submodules are the fully invariant subcomodules.
    pub fn bimodule_rep(&self) -> Result<ModuleRep> {
        let mut gens = self.action.clone();
        gens.extend(self.basis.iter().cloned());
        ModuleRep::new(self.comodule.spec(), self.comodule.dim(), gens)
    }

    /// E as a module over itself by right multiplication `x ↦ x·e_b`; its
    /// submodules are the right ideals.
    pub fn right_regular_rep(&self) -> Result<ModuleRep> {
        let a = &self.algebra;
        let gens = (0..a.dim()).map(|b| a.right_mult(&a.basis_element(b))).collect();
        ModuleRep::new(a.spec(), a.dim(), gens)
    }

    /// `E / An(K)` for a nonzero fully invariant `K`.
    pub fn quotient_by_an(&self, k: &Subspace) -> Result<AlgebraSC> {
        if k.is_zero() {
            return Err(Error::InvalidParameter("subcomodule must be nonzero".into()));
        }
        if !self.is_fully_invariant(k)? {
            return Err(Error::NotFullyInvariant);
        }
        let an = self.an(k)?;
        Ok(self.algebra.quotient(&an)?.0)
    }
}

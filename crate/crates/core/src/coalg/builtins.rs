//! Standard example coalgebras.

use crate::error::{Error, Result};
use crate::field::FieldSpec;

use super::coalgebra::Coalgebra;

/// The matrix (comatrix) coalgebra on `e_ij`, index `i·n + j`:
/// `Δ(e_ij) = Σ_k e_ik ⊗ e_kj`, `ε(e_ij) = δ_ij`. Its dual is `M_n(F)`.
pub fn matrix_coalgebra(spec: FieldSpec, n: usize) -> Result<Coalgebra> {
    if n == 0 {
        return Err(Error::InvalidParameter("matrix coalgebra needs n ≥ 1".into()));
    }
    let idx = |i: usize, j: usize| i * n + j;
    let mut terms = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                terms.push((idx(i, j), idx(i, k), idx(k, j), spec.one()));
            }
        }
    }
    let eps = (0..n * n).map(|e| if e / n == e % n { spec.one() } else { spec.zero() }).collect();
    Coalgebra::from_terms(spec, n * n, terms, eps)
}

/// Divided powers truncated at degree `d`: basis `x⁰, …, x^d`,
/// `Δ(x^m) = Σ_j x^j ⊗ x^(m−j)`, `ε(x^m) = δ_m0`.
pub fn divided_power(spec: FieldSpec, d: usize) -> Result<Coalgebra> {
    let mut terms = Vec::new();
    for m in 0..=d {
        for j in 0..=m {
            terms.push((m, j, m - j, spec.one()));
        }
    }
    let eps = (0..=d).map(|m| if m == 0 { spec.one() } else { spec.zero() }).collect();
    Coalgebra::from_terms(spec, d + 1, terms, eps)
}

/// `size` grouplike elements: `Δ(g) = g ⊗ g`, `ε(g) = 1`.
pub fn grouplike(spec: FieldSpec, size: usize) -> Result<Coalgebra> {
    if size == 0 {
        return Err(Error::InvalidParameter("grouplike coalgebra needs at least one element".into()));
    }
    let terms = (0..size).map(|g| (g, g, g, spec.one()));
    Coalgebra::from_terms(spec, size, terms, vec![spec.one(); size])
}

/// Trivial extension with basis `g, x_1, …, x_λ`: `Δ(g) = g ⊗ g`,
/// `Δ(x) = g ⊗ x + x ⊗ g`, `ε(g) = 1`, `ε(x) = 0`. Irreducible and
/// cocommutative, yet its dual has a nonzero radical squaring to zero.
pub fn lomp(spec: FieldSpec, lambda: usize) -> Result<Coalgebra> {
    if lambda == 0 {
        return Err(Error::InvalidParameter("trivial extension needs at least one x".into()));
    }
    let mut terms = vec![(0, 0, 0, spec.one())];
    for x in 1..=lambda {
        terms.push((x, 0, x, spec.one()));
        terms.push((x, x, 0, spec.one()));
    }
    let mut eps = vec![spec.zero(); lambda + 1];
    eps[0] = spec.one();
    Coalgebra::from_terms(spec, lambda + 1, terms, eps)
}

/// The built-in families, addressed by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Builtin {
    Matrix,
    DividedPower,
    Grouplike,
    Lomp,
}

impl Builtin {
    pub const ALL: [Builtin; 4] = [Builtin::Matrix, Builtin::DividedPower, Builtin::Grouplike, Builtin::Lomp];

    pub fn name(self) -> &'static str {
        match self {
            Builtin::Matrix => "matrix",
            Builtin::DividedPower => "divided-power",
            Builtin::Grouplike => "grouplike",
            Builtin::Lomp => "lomp",
        }
    }

    pub fn from_name(name: &str) -> Option<Builtin> {
        Self::ALL.into_iter().find(|b| b.name() == name)
    }

    pub const DEFAULT_PARAM: usize = 2;

    pub fn build(self, spec: FieldSpec, param: usize) -> Result<Coalgebra> {
        match self {
            Builtin::Matrix => matrix_coalgebra(spec, param),
            Builtin::DividedPower => divided_power(spec, param),
            Builtin::Grouplike => grouplike(spec, param),
            Builtin::Lomp => lomp(spec, param),
        }
    }
}

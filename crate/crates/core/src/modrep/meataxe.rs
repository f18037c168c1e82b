use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{Echelon, Matrix, Subspace};
use crate::settings::Settings;

use super::lattice::projective_points;
use super::poly::{minimal_polynomial, roots};
use super::rep::{standard_basis, unflatten, ModuleRep};

/// Number of seeded random algebra elements tried before the structured sweep.
pub const RANDOM_ATTEMPTS: usize = 50;

/// Largest prime for which every residue is tried as an eigenvalue.
const ROOT_SCAN_LIMIT: u64 = 1000;

/// Pairwise sums are formed among at most this many basis elements.
const SWEEP_LIMIT: usize = 24;

enum Norton {
    Found(Subspace),
    Irreducible,
    Unknown,
}

impl ModuleRep {
    /// Basis of the algebra of matrices generated by the action (including
    /// the identity).
    pub fn enveloping_algebra(&self) -> Vec<Matrix> {
        let m = self.dim();
        let spec = self.spec();
        let mut e = Echelon::new(spec, m * m);
        let mut basis = Vec::new();
        let id = Matrix::identity(spec, m);
        e.insert(id.entries().to_vec());
        basis.push(id);
        let mut next = 0;
        while next < basis.len() && !e.is_full() {
            let x = basis[next].clone();
            next += 1;
            for g in self.generators() {
                let y = g.mul(&x);
                if e.insert(y.entries().to_vec()) {
                    basis.push(y);
                }
            }
        }
        basis
    }

    /// A proper nonzero submodule, or `None` if the module is irreducible.
    ///
    /// Exact over every field whenever it returns `Ok`. Irreducibility is
    /// proved by Burnside's criterion (the action generates all matrices) or
    /// by Norton's criterion on a singular algebra element; over a finite
    /// field an exhaustive scan of all vectors finishes the job within the
    /// budget. Over ℚ the search can give up with [`Error::Inconclusive`].
    pub fn find_submodule(&self, settings: &Settings) -> Result<Option<Subspace>> {
        let m = self.dim();
        let spec = self.spec();
        if m <= 1 {
            return Ok(None);
        }
        if self.generators().is_empty() {
            return Ok(Some(Subspace::span(spec, m, &standard_basis(spec, m)[..1])?));
        }
        let dual = self.dual();
        for v in standard_basis(spec, m) {
            let s = self.spin_all(std::slice::from_ref(&v));
            if s.dim() < m {
                return Ok(Some(s));
            }
            let t = dual.spin_all(&[v]);
            if t.dim() < m {
                return Ok(Some(t.perp()));
            }
        }
        let env = self.enveloping_algebra();
        if env.len() == m * m {
            return Ok(None);
        }

        let mut rng = ChaCha8Rng::seed_from_u64(settings.seed);
        let mut attempts = 0;
        let mut candidates: Vec<Matrix> = Vec::new();
        for _ in 0..RANDOM_ATTEMPTS {
            candidates.push(random_combination(&env, spec, &mut rng));
        }
        candidates.extend(env.iter().cloned());
        let sweep = env.len().min(SWEEP_LIMIT);
        for i in 0..sweep {
            for j in i + 1..sweep {
                candidates.push(env[i].add(&env[j]));
            }
        }
        for a in &candidates {
            attempts += 1;
            for lambda in roots(&minimal_polynomial(a), ROOT_SCAN_LIMIT) {
                let b = a.sub(&Matrix::identity(spec, m).scale(&lambda));
                match self.norton(&dual, &b, settings) {
                    Norton::Found(s) => return Ok(Some(s)),
                    Norton::Irreducible => return Ok(None),
                    Norton::Unknown => {}
                }
            }
        }

        // A commuting map with an eigenvalue, other than a scalar, has a
        // proper nonzero kernel after the shift.
        let commutant = self.hom_space(self)?;
        let ends: Vec<Matrix> = commutant
            .basis_vectors()
            .iter()
            .map(|v| unflatten(spec, m, m, v))
            .collect();
        let mut shifts: Vec<Matrix> = ends.clone();
        let sweep = ends.len().min(SWEEP_LIMIT);
        for i in 0..sweep {
            for j in i + 1..sweep {
                shifts.push(ends[i].add(&ends[j]));
            }
        }
        for f in &shifts {
            for lambda in roots(&minimal_polynomial(f), ROOT_SCAN_LIMIT) {
                let g = f.sub(&Matrix::identity(spec, m).scale(&lambda));
                if !g.is_zero() {
                    return Ok(Some(g.kernel()));
                }
            }
        }

        if spec.is_finite() {
            settings.charge_space(spec, m)?;
            for v in projective_points(spec, &standard_basis(spec, m)) {
                let s = self.spin_all(&[v]);
                if s.dim() < m {
                    return Ok(Some(s));
                }
            }
            return Ok(None);
        }
        Err(Error::Inconclusive { attempts })
    }

    /// Norton's test for a singular element `b`: either some null vector of
    /// `b` spins to a proper submodule, or some null vector of `bᵀ` spins to a
    /// proper submodule of the dual, or the module is irreducible.
    fn norton(&self, dual: &ModuleRep, b: &Matrix, settings: &Settings) -> Norton {
        let m = self.dim();
        let spec = self.spec();
        let null = b.kernel();
        if null.is_zero() {
            return Norton::Unknown;
        }
        let null_t = b.transpose().kernel();
        for v in null.basis_vectors() {
            let s = self.spin_all(&[v]);
            if s.dim() < m {
                return Norton::Found(s);
            }
        }
        for w in null_t.basis_vectors() {
            let t = dual.spin_all(&[w]);
            if t.dim() < m {
                return Norton::Found(t.perp());
            }
        }
        if null.dim() == 1 {
            return Norton::Irreducible;
        }
        if spec.is_finite() && settings.charge_space(spec, null.dim()).is_ok() {
            for v in projective_points(spec, &null.basis_vectors()) {
                let s = self.spin_all(&[v]);
                if s.dim() < m {
                    return Norton::Found(s);
                }
            }
            for w in projective_points(spec, &null_t.basis_vectors()) {
                let t = dual.spin_all(&[w]);
                if t.dim() < m {
                    return Norton::Found(t.perp());
                }
            }
            return Norton::Irreducible;
        }
        Norton::Unknown
    }

    /// Whether the module is nonzero with no proper nonzero submodule.
    pub fn is_irreducible(&self, settings: &Settings) -> Result<bool> {
        if self.dim() == 0 {
            return Ok(false);
        }
        Ok(self.find_submodule(settings)?.is_none())
    }

    /// Irreducible factors of a composition series, splitting at the first
    /// submodule found and listing submodule factors before quotient factors.
    pub fn composition_factors(&self, settings: &Settings) -> Result<Vec<ModuleRep>> {
        if self.dim() == 0 {
            return Ok(Vec::new());
        }
        match self.find_submodule(settings)? {
            None => Ok(vec![self.clone()]),
            Some(s) => {
                let mut out = self.submodule(&s)?.composition_factors(settings)?;
                out.extend(self.quotient(&s)?.composition_factors(settings)?);
                Ok(out)
            }
        }
    }
}

fn random_scalar(spec: FieldSpec, rng: &mut ChaCha8Rng) -> Scalar {
    match spec {
        FieldSpec::Rationals => spec.from_i64(rng.gen_range(-2..=2)),
        FieldSpec::Prime(p) => spec.from_i64(rng.gen_range(0..p as i64)),
    }
}

fn random_combination(basis: &[Matrix], spec: FieldSpec, rng: &mut ChaCha8Rng) -> Matrix {
    let m = basis[0].rows();
    let coeffs: Vec<Scalar> = basis.iter().map(|_| random_scalar(spec, rng)).collect();
    let terms: Vec<(Scalar, &Matrix)> = coeffs.into_iter().zip(basis).collect();
    Matrix::combination(spec, m, m, &terms)
}

use std::sync::Arc;

use crate::coalg::AlgebraSC;
use crate::error::Result;
use crate::linalg::Subspace;
use crate::settings::Settings;

use super::rep::{annihilator_of, ModuleRep};

/// Ring-theoretic properties of a finite-dimensional algebra.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct RingClassification {
    pub dim: usize,
    pub commutative: bool,
    pub semisimple: bool,
    pub simple: bool,
    pub prime: bool,
    pub semiprime: bool,
    /// Division algebra (a finite-dimensional domain).
    pub domain: bool,
    pub reduced: bool,
    pub semiprimitive: bool,
    pub jacobson: Subspace,
    /// Prime radical; equal to the Jacobson radical for Artinian rings.
    pub prad: Subspace,
    /// Number of isomorphism classes of simple modules.
    pub blocks: usize,
    /// `(dimension, multiplicity)` of each simple type in the left regular
    /// module, in order of first appearance.
    pub composition_factors: Vec<(usize, usize)>,
}

/// Simple factors of a module grouped by isomorphism type, each with its
/// multiplicity.
pub fn simple_types(factors: Vec<ModuleRep>) -> Result<Vec<(ModuleRep, usize)>> {
    let mut types: Vec<(ModuleRep, usize)> = Vec::new();
    'next: for f in factors {
        for (t, count) in types.iter_mut() {
            if t.is_isomorphic_simple(&f)? {
                *count += 1;
                continue 'next;
            }
        }
        types.push((f, 1));
    }
    Ok(types)
}

/// The Jacobson radical as the intersection of the annihilators of the
/// composition factors of the left regular module.
pub fn jacobson_radical(a: &AlgebraSC, settings: &Settings) -> Result<Subspace> {
    let regular = ModuleRep::regular(Arc::new(a.clone()));
    let factors = regular.composition_factors(settings)?;
    let refs: Vec<&ModuleRep> = factors.iter().collect();
    Ok(annihilator_of(a.spec(), a.dim(), &refs))
}

pub fn classify_ring(a: &AlgebraSC, settings: &Settings) -> Result<RingClassification> {
    let regular = ModuleRep::regular(Arc::new(a.clone()));
    let factors = regular.composition_factors(settings)?;
    let refs: Vec<&ModuleRep> = factors.iter().collect();
    let jacobson = annihilator_of(a.spec(), a.dim(), &refs);
    let domain = factors.len() == 1;
    let types = simple_types(factors)?;
    let semisimple = jacobson.is_zero();
    let simple = semisimple && types.len() == 1;
    let reduced = semisimple && types.iter().all(|(_, k)| *k == 1);
    Ok(RingClassification {
        dim: a.dim(),
        commutative: a.is_commutative(),
        semisimple,
        simple,
        prime: simple,
        semiprime: semisimple,
        domain,
        reduced,
        semiprimitive: semisimple,
        prad: jacobson.clone(),
        jacobson,
        blocks: types.len(),
        composition_factors: types.iter().map(|(t, k)| (t.dim(), *k)).collect(),
    })
}

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::Subspace;
use crate::settings::Settings;

use super::rep::{standard_basis, ModuleRep};

/// Representatives of the one-dimensional subspaces of the span of `basis`
/// over a finite field: every combination whose first nonzero coefficient
/// is one.
pub(crate) fn projective_points(spec: FieldSpec, basis: &[Vec<Scalar>]) -> impl Iterator<Item = Vec<Scalar>> + '_ {
    let p = spec.order().expect("finite field") as u32;
    let k = basis.len();
    let n = basis.first().map_or(0, Vec::len);
    (0..k).flat_map(move |lead| {
        let free = k - lead - 1;
        let count = (p as u128).pow(free as u32);
        (0..count).map(move |mut idx| {
            let mut v = basis[lead].clone();
            for j in lead + 1..k {
                let c = (idx % p as u128) as i64;
                idx /= p as u128;
                if c != 0 {
                    let coeff = spec.from_i64(c);
                    for (x, b) in v.iter_mut().zip(&basis[j]) {
                        if !b.is_zero() {
                            x.add_mul_assign(&coeff, b);
                        }
                    }
                }
            }
            debug_assert_eq!(v.len(), n);
            v
        })
    })
}

/// Every vector of the span of `basis` over a finite field, zero first.
pub(crate) fn all_vectors(spec: FieldSpec, basis: &[Vec<Scalar>], ambient: usize) -> impl Iterator<Item = Vec<Scalar>> + '_ {
    std::iter::once(vec![spec.zero(); ambient]).chain(projective_points(spec, basis).flat_map(move |v| {
        let p = spec.order().expect("finite field") as i64;
        (1..p).map(move |c| {
            let c = spec.from_i64(c);
            v.iter().map(|x| x.mul(&c)).collect()
        })
    }))
}

impl ModuleRep {
    /// All submodules, sorted by dimension and then by canonical basis.
    ///
    /// Every vector (up to scalars) is spun to a cyclic submodule, and the
    /// cyclic ones are closed under sums. Requires a finite field with
    /// `|F|^dim` within the budget.
    pub fn submodule_lattice(&self, settings: &Settings) -> Result<Vec<Subspace>> {
        let spec = self.spec();
        if !spec.is_finite() {
            return Err(Error::FieldNotFinite(spec));
        }
        settings.charge_space(spec, self.dim())?;
        let cyclic: BTreeSet<Subspace> = projective_points(spec, &standard_basis(spec, self.dim()))
            .map(|v| self.spin_all(&[v]))
            .collect();
        Ok(close_under_sums(spec, self.dim(), cyclic.into_iter().collect()))
    }
}

/// The set of all sums of members of `generators`, including the zero
/// subspace, sorted.
pub(crate) fn close_under_sums(spec: FieldSpec, ambient: usize, generators: Vec<Subspace>) -> Vec<Subspace> {
    let mut seen: HashSet<Subspace> = HashSet::new();
    let zero = Subspace::zero(spec, ambient);
    seen.insert(zero.clone());
    let mut frontier = vec![zero];
    while let Some(s) = frontier.pop() {
        for g in &generators {
            if g.is_subspace_of(&s) {
                continue;
            }
            let t = s.sum(g);
            if seen.insert(t.clone()) {
                frontier.push(t);
            }
        }
    }
    let mut out: Vec<Subspace> = seen.into_iter().collect();
    out.sort();
    out
}

/// Closes a set of subspaces under sum and intersection, sorted.
///
/// The generated lattice can be infinite (four generic lines in a plane
/// already generate infinitely many subspaces of a 3-dimensional
/// isotypic part), so the square of its size is charged to the budget.
pub(crate) fn close_under_sum_and_intersection(
    spec: FieldSpec,
    ambient: usize,
    start: Vec<Subspace>,
    settings: &Settings,
) -> Result<Vec<Subspace>> {
    let mut seen: HashSet<Subspace> = HashSet::new();
    let mut items: Vec<Subspace> = Vec::new();
    for s in [Subspace::zero(spec, ambient), Subspace::full(spec, ambient)].into_iter().chain(start) {
        if seen.insert(s.clone()) {
            items.push(s);
        }
    }
    let mut next = 0;
    while next < items.len() {
        let size = items.len() as u128;
        settings.charge(size * size, "pairs of subspaces in the generated lattice")?;
        let x = items[next].clone();
        for j in 0..next {
            for t in [x.sum(&items[j]), x.intersect(&items[j])] {
                if seen.insert(t.clone()) {
                    items.push(t);
                }
            }
        }
        next += 1;
    }
    items.sort();
    Ok(items)
}

use crate::coalg::Comodule;
use crate::error::Result;
use crate::linalg::{Echelon, Matrix, Subspace};
use crate::settings::Settings;

use super::endo::EndoAlgebra;
use super::spectrum::{right_ideal_lattice, subcomodule_lattice, Lattice};

/// Injectivity-type properties of a comodule, quantified over the
/// enumerated subcomodules and right ideals of E.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct HypothesisFlags {
    /// Every colinear `K → M` extends to `M`.
    pub self_injective: bool,
    /// `M/K` is M-cogenerated for every `K`, i.e. `Ke(An(K)) = K`.
    pub self_cogenerator: bool,
    /// `Hom(M/K, M) ≠ 0` for every proper `K`.
    pub coretractable: bool,
    /// `Hom(M, K) ≠ 0` for every nonzero `K`.
    pub retractable: bool,
    /// `An(Ke(I)) = I` for every right ideal `I` of E.
    pub intrinsically_injective: bool,
    /// The quantifiers ran over a sub-lattice only (ℚ mode).
    pub partial: bool,
}

pub fn hypothesis_flags(e: &EndoAlgebra, settings: &Settings) -> Result<HypothesisFlags> {
    let subs = subcomodule_lattice(e.comodule(), settings)?;
    let ideals = right_ideal_lattice(e, settings)?;
    flags_over(e, &subs, &ideals)
}

pub(crate) fn flags_over(e: &EndoAlgebra, subs: &Lattice, ideals: &Lattice) -> Result<HypothesisFlags> {
    let m = e.comodule();
    let mut flags = HypothesisFlags {
        self_injective: true,
        self_cogenerator: true,
        coretractable: true,
        retractable: true,
        intrinsically_injective: true,
        partial: subs.partial || ideals.partial,
    };
    for k in &subs.members {
        let an = e.an(k)?;
        if flags.self_cogenerator && e.ke(&an)? != *k {
            flags.self_cogenerator = false;
        }
        if flags.coretractable && !k.is_full() && an.is_zero() {
            flags.coretractable = false;
        }
        if flags.retractable && !k.is_zero() && maps_into(e, k).is_zero() {
            flags.retractable = false;
        }
        if flags.self_injective && !restrictions_surject(e, m, k)? {
            flags.self_injective = false;
        }
    }
    for i in &ideals.members {
        if e.an(&e.ke(i)?)? != *i {
            flags.intrinsically_injective = false;
            break;
        }
    }
    Ok(flags)
}

/// `{f ∈ E : f(M) ⊆ K}`, in coordinates of E.
fn maps_into(e: &EndoAlgebra, k: &Subspace) -> Subspace {
    let p = k.quotient_map();
    let spec = e.comodule().spec();
    let images: Vec<Matrix> = e.basis().iter().map(|f| p.mul(f)).collect();
    let mut ech = Echelon::new(spec, e.dim());
    if let Some(first) = images.first() {
        for r in 0..first.rows() {
            for c in 0..first.cols() {
                ech.insert(images.iter().map(|g| g.get(r, c).clone()).collect());
            }
        }
    }
    Subspace::from_rows(&ech.to_matrix()).perp()
}

/// Whether restriction `E → Hom(K, M)` is onto.
fn restrictions_surject(e: &EndoAlgebra, m: &Comodule, k: &Subspace) -> Result<bool> {
    if k.is_zero() {
        return Ok(true);
    }
    let homs = m.sub(k)?.hom_space(m)?;
    let kt = k.basis().transpose();
    let mut ech = Echelon::new(m.spec(), m.dim() * k.dim());
    for f in e.basis() {
        ech.insert(f.mul(&kt).entries().to_vec());
    }
    Ok(ech.rank() == homs.dim())
}

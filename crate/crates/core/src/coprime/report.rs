use serde::Serialize;

use crate::coalg::Comodule;
use crate::error::Result;
use crate::linalg::Subspace;
use crate::modrep::{classify_ring, RingClassification};
use crate::settings::Settings;

use super::endo::EndoAlgebra;
use super::flags::{flags_over, HypothesisFlags};
use super::spectrum::{
    ep_classes, fully_invariant_lattice, is_regular, right_ideal_lattice, socle, subcomodule_lattice, sum_all,
    dual_ring_decision, CoprimeTable,
};

/// Class memberships of one fully invariant subcomodule.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Membership {
    pub subcomodule: Subspace,
    pub ep: bool,
    pub esp: bool,
    pub cep: bool,
    pub cesp: bool,
    /// Fully M-coprime.
    pub cpspec: bool,
    /// Fully M-cosemiprime.
    pub csp: bool,
}

/// Everything computed about one comodule.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub dim: usize,
    pub endo_dim: usize,
    /// Only a sub-lattice of the fully invariant subcomodules was
    /// enumerated (ℚ mode); the lattice-quantified fields below are then
    /// computed over that sub-lattice.
    pub partial: bool,
    pub soc: Subspace,
    pub epcorad: Subspace,
    pub cpcorad: Subspace,
    pub cpspec: Vec<Subspace>,
    pub classes: Vec<Membership>,
    pub flags: HypothesisFlags,
    /// Classification of the endomorphism algebra with opposite composition.
    pub ring: RingClassification,
    /// `None` when undecidable in this mode.
    pub fully_coprime: Option<bool>,
    pub fully_cosemiprime: Option<bool>,
}

pub fn analyze(m: &Comodule, settings: &Settings) -> Result<AnalysisReport> {
    let e = EndoAlgebra::new(m)?;
    let subs = subcomodule_lattice(m, settings)?;
    let ideals = right_ideal_lattice(&e, settings)?;
    let flags = flags_over(&e, &subs, &ideals)?;
    let fi = fully_invariant_lattice(&e, settings)?;
    let partial = fi.partial;
    let table = CoprimeTable::new(&e, fi, settings)?;
    let mut classes = Vec::new();
    for k in table.lattice.nonzero() {
        let c = ep_classes(&e, k, settings)?;
        classes.push(Membership {
            subcomodule: k.clone(),
            ep: c.ep,
            esp: c.esp,
            cep: c.cep,
            cesp: c.cesp,
            cpspec: table.is_coprime(k),
            csp: table.is_cosemiprime(k),
        });
    }
    let spec = m.spec();
    let epcorad = sum_all(spec, m.dim(), classes.iter().filter(|c| c.ep).map(|c| &c.subcomodule));
    let (fully_coprime, fully_cosemiprime) = if !partial {
        (Some(table.top_is_coprime()), Some(table.top_is_cosemiprime()))
    } else if is_regular(m) {
        (
            Some(dual_ring_decision(m.coalgebra(), settings, true)?),
            Some(dual_ring_decision(m.coalgebra(), settings, false)?),
        )
    } else {
        (None, None)
    };
    let ring = classify_ring(e.algebra(), settings)?;
    Ok(AnalysisReport {
        dim: m.dim(),
        endo_dim: e.dim(),
        partial,
        soc: socle(m, settings)?,
        epcorad,
        cpcorad: table.cp_corad(),
        cpspec: table.cpspec(),
        classes,
        flags,
        ring,
        fully_coprime,
        fully_cosemiprime,
    })
}

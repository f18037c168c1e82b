use std::sync::Arc;

use crate::coalg::{Coalgebra, Comodule};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::linalg::{Echelon, Subspace};
use crate::modrep::{classify_ring, close_under_sum_and_intersection, jacobson_radical, ModuleRep};
use crate::settings::Settings;

use super::endo::EndoAlgebra;

/// A set of subspaces closed under sum and intersection, sorted by
/// dimension. `partial` marks a sub-lattice (ℚ mode): only the members
/// reachable by spinning standard basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    pub members: Vec<Subspace>,
    pub partial: bool,
}

impl Lattice {
    /// All submodules over a finite field; over ℚ the spins of the standard
    /// basis vectors closed under sum and intersection.
    pub fn of_module(rep: &ModuleRep, settings: &Settings) -> Result<Lattice> {
        if rep.spec().is_finite() {
            return Ok(Lattice {
                members: rep.submodule_lattice(settings)?,
                partial: false,
            });
        }
        let n = rep.dim();
        let spins = (0..n).map(|i| rep.spin_all(&[crate::coalg::unit(rep.spec(), n, i)])).collect();
        Ok(Lattice {
            members: close_under_sum_and_intersection(rep.spec(), n, spins, settings)?,
            partial: true,
        })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn nonzero(&self) -> impl Iterator<Item = &Subspace> {
        self.members.iter().filter(|k| !k.is_zero())
    }
}

/// Sum of a family of subspaces of `F^n`.
pub fn sum_all<'a>(spec: FieldSpec, n: usize, items: impl IntoIterator<Item = &'a Subspace>) -> Subspace {
    let mut e = Echelon::new(spec, n);
    for k in items {
        for v in k.basis().row_vectors() {
            e.insert(v.to_vec());
        }
    }
    Subspace::from_rows(&e.to_matrix())
}

pub fn subcomodule_lattice(m: &Comodule, settings: &Settings) -> Result<Lattice> {
    Lattice::of_module(&m.rational_rep(), settings)
}

pub fn fully_invariant_lattice(e: &EndoAlgebra, settings: &Settings) -> Result<Lattice> {
    Lattice::of_module(&e.bimodule_rep()?, settings)
}

pub fn right_ideal_lattice(e: &EndoAlgebra, settings: &Settings) -> Result<Lattice> {
    Lattice::of_module(&e.right_regular_rep()?, settings)
}

/// `Soc(M) = {v : Jac(C*) ⇀ v = 0}`.
pub fn socle(m: &Comodule, settings: &Settings) -> Result<Subspace> {
    let jac = jacobson_radical(&m.coalgebra().dual_algebra(), settings)?;
    let mut e = Echelon::new(m.spec(), m.dim());
    for x in jac.basis().row_vectors() {
        for row in m.action(x).row_vectors() {
            e.insert(row.to_vec());
        }
    }
    Ok(Subspace::from_rows(&e.to_matrix()).perp())
}

/// `Soc(C^r)`.
pub fn coradical(c: &Coalgebra, settings: &Settings) -> Result<Subspace> {
    socle(&Comodule::regular(Arc::new(c.clone())), settings)
}

/// Whether the socle is simple, i.e. `M` has a unique simple subcomodule
/// and it lies in every nonzero subcomodule.
pub fn is_irreducible_comodule(m: &Comodule, settings: &Settings) -> Result<bool> {
    let soc = socle(m, settings)?;
    if soc.is_zero() {
        return Ok(false);
    }
    m.rational_rep().submodule(&soc)?.is_irreducible(settings)
}

/// Membership of a fully invariant subcomodule in the four classes defined
/// by its annihilator ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct EpClasses {
    /// `An(K)` is prime.
    pub ep: bool,
    /// `An(K)` is semiprime.
    pub esp: bool,
    /// `An(K)` is completely prime.
    pub cep: bool,
    /// `An(K)` is completely semiprime.
    pub cesp: bool,
}

/// Classifies `E/An(K)`; `K` must be nonzero and fully invariant.
pub fn ep_classes(e: &EndoAlgebra, k: &Subspace, settings: &Settings) -> Result<EpClasses> {
    let r = classify_ring(&e.quotient_by_an(k)?, settings)?;
    Ok(EpClasses {
        ep: r.prime,
        esp: r.semiprime,
        cep: r.domain,
        cesp: r.reduced,
    })
}

/// Sum of the EP members of the lattice.
pub fn ep_corad(e: &EndoAlgebra, lattice: &Lattice, settings: &Settings) -> Result<Subspace> {
    let mut members = Vec::new();
    for k in lattice.nonzero() {
        if ep_classes(e, k, settings)?.ep {
            members.push(k);
        }
    }
    Ok(sum_all(e.comodule().spec(), e.comodule().dim(), members))
}

/// Internal coproducts `(X_i : X_j)` over a fully invariant lattice and the
/// resulting coprime and cosemiprime members.
#[derive(Clone, Debug)]
pub struct CoprimeTable {
    pub lattice: Lattice,
    /// `table[i][j] = (X_i : X_j)`; empty when only the diagonal was
    /// computed.
    pub table: Vec<Vec<Subspace>>,
    /// `diagonal[i] = (X_i : X_i)`.
    pub diagonal: Vec<Subspace>,
}

impl CoprimeTable {
    /// All pairs; charges `|L|²` to the budget.
    pub fn new(e: &EndoAlgebra, lattice: Lattice, settings: &Settings) -> Result<Self> {
        let l = lattice.len() as u128;
        settings.charge(l * l, "subcomodule pairs")?;
        let ans = lattice.members.iter().map(|x| e.an(x)).collect::<Result<Vec<_>>>()?;
        let table: Vec<Vec<Subspace>> = ans
            .iter()
            .map(|an| lattice.members.iter().map(|y| e.coproduct_with(an, y)).collect())
            .collect();
        let diagonal = (0..table.len()).map(|i| table[i][i].clone()).collect();
        Ok(CoprimeTable { lattice, table, diagonal })
    }

    /// Only `(X : X)`, enough for cosemiprimeness; charges `|L|`.
    pub fn diagonal_only(e: &EndoAlgebra, lattice: Lattice, settings: &Settings) -> Result<Self> {
        settings.charge(lattice.len() as u128, "subcomodules")?;
        let diagonal = lattice
            .members
            .iter()
            .map(|x| e.internal_coproduct(x, x))
            .collect::<Result<Vec<_>>>()?;
        Ok(CoprimeTable {
            lattice,
            table: Vec::new(),
            diagonal,
        })
    }

    /// `K ⊆ (X:Y)` forces `K ⊆ X` or `K ⊆ Y` for all lattice members.
    /// Needs the full table.
    pub fn is_coprime(&self, k: &Subspace) -> bool {
        let l = &self.lattice.members;
        assert_eq!(self.table.len(), l.len(), "coprimeness needs every pair");
        !k.is_zero()
            && (0..l.len()).all(|i| {
                (0..l.len()).all(|j| !k.is_subspace_of(&self.table[i][j]) || k.is_subspace_of(&l[i]) || k.is_subspace_of(&l[j]))
            })
    }

    /// `K ⊆ (X:X)` forces `K ⊆ X`.
    pub fn is_cosemiprime(&self, k: &Subspace) -> bool {
        let l = &self.lattice.members;
        !k.is_zero() && (0..l.len()).all(|i| !k.is_subspace_of(&self.diagonal[i]) || k.is_subspace_of(&l[i]))
    }

    /// Fully coprime members.
    pub fn cpspec(&self) -> Vec<Subspace> {
        self.lattice.nonzero().filter(|k| self.is_coprime(k)).cloned().collect()
    }

    /// Fully cosemiprime members.
    pub fn csp(&self) -> Vec<Subspace> {
        self.lattice.nonzero().filter(|k| self.is_cosemiprime(k)).cloned().collect()
    }

    fn ambient(&self) -> (FieldSpec, usize) {
        let top = self.lattice.members.last().expect("lattice contains the whole comodule");
        (top.spec(), top.ambient_dim())
    }

    /// Sum of the fully coprime members.
    pub fn cp_corad(&self) -> Subspace {
        let (spec, n) = self.ambient();
        sum_all(spec, n, &self.cpspec())
    }

    /// Whether the whole comodule is fully coprime.
    pub fn top_is_coprime(&self) -> bool {
        self.is_coprime(self.lattice.members.last().expect("nonempty lattice"))
    }

    pub fn top_is_cosemiprime(&self) -> bool {
        self.is_cosemiprime(self.lattice.members.last().expect("nonempty lattice"))
    }
}

/// Fully coprime spectrum over the enumerated fully invariant lattice.
pub fn cpspec(e: &EndoAlgebra, settings: &Settings) -> Result<Vec<Subspace>> {
    let lattice = fully_invariant_lattice(e, settings)?;
    Ok(CoprimeTable::new(e, lattice, settings)?.cpspec())
}

pub fn cp_corad(e: &EndoAlgebra, settings: &Settings) -> Result<Subspace> {
    let lattice = fully_invariant_lattice(e, settings)?;
    Ok(CoprimeTable::new(e, lattice, settings)?.cp_corad())
}

/// Which computation decided a coprimeness question.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Internal coproducts over the full fully invariant lattice.
    Lattice,
    /// Primeness of the dual algebra, for `M = C^r`.
    DualRing,
}

/// Whether `M` is fully coprime. The lattice path is used over finite
/// fields; over ℚ only `M = C^r` is decided, by primeness of `C*`.
pub fn is_fully_coprime(m: &Comodule, settings: &Settings) -> Result<(bool, Method)> {
    decide(m, settings, true)
}

pub fn is_fully_cosemiprime(m: &Comodule, settings: &Settings) -> Result<(bool, Method)> {
    decide(m, settings, false)
}

fn decide(m: &Comodule, settings: &Settings, coprime: bool) -> Result<(bool, Method)> {
    if m.spec().is_finite() {
        let e = EndoAlgebra::new(m)?;
        let lattice = fully_invariant_lattice(&e, settings)?;
        let v = if coprime {
            CoprimeTable::new(&e, lattice, settings)?.top_is_coprime()
        } else {
            CoprimeTable::diagonal_only(&e, lattice, settings)?.top_is_cosemiprime()
        };
        return Ok((v, Method::Lattice));
    }
    if !is_regular(m) {
        return Err(Error::FieldNotFinite(m.spec()));
    }
    Ok((dual_ring_decision(m.coalgebra(), settings, coprime)?, Method::DualRing))
}

/// `C*` prime (semiprime) decides whether `C^r` is fully coprime (fully
/// cosemiprime).
pub fn dual_ring_decision(c: &Coalgebra, settings: &Settings, coprime: bool) -> Result<bool> {
    let r = classify_ring(&c.dual_algebra(), settings)?;
    Ok(if coprime { r.prime } else { r.semiprime })
}

/// Whether `ρ = Δ`.
pub fn is_regular(m: &Comodule) -> bool {
    m.dim() == m.coalgebra().dim() && m.rho() == m.coalgebra().delta()
}

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::coalg::{unit, Coalgebra, Comodule};
use crate::error::Result;
use crate::linalg::Subspace;
use crate::modrep::{all_vectors, classify_ring, jacobson_radical, ModuleRep};
use crate::settings::Settings;

use super::endo::EndoAlgebra;
use super::flags::{flags_over, HypothesisFlags};
use super::spectrum::{
    ep_classes, fully_invariant_lattice, is_irreducible_comodule, right_ideal_lattice, socle, subcomodule_lattice,
    sum_all, CoprimeTable, EpClasses, Lattice,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "detail", rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    /// The identity failed; the string names a witness.
    Fail(String),
    /// A conditional statement whose hypotheses do not hold here; the
    /// identity is not asserted.
    HypothesesNotMet(String),
    /// Not decidable in this mode (e.g. a quantifier over an infinite
    /// lattice).
    Skipped(String),
}

impl Verdict {
    pub fn is_fail(&self) -> bool {
        matches!(self, Verdict::Fail(_))
    }

    fn check(ok: bool, witness: impl FnOnce() -> String) -> Verdict {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail(witness())
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "pass"),
            Verdict::Fail(w) => write!(f, "FAIL: {w}"),
            Verdict::HypothesesNotMet(w) => write!(f, "hypotheses not met ({w}), identity not asserted"),
            Verdict::Skipped(w) => write!(f, "skipped: {w}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremCheck {
    pub name: &'static str,
    pub statement: &'static str,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub flags: HypothesisFlags,
    pub checks: Vec<TheoremCheck>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        !self.checks.iter().any(|c| c.verdict.is_fail())
    }

    pub fn get(&self, name: &str) -> Option<&TheoremCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    fn push(&mut self, name: &'static str, statement: &'static str, verdict: Verdict) {
        self.checks.push(TheoremCheck { name, statement, verdict });
    }
}

/// Everything the comodule-level checks share.
struct Context<'a> {
    e: EndoAlgebra,
    subs: Lattice,
    ideals: Lattice,
    table: CoprimeTable,
    flags: HypothesisFlags,
    settings: &'a Settings,
}

impl<'a> Context<'a> {
    fn new(m: &Comodule, settings: &'a Settings) -> Result<Self> {
        let e = EndoAlgebra::new(m)?;
        let subs = subcomodule_lattice(m, settings)?;
        let ideals = right_ideal_lattice(&e, settings)?;
        let flags = flags_over(&e, &subs, &ideals)?;
        let fi = fully_invariant_lattice(&e, settings)?;
        let table = CoprimeTable::new(&e, fi, settings)?;
        Ok(Context {
            e,
            subs,
            ideals,
            table,
            flags,
            settings,
        })
    }

    fn partial(&self) -> bool {
        self.table.lattice.partial
    }
}

const PARTIAL: &str = "quantifies over all fully invariant subcomodules; only a sub-lattice is known over ℚ";

/// Checks of the comodule-level statements on `M`.
pub fn comodule_suite(m: &Comodule, settings: &Settings) -> Result<SuiteReport> {
    let ctx = Context::new(m, settings)?;
    let mut report = SuiteReport {
        flags: ctx.flags,
        checks: Vec::new(),
    };
    comodule_checks(&ctx, &mut report)?;
    Ok(report)
}

fn comodule_checks(ctx: &Context, report: &mut SuiteReport) -> Result<()> {
    let e = &ctx.e;
    let m = e.comodule();

    // Galois connection between subcomodules and right ideals.
    let ans = ctx.subs.members.iter().map(|k| e.an(k)).collect::<Result<Vec<_>>>()?;
    let mut witness = None;
    'subs: for (i, k) in ctx.subs.members.iter().enumerate() {
        if !k.is_subspace_of(&e.ke(&ans[i])?) {
            witness = Some(format!("K = {k} is not inside Ke(An(K))"));
            break;
        }
        for (j, k2) in ctx.subs.members.iter().enumerate() {
            if k.is_subspace_of(k2) && !ans[j].is_subspace_of(&ans[i]) {
                witness = Some(format!("K = {k} ⊆ K' = {k2} but An(K') ⊄ An(K)"));
                break 'subs;
            }
        }
    }
    if witness.is_none() {
        let kes = ctx.ideals.members.iter().map(|i| e.ke(i)).collect::<Result<Vec<_>>>()?;
        'ideals: for (a, i) in ctx.ideals.members.iter().enumerate() {
            if !i.is_subspace_of(&e.an(&kes[a])?) {
                witness = Some(format!("I = {i} is not inside An(Ke(I))"));
                break;
            }
            for (b, i2) in ctx.ideals.members.iter().enumerate() {
                if i.is_subspace_of(i2) && !kes[b].is_subspace_of(&kes[a]) {
                    witness = Some(format!("I = {i} ⊆ I' = {i2} but Ke(I') ⊄ Ke(I)"));
                    break 'ideals;
                }
            }
        }
    }
    report.push(
        "an-ke-galois",
        "An and Ke reverse inclusions, K ⊆ KeAn(K) and I ⊆ AnKe(I)",
        match witness {
            Some(w) => Verdict::Fail(w),
            None => Verdict::Pass,
        },
    );

    // (X:Y) ⊆ Ke(An(X)·An(Y)), with equality for self-cogenerators.
    let mut verdict = Verdict::Pass;
    'pairs: for (i, x) in ctx.subs.members.iter().enumerate() {
        for (j, y) in ctx.subs.members.iter().enumerate() {
            let inner = e.coproduct_with(&ans[i], y);
            let outer = e.ke(&e.algebra().subspace_product(&ans[i], &ans[j]))?;
            if !inner.is_subspace_of(&outer) || (ctx.flags.self_cogenerator && inner != outer) {
                verdict = Verdict::Fail(format!("X = {x}, Y = {y}: (X:Y) = {inner}, Ke(An(X)An(Y)) = {outer}"));
                break 'pairs;
            }
        }
    }
    report.push("coproduct-vs-kernel", "(X:Y) ⊆ Ke(An(X)·An(Y)), equal when M is a self-cogenerator", verdict);

    // Class inclusions and the comparison with the coprime classes.
    let fi: Vec<&Subspace> = ctx.table.lattice.nonzero().collect();
    let classes = fi.iter().map(|k| ep_classes(e, k, ctx.settings)).collect::<Result<Vec<EpClasses>>>()?;
    let chain_bad = fi.iter().zip(&classes).find(|(_, c)| {
        (c.ep && !c.esp) || (c.cep && !c.ep) || (c.cep && !c.cesp) || (c.cesp && !c.esp)
    });
    report.push(
        "class-inclusions",
        "CEP ⊆ EP ⊆ ESP and CEP ⊆ CESP ⊆ ESP",
        Verdict::check(chain_bad.is_none(), || format!("K = {}", chain_bad.expect("witness").0)),
    );

    let corad_eq = if ctx.partial() {
        Verdict::Skipped(PARTIAL.into())
    } else if !ctx.flags.self_cogenerator {
        Verdict::HypothesesNotMet("M is not a self-cogenerator".into())
    } else {
        let exact = ctx.flags.intrinsically_injective;
        let mut bad = None;
        for (k, c) in fi.iter().zip(&classes) {
            let cp = ctx.table.is_coprime(k);
            let csp = ctx.table.is_cosemiprime(k);
            if (c.ep && !cp) || (c.esp && !csp) || (exact && (c.ep != cp || c.esp != csp)) {
                bad = Some(format!("K = {k}: EP {}, CPSpec {cp}, ESP {}, CSP {csp}", c.ep, c.esp));
                break;
            }
        }
        if bad.is_none() && exact {
            let ep_corad = sum_all(m.spec(), m.dim(), fi.iter().zip(&classes).filter(|(_, c)| c.ep).map(|(k, _)| *k));
            let cp_corad = ctx.table.cp_corad();
            if ep_corad != cp_corad {
                bad = Some(format!("EPcorad = {ep_corad}, CPcorad = {cp_corad}"));
            }
        }
        match bad {
            Some(w) => Verdict::Fail(w),
            None => Verdict::Pass,
        }
    };
    report.push(
        "ep-vs-cpspec",
        "EP ⊆ CPSpec and ESP ⊆ CSP for self-cogenerators, with equality and EPcorad = CPcorad if also intrinsically injective",
        corad_eq,
    );

    // Direct sums of fully invariant pieces are never fully coprime.
    let dec = if ctx.partial() {
        Verdict::Skipped(PARTIAL.into())
    } else {
        let mut bad = None;
        'outer: for (k, c) in fi.iter().zip(&classes) {
            let must = ctx.table.is_coprime(k) || (ctx.flags.self_cogenerator && c.ep);
            if !must {
                continue;
            }
            for x in &fi {
                for y in &fi {
                    if x.is_subspace_of(k) && y.is_subspace_of(k) && x.intersect(y).is_zero() && x.sum(y) == **k {
                        bad = Some(format!("K = {k} = {x} ⊕ {y}"));
                        break 'outer;
                    }
                }
            }
        }
        match bad {
            Some(w) => Verdict::Fail(w),
            None => Verdict::Pass,
        }
    };
    report.push("coprime-indecomposable", "no fully coprime member is a direct sum of two nonzero fully invariant subcomodules", dec);

    // Jac(E) = An(Soc M) and Soc M = Ke(Jac E).
    let soc = socle(m, ctx.settings)?;
    let jac_e = jacobson_radical(e.algebra(), ctx.settings)?;
    let jac = if ctx.flags.self_injective && ctx.flags.self_cogenerator {
        let an_soc = e.an(&soc)?;
        let ke_jac = e.ke(&jac_e)?;
        Verdict::check(an_soc == jac_e && ke_jac == soc && soc.is_full() == jac_e.is_zero(), || {
            format!("Jac(E) = {jac_e}, An(Soc) = {an_soc}, Soc = {soc}, Ke(Jac) = {ke_jac}")
        })
    } else {
        Verdict::HypothesesNotMet("M is not a self-injective self-cogenerator".into())
    };
    report.push("jac-is-an-soc", "Jac(E) = An(Soc M), Soc M = Ke(Jac E), and Soc M = M iff Jac E = 0", jac);

    // Artinian E: prime, simple, no nontrivial fully invariant subcomodule
    // and fully coprime coincide.
    let artinian = if ctx.partial() {
        Verdict::Skipped(PARTIAL.into())
    } else if !(ctx.flags.intrinsically_injective && ctx.flags.self_cogenerator) {
        Verdict::HypothesesNotMet("M is not an intrinsically injective self-cogenerator".into())
    } else {
        let r = classify_ring(e.algebra(), ctx.settings)?;
        let trivial = ctx.table.lattice.len() == 2;
        let coprime = ctx.table.top_is_coprime();
        Verdict::check(r.prime == r.simple && r.simple == trivial && trivial == coprime, || {
            format!("E prime {}, E simple {}, no nontrivial fully invariant {trivial}, fully coprime {coprime}", r.prime, r.simple)
        })
    };
    report.push(
        "artinian-coprime",
        "E prime ⟺ E simple ⟺ no nontrivial fully invariant subcomodule ⟺ M fully coprime",
        artinian,
    );

    // Schur: simple comodules have division endomorphism rings.
    let mut bad = None;
    for s in m.composition_factors(ctx.settings)? {
        let r = classify_ring(EndoAlgebra::new(&s)?.algebra(), ctx.settings)?;
        if !r.domain {
            bad = Some(format!("simple factor of dimension {} has E of dimension {}", s.dim(), r.dim));
            break;
        }
    }
    report.push(
        "schur",
        "each simple composition factor has a division endomorphism algebra",
        match bad {
            Some(w) => Verdict::Fail(w),
            None => Verdict::Pass,
        },
    );
    Ok(())
}

/// Checks of the coalgebra-level statements on `C` followed by the
/// comodule-level ones on `C^r`.
pub fn theorem_suite(c: &Coalgebra, settings: &Settings) -> Result<SuiteReport> {
    let c_arc = Arc::new(c.clone());
    let m = Comodule::regular(c_arc);
    let ctx = Context::new(&m, settings)?;
    let e = &ctx.e;
    let spec = c.spec();
    let n = c.dim();
    let dual = c.dual_algebra();
    let ring = classify_ring(&dual, settings)?;
    let jac = ring.jacobson.clone();
    let soc = socle(&m, settings)?;
    let mut report = SuiteReport {
        flags: ctx.flags,
        checks: Vec::new(),
    };

    // E ≅ C* as rings, f ↦ ε∘f, with E carrying the opposite composition.
    let eps = c.epsilon();
    let phi: Vec<Vec<_>> = e
        .basis()
        .iter()
        .map(|f| (0..n).map(|j| (0..n).fold(spec.zero(), |acc, i| acc.add(&eps[i].mul(f.get(i, j))))).collect())
        .collect();
    let image = Subspace::span(spec, n, &phi)?;
    let mut bad = (image.dim() != n || e.dim() != n).then(|| format!("ε∘- has rank {} on E of dimension {}", image.dim(), e.dim()));
    if bad.is_none() {
        'prod: for a in 0..n {
            for b in 0..n {
                let prod = e.algebra().product(&unit(spec, n, a), &unit(spec, n, b));
                let lhs: Vec<_> = (0..n)
                    .map(|j| prod.iter().zip(&phi).fold(spec.zero(), |acc, (x, p)| acc.add(&x.mul(&p[j]))))
                    .collect();
                if lhs != dual.product(&phi[a], &phi[b]) {
                    bad = Some(format!("basis maps {a}, {b}"));
                    break 'prod;
                }
            }
        }
    }
    report.push(
        "endo-is-dual",
        "f ↦ ε∘f is a ring isomorphism End^C(C)^op → C*",
        match bad {
            Some(w) => Verdict::Fail(w),
            None => Verdict::Pass,
        },
    );

    report.push("dual-prime-by-functionals", "C* prime/domain/semiprime/reduced versus C = CfC*, C = Cf, Cf = CfC*f, Cf = Cf²", dual_prime_by_functionals(c, &ring, &ctx.flags, settings)?);

    // (K : L) = K ∧ L for right coideals.
    let wedge = {
        let l = ctx.subs.len() as u128;
        settings.charge(l * l, "coideal pairs")?;
        let mut bad = None;
        'w: for k in &ctx.subs.members {
            let an = e.an(k)?;
            for l in &ctx.subs.members {
                let w = c.wedge(k, l)?;
                let ic = e.coproduct_with(&an, l);
                if w != ic {
                    bad = Some(format!("K = {k}, L = {l}: K∧L = {w}, (K:L) = {ic}"));
                    break 'w;
                }
            }
        }
        match bad {
            Some(w) => Verdict::Fail(w),
            None => Verdict::Pass,
        }
    };
    report.push("wedge-is-coproduct", "(K : L) = K ∧ L for right coideals K, L", wedge);

    let c_jac = soc.perp() == jac && jac.perp() == soc;
    report.push(
        "dual-jac-is-soc-perp",
        "Jac(C*) = Soc(C^r)^⊥ and Soc(C^r) = Jac(C*)^⊥",
        Verdict::check(c_jac, || format!("Jac = {jac}, Soc = {soc}")),
    );

    let tau = if ctx.partial() {
        Verdict::Skipped(PARTIAL.into())
    } else {
        let cp = ctx.table.top_is_coprime();
        let csp = ctx.table.top_is_cosemiprime();
        Verdict::check(cp == ring.prime && csp == ring.semiprime, || {
            format!("C* prime {}, fully coprime {cp}, C* semiprime {}, fully cosemiprime {csp}", ring.prime, ring.semiprime)
        })
    };
    report.push("dual-prime-is-coprime", "C* prime (semiprime) ⟺ C^r fully coprime (fully cosemiprime)", tau);

    let prad = if ctx.partial() {
        Verdict::Skipped(PARTIAL.into())
    } else {
        let cp = ctx.table.cp_corad();
        Verdict::check(cp == ring.prad.perp(), || format!("CPcorad = {cp}, Prad^⊥ = {}", ring.prad.perp()))
    };
    report.push("cpcorad-is-prad-perp", "CPcorad(C^r) = Prad(C*)^⊥", prad);

    let cocomm = if !c.is_cocommutative() {
        Verdict::HypothesesNotMet("Δ is not cocommutative".into())
    } else if !ring.prime {
        Verdict::HypothesesNotMet("C is not fully coprime".into())
    } else {
        Verdict::check(is_irreducible_comodule(&m, settings)?, || format!("Soc = {soc} is not simple"))
    };
    report.push("cocommutative-irreducible", "cocommutative fully coprime C is irreducible", cocomm);

    comodule_checks(&ctx, &mut report)?;
    Ok(report)
}

/// Enumerates every nonzero functional over a finite field.
fn dual_prime_by_functionals(
    c: &Coalgebra,
    ring: &crate::modrep::RingClassification,
    flags: &HypothesisFlags,
    settings: &Settings,
) -> Result<Verdict> {
    let spec = c.spec();
    let n = c.dim();
    if !spec.is_finite() {
        return Ok(Verdict::Skipped("quantifies over every functional; needs a finite field".into()));
    }
    settings.charge_space(spec, n)?;
    let right = ModuleRep::new(spec, n, c.right_action_basis())?;
    let basis: Vec<_> = (0..n).map(|i| unit(spec, n, i)).collect();
    let (mut prime_eq, mut domain_eq, mut semiprime_eq, mut reduced_eq) = (None, None, None, None);
    for f in all_vectors(spec, &basis, n).skip(1) {
        let r = c.right_action(&f);
        let cf = r.image();
        let cfc = right.spin_all(&cf.basis_vectors());
        let cfcf = cfc.image_under(&r)?;
        let cf2 = r.mul(&r).image();
        let show = || format!("f = ({})", f.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "));
        if prime_eq.is_none() && !cfc.is_full() {
            prime_eq = Some(show());
        }
        if domain_eq.is_none() && !cf.is_full() {
            domain_eq = Some(show());
        }
        if semiprime_eq.is_none() && cf != cfcf {
            semiprime_eq = Some(show());
        }
        if reduced_eq.is_none() && cf != cf2 {
            reduced_eq = Some(show());
        }
    }
    let cases = [
        ("prime", ring.prime, prime_eq, flags.coretractable),
        ("domain", ring.domain, domain_eq, flags.coretractable),
        ("semiprime", ring.semiprime, semiprime_eq, flags.self_cogenerator),
        ("reduced", ring.reduced, reduced_eq, flags.self_cogenerator),
    ];
    for (name, holds, counterexample, iff) in cases {
        match counterexample {
            None if !holds => return Ok(Verdict::Fail(format!("condition holds for every f but C* is not {name}"))),
            Some(w) if holds && iff => return Ok(Verdict::Fail(format!("C* is {name} but the condition fails at {w}"))),
            _ => {}
        }
    }
    Ok(Verdict::Pass)
}

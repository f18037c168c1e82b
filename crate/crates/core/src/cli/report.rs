use std::fmt::Write as _;
use std::path::Path;

use serde_json::{json, Value};

use crate::coalg::{Builtin, Comodule};
use crate::coprime::{analyze, coradical, comodule_suite, theorem_suite, CoprimeTable, EndoAlgebra, SuiteReport};
use crate::field::FieldSpec;
use crate::linalg::{tensor_index, Subspace};
use crate::modrep::classify_ring;
use crate::settings::Settings;

use super::document::{emit, parse, NamedSubspace, WorkbenchDocument, SCHEMA_VERSION};
use super::{Command, ExamplesCommand, Failure};

/// A finished command: its JSON report, the same in text, and whether it
/// counts as success.
#[derive(Debug)]
pub struct Output {
    pub json: Value,
    pub text: String,
    pub ok: bool,
    pub warnings: Vec<String>,
}

impl Output {
    fn new(command: &str, mut body: Value, text: String, ok: bool) -> Self {
        let obj = body.as_object_mut().expect("report body is an object");
        obj.insert("schema_version".into(), json!(SCHEMA_VERSION));
        obj.insert("command".into(), json!(command));
        Output {
            json: body,
            text,
            ok,
            warnings: Vec::new(),
        }
    }
}

fn load(path: &Path) -> Result<WorkbenchDocument, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    parse(&text).map_err(|e| Failure::Rejected(format!("{}: {e}", path.display())))
}

/// Loads and insists on valid axioms.
fn load_valid(path: &Path) -> Result<WorkbenchDocument, Failure> {
    let doc = load(path)?;
    let errors = doc.validate();
    if let Some(e) = errors.first() {
        return Err(Failure::Rejected(format!("{}: invalid {e}", path.display())));
    }
    Ok(doc)
}

fn target(doc: &WorkbenchDocument, name: &Option<String>) -> Result<(String, Comodule), Failure> {
    match name {
        None => Ok(("C".into(), Comodule::regular(doc.coalgebra.clone()))),
        Some(n) => doc
            .comodule(n)
            .cloned()
            .map(|m| (n.clone(), m))
            .ok_or_else(|| Failure::Usage(format!("no comodule named {n:?}"))),
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn opt(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "yes",
        Some(false) => "no",
        None => "undecided",
    }
}

const PARTIAL_WARNING: &str = "partial (ℚ mode): only the subcomodules reachable by spinning basis vectors were enumerated";

pub(super) fn execute(command: &Command, settings: &Settings) -> Result<Output, Failure> {
    match command {
        Command::Check { file } => check(file),
        Command::Dual { file } => dual(file, settings),
        Command::Analyze { file, comodule } => analyze_cmd(file, comodule, settings),
        Command::Wedge { file, left, right } => wedge(file, left, right),
        Command::Cpspec { file, comodule } => cpspec(file, comodule, settings),
        Command::Theorems { file } => theorems(file, settings),
        Command::Examples {
            action: ExamplesCommand::Export { name, param, field, output },
        } => export(name, *param, field, output.as_deref(), settings),
    }
}

fn check(file: &Path) -> Result<Output, Failure> {
    let doc = load(file)?;
    let errors = doc.validate();
    let mut text = String::new();
    let mut violations = Vec::new();
    for e in &errors {
        for v in &e.report.violations {
            writeln!(text, "{}: {v}", e.target).unwrap();
            violations.push(json!({
                "target": e.target,
                "axiom": v.axiom.name(),
                "position": v.position,
                "left": v.left.to_string(),
                "right": v.right.to_string(),
            }));
        }
    }
    if errors.is_empty() {
        writeln!(
            text,
            "valid: coalgebra of dimension {} over {}, {} comodule(s)",
            doc.coalgebra.dim(),
            doc.field(),
            doc.comodules.len()
        )
        .unwrap();
    }
    Ok(Output::new(
        "check",
        json!({ "valid": errors.is_empty(), "violations": violations }),
        text,
        errors.is_empty(),
    ))
}

fn dual(file: &Path, settings: &Settings) -> Result<Output, Failure> {
    let doc = load_valid(file)?;
    let c = &doc.coalgebra;
    let a = c.dual_algebra();
    let n = a.dim();
    let mut products = Vec::new();
    let mut text = format!("C* = dual of {:?}, dimension {n} over {}\n", doc.name, doc.field());
    for j in 0..n {
        for k in 0..n {
            let terms: Vec<(usize, String)> = (0..n)
                .filter_map(|i| {
                    let x = a.mul().get(i, tensor_index(j, k, n));
                    (!x.is_zero()).then(|| (i, x.to_string()))
                })
                .collect();
            for (i, x) in &terms {
                products.push(json!([j, k, i, x]));
            }
            if !terms.is_empty() {
                let rhs: Vec<String> = terms.iter().map(|(i, x)| format!("{x}·e{i}*")).collect();
                writeln!(text, "  e{j}*·e{k}* = {}", rhs.join(" + ")).unwrap();
            }
        }
    }
    let r = classify_ring(&a, settings)?;
    let unit: Vec<String> = a.one().iter().map(|x| x.to_string()).collect();
    writeln!(text, "  unit = ({})", unit.join(" ")).unwrap();
    writeln!(
        text,
        "commutative {}, semisimple {}, simple {}, prime {}, semiprime {}, domain {}, reduced {}",
        yes(r.commutative),
        yes(r.semisimple),
        yes(r.simple),
        yes(r.prime),
        yes(r.semiprime),
        yes(r.domain),
        yes(r.reduced)
    )
    .unwrap();
    writeln!(text, "Jac = {} (dimension {})", r.jacobson, r.jacobson.dim()).unwrap();
    let factors: Vec<String> = r.composition_factors.iter().map(|(d, m)| format!("{d}-dim × {m}")).collect();
    writeln!(text, "simple modules: {}", factors.join(", ")).unwrap();
    Ok(Output::new(
        "dual",
        json!({ "dim": n, "products": products, "unit": unit, "classification": r }),
        text,
        true,
    ))
}

fn analyze_cmd(file: &Path, comodule: &Option<String>, settings: &Settings) -> Result<Output, Failure> {
    let doc = load_valid(file)?;
    let (name, m) = target(&doc, comodule)?;
    let r = analyze(&m, settings)?;
    let mut text = format!("{name}: comodule of dimension {} over {}; End has dimension {}\n", r.dim, m.spec(), r.endo_dim);
    writeln!(text, "Soc = {} (dimension {})", r.soc, r.soc.dim()).unwrap();
    writeln!(text, "EPcorad = {}", r.epcorad).unwrap();
    writeln!(text, "CPcorad = {}", r.cpcorad).unwrap();
    writeln!(text, "fully coprime: {}, fully cosemiprime: {}", opt(r.fully_coprime), opt(r.fully_cosemiprime)).unwrap();
    let f = &r.flags;
    writeln!(
        text,
        "flags: self-injective {}, self-cogenerator {}, coretractable {}, retractable {}, intrinsically injective {}",
        yes(f.self_injective),
        yes(f.self_cogenerator),
        yes(f.coretractable),
        yes(f.retractable),
        yes(f.intrinsically_injective)
    )
    .unwrap();
    writeln!(
        text,
        "End ring: prime {}, semiprime {}, simple {}, domain {}, dim Jac {}",
        yes(r.ring.prime),
        yes(r.ring.semiprime),
        yes(r.ring.simple),
        yes(r.ring.domain),
        r.ring.jacobson.dim()
    )
    .unwrap();
    writeln!(text, "fully invariant subcomodules:").unwrap();
    for c in &r.classes {
        let mut tags = Vec::new();
        for (t, on) in [("EP", c.ep), ("ESP", c.esp), ("CEP", c.cep), ("CESP", c.cesp), ("CPSpec", c.cpspec), ("CSP", c.csp)] {
            if on {
                tags.push(t);
            }
        }
        writeln!(text, "  {} [{}]", c.subcomodule, tags.join(" ")).unwrap();
    }
    let mut out = Output::new("analyze", json!({ "comodule": name, "report": r }), text, true);
    if r.partial {
        out.warnings.push(PARTIAL_WARNING.into());
    }
    Ok(out)
}

fn subspace_of_c<'a>(doc: &'a WorkbenchDocument, name: &str) -> Result<&'a NamedSubspace, Failure> {
    let s = doc
        .subspace(name)
        .ok_or_else(|| Failure::Usage(format!("no subspace named {name:?}")))?;
    if s.of != "C" {
        return Err(Failure::Usage(format!("subspace {name:?} lives in {:?}, not in C", s.of)));
    }
    Ok(s)
}

fn wedge(file: &Path, left: &str, right: &str) -> Result<Output, Failure> {
    let doc = load_valid(file)?;
    let c = &doc.coalgebra;
    let k = &subspace_of_c(&doc, left)?.subspace;
    let l = &subspace_of_c(&doc, right)?.subspace;
    let w = c.wedge(k, l)?;
    let e = EndoAlgebra::new(&Comodule::regular(c.clone()))?;
    let ic = e.internal_coproduct(k, l)?;
    let coideals = c.is_right_coideal(k)? && c.is_right_coideal(l)?;
    let equal = w == ic;
    let verdict = match (coideals, equal) {
        (true, true) => "pass",
        (true, false) => "fail",
        (false, _) => "hypotheses not met (not both right coideals), identity not asserted",
    };
    let text = format!("{left} ∧ {right} = {w}\n({left} : {right}) = {ic}\nequal: {}\nverdict: {verdict}\n", yes(equal));
    Ok(Output::new(
        "wedge",
        json!({
            "left": left,
            "right": right,
            "wedge": w,
            "internal_coproduct": ic,
            "right_coideals": coideals,
            "equal": equal,
            "verdict": verdict,
        }),
        text,
        !coideals || equal,
    ))
}

fn cpspec(file: &Path, comodule: &Option<String>, settings: &Settings) -> Result<Output, Failure> {
    let doc = load_valid(file)?;
    let (name, m) = target(&doc, comodule)?;
    let e = EndoAlgebra::new(&m)?;
    let lattice = crate::coprime::fully_invariant_lattice(&e, settings)?;
    let partial = lattice.partial;
    let table = CoprimeTable::new(&e, lattice, settings)?;
    let members = table.cpspec();
    let corad = table.cp_corad();
    let soc = crate::coprime::socle(&m, settings)?;
    let (coprime, cosemiprime) = if partial && crate::coprime::is_regular(&m) {
        (
            Some(crate::coprime::dual_ring_decision(m.coalgebra(), settings, true)?),
            Some(crate::coprime::dual_ring_decision(m.coalgebra(), settings, false)?),
        )
    } else if partial {
        (None, None)
    } else {
        (Some(table.top_is_coprime()), Some(table.top_is_cosemiprime()))
    };
    let mut text = format!("{name}: CPSpec has {} member(s)\n", members.len());
    for k in &members {
        writeln!(text, "  {k}").unwrap();
    }
    writeln!(text, "CPcorad = {corad} (dimension {})", corad.dim()).unwrap();
    writeln!(text, "coradical = {soc} (dimension {})", soc.dim()).unwrap();
    writeln!(text, "fully coprime = {}, cosemiprime = {}", opt(coprime), opt(cosemiprime)).unwrap();
    let mut out = Output::new(
        "cpspec",
        json!({
            "comodule": name,
            "partial": partial,
            "cpspec": members,
            "cpcorad": corad,
            "coradical": soc,
            "fully_coprime": coprime,
            "fully_cosemiprime": cosemiprime,
        }),
        text,
        true,
    );
    if partial {
        out.warnings.push(PARTIAL_WARNING.into());
    }
    Ok(out)
}

fn render_suite(title: &str, r: &SuiteReport, text: &mut String) {
    writeln!(text, "{title}").unwrap();
    for c in &r.checks {
        writeln!(text, "  {:<26} {}", c.name, c.verdict).unwrap();
    }
}

fn theorems(file: &Path, settings: &Settings) -> Result<Output, Failure> {
    let doc = load_valid(file)?;
    let mut text = String::new();
    let main = theorem_suite(&doc.coalgebra, settings)?;
    render_suite("C over itself:", &main, &mut text);
    let mut ok = main.passed();
    let mut comodules = Vec::new();
    for m in &doc.comodules {
        let r = comodule_suite(&m.comodule, settings)?;
        render_suite(&format!("comodule {}:", m.name), &r, &mut text);
        ok &= r.passed();
        comodules.push(json!({ "name": m.name, "report": r }));
    }
    writeln!(text, "{}", if ok { "all asserted identities hold" } else { "some identity FAILED" }).unwrap();
    Ok(Output::new(
        "theorems",
        json!({ "passed": ok, "coalgebra": main, "comodules": comodules }),
        text,
        ok,
    ))
}

/// A built-in coalgebra as a document, with its coradical and the whole
/// space as named subspaces.
pub fn builtin_document(builtin: Builtin, spec: FieldSpec, param: usize, settings: &Settings) -> crate::Result<WorkbenchDocument> {
    let c = builtin.build(spec, param)?;
    let corad = coradical(&c, settings)?;
    let n = c.dim();
    let mut doc = WorkbenchDocument::new(format!("{}-{param}", builtin.name()), c);
    doc.subspaces.push(NamedSubspace {
        name: "coradical".into(),
        of: "C".into(),
        subspace: corad,
    });
    doc.subspaces.push(NamedSubspace {
        name: "whole".into(),
        of: "C".into(),
        subspace: Subspace::full(spec, n),
    });
    Ok(doc)
}

fn export(name: &str, param: usize, field: &str, output: Option<&Path>, settings: &Settings) -> Result<Output, Failure> {
    let builtin = Builtin::from_name(name).ok_or_else(|| {
        let names: Vec<&str> = Builtin::ALL.iter().map(|b| b.name()).collect();
        Failure::Usage(format!("unknown example {name:?}; choose one of {}", names.join(", ")))
    })?;
    let spec: FieldSpec = field.parse().map_err(|e: crate::Error| Failure::Usage(e.to_string()))?;
    let doc = builtin_document(builtin, spec, param, settings).map_err(|e| match e {
        crate::Error::InvalidParameter(m) => Failure::Usage(m),
        other => other.into(),
    })?;
    let text = emit(&doc);
    match output {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
            Ok(Output::new(
                "examples export",
                json!({ "name": doc.name, "path": path.display().to_string() }),
                format!("wrote {} to {}\n", doc.name, path.display()),
                true,
            ))
        }
        None => {
            let document: Value = serde_json::from_str(&text).expect("emitted document is JSON");
            Ok(Output {
                json: document,
                text,
                ok: true,
                warnings: Vec::new(),
            })
        }
    }
}

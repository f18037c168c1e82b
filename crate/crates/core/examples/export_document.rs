//! Builds a workbench document by hand, writes it as JSON, reads it back
//! and validates it; the same format the command line consumes.

use coprimal::cli::document::{NamedComodule, NamedSubspace};
use coprimal::cli::{emit, parse, WorkbenchDocument};
use coprimal::coalg::{grouplike, Comodule};
use coprimal::{FieldSpec, Subspace};

fn main() -> coprimal::Result<()> {
    let spec = FieldSpec::Rationals;
    let c = grouplike(spec, 2)?;
    let mut doc = WorkbenchDocument::new("two points", c);
    let m = Comodule::regular(doc.coalgebra.clone());
    doc.comodules.push(NamedComodule { name: "regular".into(), comodule: m });
    doc.subspaces.push(NamedSubspace {
        name: "first".into(),
        of: "C".into(),
        subspace: Subspace::span(spec, 2, &[vec![spec.one(), spec.zero()]])?,
    });
    let text = emit(&doc);
    println!("{text}");
    let back = parse(&text).map_err(|e| coprimal::Error::InvalidParameter(e.to_string()))?;
    assert_eq!(back, doc);
    println!("round trip ok, {} validation error(s)", back.validate().len());
    Ok(())
}

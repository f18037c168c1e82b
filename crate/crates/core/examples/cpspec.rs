//! The full analysis of one comodule: socle, the EP and coprime classes of
//! its fully invariant subcomodules, and the hypothesis flags.

use std::sync::Arc;

use coprimal::coalg::{Comodule, Coalgebra};
use coprimal::coprime::{analyze, subcomodule_lattice};
use coprimal::{FieldSpec, Settings};

fn main() -> coprimal::Result<()> {
    let settings = Settings::default();
    let spec = FieldSpec::prime(2)?;
    // The dual of the upper triangular 2×2 matrices.
    let c = Arc::new(Coalgebra::from_terms(
        spec,
        3,
        [(0, 0, 0, spec.one()), (1, 0, 1, spec.one()), (1, 1, 2, spec.one()), (2, 2, 2, spec.one())],
        vec![spec.one(), spec.zero(), spec.one()],
    )?);
    let whole = Comodule::regular(c.clone());
    let lattice = subcomodule_lattice(&whole, &settings)?;
    let k = lattice.members.iter().find(|k| k.dim() == 2).expect("a 2-dimensional subcomodule");
    for (name, m) in [("C", whole.clone()), ("K", whole.sub(k)?)] {
        let r = analyze(&m, &settings)?;
        println!("{name}: dimension {}, End dimension {}", r.dim, r.endo_dim);
        println!("  Soc {}", r.soc);
        println!("  EPcorad {}  CPcorad {}", r.epcorad, r.cpcorad);
        println!("  fully coprime {:?}, fully cosemiprime {:?}", r.fully_coprime, r.fully_cosemiprime);
        println!("  retractable {}, coretractable {}", r.flags.retractable, r.flags.coretractable);
        for class in &r.classes {
            println!("  {} ep={} cpspec={}", class.subcomodule, class.ep, class.cpspec);
        }
    }
    Ok(())
}

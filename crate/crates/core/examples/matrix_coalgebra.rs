//! The comatrix coalgebra `M^c(n)`: its dual is the full matrix algebra, so
//! it is simple, and C is fully coprime over itself.

use std::sync::Arc;

use coprimal::coalg::{matrix_coalgebra, Comodule};
use coprimal::coprime::{coradical, is_fully_coprime, EndoAlgebra};
use coprimal::modrep::classify_ring;
use coprimal::{FieldSpec, Settings};

fn main() -> coprimal::Result<()> {
    let settings = Settings::default();
    for spec in [FieldSpec::Rationals, FieldSpec::prime(2)?] {
        let c = Arc::new(matrix_coalgebra(spec, 2)?);
        assert!(c.validate().passed());
        println!("M^c(2) over {spec}: dimension {}", c.dim());

        let ring = classify_ring(&c.dual_algebra(), &settings)?;
        println!("  C* simple {}, commutative {}, dim Jac {}", ring.simple, ring.commutative, ring.jacobson.dim());

        let corad = coradical(&c, &settings)?;
        println!("  coradical is all of C: {}", corad.is_full());

        let m = Comodule::regular(c.clone());
        let e = EndoAlgebra::new(&m)?;
        println!("  End^C(C) has dimension {}", e.dim());
        let (coprime, method) = is_fully_coprime(&m, &settings)?;
        println!("  fully coprime: {coprime} (decided by {method:?})");
    }
    Ok(())
}

//! The trivial extension `g, x_1, …, x_λ`: irreducible and cocommutative,
//! yet neither fully coprime nor fully cosemiprime over a finite field.

use std::sync::Arc;

use coprimal::coalg::{lomp, Comodule};
use coprimal::coprime::{
    cp_corad, cpspec, coradical, is_fully_coprime, is_fully_cosemiprime, is_irreducible_comodule, EndoAlgebra,
};
use coprimal::{FieldSpec, Settings};

fn main() -> coprimal::Result<()> {
    let settings = Settings::default();
    let spec = FieldSpec::prime(3)?;
    for lambda in 1..=3 {
        let c = Arc::new(lomp(spec, lambda)?);
        let m = Comodule::regular(c.clone());
        let e = EndoAlgebra::new(&m)?;
        println!("λ = {lambda} over {spec} (dimension {})", c.dim());
        println!("  cocommutative {}", c.is_cocommutative());
        println!("  irreducible {}", is_irreducible_comodule(&m, &settings)?);
        println!("  coradical {}", coradical(&c, &settings)?);
        for k in cpspec(&e, &settings)? {
            println!("  fully coprime subcomodule {k}");
        }
        println!("  CPcorad {}", cp_corad(&e, &settings)?);
        println!("  C fully coprime {}", is_fully_coprime(&m, &settings)?.0);
        println!("  C fully cosemiprime {}", is_fully_cosemiprime(&m, &settings)?.0);
    }
    Ok(())
}

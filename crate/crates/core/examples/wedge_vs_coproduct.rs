//! For subcomodules of C, the internal coproduct `(K : L)` computed inside
//! End^C(C) coincides with the wedge `Δ⁻¹(K ⊗ C + C ⊗ L)`.

use std::sync::Arc;

use coprimal::coalg::Comodule;
use coprimal::coprime::{subcomodule_lattice, EndoAlgebra};
use coprimal::random::random_coalgebra;
use coprimal::{FieldSpec, Settings};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> coprimal::Result<()> {
    let settings = Settings::default();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for spec in [FieldSpec::prime(2)?, FieldSpec::prime(3)?] {
        let mut pairs = 0;
        for _ in 0..10 {
            let c = Arc::new(random_coalgebra(spec, 4, &mut rng));
            let m = Comodule::regular(c.clone());
            let e = EndoAlgebra::new(&m)?;
            let lattice = subcomodule_lattice(&m, &settings)?;
            for k in &lattice.members {
                for l in &lattice.members {
                    assert_eq!(e.internal_coproduct(k, l)?, c.wedge(k, l)?);
                    pairs += 1;
                }
            }
        }
        println!("{spec}: wedge and internal coproduct agree on {pairs} pairs of subcomodules");
    }
    Ok(())
}

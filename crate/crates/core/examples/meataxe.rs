//! Irreducibility and composition series of random modules, over finite
//! fields and over ℚ.

use coprimal::modrep::simple_types;
use coprimal::random::random_module;
use coprimal::{FieldSpec, Settings};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> coprimal::Result<()> {
    let settings = Settings::default();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for spec in [FieldSpec::prime(2)?, FieldSpec::prime(5)?, FieldSpec::Rationals] {
        println!("over {spec}");
        for dim in 2..=5 {
            let m = random_module(spec, dim, &mut rng);
            let irreducible = m.is_irreducible(&settings)?;
            let factors = m.composition_factors(&settings)?;
            let dims: Vec<usize> = factors.iter().map(|f| f.dim()).collect();
            let types = simple_types(factors)?;
            println!(
                "  dim {dim}, {} generator(s): irreducible {irreducible}, factors {dims:?}, {} distinct",
                m.generators().len(),
                types.len()
            );
            if let Some(sub) = m.find_submodule(&settings)? {
                println!("    proper submodule {sub}");
            }
        }
    }
    Ok(())
}

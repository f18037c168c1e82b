//! Divided powers `Δ(x_n) = Σ x_i ⊗ x_{n−i}`: the dual is the truncated
//! polynomial ring, and the wedge powers of the coradical climb one degree
//! at a time.

use coprimal::coalg::divided_power;
use coprimal::coprime::coradical;
use coprimal::modrep::classify_ring;
use coprimal::{FieldSpec, Settings};

fn main() -> coprimal::Result<()> {
    let settings = Settings::default();
    let c = divided_power(FieldSpec::Rationals, 5)?;
    let ring = classify_ring(&c.dual_algebra(), &settings)?;
    println!("dual of the divided power coalgebra of dimension {}", c.dim());
    println!("  local {}, commutative {}, dim Jac {}", ring.composition_factors.len() == 1, ring.commutative, ring.jacobson.dim());

    let c0 = coradical(&c, &settings)?;
    let mut layer = c0.clone();
    let mut n = 0;
    println!("  C_0 = {layer}");
    while !layer.is_full() {
        layer = c.wedge(&c0, &layer)?;
        n += 1;
        println!("  C_{n} = C_0 ∧ C_{} has dimension {}", n - 1, layer.dim());
    }
    Ok(())
}

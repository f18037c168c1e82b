//! Runs every identity check on the built-in coalgebras and prints the
//! verdicts.

use coprimal::coalg::Builtin;
use coprimal::coprime::theorem_suite;
use coprimal::{FieldSpec, Settings};

fn main() -> coprimal::Result<()> {
    let settings = Settings::default();
    let mut failures = 0;
    for spec in [FieldSpec::prime(2)?, FieldSpec::prime(3)?, FieldSpec::Rationals] {
        for b in Builtin::ALL {
            let c = b.build(spec, 2)?;
            let report = theorem_suite(&c, &settings)?;
            println!("{}-2 over {spec}", b.name());
            for check in &report.checks {
                println!("  {:<26} {}", check.name, check.verdict);
            }
            if !report.passed() {
                failures += 1;
            }
        }
    }
    println!("{failures} coalgebra(s) with a failed identity");
    Ok(())
}

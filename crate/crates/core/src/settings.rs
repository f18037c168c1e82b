//! Knobs shared by every enumeration-based computation.

use crate::error::{Error, Result};
use crate::field::FieldSpec;

pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Enumeration budget and seed. Results are a deterministic function of the
/// input and these two values.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Settings {
    /// Largest number of vectors (or subspace pairs) any single enumeration
    /// may visit.
    pub budget: u64,
    /// Seed for the randomized element search of the irreducibility test.
    pub seed: u64,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            budget: DEFAULT_BUDGET,
            seed: 0,
        }
    }
}

impl Settings {
    pub fn with_budget(budget: u64) -> Self {
        Settings {
            budget,
            ..Self::default()
        }
    }

    /// Fails unless `needed ≤ budget`.
    pub fn charge(&self, needed: u128, what: &str) -> Result<()> {
        if needed > self.budget as u128 {
            return Err(Error::EnumerationBudgetExceeded {
                needed: format!("{needed} {what}"),
                budget: self.budget,
            });
        }
        Ok(())
    }

    /// Fails unless `|F|^dim ≤ budget`; requires a finite field.
    pub fn charge_space(&self, spec: FieldSpec, dim: usize) -> Result<()> {
        let q = spec.order().ok_or(Error::FieldNotFinite(spec))? as u128;
        let mut needed: u128 = 1;
        for _ in 0..dim {
            needed = needed.saturating_mul(q);
            if needed > self.budget as u128 {
                return Err(Error::EnumerationBudgetExceeded {
                    needed: format!("{q}^{dim} vectors"),
                    budget: self.budget,
                });
            }
        }
        Ok(())
    }
}

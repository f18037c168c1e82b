//! Results of checking structure-constant axioms entry by entry.

use std::fmt;

use crate::field::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    Coassociativity,
    LeftCounit,
    RightCounit,
    CoactionCoassociativity,
    CoactionCounit,
    Associativity,
    LeftUnit,
    RightUnit,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::Coassociativity => "coassociativity",
            Axiom::LeftCounit => "left counit",
            Axiom::RightCounit => "right counit",
            Axiom::CoactionCoassociativity => "coaction coassociativity",
            Axiom::CoactionCounit => "coaction counit",
            Axiom::Associativity => "associativity",
            Axiom::LeftUnit => "left unit",
            Axiom::RightUnit => "right unit",
        }
    }

    /// Whether the axiom is one of the counit laws.
    pub fn is_counit(self) -> bool {
        matches!(self, Axiom::LeftCounit | Axiom::RightCounit | Axiom::CoactionCounit)
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The first entry at which the two sides of an axiom differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    /// Human-readable location, e.g. `Δ(e_2) at e_0⊗e_1⊗e_1`.
    pub position: String,
    pub left: Scalar,
    pub right: Scalar,
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} fails for {}: {} vs {}",
            self.axiom, self.position, self.left, self.right
        )
    }
}

/// One entry per violated axiom (the first failing entry found).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first(&self) -> Option<&AxiomViolation> {
        self.violations.first()
    }

    pub(crate) fn record(&mut self, v: AxiomViolation) {
        if !self.violations.iter().any(|w| w.axiom == v.axiom) {
            self.violations.push(v);
        }
    }

    pub(crate) fn has(&self, axiom: Axiom) -> bool {
        self.violations.iter().any(|w| w.axiom == axiom)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return f.write_str("all axioms hold");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

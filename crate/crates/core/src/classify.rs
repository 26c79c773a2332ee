//! The trichotomy decision procedure over the property vector.

use std::fmt;

use crate::error::RelationError;
use crate::relation::{property_vector, IhsPolarity, Language, PropertyVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TrichotomyClass {
    PolyValid,
    FptBijunctive,
    ApproxIhsb { width: usize, polarity: IhsPolarity },
    OddsetEquivalent,
    HardWp,
    HardNp,
}

impl fmt::Display for TrichotomyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TrichotomyClass::PolyValid => f.write_str("POLY_VALID"),
            TrichotomyClass::FptBijunctive => f.write_str("FPT_BIJUNCTIVE"),
            TrichotomyClass::ApproxIhsb { width, polarity } => {
                write!(f, "APPROX_IHSB({width},{})", polarity.sign())
            }
            TrichotomyClass::OddsetEquivalent => f.write_str("ODDSET_EQUIVALENT"),
            TrichotomyClass::HardWp => f.write_str("HARD_WP"),
            TrichotomyClass::HardNp => f.write_str("HARD_NP"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub class: TrichotomyClass,
    pub properties: PropertyVector,
    pub narrative: Vec<String>,
}

fn mark(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "fail"
    }
}

/// Picks the IHS polarity with the smaller width; plus wins a tie.
fn ihs_choice(p: &PropertyVector) -> Option<(usize, IhsPolarity)> {
    match (p.ihs_plus_width, p.ihs_minus_width) {
        (Some(a), Some(b)) if b < a => Some((b, IhsPolarity::Minus)),
        (Some(a), _) => Some((a, IhsPolarity::Plus)),
        (None, Some(b)) => Some((b, IhsPolarity::Minus)),
        (None, None) => None,
    }
}

pub fn class_of(p: &PropertyVector) -> TrichotomyClass {
    if p.zero_valid || p.one_valid {
        TrichotomyClass::PolyValid
    } else if p.bijunctive {
        TrichotomyClass::FptBijunctive
    } else if let Some((width, polarity)) = ihs_choice(p) {
        TrichotomyClass::ApproxIhsb { width, polarity }
    } else if p.affine {
        TrichotomyClass::OddsetEquivalent
    } else if p.self_dual {
        TrichotomyClass::HardNp
    } else {
        TrichotomyClass::HardWp
    }
}

pub fn classify(lang: &Language) -> Result<Classification, RelationError> {
    let p = property_vector(lang)?;
    let class = class_of(&p);
    let width = |w: Option<usize>| w.map_or_else(|| "none".to_string(), |b| b.to_string());
    let mut narrative = vec![
        format!("0-valid (all-zero tuple in every relation): {}", mark(p.zero_valid)),
        format!("1-valid (all-one tuple in every relation): {}", mark(p.one_valid)),
        format!("Horn (and2 closure, Horn clauses): {}", mark(p.horn)),
        format!("dual-Horn (or2 closure, dual-Horn clauses): {}", mark(p.dual_horn)),
        format!("bijunctive (maj3 closure, binary clauses): {}", mark(p.bijunctive)),
        format!("affine (xor3 closure, affine hull): {}", mark(p.affine)),
        format!("self-dual (not1 closure): {}", mark(p.self_dual)),
        format!("irredundant: {}", mark(p.irredundant)),
        format!("IHS-B+ minimal width: {}", width(p.ihs_plus_width)),
        format!("IHS-B- minimal width: {}", width(p.ihs_minus_width)),
    ];
    narrative.push(match class {
        TrichotomyClass::PolyValid => {
            "verdict: a constant assignment satisfies every constraint; solvable in polynomial time".to_string()
        }
        TrichotomyClass::FptBijunctive => {
            "verdict: bijunctive; fixed-parameter tractable through 2-clause deletion".to_string()
        }
        TrichotomyClass::ApproxIhsb { width, polarity } => format!(
            "verdict: IHS-B{} with B={width}; constant-factor fixed-parameter approximation (factor B+1 per clause)",
            polarity.sign()
        ),
        TrichotomyClass::OddsetEquivalent => {
            "verdict: affine, Odd-Set-equivalent class; equivalent to Nearest Codeword under cost-preserving reductions"
                .to_string()
        }
        TrichotomyClass::HardNp => {
            "verdict: self-dual and no easy predicate holds; the satisfiability problem is already NP-hard".to_string()
        }
        TrichotomyClass::HardWp => {
            "verdict: not affine, not self-dual, no easy predicate holds; W[P]-hard to approximate".to_string()
        }
    });
    Ok(Classification {
        class,
        properties: p,
        narrative,
    })
}

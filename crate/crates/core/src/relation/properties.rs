//! Closure tests, affine structure and the language property vector.

use super::clause::{clause_decomposition, ClauseFamily};
use super::{Language, Relation};
use crate::error::RelationError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClosureOp {
    And2,
    Or2,
    Maj3,
    Xor3,
    Not1,
}

impl ClosureOp {
    pub fn name(self) -> &'static str {
        match self {
            ClosureOp::And2 => "and2",
            ClosureOp::Or2 => "or2",
            ClosureOp::Maj3 => "maj3",
            ClosureOp::Xor3 => "xor3",
            ClosureOp::Not1 => "not1",
        }
    }
}

/// Applies `op` coordinatewise to every combination of members and checks the result stays in `r`.
///
/// The binary and ternary operations used here are symmetric, so only
/// non-decreasing argument tuples are enumerated.
pub fn closed_under(r: &Relation, op: ClosureOp) -> bool {
    let m: Vec<u32> = r.members().collect();
    let mask = r.full_mask();
    match op {
        ClosureOp::Not1 => m.iter().all(|&a| r.contains(!a & mask)),
        ClosureOp::And2 => pairs(&m).all(|(a, b)| r.contains(a & b)),
        ClosureOp::Or2 => pairs(&m).all(|(a, b)| r.contains(a | b)),
        ClosureOp::Maj3 => triples(&m).all(|(a, b, c)| r.contains((a & b) | (a & c) | (b & c))),
        ClosureOp::Xor3 => triples(&m).all(|(a, b, c)| r.contains(a ^ b ^ c)),
    }
}

fn pairs(m: &[u32]) -> impl Iterator<Item = (u32, u32)> + '_ {
    (0..m.len()).flat_map(move |i| (i..m.len()).map(move |j| (m[i], m[j])))
}

fn triples(m: &[u32]) -> impl Iterator<Item = (u32, u32, u32)> + '_ {
    (0..m.len()).flat_map(move |i| {
        (i..m.len()).flat_map(move |j| (j..m.len()).map(move |k| (m[i], m[j], m[k])))
    })
}

/// Row-reduces a list of bit-vectors in place; returns the nonzero basis.
fn echelon(mut rows: Vec<u32>) -> Vec<u32> {
    let mut basis: Vec<u32> = Vec::new();
    for row in rows.drain(..) {
        let mut v = row;
        for &b in &basis {
            let pivot = 1u32 << (31 - b.leading_zeros());
            if v & pivot != 0 {
                v ^= b;
            }
        }
        if v != 0 {
            let pivot = 1u32 << (31 - v.leading_zeros());
            for b in basis.iter_mut() {
                if *b & pivot != 0 {
                    *b ^= v;
                }
            }
            basis.push(v);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis
}

/// Affine test via the hull: the span of `{r ⊕ r0}` has exactly `|R|` elements.
pub fn is_affine_by_hull(r: &Relation) -> bool {
    let r0 = r.members().next().expect("relations are nonempty");
    let basis = echelon(r.members().map(|t| t ^ r0).collect());
    basis.len() < 32 && (1usize << basis.len()) == r.len()
}

/// A parity constraint on a set of coordinates: their sum is odd or even.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParityEquation {
    pub coords: Vec<usize>,
    pub odd: bool,
}

impl ParityEquation {
    pub fn holds_code(&self, arity: usize, code: u32) -> bool {
        let ones = self
            .coords
            .iter()
            .filter(|&&c| code >> (arity - 1 - c) & 1 == 1)
            .count();
        (ones % 2 == 1) == self.odd
    }
}

/// Linear equations over GF(2) whose solution set is `r`, or `None` if `r` is not affine.
///
/// Equations come from a reduced basis of the annihilator of the direction space,
/// so the output is deterministic.
pub fn affine_equations(r: &Relation) -> Option<Vec<ParityEquation>> {
    if !is_affine_by_hull(r) {
        return None;
    }
    let n = r.arity();
    let r0 = r.members().next().unwrap();
    let basis = echelon(r.members().map(|t| t ^ r0).collect());
    // annihilator: all a with popcount(a & d) even for every direction d
    let pivots: Vec<u32> = basis.iter().map(|b| 1u32 << (31 - b.leading_zeros())).collect();
    let pivot_mask = pivots.iter().fold(0, |acc, p| acc | p);
    let mut equations = Vec::new();
    for free in (0..n).map(|i| 1u32 << i).filter(|f| pivot_mask & f == 0) {
        let mut a = free;
        for (b, p) in basis.iter().zip(&pivots) {
            if b & free != 0 {
                a |= p;
            }
        }
        let coords: Vec<usize> = (0..n).filter(|&c| a >> (n - 1 - c) & 1 == 1).collect();
        let odd = (a & r0).count_ones() % 2 == 1;
        equations.push(ParityEquation { coords, odd });
    }
    equations.sort();
    Some(equations)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IhsPolarity {
    Plus,
    Minus,
}

impl IhsPolarity {
    pub fn sign(self) -> char {
        match self {
            IhsPolarity::Plus => '+',
            IhsPolarity::Minus => '-',
        }
    }

    pub fn family(self, b: usize) -> ClauseFamily {
        match self {
            IhsPolarity::Plus => ClauseFamily::ihs_plus(b),
            IhsPolarity::Minus => ClauseFamily::ihs_minus(b),
        }
    }
}

/// Smallest `B` for which every relation decomposes into IHS-B clauses of the polarity.
pub fn min_ihs_width(lang: &Language, polarity: IhsPolarity) -> Option<usize> {
    (1..=lang.max_arity().max(1)).find(|&b| {
        let family = polarity.family(b);
        lang.relations()
            .iter()
            .all(|r| clause_decomposition(r, &family).is_some())
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PropertyVector {
    pub zero_valid: bool,
    pub one_valid: bool,
    pub horn: bool,
    pub dual_horn: bool,
    pub bijunctive: bool,
    pub affine: bool,
    pub self_dual: bool,
    pub irredundant: bool,
    pub ihs_plus_width: Option<usize>,
    pub ihs_minus_width: Option<usize>,
}

impl PropertyVector {
    /// `(key, value)` pairs in a fixed order.
    pub fn entries(&self) -> Vec<(&'static str, String)> {
        let opt = |w: Option<usize>| w.map_or_else(|| "none".to_string(), |b| b.to_string());
        vec![
            ("zero_valid", self.zero_valid.to_string()),
            ("one_valid", self.one_valid.to_string()),
            ("horn", self.horn.to_string()),
            ("dual_horn", self.dual_horn.to_string()),
            ("bijunctive", self.bijunctive.to_string()),
            ("affine", self.affine.to_string()),
            ("self_dual", self.self_dual.to_string()),
            ("irredundant", self.irredundant.to_string()),
            ("ihs_plus_width", opt(self.ihs_plus_width)),
            ("ihs_minus_width", opt(self.ihs_minus_width)),
        ]
    }
}

fn agree(r: &Relation, property: &str, by_closure: bool, by_syntax: bool) -> Result<bool, RelationError> {
    if by_closure != by_syntax {
        return Err(RelationError::Inconsistent {
            property: property.to_string(),
            relation: r.label(),
        });
    }
    Ok(by_closure)
}

/// Per-relation predicates, each structural one decided twice.
fn relation_properties(r: &Relation) -> Result<[bool; 6], RelationError> {
    let n = r.arity();
    let horn = agree(
        r,
        "horn",
        closed_under(r, ClosureOp::And2),
        clause_decomposition(r, &ClauseFamily::Horn { max_width: n }).is_some(),
    )?;
    let dual_horn = agree(
        r,
        "dual_horn",
        closed_under(r, ClosureOp::Or2),
        clause_decomposition(r, &ClauseFamily::DualHorn { max_width: n }).is_some(),
    )?;
    let bijunctive = agree(
        r,
        "bijunctive",
        closed_under(r, ClosureOp::Maj3),
        clause_decomposition(r, &ClauseFamily::Binary).is_some(),
    )?;
    let affine = agree(r, "affine", closed_under(r, ClosureOp::Xor3), is_affine_by_hull(r))?;
    let self_dual = agree(
        r,
        "self_dual",
        closed_under(r, ClosureOp::Not1),
        r.complemented().same_tuples(r),
    )?;
    Ok([horn, dual_horn, bijunctive, affine, self_dual, r.is_irredundant()])
}

/// Every predicate of the language, or an error if two mechanisms disagree.
pub fn property_vector(lang: &Language) -> Result<PropertyVector, RelationError> {
    let mut v = PropertyVector {
        zero_valid: true,
        one_valid: true,
        horn: true,
        dual_horn: true,
        bijunctive: true,
        affine: true,
        self_dual: true,
        irredundant: true,
        ihs_plus_width: None,
        ihs_minus_width: None,
    };
    for r in lang.relations() {
        v.zero_valid &= r.is_zero_valid();
        v.one_valid &= r.is_one_valid();
        let [h, d, b, a, s, i] = relation_properties(r)?;
        v.horn &= h;
        v.dual_horn &= d;
        v.bijunctive &= b;
        v.affine &= a;
        v.self_dual &= s;
        v.irredundant &= i;
    }
    v.ihs_plus_width = min_ihs_width(lang, IhsPolarity::Plus);
    v.ihs_minus_width = min_ihs_width(lang, IhsPolarity::Minus);
    Ok(v)
}

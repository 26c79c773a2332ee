//! Clauses over the coordinates of a relation, and implied-clause decomposition.

use std::fmt;

use super::Relation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub coord: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(coord: usize) -> Self {
        Self { coord, positive: true }
    }

    pub fn neg(coord: usize) -> Self {
        Self { coord, positive: false }
    }

    /// Whether the literal holds when its coordinate has value `value`.
    pub fn holds(&self, value: bool) -> bool {
        value == self.positive
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClauseShape {
    PositiveUnit,
    NegativeUnit,
    Implication,
    PositiveOr,
    NegativeOr,
    General,
}

impl ClauseShape {
    pub const ALL: [ClauseShape; 6] = [
        ClauseShape::PositiveUnit,
        ClauseShape::NegativeUnit,
        ClauseShape::Implication,
        ClauseShape::PositiveOr,
        ClauseShape::NegativeOr,
        ClauseShape::General,
    ];
}

/// A disjunction of literals. Coordinates may repeat.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Clause {
    literals: Vec<Literal>,
}

impl Clause {
    /// Panics on an empty literal list.
    pub fn new(mut literals: Vec<Literal>) -> Self {
        assert!(!literals.is_empty(), "a clause needs at least one literal");
        literals.sort();
        literals.dedup();
        Self { literals }
    }

    pub fn literals(&self) -> &[Literal] {
        &self.literals
    }

    pub fn width(&self) -> usize {
        self.literals.len()
    }

    pub fn positives(&self) -> usize {
        self.literals.iter().filter(|l| l.positive).count()
    }

    pub fn shape(&self) -> ClauseShape {
        let (w, p) = (self.width(), self.positives());
        match (w, p) {
            (1, 1) => ClauseShape::PositiveUnit,
            (1, 0) => ClauseShape::NegativeUnit,
            (2, 1) => ClauseShape::Implication,
            (_, p) if p == w => ClauseShape::PositiveOr,
            (_, 0) => ClauseShape::NegativeOr,
            _ => ClauseShape::General,
        }
    }

    /// Evaluates the clause on a tuple of coordinate values.
    pub fn eval(&self, tuple: &[bool]) -> bool {
        self.literals.iter().any(|l| l.holds(tuple[l.coord]))
    }

    /// Evaluates on a tuple code of the given arity.
    pub fn eval_code(&self, arity: usize, code: u32) -> bool {
        self.literals
            .iter()
            .any(|l| l.holds(code >> (arity - 1 - l.coord) & 1 == 1))
    }

    /// `self` subsumes `other` when every literal of `self` occurs in `other`.
    pub fn subsumes(&self, other: &Clause) -> bool {
        self.literals.iter().all(|l| other.literals.contains(l))
    }

    fn canonical_key(&self) -> (usize, &[Literal]) {
        (self.width(), &self.literals)
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.literals.iter().enumerate() {
            if i > 0 {
                f.write_str(" ∨ ")?;
            }
            if !l.positive {
                f.write_str("¬")?;
            }
            write!(f, "x{}", l.coord + 1)?;
        }
        Ok(())
    }
}

/// Which clauses a decomposition may use.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClauseFamily {
    /// Clauses whose shape is listed and whose width is at most `max_width`.
    /// Implications are admitted at any width bound.
    Shapes {
        shapes: Vec<ClauseShape>,
        max_width: usize,
    },
    /// At most one positive literal.
    Horn { max_width: usize },
    /// At most one negative literal.
    DualHorn { max_width: usize },
    /// Any clause of width at most two.
    Binary,
}

impl ClauseFamily {
    /// Units, implications and positive clauses of width at most `b`.
    pub fn ihs_plus(b: usize) -> Self {
        ClauseFamily::Shapes {
            shapes: vec![
                ClauseShape::NegativeUnit,
                ClauseShape::Implication,
                ClauseShape::PositiveUnit,
                ClauseShape::PositiveOr,
            ],
            max_width: b,
        }
    }

    /// Units, implications and negative clauses of width at most `b`.
    pub fn ihs_minus(b: usize) -> Self {
        ClauseFamily::Shapes {
            shapes: vec![
                ClauseShape::PositiveUnit,
                ClauseShape::Implication,
                ClauseShape::NegativeUnit,
                ClauseShape::NegativeOr,
            ],
            max_width: b,
        }
    }

    fn width_bound(&self) -> usize {
        match self {
            ClauseFamily::Shapes { shapes, max_width } => {
                if shapes.contains(&ClauseShape::Implication) {
                    (*max_width).max(2)
                } else {
                    *max_width
                }
            }
            ClauseFamily::Horn { max_width } | ClauseFamily::DualHorn { max_width } => *max_width,
            ClauseFamily::Binary => 2,
        }
    }

    /// Admission test from width and number of positive literals.
    fn admits(&self, width: usize, positives: usize) -> bool {
        match self {
            ClauseFamily::Shapes { shapes, max_width } => {
                let shape = shape_of(width, positives);
                shapes.contains(&shape) && (width <= *max_width || shape == ClauseShape::Implication)
            }
            ClauseFamily::Horn { max_width } => width <= *max_width && positives <= 1,
            ClauseFamily::DualHorn { max_width } => width <= *max_width && width - positives <= 1,
            ClauseFamily::Binary => width <= 2,
        }
    }

    pub fn admits_clause(&self, c: &Clause) -> bool {
        self.admits(c.width(), c.positives())
    }
}

fn shape_of(width: usize, positives: usize) -> ClauseShape {
    match (width, positives) {
        (1, 1) => ClauseShape::PositiveUnit,
        (1, 0) => ClauseShape::NegativeUnit,
        (2, 1) => ClauseShape::Implication,
        (w, p) if p == w => ClauseShape::PositiveOr,
        (_, 0) => ClauseShape::NegativeOr,
        _ => ClauseShape::General,
    }
}

/// Projections of a relation onto every coordinate subset.
///
/// Masks live in tuple-code bit space. The projection onto mask `M` is a bitset
/// over compressed patterns: the bits of `t & M` packed in ascending bit order.
struct Projections {
    sets: Vec<Vec<u64>>,
}

impl Projections {
    fn new(r: &Relation) -> Self {
        let n = r.arity();
        let full = r.full_mask() as usize;
        let mut sets: Vec<Vec<u64>> = vec![Vec::new(); full + 1];
        let mut top = vec![0u64; (1usize << n).div_ceil(64)];
        for t in r.members() {
            top[t as usize / 64] |= 1 << (t % 64);
        }
        sets[full] = top;
        for m in (0..full).rev() {
            let b = (!m & full).trailing_zeros() as usize;
            let parent = m | (1 << b);
            let width = (m as u32).count_ones() as usize;
            let mut set = vec![0u64; (1usize << width).div_ceil(64)];
            for (w, &word) in sets[parent].iter().enumerate() {
                let mut bits = word;
                while bits != 0 {
                    let q = w * 64 + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    // every bit below `b` belongs to `m`, so `b` sits at position `b`
                    let low = q & ((1 << b) - 1);
                    let p = low | ((q >> (b + 1)) << b);
                    set[p / 64] |= 1 << (p % 64);
                }
            }
            sets[m] = set;
        }
        Self { sets }
    }

    fn contains(&self, mask: u32, value: u32) -> bool {
        let p = compress(value, mask) as usize;
        self.sets[mask as usize][p / 64] >> (p % 64) & 1 == 1
    }
}

fn compress(value: u32, mask: u32) -> u32 {
    let (mut out, mut pos, mut m) = (0u32, 0, mask);
    while m != 0 {
        let b = m.trailing_zeros();
        out |= (value >> b & 1) << pos;
        pos += 1;
        m &= m - 1;
    }
    out
}

fn clause_of(arity: usize, mask: u32, falsifier: u32) -> Clause {
    let mut lits = Vec::new();
    for coord in 0..arity {
        let bit = 1u32 << (arity - 1 - coord);
        if mask & bit != 0 {
            lits.push(Literal {
                coord,
                positive: falsifier & bit == 0,
            });
        }
    }
    Clause::new(lits)
}

/// All clauses of `family` implied by `r`, provided their conjunction is exactly `r`.
///
/// The list is deduplicated and sorted by width, then by literals.
pub fn clause_decomposition(r: &Relation, family: &ClauseFamily) -> Option<Vec<Clause>> {
    let n = r.arity();
    let full = r.full_mask();
    let bound = family.width_bound().min(n);
    let proj = Projections::new(r);
    let mut implied = Vec::new();
    let mut covered = vec![false; 1usize << n];

    for mask in 1..=full {
        let width = mask.count_ones() as usize;
        if width > bound {
            continue;
        }
        let mut v = mask;
        loop {
            // falsifier bit 1 means a negative literal on that coordinate
            let positives = width - v.count_ones() as usize;
            if family.admits(width, positives) && !proj.contains(mask, v) {
                implied.push(clause_of(n, mask, v));
                if !has_implied_subclause(family, &proj, mask, v) {
                    let rest = full & !mask;
                    let mut s = rest;
                    loop {
                        covered[(v | s) as usize] = true;
                        if s == 0 {
                            break;
                        }
                        s = (s - 1) & rest;
                    }
                }
            }
            if v == 0 {
                break;
            }
            v = (v - 1) & mask;
        }
    }

    let exact = (0..=full).all(|t| covered[t as usize] != r.contains(t));
    if !exact {
        return None;
    }
    implied.sort_by(|a, b| a.canonical_key().cmp(&b.canonical_key()));
    implied.dedup();
    Some(implied)
}

fn has_implied_subclause(family: &ClauseFamily, proj: &Projections, mask: u32, v: u32) -> bool {
    let mut bits = mask;
    while bits != 0 {
        let b = bits & bits.wrapping_neg();
        bits &= bits - 1;
        let sub = mask & !b;
        if sub == 0 {
            continue;
        }
        let sv = v & sub;
        let width = sub.count_ones() as usize;
        if family.admits(width, width - sv.count_ones() as usize) && !proj.contains(sub, sv) {
            return true;
        }
    }
    false
}

/// Drops every clause subsumed by another clause of the list.
pub fn prime_clauses(clauses: &[Clause]) -> Vec<Clause> {
    clauses
        .iter()
        .filter(|c| !clauses.iter().any(|d| d != *c && d.subsumes(c)))
        .cloned()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relation::library;

    fn rel(arity: usize, tuples: &[&str]) -> Relation {
        Relation::from_bit_strings(arity, tuples.iter().copied()).unwrap()
    }

    #[test]
    fn implication_decomposes_into_itself() {
        let got = clause_decomposition(&library::implication(), &ClauseFamily::ihs_plus(2)).unwrap();
        assert_eq!(got, vec![Clause::new(vec![Literal::neg(0), Literal::pos(1)])]);
        assert_eq!(got[0].shape(), ClauseShape::Implication);
    }

    #[test]
    fn odd2_binary_clauses() {
        let got = clause_decomposition(&rel(2, &["01", "10"]), &ClauseFamily::Binary).unwrap();
        assert_eq!(
            got,
            vec![
                Clause::new(vec![Literal::neg(0), Literal::neg(1)]),
                Clause::new(vec![Literal::pos(0), Literal::pos(1)]),
            ]
        );
    }

    #[test]
    fn or3_needs_width_three() {
        let or3 = library::or(3);
        assert!(clause_decomposition(&or3, &ClauseFamily::ihs_plus(2)).is_none());
        let got = clause_decomposition(&or3, &ClauseFamily::ihs_plus(3)).unwrap();
        assert_eq!(got, vec![Clause::new((0..3).map(Literal::pos).collect())]);
    }

    #[test]
    fn nae_has_no_ihs_decomposition() {
        for b in 1..=3 {
            assert!(clause_decomposition(&library::nae(), &ClauseFamily::ihs_plus(b)).is_none());
            assert!(clause_decomposition(&library::nae(), &ClauseFamily::ihs_minus(b)).is_none());
        }
    }

    #[test]
    fn full_relation_has_no_clauses() {
        let all = Relation::from_predicate(3, |_| true).unwrap();
        assert_eq!(clause_decomposition(&all, &ClauseFamily::Binary), Some(vec![]));
    }

    #[test]
    fn implied_list_keeps_subsumed_clauses() {
        let xy = rel(2, &["11"]);
        let got = clause_decomposition(&xy, &ClauseFamily::ihs_plus(2)).unwrap();
        assert!(got.contains(&Clause::new(vec![Literal::pos(0), Literal::pos(1)])));
        assert_eq!(
            prime_clauses(&got),
            vec![Clause::new(vec![Literal::pos(0)]), Clause::new(vec![Literal::pos(1)])]
        );
    }

    #[test]
    fn compress_packs_in_ascending_bit_order() {
        assert_eq!(compress(0b1010, 0b1110), 0b101);
        assert_eq!(compress(0b0001, 0b0001), 1);
    }

    #[test]
    fn clause_shapes() {
        assert_eq!(Clause::new(vec![Literal::neg(0), Literal::neg(1)]).shape(), ClauseShape::NegativeOr);
        assert_eq!(
            Clause::new(vec![Literal::pos(0), Literal::pos(1), Literal::neg(2)]).shape(),
            ClauseShape::General
        );
        let c = Clause::new(vec![Literal::pos(1), Literal::pos(1), Literal::neg(0)]);
        assert_eq!(c.width(), 2);
        assert_eq!(c.to_string(), "¬x1 ∨ x2");
    }
}

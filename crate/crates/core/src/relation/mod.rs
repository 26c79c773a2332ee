//! Boolean relations, constraint languages, and their structural properties.
//!
//! A relation of arity `n` is stored as a membership table of `2^n` flags. A
//! tuple `(a_1, ..., a_n)` is addressed by the integer whose binary expansion is
//! `a_1 a_2 ... a_n`, so the leftmost coordinate is the most significant bit.

mod clause;
mod format;
pub mod library;
mod properties;

use std::collections::HashMap;
use std::fmt;

pub use clause::{clause_decomposition, prime_clauses, Clause, ClauseFamily, ClauseShape, Literal};
pub use format::{parse_language, write_language, write_relation_block};
pub(crate) use format::parse_relation_block;
pub use properties::{
    affine_equations, closed_under, is_affine_by_hull, min_ihs_width, property_vector, ClosureOp,
    IhsPolarity, ParityEquation, PropertyVector,
};

use crate::error::RelationError;

pub const MAX_ARITY: usize = 16;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    arity: usize,
    table: Vec<u64>,
    name: Option<String>,
}

impl Relation {
    /// Builds a relation from bit-string tuples such as `"011"`.
    pub fn from_bit_strings<S: AsRef<str>>(
        arity: usize,
        tuples: impl IntoIterator<Item = S>,
    ) -> Result<Self, RelationError> {
        check_arity(arity)?;
        let mut codes = Vec::new();
        for t in tuples {
            let t = t.as_ref();
            if t.len() != arity {
                return Err(RelationError::TupleLength {
                    tuple: t.to_string(),
                    len: t.len(),
                    arity,
                });
            }
            let mut code = 0u32;
            for c in t.chars() {
                code <<= 1;
                match c {
                    '0' => {}
                    '1' => code |= 1,
                    _ => return Err(RelationError::NotBits(t.to_string())),
                }
            }
            codes.push(code);
        }
        Self::from_codes(arity, codes)
    }

    /// Builds a relation from tuple codes (leftmost coordinate = most significant bit).
    pub fn from_codes(arity: usize, codes: impl IntoIterator<Item = u32>) -> Result<Self, RelationError> {
        check_arity(arity)?;
        let size = 1usize << arity;
        let mut table = vec![0u64; size.div_ceil(64)];
        let mut any = false;
        for code in codes {
            let code = code as usize;
            if code >= size {
                return Err(RelationError::TupleLength {
                    tuple: format!("{code:b}"),
                    len: usize::BITS as usize - code.leading_zeros() as usize,
                    arity,
                });
            }
            table[code / 64] |= 1 << (code % 64);
            any = true;
        }
        if !any {
            return Err(RelationError::Empty);
        }
        Ok(Self {
            arity,
            table,
            name: None,
        })
    }

    /// The relation `{ t : pred(t) }` over tuple codes.
    pub fn from_predicate(arity: usize, pred: impl Fn(u32) -> bool) -> Result<Self, RelationError> {
        check_arity(arity)?;
        Self::from_codes(arity, (0..(1u32 << arity)).filter(|&t| pred(t)))
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn label(&self) -> String {
        self.name.clone().unwrap_or_else(|| format!("<arity {}>", self.arity))
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Mask with one bit per coordinate.
    pub fn full_mask(&self) -> u32 {
        ((1u64 << self.arity) - 1) as u32
    }

    /// Bit of tuple codes holding coordinate `i`.
    pub fn coordinate_bit(&self, i: usize) -> u32 {
        1 << (self.arity - 1 - i)
    }

    pub fn contains(&self, code: u32) -> bool {
        let code = code as usize;
        code < (1usize << self.arity) && self.table[code / 64] >> (code % 64) & 1 == 1
    }

    /// Membership of a tuple given coordinate by coordinate.
    pub fn contains_tuple(&self, tuple: &[bool]) -> bool {
        debug_assert_eq!(tuple.len(), self.arity);
        self.contains(encode_tuple(tuple))
    }

    /// Members in ascending code order.
    pub fn members(&self) -> impl Iterator<Item = u32> + '_ {
        self.table.iter().enumerate().flat_map(|(w, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros();
                bits &= bits - 1;
                Some((w * 64) as u32 + b)
            })
        })
    }

    pub fn len(&self) -> usize {
        self.table.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Same membership table, ignoring names.
    pub fn same_tuples(&self, other: &Relation) -> bool {
        self.arity == other.arity && self.table == other.table
    }

    /// Tuple `code` rendered as a bit-string.
    pub fn tuple_string(&self, code: u32) -> String {
        (0..self.arity)
            .map(|i| if code & self.coordinate_bit(i) != 0 { '1' } else { '0' })
            .collect()
    }

    /// `{ ¬t : t ∈ R }`.
    pub fn complemented(&self) -> Relation {
        let mask = self.full_mask();
        Relation::from_codes(self.arity, self.members().map(|t| !t & mask))
            .expect("complement of a nonempty relation is nonempty")
    }

    pub fn is_zero_valid(&self) -> bool {
        self.contains(0)
    }

    pub fn is_one_valid(&self) -> bool {
        self.contains(self.full_mask())
    }

    /// Every pair of coordinates differs in some member.
    pub fn is_irredundant(&self) -> bool {
        for i in 0..self.arity {
            for j in i + 1..self.arity {
                let (bi, bj) = (self.coordinate_bit(i), self.coordinate_bit(j));
                if !self.members().any(|t| (t & bi == 0) != (t & bj == 0)) {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tuples: Vec<String> = self.members().map(|t| self.tuple_string(t)).collect();
        write!(f, "{}{{{}}}", self.name.as_deref().unwrap_or(""), tuples.join(","))
    }
}

fn check_arity(arity: usize) -> Result<(), RelationError> {
    if (1..=MAX_ARITY).contains(&arity) {
        Ok(())
    } else {
        Err(RelationError::ArityOutOfRange(arity))
    }
}

/// Packs a tuple into its code, first coordinate most significant.
pub fn encode_tuple(tuple: &[bool]) -> u32 {
    tuple.iter().fold(0u32, |acc, &b| (acc << 1) | b as u32)
}

/// An ordered, finite list of uniquely named relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Language {
    relations: Vec<Relation>,
    index: HashMap<String, usize>,
}

impl Language {
    pub fn new(relations: Vec<Relation>) -> Result<Self, RelationError> {
        if relations.is_empty() {
            return Err(RelationError::EmptyLanguage);
        }
        let mut index = HashMap::new();
        for (i, r) in relations.iter().enumerate() {
            let name = r.name().ok_or(RelationError::Unnamed)?;
            if index.insert(name.to_string(), i).is_some() {
                return Err(RelationError::DuplicateName(name.to_string()));
            }
        }
        Ok(Self { relations, index })
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }

    pub fn get(&self, i: usize) -> &Relation {
        &self.relations[i]
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn by_name(&self, name: &str) -> Result<&Relation, RelationError> {
        self.position(name)
            .map(|i| &self.relations[i])
            .ok_or_else(|| RelationError::UnknownRelation(name.to_string()))
    }

    /// First relation with the same membership table as `r`, regardless of name.
    pub fn find_table(&self, r: &Relation) -> Option<usize> {
        self.relations.iter().position(|s| s.same_tuples(r))
    }

    pub fn max_arity(&self) -> usize {
        self.relations.iter().map(Relation::arity).max().unwrap_or(0)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.relations.iter().map(|r| r.name().unwrap_or(""))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nae_from_bit_strings() {
        let nae = Relation::from_bit_strings(3, ["001", "010", "011", "100", "101", "110"]).unwrap();
        assert_eq!(nae.len(), 6);
        assert!(!nae.contains(0) && !nae.contains(7));
        assert!(nae.same_tuples(&library::nae()));
    }

    #[test]
    fn unit_relation() {
        let x = Relation::from_bit_strings(1, ["1"]).unwrap();
        assert_eq!(x.members().collect::<Vec<_>>(), vec![1]);
        assert!(x.is_one_valid() && !x.is_zero_valid());
    }

    #[test]
    fn equality_is_redundant() {
        let eq = Relation::from_bit_strings(2, ["00", "11"]).unwrap();
        assert_eq!(eq.len(), 2);
        assert!(!eq.is_irredundant());
        assert!(library::nae().is_irredundant());
        assert!(Relation::from_bit_strings(1, ["0"]).unwrap().is_irredundant());
    }

    #[test]
    fn malformed_relations_are_rejected() {
        assert_eq!(
            Relation::from_bit_strings(0, Vec::<&str>::new()),
            Err(RelationError::ArityOutOfRange(0))
        );
        assert_eq!(
            Relation::from_bit_strings(17, ["0"; 1]),
            Err(RelationError::ArityOutOfRange(17))
        );
        assert!(matches!(
            Relation::from_bit_strings(2, ["011"]),
            Err(RelationError::TupleLength { .. })
        ));
        assert_eq!(Relation::from_bit_strings(2, Vec::<&str>::new()), Err(RelationError::Empty));
        assert!(matches!(Relation::from_bit_strings(2, ["0x"]), Err(RelationError::NotBits(_))));
    }

    #[test]
    fn leftmost_coordinate_is_most_significant() {
        let r = Relation::from_bit_strings(3, ["100"]).unwrap();
        assert!(r.contains(4));
        assert_eq!(r.tuple_string(4), "100");
        assert!(r.contains_tuple(&[true, false, false]));
    }

    #[test]
    fn language_names_are_unique() {
        let a = library::positive_unit();
        assert!(matches!(
            Language::new(vec![a.clone(), a]),
            Err(RelationError::DuplicateName(_))
        ));
        assert_eq!(Language::new(vec![]), Err(RelationError::EmptyLanguage));
        let unnamed = Relation::from_bit_strings(1, ["1"]).unwrap();
        assert_eq!(Language::new(vec![unnamed]), Err(RelationError::Unnamed));
    }
}

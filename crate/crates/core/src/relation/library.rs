//! Named relations and the standard bases used throughout the crate.

use super::{Language, Relation};

fn build(arity: usize, pred: impl Fn(u32) -> bool) -> Relation {
    Relation::from_predicate(arity, pred).expect("library relations are nonempty")
}

/// `x`: the variable is 1.
pub fn positive_unit() -> Relation {
    build(1, |t| t == 1).named("x")
}

/// `x̄`: the variable is 0.
pub fn negative_unit() -> Relation {
    build(1, |t| t == 0).named("notx")
}

/// `x → y`.
pub fn implication() -> Relation {
    build(2, |t| t != 0b10).named("imp")
}

/// `x ⊕ y`, which is also `odd²`.
pub fn xor() -> Relation {
    build(2, |t| t == 0b01 || t == 0b10).named("xor")
}

pub fn equality() -> Relation {
    build(2, |t| t == 0 || t == 0b11).named("eq")
}

/// Not-all-equal on three coordinates.
pub fn nae() -> Relation {
    build(3, |t| t != 0 && t != 0b111).named("nae")
}

/// Tuples with an even number of ones.
pub fn even(n: usize) -> Relation {
    build(n, |t| t.count_ones() % 2 == 0).named(format!("even{n}"))
}

/// Tuples with an odd number of ones.
pub fn odd(n: usize) -> Relation {
    build(n, |t| t.count_ones() % 2 == 1).named(format!("odd{n}"))
}

/// `x1 ∨ … ∨ xn`.
pub fn or(n: usize) -> Relation {
    build(n, |t| t != 0).named(format!("or{n}"))
}

/// `¬x1 ∨ … ∨ ¬xn`.
pub fn nand(n: usize) -> Relation {
    let full = ((1u64 << n) - 1) as u32;
    build(n, move |t| t != full).named(format!("nand{n}"))
}

/// `x ∨ y ∨ z̄`.
pub fn clause_ppn() -> Relation {
    build(3, |t| t != 0b001).named("clause_ppn")
}

/// `x̄ ∨ ȳ ∨ z`.
pub fn clause_nnp() -> Relation {
    build(3, |t| t != 0b110).named("clause_nnp")
}

/// Library relation by its built-in name.
pub fn by_name(name: &str) -> Option<Relation> {
    let numbered = |prefix: &str| -> Option<usize> {
        name.strip_prefix(prefix)
            .and_then(|s| s.parse::<usize>().ok())
            .filter(|n| (1..=super::MAX_ARITY).contains(n))
    };
    Some(match name {
        "x" => positive_unit(),
        "notx" => negative_unit(),
        "imp" => implication(),
        "xor" => xor(),
        "eq" => equality(),
        "nae" => nae(),
        "clause_ppn" => clause_ppn(),
        "clause_nnp" => clause_nnp(),
        _ => {
            if let Some(n) = numbered("even") {
                even(n)
            } else if let Some(n) = numbered("odd") {
                odd(n)
            } else if let Some(n) = numbered("or") {
                or(n)
            } else {
                let n = numbered("nand")?;
                nand(n)
            }
        }
    })
}

/// `{even⁴, x, x̄}`.
pub fn b2() -> Language {
    Language::new(vec![even(4), positive_unit(), negative_unit()]).unwrap()
}

/// `{even⁴, x ⊕ y}`.
pub fn b3() -> Language {
    Language::new(vec![even(4), xor()]).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(even(4).len(), 8);
        assert_eq!(odd(3).len(), 4);
        assert_eq!(or(3).len(), 7);
        assert_eq!(nand(3).len(), 7);
        assert_eq!(clause_ppn().len(), 7);
        assert!(!clause_ppn().contains(0b001));
        assert!(!clause_nnp().contains(0b110));
    }

    #[test]
    fn names_resolve() {
        for name in ["x", "notx", "imp", "xor", "eq", "nae", "even4", "odd3", "or3", "nand2", "clause_ppn"] {
            assert_eq!(by_name(name).unwrap().name(), Some(name));
        }
        assert!(by_name("even0").is_none());
        assert!(by_name("odd17").is_none());
        assert!(by_name("dup").is_none());
    }

    #[test]
    fn xor_is_odd2() {
        assert!(xor().same_tuples(&odd(2)));
        assert!(equality().same_tuples(&even(2)));
    }
}

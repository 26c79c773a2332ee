//! Set systems with parity targets.
//!
//! Text format (`.odds`), elements 0-based:
//!
//! ```text
//! universe 4
//! set odd 0 1
//! set even 1 2 3
//! ```

use std::str::FromStr;

use crate::error::{InstanceError, ParseError};
use crate::text;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParitySet {
    /// Sorted, distinct elements.
    pub elements: Vec<usize>,
    pub odd: bool,
}

/// Every set must meet the solution in an odd (resp. even) number of elements.
/// The all-odd case is an Odd Set instance.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EvenOddSetInstance {
    universe: usize,
    sets: Vec<ParitySet>,
}

impl EvenOddSetInstance {
    pub fn new(universe: usize) -> Self {
        Self {
            universe,
            sets: Vec::new(),
        }
    }

    pub fn add_set(&mut self, elements: &[usize], odd: bool) -> Result<usize, InstanceError> {
        let index = self.sets.len();
        let mut sorted = elements.to_vec();
        sorted.sort_unstable();
        if let Some(&element) = sorted.iter().find(|&&e| e >= self.universe) {
            return Err(InstanceError::ElementOutOfRange {
                element,
                universe: self.universe,
            });
        }
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(InstanceError::RepeatedElement(index));
        }
        self.sets.push(ParitySet { elements: sorted, odd });
        Ok(index)
    }

    /// An all-odd instance.
    pub fn odd_sets(universe: usize, sets: &[Vec<usize>]) -> Result<Self, InstanceError> {
        let mut inst = Self::new(universe);
        for s in sets {
            inst.add_set(s, true)?;
        }
        Ok(inst)
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn sets(&self) -> &[ParitySet] {
        &self.sets
    }

    pub fn num_sets(&self) -> usize {
        self.sets.len()
    }

    pub fn is_all_odd(&self) -> bool {
        self.sets.iter().all(|s| s.odd)
    }

    /// Indicator of `t` over the universe; `None` if an element is out of range.
    fn indicator(&self, t: &[usize]) -> Option<Vec<bool>> {
        let mut chosen = vec![false; self.universe];
        for &e in t {
            *chosen.get_mut(e)? ^= true;
        }
        Some(chosen)
    }

    /// Sets whose intersection parity with `t` misses its target.
    pub fn unmet(&self, t: &[usize]) -> Vec<usize> {
        let chosen = self.indicator(t).expect("element out of range");
        (0..self.sets.len())
            .filter(|&i| {
                let hits = self.sets[i].elements.iter().filter(|&&e| chosen[e]).count();
                (hits % 2 == 1) != self.sets[i].odd
            })
            .collect()
    }

    /// `t` (distinct, in range) meets every set with the target parity.
    pub fn check_parity_solution(&self, t: &[usize]) -> bool {
        let mut sorted = t.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        sorted.len() == t.len() && self.indicator(t).is_some() && self.unmet(t).is_empty()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("universe {}\n", self.universe);
        for s in &self.sets {
            out.push_str(if s.odd { "set odd" } else { "set even" });
            for e in &s.elements {
                out.push_str(&format!(" {e}"));
            }
            out.push('\n');
        }
        out
    }
}

impl FromStr for EvenOddSetInstance {
    type Err = ParseError;

    fn from_str(input: &str) -> Result<Self, ParseError> {
        let lines = text::lines(input);
        let Some(head) = lines.first() else {
            return Err(ParseError::new(text::end_line(input), "missing `universe` line"));
        };
        if head.keyword() != "universe" {
            return Err(head.err(format!("expected `universe`, found `{}`", head.keyword())));
        }
        let n = head.number_arg(head.expect_args(1)?[0], "universe size")?;
        let mut inst = EvenOddSetInstance::new(n);
        for line in &lines[1..] {
            if line.keyword() != "set" {
                return Err(line.err(format!("expected `set`, found `{}`", line.keyword())));
            }
            let args = line.args();
            let odd = match args.first() {
                Some(&"odd") => true,
                Some(&"even") => false,
                _ => return Err(line.err("a set needs a parity `odd` or `even`")),
            };
            let mut elements = Vec::new();
            for tok in &args[1..] {
                elements.push(line.number_arg::<usize>(tok, "element")?);
            }
            inst.add_set(&elements, odd).map_err(|e| line.err(e.to_string()))?;
        }
        Ok(inst)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_sets_hit_once() {
        let inst = EvenOddSetInstance::odd_sets(4, &[vec![1, 2], vec![2, 3]]).unwrap();
        assert!(inst.check_parity_solution(&[1, 3]));
        assert!(!inst.check_parity_solution(&[2, 3]));
        assert!(!inst.check_parity_solution(&[1, 1, 3]));
    }

    #[test]
    fn empty_odd_set_is_never_met() {
        let inst = EvenOddSetInstance::odd_sets(2, &[vec![]]).unwrap();
        for t in [vec![], vec![0], vec![1], vec![0, 1]] {
            assert!(!inst.check_parity_solution(&t));
        }
    }

    #[test]
    fn validation() {
        let mut inst = EvenOddSetInstance::new(3);
        assert_eq!(
            inst.add_set(&[3], true),
            Err(InstanceError::ElementOutOfRange { element: 3, universe: 3 })
        );
        assert_eq!(inst.add_set(&[1, 1], true), Err(InstanceError::RepeatedElement(0)));
    }

    #[test]
    fn text_round_trip() {
        let mut inst = EvenOddSetInstance::new(4);
        inst.add_set(&[1, 0], true).unwrap();
        inst.add_set(&[], false).unwrap();
        inst.add_set(&[3, 2, 1], false).unwrap();
        let text = inst.to_text();
        assert_eq!(text, "universe 4\nset odd 0 1\nset even\nset even 1 2 3\n");
        assert_eq!(text.parse::<EvenOddSetInstance>().unwrap(), inst);
    }

    #[test]
    fn parse_errors() {
        assert_eq!("set odd 1\n".parse::<EvenOddSetInstance>().unwrap_err().line, 1);
        assert_eq!("universe 2\nset odd 2\n".parse::<EvenOddSetInstance>().unwrap_err().line, 2);
        assert_eq!("universe 2\n\nset 1\n".parse::<EvenOddSetInstance>().unwrap_err().line, 3);
        assert_eq!("universe 2\nset odd 0 0\n".parse::<EvenOddSetInstance>().unwrap_err().line, 2);
        assert_eq!("universe -1\n".parse::<EvenOddSetInstance>().unwrap_err().line, 1);
    }
}

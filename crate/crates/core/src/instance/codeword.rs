//! Nearest Codeword instances.
//!
//! Text format (`.nc`):
//!
//! ```text
//! matrix 2 1
//! 1
//! 1
//! target
//! 10
//! ```

use std::str::FromStr;

use crate::error::{InstanceError, ParseError};
use crate::gf2::{Gf2Matrix, Gf2Vector};
use crate::text;

/// Find `x` minimizing the Hamming distance between `A·x` and `b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NearestCodeword {
    pub a: Gf2Matrix,
    pub b: Gf2Vector,
}

impl NearestCodeword {
    pub fn new(a: Gf2Matrix, b: Gf2Vector) -> Result<Self, InstanceError> {
        if a.num_rows() != b.len() {
            return Err(InstanceError::Dimension(format!(
                "matrix has {} rows but target has length {}",
                a.num_rows(),
                b.len()
            )));
        }
        Ok(Self { a, b })
    }

    pub fn rows(&self) -> usize {
        self.a.num_rows()
    }

    pub fn cols(&self) -> usize {
        self.a.num_cols()
    }

    /// Positions where `A·x` and `b` differ.
    pub fn residual(&self, x: &Gf2Vector) -> Gf2Vector {
        self.a.mul_vec(x).xor(&self.b)
    }

    pub fn distance(&self, x: &Gf2Vector) -> usize {
        self.residual(x).weight()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("matrix {} {}\n", self.rows(), self.cols());
        for r in self.a.rows() {
            out.push_str(&r.to_bit_string());
            out.push('\n');
        }
        out.push_str("target\n");
        if !self.b.is_empty() {
            out.push_str(&self.b.to_bit_string());
            out.push('\n');
        }
        out
    }
}

impl FromStr for NearestCodeword {
    type Err = ParseError;

    fn from_str(input: &str) -> Result<Self, ParseError> {
        let lines = text::lines(input);
        let Some(head) = lines.first() else {
            return Err(ParseError::new(text::end_line(input), "missing `matrix` line"));
        };
        if head.keyword() != "matrix" {
            return Err(head.err(format!("expected `matrix`, found `{}`", head.keyword())));
        }
        let args = head.expect_args(2)?;
        let m: usize = head.number_arg(args[0], "row count")?;
        let n: usize = head.number_arg(args[1], "column count")?;
        if n == 0 {
            return Err(head.err("a matrix needs at least one column"));
        }
        let mut rows = Vec::with_capacity(m);
        for i in 0..m {
            let Some(line) = lines.get(1 + i) else {
                return Err(ParseError::new(text::end_line(input), format!("expected {m} matrix rows, found {i}")));
            };
            if line.tokens.len() != 1 {
                return Err(line.err("expected one bit-string row"));
            }
            rows.push(Gf2Vector::from_bits(&text::bits(line, line.tokens[0], n)?));
        }
        let target_at = 1 + m;
        let Some(line) = lines.get(target_at) else {
            return Err(ParseError::new(text::end_line(input), "missing `target` line"));
        };
        if line.keyword() != "target" || line.tokens.len() != 1 {
            return Err(line.err("expected `target`"));
        }
        if m == 0 {
            if let Some(extra) = lines.get(target_at + 1) {
                return Err(extra.err("unexpected content after the target"));
            }
            return Ok(NearestCodeword::new(Gf2Matrix::from_rows(n, rows), Gf2Vector::zeros(0)).expect("dimensions checked"));
        }
        let Some(line) = lines.get(target_at + 1) else {
            return Err(ParseError::new(text::end_line(input), "missing target vector"));
        };
        if line.tokens.len() != 1 {
            return Err(line.err("expected one bit-string target"));
        }
        let b = Gf2Vector::from_bits(&text::bits(line, line.tokens[0], m)?);
        if let Some(extra) = lines.get(target_at + 2) {
            return Err(extra.err("unexpected content after the target vector"));
        }
        Ok(NearestCodeword::new(Gf2Matrix::from_rows(n, rows), b).expect("dimensions checked"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> NearestCodeword {
        NearestCodeword::new(
            Gf2Matrix::from_bit_strings(&["1", "1"]).unwrap(),
            Gf2Vector::from_bit_string("10").unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn distances() {
        let nc = sample();
        assert_eq!(nc.distance(&Gf2Vector::from_bit_string("0").unwrap()), 1);
        assert_eq!(nc.distance(&Gf2Vector::from_bit_string("1").unwrap()), 1);
    }

    #[test]
    fn text_round_trip() {
        let nc = sample();
        assert_eq!(nc.to_text(), "matrix 2 1\n1\n1\ntarget\n10\n");
        assert_eq!(nc.to_text().parse::<NearestCodeword>().unwrap(), nc);
    }

    #[test]
    fn parse_errors() {
        assert_eq!("matrix 2 1\n1\ntarget\n10\n".parse::<NearestCodeword>().unwrap_err().line, 3);
        assert_eq!("matrix 1 2\n1\ntarget\n1\n".parse::<NearestCodeword>().unwrap_err().line, 2);
        assert_eq!("matrix 1 1\n1\ntarget\n11\n".parse::<NearestCodeword>().unwrap_err().line, 4);
        assert_eq!("matrix 1 0\n".parse::<NearestCodeword>().unwrap_err().line, 1);
        assert_eq!("matrix 1 1\n1\ntarget\n1\n0\n".parse::<NearestCodeword>().unwrap_err().line, 5);
    }
}

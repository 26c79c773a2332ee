//! Line-oriented tokenizer shared by all instance formats.

use crate::error::ParseError;

/// A non-blank line with comments stripped, split into whitespace tokens.
#[derive(Debug, Clone)]
pub(crate) struct Line<'a> {
    pub number: usize,
    pub tokens: Vec<&'a str>,
}

impl<'a> Line<'a> {
    pub fn err(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.number, message)
    }

    pub fn keyword(&self) -> &'a str {
        self.tokens[0]
    }

    pub fn args(&self) -> &[&'a str] {
        &self.tokens[1..]
    }

    pub fn expect_args(&self, n: usize) -> Result<&[&'a str], ParseError> {
        if self.args().len() != n {
            return Err(self.err(format!(
                "`{}` takes {} argument(s), found {}",
                self.keyword(),
                n,
                self.args().len()
            )));
        }
        Ok(self.args())
    }

    pub fn number_arg<T: std::str::FromStr>(&self, token: &str, what: &str) -> Result<T, ParseError> {
        token
            .parse()
            .map_err(|_| self.err(format!("{what} must be a non-negative integer, found `{token}`")))
    }
}

pub(crate) fn lines(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let body = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = body.split_whitespace().collect();
            (!tokens.is_empty()).then_some(Line { number: i + 1, tokens })
        })
        .collect()
}

/// Parses a bit-string into booleans.
pub(crate) fn bits(line: &Line<'_>, token: &str, len: usize) -> Result<Vec<bool>, ParseError> {
    if token.len() != len {
        return Err(line.err(format!("expected {len} bits, found `{token}`")));
    }
    token
        .chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            _ => Err(line.err(format!("`{token}` is not a bit-string"))),
        })
        .collect()
}

/// Last line number of the text, for errors about missing trailers.
pub(crate) fn end_line(text: &str) -> usize {
    text.lines().count().max(1)
}

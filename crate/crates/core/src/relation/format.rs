//! The `.lang` text format.
//!
//! ```text
//! # comment
//! relation imp 2
//! 00
//! 01
//! 11
//! end
//! ```

use super::{Language, Relation};
use crate::error::ParseError;
use crate::text::{self, Line};

/// Reads one `relation … end` block starting at `lines[*pos]`.
pub(crate) fn parse_relation_block(lines: &[Line<'_>], pos: &mut usize) -> Result<Relation, ParseError> {
    let head = &lines[*pos];
    let args = head.expect_args(2)?;
    let name = args[0].to_string();
    let arity: usize = head.number_arg(args[1], "arity")?;
    if !(1..=super::MAX_ARITY).contains(&arity) {
        return Err(head.err(format!("arity {arity} outside the supported range 1..=16")));
    }
    *pos += 1;
    let mut codes = Vec::new();
    loop {
        let Some(line) = lines.get(*pos) else {
            return Err(ParseError::new(
                lines.last().map_or(head.number, |l| l.number),
                format!("relation `{name}` is missing `end`"),
            ));
        };
        *pos += 1;
        if line.keyword() == "end" {
            line.expect_args(0)?;
            break;
        }
        if line.tokens.len() != 1 {
            return Err(line.err("expected one bit-string tuple per line"));
        }
        let bits = text::bits(line, line.tokens[0], arity)?;
        codes.push(super::encode_tuple(&bits));
    }
    Relation::from_codes(arity, codes)
        .map(|r| r.named(name.clone()))
        .map_err(|e| head.err(format!("relation `{name}`: {e}")))
}

pub fn parse_language(input: &str) -> Result<Language, ParseError> {
    let lines = text::lines(input);
    let mut pos = 0;
    let mut relations: Vec<(usize, Relation)> = Vec::new();
    while pos < lines.len() {
        let line = &lines[pos];
        if line.keyword() != "relation" {
            return Err(line.err(format!("expected `relation`, found `{}`", line.keyword())));
        }
        let number = line.number;
        relations.push((number, parse_relation_block(&lines, &mut pos)?));
    }
    if relations.is_empty() {
        return Err(ParseError::new(text::end_line(input), "a language needs at least one relation"));
    }
    for (i, (number, r)) in relations.iter().enumerate() {
        if relations[..i].iter().any(|(_, s)| s.name() == r.name()) {
            return Err(ParseError::new(*number, format!("duplicate relation name `{}`", r.label())));
        }
    }
    Language::new(relations.into_iter().map(|(_, r)| r).collect())
        .map_err(|e| ParseError::new(1, e.to_string()))
}

pub fn write_relation_block(r: &Relation, out: &mut String) {
    out.push_str(&format!("relation {} {}\n", r.name().unwrap_or("r"), r.arity()));
    for t in r.members() {
        out.push_str(&r.tuple_string(t));
        out.push('\n');
    }
    out.push_str("end\n");
}

pub fn write_language(lang: &Language) -> String {
    let mut out = String::new();
    for r in lang.relations() {
        write_relation_block(r, &mut out);
    }
    out
}

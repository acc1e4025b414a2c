//! Group-expression and finite-presentation input languages.
//!
//! Group expressions:
//!
//! ```text
//! expr := term ('*' term)*
//! term := '1' | 'Z' | 'Z/' int | 'D' int | 'S' int | 'Q8' | 'F' int
//!       | 'table:' path | '(' expr ')'
//! ```
//!
//! `*` is the free product. Parsed trees are normalized: free products are
//! flattened and free groups of rank `r` become an `r`-fold free product of
//! copies of `Z`.
//!
//! Presentations use `<a, b | a^2, (ab)^3, abAB>`. Generators are single
//! lowercase letters; an uppercase letter denotes the inverse generator.

mod expr;
mod presentation;

use thiserror::Error;

pub use expr::{parse_group_expr, GroupExpr};
pub use presentation::{parse_presentation, FinitePresentation, Letter};

/// A parse failure with the 0-based byte offset it was detected at.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at byte {offset}")]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("empty input")]
    Empty,
    #[error("unexpected character {0:?}")]
    Unexpected(char),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("expected {0}")]
    Expected(&'static str),
    #[error("{what} = {value} is out of range ({bounds})")]
    OutOfRange {
        what: &'static str,
        value: String,
        bounds: &'static str,
    },
    #[error("unknown generator {0:?}")]
    UnknownGenerator(char),
    #[error("generator index {0} out of range")]
    GeneratorIndex(usize),
    #[error("duplicate generator {0:?}")]
    DuplicateGenerator(char),
    #[error("empty generator list")]
    NoGenerators,
    #[error("malformed exponent")]
    MalformedExponent,
    #[error("relator expands to the empty word")]
    EmptyRelator,
}

impl ParseError {
    pub(crate) fn new(offset: usize, kind: ParseErrorKind) -> Self {
        ParseError { offset, kind }
    }
}

/// Byte cursor shared by both parsers.
pub(crate) struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    pub(crate) fn pos(&self) -> usize {
        self.pos
    }

    pub(crate) fn skip_ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.rest().chars().next()
    }

    pub(crate) fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    /// Next non-whitespace character without consuming it.
    pub(crate) fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    pub(crate) fn bump(&mut self) -> Option<char> {
        let c = self.peek_raw()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    pub(crate) fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, c: char, what: &'static str) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error_here(ParseErrorKind::Expected(what)))
        }
    }

    pub(crate) fn starts_with(&mut self, s: &str) -> bool {
        self.skip_ws();
        self.src[self.pos..].starts_with(s)
    }

    pub(crate) fn advance(&mut self, bytes: usize) {
        self.pos += bytes;
    }

    /// Consumes an unsigned decimal literal directly at the cursor.
    pub(crate) fn digits(&mut self) -> Option<(usize, &'a str)> {
        let start = self.pos;
        while matches!(self.peek_raw(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| (start, &self.src[start..self.pos]))
    }

    /// Consumes characters while `keep` holds.
    pub(crate) fn take_while(&mut self, keep: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while let Some(c) = self.peek_raw() {
            if !keep(c) {
                break;
            }
            self.pos += c.len_utf8();
        }
        &self.src[start..self.pos]
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub(crate) fn error_here(&mut self, kind: ParseErrorKind) -> ParseError {
        self.skip_ws();
        let kind = match (kind, self.peek_raw()) {
            (ParseErrorKind::Expected(_), None) => ParseErrorKind::UnexpectedEnd,
            (k, _) => k,
        };
        ParseError::new(self.pos, kind)
    }

    pub(crate) fn unexpected(&mut self) -> ParseError {
        self.skip_ws();
        match self.peek_raw() {
            Some(c) => ParseError::new(self.pos, ParseErrorKind::Unexpected(c)),
            None => ParseError::new(self.pos, ParseErrorKind::UnexpectedEnd),
        }
    }
}

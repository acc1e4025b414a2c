use std::fmt;

use super::{Cursor, ParseError, ParseErrorKind};

/// One letter of a relator: a generator index and an exponent of `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn exponent(self) -> i8 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    fn inverted(self) -> Letter {
        Letter {
            inverse: !self.inverse,
            ..self
        }
    }
}

/// `<g_1, …, g_k | r_1, …>` with relators stored as fully expanded words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePresentation {
    generators: Vec<char>,
    relators: Vec<Vec<Letter>>,
}

impl FinitePresentation {
    /// Validating constructor.
    pub fn new(generators: Vec<char>, relators: Vec<Vec<Letter>>) -> Result<Self, ParseError> {
        if generators.is_empty() {
            return Err(ParseError::new(0, ParseErrorKind::NoGenerators));
        }
        for (i, g) in generators.iter().enumerate() {
            if !g.is_ascii_lowercase() {
                return Err(ParseError::new(0, ParseErrorKind::Unexpected(*g)));
            }
            if generators[..i].contains(g) {
                return Err(ParseError::new(0, ParseErrorKind::DuplicateGenerator(*g)));
            }
        }
        for word in &relators {
            if word.is_empty() {
                return Err(ParseError::new(0, ParseErrorKind::EmptyRelator));
            }
            if let Some(bad) = word.iter().find(|l| l.generator >= generators.len()) {
                return Err(ParseError::new(
                    0,
                    ParseErrorKind::GeneratorIndex(bad.generator),
                ));
            }
        }
        Ok(FinitePresentation {
            generators,
            relators,
        })
    }

    pub fn generators(&self) -> &[char] {
        &self.generators
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn relators(&self) -> &[Vec<Letter>] {
        &self.relators
    }

    /// Relators as `(generator index, ±1)` pairs.
    pub fn relator_pairs(&self) -> Vec<Vec<(usize, i8)>> {
        self.relators
            .iter()
            .map(|w| w.iter().map(|l| (l.generator, l.exponent())).collect())
            .collect()
    }

    fn letter_char(&self, l: Letter) -> char {
        let c = self.generators[l.generator];
        if l.inverse {
            c.to_ascii_uppercase()
        } else {
            c
        }
    }
}

impl fmt::Display for FinitePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(" |")?;
        for (i, w) in self.relators.iter().enumerate() {
            f.write_str(if i == 0 { " " } else { ", " })?;
            for &l in w {
                write!(f, "{}", self.letter_char(l))?;
            }
        }
        f.write_str(">")
    }
}

/// Parses `<gens | relators>`.
///
/// Words are sequences of factors; a factor is a letter or a parenthesized
/// word, optionally raised to an integer power (`a^2`, `(ab)^-3`). Powers
/// are expanded, so stored relators only contain exponents `±1`.
pub fn parse_presentation(text: &str) -> Result<FinitePresentation, ParseError> {
    let mut cur = Cursor::new(text);
    if cur.at_end() {
        return Err(ParseError::new(cur.pos(), ParseErrorKind::Empty));
    }
    cur.expect('<', "'<'")?;

    let mut generators = Vec::new();
    if cur.peek() == Some('|') {
        return Err(cur.error_here(ParseErrorKind::NoGenerators));
    }
    loop {
        let start = {
            cur.skip_ws();
            cur.pos()
        };
        match cur.bump() {
            Some(c) if c.is_ascii_lowercase() => {
                if generators.contains(&c) {
                    return Err(ParseError::new(start, ParseErrorKind::DuplicateGenerator(c)));
                }
                generators.push(c);
            }
            Some(c) => return Err(ParseError::new(start, ParseErrorKind::Unexpected(c))),
            None => return Err(ParseError::new(start, ParseErrorKind::UnexpectedEnd)),
        }
        if !cur.eat(',') {
            break;
        }
    }
    cur.expect('|', "'|'")?;

    let mut relators = Vec::new();
    if !cur.eat('>') {
        loop {
            let start = {
                cur.skip_ws();
                cur.pos()
            };
            let word = parse_word(&mut cur, &generators)?;
            if word.is_empty() {
                return Err(ParseError::new(start, ParseErrorKind::EmptyRelator));
            }
            relators.push(word);
            if cur.eat(',') {
                continue;
            }
            cur.expect('>', "'>' or ','")?;
            break;
        }
    }
    if !cur.at_end() {
        return Err(cur.unexpected());
    }
    Ok(FinitePresentation {
        generators,
        relators,
    })
}

fn parse_word(cur: &mut Cursor<'_>, gens: &[char]) -> Result<Vec<Letter>, ParseError> {
    let mut word = Vec::new();
    loop {
        let Some(c) = cur.peek() else {
            return Err(cur.unexpected());
        };
        let start = cur.pos();
        let base = if c == '(' {
            cur.bump();
            let inner = parse_word(cur, gens)?;
            cur.expect(')', "')'")?;
            inner
        } else if c.is_ascii_alphabetic() {
            cur.bump();
            let lower = c.to_ascii_lowercase();
            let generator = gens
                .iter()
                .position(|&g| g == lower)
                .ok_or_else(|| ParseError::new(start, ParseErrorKind::UnknownGenerator(lower)))?;
            vec![Letter {
                generator,
                inverse: c.is_ascii_uppercase(),
            }]
        } else {
            break;
        };
        let power = if cur.eat('^') {
            exponent(cur)?
        } else {
            1
        };
        append_power(&mut word, &base, power);
    }
    Ok(word)
}

fn exponent(cur: &mut Cursor<'_>) -> Result<i64, ParseError> {
    cur.skip_ws();
    let start = cur.pos();
    let negative = cur.rest().starts_with('-');
    if negative {
        cur.advance(1);
    }
    let Some((_, digits)) = cur.digits() else {
        return Err(ParseError::new(start, ParseErrorKind::MalformedExponent));
    };
    let magnitude: i64 = digits
        .parse()
        .ok()
        .filter(|&v: &i64| v <= 1 << 20)
        .ok_or_else(|| ParseError::new(start, ParseErrorKind::MalformedExponent))?;
    Ok(if negative { -magnitude } else { magnitude })
}

fn append_power(word: &mut Vec<Letter>, base: &[Letter], power: i64) {
    if power >= 0 {
        for _ in 0..power {
            word.extend_from_slice(base);
        }
    } else {
        for _ in 0..-power {
            word.extend(base.iter().rev().map(|l| l.inverted()));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn l(generator: usize, e: i8) -> Letter {
        Letter {
            generator,
            inverse: e < 0,
        }
    }

    #[test]
    fn square_relator() {
        let p = parse_presentation("<a | a^2>").unwrap();
        assert_eq!(p.generators(), &['a']);
        assert_eq!(p.relator_pairs(), vec![vec![(0, 1), (0, 1)]]);
    }

    #[test]
    fn free_presentation() {
        let p = parse_presentation("<a,b | >").unwrap();
        assert_eq!(p.generators(), &['a', 'b']);
        assert!(p.relators().is_empty());
        assert!(parse_presentation("<a|>").unwrap().relators().is_empty());
    }

    #[test]
    fn unknown_generator() {
        let e = parse_presentation("<a | b^2>").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnknownGenerator('b'));
        assert_eq!(e.offset, 5);
        let e = parse_presentation("<a | aB>").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnknownGenerator('b'));
    }

    #[test]
    fn inverses_and_groups() {
        let p = parse_presentation("<a, b | abA, (ab)^3, (ab)^-1, a^-2>").unwrap();
        let r = p.relators();
        assert_eq!(r[0], vec![l(0, 1), l(1, 1), l(0, -1)]);
        assert_eq!(r[1].len(), 6);
        assert_eq!(r[2], vec![l(1, -1), l(0, -1)]);
        assert_eq!(r[3], vec![l(0, -1), l(0, -1)]);
        assert_eq!(p.to_string(), "<a, b | abA, ababab, BA, AA>");
    }

    #[test]
    fn malformed_inputs() {
        assert_eq!(
            parse_presentation("<a | a^>").unwrap_err().kind,
            ParseErrorKind::MalformedExponent
        );
        assert_eq!(
            parse_presentation("<a | a^x>").unwrap_err().kind,
            ParseErrorKind::MalformedExponent
        );
        assert_eq!(
            parse_presentation("< | a>").unwrap_err().kind,
            ParseErrorKind::NoGenerators
        );
        assert_eq!(
            parse_presentation("<a, a | a>").unwrap_err().kind,
            ParseErrorKind::DuplicateGenerator('a')
        );
        assert_eq!(
            parse_presentation("<a | a^0>").unwrap_err().kind,
            ParseErrorKind::EmptyRelator
        );
        assert!(parse_presentation("<a | a").is_err());
        assert!(parse_presentation("a | a>").is_err());
        assert!(parse_presentation("<a | a> x").is_err());
        assert!(parse_presentation("").is_err());
    }

    proptest! {
        #[test]
        fn expansion_has_unit_exponents(word in "[abAB]{1,4}", p in -4i64..5) {
            prop_assume!(p != 0);
            let text = format!("<a, b | ({word})^{p}, {word}>");
            let pres = parse_presentation(&text).unwrap();
            for r in pres.relator_pairs() {
                prop_assert!(r.iter().all(|&(_, e)| e == 1 || e == -1));
            }
            prop_assert_eq!(pres.relators()[0].len(), word.len() * p.unsigned_abs() as usize);
            let echoed = parse_presentation(&pres.to_string()).unwrap();
            prop_assert_eq!(echoed, pres);
        }
    }
}

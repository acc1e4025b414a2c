//! Plain-text monoid files.
//!
//! ```text
//! # x + y = 3y
//! generators 2
//! grades 2 1
//! relation 1 1 = 0 3
//! ```
//!
//! `grades` is optional; `#` starts a comment.

use super::{FgCommMonoid, MonoidElement, MonoidError};

fn format_error(line: usize, message: impl Into<String>) -> MonoidError {
    MonoidError::Format {
        line,
        message: message.into(),
    }
}

fn numbers(line: usize, words: &[&str]) -> Result<Vec<u64>, MonoidError> {
    words
        .iter()
        .map(|w| {
            w.parse::<u64>()
                .map_err(|_| format_error(line, format!("expected a non-negative integer, found `{w}`")))
        })
        .collect()
}

pub fn parse_monoid(text: &str) -> Result<FgCommMonoid, MonoidError> {
    let mut generators: Option<usize> = None;
    let mut grades: Option<Vec<u64>> = None;
    let mut relations = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let content = raw.split('#').next().unwrap_or("");
        let words: Vec<&str> = content.split_whitespace().collect();
        let Some((&head, rest)) = words.split_first() else {
            continue;
        };
        match head {
            "generators" => {
                if generators.is_some() {
                    return Err(format_error(line, "duplicate `generators` line"));
                }
                match numbers(line, rest)?.as_slice() {
                    [k] => generators = Some(*k as usize),
                    _ => return Err(format_error(line, "`generators` takes one count")),
                }
            }
            "grades" => {
                let k = generators.ok_or_else(|| format_error(line, "`grades` before `generators`"))?;
                if grades.is_some() {
                    return Err(format_error(line, "duplicate `grades` line"));
                }
                let g = numbers(line, rest)?;
                if g.len() != k {
                    return Err(format_error(line, format!("expected {k} grades, found {}", g.len())));
                }
                grades = Some(g);
            }
            "relation" => {
                let k = generators.ok_or_else(|| format_error(line, "`relation` before `generators`"))?;
                let Some(eq) = rest.iter().position(|w| *w == "=") else {
                    return Err(format_error(line, "relation needs `=`"));
                };
                let u = numbers(line, &rest[..eq])?;
                let v = numbers(line, &rest[eq + 1..])?;
                if u.len() != k || v.len() != k {
                    return Err(format_error(line, format!("each side needs {k} exponents")));
                }
                relations.push((MonoidElement(u), MonoidElement(v)));
            }
            other => return Err(format_error(line, format!("unknown directive `{other}`"))),
        }
    }
    let k = generators.ok_or_else(|| format_error(1, "missing `generators` line"))?;
    FgCommMonoid::new(k, grades, relations)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_example() {
        let m = parse_monoid("# x + y = 3y\ngenerators 2\ngrades 2 1\nrelation 1 1 = 0 3 # comment\n").unwrap();
        assert_eq!(m.generator_count(), 2);
        assert_eq!(m.grades(), Some(&[2, 1][..]));
        assert_eq!(m.relations(), &[(MonoidElement(vec![1, 1]), MonoidElement(vec![0, 3]))]);
        assert!(parse_monoid("generators 0").unwrap().is_free());
    }

    #[test]
    fn rejects_malformed() {
        for (text, line) in [
            ("", 1),
            ("relation 1 = 2", 1),
            ("generators 2\nrelation 1 1 2 0", 2),
            ("generators 2\nrelation 1 = 0 1", 2),
            ("generators 1\ngrades 1 2", 2),
            ("generators 1\nbogus", 2),
            ("generators x", 1),
            ("generators 1\ngenerators 1", 2),
        ] {
            match parse_monoid(text) {
                Err(MonoidError::Format { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
        assert_eq!(
            parse_monoid("generators 2\ngrades 1 2\nrelation 1 0 = 0 1"),
            Err(MonoidError::Inhomogeneous { index: 0, left: 1, right: 2 })
        );
    }
}

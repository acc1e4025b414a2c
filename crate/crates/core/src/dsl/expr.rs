use std::fmt;

use super::{Cursor, ParseError, ParseErrorKind};

/// Largest symmetric group accepted by the parser.
pub const MAX_SYMMETRIC_DEGREE: u32 = 6;

/// Syntax tree of a group expression.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupExpr {
    Trivial,
    /// `Z/m`, `m >= 1`.
    Cyclic(u32),
    /// `Dm`: the dihedral group of order `2m`, `m >= 3`.
    Dihedral(u32),
    /// `Sn`, `1 <= n <= 6`.
    Symmetric(u32),
    Quaternion8,
    IntegerGroup,
    /// Free group of the given rank. Normalization rewrites it as a free
    /// product of copies of [`GroupExpr::IntegerGroup`].
    FreeGroup(u32),
    /// A finite group read from a Cayley-table file.
    TableRef(String),
    /// Free product of at least two factors.
    FreeProduct(Vec<GroupExpr>),
}

impl GroupExpr {
    /// Free product of `factors`, flattening nested products.
    ///
    /// A single factor is returned unchanged.
    pub fn free_product(factors: impl IntoIterator<Item = GroupExpr>) -> GroupExpr {
        let mut flat = Vec::new();
        for f in factors {
            match f {
                GroupExpr::FreeProduct(inner) => flat.extend(inner),
                other => flat.push(other),
            }
        }
        if flat.len() == 1 {
            flat.pop().unwrap()
        } else {
            GroupExpr::FreeProduct(flat)
        }
    }

    /// Rewrites free groups into products of `Z` and flattens products.
    pub fn normalized(self) -> GroupExpr {
        match self {
            GroupExpr::FreeGroup(rank) => {
                GroupExpr::free_product((0..rank).map(|_| GroupExpr::IntegerGroup))
            }
            GroupExpr::FreeProduct(factors) => {
                GroupExpr::free_product(factors.into_iter().map(GroupExpr::normalized))
            }
            leaf => leaf,
        }
    }

    pub fn is_atomic(&self) -> bool {
        !matches!(self, GroupExpr::FreeProduct(_))
    }

    /// The free factors of a normalized expression (the expression itself
    /// when it is atomic).
    pub fn factors(&self) -> &[GroupExpr] {
        match self {
            GroupExpr::FreeProduct(f) => f,
            leaf => std::slice::from_ref(leaf),
        }
    }

    /// Whether the expression denotes a finite group.
    pub fn is_finite_leaf(&self) -> bool {
        matches!(
            self,
            GroupExpr::Trivial
                | GroupExpr::Cyclic(_)
                | GroupExpr::Dihedral(_)
                | GroupExpr::Symmetric(_)
                | GroupExpr::Quaternion8
                | GroupExpr::TableRef(_)
        )
    }
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Trivial => f.write_str("1"),
            GroupExpr::Cyclic(m) => write!(f, "Z/{m}"),
            GroupExpr::Dihedral(m) => write!(f, "D{m}"),
            GroupExpr::Symmetric(n) => write!(f, "S{n}"),
            GroupExpr::Quaternion8 => f.write_str("Q8"),
            GroupExpr::IntegerGroup => f.write_str("Z"),
            GroupExpr::FreeGroup(r) => write!(f, "F{r}"),
            GroupExpr::TableRef(path) => write!(f, "table:{path}"),
            GroupExpr::FreeProduct(factors) => {
                for (i, factor) in factors.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" * ")?;
                    }
                    if factor.is_atomic() {
                        write!(f, "{factor}")?;
                    } else {
                        write!(f, "({factor})")?;
                    }
                }
                Ok(())
            }
        }
    }
}

/// Parses and normalizes a group expression.
pub fn parse_group_expr(text: &str) -> Result<GroupExpr, ParseError> {
    let mut cur = Cursor::new(text);
    if cur.at_end() {
        return Err(ParseError::new(cur.pos(), ParseErrorKind::Empty));
    }
    let expr = parse_expr(&mut cur)?;
    if !cur.at_end() {
        return Err(cur.unexpected());
    }
    Ok(expr.normalized())
}

fn parse_expr(cur: &mut Cursor<'_>) -> Result<GroupExpr, ParseError> {
    let mut factors = vec![parse_term(cur)?];
    while cur.eat('*') {
        factors.push(parse_term(cur)?);
    }
    Ok(GroupExpr::free_product(factors))
}

fn parse_term(cur: &mut Cursor<'_>) -> Result<GroupExpr, ParseError> {
    if cur.starts_with("table:") {
        cur.advance("table:".len());
        let start = cur.pos();
        let path = cur.take_while(|c| !c.is_whitespace() && c != '*' && c != ')' && c != '(');
        if path.is_empty() {
            return Err(ParseError::new(start, ParseErrorKind::Expected("table path")));
        }
        return Ok(GroupExpr::TableRef(path.to_string()));
    }
    if cur.starts_with("Q8") {
        cur.advance(2);
        return Ok(GroupExpr::Quaternion8);
    }
    let Some(c) = cur.peek() else {
        return Err(cur.unexpected());
    };
    match c {
        '(' => {
            cur.bump();
            let inner = parse_expr(cur)?;
            cur.expect(')', "')'")?;
            Ok(inner)
        }
        '1' => {
            let (start, digits) = cur.digits().expect("peeked a digit");
            if digits == "1" {
                Ok(GroupExpr::Trivial)
            } else {
                let second = digits[1..].chars().next().expect("multi-digit literal");
                Err(ParseError::new(start + 1, ParseErrorKind::Unexpected(second)))
            }
        }
        'Z' => {
            cur.bump();
            if cur.starts_with_raw("/") {
                cur.advance(1);
                let m = number(cur, "Z/m", 1, u32::MAX, "m >= 1")?;
                Ok(GroupExpr::Cyclic(m))
            } else {
                Ok(GroupExpr::IntegerGroup)
            }
        }
        'D' => {
            cur.bump();
            Ok(GroupExpr::Dihedral(number(cur, "Dm", 3, u32::MAX, "m >= 3")?))
        }
        'S' => {
            cur.bump();
            Ok(GroupExpr::Symmetric(number(
                cur,
                "Sn",
                1,
                MAX_SYMMETRIC_DEGREE,
                "1 <= n <= 6",
            )?))
        }
        'F' => {
            cur.bump();
            Ok(GroupExpr::FreeGroup(number(cur, "Fr", 1, u32::MAX, "r >= 1")?))
        }
        _ => Err(cur.unexpected()),
    }
}

/// Reads an integer literal immediately following a leaf prefix.
fn number(
    cur: &mut Cursor<'_>,
    what: &'static str,
    min: u32,
    max: u32,
    bounds: &'static str,
) -> Result<u32, ParseError> {
    let Some((start, digits)) = cur.digits() else {
        return Err(cur.error_here(ParseErrorKind::Expected("integer")));
    };
    let out_of_range = || {
        ParseError::new(
            start,
            ParseErrorKind::OutOfRange {
                what,
                value: digits.to_string(),
                bounds,
            },
        )
    };
    let value: u32 = digits.parse().map_err(|_| out_of_range())?;
    if value < min || value > max {
        return Err(out_of_range());
    }
    Ok(value)
}

impl Cursor<'_> {
    fn starts_with_raw(&self, s: &str) -> bool {
        self.rest().starts_with(s)
    }
}

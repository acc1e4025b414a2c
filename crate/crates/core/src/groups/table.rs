use super::GroupError;

/// Parses the Cayley-table text format.
///
/// ```text
/// # comments run to end of line
/// order 3
/// 0 1 2
/// 1 2 0
/// 2 0 1
/// ```
///
/// Returns the rows; validation of the group axioms is left to
/// [`FiniteGroup::from_table`](super::FiniteGroup::from_table).
pub fn parse_cayley_table(text: &str, order_cap: usize) -> Result<Vec<Vec<usize>>, GroupError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let format_err = |line: usize, message: String| GroupError::TableFormat { line, message };

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| format_err(1, "missing `order N` header".into()))?;
    let mut words = header.split_whitespace();
    let order = match (words.next(), words.next(), words.next()) {
        (Some("order"), Some(n), None) => n
            .parse::<usize>()
            .map_err(|_| format_err(header_line, format!("bad order {n:?}")))?,
        _ => return Err(format_err(header_line, "expected `order N`".into())),
    };
    if order == 0 {
        return Err(GroupError::Empty);
    }
    if order > order_cap {
        return Err(GroupError::OrderExceedsCap {
            order,
            cap: order_cap,
        });
    }

    let mut rows = Vec::with_capacity(order);
    for (line_no, line) in lines {
        if rows.len() == order {
            return Err(format_err(line_no, "more rows than the declared order".into()));
        }
        let row = line
            .split_whitespace()
            .map(|w| {
                w.parse::<usize>()
                    .map_err(|_| format_err(line_no, format!("bad entry {w:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != order {
            return Err(format_err(
                line_no,
                format!("row has {} entries, expected {order}", row.len()),
            ));
        }
        rows.push(row);
    }
    if rows.len() != order {
        return Err(format_err(
            text.lines().count(),
            format!("expected {order} rows, found {}", rows.len()),
        ));
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::FiniteGroup;

    #[test]
    fn parses_with_comments() {
        let text = "# Z/3\norder 3 # three elements\n0 1 2\n\n1 2 0\n2 0 1 # last\n";
        let rows = parse_cayley_table(text, 10).unwrap();
        assert_eq!(rows, vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]);
        let g = FiniteGroup::from_table("t", &rows, 10).unwrap();
        assert!(g.is_abelian());
    }

    #[test]
    fn format_errors() {
        assert!(matches!(
            parse_cayley_table("", 10),
            Err(GroupError::TableFormat { .. })
        ));
        assert!(matches!(
            parse_cayley_table("size 2\n0 1\n1 0", 10),
            Err(GroupError::TableFormat { line: 1, .. })
        ));
        assert!(matches!(
            parse_cayley_table("order 2\n0 1\n1", 10),
            Err(GroupError::TableFormat { line: 3, .. })
        ));
        assert!(matches!(
            parse_cayley_table("order 2\n0 1", 10),
            Err(GroupError::TableFormat { .. })
        ));
        assert!(matches!(
            parse_cayley_table("order 2\n0 1\n1 0\n0 1", 10),
            Err(GroupError::TableFormat { line: 4, .. })
        ));
        assert!(matches!(
            parse_cayley_table("order 2\n0 x\n1 0", 10),
            Err(GroupError::TableFormat { line: 2, .. })
        ));
        assert!(matches!(
            parse_cayley_table("order 20\n", 10),
            Err(GroupError::OrderExceedsCap { order: 20, cap: 10 })
        ));
    }
}

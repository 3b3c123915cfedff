//! The `.grp` text format for finite groups.
//!
//! A Cayley table:
//!
//! ```text
//! group v1
//! order 4
//! labels: 0 1 2 3
//! table:
//! 0 1 2 3
//! 1 2 3 0
//! 2 3 0 1
//! 3 0 1 2
//! ```
//!
//! or permutation generators in cycle notation, one or more per line,
//! separated by commas:
//!
//! ```text
//! group v1
//! degree 4
//! generators:
//! (1 2 3 4), (1 2)
//! ```
//!
//! `labels` defaults to `0 … n-1`; `degree` defaults to the largest point
//! mentioned. Inside a cycle, points are separated by spaces or commas; a
//! cycle written without separators such as `(123)` is read digit by digit.

use crate::constructions::{FiniteGroup, Permutation};

use super::ParseError;

pub const GRP_HEADER: &str = "group v1";

fn syntax(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, column, message: message.into() }
}

/// Parses one generator such as `(1 2)(3 4)` into 1-based cycles.
fn parse_cycles(text: &str, line: usize, column: usize) -> Result<Vec<Vec<usize>>, ParseError> {
    let text = text.trim();
    if text == "e" || text == "()" {
        return Ok(Vec::new());
    }
    let mut cycles = Vec::new();
    let mut rest = text;
    while !rest.is_empty() {
        let offset = column + text.len() - rest.len();
        let Some(stripped) = rest.strip_prefix('(') else {
            return Err(syntax(line, offset, format!("expected `(` in {text:?}")));
        };
        let end = stripped.find(')').ok_or_else(|| syntax(line, offset, format!("unclosed cycle in {text:?}")))?;
        let body = &stripped[..end];
        let parts: Vec<&str> = if body.contains([' ', ',']) {
            body.split([' ', ',']).filter(|p| !p.is_empty()).collect()
        } else {
            body.split("").filter(|p| !p.is_empty()).collect()
        };
        let cycle = parts
            .iter()
            .map(|p| p.parse::<usize>().map_err(|_| syntax(line, offset, format!("bad point {p:?} in {text:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        cycles.push(cycle);
        rest = stripped[end + 1..].trim_start();
    }
    Ok(cycles)
}

/// Splits a generator line on commas that are not inside parentheses.
fn split_generators(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0usize, 0usize);
    for (i, c) in line.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                out.push((start, &line[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push((start, &line[start..]));
    out.into_iter()
        .filter(|(_, s)| !s.trim().is_empty())
        .map(|(i, s)| (i + 1 + s.len() - s.trim_start().len(), s))
        .collect()
}

/// Parses a `.grp` file into a validated group.
pub fn parse_group(text: &str) -> Result<FiniteGroup, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    match lines.next() {
        Some((_, GRP_HEADER)) => {}
        Some((n, _)) => return Err(syntax(n, 1, format!("expected header {GRP_HEADER:?}"))),
        None => return Err(syntax(1, 1, "empty file")),
    }

    let mut order: Option<usize> = None;
    let mut degree: Option<usize> = None;
    let mut labels: Option<Vec<String>> = None;
    let mut section: Option<&str> = None;
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut generators: Vec<Vec<Vec<usize>>> = Vec::new();

    for (n, line) in lines {
        if let Some(rest) = line.strip_prefix("order") {
            order = Some(rest.trim().parse().map_err(|_| syntax(n, 7, "bad order"))?);
        } else if let Some(rest) = line.strip_prefix("degree") {
            degree = Some(rest.trim().parse().map_err(|_| syntax(n, 8, "bad degree"))?);
        } else if let Some(rest) = line.strip_prefix("labels:") {
            labels = Some(rest.split_whitespace().map(str::to_string).collect());
        } else if line == "table:" {
            section = Some("table");
        } else if line == "generators:" {
            section = Some("generators");
        } else {
            match section {
                Some("table") => {
                    let row = line
                        .split_whitespace()
                        .map(|t| t.parse::<usize>().map_err(|_| syntax(n, 1, format!("bad table entry {t:?}"))))
                        .collect::<Result<Vec<_>, _>>()?;
                    rows.push(row);
                }
                Some("generators") => {
                    for (col, g) in split_generators(line) {
                        generators.push(parse_cycles(g, n, col)?);
                    }
                }
                _ => return Err(syntax(n, 1, format!("unexpected line {line:?}"))),
            }
        }
    }

    if !rows.is_empty() {
        if !generators.is_empty() {
            return Err(syntax(1, 1, "a file holds either a table or generators, not both"));
        }
        let n = order.unwrap_or(rows.len());
        let labels = labels.unwrap_or_else(|| (0..n).map(|i| i.to_string()).collect());
        if labels.len() != n {
            return Err(syntax(1, 1, format!("{} labels for order {n}", labels.len())));
        }
        return Ok(FiniteGroup::from_cayley(labels, rows)?);
    }
    if generators.is_empty() {
        return Err(syntax(1, 1, "missing `table:` or `generators:` section"));
    }
    let max_point = generators.iter().flatten().flatten().copied().max().unwrap_or(1);
    let degree = degree.unwrap_or(max_point);
    let perms = generators
        .iter()
        .map(|g| Permutation::from_cycles(degree, g))
        .collect::<Result<Vec<_>, _>>()?;
    let group = FiniteGroup::from_permutations(degree, &perms)?;
    if let Some(n) = order {
        if n != group.order() {
            return Err(ParseError::Group(crate::constructions::ConstructionError::NotAGroup(format!(
                "declared order {n} but the generators give order {}",
                group.order()
            ))));
        }
    }
    Ok(group)
}

/// Serializes a group as a Cayley table.
pub fn emit_group(g: &FiniteGroup) -> String {
    let mut out = format!("{GRP_HEADER}\norder {}\nlabels: {}\ntable:\n", g.order(), g.labels().join(" "));
    for row in g.cayley_rows() {
        let row: Vec<String> = row.iter().map(usize::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::ConstructionError;

    #[test]
    fn generators_give_s3_and_s4() {
        let s3 = parse_group("group v1\ngenerators:\n(1 2), (1 2 3)\n").unwrap();
        assert_eq!(s3.order(), 6);
        let s4 = parse_group("group v1\ngenerators:\n(1 2 3 4)\n(1 2)\n").unwrap();
        assert_eq!(s4.order(), 24);
        let compact = parse_group("group v1\ngenerators:\n(1234), (12)\n").unwrap();
        assert_eq!(compact.cayley_rows(), s4.cayley_rows());
        let v4 = parse_group("group v1\ndegree 4\ngenerators:\n(1 2)(3 4), (1 3)(2 4)\n").unwrap();
        assert_eq!(v4.order(), 4);
        assert!(v4.is_abelian());
    }

    #[test]
    fn cayley_table_of_z4() {
        let text = "group v1\norder 4\nlabels: 0 1 2 3\ntable:\n0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2\n";
        let g = parse_group(text).unwrap();
        assert_eq!(g.cayley_rows(), FiniteGroup::cyclic(4).cayley_rows());
        assert_eq!(parse_group(&emit_group(&g)).unwrap().cayley_rows(), g.cayley_rows());
    }

    #[test]
    fn rejects_non_groups() {
        let not_assoc = "group v1\norder 3\ntable:\n0 1 2\n1 0 2\n2 2 0\n";
        assert!(matches!(parse_group(not_assoc), Err(ParseError::Group(ConstructionError::NotAGroup(_)))));
        let wrong_order = "group v1\norder 5\ngenerators:\n(1 2 3)\n";
        assert!(matches!(parse_group(wrong_order), Err(ParseError::Group(ConstructionError::NotAGroup(_)))));
        assert!(matches!(parse_group("group v1\n"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_group("group v1\ngenerators:\n(1 2\n"), Err(ParseError::Syntax { line: 3, .. })));
    }

    #[test]
    fn large_generated_group_is_capped() {
        let big = "group v1\ngenerators:\n(1 2 3 4 5 6 7 8), (1 2)\n";
        assert!(matches!(
            parse_group(big),
            Err(ParseError::Group(ConstructionError::GroupTooLarge { .. }))
        ));
    }
}

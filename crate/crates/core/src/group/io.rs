//! Text formats for group input.
//!
//! Cayley table: the first line holds `n`, followed by `n` lines of `n`
//! whitespace-separated element ids.
//!
//! Permutation generators: one generator per line in cycle notation, e.g.
//! `(0 1 2)(3 4)`. `()` is the identity. Blank lines and `#` comments are
//! skipped. The degree is one more than the largest point mentioned.

use super::GroupError;

fn parse_err(line: usize, message: impl Into<String>) -> GroupError {
    GroupError::Parse { line, message: message.into() }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

pub fn parse_cayley_table(text: &str) -> Result<Vec<Vec<usize>>, GroupError> {
    let mut lines = content_lines(text);
    let (first, header) = lines.next().ok_or_else(|| parse_err(1, "missing order line"))?;
    let n: usize = header.parse().map_err(|_| parse_err(first, format!("expected group order, found `{header}`")))?;
    if n == 0 {
        return Err(parse_err(first, "group order must be positive"));
    }
    let mut rows = Vec::with_capacity(n);
    let mut last = first;
    for (lineno, l) in lines {
        last = lineno;
        if rows.len() == n {
            return Err(parse_err(lineno, format!("more than {n} table rows")));
        }
        let row = l
            .split_whitespace()
            .map(|tok| tok.parse::<usize>().map_err(|_| parse_err(lineno, format!("bad entry `{tok}`"))))
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != n {
            return Err(parse_err(lineno, format!("expected {n} entries, found {}", row.len())));
        }
        if let Some(bad) = row.iter().find(|&&v| v >= n) {
            return Err(parse_err(lineno, format!("entry {bad} outside 0..{n}")));
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(parse_err(last + 1, format!("expected {n} rows, found {}", rows.len())));
    }
    Ok(rows)
}

/// Parsed permutation-generator file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationInput {
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
}

fn parse_cycles(line: usize, text: &str) -> Result<Vec<Vec<usize>>, GroupError> {
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let inner = rest.strip_prefix('(').ok_or_else(|| parse_err(line, format!("expected `(` at `{rest}`")))?;
        let close = inner.find(')').ok_or_else(|| parse_err(line, "unclosed cycle"))?;
        let cycle = inner[..close]
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| parse_err(line, format!("bad point `{t}`"))))
            .collect::<Result<Vec<_>, _>>()?;
        cycles.push(cycle);
        rest = inner[close + 1..].trim_start();
    }
    Ok(cycles)
}

pub fn parse_permutations(text: &str) -> Result<PermutationInput, GroupError> {
    let mut parsed = Vec::new();
    let mut degree = 1;
    for (lineno, l) in content_lines(text) {
        let cycles = parse_cycles(lineno, l)?;
        let mut seen = std::collections::HashSet::new();
        for &p in cycles.iter().flatten() {
            if !seen.insert(p) {
                return Err(parse_err(lineno, format!("point {p} appears twice")));
            }
            degree = degree.max(p + 1);
        }
        parsed.push(cycles);
    }
    let generators = parsed
        .into_iter()
        .map(|cycles| {
            let mut perm: Vec<usize> = (0..degree).collect();
            for c in cycles.iter().filter(|c| !c.is_empty()) {
                for (i, &p) in c.iter().enumerate() {
                    perm[p] = c[(i + 1) % c.len()];
                }
            }
            perm
        })
        .collect();
    Ok(PermutationInput { degree, generators })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cayley_round_trip() {
        let t = parse_cayley_table("2\n0 1\n1 0\n").unwrap();
        assert_eq!(t, vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn cayley_errors_carry_line_numbers() {
        assert_eq!(
            parse_cayley_table("2\n0 1\n1\n"),
            Err(GroupError::Parse { line: 3, message: "expected 2 entries, found 1".into() })
        );
        assert!(matches!(parse_cayley_table("x\n"), Err(GroupError::Parse { line: 1, .. })));
        assert!(matches!(parse_cayley_table("2\n0 1\n"), Err(GroupError::Parse { line: 3, .. })));
        assert!(matches!(parse_cayley_table("2\n0 1\n1 5\n"), Err(GroupError::Parse { line: 3, .. })));
        assert!(matches!(parse_cayley_table("1\n0\n0\n"), Err(GroupError::Parse { line: 3, .. })));
    }

    #[test]
    fn cycle_notation() {
        let p = parse_permutations("(0 1 2)(3 4)\n\n# transposition\n(0 1)\n").unwrap();
        assert_eq!(p.degree, 5);
        assert_eq!(p.generators[0], vec![1, 2, 0, 4, 3]);
        assert_eq!(p.generators[1], vec![1, 0, 2, 3, 4]);
        let id = parse_permutations("()").unwrap();
        assert_eq!(id, PermutationInput { degree: 1, generators: vec![vec![0]] });
    }

    #[test]
    fn cycle_errors() {
        assert!(matches!(parse_permutations("(0 1\n"), Err(GroupError::Parse { line: 1, .. })));
        assert!(matches!(parse_permutations("(0 1)\n(1 1)"), Err(GroupError::Parse { line: 2, .. })));
        assert!(matches!(parse_permutations("0 1"), Err(GroupError::Parse { line: 1, .. })));
        assert!(matches!(parse_permutations("(a)"), Err(GroupError::Parse { line: 1, .. })));
    }
}

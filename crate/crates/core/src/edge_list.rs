//! Plain edge-list text: a header line `n m` followed by `m` lines `u v`.

use std::fmt::Write as _;

use crate::error::GraphError;
use crate::graph::Graph;

fn err(line: usize, reason: impl Into<String>) -> GraphError {
    GraphError::EdgeList {
        line,
        reason: reason.into(),
    }
}

fn two_numbers(line_no: usize, line: &str) -> Result<(usize, usize), GraphError> {
    let mut fields = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize, GraphError> {
        let field = fields
            .next()
            .ok_or_else(|| err(line_no, format!("missing {what}")))?;
        field
            .parse()
            .map_err(|_| err(line_no, format!("`{field}` is not a vertex count or id")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if let Some(extra) = fields.next() {
        return Err(err(line_no, format!("unexpected field `{extra}`")));
    }
    Ok((a, b))
}

/// Parses the edge-list format. Line numbers in errors are 1-based; blank
/// lines are ignored. Duplicate edges collapse.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (header_line, header) = lines.next().ok_or_else(|| err(1, "empty input"))?;
    let (n, m) = two_numbers(header_line, header)?;
    let mut g = Graph::empty(n)?;
    let mut seen = 0;
    for (line_no, line) in lines {
        let (u, v) = two_numbers(line_no, line)?;
        g.add_edge(u, v).map_err(|e| err(line_no, e.to_string()))?;
        seen += 1;
    }
    if seen != m {
        return Err(err(
            header_line,
            format!("header declares {m} edges, found {seen}"),
        ));
    }
    Ok(g)
}

pub fn encode_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Heuristic used by the CLI: an edge list starts with a line of two integers.
pub fn looks_like_edge_list(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .is_some_and(|l| {
            let fields: Vec<_> = l.split_whitespace().collect();
            fields.len() == 2 && fields.iter().all(|f| f.parse::<usize>().is_ok())
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::cycle;

    #[test]
    fn parses_and_writes() {
        let g = parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
        assert_eq!(g, cycle(4).unwrap());
        assert_eq!(encode_edge_list(&g), "4 4\n0 1\n0 3\n1 2\n2 3\n");
        assert_eq!(parse_edge_list(&encode_edge_list(&g)).unwrap(), g);
        assert!(looks_like_edge_list("4 4\n0 1"));
        assert!(!looks_like_edge_list("Cl"));
    }

    #[test]
    fn reports_line_numbers() {
        assert_eq!(
            parse_edge_list("3 2\n0 1\n1 x\n").unwrap_err(),
            err(3, "`x` is not a vertex count or id")
        );
        assert!(matches!(
            parse_edge_list("3 1\n0 3\n"),
            Err(GraphError::EdgeList { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 2\n0 1\n"),
            Err(GraphError::EdgeList { line: 1, .. })
        ));
        assert!(parse_edge_list("").is_err());
    }
}

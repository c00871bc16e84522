//! Plain edge-list format: a header line `n m` followed by `m` lines `u v`.

use super::{Graph, GraphError};

fn err(line: usize, reason: impl Into<String>) -> GraphError {
    GraphError::EdgeList {
        line,
        reason: reason.into(),
    }
}

fn parse_pair(line_no: usize, line: &str) -> Result<(usize, usize), GraphError> {
    let mut it = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize, GraphError> {
        let tok = it
            .next()
            .ok_or_else(|| err(line_no, format!("missing {what}")))?;
        tok.parse()
            .map_err(|_| err(line_no, format!("invalid {what} {tok:?}")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if it.next().is_some() {
        return Err(err(line_no, "expected exactly two fields"));
    }
    Ok((a, b))
}

/// Parses the edge-list format. Blank lines are skipped; line numbers in
/// errors are 1-based.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or_else(|| err(1, "missing header"))?;
    let (n, m) = parse_pair(hline, header)?;
    let mut g = Graph::empty(n);
    let mut count = 0;
    for (line_no, line) in lines {
        let (u, v) = parse_pair(line_no, line)?;
        g.add_edge(u, v).map_err(|e| err(line_no, e.to_string()))?;
        count += 1;
    }
    if count != m {
        return Err(err(
            hline,
            format!("header declares {m} edges, found {count}"),
        ));
    }
    Ok(g)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

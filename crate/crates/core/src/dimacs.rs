//! DIMACS edge format: `c` comment lines, a single `p edge n m` line, then
//! `e u v` lines with 1-indexed vertices.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let err = |message: String| Error::Dimacs { line: line_no, message };
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields[0] {
            "p" => {
                if header.is_some() {
                    return Err(err("second problem line".into()));
                }
                if fields.len() != 4 || fields[1] != "edge" {
                    return Err(err(format!("expected `p edge n m`, found `{line}`")));
                }
                let n = parse_count(fields[2]).map_err(&err)?;
                let m = parse_count(fields[3]).map_err(&err)?;
                header = Some((n, m));
            }
            "e" => {
                let (n, _) = header.ok_or_else(|| err("edge line before the problem line".into()))?;
                if fields.len() != 3 {
                    return Err(err(format!("expected `e u v`, found `{line}`")));
                }
                let u = parse_count(fields[1]).map_err(&err)?;
                let v = parse_count(fields[2]).map_err(&err)?;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(err(format!("vertex out of range 1..={n} in `{line}`")));
                }
                if u == v {
                    return Err(err(format!("self-loop at vertex {u}")));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(err(format!("duplicate edge {u} {v}")));
                }
                edges.push((u - 1, v - 1));
            }
            other => return Err(err(format!("unknown line type `{other}`"))),
        }
    }
    let (n, m) = header.ok_or(Error::Dimacs { line: 0, message: "missing problem line".into() })?;
    if edges.len() != m {
        return Err(Error::Dimacs {
            line: 0,
            message: format!("problem line declares {m} edges, found {}", edges.len()),
        });
    }
    Graph::new(n, edges)
}

fn parse_count(field: &str) -> std::result::Result<usize, String> {
    field.parse().map_err(|_| format!("`{field}` is not a non-negative integer"))
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p edge {} {}", g.vertex_count(), g.edge_count()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn parses_a_triangle() {
        let g = parse_dimacs("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n").unwrap();
        let mut edges = g.edges().to_vec();
        edges.sort_unstable();
        assert_eq!(edges, generate::complete(3).unwrap().edges());
    }

    #[test]
    fn rejects_self_loops() {
        let err = parse_dimacs("p edge 2 1\ne 1 1\n").unwrap_err();
        assert!(matches!(err, Error::Dimacs { line: 2, .. }), "{err}");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_dimacs("p edge 2 1\ne 1 3\n").is_err());
        assert!(parse_dimacs("p edge 2 2\ne 1 2\n").is_err());
        assert!(parse_dimacs("p edge 2 2\ne 1 2\ne 2 1\n").is_err());
        assert!(parse_dimacs("e 1 2\n").is_err());
        assert!(parse_dimacs("p edge 2 1\ne 1 x\n").is_err());
        assert!(parse_dimacs("p col 2 1\ne 1 2\n").is_err());
        assert!(parse_dimacs("x\n").is_err());
        assert!(parse_dimacs("c only comments\n").is_err());
    }

    #[test]
    fn round_trips_petersen() {
        let p = generate::petersen();
        assert_eq!(parse_dimacs(&write_dimacs(&p)).unwrap(), p);
    }
}

//! Plain-text edge lists: a header `n m`, then one `u v` pair per line.
//! Blank lines and lines starting with `#` are ignored.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut lines_of = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let pair = parse_pair(body, line)?;
        match header {
            None => header = Some(pair),
            Some((n, _)) => {
                let (u, v) = pair;
                if u >= n || v >= n {
                    return Err(Error::Parse {
                        line,
                        msg: format!("edge ({u}, {v}) references a vertex outside 0..{n}"),
                    });
                }
                if u == v {
                    return Err(Error::Parse {
                        line,
                        msg: format!("self-loop ({u}, {v})"),
                    });
                }
                edges.push(pair);
                lines_of.push(line);
            }
        }
    }
    let Some((n, m)) = header else {
        return Err(Error::Parse {
            line: 1,
            msg: "missing header \"n m\"".into(),
        });
    };
    if edges.len() != m {
        return Err(Error::Parse {
            line: lines_of.last().copied().unwrap_or(1),
            msg: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    Graph::new(n, &edges).map_err(|e| match e {
        Error::DuplicateEdge(a, b) => {
            // report the second occurrence
            let mut seen = std::collections::HashSet::new();
            let line = edges
                .iter()
                .zip(&lines_of)
                .find(|(&(u, v), _)| !seen.insert((u.min(v), u.max(v))))
                .map(|(_, &l)| l)
                .unwrap_or(1);
            Error::Parse {
                line,
                msg: format!("duplicate edge ({a}, {b})"),
            }
        }
        other => other,
    })
}

fn parse_pair(body: &str, line: usize) -> Result<(usize, usize)> {
    let mut fields = body.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = fields.next().ok_or_else(|| Error::Parse {
            line,
            msg: format!("expected two integers, got {body:?}"),
        })?;
        tok.parse().map_err(|_| Error::Parse {
            line,
            msg: format!("not a vertex index: {tok:?}"),
        })
    };
    let pair = (next()?, next()?);
    if fields.next().is_some() {
        return Err(Error::Parse {
            line,
            msg: format!("expected two integers, got {body:?}"),
        });
    }
    Ok(pair)
}

/// Canonical text: edges sorted, smaller endpoint first.
pub fn write_edge_list(g: &Graph) -> String {
    let mut edges = g.edges().to_vec();
    edges.sort_unstable();
    let mut out = String::with_capacity(12 * (edges.len() + 1));
    writeln!(out, "{} {}", g.n(), g.m()).unwrap();
    for (u, v) in edges {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::complete;

    #[test]
    fn parses_triangle_with_comments() {
        let g = parse_edge_list("# triangle\n3 3\n0 1\n\n1 2\n2 0\n").unwrap();
        assert_eq!((g.n(), g.m()), (3, 3));
        assert!(g.has_edge(0, 2));
    }

    #[test]
    fn self_loop_reports_line() {
        let err = parse_edge_list("2 1\n0 0\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 2,
                msg: "self-loop (0, 0)".into()
            }
        );
    }

    #[test]
    fn malformed_input() {
        assert!(matches!(
            parse_edge_list("3 2\n0 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 1\n0 x\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 1\n0 1 2\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 1\n0 5\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 2\n0 1\n1 0\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_edge_list("# nothing\n"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn round_trip_is_canonical() {
        let text = write_edge_list(&complete(4));
        assert_eq!(text, "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
        assert_eq!(write_edge_list(&parse_edge_list(&text).unwrap()), text);
        let shuffled = parse_edge_list("4 6\n3 2\n1 0\n2 0\n3 1\n0 3\n2 1\n").unwrap();
        assert_eq!(write_edge_list(&shuffled), text);
    }
}

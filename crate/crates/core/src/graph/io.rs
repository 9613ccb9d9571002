//! Edge-list text format.
//!
//! ```text
//! # optional comments
//! graph 3 2        (or: digraph n m)
//! 0 1
//! 1 2
//! ```

use thiserror::Error;

use super::MultiGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

fn parse_count(token: &str, line: usize, what: &str) -> Result<usize, ParseError> {
    if token.starts_with('-') {
        return Err(ParseError::new(line, format!("negative {what} `{token}`")));
    }
    token
        .parse()
        .map_err(|_| ParseError::new(line, format!("invalid {what} `{token}`")))
}

/// Parses the edge-list format. Edge ids follow line order starting at 0.
pub fn parse_graph(text: &str) -> Result<MultiGraph, ParseError> {
    let mut graph: Option<MultiGraph> = None;
    let mut expected = 0;
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match graph.as_mut() {
            None => {
                if tokens.len() != 3 {
                    return Err(ParseError::new(line, "malformed header, expected `graph n m` or `digraph n m`"));
                }
                let directed = match tokens[0] {
                    "graph" => false,
                    "digraph" => true,
                    other => {
                        return Err(ParseError::new(
                            line,
                            format!("malformed header, unknown graph kind `{other}`"),
                        ))
                    }
                };
                let n = parse_count(tokens[1], line, "vertex count")?;
                expected = parse_count(tokens[2], line, "edge count")?;
                graph = Some(MultiGraph::new(n, directed));
            }
            Some(g) => {
                if tokens.len() != 2 {
                    return Err(ParseError::new(line, "expected an edge line `u v`"));
                }
                if g.edge_count() == expected {
                    return Err(ParseError::new(
                        line,
                        format!("more edge lines than the declared {expected}"),
                    ));
                }
                let u = parse_count(tokens[0], line, "vertex index")?;
                let v = parse_count(tokens[1], line, "vertex index")?;
                for x in [u, v] {
                    if x >= g.vertex_count() {
                        return Err(ParseError::new(
                            line,
                            format!("vertex index {x} out of range for {} vertices", g.vertex_count()),
                        ));
                    }
                }
                g.add_edge(u, v).expect("endpoints checked");
            }
        }
    }

    let g = graph.ok_or_else(|| ParseError::new(last_line.max(1), "missing header"))?;
    if g.edge_count() != expected {
        return Err(ParseError::new(
            last_line,
            format!("declared {expected} edges but found {}", g.edge_count()),
        ));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::EdgeId;

    #[test]
    fn parallel_edges() {
        let g = parse_graph("graph 2 3\n0 1\n0 1\n0 1\n").unwrap();
        assert!(!g.is_directed());
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.edges()[2].id, EdgeId(2));
    }

    #[test]
    fn directed_triangle() {
        let g = parse_graph("digraph 3 3\n0 1\n1 2\n2 0\n").unwrap();
        assert!(g.is_directed());
        let pairs: Vec<_> = g.edges().iter().map(|e| (e.tail, e.head)).collect();
        assert_eq!(pairs, vec![(0, 1), (1, 2), (2, 0)]);
    }

    #[test]
    fn loop_and_comments() {
        let g = parse_graph("# a loop\ngraph 1 1\n\n0 0   # self\n").unwrap();
        assert!(g.edges()[0].is_loop());
    }

    #[test]
    fn errors_name_the_line() {
        let e = parse_graph("grph 2 1\n0 1\n").unwrap_err();
        assert_eq!(e.line, 1);
        let e = parse_graph("graph 2 1\n0 2\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.message.contains("out of range"));
        let e = parse_graph("graph 2 2\n0 1\n-1 0\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(e.message.contains("negative"));
        let e = parse_graph("graph 2 1\n0 1\n1 0\n").unwrap_err();
        assert_eq!(e.line, 3);
        let e = parse_graph("graph 2 2\n0 1\n").unwrap_err();
        assert!(e.message.contains("declared 2"));
        assert!(parse_graph("").is_err());
        assert!(parse_graph("graph 2 -1\n").unwrap_err().message.contains("negative"));
    }

    #[test]
    fn serialization_is_canonical() {
        let text = "graph 3 3\n0 1\n1 2\n0 2\n";
        assert_eq!(parse_graph(text).unwrap().to_edge_list(), text);
        // undirected endpoints are normalized
        assert_eq!(
            parse_graph("graph 2 1\n1 0\n").unwrap().to_edge_list(),
            "graph 2 1\n0 1\n"
        );
        let d = "digraph 2 2\n1 0\n0 1\n";
        assert_eq!(parse_graph(d).unwrap().to_edge_list(), d);
    }
}

//! Plain edge lists: one `u v` pair of zero-based ids per line, `#` comments.

use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::graph::{BuildStats, Graph, LoopPolicy};

/// Parses an edge list, dropping self-loops. The vertex count is one more
/// than the largest id seen unless `vertices` overrides it.
pub fn parse_edgelist<R: BufRead>(
    reader: R,
    directed: bool,
    vertices: Option<usize>,
) -> Result<Graph> {
    parse_edgelist_with_stats(reader, directed, vertices, LoopPolicy::Ignore).map(|(g, _)| g)
}

pub fn parse_edgelist_with_stats<R: BufRead>(
    reader: R,
    directed: bool,
    vertices: Option<usize>,
    loops: LoopPolicy,
) -> Result<(Graph, BuildStats)> {
    let mut pairs = Vec::new();
    let mut origin = Vec::new();
    let mut max_id: Option<(usize, usize)> = None;
    for (index, raw) in reader.lines().enumerate() {
        let raw = raw?;
        let line_no = index + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let mut id = || -> Result<usize> {
            let token = tokens
                .next()
                .ok_or_else(|| Error::parse(line_no, "expected two vertex ids"))?;
            token
                .parse()
                .map_err(|_| Error::parse(line_no, format!("invalid vertex id {token:?}")))
        };
        let (u, v) = (id()?, id()?);
        let hi = u.max(v);
        if max_id.is_none_or(|(m, _)| hi > m) {
            max_id = Some((hi, line_no));
        }
        pairs.push((u, v));
        origin.push(line_no);
    }

    let n = match (vertices, max_id) {
        (Some(n), Some((hi, line_no))) if hi >= n => {
            return Err(Error::parse(
                line_no,
                format!("vertex id {hi} out of range for {n} vertices"),
            ))
        }
        (Some(n), _) => n,
        (None, Some((hi, _))) => hi + 1,
        (None, None) => 0,
    };
    Graph::from_lines_with_stats(n, &pairs, directed, loops).map_err(|e| match e {
        Error::SelfLoop { index, v } => {
            Error::parse(origin[index], format!("self-loop on vertex {v}"))
        }
        other => other,
    })
}

/// Writes one `u v` line per edge or arc, zero-based.
pub fn write_edgelist<W: Write>(g: &Graph, mut out: W) -> Result<()> {
    for (u, v) in g.lines() {
        writeln!(out, "{u} {v}")?;
    }
    out.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str, directed: bool) -> Result<Graph> {
        parse_edgelist(text.as_bytes(), directed, None)
    }

    #[test]
    fn path() {
        let g = parse("0 1\n1 2\n", false).unwrap();
        assert_eq!((g.n(), g.m()), (3, 2));
        assert!(!g.is_directed());
    }

    #[test]
    fn comment_line() {
        let g = parse("# comment\n0 1\n", false).unwrap();
        assert_eq!((g.n(), g.m()), (2, 1));
    }

    #[test]
    fn bad_token() {
        match parse("0 x\n", false).unwrap_err() {
            Error::Parse { line, .. } => assert_eq!(line, 1),
            other => panic!("{other:?}"),
        }
        assert!(parse("0 1\n2\n", false).is_err());
        assert!(parse("-1 2\n", false).is_err());
    }

    #[test]
    fn vertex_override() {
        let g = parse_edgelist("0 1\n".as_bytes(), true, Some(5)).unwrap();
        assert_eq!((g.n(), g.m()), (5, 1));
        let err = parse_edgelist("0 1\n4 2\n".as_bytes(), false, Some(3)).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn empty_input() {
        let g = parse("", false).unwrap();
        assert_eq!(g.n(), 0);
    }

    #[test]
    fn trailing_weight_is_ignored_and_loops_counted() {
        let (g, stats) =
            parse_edgelist_with_stats("0 1 0.5\n1 1\n".as_bytes(), false, None, LoopPolicy::Ignore)
                .unwrap();
        assert_eq!((g.m(), stats.loops_dropped), (1, 1));
        let err =
            parse_edgelist_with_stats("0 1\n1 1\n".as_bytes(), false, None, LoopPolicy::Reject)
                .unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn writes_zero_based_lines() {
        let g = parse("2 1\n0 1\n", false).unwrap();
        let mut buf = Vec::new();
        write_edgelist(&g, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "0 1\n1 2\n");
    }
}

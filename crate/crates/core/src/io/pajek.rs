//! Pajek `.net` networks: `*Vertices n`, optional `id "label"` lines, then
//! `*Edges` and/or `*Arcs` sections of `u v [weight ...]` lines. Ids are
//! one-based in the file and zero-based in memory.

use std::io::{BufRead, Write};

use super::LabeledGraph;
use crate::error::{Error, Result};
use crate::graph::{BuildStats, Graph, LoopPolicy};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    Preamble,
    Vertices,
    Edges,
    Arcs,
}

/// Parses a Pajek network, dropping self-loops.
///
/// Mixing `*Edges` and `*Arcs` yields a directed graph in which each edge
/// becomes a pair of reciprocal arcs.
pub fn parse_pajek<R: BufRead>(reader: R) -> Result<LabeledGraph> {
    parse_pajek_with_stats(reader, LoopPolicy::Ignore).map(|(g, _)| g)
}

pub fn parse_pajek_with_stats<R: BufRead>(
    reader: R,
    loops: LoopPolicy,
) -> Result<(LabeledGraph, BuildStats)> {
    let mut section = Section::Preamble;
    let mut n = 0usize;
    let mut labels: Option<Vec<String>> = None;
    let mut saw_arcs = false;
    // (u, v, is_edge, line number)
    let mut lines: Vec<(usize, usize, bool, usize)> = Vec::new();
    let mut last_line = 0;

    for (index, raw) in reader.lines().enumerate() {
        let raw = raw?;
        let line_no = index + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('%') {
            continue;
        }

        if line.starts_with('*') {
            let mut tokens = line.split_whitespace();
            let keyword = tokens.next().unwrap_or_default().to_ascii_lowercase();
            match keyword.as_str() {
                "*vertices" => {
                    if section != Section::Preamble {
                        return Err(Error::parse(line_no, "repeated *Vertices header"));
                    }
                    let count = tokens
                        .next()
                        .ok_or_else(|| Error::parse(line_no, "*Vertices needs a vertex count"))?;
                    n = count.parse().map_err(|_| {
                        Error::parse(line_no, format!("invalid vertex count {count:?}"))
                    })?;
                    section = Section::Vertices;
                }
                "*edges" | "*arcs" => {
                    if section == Section::Preamble {
                        return Err(Error::parse(line_no, "missing *Vertices header"));
                    }
                    section = if keyword == "*arcs" {
                        saw_arcs = true;
                        Section::Arcs
                    } else {
                        Section::Edges
                    };
                }
                _ => {
                    let name = line.split_whitespace().next().unwrap_or(line);
                    return Err(Error::parse(line_no, format!("unsupported section {name}")));
                }
            }
            continue;
        }

        match section {
            Section::Preamble => return Err(Error::parse(line_no, "missing *Vertices header")),
            Section::Vertices => {
                let (id, label) = parse_vertex_line(line, n, line_no)?;
                labels.get_or_insert_with(|| vec![String::new(); n])[id] = label;
            }
            Section::Edges | Section::Arcs => {
                let mut tokens = line.split_whitespace();
                let u = parse_id(tokens.next(), n, line_no)?;
                let v = parse_id(tokens.next(), n, line_no)?;
                lines.push((u, v, section == Section::Edges, line_no));
            }
        }
    }

    if section == Section::Preamble {
        return Err(Error::parse(last_line.max(1), "missing *Vertices header"));
    }

    let directed = saw_arcs;
    let mut pairs = Vec::with_capacity(lines.len());
    let mut origin = Vec::with_capacity(lines.len());
    for &(u, v, is_edge, line_no) in &lines {
        pairs.push((u, v));
        origin.push(line_no);
        if directed && is_edge {
            pairs.push((v, u));
            origin.push(line_no);
        }
    }
    let (graph, mut stats) =
        Graph::from_lines_with_stats(n, &pairs, directed, loops).map_err(|e| match e {
            Error::SelfLoop { index, v } => {
                Error::parse(origin[index], format!("self-loop on vertex {}", v + 1))
            }
            other => other,
        })?;
    if directed {
        // An edge loop was pushed twice above; report it once.
        let doubled = lines.iter().filter(|&&(u, v, e, _)| e && u == v).count();
        stats.loops_dropped -= doubled;
    }
    Ok((LabeledGraph { graph, labels }, stats))
}

fn parse_id(token: Option<&str>, n: usize, line_no: usize) -> Result<usize> {
    let token = token.ok_or_else(|| Error::parse(line_no, "expected two vertex ids"))?;
    let id: usize = token
        .parse()
        .map_err(|_| Error::parse(line_no, format!("invalid vertex id {token:?}")))?;
    if id == 0 || id > n {
        return Err(Error::parse(
            line_no,
            format!("vertex id {id} out of range 1..={n}"),
        ));
    }
    Ok(id - 1)
}

fn parse_vertex_line(line: &str, n: usize, line_no: usize) -> Result<(usize, String)> {
    let (id_token, rest) = match line.find(char::is_whitespace) {
        Some(at) => (&line[..at], line[at..].trim_start()),
        None => (line, ""),
    };
    let id = parse_id(Some(id_token), n, line_no)?;
    let label = if let Some(quoted) = rest.strip_prefix('"') {
        let end = quoted
            .find('"')
            .ok_or_else(|| Error::parse(line_no, "unterminated vertex label"))?;
        quoted[..end].to_string()
    } else {
        rest.split_whitespace()
            .next()
            .unwrap_or_default()
            .to_string()
    };
    Ok((id, label))
}

/// Writes a Pajek network. Labels cannot carry `"` or line breaks in this
/// format; those characters are replaced.
pub fn write_pajek<W: Write>(lg: &LabeledGraph, mut out: W) -> Result<()> {
    let g = &lg.graph;
    writeln!(out, "*Vertices {}", g.n())?;
    if let Some(labels) = &lg.labels {
        for (v, label) in labels.iter().enumerate() {
            let clean: String = label
                .chars()
                .map(|c| match c {
                    '"' => '\'',
                    '\n' | '\r' => ' ',
                    c => c,
                })
                .collect();
            writeln!(out, "{} \"{}\"", v + 1, clean)?;
        }
    }
    writeln!(out, "{}", if g.is_directed() { "*Arcs" } else { "*Edges" })?;
    for (u, v) in g.lines() {
        writeln!(out, "{} {}", u + 1, v + 1)?;
    }
    out.flush()?;
    Ok(())
}

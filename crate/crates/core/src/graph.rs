//! Immutable compact adjacency structure.
//!
//! Vertices are dense zero-based indices. Neighbor lists live in one flat
//! table per direction (compressed sparse rows), sorted ascending and free of
//! duplicates, so neighbor iteration costs time proportional to the degree and
//! degree queries are a subtraction of two offsets.

use std::fmt;
use std::iter::FusedIterator;
use std::slice;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Dense zero-based vertex index.
pub type VertexId = u32;

/// Which notion of degree determines the type of core.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DegreeMode {
    Undirected,
    In,
    Out,
    /// In-degree plus out-degree. A reciprocal pair of arcs counts twice.
    InOut,
}

impl DegreeMode {
    pub const ALL: [DegreeMode; 4] = [
        DegreeMode::Undirected,
        DegreeMode::In,
        DegreeMode::Out,
        DegreeMode::InOut,
    ];

    pub const DIRECTED: [DegreeMode; 3] = [DegreeMode::In, DegreeMode::Out, DegreeMode::InOut];

    /// True for the modes that only make sense on directed graphs.
    pub fn is_directed(self) -> bool {
        self != DegreeMode::Undirected
    }

    /// The mode used when none is requested explicitly.
    pub fn default_for(directed: bool) -> Self {
        if directed {
            DegreeMode::InOut
        } else {
            DegreeMode::Undirected
        }
    }

    pub(crate) fn check(self, directed: bool) -> Result<()> {
        if self.is_directed() == directed {
            Ok(())
        } else {
            Err(Error::ModeMismatch {
                mode: self,
                directed,
            })
        }
    }
}

impl fmt::Display for DegreeMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DegreeMode::Undirected => "undirected",
            DegreeMode::In => "in",
            DegreeMode::Out => "out",
            DegreeMode::InOut => "inout",
        })
    }
}

impl FromStr for DegreeMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "undirected" => Ok(DegreeMode::Undirected),
            "in" => Ok(DegreeMode::In),
            "out" => Ok(DegreeMode::Out),
            "inout" | "in+out" | "all" => Ok(DegreeMode::InOut),
            other => Err(format!("unknown degree mode {other:?}")),
        }
    }
}

/// What to do with a line whose endpoints coincide.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum LoopPolicy {
    Reject,
    #[default]
    Ignore,
}

/// Counts of input lines that did not make it into the simple graph.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BuildStats {
    pub loops_dropped: usize,
    pub duplicates_collapsed: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
struct Csr {
    offsets: Vec<usize>,
    targets: Vec<VertexId>,
}

impl Csr {
    fn row(&self, v: usize) -> &[VertexId] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    fn row_len(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    /// Groups `(source, target)` pairs by target; each row lists the sources
    /// in input order.
    fn group_by_target(n: usize, arcs: &[(VertexId, VertexId)]) -> Self {
        let mut offsets = vec![0usize; n + 1];
        for &(_, v) in arcs {
            offsets[v as usize + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut cursor = offsets[..n].to_vec();
        let mut targets = vec![0; arcs.len()];
        for &(u, v) in arcs {
            let slot = &mut cursor[v as usize];
            targets[*slot] = u;
            *slot += 1;
        }
        Csr { offsets, targets }
    }

    /// Row `v` of the result lists every `u` whose row contains `v`, in
    /// ascending order of `u`.
    fn transpose(&self, n: usize) -> Self {
        let mut offsets = vec![0usize; n + 1];
        for &v in &self.targets {
            offsets[v as usize + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut cursor = offsets[..n].to_vec();
        let mut targets = vec![0; self.targets.len()];
        for u in 0..n {
            for &v in self.row(u) {
                let slot = &mut cursor[v as usize];
                targets[*slot] = u as VertexId;
                *slot += 1;
            }
        }
        Csr { offsets, targets }
    }

    /// Removes repeated entries from sorted rows, compacting in place.
    /// Returns how many entries were dropped.
    fn dedup_sorted_rows(&mut self, n: usize) -> usize {
        let before = self.targets.len();
        let mut write = 0;
        let mut row_start = 0;
        for v in 0..n {
            let row_end = self.offsets[v + 1];
            self.offsets[v] = write;
            let mut last = None;
            for read in row_start..row_end {
                let t = self.targets[read];
                if last != Some(t) {
                    self.targets[write] = t;
                    write += 1;
                    last = Some(t);
                }
            }
            row_start = row_end;
        }
        self.offsets[n] = write;
        self.targets.truncate(write);
        self.targets.shrink_to_fit();
        before - write
    }
}

/// A simple graph: no self-loops, no parallel lines.
///
/// For undirected graphs every edge `{u, v}` is stored in both `u`'s and `v`'s
/// row. Directed graphs keep an out-row and an in-row per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    directed: bool,
    out: Csr,
    inc: Option<Csr>,
}

impl Graph {
    /// Builds a simple graph from a list of lines, collapsing duplicates.
    ///
    /// Runs in `O(n + m)`: rows are sorted with two counting-sort passes, not
    /// a comparison sort.
    pub fn from_lines(
        n: usize,
        lines: &[(usize, usize)],
        directed: bool,
        loops: LoopPolicy,
    ) -> Result<Self> {
        Self::from_lines_with_stats(n, lines, directed, loops).map(|(g, _)| g)
    }

    pub fn from_lines_with_stats(
        n: usize,
        lines: &[(usize, usize)],
        directed: bool,
        loops: LoopPolicy,
    ) -> Result<(Self, BuildStats)> {
        if n > u32::MAX as usize {
            return Err(Error::TooManyVertices(n));
        }
        let mut stats = BuildStats::default();
        let mut arcs = Vec::with_capacity(if directed {
            lines.len()
        } else {
            2 * lines.len()
        });
        for (index, &(u, v)) in lines.iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::EndpointOutOfRange { index, u, v, n });
            }
            if u == v {
                match loops {
                    LoopPolicy::Reject => return Err(Error::SelfLoop { index, v }),
                    LoopPolicy::Ignore => {
                        stats.loops_dropped += 1;
                        continue;
                    }
                }
            }
            arcs.push((u as VertexId, v as VertexId));
            if !directed {
                arcs.push((v as VertexId, u as VertexId));
            }
        }

        let mut out = Csr::group_by_target(n, &arcs).transpose(n);
        drop(arcs);
        let dropped = out.dedup_sorted_rows(n);
        let graph = if directed {
            stats.duplicates_collapsed = dropped;
            let inc = out.transpose(n);
            Graph {
                n,
                m: out.targets.len(),
                directed,
                out,
                inc: Some(inc),
            }
        } else {
            stats.duplicates_collapsed = dropped / 2;
            Graph {
                n,
                m: out.targets.len() / 2,
                directed,
                out,
                inc: None,
            }
        };
        Ok((graph, stats))
    }

    /// A graph on `n` vertices with no lines.
    pub fn empty(n: usize, directed: bool) -> Self {
        Graph::from_lines(n, &[], directed, LoopPolicy::Ignore).expect("no lines to reject")
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of lines: edges when undirected, arcs when directed.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    /// Ratio of present lines to the maximum possible for a simple graph of
    /// this size and directedness. Zero when fewer than two vertices.
    pub fn density(&self) -> f64 {
        if self.n < 2 {
            return 0.0;
        }
        let n = self.n as f64;
        let pairs = n * (n - 1.0);
        let max_lines = if self.directed { pairs } else { pairs / 2.0 };
        self.m as f64 / max_lines
    }

    /// Degree of `v` under `mode`.
    ///
    /// Panics if `v` is not a vertex of the graph.
    pub fn degree(&self, v: VertexId, mode: DegreeMode) -> Result<usize> {
        mode.check(self.directed)?;
        Ok(self.degree_unchecked(v as usize, mode))
    }

    /// Neighbors of `v` under `mode`, ascending; for [`DegreeMode::InOut`] the
    /// out-neighbors come first, then the in-neighbors.
    ///
    /// Panics if `v` is not a vertex of the graph.
    pub fn neighbors(&self, v: VertexId, mode: DegreeMode) -> Result<Neighbors<'_>> {
        mode.check(self.directed)?;
        Ok(self.neighbors_unchecked(v as usize, mode))
    }

    /// Degree without the mode check. The caller has already validated `mode`.
    #[inline]
    pub(crate) fn degree_unchecked(&self, v: usize, mode: DegreeMode) -> usize {
        match mode {
            DegreeMode::Undirected | DegreeMode::Out => self.out.row_len(v),
            DegreeMode::In => self.in_rows().row_len(v),
            DegreeMode::InOut => self.out.row_len(v) + self.in_rows().row_len(v),
        }
    }

    #[inline]
    pub(crate) fn neighbors_unchecked(&self, v: usize, mode: DegreeMode) -> Neighbors<'_> {
        let (first, second): (&[VertexId], &[VertexId]) = match mode {
            DegreeMode::Undirected | DegreeMode::Out => (self.out.row(v), &[]),
            DegreeMode::In => (self.in_rows().row(v), &[]),
            DegreeMode::InOut => (self.out.row(v), self.in_rows().row(v)),
        };
        Neighbors {
            first: first.iter(),
            second: second.iter(),
        }
    }

    fn in_rows(&self) -> &Csr {
        self.inc.as_ref().unwrap_or(&self.out)
    }

    /// Every line once, in ascending `(u, v)` order. Undirected edges are
    /// reported with `u < v`.
    pub fn lines(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        let directed = self.directed;
        (0..self.n).flat_map(move |u| {
            self.out
                .row(u)
                .iter()
                .map(move |&v| (u as VertexId, v))
                .filter(move |&(u, v)| directed || u < v)
        })
    }

    /// Subgraph induced by `keep`, which must be sorted ascending without
    /// repeats. Vertex `i` of the result is `keep[i]` of `self`.
    pub fn induced_subgraph(&self, keep: &[VertexId]) -> Graph {
        debug_assert!(keep.windows(2).all(|w| w[0] < w[1]));
        let mut relabel = vec![VertexId::MAX; self.n];
        for (new, &old) in keep.iter().enumerate() {
            relabel[old as usize] = new as VertexId;
        }
        let lines: Vec<(usize, usize)> = self
            .lines()
            .filter_map(|(u, v)| {
                let (a, b) = (relabel[u as usize], relabel[v as usize]);
                (a != VertexId::MAX && b != VertexId::MAX).then_some((a as usize, b as usize))
            })
            .collect();
        Graph::from_lines(keep.len(), &lines, self.directed, LoopPolicy::Reject)
            .expect("subgraph of a simple graph is simple")
    }
}

/// Iterator over the neighbors of one vertex.
#[derive(Debug, Clone)]
pub struct Neighbors<'a> {
    first: slice::Iter<'a, VertexId>,
    second: slice::Iter<'a, VertexId>,
}

impl Iterator for Neighbors<'_> {
    type Item = VertexId;

    #[inline]
    fn next(&mut self) -> Option<VertexId> {
        self.first.next().or_else(|| self.second.next()).copied()
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let len = self.first.len() + self.second.len();
        (len, Some(len))
    }
}

impl ExactSizeIterator for Neighbors<'_> {}
impl FusedIterator for Neighbors<'_> {}

//! Cores decomposition in `O(max(m, n))`.
//!
//! Vertices are kept in one array `vert`, bin-sorted by their current degree;
//! `pos` is its inverse and `bin[d]` marks where the run of degree-`d`
//! vertices starts. Taking vertices left to right fixes each one's core
//! number; lowering a neighbor's degree by one moves it one bin to the left
//! with a single swap against the first vertex of its bin.

use std::fmt;

use crate::error::Result;
use crate::graph::{DegreeMode, Graph, VertexId};

/// Core number of every vertex under one degree mode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreAssignment {
    core: Vec<usize>,
    mode: DegreeMode,
}

impl CoreAssignment {
    pub fn new(core: Vec<usize>, mode: DegreeMode) -> Self {
        CoreAssignment { core, mode }
    }

    pub fn mode(&self) -> DegreeMode {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.core.len()
    }

    pub fn is_empty(&self) -> bool {
        self.core.is_empty()
    }

    pub fn core(&self, v: VertexId) -> usize {
        self.core[v as usize]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.core
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.core
    }

    /// Order of the main core; zero for an empty graph.
    pub fn max_core(&self) -> usize {
        self.core.iter().copied().max().unwrap_or(0)
    }

    /// Vertices of the `k`-core, ascending.
    pub fn k_core_vertices(&self, k: usize) -> Vec<VertexId> {
        self.core
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c >= k)
            .map(|(v, _)| v as VertexId)
            .collect()
    }
}

/// Read-only snapshot of the working arrays, taken at the top of each
/// iteration of the main loop.
#[derive(Debug, Clone, Copy)]
pub struct PeelView<'a> {
    /// Index into `vert` of the vertex about to be processed.
    pub step: usize,
    /// Working degree; final core number for processed vertices.
    pub deg: &'a [usize],
    pub vert: &'a [VertexId],
    pub pos: &'a [usize],
    pub bin: &'a [usize],
    /// Maximum initial degree.
    pub md: usize,
}

impl PeelView<'_> {
    /// Checks the bookkeeping invariants of the main loop:
    /// `pos` and `vert` are mutually inverse, working degrees are sorted
    /// along `vert` from the current step on and never exceed the current
    /// degree before it, and every bin above the current degree starts at
    /// the first unprocessed vertex whose degree reaches it.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let n = self.vert.len();
        for (i, &v) in self.vert.iter().enumerate() {
            if self.pos[v as usize] != i {
                return Err(format!("pos[vert[{i}]] = {} != {i}", self.pos[v as usize]));
            }
        }
        if self.step >= n {
            return Ok(());
        }
        let degree_at = |i: usize| self.deg[self.vert[i] as usize];
        let current = degree_at(self.step);
        if let Some(i) = (0..self.step).find(|&i| degree_at(i) > current) {
            return Err(format!(
                "processed vertex at {i} has degree {} above current {current}",
                degree_at(i)
            ));
        }
        if let Some(i) = (self.step + 1..n).find(|&i| degree_at(i - 1) > degree_at(i)) {
            return Err(format!(
                "degrees decrease between positions {} and {i}",
                i - 1
            ));
        }
        let mut first = self.step;
        for d in current + 1..=self.md {
            while first < n && degree_at(first) < d {
                first += 1;
            }
            if self.bin[d] != first {
                return Err(format!(
                    "bin[{d}] = {} but first vertex of degree >= {d} is at {first}",
                    self.bin[d]
                ));
            }
        }
        Ok(())
    }
}

/// Computes the core number of every vertex.
pub fn core_decompose(g: &Graph, mode: DegreeMode) -> Result<CoreAssignment> {
    core_decompose_observed(g, mode, |_| {}).map(|(a, _)| a)
}

/// Like [`core_decompose`], also returning the processing order of the
/// vertices. Core numbers are non-decreasing along that order, so it is a
/// degeneracy ordering.
pub fn core_decompose_ordered(
    g: &Graph,
    mode: DegreeMode,
) -> Result<(CoreAssignment, Vec<VertexId>)> {
    core_decompose_observed(g, mode, |_| {})
}

/// Runs the decomposition, handing `observe` a view of the working arrays at
/// the top of every main-loop iteration.
pub fn core_decompose_observed<F>(
    g: &Graph,
    mode: DegreeMode,
    mut observe: F,
) -> Result<(CoreAssignment, Vec<VertexId>)>
where
    F: FnMut(&PeelView<'_>),
{
    mode.check(g.is_directed())?;
    let n = g.n();
    // Removing v lowers the degree of the vertices whose degree counts v.
    let affected = match mode {
        DegreeMode::In => DegreeMode::Out,
        DegreeMode::Out => DegreeMode::In,
        other => other,
    };

    let mut deg = vec![0usize; n];
    let mut md = 0;
    for (v, d) in deg.iter_mut().enumerate() {
        *d = g.degree_unchecked(v, mode);
        md = md.max(*d);
    }

    // In+out degree is at most 2n - 2.
    let bins = match mode {
        DegreeMode::InOut => (2 * n).saturating_sub(1).max(md + 1),
        _ => md + 1,
    };
    let mut bin = vec![0usize; bins];
    for &d in &deg {
        bin[d] += 1;
    }
    let mut start = 0;
    for slot in &mut bin[..=md] {
        let num = *slot;
        *slot = start;
        start += num;
    }

    let mut pos = vec![0usize; n];
    let mut vert: Vec<VertexId> = vec![0; n];
    for v in 0..n {
        let d = deg[v];
        pos[v] = bin[d];
        vert[pos[v]] = v as VertexId;
        bin[d] += 1;
    }
    for d in (1..=md).rev() {
        bin[d] = bin[d - 1];
    }
    bin[0] = 0;

    for i in 0..n {
        observe(&PeelView {
            step: i,
            deg: &deg,
            vert: &vert,
            pos: &pos,
            bin: &bin,
            md,
        });
        let v = vert[i] as usize;
        let dv = deg[v];
        for u in g.neighbors_unchecked(v, affected) {
            let u = u as usize;
            let du = deg[u];
            if du > dv {
                let pu = pos[u];
                let pw = bin[du];
                let w = vert[pw] as usize;
                if u != w {
                    pos[u] = pw;
                    vert[pu] = w as VertexId;
                    pos[w] = pu;
                    vert[pw] = u as VertexId;
                }
                bin[du] += 1;
                deg[u] = du - 1;
            }
        }
    }

    Ok((CoreAssignment::new(deg, mode), vert))
}

/// The induced subgraph on the `k`-core, with a map from its vertex ids back
/// to ids of `g`.
pub fn k_core_subgraph(g: &Graph, assignment: &CoreAssignment, k: usize) -> (Graph, Vec<VertexId>) {
    let keep = assignment.k_core_vertices(k);
    (g.induced_subgraph(&keep), keep)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SummaryRow {
    pub k: usize,
    /// Vertices whose core number is exactly `k`.
    pub count: usize,
    pub percent: f64,
    /// Size of the `k`-core.
    pub cumulative: usize,
    pub cumulative_percent: f64,
}

/// Vertex counts per core number and the resulting `k`-core sizes, from the
/// main core down. Only core numbers that occur are listed.
#[derive(Debug, Clone, PartialEq)]
pub struct CoreSummary {
    pub n: usize,
    pub rows: Vec<SummaryRow>,
}

pub fn summarize(assignment: &CoreAssignment) -> CoreSummary {
    let n = assignment.len();
    let mut counts = vec![0usize; assignment.max_core() + 1];
    for &c in assignment.as_slice() {
        counts[c] += 1;
    }
    let pct = |x: usize| {
        if n == 0 {
            0.0
        } else {
            x as f64 * 100.0 / n as f64
        }
    };
    let mut cumulative = 0;
    let rows = counts
        .iter()
        .enumerate()
        .rev()
        .filter(|&(_, &count)| count > 0)
        .map(|(k, &count)| {
            cumulative += count;
            SummaryRow {
                k,
                count,
                percent: pct(count),
                cumulative,
                cumulative_percent: pct(cumulative),
            }
        })
        .collect();
    CoreSummary { n, rows }
}

impl fmt::Display for CoreSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:>6} | {:>20} | {:>20}",
            "", "core number = k", "size of k-core"
        )?;
        writeln!(
            f,
            "{:>6} | {:>10}{:>10} | {:>10}{:>10}",
            "k", "#", "%", "#", "%"
        )?;
        for row in &self.rows {
            writeln!(
                f,
                "{:>6} | {:>10}{:>10.3} | {:>10}{:>10.3}",
                row.k, row.count, row.percent, row.cumulative, row.cumulative_percent
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::LoopPolicy;

    fn undirected(n: usize, lines: &[(usize, usize)]) -> Graph {
        Graph::from_lines(n, lines, false, LoopPolicy::Reject).unwrap()
    }

    fn cores(g: &Graph, mode: DegreeMode) -> Vec<usize> {
        core_decompose(g, mode).unwrap().into_vec()
    }

    fn k4_pendant() -> Graph {
        undirected(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)])
    }

    #[test]
    fn small_undirected() {
        assert_eq!(
            cores(
                &undirected(3, &[(0, 1), (1, 2), (0, 2)]),
                DegreeMode::Undirected
            ),
            [2, 2, 2]
        );
        assert_eq!(
            cores(&undirected(3, &[(0, 1), (1, 2)]), DegreeMode::Undirected),
            [1, 1, 1]
        );
        assert_eq!(
            cores(&k4_pendant(), DegreeMode::Undirected),
            [3, 3, 3, 3, 1]
        );
        assert_eq!(
            cores(&Graph::empty(5, false), DegreeMode::Undirected),
            [0; 5]
        );
        assert!(cores(&Graph::empty(0, false), DegreeMode::Undirected).is_empty());
    }

    #[test]
    fn directed_cycle() {
        let g = Graph::from_lines(3, &[(0, 1), (1, 2), (2, 0)], true, LoopPolicy::Reject).unwrap();
        assert_eq!(cores(&g, DegreeMode::In), [1, 1, 1]);
        assert_eq!(cores(&g, DegreeMode::Out), [1, 1, 1]);
        assert_eq!(cores(&g, DegreeMode::InOut), [2, 2, 2]);
    }

    #[test]
    fn in_star_peels_from_the_sources() {
        // In-degrees 0, 0, 2; once 0 and 1 go, vertex 2 has no in-arcs left.
        let g = Graph::from_lines(3, &[(0, 2), (1, 2)], true, LoopPolicy::Reject).unwrap();
        assert_eq!(cores(&g, DegreeMode::In), [0, 0, 0]);
        assert_eq!(cores(&g, DegreeMode::Out), [0, 0, 0]);
        assert_eq!(cores(&g, DegreeMode::InOut), [1, 1, 1]);
    }

    #[test]
    fn complete_digraph_uses_the_full_bin_range() {
        let n = 6;
        let lines: Vec<_> = (0..n)
            .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
            .collect();
        let g = Graph::from_lines(n, &lines, true, LoopPolicy::Reject).unwrap();
        assert_eq!(cores(&g, DegreeMode::InOut), vec![2 * n - 2; n]);
        assert_eq!(cores(&g, DegreeMode::In), vec![n - 1; n]);
    }

    #[test]
    fn mode_mismatch_is_a_usage_error() {
        assert!(core_decompose(&k4_pendant(), DegreeMode::In)
            .unwrap_err()
            .is_usage());
        let d = Graph::empty(2, true);
        assert!(core_decompose(&d, DegreeMode::Undirected).is_err());
    }

    #[test]
    fn disconnected_core() {
        let g = undirected(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
        let a = core_decompose(&g, DegreeMode::Undirected).unwrap();
        assert_eq!(a.as_slice(), [2; 6]);
        let (sub, map) = k_core_subgraph(&g, &a, 2);
        assert_eq!((sub.n(), sub.m()), (6, 6));
        assert_eq!(map, [0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn k_core_vertices_and_subgraph() {
        let g = k4_pendant();
        let a = core_decompose(&g, DegreeMode::Undirected).unwrap();
        assert_eq!(a.k_core_vertices(3), [0, 1, 2, 3]);
        assert_eq!(a.k_core_vertices(0).len(), 5);
        assert!(a.k_core_vertices(4).is_empty());

        let (k4, map) = k_core_subgraph(&g, &a, 3);
        assert_eq!((k4.n(), k4.m()), (4, 6));
        assert_eq!(map, [0, 1, 2, 3]);

        let (all, map) = k_core_subgraph(&g, &a, 0);
        assert_eq!(all, g);
        assert_eq!(map, [0, 1, 2, 3, 4]);

        let (none, map) = k_core_subgraph(&g, &a, 9);
        assert_eq!((none.n(), none.m(), map.len()), (0, 0, 0));
    }

    #[test]
    fn summary_rows() {
        let s = summarize(&CoreAssignment::new(vec![2, 2, 2], DegreeMode::Undirected));
        assert_eq!(
            s.rows,
            [SummaryRow {
                k: 2,
                count: 3,
                percent: 100.0,
                cumulative: 3,
                cumulative_percent: 100.0
            }]
        );

        let s = summarize(&core_decompose(&k4_pendant(), DegreeMode::Undirected).unwrap());
        assert_eq!(
            s.rows,
            [
                SummaryRow {
                    k: 3,
                    count: 4,
                    percent: 80.0,
                    cumulative: 4,
                    cumulative_percent: 80.0
                },
                SummaryRow {
                    k: 1,
                    count: 1,
                    percent: 20.0,
                    cumulative: 5,
                    cumulative_percent: 100.0
                },
            ]
        );
        let text = s.to_string();
        assert!(
            text.contains("     3 |          4    80.000 |          4    80.000"),
            "{text}"
        );

        assert!(
            summarize(&CoreAssignment::new(vec![], DegreeMode::Undirected))
                .rows
                .is_empty()
        );
    }

    #[test]
    fn invariants_hold_each_step() {
        let g = k4_pendant();
        let mut steps = 0;
        let (a, order) = core_decompose_observed(&g, DegreeMode::Undirected, |view| {
            view.check_invariants().unwrap();
            steps += 1;
        })
        .unwrap();
        assert_eq!(steps, 5);
        assert_eq!(order[0], 4);
        let along: Vec<_> = order.iter().map(|&v| a.core(v)).collect();
        assert!(along.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn ties_scatter_in_vertex_order() {
        let g = Graph::empty(4, false);
        let (_, order) = core_decompose_ordered(&g, DegreeMode::Undirected).unwrap();
        assert_eq!(order, [0, 1, 2, 3]);
    }
}

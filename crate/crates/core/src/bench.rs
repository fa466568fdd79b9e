//! Scaling benchmark on seeded uniform random graphs.

use std::fmt;
use std::io::Write;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::decompose::core_decompose;
use crate::error::Result;
use crate::graph::{DegreeMode, Graph, LoopPolicy};

pub const DEFAULT_SEED: u64 = 0x5eed_c0de;

/// Uniform random simple undirected graph with `m` edges, sampled with
/// rejection of loops and repeated pairs. `m` is capped at `n(n-1)/2`.
pub fn random_graph(n: usize, m: usize, seed: u64) -> Graph {
    let max_edges = n.saturating_mul(n.saturating_sub(1)) / 2;
    let m = m.min(max_edges);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut keys: Vec<u64> = Vec::with_capacity(m);
    while keys.len() < m {
        let missing = m - keys.len();
        let mut drawn = 0;
        while drawn < missing {
            let u = rng.gen_range(0..n as u64);
            let v = rng.gen_range(0..n as u64);
            if u != v {
                keys.push(u.min(v) * n as u64 + u.max(v));
                drawn += 1;
            }
        }
        keys.sort_unstable();
        keys.dedup();
    }
    let lines: Vec<(usize, usize)> = keys
        .iter()
        .map(|&k| ((k / n as u64) as usize, (k % n as u64) as usize))
        .collect();
    Graph::from_lines(n, &lines, false, LoopPolicy::Reject).expect("sampled lines are simple")
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub seed: u64,
    /// Vertex count for the ladder over `m`.
    pub n: usize,
    pub m_ladder: Vec<usize>,
    /// Vertex counts for the ladder at fixed average degree.
    pub n_ladder: Vec<usize>,
    pub average_degree: usize,
    /// Each size is timed this many times; the fastest run is reported.
    pub repeats: usize,
}

impl BenchConfig {
    /// `m` doubling from `5n` to `40n` at fixed `n`, and `n` doubling from
    /// `n/8` to `2n` (plus an empty graph) at average degree 10.
    pub fn for_vertices(n: usize) -> Self {
        BenchConfig {
            seed: DEFAULT_SEED,
            n,
            m_ladder: vec![5 * n, 10 * n, 20 * n, 40 * n],
            n_ladder: vec![0, n / 8, n / 4, n / 2, n, 2 * n],
            average_degree: 10,
            repeats: 3,
        }
    }
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig::for_vertices(100_000)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenchPoint {
    pub series: &'static str,
    pub n: usize,
    pub m: usize,
    pub seconds: f64,
    /// Time relative to the previous non-empty size in the same series.
    pub ratio: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub points: Vec<BenchPoint>,
}

impl BenchReport {
    pub fn series<'a>(&'a self, name: &'a str) -> impl Iterator<Item = &'a BenchPoint> + 'a {
        self.points.iter().filter(move |p| p.series == name)
    }

    pub fn write_csv<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "series,n,m,seconds,ratio")?;
        for p in &self.points {
            let ratio = p.ratio.map(|r| format!("{r:.4}")).unwrap_or_default();
            writeln!(
                out,
                "{},{},{},{:.9},{}",
                p.series, p.n, p.m, p.seconds, ratio
            )?;
        }
        out.flush()?;
        Ok(())
    }
}

impl fmt::Display for BenchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:<10}{:>12}{:>12}{:>14}{:>10}",
            "series", "n", "m", "seconds", "ratio"
        )?;
        for p in &self.points {
            let ratio = p
                .ratio
                .map(|r| format!("{r:.2}"))
                .unwrap_or_else(|| "-".into());
            writeln!(
                f,
                "{:<10}{:>12}{:>12}{:>14.6}{:>10}",
                p.series, p.n, p.m, p.seconds, ratio
            )?;
        }
        Ok(())
    }
}

fn time_decomposition(g: &Graph, repeats: usize) -> f64 {
    (0..repeats.max(1))
        .map(|_| {
            let start = Instant::now();
            let cores = core_decompose(g, DegreeMode::Undirected).expect("undirected graph");
            let elapsed = start.elapsed().as_secs_f64();
            std::hint::black_box(cores);
            elapsed
        })
        .fold(f64::INFINITY, f64::min)
}

fn run_series(
    series: &'static str,
    sizes: impl Iterator<Item = (usize, usize)>,
    config: &BenchConfig,
    points: &mut Vec<BenchPoint>,
) {
    let mut previous: Option<f64> = None;
    for (i, (n, m)) in sizes.enumerate() {
        let g = random_graph(n, m, config.seed.wrapping_add(i as u64));
        let seconds = time_decomposition(&g, config.repeats);
        let ratio = previous.map(|p| seconds / p);
        if g.m() > 0 && seconds > 0.0 {
            previous = Some(seconds);
        }
        points.push(BenchPoint {
            series,
            n: g.n(),
            m: g.m(),
            seconds,
            ratio,
        });
    }
}

pub fn run_bench(config: &BenchConfig) -> BenchReport {
    let mut points = Vec::new();
    run_series(
        "m-ladder",
        config.m_ladder.iter().map(|&m| (config.n, m)),
        config,
        &mut points,
    );
    run_series(
        "n-ladder",
        config
            .n_ladder
            .iter()
            .map(|&n| (n, n * config.average_degree / 2)),
        config,
        &mut points,
    );
    BenchReport { points }
}

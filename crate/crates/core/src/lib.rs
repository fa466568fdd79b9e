//! Cores decomposition of undirected and directed networks in `O(m)`.
//!
//! The `k`-core of a graph is its largest induced subgraph in which every
//! vertex has degree at least `k`; the core number of a vertex is the largest
//! `k` whose core contains it. [`core_decompose`] computes all core numbers
//! with a bin-sorted peeling pass, for plain degree on undirected graphs and
//! for in-, out- and in+out-degree on directed ones.
//!
//! ```
//! use kcore::{core_decompose, DegreeMode, Graph, LoopPolicy};
//!
//! // K4 with a pendant vertex.
//! let lines = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)];
//! let g = Graph::from_lines(5, &lines, false, LoopPolicy::Reject).unwrap();
//! let cores = core_decompose(&g, DegreeMode::Undirected).unwrap();
//! assert_eq!(cores.as_slice(), [3, 3, 3, 3, 1]);
//! ```

pub mod bench;
pub mod cli;
pub mod decompose;
pub mod error;
pub mod graph;
pub mod io;
pub mod oracle;

pub use decompose::{
    core_decompose, core_decompose_observed, core_decompose_ordered, k_core_subgraph, summarize,
    CoreAssignment, CoreSummary, PeelView, SummaryRow,
};
pub use error::{Error, Result};
pub use graph::{BuildStats, DegreeMode, Graph, LoopPolicy, Neighbors, VertexId};
pub use io::LabeledGraph;

//! Readers and writers for network and partition files.

mod clu;
mod edgelist;
mod pajek;
mod wordgraph;

pub use clu::write_clu;
pub use edgelist::{parse_edgelist, parse_edgelist_with_stats, write_edgelist};
pub use pajek::{parse_pajek, parse_pajek_with_stats, write_pajek};
pub use wordgraph::{read_words, word_graph, MAX_WORD_LEN, MIN_WORD_LEN};

use crate::graph::Graph;

/// A graph with optional per-vertex text labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    /// One label per vertex when present.
    pub labels: Option<Vec<String>>,
}

impl LabeledGraph {
    /// Panics unless `labels` has one entry per vertex. A graph without
    /// vertices never carries labels.
    pub fn new(graph: Graph, labels: Option<Vec<String>>) -> Self {
        if let Some(labels) = &labels {
            assert_eq!(labels.len(), graph.n(), "one label per vertex");
        }
        let labels = labels.filter(|l| !l.is_empty());
        LabeledGraph { graph, labels }
    }

    pub fn unlabeled(graph: Graph) -> Self {
        LabeledGraph {
            graph,
            labels: None,
        }
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }
}

impl From<Graph> for LabeledGraph {
    fn from(graph: Graph) -> Self {
        LabeledGraph::unlabeled(graph)
    }
}

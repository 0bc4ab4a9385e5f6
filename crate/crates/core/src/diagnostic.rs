//! Reproducer bundles for internal-consistency failures.
//!
//! Any branch that a correct construction can never reach produces one of
//! these instead of silently continuing. Each bundle serializes to JSON and
//! holds enough to rerun the failing case.

use serde::{Deserialize, Serialize};

use crate::format::write_graph6;
use crate::graph::{EdgeId, Graph, Orientation};
use crate::transfer::ChainDecomposition;
use crate::zero_forcing::ForcingProcess;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagnosticBundle {
    pub kind: String,
    pub detail: String,
    pub graph6: Option<String>,
    /// Initial set of the line-graph process, as endpoint pairs in `G`.
    pub z_edges: Vec<(usize, usize)>,
    /// Forcing process on the line graph.
    pub process: Option<ForcingProcess>,
    /// Chains as lists of edge indices of `G`.
    pub chains: Vec<Vec<usize>>,
    pub partial_orientation: Vec<(usize, usize)>,
}

impl DiagnosticBundle {
    pub fn new(kind: &str, detail: impl Into<String>) -> Self {
        DiagnosticBundle {
            kind: kind.to_string(),
            detail: detail.into(),
            ..Default::default()
        }
    }

    pub fn boxed(self) -> Box<Self> {
        Box::new(self)
    }

    pub(crate) fn fill_graph(&mut self, g: &Graph) {
        if self.graph6.is_none() {
            self.graph6 = write_graph6(g).ok();
        }
    }

    pub(crate) fn fill_process(&mut self, g: &Graph, z: &[EdgeId], process: &ForcingProcess) {
        if self.z_edges.is_empty() {
            self.z_edges = z.iter().map(|&e| g.endpoints(e)).collect();
        }
        if self.process.is_none() {
            self.process = Some(process.clone());
        }
    }

    pub(crate) fn fill_chains(&mut self, cd: &ChainDecomposition) {
        if self.chains.is_empty() {
            self.chains = cd
                .chains
                .iter()
                .map(|c| c.iter().map(|e| e.index()).collect())
                .collect();
        }
    }

    pub(crate) fn fill_partial(&mut self, h: &Orientation<'_>) {
        if self.partial_orientation.is_empty() {
            self.partial_orientation = h.arc_list();
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("bundle serializes")
    }
}

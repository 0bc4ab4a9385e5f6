//! JSON witness documents for transfer runs, and an independent re-check.
//!
//! The verifier trusts nothing in the document except the graph: every
//! object is rebuilt or re-validated from the graph6 string.

use serde::{Deserialize, Serialize};

use crate::brushing::{verify_brush_witness, BrushWitness};
use crate::error::{Error, Result};
use crate::format::{parse_graph6, write_graph6};
use crate::graph::{line_graph, EdgeId, Graph, Orientation, VertexOrder};
use crate::transfer::{
    build_chains, orient_from_chains, structural_bullet_failures, TransferChecks, TransferResult,
};
use crate::zero_forcing::{is_zero_forcing, ForcingProcess};

pub const WITNESS_SCHEMA: &str = "zfbrush-witness/1";

/// Serialized form of a [`TransferResult`]. Field order is part of the
/// format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDocument {
    pub schema: String,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    /// Endpoints of edge `i` of G. Every index below refers to this list.
    pub edges: Vec<(usize, usize)>,
    pub k: usize,
    /// Initial set of the line-graph process as endpoint pairs, in the order
    /// of `line_graph_process.initial`.
    pub z_edges: Vec<(usize, usize)>,
    /// Process on L(G); line-graph vertex `i` is edge `i` of G.
    pub line_graph_process: ForcingProcess,
    /// Chains as edge indices of G.
    pub chains: Vec<Vec<usize>>,
    pub split: usize,
    pub partial_orientation: Vec<(usize, usize)>,
    pub topological_order: Vec<usize>,
    pub full_orientation: Vec<(usize, usize)>,
    pub paths: Vec<Vec<usize>>,
    pub y: Vec<usize>,
    pub y_process: ForcingProcess,
    pub checks: TransferChecks,
}

impl WitnessDocument {
    pub fn from_result(r: &TransferResult<'_>) -> Result<Self> {
        let g = r.graph;
        Ok(WitnessDocument {
            schema: WITNESS_SCHEMA.to_string(),
            graph6: write_graph6(g)?,
            n: g.n(),
            m: g.m(),
            edges: g.edges().to_vec(),
            k: r.k(),
            z_edges: r.z_edges.iter().map(|&e| g.endpoints(e)).collect(),
            line_graph_process: r.process.clone(),
            chains: r
                .chains
                .chains
                .iter()
                .map(|c| c.iter().map(|e| e.index()).collect())
                .collect(),
            split: r.chains.split,
            partial_orientation: r.partial.arc_list(),
            topological_order: r.order.0.clone(),
            full_orientation: r.full.arc_list(),
            paths: r.brush_witness.paths.clone(),
            y: r.y.clone(),
            y_process: r.y_process.clone(),
            checks: r.checks,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("witness serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: WitnessDocument = serde_json::from_str(text)?;
        if doc.schema != WITNESS_SCHEMA {
            return Err(Error::MalformedWitness(format!(
                "unknown schema {:?}",
                doc.schema
            )));
        }
        Ok(doc)
    }
}

/// One failed clause of a witness re-check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub clause: &'static str,
    pub detail: String,
}

/// Re-derives and re-validates every part of a witness document against its
/// graph. Returns all failed clauses; empty means the witness holds.
pub fn verify_document(doc: &WitnessDocument) -> Vec<Failure> {
    let mut out = Vec::new();
    let mut fail = |clause: &'static str, detail: String| out.push(Failure { clause, detail });

    let encoded = match parse_graph6(doc.graph6.as_bytes()) {
        Ok(g) => g,
        Err(e) => {
            fail("graph", e.to_string());
            return out;
        }
    };
    let g = match Graph::new(doc.n, doc.edges.iter().copied()) {
        Ok(g) => g,
        Err(e) => {
            fail("graph", e.to_string());
            return out;
        }
    };
    let same_edges = g.m() == encoded.m() && g.edges().iter().all(|&(u, v)| encoded.has_edge(u, v));
    if g.n() != encoded.n() || g.m() != doc.m || !same_edges {
        fail("graph", "edge list does not match the graph6 string".into());
        return out;
    }
    let lg = match line_graph(&g) {
        Ok(lg) => lg,
        Err(e) => {
            fail("graph", e.to_string());
            return out;
        }
    };
    if let Err(v) = doc.line_graph_process.validate(&lg.graph) {
        fail("line graph process", v.to_string());
        return out;
    }
    let k = doc.line_graph_process.initial.len();
    if doc.k != k {
        fail(
            "k",
            format!(
                "declared k = {} but the process starts from {k} vertices",
                doc.k
            ),
        );
    }
    let z: Vec<EdgeId> = doc
        .line_graph_process
        .initial
        .iter()
        .map(|&v| lg.edge_of[v])
        .collect();
    let z_pairs: Vec<(usize, usize)> = z.iter().map(|&e| g.endpoints(e)).collect();
    if z_pairs != doc.z_edges {
        fail(
            "z edges",
            "z_edges does not match the initial set of the process".into(),
        );
    }

    match build_chains(&lg, &doc.line_graph_process) {
        Ok(cd) => {
            let chains: Vec<Vec<usize>> = cd
                .chains
                .iter()
                .map(|c| c.iter().map(|e| e.index()).collect())
                .collect();
            if chains != doc.chains || cd.split != doc.split {
                fail("chains", "chains differ from those of the process".into());
            }
            match orient_from_chains(&g, &cd) {
                Ok(h) if h.arc_list() == doc.partial_orientation => {}
                Ok(_) => fail("partial orientation", "differs from the chain rules".into()),
                Err(e) => fail("partial orientation", e.to_string()),
            }
        }
        Err(e) => fail("chains", e.to_string()),
    }

    let partial = Orientation::from_arcs(&g, doc.partial_orientation.iter().copied());
    let full = Orientation::from_arcs(&g, doc.full_orientation.iter().copied());
    let (partial, full) = match (partial, full) {
        (Ok(p), Ok(f)) => (p, f),
        (Err(e), _) | (_, Err(e)) => {
            fail("orientation", e.to_string());
            return out;
        }
    };
    let order = VertexOrder(doc.topological_order.clone());
    if !partial.respects(&order) {
        fail(
            "topological order",
            "does not respect the partial orientation".into(),
        );
    }
    if !full.is_full() {
        fail(
            "extension",
            format!("{} edge(s) left unoriented", full.unoriented_count()),
        );
    }
    if !partial.is_contained_in(&full) {
        fail(
            "extension",
            "full orientation changes a direction of the partial one".into(),
        );
    }
    if !full.respects(&order) {
        fail(
            "topological order",
            "does not respect the full orientation".into(),
        );
    }

    let witness = BrushWitness {
        orientation: full.clone(),
        paths: doc.paths.clone(),
    };
    if let Err(violations) = verify_brush_witness(&g, &witness) {
        for v in violations {
            fail(v.clause(), v.to_string());
        }
    }
    if doc.paths.len() != k {
        fail(
            "path count",
            format!("{} paths for k = {k}", doc.paths.len()),
        );
    }
    if full.is_full() && full.is_acyclic() {
        let bad = structural_bullet_failures(&full, &z);
        if !bad.is_empty() {
            fail(
                "structural bullets",
                format!("violated at vertices {bad:?}"),
            );
        }
    }

    if doc.y.len() > k {
        fail("y bound", format!("|Y| = {} > k = {k}", doc.y.len()));
    }
    if doc.y_process.initial != doc.y {
        fail("y process", "initial set differs from y".into());
    }
    if let Err(v) = doc.y_process.validate(&g) {
        fail("y process", v.to_string());
    }
    if doc.y.iter().any(|&v| v >= g.n()) || !is_zero_forcing(&g, &doc.y) {
        fail(
            "y forcing",
            "closure of y is not the whole vertex set".into(),
        );
    }
    if !doc.checks.all() {
        fail("recorded checks", "document records a failed check".into());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::families;
    use crate::transfer::transfer;

    #[test]
    fn round_trip_and_verify() {
        let g = families::complete_bipartite(2, 3);
        let r = transfer(&g, Budget::unlimited()).unwrap();
        let doc = WitnessDocument::from_result(&r).unwrap();
        let back = WitnessDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(back, doc);
        assert_eq!(verify_document(&back), vec![]);
    }

    #[test]
    fn tampered_path_is_caught() {
        let g = families::cycle(5);
        let r = transfer(&g, Budget::unlimited()).unwrap();
        let mut doc = WitnessDocument::from_result(&r).unwrap();
        let longest = doc.paths.iter_mut().max_by_key(|p| p.len()).unwrap();
        longest.pop();
        let clauses: Vec<_> = verify_document(&doc)
            .into_iter()
            .map(|f| f.clause)
            .collect();
        assert!(clauses.contains(&"uncovered edge"), "{clauses:?}");
    }

    #[test]
    fn tampered_y_is_caught() {
        let g = families::path(5);
        let r = transfer(&g, Budget::unlimited()).unwrap();
        let mut doc =
            WitnessDocument::from_json(&WitnessDocument::from_result(&r).unwrap().to_json())
                .unwrap();
        doc.y.clear();
        let clauses: Vec<_> = verify_document(&doc)
            .into_iter()
            .map(|f| f.clause)
            .collect();
        assert!(clauses.contains(&"y forcing"));
        assert!(clauses.contains(&"y process"));
    }

    #[test]
    fn edge_list_must_match_graph6() {
        let g = families::cycle(4);
        let r = transfer(&g, Budget::unlimited()).unwrap();
        let mut doc = WitnessDocument::from_result(&r).unwrap();
        doc.edges[0] = (0, 2);
        let clauses: Vec<_> = verify_document(&doc)
            .into_iter()
            .map(|f| f.clause)
            .collect();
        assert_eq!(clauses, vec!["graph"]);
    }

    #[test]
    fn wrong_schema_rejected() {
        let g = families::path(3);
        let r = transfer(&g, Budget::unlimited()).unwrap();
        let text = WitnessDocument::from_result(&r)
            .unwrap()
            .to_json()
            .replace(WITNESS_SCHEMA, "other/9");
        assert!(matches!(
            WitnessDocument::from_json(&text),
            Err(Error::MalformedWitness(_))
        ));
    }
}

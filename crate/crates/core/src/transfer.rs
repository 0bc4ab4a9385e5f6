//! From a zero forcing process on the line graph L(G) to certificates on G.
//!
//! The forcing chains of the process are paths in L(G), i.e. trails of edges
//! in G. Orienting each chain edge consistently along its chain gives a
//! partial orientation H of G, which is acyclic. Any topological order of H
//! then orients the remaining (singleton-chain) edges, producing an acyclic
//! orientation of G in which:
//!
//! * every chain is a directed path, so the k chains are a brush witness
//!   with k paths;
//! * a source vertex has all its out-edges in the initial set Z, and any
//!   other vertex has at most one out-edge outside Z. This yields a zero
//!   forcing set Y of G with |Y| <= |Z|.
//!
//! Every step re-checks the property the next step relies on. A failed check
//! is returned as an error carrying a [`DiagnosticBundle`].

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::brushing::{verify_brush_witness, BrushWitness};
use crate::budget::Budget;
use crate::diagnostic::DiagnosticBundle;
use crate::error::{Error, Result};
use crate::graph::{line_graph, EdgeId, Graph, LineGraph, Orientation, VertexOrder};
use crate::zero_forcing::{
    is_zero_forcing, record_process, record_process_random, zero_forcing_number, ForcingProcess,
};

/// Forcing chains of a line-graph process, expressed as edges of G.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainDecomposition {
    /// Chains of length >= 2 first, then singletons; each group keeps the
    /// order of its heads in the initial set.
    pub chains: Vec<Vec<EdgeId>>,
    /// Number of chains with at least two entries.
    pub split: usize,
}

impl ChainDecomposition {
    pub fn k(&self) -> usize {
        self.chains.len()
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.chains.iter().map(Vec::len).collect()
    }

    pub fn heads(&self) -> Vec<EdgeId> {
        self.chains.iter().map(|c| c[0]).collect()
    }
}

/// Follows the forces relation from each initial vertex of `proc`.
pub fn build_chains(lg: &LineGraph, proc: &ForcingProcess) -> Result<ChainDecomposition> {
    let h = &lg.graph;
    proc.validate(h).map_err(|_| Error::NotForcing)?;
    let next = proc.successor_map(h.n());
    let mut long = Vec::new();
    let mut singletons = Vec::new();
    let mut covered = 0;
    for &z in &proc.initial {
        let mut chain = vec![z];
        let mut v = z;
        while let Some(w) = next[v] {
            chain.push(w);
            v = w;
        }
        for i in 0..chain.len() {
            for j in i + 1..chain.len() {
                if h.has_edge(chain[i], chain[j]) != (j == i + 1) {
                    let detail = format!(
                        "chain {chain:?} of line-graph vertices: entries {i} and {j} break the induced path"
                    );
                    return Err(Error::NotInducedPath(
                        DiagnosticBundle::new("NotInducedPath", detail).boxed(),
                    ));
                }
            }
        }
        covered += chain.len();
        let edges: Vec<EdgeId> = chain.into_iter().map(|v| lg.edge_of[v]).collect();
        if edges.len() >= 2 {
            long.push(edges);
        } else {
            singletons.push(edges);
        }
    }
    assert_eq!(
        covered,
        h.n(),
        "a valid process partitions the vertices into chains"
    );
    let split = long.len();
    long.extend(singletons);
    Ok(ChainDecomposition {
        chains: long,
        split,
    })
}

/// Orients every edge of a chain of length >= 2: away from the vertex shared
/// with its predecessor, and towards the vertex shared with its successor.
/// When both rules apply they must agree.
pub fn orient_from_chains<'g>(g: &'g Graph, cd: &ChainDecomposition) -> Result<Orientation<'g>> {
    let mut h = Orientation::unoriented(g);
    for chain in &cd.chains[..cd.split] {
        let shared = |a: EdgeId, b: EdgeId| {
            g.shared_vertex(a, b).ok_or_else(|| {
                Error::NotInducedPath(
                    DiagnosticBundle::new(
                        "NotInducedPath",
                        format!("consecutive chain edges {a} and {b} are not incident"),
                    )
                    .boxed(),
                )
            })
        };
        for (j, &e) in chain.iter().enumerate() {
            let (a, b) = g.endpoints(e);
            let other = |x: usize| if x == a { b } else { a };
            let by_prev = if j > 0 {
                Some(shared(chain[j - 1], e)?)
            } else {
                None
            };
            let by_next = if j + 1 < chain.len() {
                Some(other(shared(e, chain[j + 1])?))
            } else {
                None
            };
            let tail = match (by_prev, by_next) {
                (Some(t), Some(s)) if t != s => {
                    let detail = format!(
                        "edge {e} = {{{a}, {b}}}: predecessor rule gives tail {t}, successor rule gives tail {s}"
                    );
                    return Err(Error::ConflictingRules(
                        DiagnosticBundle::new("ConflictingRules", detail).boxed(),
                    ));
                }
                (Some(t), _) | (None, Some(t)) => t,
                (None, None) => unreachable!("chains in the first group have length >= 2"),
            };
            if h.is_oriented(e) {
                return Err(Error::ConflictingRules(
                    DiagnosticBundle::new(
                        "ConflictingRules",
                        format!("edge {e} lies on two chains"),
                    )
                    .boxed(),
                ));
            }
            h.set(e, tail);
        }
    }
    Ok(h)
}

/// A topological order of the partial orientation. A cycle here would
/// contradict the acyclicity of H and is reported with a reproducer.
pub fn certify_acyclic(h: &Orientation<'_>) -> Result<VertexOrder> {
    h.topological_order().map_err(|cycle| {
        let mut b = DiagnosticBundle::new("CycleFound", format!("directed cycle {:?}", cycle.0));
        b.fill_graph(h.graph());
        b.fill_partial(h);
        Error::CycleFound(b.boxed())
    })
}

/// Orients each still-unoriented edge from its earlier endpoint in `order`.
pub fn extend_orientation<'g>(
    g: &'g Graph,
    h: &Orientation<'g>,
    order: &VertexOrder,
) -> Result<Orientation<'g>> {
    if h.graph() != g {
        return Err(Error::InvalidOrder(
            "orientation belongs to another graph".into(),
        ));
    }
    if !h.respects(order) {
        return Err(Error::InvalidOrder(format!(
            "{:?} does not respect the partial orientation",
            order.0
        )));
    }
    let pos = order
        .positions(g.n())
        .expect("respects() checked the permutation");
    let mut full = h.clone();
    for e in g.edge_ids() {
        if !h.is_oriented(e) {
            let (u, v) = g.endpoints(e);
            full.set(e, if pos[u] < pos[v] { u } else { v });
        }
    }
    if !full.is_full() || !full.respects(order) {
        return Err(Error::InvalidOrder(
            "extension does not respect the order".into(),
        ));
    }
    Ok(full)
}

/// Reads each chain as a directed path of `gvec` and checks that together
/// they form a brush witness.
pub fn derive_brush_witness<'g>(
    g: &'g Graph,
    cd: &ChainDecomposition,
    gvec: &Orientation<'g>,
) -> Result<BrushWitness<'g>> {
    let invalid = |detail: String| {
        let mut b = DiagnosticBundle::new("WitnessInvalid", detail);
        b.fill_graph(g);
        b.fill_chains(cd);
        Error::WitnessInvalid(b.boxed())
    };
    let mut paths = Vec::with_capacity(cd.k());
    for (i, chain) in cd.chains.iter().enumerate() {
        let mut path: Vec<usize> = Vec::with_capacity(chain.len() + 1);
        for &e in chain {
            let (t, h) = gvec
                .direction(e)
                .ok_or_else(|| invalid(format!("edge {e} of chain {i} is unoriented")))?;
            match path.last() {
                None => path.extend([t, h]),
                Some(&last) if last == t => path.push(h),
                Some(&last) => {
                    return Err(invalid(format!(
                        "chain {i}: edge {e} = ({t}, {h}) does not continue from {last}"
                    )))
                }
            }
        }
        paths.push(path);
    }
    let witness = BrushWitness {
        orientation: gvec.clone(),
        paths,
    };
    if let Err(violations) = verify_brush_witness(g, &witness) {
        let text: Vec<String> = violations.iter().map(ToString::to_string).collect();
        return Err(invalid(text.join("; ")));
    }
    Ok(witness)
}

/// Vertices of `gvec` violating the out-edge properties: a vertex without
/// in-edges must have all out-edges in `z`, any other vertex may have at
/// most one out-edge outside `z`.
pub fn structural_bullet_failures(gvec: &Orientation<'_>, z: &[EdgeId]) -> Vec<usize> {
    let g = gvec.graph();
    let mut in_z = vec![false; g.m()];
    for e in z {
        in_z[e.index()] = true;
    }
    (0..g.n())
        .filter(|&u| {
            let outside = gvec
                .out_neighbors(u)
                .filter(|(_, e)| !in_z[e.index()])
                .count();
            if gvec.in_degree(u) == 0 {
                outside > 0
            } else {
                outside > 1
            }
        })
        .collect()
}

/// The forcing set Y of G together with a forcing process realizing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransferredSet {
    pub y: Vec<usize>,
    pub process: ForcingProcess,
    pub order: VertexOrder,
}

/// Builds Y from a full acyclic orientation and the edge set `z_edges`:
/// a source contributes itself and all out-neighbors but the one latest in
/// topological order; any other vertex contributes its out-neighbors across
/// edges of `z_edges`. The forcing process visits vertices in topological
/// order; each vertex outside Y is forced by the earliest in-neighbor whose
/// only out-neighbor outside Y it is.
pub fn build_y(g: &Graph, gvec: &Orientation<'_>, z_edges: &[EdgeId]) -> Result<TransferredSet> {
    if !gvec.is_full() {
        return Err(Error::NotFull(gvec.unoriented_count()));
    }
    let order = gvec.topological_order().map_err(|_| Error::NotAcyclic)?;
    let n = g.n();
    let pos = order
        .positions(n)
        .expect("topological order is a permutation");

    let failures = structural_bullet_failures(gvec, z_edges);
    if let Some(&u) = failures.first() {
        let mut b = DiagnosticBundle::new(
            "PropertyViolated",
            format!(
                "out-edge property fails at vertices {failures:?} (first: {u}, in-degree {})",
                gvec.in_degree(u)
            ),
        );
        b.fill_graph(g);
        b.z_edges = z_edges.iter().map(|&e| g.endpoints(e)).collect();
        return Err(Error::PropertyViolated(b.boxed()));
    }

    let mut in_z = vec![false; g.m()];
    for e in z_edges {
        in_z[e.index()] = true;
    }
    let mut in_y = vec![false; n];
    for u in 0..n {
        let outs: Vec<(usize, EdgeId)> = gvec.out_neighbors(u).collect();
        if gvec.in_degree(u) == 0 {
            in_y[u] = true;
            let omitted = outs.iter().map(|&(v, _)| v).max_by_key(|&v| pos[v]);
            for &(v, _) in &outs {
                if Some(v) != omitted {
                    in_y[v] = true;
                }
            }
        } else {
            for &(v, e) in &outs {
                if in_z[e.index()] {
                    in_y[v] = true;
                }
            }
        }
    }
    let y: Vec<usize> = (0..n).filter(|&v| in_y[v]).collect();

    let fail = |kind: &str, detail: String| {
        let mut b = DiagnosticBundle::new(kind, detail);
        b.fill_graph(g);
        b.z_edges = z_edges.iter().map(|&e| g.endpoints(e)).collect();
        b
    };
    if y.len() > z_edges.len() {
        let b = fail(
            "PropertyViolated",
            format!("|Y| = {} exceeds |Z| = {}", y.len(), z_edges.len()),
        );
        return Err(Error::PropertyViolated(b.boxed()));
    }

    let mut events = Vec::new();
    for &w in order.as_slice() {
        if in_y[w] {
            continue;
        }
        let mut ins: Vec<usize> = gvec.in_neighbors(w).map(|(u, _)| u).collect();
        ins.sort_by_key(|&u| pos[u]);
        let forcer = ins
            .into_iter()
            .find(|&u| gvec.out_neighbors(u).all(|(v, _)| v == w || in_y[v]));
        match forcer {
            Some(u) => events.push((u, w)),
            None => {
                let b = fail(
                    "TransferNotForcing",
                    format!("no in-neighbor of {w} can force it (Y = {y:?})"),
                );
                return Err(Error::TransferNotForcing(b.boxed()));
            }
        }
    }
    let process = ForcingProcess {
        initial: y.clone(),
        events,
    };
    if let Err(v) = process.validate(g) {
        let b = fail(
            "TransferNotForcing",
            format!("replay of the transferred process failed: {v}"),
        );
        return Err(Error::TransferNotForcing(b.boxed()));
    }
    if !is_zero_forcing(g, &y) {
        let b = fail(
            "TransferNotForcing",
            format!("closure of Y = {y:?} is not V(G)"),
        );
        return Err(Error::TransferNotForcing(b.boxed()));
    }
    Ok(TransferredSet { y, process, order })
}

/// Outcome of every check performed by the pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct TransferChecks {
    pub process_valid: bool,
    pub chains_induced: bool,
    pub rules_consistent: bool,
    pub partial_acyclic: bool,
    pub order_extends: bool,
    pub partial_in_full: bool,
    pub full_acyclic: bool,
    pub brush_witness_valid: bool,
    pub paths_equal_k: bool,
    pub structural_bullets: bool,
    pub y_bounded: bool,
    pub y_forcing: bool,
}

impl TransferChecks {
    pub fn named(&self) -> [(&'static str, bool); 12] {
        [
            ("process_valid", self.process_valid),
            ("chains_induced", self.chains_induced),
            ("rules_consistent", self.rules_consistent),
            ("partial_acyclic", self.partial_acyclic),
            ("order_extends", self.order_extends),
            ("partial_in_full", self.partial_in_full),
            ("full_acyclic", self.full_acyclic),
            ("brush_witness_valid", self.brush_witness_valid),
            ("paths_equal_k", self.paths_equal_k),
            ("structural_bullets", self.structural_bullets),
            ("y_bounded", self.y_bounded),
            ("y_forcing", self.y_forcing),
        ]
    }

    pub fn all(&self) -> bool {
        self.named().iter().all(|(_, ok)| *ok)
    }
}

/// Everything produced by one run of the pipeline.
#[derive(Debug, Clone)]
pub struct TransferResult<'g> {
    pub graph: &'g Graph,
    pub line_graph: LineGraph,
    /// Forcing process on the line graph.
    pub process: ForcingProcess,
    /// Initial set of `process`, as edges of G, in initial-set order.
    pub z_edges: Vec<EdgeId>,
    pub chains: ChainDecomposition,
    pub partial: Orientation<'g>,
    pub order: VertexOrder,
    pub full: Orientation<'g>,
    pub brush_witness: BrushWitness<'g>,
    pub y: Vec<usize>,
    pub y_process: ForcingProcess,
    pub checks: TransferChecks,
}

impl TransferResult<'_> {
    /// k = |Z|, the number of chains.
    pub fn k(&self) -> usize {
        self.z_edges.len()
    }
}

fn check_host(g: &Graph) -> Result<()> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if let Some(v) = g.isolated_vertices().next() {
        return Err(Error::IsolatedVertex(v));
    }
    let c = g.components().len();
    if c > 1 {
        return Err(Error::Disconnected(c));
    }
    Ok(())
}

/// Runs the pipeline on a minimum zero forcing set of L(g) (the solver's
/// first minimum set) with the deterministic scheduler.
pub fn transfer(g: &Graph, budget: Budget) -> Result<TransferResult<'_>> {
    check_host(g)?;
    let lg = line_graph(g)?;
    let z = zero_forcing_number(&lg.graph, budget)?;
    let process = record_process(&lg.graph, &z.witness)?;
    transfer_with_process(g, lg, process)
}

/// Random valid process on L(g): a uniformly chosen set from `initial_sets`
/// and a uniformly random choice among available forces at every step.
pub fn random_line_graph_process<R: Rng + ?Sized>(
    lg: &LineGraph,
    initial_sets: &[Vec<usize>],
    rng: &mut R,
) -> Result<ForcingProcess> {
    let s = &initial_sets[rng.gen_range(0..initial_sets.len())];
    record_process_random(&lg.graph, s, rng)
}

/// Runs the pipeline on an arbitrary valid forcing process of `lg = L(g)`.
pub fn transfer_with_process(
    g: &Graph,
    lg: LineGraph,
    process: ForcingProcess,
) -> Result<TransferResult<'_>> {
    check_host(g)?;
    let z_edges: Vec<EdgeId> = process.initial.iter().map(|&v| lg.edge_of[v]).collect();
    let ctx = |b: &mut DiagnosticBundle| {
        b.fill_graph(g);
        b.fill_process(g, &z_edges, &process);
    };
    let mut checks = TransferChecks {
        process_valid: process.validate(&lg.graph).is_ok(),
        ..Default::default()
    };
    if !checks.process_valid {
        return Err(Error::NotForcing);
    }

    let chains = build_chains(&lg, &process).map_err(|e| e.enrich(ctx))?;
    checks.chains_induced = true;
    let with_chains = |b: &mut DiagnosticBundle| {
        ctx(b);
        b.fill_chains(&chains);
    };

    let partial = orient_from_chains(g, &chains).map_err(|e| e.enrich(with_chains))?;
    checks.rules_consistent = true;
    let with_partial = |b: &mut DiagnosticBundle| {
        with_chains(b);
        b.fill_partial(&partial);
    };

    let order = certify_acyclic(&partial).map_err(|e| e.enrich(with_partial))?;
    checks.partial_acyclic = true;

    let full = extend_orientation(g, &partial, &order)?;
    checks.order_extends = full.respects(&order);
    checks.partial_in_full = partial.is_contained_in(&full);
    checks.full_acyclic = full.is_acyclic();

    let brush_witness =
        derive_brush_witness(g, &chains, &full).map_err(|e| e.enrich(with_partial))?;
    checks.brush_witness_valid = true;
    checks.paths_equal_k = brush_witness.paths.len() == z_edges.len();

    let transferred = build_y(g, &full, &z_edges).map_err(|e| e.enrich(with_partial))?;
    checks.structural_bullets = true;
    checks.y_bounded = transferred.y.len() <= z_edges.len();
    checks.y_forcing = is_zero_forcing(g, &transferred.y);

    if !checks.all() {
        let failed: Vec<&str> = checks
            .named()
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|(n, _)| *n)
            .collect();
        let mut b = DiagnosticBundle::new("WitnessInvalid", format!("failed checks: {failed:?}"));
        with_partial(&mut b);
        return Err(Error::WitnessInvalid(b.boxed()));
    }

    Ok(TransferResult {
        graph: g,
        line_graph: lg,
        process,
        z_edges,
        chains,
        partial,
        order,
        full,
        brush_witness,
        y: transferred.y,
        y_process: transferred.process,
        checks,
    })
}

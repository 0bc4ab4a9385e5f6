//! Brushing numbers through the path-cover characterization: the minimum,
//! over acyclic orientations, of the number of directed paths needed to
//! cover every arc.
//!
//! For a fixed orientation the inner minimum is a minimum flow with lower
//! bound 1 on every arc, solved by the usual reduction to two maximum flows.

use std::fmt;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::flow::{ArcId, FlowNetwork};
use crate::graph::{Graph, Orientation};

/// An acyclic orientation plus directed paths covering all of its arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrushWitness<'g> {
    pub orientation: Orientation<'g>,
    /// Vertex sequences; each has at least two vertices.
    pub paths: Vec<Vec<usize>>,
}

/// A violated witness clause.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BrushViolation {
    ForeignGraph,
    NotFull(usize),
    NotAcyclic,
    EmptyPath(usize),
    InvalidStep { path: usize, from: usize, to: usize },
    RepeatedVertex { path: usize, vertex: usize },
    UncoveredEdge { u: usize, v: usize },
}

impl BrushViolation {
    /// Stable clause name used in reports and exit diagnostics.
    pub fn clause(&self) -> &'static str {
        match self {
            BrushViolation::ForeignGraph => "foreign graph",
            BrushViolation::NotFull(_) => "not full",
            BrushViolation::NotAcyclic => "not acyclic",
            BrushViolation::EmptyPath(_) => "empty path",
            BrushViolation::InvalidStep { .. } => "invalid step",
            BrushViolation::RepeatedVertex { .. } => "repeated vertex",
            BrushViolation::UncoveredEdge { .. } => "uncovered edge",
        }
    }
}

impl fmt::Display for BrushViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BrushViolation::NotFull(k) => write!(f, "not full: {k} unoriented edge(s)"),
            BrushViolation::EmptyPath(i) => write!(f, "empty path: path {i} has no edge"),
            BrushViolation::InvalidStep { path, from, to } => {
                write!(
                    f,
                    "invalid step: {from} -> {to} in path {path} is not an arc"
                )
            }
            BrushViolation::RepeatedVertex { path, vertex } => {
                write!(f, "repeated vertex: {vertex} in path {path}")
            }
            BrushViolation::UncoveredEdge { u, v } => write!(f, "uncovered edge: {{{u}, {v}}}"),
            other => f.write_str(other.clause()),
        }
    }
}

/// Checks every witness clause and reports all violations found.
pub fn verify_brush_witness(
    g: &Graph,
    w: &BrushWitness<'_>,
) -> std::result::Result<(), Vec<BrushViolation>> {
    let o = &w.orientation;
    if o.graph() != g {
        return Err(vec![BrushViolation::ForeignGraph]);
    }
    let mut bad = Vec::new();
    if !o.is_full() {
        bad.push(BrushViolation::NotFull(o.unoriented_count()));
    }
    if !o.is_acyclic() {
        bad.push(BrushViolation::NotAcyclic);
    }
    let mut covered = vec![false; g.m()];
    for (i, path) in w.paths.iter().enumerate() {
        if path.len() < 2 {
            bad.push(BrushViolation::EmptyPath(i));
            continue;
        }
        let mut seen = vec![false; g.n()];
        for &v in path {
            if v < g.n() {
                if seen[v] {
                    bad.push(BrushViolation::RepeatedVertex { path: i, vertex: v });
                }
                seen[v] = true;
            }
        }
        for step in path.windows(2) {
            let (a, b) = (step[0], step[1]);
            match g.edge_between(a, b) {
                Some(e) if o.direction(e) == Some((a, b)) => covered[e.index()] = true,
                _ => bad.push(BrushViolation::InvalidStep {
                    path: i,
                    from: a,
                    to: b,
                }),
            }
        }
    }
    for e in g.edge_ids() {
        if !covered[e.index()] {
            let (u, v) = g.endpoints(e);
            bad.push(BrushViolation::UncoveredEdge { u, v });
        }
    }
    if bad.is_empty() {
        Ok(())
    } else {
        Err(bad)
    }
}

/// Minimum number of directed paths covering all arcs, with a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathCover {
    pub count: usize,
    pub paths: Vec<Vec<usize>>,
}

/// Every arc leaving a vertex with no in-arcs starts its own path, and every
/// arc entering a vertex with no out-arcs ends one. The larger of the two
/// totals bounds any cover of a full orientation from below.
pub fn endpoint_lower_bound(o: &Orientation<'_>) -> usize {
    let n = o.graph().n();
    let (mut from_sources, mut into_sinks) = (0, 0);
    for v in 0..n {
        let (out, inn) = (o.out_degree(v), o.in_degree(v));
        if inn == 0 {
            from_sources += out;
        }
        if out == 0 {
            into_sinks += inn;
        }
    }
    from_sources.max(into_sinks)
}

/// Exact minimum directed-path edge cover of a full acyclic orientation.
pub fn min_path_edge_cover(o: &Orientation<'_>) -> Result<PathCover> {
    let g = o.graph();
    if g.m() == 0 {
        return Err(Error::NoEdges);
    }
    if !o.is_full() {
        return Err(Error::NotFull(o.unoriented_count()));
    }
    if !o.is_acyclic() {
        return Err(Error::NotAcyclic);
    }
    let cover = solve_min_flow(o);

    let max_out = (0..g.n()).map(|v| o.out_degree(v)).max().unwrap_or(0);
    assert!(cover.count >= max_out, "path cover below max out-degree");
    assert!(
        cover.count >= endpoint_lower_bound(o),
        "path cover below endpoint bound"
    );
    Ok(cover)
}

fn solve_min_flow(o: &Orientation<'_>) -> PathCover {
    let g = o.graph();
    let n = g.n();
    let (source, sink, super_source, super_sink) = (n, n + 1, n + 2, n + 3);
    let inf = 4 * g.m() as i64 + 4;
    let mut net = FlowNetwork::new(n + 4);

    // Arc insertion order fixes decomposition priority: graph arcs first,
    // then source arcs, then sink arcs.
    let mut excess = vec![0i64; n];
    let mut out_arcs: Vec<Vec<ArcId>> = vec![Vec::new(); n];
    let mut edge_arcs = Vec::with_capacity(g.m());
    for (u, v, _) in o.arcs() {
        // lower bound 1 moved into the node balances
        let a = net.add_arc(u, v, inf - 1);
        excess[v] += 1;
        excess[u] -= 1;
        out_arcs[u].push(a);
        edge_arcs.push(a);
    }
    let source_arcs: Vec<ArcId> = (0..n).map(|v| net.add_arc(source, v, inf)).collect();
    let sink_arcs: Vec<ArcId> = (0..n).map(|v| net.add_arc(v, sink, inf)).collect();
    for (v, &a) in sink_arcs.iter().enumerate() {
        out_arcs[v].push(a);
    }
    let back = net.add_arc(sink, source, inf);
    let mut balancing = Vec::new();
    let mut demand = 0;
    for (v, &x) in excess.iter().enumerate() {
        if x > 0 {
            balancing.push(net.add_arc(super_source, v, x));
            demand += x;
        } else if x < 0 {
            balancing.push(net.add_arc(v, super_sink, -x));
        }
    }
    let pushed = net.max_flow(super_source, super_sink);
    assert_eq!(
        pushed, demand,
        "source and sink arcs are unbounded, so a feasible flow exists"
    );
    let feasible = net.flow(back);
    net.freeze(back);
    for a in balancing {
        net.freeze(a);
    }
    let reduced = net.max_flow(sink, source);
    let value = feasible - reduced;

    // Decompose. Remaining flow per arc, graph arcs carrying their lower bound.
    let mut remaining = vec![0i64; net.arc_slots()];
    for &a in &edge_arcs {
        remaining[a.index()] = net.flow(a) + 1;
    }
    for &a in source_arcs.iter().chain(&sink_arcs) {
        remaining[a.index()] = net.flow(a);
    }
    let mut paths = Vec::with_capacity(value as usize);
    for _ in 0..value {
        let first = *source_arcs
            .iter()
            .find(|a| remaining[a.index()] > 0)
            .expect("flow leaves the source");
        remaining[first.index()] -= 1;
        let mut v = net.head(first);
        let mut path = vec![v];
        loop {
            let a = *out_arcs[v]
                .iter()
                .find(|a| remaining[a.index()] > 0)
                .expect("flow is conserved");
            remaining[a.index()] -= 1;
            let w = net.head(a);
            if w == sink {
                break;
            }
            path.push(w);
            v = w;
        }
        assert!(
            path.len() >= 2,
            "a minimum flow has no source-vertex-sink path"
        );
        paths.push(path);
    }
    PathCover {
        count: paths.len(),
        paths,
    }
}

/// Exact brushing number with a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Brushing<'g> {
    pub b: usize,
    pub witness: BrushWitness<'g>,
    /// Direction bit vector of the witness orientation (see
    /// [`Orientation::from_mask`]).
    pub orientation_index: u64,
}

pub const MAX_SEARCH_EDGES: usize = 40;

/// Exact B(g): every direction vector in binary order, filtered for
/// acyclicity; the first orientation reaching the minimum is reported.
pub fn brushing_number(g: &Graph, budget: Budget) -> Result<Brushing<'_>> {
    if g.m() == 0 {
        return Err(Error::NoEdges);
    }
    if g.m() > MAX_SEARCH_EDGES {
        return Err(Error::BadParams(format!(
            "{} edges exceeds the exhaustive search limit of {MAX_SEARCH_EDGES}",
            g.m()
        )));
    }
    let mut meter = budget.meter();
    let mut best: Option<(usize, u64, PathCover)> = None;
    for mask in 0..1u64 << g.m() {
        meter.tick()?;
        let o = Orientation::from_mask(g, mask);
        let lb = endpoint_lower_bound(&o);
        if best.as_ref().is_some_and(|(b, _, _)| lb >= *b) {
            continue;
        }
        if !o.is_acyclic() {
            continue;
        }
        let cover = min_path_edge_cover(&o)?;
        if best.as_ref().is_none_or(|(b, _, _)| cover.count < *b) {
            best = Some((cover.count, mask, cover));
        }
    }
    let (b, mask, cover) = best.expect("the all-forward orientation is acyclic");
    Ok(Brushing {
        b,
        witness: BrushWitness {
            orientation: Orientation::from_mask(g, mask),
            paths: cover.paths,
        },
        orientation_index: mask,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn single_arc() {
        let g = families::path(2);
        let o = Orientation::from_mask(&g, 0);
        let c = min_path_edge_cover(&o).unwrap();
        assert_eq!(
            c,
            PathCover {
                count: 1,
                paths: vec![vec![0, 1]]
            }
        );
    }

    #[test]
    fn directed_path() {
        let g = families::path(4);
        let c = min_path_edge_cover(&Orientation::from_mask(&g, 0)).unwrap();
        assert_eq!(c.paths, vec![vec![0, 1, 2, 3]]);
        let c = min_path_edge_cover(&Orientation::from_mask(&g, 0b111)).unwrap();
        assert_eq!(c.paths, vec![vec![3, 2, 1, 0]]);
    }

    #[test]
    fn out_star_needs_one_path_per_leaf() {
        let g = families::star(3);
        let c = min_path_edge_cover(&Orientation::from_mask(&g, 0)).unwrap();
        assert_eq!(c.count, 3);
        assert_eq!(c.paths, vec![vec![0, 1], vec![0, 2], vec![0, 3]]);
    }

    #[test]
    fn paths_share_a_middle_arc() {
        // two in-arcs and two out-arcs joined by one arc: two paths suffice
        // although the degree surplus at 1, 2 and 3 adds up to three
        let g = Graph::new(6, vec![(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)]).unwrap();
        let o = Orientation::from_arcs(&g, [(1, 0), (2, 0), (0, 3), (3, 4), (3, 5)]).unwrap();
        let c = min_path_edge_cover(&o).unwrap();
        assert_eq!(c.count, 2);
        assert_eq!(endpoint_lower_bound(&o), 2);
        assert!(verify_brush_witness(
            &g,
            &BrushWitness {
                orientation: o,
                paths: c.paths
            }
        )
        .is_ok());
    }

    #[test]
    fn rejects_bad_orientations() {
        let g = families::cycle(3);
        let mut o = Orientation::unoriented(&g);
        assert!(matches!(min_path_edge_cover(&o), Err(Error::NotFull(3))));
        o = Orientation::from_arcs(&g, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(matches!(min_path_edge_cover(&o), Err(Error::NotAcyclic)));
        let empty = Graph::empty(2);
        assert!(matches!(
            min_path_edge_cover(&Orientation::unoriented(&empty)),
            Err(Error::NoEdges)
        ));
    }

    #[test]
    fn known_brushing_numbers() {
        let b = |g: &Graph| brushing_number(g, Budget::unlimited()).unwrap().b;
        for n in 2..7 {
            assert_eq!(b(&families::path(n)), 1);
        }
        assert_eq!(b(&families::cycle(4)), 2);
        assert_eq!(b(&families::star(3)), 2);
        assert!(matches!(
            brushing_number(&Graph::empty(3), Budget::unlimited()),
            Err(Error::NoEdges)
        ));
    }

    #[test]
    fn solver_witness_verifies() {
        let g = families::cycle(4);
        let res = brushing_number(&g, Budget::unlimited()).unwrap();
        assert_eq!(verify_brush_witness(&g, &res.witness), Ok(()));
        assert_eq!(res.witness.paths.len(), res.b);
    }

    #[test]
    fn verifier_reports_clauses() {
        let g = families::path(3);
        let o = Orientation::from_mask(&g, 0);
        let missing = BrushWitness {
            orientation: o.clone(),
            paths: vec![vec![0, 1]],
        };
        let errs = verify_brush_witness(&g, &missing).unwrap_err();
        assert_eq!(
            errs.iter().map(|e| e.clause()).collect::<Vec<_>>(),
            vec!["uncovered edge"]
        );

        let bad_step = BrushWitness {
            orientation: o.clone(),
            paths: vec![vec![0, 1, 2], vec![0, 2]],
        };
        let errs = verify_brush_witness(&g, &bad_step).unwrap_err();
        assert_eq!(errs[0].clause(), "invalid step");

        let backwards = BrushWitness {
            orientation: o.clone(),
            paths: vec![vec![2, 1, 0]],
        };
        assert!(verify_brush_witness(&g, &backwards).is_err());

        let empty = BrushWitness {
            orientation: o,
            paths: vec![vec![0, 1, 2], vec![1]],
        };
        assert_eq!(
            verify_brush_witness(&g, &empty).unwrap_err()[0].clause(),
            "empty path"
        );
    }

    #[test]
    fn budget_is_respected() {
        let g = families::complete(5);
        assert!(matches!(
            brushing_number(&g, Budget::nodes(10)),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}

//! Simple undirected graphs with stable indices, partial orientations,
//! line graphs, component decomposition and topological sorting.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// Index of an edge in its owning [`Graph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

impl EdgeId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// Immutable simple undirected graph on vertices `0..n`.
///
/// Edges keep the index they were given at construction. Every edge is
/// stored as `(u, v)` with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    // sorted by neighbor
    adj: Vec<Vec<(usize, EdgeId)>>,
}

impl Graph {
    /// Builds a graph from an edge list. Endpoint order within a pair does
    /// not matter; the position in the list becomes the edge index.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj: Vec<Vec<(usize, EdgeId)>> = vec![Vec::new(); n];
        let mut list = Vec::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: a.max(b),
                    n,
                });
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            let id = EdgeId(list.len());
            list.push((u, v));
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        for (v, nbrs) in adj.iter_mut().enumerate() {
            nbrs.sort_unstable();
            if let Some(w) = nbrs.windows(2).find(|w| w[0].0 == w[1].0) {
                let (u, x) = if v < w[0].0 { (v, w[0].0) } else { (w[0].0, v) };
                return Err(Error::DuplicateEdge(u, x));
            }
        }
        Ok(Graph {
            n,
            edges: list,
            adj,
        })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn endpoints(&self, e: EdgeId) -> (usize, usize) {
        self.edges[e.0]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    /// `(neighbor, edge)` pairs of `v`, ascending by neighbor.
    pub fn incident(&self, v: usize) -> &[(usize, EdgeId)] {
        &self.adj[v]
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<EdgeId> {
        let nbrs = self.adj.get(u)?;
        nbrs.binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| nbrs[i].1)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_between(u, v).is_some()
    }

    /// The endpoint shared by two distinct edges, if they are incident.
    pub fn shared_vertex(&self, e: EdgeId, f: EdgeId) -> Option<usize> {
        if e == f {
            return None;
        }
        let (a, b) = self.endpoints(e);
        let (c, d) = self.endpoints(f);
        if a == c || a == d {
            Some(a)
        } else if b == c || b == d {
            Some(b)
        } else {
            None
        }
    }

    pub fn isolated_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(|&v| self.adj[v].is_empty())
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_labels().1 == 1
    }

    /// Component label per vertex (labels assigned in order of smallest
    /// vertex) and the number of components.
    fn component_labels(&self) -> (Vec<usize>, usize) {
        let mut label = vec![usize::MAX; self.n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if label[w] == usize::MAX {
                        label[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    /// Connected components, ordered by their smallest vertex.
    pub fn components(&self) -> Vec<Component> {
        let (label, count) = self.component_labels();
        let mut members: Vec<Vec<usize>> = vec![Vec::new(); count];
        for v in 0..self.n {
            members[label[v]].push(v);
        }
        members
            .into_iter()
            .map(|vs| {
                let (graph, edge_map) = self.induced_subgraph(&vs);
                Component {
                    graph,
                    vertex_map: vs,
                    edge_map,
                }
            })
            .collect()
    }

    /// Induced subgraph on `vertices` (relabelled densely in the given order)
    /// together with the original id of each retained edge.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> (Graph, Vec<EdgeId>) {
        let mut new_index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            new_index[v] = i;
        }
        let mut edges = Vec::new();
        let mut edge_map = Vec::new();
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if new_index[u] != usize::MAX && new_index[v] != usize::MAX {
                edges.push((new_index[u], new_index[v]));
                edge_map.push(EdgeId(i));
            }
        }
        let g = Graph::new(vertices.len(), edges).expect("induced subgraph of a simple graph");
        (g, edge_map)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Graph::new(self.n + other.n, edges).expect("union of simple graphs")
    }
}

/// One connected component together with maps back into the host graph.
#[derive(Debug, Clone)]
pub struct Component {
    pub graph: Graph,
    /// `vertex_map[i]` is the host vertex of component vertex `i`.
    pub vertex_map: Vec<usize>,
    /// `edge_map[i]` is the host edge of component edge `i`.
    pub edge_map: Vec<EdgeId>,
}

/// A line graph together with the explicit vertex-to-edge correspondence.
#[derive(Debug, Clone)]
pub struct LineGraph {
    pub graph: Graph,
    /// `edge_of[i]` is the edge of the base graph represented by vertex `i`.
    pub edge_of: Vec<EdgeId>,
}

impl LineGraph {
    pub fn vertex_of(&self, e: EdgeId) -> usize {
        // identity by construction, but go through the map
        self.edge_of
            .iter()
            .position(|&f| f == e)
            .expect("edge of the base graph")
    }
}

/// Line graph of `g`: one vertex per edge, adjacent iff the edges share an
/// endpoint. Vertex `i` of the result is edge `i` of `g`.
pub fn line_graph(g: &Graph) -> Result<LineGraph> {
    if g.m() == 0 {
        return Err(Error::EmptyEdgeSet);
    }
    let mut pairs = Vec::new();
    for v in 0..g.n() {
        let inc = g.incident(v);
        for (i, &(_, e)) in inc.iter().enumerate() {
            for &(_, f) in &inc[i + 1..] {
                pairs.push((e.0.min(f.0), e.0.max(f.0)));
            }
        }
    }
    pairs.sort_unstable();
    let graph = Graph::new(g.m(), pairs)?;
    Ok(LineGraph {
        graph,
        edge_of: g.edge_ids().collect(),
    })
}

/// A permutation of the vertices, read as u_1, ..., u_n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexOrder(pub Vec<usize>);

impl VertexOrder {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// `pos[v]` is the position of `v`; `None` if this is not a permutation
    /// of `0..n`.
    pub fn positions(&self, n: usize) -> Option<Vec<usize>> {
        if self.0.len() != n {
            return None;
        }
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in self.0.iter().enumerate() {
            if v >= n || pos[v] != usize::MAX {
                return None;
            }
            pos[v] = i;
        }
        Some(pos)
    }
}

/// A directed cycle, listed so that each vertex has an arc to the next and
/// the last has an arc to the first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle(pub Vec<usize>);

/// Assignment of directions to some of the edges of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation<'g> {
    graph: &'g Graph,
    tails: Vec<Option<usize>>,
}

impl<'g> Orientation<'g> {
    /// All edges unoriented.
    pub fn unoriented(graph: &'g Graph) -> Self {
        Orientation {
            graph,
            tails: vec![None; graph.m()],
        }
    }

    /// Full orientation from a direction bit vector: bit `i` clear orients
    /// edge `i` from its smaller to its larger endpoint, set reverses it.
    pub fn from_mask(graph: &'g Graph, mask: u64) -> Self {
        let tails = graph
            .edges()
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| Some(if mask >> i & 1 == 0 { u } else { v }))
            .collect();
        Orientation { graph, tails }
    }

    /// Builds an orientation from directed pairs. Every pair must be an edge
    /// of `graph`, and no edge may be listed twice.
    pub fn from_arcs<I>(graph: &'g Graph, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut o = Orientation::unoriented(graph);
        for (u, v) in arcs {
            let e = graph
                .edge_between(u, v)
                .ok_or_else(|| Error::MalformedWitness(format!("({u}, {v}) is not an edge")))?;
            if o.tails[e.0].is_some() {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            o.tails[e.0] = Some(u);
        }
        Ok(o)
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    /// Directs `e` away from `tail`. Panics if `tail` is not an endpoint.
    pub fn set(&mut self, e: EdgeId, tail: usize) {
        let (u, v) = self.graph.endpoints(e);
        assert!(tail == u || tail == v, "{tail} is not an endpoint of {e}");
        self.tails[e.0] = Some(tail);
    }

    /// `(tail, head)` of `e`, or `None` when unoriented.
    pub fn direction(&self, e: EdgeId) -> Option<(usize, usize)> {
        let tail = self.tails[e.0]?;
        let (u, v) = self.graph.endpoints(e);
        Some(if tail == u { (u, v) } else { (v, u) })
    }

    pub fn is_oriented(&self, e: EdgeId) -> bool {
        self.tails[e.0].is_some()
    }

    pub fn unoriented_count(&self) -> usize {
        self.tails.iter().filter(|t| t.is_none()).count()
    }

    pub fn is_full(&self) -> bool {
        self.unoriented_count() == 0
    }

    /// Directed edges `(tail, head, edge)` in edge-index order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize, EdgeId)> + '_ {
        self.graph
            .edge_ids()
            .filter_map(move |e| self.direction(e).map(|(u, v)| (u, v, e)))
    }

    /// Out-neighbors of `v`, ascending.
    pub fn out_neighbors(&self, v: usize) -> impl Iterator<Item = (usize, EdgeId)> + '_ {
        self.graph
            .incident(v)
            .iter()
            .copied()
            .filter(move |&(_, e)| self.tails[e.0] == Some(v))
    }

    /// In-neighbors of `v`, ascending.
    pub fn in_neighbors(&self, v: usize) -> impl Iterator<Item = (usize, EdgeId)> + '_ {
        self.graph
            .incident(v)
            .iter()
            .copied()
            .filter(move |&(w, e)| self.tails[e.0] == Some(w))
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_neighbors(v).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_neighbors(v).count()
    }

    /// True when every direction assigned here is assigned identically in
    /// `other`.
    pub fn is_contained_in(&self, other: &Orientation<'_>) -> bool {
        self.tails.len() == other.tails.len()
            && self
                .tails
                .iter()
                .zip(&other.tails)
                .all(|(a, b)| a.is_none() || a == b)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_ok()
    }

    /// Kahn's algorithm, always taking the smallest ready vertex. Unoriented
    /// edges impose no constraint.
    pub fn topological_order(&self) -> std::result::Result<VertexOrder, Cycle> {
        let n = self.graph.n();
        let mut indeg = vec![0usize; n];
        for (_, v, _) in self.arcs() {
            indeg[v] += 1;
        }
        let mut ready: BinaryHeap<Reverse<usize>> =
            (0..n).filter(|&v| indeg[v] == 0).map(Reverse).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(Reverse(v)) = ready.pop() {
            order.push(v);
            for (w, _) in self.out_neighbors(v) {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    ready.push(Reverse(w));
                }
            }
        }
        if order.len() == n {
            return Ok(VertexOrder(order));
        }
        // Every leftover vertex has an in-arc from another leftover vertex,
        // so walking backwards must revisit a vertex.
        let start = (0..n).find(|&v| indeg[v] > 0).expect("leftover vertex");
        let mut seen = vec![usize::MAX; n];
        let mut walk = Vec::new();
        let mut v = start;
        while seen[v] == usize::MAX {
            seen[v] = walk.len();
            walk.push(v);
            v = self
                .in_neighbors(v)
                .map(|(u, _)| u)
                .find(|&u| indeg[u] > 0)
                .expect("leftover vertex has a leftover in-neighbor");
        }
        let mut cycle = walk[seen[v]..].to_vec();
        cycle.reverse();
        Err(Cycle(cycle))
    }

    /// True iff every directed edge goes from earlier to later in `order`.
    pub fn respects(&self, order: &VertexOrder) -> bool {
        match order.positions(self.graph.n()) {
            Some(pos) => self.arcs().all(|(u, v, _)| pos[u] < pos[v]),
            None => false,
        }
    }

    /// Directed pairs in edge-index order.
    pub fn arc_list(&self) -> Vec<(usize, usize)> {
        self.arcs().map(|(u, v, _)| (u, v)).collect()
    }

    /// DOT rendering: `u -> v` for directed edges, `u -- v` for the rest.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("digraph {name} {{\n");
        for v in 0..self.graph.n() {
            out.push_str(&format!("  {v};\n"));
        }
        for e in self.graph.edge_ids() {
            match self.direction(e) {
                Some((u, v)) => out.push_str(&format!("  {u} -> {v};\n")),
                None => {
                    let (u, v) = self.graph.endpoints(e);
                    out.push_str(&format!("  {u} -- {v} [dir=none];\n"));
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for v in 0..n {
            for u in 0..v {
                e.push((u, v));
            }
        }
        Graph::new(n, e).unwrap()
    }

    #[test]
    fn rejects_loops_and_duplicates() {
        assert!(matches!(Graph::new(2, [(0, 0)]), Err(Error::SelfLoop(0))));
        assert!(matches!(
            Graph::new(2, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        ));
        assert!(matches!(
            Graph::new(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn line_graph_small_cases() {
        let lg = line_graph(&path(3)).unwrap();
        assert_eq!(lg.graph.n(), 2);
        assert_eq!(lg.graph.edges(), &[(0, 1)]);
        assert_eq!(lg.edge_of, vec![EdgeId(0), EdgeId(1)]);

        let k3 = complete(3);
        let lk3 = line_graph(&k3).unwrap();
        assert_eq!(lk3.graph.m(), 3);
        assert!(lk3.graph.n() == 3);

        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let ls = line_graph(&star).unwrap();
        assert_eq!(ls.graph.edges(), &[(0, 1), (0, 2), (1, 2)]);

        assert!(matches!(
            line_graph(&Graph::empty(3)),
            Err(Error::EmptyEdgeSet)
        ));
    }

    #[test]
    fn components_cases() {
        let g = path(4);
        let cs = g.components();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].graph, g);
        assert_eq!(cs[0].vertex_map, vec![0, 1, 2, 3]);

        let u = path(2).disjoint_union(&path(3));
        let cs = u.components();
        assert_eq!(
            cs.iter().map(|c| c.graph.n()).collect::<Vec<_>>(),
            vec![2, 3]
        );
        assert_eq!(cs[1].vertex_map, vec![2, 3, 4]);
        assert_eq!(cs[1].edge_map, vec![EdgeId(1), EdgeId(2)]);

        let cs = Graph::empty(3).components();
        assert_eq!(cs.len(), 3);
        assert!(cs.iter().all(|c| c.graph.n() == 1));
    }

    #[test]
    fn topological_order_cases() {
        let p = path(3);
        let o = Orientation::from_mask(&p, 0);
        assert_eq!(o.topological_order().unwrap().0, vec![0, 1, 2]);

        let back = Orientation::from_mask(&p, 0b11);
        assert_eq!(back.topological_order().unwrap().0, vec![2, 1, 0]);

        let k3 = complete(3); // edges (0,1), (0,2), (1,2)
        let cyc = Orientation::from_arcs(&k3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let Cycle(c) = cyc.topological_order().unwrap_err();
        assert_eq!(c.len(), 3);
        for i in 0..3 {
            let (u, v) = (c[i], c[(i + 1) % 3]);
            assert_eq!(cyc.direction(k3.edge_between(u, v).unwrap()), Some((u, v)));
        }

        let none = Orientation::unoriented(&k3);
        assert_eq!(none.topological_order().unwrap().0, vec![0, 1, 2]);
    }

    #[test]
    fn tie_break_prefers_small_index() {
        let g = Graph::new(4, [(3, 0), (2, 1)]).unwrap();
        let o = Orientation::from_arcs(&g, [(3, 0), (2, 1)]).unwrap();
        assert_eq!(o.topological_order().unwrap().0, vec![2, 1, 3, 0]);
    }

    #[test]
    fn dot_output() {
        let p = path(3);
        let mut o = Orientation::unoriented(&p);
        o.set(EdgeId(0), 1);
        let dot = o.to_dot("h");
        assert!(dot.contains("1 -> 0;"));
        assert!(dot.contains("1 -- 2"));
    }
}

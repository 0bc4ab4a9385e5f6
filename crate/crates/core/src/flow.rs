//! Dinic's maximum flow on small integer networks.
//!
//! Arcs are scanned in insertion order, so repeated runs on the same network
//! push identical flows.

use std::collections::VecDeque;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArcId(usize);

impl ArcId {
    /// Dense index, below [`FlowNetwork::arc_slots`].
    pub fn index(self) -> usize {
        self.0
    }
}

#[derive(Debug, Clone, Copy)]
struct Arc {
    to: usize,
    residual: i64,
    capacity: i64,
    frozen: bool,
}

#[derive(Debug, Clone)]
pub struct FlowNetwork {
    // arc 2i is forward, 2i + 1 its reverse
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
    level: Vec<usize>,
    cursor: Vec<usize>,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        FlowNetwork {
            arcs: Vec::new(),
            out: vec![Vec::new(); nodes],
            level: vec![0; nodes],
            cursor: vec![0; nodes],
        }
    }

    pub fn add_arc(&mut self, from: usize, to: usize, capacity: i64) -> ArcId {
        let id = self.arcs.len();
        self.arcs.push(Arc {
            to,
            residual: capacity,
            capacity,
            frozen: false,
        });
        self.arcs.push(Arc {
            to: from,
            residual: 0,
            capacity: 0,
            frozen: false,
        });
        self.out[from].push(id);
        self.out[to].push(id + 1);
        ArcId(id)
    }

    pub fn arc_slots(&self) -> usize {
        self.arcs.len()
    }

    /// Net flow currently on a forward arc.
    pub fn flow(&self, arc: ArcId) -> i64 {
        let a = &self.arcs[arc.0];
        a.capacity - a.residual
    }

    pub fn head(&self, arc: ArcId) -> usize {
        self.arcs[arc.0].to
    }

    /// Removes an arc from further augmentation without touching its flow.
    pub fn freeze(&mut self, arc: ArcId) {
        self.arcs[arc.0].frozen = true;
        self.arcs[arc.0 ^ 1].frozen = true;
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.fill(usize::MAX);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &a in &self.out[v] {
                let arc = &self.arcs[a];
                if arc.residual > 0 && !arc.frozen && self.level[arc.to] == usize::MAX {
                    self.level[arc.to] = self.level[v] + 1;
                    queue.push_back(arc.to);
                }
            }
        }
        self.level[t] != usize::MAX
    }

    fn dfs(&mut self, v: usize, t: usize, pushed: i64) -> i64 {
        if v == t {
            return pushed;
        }
        while self.cursor[v] < self.out[v].len() {
            let a = self.out[v][self.cursor[v]];
            let Arc {
                to,
                residual,
                frozen,
                ..
            } = self.arcs[a];
            if residual > 0 && !frozen && self.level[to] == self.level[v] + 1 {
                let d = self.dfs(to, t, pushed.min(residual));
                if d > 0 {
                    self.arcs[a].residual -= d;
                    self.arcs[a ^ 1].residual += d;
                    return d;
                }
            }
            self.cursor[v] += 1;
        }
        0
    }

    /// Augments from `s` to `t` until no augmenting path remains; returns the
    /// amount pushed by this call.
    pub fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        if s == t {
            return 0;
        }
        let mut total = 0;
        while self.bfs(s, t) {
            self.cursor.fill(0);
            loop {
                let f = self.dfs(s, t, i64::MAX);
                if f == 0 {
                    break;
                }
                total += f;
            }
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classic_network() {
        let mut net = FlowNetwork::new(6);
        net.add_arc(0, 1, 10);
        net.add_arc(0, 2, 10);
        net.add_arc(1, 3, 4);
        net.add_arc(1, 4, 8);
        net.add_arc(2, 4, 9);
        net.add_arc(3, 5, 10);
        net.add_arc(4, 3, 6);
        net.add_arc(4, 5, 10);
        assert_eq!(net.max_flow(0, 5), 19);
        // already maximal
        assert_eq!(net.max_flow(0, 5), 0);
    }

    #[test]
    fn disconnected_and_reverse() {
        let mut net = FlowNetwork::new(4);
        let a = net.add_arc(0, 1, 3);
        net.add_arc(2, 3, 5);
        assert_eq!(net.max_flow(0, 3), 0);
        assert_eq!(net.max_flow(0, 1), 3);
        assert_eq!(net.flow(a), 3);
        // push it back
        assert_eq!(net.max_flow(1, 0), 3);
        assert_eq!(net.flow(a), 0);
    }

    #[test]
    fn frozen_arc_carries_nothing_new() {
        let mut net = FlowNetwork::new(2);
        let a = net.add_arc(0, 1, 5);
        assert_eq!(net.max_flow(0, 1), 5);
        net.freeze(a);
        assert_eq!(net.max_flow(1, 0), 0);
        assert_eq!(net.flow(a), 5);
        assert_eq!(net.head(a), 1);
    }
}

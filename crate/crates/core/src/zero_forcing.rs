//! Color-change closure, exact zero forcing numbers, and recorded forcing
//! processes.
//!
//! The closure engine keeps, for every vertex, the number of uncolored
//! neighbors. A colored vertex whose counter is 1 can force; coloring a
//! vertex decrements the counters of its neighbors.

use std::collections::VecDeque;

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Worklist discipline for the closure engine. Both give the same fixed
/// point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Worklist {
    Stack,
    Queue,
}

/// Reusable closure state for one graph.
#[derive(Debug)]
pub struct Propagator<'g> {
    g: &'g Graph,
    colored: Vec<bool>,
    uncolored_nbrs: Vec<usize>,
    work: VecDeque<usize>,
    count: usize,
}

impl<'g> Propagator<'g> {
    pub fn new(g: &'g Graph) -> Self {
        Propagator {
            g,
            colored: vec![false; g.n()],
            uncolored_nbrs: (0..g.n()).map(|v| g.degree(v)).collect(),
            work: VecDeque::new(),
            count: 0,
        }
    }

    fn reset(&mut self) {
        self.colored.fill(false);
        for (v, c) in self.uncolored_nbrs.iter_mut().enumerate() {
            *c = self.g.degree(v);
        }
        self.work.clear();
        self.count = 0;
    }

    fn color(&mut self, w: usize) {
        if self.colored[w] {
            return;
        }
        self.colored[w] = true;
        self.count += 1;
        if self.uncolored_nbrs[w] == 1 {
            self.work.push_back(w);
        }
        for x in self.g.neighbors(w) {
            self.uncolored_nbrs[x] -= 1;
            if self.colored[x] && self.uncolored_nbrs[x] == 1 {
                self.work.push_back(x);
            }
        }
    }

    /// Runs the closure of `seed`; returns the number of colored vertices.
    pub fn run(&mut self, seed: &[usize], mode: Worklist) -> usize {
        self.reset();
        for &v in seed {
            self.color(v);
        }
        loop {
            let next = match mode {
                Worklist::Stack => self.work.pop_back(),
                Worklist::Queue => self.work.pop_front(),
            };
            let Some(u) = next else { break };
            if self.uncolored_nbrs[u] != 1 {
                continue;
            }
            let w = self
                .g
                .neighbors(u)
                .find(|&w| !self.colored[w])
                .expect("counter says one uncolored neighbor");
            self.color(w);
        }
        self.count
    }

    pub fn colored(&self) -> &[bool] {
        &self.colored
    }

    fn colored_set(&self) -> Vec<usize> {
        (0..self.g.n()).filter(|&v| self.colored[v]).collect()
    }
}

/// Closure of `s` under the color-change rule, as a sorted vertex list.
pub fn closure(g: &Graph, s: &[usize]) -> Vec<usize> {
    closure_with(g, s, Worklist::Queue)
}

pub fn closure_with(g: &Graph, s: &[usize], mode: Worklist) -> Vec<usize> {
    let mut p = Propagator::new(g);
    p.run(s, mode);
    p.colored_set()
}

pub fn is_zero_forcing(g: &Graph, s: &[usize]) -> bool {
    Propagator::new(g).run(s, Worklist::Queue) == g.n()
}

/// An exact zero forcing number with its witness set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroForcing {
    pub k: usize,
    /// First minimum zero forcing set in enumeration order (size, then
    /// lexicographic on sorted lists).
    pub witness: Vec<usize>,
}

/// Visits the k-subsets of `0..n` in lexicographic order until `visit`
/// returns `false`.
fn for_each_subset_of_size(
    n: usize,
    k: usize,
    mut visit: impl FnMut(&[usize]) -> Result<bool>,
) -> Result<()> {
    if k > n {
        return Ok(());
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if !visit(&idx)? {
            return Ok(());
        }
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(());
            }
            i -= 1;
            if idx[i] < n - k + i {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Exact Z(g) by exhaustive search in enumeration order.
pub fn zero_forcing_number(g: &Graph, budget: Budget) -> Result<ZeroForcing> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut meter = budget.meter();
    let mut prop = Propagator::new(g);
    for k in 1..=g.n() {
        let mut found = None;
        for_each_subset_of_size(g.n(), k, |s| {
            meter.tick()?;
            if prop.run(s, Worklist::Queue) == g.n() {
                found = Some(s.to_vec());
                return Ok(false);
            }
            Ok(true)
        })?;
        if let Some(witness) = found {
            return Ok(ZeroForcing { k, witness });
        }
    }
    unreachable!("the full vertex set is forcing")
}

/// Every minimum zero forcing set, in enumeration order.
pub fn minimum_zero_forcing_sets(g: &Graph, budget: Budget) -> Result<Vec<Vec<usize>>> {
    let k = zero_forcing_number(g, budget)?.k;
    let mut meter = budget.meter();
    let mut prop = Propagator::new(g);
    let mut all = Vec::new();
    for_each_subset_of_size(g.n(), k, |s| {
        meter.tick()?;
        if prop.run(s, Worklist::Queue) == g.n() {
            all.push(s.to_vec());
        }
        Ok(true)
    })?;
    Ok(all)
}

/// An initial colored set plus the ordered list of forces `(forcer, forced)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForcingProcess {
    pub initial: Vec<usize>,
    pub events: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProcessViolation {
    #[error("vertex {0} out of range")]
    OutOfRange(usize),
    #[error("vertex {0} listed twice in the initial set")]
    DuplicateInitial(usize),
    #[error("vertex {0} is forced but was already colored")]
    AlreadyColored(usize),
    #[error("vertex {0} forces twice")]
    ForcesTwice(usize),
    #[error("forcer {0} is not colored at its event")]
    ForcerUncolored(usize),
    #[error("{forced} is not the unique uncolored neighbor of {forcer}")]
    NotUniqueUncolored { forcer: usize, forced: usize },
    #[error("{0} vertices are never colored")]
    Incomplete(usize),
}

impl ForcingProcess {
    /// Replays the events on `g` and checks every process invariant.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), ProcessViolation> {
        let n = g.n();
        let mut colored = vec![false; n];
        for &v in &self.initial {
            if v >= n {
                return Err(ProcessViolation::OutOfRange(v));
            }
            if colored[v] {
                return Err(ProcessViolation::DuplicateInitial(v));
            }
            colored[v] = true;
        }
        let mut has_forced = vec![false; n];
        for &(u, w) in &self.events {
            if u >= n || w >= n {
                return Err(ProcessViolation::OutOfRange(u.max(w)));
            }
            if !colored[u] {
                return Err(ProcessViolation::ForcerUncolored(u));
            }
            if has_forced[u] {
                return Err(ProcessViolation::ForcesTwice(u));
            }
            if colored[w] {
                return Err(ProcessViolation::AlreadyColored(w));
            }
            let mut uncolored = g.neighbors(u).filter(|&x| !colored[x]);
            if uncolored.next() != Some(w) || uncolored.next().is_some() {
                return Err(ProcessViolation::NotUniqueUncolored {
                    forcer: u,
                    forced: w,
                });
            }
            has_forced[u] = true;
            colored[w] = true;
        }
        let missing = colored.iter().filter(|c| !**c).count();
        if missing > 0 {
            return Err(ProcessViolation::Incomplete(missing));
        }
        Ok(())
    }

    /// The vertex forced by each vertex, if any.
    pub fn successor_map(&self, n: usize) -> Vec<Option<usize>> {
        let mut next = vec![None; n];
        for &(u, w) in &self.events {
            next[u] = Some(w);
        }
        next
    }
}

fn record_with(
    g: &Graph,
    s: &[usize],
    mut choose: impl FnMut(&[usize]) -> usize,
) -> Result<ForcingProcess> {
    if !is_zero_forcing(g, s) {
        return Err(Error::NotForcing);
    }
    let mut initial = s.to_vec();
    initial.sort_unstable();
    initial.dedup();
    let n = g.n();
    let mut colored = vec![false; n];
    for &v in &initial {
        colored[v] = true;
    }
    let mut events = Vec::with_capacity(n - initial.len());
    let mut ready = Vec::new();
    while events.len() + initial.len() < n {
        // recomputed each step; graphs here are small
        ready.clear();
        ready.extend((0..n).filter(|&v| colored[v] && count_uncolored(g, &colored, v) == 1));
        assert!(!ready.is_empty(), "zero forcing set stalled");
        let u = ready[choose(&ready)];
        let w = g
            .neighbors(u)
            .find(|&w| !colored[w])
            .expect("one uncolored neighbor");
        colored[w] = true;
        events.push((u, w));
    }
    Ok(ForcingProcess { initial, events })
}

fn count_uncolored(g: &Graph, colored: &[bool], v: usize) -> usize {
    g.neighbors(v).filter(|&w| !colored[w]).count()
}

/// Records a forcing process for the zero forcing set `s`. At every step
/// the smallest colored vertex able to force does so.
pub fn record_process(g: &Graph, s: &[usize]) -> Result<ForcingProcess> {
    record_with(g, s, |_| 0)
}

/// Like [`record_process`], but each step picks uniformly among all
/// vertices able to force.
pub fn record_process_random<R: Rng + ?Sized>(
    g: &Graph,
    s: &[usize],
    rng: &mut R,
) -> Result<ForcingProcess> {
    record_with(g, s, |ready| rng.gen_range(0..ready.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn closure_examples() {
        let p3 = families::path(3);
        assert_eq!(closure(&p3, &[0]), vec![0, 1, 2]);
        let k3 = families::complete(3);
        assert_eq!(closure(&k3, &[1]), vec![1]);
        let c4 = families::cycle(4);
        assert_eq!(closure(&c4, &[2]), vec![2]);
        assert_eq!(closure(&c4, &[]), Vec::<usize>::new());
    }

    #[test]
    fn is_zero_forcing_examples() {
        for n in 1..8 {
            assert!(is_zero_forcing(&families::path(n), &[0]));
        }
        let k3 = families::complete(3);
        assert!(!is_zero_forcing(&k3, &[0]));
        assert!(is_zero_forcing(&k3, &[0, 1, 2]));
    }

    #[test]
    fn known_values() {
        let z = |g: &Graph| zero_forcing_number(g, Budget::unlimited()).unwrap();
        assert_eq!(
            z(&families::path(5)),
            ZeroForcing {
                k: 1,
                witness: vec![0]
            }
        );
        assert_eq!(z(&families::complete(4)).k, 3);
        assert_eq!(
            z(&families::cycle(4)),
            ZeroForcing {
                k: 2,
                witness: vec![0, 1]
            }
        );
        assert_eq!(z(&families::star(3)).k, 2);
        assert_eq!(
            z(&Graph::empty(1)),
            ZeroForcing {
                k: 1,
                witness: vec![0]
            }
        );
        assert!(matches!(
            zero_forcing_number(&Graph::empty(0), Budget::unlimited()),
            Err(Error::EmptyGraph)
        ));
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let g = families::complete(6);
        assert!(matches!(
            zero_forcing_number(&g, Budget::nodes(5)),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn record_process_examples() {
        let p3 = families::path(3);
        let proc = record_process(&p3, &[0]).unwrap();
        assert_eq!(proc.events, vec![(0, 1), (1, 2)]);
        proc.validate(&p3).unwrap();

        let k3 = families::complete(3);
        let proc = record_process(&k3, &[0, 1]).unwrap();
        assert_eq!(proc.events, vec![(0, 2)]);

        let proc = record_process(&k3, &[0, 1, 2]).unwrap();
        assert!(proc.events.is_empty());

        assert!(matches!(record_process(&k3, &[0]), Err(Error::NotForcing)));
    }

    #[test]
    fn validate_catches_bad_events() {
        let p3 = families::path(3);
        let bad = ForcingProcess {
            initial: vec![1],
            events: vec![(1, 0), (0, 2)],
        };
        assert_eq!(
            bad.validate(&p3),
            Err(ProcessViolation::NotUniqueUncolored {
                forcer: 1,
                forced: 0
            })
        );
        let incomplete = ForcingProcess {
            initial: vec![0],
            events: vec![(0, 1)],
        };
        assert_eq!(
            incomplete.validate(&p3),
            Err(ProcessViolation::Incomplete(1))
        );
        let twice = ForcingProcess {
            initial: vec![0, 0],
            events: vec![],
        };
        assert_eq!(
            twice.validate(&p3),
            Err(ProcessViolation::DuplicateInitial(0))
        );
    }

    #[test]
    fn enumerates_all_minimum_sets() {
        // C_4: any two adjacent vertices force, opposite pairs do not
        let sets = minimum_zero_forcing_sets(&families::cycle(4), Budget::unlimited()).unwrap();
        assert_eq!(sets, vec![vec![0, 1], vec![0, 3], vec![1, 2], vec![2, 3]]);
    }
}

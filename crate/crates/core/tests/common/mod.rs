//! Brute-force oracles shared by the integration suites. Nothing here calls
//! the solvers it is used to check.
#![allow(dead_code)]

use zfbrush::format::parse_graph6_lines;
use zfbrush::Graph;

pub const CORPUS_N6: &str = include_str!("../../data/connected_n2_6.g6");
pub const CORPUS_N5: &str = include_str!("../../data/connected_n2_5.g6");

pub fn corpus_n6() -> Vec<Graph> {
    parse_graph6_lines(CORPUS_N6).unwrap()
}

pub fn corpus_n5() -> Vec<Graph> {
    parse_graph6_lines(CORPUS_N5).unwrap()
}

fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let mut a = vec![vec![false; g.n()]; g.n()];
    for &(u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

/// Applies the color-change rule until nothing changes, rescanning all
/// vertices each round.
pub fn naive_closure(g: &Graph, s: &[usize]) -> Vec<bool> {
    let a = adjacency(g);
    let n = g.n();
    let mut colored = vec![false; n];
    for &v in s {
        colored[v] = true;
    }
    loop {
        let mut changed = false;
        for u in 0..n {
            if !colored[u] {
                continue;
            }
            let white: Vec<usize> = (0..n).filter(|&w| a[u][w] && !colored[w]).collect();
            if white.len() == 1 {
                colored[white[0]] = true;
                changed = true;
            }
        }
        if !changed {
            return colored;
        }
    }
}

/// Smallest size of a forcing set, and the lexicographically smallest sorted
/// list among the forcing sets of that size.
pub fn naive_zero_forcing(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.n();
    assert!(n <= 20);
    for k in 1..=n {
        let mut best: Option<Vec<usize>> = None;
        for mask in 0u32..1 << n {
            if mask.count_ones() as usize != k {
                continue;
            }
            let s: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if naive_closure(g, &s).iter().all(|&c| c) && best.as_ref().is_none_or(|b| s < *b) {
                best = Some(s);
            }
        }
        if let Some(b) = best {
            return (k, b);
        }
    }
    unreachable!()
}

/// Arcs of the orientation given by direction bits (bit clear: smaller
/// endpoint is the tail).
pub fn mask_arcs(g: &Graph, mask: u64) -> Vec<(usize, usize)> {
    g.edges()
        .iter()
        .enumerate()
        .map(|(i, &(u, v))| if mask >> i & 1 == 0 { (u, v) } else { (v, u) })
        .collect()
}

/// Cycle detection by repeated removal of vertices without in-arcs.
pub fn naive_is_acyclic(n: usize, arcs: &[(usize, usize)]) -> bool {
    let mut alive = vec![true; n];
    for _ in 0..n {
        let source = (0..n).find(|&v| alive[v] && !arcs.iter().any(|&(a, b)| b == v && alive[a]));
        match source {
            Some(v) => alive[v] = false,
            None => return false,
        }
    }
    true
}

/// All directed paths with at least one arc, as sets of arc indices.
fn all_paths(n: usize, arcs: &[(usize, usize)]) -> Vec<u64> {
    let mut out = Vec::new();
    fn extend(v: usize, used: u64, arcs: &[(usize, usize)], out: &mut Vec<u64>) {
        for (i, &(a, b)) in arcs.iter().enumerate() {
            if a == v && used >> i & 1 == 0 {
                let next = used | 1 << i;
                out.push(next);
                extend(b, next, arcs, out);
            }
        }
    }
    for v in 0..n {
        extend(v, 0, arcs, &mut out);
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Minimum number of directed paths covering every arc, by exhaustive set
/// cover over all paths (branching on the lowest uncovered arc).
pub fn brute_force_cover(n: usize, arcs: &[(usize, usize)]) -> usize {
    let m = arcs.len();
    let full: u64 = if m == 64 { u64::MAX } else { (1 << m) - 1 };
    let paths = all_paths(n, arcs);
    fn search(covered: u64, full: u64, left: usize, paths: &[u64]) -> bool {
        if covered == full {
            return true;
        }
        if left == 0 {
            return false;
        }
        let lowest = (!covered & full).trailing_zeros();
        paths
            .iter()
            .filter(|&&p| p >> lowest & 1 == 1)
            .any(|&p| search(covered | p, full, left - 1, paths))
    }
    (1..=m)
        .find(|&k| search(0, full, k, &paths))
        .expect("m single-arc paths cover everything")
}

/// Minimum over all acyclic orientations of the brute-force cover.
pub fn naive_brushing(g: &Graph) -> usize {
    (0..1u64 << g.m())
        .map(|mask| mask_arcs(g, mask))
        .filter(|arcs| naive_is_acyclic(g.n(), arcs))
        .map(|arcs| brute_force_cover(g.n(), &arcs))
        .min()
        .expect("some orientation is acyclic")
}

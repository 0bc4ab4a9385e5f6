//! Named graph families and a reproducible G(n, p) generator.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path")
}

/// Panics for `n < 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    Graph::new(n, (1..n).map(|i| (i - 1, i)).chain([(0, n - 1)])).expect("cycle")
}

pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::new(n, edges).expect("complete graph")
}

/// K_{1,leaves}; vertex 0 is the center.
pub fn star(leaves: usize) -> Graph {
    Graph::new(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("star")
}

/// K_{a,b} with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
    Graph::new(a + b, edges).expect("complete bipartite graph")
}

/// Erdős–Rényi G(n, p). Pairs `u < v` are visited in lexicographic order and
/// each draws one `f64` from ChaCha8 seeded with `seed`; the pair is an
/// edge when the draw is below `p`.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::BadParams(format!("p = {p} is not a probability")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}

/// A parsed family spec such as `path:4`, `complete_bipartite:2,3` or
/// `random_gnp:8,0.5,1`.
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    CompleteBipartite(usize, usize),
    RandomGnp { n: usize, p: f64, seed: u64 },
}

impl Family {
    pub fn build(&self) -> Result<Graph> {
        Ok(match *self {
            Family::Path(n) => path(n),
            Family::Cycle(n) if n < 3 => {
                return Err(Error::BadParams(format!("cycle needs n >= 3, got {n}")))
            }
            Family::Cycle(n) => cycle(n),
            Family::Complete(n) => complete(n),
            Family::Star(k) => star(k),
            Family::CompleteBipartite(a, b) => complete_bipartite(a, b),
            Family::RandomGnp { n, p, seed } => random_gnp(n, p, seed)?,
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::Star(k) => write!(f, "star:{k}"),
            Family::CompleteBipartite(a, b) => write!(f, "complete_bipartite:{a},{b}"),
            Family::RandomGnp { n, p, seed } => write!(f, "random_gnp:{n},{p},{seed}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadParams(format!("cannot parse family spec {s:?}"));
        let (name, args) = s.split_once(':').ok_or_else(bad)?;
        let args: Vec<&str> = args.split(',').map(str::trim).collect();
        let int = |i: usize| -> Result<usize> {
            args.get(i).and_then(|a| a.parse().ok()).ok_or_else(bad)
        };
        let arity = |k: usize| if args.len() == k { Ok(()) } else { Err(bad()) };
        match name {
            "path" => arity(1).and(Ok(Family::Path(int(0)?))),
            "cycle" => arity(1).and(Ok(Family::Cycle(int(0)?))),
            "complete" => arity(1).and(Ok(Family::Complete(int(0)?))),
            "star" => arity(1).and(Ok(Family::Star(int(0)?))),
            "complete_bipartite" => arity(2).and(Ok(Family::CompleteBipartite(int(0)?, int(1)?))),
            "random_gnp" => {
                arity(3)?;
                let p = args[1].parse().map_err(|_| bad())?;
                let seed = args[2].parse().map_err(|_| bad())?;
                Ok(Family::RandomGnp {
                    n: int(0)?,
                    p,
                    seed,
                })
            }
            _ => Err(Error::BadParams(format!("unknown family {name:?}"))),
        }
    }
}

/// Parses and builds a family spec in one step.
pub fn generate_family(spec: &str) -> Result<Graph> {
    spec.parse::<Family>()?.build()
}

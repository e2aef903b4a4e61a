//! Seeded instance generators.
//!
//! All randomness comes from `ChaCha8Rng` seeded with `seed_from_u64`, so a
//! fixed seed reproduces the same instance on every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::digraph::{Arc, Digraph};
use crate::error::{Error, Result};
use crate::graph::UndirectedGraph;

pub type InstanceRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> InstanceRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Each ordered pair `(u, v)`, `u != v`, becomes an arc with probability `p`.
pub fn random_digraph(n: usize, p: f64, rng: &mut impl Rng) -> Result<Digraph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("arc probability {p} outside [0, 1]")));
    }
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(p) {
                arcs.push((u, v));
            }
        }
    }
    Digraph::new(n, arcs)
}

/// Every pair `{u, v}` is oriented by a fair coin.
pub fn random_tournament(n: usize, rng: &mut impl Rng) -> Digraph {
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            arcs.push(if rng.gen_bool(0.5) { (u, v) } else { (v, u) });
        }
    }
    Digraph::new(n, arcs).expect("tournament is simple")
}

/// All `2^(n(n-1)/2)` labelled tournaments on `n` vertices, pair `{u < v}`
/// number `i` oriented `v -> u` when bit `i` of the code is set.
pub fn all_tournaments(n: usize) -> impl Iterator<Item = Digraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    assert!(pairs.len() < 64, "too many tournaments to enumerate");
    (0u64..1 << pairs.len()).map(move |code| {
        let arcs = pairs
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| if code >> i & 1 == 1 { (v, u) } else { (u, v) });
        Digraph::new(n, arcs).expect("tournament is simple")
    })
}

const REGULAR_ATTEMPTS: usize = 10_000;

/// A digraph with `d+(v) = d-(v) = k` for every vertex, built as the union of
/// `k` random fixed-point-free permutations with pairwise distinct arcs.
/// Each permutation is redrawn on collision, and the whole construction
/// restarts when a permutation cannot be placed.
pub fn k_regular(n: usize, k: usize, rng: &mut impl Rng) -> Result<Digraph> {
    if k == 0 {
        return Ok(Digraph::empty(n));
    }
    if k >= n {
        return Err(Error::InvalidParameter(format!("{k}-regular digraph needs more than {k} vertices, got {n}")));
    }
    for _ in 0..REGULAR_ATTEMPTS {
        let mut used = vec![false; n * n];
        let mut arcs: Vec<Arc> = Vec::with_capacity(n * k);
        let mut ok = true;
        for _ in 0..k {
            let mut placed = false;
            for _ in 0..REGULAR_ATTEMPTS {
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(rng);
                if (0..n).all(|v| perm[v] != v && !used[v * n + perm[v]]) {
                    for v in 0..n {
                        used[v * n + perm[v]] = true;
                        arcs.push((v, perm[v]));
                    }
                    placed = true;
                    break;
                }
            }
            if !placed {
                ok = false;
                break;
            }
        }
        if ok {
            return Digraph::new(n, arcs);
        }
    }
    Err(Error::InvalidParameter(format!("failed to build a {k}-regular digraph on {n} vertices")))
}

/// Undirected families whose symmetric closures serve as test instances.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Complete,
    Cycle,
    Path,
    Empty,
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "complete" => Ok(Family::Complete),
            "cycle" => Ok(Family::Cycle),
            "path" => Ok(Family::Path),
            "empty" => Ok(Family::Empty),
            _ => Err(Error::InvalidParameter(format!("unknown graph family `{s}`"))),
        }
    }
}

pub fn symmetric(family: Family, n: usize) -> Result<Digraph> {
    let g = match family {
        Family::Complete => UndirectedGraph::complete(n),
        Family::Cycle => UndirectedGraph::cycle(n)?,
        Family::Path => UndirectedGraph::path(n),
        Family::Empty => UndirectedGraph::empty(n),
    };
    Ok(Digraph::symmetric_closure(&g))
}

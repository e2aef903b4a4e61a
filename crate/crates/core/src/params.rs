//! Exact undirected parameters evaluated on backedge graphs.

use serde::{Deserialize, Serialize};

use crate::bits::{bits, full_mask};
use crate::error::{Error, Result};
use crate::graph::UndirectedGraph;
use crate::ordering::Ordering;

/// Largest graph the bitmask-based exact routines accept.
pub const MASK_LIMIT: usize = 64;

fn check_mask(g: &UndirectedGraph) -> Result<()> {
    Error::guard("bitmask graph", MASK_LIMIT, g.vertex_count())
}

/// Undirected parameter lifted to digraphs by minimising over orderings.
/// Every variant is monotone under taking subgraphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ParameterSelector {
    MaxDegree,
    ChromaticNumber,
    CliqueNumber,
    VertexCover,
}

impl ParameterSelector {
    pub const ALL: [ParameterSelector; 4] = [
        ParameterSelector::MaxDegree,
        ParameterSelector::ChromaticNumber,
        ParameterSelector::CliqueNumber,
        ParameterSelector::VertexCover,
    ];

    pub fn evaluate(self, g: &UndirectedGraph) -> Result<usize> {
        match self {
            ParameterSelector::MaxDegree => Ok(g.max_degree()),
            ParameterSelector::ChromaticNumber => chromatic_number(g),
            ParameterSelector::CliqueNumber => clique_number(g),
            ParameterSelector::VertexCover => vertex_cover_number(g),
        }
    }
}

/// Size of a largest clique; 1 for an edgeless nonempty graph, 0 for the empty graph.
pub fn clique_number(g: &UndirectedGraph) -> Result<usize> {
    check_mask(g)?;
    let adj: Vec<u64> = (0..g.vertex_count()).map(|v| g.adj_mask(v)).collect();
    Ok(max_clique(&adj, full_mask(g.vertex_count())))
}

pub fn independence_number(g: &UndirectedGraph) -> Result<usize> {
    check_mask(g)?;
    let n = g.vertex_count();
    let all = full_mask(n);
    let adj: Vec<u64> = (0..n).map(|v| !g.adj_mask(v) & all & !(1 << v)).collect();
    Ok(max_clique(&adj, all))
}

/// Minimum number of vertices touching every edge.
pub fn vertex_cover_number(g: &UndirectedGraph) -> Result<usize> {
    Ok(g.vertex_count() - independence_number(g)?)
}

fn max_clique(adj: &[u64], candidates: u64) -> usize {
    fn expand(adj: &[u64], size: usize, cand: u64, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        let mut cand = cand;
        while cand != 0 {
            if size + cand.count_ones() as usize <= *best {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            cand &= !(1 << v);
            expand(adj, size + 1, cand & adj[v], best);
        }
    }
    let mut best = 0;
    expand(adj, 0, candidates, &mut best);
    best
}

/// Exact chromatic number by branch and bound with a clique lower bound.
pub fn chromatic_number(g: &UndirectedGraph) -> Result<usize> {
    check_mask(g)?;
    let n = g.vertex_count();
    if n == 0 {
        return Ok(0);
    }
    let lower = clique_number(g)?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    // greedy upper bound along the degree order
    let mut best = greedy_colouring(g, &order).into_iter().max().map_or(0, |c| c + 1);
    if best == lower {
        return Ok(best);
    }
    let adj: Vec<u64> = (0..n).map(|v| g.adj_mask(v)).collect();
    let mut colour = vec![usize::MAX; n];

    fn search(
        i: usize,
        used: usize,
        order: &[usize],
        adj: &[u64],
        colour: &mut [usize],
        best: &mut usize,
        lower: usize,
    ) {
        if used >= *best || *best == lower {
            return;
        }
        if i == order.len() {
            *best = used;
            return;
        }
        let v = order[i];
        let mut forbidden = 0u64;
        for w in bits(adj[v]) {
            if colour[w] != usize::MAX {
                forbidden |= 1 << colour[w];
            }
        }
        for c in 0..used {
            if forbidden >> c & 1 == 0 {
                colour[v] = c;
                search(i + 1, used, order, adj, colour, best, lower);
            }
        }
        if used + 1 < *best {
            colour[v] = used;
            search(i + 1, used + 1, order, adj, colour, best, lower);
        }
        colour[v] = usize::MAX;
    }

    search(0, 0, &order, &adj, &mut colour, &mut best, lower);
    Ok(best)
}

/// First-fit colours along `order`; colour indices start at 0.
fn greedy_colouring(g: &UndirectedGraph, order: &[usize]) -> Vec<usize> {
    let n = g.vertex_count();
    let mut colour = vec![usize::MAX; n];
    let mut taken = Vec::new();
    for &v in order {
        taken.clear();
        taken.resize(g.degree(v) + 1, false);
        for &w in g.neighbors(v) {
            if colour[w] < taken.len() {
                taken[colour[w]] = true;
            }
        }
        colour[v] = taken.iter().position(|&t| !t).expect("a free colour exists");
    }
    colour
}

/// Number of colours first-fit uses when colouring `g` along `ord`.
pub fn greedy_color_count(g: &UndirectedGraph, ord: &Ordering) -> Result<usize> {
    ord.check_len(g.vertex_count())?;
    Ok(greedy_colouring(g, ord.perm()).into_iter().max().map_or(0, |c| c + 1))
}

/// Chromatic number by trying every assignment; test oracle for tiny graphs.
#[cfg(test)]
pub(crate) fn chromatic_by_enumeration(g: &UndirectedGraph) -> usize {
    let n = g.vertex_count();
    (0..=n)
        .find(|&k| {
            let total = (k as u64).pow(n as u32);
            (0..total).any(|code| {
                let mut c = vec![0; n];
                let mut x = code;
                for slot in c.iter_mut() {
                    *slot = (x % k as u64) as usize;
                    x /= k as u64;
                }
                g.edges().iter().all(|&(u, v)| c[u] != c[v])
            })
        })
        .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_values() {
        let k3 = UndirectedGraph::complete(3);
        assert_eq!(chromatic_number(&k3).unwrap(), 3);
        assert_eq!(clique_number(&k3).unwrap(), 3);
        assert_eq!(vertex_cover_number(&k3).unwrap(), 2);
        let c5 = UndirectedGraph::cycle(5).unwrap();
        assert_eq!(chromatic_number(&c5).unwrap(), 3);
        assert_eq!(clique_number(&c5).unwrap(), 2);
        assert_eq!(vertex_cover_number(&c5).unwrap(), 3);
        let e = UndirectedGraph::empty(3);
        assert_eq!(chromatic_number(&e).unwrap(), 1);
        assert_eq!(clique_number(&e).unwrap(), 1);
        assert_eq!(clique_number(&UndirectedGraph::empty(0)).unwrap(), 0);
        assert_eq!(chromatic_number(&UndirectedGraph::empty(0)).unwrap(), 0);
    }

    #[test]
    fn greedy_examples() {
        assert_eq!(greedy_color_count(&UndirectedGraph::empty(2), &Ordering::identity(2)).unwrap(), 1);
        let k3 = UndirectedGraph::complete(3);
        assert_eq!(greedy_color_count(&k3, &Ordering::new(vec![2, 0, 1]).unwrap()).unwrap(), 3);
        // around C5: colours 0,1,0,1 then vertex 4 sees 0 and 1
        let c5 = UndirectedGraph::cycle(5).unwrap();
        assert_eq!(greedy_color_count(&c5, &Ordering::identity(5)).unwrap(), 3);
    }

    #[test]
    fn guard_on_large_graphs() {
        let g = UndirectedGraph::empty(65);
        assert!(matches!(chromatic_number(&g), Err(Error::GuardExceeded { .. })));
    }

    fn small_graph() -> impl Strategy<Value = UndirectedGraph> {
        (0usize..=7).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let m = pairs.len();
            proptest::collection::vec(any::<bool>(), m).prop_map(move |keep| {
                let edges = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e);
                UndirectedGraph::new(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn chromatic_matches_enumeration(g in small_graph()) {
            prop_assert_eq!(chromatic_number(&g).unwrap(), chromatic_by_enumeration(&g));
        }

        #[test]
        fn clique_and_cover_match_subsets(g in small_graph()) {
            let n = g.vertex_count();
            let mut omega = 0;
            let mut alpha = 0;
            for s in 0u32..(1 << n) {
                let vs: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
                let pairs = || vs.iter().enumerate().flat_map(|(i, &u)| vs[i + 1..].iter().map(move |&v| (u, v)));
                if pairs().all(|(u, v)| g.has_edge(u, v)) { omega = omega.max(vs.len()); }
                if pairs().all(|(u, v)| !g.has_edge(u, v)) { alpha = alpha.max(vs.len()); }
            }
            prop_assert_eq!(clique_number(&g).unwrap(), omega);
            prop_assert_eq!(vertex_cover_number(&g).unwrap(), n - alpha);
        }

        #[test]
        fn greedy_within_brooks_bound(g in small_graph()) {
            let n = g.vertex_count();
            let c = greedy_color_count(&g, &Ordering::identity(n)).unwrap();
            prop_assert!(c <= g.max_degree() + 1);
            prop_assert!(c >= chromatic_number(&g).unwrap());
        }
    }
}

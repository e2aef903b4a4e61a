use std::collections::VecDeque;

use crate::bits::BitMatrix;
use crate::error::{Error, Result};

/// Simple undirected graph on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UndirectedGraph {
    n: usize,
    /// Sorted, each stored as `(min, max)`.
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    rows: BitMatrix,
}

impl UndirectedGraph {
    /// Builds a graph, rejecting loops, repeated edges and out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted(n, list))
    }

    /// Like `new` but silently merges repeated edges. Endpoints must be valid.
    pub(crate) fn from_pairs_dedup(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut list: Vec<_> = pairs
            .into_iter()
            .map(|(u, v)| {
                debug_assert!(u != v && u < n && v < n);
                (u.min(v), u.max(v))
            })
            .collect();
        list.sort_unstable();
        list.dedup();
        Self::from_sorted(n, list)
    }

    fn from_sorted(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        let mut rows = BitMatrix::new(n);
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
            rows.set(u, v);
            rows.set(v, u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        UndirectedGraph {
            n,
            edges,
            adj,
            rows,
        }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Self::from_sorted(n, edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!("cycle needs at least 3 vertices, got {n}")));
        }
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Self {
        Self::from_sorted(n, (1..n).map(|i| (i - 1, i)).collect())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(min, max)` pairs in sorted order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows.get(u, v)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Neighbourhood bitmask; only valid for graphs with at most 64 vertices.
    pub(crate) fn adj_mask(&self, v: usize) -> u64 {
        self.rows.row_mask(v)
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![u8::MAX; self.n];
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        queue.push_back(w);
                    } else if side[w] == side[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Largest minimum degree met while repeatedly deleting a minimum-degree vertex.
    pub fn degeneracy(&self) -> usize {
        let mut deg: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        let mut removed = vec![false; self.n];
        let mut best = 0;
        for _ in 0..self.n {
            let v = (0..self.n)
                .filter(|&v| !removed[v])
                .min_by_key(|&v| deg[v])
                .expect("a vertex remains");
            best = best.max(deg[v]);
            removed[v] = true;
            for &w in &self.adj[v] {
                if !removed[w] {
                    deg[w] -= 1;
                }
            }
        }
        best
    }

    /// Connected components, each sorted, listed by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// `other` is a spanning subgraph of `self` or equal to it.
    pub fn contains_edges_of(&self, other: &UndirectedGraph) -> bool {
        other.n == self.n && other.edges.iter().all(|&(u, v)| self.has_edge(u, v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructor_errors() {
        assert_eq!(UndirectedGraph::new(2, [(0, 0)]), Err(Error::Loop(0)));
        assert_eq!(
            UndirectedGraph::new(2, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            UndirectedGraph::new(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        ));
    }

    #[test]
    fn bipartite_and_degeneracy() {
        let k3 = UndirectedGraph::complete(3);
        assert!(!k3.is_bipartite());
        assert_eq!(k3.degeneracy(), 2);
        let tree = UndirectedGraph::new(5, [(0, 1), (0, 2), (2, 3), (2, 4)]).unwrap();
        assert!(tree.is_bipartite());
        assert_eq!(tree.degeneracy(), 1);
        let c6 = UndirectedGraph::cycle(6).unwrap();
        assert!(c6.is_bipartite());
        assert_eq!(c6.degeneracy(), 2);
        assert_eq!(UndirectedGraph::empty(0).degeneracy(), 0);
    }

    #[test]
    fn components_sorted() {
        let g = UndirectedGraph::new(5, [(3, 4), (0, 2)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 2], vec![1], vec![3, 4]]);
    }
}

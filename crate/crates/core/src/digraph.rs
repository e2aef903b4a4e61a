use std::collections::{BTreeSet, BinaryHeap};
use std::cmp::Reverse;

use serde::Serialize;

use crate::bits::BitMatrix;
use crate::error::{Error, Result};
use crate::graph::UndirectedGraph;
use crate::ordering::Ordering;

pub type Arc = (usize, usize);

/// Simple digraph on `0..n`: no loops, at most one arc per ordered pair.
/// Digons (both `(u, v)` and `(v, u)`) are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
    rows: BitMatrix,
}

/// Per-vertex degree statistics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeStats {
    pub out_deg: usize,
    pub in_deg: usize,
    pub d_max: usize,
    pub d_min: usize,
    /// Number of digons incident to the vertex.
    pub dig: usize,
}

impl Digraph {
    pub fn new(n: usize, arcs: impl IntoIterator<Item = Arc>) -> Result<Self> {
        let mut list = Vec::new();
        for (u, v) in arcs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            list.push((u, v));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateArc(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted(n, list))
    }

    fn from_sorted(n: usize, arcs: Vec<Arc>) -> Self {
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        let mut rows = BitMatrix::new(n);
        for &(u, v) in &arcs {
            out[u].push(v);
            inn[v].push(u);
            rows.set(u, v);
        }
        // arcs are sorted, so out lists already are; in lists need it
        for l in &mut inn {
            l.sort_unstable();
        }
        Digraph {
            n,
            arcs,
            out,
            inn,
            rows,
        }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    /// Directed cycle `0 -> 1 -> ... -> n-1 -> 0`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!("directed cycle needs at least 2 vertices, got {n}")));
        }
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// Transitive tournament with arcs `(i, j)` for `i < j`.
    pub fn transitive_tournament(n: usize) -> Self {
        Self::from_sorted(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows.get(u, v)
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.inn[v].len()
    }

    /// Out-neighbourhood as a bitmask; requires `n <= 64`.
    pub(crate) fn out_mask(&self, v: usize) -> u64 {
        self.rows.row_mask(v)
    }

    /// In-neighbourhood as a bitmask; requires `n <= 64`.
    pub(crate) fn in_mask(&self, v: usize) -> u64 {
        self.inn[v].iter().fold(0, |m, &u| m | 1 << u)
    }

    /// Position of `(u, v)` in `arcs()`, if present.
    pub fn arc_index(&self, u: usize, v: usize) -> Option<usize> {
        self.arcs.binary_search(&(u, v)).ok()
    }

    /// Undirected graph of the arcs pointing backwards under `ord`:
    /// edge `{u, v}` for every arc `(u, v)` with `v` before `u`.
    pub fn backedge_graph(&self, ord: &Ordering) -> Result<UndirectedGraph> {
        ord.check_len(self.n)?;
        Ok(UndirectedGraph::from_pairs_dedup(
            self.n,
            self.arcs.iter().copied().filter(|&(u, v)| ord.precedes(v, u)),
        ))
    }

    pub fn reverse(&self) -> Digraph {
        let mut arcs: Vec<Arc> = self.arcs.iter().map(|&(u, v)| (v, u)).collect();
        arcs.sort_unstable();
        Self::from_sorted(self.n, arcs)
    }

    /// Replaces every arc `(x, y)` by a path `x -> v_a -> y` through a fresh
    /// vertex. The fresh vertex of the i-th arc (in `arcs()` order) is `n + i`.
    pub fn subdivide(&self) -> Digraph {
        let arcs = self
            .arcs
            .iter()
            .enumerate()
            .flat_map(|(i, &(x, y))| [(x, self.n + i), (self.n + i, y)]);
        Digraph::new(self.n + self.arcs.len(), arcs).expect("subdivision is simple")
    }

    /// The digraph obtained by replacing every edge of `g` with a digon.
    pub fn symmetric_closure(g: &UndirectedGraph) -> Digraph {
        let mut arcs: Vec<Arc> = g.edges().iter().flat_map(|&(u, v)| [(u, v), (v, u)]).collect();
        arcs.sort_unstable();
        Self::from_sorted(g.vertex_count(), arcs)
    }

    pub fn dig(&self, v: usize) -> usize {
        self.out[v].iter().filter(|&&w| self.rows.get(w, v)).count()
    }

    pub fn degree_stats(&self, v: usize) -> Result<DegreeStats> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        let (o, i) = (self.out_degree(v), self.in_degree(v));
        Ok(DegreeStats {
            out_deg: o,
            in_deg: i,
            d_max: o.max(i),
            d_min: o.min(i),
            dig: self.dig(v),
        })
    }

    /// Largest `max(d+, d-)` over all vertices; 0 for the empty digraph.
    pub fn delta_max(&self) -> usize {
        (0..self.n).map(|v| self.out_degree(v).max(self.in_degree(v))).max().unwrap_or(0)
    }

    /// Largest `min(d+, d-)` over all vertices; 0 for the empty digraph.
    pub fn delta_min(&self) -> usize {
        (0..self.n).map(|v| self.out_degree(v).min(self.in_degree(v))).max().unwrap_or(0)
    }

    /// Largest number of digons at a single vertex.
    pub fn max_dig(&self) -> usize {
        (0..self.n).map(|v| self.dig(v)).max().unwrap_or(0)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_ok()
    }

    /// Lexicographically smallest topological ordering (Kahn with a min-heap).
    pub fn topological_order(&self) -> Result<Ordering> {
        topo_without(self, |_| false)
    }

    /// Spanning subdigraph with the arcs of `f` removed.
    pub fn remove_arcs(&self, f: &ArcSet) -> Digraph {
        let arcs = self.arcs.iter().copied().filter(|a| !f.contains(*a)).collect();
        Self::from_sorted(self.n, arcs)
    }

    /// Subdigraph induced by `vertices`, relabelled to `0..len` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Digraph> {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
            index[v] = i;
        }
        let arcs = self
            .arcs
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        Digraph::new(vertices.len(), arcs)
    }

    /// Undirected graph whose edges are the arcs of `f` with orientation
    /// forgotten; a digon with both arcs in `f` gives one edge.
    pub fn graph_of_arcset(&self, f: &ArcSet) -> Result<UndirectedGraph> {
        for &(u, v) in f.arcs() {
            if !self.has_arc(u, v) {
                return Err(Error::ArcNotInHost(u, v));
            }
        }
        Ok(UndirectedGraph::from_pairs_dedup(self.n, f.arcs().iter().copied()))
    }

    /// `self - f` has no directed cycle.
    pub fn is_fas(&self, f: &ArcSet) -> bool {
        topo_without(self, |a| f.contains(a)).is_ok()
    }

    /// Underlying simple graph; digons collapse to a single edge.
    pub fn underlying_graph(&self) -> UndirectedGraph {
        UndirectedGraph::from_pairs_dedup(self.n, self.arcs.iter().copied())
    }

    pub fn to_dot(&self, highlight: Option<&Ordering>) -> String {
        let mut s = String::from("digraph D {\n");
        if let Some(ord) = highlight {
            s.push_str(&format!("  // ordering: {:?}\n", ord.perm()));
        }
        for v in 0..self.n {
            s.push_str(&format!("  {v};\n"));
        }
        for &(u, v) in &self.arcs {
            match highlight {
                Some(ord) if ord.precedes(v, u) => {
                    s.push_str(&format!("  {u} -> {v} [color=red, style=bold];\n"))
                }
                _ => s.push_str(&format!("  {u} -> {v};\n")),
            }
        }
        s.push_str("}\n");
        s
    }
}

fn topo_without(d: &Digraph, skip: impl Fn(Arc) -> bool) -> Result<Ordering> {
    let n = d.n;
    let mut indeg = vec![0usize; n];
    for &(u, v) in &d.arcs {
        if !skip((u, v)) {
            indeg[v] += 1;
        }
    }
    let mut heap: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| indeg[v] == 0).map(Reverse).collect();
    let mut perm = Vec::with_capacity(n);
    while let Some(Reverse(u)) = heap.pop() {
        perm.push(u);
        for &w in &d.out[u] {
            if skip((u, w)) {
                continue;
            }
            indeg[w] -= 1;
            if indeg[w] == 0 {
                heap.push(Reverse(w));
            }
        }
    }
    if perm.len() < n {
        return Err(Error::Cyclic);
    }
    Ordering::new(perm)
}

/// A set of arcs of some host digraph, typically a candidate feedback arc set.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct ArcSet {
    arcs: BTreeSet<Arc>,
}

impl ArcSet {
    /// Validates that every arc belongs to `host`.
    pub fn new(host: &Digraph, arcs: impl IntoIterator<Item = Arc>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in arcs {
            if !host.has_arc(u, v) {
                return Err(Error::ArcNotInHost(u, v));
            }
            set.insert((u, v));
        }
        Ok(ArcSet { arcs: set })
    }

    pub(crate) fn from_arcs_unchecked(arcs: impl IntoIterator<Item = Arc>) -> Self {
        ArcSet {
            arcs: arcs.into_iter().collect(),
        }
    }

    pub fn contains(&self, a: Arc) -> bool {
        self.arcs.contains(&a)
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Arc> + '_ {
        self.arcs.iter().copied()
    }

    pub fn arcs(&self) -> &BTreeSet<Arc> {
        &self.arcs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c3() -> Digraph {
        Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    fn digon() -> Digraph {
        Digraph::new(2, [(0, 1), (1, 0)]).unwrap()
    }

    #[test]
    fn constructor_examples() {
        assert_eq!(c3().arc_count(), 3);
        assert_eq!(digon().arc_count(), 2);
        assert_eq!(Digraph::new(1, [(0, 0)]), Err(Error::Loop(0)));
        assert_eq!(Digraph::new(2, [(0, 1), (0, 1)]), Err(Error::DuplicateArc(0, 1)));
        assert!(matches!(
            Digraph::new(2, [(0, 5)]),
            Err(Error::VertexOutOfRange { vertex: 5, n: 2 })
        ));
    }

    #[test]
    fn backedge_graph_examples() {
        let g = c3().backedge_graph(&Ordering::identity(3)).unwrap();
        assert_eq!(g.edges(), &[(0, 2)]);

        let dag = Digraph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let topo = dag.topological_order().unwrap();
        assert_eq!(dag.backedge_graph(&topo).unwrap().edge_count(), 0);

        for perm in [vec![0, 1], vec![1, 0]] {
            let g = digon().backedge_graph(&Ordering::new(perm).unwrap()).unwrap();
            assert_eq!(g.edges(), &[(0, 1)]);
        }

        assert_eq!(
            c3().backedge_graph(&Ordering::identity(2)),
            Err(Error::OrderingMismatch { expected: 3, got: 2 })
        );
    }

    #[test]
    fn reverse_examples() {
        let r = c3().reverse();
        assert_eq!(r.arcs(), &[(0, 2), (1, 0), (2, 1)]);
        assert_eq!(digon().reverse(), digon());
        assert_eq!(r.reverse(), c3());
    }

    #[test]
    fn subdivide_examples() {
        let s = c3().subdivide();
        assert_eq!((s.vertex_count(), s.arc_count()), (6, 6));
        // a directed 6-cycle: every vertex has in = out = 1 and the graph is one cycle
        assert!((0..6).all(|v| s.out_degree(v) == 1 && s.in_degree(v) == 1));
        let mut v = 0;
        for _ in 0..6 {
            v = s.out_neighbors(v)[0];
        }
        assert_eq!(v, 0);
        assert_ne!(s.out_neighbors(s.out_neighbors(s.out_neighbors(0)[0])[0])[0], 0);

        assert_eq!(Digraph::empty(4).subdivide(), Digraph::empty(4));

        let d = digon().subdivide();
        assert_eq!((d.vertex_count(), d.arc_count()), (4, 4));
        assert!(!d.is_acyclic());
        assert_eq!(d.arcs(), &[(0, 2), (1, 3), (2, 1), (3, 0)]);
    }

    #[test]
    fn symmetric_closure_examples() {
        let k2 = Digraph::symmetric_closure(&UndirectedGraph::complete(2));
        assert_eq!(k2, digon());
        let c5 = Digraph::symmetric_closure(&UndirectedGraph::cycle(5).unwrap());
        assert_eq!(c5.arc_count(), 10);
        assert_eq!(Digraph::symmetric_closure(&UndirectedGraph::empty(3)).arc_count(), 0);
    }

    #[test]
    fn degree_stats_examples() {
        let expect = |o, i, mx, mn, dig| DegreeStats {
            out_deg: o,
            in_deg: i,
            d_max: mx,
            d_min: mn,
            dig,
        };
        for v in 0..3 {
            assert_eq!(c3().degree_stats(v).unwrap(), expect(1, 1, 1, 1, 0));
        }
        assert_eq!(digon().degree_stats(0).unwrap(), expect(1, 1, 1, 1, 1));
        let k3 = Digraph::symmetric_closure(&UndirectedGraph::complete(3));
        for v in 0..3 {
            assert_eq!(k3.degree_stats(v).unwrap(), expect(2, 2, 2, 2, 2));
        }
        assert!(c3().degree_stats(3).is_err());
    }

    #[test]
    fn delta_examples() {
        assert_eq!((c3().delta_max(), c3().delta_min()), (1, 1));
        let k3 = Digraph::symmetric_closure(&UndirectedGraph::complete(3));
        assert_eq!((k3.delta_max(), k3.delta_min()), (2, 2));
        let tt = Digraph::transitive_tournament(3);
        assert_eq!((tt.delta_max(), tt.delta_min()), (2, 1));
        assert_eq!((Digraph::empty(0).delta_max(), Digraph::empty(0).delta_min()), (0, 0));
    }

    #[test]
    fn topological_examples() {
        assert!(!c3().is_acyclic());
        assert_eq!(c3().topological_order(), Err(Error::Cyclic));
        let path = Digraph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(path.topological_order().unwrap().perm(), &[0, 1, 2]);
        assert_eq!(Digraph::empty(4).topological_order().unwrap(), Ordering::identity(4));
        let back = Digraph::new(3, [(2, 1), (1, 0)]).unwrap();
        assert_eq!(back.topological_order().unwrap().perm(), &[2, 1, 0]);
    }

    #[test]
    fn arcset_examples() {
        let d = c3();
        let f = ArcSet::new(&d, [(2, 0)]).unwrap();
        assert_eq!(d.graph_of_arcset(&f).unwrap().edges(), &[(0, 2)]);
        assert!(d.is_fas(&f));
        assert!(!d.is_fas(&ArcSet::default()));
        assert_eq!(d.graph_of_arcset(&ArcSet::default()).unwrap().edge_count(), 0);
        assert_eq!(ArcSet::new(&d, [(0, 2)]), Err(Error::ArcNotInHost(0, 2)));

        let g = digon();
        let both = ArcSet::new(&g, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.graph_of_arcset(&both).unwrap().edge_count(), 1);
        assert!(g.is_fas(&ArcSet::new(&g, [(1, 0)]).unwrap()));
    }

    #[test]
    fn underlying_examples() {
        let u = c3().subdivide().underlying_graph();
        assert!(u.is_bipartite());
        assert_eq!(u.degeneracy(), 2);
        assert_eq!(digon().underlying_graph().edge_count(), 1);
    }

    #[test]
    fn dot_marks_backedges() {
        let dot = c3().to_dot(Some(&Ordering::identity(3)));
        assert!(dot.contains("2 -> 0 [color=red"));
        assert!(dot.contains("0 -> 1;"));
    }
}

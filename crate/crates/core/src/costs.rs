//! Linear-arrangement costs restricted to backward arcs: diOLA, OLA of
//! backedge graphs, directed cutwidth and directed bandwidth.
//!
//! For a digraph and ordering, only the arcs of the backedge graph count and
//! their lengths are measured in that same ordering. `ola_vec` instead
//! re-arranges each backedge graph optimally.

use std::collections::HashMap;

use serde::Serialize;

use crate::bits::{bits, full_mask};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::graph::UndirectedGraph;
use crate::ordering::Ordering;
use crate::search::{cut_table, min_over_orderings, prefix_dp, Combine};
use crate::width::{Solver, SUBSET_HARD_LIMIT};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CostReport {
    pub value: usize,
    pub witness: Ordering,
    /// Arrangement of the backedge graph, for `ola_vec` only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inner: Option<Ordering>,
}

/// `|position(u) - position(v)|`.
pub fn arc_length(ord: &Ordering, u: usize, v: usize) -> Result<usize> {
    if u == v {
        return Err(Error::InvalidParameter(format!("arc length of ({u}, {v}) with equal endpoints")));
    }
    for w in [u, v] {
        if w >= ord.len() {
            return Err(Error::VertexOutOfRange { vertex: w, n: ord.len() });
        }
    }
    Ok(ord.position(u).abs_diff(ord.position(v)))
}

/// Sum of the lengths of the backward arcs under `ord`.
pub fn backward_length_sum(d: &Digraph, ord: &Ordering) -> Result<usize> {
    let g = d.backedge_graph(ord)?;
    g.edges().iter().map(|&(u, v)| arc_length(ord, u, v)).sum()
}

/// Longest backward arc under `ord`; 0 when there is none.
pub fn backward_max_length(d: &Digraph, ord: &Ordering) -> Result<usize> {
    let g = d.backedge_graph(ord)?;
    g.edges().iter().map(|&(u, v)| arc_length(ord, u, v)).try_fold(0, |m, l| Ok(m.max(l?)))
}

/// Number of backward arcs crossing each of the `n - 1` gaps of `ord`.
pub fn backward_cut_profile(d: &Digraph, ord: &Ordering) -> Result<Vec<usize>> {
    ord.check_len(d.vertex_count())?;
    let n = d.vertex_count();
    let mut profile = vec![0; n.saturating_sub(1)];
    for &(u, v) in d.arcs() {
        let (pu, pv) = (ord.position(u), ord.position(v));
        if pv < pu {
            for gap in &mut profile[pv..pu] {
                *gap += 1;
            }
        }
    }
    Ok(profile)
}

/// Total length of the edges of `g` under `ord`.
pub fn arrangement_cost(g: &UndirectedGraph, ord: &Ordering) -> Result<usize> {
    ord.check_len(g.vertex_count())?;
    g.edges().iter().map(|&(u, v)| arc_length(ord, u, v)).sum()
}

impl Solver {
    fn backward_cuts(&self, d: &Digraph) -> Result<Vec<u16>> {
        self.check_subset(d)?;
        let n = d.vertex_count();
        let full = full_mask(n) as u32;
        let out: Vec<u32> = (0..n).map(|v| d.out_mask(v) as u32).collect();
        let inn: Vec<u32> = (0..n).map(|v| d.in_mask(v) as u32).collect();
        // backward arcs crossing prefix S run from outside S into S
        Ok(cut_table(n, |s, u| {
            let after = full & !s & !(1 << u);
            (inn[u] & after).count_ones() as i32 - (out[u] & s).count_ones() as i32
        }))
    }

    /// Minimum total backward-arc length, by summing prefix cuts.
    pub fn di_ola(&self, d: &Digraph) -> Result<CostReport> {
        let cut = self.backward_cuts(d)?;
        let (value, witness) = prefix_dp(d.vertex_count(), Combine::Sum, |s, u| cut[(s | 1 << u) as usize]);
        Ok(CostReport { value, witness, inner: None })
    }

    /// diOLA by enumerating every ordering.
    pub fn di_ola_bruteforce(&self, d: &Digraph) -> Result<CostReport> {
        Error::guard("ordering enumeration", self.guards.brute_force_n, d.vertex_count())?;
        let (value, witness) = min_over_orderings(d.vertex_count(), || {
            |perm: &[usize]| {
                let ord = Ordering::new(perm.to_vec()).expect("permutation");
                backward_length_sum(d, &ord).expect("ordering fits")
            }
        });
        Ok(CostReport { value, witness, inner: None })
    }

    /// Optimal linear arrangement of an undirected graph.
    pub fn ola_undirected(&self, g: &UndirectedGraph) -> Result<CostReport> {
        let n = g.vertex_count();
        Error::guard("subset table", self.guards.subset_n.min(SUBSET_HARD_LIMIT), n)?;
        let adj: Vec<u32> = (0..n).map(|v| g.adj_mask(v) as u32).collect();
        let full = full_mask(n) as u32;
        let cut = cut_table(n, |s, u| {
            let after = full & !s & !(1 << u);
            (adj[u] & after).count_ones() as i32 - (adj[u] & s).count_ones() as i32
        });
        let (value, witness) = prefix_dp(n, Combine::Sum, |s, u| cut[(s | 1 << u) as usize]);
        Ok(CostReport { value, witness, inner: None })
    }

    /// Minimum over orderings of the OLA of the backedge graph; `inner` is
    /// the optimal arrangement of the winning backedge graph.
    pub fn ola_vec(&self, d: &Digraph) -> Result<CostReport> {
        Error::guard("double ordering enumeration", self.guards.ola_vec_n, d.vertex_count())?;
        let (value, witness) = min_over_orderings(d.vertex_count(), || {
            let mut memo: HashMap<Vec<(usize, usize)>, usize> = HashMap::new();
            move |perm: &[usize]| {
                let ord = Ordering::new(perm.to_vec()).expect("permutation");
                let g = d.backedge_graph(&ord).expect("ordering fits");
                *memo
                    .entry(g.edges().to_vec())
                    .or_insert_with(|| self.ola_undirected(&g).expect("within guard").value)
            }
        });
        let inner = self.ola_undirected(&d.backedge_graph(&witness)?)?.witness;
        Ok(CostReport { value, witness, inner: Some(inner) })
    }

    /// Minimum over orderings of the largest number of backward arcs
    /// crossing a gap.
    pub fn directed_cutwidth(&self, d: &Digraph) -> Result<CostReport> {
        let cut = self.backward_cuts(d)?;
        let (value, witness) = prefix_dp(d.vertex_count(), Combine::Max, |s, u| cut[(s | 1 << u) as usize]);
        Ok(CostReport { value, witness, inner: None })
    }

    /// Minimum over orderings of the longest backward arc, 0 for acyclic
    /// digraphs. Branch and bound in lexicographic order: a placed vertex
    /// with an unplaced in-neighbour already forces a backward arc at least
    /// as long as its distance to the next free position.
    pub fn directed_bandwidth(&self, d: &Digraph) -> Result<CostReport> {
        Error::guard("ordering enumeration", self.guards.brute_force_n, d.vertex_count())?;
        let n = d.vertex_count();
        let mut bb = Bandwidth {
            n,
            out: (0..n).map(|v| d.out_mask(v)).collect(),
            inn: (0..n).map(|v| d.in_mask(v)).collect(),
            pos: vec![usize::MAX; n],
            perm: Vec::with_capacity(n),
            best: usize::MAX,
            best_perm: Vec::new(),
        };
        bb.dfs(0, 0);
        Ok(CostReport {
            value: bb.best,
            witness: Ordering::new(bb.best_perm)?,
            inner: None,
        })
    }
}

struct Bandwidth {
    n: usize,
    out: Vec<u64>,
    inn: Vec<u64>,
    pos: Vec<usize>,
    perm: Vec<usize>,
    best: usize,
    best_perm: Vec<usize>,
}

impl Bandwidth {
    fn dfs(&mut self, placed: u64, current: usize) {
        let p = self.perm.len();
        if p == self.n {
            if current < self.best {
                self.best = current;
                self.best_perm = self.perm.clone();
            }
            return;
        }
        for u in bits(full_mask(self.n) & !placed) {
            // arcs (u, v) with v already placed become backward
            let longest = bits(self.out[u] & placed).map(|v| p - self.pos[v]).max().unwrap_or(0);
            let now = current.max(longest);
            let placed2 = placed | 1 << u;
            self.pos[u] = p;
            let pending = bits(placed2)
                .filter(|&v| self.inn[v] & !placed2 != 0)
                .map(|v| p + 1 - self.pos[v])
                .max()
                .unwrap_or(0);
            if now.max(pending) < self.best {
                self.perm.push(u);
                self.dfs(placed2, now);
                self.perm.pop();
            }
            self.pos[u] = usize::MAX;
        }
    }
}

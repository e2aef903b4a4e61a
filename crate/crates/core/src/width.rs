//! Degreewidth and the other ordering-minimised parameters of a digraph.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::bits::{bits, full_mask};
use crate::digraph::{ArcSet, Digraph};
use crate::error::{Error, Result};
use crate::graph::UndirectedGraph;
use crate::ordering::Ordering;
use crate::params::ParameterSelector;
use crate::search::{min_over_orderings, prefix_dp, Combine};

/// Size caps for the exponential solvers. Exceeding one is an error.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Guards {
    /// Enumeration of all `n!` orderings.
    pub brute_force_n: usize,
    /// Tables indexed by vertex subsets.
    pub subset_n: usize,
    /// Enumeration of arc subsets for minimal feedback arc sets.
    pub minimal_fas_arcs: usize,
    /// Exact dichromatic number (set cover over acyclic sets).
    pub dichromatic_n: usize,
    /// Double minimisation over orderings for OLA of backedge graphs.
    pub ola_vec_n: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            brute_force_n: 10,
            subset_n: 24,
            minimal_fas_arcs: 20,
            dichromatic_n: 16,
            ola_vec_n: 8,
        }
    }
}

/// Hard ceiling for subset tables, whatever the configured guard.
pub const SUBSET_HARD_LIMIT: usize = 28;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    BruteForce,
    SubsetDp,
    FasBranchAndBound,
    IndegreeHeuristic,
    AcyclicSetCover,
    CycleBranchAndBound,
    MinimalFasEnumeration,
    BranchAndBound,
    DegreeStatistic,
}

/// A width value with an ordering whose backedge graph attains it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WidthResult {
    pub value: usize,
    pub witness: Ordering,
    pub method: Method,
}

/// Outcome of replaying the Brooks-type observation on every optimal ordering.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BrooksScan {
    pub k: usize,
    pub dichromatic: usize,
    /// `dichromatic == k + 1`, the only case with something to check.
    pub tight: bool,
    pub optimal_orderings: usize,
    pub counterexamples: Vec<Ordering>,
}

/// Exact solvers, parametrised by their size guards.
#[derive(Clone, Copy, Debug, Default)]
pub struct Solver {
    pub guards: Guards,
}

impl Solver {
    pub fn new(guards: Guards) -> Self {
        Solver { guards }
    }

    fn check_bf(&self, d: &Digraph) -> Result<()> {
        Error::guard("ordering enumeration", self.guards.brute_force_n, d.vertex_count())
    }

    pub(crate) fn check_subset(&self, d: &Digraph) -> Result<()> {
        Error::guard(
            "subset table",
            self.guards.subset_n.min(SUBSET_HARD_LIMIT),
            d.vertex_count(),
        )
    }

    /// Minimum over all orderings of `sel` applied to the backedge graph.
    pub fn directed_parameter(&self, d: &Digraph, sel: ParameterSelector) -> Result<WidthResult> {
        self.check_bf(d)?;
        let (value, witness) = min_over_orderings(d.vertex_count(), || {
            let mut memo: HashMap<Vec<(usize, usize)>, usize> = HashMap::new();
            move |perm: &[usize]| {
                let ord = Ordering::new(perm.to_vec()).expect("permutation");
                let g = d.backedge_graph(&ord).expect("ordering fits");
                if sel == ParameterSelector::MaxDegree {
                    return g.max_degree();
                }
                *memo
                    .entry(g.edges().to_vec())
                    .or_insert_with(|| sel.evaluate(&g).expect("n within mask limit"))
            }
        });
        Ok(WidthResult {
            value,
            witness,
            method: Method::BruteForce,
        })
    }

    /// Degreewidth by enumerating every ordering.
    pub fn degreewidth_bruteforce(&self, d: &Digraph) -> Result<WidthResult> {
        self.directed_parameter(d, ParameterSelector::MaxDegree)
    }

    /// Degreewidth by dynamic programming over prefix sets.
    ///
    /// Appending `u` after the prefix `S` fixes the final backedge degree of
    /// `u` at `|N+(u) ∩ S| + |N-(u) \ (S ∪ {u})|`: out-arcs into the prefix
    /// and in-arcs from the suffix point backwards, nothing else touches `u`.
    pub fn degreewidth_dp(&self, d: &Digraph) -> Result<WidthResult> {
        self.check_subset(d)?;
        let n = d.vertex_count();
        let full = full_mask(n);
        let out: Vec<u64> = (0..n).map(|v| d.out_mask(v)).collect();
        let inn: Vec<u64> = (0..n).map(|v| d.in_mask(v)).collect();
        let (value, witness) = prefix_dp(n, Combine::Max, |s, u| {
            let s = s as u64;
            let later = full & !s & !(1 << u);
            ((out[u] & s).count_ones() + (inn[u] & later).count_ones()) as u16
        });
        Ok(WidthResult {
            value,
            witness,
            method: Method::SubsetDp,
        })
    }

    /// Exact degreewidth with the cheapest applicable method.
    pub fn degreewidth(&self, d: &Digraph) -> Result<WidthResult> {
        self.degreewidth_dp(d)
    }

    /// Is the degreewidth at most `k`?
    pub fn k_degreewidth_decide(&self, d: &Digraph, k: usize) -> bool {
        match self.degreewidth_dp(d) {
            Ok(r) => r.value <= k,
            Err(_) => degreewidth_via_fas(d, k).is_some(),
        }
    }

    /// Ordering by nondecreasing in-degree, ties broken by index.
    pub fn indeg_ordering_heuristic(&self, d: &Digraph) -> WidthResult {
        let mut perm: Vec<usize> = (0..d.vertex_count()).collect();
        perm.sort_by_key(|&v| (d.in_degree(v), v));
        let witness = Ordering::new(perm).expect("permutation");
        let value = d.backedge_graph(&witness).expect("fits").max_degree();
        WidthResult {
            value,
            witness,
            method: Method::IndegreeHeuristic,
        }
    }

    /// Minimum number of classes in a partition of the vertices into sets
    /// each inducing an acyclic subdigraph.
    pub fn dichromatic_number(&self, d: &Digraph) -> Result<usize> {
        Ok(self.optimal_dicolouring(d)?.len())
    }

    /// An optimal dicolouring, classes sorted and listed by smallest vertex.
    pub fn optimal_dicolouring(&self, d: &Digraph) -> Result<Vec<Vec<usize>>> {
        Error::guard("dichromatic set cover", self.guards.dichromatic_n, d.vertex_count())?;
        let n = d.vertex_count();
        let size = 1usize << n;
        let inn: Vec<u64> = (0..n).map(|v| d.in_mask(v)).collect();
        // a set is acyclic iff it has a source whose removal leaves an acyclic set
        let mut acyclic = vec![false; size];
        acyclic[0] = true;
        for s in 1..size {
            let sm = s as u64;
            if let Some(v) = bits(sm).find(|&v| inn[v] & sm == 0) {
                acyclic[s] = acyclic[s & !(1 << v)];
            }
        }
        let mut best = vec![u8::MAX; size];
        let mut choice = vec![0u32; size];
        best[0] = 0;
        for s in 1..size {
            let low = s & s.wrapping_neg();
            let rest = s & !low;
            let mut sub = rest;
            loop {
                let t = sub | low;
                if acyclic[t] {
                    let c = best[s & !t].saturating_add(1);
                    if c < best[s] {
                        best[s] = c;
                        choice[s] = t as u32;
                    }
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & rest;
            }
        }
        let mut classes = Vec::new();
        let mut s = size - 1;
        while s != 0 {
            let t = choice[s] as usize;
            classes.push(bits(t as u64).collect::<Vec<_>>());
            s &= !t;
        }
        Ok(classes)
    }

    /// Minimum over orderings of the chromatic number of the backedge graph.
    pub fn chi_vec_via_orderings(&self, d: &Digraph) -> Result<usize> {
        Ok(self.directed_parameter(d, ParameterSelector::ChromaticNumber)?.value)
    }

    /// Minimum over orderings of the clique number of the backedge graph.
    pub fn directed_clique_number(&self, d: &Digraph) -> Result<usize> {
        Ok(self.directed_parameter(d, ParameterSelector::CliqueNumber)?.value)
    }

    /// Minimum over orderings of the vertex cover number of the backedge graph.
    pub fn tau_vec_via_orderings(&self, d: &Digraph) -> Result<usize> {
        Ok(self.directed_parameter(d, ParameterSelector::VertexCover)?.value)
    }

    /// Feedback vertex number.
    pub fn fvn(&self, d: &Digraph) -> Result<usize> {
        Ok(self.min_feedback_vertex_set(d)?.len())
    }

    /// Lexicographically smallest minimum feedback vertex set.
    pub fn min_feedback_vertex_set(&self, d: &Digraph) -> Result<Vec<usize>> {
        Error::guard("feedback vertex search", self.guards.subset_n.min(64), d.vertex_count())?;
        let fvs = FvsSearch::new(d);
        let mut budget = 0;
        while !fvs.feasible(0, 0, budget) {
            budget += 1;
        }
        // fix vertices greedily in increasing order
        let mut chosen = 0u64;
        let mut banned = 0u64;
        let mut left = budget;
        for v in 0..d.vertex_count() {
            if left > 0 && fvs.feasible(chosen | 1 << v, banned, left - 1) {
                chosen |= 1 << v;
                left -= 1;
            } else {
                banned |= 1 << v;
            }
        }
        Ok(bits(chosen).collect())
    }

    /// All inclusion-minimal feedback arc sets, in increasing bitmask order
    /// over `arcs()` indices.
    pub fn minimal_feedback_arc_sets(&self, d: &Digraph) -> Result<Vec<ArcSet>> {
        Error::guard("minimal FAS enumeration", self.guards.minimal_fas_arcs, d.arc_count())?;
        Error::guard("bitmask digraph", 64, d.vertex_count())?;
        let n = d.vertex_count();
        let arcs = d.arcs();
        let m = arcs.len();
        let full = full_mask(n);
        let is_fas = |f: u32| {
            let mut inn = vec![0u64; n];
            for (i, &(u, v)) in arcs.iter().enumerate() {
                if f >> i & 1 == 0 {
                    inn[v] |= 1 << u;
                }
            }
            let mut left = full;
            while left != 0 {
                match bits(left).find(|&v| inn[v] & left == 0) {
                    Some(v) => left &= !(1 << v),
                    None => return false,
                }
            }
            true
        };
        let table: Vec<bool> = (0..1u32 << m).map(is_fas).collect();
        Ok((0..1u32 << m)
            .filter(|&f| table[f as usize] && bits(f as u64).all(|i| !table[(f & !(1 << i)) as usize]))
            .map(|f| ArcSet::from_arcs_unchecked(bits(f as u64).map(|i| arcs[i])))
            .collect())
    }

    /// `min sel(D[F])` over inclusion-minimal feedback arc sets `F`.
    pub fn gamma_via_minimal_fas(&self, d: &Digraph, sel: ParameterSelector) -> Result<usize> {
        let mut best = usize::MAX;
        for f in self.minimal_feedback_arc_sets(d)? {
            best = best.min(sel.evaluate(&d.graph_of_arcset(&f)?)?);
        }
        Ok(best)
    }

    /// For every ordering attaining `Δ⃗(D) = k`, checks that when `χ⃗(D) = k + 1`
    /// the backedge graph has an odd-cycle component (k = 2) or a `K_{k+1}`
    /// component (otherwise).
    pub fn brooks_tightness_scan(&self, d: &Digraph, k: usize) -> Result<BrooksScan> {
        self.check_bf(d)?;
        let width = self.degreewidth_dp(d)?.value;
        if width != k {
            return Err(Error::Precondition(format!("degreewidth is {width}, not {k}")));
        }
        let dichromatic = self.dichromatic_number(d)?;
        let tight = dichromatic == k + 1;
        let n = d.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut optimal = 0;
        let mut counterexamples = Vec::new();
        loop {
            let ord = Ordering::new(perm.clone())?;
            let g = d.backedge_graph(&ord)?;
            if g.max_degree() == k {
                optimal += 1;
                if tight && !has_brooks_component(&g, k) {
                    counterexamples.push(ord);
                }
            }
            if !crate::ordering::next_permutation(&mut perm) {
                break;
            }
        }
        Ok(BrooksScan {
            k,
            dichromatic,
            tight,
            optimal_orderings: optimal,
            counterexamples,
        })
    }
}

/// Lower bound on the degreewidth: the most digons at one vertex.
pub fn dig_lower_bound(d: &Digraph) -> usize {
    d.max_dig()
}

/// A component that is an odd cycle (`k == 2`) or the clique `K_{k+1}`.
pub fn has_brooks_component(g: &UndirectedGraph, k: usize) -> bool {
    g.components().iter().any(|comp| {
        let size = comp.len();
        let edges = comp.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;
        if k == 2 {
            size >= 3 && size % 2 == 1 && comp.iter().all(|&v| g.degree(v) == 2)
        } else {
            size == k + 1 && edges == size * (size - 1) / 2
        }
    })
}

struct FvsSearch {
    n: usize,
    out: Vec<u64>,
}

impl FvsSearch {
    fn new(d: &Digraph) -> Self {
        let n = d.vertex_count();
        FvsSearch {
            n,
            out: (0..n).map(|v| d.out_mask(v)).collect(),
        }
    }

    /// Shortest directed cycle avoiding `removed`, as a vertex list.
    fn shortest_cycle(&self, removed: u64) -> Option<Vec<usize>> {
        let alive = full_mask(self.n) & !removed;
        let mut best: Option<Vec<usize>> = None;
        let mut parent = vec![usize::MAX; self.n];
        for s in bits(alive) {
            // BFS layers from s; stop once a layer reaches back to s
            let mut seen = 1u64 << s;
            let mut frontier = vec![s];
            let mut depth = 0;
            'bfs: while !frontier.is_empty() {
                depth += 1;
                if best.as_ref().is_some_and(|c| depth >= c.len()) {
                    break;
                }
                let mut next = Vec::new();
                for &u in &frontier {
                    let succ = self.out[u] & alive;
                    if succ >> s & 1 == 1 {
                        let mut cycle = vec![u];
                        let mut x = u;
                        while x != s {
                            x = parent[x];
                            cycle.push(x);
                        }
                        cycle.reverse();
                        best = Some(cycle);
                        break 'bfs;
                    }
                    for w in bits(succ & !seen) {
                        seen |= 1 << w;
                        parent[w] = u;
                        next.push(w);
                    }
                }
                frontier = next;
            }
        }
        best
    }

    /// Some feedback vertex set of size `<= budget` contains `removed` and
    /// avoids `kept`.
    fn feasible(&self, removed: u64, kept: u64, budget: usize) -> bool {
        let Some(cycle) = self.shortest_cycle(removed) else {
            return true;
        };
        if budget == 0 {
            return false;
        }
        let mut kept = kept;
        for v in cycle {
            if kept >> v & 1 == 1 {
                continue;
            }
            if self.feasible(removed | 1 << v, kept, budget - 1) {
                return true;
            }
            kept |= 1 << v;
        }
        false
    }
}

/// Searches for a feedback arc set `F` with `Δ(D[F]) <= k`.
///
/// Branch and bound over directed cycles of `D - F`: every extension of
/// `F` must contain an arc of such a cycle, and branch `i` puts the i-th
/// addable arc into `F` while excluding the earlier ones, so the branches
/// partition the search space. An arc is addable when it is undecided and
/// adding it keeps both endpoint degrees in `D[F]` at most `k`. The cycle
/// picked is one with the fewest addable arcs; a cycle with none prunes.
pub fn degreewidth_via_fas(d: &Digraph, k: usize) -> Option<ArcSet> {
    if dig_lower_bound(d) > k {
        return None;
    }
    let mut search = FasSearch::new(d, k);
    if search.run() {
        Some(ArcSet::from_arcs_unchecked(
            (0..d.arc_count()).filter(|&i| search.state[i] == ArcState::InF).map(|i| d.arcs()[i]),
        ))
    } else {
        None
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum ArcState {
    Free,
    InF,
    Excluded,
}

struct FasSearch<'a> {
    d: &'a Digraph,
    k: usize,
    state: Vec<ArcState>,
    /// Distinct `D[F]` neighbours per vertex.
    degree: Vec<usize>,
    /// Index of the reverse arc, if the arc is half of a digon.
    twin: Vec<Option<usize>>,
    /// Out-arcs per vertex as `(head, arc index)`.
    out: Vec<Vec<(usize, usize)>>,
}

impl<'a> FasSearch<'a> {
    fn new(d: &'a Digraph, k: usize) -> Self {
        let arcs = d.arcs();
        let mut out = vec![Vec::new(); d.vertex_count()];
        for (i, &(u, v)) in arcs.iter().enumerate() {
            out[u].push((v, i));
        }
        FasSearch {
            d,
            k,
            state: vec![ArcState::Free; arcs.len()],
            degree: vec![0; d.vertex_count()],
            twin: arcs.iter().map(|&(u, v)| d.arc_index(v, u)).collect(),
            out,
        }
    }

    fn twin_in_f(&self, a: usize) -> bool {
        self.twin[a].is_some_and(|t| self.state[t] == ArcState::InF)
    }

    fn addable(&self, a: usize) -> bool {
        if self.state[a] != ArcState::Free {
            return false;
        }
        let (u, v) = self.d.arcs()[a];
        self.twin_in_f(a) || (self.degree[u] < self.k && self.degree[v] < self.k)
    }

    fn add(&mut self, a: usize) {
        let (u, v) = self.d.arcs()[a];
        if !self.twin_in_f(a) {
            self.degree[u] += 1;
            self.degree[v] += 1;
        }
        self.state[a] = ArcState::InF;
    }

    fn remove(&mut self, a: usize) {
        let (u, v) = self.d.arcs()[a];
        self.state[a] = ArcState::Free;
        if !self.twin_in_f(a) {
            self.degree[u] -= 1;
            self.degree[v] -= 1;
        }
    }

    /// Cycle of `D - F` with the fewest addable arcs, as the list of its
    /// addable arcs. `None` when `D - F` is acyclic.
    fn cheapest_cycle(&self) -> Option<Vec<usize>> {
        let n = self.d.vertex_count();
        let weight: Vec<usize> = (0..self.state.len()).map(|a| self.addable(a) as usize).collect();
        let mut best: Option<(usize, usize, Vec<usize>)> = None;
        let mut dist = vec![usize::MAX; n];
        let mut via = vec![usize::MAX; n];
        let mut deque = std::collections::VecDeque::new();
        for s in 0..n {
            // 0-1 BFS from s over arcs not in F
            dist.fill(usize::MAX);
            dist[s] = 0;
            deque.clear();
            deque.push_back(s);
            let mut closing: Option<(usize, usize)> = None;
            while let Some(u) = deque.pop_front() {
                if best.as_ref().is_some_and(|b| dist[u] >= b.0) {
                    continue;
                }
                for &(w, a) in &self.out[u] {
                    if self.state[a] == ArcState::InF {
                        continue;
                    }
                    let nd = dist[u] + weight[a];
                    if w == s {
                        if closing.is_none_or(|(c, _)| nd < c) {
                            closing = Some((nd, a));
                        }
                        continue;
                    }
                    if nd < dist[w] {
                        dist[w] = nd;
                        via[w] = a;
                        if weight[a] == 0 {
                            deque.push_front(w);
                        } else {
                            deque.push_back(w);
                        }
                    }
                }
            }
            if let Some((cost, last)) = closing {
                if best.as_ref().is_none_or(|b| cost < b.0) {
                    let mut cycle = vec![last];
                    let mut x = self.d.arcs()[last].0;
                    while x != s {
                        let a = via[x];
                        cycle.push(a);
                        x = self.d.arcs()[a].0;
                    }
                    cycle.reverse();
                    let free: Vec<usize> = cycle.into_iter().filter(|&a| weight[a] == 1).collect();
                    best = Some((cost, s, free));
                    if cost == 0 {
                        break;
                    }
                }
            }
        }
        best.map(|(_, _, free)| free)
    }

    fn run(&mut self) -> bool {
        let Some(candidates) = self.cheapest_cycle() else {
            return true;
        };
        let mut excluded = Vec::new();
        let mut found = false;
        for &a in &candidates {
            if !self.addable(a) {
                continue;
            }
            self.add(a);
            if self.run() {
                found = true;
                break;
            }
            self.remove(a);
            self.state[a] = ArcState::Excluded;
            excluded.push(a);
        }
        if !found {
            for a in excluded {
                self.state[a] = ArcState::Free;
            }
        }
        found
    }
}

/// Every ordering's backedge-edge set, checked independently of the DP.
#[cfg(test)]
pub(crate) fn degreewidth_by_definition(d: &Digraph) -> usize {
    let n = d.vertex_count();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = usize::MAX;
    loop {
        let mut deg = vec![0; n];
        let mut pos = vec![0; n];
        for (i, &v) in perm.iter().enumerate() {
            pos[v] = i;
        }
        let mut seen = std::collections::HashSet::new();
        for &(u, v) in d.arcs() {
            if pos[v] < pos[u] && seen.insert((u.min(v), u.max(v))) {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
        best = best.min(deg.into_iter().max().unwrap_or(0));
        if !crate::ordering::next_permutation(&mut perm) {
            break;
        }
    }
    if n == 0 { 0 } else { best }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::all_tournaments;
    use crate::params::{self, chromatic_by_enumeration};
    use proptest::prelude::*;

    fn c3() -> Digraph {
        Digraph::cycle(3).unwrap()
    }
    fn digon() -> Digraph {
        Digraph::cycle(2).unwrap()
    }
    fn sym(g: UndirectedGraph) -> Digraph {
        Digraph::symmetric_closure(&g)
    }

    /// Colourings checked class by class with `is_acyclic`.
    fn dichromatic_by_enumeration(d: &Digraph) -> usize {
        let n = d.vertex_count();
        (0..=n)
            .find(|&k| {
                let total = (k as u64).pow(n as u32);
                (0..total).any(|code| {
                    let mut x = code;
                    let mut classes = vec![Vec::new(); k];
                    for v in 0..n {
                        classes[(x % k as u64) as usize].push(v);
                        x /= k as u64;
                    }
                    classes.iter().all(|c| d.induced(c).unwrap().is_acyclic())
                })
            })
            .unwrap()
    }

    fn fvn_by_enumeration(d: &Digraph) -> usize {
        let n = d.vertex_count();
        (0u32..1 << n)
            .filter(|s| {
                let keep: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 0).collect();
                d.induced(&keep).unwrap().is_acyclic()
            })
            .map(u32::count_ones)
            .min()
            .unwrap() as usize
    }

    #[test]
    fn degreewidth_examples() {
        let s = Solver::default();
        let dag = Digraph::transitive_tournament(5);
        assert_eq!(s.degreewidth_bruteforce(&dag).unwrap().value, 0);
        assert_eq!(s.degreewidth_dp(&dag).unwrap().value, 0);
        let r = s.degreewidth_bruteforce(&c3()).unwrap();
        assert_eq!(r.value, 1);
        assert_eq!(r.witness.perm(), &[0, 1, 2]);
        assert_eq!(s.degreewidth_dp(&c3()).unwrap(), WidthResult { method: Method::SubsetDp, ..r });
        for k in 0..5 {
            let d = sym(UndirectedGraph::complete(k + 1));
            assert_eq!(s.degreewidth_bruteforce(&d).unwrap().value, k);
            assert_eq!(s.degreewidth_dp(&d).unwrap().value, k);
        }
        assert_eq!(s.degreewidth_dp(&Digraph::empty(0)).unwrap().value, 0);
        assert_eq!(s.degreewidth_bruteforce(&Digraph::empty(0)).unwrap().value, 0);
    }

    #[test]
    fn guards_are_errors() {
        let s = Solver::default();
        let big = Digraph::empty(11);
        assert!(matches!(s.degreewidth_bruteforce(&big), Err(Error::GuardExceeded { .. })));
        assert!(matches!(s.degreewidth_dp(&Digraph::empty(25)), Err(Error::GuardExceeded { .. })));
        assert!(matches!(s.dichromatic_number(&Digraph::empty(17)), Err(Error::GuardExceeded { .. })));
        let many_arcs = Digraph::transitive_tournament(7);
        assert!(matches!(s.minimal_feedback_arc_sets(&many_arcs), Err(Error::GuardExceeded { .. })));
        let loose = Solver::new(Guards { subset_n: 40, ..Guards::default() });
        assert!(matches!(loose.degreewidth_dp(&Digraph::empty(29)), Err(Error::GuardExceeded { .. })));
    }

    #[test]
    fn k_regular_has_width_k() {
        // arcs i -> i+1, i+2 (mod 7): 2-regular
        let d = Digraph::new(7, (0..7).flat_map(|i| [(i, (i + 1) % 7), (i, (i + 2) % 7)])).unwrap();
        assert_eq!(Solver::default().degreewidth_dp(&d).unwrap().value, 2);
    }

    #[test]
    fn decide_examples() {
        let s = Solver::default();
        assert!(s.k_degreewidth_decide(&Digraph::transitive_tournament(4), 0));
        assert!(!s.k_degreewidth_decide(&c3(), 0));
        assert!(s.k_degreewidth_decide(&c3(), 1));
    }

    #[test]
    fn via_fas_examples() {
        let f = degreewidth_via_fas(&c3(), 1).unwrap();
        assert_eq!(f.len(), 1);
        assert!(c3().is_fas(&f));
        assert!(degreewidth_via_fas(&c3(), 0).is_none());
        assert!(degreewidth_via_fas(&digon(), 0).is_none());
        assert!(degreewidth_via_fas(&Digraph::empty(0), 0).unwrap().is_empty());
    }

    #[test]
    fn heuristic_examples() {
        let s = Solver::default();
        assert_eq!(s.indeg_ordering_heuristic(&Digraph::transitive_tournament(6)).value, 0);
        let r = s.indeg_ordering_heuristic(&c3());
        assert_eq!(r.value, 1);
        assert_eq!(r.witness, Ordering::identity(3));
    }

    #[test]
    fn dichromatic_examples() {
        let s = Solver::default();
        assert_eq!(s.dichromatic_number(&Digraph::transitive_tournament(4)).unwrap(), 1);
        assert_eq!(s.dichromatic_number(&Digraph::empty(0)).unwrap(), 0);
        assert_eq!(s.dichromatic_number(&c3()).unwrap(), 2);
        assert_eq!(s.dichromatic_number(&sym(UndirectedGraph::complete(3))).unwrap(), 3);
        let classes = s.optimal_dicolouring(&c3()).unwrap();
        assert_eq!(classes.len(), 2);
        for c in &classes {
            assert!(c3().induced(c).unwrap().is_acyclic());
        }
    }

    #[test]
    fn ordering_parameter_examples() {
        let s = Solver::default();
        assert_eq!(s.chi_vec_via_orderings(&c3()).unwrap(), 2);
        assert_eq!(s.chi_vec_via_orderings(&sym(UndirectedGraph::cycle(5).unwrap())).unwrap(), 3);
        assert_eq!(s.chi_vec_via_orderings(&Digraph::transitive_tournament(3)).unwrap(), 1);

        assert_eq!(s.directed_clique_number(&Digraph::transitive_tournament(3)).unwrap(), 1);
        assert_eq!(s.directed_clique_number(&sym(UndirectedGraph::complete(4))).unwrap(), 4);
        assert_eq!(s.directed_clique_number(&c3()).unwrap(), 2);

        assert_eq!(s.tau_vec_via_orderings(&c3()).unwrap(), 1);
        assert_eq!(s.tau_vec_via_orderings(&Digraph::transitive_tournament(3)).unwrap(), 0);
        assert_eq!(s.tau_vec_via_orderings(&sym(UndirectedGraph::complete(3))).unwrap(), 2);
    }

    #[test]
    fn fvn_examples() {
        let s = Solver::default();
        assert_eq!(s.fvn(&c3()).unwrap(), 1);
        assert_eq!(s.min_feedback_vertex_set(&c3()).unwrap(), vec![0]);
        assert_eq!(s.fvn(&Digraph::transitive_tournament(5)).unwrap(), 0);
        assert_eq!(s.fvn(&sym(UndirectedGraph::complete(3))).unwrap(), 2);
        assert_eq!(s.min_feedback_vertex_set(&sym(UndirectedGraph::complete(3))).unwrap(), vec![0, 1]);
    }

    #[test]
    fn minimal_fas_examples() {
        let s = Solver::default();
        assert_eq!(s.gamma_via_minimal_fas(&c3(), ParameterSelector::MaxDegree).unwrap(), 1);
        let sets = s.minimal_feedback_arc_sets(&c3()).unwrap();
        assert_eq!(sets.len(), 3);
        assert!(sets.iter().all(|f| f.len() == 1));
        let dag = Digraph::transitive_tournament(4);
        assert_eq!(s.minimal_feedback_arc_sets(&dag).unwrap(), vec![ArcSet::default()]);
        for sel in ParameterSelector::ALL {
            let expected = sel.evaluate(&UndirectedGraph::empty(4)).unwrap();
            assert_eq!(s.gamma_via_minimal_fas(&dag, sel).unwrap(), expected);
        }
        assert_eq!(s.gamma_via_minimal_fas(&digon(), ParameterSelector::CliqueNumber).unwrap(), 2);
    }

    #[test]
    fn dig_bound_examples() {
        assert_eq!(dig_lower_bound(&sym(UndirectedGraph::complete(3))), 2);
        assert_eq!(dig_lower_bound(&c3()), 0);
        assert_eq!(dig_lower_bound(&digon()), 1);
    }

    #[test]
    fn brooks_scan_examples() {
        let s = Solver::default();
        let c5 = sym(UndirectedGraph::cycle(5).unwrap());
        let r = s.brooks_tightness_scan(&c5, 2).unwrap();
        assert!(r.tight);
        assert_eq!(r.optimal_orderings, 120);
        assert!(r.counterexamples.is_empty());

        let k4 = sym(UndirectedGraph::complete(4));
        let r = s.brooks_tightness_scan(&k4, 3).unwrap();
        assert!(r.tight && r.counterexamples.is_empty());

        let r = s.brooks_tightness_scan(&c3(), 1).unwrap();
        assert!(r.tight);
        assert_eq!(r.dichromatic, 2);
        assert!(r.optimal_orderings > 0 && r.counterexamples.is_empty());

        assert!(matches!(s.brooks_tightness_scan(&c3(), 2), Err(Error::Precondition(_))));
    }

    #[test]
    fn tournaments_agree_exhaustively() {
        let s = Solver::default();
        for n in 0..=4 {
            for t in all_tournaments(n) {
                let dp = s.degreewidth_dp(&t).unwrap();
                assert_eq!(dp, WidthResult { method: Method::SubsetDp, ..s.degreewidth_bruteforce(&t).unwrap() });
            }
        }
    }

    fn small_digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
        (0..=max_n).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))).collect();
            let m = pairs.len();
            proptest::collection::vec(proptest::bool::weighted(0.35), m).prop_map(move |keep| {
                Digraph::new(n, pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&a, _)| a)).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn placement_degree_identity(d in small_digraph(6)) {
            let s = Solver::default();
            let dp = s.degreewidth_dp(&d).unwrap();
            prop_assert_eq!(dp.value, degreewidth_by_definition(&d));
            let bf = s.degreewidth_bruteforce(&d).unwrap();
            prop_assert_eq!(&dp.witness, &bf.witness);
            prop_assert_eq!(d.backedge_graph(&dp.witness).unwrap().max_degree(), dp.value);
        }

        #[test]
        fn decision_routes_agree(d in small_digraph(6), k in 0usize..3) {
            let s = Solver::default();
            let width = s.degreewidth_dp(&d).unwrap().value;
            let witness = degreewidth_via_fas(&d, k);
            prop_assert_eq!(witness.is_some(), width <= k);
            prop_assert_eq!(s.k_degreewidth_decide(&d, k), width <= k);
            if let Some(f) = witness {
                prop_assert!(d.is_fas(&f));
                prop_assert!(d.graph_of_arcset(&f).unwrap().max_degree() <= k);
            }
        }

        #[test]
        fn dichromatic_routes_agree(d in small_digraph(5)) {
            let s = Solver::default();
            let chi = s.dichromatic_number(&d).unwrap();
            prop_assert_eq!(chi, dichromatic_by_enumeration(&d));
            prop_assert_eq!(chi, s.chi_vec_via_orderings(&d).unwrap());
        }

        #[test]
        fn fvn_routes_agree(d in small_digraph(6)) {
            let s = Solver::default();
            let f = s.fvn(&d).unwrap();
            prop_assert_eq!(f, fvn_by_enumeration(&d));
            prop_assert_eq!(f, s.tau_vec_via_orderings(&d).unwrap());
            let set = s.min_feedback_vertex_set(&d).unwrap();
            let keep: Vec<usize> = (0..d.vertex_count()).filter(|v| !set.contains(v)).collect();
            prop_assert!(d.induced(&keep).unwrap().is_acyclic());
        }

        #[test]
        fn minimal_fas_matches_orderings(d in small_digraph(5)) {
            let s = Solver::default();
            prop_assume!(d.arc_count() <= 14);
            for sel in ParameterSelector::ALL {
                prop_assert_eq!(
                    s.gamma_via_minimal_fas(&d, sel).unwrap(),
                    s.directed_parameter(&d, sel).unwrap().value
                );
            }
        }

        #[test]
        fn reversal_invariance(d in small_digraph(5)) {
            let s = Solver::default();
            let r = d.reverse();
            for sel in ParameterSelector::ALL {
                prop_assert_eq!(
                    s.directed_parameter(&d, sel).unwrap().value,
                    s.directed_parameter(&r, sel).unwrap().value
                );
            }
            prop_assert_eq!(s.dichromatic_number(&d).unwrap(), s.dichromatic_number(&r).unwrap());
            prop_assert_eq!(s.fvn(&d).unwrap(), s.fvn(&r).unwrap());
        }

        #[test]
        fn inequality_chain(d in small_digraph(6)) {
            let s = Solver::default();
            let width = s.degreewidth_dp(&d).unwrap();
            let chi = s.dichromatic_number(&d).unwrap();
            let omega = s.directed_clique_number(&d).unwrap();
            prop_assert!(dig_lower_bound(&d) <= width.value);
            prop_assert!(width.value <= d.delta_min());
            prop_assert!(d.delta_min() <= d.delta_max());
            prop_assert!(omega <= chi);
            if d.vertex_count() > 0 {
                let g = d.backedge_graph(&width.witness).unwrap();
                let greedy = params::greedy_color_count(&g, &width.witness).unwrap();
                prop_assert!(chi <= greedy && greedy <= width.value + 1);
            }
        }

        #[test]
        fn symmetric_identity(g in (0usize..=6).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let m = pairs.len();
            proptest::collection::vec(any::<bool>(), m).prop_map(move |keep| {
                UndirectedGraph::new(n, pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e)).unwrap()
            })
        })) {
            let s = Solver::default();
            let d = Digraph::symmetric_closure(&g);
            prop_assert_eq!(s.degreewidth_dp(&d).unwrap().value, g.max_degree());
            prop_assert_eq!(s.dichromatic_number(&d).unwrap(), chromatic_by_enumeration(&g));
            prop_assert_eq!(s.directed_clique_number(&d).unwrap(), params::clique_number(&g).unwrap());
            prop_assert_eq!(s.fvn(&d).unwrap(), params::vertex_cover_number(&g).unwrap());
            prop_assert_eq!(d.delta_min(), g.max_degree());
        }
    }
}

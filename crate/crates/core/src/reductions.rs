//! Gadget constructions: the 3-SAT to bounded-degreewidth reduction with
//! witness translation in both directions, the transfer-digraph degree
//! check, and the gadget that fixes degreewidth while preserving
//! dicolourability.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::Serialize;

use crate::digraph::{Arc, ArcSet, Digraph};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Literal {
    pub var: usize,
    pub negated: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal { var, negated: false }
    }

    pub fn neg(var: usize) -> Self {
        Literal { var, negated: true }
    }

    pub fn negation(self) -> Self {
        Literal {
            var: self.var,
            negated: !self.negated,
        }
    }

    pub fn eval(self, nu: &Valuation) -> bool {
        nu.get(self.var) != self.negated
    }

    /// DIMACS form: 1-based, negative when negated.
    pub fn to_dimacs(self) -> i64 {
        let v = self.var as i64 + 1;
        if self.negated {
            -v
        } else {
            v
        }
    }
}

/// A 3-CNF formula: exactly three literals per clause, repeats allowed,
/// no clause containing both a literal and its negation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<[Literal; 3]>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<[Literal; 3]>) -> Result<Self> {
        for (j, clause) in clauses.iter().enumerate() {
            for lit in clause {
                if lit.var >= num_vars {
                    return Err(Error::VertexOutOfRange {
                        vertex: lit.var,
                        n: num_vars,
                    });
                }
            }
            if clause.iter().any(|a| clause.contains(&a.negation())) {
                return Err(Error::TautologicalClause(j));
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[[Literal; 3]] {
        &self.clauses
    }

    pub fn is_satisfied_by(&self, nu: &Valuation) -> bool {
        nu.len() == self.num_vars && self.clauses.iter().all(|c| c.iter().any(|l| l.eval(nu)))
    }

    /// Random formula with literals drawn uniformly; tautological clauses are redrawn.
    pub fn random(num_vars: usize, num_clauses: usize, rng: &mut impl Rng) -> Result<Self> {
        if num_vars == 0 && num_clauses > 0 {
            return Err(Error::InvalidParameter("clauses need at least one variable".into()));
        }
        let mut clauses = Vec::with_capacity(num_clauses);
        while clauses.len() < num_clauses {
            let clause: [Literal; 3] = std::array::from_fn(|_| Literal {
                var: rng.gen_range(0..num_vars),
                negated: rng.gen_bool(0.5),
            });
            if !clause.iter().any(|a| clause.contains(&a.negation())) {
                clauses.push(clause);
            }
        }
        CnfFormula::new(num_vars, clauses)
    }
}

/// Truth assignment, indexed by variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Valuation(Vec<bool>);

impl Valuation {
    pub fn new(values: Vec<bool>) -> Self {
        Valuation(values)
    }

    pub fn get(&self, var: usize) -> bool {
        self.0[var]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[bool] {
        &self.0
    }
}

pub const SAT_BRUTEFORCE_VARS: usize = 20;

/// First satisfying valuation in lexicographic order (false before true,
/// variable 0 most significant), or `None`.
pub fn sat_bruteforce(phi: &CnfFormula) -> Result<Option<Valuation>> {
    let n = phi.num_vars();
    Error::guard("SAT enumeration", SAT_BRUTEFORCE_VARS, n)?;
    Ok((0u32..1 << n)
        .map(|code| Valuation((0..n).map(|i| code >> (n - 1 - i) & 1 == 1).collect()))
        .find(|nu| phi.is_satisfied_by(nu)))
}

/// What a vertex of a gadget instance stands for. Clause and position
/// indices are 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    /// Literal vertex `l` of position `pos` in clause `clause`.
    Literal { clause: usize, pos: usize },
    /// Its partner `l~`, which lies on the clause cycle.
    LiteralTilde { clause: usize, pos: usize },
    /// Cycle vertex following `l~` of the same position.
    Cycle { clause: usize, pos: usize },
    /// Middle vertex of path `path` of the transfer digraph from `src` to `dst`.
    Transfer { src: usize, dst: usize, path: usize },
    Source,
    Sink,
    /// Dicolouring gadget: `v-`, `v+` and the shared vertices `v_1..v_{k-1}`.
    GadgetMinus { v: usize },
    GadgetPlus { v: usize },
    GadgetInner { v: usize, index: usize },
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Role::Literal { clause, pos } => write!(f, "l:j={clause},i={pos}"),
            Role::LiteralTilde { clause, pos } => write!(f, "l~:j={clause},i={pos}"),
            Role::Cycle { clause, pos } => write!(f, "c:j={clause},i={pos}"),
            Role::Transfer { src, dst, path } => write!(f, "tr:src={src},dst={dst},path={path}"),
            Role::Source => write!(f, "s"),
            Role::Sink => write!(f, "t"),
            Role::GadgetMinus { v } => write!(f, "v-:v={v}"),
            Role::GadgetPlus { v } => write!(f, "v+:v={v}"),
            Role::GadgetInner { v, index } => write!(f, "vi:v={v},i={index}"),
        }
    }
}

impl FromStr for Role {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::parse(0, format!("bad role label `{s}`"));
        let (tag, rest) = s.split_once(':').unwrap_or((s, ""));
        let mut fields = Vec::new();
        for part in rest.split(',').filter(|p| !p.is_empty()) {
            let (key, value) = part.split_once('=').ok_or_else(bad)?;
            fields.push((key, value.parse::<usize>().map_err(|_| bad())?));
        }
        let keys: Vec<&str> = fields.iter().map(|f| f.0).collect();
        let val = |i: usize| fields[i].1;
        let role = match (tag, keys.as_slice()) {
            ("l", ["j", "i"]) => Role::Literal { clause: val(0), pos: val(1) },
            ("l~", ["j", "i"]) => Role::LiteralTilde { clause: val(0), pos: val(1) },
            ("c", ["j", "i"]) => Role::Cycle { clause: val(0), pos: val(1) },
            ("tr", ["src", "dst", "path"]) => Role::Transfer { src: val(0), dst: val(1), path: val(2) },
            ("s", []) => Role::Source,
            ("t", []) => Role::Sink,
            ("v-", ["v"]) => Role::GadgetMinus { v: val(0) },
            ("v+", ["v"]) => Role::GadgetPlus { v: val(0) },
            ("vi", ["v", "i"]) => Role::GadgetInner { v: val(0), index: val(1) },
            _ => return Err(bad()),
        };
        Ok(role)
    }
}

impl Serialize for Role {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A digraph whose vertices carry gadget roles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledDigraph {
    pub digraph: Digraph,
    pub roles: Vec<Role>,
}

/// One transfer digraph inside a larger instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transfer {
    pub src: usize,
    pub dst: usize,
    /// Middle vertex of each path, in path order.
    pub middles: Vec<usize>,
}

#[derive(Default)]
struct Builder {
    arcs: Vec<Arc>,
    roles: Vec<Role>,
    transfers: Vec<Transfer>,
}

impl Builder {
    fn vertex(&mut self, role: Role) -> usize {
        self.roles.push(role);
        self.roles.len() - 1
    }

    fn transfer(&mut self, src: usize, dst: usize, size: usize) {
        let middles: Vec<usize> = (0..size)
            .map(|path| {
                let v = self.vertex(Role::Transfer { src, dst, path });
                self.arcs.push((src, v));
                self.arcs.push((v, dst));
                v
            })
            .collect();
        self.transfers.push(Transfer { src, dst, middles });
    }

    /// Adds the gadget of clause `j`; returns the literal, tilde and cycle
    /// vertices by position, and the six cycle arcs.
    fn clause(&mut self, j: usize, k: usize) -> ClauseVertices {
        let lit: [usize; 3] = std::array::from_fn(|i| self.vertex(Role::Literal { clause: j, pos: i }));
        let tilde: [usize; 3] = std::array::from_fn(|i| self.vertex(Role::LiteralTilde { clause: j, pos: i }));
        let cyc: [usize; 3] = std::array::from_fn(|i| self.vertex(Role::Cycle { clause: j, pos: i }));
        for i in 0..3 {
            self.transfer(lit[i], tilde[i], 2 * k);
        }
        for (i, &src) in tilde.iter().enumerate() {
            for (i2, &dst) in lit.iter().enumerate() {
                if i != i2 {
                    self.transfer(src, dst, 2 * k + 1);
                }
            }
        }
        let cycle: [Arc; 6] = std::array::from_fn(|x| {
            let i = x / 2;
            if x % 2 == 0 {
                (tilde[i], cyc[i])
            } else {
                (cyc[i], tilde[(i + 1) % 3])
            }
        });
        self.arcs.extend(cycle);
        ClauseVertices { lit, tilde, cycle }
    }

    fn finish(self) -> Result<(Digraph, Vec<Role>, Vec<Transfer>)> {
        let d = Digraph::new(self.roles.len(), self.arcs)?;
        Ok((d, self.roles, self.transfers))
    }
}

struct ClauseVertices {
    lit: [usize; 3],
    tilde: [usize; 3],
    cycle: [Arc; 6],
}

/// The transfer digraph `T_p`: `s = 0`, path middles `1..=p`, `t = p + 1`.
pub fn transfer_digraph(p: usize) -> Result<LabeledDigraph> {
    if p == 0 {
        return Err(Error::InvalidParameter("transfer digraph needs at least one path".into()));
    }
    let mut b = Builder::default();
    let s = b.vertex(Role::Source);
    // the sink id is known up front so middle labels can name it
    let t = p + 1;
    for path in 0..p {
        let v = b.vertex(Role::Transfer { src: s, dst: t, path });
        b.arcs.push((s, v));
        b.arcs.push((v, t));
    }
    let sink = b.vertex(Role::Sink);
    debug_assert_eq!(sink, t);
    let (digraph, roles, _) = b.finish()?;
    Ok(LabeledDigraph { digraph, roles })
}

/// A single clause gadget for width bound `k`.
pub fn clause_gadget(k: usize) -> Result<LabeledDigraph> {
    if k == 0 {
        return Err(Error::InvalidParameter("width bound must be at least 1".into()));
    }
    let mut b = Builder::default();
    b.clause(0, k);
    let (digraph, roles, _) = b.finish()?;
    Ok(LabeledDigraph { digraph, roles })
}

/// Instance produced from a formula, with every vertex labelled.
#[derive(Clone, Debug)]
pub struct ReductionOutput {
    pub digraph: Digraph,
    pub k: usize,
    pub formula: CnfFormula,
    pub roles: Vec<Role>,
    /// The six arcs of each clause cycle, alternating `(l~_i, c_i)` and `(c_i, l~_{i+1})`.
    pub cycle_arcs: Vec<[Arc; 6]>,
    pub literal_vertices: Vec<[usize; 3]>,
    pub tilde_vertices: Vec<[usize; 3]>,
    pub transfers: Vec<Transfer>,
}

/// Ordered position pairs `((j, i), (j2, i2))`, `j != j2`, whose literals are
/// complementary. Each gets its own transfer.
pub fn complementary_pairs(phi: &CnfFormula) -> Vec<((usize, usize), (usize, usize))> {
    let cl = phi.clauses();
    let mut pairs = Vec::new();
    for j in 0..cl.len() {
        for i in 0..3 {
            for j2 in (0..cl.len()).filter(|&j2| j2 != j) {
                for i2 in 0..3 {
                    if cl[j][i] == cl[j2][i2].negation() {
                        pairs.push(((j, i), (j2, i2)));
                    }
                }
            }
        }
    }
    pairs
}

/// Builds the digraph that has a feedback arc set `F` with `Δ(D[F]) <= k`
/// exactly when `phi` is satisfiable.
pub fn build_reduction(phi: &CnfFormula, k: usize) -> Result<ReductionOutput> {
    if k == 0 {
        return Err(Error::InvalidParameter("width bound must be at least 1".into()));
    }
    let mut b = Builder::default();
    let gadgets: Vec<ClauseVertices> = (0..phi.clauses().len()).map(|j| b.clause(j, k)).collect();
    for ((j, i), (j2, i2)) in complementary_pairs(phi) {
        b.transfer(gadgets[j].tilde[i], gadgets[j2].lit[i2], 2 * k + 1);
    }
    let cycle_arcs = gadgets.iter().map(|g| g.cycle).collect();
    let literal_vertices = gadgets.iter().map(|g| g.lit).collect();
    let tilde_vertices = gadgets.iter().map(|g| g.tilde).collect();
    let (digraph, roles, transfers) = b.finish()?;
    Ok(ReductionOutput {
        digraph,
        k,
        formula: phi.clone(),
        roles,
        cycle_arcs,
        literal_vertices,
        tilde_vertices,
        transfers,
    })
}

impl ReductionOutput {
    fn transfer_between(&self, src: usize, dst: usize) -> &Transfer {
        self.transfers
            .iter()
            .find(|t| t.src == src && t.dst == dst)
            .expect("every literal pair has its transfer")
    }
}

/// Feedback arc set with `Δ(D[F]) = k` built from a satisfying valuation.
///
/// Per clause, the cycle arc leaving `l~` at the first true position goes
/// into `F`. Every other position has its `l -> l~` transfer cut: the first
/// `k` paths at the source arc and the remaining `k` at the sink arc, so
/// both endpoints end with degree exactly `k`.
pub fn witness_fas_from_valuation(r: &ReductionOutput, nu: &Valuation) -> Result<ArcSet> {
    if !r.formula.is_satisfied_by(nu) {
        return Err(Error::Unsatisfied);
    }
    let mut arcs = Vec::new();
    for (j, clause) in r.formula.clauses().iter().enumerate() {
        let chosen = clause.iter().position(|l| l.eval(nu)).expect("clause satisfied");
        arcs.push(r.cycle_arcs[j][2 * chosen]);
        for i in (0..3).filter(|&i| i != chosen) {
            let (src, dst) = (r.literal_vertices[j][i], r.tilde_vertices[j][i]);
            let t = r.transfer_between(src, dst);
            for (path, &mid) in t.middles.iter().enumerate() {
                arcs.push(if path < r.k { (src, mid) } else { (mid, dst) });
            }
        }
    }
    let f = ArcSet::new(&r.digraph, arcs)?;
    if !r.digraph.is_fas(&f) {
        return Err(Error::Postcondition("witness is not a feedback arc set".into()));
    }
    let width = r.digraph.graph_of_arcset(&f)?.max_degree();
    if width != r.k {
        return Err(Error::Postcondition(format!("witness has degree {width}, expected {}", r.k)));
    }
    Ok(f)
}

/// Satisfying valuation read off a feedback arc set `F` with `Δ(D[F]) <= k`:
/// a literal is true when a cycle arc at its `l~` vertex lies in `F`.
/// Variables left unforced are false.
pub fn valuation_from_fas(r: &ReductionOutput, f: &ArcSet) -> Result<Valuation> {
    let width = r.digraph.graph_of_arcset(f)?.max_degree();
    if width > r.k {
        return Err(Error::Precondition(format!("D[F] has degree {width} > {}", r.k)));
    }
    if !r.digraph.is_fas(f) {
        return Err(Error::Precondition("arc set is not a feedback arc set".into()));
    }
    let mut forced: Vec<Option<bool>> = vec![None; r.formula.num_vars()];
    for (j, clause) in r.formula.clauses().iter().enumerate() {
        for (x, &arc) in r.cycle_arcs[j].iter().enumerate() {
            if !f.contains(arc) {
                continue;
            }
            // (l~_i, c_i) touches position i, (c_i, l~_{i+1}) touches i + 1
            let pos = if x % 2 == 0 { x / 2 } else { (x / 2 + 1) % 3 };
            let lit = clause[pos];
            let value = !lit.negated;
            match forced[lit.var] {
                Some(old) if old != value => return Err(Error::ConflictingAssignment(lit.var)),
                _ => forced[lit.var] = Some(value),
            }
        }
    }
    let nu = Valuation(forced.into_iter().map(|v| v.unwrap_or(false)).collect());
    if !r.formula.is_satisfied_by(&nu) {
        return Err(Error::Postcondition("extracted valuation does not satisfy the formula".into()));
    }
    Ok(nu)
}

/// Outcome of checking the transfer-digraph degree bound on arc subsets.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TransferCheck {
    pub p: usize,
    pub subsets_checked: u64,
    pub disconnecting: u64,
    /// Arc-subset codes (bit `2i` = `(s, v_i)`, bit `2i+1` = `(v_i, t)`) that break the claim.
    pub violations: Vec<u64>,
}

fn transfer_arc(t: &LabeledDigraph, bit: usize) -> Arc {
    let v = bit / 2 + 1;
    if bit.is_multiple_of(2) {
        (0, v)
    } else {
        (v, t.digraph.vertex_count() - 1)
    }
}

fn reaches(d: &Digraph, f: &ArcSet, s: usize, t: usize) -> bool {
    let mut seen = vec![false; d.vertex_count()];
    let mut stack = vec![s];
    seen[s] = true;
    while let Some(u) = stack.pop() {
        if u == t {
            return true;
        }
        for &w in d.out_neighbors(u) {
            if !seen[w] && !f.contains((u, w)) {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    false
}

fn check_transfer_subset(t: &LabeledDigraph, p: usize, code: u64, report: &mut TransferCheck) {
    let f = ArcSet::from_arcs_unchecked((0..2 * p).filter(|&b| code >> b & 1 == 1).map(|b| transfer_arc(t, b)));
    report.subsets_checked += 1;
    let sink = p + 1;
    if reaches(&t.digraph, &f, 0, sink) {
        return;
    }
    report.disconnecting += 1;
    let g = t.digraph.graph_of_arcset(&f).expect("arcs of T_p");
    let width = g.max_degree();
    let bound = p.div_ceil(2);
    let mut ok = width >= bound;
    if p.is_multiple_of(2) {
        let balanced = g.degree(0) == p / 2 && g.degree(sink) == p / 2;
        ok &= (width == bound) == balanced;
    }
    if !ok {
        report.violations.push(code);
    }
}

/// Checks every arc subset of `T_p`: a subset separating `s` from `t` has
/// `Δ >= ⌈p/2⌉`, and for even `p` equality holds exactly when
/// `d(s) = d(t) = p/2`.
pub fn claim_2_4_check(p: usize) -> Result<TransferCheck> {
    Error::guard("transfer subsets (paths)", 16, p)?;
    let t = transfer_digraph(p)?;
    let mut report = TransferCheck { p, ..Default::default() };
    for code in 0u64..1 << (2 * p) {
        check_transfer_subset(&t, p, code, &mut report);
    }
    Ok(report)
}

/// The same check on `samples` uniformly random arc subsets.
pub fn claim_2_4_sample(p: usize, samples: u64, rng: &mut impl Rng) -> Result<TransferCheck> {
    Error::guard("transfer subsets (paths)", 31, p)?;
    let t = transfer_digraph(p)?;
    let mut report = TransferCheck { p, ..Default::default() };
    for _ in 0..samples {
        let code = rng.gen::<u64>() & ((1u64 << (2 * p)) - 1);
        check_transfer_subset(&t, p, code, &mut report);
    }
    Ok(report)
}

/// Replaces each vertex `v` by `v-`, `v+` and `v_1..v_{k-1}`, with complete
/// symmetric digraphs on `{v-, v_1..v_{k-1}}` and `{v+, v_1..v_{k-1}}`, the
/// arc `(v-, v+)`, and `(u+, v-)` for every arc `(u, v)`. Vertex `v` maps to
/// `v(k+1)` (`v-`), `v(k+1) + 1` (`v+`) and `v(k+1) + 1 + i` (`v_i`).
pub fn brooks_gadget(d: &Digraph, k: usize) -> Result<LabeledDigraph> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("gadget needs k >= 2, got {k}")));
    }
    let block = k + 1;
    let mut roles = Vec::with_capacity(d.vertex_count() * block);
    let mut arcs = Vec::new();
    for v in 0..d.vertex_count() {
        let base = v * block;
        let (minus, plus) = (base, base + 1);
        roles.push(Role::GadgetMinus { v });
        roles.push(Role::GadgetPlus { v });
        let inner: Vec<usize> = (1..k).map(|i| base + 1 + i).collect();
        roles.extend((1..k).map(|index| Role::GadgetInner { v, index }));
        for hub in [minus, plus] {
            let clique: Vec<usize> = std::iter::once(hub).chain(inner.iter().copied()).collect();
            for &a in &clique {
                for &b in &clique {
                    // the inner clique is shared by both halves
                    if a != b && !(hub == plus && a != hub && b != hub) {
                        arcs.push((a, b));
                    }
                }
            }
        }
        arcs.push((minus, plus));
    }
    for &(u, v) in d.arcs() {
        arcs.push((u * block + 1, v * block));
    }
    let digraph = Digraph::new(roles.len(), arcs)?;
    if digraph.vertex_count() > 0 && (digraph.delta_min() != k || digraph.max_dig() != k) {
        return Err(Error::Postcondition(format!(
            "gadget has delta_min {} and max dig {}, expected {k}",
            digraph.delta_min(),
            digraph.max_dig()
        )));
    }
    Ok(LabeledDigraph { digraph, roles })
}

//! Command-line front end for the `backedge` crate.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use backedge::gen::{self, Family};
use backedge::io::{parse_dimacs, parse_edge_list, write_edge_list, write_role_map};
use backedge::reductions::{
    build_reduction, sat_bruteforce, valuation_from_fas, witness_fas_from_valuation,
};
use backedge::report::Report;
use backedge::width::SUBSET_HARD_LIMIT;
use backedge::{degreewidth_via_fas, dig_lower_bound, Digraph, Error, Guards, Ordering, Solver};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Debug, Parser)]
#[command(name = "backedge", version, about = "Backedge-graph parameters of digraphs")]
pub struct Cli {
    /// Worker threads for the exhaustive solvers.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
    /// Raise or lower every vertex-count guard (at most 28).
    #[arg(long, global = true)]
    pub guard_n: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute a parameter of the digraph in an edge-list file.
    Compute {
        param: Param,
        input: PathBuf,
        #[command(flatten)]
        dot: DotArg,
    },
    /// Decide whether the degreewidth is at most k.
    Decide {
        input: PathBuf,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        dot: DotArg,
    },
    /// Build the degreewidth instance of a 3-CNF formula.
    Reduce {
        cnf: PathBuf,
        #[arg(long)]
        k: usize,
        /// Edge-list output; roles go to `<out>.roles.json`.
        #[arg(long)]
        out: PathBuf,
    },
    /// Check both directions of the reduction on a small formula.
    Verify {
        cnf: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Generate a digraph.
    Gen {
        kind: GenKind,
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Arc probability for `random`.
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        /// Degree for `kregular`.
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Undirected family for `symmetric`: complete, cycle, path, empty.
        #[arg(long, default_value = "complete")]
        family: String,
        /// Write the edge list here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct DotArg {
    /// Also write a DOT drawing, backward arcs of the witness highlighted.
    #[arg(long)]
    pub dot: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Param {
    #[value(name = "degreewidth")]
    Degreewidth,
    #[value(name = "dichromatic")]
    Dichromatic,
    #[value(name = "diclique")]
    Diclique,
    #[value(name = "fvn")]
    Fvn,
    #[value(name = "diOLA")]
    DiOla,
    #[value(name = "OLAvec")]
    OlaVec,
    #[value(name = "dcw")]
    Dcw,
    #[value(name = "dbw")]
    Dbw,
    #[value(name = "dmax")]
    Dmax,
    #[value(name = "dmin")]
    Dmin,
    #[value(name = "diglb")]
    Diglb,
}

impl Param {
    fn name(self) -> String {
        self.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Random,
    Tournament,
    Kregular,
    Symmetric,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_GUARD: i32 = 3;
pub const EXIT_INVALID: i32 = 4;

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::Io(_) => EXIT_PARSE,
        Error::GuardExceeded { .. } => EXIT_GUARD,
        _ => EXIT_INVALID,
    }
}

fn guards(guard_n: Option<usize>) -> Result<Guards, Error> {
    let mut g = Guards::default();
    if let Some(n) = guard_n {
        Error::guard("--guard-n", SUBSET_HARD_LIMIT, n)?;
        g.brute_force_n = n;
        g.subset_n = n;
        g.dichromatic_n = n;
        g.ola_vec_n = n;
    }
    Ok(g)
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Error> {
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn load_digraph(path: &Path) -> Result<Digraph, Error> {
    parse_edge_list(&read(path)?)
}

fn backward_arcs(d: &Digraph, ord: &Ordering) -> Vec<(usize, usize)> {
    d.arcs().iter().copied().filter(|&(u, v)| ord.precedes(v, u)).collect()
}

fn argmax(d: &Digraph, f: impl Fn(usize) -> usize) -> Value {
    (0..d.vertex_count()).max_by_key(|&v| (f(v), std::cmp::Reverse(v))).map_or(Value::Null, |v| json!({ "vertex": v }))
}

struct Computed {
    value: usize,
    witness: Value,
    method: &'static str,
    ordering: Option<Ordering>,
}

fn compute(solver: &Solver, d: &Digraph, param: Param) -> Result<Computed, Error> {
    let ord = |value, o: Ordering, method| Computed {
        value,
        witness: json!(o),
        method,
        ordering: Some(o),
    };
    Ok(match param {
        Param::Degreewidth => {
            let r = solver.degreewidth(d)?;
            ord(r.value, r.witness, "subset-dp")
        }
        Param::Dichromatic => {
            let classes = solver.optimal_dicolouring(d)?;
            Computed { value: classes.len(), witness: json!(classes), method: "acyclic-set-cover", ordering: None }
        }
        Param::Diclique => {
            let r = solver.directed_parameter(d, backedge::ParameterSelector::CliqueNumber)?;
            ord(r.value, r.witness, "brute-force")
        }
        Param::Fvn => {
            let s = solver.min_feedback_vertex_set(d)?;
            Computed { value: s.len(), witness: json!(s), method: "cycle-branch-and-bound", ordering: None }
        }
        Param::DiOla => {
            let r = solver.di_ola(d)?;
            ord(r.value, r.witness, "subset-dp")
        }
        Param::OlaVec => {
            let r = solver.ola_vec(d)?;
            Computed {
                value: r.value,
                witness: json!({ "ordering": r.witness, "arrangement": r.inner }),
                method: "brute-force",
                ordering: Some(r.witness),
            }
        }
        Param::Dcw => {
            let r = solver.directed_cutwidth(d)?;
            ord(r.value, r.witness, "subset-dp")
        }
        Param::Dbw => {
            let r = solver.directed_bandwidth(d)?;
            ord(r.value, r.witness, "branch-and-bound")
        }
        Param::Dmax => Computed {
            value: d.delta_max(),
            witness: argmax(d, |v| d.out_degree(v).max(d.in_degree(v))),
            method: "degree-statistic",
            ordering: None,
        },
        Param::Dmin => Computed {
            value: d.delta_min(),
            witness: argmax(d, |v| d.out_degree(v).min(d.in_degree(v))),
            method: "degree-statistic",
            ordering: None,
        },
        Param::Diglb => Computed {
            value: dig_lower_bound(d),
            witness: argmax(d, |v| d.dig(v)),
            method: "degree-statistic",
            ordering: None,
        },
    })
}

/// Runs a parsed command, writing JSON to `out` and a summary to `err`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Error> {
    let guards = guards(cli.guard_n)?;
    let solver = Solver::new(guards);
    let emit = |out: &mut dyn Write, v: &Value| -> Result<(), Error> {
        writeln!(out, "{}", serde_json::to_string_pretty(v).expect("json"))?;
        Ok(())
    };
    match &cli.command {
        Command::Compute { param, input, dot } => {
            let d = load_digraph(input)?;
            let start = Instant::now();
            let c = compute(&solver, &d, *param)?;
            let report = Report {
                parameter: param.name(),
                value: c.value,
                witness: c.witness,
                method: c.method.to_string(),
                elapsed_ms: start.elapsed().as_millis() as u64,
                guards,
            };
            if let Some(path) = &dot.dot {
                write(path, &d.to_dot(c.ordering.as_ref()))?;
            }
            writeln!(out, "{}", report.to_json())?;
            writeln!(err, "{} = {} ({} vertices, {} arcs)", report.parameter, c.value, d.vertex_count(), d.arc_count())?;
        }
        Command::Decide { input, k, dot } => {
            let d = load_digraph(input)?;
            let (answer, ordering, fas) = match solver.degreewidth(&d) {
                Ok(r) if r.value <= *k => {
                    let fas = backward_arcs(&d, &r.witness);
                    (true, Some(r.witness), Some(fas))
                }
                Ok(_) => (false, None, None),
                Err(Error::GuardExceeded { .. }) => match degreewidth_via_fas(&d, *k) {
                    Some(f) => (true, None, Some(f.iter().collect::<Vec<_>>())),
                    None => (false, None, None),
                },
                Err(e) => return Err(e),
            };
            let mut v = json!({ "k": k, "answer": if answer { "yes" } else { "no" } });
            if let Some(fas) = fas {
                v["fas"] = json!(fas);
            }
            if let Some(o) = &ordering {
                v["ordering"] = json!(o);
            }
            if let Some(path) = &dot.dot {
                write(path, &d.to_dot(ordering.as_ref()))?;
            }
            emit(out, &v)?;
            writeln!(err, "degreewidth <= {k}: {}", if answer { "yes" } else { "no" })?;
        }
        Command::Reduce { cnf, k, out: path } => {
            let phi = parse_dimacs(&read(cnf)?)?;
            let r = build_reduction(&phi, *k)?;
            write(path, &write_edge_list(&r.digraph))?;
            let mut roles = path.clone().into_os_string();
            roles.push(".roles.json");
            write(Path::new(&roles), &write_role_map(&r.roles))?;
            emit(
                out,
                &json!({
                    "k": k,
                    "variables": phi.num_vars(),
                    "clauses": phi.clauses().len(),
                    "vertices": r.digraph.vertex_count(),
                    "arcs": r.digraph.arc_count(),
                    "transfers": r.transfers.len(),
                }),
            )?;
            writeln!(err, "wrote {} vertices, {} arcs to {}", r.digraph.vertex_count(), r.digraph.arc_count(), path.display())?;
        }
        Command::Verify { cnf, k } => {
            let phi = parse_dimacs(&read(cnf)?)?;
            let r = build_reduction(&phi, *k)?;
            let v = match sat_bruteforce(&phi)? {
                Some(nu) => {
                    let checked = witness_fas_from_valuation(&r, &nu)
                        .and_then(|f| valuation_from_fas(&r, &f).map(|back| (f, back)));
                    match checked {
                        Ok((f, back)) => json!({
                            "satisfiable": true,
                            "valuation": nu.values(),
                            "fas_size": f.len(),
                            "recovered_valuation": back.values(),
                            "verdict": "PASS",
                        }),
                        Err(e) => json!({ "satisfiable": true, "error": e.to_string(), "verdict": "FAIL" }),
                    }
                }
                None => {
                    let found = degreewidth_via_fas(&r.digraph, *k);
                    json!({
                        "satisfiable": false,
                        "fas_found": found.is_some(),
                        "verdict": if found.is_none() { "PASS" } else { "FAIL" },
                    })
                }
            };
            writeln!(err, "verify k={k}: {} ({} vertices)", v["verdict"].as_str().unwrap_or(""), r.digraph.vertex_count())?;
            emit(out, &v)?;
        }
        Command::Gen { kind, n, seed, p, k, family, out: path } => {
            let mut rng = gen::seeded(*seed);
            let d = match kind {
                GenKind::Random => gen::random_digraph(*n, *p, &mut rng)?,
                GenKind::Tournament => gen::random_tournament(*n, &mut rng),
                GenKind::Kregular => gen::k_regular(*n, *k, &mut rng)?,
                GenKind::Symmetric => gen::symmetric(family.parse::<Family>()?, *n)?,
            };
            let text = write_edge_list(&d);
            match path {
                Some(path) => write(path, &text)?,
                None => out.write_all(text.as_bytes())?,
            }
            writeln!(err, "generated {} vertices, {} arcs", d.vertex_count(), d.arc_count())?;
        }
    }
    Ok(())
}

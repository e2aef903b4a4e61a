//! Text formats: the edge list for digraphs, DIMACS CNF for formulas and
//! the JSON sidecar mapping vertices to gadget roles.
//!
//! Edge list: first non-comment line `n m`, then `m` lines `u v`
//! (0-indexed). Lines starting with `#` and blank lines are ignored.

use std::fmt::Write as _;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::reductions::{CnfFormula, Literal, Role};

fn numbers<T: std::str::FromStr>(line: &str, lineno: usize) -> Result<Vec<T>> {
    line.split_whitespace()
        .map(|tok| tok.parse::<T>().map_err(|_| Error::parse(lineno, format!("bad number `{tok}`"))))
        .collect()
}

pub fn parse_edge_list(text: &str) -> Result<Digraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or_else(|| Error::parse(1, "missing `n m` header"))?;
    let [n, m]: [usize; 2] = numbers(header, hline)?
        .try_into()
        .map_err(|_| Error::parse(hline, "header must be `n m`"))?;
    let mut arcs = Vec::with_capacity(m);
    for (lineno, line) in lines {
        let [u, v]: [usize; 2] = numbers(line, lineno)?
            .try_into()
            .map_err(|_| Error::parse(lineno, "arc line must be `u v`"))?;
        arcs.push((u, v));
    }
    if arcs.len() != m {
        return Err(Error::parse(hline, format!("header announces {m} arcs, found {}", arcs.len())));
    }
    Digraph::new(n, arcs).map_err(|e| Error::parse(0, e.to_string()))
}

pub fn write_edge_list(d: &Digraph) -> String {
    let mut s = format!("{} {}\n", d.vertex_count(), d.arc_count());
    for &(u, v) in d.arcs() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

/// DIMACS CNF with exactly three literals per clause. Clauses may span
/// lines; `c` lines are comments and a `%` line ends the input.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut clauses: Vec<[Literal; 3]> = Vec::new();
    let mut current: Vec<(Literal, usize)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('%') {
            break;
        }
        if line.starts_with('p') {
            if header.is_some() {
                return Err(Error::parse(lineno, "second problem line"));
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            match toks.as_slice() {
                ["p", "cnf", v, c] => {
                    let v = v.parse().map_err(|_| Error::parse(lineno, "bad variable count"))?;
                    let c = c.parse().map_err(|_| Error::parse(lineno, "bad clause count"))?;
                    header = Some((v, c, lineno));
                }
                _ => return Err(Error::parse(lineno, "problem line must be `p cnf <vars> <clauses>`")),
            }
            continue;
        }
        let Some((num_vars, _, _)) = header else {
            return Err(Error::parse(lineno, "clause before the problem line"));
        };
        for x in numbers::<i64>(line, lineno)? {
            if x == 0 {
                let lits: Vec<Literal> = current.iter().map(|c| c.0).collect();
                let arr: [Literal; 3] = lits
                    .try_into()
                    .map_err(|l: Vec<Literal>| Error::parse(lineno, format!("clause has {} literals, expected 3", l.len())))?;
                clauses.push(arr);
                current.clear();
                continue;
            }
            let var = x.unsigned_abs() as usize - 1;
            if var >= num_vars {
                return Err(Error::parse(lineno, format!("variable {} exceeds declared {num_vars}", var + 1)));
            }
            current.push((Literal { var, negated: x < 0 }, lineno));
        }
    }
    let Some((num_vars, num_clauses, hline)) = header else {
        return Err(Error::parse(1, "missing problem line"));
    };
    if let Some(&(_, l)) = current.first() {
        return Err(Error::parse(l, "clause not terminated by 0"));
    }
    if clauses.len() != num_clauses {
        return Err(Error::parse(hline, format!("header announces {num_clauses} clauses, found {}", clauses.len())));
    }
    CnfFormula::new(num_vars, clauses)
}

pub fn write_dimacs(phi: &CnfFormula) -> String {
    let mut s = format!("p cnf {} {}\n", phi.num_vars(), phi.clauses().len());
    for c in phi.clauses() {
        let _ = writeln!(s, "{} {} {} 0", c[0].to_dimacs(), c[1].to_dimacs(), c[2].to_dimacs());
    }
    s
}

/// `{"0": "l:j=0,i=0", ...}` in vertex order.
pub fn write_role_map(roles: &[Role]) -> String {
    let map: serde_json::Map<String, serde_json::Value> = roles
        .iter()
        .enumerate()
        .map(|(v, r)| (v.to_string(), serde_json::Value::String(r.to_string())))
        .collect();
    let mut s = serde_json::to_string_pretty(&map).expect("strings serialize");
    s.push('\n');
    s
}

pub fn parse_role_map(text: &str) -> Result<Vec<Role>> {
    let map: serde_json::Map<String, serde_json::Value> =
        serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e.to_string()))?;
    let mut roles = vec![None; map.len()];
    for (key, value) in map {
        let v: usize = key.parse().map_err(|_| Error::parse(0, format!("bad vertex id `{key}`")))?;
        let label = value.as_str().ok_or_else(|| Error::parse(0, format!("role of {v} is not a string")))?;
        let slot = roles
            .get_mut(v)
            .ok_or_else(|| Error::parse(0, format!("vertex id {v} out of range")))?;
        *slot = Some(label.parse::<Role>()?);
    }
    roles
        .into_iter()
        .enumerate()
        .map(|(v, r)| r.ok_or_else(|| Error::parse(0, format!("vertex {v} has no role"))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{random_digraph, seeded};
    use crate::reductions::{build_reduction, CnfFormula};
    use proptest::prelude::*;

    #[test]
    fn edge_list_with_comments() {
        let d = parse_edge_list("# triangle\n3 3\n0 1\n\n1 2\n# back\n2 0\n").unwrap();
        assert_eq!(d, Digraph::cycle(3).unwrap());
        assert_eq!(write_edge_list(&d), "3 3\n0 1\n1 2\n2 0\n");
    }

    #[test]
    fn edge_list_errors() {
        for bad in ["", "3\n", "2 1\n0 1 2\n", "2 2\n0 1\n", "2 1\n0 x\n", "1 1\n0 0\n", "2 1\n0 2\n"] {
            assert!(matches!(parse_edge_list(bad), Err(Error::Parse { .. })), "{bad:?}");
        }
    }

    #[test]
    fn dimacs_parsing() {
        let phi = parse_dimacs("c example\np cnf 2 2\n1 1 1 0\n-1 -2\n -2 0\n%\n0\n").unwrap();
        assert_eq!(phi.num_vars(), 2);
        assert_eq!(phi.clauses()[1], [Literal::neg(0), Literal::neg(1), Literal::neg(1)]);
        assert_eq!(parse_dimacs(&write_dimacs(&phi)).unwrap(), phi);
    }

    #[test]
    fn dimacs_errors() {
        for bad in [
            "1 2 3 0\n",
            "p cnf 3 1\n1 2 0\n",
            "p cnf 3 1\n1 2 3 4 0\n",
            "p cnf 3 2\n1 2 3 0\n",
            "p cnf 2 1\n1 2 3 0\n",
            "p cnf 3 1\n1 2 3\n",
            "p dnf 3 1\n",
        ] {
            assert!(matches!(parse_dimacs(bad), Err(Error::Parse { .. })), "{bad:?}");
        }
        assert_eq!(parse_dimacs("p cnf 2 1\n1 -1 2 0\n"), Err(Error::TautologicalClause(0)));
    }

    #[test]
    fn role_map_round_trip() {
        let phi = CnfFormula::new(1, vec![[Literal::pos(0); 3], [Literal::neg(0); 3]]).unwrap();
        let r = build_reduction(&phi, 1).unwrap();
        let text = write_role_map(&r.roles);
        assert!(text.starts_with("{\n  \"0\": \"l:j=0,i=0\""));
        assert_eq!(parse_role_map(&text).unwrap(), r.roles);
        assert!(parse_role_map("{\"1\": \"s\"}").is_err());
    }

    proptest! {
        #[test]
        fn edge_list_round_trip(n in 0usize..12, p in 0.0f64..1.0, seed in any::<u64>()) {
            let d = random_digraph(n, p, &mut seeded(seed)).unwrap();
            prop_assert_eq!(parse_edge_list(&write_edge_list(&d)).unwrap(), d);
        }
    }
}

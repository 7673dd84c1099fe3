//! Named small graphs.
//!
//! Names are lowercase ASCII. Besides the fixed names (`paw`, `diamond`,
//! `house`, `net`, `sun`, `domino`, `claw`, `bull`, `gem`) the parser
//! accepts parameterised families and simple combinators:
//!
//! * `k5` complete, `p4` path, `c7` cycle, `w5` wheel with a 5-cycle rim,
//!   `k2_3` complete bipartite (`k1_3` is the claw),
//! * a leading multiplicity, `4k1`, `2k2`,
//! * disjoint union with `+`, e.g. `p4+k1`, `k2+2k1`,
//! * complement with a `co-` prefix, e.g. `co-c6`.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Fixed names listed by the CLI, in display order.
pub const PATTERN_NAMES: &[&str] = &[
    "paw", "diamond", "house", "net", "sun", "domino", "claw", "bull", "gem", "w4", "w5",
    "k2+2k1", "k3+k1", "p3+k1", "p4+k1", "2k2", "4k1",
];

/// A named pattern graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    pub name: String,
    pub graph: Graph,
}

impl Pattern {
    pub fn parse(name: &str) -> Result<Self> {
        Ok(Pattern {
            name: name.to_string(),
            graph: named(name)?,
        })
    }
}

fn edges(n: usize, list: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, list).expect("pattern table is well formed")
}

pub fn path(k: usize) -> Graph {
    let list: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
    edges(k, &list)
}

pub fn cycle(k: usize) -> Graph {
    assert!(k >= 3, "cycles need at least 3 vertices");
    let list: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    edges(k, &list)
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut list = Vec::new();
    for u in 0..a {
        for v in a..a + b {
            list.push((u, v));
        }
    }
    edges(a + b, &list)
}

/// Rim `C_k` on vertices `0..k` plus a hub `k` adjacent to all of them.
pub fn wheel(k: usize) -> Graph {
    let mut list: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    list.extend((0..k).map(|i| (i, k)));
    edges(k + 1, &list)
}

/// A hole `C_k` with one extra edge between two vertices at distance two.
pub fn building(k: usize) -> Graph {
    assert!(k >= 5, "buildings have at least 5 vertices");
    let mut list: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    list.push((0, 2));
    edges(k, &list)
}

fn fixed(name: &str) -> Option<Graph> {
    Some(match name {
        "paw" => edges(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]),
        "diamond" => edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
        "claw" => complete_bipartite(1, 3),
        "bull" => edges(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)]),
        "gem" => edges(5, &[(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)]),
        "house" => edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4)]),
        "net" => edges(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]),
        "sun" => edges(
            6,
            &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (1, 4), (2, 4), (2, 5), (0, 5)],
        ),
        "domino" => edges(6, &[(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)]),
        _ => return None,
    })
}

fn parse_num(s: &str, name: &str) -> Result<usize> {
    s.parse::<usize>()
        .map_err(|_| Error::UnknownName(name.to_string()))
}

fn parse_base(base: &str, whole: &str) -> Result<Graph> {
    if let Some(rest) = base.strip_prefix("co-") {
        return Ok(parse_base(rest, whole)?.complement());
    }
    if let Some(g) = fixed(base) {
        return Ok(g);
    }
    let unknown = || Error::UnknownName(whole.to_string());
    let (head, tail) = base.split_at(1.min(base.len()));
    match head {
        "k" => {
            if let Some((a, b)) = tail.split_once('_') {
                Ok(complete_bipartite(parse_num(a, whole)?, parse_num(b, whole)?))
            } else {
                Ok(Graph::complete(parse_num(tail, whole)?))
            }
        }
        "p" => {
            let k = parse_num(tail, whole)?;
            if k == 0 {
                return Err(unknown());
            }
            Ok(path(k))
        }
        "c" => {
            let k = parse_num(tail, whole)?;
            if k < 3 {
                return Err(unknown());
            }
            Ok(cycle(k))
        }
        "w" => {
            let k = parse_num(tail, whole)?;
            if k < 3 {
                return Err(unknown());
            }
            Ok(wheel(k))
        }
        _ => Err(unknown()),
    }
}

fn parse_term(term: &str, whole: &str) -> Result<Graph> {
    let digits = term.chars().take_while(|c| c.is_ascii_digit()).count();
    if digits == 0 {
        return parse_base(term, whole);
    }
    let times = parse_num(&term[..digits], whole)?;
    let one = parse_base(&term[digits..], whole)?;
    let mut g = Graph::new(0);
    for _ in 0..times {
        g = g.disjoint_union(&one);
    }
    Ok(g)
}

/// Looks up a pattern by name, see the module docs for the grammar.
pub fn named(name: &str) -> Result<Graph> {
    let name = name.trim();
    if name.is_empty() {
        return Err(Error::UnknownName(String::new()));
    }
    if let Some(rest) = name.strip_prefix("co-") {
        if rest.contains('+') {
            return Ok(named(rest)?.complement());
        }
    }
    let mut g = Graph::new(0);
    for term in name.split('+') {
        g = g.disjoint_union(&parse_term(term, name)?);
    }
    Ok(g)
}

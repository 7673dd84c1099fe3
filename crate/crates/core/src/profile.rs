//! Profile graphs: a path whose vertices are replaced by cliques.
//!
//! The profile `(a1, ..., ap)` has `ai` vertices in group `i`; each group is
//! a clique and consecutive groups are complete to each other. A zero entry
//! leaves a gap, so `(2,0,1)` is `K2 + K1`. A family profile may use `+` for
//! "any positive size".

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Entry {
    Fixed(usize),
    Plus,
}

impl Entry {
    fn accepts(self, size: usize) -> bool {
        match self {
            Entry::Fixed(k) => k == size,
            Entry::Plus => size >= 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Profile(pub Vec<Entry>);

impl Profile {
    pub fn concrete(sizes: &[usize]) -> Self {
        Profile(sizes.iter().map(|&k| Entry::Fixed(k)).collect())
    }

    pub fn entries(&self) -> &[Entry] {
        &self.0
    }

    pub fn is_concrete(&self) -> bool {
        self.0.iter().all(|e| matches!(e, Entry::Fixed(_)))
    }

    /// Sizes of a concrete profile; `None` if it has wildcards.
    pub fn sizes(&self) -> Option<Vec<usize>> {
        self.0
            .iter()
            .map(|e| match e {
                Entry::Fixed(k) => Some(*k),
                Entry::Plus => None,
            })
            .collect()
    }

    /// Maximal runs of nonzero entries.
    fn segments(&self) -> Vec<Vec<Entry>> {
        self.0
            .split(|e| *e == Entry::Fixed(0))
            .filter(|s| !s.is_empty())
            .map(<[Entry]>::to_vec)
            .collect()
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|e| match e {
                Entry::Fixed(k) => k.to_string(),
                Entry::Plus => "+".to_string(),
            })
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Profile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim();
        let inner = inner
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(inner);
        if inner.trim().is_empty() {
            return Ok(Profile(Vec::new()));
        }
        inner
            .split(',')
            .map(|t| match t.trim() {
                "+" => Ok(Entry::Plus),
                d => d
                    .parse()
                    .map(Entry::Fixed)
                    .map_err(|_| Error::InvalidParameter(format!("bad profile entry {d:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Profile)
    }
}

/// The graph of a concrete profile; group `i` gets consecutive labels.
pub fn profile_graph(p: &Profile) -> Result<Graph> {
    let sizes = p
        .sizes()
        .ok_or_else(|| Error::InvalidParameter(format!("profile {p} has wildcards")))?;
    let n: usize = sizes.iter().sum();
    let mut g = Graph::new(n);
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut next = 0;
    for &k in &sizes {
        groups.push((next..next + k).collect());
        next += k;
    }
    for (i, grp) in groups.iter().enumerate() {
        for (a, &u) in grp.iter().enumerate() {
            for &v in &grp[a + 1..] {
                g.set_edge(u, v, true);
            }
        }
        if let Some(nxt) = groups.get(i + 1) {
            g.join(grp, nxt);
        }
    }
    Ok(g)
}

/// Concrete segments a connected graph can be written as, or empty if it
/// is not a path of cliques.
fn component_segments(g: &Graph, comp: &VertexSet) -> Vec<Vec<usize>> {
    // group true twins
    let mut classes: Vec<(VertexSet, Vec<usize>)> = Vec::new();
    for v in comp.iter() {
        let nv = g.closed_neighbors(v).intersection(comp);
        match classes.iter_mut().find(|(n, _)| *n == nv) {
            Some((_, members)) => members.push(v),
            None => classes.push((nv, vec![v])),
        }
    }
    let t = classes.len();
    if t == 1 {
        let s = classes[0].1.len();
        let mut out = vec![vec![s]];
        out.extend((1..s).map(|a| vec![a, s - a]));
        return out;
    }
    let rep: Vec<usize> = classes.iter().map(|(_, m)| m[0]).collect();
    let adj = |i: usize, j: usize| g.has_edge(rep[i], rep[j]);
    let deg: Vec<usize> = (0..t).map(|i| (0..t).filter(|&j| j != i && adj(i, j)).count()).collect();
    let ends: Vec<usize> = (0..t).filter(|&i| deg[i] == 1).collect();
    if deg.iter().any(|&d| d > 2) || ends.len() != 2 {
        return Vec::new();
    }
    let mut order = vec![ends[0]];
    let mut prev = usize::MAX;
    while order.len() < t {
        let cur = *order.last().expect("order is seeded");
        match (0..t).find(|&j| j != cur && j != prev && adj(cur, j)) {
            Some(j) => {
                prev = cur;
                order.push(j);
            }
            None => return Vec::new(),
        }
    }
    let seq: Vec<usize> = order.iter().map(|&i| classes[i].1.len()).collect();
    let mut rev = seq.clone();
    rev.reverse();
    if rev == seq {
        vec![seq]
    } else {
        vec![seq, rev]
    }
}

fn assign(
    pats: &[Vec<Entry>],
    options: &[Vec<Vec<usize>>],
    used: &mut Vec<bool>,
    chosen: &mut Vec<Vec<usize>>,
) -> bool {
    let i = chosen.len();
    if i == pats.len() {
        return true;
    }
    for c in 0..options.len() {
        if used[c] {
            continue;
        }
        for seg in &options[c] {
            if seg.len() == pats[i].len() && pats[i].iter().zip(seg).all(|(e, &s)| e.accepts(s)) {
                used[c] = true;
                chosen.push(seg.clone());
                if assign(pats, options, used, chosen) {
                    return true;
                }
                chosen.pop();
                used[c] = false;
            }
        }
    }
    false
}

/// A concrete instance of `fam` isomorphic to `g`, if there is one.
///
/// Works from the structure of `g`: each component must be a path of
/// cliques, read off from its true-twin classes, and components are then
/// matched to the zero-separated runs of `fam`.
pub fn match_profile_family(g: &Graph, fam: &Profile) -> Option<Profile> {
    let pats = fam.segments();
    let comps = g.components();
    if comps.len() != pats.len() {
        return None;
    }
    let options: Vec<Vec<Vec<usize>>> = comps.iter().map(|c| component_segments(g, c)).collect();
    if options.iter().any(Vec::is_empty) {
        return None;
    }
    let mut chosen = Vec::new();
    if !assign(&pats, &options, &mut vec![false; comps.len()], &mut chosen) {
        return None;
    }
    let mut sizes = Vec::new();
    for (i, seg) in chosen.iter().enumerate() {
        if i > 0 {
            sizes.push(0);
        }
        sizes.extend(seg);
    }
    Some(Profile::concrete(&sizes))
}

pub fn matches_profile_family(g: &Graph, fam: &Profile) -> bool {
    match_profile_family(g, fam).is_some()
}

//! Canonical forms for small graphs, switching classes, and exhaustive
//! enumeration of non-isomorphic graphs.
//!
//! The canonical code of a graph is the lexicographically largest
//! adjacency string over all vertex orderings that list vertices by
//! non-increasing degree. Degree is an isomorphism invariant, so this is a
//! valid canonical form; branch and bound on the code prefix keeps the
//! search small for the orders used here (n <= 10).

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest order accepted by [`canonical_form`].
pub const CANON_MAX: usize = 10;

/// Byte string identifying an isomorphism class of graphs on at most
/// [`CANON_MAX`] vertices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Vertex count of the graphs in this class.
    pub fn order(&self) -> usize {
        self.0[0] as usize
    }
}

struct Search<'a> {
    adj: &'a [u16],
    n: usize,
    slots: Vec<u16>,
    cur: Vec<u16>,
    perm: Vec<usize>,
    used: u16,
    best: Option<(Vec<u16>, Vec<usize>)>,
}

impl Search<'_> {
    fn value(&self, k: usize, v: usize) -> u16 {
        let mut val = 0u16;
        for j in 0..k {
            val = (val << 1) | ((self.adj[v] >> self.perm[j]) & 1);
        }
        val
    }

    fn prefix_cmp(&self, upto: usize) -> std::cmp::Ordering {
        match &self.best {
            None => std::cmp::Ordering::Greater,
            Some((b, _)) => self.cur[..upto].cmp(&b[..upto]),
        }
    }

    fn run(&mut self, k: usize) {
        if k == self.n {
            if self.prefix_cmp(k) == std::cmp::Ordering::Greater {
                self.best = Some((self.cur.clone(), self.perm.clone()));
            }
            return;
        }
        let mut cand = self.slots[k] & !self.used;
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            let val = self.value(k, v);
            self.cur.push(val);
            self.perm.push(v);
            if self.prefix_cmp(k + 1) != std::cmp::Ordering::Less {
                self.used |= 1 << v;
                self.run(k + 1);
                self.used &= !(1 << v);
            }
            self.cur.pop();
            self.perm.pop();
        }
    }
}

/// Returns the canonical code and the ordering that realises it
/// (`order[i]` is the vertex placed at position `i`).
fn canonical_search(g: &Graph) -> Result<(Vec<u16>, Vec<usize>)> {
    let n = g.n();
    if n > CANON_MAX {
        return Err(Error::TooLarge { n, max: CANON_MAX });
    }
    let adj: Vec<u16> = (0..n).map(|v| g.row_mask(v) as u16).collect();
    let mut degs: Vec<(usize, usize)> = (0..n).map(|v| (g.degree(v), v)).collect();
    degs.sort_by_key(|d| std::cmp::Reverse(d.0));
    let slots = degs
        .iter()
        .map(|&(d, _)| {
            (0..n)
                .filter(|&v| g.degree(v) == d)
                .fold(0u16, |m, v| m | (1 << v))
        })
        .collect();
    let mut s = Search {
        adj: &adj,
        n,
        slots,
        cur: Vec::with_capacity(n),
        perm: Vec::with_capacity(n),
        used: 0,
        best: None,
    };
    s.run(0);
    Ok(s.best.unwrap_or_default())
}

/// Canonical form of `g`; equal for two graphs iff they are isomorphic.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let (code, _) = canonical_search(g)?;
    Ok(encode(g.n(), &code))
}

/// `g` relabelled into canonical order. Isomorphic inputs give identical outputs.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    let (_, order) = canonical_search(g)?;
    Ok(g.permuted(&order))
}

fn encode(n: usize, code: &[u16]) -> CanonicalForm {
    let mut bytes = vec![n as u8];
    let mut acc = 0u8;
    let mut filled = 0;
    for (k, &val) in code.iter().enumerate() {
        for j in (0..k).rev() {
            acc = (acc << 1) | ((val >> j) & 1) as u8;
            filled += 1;
            if filled == 8 {
                bytes.push(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push(acc << (8 - filled));
    }
    CanonicalForm(bytes)
}

/// Whether two graphs are isomorphic (both of order at most [`CANON_MAX`]).
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

/// The non-isomorphic graphs reachable from a seed graph by switching.
///
/// Members are keyed by canonical form; each representative is the
/// canonically relabelled graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwitchingClass {
    members: BTreeMap<CanonicalForm, Graph>,
}

impl SwitchingClass {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, form: &CanonicalForm) -> bool {
        self.members.contains_key(form)
    }

    pub fn contains_graph(&self, g: &Graph) -> Result<bool> {
        Ok(self.contains(&canonical_form(g)?))
    }

    pub fn forms(&self) -> impl Iterator<Item = &CanonicalForm> {
        self.members.keys()
    }

    pub fn graphs(&self) -> impl Iterator<Item = &Graph> {
        self.members.values()
    }

    pub fn into_graphs(self) -> Vec<Graph> {
        self.members.into_values().collect()
    }
}

/// All switches `S(g, A)` up to isomorphism. Only sets avoiding vertex 0 are
/// tried, since `A` and its complement switch to the same graph.
pub fn switching_class(g: &Graph) -> Result<SwitchingClass> {
    let n = g.n();
    if n > CANON_MAX {
        return Err(Error::TooLarge { n, max: CANON_MAX });
    }
    let mut members = BTreeMap::new();
    let count = if n == 0 { 1u64 } else { 1u64 << (n - 1) };
    for m in 0..count {
        let a = VertexSet::from_mask(n, m << 1);
        let s = g.switch(&a);
        let form = canonical_form(&s)?;
        if let std::collections::btree_map::Entry::Vacant(e) = members.entry(form) {
            e.insert(canonical_graph(&s)?);
        }
    }
    Ok(SwitchingClass { members })
}

pub fn are_switching_equivalent(g: &Graph, h: &Graph) -> Result<bool> {
    if g.n() != h.n() {
        return Err(Error::SizeMismatch {
            expected: g.n(),
            got: h.n(),
        });
    }
    let n = g.n();
    if n > CANON_MAX {
        return Err(Error::TooLarge { n, max: CANON_MAX });
    }
    let target = canonical_form(h)?;
    let count = if n == 0 { 1u64 } else { 1u64 << (n - 1) };
    for m in 0..count {
        let s = g.switch(&VertexSet::from_mask(n, m << 1));
        if s.edge_count() == h.edge_count() && canonical_form(&s)? == target {
            return Ok(true);
        }
    }
    Ok(false)
}

/// One canonical representative of every isomorphism class on `n`
/// vertices, sorted by canonical form.
///
/// Built by adding a vertex in every possible way to each graph of order
/// `n - 1`; feasible up to `n = 9`.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > 9 {
        return Err(Error::TooLarge { n, max: 9 });
    }
    let mut layer = vec![Graph::new(0)];
    for k in 1..=n {
        let mut next: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
        for g in &layer {
            for mask in 0..(1u64 << (k - 1)) {
                let mut h = Graph::new(k);
                for (u, v) in g.edges() {
                    h.set_edge(u, v, true);
                }
                for u in 0..k - 1 {
                    if mask >> u & 1 == 1 {
                        h.set_edge(u, k - 1, true);
                    }
                }
                let form = canonical_form(&h)?;
                if let std::collections::btree_map::Entry::Vacant(e) = next.entry(form) {
                    e.insert(canonical_graph(&h)?);
                }
            }
        }
        layer = next.into_values().collect();
    }
    Ok(layer)
}

/// Canonical forms of a list of graphs, deduplicated.
pub fn form_set<'a, I: IntoIterator<Item = &'a Graph>>(graphs: I) -> Result<BTreeSet<CanonicalForm>> {
    graphs.into_iter().map(canonical_form).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::named;

    fn g(name: &str) -> Graph {
        named(name).unwrap()
    }

    #[test]
    fn relabelled_path_has_same_form() {
        let p4 = g("p4");
        let relabelled = p4.permuted(&[2, 0, 3, 1]);
        assert_ne!(p4, relabelled);
        assert_eq!(canonical_form(&p4).unwrap(), canonical_form(&relabelled).unwrap());
        assert_eq!(canonical_graph(&p4).unwrap(), canonical_graph(&relabelled).unwrap());
    }

    #[test]
    fn c4_and_2k2_differ() {
        assert_ne!(canonical_form(&g("c4")).unwrap(), canonical_form(&g("2k2")).unwrap());
    }

    #[test]
    fn too_large_is_rejected() {
        assert_eq!(
            canonical_form(&Graph::new(11)),
            Err(Error::TooLarge { n: 11, max: CANON_MAX })
        );
    }

    #[test]
    fn graph_counts_match_known_sequence() {
        // OEIS A000088
        let expected = [1, 1, 2, 4, 11, 34, 156, 1044];
        for (n, &count) in expected.iter().enumerate() {
            assert_eq!(all_graphs(n).unwrap().len(), count, "n = {n}");
        }
    }

    #[test]
    fn canonical_form_is_permutation_invariant_exhaustive_n5() {
        // Every labelled graph on 5 vertices vs its reversal.
        for mask in 0u32..(1 << 10) {
            let mut edges = Vec::new();
            let mut bit = 0;
            for u in 0..5 {
                for v in u + 1..5 {
                    if mask >> bit & 1 == 1 {
                        edges.push((u, v));
                    }
                    bit += 1;
                }
            }
            let h = Graph::from_edges(5, &edges).unwrap();
            let r = h.permuted(&[4, 3, 2, 1, 0]);
            assert_eq!(canonical_form(&h).unwrap(), canonical_form(&r).unwrap());
        }
    }

    #[test]
    fn switching_equivalence_examples() {
        assert!(are_switching_equivalent(&g("2k2"), &g("k4")).unwrap());
        assert!(!are_switching_equivalent(&g("c4"), &g("p4")).unwrap());
        let c5 = g("c5");
        assert!(are_switching_equivalent(&c5, &c5).unwrap());
        assert_eq!(
            are_switching_equivalent(&c5, &g("c4")),
            Err(Error::SizeMismatch { expected: 5, got: 4 })
        );
    }
}

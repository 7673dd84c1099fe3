use std::collections::BTreeSet;

use super::{closed_pair, split_partitions_within};
use crate::graph::{Graph, VertexSet};
use crate::recognize::{is_split, split_partition};

/// Candidate sets from the pair-guessing step, in scan order.
fn pair_candidates(g: &Graph, mut visit: impl FnMut(VertexSet) -> bool) {
    let n = g.n();
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            let common = g.neighbors(u).intersection(&g.neighbors(v));
            let inner = split_partitions_within(g, &common);
            if inner.is_empty() {
                continue;
            }
            let rest = closed_pair(g, u, v).complement();
            let outer = split_partitions_within(g, &rest);
            if outer.is_empty() {
                continue;
            }
            let mut base = g.neighbors(u).difference(&g.closed_neighbors(v));
            base.insert(u);
            base.insert(v);
            for p1 in &inner {
                for p2 in &outer {
                    if visit(base.union(&p1.k).union(&p2.i)) {
                        return;
                    }
                }
            }
        }
    }
}

/// Some `A` with `S(g, A)` split.
pub fn upper_split(g: &Graph) -> Option<VertexSet> {
    if is_split(g) {
        return Some(VertexSet::empty(g.n()));
    }
    let mut found = None;
    pair_candidates(g, |a| {
        if is_split(&g.switch(&a)) {
            found = Some(a.normalized());
            true
        } else {
            false
        }
    });
    found
}

/// Sets of size `0`, `1`, `|s| - 1` or `|s|` inside `s`.
fn near_trivial_subsets(s: &VertexSet) -> Vec<VertexSet> {
    let mut out = vec![VertexSet::empty(s.universe()), s.clone()];
    for v in s.iter() {
        out.push(VertexSet::singleton(s.universe(), v).expect("member of s"));
        let mut rest = s.clone();
        rest.remove(v);
        out.push(rest);
    }
    out
}

/// Every `A` avoiding vertex 0 with `S(g, A)` split, sorted.
pub fn enumerate_upper_split(g: &Graph) -> Vec<VertexSet> {
    let mut out = BTreeSet::new();
    if let Some(p) = split_partition(g) {
        // on a split graph a solution meets each side in at most one
        // vertex or in all but at most one
        let ks = near_trivial_subsets(&p.k);
        let is = near_trivial_subsets(&p.i);
        for a in &ks {
            for b in &is {
                let c = a.union(b);
                if is_split(&g.switch(&c)) {
                    out.insert(c.normalized());
                }
            }
        }
    } else {
        pair_candidates(g, |a| {
            if is_split(&g.switch(&a)) {
                out.insert(a.normalized());
            }
            false
        });
    }
    out.into_iter().collect()
}

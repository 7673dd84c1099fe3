use std::collections::BTreeSet;
use std::sync::OnceLock;

use super::split_partitions_within;
use super::split::{enumerate_upper_split, upper_split};
use crate::canon::{switching_class, SwitchingClass};
use crate::graph::{Graph, VertexSet};
use crate::patterns::cycle;
use crate::recognize::is_pseudo_split;

fn c5_class() -> &'static SwitchingClass {
    static C: OnceLock<SwitchingClass> = OnceLock::new();
    C.get_or_init(|| switching_class(&cycle(5)).expect("five vertices"))
}

fn is_c5(h: &Graph) -> bool {
    h.n() == 5 && h.edge_count() == 5 && (0..5).all(|v| h.degree(v) == 2) && h.is_connected()
}

/// Subsets of `0..k` with `r` elements, as index lists, ascending.
fn subsets(k: usize, r: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, k: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for v in start..k {
            if k - v < r - cur.len() {
                break;
            }
            cur.push(v);
            go(v + 1, k, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, k, r, &mut Vec::new(), &mut out);
    out
}

/// Candidate sets that would leave an induced `C5` behind, in scan order.
fn c5_candidates(g: &Graph, mut visit: impl FnMut(VertexSet) -> bool) {
    let n = g.n();
    for five in subsets(n, 5) {
        let h = VertexSet::from_indices(n, five.iter().copied()).expect("in range");
        let gh = g.induced(&h);
        if !c5_class().contains_graph(&gh).expect("five vertices") {
            continue;
        }
        for local in 0u64..32 {
            if local.count_ones() < 3 {
                continue;
            }
            let b = VertexSet::from_mask(5, local);
            if !is_c5(&gh.switch(&b)) {
                continue;
            }
            let h1 = VertexSet::lift_from(&b, &h);
            let h2 = h.difference(&h1);
            let mut x1 = VertexSet::empty(n);
            let mut x2 = VertexSet::empty(n);
            let screened = h.complement().iter().all(|x| {
                let seen = g.neighbors(x).intersection(&h);
                if seen == h1 {
                    x1.insert(x);
                    true
                } else if seen == h2 {
                    x2.insert(x);
                    true
                } else {
                    false
                }
            });
            if !screened {
                continue;
            }
            let parts1 = split_partitions_within(g, &x1);
            if parts1.is_empty() {
                continue;
            }
            let parts2 = split_partitions_within(g, &x2);
            for p1 in &parts1 {
                for p2 in &parts2 {
                    if visit(h1.union(&p1.k).union(&p2.i)) {
                        return;
                    }
                }
            }
        }
    }
}

/// Some `A` with `S(g, A)` pseudo-split.
pub fn upper_pseudo_split(g: &Graph) -> Option<VertexSet> {
    if let Some(a) = upper_split(g) {
        return Some(a);
    }
    let mut found = None;
    c5_candidates(g, |a| {
        if is_pseudo_split(&g.switch(&a)) {
            found = Some(a.normalized());
            true
        } else {
            false
        }
    });
    found
}

/// Every `A` avoiding vertex 0 with `S(g, A)` pseudo-split, sorted.
pub fn enumerate_upper_pseudo_split(g: &Graph) -> Vec<VertexSet> {
    let mut out: BTreeSet<VertexSet> = enumerate_upper_split(g).into_iter().collect();
    c5_candidates(g, |a| {
        if is_pseudo_split(&g.switch(&a)) {
            out.insert(a.normalized());
        }
        false
    });
    out.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::all_graphs;
    use crate::oracle::{oracle_upper, oracle_upper_all};
    use crate::patterns::named;

    #[test]
    fn examples() {
        assert!(upper_pseudo_split(&cycle(5)).is_some());
        let gem = named("gem").unwrap();
        let a = upper_pseudo_split(&gem).unwrap();
        assert!(is_pseudo_split(&gem.switch(&a)));
        assert_eq!(c5_class().len(), 4);
    }

    #[test]
    fn matches_oracle_up_to_seven() {
        for n in 1..=7 {
            for g in all_graphs(n).unwrap() {
                let fast = upper_pseudo_split(&g);
                let slow = oracle_upper(&g, is_pseudo_split).unwrap();
                assert_eq!(fast.is_some(), slow.is_some(), "{g:?}");
                let mut all = oracle_upper_all(&g, is_pseudo_split).unwrap();
                all.sort();
                assert_eq!(enumerate_upper_pseudo_split(&g), all, "{g:?}");
            }
        }
    }
}

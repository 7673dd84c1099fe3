use super::{check_size, closed_pair};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::oracle::oracle_upper;
use crate::recognize::{is_complete_multipartite, is_paw_free, is_triangle_free};

/// Some `A` with `S(g, A)` triangle-free, by exhaustive search.
pub fn upper_triangle_free(g: &Graph) -> Result<Option<VertexSet>> {
    oracle_upper(g, is_triangle_free)
}

/// Some `A` with `S(g, A)` complete multipartite (`K2 + K1`-free), by
/// exhaustive search.
pub fn upper_complete_multipartite(g: &Graph) -> Result<Option<VertexSet>> {
    oracle_upper(g, is_complete_multipartite)
}

/// How the common-neighbour case of the three-component step picks the
/// vertices of `N[u1] Δ N[u2]` that go into `A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(not(test), allow(dead_code))]
pub(crate) enum CommonRule {
    /// Keep those outside `N(u3)`.
    Outside,
    /// Keep those inside `N(u3)`.
    Inside,
    Both,
}

/// Subsets of `0..k` with at most two elements.
fn small_index_sets(k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for i in 0..k {
        out.push(vec![i]);
        for j in i + 1..k {
            out.push(vec![i, j]);
        }
    }
    out
}

fn union_of(n: usize, parts: &[VertexSet], pick: impl Fn(usize) -> bool) -> VertexSet {
    parts
        .iter()
        .enumerate()
        .filter(|&(i, _)| pick(i))
        .fold(VertexSet::empty(n), |acc, (_, c)| acc.union(c))
}

/// Candidate sets of steps 2 and 3, in scan order.
fn candidates(g: &Graph, rule: CommonRule, mut visit: impl FnMut(VertexSet) -> bool) {
    let n = g.n();
    let all = g.vertices();
    // at least three components after switching
    for u1 in 0..n {
        for u2 in u1 + 1..n {
            if g.has_edge(u1, u2) {
                continue;
            }
            let around = closed_pair(g, u1, u2);
            for u3 in around.complement().iter() {
                let trio = VertexSet::from_indices(n, [u1, u2, u3]).expect("in range");
                let a = VertexSet::from_indices(
                    n,
                    (0..n).filter(|&x| g.closed_neighbors(x).intersection(&trio).len() <= 1),
                )
                .expect("in range");
                if visit(a) {
                    return;
                }
            }
            let far = around.complement();
            let delta = g.closed_neighbors(u1).symmetric_difference(&g.closed_neighbors(u2));
            let common = g.neighbors(u1).intersection(&g.neighbors(u2));
            for u3 in common.iter() {
                let n3 = g.neighbors(u3);
                if matches!(rule, CommonRule::Outside | CommonRule::Both)
                    && visit(far.union(&delta.difference(&n3)))
                {
                    return;
                }
                if matches!(rule, CommonRule::Inside | CommonRule::Both)
                    && visit(far.union(&delta.intersection(&n3)))
                {
                    return;
                }
            }
        }
    }
    // exactly two components, one of them holding a triangle
    for u1 in 0..n {
        for u2 in u1 + 1..n {
            if !g.has_edge(u1, u2) {
                continue;
            }
            let around = closed_pair(g, u1, u2);
            let common = g.neighbors(u1).intersection(&g.neighbors(u2));
            let rest = all.difference(&around);
            let inner = g.co_components_within(&common);
            let outer = g.co_components_within(&rest);
            let delta = g.neighbors(u1).symmetric_difference(&g.neighbors(u2));
            for i_set in small_index_sets(inner.len()) {
                let x = union_of(n, &inner, |i| !i_set.contains(&i));
                for j_set in small_index_sets(outer.len()) {
                    let y = union_of(n, &outer, |j| j_set.contains(&j));
                    let a = if let Some(u3) = x.first() {
                        x.union(&y).union(&delta.intersection(&g.neighbors(u3)))
                    } else {
                        let Some(u3) = around.union(&y).complement().first() else {
                            continue;
                        };
                        x.union(&y).union(&delta.difference(&g.neighbors(u3)))
                    };
                    if visit(a) {
                        return;
                    }
                }
            }
        }
    }
}

pub(crate) fn upper_paw_free_with(g: &Graph, rule: CommonRule) -> Result<Option<VertexSet>> {
    check_size(g)?;
    if let Some(a) = upper_triangle_free(g)? {
        return Ok(Some(a));
    }
    if let Some(a) = upper_complete_multipartite(g)? {
        return Ok(Some(a));
    }
    let mut found = None;
    candidates(g, rule, |a| {
        if is_paw_free(&g.switch(&a)) {
            found = Some(a.normalized());
            true
        } else {
            false
        }
    });
    Ok(found)
}

/// Some `A` with `S(g, A)` paw-free.
pub fn upper_paw_free(g: &Graph) -> Result<Option<VertexSet>> {
    upper_paw_free_with(g, CommonRule::Both)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::all_graphs;
    use crate::patterns::named;

    #[test]
    fn examples() {
        let k3 = Graph::complete(3);
        let a = upper_triangle_free(&k3).unwrap().unwrap();
        assert_eq!(a.len(), 1);
        let k2k1 = named("k2+k1").unwrap();
        assert!(upper_complete_multipartite(&k2k1).unwrap().is_some());
        let paw = named("paw").unwrap();
        let a = upper_paw_free(&paw).unwrap().unwrap();
        assert!(is_paw_free(&paw.switch(&a)));
        assert!(upper_paw_free(&Graph::complete(4)).unwrap().is_some());
        assert_eq!(upper_paw_free(&named("c4").unwrap()).unwrap(), Some(VertexSet::empty(4)));
    }

    fn disagreements(rule: CommonRule, max_n: usize) -> usize {
        let mut bad = 0;
        for n in 1..=max_n {
            for g in all_graphs(n).unwrap() {
                let fast = upper_paw_free_with(&g, rule).unwrap().is_some();
                let slow = oracle_upper(&g, is_paw_free).unwrap().is_some();
                if fast != slow {
                    if bad == 0 {
                        println!("{rule:?} first miss: {}", crate::io::emit_graph6(&g));
                    }
                    bad += 1;
                }
            }
        }
        bad
    }

    #[test]
    fn matches_oracle_up_to_seven() {
        assert_eq!(disagreements(CommonRule::Both, 7), 0);
    }

    #[test]
    fn common_neighbour_rule_needs_the_inside_set() {
        let g = crate::io::parse_graph6("F~aKW").unwrap();
        assert!(oracle_upper(&g, is_paw_free).unwrap().is_some());
        assert_eq!(upper_paw_free_with(&g, CommonRule::Outside).unwrap(), None);
        assert!(upper_paw_free_with(&g, CommonRule::Inside).unwrap().is_some());
    }

    #[test]
    #[ignore]
    fn rule_comparison() {
        for rule in [CommonRule::Outside, CommonRule::Inside] {
            println!("{rule:?}: {}", disagreements(rule, 8));
        }
    }
}

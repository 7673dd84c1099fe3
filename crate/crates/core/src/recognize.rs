//! Direct membership tests for the graph classes that appear as switching
//! targets or as reference classes for the lower-class recognizers.

use std::sync::OnceLock;

use crate::family::{is_family_free, PatternFamily};
use crate::graph::{Graph, VertexSet};
use crate::patterns::{building, complete_bipartite, cycle, named};
use crate::search::{find_induced_cycle, is_h_free};

/// A clique `k` and an independent set `i` partitioning the vertices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SplitPartition {
    pub k: VertexSet,
    pub i: VertexSet,
}

impl SplitPartition {
    pub fn is_valid(&self, g: &Graph) -> bool {
        self.k.is_disjoint(&self.i)
            && self.k.union(&self.i) == g.vertices()
            && g.is_clique(&self.k)
            && g.is_independent(&self.i)
    }
}

/// Split partition plus an optional `C5` part `h`, complete to `k` and
/// anticomplete to `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoSplitPartition {
    pub k: VertexSet,
    pub i: VertexSet,
    pub h: VertexSet,
}

fn degree_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = g.vertices().iter().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

/// One split partition, via the degree-sequence criterion of Hammer and
/// Simeone.
pub fn split_partition(g: &Graph) -> Option<SplitPartition> {
    let order = degree_order(g);
    let d: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    let m = (0..d.len()).take_while(|&i| d[i] >= i).count();
    let head: usize = d[..m].iter().sum();
    let tail: usize = d[m..].iter().sum();
    if head != m * m.saturating_sub(1) + tail {
        return None;
    }
    let n = g.n();
    let k = VertexSet::from_indices(n, order[..m].iter().copied()).expect("in range");
    let p = SplitPartition {
        i: k.complement(),
        k,
    };
    debug_assert!(p.is_valid(g));
    Some(p)
}

pub fn is_split(g: &Graph) -> bool {
    split_partition(g).is_some()
}

/// Every split partition of `g`, sorted; empty iff `g` is not split.
///
/// Any two split partitions differ by moving at most one vertex each
/// way, so all of them are found next to a single one.
pub fn split_partitions(g: &Graph) -> Vec<SplitPartition> {
    let Some(base) = split_partition(g) else {
        return Vec::new();
    };
    let mut out = vec![base.clone()];
    let ks: Vec<Option<usize>> = std::iter::once(None).chain(base.k.iter().map(Some)).collect();
    let is: Vec<Option<usize>> = std::iter::once(None).chain(base.i.iter().map(Some)).collect();
    for &x in &ks {
        for &y in &is {
            if x.is_none() && y.is_none() {
                continue;
            }
            let mut k = base.k.clone();
            let mut i = base.i.clone();
            if let Some(x) = x {
                k.remove(x);
                i.insert(x);
            }
            if let Some(y) = y {
                i.remove(y);
                k.insert(y);
            }
            let p = SplitPartition { k, i };
            if p.is_valid(g) {
                out.push(p);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

pub fn pseudo_split_partition(g: &Graph) -> Option<PseudoSplitPartition> {
    if let Some(p) = split_partition(g) {
        return Some(PseudoSplitPartition {
            k: p.k,
            i: p.i,
            h: VertexSet::empty(g.n()),
        });
    }
    let c5 = find_induced_cycle(g, 5).expect("unbounded search")?;
    let n = g.n();
    let h = VertexSet::from_indices(n, c5).expect("in range");
    let mut k = VertexSet::empty(n);
    let mut i = VertexSet::empty(n);
    for v in h.complement().iter() {
        let seen = g.degree_in(v, &h);
        if seen == 5 {
            k.insert(v);
        } else if seen == 0 {
            i.insert(v);
        } else {
            return None;
        }
    }
    (g.is_clique(&k) && g.is_independent(&i)).then_some(PseudoSplitPartition { k, i, h })
}

pub fn is_pseudo_split(g: &Graph) -> bool {
    pseudo_split_partition(g).is_some()
}

fn family(cell: &'static OnceLock<PatternFamily>, names: &[&str]) -> &'static PatternFamily {
    cell.get_or_init(|| PatternFamily::from_names(names).expect("fixed pattern names"))
}

pub fn is_triangle_free(g: &Graph) -> bool {
    is_h_free(g, &Graph::complete(3))
}

pub fn is_paw_free(g: &Graph) -> bool {
    static PAW: OnceLock<Graph> = OnceLock::new();
    is_h_free(g, PAW.get_or_init(|| named("paw").expect("fixed name")))
}

/// `K2 + K1`-free graphs: complete multipartite, possibly with one part.
pub fn is_complete_multipartite(g: &Graph) -> bool {
    g.co_components_within(&g.vertices())
        .iter()
        .all(|c| g.is_independent(c))
}

/// Edgeless graphs count as complete bipartite with one side empty.
pub fn is_complete_bipartite(g: &Graph) -> bool {
    is_complete_multipartite(g) && g.co_components_within(&g.vertices()).len() <= 2
}

/// Proper 2-colouring by BFS; the colour-0 side of each component holds
/// its smallest vertex.
pub fn bipartition(g: &Graph) -> Option<VertexSet> {
    let n = g.n();
    let mut colour = vec![u8::MAX; n];
    let mut side = VertexSet::empty(n);
    for s in 0..n {
        if colour[s] != u8::MAX {
            continue;
        }
        colour[s] = 0;
        side.insert(s);
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for w in g.neighbors(v).iter() {
                if colour[w] == u8::MAX {
                    colour[w] = 1 - colour[v];
                    if colour[w] == 0 {
                        side.insert(w);
                    }
                    stack.push(w);
                } else if colour[w] == colour[v] {
                    return None;
                }
            }
        }
    }
    Some(side)
}

pub fn is_bipartite(g: &Graph) -> bool {
    bipartition(g).is_some()
}

/// `{C3, 2K2, C5}`-free.
pub fn is_bipartite_chain(g: &Graph) -> bool {
    static F: OnceLock<PatternFamily> = OnceLock::new();
    is_family_free(g, family(&F, &["c3", "2k2", "c5"]))
}

/// Chordal by repeatedly deleting simplicial vertices.
pub fn is_chordal(g: &Graph) -> bool {
    let mut left = g.vertices();
    'outer: while !left.is_empty() {
        for v in left.iter() {
            let nb = g.neighbors(v).intersection(&left);
            if g.is_clique(&nb) {
                left.remove(v);
                continue 'outer;
            }
        }
        return false;
    }
    true
}

fn has_hole_between(g: &Graph, lo: usize, hi: usize, odd_only: bool) -> bool {
    (lo..=hi.min(g.n()))
        .filter(|k| !odd_only || k % 2 == 1)
        .any(|k| find_induced_cycle(g, k).expect("unbounded search").is_some())
}

/// No hole of length at least 5 in the graph or its complement.
pub fn is_weakly_chordal(g: &Graph) -> bool {
    !has_hole_between(g, 5, g.n(), false) && !has_hole_between(&g.complement(), 5, g.n(), false)
}

/// `{domino, gem, house}`-free with no hole of length at least 5.
pub fn is_distance_hereditary(g: &Graph) -> bool {
    static F: OnceLock<PatternFamily> = OnceLock::new();
    is_family_free(g, family(&F, &["domino", "gem", "house"])) && !has_hole_between(g, 5, g.n(), false)
}

/// No odd hole and no odd building.
pub fn is_meyniel(g: &Graph) -> bool {
    if has_hole_between(g, 5, g.n(), true) {
        return false;
    }
    (5..=g.n())
        .step_by(2)
        .all(|k| is_h_free(g, &building(k)))
}

/// Gallai's criterion: a transitive orientation exists iff no implication
/// class contains an arc together with its reverse.
pub fn is_comparability(g: &Graph) -> bool {
    let n = g.n();
    let edges = g.edges();
    let mut id = std::collections::HashMap::new();
    for (u, v) in &edges {
        let next = id.len();
        id.insert((*u, *v), next);
        id.insert((*v, *u), next + 1);
    }
    let mut parent: Vec<usize> = (0..id.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let union = |p: &mut [usize], a: usize, b: usize| {
        let (ra, rb) = (find(p, a), find(p, b));
        if ra != rb {
            p[ra] = rb;
        }
    };
    for a in 0..n {
        let nb: Vec<usize> = g.neighbors(a).iter().collect();
        for (x, &b) in nb.iter().enumerate() {
            for &c in &nb[x + 1..] {
                if !g.has_edge(b, c) {
                    // a→b forces a→c, and b→a forces c→a
                    union(&mut parent, id[&(a, b)], id[&(a, c)]);
                    union(&mut parent, id[&(b, a)], id[&(c, a)]);
                }
            }
        }
    }
    edges
        .iter()
        .all(|&(u, v)| find(&mut parent, id[&(u, v)]) != find(&mut parent, id[&(v, u)]))
}

pub fn is_co_comparability(g: &Graph) -> bool {
    is_comparability(&g.complement())
}

pub fn is_permutation(g: &Graph) -> bool {
    is_comparability(g) && is_co_comparability(g)
}

/// Block graphs: chordal and diamond-free.
pub fn is_block_graph(g: &Graph) -> bool {
    static DIAMOND: OnceLock<Graph> = OnceLock::new();
    is_chordal(g) && is_h_free(g, DIAMOND.get_or_init(|| named("diamond").expect("fixed name")))
}

/// `{2K2, C4, P4}`-free.
pub fn is_threshold(g: &Graph) -> bool {
    static F: OnceLock<PatternFamily> = OnceLock::new();
    is_family_free(g, family(&F, &["2k2", "c4", "p4"]))
}

/// Chordal and `{claw, net, sun}`-free.
pub fn is_proper_interval(g: &Graph) -> bool {
    static F: OnceLock<PatternFamily> = OnceLock::new();
    is_chordal(g) && is_family_free(g, family(&F, &["claw", "net", "sun"]))
}

/// `{K_{1,p}, complement of K_{1,q}}`-free.
pub fn is_star_costar_free(g: &Graph, p: usize, q: usize) -> bool {
    is_h_free(g, &complete_bipartite(1, p)) && is_h_free(g, &complete_bipartite(1, q).complement())
}

fn cover_edges(
    g: &Graph,
    uncovered: &mut Vec<Vec<bool>>,
    uses: &mut Vec<u8>,
) -> bool {
    let n = g.n();
    let Some((u, v)) = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .find(|&(u, v)| uncovered[u][v])
    else {
        return true;
    };
    if uses[u] >= 2 || uses[v] >= 2 {
        return false;
    }
    // candidates to extend the clique {u, v}
    let cand: Vec<usize> = (0..n)
        .filter(|&w| w != u && w != v && uncovered[u.min(w)][u.max(w)] && uncovered[v.min(w)][v.max(w)] && uses[w] < 2)
        .collect();
    let c = cand.len();
    for mask in 0u32..(1 << c) {
        let extra: Vec<usize> = (0..c).filter(|&i| mask >> i & 1 == 1).map(|i| cand[i]).collect();
        let ok = extra.iter().enumerate().all(|(i, &a)| {
            extra[i + 1..]
                .iter()
                .all(|&b| uncovered[a.min(b)][a.max(b)])
        });
        if !ok {
            continue;
        }
        let mut clique = vec![u, v];
        clique.extend(&extra);
        for (i, &a) in clique.iter().enumerate() {
            uses[a] += 1;
            for &b in &clique[i + 1..] {
                uncovered[a.min(b)][a.max(b)] = false;
            }
        }
        if cover_edges(g, uncovered, uses) {
            return true;
        }
        for (i, &a) in clique.iter().enumerate() {
            uses[a] -= 1;
            for &b in &clique[i + 1..] {
                uncovered[a.min(b)][a.max(b)] = true;
            }
        }
    }
    false
}

/// Krausz's characterisation: the edges split into cliques with every
/// vertex in at most two of them.
pub fn is_line_graph(g: &Graph) -> bool {
    let n = g.n();
    let mut uncovered = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        uncovered[u][v] = true;
    }
    cover_edges(g, &mut uncovered, &mut vec![0; n])
}

/// No hole of length four or more.
pub fn has_no_hole(g: &Graph) -> bool {
    !has_hole_between(g, 4, g.n(), false)
}

/// `C_k`-free for every listed `k`.
pub fn is_cycle_free(g: &Graph, lengths: &[usize]) -> bool {
    lengths
        .iter()
        .all(|&k| k > g.n() || is_h_free(g, &cycle(k)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::all_graphs;

    fn g(name: &str) -> Graph {
        named(name).unwrap()
    }

    fn brute_split_count(g: &Graph) -> usize {
        let n = g.n();
        (0u64..1 << n)
            .filter(|&m| {
                let k = VertexSet::from_mask(n, m);
                g.is_clique(&k) && g.is_independent(&k.complement())
            })
            .count()
    }

    #[test]
    fn split_examples() {
        assert_eq!(split_partitions(&Graph::new(1)).len(), 2);
        assert!(split_partitions(&cycle(4)).is_empty());
        let paw = g("paw");
        let parts = split_partitions(&paw);
        assert!(parts.iter().any(|p| p.k.to_vec() == vec![0, 1, 2] && p.i.to_vec() == vec![3]));
    }

    #[test]
    fn split_partitions_are_exhaustive() {
        for n in 0..=7 {
            for h in all_graphs(n).unwrap() {
                let parts = split_partitions(&h);
                assert_eq!(parts.len(), brute_split_count(&h), "{h:?}");
                assert!(parts.iter().all(|p| p.is_valid(&h)));
                assert_eq!(is_split(&h), is_family_free(&h, &PatternFamily::from_names(&["2k2", "c4", "c5"]).unwrap()));
            }
        }
    }

    #[test]
    fn pseudo_split_is_2k2_c4_free() {
        let f = PatternFamily::from_names(&["2k2", "c4"]).unwrap();
        for n in 0..=7 {
            for h in all_graphs(n).unwrap() {
                assert_eq!(is_pseudo_split(&h), is_family_free(&h, &f), "{h:?}");
            }
        }
        let p = pseudo_split_partition(&cycle(5)).unwrap();
        assert_eq!(p.h.len(), 5);
    }

    #[test]
    fn class_examples() {
        assert!(is_comparability(&g("p4")));
        assert!(!is_comparability(&cycle(5)));
        assert!(is_comparability(&cycle(6)));
        assert!(!is_co_comparability(&cycle(6)));
        assert!(is_line_graph(&g("diamond")));
        assert!(!is_line_graph(&g("claw")));
        assert!(is_line_graph(&g("k4")));
        assert!(!is_line_graph(&g("w5")));
        assert!(is_block_graph(&g("paw")));
        assert!(!is_block_graph(&g("diamond")));
        assert!(is_complete_bipartite(&g("k3_4")));
        assert!(!is_complete_bipartite(&g("p4")));
        assert!(is_bipartite_chain(&g("k2_3")));
        assert!(is_bipartite_chain(&g("p4+k1")));
        assert!(!is_meyniel(&g("house")));
        assert!(is_meyniel(&g("gem")));
        assert!(is_weakly_chordal(&cycle(4)));
        assert!(!is_weakly_chordal(&g("co-c6")));
        assert!(!is_distance_hereditary(&g("gem")));
        assert!(is_threshold(&g("paw")));
        assert!(!is_threshold(&g("p4")));
        assert!(is_star_costar_free(&Graph::new(3), 2, 2));
        assert!(!is_star_costar_free(&g("p3"), 2, 2));
    }

    #[test]
    fn line_graphs_of_small_roots() {
        // every line graph of a graph on at most 5 vertices is accepted
        for root in (0..=5).flat_map(|n| all_graphs(n).unwrap()) {
            let e = root.edges();
            let mut lg = Graph::new(e.len());
            for i in 0..e.len() {
                for j in i + 1..e.len() {
                    let (a, b) = e[i];
                    let (c, d) = e[j];
                    if a == c || a == d || b == c || b == d {
                        lg.set_edge(i, j, true);
                    }
                }
            }
            if lg.n() <= 10 {
                assert!(is_line_graph(&lg), "{root:?}");
            }
        }
    }

    #[test]
    fn comparability_matches_orientation_search() {
        fn brute(g: &Graph) -> bool {
            let e = g.edges();
            (0u32..1 << e.len()).any(|m| {
                let arc = |u: usize, v: usize| {
                    e.iter().position(|&x| x == (u.min(v), u.max(v))).map(|i| {
                        let fwd = m >> i & 1 == 0;
                        if u < v { fwd } else { !fwd }
                    })
                };
                (0..g.n()).all(|a| {
                    (0..g.n()).all(|b| {
                        (0..g.n()).all(|c| match (arc(a, b), arc(b, c)) {
                            (Some(true), Some(true)) => arc(a, c) == Some(true),
                            _ => true,
                        })
                    })
                })
            })
        }
        for n in 0..=6 {
            for h in all_graphs(n).unwrap() {
                if h.edge_count() <= 11 {
                    assert_eq!(is_comparability(&h), brute(&h), "{h:?}");
                }
            }
        }
    }
}

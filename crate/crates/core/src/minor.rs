//! Exhaustive minor testing for very small graphs.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::patterns::complete_bipartite;

/// Largest host order accepted by [`has_minor`].
pub const MINOR_MAX: usize = 8;

struct Models<'a> {
    g: &'a Graph,
    h: &'a Graph,
    order: Vec<usize>,
    label: Vec<usize>,
    /// whether vertices may stay outside every branch set
    spare: bool,
}

impl Models<'_> {
    fn complete(&self) -> bool {
        let k = self.h.n();
        let n = self.g.n();
        let mut sets = vec![VertexSet::empty(n); k];
        for v in 0..n {
            if self.label[v] < k {
                sets[self.label[v]].insert(v);
            }
        }
        if sets.iter().any(|s| s.is_empty() || self.g.components_within(s).len() != 1) {
            return false;
        }
        self.h.edges().iter().all(|&(a, b)| {
            sets[a]
                .iter()
                .any(|v| !self.g.neighbors(v).is_disjoint(&sets[b]))
        })
    }

    fn run(&mut self, i: usize, used: usize) -> bool {
        let k = self.h.n();
        if i == self.order.len() {
            return used == k && self.complete();
        }
        let left = self.order.len() - i;
        let v = self.order[i];
        let top = if self.spare { k + 1 } else { k };
        for l in 0..top {
            let fresh = l < k && !self.order[..i].iter().any(|&w| self.label[w] == l);
            let used_next = used + fresh as usize;
            if k - used_next.min(k) > left - 1 {
                continue;
            }
            self.label[v] = l;
            if self.run(i + 1, used_next) {
                return true;
            }
        }
        false
    }
}

/// Whether `h` is a minor of `g`, by trying every assignment of host
/// vertices to branch sets.
pub fn has_minor(g: &Graph, h: &Graph) -> Result<bool> {
    if g.n() > MINOR_MAX {
        return Err(Error::TooLarge {
            n: g.n(),
            max: MINOR_MAX,
        });
    }
    if h.n() > g.n() || h.edge_count() > g.edge_count() {
        return Ok(false);
    }
    if h.n() == 0 {
        return Ok(true);
    }
    // A connected pattern lies inside one component, and there every
    // spare vertex can be merged into a neighbouring branch set.
    if h.is_connected() {
        for comp in g.components() {
            let sub = g.induced(&comp);
            if sub.n() < h.n() {
                continue;
            }
            let mut m = Models {
                g: &sub,
                h,
                order: (0..sub.n()).collect(),
                label: vec![0; sub.n()],
                spare: false,
            };
            if m.run(0, 0) {
                return Ok(true);
            }
        }
        return Ok(false);
    }
    let mut m = Models {
        g,
        h,
        order: (0..g.n()).collect(),
        label: vec![0; g.n()],
        spare: true,
    };
    Ok(m.run(0, 0))
}

/// Outerplanar: no `K4` and no `K2,3` minor.
pub fn is_outerplanar(g: &Graph) -> Result<bool> {
    let n = g.n();
    if n <= 3 {
        return Ok(true);
    }
    if g.edge_count() > 2 * n - 3 {
        return Ok(false);
    }
    Ok(!has_minor(g, &Graph::complete(4))? && !has_minor(g, &complete_bipartite(2, 3))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{cycle, named, path};
    use crate::canon::{all_graphs, canonical_form, CanonicalForm};
    use std::collections::BTreeSet;

    #[test]
    fn examples() {
        assert!(has_minor(&Graph::complete(4), &Graph::complete(4)).unwrap());
        assert!(has_minor(&cycle(5), &Graph::complete(3)).unwrap());
        let tree = Graph::from_edges(6, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)]).unwrap();
        assert!(!has_minor(&tree, &Graph::complete(3)).unwrap());
        assert!(has_minor(&named("w4").unwrap(), &Graph::complete(4)).unwrap());
        assert!(!has_minor(&cycle(6), &Graph::complete(4)).unwrap());
        assert!(has_minor(&named("2k2").unwrap(), &named("k2+k1").unwrap()).unwrap());
        assert!(has_minor(&path(4), &named("2k2").unwrap()).unwrap());
        assert!(!has_minor(&path(3), &named("2k2").unwrap()).unwrap());
        assert!(has_minor(&path(5), &named("2k2").unwrap()).unwrap());
        assert!(has_minor(&Graph::new(9), &Graph::new(0)).is_err());
    }

    #[test]
    fn outerplanar_small() {
        assert!(is_outerplanar(&cycle(5)).unwrap());
        assert!(is_outerplanar(&named("gem").unwrap()).unwrap());
        assert!(!is_outerplanar(&Graph::complete(4)).unwrap());
        assert!(!is_outerplanar(&named("k2_3").unwrap()).unwrap());
        assert!(!is_outerplanar(&named("w5").unwrap()).unwrap());
        assert!(is_outerplanar(&named("sun").unwrap()).unwrap());
    }

    /// Every minor of `g` up to isomorphism, by closing under single
    /// deletions and contractions.
    fn minor_closure(g: &Graph) -> BTreeSet<CanonicalForm> {
        let mut seen = BTreeSet::new();
        let mut stack = vec![g.clone()];
        while let Some(x) = stack.pop() {
            if !seen.insert(canonical_form(&x).unwrap()) {
                continue;
            }
            let n = x.n();
            for v in 0..n {
                let keep: Vec<usize> = (0..n).filter(|&w| w != v).collect();
                stack.push(x.induced_by(&keep));
            }
            for (u, v) in x.edges() {
                let mut del = x.clone();
                del.set_edge(u, v, false);
                stack.push(del);
                let mut con = x.clone();
                for w in x.neighbors(v).iter() {
                    if w != u {
                        con.set_edge(u, w, true);
                    }
                }
                let keep: Vec<usize> = (0..n).filter(|&w| w != v).collect();
                stack.push(con.induced_by(&keep));
            }
        }
        seen
    }

    #[test]
    fn agrees_with_deletion_contraction_closure() {
        let pats: Vec<Graph> = ["k4", "k2_3", "c4", "2k2", "p3", "k3+k1", "claw"]
            .iter()
            .map(|s| named(s).unwrap())
            .collect();
        for n in 0..=6 {
            for g in all_graphs(n).unwrap() {
                let closure = minor_closure(&g);
                for h in &pats {
                    let expect = closure.contains(&canonical_form(h).unwrap());
                    assert_eq!(has_minor(&g, h).unwrap(), expect, "{g:?} {h:?}");
                }
            }
        }
    }
}

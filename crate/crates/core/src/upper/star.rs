use super::check_size;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::recognize::is_star_costar_free;

/// `G[s]` has no clique on `p + 1` vertices and `G[t]` no independent set
/// on `q + 1` vertices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PqSplitPartition {
    pub s: VertexSet,
    pub t: VertexSet,
    pub p: usize,
    pub q: usize,
}

impl PqSplitPartition {
    pub fn is_valid(&self, g: &Graph) -> bool {
        self.s.is_disjoint(&self.t)
            && self.s.union(&self.t) == g.vertices()
            && !has_clique(g, &self.s, self.p + 1)
            && !has_clique(&g.complement(), &self.t, self.q + 1)
    }
}

/// Whether `G[within]` has a clique on `k` vertices.
fn has_clique(g: &Graph, within: &VertexSet, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if within.len() < k {
        return false;
    }
    let mut rest = within.clone();
    while let Some(v) = rest.first() {
        rest.remove(v);
        if has_clique(g, &rest.intersection(&g.neighbors(v)), k - 1) {
            return true;
        }
        if rest.len() < k {
            break;
        }
    }
    false
}

struct Enumerator<'a> {
    g: &'a Graph,
    co: Graph,
    p: usize,
    q: usize,
    s: VertexSet,
    t: VertexSet,
    out: Vec<PqSplitPartition>,
}

impl Enumerator<'_> {
    fn run(&mut self, v: usize) {
        if v == self.g.n() {
            self.out.push(PqSplitPartition {
                s: self.s.clone(),
                t: self.t.clone(),
                p: self.p,
                q: self.q,
            });
            return;
        }
        // v joins s unless it would close a clique on p + 1 vertices
        if !has_clique(self.g, &self.s.intersection(&self.g.neighbors(v)), self.p) {
            self.s.insert(v);
            self.run(v + 1);
            self.s.remove(v);
        }
        if !has_clique(&self.co, &self.t.intersection(&self.co.neighbors(v)), self.q) {
            self.t.insert(v);
            self.run(v + 1);
            self.t.remove(v);
        }
    }
}

/// Every `(p, q)`-split partition of `g`, sorted.
pub fn pq_split_partitions(g: &Graph, p: usize, q: usize) -> Result<Vec<PqSplitPartition>> {
    if p == 0 || q == 0 {
        return Err(Error::InvalidParameter("p and q must be positive".into()));
    }
    check_size(g)?;
    let n = g.n();
    let mut e = Enumerator {
        g,
        co: g.complement(),
        p,
        q,
        s: VertexSet::empty(n),
        t: VertexSet::empty(n),
        out: Vec::new(),
    };
    e.run(0);
    let mut out = e.out;
    out.sort();
    Ok(out)
}

/// Partitions of `G[sub]` lifted back to the vertices of `g`.
fn pq_within(g: &Graph, sub: &VertexSet, p: usize, q: usize) -> Result<Vec<(VertexSet, VertexSet)>> {
    Ok(pq_split_partitions(&g.induced(sub), p, q)?
        .into_iter()
        .map(|x| (VertexSet::lift_from(&x.s, sub), VertexSet::lift_from(&x.t, sub)))
        .collect())
}

/// Some `A` with `S(g, A)` free of `K_{1,p}` and of the complement of
/// `K_{1,q}`.
pub fn upper_star_costar(g: &Graph, p: usize, q: usize) -> Result<Option<VertexSet>> {
    if p < 2 || q < 2 {
        return Err(Error::InvalidParameter("p and q must be at least 2".into()));
    }
    check_size(g)?;
    if is_star_costar_free(g, p, q) {
        return Ok(Some(VertexSet::empty(g.n())));
    }
    let u = 0;
    let near = g.closed_neighbors(u);
    let inner = pq_within(g, &near, q - 1, p - 1)?;
    let outer = pq_within(g, &near.complement(), q - 1, p - 1)?;
    for (_, t1) in &inner {
        for (s2, _) in &outer {
            let a = t1.union(s2);
            if is_star_costar_free(&g.switch(&a), p, q) {
                return Ok(Some(a.normalized()));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::all_graphs;
    use crate::oracle::oracle_upper;
    use crate::patterns::named;
    use crate::recognize::split_partitions;

    fn brute(g: &Graph, p: usize, q: usize) -> Vec<PqSplitPartition> {
        let n = g.n();
        let mut out: Vec<PqSplitPartition> = (0u64..1 << n)
            .map(|m| {
                let s = VertexSet::from_mask(n, m);
                PqSplitPartition { t: s.complement(), s, p, q }
            })
            .filter(|x| x.is_valid(g))
            .collect();
        out.sort();
        out
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for n in 0..=6 {
            for g in all_graphs(n).unwrap() {
                for (p, q) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
                    assert_eq!(pq_split_partitions(&g, p, q).unwrap(), brute(&g, p, q));
                }
                // (1,1) with the roles read as independent s and clique t
                let ones = pq_split_partitions(&g, 1, 1).unwrap().len();
                assert_eq!(ones, split_partitions(&g).len());
            }
        }
    }

    #[test]
    fn examples() {
        let p3 = named("p3").unwrap();
        let a = upper_star_costar(&p3, 2, 2).unwrap().unwrap();
        assert_eq!(p3.switch(&a).edge_count(), 0);
        assert!(pq_split_partitions(&named("c5").unwrap(), 1, 1).unwrap().is_empty());
        assert!(upper_star_costar(&p3, 1, 2).is_err());
    }

    #[test]
    fn matches_oracle_up_to_seven() {
        for n in 1..=7 {
            for g in all_graphs(n).unwrap() {
                for (p, q) in [(2, 2), (3, 2), (2, 3)] {
                    assert_eq!(
                        upper_star_costar(&g, p, q).unwrap().is_some(),
                        oracle_upper(&g, |h| is_star_costar_free(h, p, q)).unwrap().is_some(),
                        "{g:?} {p} {q}"
                    );
                }
            }
        }
    }
}

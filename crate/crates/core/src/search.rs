//! Induced-subgraph search.
//!
//! [`find_embedding`] is a general backtracking matcher for small
//! patterns. [`find_induced_path`] and [`find_induced_cycle`] are
//! specialised searches that grow a chordless path and forbid chords by
//! accumulating closed neighbourhoods; they take an expansion budget since
//! long induced paths are hard to find in general.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Default number of search-tree expansions before giving up.
pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

type Bits = Vec<u64>;

fn bits_empty(words: usize) -> Bits {
    vec![0; words]
}

fn set_bit(b: &mut [u64], v: usize) {
    b[v / 64] |= 1 << (v % 64);
}

fn count(b: &[u64]) -> usize {
    b.iter().map(|w| w.count_ones() as usize).sum()
}

fn for_each_bit(b: &[u64], mut f: impl FnMut(usize) -> bool) -> bool {
    for (i, &w) in b.iter().enumerate() {
        let mut w = w;
        while w != 0 {
            let v = i * 64 + w.trailing_zeros() as usize;
            w &= w - 1;
            if f(v) {
                return true;
            }
        }
    }
    false
}

struct Matcher<'a> {
    g: &'a Graph,
    h: &'a Graph,
    order: Vec<usize>,
    image: Vec<usize>,
    used: Bits,
    gdeg: Vec<usize>,
}

impl Matcher<'_> {
    fn run(&mut self, k: usize) -> bool {
        if k == self.order.len() {
            return true;
        }
        let u = self.order[k];
        let n = self.g.n();
        let words = self.used.len();
        let mut cand: Bits = VertexSet::full(n).words().to_vec();
        for (c, w) in cand.iter_mut().zip(&self.used) {
            *c &= !w;
        }
        for j in 0..k {
            let hu = self.order[j];
            let row = self.g.row(self.image[hu]);
            let adjacent = self.h.has_edge(u, hu);
            for i in 0..words {
                cand[i] &= if adjacent { row[i] } else { !row[i] };
            }
        }
        let hdeg = self.h.degree(u);
        let hco = self.h.n() - 1 - hdeg;
        let gn = n;
        let mut found = false;
        for_each_bit(&cand, |v| {
            let d = self.gdeg[v];
            if d < hdeg || gn - 1 - d < hco {
                return false;
            }
            self.image[u] = v;
            set_bit(&mut self.used, v);
            if self.run(k + 1) {
                found = true;
                return true;
            }
            self.used[v / 64] &= !(1 << (v % 64));
            false
        });
        found
    }
}

/// An induced copy of `h` in `g`: `result[i]` is the image of vertex `i`
/// of `h`. `None` when `g` is `h`-free.
pub fn find_embedding(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if h.n() > g.n() {
        return None;
    }
    if h.n() == 0 {
        return Some(Vec::new());
    }
    // Place pattern vertices so each one after the first is attached to an
    // earlier one when possible, highest degree first.
    let mut order = Vec::with_capacity(h.n());
    let mut placed = vec![false; h.n()];
    while order.len() < h.n() {
        let next = (0..h.n())
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let links = order.iter().filter(|&&w| h.has_edge(v, w)).count();
                (links, h.degree(v), std::cmp::Reverse(v))
            })
            .expect("unplaced vertex remains");
        placed[next] = true;
        order.push(next);
    }
    let mut m = Matcher {
        g,
        h,
        order,
        image: vec![usize::MAX; h.n()],
        used: bits_empty(g.vertices().words().len()),
        gdeg: (0..g.n()).map(|v| g.degree(v)).collect(),
    };
    if m.run(0) {
        Some(m.image)
    } else {
        None
    }
}

/// Vertex set of some induced copy of `h` in `g`.
pub fn contains_induced(g: &Graph, h: &Graph) -> Option<VertexSet> {
    find_embedding(g, h)
        .map(|img| VertexSet::from_indices(g.n(), img).expect("embedding stays in range"))
}

pub fn is_h_free(g: &Graph, h: &Graph) -> bool {
    find_embedding(g, h).is_none()
}

struct PathSearch {
    n: usize,
    rows: Vec<Bits>,
    closed: Vec<Bits>,
    k: usize,
    budget: u64,
    spent: u64,
    path: Vec<usize>,
}

impl PathSearch {
    /// `g` relabelled by ascending degree so that bit order is the
    /// preferred extension order; `order[i]` is the original vertex.
    fn new(g: &Graph, k: usize, budget: u64) -> (Self, Vec<usize>) {
        let mut order: Vec<usize> = (0..g.n()).collect();
        order.sort_by_key(|&v| (g.degree(v), v));
        let h = g.permuted(&order);
        let n = h.n();
        let rows: Vec<Bits> = (0..n).map(|v| h.row(v).to_vec()).collect();
        let closed = (0..n)
            .map(|v| {
                let mut r = rows[v].clone();
                set_bit(&mut r, v);
                r
            })
            .collect();
        let search = PathSearch {
            n,
            rows,
            closed,
            k,
            budget,
            spent: 0,
            path: Vec::with_capacity(k),
        };
        (search, order)
    }

    fn words(&self) -> usize {
        self.n.div_ceil(64)
    }

    fn tick(&mut self) -> Result<()> {
        self.spent += 1;
        if self.spent > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        Ok(())
    }

    /// Whether at least `need` vertices of `region` are reachable from
    /// `from` through `region`.
    fn reaches(&self, from: usize, region: &[u64], need: usize) -> bool {
        if need == 0 {
            return true;
        }
        let mut seen = bits_empty(region.len());
        let mut frontier: Bits = self.rows[from].iter().zip(region).map(|(r, a)| r & a).collect();
        let mut total = 0;
        loop {
            let c = count(&frontier);
            if c == 0 {
                return false;
            }
            total += c;
            if total >= need {
                return true;
            }
            for (s, f) in seen.iter_mut().zip(&frontier) {
                *s |= f;
            }
            let mut next = bits_empty(region.len());
            for_each_bit(&frontier, |v| {
                for (x, r) in next.iter_mut().zip(&self.rows[v]) {
                    *x |= r;
                }
                false
            });
            for i in 0..next.len() {
                next[i] &= region[i] & !seen[i];
            }
            frontier = next;
        }
    }

    fn descend(
        &mut self,
        cand: &Bits,
        step: impl Fn(&mut Self) -> Result<bool>,
    ) -> Result<bool> {
        let mut result = Ok(false);
        for_each_bit(cand, |v| {
            self.path.push(v);
            match step(self) {
                Ok(false) => {
                    self.path.pop();
                    false
                }
                other => {
                    result = other;
                    true
                }
            }
        });
        result
    }

    /// `forbidden` is the union of closed neighbourhoods of every path
    /// vertex except the last.
    fn extend_path(&mut self, forbidden: &Bits) -> Result<bool> {
        self.tick()?;
        let len = self.path.len();
        if len == self.k {
            return Ok(true);
        }
        let last = self.path[len - 1];
        let mut region = VertexSet::full(self.n).words().to_vec();
        for i in 0..region.len() {
            region[i] &= !forbidden[i];
        }
        region[last / 64] &= !(1 << (last % 64));
        if !self.reaches(last, &region, self.k - len) {
            return Ok(false);
        }
        let cand: Bits = self.rows[last].iter().zip(forbidden).map(|(r, f)| r & !f).collect();
        let next: Bits = forbidden.iter().zip(&self.closed[last]).map(|(f, c)| f | c).collect();
        self.descend(&cand, |s| s.extend_path(&next))
    }

    /// Cycle search with `path[0]` the smallest vertex. `inner` is the
    /// union of closed neighbourhoods of `path[1..len-1]`, `lower` the
    /// vertices above `path[0]`.
    fn extend_cycle(&mut self, inner: &Bits, lower: &Bits) -> Result<bool> {
        self.tick()?;
        let len = self.path.len();
        let remaining = self.k - len;
        if remaining == 0 {
            return Ok(true);
        }
        let s = self.path[0];
        let last = self.path[len - 1];
        let mut cand: Bits = (0..self.words())
            .map(|i| self.rows[last][i] & lower[i] & !inner[i])
            .collect();
        if remaining == 1 {
            let p1 = self.path[1];
            for (c, r) in cand.iter_mut().zip(&self.rows[s]) {
                *c &= r;
            }
            if let Some(v) = first_above(&cand, p1) {
                self.path.push(v);
                return Ok(true);
            }
            return Ok(false);
        }
        let mut region: Bits = (0..self.words()).map(|i| lower[i] & !inner[i]).collect();
        region[last / 64] &= !(1 << (last % 64));
        if !self.reaches(last, &region, remaining) {
            return Ok(false);
        }
        if len >= 2 {
            for (c, r) in cand.iter_mut().zip(&self.closed[s]) {
                *c &= !r;
            }
        }
        let next: Bits = if len >= 2 {
            inner.iter().zip(&self.closed[last]).map(|(f, c)| f | c).collect()
        } else {
            inner.clone()
        };
        self.descend(&cand, |st| st.extend_cycle(&next, lower))
    }
}

fn first_above(b: &[u64], floor: usize) -> Option<usize> {
    let mut found = None;
    for_each_bit(b, |v| {
        if v > floor {
            found = Some(v);
            return true;
        }
        false
    });
    found
}

/// An induced path on `k` vertices, listed in path order.
pub fn find_induced_path(g: &Graph, k: usize) -> Result<Option<Vec<usize>>> {
    find_induced_path_with_budget(g, k, DEFAULT_BUDGET)
}

pub fn find_induced_path_with_budget(
    g: &Graph,
    k: usize,
    budget: u64,
) -> Result<Option<Vec<usize>>> {
    if k == 0 {
        return Ok(Some(Vec::new()));
    }
    if k > g.n() {
        return Ok(None);
    }
    let (mut s, order) = PathSearch::new(g, k, budget);
    let empty = bits_empty(s.words());
    for start in 0..s.n {
        s.path.clear();
        s.path.push(start);
        if s.extend_path(&empty)? {
            return Ok(Some(s.path.iter().map(|&v| order[v]).collect()));
        }
    }
    Ok(None)
}

/// An induced cycle on `k >= 3` vertices, listed in cyclic order.
pub fn find_induced_cycle(g: &Graph, k: usize) -> Result<Option<Vec<usize>>> {
    find_induced_cycle_with_budget(g, k, DEFAULT_BUDGET)
}

pub fn find_induced_cycle_with_budget(
    g: &Graph,
    k: usize,
    budget: u64,
) -> Result<Option<Vec<usize>>> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!("cycle length {k} is below 3")));
    }
    if k > g.n() {
        return Ok(None);
    }
    let (mut s, order) = PathSearch::new(g, k, budget);
    let empty = bits_empty(s.words());
    for start in 0..s.n {
        let mut lower = bits_empty(s.words());
        for v in start + 1..s.n {
            set_bit(&mut lower, v);
        }
        s.path.clear();
        s.path.push(start);
        if s.extend_cycle(&empty, &lower)? {
            return Ok(Some(s.path.iter().map(|&v| order[v]).collect()));
        }
    }
    Ok(None)
}

/// Whether `seq` induces exactly a path, or with `cycle` a cycle, in
/// the listed order.
pub fn induces_sequence(g: &Graph, seq: &[usize], cycle: bool) -> bool {
    let k = seq.len();
    let mut distinct = seq.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != k || seq.iter().any(|&v| v >= g.n()) {
        return false;
    }
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = j == i + 1 || (cycle && k >= 3 && i == 0 && j == k - 1);
            if g.has_edge(seq[i], seq[j]) != consecutive {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{cycle, named, path};

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        (0u32..1 << n)
            .filter(|m| m.count_ones() as usize == k)
            .map(|m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
            .collect()
    }

    fn naive_contains(g: &Graph, h: &Graph) -> bool {
        subsets(g.n(), h.n())
            .iter()
            .any(|s| crate::canon::is_isomorphic(&g.induced_by(s), h).unwrap())
    }

    #[test]
    fn examples() {
        assert!(contains_induced(&cycle(5), &path(4)).is_some());
        assert!(contains_induced(&path(4), &named("2k2").unwrap()).is_none());
        let w = contains_induced(&cycle(7), &named("p4+k1").unwrap()).unwrap();
        assert_eq!(w.len(), 5);
        assert_eq!(find_induced_cycle(&cycle(10), 10).unwrap().unwrap().len(), 10);
        assert_eq!(find_induced_path(&Graph::complete(5), 4).unwrap(), None);
    }

    #[test]
    fn embedding_is_induced_copy() {
        let g = named("domino").unwrap();
        let h = named("c4").unwrap();
        let img = find_embedding(&g, &h).unwrap();
        for u in 0..4 {
            for v in u + 1..4 {
                assert_eq!(g.has_edge(img[u], img[v]), h.has_edge(u, v));
            }
        }
    }

    #[test]
    fn matcher_agrees_with_naive_on_small_graphs() {
        let pats = ["p4", "c4", "2k2", "paw", "claw", "k3+k1", "p3+k1"];
        for g in crate::canon::all_graphs(6).unwrap() {
            for p in pats {
                let h = named(p).unwrap();
                assert_eq!(contains_induced(&g, &h).is_some(), naive_contains(&g, &h), "{g:?} {p}");
            }
        }
    }

    #[test]
    fn path_and_cycle_search_agree_with_subset_enumeration() {
        for g in crate::canon::all_graphs(7).unwrap() {
            for k in 2..=6 {
                let expect = naive_contains(&g, &path(k));
                let got = find_induced_path(&g, k).unwrap();
                assert_eq!(got.is_some(), expect, "{g:?} P{k}");
                if let Some(p) = got {
                    assert!(induces_sequence(&g, &p, false));
                }
            }
            for k in 3..=7 {
                let expect = naive_contains(&g, &cycle(k));
                let got = find_induced_cycle(&g, k).unwrap();
                assert_eq!(got.is_some(), expect, "{g:?} C{k}");
                if let Some(c) = got {
                    assert!(induces_sequence(&g, &c, true));
                }
            }
        }
    }

    #[test]
    fn budget_is_reported() {
        let g = Graph::complete(12);
        assert_eq!(
            find_induced_path_with_budget(&g, 5, 3),
            Err(Error::BudgetExceeded(3))
        );
    }
}

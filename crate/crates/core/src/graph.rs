//! Simple undirected graphs stored as fixed-width bit rows, and the
//! switching operation.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest vertex count a [`Graph`] may have.
pub const MAX_VERTICES: usize = 4096;

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

#[inline]
fn tail_mask(n: usize, word: usize) -> u64 {
    let lo = word * 64;
    if n >= lo + 64 {
        u64::MAX
    } else if n <= lo {
        0
    } else {
        (1u64 << (n - lo)) - 1
    }
}

/// A subset of `{0, .., n-1}` bound to a vertex count `n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    bits: Vec<u64>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            n,
            bits: vec![0; words_for(n)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for (w, word) in s.bits.iter_mut().enumerate() {
            *word = tail_mask(n, w);
        }
        s
    }

    pub fn singleton(n: usize, v: usize) -> Result<Self> {
        Self::from_indices(n, [v])
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(n: usize, items: I) -> Result<Self> {
        let mut s = Self::empty(n);
        for v in items {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            s.bits[v / 64] |= 1 << (v % 64);
        }
        Ok(s)
    }

    /// Builds a set from the low `n` bits of `mask` (`n <= 64`).
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n <= 64, "from_mask needs n <= 64");
        let mut s = Self::empty(n);
        s.bits[0] = mask & tail_mask(n, 0);
        s
    }

    /// Low 64 bits of the set.
    pub fn mask(&self) -> u64 {
        self.bits[0]
    }

    pub(crate) fn from_words(n: usize, bits: Vec<u64>) -> Self {
        debug_assert_eq!(bits.len(), words_for(n));
        VertexSet { n, bits }
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.bits
    }

    /// Vertex count of the ground set.
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.bits[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} out of range");
        self.bits[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.n {
            self.bits[v / 64] &= !(1 << (v % 64));
        }
    }

    pub fn first(&self) -> Option<usize> {
        self.bits
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            bits: &self.bits,
            word: 0,
            cur: self.bits[0],
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn check_same(&self, other: &VertexSet) {
        assert_eq!(self.n, other.n, "vertex sets over different ground sets");
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.check_same(other);
        let bits = self.bits.iter().zip(&other.bits).map(|(a, b)| a | b).collect();
        VertexSet { n: self.n, bits }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.check_same(other);
        let bits = self.bits.iter().zip(&other.bits).map(|(a, b)| a & b).collect();
        VertexSet { n: self.n, bits }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.check_same(other);
        let bits = self.bits.iter().zip(&other.bits).map(|(a, b)| a & !b).collect();
        VertexSet { n: self.n, bits }
    }

    pub fn symmetric_difference(&self, other: &VertexSet) -> VertexSet {
        self.check_same(other);
        let bits = self.bits.iter().zip(&other.bits).map(|(a, b)| a ^ b).collect();
        VertexSet { n: self.n, bits }
    }

    pub fn complement(&self) -> VertexSet {
        let bits = self
            .bits
            .iter()
            .enumerate()
            .map(|(w, b)| !b & tail_mask(self.n, w))
            .collect();
        VertexSet { n: self.n, bits }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.check_same(other);
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.check_same(other);
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & b == 0)
    }

    /// Of `self` and its complement, the one that avoids vertex 0.
    ///
    /// Switching a set and switching its complement give the same graph, so
    /// this picks a canonical representative of the pair.
    pub fn normalized(&self) -> VertexSet {
        if self.contains(0) {
            self.complement()
        } else {
            self.clone()
        }
    }

    /// Re-expresses `self ∩ sub` in the local numbering of `sub`
    /// (the i-th smallest member of `sub` becomes vertex i).
    pub fn restrict_to(&self, sub: &VertexSet) -> VertexSet {
        self.check_same(sub);
        let members = sub.to_vec();
        let mut out = VertexSet::empty(members.len());
        for (i, &v) in members.iter().enumerate() {
            if self.contains(v) {
                out.insert(i);
            }
        }
        out
    }

    /// Maps a set over the local numbering of `sub` back to the ground set.
    pub fn lift_from(local: &VertexSet, sub: &VertexSet) -> VertexSet {
        let members = sub.to_vec();
        assert_eq!(local.n, members.len(), "local set does not match subset size");
        let mut out = VertexSet::empty(sub.n);
        for i in local.iter() {
            out.insert(members[i]);
        }
        out
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Comma-separated ascending vertex list, e.g. `0,2,5`.
impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in self.iter() {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

pub struct Iter<'a> {
    bits: &'a [u64],
    word: usize,
    cur: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let t = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.word * 64 + t);
            }
            self.word += 1;
            if self.word >= self.bits.len() {
                return None;
            }
            self.cur = self.bits[self.word];
        }
    }
}

/// A simple undirected graph on vertices `0..n`.
///
/// Row `v` holds the open neighbourhood of `v`. Rows are symmetric and no
/// vertex is its own neighbour.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "graphs are limited to {MAX_VERTICES} vertices");
        let words = words_for(n);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    pub fn complete(n: usize) -> Self {
        Graph::new(n).complement()
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                n,
                max: MAX_VERTICES,
            });
        }
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at {u}")));
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize, on: bool) {
        debug_assert!(u != v && u < self.n && v < self.n);
        let (ru, rv) = (u * self.words + v / 64, v * self.words + u / 64);
        if on {
            self.rows[ru] |= 1 << (v % 64);
            self.rows[rv] |= 1 << (u % 64);
        } else {
            self.rows[ru] &= !(1 << (v % 64));
            self.rows[rv] &= !(1 << (u % 64));
        }
    }

    /// Makes every vertex of `a` adjacent to every vertex of `b` (`a ∩ b` must be empty).
    pub(crate) fn join(&mut self, a: &[usize], b: &[usize]) {
        for &u in a {
            for &v in b {
                self.set_edge(u, v, true);
            }
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    /// Neighbourhood of `v` as a 64-bit mask (only meaningful when `n <= 64`).
    #[inline]
    pub fn row_mask(&self, v: usize) -> u64 {
        self.rows[v * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_words(self.n, self.row(v).to_vec())
    }

    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        let mut s = self.neighbors(v);
        s.insert(v);
        s
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degree_in(&self, v: usize, set: &VertexSet) -> usize {
        self.row(v)
            .iter()
            .zip(set.words())
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.neighbors(u).iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Seidel switching of `a`: every pair with exactly one end in `a` is
    /// toggled, all other pairs are kept.
    pub fn switch(&self, a: &VertexSet) -> Graph {
        assert_eq!(a.universe(), self.n, "switching set bound to a different graph");
        let not_a = a.complement();
        let mut out = self.clone();
        for v in 0..self.n {
            let toggle = if a.contains(v) { &not_a } else { a };
            let row = &mut out.rows[v * self.words..(v + 1) * self.words];
            for (r, t) in row.iter_mut().zip(toggle.words()) {
                *r ^= t;
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let mut out = self.clone();
        for v in 0..self.n {
            let row = &mut out.rows[v * self.words..(v + 1) * self.words];
            for (w, r) in row.iter_mut().enumerate() {
                *r = !*r & tail_mask(self.n, w);
            }
            row[v / 64] &= !(1 << (v % 64));
        }
        out
    }

    /// Subgraph induced by `u`, relabelled `0..|u|` in increasing vertex order.
    pub fn induced(&self, u: &VertexSet) -> Graph {
        assert_eq!(u.universe(), self.n, "vertex set bound to a different graph");
        self.induced_by(&u.to_vec())
    }

    /// Subgraph induced by the listed vertices; vertex `i` of the result is `order[i]`.
    pub fn induced_by(&self, order: &[usize]) -> Graph {
        let mut out = Graph::new(order.len());
        for (i, &a) in order.iter().enumerate() {
            for (j, &b) in order.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    out.set_edge(i, j, true);
                }
            }
        }
        out
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut out = Graph::new(self.n + other.n);
        for (u, v) in self.edges() {
            out.set_edge(u, v, true);
        }
        for (u, v) in other.edges() {
            out.set_edge(u + self.n, v + self.n, true);
        }
        out
    }

    /// Relabels so that vertex `perm[i]` of `self` becomes vertex `i`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        self.induced_by(perm)
    }

    /// Whether every vertex of `m` has the same neighbourhood outside `m`.
    pub fn is_module(&self, m: &VertexSet) -> bool {
        let mut it = m.iter();
        let Some(first) = it.next() else {
            return true;
        };
        let outside = self.neighbors(first).difference(m);
        it.all(|v| self.neighbors(v).difference(m) == outside)
    }

    pub fn is_clique(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| self.degree_in(v, set) + 1 == set.len())
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| self.degree_in(v, set) == 0)
    }

    /// Connected components of `G[within]`, each as a set of original
    /// vertices, ordered by smallest member.
    pub fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut left = within.clone();
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let mut comp = VertexSet::empty(self.n);
            let mut stack = vec![start];
            left.remove(start);
            comp.insert(start);
            while let Some(v) = stack.pop() {
                let fresh = self.neighbors(v).intersection(&left);
                for w in fresh.iter() {
                    left.remove(w);
                    comp.insert(w);
                    stack.push(w);
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Components of the complement of `G[within]`.
    pub fn co_components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut left = within.clone();
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let mut comp = VertexSet::empty(self.n);
            let mut stack = vec![start];
            left.remove(start);
            comp.insert(start);
            while let Some(v) = stack.pop() {
                let fresh = left.difference(&self.neighbors(v));
                for w in fresh.iter() {
                    left.remove(w);
                    comp.insert(w);
                    stack.push(w);
                }
            }
            out.push(comp);
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

//! Exhaustive switching oracles.
//!
//! Every switching set `A` and its complement give the same graph, so only
//! sets avoiding vertex 0 are enumerated. Sets are visited by increasing
//! size and, within one size, by increasing bitmask; the first hit is the
//! reported witness, and the parallel variants return the same one.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest order accepted by the oracles.
pub const ORACLE_MAX: usize = 22;

fn check(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > ORACLE_MAX {
        return Err(Error::TooLarge { n, max: ORACLE_MAX });
    }
    Ok(n)
}

/// Masks over vertices `1..n` with `k` bits, ascending, shifted into place.
fn masks_of_size(free: usize, k: usize) -> Vec<u64> {
    let mut out = Vec::new();
    if k > free {
        return out;
    }
    if k == 0 {
        out.push(0);
        return out;
    }
    let limit = 1u64 << free;
    let mut m = (1u64 << k) - 1;
    while m < limit {
        out.push(m << 1);
        // Gosper's hack
        let c = m & m.wrapping_neg();
        let r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
    out
}

fn free_vertices(n: usize) -> usize {
    n.saturating_sub(1)
}

/// Some `A` (never containing vertex 0) with `pred(S(g, A))`.
pub fn oracle_upper<P>(g: &Graph, pred: P) -> Result<Option<VertexSet>>
where
    P: Fn(&Graph) -> bool,
{
    let n = check(g)?;
    for k in 0..=free_vertices(n) {
        for m in masks_of_size(free_vertices(n), k) {
            let a = VertexSet::from_mask(n, m);
            if pred(&g.switch(&a)) {
                return Ok(Some(a));
            }
        }
    }
    Ok(None)
}

/// Same result as [`oracle_upper`], searching each size level in parallel.
pub fn oracle_upper_par<P>(g: &Graph, pred: P) -> Result<Option<VertexSet>>
where
    P: Fn(&Graph) -> bool + Sync,
{
    let n = check(g)?;
    for k in 0..=free_vertices(n) {
        let hit = masks_of_size(free_vertices(n), k)
            .into_par_iter()
            .find_first(|&m| pred(&g.switch(&VertexSet::from_mask(n, m))));
        if let Some(m) = hit {
            return Ok(Some(VertexSet::from_mask(n, m)));
        }
    }
    Ok(None)
}

/// Every `A` avoiding vertex 0 with `pred(S(g, A))`, in search order.
pub fn oracle_upper_all<P>(g: &Graph, pred: P) -> Result<Vec<VertexSet>>
where
    P: Fn(&Graph) -> bool,
{
    let n = check(g)?;
    let mut out = Vec::new();
    for k in 0..=free_vertices(n) {
        for m in masks_of_size(free_vertices(n), k) {
            let a = VertexSet::from_mask(n, m);
            if pred(&g.switch(&a)) {
                out.push(a);
            }
        }
    }
    Ok(out)
}

/// Whether every switch of `g` satisfies `pred`.
pub fn oracle_lower<P>(g: &Graph, pred: P) -> Result<bool>
where
    P: Fn(&Graph) -> bool,
{
    let n = check(g)?;
    let count = 1u64 << free_vertices(n);
    Ok((0..count).all(|m| pred(&g.switch(&VertexSet::from_mask(n, m << 1)))))
}

pub fn oracle_lower_par<P>(g: &Graph, pred: P) -> Result<bool>
where
    P: Fn(&Graph) -> bool + Sync,
{
    let n = check(g)?;
    let count = 1u64 << free_vertices(n);
    Ok((0..count)
        .into_par_iter()
        .all(|m| pred(&g.switch(&VertexSet::from_mask(n, m << 1)))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{cycle, named};

    fn edgeless(g: &Graph) -> bool {
        g.edge_count() == 0
    }

    fn triangle_free(g: &Graph) -> bool {
        crate::search::is_h_free(g, &Graph::complete(3))
    }

    #[test]
    fn c4_switches_to_edgeless_via_opposite_pair() {
        let a = oracle_upper(&cycle(4), edgeless).unwrap().unwrap();
        assert_eq!(a.to_vec(), vec![1, 3]);
    }

    #[test]
    fn triangle_needs_one_vertex() {
        let a = oracle_upper(&Graph::complete(3), triangle_free).unwrap().unwrap();
        assert_eq!(a.len(), 1);
    }

    #[test]
    fn members_take_the_empty_set() {
        let a = oracle_upper(&named("p4").unwrap(), triangle_free).unwrap().unwrap();
        assert!(a.is_empty());
    }

    #[test]
    fn lower_examples() {
        let paw = named("paw").unwrap();
        let paw_free = |h: &Graph| crate::search::is_h_free(h, &paw);
        assert!(oracle_lower(&named("k2+k1").unwrap(), paw_free).unwrap());
        let c4 = cycle(4);
        assert!(!oracle_lower(&c4, |h: &Graph| crate::search::is_h_free(h, &c4)).unwrap());
    }

    #[test]
    fn gosper_order_and_counts() {
        let all = oracle_upper_all(&Graph::new(5), |_| true).unwrap();
        assert_eq!(all.len(), 16);
        let sizes: Vec<usize> = all.iter().map(VertexSet::len).collect();
        assert!(sizes.windows(2).all(|w| w[0] <= w[1]));
        assert!(all.iter().all(|a| !a.contains(0)));
    }

    #[test]
    fn parallel_matches_sequential() {
        for g in crate::canon::all_graphs(6).unwrap() {
            assert_eq!(
                oracle_upper(&g, triangle_free).unwrap(),
                oracle_upper_par(&g, triangle_free).unwrap()
            );
            assert_eq!(
                oracle_lower(&g, triangle_free).unwrap(),
                oracle_lower_par(&g, triangle_free).unwrap()
            );
        }
    }

    #[test]
    fn too_large() {
        assert!(matches!(
            oracle_upper(&Graph::new(23), edgeless),
            Err(Error::TooLarge { n: 23, .. })
        ));
    }
}

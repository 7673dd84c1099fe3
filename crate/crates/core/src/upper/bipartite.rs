use std::sync::OnceLock;

use super::check_size;
use crate::error::Result;
use crate::family::{is_family_free, PatternFamily};
use crate::graph::{Graph, VertexSet};
use crate::recognize::{is_bipartite, is_bipartite_chain};

/// One side of `G[x]` if it is complete bipartite (an edgeless graph has
/// an empty side), or `None`.
fn bipartite_side(g: &Graph, x: &VertexSet) -> Option<VertexSet> {
    let parts = g.co_components_within(x);
    if parts.len() > 2 || parts.iter().any(|c| !g.is_independent(c)) {
        return None;
    }
    Some(parts.into_iter().next().unwrap_or_else(|| VertexSet::empty(g.n())))
}

/// Some `A` with `S(g, A)` bipartite.
///
/// `S(g, A)` is bipartite with sides `X` and `V \ X` exactly when both
/// `G[X]` and `G[V \ X]` are complete bipartite, and then `A` takes one
/// side of each. `X` is searched with vertex 0 inside it.
pub fn upper_bipartite(g: &Graph) -> Result<Option<VertexSet>> {
    check_size(g)?;
    let n = g.n();
    if n == 0 {
        return Ok(Some(VertexSet::empty(0)));
    }
    for m in 0u64..1 << (n - 1) {
        let x = VertexSet::from_mask(n, (m << 1) | 1);
        let Some(a1) = bipartite_side(g, &x) else {
            continue;
        };
        let Some(a2) = bipartite_side(g, &x.complement()) else {
            continue;
        };
        let a = a1.union(&a2).normalized();
        assert!(is_bipartite(&g.switch(&a)), "switch by {a} is not bipartite");
        return Ok(Some(a));
    }
    Ok(None)
}

fn chain_obstructions() -> &'static PatternFamily {
    static F: OnceLock<PatternFamily> = OnceLock::new();
    F.get_or_init(|| PatternFamily::from_names(&["2k2", "k3+k1", "k4"]).expect("fixed names"))
}

/// Some `A` with `S(g, A)` a bipartite chain graph: `g` must avoid the
/// switching class of `2K2` and switch to a bipartite graph.
pub fn upper_bipartite_chain(g: &Graph) -> Result<Option<VertexSet>> {
    check_size(g)?;
    if !is_family_free(g, chain_obstructions()) {
        return Ok(None);
    }
    let found = upper_bipartite(g)?;
    if let Some(a) = &found {
        assert!(is_bipartite_chain(&g.switch(a)), "switch by {a} is not a chain graph");
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::{all_graphs, is_isomorphic};
    use crate::oracle::oracle_upper;
    use crate::patterns::{cycle, named};

    #[test]
    fn examples() {
        let c5 = cycle(5);
        let a = upper_bipartite(&c5).unwrap().unwrap();
        assert!(is_isomorphic(&c5.switch(&a), &named("p4+k1").unwrap()).unwrap());
        let a = upper_bipartite_chain(&c5).unwrap().unwrap();
        assert!(is_bipartite_chain(&c5.switch(&a)));
        assert_eq!(upper_bipartite_chain(&Graph::complete(4)).unwrap(), None);
        assert!(is_bipartite_chain(&named("k2_3").unwrap()));
    }

    #[test]
    fn matches_oracle_up_to_seven() {
        for n in 1..=7 {
            for g in all_graphs(n).unwrap() {
                assert_eq!(
                    upper_bipartite(&g).unwrap().is_some(),
                    oracle_upper(&g, is_bipartite).unwrap().is_some(),
                    "{g:?}"
                );
                assert_eq!(
                    upper_bipartite_chain(&g).unwrap().is_some(),
                    oracle_upper(&g, is_bipartite_chain).unwrap().is_some(),
                    "{g:?}"
                );
            }
        }
    }
}

//! Finite families of forbidden induced subgraphs.

use std::collections::BTreeMap;

use crate::canon::{canonical_form, canonical_graph, switching_class, CanonicalForm};
use crate::error::Result;
use crate::graph::Graph;
use crate::patterns::named;
use crate::search::{contains_induced, is_h_free};
use crate::VertexSet;

/// A set of graphs up to isomorphism, each stored in canonical labelling.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PatternFamily {
    members: BTreeMap<CanonicalForm, Graph>,
}

impl PatternFamily {
    pub fn new<'a, I: IntoIterator<Item = &'a Graph>>(graphs: I) -> Result<Self> {
        let mut members = BTreeMap::new();
        for g in graphs {
            let form = canonical_form(g)?;
            if let std::collections::btree_map::Entry::Vacant(e) = members.entry(form) {
                e.insert(canonical_graph(g)?);
            }
        }
        Ok(PatternFamily { members })
    }

    pub fn from_names(names: &[&str]) -> Result<Self> {
        let graphs = names.iter().map(|n| named(n)).collect::<Result<Vec<_>>>()?;
        Self::new(&graphs)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, g: &Graph) -> Result<bool> {
        Ok(self.members.contains_key(&canonical_form(g)?))
    }

    pub fn graphs(&self) -> impl Iterator<Item = &Graph> {
        self.members.values()
    }

    /// The member forbidden in `g`, with the vertices of one copy.
    pub fn find_in(&self, g: &Graph) -> Option<(&Graph, VertexSet)> {
        self.graphs()
            .filter(|h| h.n() <= g.n())
            .find_map(|h| contains_induced(g, h).map(|w| (h, w)))
    }
}

pub fn is_family_free(g: &Graph, fam: &PatternFamily) -> bool {
    fam.graphs().all(|h| h.n() > g.n() || is_h_free(g, h))
}

/// Union of the switching classes of the members.
pub fn expand_switch_family(fam: &PatternFamily) -> Result<PatternFamily> {
    let mut members = BTreeMap::new();
    for h in fam.graphs() {
        for g in switching_class(h)?.into_graphs() {
            members.insert(canonical_form(&g)?, g);
        }
    }
    Ok(PatternFamily { members })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::cycle;

    fn fam(names: &[&str]) -> PatternFamily {
        PatternFamily::from_names(names).unwrap()
    }

    #[test]
    fn expansion_examples() {
        let c4 = expand_switch_family(&fam(&["c4"])).unwrap();
        assert_eq!(c4, fam(&["c4", "claw", "4k1"]));
        assert_eq!(expand_switch_family(&fam(&["c6"])).unwrap().len(), 6);
        assert_eq!(expand_switch_family(&fam(&["k1"])).unwrap(), fam(&["k1"]));
    }

    #[test]
    fn freeness_examples() {
        assert!(is_family_free(&cycle(5), &fam(&["c4"])));
        let sc5 = expand_switch_family(&fam(&["c5"])).unwrap();
        assert!(!is_family_free(&named("gem").unwrap(), &sc5));
        assert!(is_family_free(&Graph::new(1), &fam(&["k2", "2k1"])));
    }

    #[test]
    fn duplicates_collapse() {
        assert_eq!(fam(&["p4", "co-p4", "c5"]).len(), 2);
    }
}

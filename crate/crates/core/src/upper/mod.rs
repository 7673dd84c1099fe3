//! Upper switching classes: does some switch of `g` land in a class?
//!
//! Every procedure here returns a witness `A` with vertex 0 excluded, and
//! every witness is checked against the class predicate before it is
//! returned.

mod bipartite;
mod paw;
mod pseudo_split;
mod split;
mod star;

use std::fmt;
use std::str::FromStr;

pub use bipartite::{upper_bipartite, upper_bipartite_chain};
pub use paw::{upper_complete_multipartite, upper_paw_free, upper_triangle_free};
pub use pseudo_split::{enumerate_upper_pseudo_split, upper_pseudo_split};
pub use split::{enumerate_upper_split, upper_split};
pub use star::{pq_split_partitions, upper_star_costar, PqSplitPartition};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::oracle::ORACLE_MAX;
use crate::recognize::{self, split_partitions, SplitPartition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UpperClass {
    Split,
    PseudoSplit,
    PawFree,
    StarCostar { p: usize, q: usize },
    Bipartite,
    BipartiteChain,
}

impl UpperClass {
    pub const NAMES: [&'static str; 6] = [
        "split",
        "pseudo-split",
        "paw-free",
        "star-costar",
        "bipartite",
        "bipartite-chain",
    ];

    pub fn name(self) -> &'static str {
        match self {
            UpperClass::Split => "split",
            UpperClass::PseudoSplit => "pseudo-split",
            UpperClass::PawFree => "paw-free",
            UpperClass::StarCostar { .. } => "star-costar",
            UpperClass::Bipartite => "bipartite",
            UpperClass::BipartiteChain => "bipartite-chain",
        }
    }

    /// Membership in the target class.
    pub fn contains(self, g: &Graph) -> bool {
        match self {
            UpperClass::Split => recognize::is_split(g),
            UpperClass::PseudoSplit => recognize::is_pseudo_split(g),
            UpperClass::PawFree => recognize::is_paw_free(g),
            UpperClass::StarCostar { p, q } => recognize::is_star_costar_free(g, p, q),
            UpperClass::Bipartite => recognize::is_bipartite(g),
            UpperClass::BipartiteChain => recognize::is_bipartite_chain(g),
        }
    }

    /// Runs the dedicated algorithm for this class.
    pub fn solve(self, g: &Graph) -> Result<Option<VertexSet>> {
        match self {
            UpperClass::Split => Ok(upper_split(g)),
            UpperClass::PseudoSplit => Ok(upper_pseudo_split(g)),
            UpperClass::PawFree => upper_paw_free(g),
            UpperClass::StarCostar { p, q } => upper_star_costar(g, p, q),
            UpperClass::Bipartite => upper_bipartite(g),
            UpperClass::BipartiteChain => upper_bipartite_chain(g),
        }
    }

    /// All solutions, for the classes that have a polynomial enumeration.
    pub fn enumerate(self, g: &Graph) -> Option<Vec<VertexSet>> {
        match self {
            UpperClass::Split => Some(enumerate_upper_split(g)),
            UpperClass::PseudoSplit => Some(enumerate_upper_pseudo_split(g)),
            _ => None,
        }
    }
}

impl fmt::Display for UpperClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UpperClass::StarCostar { p, q } => write!(f, "star-costar(p={p},q={q})"),
            other => f.write_str(other.name()),
        }
    }
}

impl FromStr for UpperClass {
    type Err = Error;

    /// Parses a class name; `star-costar` defaults to `p = q = 2`.
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "split" => UpperClass::Split,
            "pseudo-split" => UpperClass::PseudoSplit,
            "paw-free" => UpperClass::PawFree,
            "star-costar" => UpperClass::StarCostar { p: 2, q: 2 },
            "bipartite" => UpperClass::Bipartite,
            "bipartite-chain" => UpperClass::BipartiteChain,
            _ => return Err(Error::UnknownName(s.to_string())),
        })
    }
}

fn check_size(g: &Graph) -> Result<()> {
    if g.n() > ORACLE_MAX {
        return Err(Error::TooLarge {
            n: g.n(),
            max: ORACLE_MAX,
        });
    }
    Ok(())
}

/// Split partitions of `G[sub]`, expressed in the vertices of `g`.
fn split_partitions_within(g: &Graph, sub: &VertexSet) -> Vec<SplitPartition> {
    split_partitions(&g.induced(sub))
        .into_iter()
        .map(|p| SplitPartition {
            k: VertexSet::lift_from(&p.k, sub),
            i: VertexSet::lift_from(&p.i, sub),
        })
        .collect()
}

/// `N[u] ∪ N[v]`.
fn closed_pair(g: &Graph, u: usize, v: usize) -> VertexSet {
    g.closed_neighbors(u).union(&g.closed_neighbors(v))
}

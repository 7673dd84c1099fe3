//! Lower switching classes: graphs all of whose switches stay in a class.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::canon::SwitchingClass;
use crate::error::{Error, Result};
use crate::family::{expand_switch_family, is_family_free, PatternFamily};
use crate::graph::{Graph, VertexSet};
use crate::minor::is_outerplanar;
use crate::profile::{match_profile_family, Profile};
use crate::recognize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LowerClassId {
    WeaklyChordal,
    Permutation,
    CoComparability,
    Comparability,
    DistanceHereditary,
    Meyniel,
    BipartiteFamily,
    ChordalFamily,
    Block,
    Line,
    Outerplanar,
    Threshold,
}

impl LowerClassId {
    pub const ALL: [LowerClassId; 12] = [
        LowerClassId::WeaklyChordal,
        LowerClassId::Permutation,
        LowerClassId::CoComparability,
        LowerClassId::Comparability,
        LowerClassId::DistanceHereditary,
        LowerClassId::Meyniel,
        LowerClassId::BipartiteFamily,
        LowerClassId::ChordalFamily,
        LowerClassId::Block,
        LowerClassId::Line,
        LowerClassId::Outerplanar,
        LowerClassId::Threshold,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LowerClassId::WeaklyChordal => "weakly-chordal",
            LowerClassId::Permutation => "permutation",
            LowerClassId::CoComparability => "co-comparability",
            LowerClassId::Comparability => "comparability",
            LowerClassId::DistanceHereditary => "distance-hereditary",
            LowerClassId::Meyniel => "meyniel",
            LowerClassId::BipartiteFamily => "bipartite",
            LowerClassId::ChordalFamily => "chordal",
            LowerClassId::Block => "block",
            LowerClassId::Line => "line",
            LowerClassId::Outerplanar => "outerplanar",
            LowerClassId::Threshold => "threshold",
        }
    }

    /// Forbidden graphs whose switching closure characterises the class,
    /// for the classes described that way.
    pub fn forbidden_seeds(self) -> Option<&'static [&'static str]> {
        Some(match self {
            LowerClassId::WeaklyChordal | LowerClassId::Permutation => &["c5", "c6", "co-c6"],
            LowerClassId::CoComparability => &["c5", "c6"],
            LowerClassId::Comparability => &["c5", "co-c6"],
            LowerClassId::DistanceHereditary => &["domino", "house", "c5", "c6"],
            LowerClassId::Meyniel => &["c5", "house"],
            _ => return None,
        })
    }

    /// Membership test for the base class itself, used as the reference
    /// predicate when checking against the exhaustive oracle.
    pub fn base_class_test(self) -> fn(&Graph) -> bool {
        match self {
            LowerClassId::WeaklyChordal => recognize::is_weakly_chordal,
            LowerClassId::Permutation => recognize::is_permutation,
            LowerClassId::CoComparability => recognize::is_co_comparability,
            LowerClassId::Comparability => recognize::is_comparability,
            LowerClassId::DistanceHereditary => recognize::is_distance_hereditary,
            LowerClassId::Meyniel => recognize::is_meyniel,
            LowerClassId::BipartiteFamily => recognize::is_bipartite,
            LowerClassId::ChordalFamily => recognize::is_chordal,
            LowerClassId::Block => recognize::is_block_graph,
            LowerClassId::Line => recognize::is_line_graph,
            LowerClassId::Outerplanar => |g| is_outerplanar(g).unwrap_or(false),
            LowerClassId::Threshold => recognize::is_threshold,
        }
    }
}

impl fmt::Display for LowerClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LowerClassId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LowerClassId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

fn switch_family(id: LowerClassId) -> Option<&'static PatternFamily> {
    const N: usize = LowerClassId::ALL.len();
    static CACHE: [OnceLock<PatternFamily>; N] = [const { OnceLock::new() }; N];
    let seeds = id.forbidden_seeds()?;
    let slot = &CACHE[id as usize];
    Some(slot.get_or_init(|| {
        let base = PatternFamily::from_names(seeds).expect("fixed pattern names");
        expand_switch_family(&base).expect("seeds are small")
    }))
}

/// The switching closure of the forbidden seeds of `id`.
pub fn lower_family(id: LowerClassId) -> Option<PatternFamily> {
    switch_family(id).cloned()
}

fn parse_all(list: &[&str]) -> Vec<Profile> {
    list.iter()
        .map(|s| s.parse().expect("fixed profile text"))
        .collect()
}

pub const C0_FAMILIES: [&str; 8] = [
    "(+)",
    "(+,+,1)",
    "(+,1,+)",
    "(+,0,+)",
    "(+,+,1,0,+)",
    "(+,0,+,0,1)",
    "(+,+,1,+)",
    "(+,+,1,+,+)",
];

pub const BLOCK_FORMS: [&str; 4] = ["(+)", "(+,0,+)", "(1,1,1)", "(1,0,1,0,1)"];

pub const LINE_FORMS: [&str; 15] = [
    "(+)",
    "(1,1,1)",
    "(2,1,1)",
    "(1,2,1)",
    "(2,1,2)",
    "(2,2,1)",
    "(+,0,+)",
    "(1,1,1,0,1)",
    "(2,1,1,0,1)",
    "(1,0,1,0,1)",
    "(2,0,1,0,1)",
    "(2,0,2,0,1)",
    "(1,1,1,1)",
    "(1,2,1,1)",
    "(1,1,1,1,1)",
];

fn first_match(g: &Graph, forms: &[Profile]) -> Option<Profile> {
    forms.iter().find_map(|f| match_profile_family(g, f))
}

fn c0_forms() -> &'static [Profile] {
    static F: OnceLock<Vec<Profile>> = OnceLock::new();
    F.get_or_init(|| parse_all(&C0_FAMILIES))
}

/// The concrete profile under which `g` belongs to the lower
/// `{C4, C5, C6}`-free class, which is also the lower chordal class.
pub fn is_c0_member(g: &Graph) -> Option<Profile> {
    if g.n() == 0 {
        return Some(Profile(Vec::new()));
    }
    first_match(g, c0_forms())
}

/// Matched form for the lower block class.
pub fn block_lower_profile(g: &Graph) -> Option<Profile> {
    static F: OnceLock<Vec<Profile>> = OnceLock::new();
    if g.n() == 0 {
        return Some(Profile(Vec::new()));
    }
    first_match(g, F.get_or_init(|| parse_all(&BLOCK_FORMS)))
}

pub fn is_block_lower(g: &Graph) -> bool {
    block_lower_profile(g).is_some()
}

fn s_c5() -> &'static SwitchingClass {
    static C: OnceLock<SwitchingClass> = OnceLock::new();
    C.get_or_init(|| {
        crate::canon::switching_class(&crate::patterns::cycle(5)).expect("small seed")
    })
}

/// Matched form for the lower line class; switches of `C5` have no
/// profile and report `None` while still being accepted.
pub fn line_lower_profile(g: &Graph) -> Option<Profile> {
    static F: OnceLock<Vec<Profile>> = OnceLock::new();
    if g.n() == 0 {
        return Some(Profile(Vec::new()));
    }
    first_match(g, F.get_or_init(|| parse_all(&LINE_FORMS)))
}

pub fn is_line_lower(g: &Graph) -> bool {
    line_lower_profile(g).is_some()
        || (g.n() == 5 && s_c5().contains_graph(g).expect("order five"))
}

/// At most five vertices and every switch free of `K4` and `K2,3` minors.
pub fn is_lower_outerplanar(g: &Graph) -> bool {
    let n = g.n();
    if n > 5 {
        return false;
    }
    let count = if n == 0 { 1u64 } else { 1 << (n - 1) };
    (0..count).all(|m| {
        is_outerplanar(&g.switch(&VertexSet::from_mask(n, m << 1))).expect("order at most five")
    })
}

pub fn recognize_lower(g: &Graph, id: LowerClassId) -> bool {
    if g.n() <= 1 {
        return true;
    }
    if let Some(fam) = switch_family(id) {
        return is_family_free(g, fam);
    }
    match id {
        LowerClassId::BipartiteFamily => recognize::is_complete_bipartite(g),
        LowerClassId::ChordalFamily => is_c0_member(g).is_some(),
        LowerClassId::Block => is_block_lower(g),
        LowerClassId::Line => is_line_lower(g),
        LowerClassId::Outerplanar => is_lower_outerplanar(g),
        LowerClassId::Threshold => g.n() <= 3,
        _ => unreachable!("family-defined ids handled above"),
    }
}

/// The matched profile, for the ids recognised through profiles.
pub fn lower_profile(g: &Graph, id: LowerClassId) -> Option<Profile> {
    match id {
        LowerClassId::ChordalFamily => is_c0_member(g),
        LowerClassId::Block => block_lower_profile(g),
        LowerClassId::Line => line_lower_profile(g),
        _ => None,
    }
}

use serde::Serialize;

use super::formula::{Assignment, NaeFormula};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::search::{find_induced_cycle_with_budget, find_induced_path_with_budget, induces_sequence};

/// The forbidden pattern a reduction targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Target {
    P10,
    C7,
}

impl Target {
    /// Clause arity the construction expects.
    pub fn arity(self) -> usize {
        match self {
            Target::P10 => 5,
            Target::C7 => 3,
        }
    }

    /// Vertices added per clause.
    pub fn clause_size(self) -> usize {
        match self {
            Target::P10 => 50,
            Target::C7 => 196,
        }
    }
}

/// Vertices of one clause gadget.
///
/// For `P10`, `blocks[j]` is the path `B_{i,j+1}` on nine vertices listed in
/// path order, and its last vertex is the end that misses `I_i`. For `C7`,
/// `blocks[4 * j + l]` is the six-vertex path `B_{i,j+1,l+1}` in path order,
/// running from `p` to `q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClauseLayout {
    /// Variable vertices of the clause in literal order.
    pub literals: Vec<usize>,
    pub i_set: Vec<usize>,
    pub blocks: Vec<Vec<usize>>,
}

impl ClauseLayout {
    pub fn clause_vertices(&self) -> Vec<usize> {
        let mut out = self.i_set.clone();
        for b in &self.blocks {
            out.extend(b);
        }
        out
    }

    /// `C7` cell at level `j` and position `l`, both 0-based.
    pub fn cell(&self, j: usize, l: usize) -> &[usize] {
        &self.blocks[4 * j + l]
    }
}

/// Vertex roles of a reduction graph, suitable for a JSON sidecar.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Roles {
    pub target: Target,
    pub variables: Vec<usize>,
    pub clauses: Vec<ClauseLayout>,
}

#[derive(Clone, Debug)]
pub struct ReductionInstance {
    pub graph: Graph,
    pub formula: NaeFormula,
    pub roles: Roles,
}

impl ReductionInstance {
    pub fn target(&self) -> Target {
        self.roles.target
    }

    pub fn variable_vertices(&self) -> &[usize] {
        &self.roles.variables
    }

    pub fn roles_json(&self) -> String {
        serde_json::to_string_pretty(&self.roles).expect("roles serialise")
    }
}

fn check_arity(f: &NaeFormula, target: Target) -> Result<()> {
    if f.arity() != target.arity() {
        return Err(Error::ArityMismatch {
            expected: target.arity(),
            got: f.arity(),
        });
    }
    Ok(())
}

fn add_path(g: &mut Graph, path: &[usize]) {
    for w in path.windows(2) {
        g.set_edge(w[0], w[1], true);
    }
}

/// `L_i`–`I_i` edges for `P10`: row `r` lists the literal positions adjacent
/// to `I_{i,r+1}`. Switching either side turns `L_i ∪ I_i` into a `P10`.
pub const P10_LINK: [&[usize]; 5] = [&[2, 3, 4], &[0, 3, 4], &[0, 1, 4], &[0, 1, 2], &[0, 1, 2, 3]];

/// `L_i`–`I_i` edges for `C7`, plus the edge `I_{i1} I_{i4}`.
pub const C7_LINK: [&[usize]; 4] = [&[1, 2], &[2], &[0], &[0, 1]];

/// Construction for `P10`-free switching from monotone NAE 5-SAT.
///
/// Numbering: the variable vertices first, then per clause `I_i` (five
/// vertices) followed by `B_{i1}, ..., B_{i5}`.
pub fn build_p10_instance(f: &NaeFormula) -> Result<ReductionInstance> {
    check_arity(f, Target::P10)?;
    let n = f.num_vars();
    let m = f.clauses().len();
    let mut g = Graph::new(n + 50 * m);
    let mut layouts = Vec::with_capacity(m);
    for (c, clause) in f.clauses().iter().enumerate() {
        let base = n + 50 * c;
        let i_set: Vec<usize> = (base..base + 5).collect();
        let blocks: Vec<Vec<usize>> = (0..5)
            .map(|j| (base + 5 + 9 * j..base + 14 + 9 * j).collect())
            .collect();
        for b in &blocks {
            add_path(&mut g, b);
            g.join(&b[..8], &i_set);
        }
        for (j, &x) in clause.iter().enumerate() {
            g.join(&[x], &blocks[j]);
            if j > 0 {
                g.join(&[x], &blocks[j - 1]);
            }
        }
        for (r, row) in P10_LINK.iter().enumerate() {
            for &pos in row.iter() {
                g.set_edge(i_set[r], clause[pos], true);
            }
        }
        layouts.push(ClauseLayout {
            literals: clause.clone(),
            i_set,
            blocks,
        });
    }
    for a in 0..m {
        for b in a + 1..m {
            g.join(&layouts[a].clause_vertices(), &layouts[b].clause_vertices());
        }
    }
    Ok(ReductionInstance {
        graph: g,
        formula: f.clone(),
        roles: Roles {
            target: Target::P10,
            variables: (0..n).collect(),
            clauses: layouts,
        },
    })
}

/// Construction for `C7`-free switching from monotone NAE 3-SAT.
///
/// Numbering: the variable vertices first, then per clause `I_i` (four
/// vertices) followed by the 32 cells, level by level.
pub fn build_c7_instance(f: &NaeFormula) -> Result<ReductionInstance> {
    check_arity(f, Target::C7)?;
    let n = f.num_vars();
    let m = f.clauses().len();
    let mut g = Graph::new(n + 196 * m);
    let mut layouts = Vec::with_capacity(m);
    for (c, clause) in f.clauses().iter().enumerate() {
        let base = n + 196 * c;
        let i_set: Vec<usize> = (base..base + 4).collect();
        let blocks: Vec<Vec<usize>> = (0..32)
            .map(|k| (base + 4 + 6 * k..base + 10 + 6 * k).collect())
            .collect();
        let lay = ClauseLayout {
            literals: clause.clone(),
            i_set,
            blocks,
        };
        for b in &lay.blocks {
            add_path(&mut g, b);
        }
        g.set_edge(lay.i_set[0], lay.i_set[3], true);
        g.join(lay.cell(0, 0), lay.cell(0, 3));
        for j in 0..8 {
            for l in 0..4 {
                let inner = &lay.cell(j, l)[1..5];
                if j + 1 < 8 {
                    g.join(inner, lay.cell(j + 1, l));
                } else {
                    g.join(inner, &lay.i_set);
                }
            }
        }
        for (l, &x) in clause.iter().enumerate() {
            g.join(&[x], lay.cell(0, l));
            g.join(&[x], lay.cell(0, l + 1));
        }
        for (r, row) in C7_LINK.iter().enumerate() {
            for &pos in row.iter() {
                g.set_edge(lay.i_set[r], clause[pos], true);
            }
        }
        layouts.push(lay);
    }
    let level_one = |lay: &ClauseLayout| -> Vec<usize> { lay.blocks[..4].concat() };
    let all_i: Vec<usize> = layouts.iter().flat_map(|l| l.i_set.clone()).collect();
    for a in 0..m {
        g.join(&level_one(&layouts[a]), &all_i);
        for b in a + 1..m {
            g.join(&level_one(&layouts[a]), &level_one(&layouts[b]));
            g.join(&layouts[a].i_set, &layouts[b].i_set);
        }
    }
    Ok(ReductionInstance {
        graph: g,
        formula: f.clone(),
        roles: Roles {
            target: Target::C7,
            variables: (0..n).collect(),
            clauses: layouts,
        },
    })
}

pub fn build_instance(f: &NaeFormula, target: Target) -> Result<ReductionInstance> {
    match target {
        Target::P10 => build_p10_instance(f),
        Target::C7 => build_c7_instance(f),
    }
}

/// The variable vertices of the true variables.
pub fn assignment_to_switching_set(inst: &ReductionInstance, a: &Assignment) -> Result<VertexSet> {
    let vars = inst.variable_vertices();
    if a.len() != vars.len() {
        return Err(Error::SizeMismatch {
            expected: vars.len(),
            got: a.len(),
        });
    }
    VertexSet::from_indices(
        inst.graph.n(),
        vars.iter().zip(&a.0).filter(|(_, &t)| t).map(|(&v, _)| v),
    )
}

/// Inverse of [`assignment_to_switching_set`] on sets of variable vertices.
pub fn switching_set_to_assignment(inst: &ReductionInstance, set: &VertexSet) -> Result<Assignment> {
    let vars = inst.variable_vertices();
    if let Some(v) = set.iter().find(|v| !vars.contains(v)) {
        return Err(Error::NotVariableOnly(v));
    }
    Ok(Assignment(vars.iter().map(|&v| set.contains(v)).collect()))
}

/// Whether switching by the true variables leaves a graph free of the
/// target pattern; by the reduction this matches `nae_eval`.
pub fn verify_instance(inst: &ReductionInstance, a: &Assignment) -> Result<bool> {
    verify_instance_with_budget(inst, a, crate::search::DEFAULT_BUDGET)
}

pub fn verify_instance_with_budget(inst: &ReductionInstance, a: &Assignment, budget: u64) -> Result<bool> {
    Ok(find_pattern(inst, a, budget)?.is_none())
}

/// An induced copy of the target pattern after switching, if any.
pub fn find_pattern(inst: &ReductionInstance, a: &Assignment, budget: u64) -> Result<Option<Vec<usize>>> {
    let set = assignment_to_switching_set(inst, a)?;
    let h = inst.graph.switch(&set);
    match inst.target() {
        Target::P10 => find_induced_path_with_budget(&h, 10, budget),
        Target::C7 => find_induced_cycle_with_budget(&h, 7, budget),
    }
}

fn complete(g: &Graph, a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|&x| b.iter().all(|&y| g.has_edge(x, y)))
}

fn anticomplete(g: &Graph, a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|&x| b.iter().all(|&y| !g.has_edge(x, y)))
}

fn set_of(g: &Graph, vs: &[usize]) -> VertexSet {
    VertexSet::from_indices(g.n(), vs.iter().copied()).expect("layout vertices are in range")
}

/// Checks every structural property the construction promises; the
/// returned list names each one that fails.
pub fn check_invariants(inst: &ReductionInstance) -> Vec<String> {
    let mut bad = Vec::new();
    let g = &inst.graph;
    let f = &inst.formula;
    let t = inst.target();
    let mut need = |ok: bool, what: String| {
        if !ok {
            bad.push(what);
        }
    };
    need(
        g.n() == f.num_vars() + t.clause_size() * f.clauses().len(),
        format!("vertex count {}", g.n()),
    );
    let l = set_of(g, inst.variable_vertices());
    need(g.is_independent(&l), "L is not independent".into());
    let lays = &inst.roles.clauses;
    match t {
        Target::P10 => {
            let c_all: Vec<usize> = lays.iter().flat_map(|x| x.clause_vertices()).collect();
            let gc = g.induced(&set_of(g, &c_all));
            let c_set = set_of(g, &c_all);
            for (i, lay) in lays.iter().enumerate() {
                let is = &lay.i_set;
                need(g.is_independent(&set_of(g, is)), format!("I_{} not independent", i + 1));
                for (j, b) in lay.blocks.iter().enumerate() {
                    need(induces_sequence(g, b, false), format!("B_{},{} is not an induced P9", i + 1, j + 1));
                    need(complete(g, &b[..8], is), format!("B_{},{} minus its end not complete to I", i + 1, j + 1));
                    need(anticomplete(g, &b[8..], is), format!("v_{},{} adjacent to I", i + 1, j + 1));
                    let x = lay.literals[j];
                    need(complete(g, &[x], b), format!("x_{},{} not complete to B_{},{}", i + 1, j + 1, i + 1, j + 1));
                    if j > 0 {
                        need(
                            complete(g, &[x], &lay.blocks[j - 1]),
                            format!("x_{},{} not complete to B_{},{}", i + 1, j + 1, i + 1, j),
                        );
                    }
                }
                let local = set_of(g, is).restrict_to(&c_set);
                need(gc.is_module(&local), format!("I_{} is not a module of G[C]", i + 1));
                // one vertex per block together with L_i gives P10
                let mut seq = Vec::new();
                for (j, b) in lay.blocks.iter().enumerate() {
                    seq.push(lay.literals[j]);
                    seq.push(b[0]);
                }
                need(induces_sequence(g, &seq, false), format!("clause {} path gadget", i + 1));
                need(link_gadget(g, lay, t), format!("clause {} L-I gadget", i + 1));
                for other in &lays[i + 1..] {
                    need(
                        complete(g, &lay.clause_vertices(), &other.clause_vertices()),
                        format!("clause {} not complete to a later clause", i + 1),
                    );
                }
            }
        }
        Target::C7 => {
            let all_i: Vec<usize> = lays.iter().flat_map(|x| x.i_set.clone()).collect();
            for (i, lay) in lays.iter().enumerate() {
                let is = &lay.i_set;
                let gi = g.induced(&set_of(g, is));
                need(
                    gi.edge_count() == 1 && gi.has_edge(0, 3),
                    format!("I_{} does not induce K2+2K1", i + 1),
                );
                for j in 0..8 {
                    for l in 0..4 {
                        let cell = lay.cell(j, l);
                        need(induces_sequence(g, cell, false), format!("B_{},{},{} is not an induced P6", i + 1, j + 1, l + 1));
                        let next: &[usize] = if j < 7 { lay.cell(j + 1, l) } else { is };
                        need(complete(g, &cell[1..5], next), format!("B'_{},{},{} not complete to next level", i + 1, j + 1, l + 1));
                    }
                }
                need(complete(g, lay.cell(0, 0), lay.cell(0, 3)), format!("B_{},1,1 not complete to B_{},1,4", i + 1, i + 1));
                for (l, &x) in lay.literals.iter().enumerate() {
                    need(
                        complete(g, &[x], lay.cell(0, l)) && complete(g, &[x], lay.cell(0, l + 1)),
                        format!("x_{},{} not complete to its level-one cells", i + 1, l + 1),
                    );
                }
                need(complete(g, &lay.blocks[..4].concat(), &all_i), format!("B_{},1 not complete to I", i + 1));
                for other in &lays[i + 1..] {
                    need(complete(g, &lay.blocks[..4].concat(), &other.blocks[..4].concat()), format!("B_{},1 not complete to a later level one", i + 1));
                    need(complete(g, is, &other.i_set), format!("I_{} not complete to a later I", i + 1));
                }
                let seq = [
                    lay.cell(0, 0)[0],
                    lay.literals[0],
                    lay.cell(0, 1)[0],
                    lay.literals[1],
                    lay.cell(0, 2)[0],
                    lay.literals[2],
                    lay.cell(0, 3)[0],
                ];
                need(induces_sequence(g, &seq, true), format!("clause {} cycle gadget", i + 1));
                need(link_gadget(g, lay, t), format!("clause {} L-I gadget", i + 1));
            }
        }
    }
    bad
}

/// Switching exactly one of `L_i`, `I_i` turns `G[L_i ∪ I_i]` into the target.
fn link_gadget(g: &Graph, lay: &ClauseLayout, t: Target) -> bool {
    let mut both = lay.literals.clone();
    both.extend(&lay.i_set);
    let sub = g.induced_by(&both);
    let lits = VertexSet::from_indices(both.len(), 0..lay.literals.len()).expect("in range");
    !is_target(&sub, t) && is_target(&sub.switch(&lits), t) && is_target(&sub.switch(&lits.complement()), t)
}

fn is_target(h: &Graph, t: Target) -> bool {
    let thin = (0..h.n()).all(|v| h.degree(v) <= 2) && h.is_connected();
    match t {
        Target::P10 => h.n() == 10 && thin && h.edge_count() == 9,
        Target::C7 => h.n() == 7 && thin && h.edge_count() == 7,
    }
}

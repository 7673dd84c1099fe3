//! Runs the twelve acceptance checks and prints one PASS/FAIL line each.
//!
//! Build with `--release`; the time limits assume optimised code.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use switchkit::canon::{all_graphs, switching_class};
use switchkit::family::{expand_switch_family, is_family_free, PatternFamily};
use switchkit::lower::{is_c0_member, is_lower_outerplanar, recognize_lower, LowerClassId};
use switchkit::minor::is_outerplanar;
use switchkit::oracle::{oracle_lower, oracle_upper, oracle_upper_all};
use switchkit::patterns::{cycle, named};
use switchkit::profile::profile_graph;
use switchkit::recognize::{is_split, split_partitions};
use switchkit::sat::{
    build_c7_instance, build_instance, build_p10_instance, check_invariants, find_pattern, nae_eval,
    Assignment, NaeFormula, Target,
};
use switchkit::search::{contains_induced, DEFAULT_BUDGET};
use switchkit::upper::{enumerate_upper_pseudo_split, enumerate_upper_split, UpperClass};
use switchkit::{Error, Graph, VertexSet};

pub struct Outcome {
    pub id: usize,
    pub title: &'static str,
    pub pass: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub limit: Duration,
}

impl Outcome {
    pub fn line(&self) -> String {
        format!(
            "[{}] {:2} {} ({:.2?} of {:?}): {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.elapsed,
            self.limit,
            self.detail
        )
    }
}

fn timed(id: usize, title: &'static str, limit_secs: u64, check: impl FnOnce() -> (bool, String)) -> Outcome {
    let start = Instant::now();
    let (ok, detail) = check();
    let elapsed = start.elapsed();
    let limit = Duration::from_secs(limit_secs);
    let pass = ok && elapsed <= limit;
    let detail = if ok && !pass { format!("{detail}; over time") } else { detail };
    Outcome { id, title, pass, detail, elapsed, limit }
}

// brute-force helpers, independent of the library's canonical forms

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(p.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, p, out);
            let j = if k.is_multiple_of(2) { i } else { 0 };
            p.swap(j, k - 1);
        }
    }
    heap(n, &mut p, &mut out);
    out
}

fn brute_iso(g: &Graph, h: &Graph, perms: &[Vec<usize>]) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let n = g.n();
    perms.iter().any(|p| {
        (0..n).all(|u| (u + 1..n).all(|v| g.has_edge(u, v) == h.has_edge(p[u], p[v])))
    })
}

/// Representatives of the switches of `g` up to isomorphism.
fn brute_class(g: &Graph, perms: &[Vec<usize>]) -> Vec<Graph> {
    let n = g.n();
    let mut reps: Vec<Graph> = Vec::new();
    for m in 0..1u64 << n {
        let h = g.switch(&VertexSet::from_mask(n, m));
        if !reps.iter().any(|r| brute_iso(r, &h, perms)) {
            reps.push(h);
        }
    }
    reps
}

fn same_collection(a: &[Graph], b: &[Graph], perms: &[Vec<usize>]) -> bool {
    a.len() == b.len()
        && a.iter().all(|x| b.iter().any(|y| brute_iso(x, y, perms)))
        && b.iter().all(|y| a.iter().any(|x| brute_iso(x, y, perms)))
}

fn graphs(names: &[&str]) -> Vec<Graph> {
    names.iter().map(|n| named(n).expect("known pattern")).collect()
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("edges in range")
}

/// Induced cycle of length 4, 5 or 6, by checking every vertex subset.
fn has_short_hole(g: &Graph) -> bool {
    let n = g.n();
    (0..1u64 << n).any(|m| {
        let k = m.count_ones() as usize;
        if !(4..=6).contains(&k) {
            return false;
        }
        let rows: Vec<u64> = (0..n)
            .filter(|v| m >> v & 1 == 1)
            .map(|v| g.row_mask(v) & m)
            .collect();
        if rows.iter().any(|r| r.count_ones() != 2) {
            return false;
        }
        // 2-regular; connected iff one cycle
        let start = m.trailing_zeros() as usize;
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= g.row_mask(v) & m;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == m
    })
}

/// Split partitions counted by checking every candidate clique side.
fn brute_split_count(g: &Graph) -> usize {
    let n = g.n();
    (0..1u64 << n)
        .filter(|&m| {
            let k = VertexSet::from_mask(n, m);
            g.is_clique(&k) && g.is_independent(&k.complement())
        })
        .count()
}

const GRAPH_COUNTS: [usize; 9] = [1, 1, 2, 4, 11, 34, 156, 1044, 12346];

fn catalogue(max: usize) -> Vec<Vec<Graph>> {
    (0..=max)
        .map(|n| {
            let gs = all_graphs(n).expect("small order");
            assert_eq!(gs.len(), GRAPH_COUNTS[n], "graph count at order {n}");
            gs
        })
        .collect()
}

pub fn switching_class_goldens() -> Outcome {
    timed(1, "switching-class goldens", 1, || {
        let mut bad = Vec::new();
        let c6_forms = ["(1,1,2,1,1)", "(2,1,2,0,1)", "(1,2,2,1)", "(2,0,2,0,2)", "(2,2,2)"];
        let mut c6_set = vec![cycle(6)];
        c6_set.extend(c6_forms.iter().map(|p| profile_graph(&p.parse().unwrap()).unwrap()));
        let goldens = [
            ("S(C4)", cycle(4), graphs(&["c4", "claw", "4k1"])),
            ("S(C5)", cycle(5), graphs(&["c5", "bull", "gem", "p4+k1"])),
            ("S(C6)", cycle(6), c6_set),
        ];
        for (label, seed, want) in &goldens {
            let perms = permutations(seed.n());
            let lib = switching_class(seed).unwrap().into_graphs();
            let brute = brute_class(seed, &perms);
            if !same_collection(&lib, want, &perms) || !same_collection(&brute, want, &perms) {
                bad.push(label.to_string());
            }
        }

        let perms4 = permutations(4);
        let order4 = [
            graphs(&["c4", "claw", "4k1"]),
            graphs(&["2k2", "k3+k1", "k4"]),
            graphs(&["p4", "k2+2k1", "diamond", "p3+k1", "paw"]),
        ];
        let mut covered = 0;
        for g in all_graphs(4).unwrap() {
            let class = brute_class(&g, &perms4);
            let lib = switching_class(&g).unwrap().into_graphs();
            if !same_collection(&class, &lib, &perms4) {
                bad.push(format!("order-4 class of {}", switchkit::io::emit_graph6(&g)));
            }
            if order4.iter().any(|want| same_collection(&class, want, &perms4)) {
                covered += 1;
            }
        }
        let ok = bad.is_empty() && covered == 11;
        (ok, format!("3 classes checked against brute force, 11 order-4 graphs in the listed classes: {covered}/11; mismatches {bad:?}"))
    })
}

pub fn switching_algebra() -> Outcome {
    timed(2, "switching algebra for n <= 6", 60, || {
        let mut checked = 0u64;
        let mut failures = Vec::new();
        for n in 0..=6 {
            for g in all_graphs(n).unwrap() {
                let full = (1u64 << n) - 1;
                for a in 0..1u64 << n {
                    let sa = VertexSet::from_mask(n, a);
                    let ga = g.switch(&sa);
                    if ga != g.switch(&VertexSet::from_mask(n, full & !a)) {
                        failures.push("complement set");
                    }
                    if ga.switch(&sa) != g {
                        failures.push("involution");
                    }
                    if ga.complement() != g.complement().switch(&sa) {
                        failures.push("graph complement");
                    }
                    for b in 0..1u64 << n {
                        let sb = VertexSet::from_mask(n, b);
                        let ab = ga.switch(&sb);
                        if ab != g.switch(&sb).switch(&sa) || ab != g.switch(&VertexSet::from_mask(n, a ^ b)) {
                            failures.push("composition");
                        }
                        checked += 1;
                    }
                }
            }
        }
        failures.dedup();
        (failures.is_empty(), format!("{checked} (G, A, B) triples; failures {failures:?}"))
    })
}

pub fn lower_oracle_equivalence() -> Outcome {
    timed(3, "lower classes equal exhaustive switching for n <= 7", 600, || {
        let cat = catalogue(7);
        let all: Vec<&Graph> = cat.iter().flatten().collect();
        let bad: Vec<String> = all
            .par_iter()
            .flat_map_iter(|g| {
                LowerClassId::ALL.into_iter().filter_map(move |id| {
                    let want = oracle_lower(g, id.base_class_test()).unwrap();
                    (recognize_lower(g, id) != want)
                        .then(|| format!("{id} {}", switchkit::io::emit_graph6(g)))
                })
            })
            .collect();
        let n = all.len();
        (bad.is_empty(), format!("{n} graphs x {} classes; mismatches {bad:?}", LowerClassId::ALL.len()))
    })
}

pub fn c0_census() -> Outcome {
    timed(4, "lower {C4,C5,C6}-free census for n <= 8", 600, || {
        let cat = catalogue(8);
        let all: Vec<&Graph> = cat.iter().flatten().collect();
        let results: Vec<(bool, bool)> = all
            .par_iter()
            .map(|g| (is_c0_member(g).is_some(), oracle_lower(g, |h| !has_short_hole(h)).unwrap()))
            .collect();
        let accepted = results.iter().filter(|r| r.0).count();
        let wrong = results.iter().filter(|r| r.0 != r.1).count();
        (wrong == 0, format!("{} graphs, {accepted} accepted, {wrong} disagreements", all.len()))
    })
}

pub fn outerplanar_census() -> Outcome {
    timed(5, "lower outerplanar census", 60, || {
        let mut counts = Vec::new();
        let mut agree = true;
        for n in [4, 5] {
            let mut c = 0;
            for g in all_graphs(n).unwrap() {
                let yes = is_lower_outerplanar(&g);
                agree &= yes == oracle_lower(&g, |h| is_outerplanar(h).unwrap()).unwrap();
                c += yes as usize;
            }
            counts.push(c);
        }
        let ok = agree && counts == [8, 4];
        (ok, format!("n=4: {}, n=5: {}, oracle agreement {agree}", counts[0], counts[1]))
    })
}

const UPPER: [UpperClass; 6] = [
    UpperClass::Split,
    UpperClass::PseudoSplit,
    UpperClass::PawFree,
    UpperClass::StarCostar { p: 2, q: 2 },
    UpperClass::Bipartite,
    UpperClass::BipartiteChain,
];

fn upper_mismatch(g: &Graph) -> Vec<String> {
    let mut bad = Vec::new();
    for class in UPPER {
        let fast = class.solve(g).unwrap();
        let slow = oracle_upper(g, |h| class.contains(h)).unwrap();
        let witness_ok = fast.as_ref().is_none_or(|a| class.contains(&g.switch(a)));
        if fast.is_some() != slow.is_some() || !witness_ok {
            bad.push(format!("{class} {}", switchkit::io::emit_graph6(g)));
        }
    }
    bad
}

pub fn upper_oracle_equivalence() -> Outcome {
    timed(6, "upper classes equal exhaustive switching", 1800, || {
        let cat = catalogue(7);
        let small: Vec<&Graph> = cat.iter().flatten().collect();
        let mut bad: Vec<String> = small.par_iter().flat_map_iter(|g| upper_mismatch(g)).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5EED);
        let densities = [0.2, 0.5, 0.8];
        let random: Vec<Graph> = (0..200).map(|i| random_graph(&mut rng, 12, densities[i % 3])).collect();
        bad.extend(random.par_iter().flat_map_iter(upper_mismatch).collect::<Vec<_>>());
        let yes: usize = random
            .iter()
            .map(|g| UPPER.iter().filter(|c| c.solve(g).unwrap().is_some()).count())
            .sum();
        (
            bad.is_empty(),
            format!(
                "{} graphs n <= 7 and 200 random n = 12 ({yes} yes answers) x 6 classes; mismatches {bad:?}",
                small.len()
            ),
        )
    })
}

/// Enumeration half of the completeness check.
pub fn enumeration_mismatches() -> (usize, Vec<String>) {
    let cat = catalogue(8);
    let all: Vec<&Graph> = cat.iter().flatten().collect();
    let bad = all
        .par_iter()
        .flat_map_iter(|g| {
            let mut bad = Vec::new();
            let norm = |sets: Vec<VertexSet>| sets.into_iter().map(|a| a.normalized()).collect::<BTreeSet<_>>();
            let split = norm(oracle_upper_all(g, is_split).unwrap());
            let pseudo = norm(oracle_upper_all(g, switchkit::recognize::is_pseudo_split).unwrap());
            let es = enumerate_upper_split(g);
            let ep = enumerate_upper_pseudo_split(g);
            let g6 = switchkit::io::emit_graph6(g);
            if es.len() != split.len() || norm(es) != split {
                bad.push(format!("split {g6}"));
            }
            if ep.len() != pseudo.len() || norm(ep) != pseudo {
                bad.push(format!("pseudo-split {g6}"));
            }
            bad
        })
        .collect();
    (all.len(), bad)
}

/// Split graphs whose partition count exceeds the order, with the count,
/// and any graph where the library count differs from brute force.
pub struct PartitionBound {
    pub split_graphs: usize,
    pub over_n: Vec<(String, usize, usize)>,
    pub over_n_plus_one: usize,
    pub count_mismatches: usize,
}

pub fn split_partition_bound() -> PartitionBound {
    let cat = catalogue(8);
    let mut r = PartitionBound { split_graphs: 0, over_n: Vec::new(), over_n_plus_one: 0, count_mismatches: 0 };
    for g in cat.iter().flatten().filter(|g| is_split(g)) {
        let n = g.n();
        let count = split_partitions(g).len();
        r.split_graphs += 1;
        if count != brute_split_count(g) {
            r.count_mismatches += 1;
        }
        if count > n {
            r.over_n.push((switchkit::io::emit_graph6(g), n, count));
        }
        if count > n + 1 {
            r.over_n_plus_one += 1;
        }
    }
    r
}

pub fn enumeration_completeness() -> Outcome {
    timed(7, "enumeration completeness and split-partition count", 600, || {
        let (graphs, bad) = enumeration_mismatches();
        let bound = split_partition_bound();
        let over: Vec<String> = bound.over_n.iter().map(|(g6, n, c)| format!("{g6} n={n} has {c}")).collect();
        let ok = bad.is_empty() && bound.count_mismatches == 0 && bound.over_n.is_empty();
        (
            ok,
            format!(
                "enumeration over {graphs} graphs: {} mismatches; {} split graphs, counts match brute force: {}; \
                 at most n partitions violated by {} graphs [{}]; at most n+1 violated by {}",
                bad.len(),
                bound.split_graphs,
                bound.count_mismatches == 0,
                over.len(),
                over.join(", "),
                bound.over_n_plus_one
            ),
        )
    })
}

pub fn density_inequality() -> Outcome {
    timed(8, "density inequality on 1000 balanced switches", 1, || {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let mut worst = i64::MAX;
        let mut bad = 0;
        for _ in 0..1000 {
            let n = rng.gen_range(1..=64);
            let p: f64 = rng.gen();
            let g = random_graph(&mut rng, n, p);
            let mut order: Vec<usize> = (0..n).collect();
            order.shuffle(&mut rng);
            let a = VertexSet::from_indices(n, order[..n / 2].iter().copied()).unwrap();
            let total = (g.edge_count() + g.switch(&a).edge_count()) as i64;
            let bound = ((n / 2) * n.div_ceil(2)) as i64;
            worst = worst.min(total - bound);
            bad += (total < bound) as usize;
        }
        (bad == 0, format!("{bad} violations, smallest slack {worst}"))
    })
}

pub fn long_cycles() -> Outcome {
    timed(9, "C_j is S(C9)-free for j = 10, 11, 12", 60, || {
        let fam = expand_switch_family(&PatternFamily::new([&cycle(9)]).unwrap()).unwrap();
        let mut verdicts = Vec::new();
        for j in 10..=12 {
            let cj = cycle(j);
            let via_family = is_family_free(&cj, &fam);
            let direct = (0..1u64 << 8).all(|m| {
                let h = cycle(9).switch(&VertexSet::from_mask(9, m << 1));
                contains_induced(&cj, &h).is_none()
            });
            verdicts.push(via_family && direct);
        }
        let ok = verdicts.iter().all(|&v| v);
        (ok, format!("|S(C9)| = {}, free for j = 10, 11, 12: {verdicts:?}", fam.len()))
    })
}

fn orderings(items: &[usize]) -> Vec<Vec<usize>> {
    permutations(items.len())
        .into_iter()
        .map(|p| p.iter().map(|&i| items[i]).collect())
        .collect()
}

pub fn p10_equivalence() -> Outcome {
    timed(10, "P10 reduction on every one-clause NAE-5 formula", 600, || {
        let clauses = orderings(&[1, 2, 3, 4, 5]);
        let results: Vec<(usize, usize, bool)> = clauses
            .par_iter()
            .map(|clause| {
                let text = format!(
                    "nae 5 5 1\n{}\n",
                    clause.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
                );
                let f: NaeFormula = text.parse().unwrap();
                let inst = build_p10_instance(&f).unwrap();
                let mut agree = 0;
                for bits in 0..32 {
                    let a = Assignment::from_bits(5, bits);
                    let free = find_pattern(&inst, &a, DEFAULT_BUDGET).unwrap().is_none();
                    agree += (free == nae_eval(&f, &a).unwrap()) as usize;
                }
                (inst.graph.n(), agree, check_invariants(&inst).is_empty())
            })
            .collect();
        let sizes_ok = results.iter().all(|r| r.0 == 55);
        let agree: usize = results.iter().map(|r| r.1).sum();
        let inv_ok = results.iter().all(|r| r.2);
        let total = clauses.len() * 32;
        (
            sizes_ok && inv_ok && agree == total,
            format!("{} clause orderings x 32 assignments: {agree}/{total} agree, 55 vertices each: {sizes_ok}", clauses.len()),
        )
    })
}

pub fn c7_equivalence() -> Outcome {
    timed(11, "C7 reduction on the one-clause instance", 1800, || {
        let f: NaeFormula = "nae 3 3 1\n1 2 3\n".parse().unwrap();
        let inst = build_c7_instance(&f).unwrap();
        let mut agree = 0;
        let mut budget_hit = 0;
        for bits in 0..8 {
            let a = Assignment::from_bits(3, bits);
            match find_pattern(&inst, &a, DEFAULT_BUDGET) {
                Ok(hit) => agree += (hit.is_none() == nae_eval(&f, &a).unwrap()) as usize,
                Err(Error::BudgetExceeded(_)) => budget_hit += 1,
                Err(e) => panic!("{e}"),
            }
        }
        let ok = inst.graph.n() == 199 && agree == 8 && check_invariants(&inst).is_empty();
        (ok, format!("{} vertices, {agree}/8 agree, {budget_hit} over budget", inst.graph.n()))
    })
}

fn random_formula(rng: &mut ChaCha8Rng, k: usize) -> NaeFormula {
    let n = rng.gen_range(k..=k + 3);
    let m = rng.gen_range(1..=3);
    let vars: Vec<usize> = (0..n).collect();
    let clauses = (0..m)
        .map(|_| vars.choose_multiple(rng, k).copied().collect())
        .collect();
    NaeFormula::new(n, k, clauses).unwrap()
}

pub fn construction_invariants() -> Outcome {
    timed(12, "construction invariants on 20 random formulas", 300, || {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let mut problems = Vec::new();
        for i in 0..20 {
            let target = if i % 2 == 0 { Target::P10 } else { Target::C7 };
            let f = random_formula(&mut rng, target.arity());
            let inst = build_instance(&f, target).unwrap();
            let want = f.num_vars() + target.clause_size() * f.clauses().len();
            if inst.graph.n() != want {
                problems.push(format!("{target:?} size {} != {want}", inst.graph.n()));
            }
            problems.extend(check_invariants(&inst).into_iter().map(|p| format!("{target:?}: {p}")));
        }
        (problems.is_empty(), format!("10 P10 and 10 C7 instances; problems {problems:?}"))
    })
}

pub fn all() -> Vec<Outcome> {
    vec![
        switching_class_goldens(),
        switching_algebra(),
        lower_oracle_equivalence(),
        c0_census(),
        outerplanar_census(),
        upper_oracle_equivalence(),
        enumeration_completeness(),
        density_inequality(),
        long_cycles(),
        p10_equivalence(),
        c7_equivalence(),
        construction_invariants(),
    ]
}

fn main() {
    let outcomes = all();
    for o in &outcomes {
        println!("{}", o.line());
    }
    let failed = outcomes.iter().filter(|o| !o.pass).count();
    println!("{} of {} passed", outcomes.len() - failed, outcomes.len());
    if failed > 0 {
        std::process::exit(1);
    }
}

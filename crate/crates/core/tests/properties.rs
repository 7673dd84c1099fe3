use proptest::prelude::*;

use switchkit::canon::{canonical_form, switching_class};
use switchkit::io::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6};
use switchkit::lower::{recognize_lower, LowerClassId};
use switchkit::sat::NaeFormula;
use switchkit::upper::UpperClass;
use switchkit::{Graph, VertexSet};

fn graph_on(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[k] {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn graph(max: usize) -> impl Strategy<Value = Graph> {
    (0..=max).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |b| graph_on(n, &b))
    })
}

fn graph_and_set(max: usize) -> impl Strategy<Value = (Graph, VertexSet)> {
    graph(max).prop_flat_map(|g| {
        let n = g.n();
        prop::collection::vec(any::<bool>(), n).prop_map(move |m| {
            let a = VertexSet::from_indices(n, (0..n).filter(|&i| m[i])).unwrap();
            (g.clone(), a)
        })
    })
}

fn set_over(n: usize, mask: &[bool]) -> VertexSet {
    VertexSet::from_indices(n, (0..n).filter(|&i| mask[i])).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn switching_algebra((g, a) in graph_and_set(90), seed in prop::collection::vec(any::<bool>(), 90)) {
        let n = g.n();
        let b = set_over(n, &seed[..n]);
        let ga = g.switch(&a);
        prop_assert_eq!(&ga, &g.switch(&a.complement()));
        prop_assert_eq!(&ga.switch(&a), &g);
        prop_assert_eq!(ga.switch(&b), g.switch(&a.symmetric_difference(&b)));
        prop_assert_eq!(ga.switch(&b), g.switch(&b).switch(&a));
        prop_assert_eq!(ga.complement(), g.complement().switch(&a));
    }

    #[test]
    fn induced_subgraphs_commute_with_switching((g, a) in graph_and_set(40), seed in prop::collection::vec(any::<bool>(), 40)) {
        let u = set_over(g.n(), &seed[..g.n()]);
        prop_assert_eq!(g.switch(&a).induced(&u), g.induced(&u).switch(&a.restrict_to(&u)));
    }

    #[test]
    fn balanced_switches_are_dense((g, _a) in graph_and_set(64), order in Just(()).prop_perturb(|_, mut rng| {
        let mut v: Vec<usize> = (0..64).collect();
        for i in (1..64).rev() {
            v.swap(i, (rng.next_u32() as usize) % (i + 1));
        }
        v
    })) {
        let n = g.n();
        let picked: Vec<usize> = order.iter().copied().filter(|&v| v < n).take(n / 2).collect();
        let a = VertexSet::from_indices(n, picked).unwrap();
        let total = g.edge_count() + g.switch(&a).edge_count();
        prop_assert!(total >= (n / 2) * n.div_ceil(2));
    }

    #[test]
    fn graph6_round_trip(g in graph(70)) {
        prop_assert_eq!(parse_graph6(&emit_graph6(&g)).unwrap(), g.clone());
        prop_assert_eq!(parse_edge_list(&emit_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels(g in graph(9), perm in Just(()).prop_perturb(|_, mut rng| {
        let mut v: Vec<usize> = (0..9).collect();
        for i in (1..9).rev() {
            v.swap(i, (rng.next_u32() as usize) % (i + 1));
        }
        v
    })) {
        let p: Vec<usize> = perm.into_iter().filter(|&v| v < g.n()).collect();
        let h = g.permuted(&p);
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn switching_class_is_shared((g, a) in graph_and_set(7)) {
        let ca: Vec<_> = switching_class(&g).unwrap().forms().cloned().collect();
        let cb: Vec<_> = switching_class(&g.switch(&a)).unwrap().forms().cloned().collect();
        prop_assert_eq!(ca, cb);
    }

    #[test]
    fn lower_classes_are_switching_closed((g, a) in graph_and_set(9)) {
        let h = g.switch(&a);
        for id in LowerClassId::ALL {
            prop_assert_eq!(recognize_lower(&g, id), recognize_lower(&h, id), "{}", id);
        }
    }

    #[test]
    fn lower_classes_are_hereditary(g in graph(9), drop in 0usize..9) {
        prop_assume!(g.n() > 0);
        let mut keep = g.vertices();
        keep.remove(drop % g.n());
        let sub = g.induced(&keep);
        for id in LowerClassId::ALL {
            if recognize_lower(&g, id) {
                prop_assert!(recognize_lower(&sub, id), "{} not hereditary", id);
            }
        }
    }

    #[test]
    fn upper_answers_are_switching_invariant((g, a) in graph_and_set(11)) {
        let h = g.switch(&a);
        for class in [
            UpperClass::Split,
            UpperClass::PseudoSplit,
            UpperClass::PawFree,
            UpperClass::StarCostar { p: 2, q: 2 },
            UpperClass::Bipartite,
            UpperClass::BipartiteChain,
        ] {
            let x = class.solve(&g).unwrap();
            let y = class.solve(&h).unwrap();
            prop_assert_eq!(x.is_some(), y.is_some(), "{}", class);
            if let Some(w) = x {
                prop_assert!(class.contains(&g.switch(&w)));
            }
        }
    }

    #[test]
    fn formula_text_round_trip(k in 3usize..6, extra in 0usize..4, clauses in prop::collection::vec(any::<u64>(), 1..5)) {
        let n = k + extra;
        let cl: Vec<Vec<usize>> = clauses
            .iter()
            .map(|&seed| {
                let mut vars: Vec<usize> = (0..n).collect();
                let mut s = seed;
                for i in (1..n).rev() {
                    vars.swap(i, (s % (i as u64 + 1)) as usize);
                    s /= i as u64 + 1;
                }
                vars.truncate(k);
                vars
            })
            .collect();
        let f = NaeFormula::new(n, k, cl).unwrap();
        prop_assert_eq!(f.to_string().parse::<NaeFormula>().unwrap(), f);
    }
}

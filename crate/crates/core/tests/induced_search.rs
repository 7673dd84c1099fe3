use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use switchkit::search::{find_induced_cycle, find_induced_path, induces_sequence};
use switchkit::Graph;

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Whether some `k`-subset induces a path (or cycle), by checking degrees
/// and connectivity of every subset.
fn naive(g: &Graph, k: usize, cycle: bool) -> bool {
    let n = g.n();
    (0..1u64 << n).filter(|m| m.count_ones() as usize == k).any(|m| {
        let degs: Vec<u32> = (0..n).filter(|v| m >> v & 1 == 1).map(|v| (g.row_mask(v) & m).count_ones()).collect();
        let edges: u32 = degs.iter().sum::<u32>() / 2;
        let shape = if cycle {
            degs.iter().all(|&d| d == 2)
        } else {
            edges as usize == k - 1 && degs.iter().all(|&d| d <= 2)
        };
        if !shape {
            return false;
        }
        let mut seen = 1u64 << m.trailing_zeros();
        loop {
            let mut next = seen;
            for v in 0..n {
                if seen >> v & 1 == 1 {
                    next |= g.row_mask(v) & m;
                }
            }
            if next == seen {
                break;
            }
            seen = next;
        }
        seen == m
    })
}

#[test]
fn path_and_cycle_search_match_subset_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for round in 0..150 {
        let n = rng.gen_range(3..=14);
        let p = [0.15, 0.3, 0.5, 0.7][round % 4];
        let g = random_graph(&mut rng, n, p);
        for k in 2..=n {
            let path = find_induced_path(&g, k).unwrap();
            assert_eq!(path.is_some(), naive(&g, k, false), "P{k} in {g:?}");
            if let Some(seq) = path {
                assert!(induces_sequence(&g, &seq, false));
            }
            if k >= 3 {
                let cyc = find_induced_cycle(&g, k).unwrap();
                assert_eq!(cyc.is_some(), naive(&g, k, true), "C{k} in {g:?}");
                if let Some(seq) = cyc {
                    assert!(induces_sequence(&g, &seq, true));
                }
            }
        }
    }
}

#[test]
fn searches_are_deterministic() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let g = random_graph(&mut rng, 40, 0.1);
    assert_eq!(find_induced_path(&g, 9).unwrap(), find_induced_path(&g, 9).unwrap());
    assert_eq!(find_induced_cycle(&g, 7).unwrap(), find_induced_cycle(&g, 7).unwrap());
}

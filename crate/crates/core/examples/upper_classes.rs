//! The dedicated upper-class algorithms against exhaustive search.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use switchkit::oracle::oracle_upper;
use switchkit::upper::UpperClass;
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
    Graph::from_edges(n, &edges).expect("edges in range")
}

fn main() -> switchkit::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let classes = [
        UpperClass::Split,
        UpperClass::PseudoSplit,
        UpperClass::PawFree,
        UpperClass::StarCostar { p: 2, q: 2 },
        UpperClass::Bipartite,
        UpperClass::BipartiteChain,
    ];
    for density in [0.2, 0.5, 0.8] {
        let g = random_graph(&mut rng, 7, density);
        for class in classes {
            let fast = class.solve(&g)?;
            let slow = oracle_upper(&g, |h| class.contains(h))?;
            assert_eq!(fast.is_some(), slow.is_some());
            let shown = fast.map_or("none".to_string(), |a| format!("{{{a}}}"));
            println!("p={density} {:24} {shown}", class.to_string());
        }
    }
    Ok(())
}

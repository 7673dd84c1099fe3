//! A graph and any balanced switch of it together carry many edges.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use switchkit::{Graph, VertexSet};

fn main() -> switchkit::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in [8, 16, 33, 64] {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.1) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, &edges)?;
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        let a = VertexSet::from_indices(n, order[..n / 2].iter().copied())?;
        let total = g.edge_count() + g.switch(&a).edge_count();
        let bound = (n / 2) * n.div_ceil(2);
        println!("n={n:2} |E(G)|+|E(S(G,A))| = {total:4} >= {bound}");
        assert!(total >= bound);
    }
    Ok(())
}

//! Switching a graph and the basic algebra of switching sets.

use switchkit::io::emit_graph6;
use switchkit::patterns::cycle;
use switchkit::{Graph, VertexSet};

fn main() -> switchkit::Result<()> {
    let c4 = cycle(4);
    let opposite = VertexSet::from_indices(4, [0, 2])?;
    let h = c4.switch(&opposite);
    println!("C4 switched at {{{opposite}}}: {} ({} edges)", emit_graph6(&h), h.edge_count());

    // switching by A and by its complement agree
    let same = c4.switch(&opposite.complement());
    assert_eq!(h, same);

    // two switches compose into one by the symmetric difference
    let a = VertexSet::from_indices(4, [1])?;
    let b = VertexSet::from_indices(4, [1, 2])?;
    assert_eq!(c4.switch(&a).switch(&b), c4.switch(&a.symmetric_difference(&b)));

    let k5 = Graph::complete(5);
    for k in 0..=2 {
        let a = VertexSet::from_indices(5, 0..k)?;
        println!("K5 switched at {k} vertices has {} edges", k5.switch(&a).edge_count());
    }
    Ok(())
}

//! Switching classes of small graphs, up to isomorphism.

use std::collections::BTreeMap;

use switchkit::canon::{all_graphs, are_switching_equivalent, switching_class};
use switchkit::io::emit_graph6;
use switchkit::patterns::{cycle, named};

fn main() -> switchkit::Result<()> {
    for k in [4, 5, 6] {
        let class = switching_class(&cycle(k))?;
        let members: Vec<String> = class.graphs().map(emit_graph6).collect();
        println!("S(C{k}) has {} members: {}", class.len(), members.join(" "));
    }

    let bull = named("bull")?;
    println!("bull ~ C5: {}", are_switching_equivalent(&bull, &cycle(5))?);

    let mut sizes: BTreeMap<String, usize> = BTreeMap::new();
    for g in all_graphs(4)? {
        let class = switching_class(&g)?;
        let key = class.forms().next().map(|f| format!("{:?}", f.as_bytes())).unwrap_or_default();
        sizes.insert(key, class.len());
    }
    let mut counts: Vec<usize> = sizes.into_values().collect();
    counts.sort();
    println!("order-4 class sizes: {counts:?}");
    Ok(())
}

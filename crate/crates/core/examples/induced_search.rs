//! Induced subgraph search, including long induced paths and cycles.

use switchkit::patterns::{cycle, named, path};
use switchkit::search::{contains_induced, find_induced_cycle, find_induced_path, induces_sequence};

fn main() -> switchkit::Result<()> {
    let g = named("c9+p4")?;
    let paw = named("paw")?;
    println!("paw in C9+P4: {:?}", contains_induced(&g, &paw));
    println!("P4 in C9+P4: {:?}", contains_induced(&g, &path(4)));

    let seq = find_induced_path(&g, 8)?.expect("C9 holds a P8");
    assert!(induces_sequence(&g, &seq, false));
    println!("induced P8: {seq:?}");

    for k in [9, 10] {
        println!("induced C{k} in C9+P4: {:?}", find_induced_cycle(&g, k)?);
    }

    let big = cycle(12);
    println!("C12 has induced P11: {}", find_induced_path(&big, 11)?.is_some());
    Ok(())
}

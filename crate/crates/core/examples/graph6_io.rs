//! Reading and writing graph6 and edge lists.

use switchkit::io::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6};
use switchkit::patterns::named;

fn main() -> switchkit::Result<()> {
    let petersen = parse_graph6("IheA@GUAo")?;
    println!("petersen: {} vertices, {} edges", petersen.n(), petersen.edge_count());

    let house = named("house")?;
    let text = emit_edge_list(&house);
    print!("{text}");
    let back = parse_edge_list(&text)?;
    assert_eq!(emit_graph6(&back), emit_graph6(&house));

    match parse_graph6(">>graph6<<D~{") {
        Ok(g) => println!("with header: {}", emit_graph6(&g)),
        Err(e) => println!("rejected: {e}"),
    }
    if let Err(e) = parse_graph6("Dx") {
        println!("truncated input: {e}");
    }
    Ok(())
}

//! Minor containment and outerplanarity on small graphs.

use switchkit::lower::is_lower_outerplanar;
use switchkit::minor::{has_minor, is_outerplanar};
use switchkit::patterns::{complete_bipartite, cycle, named};
use switchkit::Graph;

fn main() -> switchkit::Result<()> {
    let k4 = Graph::complete(4);
    for name in ["w5", "house", "k2_3", "domino"] {
        let g = named(name)?;
        println!(
            "{name:7} K4 minor {:5} K2,3 minor {:5} outerplanar {}",
            has_minor(&g, &k4)?,
            has_minor(&g, &complete_bipartite(2, 3))?,
            is_outerplanar(&g)?
        );
    }
    println!("every switch of C5 outerplanar: {}", is_lower_outerplanar(&cycle(5)));
    println!("every switch of the net outerplanar: {}", is_lower_outerplanar(&named("net")?));
    Ok(())
}

//! (p,q)-split partitions and switching into star/co-star free graphs.

use switchkit::patterns::named;
use switchkit::recognize::is_star_costar_free;
use switchkit::upper::{pq_split_partitions, upper_star_costar};

fn main() -> switchkit::Result<()> {
    let g = named("c5+k1")?;
    for (p, q) in [(1, 1), (2, 1), (2, 2)] {
        let parts = pq_split_partitions(&g, p, q)?;
        println!("({p},{q})-split partitions of C5+K1: {}", parts.len());
    }
    for name in ["claw", "k1_4", "net", "co-k1_4+k1"] {
        let g = named(name)?;
        match upper_star_costar(&g, 2, 2)? {
            Some(a) => {
                assert!(is_star_costar_free(&g.switch(&a), 2, 2));
                println!("{name}: switch at {{{a}}}");
            }
            None => println!("{name}: none"),
        }
    }
    Ok(())
}

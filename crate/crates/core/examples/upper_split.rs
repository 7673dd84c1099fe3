//! Switching into a split graph, and listing every way to do it.

use switchkit::oracle::oracle_upper_all;
use switchkit::patterns::{cycle, named};
use switchkit::recognize::{is_split, split_partitions};
use switchkit::upper::{enumerate_upper_split, upper_split};

fn main() -> switchkit::Result<()> {
    for (name, g) in [("c4", cycle(4)), ("c5", cycle(5)), ("2k2+k1", named("2k2+k1")?)] {
        match upper_split(&g) {
            Some(a) => {
                let h = g.switch(&a);
                println!("{name}: switch at {{{a}}}, {} split partitions", split_partitions(&h).len());
                assert!(is_split(&h));
            }
            None => println!("{name}: no split switch"),
        }
        let all = enumerate_upper_split(&g);
        let brute: Vec<_> = oracle_upper_all(&g, is_split)?
            .into_iter()
            .map(|a| a.normalized())
            .collect();
        assert_eq!(all.len(), brute.len());
        let shown: Vec<String> = all.iter().map(|a| format!("{{{a}}}")).collect();
        println!("  all solutions: {}", shown.join(" "));
    }
    Ok(())
}

//! Brute-force switching search, sequential and parallel.

use switchkit::family::{is_family_free, PatternFamily};
use switchkit::oracle::{oracle_lower, oracle_lower_par, oracle_upper, oracle_upper_all, oracle_upper_par};
use switchkit::patterns::named;
use switchkit::Graph;

fn main() -> switchkit::Result<()> {
    let holes = PatternFamily::from_names(&["c4", "c5", "c6"])?;
    let free = |g: &Graph| is_family_free(g, &holes);

    for name in ["c4+k1", "c5+k2", "c4+c4", "house+p3"] {
        let g = named(name)?;
        let a = oracle_upper(&g, free)?;
        assert_eq!(a, oracle_upper_par(&g, free)?);
        let count = oracle_upper_all(&g, free)?.len();
        let shown = a.map_or("none".to_string(), |a| format!("{{{a}}}"));
        println!("{name:8} first hole-free switch {shown}, {count} in total");
    }

    for name in ["p4", "k3+k1", "c4", "p3+k1"] {
        let g = named(name)?;
        let all = oracle_lower(&g, free)?;
        assert_eq!(all, oracle_lower_par(&g, free)?);
        println!("{name:8} every switch hole-free: {all}");
    }
    Ok(())
}

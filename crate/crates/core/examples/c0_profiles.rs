//! Profiles: chains of cliques, and the forms that describe lower chordal graphs.

use switchkit::lower::{is_c0_member, C0_FAMILIES};
use switchkit::profile::{match_profile_family, profile_graph, Profile};

fn main() -> switchkit::Result<()> {
    let p: Profile = "(2,1,3)".parse()?;
    let g = profile_graph(&p)?;
    println!("{p}: {} vertices, {} edges", g.n(), g.edge_count());

    for form in C0_FAMILIES {
        let fam: Profile = form.parse()?;
        match match_profile_family(&g, &fam) {
            Some(m) => println!("  matches {form} as {m}"),
            None => println!("  not {form}"),
        }
    }

    for text in ["(1,1,1,1)", "(2,0,2)", "(1,2,2,1)"] {
        let g = profile_graph(&text.parse()?)?;
        let verdict = is_c0_member(&g).map_or("outside".to_string(), |m| format!("member as {m}"));
        println!("{text}: {verdict}");
    }
    Ok(())
}

//! NAE-3-SAT to switching into a C7-free graph, with padding from smaller arity.

use switchkit::sat::{build_c7_instance, find_pattern, nae_eval, pad_nae, Assignment, NaeFormula};
use switchkit::search::DEFAULT_BUDGET;

fn main() -> switchkit::Result<()> {
    let f: NaeFormula = "nae 3 3 1\n1 2 3\n".parse()?;
    let inst = build_c7_instance(&f)?;
    println!("one clause -> {} vertices", inst.graph.n());
    for bits in 0..8 {
        let a = Assignment::from_bits(3, bits);
        let hit = find_pattern(&inst, &a, DEFAULT_BUDGET)?;
        println!("{a}: nae {:5} induced C7 {:?}", nae_eval(&f, &a)?, hit);
    }

    let wide = pad_nae(&f)?;
    println!("padded: arity {}, {} variables, {} clauses", wide.arity(), wide.num_vars(), wide.clauses().len());
    println!("{}", inst.roles_json().lines().take(6).collect::<Vec<_>>().join("\n"));
    Ok(())
}

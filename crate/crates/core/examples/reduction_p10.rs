//! NAE-SAT to switching into a P10-free graph.

use switchkit::sat::{build_p10_instance, check_invariants, nae_eval, verify_instance, Assignment, NaeFormula};

fn main() -> switchkit::Result<()> {
    let f: NaeFormula = "nae 5 6 2\n1 2 3 4 5\n2 3 4 5 6\n".parse()?;
    let inst = build_p10_instance(&f)?;
    println!("{} variables, {} clauses -> {} vertices", f.num_vars(), f.clauses().len(), inst.graph.n());
    assert!(check_invariants(&inst).is_empty());

    for bits in [0b000000, 0b000001, 0b010101, 0b111110] {
        let a = Assignment::from_bits(f.num_vars(), bits);
        let nae = nae_eval(&f, &a)?;
        let free = verify_instance(&inst, &a)?;
        println!("{a}: nae {nae:5} P10-free after switching {free}");
        assert_eq!(nae, free);
    }
    Ok(())
}

//! Recognising lower switching classes, with the exhaustive check alongside.

use switchkit::lower::{lower_profile, recognize_lower, LowerClassId};
use switchkit::oracle::oracle_lower;
use switchkit::patterns::{cycle, named};

fn main() -> switchkit::Result<()> {
    let samples = [("p4", named("p4")?), ("c5", cycle(5)), ("k3_3", named("k3_3")?), ("house", named("house")?)];
    for (name, g) in &samples {
        let mut hits = Vec::new();
        for id in LowerClassId::ALL {
            let yes = recognize_lower(g, id);
            assert_eq!(yes, oracle_lower(g, id.base_class_test())?);
            if yes {
                match lower_profile(g, id) {
                    Some(p) => hits.push(format!("{id}{p}")),
                    None => hits.push(id.to_string()),
                }
            }
        }
        println!("{name:6} {}", hits.join(" "));
    }
    Ok(())
}

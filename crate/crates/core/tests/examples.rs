use std::path::PathBuf;
use std::process::Command;

// cargo test builds the examples next to the deps directory
fn example_binary(name: &str) -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().unwrap().parent().unwrap();
    profile_dir.join("examples").join(format!("{name}{}", std::env::consts::EXE_SUFFIX))
}

fn run(name: &str) -> String {
    let path = example_binary(name);
    let out = Command::new(&path)
        .output()
        .unwrap_or_else(|e| panic!("cannot start {}: {e}", path.display()));
    assert!(out.status.success(), "{name} failed:\n{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn every_example_runs() {
    for name in [
        "switching",
        "switching_classes",
        "lower_classes",
        "c0_profiles",
        "upper_split",
        "upper_classes",
        "star_costar",
        "exhaustive_oracle",
        "graph6_io",
        "induced_search",
        "minors",
        "reduction_p10",
        "reduction_c7",
        "density_bound",
        "cli_driver",
    ] {
        assert!(!run(name).is_empty(), "{name} printed nothing");
    }
}

#[test]
fn switching_classes_example_output() {
    let out = run("switching_classes");
    assert!(out.contains("S(C4) has 3 members"));
    assert!(out.contains("order-4 class sizes: [3, 3, 5]"));
}

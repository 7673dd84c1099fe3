//! Driving the command-line interface in process.

use switchkit::cli::run;

fn show(args: &[&str], input: &str) {
    let mut argv = vec!["switchkit"];
    argv.extend_from_slice(args);
    let out = run(argv, input);
    println!("$ switchkit {} -> exit {}", args.join(" "), out.code);
    print!("{}{}", out.stdout, out.stderr);
}

fn main() {
    show(&["switch", "--set", "0,2"], "Cl\n");
    show(&["upper", "split"], "Cl\n");
    show(&["upper", "split", "--enumerate", "--json"], "Cl\n");
    show(&["lower", "chordal"], "Bw\nCl\n");
    show(&["oracle", "upper", "free:paw,c4"], "Cl\n");
    show(&["verify", "c7", "--assignment", "TFF"], "nae 3 3 1\n1 2 3\n");
    show(&["lower", "chordal"], "not graph6\n");
}

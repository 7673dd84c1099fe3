//! Command-line driver.
//!
//! Exit codes: 0 when every input is decided yes, 1 when some input is
//! decided no, 2 for usage or input errors, 3 when a size limit or search
//! budget is hit. Graphs are read as graph6, one per line, from stdin or
//! `--file`; `--format edges` reads a single edge-list graph instead.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::canon::{are_switching_equivalent, switching_class};
use crate::error::{Error, Result};
use crate::family::{is_family_free, PatternFamily};
use crate::graph::{Graph, VertexSet};
use crate::io::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6};
use crate::lower::{lower_profile, recognize_lower, LowerClassId};
use crate::oracle::{oracle_lower, oracle_lower_par, oracle_upper, oracle_upper_all, oracle_upper_par};
use crate::patterns::{named, PATTERN_NAMES};
use crate::sat::{
    build_instance, find_pattern, nae_eval, pad_nae, Assignment, NaeFormula, Target,
};
use crate::search::DEFAULT_BUDGET;
use crate::upper::UpperClass;

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "switchkit", version, about = "Seidel switching toolkit")]
pub struct Cli {
    /// Emit JSON, one object per input
    #[arg(long, global = true)]
    pub json: bool,

    /// Graph encoding for input and output
    #[arg(long, global = true, value_enum, default_value_t = Format::G6)]
    pub format: Format,

    /// Read input from a file instead of stdin
    #[arg(long, global = true)]
    pub file: Option<String>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    G6,
    Edges,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OracleKind {
    Upper,
    Lower,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TargetArg {
    P10,
    C7,
}

impl From<TargetArg> for Target {
    fn from(t: TargetArg) -> Target {
        match t {
            TargetArg::P10 => Target::P10,
            TargetArg::C7 => Target::C7,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Switch each graph with respect to a vertex set
    Switch {
        /// Comma-separated vertices, e.g. 0,2
        #[arg(long, default_value = "")]
        set: String,
    },
    /// List the switching class, or test equivalence with another graph
    Class {
        #[arg(long)]
        with: Option<String>,
    },
    /// Decide membership in a lower switching class
    Lower {
        class: String,
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        parallel: bool,
    },
    /// Find a switch into the target class
    Upper {
        class: String,
        #[arg(long, default_value_t = 2)]
        p: usize,
        #[arg(long, default_value_t = 2)]
        q: usize,
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        parallel: bool,
        /// List every solution (split and pseudo-split only)
        #[arg(long)]
        enumerate: bool,
    },
    /// Exhaustive search over all switches
    Oracle {
        kind: OracleKind,
        /// A class name, or `free:` followed by comma-separated patterns
        predicate: String,
        #[arg(long, default_value_t = 2)]
        p: usize,
        #[arg(long, default_value_t = 2)]
        q: usize,
        #[arg(long)]
        all: bool,
        #[arg(long)]
        parallel: bool,
    },
    /// Build the switching instance of an NAE formula
    Reduce {
        target: TargetArg,
        /// Pad clauses up to the arity the construction needs
        #[arg(long)]
        pad: bool,
    },
    /// Check assignments against the built instance
    Verify {
        target: TargetArg,
        /// One assignment such as TFTFF; all assignments when omitted
        #[arg(long)]
        assignment: Option<String>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        pad: bool,
    },
    /// List named patterns, or print one
    Patterns { name: Option<String> },
}

/// Result of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` (including the program name) and runs it on `input`.
/// `input` is used unless `--file` is given.
pub fn run<I, S>(argv: I, input: &str) -> Output
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    run_with(argv, || Ok(input.to_string()))
}

/// Like [`run`], calling `read_input` only for commands that consume input.
pub fn run_with<I, S, R>(argv: I, read_input: R) -> Output
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
    R: FnOnce() -> std::io::Result<String>,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Output { code: EXIT_YES, stdout: text, stderr: String::new() }
            };
        }
    };
    let text = if matches!(cli.command, Command::Patterns { .. }) {
        Ok(String::new())
    } else {
        match &cli.file {
            Some(path) => std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}")),
            None => read_input().map_err(|e| format!("cannot read input: {e}")),
        }
    };
    let text = match text {
        Ok(t) => t,
        Err(msg) => return failure(EXIT_USAGE, msg),
    };
    let mut out = Output::default();
    match execute(&cli, &text, &mut out) {
        Ok(code) => out.code = code,
        Err(e) => {
            out.code = error_code(&e);
            let _ = writeln!(out.stderr, "error: {e}");
        }
    }
    out
}

fn failure(code: i32, msg: String) -> Output {
    Output { code, stdout: String::new(), stderr: format!("error: {msg}\n") }
}

pub fn error_code(e: &Error) -> i32 {
    match e {
        Error::TooLarge { .. } | Error::BudgetExceeded(_) => EXIT_LIMIT,
        _ => EXIT_USAGE,
    }
}

fn read_graphs(cli: &Cli, text: &str) -> Result<Vec<Graph>> {
    match cli.format {
        Format::Edges => Ok(vec![parse_edge_list(text)?]),
        Format::G6 => {
            let graphs = text
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .map(parse_graph6)
                .collect::<Result<Vec<_>>>()?;
            if graphs.is_empty() {
                return Err(Error::MalformedGraph6("no input graph".into()));
            }
            Ok(graphs)
        }
    }
}

fn show_graph(cli: &Cli, g: &Graph) -> String {
    match cli.format {
        Format::G6 => emit_graph6(g),
        Format::Edges => emit_edge_list(g).trim_end().to_string(),
    }
}

/// Witness text: ascending comma-separated indices, `{}` for the empty set.
pub fn show_set(a: &VertexSet) -> String {
    if a.is_empty() {
        "{}".to_string()
    } else {
        a.to_string()
    }
}

fn parse_set(n: usize, text: &str) -> Result<VertexSet> {
    let items = text
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| Error::InvalidParameter(format!("bad vertex {s:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    VertexSet::from_indices(n, items)
}

fn emit(out: &mut Output, cli: &Cli, value: Value, text: String) {
    if cli.json {
        out.stdout.push_str(&value.to_string());
    } else {
        out.stdout.push_str(&text);
    }
    out.stdout.push('\n');
}

fn verdict(all_yes: bool) -> i32 {
    if all_yes {
        EXIT_YES
    } else {
        EXIT_NO
    }
}

fn upper_class(name: &str, p: usize, q: usize) -> Result<UpperClass> {
    Ok(match name.parse::<UpperClass>()? {
        UpperClass::StarCostar { .. } => UpperClass::StarCostar { p, q },
        other => other,
    })
}

type Predicate = Box<dyn Fn(&Graph) -> bool + Sync>;

fn predicate(text: &str, p: usize, q: usize) -> Result<Predicate> {
    if let Some(list) = text.strip_prefix("free:") {
        let names: Vec<&str> = list.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
        if names.is_empty() {
            return Err(Error::InvalidParameter("empty pattern list".into()));
        }
        let fam = PatternFamily::from_names(&names)?;
        return Ok(Box::new(move |g| is_family_free(g, &fam)));
    }
    if let Ok(class) = upper_class(text, p, q) {
        return Ok(Box::new(move |g| class.contains(g)));
    }
    let id: LowerClassId = text.parse()?;
    let test = id.base_class_test();
    Ok(Box::new(test))
}

fn execute(cli: &Cli, text: &str, out: &mut Output) -> Result<i32> {
    match &cli.command {
        Command::Switch { set } => {
            for g in read_graphs(cli, text)? {
                let a = parse_set(g.n(), set)?;
                let h = g.switch(&a);
                let shown = show_graph(cli, &h);
                emit(out, cli, json!({ "set": a.to_vec(), "graph": shown }), shown.clone());
            }
            Ok(EXIT_YES)
        }
        Command::Class { with } => {
            let other = with.as_deref().map(parse_graph6).transpose()?;
            let mut all_yes = true;
            for g in read_graphs(cli, text)? {
                match &other {
                    Some(h) => {
                        let eq = g.n() == h.n() && are_switching_equivalent(&g, h)?;
                        all_yes &= eq;
                        let word = if eq { "yes" } else { "no" };
                        emit(out, cli, json!({ "equivalent": eq }), word.to_string());
                    }
                    None => {
                        let class = switching_class(&g)?;
                        let members: Vec<String> = class.graphs().map(|h| show_graph(cli, h)).collect();
                        let text = members.join("\n");
                        emit(out, cli, json!({ "size": members.len(), "members": members }), text);
                    }
                }
            }
            Ok(verdict(all_yes))
        }
        Command::Lower { class, oracle, parallel } => {
            let id: LowerClassId = class.parse()?;
            let mut all_yes = true;
            for g in read_graphs(cli, text)? {
                let yes = if *oracle {
                    let test = id.base_class_test();
                    if *parallel {
                        oracle_lower_par(&g, test)?
                    } else {
                        oracle_lower(&g, test)?
                    }
                } else {
                    recognize_lower(&g, id)
                };
                all_yes &= yes;
                let profile = if yes && !*oracle {
                    lower_profile(&g, id).map(|p| p.to_string())
                } else {
                    None
                };
                let mut line = if yes { "yes".to_string() } else { "no".to_string() };
                if let Some(p) = &profile {
                    line.push(' ');
                    line.push_str(p);
                }
                emit(out, cli, json!({ "class": id.name(), "member": yes, "profile": profile }), line);
            }
            Ok(verdict(all_yes))
        }
        Command::Upper { class, p, q, oracle, parallel, enumerate } => {
            let class = upper_class(class, *p, *q)?;
            let mut all_yes = true;
            for g in read_graphs(cli, text)? {
                if *enumerate {
                    let sols = if *oracle {
                        oracle_upper_all(&g, |h| class.contains(h))?
                            .into_iter()
                            .map(|a| a.normalized())
                            .collect::<std::collections::BTreeSet<_>>()
                            .into_iter()
                            .collect()
                    } else {
                        class.enumerate(&g).ok_or_else(|| {
                            Error::InvalidParameter(format!("{} has no enumeration", class.name()))
                        })?
                    };
                    all_yes &= !sols.is_empty();
                    let shown: Vec<String> = sols.iter().map(show_set).collect();
                    let text = if shown.is_empty() { "none".to_string() } else { shown.join("\n") };
                    let sets: Vec<Vec<usize>> = sols.iter().map(VertexSet::to_vec).collect();
                    emit(out, cli, json!({ "class": class.to_string(), "solutions": sets }), text);
                    continue;
                }
                let found = if *oracle {
                    let pred = |h: &Graph| class.contains(h);
                    if *parallel {
                        oracle_upper_par(&g, pred)?
                    } else {
                        oracle_upper(&g, pred)?
                    }
                } else {
                    class.solve(&g)?
                };
                all_yes &= found.is_some();
                let text = found.as_ref().map_or("none".to_string(), show_set);
                let witness = found.as_ref().map(VertexSet::to_vec);
                emit(out, cli, json!({ "class": class.to_string(), "witness": witness }), text);
            }
            Ok(verdict(all_yes))
        }
        Command::Oracle { kind, predicate: pred_text, p, q, all, parallel } => {
            let pred = predicate(pred_text, *p, *q)?;
            let mut all_yes = true;
            for g in read_graphs(cli, text)? {
                match kind {
                    OracleKind::Lower => {
                        let yes = if *parallel {
                            oracle_lower_par(&g, &pred)?
                        } else {
                            oracle_lower(&g, &pred)?
                        };
                        all_yes &= yes;
                        let word = if yes { "yes" } else { "no" };
                        emit(out, cli, json!({ "member": yes }), word.to_string());
                    }
                    OracleKind::Upper if *all => {
                        let sols = oracle_upper_all(&g, &pred)?;
                        all_yes &= !sols.is_empty();
                        let shown: Vec<String> = sols.iter().map(show_set).collect();
                        let text = if shown.is_empty() { "none".to_string() } else { shown.join("\n") };
                        let sets: Vec<Vec<usize>> = sols.iter().map(VertexSet::to_vec).collect();
                        emit(out, cli, json!({ "solutions": sets }), text);
                    }
                    OracleKind::Upper => {
                        let found = if *parallel {
                            oracle_upper_par(&g, &pred)?
                        } else {
                            oracle_upper(&g, &pred)?
                        };
                        all_yes &= found.is_some();
                        let text = found.as_ref().map_or("none".to_string(), show_set);
                        let witness = found.as_ref().map(VertexSet::to_vec);
                        emit(out, cli, json!({ "witness": witness }), text);
                    }
                }
            }
            Ok(verdict(all_yes))
        }
        Command::Reduce { target, pad } => {
            let target = Target::from(*target);
            let f = read_formula(text, target, *pad)?;
            let inst = build_instance(&f, target)?;
            let g6 = emit_graph6(&inst.graph);
            let roles = inst.roles_json();
            if cli.json {
                let roles: Value = serde_json::from_str(&roles).expect("roles serialise to JSON");
                emit(out, cli, json!({ "graph": g6, "roles": roles }), String::new());
            } else {
                let _ = writeln!(out.stdout, "{g6}\n{roles}");
            }
            Ok(EXIT_YES)
        }
        Command::Verify { target, assignment, budget, pad } => {
            let target = Target::from(*target);
            let f = read_formula(text, target, *pad)?;
            let inst = build_instance(&f, target)?;
            let assignments = match assignment {
                Some(s) => vec![s.parse::<Assignment>()?],
                None => {
                    let n = f.num_vars();
                    if n > 20 {
                        return Err(Error::TooLarge { n, max: 20 });
                    }
                    (0..1u64 << n).map(|b| Assignment::from_bits(n, b)).collect()
                }
            };
            let mut agree = true;
            for a in &assignments {
                let nae = nae_eval(&f, a)?;
                let pattern = find_pattern(&inst, a, *budget)?;
                let free = pattern.is_none();
                let ok = if assignment.is_some() { free } else { free == nae };
                agree &= ok;
                let mut line = format!("{a} nae={nae} free={free}");
                if let Some(seq) = &pattern {
                    let seq: Vec<String> = seq.iter().map(usize::to_string).collect();
                    let _ = write!(line, " pattern={}", seq.join(","));
                }
                emit(
                    out,
                    cli,
                    json!({ "assignment": a.to_string(), "nae": nae, "free": free, "pattern": pattern }),
                    line,
                );
            }
            Ok(verdict(agree))
        }
        Command::Patterns { name } => {
            match name {
                Some(name) => {
                    let g = named(name)?;
                    let shown = show_graph(cli, &g);
                    emit(out, cli, json!({ "name": name, "graph": shown }), shown.clone());
                }
                None => {
                    for name in PATTERN_NAMES {
                        let g = named(name).expect("listed names parse");
                        let shown = emit_graph6(&g);
                        emit(out, cli, json!({ "name": name, "graph": shown }), format!("{name} {shown}"));
                    }
                }
            }
            Ok(EXIT_YES)
        }
    }
}

fn read_formula(text: &str, target: Target, pad: bool) -> Result<NaeFormula> {
    let mut f: NaeFormula = text.parse()?;
    if pad {
        while f.arity() < target.arity() {
            f = pad_nae(&f)?;
        }
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], input: &str) -> Output {
        let mut argv = vec!["switchkit"];
        argv.extend_from_slice(args);
        run(argv, input)
    }

    #[test]
    fn switching_opposite_vertices_of_c4() {
        let c4 = emit_graph6(&crate::patterns::cycle(4));
        let out = call(&["switch", "--set", "0,2"], &c4);
        assert_eq!(out.code, 0);
        assert_eq!(out.stdout.trim(), emit_graph6(&Graph::new(4)));
    }

    #[test]
    fn upper_split_of_c4() {
        let c4 = emit_graph6(&crate::patterns::cycle(4));
        let out = call(&["upper", "split"], &c4);
        assert_eq!(out.code, 0);
        assert_ne!(out.stdout.trim(), "none");
    }

    #[test]
    fn malformed_input_is_a_usage_error() {
        let out = call(&["lower", "chordal"], "\x01\n");
        assert_eq!(out.code, 2);
        assert!(out.stderr.starts_with("error:"));
        assert_eq!(call(&["frobnicate"], "").code, 2);
        assert_eq!(call(&["lower", "planar"], "Bw\n").code, 2);
    }
}

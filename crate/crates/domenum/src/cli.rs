//! Command-line front door: parse inputs, run classification, reduction or
//! enumeration, stream results, report delay statistics, and cross-check
//! against the oracles.
//!
//! Exit codes: 0 success, 1 parse/usage error, 2 precondition violation
//! (not split, disconnected, isolated vertex, oracle cap, ...), 3 check
//! mismatch. Set output is space-separated ascending 1-based ids, one set
//! per line; comments and statistics are prefixed with `#` so the stream
//! stays diff-able against oracle output.

use std::ffi::OsString;
use std::io::Write;
use std::ops::ControlFlow;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::classify::{
    chordality, find_induced_p6, find_split_obstruction, is_cobipartite, split_partition,
    Chordality, SplitObstruction,
};
use crate::completion::{classify_redundancy, completion_graph};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::io::{
    format_set, parse_graph, parse_hypergraph, parse_permutation, write_graph, write_hypergraph,
};
use crate::oracles::SubsetOracle;
use crate::reductions::{
    bipartite_incidence, closed_neighbourhood_hypergraph, cobipartite_incidence,
    open_neighbourhood_hypergraph, split_incidence, IncidenceLabels,
};
use crate::separators::{cdom_enum, minimal_separators};
use crate::set::VertexSet;
use crate::split_enum::EnumerationOrder;
use crate::stream::{DelayStats, ForEach, VertexSetStream};
use crate::trans_enum::{dom_enum, dom_enum_with, tdom_enum, trans_enum};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

/// Output failures (closed pipes) are deliberately ignored.
macro_rules! outln {
    ($out:expr) => {{
        let _ = writeln!($out);
    }};
    ($out:expr, $($arg:tt)*) => {{
        let _ = writeln!($out, $($arg)*);
    }};
}

#[derive(Parser)]
#[command(
    name = "domenum",
    version,
    about = "Minimal dominating sets, hypergraph transversals, and their reductions"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Report split / chordal / P6-free / co-bipartite verdicts with witnesses
    Classify { graph: PathBuf },
    /// Print the redundancy labeling and the completion's added edges
    Complete { graph: PathBuf },
    /// Build an incidence structure and print it with its label map
    Reduce {
        #[arg(value_enum)]
        kind: ReduceKind,
        input: PathBuf,
        /// Accept k = 0 hyperedges in the input
        #[arg(long)]
        allow_empty_edge: bool,
    },
    /// Stream minimal sets, one per line
    Enum {
        #[arg(value_enum)]
        target: Target,
        input: PathBuf,
        #[command(flatten)]
        flags: EnumFlags,
    },
    /// The same families by exhaustive subset-lattice search
    Oracle {
        #[arg(value_enum)]
        target: Target,
        input: PathBuf,
        /// Accept k = 0 hyperedges in the input
        #[arg(long)]
        allow_empty_edge: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    /// Minimal dominating sets (graph input)
    Mds,
    /// Minimal total dominating sets (graph input)
    Mtds,
    /// Minimal connected dominating sets (graph input)
    Mcds,
    /// Minimal transversals (hypergraph input)
    Mts,
    /// Inclusion-minimal separators (graph input)
    Minsep,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReduceKind {
    /// N(G): edges are the closed neighbourhoods (graph input)
    ClosedNbhd,
    /// N_o(G): edges are the open neighbourhoods (graph input)
    OpenNbhd,
    /// I(H): bipartite vertex-edge incidence (hypergraph input)
    Bip,
    /// I'(H): incidence with the ground side completed to a clique
    SplitInc,
    /// B(H): both sides cliques plus an apex on the ground side
    CobipInc,
}

#[derive(Args)]
struct EnumFlags {
    /// Buffer and sort the output (forfeits the streaming delay guarantee)
    #[arg(long)]
    sorted: bool,
    /// Stop after K emissions
    #[arg(long, value_name = "K", conflicts_with = "check")]
    limit: Option<u64>,
    /// Append a final `# stats` line: count, max and mean inter-emission delay
    #[arg(long)]
    stats: bool,
    /// Also run the subset-lattice oracle and compare the families
    #[arg(long)]
    check: bool,
    /// Clique permutation file for the split-graph enumerator (mds only)
    #[arg(long, value_name = "FILE")]
    sigma: Option<PathBuf>,
    /// Accept k = 0 hyperedges in the input
    #[arg(long)]
    allow_empty_edge: bool,
}

/// Entry point for the `domenum` binary.
pub fn entry() -> i32 {
    let mut out = std::io::stdout().lock();
    let mut err = std::io::stderr().lock();
    run(std::env::args_os(), &mut out, &mut err)
}

/// Run one invocation with injected streams; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_PARSE
                }
            };
        }
    };
    if let Cmd::Enum { target, flags, .. } = &cli.cmd {
        if flags.sigma.is_some() && *target != Target::Mds {
            outln!(err, "error: --sigma only applies to `enum mds`");
            return EXIT_PARSE;
        }
    }
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => report(&e, err),
    }
}

fn report(e: &Error, err: &mut dyn Write) -> i32 {
    match e {
        Error::Parse { line: 0, message } => {
            outln!(err, "error: {message}");
            EXIT_PARSE
        }
        Error::Parse { line, message } => {
            outln!(err, "parse error at line {line}: {message}");
            EXIT_PARSE
        }
        other => {
            outln!(err, "error: {other}");
            EXIT_PRECONDITION
        }
    }
}

fn load(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::parse(0, format!("cannot read {}: {e}", path.display())))
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    match cli.cmd {
        Cmd::Classify { graph } => cmd_classify(&parse_graph(&load(&graph)?)?, out),
        Cmd::Complete { graph } => cmd_complete(&parse_graph(&load(&graph)?)?, out),
        Cmd::Reduce {
            kind,
            input,
            allow_empty_edge,
        } => cmd_reduce(kind, &load(&input)?, allow_empty_edge, out),
        Cmd::Enum {
            target,
            input,
            flags,
        } => cmd_enum(target, &input, &flags, out),
        Cmd::Oracle {
            target,
            input,
            allow_empty_edge,
        } => cmd_oracle(target, &load(&input)?, allow_empty_edge, out),
    }
}

fn join1(ids: &[usize]) -> String {
    ids.iter()
        .map(|v| (v + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn obstruction_text(o: &SplitObstruction) -> String {
    match o {
        SplitObstruction::TwoK2(vs) => format!("2K2 {}", join1(vs)),
        SplitObstruction::C4(vs) => format!("C4 {}", join1(vs)),
        SplitObstruction::C5(vs) => format!("C5 {}", join1(vs)),
    }
}

fn cmd_classify(g: &Graph, out: &mut dyn Write) -> Result<i32> {
    match split_partition(g) {
        Ok(p) => {
            outln!(out, "split: yes");
            outln!(out, "clique: {}", format_set(p.clique()));
            outln!(out, "independent: {}", format_set(p.independent()));
        }
        Err(_) => {
            outln!(out, "split: no");
            if let Some(o) = find_split_obstruction(g) {
                outln!(out, "obstruction: {}", obstruction_text(&o));
            }
        }
    }
    match chordality(g) {
        Chordality::Chordal { peo } => {
            outln!(out, "chordal: yes");
            outln!(out, "peo: {}", join1(&peo));
        }
        Chordality::NotChordal { hole } => {
            outln!(out, "chordal: no");
            outln!(out, "hole: {}", join1(&hole));
        }
    }
    match find_induced_p6(g) {
        None => outln!(out, "p6-free: yes"),
        Some(path) => {
            outln!(out, "p6-free: no");
            outln!(out, "p6: {}", join1(&path));
        }
    }
    outln!(
        out,
        "co-bipartite: {}",
        if is_cobipartite(g) { "yes" } else { "no" }
    );
    Ok(EXIT_OK)
}

fn cmd_complete(g: &Graph, out: &mut dyn Write) -> Result<i32> {
    let labeling = classify_redundancy(g);
    outln!(out, "irredundant: {}", format_set(&labeling.irredundant));
    outln!(out, "redundant: {}", format_set(&labeling.redundant));
    let gco = completion_graph(g);
    let added: Vec<(usize, usize)> = gco.edges().filter(|&(u, v)| !g.has_edge(u, v)).collect();
    outln!(out, "added: {}", added.len());
    for (u, v) in added {
        outln!(out, "e {} {}", u + 1, v + 1);
    }
    Ok(EXIT_OK)
}

fn label_map(labels: &IncidenceLabels, out: &mut dyn Write) {
    let g = labels.ground_count();
    let e = labels.edge_count();
    if g > 0 {
        outln!(out, "# ground: 1..={g}");
    }
    if e > 0 {
        outln!(
            out,
            "# edge copies: {}..={} (edge i -> vertex {g}+i)",
            g + 1,
            g + e
        );
    }
    if let Some(a) = labels.apex() {
        outln!(out, "# apex: {}", a + 1);
    }
}

fn cmd_reduce(kind: ReduceKind, text: &str, allow_empty: bool, out: &mut dyn Write) -> Result<i32> {
    match kind {
        ReduceKind::ClosedNbhd => {
            let g = parse_graph(text)?;
            outln!(out, "# closed-neighbourhood hypergraph: edge i is N[i]");
            let _ = write!(
                out,
                "{}",
                write_hypergraph(&closed_neighbourhood_hypergraph(&g))
            );
        }
        ReduceKind::OpenNbhd => {
            let g = parse_graph(text)?;
            let h = open_neighbourhood_hypergraph(&g)?;
            outln!(out, "# open-neighbourhood hypergraph: edge i is N(i)");
            let _ = write!(out, "{}", write_hypergraph(&h));
        }
        ReduceKind::Bip | ReduceKind::SplitInc | ReduceKind::CobipInc => {
            let h = parse_hypergraph(text, allow_empty)?;
            let (g, labels) = match kind {
                ReduceKind::Bip => bipartite_incidence(&h),
                ReduceKind::SplitInc => split_incidence(&h),
                ReduceKind::CobipInc => cobipartite_incidence(&h)?,
                _ => unreachable!(),
            };
            label_map(&labels, out);
            let _ = write!(out, "{}", write_graph(&g));
        }
    }
    Ok(EXIT_OK)
}

enum Input {
    G(Graph),
    H(Hypergraph),
}

fn oracle_family(target: Target, input: &Input) -> Result<Vec<VertexSet>> {
    let oracle = SubsetOracle::new();
    match (input, target) {
        (Input::G(g), Target::Mds) => oracle.minimal_dominating_sets(g),
        (Input::G(g), Target::Mtds) => oracle.minimal_total_dominating_sets(g),
        (Input::G(g), Target::Mcds) => oracle.minimal_connected_dominating_sets(g),
        (Input::G(g), Target::Minsep) => oracle.minimal_separators(g),
        (Input::H(h), Target::Mts) => oracle.minimal_transversals(h),
        _ => unreachable!("target/input pairing is fixed by the grammar"),
    }
}

fn cmd_oracle(target: Target, text: &str, allow_empty: bool, out: &mut dyn Write) -> Result<i32> {
    let input = match target {
        Target::Mts => Input::H(parse_hypergraph(text, allow_empty)?),
        _ => Input::G(parse_graph(text)?),
    };
    for s in oracle_family(target, &input)? {
        outln!(out, "{}", format_set(&s));
    }
    Ok(EXIT_OK)
}

/// Compare the enumerated family against the oracle's, reporting any
/// difference as `#` comments. Both sides are compared as sorted families.
fn check_against(mut got: Vec<VertexSet>, want: Vec<VertexSet>, out: &mut dyn Write) -> i32 {
    got.sort();
    if got == want {
        outln!(out, "# check: ok ({} sets)", got.len());
        return EXIT_OK;
    }
    outln!(
        out,
        "# check: MISMATCH ({} enumerated, {} expected)",
        got.len(),
        want.len()
    );
    for s in want.iter().filter(|s| !got.contains(s)) {
        outln!(out, "# missing: {}", format_set(s));
    }
    for s in got.iter().filter(|s| !want.contains(s)) {
        outln!(out, "# extra: {}", format_set(s));
    }
    EXIT_MISMATCH
}

fn cmd_enum(target: Target, path: &Path, flags: &EnumFlags, out: &mut dyn Write) -> Result<i32> {
    let text = load(path)?;
    let input = match target {
        Target::Mts => Input::H(parse_hypergraph(&text, flags.allow_empty_edge)?),
        _ => Input::G(parse_graph(&text)?),
    };
    let sigma = match (&flags.sigma, &input) {
        (Some(file), Input::G(g)) => Some(EnumerationOrder::from_sequence(parse_permutation(
            &load(file)?,
            g.n(),
        )?)?),
        _ => None,
    };
    let run_enum = |sink: &mut VertexSetStream| -> Result<()> {
        match (&input, target) {
            (Input::G(g), Target::Mds) => match &sigma {
                Some(order) => dom_enum_with(g, order, sink),
                None => dom_enum(g, sink),
            },
            (Input::G(g), Target::Mtds) => tdom_enum(g, sink),
            (Input::G(g), Target::Mcds) => cdom_enum(g, sink),
            (Input::G(g), Target::Minsep) => {
                for s in minimal_separators(g)?.separators() {
                    sink.tick(1);
                    if let ControlFlow::Break(()) = sink.emit(s) {
                        break;
                    }
                }
                Ok(())
            }
            (Input::H(h), Target::Mts) => trans_enum(h, sink),
            _ => unreachable!("target/input pairing is fixed by the grammar"),
        }
    };

    let mut code = EXIT_OK;
    let stats: DelayStats;
    if flags.sorted || flags.check {
        let mut family: Vec<VertexSet> = Vec::new();
        let mut stream = match flags.limit {
            Some(k) => VertexSetStream::with_limit(&mut family, k),
            None => VertexSetStream::new(&mut family),
        };
        run_enum(&mut stream)?;
        stats = stream.stats().clone();
        if flags.sorted {
            family.sort();
        }
        for s in &family {
            outln!(out, "{}", format_set(s));
        }
        if flags.check {
            code = check_against(family, oracle_family(target, &input)?, out);
        }
    } else {
        let mut line_out = ForEach(|s: &VertexSet| {
            outln!(out, "{}", format_set(s));
        });
        let mut stream = match flags.limit {
            Some(k) => VertexSetStream::with_limit(&mut line_out, k),
            None => VertexSetStream::new(&mut line_out),
        };
        run_enum(&mut stream)?;
        stats = stream.stats().clone();
    }
    if flags.stats {
        outln!(
            out,
            "# stats count={} max_delay={} mean_delay={:.2}",
            stats.emissions,
            stats.max_delay,
            stats.mean_delay()
        );
    }
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_vec(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(args.iter().copied(), &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    fn write_temp(dir: &tempfile::TempDir, name: &str, content: &str) -> String {
        let path = dir.path().join(name);
        std::fs::write(&path, content).unwrap();
        path.to_string_lossy().into_owned()
    }

    #[test]
    fn help_and_version_exit_zero() {
        let (code, out, _) = run_vec(&["domenum", "--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("classify"));
        let (code, out, _) = run_vec(&["domenum", "--version"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("domenum"));
    }

    #[test]
    fn usage_errors_exit_one() {
        let (code, _, err) = run_vec(&["domenum", "enum", "mds"]);
        assert_eq!(code, EXIT_PARSE);
        assert!(!err.is_empty());
        let (code, _, _) = run_vec(&["domenum", "frobnicate"]);
        assert_eq!(code, EXIT_PARSE);
        let (code, _, err) = run_vec(&["domenum", "enum", "mts", "x.hg", "--sigma", "s"]);
        assert_eq!(code, EXIT_PARSE);
        assert!(err.contains("--sigma"));
        // --check and --limit are mutually exclusive
        let (code, _, _) = run_vec(&["domenum", "enum", "mds", "x.gr", "--check", "--limit", "2"]);
        assert_eq!(code, EXIT_PARSE);
    }

    #[test]
    fn missing_file_exits_one() {
        let (code, _, err) = run_vec(&["domenum", "enum", "mds", "/nonexistent.gr"]);
        assert_eq!(code, EXIT_PARSE);
        assert!(err.contains("cannot read"));
    }

    #[test]
    fn transversals_of_the_six_edge_file() {
        let dir = tempfile::tempdir().unwrap();
        let hg = write_temp(
            &dir,
            "six.hg",
            "p hg 4 6\nh 1 2\nh 1 2 3\nh 1 3 4\nh 2 4\nh 3 4\nh 2 4\n",
        );
        let (code, out, _) = run_vec(&["domenum", "enum", "mts", &hg]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "1 4\n2 3\n2 4\n");
        let (code, out, _) = run_vec(&["domenum", "oracle", "mts", &hg]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "1 4\n2 3\n2 4\n");
    }

    #[test]
    fn check_and_stats_and_limit() {
        let dir = tempfile::tempdir().unwrap();
        let gr = write_temp(&dir, "p4.gr", "p graph 4 3\ne 1 2\ne 2 3\ne 3 4\n");
        let (code, out, _) = run_vec(&["domenum", "enum", "mds", &gr, "--check"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("# check: ok"));
        let (code, out, _) = run_vec(&["domenum", "enum", "mds", &gr, "--stats", "--sorted"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("# stats count=4 "));
        let (code, out, _) = run_vec(&["domenum", "enum", "mds", &gr, "--limit", "2"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out.lines().count(), 2);
    }

    #[test]
    fn precondition_failures_exit_two() {
        let dir = tempfile::tempdir().unwrap();
        let disconnected = write_temp(&dir, "d.gr", "p graph 4 2\ne 1 2\ne 3 4\n");
        let (code, _, err) = run_vec(&["domenum", "enum", "mcds", &disconnected]);
        assert_eq!(code, EXIT_PRECONDITION);
        assert!(err.contains("not connected"));
        let isolated = write_temp(&dir, "i.gr", "p graph 3 1\ne 1 2\n");
        let (code, _, _) = run_vec(&["domenum", "enum", "mtds", &isolated]);
        assert_eq!(code, EXIT_PRECONDITION);
    }

    #[test]
    fn parse_errors_exit_one_with_line_numbers() {
        let dir = tempfile::tempdir().unwrap();
        let bad = write_temp(&dir, "bad.gr", "p graph 2 1\ne 1 1\n");
        let (code, _, err) = run_vec(&["domenum", "enum", "mds", &bad]);
        assert_eq!(code, EXIT_PARSE);
        assert!(err.contains("line 2"), "got stderr: {err}");
    }

    #[test]
    fn mismatch_reporting_shape() {
        let u = 3;
        let a = VertexSet::from_members([0], u).unwrap();
        let b = VertexSet::from_members([1], u).unwrap();
        let mut out = Vec::new();
        assert_eq!(
            check_against(vec![a.clone()], vec![a.clone()], &mut out),
            EXIT_OK
        );
        let mut out = Vec::new();
        let code = check_against(vec![b.clone()], vec![a.clone()], &mut out);
        assert_eq!(code, EXIT_MISMATCH);
        let text = String::from_utf8(out).unwrap();
        assert!(text.contains("# missing: 1"));
        assert!(text.contains("# extra: 2"));
    }
}

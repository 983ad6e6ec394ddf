//! The `fundom` command line.
//!
//! Every command that emits a list, a drawing or a graph first verifies the
//! list (cosets and connectivity); `--no-verify` skips this and watermarks
//! the output. Exit status: 0 on success, 1 on a failed check or I/O error,
//! 2 on a usage error.

use std::io::Write;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::cayley::build_graph;
use crate::cosets::{verify, CosetList, Subgroup};
use crate::domain::{cusp_table, render_json, render_svg, SvgOptions};
use crate::error::Error;
use crate::projline::{m_distribution, m_table};
use crate::residues::Level;

/// Environment variable naming the directory for relative `--output` paths.
pub const OUT_DIR_ENV: &str = "FUNDOM_OUT_DIR";

#[derive(Debug, Parser)]
#[command(name = "fundom", version, about = "Coset representatives and fundamental domains for congruence subgroups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Directory that relative output paths are resolved against.
    #[arg(long, global = true, env = OUT_DIR_ENV)]
    pub out_dir: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the representative list.
    List(ListArgs),
    /// Check lists: distinct cosets, all cosets hit, connected graph.
    Verify(VerifyArgs),
    /// Print M_j for every nonunit j and the distribution of M.
    Mtable(MtableArgs),
    /// Print the cusp tables for Γ₀(N).
    Cusps(CuspsArgs),
    /// Draw the fundamental domain.
    Render(RenderArgs),
    /// Print the adjacency graph and a BFS spanning tree in DOT.
    Graph(GraphArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Svg,
    Dot,
    Csv,
    Text,
}

#[derive(Debug, Args)]
pub struct Target {
    /// The level N (at least 2).
    #[arg(long = "N", value_parser = parse_level)]
    pub n: Level,

    #[arg(long, default_value = "gamma0", value_parser = parse_group)]
    pub group: Subgroup,
}

#[derive(Debug, Args)]
pub struct Emit {
    /// Write to this file instead of stdout.
    #[arg(short, long)]
    pub output: Option<PathBuf>,

    /// Skip verification (for profiling); the output is marked unverified.
    #[arg(long)]
    pub no_verify: bool,
}

#[derive(Debug, Args)]
pub struct ListArgs {
    #[command(flatten)]
    pub target: Target,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[command(flatten)]
    pub emit: Emit,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long = "N", value_parser = parse_level, conflicts_with_all = ["sweep", "load"])]
    pub n: Option<Level>,

    /// Inclusive range of levels, `a..b`.
    #[arg(long, value_parser = parse_sweep, conflicts_with = "load")]
    pub sweep: Option<RangeInclusive<i64>>,

    /// Verify a list previously written by `list --format json`.
    #[arg(long)]
    pub load: Option<PathBuf>,

    /// gamma0, gamma1, gammaN or all.
    #[arg(long, default_value = "gamma0", value_parser = parse_group_choice)]
    pub group: GroupChoice,

    /// Largest level at which Γ(N) is included by `--group all`.
    #[arg(long, default_value_t = 20)]
    pub full_max: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupChoice {
    One(Subgroup),
    All,
}

#[derive(Debug, Args)]
pub struct MtableArgs {
    #[arg(long = "N", value_parser = parse_level)]
    pub n: Level,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CuspsArgs {
    #[arg(long = "N", value_parser = parse_level)]
    pub n: Level,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    #[command(flatten)]
    pub target: Target,
    #[arg(long, value_enum, default_value = "svg")]
    pub format: Format,
    /// Label each triangle with its word.
    #[arg(long)]
    pub labels: bool,
    /// Height at which rays to ∞ are cut off.
    #[arg(long, default_value_t = 2.2)]
    pub y_max: f64,
    /// Pixels per unit length.
    #[arg(long, default_value_t = 300.0)]
    pub scale: f64,
    /// Comma-separated fill colours, cycled by triangle.
    #[arg(long, value_delimiter = ',')]
    pub palette: Option<Vec<String>>,
    #[command(flatten)]
    pub emit: Emit,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    #[command(flatten)]
    pub target: Target,
    /// Only draw the spanning tree edges.
    #[arg(long)]
    pub tree_only: bool,
    #[command(flatten)]
    pub emit: Emit,
}

fn parse_level(s: &str) -> std::result::Result<Level, String> {
    let n: i64 = s.parse().map_err(|_| format!("{s:?} is not an integer"))?;
    Level::new(n).map_err(|e| e.to_string())
}

fn parse_group(s: &str) -> std::result::Result<Subgroup, String> {
    s.parse()
}

fn parse_group_choice(s: &str) -> std::result::Result<GroupChoice, String> {
    if s == "all" {
        Ok(GroupChoice::All)
    } else {
        s.parse().map(GroupChoice::One)
    }
}

fn parse_sweep(s: &str) -> std::result::Result<RangeInclusive<i64>, String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected a..b, got {s:?}"))?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let a: i64 = a.trim().parse().map_err(|_| format!("bad start in {s:?}"))?;
    let b: i64 = b.trim().parse().map_err(|_| format!("bad end in {s:?}"))?;
    if a < 2 || b < a {
        return Err(format!("sweep {s:?} must satisfy 2 <= a <= b"));
    }
    Ok(a..=b)
}

/// A failed check: the message goes to stderr and the exit code is 1.
#[derive(Debug)]
struct Failed(String);

type Outcome = std::result::Result<(), Failed>;

impl From<Error> for Failed {
    fn from(e: Error) -> Self {
        Failed(e.to_string())
    }
}

impl From<std::io::Error> for Failed {
    fn from(e: std::io::Error) -> Self {
        Failed(e.to_string())
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli, stdout, stderr) {
        Ok(()) => 0,
        Err(Failed(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            1
        }
    }
}

fn execute(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Outcome {
    let out_dir = cli.out_dir.as_deref();
    match &cli.command {
        Command::List(a) => {
            let list = prepare(&a.target, a.emit.no_verify)?;
            let text = match a.format {
                Format::Json => list.to_json()? + "\n",
                Format::Text => {
                    let mut s = String::new();
                    if !list.is_verified() {
                        s.push_str("# UNVERIFIED\n");
                    }
                    for w in list.words() {
                        s.push_str(&w.to_string());
                        s.push('\n');
                    }
                    s
                }
                f => return Err(bad_format("list", f, "json, text")),
            };
            emit(&text, a.emit.output.as_deref(), out_dir, stdout)
        }
        Command::Verify(a) => cmd_verify(a, stdout, stderr),
        Command::Mtable(a) => {
            let text = mtable_output(a.n, a.format)?;
            emit(&text, a.output.as_deref(), out_dir, stdout)
        }
        Command::Cusps(a) => {
            let table = cusp_table(a.n);
            let text = match a.format {
                Format::Text => table.to_text(),
                Format::Csv => table.to_csv()?,
                f => return Err(bad_format("cusps", f, "text, csv")),
            };
            emit(&text, a.output.as_deref(), out_dir, stdout)
        }
        Command::Render(a) => {
            let list = prepare(&a.target, a.emit.no_verify)?;
            let text = match a.format {
                Format::Svg => {
                    let mut opts = SvgOptions {
                        y_max: a.y_max,
                        scale: a.scale,
                        labels: a.labels,
                        ..SvgOptions::default()
                    };
                    if let Some(p) = &a.palette {
                        opts.palette = p.clone();
                    }
                    render_svg(&list, &opts)
                }
                Format::Json => render_json(&list)? + "\n",
                f => return Err(bad_format("render", f, "svg, json")),
            };
            emit(&text, a.emit.output.as_deref(), out_dir, stdout)
        }
        Command::Graph(a) => {
            let list = prepare(&a.target, a.emit.no_verify)?;
            let graph = build_graph(&list)?;
            let tree = graph.spanning_tree(graph.default_root());
            let mut text = graph.to_dot(Some(&tree), a.tree_only);
            if !list.is_verified() {
                text.insert_str(0, "// UNVERIFIED\n");
            }
            emit(&text, a.emit.output.as_deref(), out_dir, stdout)
        }
    }
}

fn bad_format(cmd: &str, f: Format, allowed: &str) -> Failed {
    let name = f.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    Failed(format!("{cmd} does not support --format {name} (use {allowed})"))
}

/// Builds the list and, unless skipped, checks cosets and connectivity.
fn prepare(target: &Target, no_verify: bool) -> std::result::Result<CosetList, Failed> {
    let list = target.group.build(target.n);
    if no_verify {
        return Ok(list);
    }
    let list = list.verified()?;
    if !build_graph(&list)?.is_connected() {
        return Err(Failed(format!(
            "{} N={}: adjacency graph is not connected",
            target.group, target.n
        )));
    }
    Ok(list)
}

fn emit(text: &str, output: Option<&Path>, out_dir: Option<&Path>, stdout: &mut dyn Write) -> Outcome {
    match output {
        None => stdout.write_all(text.as_bytes())?,
        Some(path) => {
            let path = match out_dir {
                Some(dir) if path.is_relative() => dir.join(path),
                _ => path.to_path_buf(),
            };
            if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
                std::fs::create_dir_all(parent)?;
            }
            std::fs::write(&path, text)?;
        }
    }
    Ok(())
}

/// Result of checking one list.
struct Check {
    label: String,
    cosets: std::result::Result<String, String>,
    connected: Option<bool>,
}

impl Check {
    fn passed(&self) -> bool {
        self.cosets.is_ok() && self.connected == Some(true)
    }

    fn line(&self) -> String {
        let cosets = match &self.cosets {
            Ok(s) => format!("cosets ok ({s})"),
            Err(s) => format!("cosets FAIL: {s}"),
        };
        let graph = match self.connected {
            Some(true) => "connectivity ok",
            Some(false) => "connectivity FAIL: graph is not connected",
            None => "connectivity FAIL: duplicate representatives",
        };
        let status = if self.passed() { "PASS" } else { "FAIL" };
        format!("{status} {}: {cosets}, {graph}", self.label)
    }
}

fn check(list: &CosetList) -> Check {
    let cosets = match verify(list) {
        Ok(r) => Ok(format!("{} reps, {} cosets", r.reps, r.total_cosets)),
        Err(Error::VerificationFailed(r)) => Err(r.to_string()),
        Err(e) => Err(e.to_string()),
    };
    let connected = build_graph(list).ok().map(|g| g.is_connected());
    Check {
        label: format!("{} N={}", list.group(), list.level()),
        cosets,
        connected,
    }
}

fn cmd_verify(a: &VerifyArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Outcome {
    let checks: Vec<Check> = if let Some(path) = &a.load {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failed(format!("cannot read {}: {e}", path.display())))?;
        vec![check(&CosetList::from_json(&text)?)]
    } else {
        let levels: Vec<i64> = match (&a.sweep, a.n) {
            (Some(r), _) => r.clone().collect(),
            (None, Some(n)) => vec![n.n()],
            (None, None) => return Err(Failed("verify needs --N, --sweep or --load".into())),
        };
        let jobs: Vec<(Level, Subgroup)> = levels
            .iter()
            .flat_map(|&n| {
                let level = Level::new(n).expect("levels are validated");
                let groups: Vec<Subgroup> = match a.group {
                    GroupChoice::One(g) => vec![g],
                    GroupChoice::All => Subgroup::ALL
                        .into_iter()
                        .filter(|&g| g != Subgroup::GammaFull || n <= a.full_max)
                        .collect(),
                };
                groups.into_iter().map(move |g| (level, g))
            })
            .collect();
        jobs.par_iter().map(|&(l, g)| check(&g.build(l))).collect()
    };

    let mut failures = 0;
    for c in &checks {
        writeln!(stdout, "{}", c.line())?;
        if !c.passed() {
            failures += 1;
        }
    }
    if failures > 0 {
        let _ = writeln!(stderr, "{failures} of {} checks failed", checks.len());
        return Err(Failed("verification failed".into()));
    }
    Ok(())
}

#[derive(Serialize)]
struct MtableJson {
    #[serde(rename = "N")]
    n: i64,
    m_j: Vec<(i64, u64)>,
    distribution: Vec<(u64, usize)>,
}

fn mtable_output(level: Level, format: Format) -> std::result::Result<String, Failed> {
    let table = m_table(level);
    let dist = m_distribution(level);
    match format {
        Format::Text => {
            let mut s = String::from("M_j | j\n");
            for (m, js) in table.by_value() {
                let js: Vec<String> = js.iter().map(|j| j.to_string()).collect();
                s.push_str(&format!("{m:<3} | {}\n", js.join(", ")));
            }
            s.push_str("\nM   | classes in H\n");
            for (m, count) in &dist {
                s.push_str(&format!("{m:<3} | {count}\n"));
            }
            Ok(s)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["j", "M_j"]).map_err(Error::from)?;
            for (j, m) in table.iter() {
                w.write_record([j.to_string(), m.to_string()]).map_err(Error::from)?;
            }
            let bytes = w.into_inner().map_err(|e| Failed(e.to_string()))?;
            Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
        }
        Format::Json => {
            let doc = MtableJson {
                n: level.n(),
                m_j: table.iter().collect(),
                distribution: dist.into_iter().collect(),
            };
            Ok(serde_json::to_string_pretty(&doc).map_err(Error::from)? + "\n")
        }
        f => Err(bad_format("mtable", f, "text, csv, json")),
    }
}

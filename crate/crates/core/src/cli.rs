//! The `tracenorm` command line.
//!
//! Exit codes are stable: 0 success, 2 input or usage error, 3 numerical
//! error, 4 a checked claim failed.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::digraph::{parse_digraph, Digraph, DUMP_SEPARATOR};
use crate::error::Error;
use crate::families::{
    directed_cycle, directed_path, enumerate_oriented_trees, enumerate_symmetric, enumerate_unicyclic, EnumOptions,
    UnicyclicVariant,
};
use crate::spectra::{alpha_spectrum, trace_norm, AlphaParam};
use crate::variation::{arc_deletion_report, vertex_deletion_report, DeletionReport, DeletionTarget};
use crate::verify::{
    alpha_sweep, extremal_trees, extremal_unicyclic, reports_to_csv, reports_to_json, verify_arc_deletions, AlphaGrid,
    ExtremalReport, Violation,
};
use crate::EQUALITY_TOL;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;
pub const EXIT_VIOLATION: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "tracenorm", version, about = "Alpha trace norm of digraphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the alpha trace norm of a digraph file.
    TraceNorm {
        file: PathBuf,
        #[arg(long, value_parser = parse_alpha)]
        alpha: AlphaParam,
    },
    /// Print the alpha singular values as value[multiplicity].
    Spectrum {
        file: PathBuf,
        #[arg(long, value_parser = parse_alpha)]
        alpha: AlphaParam,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
    },
    /// Report the trace norm change when deleting an arc or a vertex.
    Delete(DeleteArgs),
    /// Exhaustive extremal check over oriented trees or unicyclic digraphs.
    Verify(VerifyArgs),
    /// Trace norm of one digraph over an alpha grid.
    Sweep {
        file: PathBuf,
        #[arg(long, value_parser = parse_alpha_list)]
        alphas: Option<AlphaGrid>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
    /// Family generators.
    Families {
        #[command(subcommand)]
        action: FamiliesAction,
    },
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("target").required(true).args(["arc", "vertex"])))]
pub struct DeleteArgs {
    pub file: PathBuf,
    /// Arc to delete, as tail and head.
    #[arg(long, num_args = 2, value_names = ["U", "V"])]
    pub arc: Option<Vec<usize>>,
    /// Vertex to delete.
    #[arg(long)]
    pub vertex: Option<usize>,
    #[arg(long, value_parser = parse_alpha)]
    pub alpha: AlphaParam,
    #[arg(long, default_value_t = EQUALITY_TOL)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
    pub format: OutputFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyFamily {
    Trees,
    Unicyclic,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub family: VerifyFamily,
    pub n: usize,
    /// Comma-separated alpha values; defaults to 0, 0.1, ..., 0.9.
    #[arg(long, value_parser = parse_alpha_list)]
    pub alphas: Option<AlphaGrid>,
    #[arg(long, default_value_t = EQUALITY_TOL)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads; defaults to the number of cores.
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Lift the order guard.
    #[arg(long)]
    pub force: bool,
    /// Deduplicate the corpus by isomorphism for the per-arc check.
    #[arg(long)]
    pub dedupe: bool,
    /// Restrict unicyclic digraphs to those with a directed cycle.
    #[arg(long)]
    pub directed_cycle: bool,
    /// Also check the arc-deletion bound on every arc of every member.
    #[arg(long)]
    pub arcs: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DumpFamily {
    Path,
    Cycle,
    Trees,
    Unicyclic,
    Symmetric,
}

#[derive(Debug, Subcommand)]
pub enum FamiliesAction {
    /// Write every member in the digraph text format.
    Dump {
        family: DumpFamily,
        n: usize,
        #[arg(long)]
        dedupe: bool,
        #[arg(long)]
        force: bool,
        /// Concatenate into this file (`---` separated) instead of stdout.
        #[arg(long, conflicts_with = "split")]
        out: Option<PathBuf>,
        /// Write one file per digraph into this directory.
        #[arg(long)]
        split: Option<PathBuf>,
    },
}

fn parse_alpha(s: &str) -> Result<AlphaParam, String> {
    let v: f64 = s.trim().parse().map_err(|_| format!("`{s}` is not a number"))?;
    AlphaParam::new(v).map_err(|e| e.to_string())
}

fn parse_alpha_list(s: &str) -> Result<AlphaGrid, String> {
    let values = s.split(',').map(|t| parse_alpha(t).map(AlphaParam::value)).collect::<Result<Vec<_>, _>>()?;
    AlphaGrid::new(values).map_err(|e| e.to_string())
}

/// Fixed 12 significant digits; zero prints as `0`.
pub fn format_sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    let decimals = (11 - exp).max(0) as usize;
    let s = format!("{x:.decimals$}");
    // Rounding can carry into a new leading digit.
    let carried: f64 = s.parse().unwrap_or(x);
    if decimals > 0 && carried.abs() >= 10f64.powi(exp + 1) {
        let d = decimals - 1;
        return format!("{x:.d$}");
    }
    s
}

/// 12 significant digits with trailing zeros removed.
pub fn format_sig12_trimmed(x: f64) -> String {
    let s = format_sig12(x);
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Numerical(_) => EXIT_NUMERICAL,
            Error::Input(_) | Error::Parse { .. } | Error::Domain(_) => EXIT_INPUT,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure { code: EXIT_INPUT, message: e.to_string() }
    }
}

type CmdResult = Result<i32, Failure>;

fn read_digraph(path: &Path) -> Result<Digraph, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure { code: EXIT_INPUT, message: format!("{}: {e}", path.display()) })?;
    parse_digraph(&text).map_err(|e| Failure { code: EXIT_INPUT, message: format!("{}: {e}", path.display()) })
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            if e.use_stderr() {
                let _ = write!(err, "{e}");
            } else {
                let _ = write!(out, "{e}");
            }
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::TraceNorm { file, alpha } => {
            let d = read_digraph(&file)?;
            writeln!(out, "{}", format_sig12(trace_norm(&d, alpha)?))?;
            Ok(EXIT_OK)
        }
        Command::Spectrum { file, alpha, format } => cmd_spectrum(&read_digraph(&file)?, alpha, format, out),
        Command::Delete(args) => cmd_delete(args, out),
        Command::Verify(args) => cmd_verify(args, out, err),
        Command::Sweep { file, alphas, format } => {
            let d = read_digraph(&file)?;
            let table = alpha_sweep(&d, &alphas.unwrap_or_default())?;
            match format {
                OutputFormat::Json => {
                    let rows: Vec<_> =
                        table.iter().map(|(a, t)| serde_json::json!({"alpha": a.value(), "trace_norm": t})).collect();
                    writeln!(out, "{}", serde_json::to_string_pretty(&rows).expect("json"))?;
                }
                OutputFormat::Csv => {
                    writeln!(out, "alpha,trace_norm")?;
                    for (a, t) in table {
                        writeln!(out, "{},{}", a.value(), t)?;
                    }
                }
                OutputFormat::Table => {
                    for (a, t) in table {
                        writeln!(out, "{:<6} {}", a.value(), format_sig12(t))?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Families { action: FamiliesAction::Dump { family, n, dedupe, force, out: path, split } } => {
            cmd_dump(family, n, EnumOptions { dedupe, force }, path, split, out)
        }
    }
}

fn cmd_spectrum(d: &Digraph, alpha: AlphaParam, format: OutputFormat, out: &mut dyn Write) -> CmdResult {
    let s = alpha_spectrum(d, alpha)?;
    // Values at rounding level are shown as zero.
    let floor = 1e-12 * s.values.first().copied().unwrap_or(0.0).max(1.0);
    let groups: Vec<(f64, usize)> =
        s.with_multiplicities().into_iter().map(|(v, m)| (if v.abs() <= floor { 0.0 } else { v }, m)).collect();
    match format {
        OutputFormat::Table => {
            let parts: Vec<String> = groups.iter().map(|(v, m)| format!("{}[{m}]", format_sig12_trimmed(*v))).collect();
            writeln!(out, "{}", parts.join(", "))?;
        }
        OutputFormat::Csv => {
            writeln!(out, "value,multiplicity")?;
            for (v, m) in groups {
                writeln!(out, "{v},{m}")?;
            }
        }
        OutputFormat::Json => {
            let v = serde_json::json!({
                "alpha": alpha.value(),
                "values": s.values,
                "trace_norm": s.trace_norm,
                "groups": groups.iter().map(|(v, m)| serde_json::json!({"value": v, "multiplicity": m})).collect::<Vec<_>>(),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json"))?;
        }
    }
    Ok(EXIT_OK)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn write_report_table(r: &DeletionReport, out: &mut dyn Write) -> std::io::Result<()> {
    let kind = match r.kind {
        crate::variation::DeletionKind::Arc => "arc",
        crate::variation::DeletionKind::LeafVertex => "leaf vertex",
        crate::variation::DeletionKind::NonleafVertex => "nonleaf vertex",
    };
    let target = match r.target {
        DeletionTarget::Arc { tail, head } => format!("{tail} {head}"),
        DeletionTarget::Vertex { vertex } => vertex.to_string(),
    };
    writeln!(out, "kind                {kind}")?;
    writeln!(out, "target              {target}")?;
    writeln!(out, "alpha               {}", r.alpha.value())?;
    writeln!(out, "norm_before         {}", format_sig12(r.norm_before))?;
    writeln!(out, "norm_after          {}", format_sig12(r.norm_after))?;
    writeln!(out, "bound               {}", format_sig12(r.bound))?;
    writeln!(out, "slack               {}", format_sig12(r.slack))?;
    writeln!(out, "equality_predicted  {}", yes_no(r.equality_predicted))?;
    writeln!(out, "equality_observed   {}", yes_no(r.equality_observed))?;
    Ok(())
}

fn cmd_delete(args: DeleteArgs, out: &mut dyn Write) -> CmdResult {
    let d = read_digraph(&args.file)?;
    let report = match (&args.arc, args.vertex) {
        (Some(arc), _) => arc_deletion_report(&d, arc[0], arc[1], args.alpha, args.tol)?,
        (None, Some(u)) => vertex_deletion_report(&d, u, args.alpha, args.tol)?,
        (None, None) => unreachable!("clap requires a target"),
    };
    match args.format {
        OutputFormat::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("json"))?,
        OutputFormat::Table | OutputFormat::Csv => write_report_table(&report, out)?,
    }
    Ok(EXIT_OK)
}

fn write_extremal_table(reports: &[ExtremalReport], out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(out, "{:<6} {:>16} {:>16} {:>9} {:>7} {:>8}", "alpha", "max", "bound", "attained", "unique", "classes")?;
    for r in reports {
        writeln!(
            out,
            "{:<6} {:>16} {:>16} {:>9} {:>7} {:>8}",
            r.alpha.value(),
            format_sig12(r.max_trace_norm),
            format_sig12(r.paper_bound),
            yes_no(r.bound_attained),
            yes_no(r.unique_maximizer),
            r.maximizers.len()
        )?;
    }
    Ok(())
}

fn describe_violation(v: &Violation) -> String {
    let target = match v.report.target {
        DeletionTarget::Arc { tail, head } => format!("arc {tail}>{head}"),
        DeletionTarget::Vertex { vertex } => format!("vertex {vertex}"),
    };
    format!(
        "{:?}: [{}] {target} alpha={} slack={:e} predicted={} observed={}",
        v.kind,
        crate::verify::arcs_inline(&v.digraph),
        v.report.alpha.value(),
        v.report.slack,
        v.report.equality_predicted,
        v.report.equality_observed
    )
}

fn cmd_verify(args: VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    if args.tol.is_nan() || args.tol <= 0.0 {
        return Err(Error::domain("tolerance must be positive").into());
    }
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = args.jobs {
        if j == 0 {
            return Err(Error::input("--jobs must be at least 1").into());
        }
        builder = builder.num_threads(j);
    }
    let pool = builder.build().map_err(|e| Failure { code: EXIT_INPUT, message: format!("thread pool: {e}") })?;
    let grid = args.alphas.clone().unwrap_or_default();
    let variant = if args.directed_cycle { UnicyclicVariant::DirectedCycle } else { UnicyclicVariant::AnyOrientation };
    let opts = EnumOptions { dedupe: args.dedupe, force: args.force };

    let (reports, arc_violations) = pool.install(|| -> Result<_, Error> {
        let reports = match args.family {
            VerifyFamily::Trees => extremal_trees(args.n, &grid, args.tol, args.force)?,
            VerifyFamily::Unicyclic => extremal_unicyclic(args.n, variant, &grid, args.tol, args.force)?,
        };
        let violations = if args.arcs {
            let corpus = match args.family {
                VerifyFamily::Trees => enumerate_oriented_trees(args.n, opts)?,
                VerifyFamily::Unicyclic => enumerate_unicyclic(args.n, variant, opts)?,
            };
            verify_arc_deletions(corpus, &grid, args.tol)?
        } else {
            Vec::new()
        };
        Ok((reports, violations))
    })?;

    let rendered = match args.format {
        OutputFormat::Csv => reports_to_csv(&reports)?,
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(&reports_to_json(&reports)).expect("json");
            s.push('\n');
            s
        }
        OutputFormat::Table => {
            let mut buf = Vec::new();
            write_extremal_table(&reports, &mut buf)?;
            String::from_utf8(buf).expect("utf-8")
        }
    };
    match &args.out {
        Some(path) => fs::write(path, rendered)?,
        None => out.write_all(rendered.as_bytes())?,
    }

    let mut failures: Vec<String> = reports.iter().flat_map(ExtremalReport::claim_failures).collect();
    failures.extend(arc_violations.iter().map(describe_violation));
    if reports.iter().any(|r| r.degenerate) {
        writeln!(err, "note: n = {} is degenerate; only the upper bound is checked", args.n)?;
    }
    for f in &failures {
        writeln!(err, "violation: {f}")?;
    }
    Ok(if failures.is_empty() { EXIT_OK } else { EXIT_VIOLATION })
}

fn cmd_dump(
    family: DumpFamily,
    n: usize,
    opts: EnumOptions,
    path: Option<PathBuf>,
    split: Option<PathBuf>,
    out: &mut dyn Write,
) -> CmdResult {
    let stream: Box<dyn Iterator<Item = Digraph>> = match family {
        DumpFamily::Path => Box::new(std::iter::once(directed_path(n)?)),
        DumpFamily::Cycle => Box::new(std::iter::once(directed_cycle(n, false)?)),
        DumpFamily::Trees => enumerate_oriented_trees(n, opts)?,
        DumpFamily::Unicyclic => enumerate_unicyclic(n, UnicyclicVariant::AnyOrientation, opts)?,
        DumpFamily::Symmetric => enumerate_symmetric(n, opts)?,
    };
    if let Some(dir) = split {
        fs::create_dir_all(&dir)?;
        let name = format!("{family:?}").to_lowercase();
        let mut count = 0usize;
        for (i, d) in stream.enumerate() {
            fs::write(dir.join(format!("{name}_{n}_{i:06}.txt")), d.to_text())?;
            count += 1;
        }
        writeln!(out, "wrote {count} files to {}", dir.display())?;
        return Ok(EXIT_OK);
    }
    let mut text = String::new();
    for d in stream {
        text.push_str(&d.to_text());
        text.push_str(DUMP_SEPARATOR);
        text.push('\n');
    }
    match path {
        Some(p) => fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(EXIT_OK)
}

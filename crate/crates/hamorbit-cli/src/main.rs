//! `hamorbit` — count, verify, enumerate, and draw the equivalence
//! classes of Hamiltonian path and cycle shapes on n circle points.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 invalid arguments,
//! 3 enumeration cap exceeded, 4 cross-method disagreement under
//! `--check`, 5 I/O failure.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hamorbit::orbit::{burnside_count_capped, enumerate_classes_capped};
use hamorbit::render::render_gallery_capped;
use hamorbit::verify::verify_range_capped;
use hamorbit::{
    class_count, ClassCount, EquivKind, Error, GraphKind, Mode, Style, DEFAULT_CAP,
};

#[derive(Parser)]
#[command(
    name = "hamorbit",
    version,
    about = "Classes of Hamiltonian path and cycle shapes in K_n, counted three ways"
)]
struct Cli {
    /// Worker threads for exhaustive scans (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    jobs: Option<u32>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphArg {
    Path,
    Cycle,
}

#[derive(Clone, Copy, ValueEnum)]
enum EquivArg {
    Similar,
    Equivalent,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum MethodArg {
    /// Closed-form evaluation.
    Formula,
    /// Exhaustive fixed-point scan with Burnside's lemma.
    Burnside,
    /// Direct enumeration of canonical representatives.
    Enumerate,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the class count for one mode.
    Count {
        #[arg(long, short)]
        n: usize,
        #[arg(long)]
        graph: GraphArg,
        #[arg(long)]
        equiv: EquivArg,
        #[arg(long, value_enum, default_value_t = MethodArg::Formula)]
        method: MethodArg,
        /// Also compute by the other methods and fail on disagreement.
        #[arg(long)]
        check: bool,
    },
    /// Print all four counts for a range of n.
    Table {
        #[arg(long, default_value_t = 3)]
        n_min: usize,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        #[arg(long, value_enum, default_value_t = MethodArg::Formula)]
        method: MethodArg,
    },
    /// Compare formulas, Burnside scans, enumeration, and component sums.
    Verify {
        #[arg(long, default_value_t = 7)]
        n_max: usize,
    },
    /// Print the canonical representative of every class, one per line.
    Reps {
        #[arg(long, short)]
        n: usize,
        #[arg(long)]
        graph: GraphArg,
        #[arg(long)]
        equiv: EquivArg,
    },
    /// Write a gallery SVG with one cell per class.
    Render {
        #[arg(long, short)]
        n: usize,
        #[arg(long)]
        graph: GraphArg,
        #[arg(long)]
        equiv: EquivArg,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
        columns: u32,
    },
    /// Print a prefix of one of the published integer sequences.
    Oeis {
        /// Sequence id: A000940, A000939, or A099030.
        id: String,
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
        terms: u32,
    },
}

/// A failure destined for stderr plus a process exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Failure {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Failure {
        let code = match err {
            Error::CapExceeded { .. } => 3,
            _ => 2,
        };
        Failure::new(code, err.to_string())
    }
}

fn io_failure(context: &str, err: std::io::Error) -> Failure {
    Failure::new(5, format!("{context}: {err}"))
}

fn main() {
    let cli = Cli::parse();
    if let Err(failure) = run(cli) {
        eprintln!("error: {}", failure.message);
        std::process::exit(failure.code);
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs as usize)
            .build_global()
            .map_err(|e| Failure::new(2, format!("--jobs: {e}")))?;
    }
    let cap = enumeration_cap()?;
    match cli.command {
        Command::Count {
            n,
            graph,
            equiv,
            method,
            check,
        } => cmd_count(mode_for(n, graph, equiv)?, method, check, cap),
        Command::Table {
            n_min,
            n_max,
            format,
            method,
        } => cmd_table(n_min, n_max, format, method, cap),
        Command::Verify { n_max } => cmd_verify(n_max, cap),
        Command::Reps { n, graph, equiv } => cmd_reps(mode_for(n, graph, equiv)?, cap),
        Command::Render {
            n,
            graph,
            equiv,
            out,
            columns,
        } => cmd_render(mode_for(n, graph, equiv)?, &out, columns as usize, cap),
        Command::Oeis { id, terms } => cmd_oeis(&id, terms as usize),
    }
}

/// The enumeration cap: `DEFAULT_CAP` unless HAMORBIT_CAP overrides it.
fn enumeration_cap() -> Result<usize, Failure> {
    match std::env::var("HAMORBIT_CAP") {
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_CAP),
        Err(err) => Err(Failure::new(2, format!("HAMORBIT_CAP: {err}"))),
        Ok(raw) => match raw.trim().parse::<usize>() {
            Ok(cap) if cap >= 1 => Ok(cap),
            _ => Err(Failure::new(
                2,
                format!("HAMORBIT_CAP must be a positive integer, got {raw:?}"),
            )),
        },
    }
}

fn mode_for(n: usize, graph: GraphArg, equiv: EquivArg) -> Result<Mode, Failure> {
    let graph = match graph {
        GraphArg::Path => GraphKind::Path,
        GraphArg::Cycle => GraphKind::Cycle,
    };
    let equiv = match equiv {
        EquivArg::Similar => EquivKind::Similar,
        EquivArg::Equivalent => EquivKind::Equivalent,
    };
    Ok(Mode::new(graph, equiv, n)?)
}

fn count_via(mode: Mode, method: MethodArg, cap: usize) -> Result<ClassCount, Failure> {
    Ok(match method {
        MethodArg::Formula => class_count(mode)?,
        MethodArg::Burnside => burnside_count_capped(mode, cap)?.class_count,
        MethodArg::Enumerate => {
            ClassCount::from(enumerate_classes_capped(mode, cap)?.len())
        }
    })
}

fn cmd_count(mode: Mode, method: MethodArg, check: bool, cap: usize) -> Result<(), Failure> {
    let value = count_via(mode, method, cap)?;
    if check {
        for other in [MethodArg::Formula, MethodArg::Burnside, MethodArg::Enumerate] {
            let got = count_via(mode, other, cap)?;
            if got != value {
                return Err(Failure::new(
                    4,
                    format!("{mode}: methods disagree ({got} vs {value})"),
                ));
            }
        }
    }
    println!("{value}");
    Ok(())
}

/// One table row; the field order here is the JSON key order.
#[derive(Serialize)]
struct TableRow {
    n: usize,
    path_similar: String,
    path_equivalent: String,
    cycle_similar: String,
    cycle_equivalent: String,
}

impl TableRow {
    fn cells(&self) -> [String; 5] {
        [
            self.n.to_string(),
            self.path_similar.clone(),
            self.path_equivalent.clone(),
            self.cycle_similar.clone(),
            self.cycle_equivalent.clone(),
        ]
    }
}

fn cmd_table(
    n_min: usize,
    n_max: usize,
    format: FormatArg,
    method: MethodArg,
    cap: usize,
) -> Result<(), Failure> {
    if n_min > n_max {
        return Err(Failure::new(2, format!("empty range: {n_min} > {n_max}")));
    }
    let mut rows = Vec::new();
    for n in n_min..=n_max {
        let [ps, pe, cs, ce] = Mode::all(n)?;
        rows.push(TableRow {
            n,
            path_similar: count_via(ps, method, cap)?.to_string(),
            path_equivalent: count_via(pe, method, cap)?.to_string(),
            cycle_similar: count_via(cs, method, cap)?.to_string(),
            cycle_equivalent: count_via(ce, method, cap)?.to_string(),
        });
    }
    match format {
        FormatArg::Text => {
            let headers = [
                "n",
                "path_similar",
                "path_equivalent",
                "cycle_similar",
                "cycle_equivalent",
            ];
            let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
            for row in &rows {
                for (w, cell) in widths.iter_mut().zip(row.cells()) {
                    *w = (*w).max(cell.len());
                }
            }
            let line = |cells: &[String]| {
                cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, &w)| format!("{c:>w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
            };
            println!("{}", line(&headers.map(String::from)));
            for row in &rows {
                println!("{}", line(&row.cells()));
            }
        }
        FormatArg::Csv => {
            println!("n,P_S,P_E,C_S,C_E");
            for row in &rows {
                println!(
                    "{},{},{},{},{}",
                    row.n,
                    row.path_similar,
                    row.path_equivalent,
                    row.cycle_similar,
                    row.cycle_equivalent
                );
            }
        }
        FormatArg::Json => {
            let text = serde_json::to_string_pretty(&rows)
                .map_err(|e| Failure::new(5, format!("serializing table: {e}")))?;
            println!("{text}");
        }
    }
    Ok(())
}

fn cmd_verify(n_max: usize, cap: usize) -> Result<(), Failure> {
    let checks = verify_range_capped(3, n_max, cap)?;
    let mut first_failure: Option<String> = None;
    for check in &checks {
        match check.first_mismatch() {
            None => println!("PASS {} (count {})", check.mode, check.formula),
            Some(message) => {
                println!("FAIL {message}");
                first_failure.get_or_insert(message);
            }
        }
    }
    match first_failure {
        None => Ok(()),
        Some(message) => Err(Failure::new(1, message)),
    }
}

fn cmd_reps(mode: Mode, cap: usize) -> Result<(), Failure> {
    for (rep, _) in enumerate_classes_capped(mode, cap)? {
        println!("{rep}");
    }
    Ok(())
}

fn cmd_render(mode: Mode, out: &PathBuf, columns: usize, cap: usize) -> Result<(), Failure> {
    let svg = render_gallery_capped(mode, columns, &Style::default(), cap)?;
    std::fs::write(out, svg).map_err(|e| io_failure(&out.display().to_string(), e))?;
    Ok(())
}

fn cmd_oeis(id: &str, terms: usize) -> Result<(), Failure> {
    let mode_of = |n| match id {
        "A000940" => Mode::new(GraphKind::Cycle, EquivKind::Similar, n),
        "A000939" => Mode::new(GraphKind::Cycle, EquivKind::Equivalent, n),
        "A099030" => Mode::new(GraphKind::Path, EquivKind::Similar, n),
        _ => Err(Error::Unparseable {
            text: id.to_string(),
        }),
    };
    let mut values = Vec::with_capacity(terms);
    for n in 3..3 + terms {
        let mode = mode_of(n).map_err(|_| {
            Failure::new(2, format!("unknown sequence id {id:?} (expected A000940, A000939, or A099030)"))
        })?;
        values.push(class_count(mode)?.to_string());
    }
    println!("{}", values.join(", "));
    Ok(())
}

//! Command-line front end. [`run`] takes the full argument vector and returns
//! the exit code and both output streams, so it can be tested in-process.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 precondition error (for instance a non-reduced word), 4 sweep-size cap.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::cartan::{CartanType, Family};
use crate::diagrams::{Diagram, ReducedExpression};
use crate::error::{Error, ErrorKind, Result};
use crate::grassmann::{
    is_le_diagram, one_line, pipe_dream_permutation, quantum_matrices_word, render_wiring, GridDiagram,
    GridShape,
};
use crate::root_system::{RootSystem, WeylElement};
use crate::verify::{self, VerifyOptions};
use crate::words::{self, Word};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_SIZE_CAP: i32 = 4;

const AFTER_HELP: &str = "\
Words and diagrams are comma-separated lists of 1-based integers, e.g. --word 1,2,1 \
--diagram 2,3. An empty string is the empty word or the empty diagram. Letters use \
Bourbaki node numbering. Grid boxes are space-separated row,col pairs with row 1 on top, \
e.g. --grid \"1,2 2,2\". JSON output uses the same 1-based positions.

Full sweeps are capped at 24 positions; set WEYL_DIAGRAMS_SWEEP_CAP to change the cap.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 precondition error, \
4 sweep-size cap exceeded.";

#[derive(Debug, Parser)]
#[command(
    name = "weyl-diagrams",
    version,
    about = "Positive diagrams over reduced words in finite Weyl groups",
    after_help = AFTER_HELP
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the positive roots.
    Roots {
        #[command(flatten)]
        system: SystemArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Print the root sequence of a reduced word.
    Betas {
        #[command(flatten)]
        word: WordArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Test whether a diagram is positive.
    Positive {
        #[command(flatten)]
        word: WordArgs,
        #[command(flatten)]
        diagram: DiagramArg,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Map a diagram to the products of its letters (zeta and zeta').
    Zeta {
        #[command(flatten)]
        word: WordArgs,
        #[command(flatten)]
        diagram: DiagramArg,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Build the positive diagram whose zeta-image is a given element.
    DiagramFor {
        #[command(flatten)]
        word: WordArgs,
        /// Any word (not necessarily reduced) for the target element u.
        #[arg(long, value_name = "LETTERS", allow_hyphen_values = true)]
        element: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// List every positive diagram of a word.
    Enumerate {
        #[command(flatten)]
        word: WordArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Size of the Bruhat interval below the element of a word.
    Interval {
        #[command(flatten)]
        word: WordArgs,
        /// Also list a reduced word of every element.
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run every diagram invariant over a word; exit 0 iff all hold.
    Verify {
        #[command(flatten)]
        word: WordArgs,
        /// Also write the JSON report to this file.
        #[arg(long, value_name = "PATH")]
        output: Option<std::path::PathBuf>,
        /// Include wall-clock time in the report.
        #[arg(long)]
        timing: bool,
        /// Include Bruhat-order versus diagram-inclusion statistics.
        #[arg(long)]
        order_stats: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Count positive diagrams of a reduced word of w0 and compare with |W|.
    Census {
        #[command(flatten)]
        system: SystemArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Emit the quantum-matrices word of the p x m grid.
    Qm {
        #[command(flatten)]
        shape: ShapeArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Test the Le condition on a grid filling.
    Le {
        #[command(flatten)]
        shape: ShapeArgs,
        #[command(flatten)]
        grid: GridArg,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Pipe-dream permutation of a grid filling, optionally drawn as wires.
    Pipedream {
        #[command(flatten)]
        shape: ShapeArgs,
        #[command(flatten)]
        grid: GridArg,
        /// Print the permutation in one-line notation (default unless --render).
        #[arg(long)]
        permutation: bool,
        /// Draw the wiring diagram.
        #[arg(long)]
        render: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Debug, Args)]
struct SystemArgs {
    /// Cartan family: A, B, C, D, E, F or G.
    #[arg(long = "type", value_name = "FAMILY")]
    family: String,
    #[arg(long)]
    rank: usize,
}

#[derive(Debug, Args)]
struct WordArgs {
    #[command(flatten)]
    system: SystemArgs,
    /// Reduced word, e.g. 1,2,1.
    #[arg(long, value_name = "LETTERS", allow_hyphen_values = true)]
    word: String,
}

#[derive(Debug, Args)]
struct DiagramArg {
    /// Diagram positions, e.g. 2,3.
    #[arg(long, value_name = "POSITIONS", allow_hyphen_values = true)]
    diagram: String,
}

#[derive(Debug, Args)]
struct ShapeArgs {
    /// Number of grid rows.
    #[arg(long)]
    p: usize,
    /// Number of grid columns.
    #[arg(long)]
    m: usize,
}

#[derive(Debug, Args)]
struct GridArg {
    /// Filled boxes as row,col pairs, e.g. "1,2 2,2".
    #[arg(long, value_name = "BOXES", default_value = "")]
    grid: String,
}

#[derive(Debug, Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Exit code and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// What a command produced before it is turned into an [`Outcome`].
struct Output {
    stdout: String,
    warnings: Vec<String>,
    failed: bool,
}

impl Output {
    fn new(stdout: String) -> Self {
        Output {
            stdout,
            warnings: Vec::new(),
            failed: false,
        }
    }
}

/// Runs one command. `args` includes the program name, as in `std::env::args`.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let text = err.render().to_string();
            return if err.use_stderr() {
                let first = text.lines().next().unwrap_or("error: invalid arguments");
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: format!("{first} (see --help)\n"),
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match execute(cli.command) {
        Ok(out) => {
            let mut stderr = String::new();
            for w in &out.warnings {
                let _ = writeln!(stderr, "warning: {w}");
            }
            Outcome {
                code: if out.failed { EXIT_FAILED } else { EXIT_OK },
                stdout: out.stdout,
                stderr,
            }
        }
        Err(err) => Outcome {
            code: exit_code(&err),
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        },
    }
}

pub fn exit_code(err: &Error) -> i32 {
    match err.kind() {
        ErrorKind::Usage => EXIT_USAGE,
        ErrorKind::Precondition => EXIT_PRECONDITION,
        ErrorKind::SizeCap => EXIT_SIZE_CAP,
    }
}

/// `"1,2,1"` → the word `(1, 2, 1)`; the empty string is the empty word.
pub fn parse_word(text: &str) -> Result<Word> {
    text.parse()
}

/// `"2,3"` → the diagram `{2, 3}`; the empty string is `∅`.
pub fn parse_diagram(text: &str) -> Result<Diagram> {
    text.parse()
}

fn cartan_type(args: &SystemArgs, warnings: &mut Vec<String>) -> Result<CartanType> {
    let family: Family = args.family.parse()?;
    let ctype = CartanType::new(family, args.rank)?;
    if let Some(w) = ctype.warning() {
        warnings.push(w.to_string());
    }
    Ok(ctype)
}

fn json_text<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn braces(diagram: &Diagram) -> String {
    format!("{{{diagram}}}")
}

#[derive(Serialize)]
struct ElementView {
    word: Word,
    length: usize,
    matrix: Vec<Vec<i32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    one_line: Option<Vec<usize>>,
}

impl ElementView {
    fn new(system: &RootSystem, w: &WeylElement) -> Self {
        let one_line = (system.cartan_type().family() == Family::A).then(|| one_line(system, w));
        ElementView {
            word: words::reduced_word(system, w),
            length: w.length(),
            matrix: w.rows(),
            one_line,
        }
    }

    fn describe(&self, name: &str, out: &mut String) {
        let _ = writeln!(out, "{name}: length {}, reduced word ({})", self.length, self.word);
        if let Some(perm) = &self.one_line {
            let perm: Vec<String> = perm.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "{name} one-line: {}", perm.join(" "));
        }
    }
}

fn shape_of(args: &ShapeArgs, warnings: &mut Vec<String>) -> Result<GridShape> {
    let shape = GridShape::new(args.p, args.m)?;
    if shape.is_degenerate() {
        warnings.push(format!(
            "{}x{} grid has a single row or column; the quantum-matrices word is still reduced",
            args.p, args.m
        ));
    }
    Ok(shape)
}

fn execute(command: Command) -> Result<Output> {
    let mut warnings = Vec::new();
    let mut out = match command {
        Command::Roots { system, out } => {
            let ctype = cartan_type(&system, &mut warnings)?;
            let system = RootSystem::new(ctype);
            let text = match out.format {
                Format::Json => json_text(&json!({
                    "type": ctype.to_string(),
                    "positive_roots": system.positive_roots(),
                })),
                Format::Text => system
                    .positive_roots()
                    .iter()
                    .map(|r| format!("{r}\n"))
                    .collect(),
            };
            Output::new(text)
        }

        Command::Betas { word, out } => {
            let ctype = cartan_type(&word.system, &mut warnings)?;
            let system = RootSystem::new(ctype);
            let w = parse_word(&word.word)?;
            let betas = words::root_sequence(&system, &w)?;
            let text = match out.format {
                Format::Json => json_text(&json!({
                    "type": ctype.to_string(),
                    "word": w,
                    "betas": betas,
                })),
                Format::Text => betas
                    .betas()
                    .iter()
                    .enumerate()
                    .map(|(i, b)| format!("beta_{} = {b}\n", i + 1))
                    .collect(),
            };
            Output::new(text)
        }

        Command::Positive { word, diagram, out } => {
            let system = RootSystem::new(cartan_type(&word.system, &mut warnings)?);
            let expr = ReducedExpression::new(&system, parse_word(&word.word)?)?;
            let diagram = parse_diagram(&diagram.diagram)?;
            let positive = expr.is_positive(&diagram)?;
            let text = match out.format {
                Format::Json => json_text(&json!({
                    "word": expr.word(),
                    "diagram": diagram,
                    "positive": positive,
                })),
                Format::Text => format!("{positive}\n"),
            };
            Output::new(text)
        }

        Command::Zeta { word, diagram, out } => {
            let system = RootSystem::new(cartan_type(&word.system, &mut warnings)?);
            let expr = ReducedExpression::new(&system, parse_word(&word.word)?)?;
            let diagram = parse_diagram(&diagram.diagram)?;
            let zeta = ElementView::new(&system, &expr.zeta(&diagram)?);
            let zeta_prime = ElementView::new(&system, &expr.zeta_prime(&diagram)?);
            let positive = expr.is_positive(&diagram)?;
            let text = match out.format {
                Format::Json => json_text(&json!({
                    "word": expr.word(),
                    "diagram": diagram,
                    "positive": positive,
                    "zeta": zeta,
                    "zeta_prime": zeta_prime,
                })),
                Format::Text => {
                    let mut s = String::new();
                    let _ = writeln!(s, "diagram {} (positive: {positive})", braces(&diagram));
                    zeta.describe("zeta", &mut s);
                    zeta_prime.describe("zeta'", &mut s);
                    s
                }
            };
            Output::new(text)
        }

        Command::DiagramFor { word, element, out } => {
            let system = RootSystem::new(cartan_type(&word.system, &mut warnings)?);
            let expr = ReducedExpression::new(&system, parse_word(&word.word)?)?;
            let element_word = parse_word(&element)?;
            let u = system.element_of_word(&element_word)?;
            let found = expr.diagram_for(&u);
            let text = match out.format {
                Format::Json => json_text(&json!({
                    "word": expr.word(),
                    "element": words::reduced_word(&system, &u),
                    "diagram": found,
                })),
                Format::Text => match &found {
                    Some(d) => format!("{}\n", braces(d)),
                    None => "none: the element is not below the word's element in Bruhat order\n".to_string(),
                },
            };
            Output::new(text)
        }

        Command::Enumerate { word, out } => {
            let system = RootSystem::new(cartan_type(&word.system, &mut warnings)?);
            let expr = ReducedExpression::new(&system, parse_word(&word.word)?)?;
            let found = verify::enumerate_positive(&expr)?;
            let text = match out.format {
                Format::Json => json_text(&json!({
                    "word": expr.word(),
                    "count": found.len(),
                    "diagrams": found,
                })),
                Format::Text => {
                    let mut s: String = found.iter().map(|d| format!("{}\n", braces(d))).collect();
                    let _ = writeln!(s, "count: {}", found.len());
                    s
                }
            };
            Output::new(text)
        }

        Command::Interval { word, list, out } => {
            let system = RootSystem::new(cartan_type(&word.system, &mut warnings)?);
            let expr = ReducedExpression::new(&system, parse_word(&word.word)?)?;
            let interval = verify::bruhat_interval(&expr)?;
            let elements: Vec<Word> = interval.iter().map(|u| words::reduced_word(&system, u)).collect();
            let text = match (out.format, list) {
                (Format::Json, true) => json_text(&json!({
                    "word": expr.word(),
                    "interval_count": interval.len(),
                    "elements": elements,
                })),
                (Format::Json, false) => json_text(&json!({
                    "word": expr.word(),
                    "interval_count": interval.len(),
                })),
                (Format::Text, _) => {
                    let mut s = format!("{}\n", interval.len());
                    if list {
                        for w in &elements {
                            let _ = writeln!(s, "({w})");
                        }
                    }
                    s
                }
            };
            Output::new(text)
        }

        Command::Verify {
            word,
            output,
            timing,
            order_stats,
            out,
        } => {
            let system = RootSystem::new(cartan_type(&word.system, &mut warnings)?);
            let expr = ReducedExpression::new(&system, parse_word(&word.word)?)?;
            let report = verify::verify_word(&expr, VerifyOptions { order_stats, timing })?;
            if let Some(path) = output {
                std::fs::write(&path, json_text(&report)).map_err(|e| Error::Output {
                    path: path.display().to_string(),
                    reason: e.to_string(),
                })?;
            }
            let text = match out.format {
                Format::Json => json_text(&report),
                Format::Text => {
                    let mut s = String::new();
                    let _ = writeln!(s, "type: {}", report.cartan_type);
                    let _ = writeln!(s, "word: {}", report.word);
                    let _ = writeln!(s, "total_diagrams: {}", report.total_diagrams);
                    let _ = writeln!(s, "positive_count: {}", report.positive_count);
                    let _ = writeln!(s, "interval_count: {}", report.interval_count);
                    for (key, ok) in report.checks() {
                        let _ = writeln!(s, "{key}: {ok}");
                    }
                    if let Some(stats) = &report.order_stats {
                        let _ = writeln!(
                            s,
                            "order_stats: inclusion pairs {} ({} Bruhat-comparable), Bruhat pairs {} ({} by inclusion)",
                            stats.inclusion_pairs,
                            stats.inclusion_then_bruhat,
                            stats.bruhat_pairs,
                            stats.bruhat_then_inclusion
                        );
                    }
                    if let Some(ms) = report.elapsed_ms {
                        let _ = writeln!(s, "elapsed_ms: {ms}");
                    }
                    let _ = writeln!(s, "verified: {}", report.all_ok());
                    s
                }
            };
            let mut result = Output::new(text);
            result.failed = !report.all_ok();
            result
        }

        Command::Census { system, out } => {
            let ctype = cartan_type(&system, &mut warnings)?;
            let census = verify::longest_word_census(ctype)?;
            let text = match out.format {
                Format::Json => json_text(&census),
                Format::Text => format!(
                    "type {}: N = {}, positive diagrams = {}, |W| = {}\nw0 word: {}\n",
                    census.cartan_type, census.n, census.positive_count, census.group_order, census.word
                ),
            };
            let mut result = Output::new(text);
            result.failed = !census.is_ok();
            result
        }

        Command::Qm { shape, out } => {
            let shape = shape_of(&shape, &mut warnings)?;
            let word = quantum_matrices_word(shape);
            let text = match out.format {
                Format::Json => json_text(&json!({
                    "type": shape.cartan_type().to_string(),
                    "p": shape.rows(),
                    "m": shape.cols(),
                    "word": word,
                })),
                Format::Text => format!("{word}\n"),
            };
            Output::new(text)
        }

        Command::Le { shape, grid, out } => {
            let shape = shape_of(&shape, &mut warnings)?;
            let grid = GridDiagram::parse(shape, &grid.grid)?;
            let le = is_le_diagram(&grid);
            let text = match out.format {
                Format::Json => json_text(&json!({
                    "p": shape.rows(),
                    "m": shape.cols(),
                    "grid": grid.to_string(),
                    "diagram": grid.to_diagram(),
                    "le": le,
                })),
                Format::Text => format!("{le}\n"),
            };
            Output::new(text)
        }

        Command::Pipedream {
            shape,
            grid,
            permutation,
            render,
            out,
        } => {
            let shape = shape_of(&shape, &mut warnings)?;
            let grid = GridDiagram::parse(shape, &grid.grid)?;
            let show_perm = permutation || !render;
            let perm = pipe_dream_permutation(&grid);
            let drawing = render.then(|| render_wiring(&grid));
            let text = match out.format {
                Format::Json => {
                    let mut value = json!({ "p": shape.rows(), "m": shape.cols(), "grid": grid.to_string() });
                    if show_perm {
                        value["permutation"] = json!(perm);
                    }
                    if let Some(d) = &drawing {
                        value["render"] = json!(d);
                    }
                    json_text(&value)
                }
                Format::Text => {
                    let mut s = String::new();
                    if show_perm {
                        let perm: Vec<String> = perm.iter().map(usize::to_string).collect();
                        let _ = writeln!(s, "{}", perm.join(" "));
                    }
                    if let Some(d) = &drawing {
                        s.push_str(d);
                    }
                    s
                }
            };
            Output::new(text)
        }
    };
    out.warnings.extend(warnings);
    Ok(out)
}

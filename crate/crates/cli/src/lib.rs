//! Command-line front end for `tabweb`.

pub mod render;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use tabweb::verify::Verifier;
use tabweb::{
    count_standard, enumerate_standard, shuffle, FormatError, MDiagram, MDiagramError, Shape,
    StandardTableau, TableauError, VerifyError, VerifyReport, Web, WebError,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("ParseError: {0}")]
    Format(#[from] FormatError),
    #[error("TableauError: {0}")]
    Tableau(#[from] TableauError),
    #[error("MDiagramError: {0}")]
    Diagram(#[from] MDiagramError),
    #[error("WebError: {0}")]
    Web(#[from] WebError),
    #[error("VerifyError: {0}")]
    Verify(#[from] VerifyError),
    #[error("bad shape `{0}`: expected `3xN`, `RxC` or a comma list of row lengths, bottom row first")]
    Shape(String),
    #[error("suite `{0}` needs --{1}")]
    MissingParameter(String, &'static str),
    #[error("cannot write {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

#[derive(Debug, Parser)]
#[command(
    name = "tabweb",
    version,
    about = "Three-row standard tableaux, m-diagrams and sl3 webs",
    long_about = "Three-row standard tableaux, m-diagrams and sl3 webs.\n\n\
Every INPUT is either a path to a file or an inline literal.\n\
Tableaux are written bottom row first, rows separated by `/`: \"1 2 / 3 4 / 5 6\".\n\
m-diagrams and webs use their line formats; `;` may replace newlines."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the result here instead of standard output.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Bijection,
    DepthAgreement,
    PromotionRotation,
    ShuffleJoin,
    Extended,
    SlideLemma,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Svg,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the m-diagram of a tableau.
    Tab2m { input: String },
    /// Print the web of a three-row tableau.
    Tab2web { input: String },
    /// Recover a tableau from a web by the depth map.
    Web2tab {
        input: String,
        /// Allow boundary sinks (shapes with a shorter top row).
        #[arg(long)]
        extended: bool,
    },
    /// Jeu-de-taquin promotion of a tableau.
    Promote { input: String },
    /// Rotate a web (or the web of a tableau): label 1 moves to the end.
    Rotate { input: String },
    /// Shuffle INNER into OUTER after position AT.
    Shuffle {
        #[arg(long)]
        at: usize,
        inner: String,
        outer: String,
    },
    /// Insert the web INNER into the web OUTER after boundary label AT.
    Join {
        #[arg(long)]
        at: usize,
        outer: String,
        inner: String,
    },
    /// List every standard tableau of a shape.
    Enumerate {
        /// `3xN`, `RxC`, or row lengths bottom row first, e.g. `2,2,1`.
        #[arg(long)]
        shape: String,
    },
    /// Count the standard tableaux of a shape.
    Count {
        /// `3xN`, `RxC`, or row lengths bottom row first, e.g. `2,2,1`.
        #[arg(long)]
        shape: String,
    },
    /// Run a verification suite; exits with 2 on failure.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Columns for the `3 x n` suites, top-row length for `extended`,
        /// box bound for `slide-lemma`.
        #[arg(long)]
        n: Option<usize>,
        /// Bottom-row length for `extended`.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
    },
    /// Draw a tableau's m-diagram, an m-diagram, or a web.
    Render {
        #[arg(long, value_enum, default_value = "svg")]
        format: Format,
        /// Label each face with its depth.
        #[arg(long)]
        depths: bool,
        input: String,
    },
}

/// Reads a file if `input` names one, otherwise returns it unchanged.
fn read_input(input: &str) -> String {
    let path = Path::new(input);
    if path.is_file() {
        if let Ok(text) = std::fs::read_to_string(path) {
            return text;
        }
    }
    input.to_string()
}

fn tableau(input: &str) -> Result<StandardTableau, CliError> {
    Ok(read_input(input).parse()?)
}

/// A tableau or a web, by the look of the text.
enum Object {
    Tableau(StandardTableau),
    Diagram(MDiagram),
    Web(Web),
}

fn object(input: &str) -> Result<Object, CliError> {
    let text = read_input(input);
    let trimmed = text.trim_start();
    if !trimmed.starts_with("N=") {
        return Ok(Object::Tableau(text.parse()?));
    }
    let is_diagram = text
        .split(['\n', ';'])
        .any(|l| l.trim_start().starts_with("arc "));
    if is_diagram {
        Ok(Object::Diagram(text.parse()?))
    } else {
        Ok(Object::Web(text.parse()?))
    }
}

fn web(input: &str) -> Result<Web, CliError> {
    match object(input)? {
        Object::Tableau(t) => Ok(Web::from_tableau(&t)?),
        Object::Diagram(d) => Ok(tabweb::resolve(&d)?),
        Object::Web(w) => Ok(w),
    }
}

pub fn parse_shape(spec: &str) -> Result<Shape, CliError> {
    let bad = || CliError::Shape(spec.to_string());
    let spec = spec.trim();
    if let Some((r, c)) = spec.split_once(['x', 'X']) {
        let rows: usize = r.trim().parse().map_err(|_| bad())?;
        let cols: usize = c.trim().parse().map_err(|_| bad())?;
        if rows == 0 || cols == 0 {
            return Ok(Shape::empty());
        }
        return Ok(Shape::rectangle(rows, cols));
    }
    let mut rows = spec
        .split(',')
        .map(|p| p.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| bad())?;
    while rows.last() == Some(&0) {
        rows.pop();
    }
    Shape::new(rows).map_err(|_| bad())
}

fn report_text(report: &VerifyReport) -> String {
    let mut out = report.lines().join("\n");
    out.push('\n');
    out
}

/// Result of a command: text to print and whether verification failed.
struct Outcome {
    text: String,
    verification_failed: bool,
}

impl From<String> for Outcome {
    fn from(text: String) -> Self {
        Outcome {
            text,
            verification_failed: false,
        }
    }
}

fn line(s: impl std::fmt::Display) -> String {
    format!("{s}\n")
}

fn execute(command: &Command) -> Result<Outcome, CliError> {
    let out = match command {
        Command::Tab2m { input } => MDiagram::from_tableau(&tableau(input)?).to_string(),
        Command::Tab2web { input } => Web::from_tableau(&tableau(input)?)?.to_string(),
        Command::Web2tab { input, extended } => {
            let w = web(input)?;
            let t = if *extended {
                w.extended_depth_map()?
            } else {
                w.depth_map()?
            };
            line(t)
        }
        Command::Promote { input } => line(tableau(input)?.promote()?),
        Command::Rotate { input } => web(input)?.rotate().to_string(),
        Command::Shuffle { at, inner, outer } => {
            line(shuffle(&tableau(inner)?, *at, &tableau(outer)?)?)
        }
        Command::Join { at, outer, inner } => web(outer)?.join(*at, &web(inner)?)?.to_string(),
        Command::Enumerate { shape } => {
            let shape = parse_shape(shape)?;
            let mut s = String::new();
            for t in enumerate_standard(&shape) {
                s.push_str(&line(t));
            }
            s
        }
        Command::Count { shape } => line(count_standard(&parse_shape(shape)?)),
        Command::Verify {
            suite,
            n,
            k,
            seed,
            trials,
        } => {
            let v = Verifier::default();
            let need_n = |name: &str| n.ok_or_else(|| CliError::MissingParameter(name.into(), "n"));
            let report = match suite {
                Suite::Bijection => v.bijection(need_n("bijection")?)?,
                Suite::DepthAgreement => v.depth_agreement(need_n("depth-agreement")?)?,
                Suite::PromotionRotation => v.promotion_rotation(need_n("promotion-rotation")?)?,
                Suite::ShuffleJoin => v.shuffle_join(*seed, *trials),
                Suite::Extended => {
                    let k = k.ok_or_else(|| CliError::MissingParameter("extended".into(), "k"))?;
                    v.extended(need_n("extended")?, k)?
                }
                Suite::SlideLemma => v.slide_lemma(n.unwrap_or(12))?,
            };
            return Ok(Outcome {
                text: report_text(&report),
                verification_failed: !report.passed(),
            });
        }
        Command::Render {
            format: Format::Svg,
            depths,
            input,
        } => match object(input)? {
            Object::Tableau(t) => render::render_mdiagram(&MDiagram::from_tableau(&t), *depths),
            Object::Diagram(d) => render::render_mdiagram(&d, *depths),
            Object::Web(w) => render::render_web(&w, *depths),
        },
    };
    Ok(out.into())
}

/// Runs the command line. Returns the process exit code: 0 on success, 1
/// on bad input or a domain error, 2 when a verification suite fails.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let outcome = match execute(&cli.command) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return 1;
        }
    };
    match &cli.output {
        Some(path) => {
            if let Err(source) = std::fs::write(path, &outcome.text) {
                let e = CliError::Io {
                    path: path.clone(),
                    source,
                };
                let _ = writeln!(stderr, "error: {e}");
                return 1;
            }
        }
        None => {
            let _ = stdout.write_all(outcome.text.as_bytes());
        }
    }
    if outcome.verification_failed {
        2
    } else {
        0
    }
}

//! The `legfill` command line. Every subcommand reads its inputs, computes
//! and returns its whole output as a string; the binary only prints it and
//! maps errors to exit codes (1 for computation, 2 for input).

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::audit::audit;
use crate::braid::{classify_certificate, parse_bands, parse_braid, Certificate};
use crate::cobordism::{construct_filling, parse_moves, replay_script, verify_trace};
use crate::corpus::{corpus_list, corpus_raw};
use crate::front::{parse_front, tanaka_orientation, OrientedFront};
use crate::homfly::{homfly, homfly_tb_bound, max_framing_degree, HomflyPoly, PlanarDiagram};
use crate::ruling::enumerate_rulings;

#[derive(Debug, Parser)]
#[command(name = "legfill", version, about = "Legendrian fronts, rulings, HOMFLY bounds and decomposable fillings")]
pub struct Cli {
    /// Structured JSON output instead of key=value lines.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// HOMFLY polynomial and tb bound of a braid closure or a front.
    Homfly { file: PathBuf },
    /// Classical invariants of a front.
    Tb { file: PathBuf },
    /// Normal rulings of a front.
    Rulings {
        file: PathBuf,
        #[arg(long)]
        oriented: bool,
    },
    /// Build a decomposable filling by pinching.
    Fill { file: PathBuf },
    /// Replay a move script from the empty front.
    Replay { file: PathBuf },
    /// Slice Euler characteristic of a quasipositive band presentation.
    Chi4 { file: PathBuf },
    /// Positivity level certified by a band presentation or braid word.
    Classify { file: PathBuf },
    /// Conjecture audit of a band presentation against a front.
    Audit {
        #[arg(long)]
        bands: PathBuf,
        #[arg(long)]
        front: PathBuf,
        /// Filling script to fall back on when pinching fails.
        #[arg(long)]
        moves: Option<PathBuf>,
        #[arg(long)]
        label: Option<String>,
    },
    /// Bundled fixtures.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum CorpusAction {
    List,
    Get { label: String },
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Compute(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Compute(_) => 1,
            CliError::Input(_) => 2,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Compute(m) => m,
        }
    }
}

fn input<E: std::fmt::Display>(path: &Path) -> impl FnOnce(E) -> CliError + '_ {
    move |e| CliError::Input(format!("{}: {e}", path.display()))
}

fn compute<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Compute(e.to_string())
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(input(path))
}

fn is_braid_text(text: &str) -> bool {
    text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#')).is_some_and(|l| l.starts_with("n="))
}

fn has_extension(path: &Path, ext: &str) -> bool {
    path.extension().is_some_and(|e| e == ext)
}

fn read_front(path: &Path) -> Result<OrientedFront, CliError> {
    let f = parse_front(&read(path)?).map_err(input(path))?;
    Ok(tanaka_orientation(&f).unwrap_or_else(|| OrientedFront::canonical(f)))
}

fn homfly_of(path: &Path) -> Result<HomflyPoly, CliError> {
    let text = read(path)?;
    let pd = if has_extension(path, "braid") || (!has_extension(path, "front") && is_braid_text(&text)) {
        PlanarDiagram::from_braid(&parse_braid(&text).map_err(input(path))?)
    } else {
        OrientedFront::canonical(parse_front(&text).map_err(input(path))?).to_planar_diagram()
    };
    Ok(homfly(&pd))
}

pub fn run(cli: &Cli) -> Result<String, CliError> {
    let json = cli.json;
    let mut out = String::new();
    match &cli.command {
        Command::Homfly { file } => {
            let p = homfly_of(file)?;
            let deg = max_framing_degree(&p).map_err(compute)?;
            let bound = homfly_tb_bound(&p).map_err(compute)?;
            if json {
                out = json!({ "homfly": p.to_string(), "max_a_degree": deg, "tb_bound": bound }).to_string();
            } else {
                writeln!(out, "homfly={p}\nmax_a_degree={deg}\ntb_bound={bound}").unwrap();
            }
        }
        Command::Tb { file } => {
            let of = read_front(file)?;
            let (tb, rot) = of.classical_invariants();
            let (writhe, cusps) = (of.writhe(), of.front().right_cusp_count());
            let comps = of.front().component_count();
            if json {
                out = json!({ "tb": tb, "rot": rot, "writhe": writhe, "right_cusps": cusps, "components": comps })
                    .to_string();
            } else {
                writeln!(out, "tb={tb}\nrot={rot}\nwrithe={writhe}\nright_cusps={cusps}\ncomponents={comps}").unwrap();
            }
        }
        Command::Rulings { file, oriented } => {
            let of = read_front(file)?;
            let rs = enumerate_rulings(&of, *oriented);
            if json {
                out = serde_json::to_string_pretty(&rs).expect("rulings serialize");
            } else {
                for r in &rs {
                    writeln!(out, "{r}").unwrap();
                }
            }
        }
        Command::Fill { file } => {
            let of = read_front(file)?;
            let t = construct_filling(&of).map_err(compute)?;
            out = if json { serde_json::to_string_pretty(&t).expect("traces serialize") } else { t.to_string() };
        }
        Command::Replay { file } => {
            let moves = parse_moves(&read(file)?).map_err(input(file))?;
            let t = replay_script(&moves).map_err(compute)?;
            if json {
                let report = verify_trace(&t, None);
                out = json!({ "trace": t, "report": report }).to_string();
            } else {
                out = t.to_string();
            }
        }
        Command::Chi4 { file } => {
            let b = parse_bands(&read(file)?).map_err(input(file))?;
            out = if json { json!({ "chi4": b.chi4() }).to_string() } else { format!("chi4={}\n", b.chi4()) };
        }
        Command::Classify { file } => {
            let text = read(file)?;
            let level = if has_extension(file, "braid")
                || (!has_extension(file, "bands")
                    && is_braid_text(&text)
                    && !text.contains("emb")
                    && !text.contains("band"))
            {
                classify_certificate(Certificate::Word(&parse_braid(&text).map_err(input(file))?))
            } else {
                classify_certificate(Certificate::Bands(&parse_bands(&text).map_err(input(file))?))
            };
            out = if json { json!({ "level": level }).to_string() } else { format!("level={level}\n") };
        }
        Command::Audit { bands, front, moves, label } => {
            let b = parse_bands(&read(bands)?).map_err(input(bands))?;
            let of = read_front(front)?;
            let script = match moves {
                Some(m) => parse_moves(&read(m)?).map_err(input(m))?,
                None => Vec::new(),
            };
            let label = label
                .clone()
                .unwrap_or_else(|| front.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default());
            let r = audit(&label, &b, &of, &script).map_err(compute)?;
            out = if json { r.to_json() } else { r.to_string() };
        }
        Command::Corpus { action: CorpusAction::List } => {
            let labels = corpus_list();
            out = if json { json!(labels).to_string() } else { labels.iter().map(|l| format!("{l}\n")).collect() };
        }
        Command::Corpus { action: CorpusAction::Get { label } } => {
            let raw = corpus_raw(label).map_err(|e| CliError::Input(e.to_string()))?;
            if json {
                out = serde_json::to_string_pretty(&raw).expect("fixtures serialize");
            } else {
                for (name, body) in
                    [("braid", raw.braid), ("bands", raw.bands), ("front", raw.front), ("moves", raw.moves)]
                {
                    writeln!(out, "# {name}").unwrap();
                    out.push_str(body);
                    if !body.is_empty() && !body.ends_with('\n') {
                        out.push('\n');
                    }
                }
            }
        }
    }
    if json && !out.ends_with('\n') {
        out.push('\n');
    }
    Ok(out)
}

/// Parses `args` (program name first), runs, and returns the exit code
/// together with what belongs on stdout and stderr.
pub fn run_args<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => match run(&cli) {
            Ok(s) => (0, s, String::new()),
            Err(e) => (e.exit_code(), String::new(), format!("error: {}\n", e.message())),
        },
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                (0, text, String::new())
            } else {
                (2, String::new(), text)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_commands() {
        let (code, out, _) = run_args(["legfill", "corpus", "list"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 8);
        let (code, out, _) = run_args(["legfill", "corpus", "get", "unknot"]);
        assert_eq!(code, 0);
        assert!(out.contains("# front\nL 1\nR 1\n"));
        let (code, _, err) = run_args(["legfill", "corpus", "get", "nope"]);
        assert_eq!(code, 2);
        assert!(err.contains("nope"));
    }

    #[test]
    fn usage_errors_are_input_errors() {
        assert_eq!(run_args(["legfill", "frobnicate"]).0, 2);
        assert_eq!(run_args(["legfill", "tb", "/no/such/file.front"]).0, 2);
    }

    #[test]
    fn braid_sniffing() {
        assert!(is_braid_text("n=2\n1 1 1\n"));
        assert!(!is_braid_text("L 1\nR 1\n"));
    }
}

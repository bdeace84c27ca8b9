//! Command-line front end. Exit status: 0 success or true, 1 checked false
//! (inequality, failed verification), 2 usage or input error.

use std::fs;
use std::io::{Read, Write};

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use crate::braid::BraidWord;
use crate::cabling::WidthVector;
use crate::decreasing::{component, decreasing_product, ProductSpec};
use crate::derived::{left_derived, right_derived, satisfies_lr};
use crate::notation::{flatten, parse_artin, parse_rows};
use crate::render::{render, Format, RenderOptions};
use crate::search::{search_lr, SearchConfig, DEFAULT_MAX_ELEMENTS};
use crate::verify::{verify_components_up_to, verify_paper_figures, verify_theorem_up_to};
use crate::word_problem::{equal, normal_form};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "braids", version, about = "Derived braids, decreasing products and the braid word problem")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RenderFormat {
    Svg,
    Tikz,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse Artin or row notation into a braid
    #[command(group(ArgGroup::new("input").required(true).args(["rows", "artin"])))]
    Parse {
        #[arg(long)]
        strands: usize,
        #[arg(long, allow_hyphen_values = true)]
        rows: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        artin: Option<String>,
        /// Emit canonical JSON instead of Artin notation
        #[arg(long)]
        json: bool,
    },
    /// Decide group equality of two braids
    Equal { a: String, b: String },
    /// Garside left normal form
    Nf { a: String },
    /// Left or right derived braid
    Derive {
        #[arg(long, value_enum)]
        side: Side,
        a: String,
    },
    /// Whether Lx = Rx
    Satisfies { a: String },
    /// Decreasing-product component b_k in B_2n
    Component {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Decreasing product of components with increasing indices
    Product {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        indices: Vec<usize>,
    },
    /// Run a verification suite
    #[command(group(ArgGroup::new("suite").required(true).args(["proposition1", "theorem", "figures"])))]
    Verify {
        /// Every component for n = 1..=n-max (default 8)
        #[arg(long)]
        proposition1: bool,
        /// Every decreasing product for n = 1..=n-max (default 6)
        #[arg(long)]
        theorem: bool,
        /// Transcribed figure equalities
        #[arg(long)]
        figures: bool,
        #[arg(long)]
        n_max: Option<usize>,
    },
    /// Enumerate braids up to a word length and test Lx = Rx
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_len: usize,
        #[arg(long)]
        signed: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_ELEMENTS)]
        max_elements: usize,
    },
    /// Draw a braid
    Render {
        #[arg(long, value_enum)]
        format: RenderFormat,
        a: String,
        /// Strand labels for SVG output, e.g. 2,2,1,1
        #[arg(long, value_delimiter = ',')]
        labels: Option<Vec<usize>>,
    },
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
}

type CmdResult = Result<i32, String>;

fn read_braid(path: &str, io: &mut Io<'_>) -> Result<BraidWord, String> {
    let text = if path == "-" {
        let mut buf = String::new();
        io.stdin.read_to_string(&mut buf).map_err(|e| format!("stdin: {e}"))?;
        buf
    } else {
        fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?
    };
    BraidWord::from_json(&text).map_err(|e| format!("{path}: {e}"))
}

fn emit(io: &mut Io<'_>, text: &str) -> Result<(), String> {
    writeln!(io.out, "{text}").map_err(|e| e.to_string())
}

fn verdict(ok: bool) -> i32 {
    if ok {
        EXIT_OK
    } else {
        EXIT_FALSE
    }
}

fn execute(command: Command, io: &mut Io<'_>) -> CmdResult {
    let err = |e: crate::error::BraidError| e.to_string();
    match command {
        Command::Parse {
            strands,
            rows,
            artin,
            json,
        } => {
            let braid = match (rows, artin) {
                (Some(rows), _) => flatten(&parse_rows(&rows, strands).map_err(err)?),
                (None, Some(artin)) => parse_artin(&artin, strands).map_err(err)?,
                (None, None) => unreachable!("clap enforces one input"),
            };
            emit(io, &if json { braid.to_json() } else { braid.to_artin() })?;
            Ok(EXIT_OK)
        }
        Command::Equal { a, b } => {
            let a = read_braid(&a, io)?;
            let b = read_braid(&b, io)?;
            let same = equal(&a, &b).map_err(err)?;
            emit(io, if same { "equal" } else { "not equal" })?;
            Ok(verdict(same))
        }
        Command::Nf { a } => {
            let nf = normal_form(&read_braid(&a, io)?);
            emit(io, &serde_json::to_string(&nf).map_err(|e| e.to_string())?)?;
            Ok(EXIT_OK)
        }
        Command::Derive { side, a } => {
            let x = read_braid(&a, io)?;
            let d = match side {
                Side::Left => left_derived(&x),
                Side::Right => right_derived(&x),
            }
            .map_err(err)?;
            emit(io, &d.to_json())?;
            Ok(EXIT_OK)
        }
        Command::Satisfies { a } => {
            let ok = satisfies_lr(&read_braid(&a, io)?).map_err(err)?;
            emit(io, if ok { "true" } else { "false" })?;
            Ok(verdict(ok))
        }
        Command::Component { n, k } => {
            emit(io, &component(n, k).map_err(err)?.to_json())?;
            Ok(EXIT_OK)
        }
        Command::Product { n, indices } => {
            let spec = ProductSpec::new(n, indices).map_err(err)?;
            emit(io, &decreasing_product(&spec).map_err(err)?.to_json())?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            proposition1,
            theorem,
            figures,
            n_max,
        } => {
            let report = if proposition1 {
                verify_components_up_to(n_max.unwrap_or(8))
            } else if theorem {
                verify_theorem_up_to(n_max.unwrap_or(6))
            } else {
                debug_assert!(figures);
                verify_paper_figures()
            }
            .map_err(err)?;
            emit(io, &report.to_json())?;
            Ok(verdict(report.pass))
        }
        Command::Search {
            n,
            max_len,
            signed,
            max_elements,
        } => {
            let config = SearchConfig {
                n,
                max_len,
                signed,
                max_elements,
            };
            emit(io, &search_lr(&config).map_err(err)?.to_json())?;
            Ok(EXIT_OK)
        }
        Command::Render { format, a, labels } => {
            let b = read_braid(&a, io)?;
            let format = match format {
                RenderFormat::Svg => Format::Svg,
                RenderFormat::Tikz => Format::Tikz,
            };
            if labels.is_some() && format == Format::Tikz {
                return Err("--labels only applies to SVG output".into());
            }
            let labels = labels.map(WidthVector::new).transpose().map_err(err)?;
            let opts = RenderOptions {
                format,
                labels,
                ..RenderOptions::default()
            };
            let text = render(&b, &opts).map_err(err)?;
            write!(io.out, "{}", text).map_err(|e| e.to_string())?;
            if format == Format::Tikz {
                writeln!(io.out).map_err(|e| e.to_string())?;
            }
            Ok(EXIT_OK)
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, errout: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
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
                    let _ = write!(errout, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    let mut io = Io { stdin, out };
    match execute(cli.command, &mut io) {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(errout, "error: {message}");
            EXIT_USAGE
        }
    }
}

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use monocover::{constructor, formulas, io as cio, oracle};
use monocover::{Covering, Direction, Error, Rational, RectDims, Tile};

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INFEASIBLE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "monocover",
    version,
    about = "Coverings of lattice rectangles by monotonous polyominoes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Minimum number of tiles covering the M x N rectangle
    P { m: u64, n: u64 },
    /// Maximal width coverable at height N with P tiles
    Width { n: u64, p: u64 },
    /// Maximal width coverable at height N with I increasing and D decreasing tiles
    WidthId { n: u64, i: u64, d: u64 },
    /// Build a covering of the M x N rectangle
    Cover {
        m: u32,
        n: u32,
        /// Use I increasing and D decreasing tiles instead of a minimum covering
        #[arg(long, num_args = 2, value_names = ["I", "D"])]
        split: Option<Vec<u32>>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Check a JSON covering or an ASCII grid; FILE defaults to standard input
    Verify {
        file: Option<PathBuf>,
        /// Also require the minimum number of tiles
        #[arg(long)]
        expect_min: bool,
    },
    /// Exhaustive search on small boards
    Oracle {
        #[command(subcommand)]
        query: OracleQuery,
    },
    /// Tile induced by the segment of y = SLOPE x + INTERCEPT over X0..X1
    Line {
        #[arg(allow_hyphen_values = true)]
        slope: String,
        #[arg(allow_hyphen_values = true)]
        intercept: String,
        #[arg(allow_hyphen_values = true)]
        x0: i64,
        #[arg(allow_hyphen_values = true)]
        x1: i64,
        m: u32,
        n: u32,
    },
    /// Table of minimum tile counts for M, N <= PMAX
    Table {
        pmax: u64,
        #[arg(long)]
        csv: bool,
    },
}

#[derive(Subcommand)]
enum OracleQuery {
    /// Exact minimum covering count
    Min {
        m: u32,
        n: u32,
        #[arg(long, value_enum)]
        dir: Option<Dir>,
        /// Print a witness covering as JSON after the count
        #[arg(long)]
        witness: bool,
    },
    /// Exact maximal width of an (I, D)-covering at height N
    Width { n: u32, i: u32, d: u32 },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Ascii,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum Dir {
    Inc,
    Dec,
}

enum Failure {
    Error(Error),
    Io(io::Error),
    Rejected(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn parse_rational(text: &str) -> Result<Rational, Failure> {
    text.parse::<Rational>()
        .map_err(|_| Failure::Error(Error::Usage(format!("not a rational a/b: {text:?}"))))
}

fn emit(text: &str, output: Option<&PathBuf>) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn read_input(file: Option<&PathBuf>) -> Result<String, Failure> {
    match file {
        Some(path) if path.as_os_str() != "-" => Ok(fs::read_to_string(path)?),
        _ => {
            let mut text = String::new();
            io::stdin().read_to_string(&mut text)?;
            Ok(text)
        }
    }
}

fn verify(c: &Covering, expect_min: bool) -> Result<String, Failure> {
    let dims = c.dims();
    let missing = dims.cell_count() - c.union().len();
    if missing > 0 {
        return Err(Failure::Rejected(format!(
            "not a covering: {missing} of {} cells uncovered",
            dims.cell_count()
        )));
    }
    if expect_min {
        let p = formulas::min_tiles(dims.m.into(), dims.n.into());
        if c.len() as u64 != p {
            return Err(Failure::Rejected(format!(
                "covering uses {} tiles, the minimum is {p}",
                c.len()
            )));
        }
    }
    Ok(format!("ok: {dims} covered by {} tiles\n", c.len()))
}

// A grid hides tiles whose cells are all shared, so it cannot certify a count.
fn verify_grid(text: &str, expect_min: bool) -> Result<String, Failure> {
    if expect_min {
        return Err(Error::Usage("--expect-min needs JSON input".into()).into());
    }
    if text.trim().is_empty() {
        return Err(Failure::Rejected("empty input".into()));
    }
    let (dims, missing) =
        cio::ascii_coverage(text).map_err(|e| Failure::Rejected(e.to_string()))?;
    if missing > 0 {
        return Err(Failure::Rejected(format!(
            "not a covering: {missing} of {} cells uncovered",
            dims.cell_count()
        )));
    }
    Ok(format!("ok: {dims} grid fully covered\n"))
}

fn table(pmax: u64, csv: bool) -> String {
    let mut out = String::new();
    let width = (pmax.to_string().len()).max(2);
    if csv {
        out.push_str("n\\m");
        for m in 1..=pmax {
            out.push_str(&format!(",{m}"));
        }
        out.push('\n');
        for n in 1..=pmax {
            out.push_str(&n.to_string());
            for m in 1..=pmax {
                out.push_str(&format!(",{}", formulas::min_tiles(m, n)));
            }
            out.push('\n');
        }
    } else {
        out.push_str(&format!("{:>width$}", "n\\m"));
        for m in 1..=pmax {
            out.push_str(&format!(" {m:>width$}"));
        }
        out.push('\n');
        for n in 1..=pmax {
            out.push_str(&format!("{n:>width$}"));
            for m in 1..=pmax {
                out.push_str(&format!(" {:>width$}", formulas::min_tiles(m, n)));
            }
            out.push('\n');
        }
    }
    out
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::P { m, n } => println!("{}", formulas::min_tiles(m, n)),
        Command::Width { n, p } => println!("{}", formulas::max_width(n, p)),
        Command::WidthId { n, i, d } => println!("{}", formulas::max_width_split(n, i, d)?),
        Command::Cover {
            m,
            n,
            split,
            format,
            output,
        } => {
            let c = match split.as_deref() {
                Some(&[i, d]) => constructor::construct_id_covering(m, n, i, d)?,
                Some(_) => return Err(Error::Usage("--split takes I and D".into()).into()),
                None => constructor::construct_min_covering(m, n)?,
            };
            let text = match format {
                Format::Json => cio::covering_to_json(&c) + "\n",
                Format::Ascii => cio::ascii_render(&c),
                Format::Svg => cio::svg_render(&c),
            };
            emit(&text, output.as_ref())?;
        }
        Command::Verify { file, expect_min } => {
            let text = read_input(file.as_ref())?;
            if text.trim_start().starts_with('{') {
                let c =
                    cio::covering_from_json(&text).map_err(|e| Failure::Rejected(e.to_string()))?;
                print!("{}", verify(&c, expect_min)?);
            } else {
                print!("{}", verify_grid(&text, expect_min)?);
            }
        }
        Command::Oracle { query } => match query {
            OracleQuery::Min { m, n, dir, witness } => {
                let dir = dir.map(|d| match d {
                    Dir::Inc => Direction::Increasing,
                    Dir::Dec => Direction::Decreasing,
                });
                let (count, c) = oracle::min_cover_exact(m, n, dir)?;
                println!("{count}");
                if witness {
                    println!("{}", cio::covering_to_json(&c));
                }
            }
            OracleQuery::Width { n, i, d } => println!("{}", oracle::max_width_exact(n, i, d)?),
        },
        Command::Line {
            slope,
            intercept,
            x0,
            x1,
            m,
            n,
        } => {
            let tile = Tile::from_line(
                parse_rational(&slope)?,
                parse_rational(&intercept)?,
                x0,
                x1,
                RectDims::new(m, n),
            )?;
            println!("{}", cio::tile_to_json(&tile));
        }
        Command::Table { pmax, csv } => print!("{}", table(pmax, csv)),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Rejected(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(EXIT_FAILED)
        }
        Err(Failure::Io(e)) => {
            eprintln!("i/o error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Error(e)) => {
            eprintln!("{e}");
            match e {
                Error::Infeasible(_) => ExitCode::from(EXIT_INFEASIBLE),
                Error::Internal(_) => ExitCode::FAILURE,
                _ => ExitCode::from(EXIT_USAGE),
            }
        }
    }
}

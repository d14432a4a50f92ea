use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hibi::algebra::OrderKind;
use hibi::cli::{self, AnalyzeOptions, OrderSample, Report, SweepOptions};
use hibi::io::read_input;
use hibi::Error;

#[derive(Parser)]
#[command(name = "hibi", version, about = "Hibi rings of finite distributive lattices")]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    Lex,
    Degrevlex,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants, canonical module and checks for one input.
    Analyze {
        input: PathBuf,
        /// Also compare with the lattice of r-multichains.
        #[arg(long)]
        r: Option<usize>,
        /// Betti table bounded by `i,j`, e.g. `3,6`.
        #[arg(long, value_parser = parse_pair)]
        betti: Option<(usize, usize)>,
        /// Largest poset for the canonical module search.
        #[arg(long, default_value_t = hibi::invariants::DEFAULT_MAX_T_POSET)]
        max_canonical: usize,
        /// Largest lattice for the Groebner basis check.
        #[arg(long, default_value_t = 24)]
        max_groebner: usize,
        /// Write the report here instead of stdout.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Run checks over all small posets and planar lattices.
    Sweep {
        /// Posets with at most this many elements.
        #[arg(long)]
        max_elements: Option<usize>,
        /// Planar lattices in the frame `m,n`.
        #[arg(long, value_parser = parse_pair)]
        planar_frame: Option<(usize, usize)>,
        /// Comma separated check names; all by default.
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Largest lattice given a complete Betti table.
        #[arg(long, default_value_t = 12)]
        max_betti_lattice: usize,
        /// Write the JSON lines here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Groebner basis of the join-meet ideal.
    Groebner {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Order::Degrevlex)]
        order: Order,
        /// `all` for every variable ranking with both orders, or a count
        /// of random orders.
        #[arg(long)]
        sample_orders: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Graded Betti numbers up to homological degree i and degree j.
    Betti {
        input: PathBuf,
        #[arg(long)]
        max_i: usize,
        #[arg(long)]
        max_j: usize,
        #[arg(long)]
        multigraded: bool,
    },
    /// Classify a planar distributive lattice.
    PlanarClassify {
        input: PathBuf,
        /// Compare predictions with a Betti table bounded by `i,j`.
        #[arg(long, value_parser = parse_pair)]
        observe: Option<(usize, usize)>,
    },
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected two numbers `a,b`")?;
    let n = |t: &str| t.trim().parse::<usize>().map_err(|e| e.to_string());
    Ok((n(a)?, n(b)?))
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), Error> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| io_error(p, e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn io_error(p: &Path, e: std::io::Error) -> Error {
    Error::Parse {
        line: 0,
        column: 0,
        message: format!("{}: {e}", p.display()),
    }
}

fn emit(report: Report, out: Option<&Path>) -> Result<ExitCode, Error> {
    write_out(out, &format!("{}\n", serde_json::to_string_pretty(&report.value).unwrap()))?;
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(4)
    })
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Analyze {
            input,
            r,
            betti,
            max_canonical,
            max_groebner,
            json,
        } => {
            let opts = AnalyzeOptions {
                r,
                betti,
                max_canonical,
                max_groebner,
            };
            emit(cli::analyze(&read_input(&input)?, &opts)?, json.as_deref())
        }
        Command::Sweep {
            max_elements,
            planar_frame,
            checks,
            jobs,
            max_betti_lattice,
            out,
        } => {
            let opts = SweepOptions {
                max_elements,
                planar_frame: planar_frame.map(|(m, n)| (m as u32, n as u32)),
                checks,
                jobs,
                max_betti_lattice,
            };
            let summary = match &out {
                Some(p) => {
                    let mut f = std::io::BufWriter::new(std::fs::File::create(p).map_err(|e| io_error(p, e))?);
                    cli::sweep(&opts, &mut f)?
                }
                None => cli::sweep(&opts, &mut std::io::stdout().lock())?,
            };
            eprintln!("{}", serde_json::to_string(&summary).unwrap());
            Ok(if summary.violations.is_empty() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(4)
            })
        }
        Command::Groebner {
            input,
            order,
            sample_orders,
            seed,
        } => {
            let kind = match order {
                Order::Lex => OrderKind::Lex,
                Order::Degrevlex => OrderKind::DegRevLex,
            };
            let sampling = match sample_orders.as_deref() {
                None => None,
                Some("all") => Some(OrderSample::All),
                Some(n) => Some(OrderSample::Random {
                    count: n.parse().map_err(|_| Error::Parse {
                        line: 0,
                        column: 0,
                        message: format!("--sample-orders expects `all` or a count, got `{n}`"),
                    })?,
                    seed,
                }),
            };
            emit(cli::groebner_report(&read_input(&input)?, kind, sampling)?, None)
        }
        Command::Betti {
            input,
            max_i,
            max_j,
            multigraded,
        } => emit(cli::betti_report(&read_input(&input)?, max_i, max_j, multigraded)?, None),
        Command::PlanarClassify { input, observe } => emit(cli::planar_report(&read_input(&input)?, observe)?, None),
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(args.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(cli::exit_code(&e) as u8)
        }
    }
}

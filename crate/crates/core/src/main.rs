use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dnacodes::cli::{self, Method, Mode, SearchOptions, WordFormat};
use dnacodes::code::{CodeReport, DEFAULT_DIM_CAP};
use dnacodes::{Error, Flavor};

#[derive(Parser)]
#[command(name = "dnacodes", version, about = "Cyclic DNA codes over F2 + uF2 + u^2F2")]
struct Args {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Reversible,
    Rc,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Theorem,
    Oracle,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum FlavorArg {
    Euclidean,
    Hermitian,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Tokens,
    Dna,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the DNA strings of the worked example's multiples and shifts.
    Table2,
    /// Check reversibility or reverse-complement closure of a code.
    Check {
        /// JSON spec, inline or as a file path.
        #[arg(long)]
        spec: String,
        #[arg(long, value_enum, default_value = "reversible")]
        mode: ModeArg,
        #[arg(long, value_enum, default_value = "both")]
        method: MethodArg,
        #[arg(long, default_value_t = DEFAULT_DIM_CAP)]
        cap: usize,
    },
    /// Search certified codes of length n; prints one JSON line per hit.
    Search {
        #[arg(short, long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        min_distance: u32,
        #[arg(long, value_enum, default_value = "rc")]
        require: ModeArg,
        #[arg(long, default_value_t = DEFAULT_DIM_CAP)]
        cap: usize,
        #[arg(long, default_value_t = 1_000_000)]
        max_candidates: u64,
    },
    /// Summarise the dual code.
    Dual {
        #[arg(long)]
        spec: String,
        #[arg(long, value_enum, default_value = "euclidean")]
        flavor: FlavorArg,
    },
    /// Minimum Hamming distance (null for the zero code).
    Distance {
        #[arg(long)]
        spec: String,
        #[arg(long, default_value_t = DEFAULT_DIM_CAP)]
        cap: usize,
    },
    /// List every codeword.
    Enumerate {
        #[arg(long)]
        spec: String,
        #[arg(long, value_enum, default_value = "tokens")]
        format: FormatArg,
        #[arg(long, default_value_t = DEFAULT_DIM_CAP)]
        cap: usize,
    },
    /// Canonical structure-theorem presentation.
    Canonical {
        #[arg(long)]
        spec: String,
    },
    /// Dimension, distance, closure flags and presentation.
    Report {
        #[arg(long)]
        spec: String,
        #[arg(long, default_value_t = DEFAULT_DIM_CAP)]
        cap: usize,
    },
}

fn mode(m: ModeArg) -> Mode {
    match m {
        ModeArg::Reversible => Mode::Reversible,
        ModeArg::Rc => Mode::Rc,
    }
}

fn json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable")
}

fn run(args: Args) -> Result<i32, Error> {
    match args.cmd {
        Cmd::Table2 => {
            for s in cli::table2() {
                println!("{s}");
            }
        }
        Cmd::Check { spec, mode: m, method, cap } => {
            let method = match method {
                MethodArg::Theorem => Method::Theorem,
                MethodArg::Oracle => Method::Oracle,
                MethodArg::Both => Method::Both,
            };
            let r = cli::check(&cli::load_spec(&spec)?, mode(m), method, cap)?;
            println!("{}", json(&r));
            return Ok(r.exit_code());
        }
        Cmd::Search { n, min_distance, require, cap, max_candidates } => {
            let res = cli::search(SearchOptions {
                n,
                min_distance,
                require: mode(require),
                cap,
                max_candidates,
            })?;
            for h in &res.hits {
                println!("{}", json(h));
            }
            println!("{}", json(&serde_json::json!({ "summary": res.summary })));
            if res.summary.truncated {
                return Ok(cli::EXIT_CAP);
            }
        }
        Cmd::Dual { spec, flavor } => {
            let flavor = match flavor {
                FlavorArg::Euclidean => Flavor::Euclidean,
                FlavorArg::Hermitian => Flavor::Hermitian,
            };
            println!("{}", json(&cli::dual(&cli::load_spec(&spec)?, flavor)?));
        }
        Cmd::Distance { spec, cap } => {
            let d = cli::distance(&cli::load_spec(&spec)?, cap)?;
            println!("{}", json(&serde_json::json!({ "min_distance": d })));
        }
        Cmd::Enumerate { spec, format, cap } => {
            let format = match format {
                FormatArg::Tokens => WordFormat::Tokens,
                FormatArg::Dna => WordFormat::Dna,
            };
            for w in cli::enumerate(&cli::load_spec(&spec)?, format, cap)? {
                println!("{w}");
            }
        }
        Cmd::Canonical { spec } => {
            println!("{}", json(&cli::canonical(&cli::load_spec(&spec)?)?));
        }
        Cmd::Report { spec, cap } => {
            let code = cli::load_spec(&spec)?.build()?;
            println!("{}", json(&CodeReport::new(&code, cap)?));
        }
    }
    Ok(cli::EXIT_OK)
}

fn main() -> ExitCode {
    let code = match run(Args::parse()) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            cli::exit_code_for(&e)
        }
    };
    ExitCode::from(code as u8)
}

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use comtet::bijections::{self, AdmissibleWord};
use comtet::engine::{self, distribution_matrix};
use comtet::genfun::closed_form;
use comtet::gentree::GenTree;
use comtet::verify::{self, Bounds, Verdict};
use comtet::{json, Error, PatternSet, Permutation};

#[derive(Parser)]
#[command(name = "comtet", version, about = "Pattern classes under the iar and comp statistics")]
struct Cli {
    /// Worker threads for enumeration.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Number of length-n permutations avoiding the patterns.
    Count {
        #[arg(long)]
        patterns: String,
        #[arg(long)]
        n: usize,
    },
    /// List the avoiders, one per line.
    Enumerate {
        #[arg(long)]
        patterns: String,
        #[arg(long)]
        n: usize,
    },
    /// Joint (iar, comp) matrix; rows are iar, columns comp.
    Matrix {
        #[arg(long)]
        patterns: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Closed-form (des, iar, comp) series in (t, r, p).
    Gf {
        #[arg(long)]
        patterns: String,
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Apply a bijection to a permutation or admissible word.
    Bijection {
        #[arg(long)]
        name: String,
        #[arg(long)]
        input: String,
    },
    /// Generating-tree dump, one line per level.
    Tree {
        #[arg(long)]
        patterns: String,
        #[arg(long)]
        depth: usize,
    },
    /// Run a named verification suite.
    Verify {
        /// Suite name, or `list` to show them all.
        #[arg(long)]
        check: String,
        #[arg(long)]
        nmax: Option<usize>,
        #[arg(long)]
        order: Option<usize>,
        #[arg(long)]
        depth: Option<usize>,
        /// Candidate pairs for the sweep, separated by `;`.
        #[arg(long)]
        patterns: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn code(e: &Error) -> u8 {
    match e {
        Error::Precondition(_) => 3,
        Error::InvalidInput(_) | Error::Parse(_) | Error::UnsupportedPattern(_) => 2,
        _ => 1,
    }
}

fn pattern_set(s: &str) -> comtet::Result<PatternSet> {
    PatternSet::parse(s)
}

fn word_or_perm(name: &str, input: &str) -> comtet::Result<String> {
    let p = || input.parse::<Permutation>();
    let w = || AdmissibleWord::parse(input);
    Ok(match name {
        "alpha" => bijections::alpha(&p()?)?.to_string(),
        "beta" => bijections::beta(&p()?)?.to_string(),
        "alpha-inv" => bijections::alpha_inv(&w()?).to_string(),
        "beta-inv" => bijections::beta_inv(&w()?).to_string(),
        "psi" => bijections::psi(&w()?)?.to_string(),
        "psi-inv" => bijections::psi_inv(&w()?)?.to_string(),
        "xi" => bijections::xi(&p()?)?.to_string(),
        "xi-inv" => bijections::xi_inv(&p()?)?.to_string(),
        "phi" => bijections::phi(&p()?)?.to_string(),
        "phi-inv" => bijections::phi_inv(&p()?)?.to_string(),
        "theta" => bijections::theta(&p()?)?.to_string(),
        "theta-inv" => bijections::theta_inv(&p()?)?.to_string(),
        "witness321" => bijections::symmetry_witness_321(&p()?)?.to_string(),
        "witness312" => bijections::symmetry_witness_312(&p()?)?.to_string(),
        "witness132" => bijections::symmetry_witness_132(&p()?)?.to_string(),
        other => return Err(Error::InvalidInput(format!("unknown bijection {other:?}"))),
    })
}

fn run(cmd: Cmd) -> comtet::Result<u8> {
    match cmd {
        Cmd::Count { patterns, n } => println!("{}", engine::count(n, &pattern_set(&patterns)?)),
        Cmd::Enumerate { patterns, n } => {
            for pi in engine::enumerate(n, &pattern_set(&patterns)?) {
                println!("{pi}");
            }
        }
        Cmd::Matrix { patterns, n, format } => {
            let p = pattern_set(&patterns)?;
            let m = distribution_matrix(n, &p)?;
            match format {
                Format::Text => println!("{m}"),
                Format::Json => println!("{}", json::matrix_string(&p, &m)),
            }
        }
        Cmd::Gf { patterns, order, format } => {
            let s = closed_form(&pattern_set(&patterns)?, order)?;
            match format {
                Format::Text => println!("{s}"),
                Format::Json => println!("{}", json::series_string(&s)),
            }
        }
        Cmd::Bijection { name, input } => println!("{}", word_or_perm(&name, &input)?),
        Cmd::Tree { patterns, depth } => {
            if depth == 0 {
                return Err(Error::InvalidInput("depth must be at least 1".into()));
            }
            for line in GenTree::concrete(&pattern_set(&patterns)?, depth).dump() {
                println!("{line}");
            }
        }
        Cmd::Verify { check, nmax, order, depth, patterns, format } => {
            if check == "list" {
                for c in verify::CHECKS {
                    println!("{:<18} {}", c.name, c.summary);
                }
                return Ok(0);
            }
            let candidates = patterns
                .map(|s| s.split(';').map(|p| pattern_set(p.trim())).collect::<comtet::Result<Vec<_>>>())
                .transpose()?;
            let report = verify::run(&check, &Bounds { nmax, order, depth, candidates })?;
            match format {
                Format::Text => print!("{report}"),
                Format::Json => println!("{}", serde_json::to_string(&report).expect("plain data serializes")),
            }
            return Ok(if report.verdict == Verdict::Fail { 1 } else { 0 });
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.threads.max(1)).build_global() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match run(cli.cmd) {
        Ok(c) => ExitCode::from(c),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(code(&e))
        }
    }
}

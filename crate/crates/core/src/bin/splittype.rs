use std::io::{IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use galois_scan::disc_bound::{build_beta_matrix, charpoly, verify_beta_root};
use galois_scan::galois_id::{determine, DetermineOptions, GaloisError, Mode};
use galois_scan::parse::PolySpec;
use galois_scan::perm_groups::run_verifier_suite;
use galois_scan::report::{self, ReportOptions};
use galois_scan::tables::engine_table;
use galois_scan::{compute_bound_chain, BoundError, Verdict};

const ENV_HELP: &str = "\
Environment:
  SPLITTYPE_NO_TIMESTAMP  if set to anything but 0, omit the generated_at field
  SPLITTYPE_COLOR         always, never or auto (default); NO_COLOR disables color

Exit codes: 0 success, 1 verification failure, 2 input error, 3 unsupported degree";

#[derive(Parser)]
#[command(name = "splittype", version, about = "Galois groups of integer polynomials from factorization types mod p")]
#[command(after_help = ENV_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Scan primes and identify the Galois group of a monic irreducible
    /// cubic, quartic or quintic.
    Analyze {
        /// `x^3 - 3x - 1` or a descending coefficient list `1,0,-3,-1`.
        poly: PolySpec,
        #[arg(long, default_value_t = 1000)]
        prime_limit: u64,
        #[arg(long, default_value = "strict")]
        mode: Mode,
        #[arg(long, value_enum, default_value = "text")]
        emit: Emit,
        /// Include observed and expected type frequencies.
        #[arg(long)]
        frequencies: bool,
        /// Do not use the squareness of the discriminant.
        #[arg(long)]
        no_disc_refinement: bool,
        /// Stop at the first prime that leaves a single candidate.
        #[arg(long)]
        early_exit: bool,
        /// Attach the discriminant bound chain.
        #[arg(long)]
        with_bound: bool,
        /// Exponent A of the prime bound, a positive rational.
        #[arg(long = "A", value_name = "A")]
        a: Option<BigRational>,
        #[arg(long)]
        no_timestamp: bool,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the cycle-type table of the transitive groups of each degree,
    /// computed by the group engine.
    Tables {
        #[arg(long)]
        degree: Option<u8>,
    },
    /// Run the group-theory verifiers exhaustively.
    VerifyGroupTheory {
        #[arg(long, default_value_t = 4)]
        degree_max: u8,
    },
    /// Print the discriminant bound chain.
    Bound {
        poly: PolySpec,
        /// Exponent A of the prime bound, a positive rational.
        #[arg(long = "A", value_name = "A")]
        a: Option<BigRational>,
        /// Multipliers z_2..z_n: also build the beta matrix (degree <= 4)
        /// and check that beta is a root of its characteristic polynomial.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        z: Option<Vec<i64>>,
        #[arg(long, value_enum, default_value = "text")]
        emit: Emit,
    },
}

enum Failure {
    Verification(String),
    Input(String),
    UnsupportedDegree(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Input(_) => 2,
            Failure::UnsupportedDegree(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Verification(m) | Failure::Input(m) | Failure::UnsupportedDegree(m) => m,
        }
    }
}

impl From<GaloisError> for Failure {
    fn from(e: GaloisError) -> Self {
        match e {
            GaloisError::UnsupportedDegree(_) => Failure::UnsupportedDegree(e.to_string()),
            GaloisError::NoCandidate(_) => Failure::Verification(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<BoundError> for Failure {
    fn from(e: BoundError) -> Self {
        match e {
            BoundError::UnsupportedDegree(_) | BoundError::DegreeTooSmall(_) => {
                Failure::UnsupportedDegree(e.to_string())
            }
            _ => Failure::Input(e.to_string()),
        }
    }
}

struct Style {
    color: bool,
}

impl Style {
    fn from_env() -> Self {
        let setting = std::env::var("SPLITTYPE_COLOR").unwrap_or_default();
        let color = match setting.as_str() {
            "always" => true,
            "never" => false,
            _ => std::env::var_os("NO_COLOR").is_none() && std::io::stdout().is_terminal(),
        };
        Style { color }
    }

    fn status(&self, ok: bool) -> String {
        let (word, code) = if ok { ("PASS", "32") } else { ("FAIL", "31") };
        if self.color {
            format!("\x1b[{code}m{word}\x1b[0m")
        } else {
            word.to_string()
        }
    }
}

fn timestamp(disabled: bool) -> Option<u64> {
    let env_off = std::env::var("SPLITTYPE_NO_TIMESTAMP").is_ok_and(|v| v != "0");
    if disabled || env_off {
        return None;
    }
    SystemTime::now().duration_since(UNIX_EPOCH).ok().map(|d| d.as_secs())
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(text.as_bytes());
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let style = Style::from_env();
    match cli.command {
        Command::Analyze {
            poly,
            prime_limit,
            mode,
            emit: format,
            frequencies,
            no_disc_refinement,
            early_exit,
            with_bound,
            a,
            no_timestamp,
            out,
        } => {
            let options = DetermineOptions {
                disc_refinement: !no_disc_refinement,
                early_exit,
                ..DetermineOptions::default()
            };
            let r = determine(&poly.poly, prime_limit, mode, &options)?;
            let bound = if with_bound {
                Some(compute_bound_chain(&poly.poly, a)?)
            } else {
                None
            };
            let opts = ReportOptions {
                frequencies,
                bound: bound.as_ref(),
                generated_at: timestamp(no_timestamp),
            };
            let text = match format {
                Emit::Json => report::analysis_json(&r, &opts),
                Emit::Csv => report::observations_csv(&r),
                Emit::Text => report::analysis_text(&r, &opts),
            };
            emit(&text, out.as_ref())?;
            if let (Some(_), Verdict::Conclusive { group, .. }) = (&out, &r.verdict) {
                eprintln!("{}: {group}", poly.poly);
            }
            Ok(())
        }
        Command::Tables { degree } => {
            let degrees: Vec<usize> = match degree {
                Some(d) => vec![d as usize],
                None => vec![3, 4, 5],
            };
            let mut s = String::new();
            for n in degrees {
                let t = engine_table(n).map_err(|e| Failure::UnsupportedDegree(e.to_string()))?;
                s.push_str(&format!("degree {n}\n"));
                for row in &t.groups {
                    let types: Vec<String> = row.types.iter().map(ToString::to_string).collect();
                    s.push_str(&format!("  {:<8} {:>3}  {}\n", row.name, row.order, types.join(" ")));
                }
            }
            emit(&s, None)
        }
        Command::VerifyGroupTheory { degree_max } => {
            let lines = run_verifier_suite(degree_max as usize)
                .map_err(|e| Failure::UnsupportedDegree(e.to_string()))?;
            let mut s = String::new();
            for line in &lines {
                s.push_str(&format!(
                    "{} {}: {} cases ({})\n",
                    style.status(line.passed()),
                    line.check,
                    line.cases,
                    line.detail
                ));
                for f in line.failures.iter().take(5) {
                    s.push_str(&format!("    {f}\n"));
                }
            }
            emit(&s, None)?;
            let failed = lines.iter().filter(|l| !l.passed()).count();
            if failed > 0 {
                return Err(Failure::Verification(format!("{failed} verifier checks failed")));
            }
            Ok(())
        }
        Command::Bound { poly, a, z, emit: format } => {
            let b = compute_bound_chain(&poly.poly, a)?;
            let mut text = match format {
                Emit::Json => report::bound_report_json(&b),
                Emit::Text | Emit::Csv => report::bound_text(&b),
            };
            let mut root_ok = true;
            if let Some(z) = z {
                let m = build_beta_matrix(&poly.poly, &z)?;
                let k = charpoly(&m);
                let check = verify_beta_root(&poly.poly, &z, &k);
                root_ok = check.passed;
                let line = format!(
                    "beta matrix dimension {}, beta ~ {:.6}, relative residual {:.3e}: {}\n",
                    m.dim(),
                    check.beta,
                    check.relative_residual,
                    style.status(check.passed)
                );
                match format {
                    Emit::Json => eprint!("{line}"),
                    _ => text.push_str(&line),
                }
            }
            emit(&text, None)?;
            if !root_ok {
                return Err(Failure::Verification("beta is not a root of the characteristic polynomial".into()));
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

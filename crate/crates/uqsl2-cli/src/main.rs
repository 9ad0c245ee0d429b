//! Command-line front end: expression normalization, coproducts, generating
//! function powers, straightening coefficients, and the verification suites.
//!
//! Exit codes: 0 on success (all checks pass), 1 when a verification suite
//! fails, 2 on usage or parse errors.

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use uqsl2::coproduct::{
    c_coeff_closed, c_coeff_recursive, delta_closed, power_closed, IndexTuple, PowerKind,
};
use uqsl2::morphisms::{delta_recursive, DeltaFamily};
use uqsl2::render::{render_element, render_element_series, render_scalar, render_tensor, Format};
use uqsl2::scalar::ScalarQ;
use uqsl2::verify::{
    verify_corollary7, verify_drinrel, verify_hopf, verify_lemma4, verify_lemma7, verify_lemma9,
    verify_morphisms, verify_theorem5, verify_theorem6, VerificationReport,
};

#[derive(Parser)]
#[command(
    name = "uqsl2",
    version,
    about = "Exact symbolic computation in the Drinfeld realization of the quantum affine algebra of sl2"
)]
struct Cli {
    /// Output format: text, latex or json
    #[arg(long, global = true, default_value = "text")]
    format: String,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse an expression and print its PBW normal form
    Normalize {
        /// Expression, e.g. "[h[1], x[0]] + q^2 * y[0]*x[1]"
        #[arg(long)]
        expr: String,
    },
    /// Coproduct of a generator family at an index
    Coproduct {
        /// One of x, y, psi, phi
        #[arg(long)]
        family: String,
        #[arg(long, allow_hyphen_values = true)]
        index: i64,
        /// closed (explicit formula) or recursive (commutator oracle)
        #[arg(long, default_value = "closed")]
        method: String,
    },
    /// Closed-form power of a degree-zero generating function
    Power {
        /// X0plus or Y0plus
        #[arg(long)]
        kind: String,
        #[arg(long)]
        n: i64,
        #[arg(long)]
        order: i64,
    },
    /// Straightening coefficient of a weakly increasing index tuple
    CCoeff {
        /// Comma-separated entries, smallest first, e.g. "1,1,2"
        #[arg(long)]
        tuple: String,
        /// closed or recursive
        #[arg(long, default_value = "closed")]
        method: String,
    },
    /// Run a verification suite
    Verify {
        /// One of: lemma4, drinrel, theorem5, theorem6, lemma7, lemma9,
        /// corollary7, hopf, morphisms
        #[arg(long)]
        suite: String,
        #[arg(long)]
        max_index: Option<i64>,
        #[arg(long)]
        order: Option<i64>,
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match Format::parse(&cli.format) {
        Some(f) => f,
        None => return usage_error(&format!("unknown format `{}`", cli.format)),
    };
    match cli.command {
        Command::Normalize { expr } => match uqsl2::expr::parse(&expr) {
            Err(e) => usage_error(&e.to_string()),
            Ok(ast) => match uqsl2::expr::eval(&ast) {
                Err(e) => usage_error(&e.to_string()),
                Ok(v) => {
                    println!("{}", render_element(&v, format));
                    ExitCode::SUCCESS
                }
            },
        },
        Command::Coproduct {
            family,
            index,
            method,
        } => {
            let family = match DeltaFamily::parse(&family) {
                Some(f) => f,
                None => return usage_error(&format!("unknown family `{family}`")),
            };
            if matches!(family, DeltaFamily::Psi) && index < 0 {
                return usage_error("psi-index must be nonnegative");
            }
            if matches!(family, DeltaFamily::Phi) && index > 0 {
                return usage_error("phi-index must be nonpositive");
            }
            let value = match method.as_str() {
                "closed" => delta_closed(family, index),
                "recursive" => delta_recursive(family, index),
                other => return usage_error(&format!("unknown method `{other}`")),
            };
            println!("{}", render_tensor(&value, format));
            ExitCode::SUCCESS
        }
        Command::Power { kind, n, order } => {
            let kind = match kind.as_str() {
                "X0plus" => PowerKind::X0Plus,
                "Y0plus" => PowerKind::Y0Plus,
                other => return usage_error(&format!("unknown kind `{other}`")),
            };
            if n < 1 {
                return usage_error("power must be positive");
            }
            if order < 0 {
                return usage_error("order must be nonnegative");
            }
            let series = power_closed(kind, n, order);
            println!("{}", render_element_series(&series, format));
            ExitCode::SUCCESS
        }
        Command::CCoeff { tuple, method } => {
            let entries: Result<Vec<i64>, _> =
                tuple.split(',').map(|s| s.trim().parse::<i64>()).collect();
            let entries = match entries {
                Ok(v) => v,
                Err(_) => return usage_error("tuple entries must be integers"),
            };
            if entries.iter().any(|&e| e < 0) {
                return usage_error("tuple entries must be nonnegative");
            }
            if entries.windows(2).any(|w| w[0] > w[1]) {
                return usage_error("tuple entries must be weakly increasing, smallest first");
            }
            let t = IndexTuple::new(entries);
            let value = match method.as_str() {
                "closed" => ScalarQ::from_laurent(c_coeff_closed(&t)),
                "recursive" => c_coeff_recursive(&t),
                other => return usage_error(&format!("unknown method `{other}`")),
            };
            println!("{}", render_scalar(&value, format));
            ExitCode::SUCCESS
        }
        Command::Verify {
            suite,
            max_index,
            order,
            seed,
        } => {
            let reports = match run_suite(&suite, max_index, order, seed) {
                Some(r) => r,
                None => return usage_error(&format!("unknown suite `{suite}`")),
            };
            let pass = reports.iter().all(|r| r.pass());
            match format {
                Format::Json => {
                    let arr: Vec<_> = reports.iter().map(|r| r.to_json()).collect();
                    println!("{}", serde_json::Value::Array(arr));
                }
                _ => {
                    for r in &reports {
                        print!("{r}");
                    }
                }
            }
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn run_suite(
    suite: &str,
    max_index: Option<i64>,
    order: Option<i64>,
    seed: Option<u64>,
) -> Option<Vec<VerificationReport>> {
    let reports = match suite {
        "lemma4" => (1..=11)
            .map(|id| verify_lemma4(id, max_index.unwrap_or(3), order.unwrap_or(5)))
            .collect(),
        "drinrel" => vec![verify_drinrel(order.unwrap_or(4))],
        "theorem5" => (1..=6)
            .map(|eq| verify_theorem5(eq, order.unwrap_or(3)))
            .collect(),
        "theorem6" => vec![verify_theorem6(max_index.unwrap_or(4), order.unwrap_or(6))],
        "lemma7" => vec![verify_lemma7(max_index.unwrap_or(4), order.unwrap_or(6))],
        "lemma9" => vec![verify_lemma9(max_index.unwrap_or(5), order.unwrap_or(5))],
        "corollary7" => vec![verify_corollary7(max_index.unwrap_or(3))],
        "hopf" => vec![verify_hopf(max_index.unwrap_or(2))],
        "morphisms" => vec![verify_morphisms(seed.unwrap_or(1))],
        _ => return None,
    };
    Some(reports)
}

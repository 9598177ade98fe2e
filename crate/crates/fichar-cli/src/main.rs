//! `fichar` — exact symmetric-group characters, character polynomials,
//! and stability bounds for H^i(Γ_{n,s}) from the terminal.
//!
//! Exit codes: 0 success, 2 domain error (bad input, unsupported query),
//! 3 invariant violation (the library caught itself being inconsistent).

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use fichar::charpoly::build_f_lambda;
use fichar::gamma::{
    e2_page, schur_weyl_report, stable_char_poly, stable_dimension, stability_bounds, GammaQuery,
    Provenance,
};
use fichar::induct::InductionProduct;
use fichar::symchar::{mn_character, CycleCounts};
use fichar::{Error, ErrorKind, Partition};

#[derive(Parser)]
#[command(name = "fichar", version, about = "Exact character data for symmetric groups and the FI-module stability of H^i(Γ_{n,s})")]
struct Cli {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Safety cutoff for partition sizes and symmetric-group ranks
    #[arg(long, global = true, default_value_t = 30)]
    max_size: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct LambdaArg {
    /// Partition as a comma-separated part list; "" is the empty partition
    #[arg(long, value_parser = parse_partition)]
    lambda: Partition,
}

#[derive(Subcommand)]
enum Command {
    /// Character polynomial f_λ of the padded family P(λ)
    Charpoly(LambdaArg),
    /// Stable data of H^i(Γ_{n,s})
    #[command(subcommand)]
    Gamma(GammaCommand),
    /// Terms of the second spectral page in row q
    E2 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: usize,
    },
    /// Weight and stability bounds assembled through the spectral grid
    Stability {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
        /// Also print each page of the grid
        #[arg(long)]
        pages: bool,
    },
    /// Two-sided decomposition of the wedge-power module (𝕜^n)^∧q ∘ P_(s−q)
    SchurWeyl {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        s: usize,
    },
    /// Murnaghan–Nakayama character value χ_λ(class)
    Mn {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        /// Cycle type of the class, e.g. 2,2 for two 2-cycles
        #[arg(long, value_parser = parse_partition)]
        class: Partition,
    },
    /// Decomposition of the induction product P_left ∘ P_right
    Induce {
        #[arg(long, value_parser = parse_partition)]
        left: Partition,
        #[arg(long, value_parser = parse_partition)]
        right: Partition,
    },
}

#[derive(Subcommand)]
enum GammaCommand {
    /// Stable character polynomial, where a stored decomposition exists
    Poly {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
    },
    /// Stable dimension dim H^i(Γ_{n,s})
    Dim {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        s: usize,
    },
}

fn parse_partition(text: &str) -> Result<Partition, String> {
    text.parse::<Partition>().map_err(|e| e.to_string())
}

fn check_size(size: usize, max: usize) -> Result<(), Error> {
    if size > max {
        Err(Error::MaxSizeExceeded { size, max })
    } else {
        Ok(())
    }
}

fn run(cli: &Cli) -> Result<String, Error> {
    let max = cli.max_size;
    match &cli.command {
        Command::Charpoly(arg) => {
            check_size(arg.lambda.size(), max)?;
            let f = build_f_lambda(&arg.lambda)?;
            Ok(if cli.json {
                f.to_json().to_string()
            } else {
                f.render_falling_factorials()
            })
        }
        Command::Gamma(GammaCommand::Poly { n, i }) => {
            check_size(*i, max)?;
            let f = stable_char_poly(&GammaQuery::new(*n, *i)?)?;
            Ok(if cli.json {
                f.to_json().to_string()
            } else {
                f.render_falling_factorials()
            })
        }
        Command::Gamma(GammaCommand::Dim { n, i, s }) => {
            check_size(*s, max)?;
            let query = GammaQuery::new(*n, *i)?;
            let dim = stable_dimension(&query, *s)?;
            Ok(if cli.json {
                serde_json::json!({ "n": n, "i": i, "s": s, "dimension": dim.to_string() })
                    .to_string()
            } else {
                dim.to_string()
            })
        }
        Command::E2 { n, q } => {
            check_size(*q, max)?;
            let page = e2_page(*n, *q)?;
            Ok(if cli.json {
                page.to_json().to_string()
            } else {
                page.to_string()
            })
        }
        Command::Stability { n, i, pages } => {
            check_size(*i, max)?;
            let report = stability_bounds(&GammaQuery::new(*n, *i)?)?;
            if cli.json {
                return Ok(report.to_json().to_string());
            }
            let mut out = format!(
                "H^{i}(Γ_({n},s)): weight ≤ {}, stability degree {}, stable range s ≥ {}\n",
                report.weight_bound, report.stability_degree, report.stable_range
            );
            match &report.provenance {
                Provenance::Rank1 { decomp } => {
                    out.push_str(&format!("closed form: {decomp}\n"));
                }
                Provenance::SpectralRun { pages: grids } => {
                    if *pages {
                        for grid in grids {
                            out.push('\n');
                            out.push_str(&grid.render());
                        }
                    }
                }
            }
            Ok(out.trim_end().to_string())
        }
        Command::SchurWeyl { n, q, s } => {
            check_size(*s, max)?;
            let report = schur_weyl_report(*n, *q, *s)?;
            if !report.matches {
                return Err(Error::CrossCheckFailed(format!(
                    "Schur–Weyl sides differ: {} vs {}",
                    report.lhs, report.rhs
                )));
            }
            Ok(if cli.json {
                report.to_json().to_string()
            } else {
                format!(
                    "wedge side: {}\nSchur–Weyl side: {}\ndimension: {} = binom({s},{q})·{n}^{q}\nsides agree",
                    report.lhs, report.rhs, report.expected_dimension
                )
            })
        }
        Command::Mn { lambda, class } => {
            check_size(lambda.size(), max)?;
            let counts = CycleCounts::from_cycle_type(class);
            let value = mn_character(lambda, &counts)?;
            Ok(if cli.json {
                serde_json::json!({
                    "lambda": lambda.to_string(),
                    "class": class.to_string(),
                    "value": value.to_string(),
                })
                .to_string()
            } else {
                value.to_string()
            })
        }
        Command::Induce { left, right } => {
            check_size(left.size() + right.size(), max)?;
            let product = InductionProduct::new(left.clone(), right.clone());
            Ok(if cli.json {
                product.result.to_json().to_string()
            } else {
                format!("P{left} ∘ P{right} = {}", product.result)
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(output) => {
            // tolerate a closed pipe (e.g. `fichar … | head`)
            use std::io::Write;
            let _ = writeln!(std::io::stdout(), "{output}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            match err.kind() {
                ErrorKind::Domain => ExitCode::from(2),
                ErrorKind::Invariant => ExitCode::from(3),
            }
        }
    }
}

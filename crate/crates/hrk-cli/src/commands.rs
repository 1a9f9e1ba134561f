//! The command set and exit-code policy.
//!
//! Exit codes: 0 success / verdict pass, 1 verdict fail, 2 usage error,
//! 3 genericity not established.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use hrk_core::catalog::{self, survey, SurveyOptions, Verdict};
use hrk_core::hrkengine::{hrk_linear, hrk_projective, EngineError};
use hrk_core::liealg::Family;
use hrk_core::reprkit::structure_type;
use hrk_core::weyl::{weyl_dim, HighestWeight, RootSystem, TypeLetter};

use crate::elaborate::{elaborate, SpaceKind};
use crate::parser::parse;
use crate::report::{Format, WireReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERDICT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_GENERICITY: i32 = 3;

const DEFAULT_SEED: u64 = 7349;
const SEED_STRIDE: u64 = 0x9E37_79B9_7F4A_7C15;

#[derive(Parser, Debug)]
#[command(
    name = "hrk",
    about = "Exact homogeneity rank computations for compact linear group actions",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct OutputArgs {
    /// Output format.
    #[arg(long, value_parser = parse_format, default_value = "table")]
    format: String,
    /// Write the report to a file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_format(s: &str) -> Result<String, String> {
    match s {
        "json" | "table" => Ok(s.to_string()),
        other => Err(format!("unknown format '{other}' (json|table)")),
    }
}

#[derive(Args, Debug)]
struct SeedArgs {
    /// Base seed; HRK_SEED overrides the built-in default.
    #[arg(long)]
    seed: Option<u64>,
    /// Number of independent samples per genericity decision.
    #[arg(long, default_value_t = 3)]
    samples: usize,
}

impl SeedArgs {
    fn seeds(&self) -> Vec<u64> {
        let base = self.seed.or_else(read_env_seed).unwrap_or(DEFAULT_SEED);
        (0..self.samples.max(1))
            .map(|i| base.wrapping_add(SEED_STRIDE.wrapping_mul(i as u64)))
            .collect()
    }
}

fn read_env_seed() -> Option<u64> {
    std::env::var("HRK_SEED").ok()?.trim().parse().ok()
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute the homogeneity rank of a representation expression.
    Compute {
        /// Representation expression, e.g. "std(u(3))+std(u(3))".
        #[arg(long)]
        rep: String,
        /// The space acted on: the linear space or HP^{n-1}.
        #[arg(long, default_value = "linear", value_parser = ["linear", "hp"])]
        space: String,
        #[command(flatten)]
        seeds: SeedArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Commutant dimension and Frobenius-Schur type of an expression.
    StructureType {
        #[arg(long)]
        rep: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Dimension of the irreducible with the given highest weight.
    WeylDim {
        /// Simple type letter A-G.
        #[arg(long = "type")]
        type_letter: String,
        #[arg(long)]
        rank: usize,
        /// Comma-separated fundamental weight coefficients.
        #[arg(long)]
        weight: String,
    },
    /// Survey the subgroup lattice of Sp(n) on HP^{n-1}.
    Survey {
        #[arg(long)]
        n: usize,
        #[arg(long = "max-depth", default_value_t = 4)]
        max_depth: usize,
        /// Compute nodes even when the dimension condition prunes them.
        #[arg(long = "force-pruned", default_value_t = false)]
        force_pruned: bool,
        #[command(flatten)]
        seeds: SeedArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Verify the classification list and exclusion ledger at size n.
    VerifyTheorem {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        seeds: SeedArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print the maximal-subgroup table rows.
    Tables {
        /// Restrict to one family.
        #[arg(long, value_parser = ["so", "su", "sp"])]
        family: Option<String>,
        /// Instantiate the rows at a given size.
        #[arg(long)]
        n: Option<usize>,
    },
}

fn emit(output: &OutputArgs, text: &str) -> std::io::Result<()> {
    match &output.out {
        Some(path) => {
            let mut f = std::fs::File::create(path)?;
            f.write_all(text.as_bytes())?;
            if !text.ends_with('\n') {
                f.write_all(b"\n")?;
            }
        }
        None => {
            if text.ends_with('\n') {
                print!("{text}");
            } else {
                println!("{text}");
            }
        }
    }
    Ok(())
}

fn exit_code_for_engine(e: &EngineError) -> i32 {
    match e {
        EngineError::Genericity(_) => EXIT_GENERICITY,
        _ => EXIT_USAGE,
    }
}

pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err((code, message)) => {
            eprintln!("error: {message}");
            code
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, (i32, String)> {
    match cli.command {
        Command::Compute {
            rep,
            space,
            seeds,
            output,
        } => {
            let expr = parse(&rep).map_err(|e| (EXIT_USAGE, e.to_string()))?;
            let kind = if space == "hp" {
                SpaceKind::Hp
            } else {
                SpaceKind::Linear
            };
            let lin = elaborate(&expr, kind).map_err(|e| (EXIT_USAGE, e.to_string()))?;
            let seed_list = seeds.seeds();
            let report = match kind {
                SpaceKind::Linear => hrk_linear(&lin, &seed_list),
                SpaceKind::Hp => hrk_projective(&lin, &seed_list),
            }
            .map_err(|e| (exit_code_for_engine(&e), e.to_string()))?;
            let wire = WireReport::from_report(&report);
            let text = match format_of(&output) {
                Format::Json => wire.to_json(),
                Format::Table => wire.to_table(),
            };
            emit(&output, &text).map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::StructureType { rep, output } => {
            let expr = parse(&rep).map_err(|e| (EXIT_USAGE, e.to_string()))?;
            let lin = elaborate(&expr, SpaceKind::Linear).map_err(|e| (EXIT_USAGE, e.to_string()))?;
            let st = structure_type(&lin);
            let text = match format_of(&output) {
                Format::Json => serde_json::to_string_pretty(&st).expect("serializes"),
                Format::Table => format!(
                    "tag                    {:?}\ncommutant_dim          {}",
                    st.tag, st.commutant_dim
                ),
            };
            emit(&output, &text).map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::WeylDim {
            type_letter,
            rank,
            weight,
        } => {
            let letter = TypeLetter::parse(&type_letter)
                .ok_or((EXIT_USAGE, format!("unknown type '{type_letter}'")))?;
            let coeffs: Result<Vec<u64>, _> =
                weight.split(',').map(|c| c.trim().parse::<u64>()).collect();
            let coeffs = coeffs.map_err(|e| (EXIT_USAGE, format!("bad weight: {e}")))?;
            let rs = RootSystem::new(letter, rank).map_err(|e| (EXIT_USAGE, e.to_string()))?;
            let dim = weyl_dim(&rs, &HighestWeight(coeffs))
                .map_err(|e| (EXIT_USAGE, e.to_string()))?;
            println!("{dim}");
            Ok(EXIT_OK)
        }
        Command::Survey {
            n,
            max_depth,
            force_pruned,
            seeds,
            output,
        } => {
            if n < 2 {
                return Err((EXIT_USAGE, "survey needs n >= 2".into()));
            }
            let results = survey(
                n,
                &seeds.seeds(),
                SurveyOptions {
                    max_depth,
                    force_pruned,
                },
            );
            let text = match format_of(&output) {
                Format::Json => {
                    let rows: Vec<serde_json::Value> = results
                        .iter()
                        .map(|c| {
                            serde_json::json!({
                                "chain": c.chain.join(" > "),
                                "verdict": c.verdict.to_string(),
                                "group": c.group,
                                "report": c.report,
                            })
                        })
                        .collect();
                    serde_json::to_string_pretty(&rows).expect("serializes")
                }
                Format::Table => {
                    let mut out = String::new();
                    for c in &results {
                        out.push_str(&format!(
                            "{:<60} {}\n",
                            c.chain.join(" > "),
                            c.verdict
                        ));
                    }
                    out
                }
            };
            emit(&output, &text).map_err(io_err)?;
            let bad = results
                .iter()
                .any(|c| matches!(c.verdict, Verdict::VerifiedHrk(v) if v > 0));
            Ok(if bad { EXIT_VERDICT_FAIL } else { EXIT_OK })
        }
        Command::VerifyTheorem { n, seeds, output } => {
            if n < 2 {
                return Err((EXIT_USAGE, "verify-theorem needs n >= 2".into()));
            }
            let report = catalog::verify_theorem(n, &seeds.seeds());
            let text = match format_of(&output) {
                Format::Json => serde_json::to_string_pretty(&report).expect("serializes"),
                Format::Table => {
                    let mut out = String::new();
                    for case in &report.cases {
                        let status = if case.unsupported {
                            "unsupported"
                        } else if case.pass {
                            "pass"
                        } else {
                            "FAIL"
                        };
                        let computed = case
                            .computed
                            .as_ref()
                            .map(|s| format!("hrk={} c={} dim_h={}", s.hrk, s.cohomogeneity, s.dim_isotropy))
                            .unwrap_or_else(|| "-".into());
                        out.push_str(&format!(
                            "{status:<12} {:<28} {:<28} expected[{}] computed[{computed}]\n",
                            case.name, case.case, case.expected
                        ));
                    }
                    out
                }
            };
            emit(&output, &text).map_err(io_err)?;
            println!("{}", report.summary_line());
            if report.all_pass() {
                Ok(EXIT_OK)
            } else {
                for case in report.cases.iter().filter(|c| !c.pass) {
                    eprintln!("verdict failure: {} [{}]", case.name, case.case);
                }
                Ok(EXIT_VERDICT_FAIL)
            }
        }
        Command::Tables { family, n } => {
            let families: Vec<Family> = match family.as_deref() {
                Some("so") => vec![Family::So],
                Some("su") => vec![Family::Su],
                Some("sp") => vec![Family::Sp],
                _ => vec![Family::So, Family::Su, Family::Sp],
            };
            for f in families {
                match n {
                    Some(size) => {
                        println!("maximal subgroups of {}({size}):", f.name().to_uppercase());
                        for row in catalog::maximal_subgroups(f, size) {
                            println!(
                                "  {:<24} dim {:<4} rank {:<3} {}",
                                row.name,
                                row.dim,
                                row.rank,
                                if row.constructible() {
                                    "constructible"
                                } else {
                                    "symbolic"
                                }
                            );
                        }
                    }
                    None => {
                        println!("maximal subgroups of {}(n):", f.name().to_uppercase());
                        for line in symbolic_rows(f) {
                            println!("  {line}");
                        }
                    }
                }
            }
            Ok(EXIT_OK)
        }
    }
}

fn symbolic_rows(f: Family) -> Vec<&'static str> {
    match f {
        Family::Sp => vec![
            "i)   U(n)",
            "ii)  Sp(k) x Sp(n-k),  1 <= k <= n-1",
            "iii) SO(p) (x) Sp(q),  pq = n, p >= 3, q >= 1",
            "iv)  rho(H), H simple, quaternionic irreducible of degree 2n",
        ],
        Family::Su => vec![
            "i)   SO(n)",
            "ii)  Sp(m),  2m = n",
            "iii) S(U(k) x U(n-k)),  1 <= k <= n-1",
            "iv)  SU(p) (x) SU(q),  pq = n, p >= 3, q >= 3",
            "v)   rho(H), H simple, complex irreducible of degree n",
        ],
        Family::So => vec![
            "i)   SO(k) x SO(n-k),  1 <= k <= n-1",
            "ii)  U(m),  2m = n",
            "iii) SO(p) (x) SO(q),  pq = n, 3 <= p <= q",
            "iv)  Sp(p) (x) Sp(q),  4pq = n",
            "v)   rho(H), H simple, real irreducible of degree n",
        ],
        Family::U => vec![],
    }
}

fn format_of(o: &OutputArgs) -> Format {
    if o.format == "json" {
        Format::Json
    } else {
        Format::Table
    }
}

fn io_err(e: std::io::Error) -> (i32, String) {
    (EXIT_USAGE, e.to_string())
}

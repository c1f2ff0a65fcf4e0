use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

use zeroweight::chambers::{self, format_epsilon_form};
use zeroweight::lattice::{self, DEFAULT_COSET_CAP};
use zeroweight::multiplicity::{self, MultiplicityTable};
use zeroweight::piecewise::{self, FitOptions};
use zeroweight::rational::{self, Q};
use zeroweight::verify::{self, CheckResult};
use zeroweight::{Error, RootSystem, SimpleType, Weight};

/// Zero weight spaces, chambers and piecewise polynomial certificates for
/// simple adjoint groups.
#[derive(Parser)]
#[command(name = "zeroweight", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Weight multiplicities of V(λ): the dominant table, or one weight with --mu.
    Mult {
        ty: SimpleType,
        /// λ in root coordinates (or ε coordinates with --eps).
        #[arg(required = true, allow_negative_numbers = true)]
        lambda: Vec<String>,
        /// Report only the multiplicity of this weight.
        #[arg(long, num_args = 1.., allow_negative_numbers = true)]
        mu: Option<Vec<String>>,
        /// Read weights in ε coordinates.
        #[arg(long)]
        eps: bool,
        /// Write the dominant table as CSV to this file (`-` for stdout).
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Dimension of the zero weight space of V(λ).
    ZeroDim {
        ty: SimpleType,
        #[arg(required = true, allow_negative_numbers = true)]
        lambda: Vec<String>,
        #[arg(long)]
        eps: bool,
    },
    /// Walls and chambers of the dominant cone.
    Chambers {
        ty: SimpleType,
        /// Write the atlas as JSON to this file (`-` for stdout).
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Fit and verify one polynomial per (chamber, coset).
    Fit {
        ty: SimpleType,
        /// Directory for certificate JSON files.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Re-check the rank two and GL4 closed forms.
    VerifyPaper {
        #[arg(long, value_enum, default_value_t = Section::All)]
        section: Section,
    },
    /// The lattice Γ, its index and coset representatives.
    Gamma {
        ty: SimpleType,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Section {
    #[value(name = "5")]
    Five,
    #[value(name = "6")]
    Six,
    All,
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn parse_coords(raw: &[String]) -> Result<Vec<Q>, Error> {
    raw.iter()
        .flat_map(|s| s.split(',').filter(|t| !t.trim().is_empty()))
        .map(rational::parse_pq)
        .collect()
}

fn parse_weight(rs: &RootSystem, raw: &[String], eps: bool) -> Result<Weight, Error> {
    let v = parse_coords(raw)?;
    if eps {
        return rs.from_epsilon(&v);
    }
    if v.len() != rs.rank() {
        return Err(Error::RankMismatch {
            expected: rs.rank(),
            got: v.len(),
        });
    }
    Ok(Weight::from_root(v))
}

fn write_text(path: &PathBuf, text: &str) -> io::Result<()> {
    if path.as_os_str() == "-" {
        io::stdout().write_all(text.as_bytes())
    } else {
        fs::write(path, text)
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Mult {
            ty,
            lambda,
            mu,
            eps,
            csv,
        } => {
            let rs = RootSystem::new(ty);
            let lam = parse_weight(&rs, &lambda, eps)?;
            if let Some(mu) = mu {
                let mu = parse_weight(&rs, &mu, eps)?;
                println!("{}", multiplicity::weight_multiplicity(&rs, &lam, &mu)?);
                return Ok(());
            }
            if !lam.in_root_lattice() {
                return Err(Error::NotInRootLattice(lam.to_string()).into());
            }
            let table = MultiplicityTable::new(&rs, &lam)?;
            match csv {
                Some(path) => {
                    let mut buf = Vec::new();
                    table.write_csv(&mut buf)?;
                    write_text(&path, &String::from_utf8_lossy(&buf))?;
                }
                None => {
                    println!("dominant weight (root coords)\tz\tmultiplicity\torbit size");
                    for e in table.entries() {
                        println!(
                            "{}\t{:?}\t{}\t{}",
                            e.weight, e.fundamental, e.multiplicity, e.orbit_size
                        );
                    }
                    println!("dimension {}", table.total_dimension());
                }
            }
        }
        Command::ZeroDim { ty, lambda, eps } => {
            let rs = RootSystem::new(ty);
            let lam = parse_weight(&rs, &lambda, eps)?;
            println!("{}", multiplicity::zero_weight_dim(&rs, &lam)?);
        }
        Command::Chambers { ty, json } => {
            let rs = RootSystem::new(ty);
            let atlas = chambers::enumerate_chambers(&rs)?;
            match json {
                Some(path) => write_text(&path, &pretty(&atlas.to_json()))?,
                None => {
                    println!(
                        "{ty}: {} walls, {} chambers",
                        atlas.walls().len(),
                        atlas.chambers().len()
                    );
                    for w in atlas.walls() {
                        let eps = w
                            .epsilon_form(&rs)
                            .map(|y| format!("  ({} = 0)", format_epsilon_form(&y)))
                            .unwrap_or_default();
                        println!("wall {:?}·z = 0{eps}", w.normal);
                    }
                    for c in atlas.chambers() {
                        let wit: Vec<String> = c.witness.iter().map(|x| x.to_string()).collect();
                        println!("chamber [{}] witness z = ({})", c.id(), wit.join(", "));
                    }
                }
            }
        }
        Command::Fit { ty, out, jobs } => {
            let rs = RootSystem::new(ty);
            let opts = FitOptions {
                jobs,
                ..FitOptions::default()
            };
            let oracle = piecewise::freudenthal_oracle(&rs);
            let fit = piecewise::full_atlas_fit_with(&rs, &oracle, &opts)?;
            for c in &fit.certificates {
                let status = match &c.status {
                    piecewise::Status::Verified => "verified".to_string(),
                    piecewise::Status::Failed(r) => format!("FAILED ({r})"),
                };
                println!(
                    "chamber [{}] coset {:?}: {status}: {}",
                    c.chamber_id,
                    c.coset.root_coords(),
                    c.polynomial
                );
            }
            if let Some(dir) = out {
                let paths = piecewise::write_certificates(&dir, &fit)?;
                println!("wrote {} certificates to {}", paths.len(), dir.display());
            }
            if !fit.all_verified() {
                return Err(Failure::Verification);
            }
        }
        Command::VerifyPaper { section } => {
            let mut results: Vec<CheckResult> = Vec::new();
            if matches!(section, Section::Five | Section::All) {
                results.extend(verify::section5()?);
            }
            if matches!(section, Section::Six | Section::All) {
                results.extend(verify::section6()?);
            }
            for r in &results {
                println!("{r}");
            }
            if results.iter().any(|r| !r.passed) {
                return Err(Failure::Verification);
            }
        }
        Command::Gamma { ty, json } => {
            let g = lattice::gamma_lattice(ty)?;
            if json {
                print!("{}", pretty(&g.to_json(DEFAULT_COSET_CAP)));
                return Ok(());
            }
            let basis: Vec<String> = g.generators().iter().map(|v| root_combination(v)).collect();
            println!("{ty}: index {}", g.index());
            println!("basis {}", basis.join(", "));
            match g.coset_reps() {
                Ok(reps) if reps.len() <= 64 => {
                    let r: Vec<String> = reps
                        .iter()
                        .map(|c| root_combination(c.root_coords()))
                        .collect();
                    println!("cosets {}: {}", reps.len(), r.join(", "));
                }
                Ok(reps) => println!("cosets {}", reps.len()),
                Err(_) => println!("cosets {} (not listed)", g.index()),
            }
        }
    }
    Ok(())
}

/// `6α1 + 2α2`-style rendering of root coordinates.
fn root_combination(v: &[i64]) -> String {
    let mut out = String::new();
    for (i, &c) in v.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0 { " - " } else { " + " });
        }
        if c.abs() != 1 {
            out.push_str(&c.abs().to_string());
        }
        out.push_str(&format!("α{}", i + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use cliffpar_core::algebra::hilbert::ramified_places;
use cliffpar_core::algebra::validate_case_b;
use cliffpar_core::orbits::line_orbit_key;
use cliffpar_core::parallel::{ds_check, invariant_classes};
use cliffpar_core::text::{format_quaternion, format_subspace, parse_line, parse_point, parse_quaternion, parse_scalar};
use cliffpar_core::{DsOutcome, F2RatFun, Field, FourAlgebra, QuaternionAlgebra, Rational, SideTag};
use cliffpar_harness::config::{build_algebra, AlgebraChoice};
use cliffpar_harness::{emit_report, parse_config, parse_machine, run_suites, Format};

/// Exact checks on projective double spaces and Clifford-like parallelisms.
#[derive(Parser)]
#[command(name = "cliffpar", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct AlgebraArgs {
    /// caseA (quaternions over Q) or caseB (quartic extension of GF(2)(s,t)).
    #[arg(long, default_value = "caseA")]
    kind: String,
    /// First structure constant (default -1, or s in case B).
    #[arg(short, long, allow_hyphen_values = true)]
    a: Option<String>,
    /// Second structure constant (default -1, or t in case B).
    #[arg(short, long, allow_hyphen_values = true)]
    b: Option<String>,
}

impl AlgebraArgs {
    fn build(&self) -> Result<AlgebraChoice, String> {
        build_algebra(&self.kind, self.a.as_deref(), self.b.as_deref())
    }

    fn case_a(&self) -> Result<QuaternionAlgebra, String> {
        match self.build()? {
            AlgebraChoice::CaseA(h) => Ok(h),
            AlgebraChoice::CaseB(_) => Err("inner automorphisms are trivial in case B; this needs case A".into()),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run the suites of a config file and print the report.
    Verify {
        config: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Comma-separated suites overriding the config's `checks`.
        #[arg(long)]
        checks: Option<String>,
    },
    /// Orbit key of a line through F·1, given as `1; q`.
    OrbitKey {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(allow_hyphen_values = true)]
        line: String,
    },
    /// Find h with h⁻¹ q1 h = q2.
    Conjugate {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(allow_hyphen_values = true)]
        q1: String,
        #[arg(allow_hyphen_values = true)]
        q2: String,
    },
    /// Classes invariant under λ_g (right classes) or ρ_g (left classes).
    InvariantClasses {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(allow_hyphen_values = true)]
        g: String,
        /// Side of the classes: right for λ_g, left for ρ_g.
        #[arg(long, default_value = "right")]
        side: String,
    },
    /// Test the axiom (DS) on a triangle of points.
    Ds {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(allow_hyphen_values = true)]
        p0: String,
        #[arg(allow_hyphen_values = true)]
        p1: String,
        #[arg(allow_hyphen_values = true)]
        p2: String,
    },
    /// Decide whether the structure constants give a division algebra.
    DivisionCheck {
        #[command(flatten)]
        algebra: AlgebraArgs,
    },
    /// Re-render a machine report.
    Report {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<u8, String> {
    match command {
        Command::Verify { config, format, checks } => {
            let text = std::fs::read_to_string(&config).map_err(|e| format!("{}: {e}", config.display()))?;
            let mut cfg = parse_config(&text).map_err(|e| format!("invalid config {}\n{e}", config.display()))?;
            if let Some(list) = checks {
                cfg.checks = list.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
                validate_checks(&cfg)?;
            }
            let report = run_suites(&cfg);
            print!("{}", emit_report(&report, format));
            Ok(report.exit_code() as u8)
        }
        Command::OrbitKey { algebra, line } => {
            let h = algebra.case_a()?;
            let l = parse_line(&h, &line).map_err(|e| e.to_string())?;
            let key = line_orbit_key(&h, &l).map_err(|e| e.to_string())?;
            println!("{key}");
            Ok(0)
        }
        Command::Conjugate { algebra, q1, q2 } => {
            let h = algebra.case_a()?;
            let x = parse_quaternion(&h, &q1).map_err(|e| e.to_string())?;
            let y = parse_quaternion(&h, &q2).map_err(|e| e.to_string())?;
            match h.conjugator(&x, &y) {
                Some(c) => {
                    println!("conjugate: h = {}", format_quaternion(&h, &c));
                    Ok(0)
                }
                None => {
                    println!(
                        "not conjugate: traces {} and {}, norms {} and {}",
                        h.trace(&x),
                        h.trace(&y),
                        h.norm(&x),
                        h.norm(&y)
                    );
                    Ok(1)
                }
            }
        }
        Command::InvariantClasses { algebra, g, side } => {
            let h = algebra.case_a()?;
            let g = parse_quaternion(&h, &g).map_err(|e| e.to_string())?;
            let side: SideTag = side.parse().map_err(|e: cliffpar_core::Error| e.to_string())?;
            let p = invariant_classes(&h, &g, side).map_err(|e| e.to_string())?;
            println!("side: {}", p.side);
            println!("exceptional line: {}", format_subspace(&h, &p.exceptional_line));
            match &p.pencil_plane {
                Some(e) => println!("pencil plane: {}", format_subspace(&h, e)),
                None => println!("pencil plane: none"),
            }
            Ok(0)
        }
        Command::Ds { algebra, p0, p1, p2 } => match algebra.build()? {
            AlgebraChoice::CaseA(h) => ds(&h, [&p0, &p1, &p2]),
            AlgebraChoice::CaseB(h) => ds(&h, [&p0, &p1, &p2]),
        },
        Command::DivisionCheck { algebra } => match algebra.kind.as_str() {
            "caseA" => {
                let a: Rational = parse_scalar(algebra.a.as_deref().unwrap_or("-1")).map_err(|e| e.to_string())?;
                let b: Rational = parse_scalar(algebra.b.as_deref().unwrap_or("-1")).map_err(|e| e.to_string())?;
                if a.is_zero() || b.is_zero() {
                    return Err("structure constants must be nonzero".into());
                }
                let places = ramified_places(&(a.numer() * a.denom()), &(b.numer() * b.denom()))
                    .map_err(|e| e.to_string())?;
                if places.is_empty() {
                    println!("not a division algebra: ({a}, {b}) splits everywhere");
                    Ok(1)
                } else {
                    let names: Vec<String> = places.iter().map(|p| p.to_string()).collect();
                    println!("division algebra: ramified at {}", names.join(", "));
                    Ok(0)
                }
            }
            "caseB" => {
                let a: F2RatFun = parse_scalar(algebra.a.as_deref().unwrap_or("s")).map_err(|e| e.to_string())?;
                let b: F2RatFun = parse_scalar(algebra.b.as_deref().unwrap_or("t")).map_err(|e| e.to_string())?;
                if validate_case_b(&a, &b).map_err(|e| e.to_string())? {
                    println!("quartic field extension: [F(√a, √b) : F] = 4");
                    Ok(0)
                } else {
                    println!("not a quartic field extension");
                    Ok(1)
                }
            }
            other => Err(format!("unknown kind '{other}' (expected caseA or caseB)")),
        },
        Command::Report { file, format } => {
            let text = std::fs::read_to_string(&file).map_err(|e| format!("{}: {e}", file.display()))?;
            let report = parse_machine(&text).map_err(|e| format!("{}: {e}", file.display()))?;
            print!("{}", emit_report(&report, format));
            Ok(report.exit_code() as u8)
        }
    }
}

fn validate_checks(cfg: &cliffpar_harness::SuiteConfig) -> Result<(), String> {
    for name in &cfg.checks {
        match cliffpar_harness::suites::suite_spec(name) {
            None => return Err(format!("unknown suite '{name}'")),
            Some(s) if s.case_a_only && !cfg.algebra.is_case_a() => {
                return Err(format!("suite '{name}' requires case A"))
            }
            Some(_) => {}
        }
    }
    Ok(())
}

fn ds<A: FourAlgebra>(alg: &A, points: [&str; 3]) -> Result<u8, String> {
    let p: Vec<_> = points
        .iter()
        .map(|s| parse_point(alg, s))
        .collect::<cliffpar_core::Result<_>>()
        .map_err(|e| e.to_string())?;
    match ds_check(alg, &p[0], &p[1], &p[2]).map_err(|e| e.to_string())? {
        DsOutcome::Common(q) => {
            println!("common point: {}", format_subspace(alg, &q));
            Ok(0)
        }
        DsOutcome::Violation { m1, m2 } => {
            println!("violation: {} and {} are skew", format_subspace(alg, &m1), format_subspace(alg, &m2));
            Ok(1)
        }
    }
}

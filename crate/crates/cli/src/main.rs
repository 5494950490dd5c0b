//! Command-line front end: character tables, invariant bounds,
//! torsion-freeness checks, the real and complex reductions, and the
//! complex-structure subcommands.
//!
//! Exit codes: 0 — success, or the queried property holds; 1 — the
//! property fails (not special, not essentially complex, not invariant,
//! not a complex structure); 2 — invalid input; 3 — unsupported
//! (extension required or an uncertified Schur index).

mod report;

use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};

use vasquez::bieberbach::{complex_vasquez_reduce, vasquez_reduce, BieberbachDatum};
use vasquez::bounds;
use vasquez::characters::{CharacterTable, RationalTable};
use vasquez::cxstruct;
use vasquez::json;
use vasquez::Error;

#[derive(Parser)]
#[command(name = "vasquez", version, about = "Exact Vasquez invariants of finite groups")]
struct Cli {
    /// Seed for the randomized (Las Vegas) steps; recorded in reports.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Ceiling on group closure size.
    #[arg(long, global = true, default_value_t = 20_000)]
    max_group_order: usize,

    /// Output format.
    #[arg(long, global = true, default_value = "json")]
    format: Format,

    /// Field policy for newly constructed structures: `quadratic`
    /// allows one real quadratic extension, `rational` refuses
    /// anything beyond the rationals.
    #[arg(long, global = true, default_value = "quadratic")]
    field_policy: FieldPolicy,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum FieldPolicy {
    Quadratic,
    Rational,
}

#[derive(Subcommand)]
enum Command {
    /// Character table with indicators, Galois orbits and Schur indices.
    Chartab { group: String },
    /// Real and complex invariant bounds.
    Bounds {
        group: String,
        /// Inject an externally known exact value of the real invariant.
        #[arg(long)]
        assume_n: Option<u64>,
    },
    /// Validate a datum and run both torsion-freeness tests.
    Check { datum: String },
    /// Reduce a special datum; `--complex` runs the complex reduction.
    Reduce {
        datum: String,
        #[arg(long)]
        complex: bool,
    },
    /// Test the lattice of a datum for essential complexity.
    EcTest { datum: String },
    /// Complex-structure operations.
    #[command(subcommand)]
    Cstruct(CstructCommand),
}

#[derive(Subcommand)]
enum CstructCommand {
    /// Verify J² = -I and equivariance; print the holomorphic character.
    Verify { datum: String, structure: String },
    /// Test a sublattice span for J-invariance and report the maximal
    /// J-compatible rational subspace.
    Invariant {
        datum: String,
        structure: String,
        sublattice: String,
    },
    /// Change the structure so the sublattice becomes invariant while
    /// keeping the Hodge type.
    Adapt {
        datum: String,
        structure: String,
        sublattice: String,
    },
    /// Compare the Hodge types of two structures on one datum.
    HodgeEqual {
        datum: String,
        first: String,
        second: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => outcome,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

fn exit_code_for(e: &anyhow::Error) -> ExitCode {
    let Some(err) = e.downcast_ref::<Error>() else {
        return ExitCode::from(2);
    };
    match err {
        Error::NotSpecial
        | Error::NotEssentiallyComplex
        | Error::NotAComplexStructure(_)
        | Error::KernelNotInvariant => ExitCode::from(1),
        Error::SchurUnknown { .. }
        | Error::ExtensionRequired(_)
        | Error::Unsupported(_, _)
        | Error::Inconsistency(_) => ExitCode::from(3),
        _ => ExitCode::from(2),
    }
}

/// Reads inline JSON (starting with `{`) or a file path.
fn read_input(arg: &str) -> anyhow::Result<String> {
    if arg.trim_start().starts_with('{') {
        Ok(arg.to_string())
    } else {
        Ok(std::fs::read_to_string(arg)?)
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(arg: &str) -> anyhow::Result<T> {
    let text = read_input(arg)?;
    serde_json::from_str(&text).map_err(|e| Error::InvalidInput(format!("bad JSON: {e}")).into())
}

fn load_datum(arg: &str, limit: usize) -> anyhow::Result<BieberbachDatum> {
    let spec: json::DatumJson = parse_json(arg)?;
    Ok(json::datum_from_json(&spec, limit)?)
}

fn rational_table(
    group: &Arc<vasquez::groups::FiniteGroup>,
    seed: u64,
) -> anyhow::Result<RationalTable> {
    let table = CharacterTable::build(group.clone())?;
    Ok(RationalTable::build(Arc::new(table), seed))
}

fn emit(cli: &Cli, value: &serde_json::Value) {
    use std::io::Write;
    let text = match cli.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Table => report::render_table(value),
    };
    // a closed pipe (e.g. piping into head) is not an error
    let _ = std::io::stdout().write_all(text.as_bytes());
}

fn run(cli: &Cli) -> anyhow::Result<ExitCode> {
    match &cli.command {
        Command::Chartab { group } => {
            let spec: json::GroupSpec = parse_json(group)?;
            let g = json::group_from_spec(&spec, cli.max_group_order)?;
            let rt = rational_table(&g, cli.seed)?;
            let report = report::chartab_report(&rt, cli.seed);
            emit(cli, &serde_json::to_value(report)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Bounds { group, assume_n } => {
            let spec: json::GroupSpec = parse_json(group)?;
            let g = json::group_from_spec(&spec, cli.max_group_order)?;
            let rt = rational_table(&g, cli.seed)?;
            let b = bounds::bound_report(&g, &rt, *assume_n)?;
            let report = report::bounds_report(&b, cli.seed);
            emit(cli, &serde_json::to_value(report)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { datum } => {
            let d = load_datum(datum, cli.max_group_order)?;
            let special = d.special_test()?;
            let functional = d.special_test_functional()?;
            let report = report::check_report(&d, special, functional, cli.seed);
            emit(cli, &serde_json::to_value(report)?);
            Ok(if special {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Reduce { datum, complex } => {
            let d = load_datum(datum, cli.max_group_order)?;
            let result = if *complex {
                let rt = rational_table(d.group(), cli.seed)?;
                complex_vasquez_reduce(&d, &rt)?
            } else {
                vasquez_reduce(&d)?
            };
            let report = report::reduce_report(&d, &result, *complex, cli.seed)?;
            emit(cli, &serde_json::to_value(report)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::EcTest { datum } => {
            let d = load_datum(datum, cli.max_group_order)?;
            let rt = rational_table(d.group(), cli.seed)?;
            let (ec, witness) = rt.essentially_complex(d.holonomy())?;
            let report = report::ec_report(&d, ec, &witness, cli.seed);
            emit(cli, &serde_json::to_value(report)?);
            Ok(if ec {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Cstruct(sub) => run_cstruct(cli, sub),
    }
}

fn run_cstruct(cli: &Cli, sub: &CstructCommand) -> anyhow::Result<ExitCode> {
    match sub {
        CstructCommand::Verify { datum, structure } => {
            let d = load_datum(datum, cli.max_group_order)?;
            let j: json::CxJson = parse_json(structure)?;
            let m = json::structure_from_json(&j)?;
            let s = cxstruct::verify(d.holonomy(), &m)?;
            let report = report::cstruct_verify_report(&s, cli.seed);
            emit(cli, &serde_json::to_value(report)?);
            Ok(ExitCode::SUCCESS)
        }
        CstructCommand::Invariant {
            datum,
            structure,
            sublattice,
        } => {
            let d = load_datum(datum, cli.max_group_order)?;
            let j: json::CxJson = parse_json(structure)?;
            let m = json::structure_from_json(&j)?;
            let s = cxstruct::verify(d.holonomy(), &m)?;
            let sub: json::SublatticeJson = parse_json(sublattice)?;
            let lattice = json::sublattice_from_json(&sub, d.dim())?;
            let span = cxstruct::from_rational_matrix(&lattice.basis().to_rational());
            let invariant = cxstruct::subspace_invariant(&s, &span);
            let maximal = cxstruct::maximal_invariant_subspace(&s, &span)?;
            let report = report::cstruct_invariant_report(invariant, &maximal, cli.seed)?;
            emit(cli, &serde_json::to_value(report)?);
            Ok(if invariant {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        CstructCommand::Adapt {
            datum,
            structure,
            sublattice,
        } => {
            let d = load_datum(datum, cli.max_group_order)?;
            let j: json::CxJson = parse_json(structure)?;
            let m = json::structure_from_json(&j)?;
            let s = cxstruct::verify(d.holonomy(), &m)?;
            let sub: json::SublatticeJson = parse_json(sublattice)?;
            let lattice = json::sublattice_from_json(&sub, d.dim())?;
            let rt = rational_table(d.group(), cli.seed)?;
            let adapted = cxstruct::adapt(d.holonomy(), &s, &lattice, &rt, cli.seed)?;
            if cli.field_policy == FieldPolicy::Rational {
                if let Some(d) = adapted.field() {
                    return Err(Error::ExtensionRequired(format!(
                        "adapted structure needs Q(√{d}) but the field policy is rational"
                    ))
                    .into());
                }
            }
            let report = report::cstruct_adapt_report(&adapted, cli.seed);
            emit(cli, &serde_json::to_value(report)?);
            Ok(ExitCode::SUCCESS)
        }
        CstructCommand::HodgeEqual {
            datum,
            first,
            second,
        } => {
            let d = load_datum(datum, cli.max_group_order)?;
            let ja: json::CxJson = parse_json(first)?;
            let jb: json::CxJson = parse_json(second)?;
            let a = cxstruct::verify(d.holonomy(), &json::structure_from_json(&ja)?)?;
            let b = cxstruct::verify(d.holonomy(), &json::structure_from_json(&jb)?)?;
            let equal = cxstruct::hodge_equal(&a, &b);
            let report = report::hodge_equal_report(equal, cli.seed);
            emit(cli, &serde_json::to_value(report)?);
            Ok(if equal {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

//! Command-line surface: build fields, compute matrices by any method, list
//! symmetry classes, and run the verification battery.
//!
//! Exit codes: 0 success, 1 usage error, 2 mathematical inconsistency.

#![allow(clippy::manual_is_multiple_of)]

use std::fs;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use cyclotomy::{
    cyclotomic_direct, cyclotomic_from_jacobi, cyclotomic_via_reps_stats, enumerate_classes,
    find_generator, jacobi_all_direct, jacobi_from_cyclotomic, jacobi_via_reps_stats,
    CharacterSetup, ExpansionStats, Family, FieldSpec, RuleKind, SymmetryCase,
};
use cyclotomy_cli::{parse_u64_list, render, report, CliError};

#[derive(Parser)]
#[command(
    name = "cyclotomy",
    version,
    about = "Exact cyclotomic numbers and Jacobi sums over finite fields"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a finite field and report its modulus and least generator
    Field(FieldArgs),
    /// Compute a cyclotomic-number or Jacobi-sum matrix
    Compute(ComputeArgs),
    /// List the symmetry classes of index pairs for an order
    Classes(ClassesArgs),
    /// Run every cross-check on one setup and emit a JSON report
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Cyclotomic,
    Jacobi,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    /// Full direct computation of every entry
    Direct,
    /// Direct computation at class representatives, orbit expansion for the rest
    Reps,
    /// Compute the other family first and convert
    Convert,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CaseArg {
    Even,
    Odd,
}

#[derive(Args)]
struct FieldArgs {
    /// Characteristic (prime)
    #[arg(long)]
    p: u64,
    /// Extension degree
    #[arg(long, default_value_t = 1)]
    r: u32,
    /// Monic modulus polynomial, little-endian coefficients `c0,c1,...,1`
    #[arg(long)]
    modulus: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write the output to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ComputeArgs {
    #[arg(long)]
    p: u64,
    #[arg(long, default_value_t = 1)]
    r: u32,
    #[arg(long)]
    modulus: Option<String>,
    /// Order e with e | q-1
    #[arg(long)]
    e: u64,
    /// Generator override as an element text form (`3` or `c0,c1,...`)
    #[arg(long)]
    generator: Option<String>,
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long, value_enum, default_value_t = MethodArg::Direct)]
    method: MethodArg,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ClassesArgs {
    /// Order e
    #[arg(long)]
    e: u64,
    /// Rule regime: even (k even or characteristic 2) or odd
    #[arg(long, value_enum)]
    case: CaseArg,
    #[arg(long, value_enum, default_value_t = FamilyArg::Cyclotomic)]
    family: FamilyArg,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    p: u64,
    #[arg(long, default_value_t = 1)]
    r: u32,
    #[arg(long)]
    modulus: Option<String>,
    #[arg(long)]
    e: u64,
    #[arg(long)]
    generator: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) if matches!(err.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{err}");
            return 0;
        }
        Err(err) => {
            eprint!("{err}");
            return 1;
        }
    };
    let result = match cli.command {
        Command::Field(args) => cmd_field(args),
        Command::Compute(args) => cmd_compute(args),
        Command::Classes(args) => cmd_classes(args),
        Command::Verify(args) => cmd_verify(args),
    };
    match result {
        Ok(()) => 0,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            1
        }
        Err(CliError::Inconsistency(msg)) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|err| CliError::Usage(format!("cannot write {}: {err}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn build_field(p: u64, r: u32, modulus: Option<&str>) -> Result<FieldSpec, CliError> {
    let parsed = modulus
        .map(parse_u64_list)
        .transpose()
        .map_err(CliError::Usage)?;
    Ok(FieldSpec::build(p, r, parsed.as_deref())?)
}

fn build_setup(
    p: u64,
    r: u32,
    modulus: Option<&str>,
    e: u64,
    generator: Option<&str>,
) -> Result<CharacterSetup, CliError> {
    let field = build_field(p, r, modulus)?;
    let gen = match generator {
        Some(text) => {
            let coeffs = parse_u64_list(text).map_err(CliError::Usage)?;
            Some(field.element(&coeffs)?)
        }
        None => None,
    };
    Ok(CharacterSetup::new(field, e, gen)?)
}

fn cmd_field(args: FieldArgs) -> Result<(), CliError> {
    let field = build_field(args.p, args.r, args.modulus.as_deref())?;
    let generator = find_generator(&field);
    let text = match args.format {
        Format::Table => render::field_table(&field, &generator),
        Format::Json => render::json_text(&render::field_json(&field, &generator)),
        Format::Csv => {
            return Err(CliError::Usage("csv output applies to compute only".into()))
        }
    };
    emit(&text, args.out.as_deref())
}

fn reps_footer(stats: &ExpansionStats) -> String {
    format!(
        "entries computed directly: {} of {} ({} filled by orbit expansion)\n",
        stats.direct_entries,
        stats.direct_entries + stats.expanded_entries,
        stats.expanded_entries
    )
}

fn cmd_compute(args: ComputeArgs) -> Result<(), CliError> {
    let setup = build_setup(
        args.p,
        args.r,
        args.modulus.as_deref(),
        args.e,
        args.generator.as_deref(),
    )?;

    let mut stats: Option<ExpansionStats> = None;
    let text = match args.family {
        FamilyArg::Cyclotomic => {
            let matrix = match args.method {
                MethodArg::Direct => cyclotomic_direct(&setup),
                MethodArg::Reps => {
                    let (m, s) = cyclotomic_via_reps_stats(&setup);
                    stats = Some(s);
                    m
                }
                MethodArg::Convert => {
                    let jm = jacobi_all_direct(&setup);
                    cyclotomic_from_jacobi(&jm, &setup)?
                }
            };
            match args.format {
                Format::Table => {
                    let mut t = render::cyc_matrix_table(&matrix, &setup);
                    if let Some(s) = &stats {
                        t.push_str(&reps_footer(s));
                    }
                    t
                }
                Format::Json => render::json_text(&render::cyc_matrix_json(&matrix, &setup)),
                Format::Csv => render::cyc_matrix_csv(&matrix),
            }
        }
        FamilyArg::Jacobi => {
            let matrix = match args.method {
                MethodArg::Direct => jacobi_all_direct(&setup),
                MethodArg::Reps => {
                    let (m, s) = jacobi_via_reps_stats(&setup);
                    stats = Some(s);
                    m
                }
                MethodArg::Convert => {
                    let m = cyclotomic_direct(&setup);
                    jacobi_from_cyclotomic(&m, &setup)
                }
            };
            match args.format {
                Format::Table => {
                    let mut t = render::jacobi_matrix_table(&matrix, &setup);
                    if let Some(s) = &stats {
                        t.push_str(&reps_footer(s));
                    }
                    t
                }
                Format::Json => render::json_text(&render::jacobi_matrix_json(&matrix, &setup)),
                Format::Csv => render::jacobi_matrix_csv(&matrix),
            }
        }
    };

    // keep machine formats byte-stable: the work footer goes to stderr there
    if args.format != Format::Table {
        if let Some(s) = &stats {
            eprint!("{}", reps_footer(s));
        }
    }
    emit(&text, args.out.as_deref())
}

fn cmd_classes(args: ClassesArgs) -> Result<(), CliError> {
    let (kind, k) = match args.case {
        CaseArg::Even => (RuleKind::Even, 2),
        CaseArg::Odd => (RuleKind::Odd, 1),
    };
    if args.e < 2 {
        return Err(CliError::Usage(format!("order {} must be at least 2", args.e)));
    }
    if kind == RuleKind::Odd && args.e % 2 != 0 {
        return Err(CliError::Usage(format!(
            "odd-cofactor rules require even order, got {}",
            args.e
        )));
    }
    // the k passed here only carries parity, which is all the signs use
    let case: SymmetryCase = cyclotomy::select_case(args.e, k, 3)?;
    let family = match args.family {
        FamilyArg::Cyclotomic => Family::Cyclotomic,
        FamilyArg::Jacobi => Family::Jacobi,
    };
    let family_name = match family {
        Family::Cyclotomic => "cyclotomic",
        Family::Jacobi => "jacobi",
    };
    let classes = enumerate_classes(args.e, &case, family, k);
    let text = match args.format {
        Format::Table => render::classes_table(args.e, kind, family_name, &classes),
        Format::Json => {
            render::json_text(&render::classes_json(args.e, kind, family_name, &classes))
        }
        Format::Csv => {
            return Err(CliError::Usage("csv output applies to compute only".into()))
        }
    };
    emit(&text, args.out.as_deref())
}

fn cmd_verify(args: VerifyArgs) -> Result<(), CliError> {
    let setup = build_setup(
        args.p,
        args.r,
        args.modulus.as_deref(),
        args.e,
        args.generator.as_deref(),
    )?;
    let rep = report::run_verify(&setup);
    eprint!("{}", report::timing_text(&rep.timings));
    emit(&report::report_text(&rep), args.out.as_deref())?;
    if rep.passed() {
        Ok(())
    } else {
        Err(CliError::Inconsistency(
            "verification detected failing checks; see report".into(),
        ))
    }
}

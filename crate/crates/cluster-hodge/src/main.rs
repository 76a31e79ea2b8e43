//! Command-line front end: classification, mixed Hodge tables, log-form
//! bases, point counts, and verification for seeds given in the JSON
//! quiver format.

use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cluster_hodge::hodge::table_for;
use cluster_hodge::{
    basis_for, classify, count_variety, e_polynomial, finite_type_check, verify_table,
    Classification, Classified, CountError, CountingPolynomial, DeligneBasis, FiniteTypeVerdict,
    FormError, HodgeError, PrimeField, QuiverError, Seed, TwoMutableBasisVariant, Verdict,
};

#[derive(Parser)]
#[command(
    name = "cluster-hodge",
    version,
    about = "Mixed Hodge tables, log-form bases, and point-count checks \
             for cluster varieties of dimension at most three"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the seed up to mutation, permutation, and inversion of
    /// frozen coordinates
    Classify {
        /// Quiver JSON file, or - for stdin
        #[arg(default_value = "-")]
        input: String,
    },
    /// Print the mixed Hodge number table of the seed's variety
    Table {
        /// Print the intersection-cohomology table (differs only for the
        /// singular case)
        #[arg(long)]
        ih: bool,
        /// Quiver JSON file, or - for stdin
        #[arg(default_value = "-")]
        input: String,
    },
    /// List basis forms for every nonzero table entry
    Basis {
        /// Which second generating family the two-mutable case uses
        #[arg(long, value_enum, default_value_t = BasisVariantArg::Statement)]
        variant: BasisVariantArg,
        /// Quiver JSON file, or - for stdin
        #[arg(default_value = "-")]
        input: String,
    },
    /// Count rational points of the seed's variety over a prime field
    Count {
        /// Order of the prime field
        #[arg(long)]
        prime: u64,
        /// Quiver JSON file, or - for stdin
        #[arg(default_value = "-")]
        input: String,
    },
    /// Fit point counts over small primes to a polynomial and compare it
    /// with the table's E-polynomial
    Verify {
        /// Quiver JSON file, or - for stdin
        #[arg(default_value = "-")]
        input: String,
    },
    /// Decide whether mutation reaches an acyclic seed
    FiniteType {
        /// Quiver JSON file, or - for stdin
        #[arg(default_value = "-")]
        input: String,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BasisVariantArg {
    /// Second family indexed by gcd(a, b); always matches the table
    #[value(name = "statement")]
    Statement,
    /// Second family indexed by gcd(b, c); kept for comparison
    #[value(name = "eq21")]
    Eq21,
}

impl From<BasisVariantArg> for TwoMutableBasisVariant {
    fn from(arg: BasisVariantArg) -> Self {
        match arg {
            BasisVariantArg::Statement => TwoMutableBasisVariant::Statement,
            BasisVariantArg::Eq21 => TwoMutableBasisVariant::Alternate,
        }
    }
}

/// Failure with the exit code it maps to: 1 for malformed input or flags,
/// 2 for well-formed seeds whose requested artifact the theory does not
/// provide.
struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn malformed(message: impl Into<String>) -> Self {
        Self {
            code: 1,
            message: message.into(),
        }
    }

    fn open(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<QuiverError> for CliError {
    fn from(e: QuiverError) -> Self {
        let message = match &e {
            QuiverError::Json(detail) => format!("malformed JSON: {detail}"),
            _ => e.to_string(),
        };
        CliError::malformed(message)
    }
}

impl From<HodgeError> for CliError {
    fn from(e: HodgeError) -> Self {
        match e {
            HodgeError::TableUnavailable { .. } => CliError::open(e.to_string()),
            HodgeError::Quiver(q) => q.into(),
            other => CliError::malformed(other.to_string()),
        }
    }
}

impl From<CountError> for CliError {
    fn from(e: CountError) -> Self {
        match e {
            CountError::Unsupported(_) => CliError::open(e.to_string()),
            CountError::Hodge(h) => h.into(),
            CountError::Quiver(q) => q.into(),
            other => CliError::malformed(other.to_string()),
        }
    }
}

impl From<FormError> for CliError {
    fn from(e: FormError) -> Self {
        match e {
            FormError::BasisUnavailable { .. } => CliError::open(e.to_string()),
            other => CliError::malformed(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let requested = matches!(
                err.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            );
            let _ = err.print();
            return if requested {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            };
        }
    };
    match run(&cli) {
        Ok((output, code)) => {
            // Tolerate a closed pipe (e.g. piping into head); report any
            // other write failure.
            use std::io::Write;
            if let Err(e) = writeln!(std::io::stdout().lock(), "{output}") {
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    eprintln!("error: cannot write output: {e}");
                    return ExitCode::from(1);
                }
            }
            ExitCode::from(code)
        }
        Err(err) => {
            eprintln!("error: {}", err.message);
            ExitCode::from(err.code)
        }
    }
}

fn run(cli: &Cli) -> Result<(String, u8), CliError> {
    match &cli.command {
        Command::Classify { input } => run_classify(input, cli.format),
        Command::Table { ih, input } => run_table(input, *ih, cli.format),
        Command::Basis { variant, input } => run_basis(input, *variant, cli.format),
        Command::Count { prime, input } => run_count(input, *prime, cli.format),
        Command::Verify { input } => run_verify(input, cli.format),
        Command::FiniteType { input } => run_finite_type(input, cli.format),
    }
}

fn read_seed(input: &str) -> Result<Seed, CliError> {
    let text = if input == "-" {
        let mut buffer = String::new();
        std::io::stdin()
            .read_to_string(&mut buffer)
            .map_err(|e| CliError::malformed(format!("cannot read stdin: {e}")))?;
        buffer
    } else {
        fs::read_to_string(input)
            .map_err(|e| CliError::malformed(format!("cannot read {input}: {e}")))?
    };
    Ok(Seed::from_json(&text)?)
}

/// Compact JSON with keys in sorted order, so parsing and re-serializing
/// the output reproduces it byte for byte.
fn canonical(value: &Value) -> String {
    serde_json::to_string(value).expect("JSON serialization cannot fail")
}

fn to_value<T: serde::Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("JSON serialization cannot fail")
}

fn join_params(params: &[i64]) -> String {
    params
        .iter()
        .map(i64::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn run_classify(input: &str, format: Format) -> Result<(String, u8), CliError> {
    let seed = read_seed(input)?;
    let classified = classify(&seed)?;
    let case = &classified.case;
    let has_table = !matches!(
        case,
        Classification::NotFiniteType { .. } | Classification::Unsupported { .. }
    );
    let code = if matches!(case, Classification::Unsupported { .. }) {
        2
    } else {
        0
    };
    let output = match format {
        Format::Text => {
            let mut lines = vec![
                format!("case: {}", case.case_name()),
                format!("description: {case}"),
                format!("params: {}", join_params(&case.params())),
                format!("variables: {}", classified.seed.dim()),
            ];
            if has_table {
                lines.push(format!("smooth: {}", case.smooth()));
            }
            lines.push(format!("mutations: {}", classified.mutations));
            lines.join("\n")
        }
        Format::Json => {
            let mut object = json!({
                "case": case.case_name(),
                "description": case.to_string(),
                "mutations": classified.mutations,
                "params": case.params(),
                "variables": classified.seed.dim(),
            });
            if has_table {
                object["smooth"] = Value::Bool(case.smooth());
            }
            canonical(&object)
        }
        Format::Csv => {
            let smooth = if has_table {
                case.smooth().to_string()
            } else {
                String::new()
            };
            format!(
                "case,params,variables,smooth,mutations\n{},{},{},{},{}",
                case.case_name(),
                join_params(&case.params()),
                classified.seed.dim(),
                smooth,
                classified.mutations
            )
        }
    };
    Ok((output, code))
}

fn run_table(input: &str, ih: bool, format: Format) -> Result<(String, u8), CliError> {
    let seed = read_seed(input)?;
    let classified = classify(&seed)?;
    let table = table_for(&classified, ih)?;
    let output = match format {
        Format::Text => table.ascii().trim_end().to_string(),
        Format::Json => {
            let value: Value = serde_json::from_str(&table.to_json())
                .expect("table JSON is always well formed");
            canonical(&value)
        }
        Format::Csv => {
            let mut lines = vec!["k,p,h".to_string()];
            for k in 0..=table.dim() {
                for p in 0..=k {
                    lines.push(format!("{},{},{}", k, p, table.entry(k, p)));
                }
            }
            lines.join("\n")
        }
    };
    Ok((output, 0))
}

fn run_basis(
    input: &str,
    variant: BasisVariantArg,
    format: Format,
) -> Result<(String, u8), CliError> {
    let seed = read_seed(input)?;
    let classified = classify(&seed)?;
    let basis = basis_for(&classified.case, variant.into())?;
    let output = match format {
        Format::Text => render_basis_text(&classified, &basis),
        Format::Json => {
            let groups: Vec<Value> = basis
                .iter()
                .map(|((k, p), forms)| {
                    json!({
                        "forms": forms.iter().map(to_value).collect::<Vec<_>>(),
                        "k": k,
                        "p": p,
                    })
                })
                .collect();
            let variant_name = match variant {
                BasisVariantArg::Statement => "statement",
                BasisVariantArg::Eq21 => "eq21",
            };
            canonical(&json!({
                "case": classified.case.case_name(),
                "generators": basis.generators(),
                "groups": groups,
                "params": classified.case.params(),
                "variant": variant_name,
            }))
        }
        Format::Csv => {
            let mut lines = vec!["k,p,index,form".to_string()];
            for ((k, p), forms) in basis.iter() {
                for (index, form) in forms.iter().enumerate() {
                    lines.push(format!("{k},{p},{index},{form}"));
                }
            }
            lines.join("\n")
        }
    };
    Ok((output, 0))
}

fn render_basis_text(classified: &Classified, basis: &DeligneBasis) -> String {
    let mut lines = vec![
        format!("case: {}", classified.case.case_name()),
        format!("generators: {}", basis.generators().join(", ")),
    ];
    for ((k, p), forms) in basis.iter() {
        let plural = if forms.len() == 1 { "form" } else { "forms" };
        lines.push(format!("H^{{{k},({p},{p})}}: {} {plural}", forms.len()));
        for form in forms {
            lines.push(format!("  {form}"));
        }
    }
    lines.join("\n")
}

fn run_count(input: &str, prime: u64, format: Format) -> Result<(String, u8), CliError> {
    let seed = read_seed(input)?;
    let field = PrimeField::new(prime)?;
    let count = count_variety(&seed, &field)?;
    let output = match format {
        Format::Text => count.to_string(),
        Format::Json => canonical(&json!({ "count": count, "prime": prime })),
        Format::Csv => format!("prime,count\n{prime},{count}"),
    };
    Ok((output, 0))
}

fn verdict_label(verdict: &Verdict) -> &'static str {
    match verdict {
        Verdict::Pass => "PASS",
        Verdict::Fail => "FAIL",
        Verdict::CountOnly => "COUNT_ONLY",
    }
}

fn polynomial_or_none(polynomial: &Option<CountingPolynomial>) -> String {
    match polynomial {
        Some(p) => p.to_string(),
        None => "(none)".to_string(),
    }
}

fn run_verify(input: &str, format: Format) -> Result<(String, u8), CliError> {
    let seed = read_seed(input)?;
    match verify_table(&seed) {
        Ok(report) => {
            let output = match format {
                Format::Text => [
                    verdict_label(&report.verdict).to_string(),
                    format!("case: {}", report.case),
                    format!("params: {}", join_params(&report.params)),
                    format!("predicted: {}", polynomial_or_none(&report.predicted)),
                    format!("observed: {}", report.observed),
                ]
                .join("\n"),
                Format::Json => canonical(&to_value(&report)),
                Format::Csv => format!(
                    "case,params,verdict,predicted,observed\n{},{},{},{},{}",
                    report.case,
                    join_params(&report.params),
                    verdict_label(&report.verdict),
                    polynomial_or_none(&report.predicted),
                    report.observed
                ),
            };
            Ok((output, 0))
        }
        // Counts that fit no integer polynomial are a verification
        // outcome, not a usage error: report them as FAIL.
        Err(err @ (CountError::NonIntegerCoefficient { .. } | CountError::HeldOutMismatch { .. })) => {
            let classified = classify(&seed)?;
            let predicted = if classified.case.smooth() {
                Some(e_polynomial(&table_for(&classified, false)?)?)
            } else {
                None
            };
            let note = format!(
                "counts over the verification primes fit no integer polynomial: {err}"
            );
            let output = match format {
                Format::Text => [
                    "FAIL".to_string(),
                    format!("case: {}", classified.case.case_name()),
                    format!("params: {}", join_params(&classified.case.params())),
                    format!("predicted: {}", polynomial_or_none(&predicted)),
                    "observed: (none)".to_string(),
                    format!("note: {note}"),
                ]
                .join("\n"),
                Format::Json => canonical(&json!({
                    "case": classified.case.case_name(),
                    "note": note,
                    "observed": Value::Null,
                    "params": classified.case.params(),
                    "predicted": predicted,
                    "verdict": "FAIL",
                })),
                Format::Csv => format!(
                    "case,params,verdict,predicted,observed\n{},{},FAIL,{},",
                    classified.case.case_name(),
                    join_params(&classified.case.params()),
                    polynomial_or_none(&predicted),
                ),
            };
            Ok((output, 0))
        }
        Err(other) => Err(other.into()),
    }
}

fn run_finite_type(input: &str, format: Format) -> Result<(String, u8), CliError> {
    let seed = read_seed(input)?;
    let verdict = finite_type_check(&seed)?;
    let output = match format {
        Format::Text => match &verdict {
            FiniteTypeVerdict::FiniteLouise { mutations, .. } => {
                format!("FiniteLouise\nmutations: {mutations}")
            }
            FiniteTypeVerdict::NotFiniteType {
                witness: (a, b, c),
                mutations,
            } => {
                format!("NotFiniteType\nwitness: ({a}, {b}, {c})\nmutations: {mutations}")
            }
        },
        Format::Json => canonical(&to_value(&verdict)),
        Format::Csv => match &verdict {
            FiniteTypeVerdict::FiniteLouise { mutations, .. } => {
                format!("verdict,witness,mutations\nFiniteLouise,,{mutations}")
            }
            FiniteTypeVerdict::NotFiniteType {
                witness: (a, b, c),
                mutations,
            } => {
                format!("verdict,witness,mutations\nNotFiniteType,{a} {b} {c},{mutations}")
            }
        },
    };
    Ok((output, 0))
}

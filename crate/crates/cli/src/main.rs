//! Command-line front end: multiplicity scans, family construction,
//! brute-force oracle runs, and number-theory tables, emitted as
//! deterministic JSON envelopes or CSV.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde_json::{json, Value};

use classmult::family::{build_family, equal_class_family, family_params, verify_family, Branch,
    VerificationReport};
use classmult::numbers::{
    divisor_count_factorial, growth_ratio, totient_bound_check, BoundKind, FactorialFactorization,
};
use classmult::oracle::{
    class_records, close_group, multiplicity_report_oracle, parse_generator_file, power_conjugacy,
    psl2_group, PermGroup, DEFAULT_CAP,
};
use classmult::sym_alt::{multiplicity_report, GroupTag, MultiplicityReport};
use classmult::Error;

const SCHEMA_VERSION: &str = "1";
const SCAN_RANGE_GUARD: u64 = 60;

#[derive(Parser)]
#[command(name = "classmult", version, about = "Exact conjugacy-class-size multiplicity toolkit")]
struct Cli {
    /// Output format for all payloads.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Reserved; no command uses randomness today.
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum GroupKind {
    Sym,
    Alt,
}

impl GroupKind {
    fn tag(self, n: u64) -> GroupTag {
        match self {
            GroupKind::Sym => GroupTag::Sym(n),
            GroupKind::Alt => GroupTag::Alt(n),
        }
    }

    fn name(self) -> &'static str {
        match self {
            GroupKind::Sym => "sym",
            GroupKind::Alt => "alt",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Scan class-size multiplicity of S_n or A_n over a range of n.
    Scan {
        group: GroupKind,
        n_from: u64,
        n_to: u64,
        /// Lift the n <= 60 range guard.
        #[arg(long)]
        override_range: bool,
    },
    /// Build and verify the equal-centralizer partition family for M.
    Family {
        /// Required multiplicity M.
        m: u64,
        /// Target degree n; when given, the extended A_n classes are listed.
        #[arg(long)]
        n: Option<u64>,
    },
    /// Run the brute-force group oracle on a generator file or PSL(2,p).
    Oracle {
        #[command(flatten)]
        source: OracleSource,
        action: OracleAction,
        /// Degree override for generator files (otherwise inferred).
        #[arg(long)]
        degree: Option<usize>,
        /// Element-set cap for group closure.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// Element to analyze (index into the canonical element order).
        #[arg(long)]
        element_index: Option<usize>,
        /// Pick the first element of this order instead of an index.
        #[arg(long)]
        element_order: Option<u64>,
    },
    /// Number-theory tables: totient bound scan, d(n!), growth ratios.
    Numbers {
        #[command(subcommand)]
        action: NumbersAction,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct OracleSource {
    /// Generator file: one permutation per line in cycle notation.
    #[arg(long)]
    gens: Option<std::path::PathBuf>,
    /// Built-in PSL(2,p) on the projective line.
    #[arg(long)]
    psl2: Option<u64>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum OracleAction {
    Classes,
    Report,
    Power,
}

#[derive(Subcommand)]
enum NumbersAction {
    /// Scan 2*phi(k)^2 > k for k up to k_max.
    TotientCheck { k_max: u64 },
    /// Number of divisors of n!.
    Dfact { n: u64 },
    /// Exact ratios a^{floor(c*k)} / ((k+1) d(k!)) for k = 1..k_max.
    Growth { a: String, c: String, k_max: u64 },
}

struct CliError {
    code: u8,
    message: String,
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::CapExceeded { .. } => 3,
            Error::Parse { .. } => 4,
            _ => 2,
        };
        CliError {
            code,
            message: err.to_string(),
        }
    }
}

fn fail(message: impl Into<String>) -> CliError {
    CliError {
        code: 2,
        message: message.into(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err.message);
            ExitCode::from(err.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Scan {
            group,
            n_from,
            n_to,
            override_range,
        } => cmd_scan(group, n_from, n_to, override_range, cli.format),
        Command::Family { m, n } => cmd_family(m, n, cli.format),
        Command::Oracle {
            source,
            action,
            degree,
            cap,
            element_index,
            element_order,
        } => cmd_oracle(source, action, degree, cap, element_index, element_order, cli.format),
        Command::Numbers { action } => cmd_numbers(action, cli.format),
    }
}

fn envelope(command: &str, params: Value, payload: Value) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "params": params,
        "payload": payload,
    })
}

fn emit(value: &Value) {
    println!("{}", serde_json::to_string(value).expect("serializable"));
}

fn histogram_json(report: &MultiplicityReport) -> Value {
    Value::Array(
        report
            .histogram
            .iter()
            .map(|(size, count)| json!({"size": size.to_string(), "count": count}))
            .collect(),
    )
}

fn report_json(report: &MultiplicityReport) -> Value {
    json!({
        "group": report.group.to_string(),
        "class_count": report.class_count(),
        "max_multiplicity": report.max_multiplicity,
        "argmax_sizes": report.argmax_sizes.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
        "histogram": histogram_json(report),
    })
}

fn cmd_scan(
    group: GroupKind,
    n_from: u64,
    n_to: u64,
    override_range: bool,
    format: Format,
) -> Result<(), CliError> {
    if n_from > n_to {
        return Err(fail(format!("empty range: {n_from}..{n_to}")));
    }
    if n_to > SCAN_RANGE_GUARD && !override_range {
        return Err(fail(format!(
            "n_to = {n_to} exceeds the range guard {SCAN_RANGE_GUARD}; pass --override-range to proceed"
        )));
    }
    if format == Format::Csv {
        println!("n,max_multiplicity,argmax_sizes,class_count");
    }
    for n in n_from..=n_to {
        let report = multiplicity_report(&group.tag(n))?;
        match format {
            Format::Json => {
                let params = json!({"group": group.name(), "n": n});
                emit(&envelope("scan", params, report_json(&report)));
            }
            Format::Csv => {
                let argmax = report
                    .argmax_sizes
                    .iter()
                    .map(|s| s.to_string())
                    .collect::<Vec<_>>()
                    .join(";");
                println!(
                    "{n},{},{argmax},{}",
                    report.max_multiplicity,
                    report.class_count()
                );
            }
        }
    }
    Ok(())
}

fn verification_json(report: &VerificationReport) -> Value {
    json!({
        "all_passed": report.all_passed(),
        "checks": report
            .checks
            .iter()
            .map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail}))
            .collect::<Vec<_>>(),
    })
}

fn cmd_family(m: u64, n: Option<u64>, format: Format) -> Result<(), CliError> {
    let params = family_params(m)?;
    let (branch, block_size) = match n {
        Some(n) if n % 2 == 0 => (Branch::P, 21u64.pow(params.k) - 1),
        Some(_) => (Branch::PPrime, 21u64.pow(params.k + 1) - 1),
        // without a target n, list the even-branch base family
        None => (Branch::P, 21u64.pow(params.k) - 1),
    };
    let members = build_family(params.k, branch)?;
    let verification = verify_family(&members, block_size);
    if !verification.all_passed() {
        return Err(fail("family verification failed".to_string()));
    }

    let classes = match n {
        Some(n) => Some(equal_class_family(n, m)?),
        None => None,
    };
    let common_class_size = classes
        .as_ref()
        .map(|cs| cs[0].class_size.to_string());

    let params_json = json!({
        "M": params.required_multiplicity,
        "k": params.k,
        "min_even_n": params.min_even_n,
        "min_odd_n": params.min_odd_n,
        "n": n,
    });
    match format {
        Format::Json => {
            let members_json: Vec<Value> = members
                .iter()
                .map(|member| {
                    json!({
                        "word": member.word(),
                        "parts": member.partition.parts(),
                        "size": member.partition.size(),
                        "centralizer": member.certified_centralizer.to_string(),
                    })
                })
                .collect();
            let classes_json = classes.as_ref().map(|cs| {
                cs.iter()
                    .map(|c| {
                        json!({
                            "group": c.group.to_string(),
                            "rep": c.rep.to_string(),
                            "class_size": c.class_size.to_string(),
                        })
                    })
                    .collect::<Vec<_>>()
            });
            let payload = json!({
                "params": params_json,
                "members": members_json,
                "classes": classes_json,
                "common_class_size": common_class_size,
                "verification": verification_json(&verification),
            });
            emit(&envelope("family", json!({"M": m, "n": n}), payload));
        }
        Format::Csv => {
            println!("word,size,centralizer,common_class_size");
            let common = common_class_size.unwrap_or_default();
            for member in &members {
                println!(
                    "{},{},{},{common}",
                    member.word(),
                    member.partition.size(),
                    member.certified_centralizer
                );
            }
        }
    }
    Ok(())
}

fn cmd_oracle(
    source: OracleSource,
    action: OracleAction,
    degree: Option<usize>,
    cap: usize,
    element_index: Option<usize>,
    element_order: Option<u64>,
    format: Format,
) -> Result<(), CliError> {
    let (group, id): (PermGroup, String) = match (&source.gens, source.psl2) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| fail(format!("cannot read {}: {e}", path.display())))?;
            let gens = parse_generator_file(&text, degree)?;
            let degree = degree
                .or_else(|| gens.first().map(|g| g.degree()))
                .ok_or_else(|| fail("generator file defines no permutations"))?;
            (
                close_group(&gens, degree, cap)?,
                format!("file:{}", path.display()),
            )
        }
        (None, Some(p)) => (psl2_group(p, cap)?, format!("psl2_{p}")),
        _ => unreachable!("clap enforces exactly one source"),
    };

    let params = json!({
        "source": id,
        "degree": group.degree(),
        "order": group.order(),
        "cap": cap,
    });

    match action {
        OracleAction::Classes => {
            let records = class_records(&group, &id);
            match format {
                Format::Json => {
                    let payload = Value::Array(
                        records
                            .iter()
                            .map(|c| json!({"rep": c.rep.to_string(), "size": c.class_size.to_string()}))
                            .collect(),
                    );
                    emit(&envelope("oracle.classes", params, payload));
                }
                Format::Csv => {
                    println!("rep,size");
                    for c in &records {
                        println!("{},{}", c.rep, c.class_size);
                    }
                }
            }
        }
        OracleAction::Report => {
            let report = multiplicity_report_oracle(&group, &id);
            match format {
                Format::Json => emit(&envelope("oracle.report", params, report_json(&report))),
                Format::Csv => {
                    println!("size,count");
                    for (size, count) in &report.histogram {
                        println!("{size},{count}");
                    }
                }
            }
        }
        OracleAction::Power => {
            let element = match (element_index, element_order) {
                (Some(idx), None) => group
                    .elements()
                    .get(idx)
                    .ok_or_else(|| fail(format!("element index {idx} out of range")))?
                    .clone(),
                (None, Some(ord)) => group
                    .elements()
                    .iter()
                    .find(|e| e.order() == ord)
                    .ok_or_else(|| fail(format!("no element of order {ord}")))?
                    .clone(),
                _ => {
                    return Err(fail(
                        "power requires exactly one of --element-index or --element-order",
                    ))
                }
            };
            let pc = power_conjugacy(&group, &element)?;
            match format {
                Format::Json => {
                    let payload = json!({
                        "element": element.to_string(),
                        "order": pc.element_order,
                        "conj_power_count": pc.conj_power_count,
                        "equal_size_class_lower_bound": pc.equal_size_class_lower_bound,
                    });
                    emit(&envelope("oracle.power", params, payload));
                }
                Format::Csv => {
                    println!("order,conj_power_count,equal_size_class_lower_bound");
                    println!(
                        "{},{},{}",
                        pc.element_order, pc.conj_power_count, pc.equal_size_class_lower_bound
                    );
                }
            }
        }
    }
    Ok(())
}

fn parse_rational(text: &str) -> Result<BigRational, CliError> {
    let parse_int = |s: &str| {
        s.trim()
            .parse::<BigInt>()
            .map_err(|_| fail(format!("cannot parse '{s}' as an integer")))
    };
    match text.split_once('/') {
        Some((numer, denom)) => Ok(BigRational::new(parse_int(numer)?, parse_int(denom)?)),
        None => Ok(BigRational::from(parse_int(text)?)),
    }
}

fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn cmd_numbers(action: NumbersAction, format: Format) -> Result<(), CliError> {
    match action {
        NumbersAction::TotientCheck { k_max } => {
            if k_max < 1 {
                return Err(fail("k_max must be positive"));
            }
            let violations = totient_bound_check(k_max);
            match format {
                Format::Json => {
                    let payload = json!({
                        "k_max": k_max,
                        "violations": violations
                            .iter()
                            .map(|v| json!({
                                "k": v.k,
                                "phi": v.phi,
                                "kind": match v.kind {
                                    BoundKind::Equality => "equality",
                                    BoundKind::StrictViolation => "strict_violation",
                                },
                            }))
                            .collect::<Vec<_>>(),
                    });
                    emit(&envelope("numbers.totient-check", json!({"k_max": k_max}), payload));
                }
                Format::Csv => {
                    println!("k,phi,kind");
                    for v in &violations {
                        let kind = match v.kind {
                            BoundKind::Equality => "equality",
                            BoundKind::StrictViolation => "strict_violation",
                        };
                        println!("{},{},{kind}", v.k, v.phi);
                    }
                }
            }
        }
        NumbersAction::Dfact { n } => {
            let factorization = FactorialFactorization::new(n);
            let d = divisor_count_factorial(n);
            match format {
                Format::Json => {
                    let payload = json!({
                        "n": n,
                        "divisor_count": d.to_string(),
                        "exponents": factorization
                            .exponents
                            .iter()
                            .map(|&(p, e)| json!({"prime": p, "exponent": e}))
                            .collect::<Vec<_>>(),
                    });
                    emit(&envelope("numbers.dfact", json!({"n": n}), payload));
                }
                Format::Csv => {
                    println!("n,divisor_count");
                    println!("{n},{d}");
                }
            }
        }
        NumbersAction::Growth { a, c, k_max } => {
            let a = parse_rational(&a)?;
            let c = parse_rational(&c)?;
            if k_max < 1 {
                return Err(fail("k_max must be positive"));
            }
            let mut rows = Vec::with_capacity(k_max as usize);
            for k in 1..=k_max {
                rows.push((k, growth_ratio(&a, &c, k)?));
            }
            // last k at which the ratio fails to increase; the tail beyond
            // it is strictly increasing
            let turning_index = rows
                .windows(2)
                .filter(|w| w[1].1 <= w[0].1)
                .map(|w| w[1].0)
                .max()
                .unwrap_or(1);
            match format {
                Format::Json => {
                    let payload = json!({
                        "a": format_rational(&a),
                        "c": format_rational(&c),
                        "turning_index": turning_index,
                        "rows": rows
                            .iter()
                            .map(|(k, r)| json!({"k": k, "ratio": format_rational(r)}))
                            .collect::<Vec<_>>(),
                    });
                    emit(&envelope(
                        "numbers.growth",
                        json!({"a": format_rational(&a), "c": format_rational(&c), "k_max": k_max}),
                        payload,
                    ));
                }
                Format::Csv => {
                    println!("k,ratio");
                    let mut out = String::new();
                    for (k, r) in &rows {
                        writeln!(out, "{k},{}", format_rational(r)).unwrap();
                    }
                    print!("{out}");
                }
            }
        }
    }
    Ok(())
}

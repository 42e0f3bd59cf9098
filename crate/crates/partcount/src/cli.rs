//! Command-line front door: compute single values, emit tables, run the
//! verification suites, and benchmark the nested-sum formulas against the
//! classical recurrences.
//!
//! Exit-code contract (frozen; CI keys off it):
//! 0 success, 1 verification failure, 2 usage error, 3 count overflow,
//! 4 method disagreement.

use std::collections::BTreeMap;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::count::Count;
use crate::error::Error;
use crate::formulas::{CoprimalityClass, Evaluator, PartitionQuery, SmallestPart};
use crate::oracle;
use crate::reference::{
    self, identity_suite, oracle_equivalence_suite, p_nk_table, p_table_pentagonal, phi_scan_suite,
    CheckReport,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_OVERFLOW: i32 = 3;
pub const EXIT_METHOD_DISAGREEMENT: i32 = 4;

/// One computed value, as emitted on stdout (JSON-lines by default).
#[derive(Debug, Clone, Serialize)]
pub struct OutputRecord {
    pub function: String,
    pub args: BTreeMap<String, u64>,
    pub value: String,
    pub method: String,
    pub elapsed_ns: u128,
}

#[derive(Debug, Parser)]
#[command(name = "partcount", version, about = "Exact partition counting via finite Mobius-weighted nested sums")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute one counting function value.
    Compute(ComputeArgs),
    /// Emit a table of values, one row per n.
    Table(TableArgs),
    /// Run the verification suites.
    Verify(VerifyArgs),
    /// Time the nested-sum evaluation against the reference path.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClassArg {
    /// No gcd condition.
    All,
    /// Parts collectively coprime.
    Relprime,
    /// Parts coprime to the modulus given with --m.
    RelprimeTo,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    NestedSum,
    Reference,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MemoArg {
    On,
    Off,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    /// The number being partitioned.
    #[arg(long)]
    pub n: u64,
    /// Exact number of parts.
    #[arg(long)]
    pub k: Option<u64>,
    /// Smallest part is exactly this value (requires --k).
    #[arg(long, conflicts_with = "min_part")]
    pub smallest: Option<u64>,
    /// No part smaller than this value (requires --k).
    #[arg(long)]
    pub min_part: Option<u64>,
    /// Modulus for --class relprime-to.
    #[arg(long)]
    pub m: Option<u64>,
    #[arg(long, value_enum, default_value_t = ClassArg::All)]
    pub class: ClassArg,
    #[arg(long, value_enum, default_value_t = MethodArg::NestedSum)]
    pub method: MethodArg,
    #[arg(long, value_enum, default_value_t = MemoArg::Off)]
    pub memo: MemoArg,
    /// Print the bare decimal value instead of a JSON record.
    #[arg(long)]
    pub raw: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FunctionArg {
    /// p(n)
    P,
    /// p_psi(n)
    #[value(name = "p_psi")]
    PPsi,
    /// p_psi_m(n) (requires --m)
    #[value(name = "p_psi_m")]
    PPsiM,
    /// p(n, k) (requires --k)
    Pnk,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long)]
    pub max_n: u64,
    #[arg(long, value_enum, default_value_t = FunctionArg::P)]
    pub function: FunctionArg,
    #[arg(long)]
    pub k: Option<u64>,
    #[arg(long)]
    pub m: Option<u64>,
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    pub format: FormatArg,
    #[arg(long, value_enum, default_value_t = MethodArg::NestedSum)]
    pub method: MethodArg,
    #[arg(long, value_enum, default_value_t = MemoArg::On)]
    pub memo: MemoArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Identities,
    Oracle,
    Phi,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = SuiteArg::All)]
    pub suite: SuiteArg,
    #[arg(long, default_value_t = 20)]
    pub max_n: u64,
    #[arg(long, default_value_t = 8)]
    pub max_m: u64,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_enum, default_value_t = FunctionArg::P)]
    pub function: FunctionArg,
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub k: Option<u64>,
    #[arg(long)]
    pub m: Option<u64>,
    #[arg(long, default_value_t = 5)]
    pub reps: u32,
    #[arg(long, value_enum, default_value_t = MemoArg::Off)]
    pub memo: MemoArg,
    #[arg(long)]
    pub json: bool,
}

/// Run a parsed command; returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Compute(args) => cmd_compute(&args),
        Command::Table(args) => cmd_table(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Bench(args) => cmd_bench(&args),
    }
}

fn fail(code: i32, message: impl std::fmt::Display) -> i32 {
    eprintln!("partcount: {message}");
    code
}

fn error_exit(err: &Error) -> i32 {
    match err {
        Error::Overflow { .. } => EXIT_OVERFLOW,
        _ => EXIT_USAGE,
    }
}

fn build_query(args: &ComputeArgs) -> Result<PartitionQuery, String> {
    let class = match args.class {
        ClassArg::All => {
            if args.m.is_some() {
                return Err("--m only applies with --class relprime-to".into());
            }
            CoprimalityClass::Unrestricted
        }
        ClassArg::Relprime => {
            if args.m.is_some() {
                return Err("--m only applies with --class relprime-to".into());
            }
            CoprimalityClass::RelPrime
        }
        ClassArg::RelprimeTo => match args.m {
            Some(m) => CoprimalityClass::RelPrimeTo(m),
            None => return Err("--class relprime-to requires --m".into()),
        },
    };
    let smallest = match (args.smallest, args.min_part) {
        (Some(l), None) => Some(SmallestPart::Exact(l)),
        (None, Some(l)) => Some(SmallestPart::AtLeast(l)),
        (None, None) => None,
        (Some(_), Some(_)) => unreachable!("clap conflict"),
    };
    Ok(PartitionQuery {
        n: args.n,
        parts: args.k,
        smallest,
        class,
    })
}

fn function_name(query: &PartitionQuery) -> &'static str {
    match query.class {
        CoprimalityClass::Unrestricted => "p",
        CoprimalityClass::RelPrime => "p_psi",
        CoprimalityClass::RelPrimeTo(_) => "p_psi_m",
    }
}

fn query_args(query: &PartitionQuery) -> BTreeMap<String, u64> {
    let mut map = BTreeMap::new();
    map.insert("n".to_string(), query.n);
    if let Some(k) = query.parts {
        map.insert("k".to_string(), k);
    }
    match query.smallest {
        Some(SmallestPart::Exact(l)) => {
            map.insert("l".to_string(), l);
        }
        Some(SmallestPart::AtLeast(l)) => {
            map.insert("min_l".to_string(), l);
        }
        None => {}
    }
    if let CoprimalityClass::RelPrimeTo(m) = query.class {
        map.insert("m".to_string(), m);
    }
    map
}

/// Evaluate a query on the reference path: pentagonal / DP tables where
/// they apply, the brute-force enumerator otherwise. Returns the value
/// and the name of the code path actually used.
fn reference_value(query: &PartitionQuery) -> crate::error::Result<(Count, &'static str)> {
    match (query.parts, query.smallest, query.class) {
        (None, None, CoprimalityClass::Unrestricted) => {
            let table = p_table_pentagonal(query.n)?;
            Ok((table.get(query.n), "pentagonal"))
        }
        (None, None, CoprimalityClass::RelPrime) => {
            Ok((reference::relprime_by_inversion(query.n)?, "pentagonal"))
        }
        (Some(k), None, CoprimalityClass::Unrestricted) => {
            if k > query.n {
                return Ok((Count::ZERO, "dp"));
            }
            let table = p_nk_table(query.n, k)?;
            Ok((table.get(query.n, k), "dp"))
        }
        (Some(k), None, CoprimalityClass::RelPrime) => {
            if k > query.n {
                return Ok((Count::ZERO, "dp"));
            }
            Ok((reference::relprime_nk_by_inversion(query.n, k)?, "dp"))
        }
        _ => Ok((oracle::count_oracle(query)?, "oracle")),
    }
}

fn compute_record(
    query: &PartitionQuery,
    method: MethodArg,
    evaluator: &Evaluator,
) -> crate::error::Result<OutputRecord> {
    let start = Instant::now();
    let (value, method_name) = match method {
        MethodArg::NestedSum => (evaluator.evaluate(query)?, "nested-sum"),
        MethodArg::Reference => reference_value(query)?,
    };
    Ok(OutputRecord {
        function: function_name(query).to_string(),
        args: query_args(query),
        value: value.to_string(),
        method: method_name.to_string(),
        elapsed_ns: start.elapsed().as_nanos(),
    })
}

fn cmd_compute(args: &ComputeArgs) -> i32 {
    let query = match build_query(args) {
        Ok(q) => q,
        Err(msg) => return fail(EXIT_USAGE, msg),
    };
    let evaluator = Evaluator::new(args.memo == MemoArg::On);
    match compute_record(&query, args.method, &evaluator) {
        Ok(record) => {
            if args.raw {
                println!("{}", record.value);
            } else {
                println!("{}", serde_json::to_string(&record).expect("serializable"));
            }
            EXIT_OK
        }
        Err(err) => fail(error_exit(&err), err),
    }
}

fn table_query(args: &TableArgs, n: u64) -> Result<PartitionQuery, String> {
    let (parts, class) = match args.function {
        FunctionArg::P => (None, CoprimalityClass::Unrestricted),
        FunctionArg::PPsi => (None, CoprimalityClass::RelPrime),
        FunctionArg::PPsiM => match args.m {
            Some(m) => (None, CoprimalityClass::RelPrimeTo(m)),
            None => return Err("--function p_psi_m requires --m".into()),
        },
        FunctionArg::Pnk => match args.k {
            Some(k) => (Some(k), CoprimalityClass::Unrestricted),
            None => return Err("--function pnk requires --k".into()),
        },
    };
    Ok(PartitionQuery {
        n,
        parts,
        smallest: None,
        class,
    })
}

fn cmd_table(args: &TableArgs) -> i32 {
    if args.max_n == 0 {
        return fail(EXIT_USAGE, "--max-n must be positive");
    }
    // validate the flag combination once before looping
    if let Err(msg) = table_query(args, 1) {
        return fail(EXIT_USAGE, msg);
    }
    let evaluator = Evaluator::new(args.memo == MemoArg::On);
    let rows: Vec<crate::error::Result<OutputRecord>> = (1..=args.max_n)
        .into_par_iter()
        .map(|n| {
            let query = table_query(args, n).expect("validated above");
            compute_record(&query, args.method, &evaluator)
        })
        .collect();

    if args.format == FormatArg::Csv {
        println!("n,k,m,value,method");
    }
    for row in rows {
        match row {
            Ok(record) => match args.format {
                FormatArg::Json => {
                    println!("{}", serde_json::to_string(&record).expect("serializable"))
                }
                FormatArg::Csv => {
                    let n = record.args.get("n").copied().unwrap_or_default();
                    let k = record.args.get("k").map(|v| v.to_string()).unwrap_or_default();
                    let m = record.args.get("m").map(|v| v.to_string()).unwrap_or_default();
                    println!("{n},{k},{m},{},{}", record.value, record.method);
                }
            },
            Err(err) => return fail(error_exit(&err), err),
        }
    }
    EXIT_OK
}

fn print_report(name: &str, report: &CheckReport) {
    for check in &report.checks {
        match &check.failure {
            None => println!("PASS [{name}] {} ({} cases)", check.name, check.cases),
            Some(counterexample) => {
                println!("FAIL [{name}] {}: {}", check.name, counterexample)
            }
        }
    }
}

fn cmd_verify(args: &VerifyArgs) -> i32 {
    let mut report = CheckReport::default();
    let run_suite = |suite: SuiteArg| -> crate::error::Result<CheckReport> {
        match suite {
            SuiteArg::Identities => identity_suite(args.max_n.max(2), args.max_m),
            SuiteArg::Oracle => oracle_equivalence_suite(args.max_n, args.max_m),
            SuiteArg::Phi => phi_scan_suite(args.max_n.saturating_mul(3), args.max_n),
            SuiteArg::All => unreachable!(),
        }
    };
    let suites: Vec<SuiteArg> = match args.suite {
        SuiteArg::All => vec![SuiteArg::Phi, SuiteArg::Oracle, SuiteArg::Identities],
        other => vec![other],
    };
    for suite in suites {
        let name = match suite {
            SuiteArg::Identities => "identities",
            SuiteArg::Oracle => "oracle",
            SuiteArg::Phi => "phi",
            SuiteArg::All => unreachable!(),
        };
        match run_suite(suite) {
            Ok(r) => {
                print_report(name, &r);
                report.merge(r);
            }
            Err(err) => return fail(error_exit(&err), err),
        }
    }
    if report.all_pass() {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    }
}

#[derive(Debug, Serialize)]
struct BenchRecord {
    function: String,
    args: BTreeMap<String, u64>,
    method: String,
    value: String,
    reps: u32,
    min_ns: u128,
    median_ns: u128,
}

fn cmd_bench(args: &BenchArgs) -> i32 {
    if args.reps == 0 {
        return fail(EXIT_USAGE, "--reps must be positive");
    }
    let table_args = TableArgs {
        max_n: args.n,
        function: args.function,
        k: args.k,
        m: args.m,
        format: FormatArg::Json,
        method: MethodArg::NestedSum,
        memo: args.memo,
    };
    let query = match table_query(&table_args, args.n) {
        Ok(q) => q,
        Err(msg) => return fail(EXIT_USAGE, msg),
    };

    let mut records = Vec::new();
    let mut values: Vec<Count> = Vec::new();
    for method in [MethodArg::NestedSum, MethodArg::Reference] {
        // fresh evaluator per rep so the memo cache is not pre-warmed
        let mut elapsed: Vec<u128> = Vec::with_capacity(args.reps as usize);
        let mut value = Count::ZERO;
        let mut method_name = "";
        for _ in 0..args.reps {
            let evaluator = Evaluator::new(args.memo == MemoArg::On);
            let start = Instant::now();
            let result = match method {
                MethodArg::NestedSum => evaluator.evaluate(&query).map(|v| (v, "nested-sum")),
                MethodArg::Reference => reference_value(&query),
            };
            match result {
                Ok((v, name)) => {
                    elapsed.push(start.elapsed().as_nanos());
                    value = v;
                    method_name = name;
                }
                Err(err) => return fail(error_exit(&err), err),
            }
        }
        elapsed.sort_unstable();
        values.push(value);
        records.push(BenchRecord {
            function: function_name(&query).to_string(),
            args: query_args(&query),
            method: method_name.to_string(),
            value: value.to_string(),
            reps: args.reps,
            min_ns: elapsed[0],
            median_ns: elapsed[elapsed.len() / 2],
        });
    }

    if values.windows(2).any(|w| w[0] != w[1]) {
        return fail(
            EXIT_METHOD_DISAGREEMENT,
            format!(
                "methods disagree: {} (nested-sum) vs {} (reference)",
                values[0], values[1]
            ),
        );
    }

    for record in &records {
        if args.json {
            println!("{}", serde_json::to_string(record).expect("serializable"));
        } else {
            println!(
                "{:<12} value={} reps={} min={}ns median={}ns",
                record.method, record.value, record.reps, record.min_ns, record.median_ns
            );
        }
    }
    EXIT_OK
}

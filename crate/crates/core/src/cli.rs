//! Command-line front end.
//!
//! [`run`] parses arguments, executes one subcommand and returns the exit
//! code together with everything that would be printed, so the binary stays
//! a thin wrapper and the whole surface is testable in-process.
//!
//! Exit codes: 0 ok, 2 bad arguments, 3 enumeration cap exceeded,
//! 4 two methods disagree, 5 a verification property failed.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::classifiers::{
    battery_rules_out, classify_extremal_n, classify_extremal_n_minus_1, classify_small_t,
    necessary_battery, t3_nonvanishing,
};
use crate::enumeration::{core_count_series, Enumerator, KnijtQuery};
use crate::error::Error;
use crate::partition::Partition;
use crate::verify::{run_suite, Ranges, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_BAD_ARGS: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_DISAGREE: i32 = 4;
pub const EXIT_PROPERTY: i32 = 5;

#[derive(Debug, Parser)]
#[command(
    name = "grassmann-hodge",
    version,
    about = "Twisted Hodge numbers of Grassmannians via t-cores"
)]
pub struct Cli {
    /// Maximum number of search nodes per enumeration.
    #[arg(long, global = true, default_value_t = 100_000_000)]
    pub cap: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TextOrJson {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Json,
    Csv,
    Tex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CountMethod {
    Enum,
    Series,
    Both,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether h^i(Gr(k,n), Ω^j(t)) is nonzero.
    #[command(allow_negative_numbers = true)]
    Check {
        k: usize,
        n: usize,
        i: usize,
        j: usize,
        t: i64,
        /// Number of witness partitions to list.
        #[arg(long, default_value_t = 1)]
        witnesses: usize,
        /// Skip computing the dimension.
        #[arg(long)]
        no_dim: bool,
        /// Print every necessary condition that was evaluated.
        #[arg(long)]
        explain: bool,
        #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
        format: TextOrJson,
    },
    /// All nonzero h^i(Ω^j(t)) for fixed (k, n, t).
    #[command(allow_negative_numbers = true)]
    Table {
        k: usize,
        n: usize,
        t: i64,
        #[arg(long, value_enum, default_value_t = TableFormat::Json)]
        format: TableFormat,
    },
    /// List knijt-partitions for (k, n, i, j, t).
    Enumerate {
        k: usize,
        n: usize,
        i: usize,
        j: usize,
        t: usize,
        #[arg(long, default_value_t = 100)]
        limit: usize,
        #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
        format: TextOrJson,
    },
    /// Number of t-core partitions of 0..=max_n.
    CountCores {
        t: usize,
        max_n: usize,
        #[arg(long, value_enum, default_value_t = CountMethod::Series)]
        method: CountMethod,
        #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
        format: TextOrJson,
    },
    /// The single dimension h^i(Gr(k,n), Ω^j(t)).
    Dim {
        k: usize,
        n: usize,
        i: usize,
        j: usize,
        t: usize,
    },
    /// Check the closed-form results against enumeration.
    Verify {
        /// bijection, battery, bwb-equivalence, extremal, t3, serre, small-t, cores, or all
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        kmax: Option<usize>,
        #[arg(long)]
        nmax: Option<usize>,
        #[arg(long)]
        tmax: Option<usize>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    pub command: String,
    pub k: usize,
    pub n: usize,
    pub t: i64,
    pub version: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub dim: String,
    pub i: usize,
    pub j: usize,
}

/// JSON document emitted by `table`, `check` and `enumerate`. Keys are in
/// sorted order and entries sorted by `(j, i)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub entries: Vec<Entry>,
    pub meta: Meta,
    pub witnesses: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountMeta {
    pub command: String,
    pub max_n: usize,
    pub method: String,
    pub t: usize,
    pub version: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountDocument {
    pub counts: Vec<u64>,
    pub meta: CountMeta,
}

impl OutputDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }
}

/// Everything a command produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stdout: String, stderr: String) -> Self {
        Outcome {
            code,
            stdout,
            stderr,
        }
    }
}

fn version() -> String {
    env!("CARGO_PKG_VERSION").to_string()
}

fn error_outcome(err: Error) -> Outcome {
    let code = match err {
        Error::LimitExceeded { .. } => EXIT_CAP,
        _ => EXIT_BAD_ARGS,
    };
    Outcome::fail(code, String::new(), format!("error: {err}\n"))
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_BAD_ARGS
            } else {
                EXIT_OK
            };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome::fail(code, String::new(), text)
            };
        }
    };
    let enumerator = Enumerator {
        max_nodes: cli.cap,
        ..Enumerator::default()
    };
    let result = match cli.command {
        Command::Check {
            k,
            n,
            i,
            j,
            t,
            witnesses,
            no_dim,
            explain,
            format,
        } => check(
            &enumerator,
            CheckArgs {
                k,
                n,
                i,
                j,
                t,
                witnesses,
                no_dim,
                explain,
                format,
            },
        ),
        Command::Table { k, n, t, format } => table(&enumerator, k, n, t, format),
        Command::Enumerate {
            k,
            n,
            i,
            j,
            t,
            limit,
            format,
        } => enumerate(&enumerator, k, n, i, j, t, limit, format),
        Command::CountCores {
            t,
            max_n,
            method,
            format,
        } => count_cores(&enumerator, t, max_n, method, format),
        Command::Dim { k, n, i, j, t } => dim(&enumerator, k, n, i, j, t),
        Command::Verify {
            suite,
            kmax,
            nmax,
            tmax,
        } => verify(&enumerator, &suite, Ranges { kmax, nmax, tmax }),
    };
    result.unwrap_or_else(error_outcome)
}

fn validate(k: usize, n: usize, i: usize, j: usize) -> Result<usize, Error> {
    if k == 0 || k >= n {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= k < n, got k={k}, n={n}"
        )));
    }
    let big_n = k * (n - k);
    if i > big_n || j > big_n {
        return Err(Error::InvalidArgument(format!(
            "need 0 <= i, j <= N = {big_n}, got i={i}, j={j}"
        )));
    }
    Ok(big_n)
}

struct CheckArgs {
    k: usize,
    n: usize,
    i: usize,
    j: usize,
    t: i64,
    witnesses: usize,
    no_dim: bool,
    explain: bool,
    format: TextOrJson,
}

/// Which route settled a `check`.
fn decide(q: &KnijtQuery) -> Option<(bool, String)> {
    if let Some(exists) = classify_small_t(q) {
        let label = match q.t {
            0..=2 => format!("t={}", q.t),
            _ => "t≥n".to_string(),
        };
        return Some((exists, format!("classifier: {label}")));
    }
    if let Some(v) = battery_rules_out(q) {
        return Some((false, format!("battery: {}", v.name)));
    }
    if q.t == 3 && q.i > 0 && q.j > 0 {
        let (exists, _) = t3_nonvanishing(q.k, q.n, q.i, q.j).ok()?;
        return Some((exists, "classifier: t=3".into()));
    }
    let big_n = q.dim();
    if q.i + q.j == big_n {
        let exists = classify_extremal_n(q.k, q.n, q.t).ok()? == Some((q.i, q.j));
        return Some((exists, "classifier: i+j=N".into()));
    }
    if q.i > 0 && q.i + q.j + 1 == big_n {
        let exists = classify_extremal_n_minus_1(q.k, q.n, q.i, q.j, q.t).ok()?;
        return Some((exists, "classifier: i+j=N−1".into()));
    }
    None
}

fn check(enumerator: &Enumerator, a: CheckArgs) -> Result<Outcome, Error> {
    validate(a.k, a.n, a.i, a.j)?;
    let mut out = String::new();
    let mut witnesses = Vec::new();
    let label = format!("h^{}(Gr({},{}), Ω^{}({}))", a.i, a.k, a.n, a.j, a.t);

    let (mut nonzero, source) = if a.t < 0 {
        let dim = enumerator.hodge_number(a.k, a.n, a.i, a.j, a.t)?;
        (!dim.is_zero(), "BWB, via Serre-dual range".to_string())
    } else {
        let q = KnijtQuery::new(a.k, a.n, a.i, a.j, a.t as usize)?;
        match decide(&q) {
            Some(decision) => decision,
            None => {
                let found = enumerator.knijt_witnesses(&q, 1)?;
                (!found.is_empty(), "enumeration".to_string())
            }
        }
    };

    let mut disagreements = Vec::new();
    if a.t >= 0 && a.witnesses > 0 {
        let q = KnijtQuery::new(a.k, a.n, a.i, a.j, a.t as usize)?;
        witnesses = enumerator.knijt_witnesses(&q, a.witnesses)?;
        if witnesses.is_empty() == nonzero {
            disagreements.push(format!(
                "{source} says nonzero={nonzero} but enumeration disagrees"
            ));
        }
    }
    let dim = if a.no_dim {
        None
    } else {
        let d = enumerator.hodge_number(a.k, a.n, a.i, a.j, a.t)?;
        if d.is_zero() == nonzero {
            disagreements.push(format!(
                "{source} says nonzero={nonzero} but the dimension is {d}"
            ));
        }
        Some(d)
    };
    if !disagreements.is_empty() {
        nonzero = false;
    }

    match a.format {
        TextOrJson::Text => {
            let verdict = if nonzero { "NONZERO" } else { "ZERO" };
            writeln!(out, "{label}: {verdict} ({source})").unwrap();
            if let Some(d) = &dim {
                writeln!(out, "dim: {d}").unwrap();
            }
            for w in &witnesses {
                writeln!(out, "witness: {w}").unwrap();
            }
            if a.explain && a.t >= 0 {
                let q = KnijtQuery::new(a.k, a.n, a.i, a.j, a.t as usize)?;
                for v in necessary_battery(&q) {
                    let mark = if v.holds { "pass" } else { "FAIL" };
                    let detail = v
                        .detail
                        .iter()
                        .map(|(name, value)| format!("{name}={value}"))
                        .collect::<Vec<_>>()
                        .join(", ");
                    writeln!(out, "  [{mark}] {}  ({detail})", v.name).unwrap();
                }
            }
        }
        TextOrJson::Json => {
            let entries = match &dim {
                Some(d) if !d.is_zero() => vec![Entry {
                    dim: d.to_string(),
                    i: a.i,
                    j: a.j,
                }],
                _ => Vec::new(),
            };
            let doc = OutputDocument {
                entries,
                meta: meta("check", a.k, a.n, a.t),
                witnesses: witnesses.into_iter().map(Vec::from).collect(),
            };
            writeln!(out, "{}", doc.to_json()).unwrap();
        }
    }
    if disagreements.is_empty() {
        Ok(Outcome::ok(out))
    } else {
        Ok(Outcome::fail(
            EXIT_DISAGREE,
            out,
            disagreements.join("\n") + "\n",
        ))
    }
}

fn meta(command: &str, k: usize, n: usize, t: i64) -> Meta {
    Meta {
        command: command.to_string(),
        k,
        n,
        t,
        version: version(),
    }
}

fn table(
    enumerator: &Enumerator,
    k: usize,
    n: usize,
    t: i64,
    format: TableFormat,
) -> Result<Outcome, Error> {
    validate(k, n, 0, 0)?;
    let table = enumerator.hodge_table(k, n, t)?;
    let rows = table.sorted_by_j();
    let mut out = String::new();
    match format {
        TableFormat::Json => {
            let doc = OutputDocument {
                entries: rows
                    .iter()
                    .map(|&(i, j, d)| Entry {
                        dim: d.to_string(),
                        i,
                        j,
                    })
                    .collect(),
                meta: meta("table", k, n, t),
                witnesses: Vec::new(),
            };
            writeln!(out, "{}", doc.to_json()).unwrap();
        }
        TableFormat::Csv => {
            out.push_str("i,j,dim\n");
            for (i, j, d) in rows {
                writeln!(out, "{i},{j},{d}").unwrap();
            }
        }
        TableFormat::Tex => out = tex_grid(&table.entries, table.dim()),
    }
    Ok(Outcome::ok(out))
}

/// Rows `i`, columns `j`; zero cells are left blank.
fn tex_grid(entries: &std::collections::BTreeMap<(usize, usize), BigUint>, big_n: usize) -> String {
    let mut out = String::new();
    writeln!(out, "\\begin{{tabular}}{{r|{}}}", "c".repeat(big_n + 1)).unwrap();
    let header = (0..=big_n)
        .map(|j| j.to_string())
        .collect::<Vec<_>>()
        .join(" & ");
    writeln!(out, "$i \\backslash j$ & {header} \\\\").unwrap();
    out.push_str("\\hline\n");
    for i in 0..=big_n {
        let cells = (0..=big_n)
            .map(|j| {
                entries
                    .get(&(i, j))
                    .map(|d| d.to_string())
                    .unwrap_or_default()
            })
            .collect::<Vec<_>>()
            .join(" & ");
        writeln!(out, "{i} & {cells} \\\\").unwrap();
    }
    out.push_str("\\end{tabular}\n");
    out
}

#[allow(clippy::too_many_arguments)]
fn enumerate(
    enumerator: &Enumerator,
    k: usize,
    n: usize,
    i: usize,
    j: usize,
    t: usize,
    limit: usize,
    format: TextOrJson,
) -> Result<Outcome, Error> {
    validate(k, n, i, j)?;
    let q = KnijtQuery::new(k, n, i, j, t)?;
    let found = enumerator.knijt_witnesses(&q, limit)?;
    let mut out = String::new();
    match format {
        TextOrJson::Text => {
            for w in &found {
                writeln!(out, "{w}").unwrap();
            }
        }
        TextOrJson::Json => {
            let doc = OutputDocument {
                entries: Vec::new(),
                meta: meta("enumerate", k, n, t as i64),
                witnesses: found.into_iter().map(Vec::from).collect(),
            };
            writeln!(out, "{}", doc.to_json()).unwrap();
        }
    }
    Ok(Outcome::ok(out))
}

fn count_cores(
    enumerator: &Enumerator,
    t: usize,
    max_n: usize,
    method: CountMethod,
    format: TextOrJson,
) -> Result<Outcome, Error> {
    if t == 0 {
        return Err(Error::InvalidArgument("count-cores needs t >= 1".into()));
    }
    let series = || core_count_series(t, max_n).map(|s| s.coeffs);
    let counted = || enumerator.count_tcores_up_to(t, max_n);
    let counts = match method {
        CountMethod::Series => series()?,
        CountMethod::Enum => counted()?,
        CountMethod::Both => {
            let (a, b) = (series()?, counted()?);
            if a != b {
                let m = a.iter().zip(&b).position(|(x, y)| x != y).unwrap_or(0);
                return Ok(Outcome::fail(
                    EXIT_DISAGREE,
                    String::new(),
                    format!(
                        "series and enumeration disagree at m={m}: {} vs {}\n",
                        a[m], b[m]
                    ),
                ));
            }
            a
        }
    };
    let out = match format {
        TextOrJson::Text => {
            counts
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",")
                + "\n"
        }
        TextOrJson::Json => {
            let method = match method {
                CountMethod::Enum => "enum",
                CountMethod::Series => "series",
                CountMethod::Both => "both",
            };
            let doc = CountDocument {
                counts,
                meta: CountMeta {
                    command: "count-cores".into(),
                    max_n,
                    method: method.into(),
                    t,
                    version: version(),
                },
            };
            serde_json::to_string_pretty(&doc).expect("document serializes") + "\n"
        }
    };
    Ok(Outcome::ok(out))
}

fn dim(
    enumerator: &Enumerator,
    k: usize,
    n: usize,
    i: usize,
    j: usize,
    t: usize,
) -> Result<Outcome, Error> {
    validate(k, n, i, j)?;
    let d = enumerator.hodge_number(k, n, i, j, t as i64)?;
    Ok(Outcome::ok(format!("{d}\n")))
}

fn verify(enumerator: &Enumerator, suite: &str, ranges: Ranges) -> Result<Outcome, Error> {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite.parse()?]
    };
    let mut out = String::new();
    let mut failed = false;
    for suite in suites {
        let report = run_suite(suite, &ranges, enumerator)?;
        if report.passed() {
            writeln!(out, "PASS {suite} ({} checks)", report.checked).unwrap();
        } else {
            failed = true;
            writeln!(
                out,
                "FAIL {suite} ({} of {} checks failed)",
                report.counterexamples.len(),
                report.checked
            )
            .unwrap();
            for c in &report.counterexamples {
                writeln!(out, "  {c}").unwrap();
            }
        }
    }
    if failed {
        Ok(Outcome::fail(EXIT_PROPERTY, out, String::new()))
    } else {
        Ok(Outcome::ok(out))
    }
}

/// Convenience for callers that already hold a partition list.
pub fn witness_lines(witnesses: &[Partition]) -> String {
    witnesses.iter().map(|w| format!("{w}\n")).collect()
}

//! Command-line front end: single values by any method, reference tables,
//! verification suites, the parity scan, and cache maintenance.
//!
//! Exit status: 0 when everything passes, 1 on a verification failure, 2 on a
//! usage or input error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hurwitz::analysis::{parity_scan, verify_suite, ParityScan};
use hurwitz::engine::{compute, compute_all_cj, keys_up_to, HurwitzCache, Method};
use hurwitz::partition::{partitions_of, ramification_of, Partition};
use hurwitz::{BigRat, HurwitzError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest `r_max` accepted without `--allow-long`.
pub const LONG_R_MAX: u32 = 14;

#[derive(Debug, Parser)]
#[command(
    name = "hurwitz",
    version,
    about = "Exact simple Hurwitz numbers h_{g,mu}"
)]
pub struct Cli {
    /// Cache file (overrides HURWITZ_CACHE and the default data directory).
    #[arg(long, global = true, value_name = "PATH")]
    pub cache: Option<PathBuf>,
    /// Worker threads for parallel sections (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute a single h_{g,mu}.
    Compute {
        g: u32,
        /// Profile such as "2,1" or "2,1^4".
        mu: String,
        /// cj, charsum, operator, closed or oracle.
        #[arg(long, default_value = "cj")]
        method: Method,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Print the table of h_{g,mu} for g <= gmax and 1 <= |mu| <= nmax.
    Table {
        #[arg(long, default_value_t = 6)]
        gmax: u32,
        #[arg(long, default_value_t = 5)]
        nmax: u32,
        #[arg(long, value_enum, default_value_t = TableFormat::Md)]
        format: TableFormat,
    },
    /// Run the consistency audits for every key with r(g,mu) <= rmax.
    Verify {
        #[arg(long, default_value_t = 8)]
        rmax: u32,
        /// Also compare against brute-force counting (d <= 5, r <= min(rmax, 6)).
        #[arg(long)]
        with_oracle: bool,
        #[arg(long)]
        allow_long: bool,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Scan the parities of h_{g,mu} for |mu| >= 3 and r(g,mu) <= rmax.
    Parity {
        #[arg(long, default_value_t = 14)]
        rmax: u32,
        #[arg(long)]
        allow_long: bool,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Inspect or reset the persistent cache.
    Cache {
        #[command(subcommand)]
        op: CacheOp,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Subcommand)]
pub enum CacheOp {
    /// Print the resolved cache location.
    Path,
    /// Delete the cache file.
    Clear,
    /// Print entry count and the largest r and g stored.
    Stats,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Md,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

/// The environment inputs to cache path resolution.
#[derive(Clone, Debug, Default)]
pub struct Env {
    pub hurwitz_cache: Option<OsString>,
    pub xdg_data_home: Option<OsString>,
    pub home: Option<OsString>,
}

impl Env {
    pub fn from_process() -> Self {
        Env {
            hurwitz_cache: std::env::var_os("HURWITZ_CACHE"),
            xdg_data_home: std::env::var_os("XDG_DATA_HOME"),
            home: std::env::var_os("HOME"),
        }
    }
}

fn non_empty(v: &Option<OsString>) -> Option<&OsString> {
    v.as_ref().filter(|s| !s.is_empty())
}

/// Flag, then `HURWITZ_CACHE`, then `$XDG_DATA_HOME/hurwitz/cache.jsonl`,
/// then `~/.local/share/hurwitz/cache.jsonl`, then `./hurwitz-cache.jsonl`.
pub fn resolve_cache_path(flag: Option<&PathBuf>, env: &Env) -> PathBuf {
    if let Some(p) = flag {
        return p.clone();
    }
    if let Some(p) = non_empty(&env.hurwitz_cache) {
        return PathBuf::from(p);
    }
    if let Some(p) = non_empty(&env.xdg_data_home) {
        return PathBuf::from(p).join("hurwitz").join("cache.jsonl");
    }
    if let Some(h) = non_empty(&env.home) {
        return PathBuf::from(h)
            .join(".local")
            .join("share")
            .join("hurwitz")
            .join("cache.jsonl");
    }
    PathBuf::from("hurwitz-cache.jsonl")
}

/// A failed command: message for stderr plus exit status.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl From<HurwitzError> for CliError {
    fn from(e: HurwitzError) -> Self {
        CliError {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> CliError {
    CliError {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn check_r_max(r_max: u32, allow_long: bool) -> Result<(), CliError> {
    if r_max > LONG_R_MAX && !allow_long {
        return Err(usage(format!(
            "--rmax {r_max} exceeds {LONG_R_MAX}; pass --allow-long to run it anyway"
        )));
    }
    Ok(())
}

/// Output of `compute`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OutputRecord {
    pub g: u32,
    pub mu: Vec<u32>,
    pub method: String,
    pub value: String,
    pub elapsed_ms: u128,
}

/// One table cell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableEntry {
    pub g: u32,
    pub mu: Vec<u32>,
    pub value: String,
}

/// Rows `μ` ordered by size then reverse-lexicographically; columns `g = 0..=g_max`.
pub struct Table {
    pub g_max: u32,
    pub rows: Vec<(Partition, Vec<BigRat>)>,
}

pub fn build_table(g_max: u32, n_max: u32, cache: &HurwitzCache) -> hurwitz::Result<Table> {
    let profiles: Vec<Partition> = (1..=n_max).flat_map(partitions_of).collect();
    let keys: Vec<(u32, Partition)> = profiles
        .iter()
        .flat_map(|mu| (0..=g_max).map(move |g| (g, mu.clone())))
        .collect();
    let values = compute_all_cj(&keys, cache)?;
    let rows = profiles
        .into_iter()
        .map(|mu| {
            let vals = (0..=g_max)
                .map(|g| values[&(g, mu.clone())].clone())
                .collect();
            (mu, vals)
        })
        .collect();
    Ok(Table { g_max, rows })
}

impl Table {
    pub fn entries(&self) -> Vec<TableEntry> {
        let mut out = Vec::new();
        for (mu, vals) in &self.rows {
            for (g, v) in vals.iter().enumerate() {
                out.push(TableEntry {
                    g: g as u32,
                    mu: mu.parts().to_vec(),
                    value: v.to_string(),
                });
            }
        }
        out
    }

    pub fn render(&self, format: TableFormat) -> String {
        match format {
            TableFormat::Md => self.to_markdown(),
            TableFormat::Csv => self.to_csv(),
            TableFormat::Json => {
                let mut s =
                    serde_json::to_string_pretty(&self.entries()).expect("entries serialize");
                s.push('\n');
                s
            }
        }
    }

    fn to_markdown(&self) -> String {
        let mut s = String::from("| mu |");
        for g in 0..=self.g_max {
            let _ = write!(s, " g={g} |");
        }
        s.push_str("\n|---|");
        for _ in 0..=self.g_max {
            s.push_str("---:|");
        }
        s.push('\n');
        for (mu, vals) in &self.rows {
            let _ = write!(s, "| {mu} |");
            for v in vals {
                let _ = write!(s, " {v} |");
            }
            s.push('\n');
        }
        s
    }

    fn to_csv(&self) -> String {
        let mut s = String::from("g,mu,value\n");
        for e in self.entries() {
            let mu: Vec<String> = e.mu.iter().map(|p| p.to_string()).collect();
            let _ = writeln!(s, "{},\"{}\",{}", e.g, mu.join(" "), e.value);
        }
        s
    }
}

fn parity_text(scan: &ParityScan) -> String {
    let label = |(g, mu): &(u32, Partition)| {
        format!("r={} g={g} mu={mu}", ramification_of(*g, mu).unwrap())
    };
    let mut s = String::new();
    let _ = writeln!(s, "parity scan: r <= {}, |mu| >= 3", scan.r_max);
    let _ = writeln!(s, "odd values: {}", scan.odd.len());
    for k in &scan.odd {
        let _ = writeln!(s, "  {}", label(k));
    }
    let _ = writeln!(s, "implication violations: {}", scan.violations.len());
    for k in &scan.violations {
        let _ = writeln!(s, "  {}", label(k));
    }
    let _ = writeln!(s, "converse failures: {}", scan.converse_failures.len());
    for k in &scan.converse_failures {
        let _ = writeln!(s, "  {}", label(k));
    }
    let bound = scan.r_max.min(hurwitz::analysis::PUBLISHED_PARITY_R_MAX);
    if scan.published_match() {
        let _ = writeln!(s, "published list (r <= {bound}): match");
    } else {
        let _ = writeln!(s, "published list (r <= {bound}): MISMATCH");
        for k in &scan.missing_from_published {
            let _ = writeln!(s, "  missing {}", label(k));
        }
        for k in &scan.unexpected_vs_published {
            let _ = writeln!(s, "  unexpected {}", label(k));
        }
    }
    let _ = writeln!(s, "{}", if scan.passed() { "PASS" } else { "FAIL" });
    s
}

#[derive(Serialize)]
struct VerifyOutput<'a> {
    r_max: u32,
    keys: usize,
    passed: bool,
    reports: &'a [hurwitz::AuditReport],
}

fn open_cache(path: &PathBuf) -> Result<HurwitzCache, CliError> {
    Ok(HurwitzCache::load(path)?)
}

/// Runs a parsed command, writing its output to `out`. Returns the exit status.
pub fn run(cli: &Cli, env: &Env, out: &mut dyn Write) -> Result<i32, CliError> {
    if let Some(n) = cli.jobs {
        if n == 0 {
            return Err(usage("--jobs must be at least 1"));
        }
        // Ignored if a global pool already exists (e.g. a second call in-process).
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
    let cache_path = resolve_cache_path(cli.cache.as_ref(), env);
    let status = match &cli.command {
        Command::Compute {
            g,
            mu,
            method,
            format,
        } => {
            let mu: Partition = mu.parse()?;
            let cache = open_cache(&cache_path)?;
            let start = Instant::now();
            let value = compute(*g, &mu, *method, &cache)?;
            let rec = OutputRecord {
                g: *g,
                mu: mu.parts().to_vec(),
                method: method.to_string(),
                value: value.to_string(),
                elapsed_ms: start.elapsed().as_millis(),
            };
            cache.flush()?;
            match format {
                ReportFormat::Text => {
                    writeln!(out, "{}", rec.value)?;
                    eprintln!("h[{g},{mu}] by {method} in {} ms", rec.elapsed_ms);
                }
                ReportFormat::Json => writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&rec).expect("record serializes")
                )?,
            }
            EXIT_OK
        }
        Command::Table { gmax, nmax, format } => {
            let cache = open_cache(&cache_path)?;
            let table = build_table(*gmax, *nmax, &cache)?;
            cache.flush()?;
            out.write_all(table.render(*format).as_bytes())?;
            EXIT_OK
        }
        Command::Verify {
            rmax,
            with_oracle,
            allow_long,
            format,
        } => {
            check_r_max(*rmax, *allow_long)?;
            let cache = open_cache(&cache_path)?;
            let reports = verify_suite(*rmax, *with_oracle, &cache)?;
            cache.flush()?;
            let keys = keys_up_to(*rmax).len();
            let passed = reports.iter().all(|r| r.passed());
            match format {
                ReportFormat::Text => {
                    for r in &reports {
                        out.write_all(r.to_text().as_bytes())?;
                    }
                    writeln!(
                        out,
                        "verify r <= {rmax}: {} ({keys} keys checked)",
                        if passed { "PASS" } else { "FAIL" }
                    )?;
                }
                ReportFormat::Json => {
                    let v = VerifyOutput {
                        r_max: *rmax,
                        keys,
                        passed,
                        reports: &reports,
                    };
                    writeln!(
                        out,
                        "{}",
                        serde_json::to_string_pretty(&v).expect("serializes")
                    )?;
                }
            }
            if passed {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAILED
            }
        }
        Command::Parity {
            rmax,
            allow_long,
            format,
        } => {
            check_r_max(*rmax, *allow_long)?;
            let cache = open_cache(&cache_path)?;
            let scan = parity_scan(*rmax, &cache)?;
            cache.flush()?;
            match format {
                ReportFormat::Text => out.write_all(parity_text(&scan).as_bytes())?,
                ReportFormat::Json => writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&scan).expect("serializes")
                )?,
            }
            if scan.passed() {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAILED
            }
        }
        Command::Cache { op } => {
            match op {
                CacheOp::Path => writeln!(out, "{}", cache_path.display())?,
                CacheOp::Clear => {
                    match std::fs::remove_file(&cache_path) {
                        Ok(()) => {}
                        Err(e) if e.kind() == std::io::ErrorKind::NotFound => {}
                        Err(e) => {
                            return Err(usage(format!("{}: {e}", cache_path.display())));
                        }
                    }
                    writeln!(out, "cleared {}", cache_path.display())?;
                }
                CacheOp::Stats => {
                    let stats = open_cache(&cache_path)?.stats();
                    let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
                    writeln!(out, "path: {}", cache_path.display())?;
                    writeln!(out, "entries: {}", stats.entries)?;
                    writeln!(out, "max r: {}", opt(stats.max_r.map(|r| r.to_string())))?;
                    writeln!(out, "max g: {}", opt(stats.max_g.map(|g| g.to_string())))?;
                }
            }
            EXIT_OK
        }
    };
    Ok(status)
}

/// Parses `args` and runs the command, returning `(status, stdout, stderr)`.
pub fn run_with_args<I, T>(args: I, env: &Env) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            return (code, String::new(), e.render().to_string());
        }
    };
    let mut out = Vec::new();
    match run(&cli, env, &mut out) {
        Ok(code) => (
            code,
            String::from_utf8(out).expect("utf-8 output"),
            String::new(),
        ),
        Err(e) => (
            e.code,
            String::from_utf8(out).expect("utf-8 output"),
            format!("error: {}\n", e.message),
        ),
    }
}

//! Command-line front end. [`run`] returns the process exit status:
//! 0 on success, 1 when a check or evaluation fails, 2 on usage errors.

use crate::cache;
use crate::engine::{kontsevich_oracle, Engine, EngineConfig, EvalError, MemoStore, Transcription};
use crate::fixtures::{self, EvalOrder};
use crate::model::{CondClass, Family, InvariantKey, InvariantTable, C2_VALUES};
use crate::potential::{check_epot, ctwo_from_potentials, det3_closed_form, det8_closed_form, det_check_3x3, det_check_8x8};
use crate::rational::{format_rational, frac, Rational};
use crate::render::{render, Format};
use clap::{Parser, Subcommand, ValueEnum};
use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "charnum", version, about = "Exact characteristic numbers of rational plane curves")]
pub struct Cli {
    /// Largest degree for ordinary and ramified numbers
    #[arg(long, global = true, default_value_t = 6)]
    pub max_degree: i32,
    /// Largest degree for cuspidal numbers
    #[arg(long, global = true, default_value_t = 5)]
    pub max_cusp_degree: i32,
    /// Recursion transcription
    #[arg(long, global = true, value_enum, default_value_t = Variant::Repaired)]
    pub variant: Variant,
    /// Cache file read before and written after evaluating
    #[arg(long, global = true, env = "CHARNUM_CACHE")]
    pub cache: Option<PathBuf>,
    /// Fill tables on a thread pool
    #[arg(long, global = true)]
    pub parallel: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Variant {
    Literal,
    Repaired,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Markdown,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Listed,
    Reversed,
    DegreeDescending,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print one value
    Compute {
        family: Family,
        d: i32,
        #[arg(long)]
        a: i32,
        #[arg(long)]
        b: i32,
        #[arg(long)]
        c: i32,
        /// Cusp or ramification class: 1, h, h2, hv, hv2, h2hv
        #[arg(long)]
        class: Option<CondClass>,
    },
    /// Print a whole table
    Table {
        family: Family,
        d: i32,
        #[arg(long)]
        class: Option<CondClass>,
        #[arg(long, value_enum, default_value_t = FormatArg::Markdown)]
        format: FormatArg,
    },
    /// Recompute the reference tables
    Verify {
        /// Directory of fixture files; the built-in tables when omitted
        #[arg(long)]
        fixtures: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OrderArg::Listed)]
        order: OrderArg,
    },
    /// Run the structural checks
    Selfcheck,
    /// Read or write cache files
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum CacheAction {
    /// Write the store, optionally after filling every table up to a degree
    Export {
        path: PathBuf,
        #[arg(long)]
        fill: Option<i32>,
        /// Leave out zero values
        #[arg(long)]
        skip_zeros: bool,
    },
    /// Validate a cache file and merge it into --cache when given
    Import { path: PathBuf },
}

impl Cli {
    pub fn config(&self) -> EngineConfig {
        EngineConfig {
            max_degree: self.max_degree,
            max_cusp_degree: self.max_cusp_degree,
            transcription: match self.variant {
                Variant::Literal => Transcription::Literal,
                Variant::Repaired => Transcription::Repaired,
            },
        }
    }
}

/// Failures mapped to exit statuses.
enum Failure {
    Usage(String),
    Run(String),
    /// Already reported on stdout.
    Checks,
}

impl From<EvalError> for Failure {
    fn from(e: EvalError) -> Self {
        Failure::Run(e.to_string())
    }
}

impl From<cache::CacheError> for Failure {
    fn from(e: cache::CacheError) -> Self {
        Failure::Run(format!("cache: {e}"))
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Run(e.to_string())
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Run(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_FAILURE
        }
        Err(Failure::Checks) => EXIT_FAILURE,
    }
}

fn load_engine(cli: &Cli) -> Result<Engine, Failure> {
    let store = match &cli.cache {
        Some(path) if path.exists() => cache::import_from(path)?,
        _ => MemoStore::new(),
    };
    Ok(Engine::with_store(store, cli.config()))
}

fn save_engine(cli: &Cli, engine: &Engine) -> Result<(), Failure> {
    if let Some(path) = &cli.cache {
        cache::export_to(&engine.store, path, true)?;
    }
    Ok(())
}

fn table_key(family: Family, class: Option<CondClass>) -> Result<(), Failure> {
    match (family, class) {
        (Family::N, None) | (Family::C, Some(_)) | (Family::E, Some(_)) => Ok(()),
        (Family::N, Some(_)) => Err(Failure::Usage("N takes no --class".into())),
        (_, None) => Err(Failure::Usage(format!("{family} needs --class (1, h, h2, hv, hv2 or h2hv)"))),
    }
}

fn fill_table(cli: &Cli, engine: &mut Engine, family: Family, d: i32, class: Option<CondClass>) -> Result<InvariantTable, Failure> {
    let table = if cli.parallel { engine.table_parallel(family, d, class)? } else { engine.table(family, d, class)? };
    Ok(table)
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<(), Failure> {
    if cli.max_degree < 1 || cli.max_cusp_degree < 2 {
        return Err(Failure::Usage("--max-degree must be >= 1 and --max-cusp-degree >= 2".into()));
    }
    match &cli.command {
        Command::Compute { family, d, a, b, c, class } => {
            table_key(*family, *class)?;
            let key = InvariantKey { family: *family, class: *class, d: *d, a: *a, b: *b, c: *c };
            if !key.is_valid() {
                return Err(Failure::Usage(format!("{key} is not a valid key: {}", key.rule())));
            }
            let mut engine = load_engine(cli)?;
            let value = engine.compute(&key)?;
            writeln!(out, "{}", format_rational(&value))?;
            save_engine(cli, &engine)
        }
        Command::Table { family, d, class, format } => {
            table_key(*family, *class)?;
            if InvariantTable::keys(*family, *d, *class).iter().all(|k| !k.is_valid()) {
                let probe = InvariantKey { family: *family, class: *class, d: *d, a: 0, b: 0, c: 0 };
                return Err(Failure::Usage(format!("no valid cells: {}", probe.rule())));
            }
            let mut engine = load_engine(cli)?;
            let table = fill_table(cli, &mut engine, *family, *d, *class)?;
            let format = match format {
                FormatArg::Markdown => Format::Markdown,
                FormatArg::Csv => Format::Csv,
                FormatArg::Json => Format::Json,
            };
            out.write_all(render(&table, format).as_bytes())?;
            save_engine(cli, &engine)
        }
        Command::Verify { fixtures: dir, order } => {
            let fixtures = match dir {
                Some(d) => fixtures::load_dir(d).map_err(|e| Failure::Run(e.to_string()))?,
                None => fixtures::embedded(),
            };
            let mut engine = load_engine(cli)?;
            let order = match order {
                OrderArg::Listed => EvalOrder::Listed,
                OrderArg::Reversed => EvalOrder::Reversed,
                OrderArg::DegreeDescending => EvalOrder::DegreeDescending,
            };
            let report = fixtures::verify(&fixtures, &mut engine, order);
            writeln!(out, "{report}")?;
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::Checks)
            }
        }
        Command::Selfcheck => {
            let mut engine = load_engine(cli)?;
            let checks = selfcheck(&mut engine);
            let mut ok = true;
            for (name, result) in &checks {
                match result {
                    Ok(detail) => writeln!(out, "PASS {name}: {detail}")?,
                    Err(detail) => {
                        ok = false;
                        writeln!(out, "FAIL {name}: {detail}")?
                    }
                }
            }
            if ok {
                Ok(())
            } else {
                Err(Failure::Checks)
            }
        }
        Command::Cache { action: CacheAction::Export { path, fill, skip_zeros } } => {
            let mut engine = load_engine(cli)?;
            if let Some(top) = fill {
                if *top > cli.max_degree {
                    return Err(Failure::Usage(format!("--fill {top} exceeds --max-degree {}", cli.max_degree)));
                }
                for d in 1..=*top {
                    fill_table(cli, &mut engine, Family::N, d, None)?;
                    if (2..=cli.max_cusp_degree).contains(&d) {
                        for s in [CondClass::One, CondClass::H, CondClass::H2] {
                            fill_table(cli, &mut engine, Family::C, d, Some(s))?;
                        }
                    }
                }
            }
            cache::export_to(&engine.store, path, !skip_zeros)?;
            writeln!(out, "wrote {} records to {}", engine.store.len(), path.display())?;
            Ok(())
        }
        Command::Cache { action: CacheAction::Import { path } } => {
            let imported = cache::import_from(path)?;
            writeln!(out, "{}: {} valid records", path.display(), imported.len())?;
            if let Some(target) = &cli.cache {
                let mut engine = load_engine(cli)?;
                for (key, value) in imported.entries() {
                    if let Some(old) = engine.store.get(&key) {
                        if *old != value {
                            return Err(Failure::Run(format!(
                                "{key}: cache holds {} but the file has {}",
                                format_rational(old),
                                format_rational(&value)
                            )));
                        }
                    }
                    engine.store.insert(key, value);
                }
                cache::export_to(&engine.store, target, true)?;
                writeln!(out, "merged into {} ({} records)", target.display(), engine.store.len())?;
            }
            Ok(())
        }
    }
}

type Check = (&'static str, Result<String, String>);

/// The structural checks behind `charnum selfcheck`, in a fixed order.
pub fn selfcheck(engine: &mut Engine) -> Vec<Check> {
    let mut checks = Vec::new();

    let top = engine.config.max_degree;
    let oracle = (1..=top).try_fold(0, |n, d| {
        let got = engine.n(d, 3 * d - 1, 0, 0).map_err(|e| e.to_string())?;
        let want = kontsevich_oracle(d);
        if got == want {
            Ok(n + 1)
        } else {
            Err(format!("d={d}: recursion {got}, oracle {want}"))
        }
    });
    checks.push(("oracle", oracle.map(|n| format!("N_d(3d-1,0,0) matches for d=1..{n}"))));

    let expected: BTreeMap<_, _> =
        C2_VALUES.iter().map(|&(s, a, b, c, num, den)| ((a, b, c, s), frac(num, den))).collect();
    let got = ctwo_from_potentials();
    checks.push((
        "conic-cusps",
        if got == expected { Ok(format!("{} nonzero values recovered", got.len())) } else { Err(format!("{got:?}")) },
    ));

    let epot = (1..=3.min(top)).try_fold(0usize, |n, d| {
        let report = check_epot(d, |e, a, b, c| engine.n(e, a, b, c)).map_err(|e| e.to_string())?;
        match report.first_mismatch {
            None => Ok(n + report.checked),
            Some(m) => Err(format!("d={d}: {m}")),
        }
    });
    checks.push(("ramified-identity", epot.map(|n| format!("{n} coefficients agree for d=1..3"))));

    let dets = (2..=12i64).try_for_each(|d| {
        let (m8, m3) = (det_check_8x8(d), det_check_3x3(d));
        let (f8, f3) = (Rational::from_integer(det8_closed_form(d)), Rational::from_integer(det3_closed_form(d)));
        if m8 != f8 || m3 != f3 || m8 == frac(0, 1) || m3 == frac(0, 1) {
            Err(format!("d={d}: 8x8 {m8} vs {f8}, 3x3 {m3} vs {f3}"))
        } else {
            Ok(())
        }
    });
    checks.push(("determinants", dets.map(|()| "both closed forms hold and are nonzero for d=2..12".to_string())));

    let duality = if engine.config.max_cusp_degree >= 3 {
        InvariantTable::keys(Family::C, 3, Some(CondClass::One)).into_iter().try_fold(0, |n, key| {
            let dual = InvariantKey { a: key.b, b: key.a, ..key };
            let (x, y) = (engine.compute(&key).map_err(|e| e.to_string())?, engine.compute(&dual).map_err(|e| e.to_string())?);
            if x == y {
                Ok(n + 1)
            } else {
                Err(format!("{key} = {x} but {dual} = {y}"))
            }
        })
    } else {
        Err("needs --max-cusp-degree >= 3".to_string())
    };
    checks.push(("cusp-duality", duality.map(|n| format!("{n} cuspidal cubic cells symmetric in (a, b)"))));

    checks
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("charnum").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn compute_prints_the_value() {
        assert_eq!(call(&["compute", "N", "5", "--a", "0", "--b", "14", "--c", "0"]), (0, "2150306368\n".into(), String::new()));
        assert_eq!(call(&["compute", "C", "2", "--class", "h2hv", "--a", "0", "--b", "1", "--c", "0"]).1, "1/2\n");
    }

    #[test]
    fn usage_errors() {
        let (code, _, err) = call(&["compute", "C", "3", "--class", "h2", "--a", "9", "--b", "0", "--c", "0"]);
        assert_eq!(code, 2);
        assert!(err.contains("a + b + 2c = 3d - 2 - codim = 5"), "{err}");
        assert_eq!(call(&["compute", "X", "3", "--a", "0", "--b", "0", "--c", "0"]).0, 2);
        assert_eq!(call(&["compute", "C", "3", "--a", "0", "--b", "7", "--c", "0"]).0, 2);
        assert_eq!(call(&["table", "N", "2", "--format", "xml"]).0, 2);
        assert_eq!(call(&["frobnicate"]).0, 2);
    }

    #[test]
    fn guard_is_a_runtime_failure() {
        let (code, _, err) = call(&["--max-degree", "3", "compute", "N", "4", "--a", "11", "--b", "0", "--c", "0"]);
        assert_eq!(code, 1);
        assert!(err.contains("degree limit"));
    }

    #[test]
    fn not_computable_class() {
        let (code, _, err) = call(&["compute", "C", "3", "--class", "hv", "--a", "0", "--b", "6", "--c", "0"]);
        assert_eq!(code, 1);
        assert!(err.contains("no recursion"));
    }
}

//! Reference tables and the harness that recomputes them.

use crate::engine::{route, EngineConfig, EvalError, EvalTrace, Engine};
use crate::model::{CondClass, Family, InvariantKey, InvariantTable};
use crate::rational::{format_rational, parse_rational, Rational};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::path::Path;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixtureEntry {
    pub a: i32,
    pub c: i32,
    pub value: String,
}

/// One reference table, stored exactly as transcribed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GoldenFixture {
    pub table_id: String,
    pub family: Family,
    pub d: i32,
    pub class: Option<String>,
    pub entries: Vec<FixtureEntry>,
}

/// A fixture entry after validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expected {
    pub key: InvariantKey,
    pub value: Rational,
}

impl GoldenFixture {
    pub fn class(&self) -> Result<Option<CondClass>, String> {
        self.class.as_deref().map(CondClass::from_str).transpose().map_err(|e| e.to_string())
    }

    pub fn label(&self) -> String {
        match &self.class {
            Some(s) => format!("{}_{}(;{s})", self.family, self.d),
            None => format!("{}_{}", self.family, self.d),
        }
    }

    /// Keys and values, in file order. Fails on invalid keys, unparsable
    /// values or duplicate cells.
    pub fn expected(&self) -> Result<Vec<Expected>, String> {
        let class = self.class()?;
        if (self.family == Family::N) != class.is_none() || self.family == Family::E {
            return Err(format!("family {} does not match class {:?}", self.family, self.class));
        }
        let probe = InvariantTable { family: self.family, d: self.d, class, entries: Default::default() };
        let mut seen = std::collections::BTreeSet::new();
        let mut out = Vec::with_capacity(self.entries.len());
        for e in &self.entries {
            let key = probe.key(e.a, e.c);
            if !key.is_valid() {
                return Err(format!("cell a={} c={} is outside the table: {}", e.a, e.c, key.rule()));
            }
            if !seen.insert((e.a, e.c)) {
                return Err(format!("cell a={} c={} appears twice", e.a, e.c));
            }
            let value = parse_rational(&e.value).map_err(|err| format!("cell a={} c={}: {err}", e.a, e.c))?;
            out.push(Expected { key, value });
        }
        if out.is_empty() {
            return Err("no entries".into());
        }
        Ok(out)
    }
}

const EMBEDDED: [(&str, &str); 13] = [
    ("table_7_01.json", include_str!("../fixtures/table_7_01.json")),
    ("table_7_02.json", include_str!("../fixtures/table_7_02.json")),
    ("table_7_03.json", include_str!("../fixtures/table_7_03.json")),
    ("table_7_04.json", include_str!("../fixtures/table_7_04.json")),
    ("table_7_05.json", include_str!("../fixtures/table_7_05.json")),
    ("table_7_06.json", include_str!("../fixtures/table_7_06.json")),
    ("table_7_07.json", include_str!("../fixtures/table_7_07.json")),
    ("table_7_08.json", include_str!("../fixtures/table_7_08.json")),
    ("table_7_09.json", include_str!("../fixtures/table_7_09.json")),
    ("table_7_10.json", include_str!("../fixtures/table_7_10.json")),
    ("table_7_11.json", include_str!("../fixtures/table_7_11.json")),
    ("table_7_12.json", include_str!("../fixtures/table_7_12.json")),
    ("table_7_13.json", include_str!("../fixtures/table_7_13.json")),
];

#[derive(Debug, thiserror::Error)]
pub enum FixtureError {
    #[error("cannot read fixtures from {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("no fixture files (*.json) in {0}")]
    Empty(String),
    #[error("{file}: {reason}")]
    Malformed { file: String, reason: String },
}

fn parse(file: &str, text: &str) -> Result<GoldenFixture, FixtureError> {
    let malformed = |reason: String| FixtureError::Malformed { file: file.to_string(), reason };
    let fixture: GoldenFixture = serde_json::from_str(text).map_err(|e| malformed(e.to_string()))?;
    fixture.expected().map_err(malformed)?;
    Ok(fixture)
}

/// The thirteen reference tables compiled into the library.
pub fn embedded() -> Vec<GoldenFixture> {
    EMBEDDED.iter().map(|(name, text)| parse(name, text).expect("embedded fixture")).collect()
}

/// Every `*.json` file in `dir`, sorted by file name.
pub fn load_dir(dir: &Path) -> Result<Vec<GoldenFixture>, FixtureError> {
    let io = |source| FixtureError::Io { path: dir.display().to_string(), source };
    let mut files = Vec::new();
    for entry in std::fs::read_dir(dir).map_err(io)? {
        let path = entry.map_err(io)?.path();
        if path.extension().is_some_and(|e| e == "json") {
            files.push(path);
        }
    }
    files.sort();
    if files.is_empty() {
        return Err(FixtureError::Empty(dir.display().to_string()));
    }
    files
        .iter()
        .map(|p| {
            let text = std::fs::read_to_string(p)
                .map_err(|source| FixtureError::Io { path: p.display().to_string(), source })?;
            parse(&p.display().to_string(), &text)
        })
        .collect()
}

/// Order in which fixture cells are evaluated against a shared store.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalOrder {
    /// Tables and cells as listed.
    Listed,
    /// Everything reversed: last table and last cell first.
    Reversed,
    /// Highest degree first, so lower degrees are filled on demand.
    DegreeDescending,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub key: InvariantKey,
    pub a: i32,
    pub c: i32,
    pub expected: Rational,
    pub computed: Result<Rational, EvalError>,
    pub trace: EvalTrace,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let got = match &self.computed {
            Ok(v) => format_rational(v),
            Err(e) => format!("error ({e})"),
        };
        write!(
            f,
            "a={} c={} {}: expected {}, computed {}; trace {}",
            self.a,
            self.c,
            self.key,
            format_rational(&self.expected),
            got,
            self.trace
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableReport {
    pub table_id: String,
    pub label: String,
    pub entries: usize,
    pub mismatches: Vec<Mismatch>,
}

impl TableReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl fmt::Display for TableReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.mismatches.first() {
            None => write!(f, "PASS table {} {} ({} entries)", self.table_id, self.label, self.entries),
            Some(m) => write!(
                f,
                "FAIL table {} {} ({} of {} entries differ); first: {m}",
                self.table_id,
                self.label,
                self.mismatches.len(),
                self.entries
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub tables: Vec<TableReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.tables.iter().all(TableReport::passed)
    }

    pub fn mismatches(&self) -> impl Iterator<Item = (&TableReport, &Mismatch)> {
        self.tables.iter().flat_map(|t| t.mismatches.iter().map(move |m| (t, m)))
    }

    pub fn entries(&self) -> usize {
        self.tables.iter().map(|t| t.entries).sum()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.tables {
            writeln!(f, "{t}")?;
        }
        let bad = self.mismatches().count();
        write!(
            f,
            "{}: {} tables, {} entries, {bad} mismatches",
            if bad == 0 { "PASS" } else { "FAIL" },
            self.tables.len(),
            self.entries()
        )
    }
}

/// Recomputes every fixture cell with `engine`, visiting cells in `order`.
/// The report lists tables and mismatches in fixture order whatever the
/// evaluation order was.
pub fn verify(fixtures: &[GoldenFixture], engine: &mut Engine, order: EvalOrder) -> VerifyReport {
    let expected: Vec<Vec<Expected>> =
        fixtures.iter().map(|f| f.expected().expect("fixtures are validated on load")).collect();
    let mut cells: Vec<(usize, usize)> =
        expected.iter().enumerate().flat_map(|(t, e)| (0..e.len()).map(move |i| (t, i))).collect();
    match order {
        EvalOrder::Listed => {}
        EvalOrder::Reversed => cells.reverse(),
        EvalOrder::DegreeDescending => cells.sort_by_key(|&(t, i)| std::cmp::Reverse(expected[t][i].key.d)),
    }
    let mut computed: Vec<Vec<Option<Result<Rational, EvalError>>>> =
        expected.iter().map(|e| vec![None; e.len()]).collect();
    for (t, i) in cells {
        computed[t][i] = Some(engine.compute(&expected[t][i].key));
    }
    let tables = fixtures
        .iter()
        .zip(expected)
        .zip(computed)
        .map(|((fixture, expected), computed)| {
            let mut mismatches = Vec::new();
            for (exp, got) in expected.iter().zip(computed) {
                let got = got.expect("every cell evaluated");
                if got.as_ref() == Ok(&exp.value) {
                    continue;
                }
                let trace = match &got {
                    Err(e) => e.trace().cloned().unwrap_or_default(),
                    Ok(_) => EvalTrace(route(&exp.key).map(|eq| vec![(exp.key, eq)]).unwrap_or_default()),
                };
                mismatches.push(Mismatch {
                    key: exp.key,
                    a: exp.key.a,
                    c: exp.key.c,
                    expected: exp.value.clone(),
                    computed: got,
                    trace,
                });
            }
            TableReport {
                table_id: fixture.table_id.clone(),
                label: fixture.label(),
                entries: fixture.entries.len(),
                mismatches,
            }
        })
        .collect();
    VerifyReport { tables }
}

/// Loads `dir` (or the embedded tables) and verifies from a cold store.
pub fn verify_goldens(dir: Option<&Path>, config: EngineConfig) -> Result<VerifyReport, FixtureError> {
    let fixtures = match dir {
        Some(d) => load_dir(d)?,
        None => embedded(),
    };
    let mut engine = Engine::new(config);
    Ok(verify(&fixtures, &mut engine, EvalOrder::Listed))
}

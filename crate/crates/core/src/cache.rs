//! JSON-lines persistence for memo stores.
//!
//! One record per line, sorted by the canonical key order, values as
//! decimal strings:
//!
//! ```text
//! {"family":"N","d":1,"class":null,"a":0,"b":0,"c":1,"num":"1","den":"1"}
//! ```

use crate::engine::MemoStore;
use crate::model::{CondClass, Family, InvariantKey};
use crate::rational::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::path::Path;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CacheRecord {
    pub family: String,
    pub d: i32,
    pub class: Option<String>,
    pub a: i32,
    pub b: i32,
    pub c: i32,
    pub num: String,
    pub den: String,
}

impl CacheRecord {
    pub fn new(key: &InvariantKey, value: &Rational) -> Self {
        CacheRecord {
            family: key.family.tag().to_string(),
            d: key.d,
            class: key.class.map(|s| s.name().to_string()),
            a: key.a,
            b: key.b,
            c: key.c,
            num: value.numer().to_string(),
            den: value.denom().to_string(),
        }
    }

    /// Checks the record and converts it to a store entry.
    pub fn decode(&self) -> Result<(InvariantKey, Rational), String> {
        let family = Family::from_str(&self.family).map_err(|e| e.to_string())?;
        if family == Family::E {
            return Err("E values are derived and never cached".into());
        }
        let class = match (&self.class, family) {
            (None, Family::N) => None,
            (Some(s), Family::C) => Some(CondClass::from_str(s).map_err(|e| e.to_string())?),
            (Some(_), _) => return Err("N records carry no class".into()),
            (None, _) => return Err("C records need a class".into()),
        };
        if self.class.as_deref().is_some_and(|s| class.is_some_and(|c| c.name() != s)) {
            return Err(format!("class must be spelled `{}`", class.expect("class").name()));
        }
        let key = InvariantKey { family, class, d: self.d, a: self.a, b: self.b, c: self.c };
        if !key.is_valid() {
            return Err(format!("invalid key {key}: {}", key.rule()));
        }
        let num = decimal(&self.num, "numerator")?;
        let den = decimal(&self.den, "denominator")?;
        if den.is_zero() {
            return Err("zero denominator".into());
        }
        if den.is_negative() {
            return Err("negative denominator".into());
        }
        if !num.gcd(&den).is_one() {
            return Err(format!("{}/{} is not in lowest terms", self.num, self.den));
        }
        Ok((key, Rational::new(num, den)))
    }
}

fn decimal(s: &str, what: &str) -> Result<BigInt, String> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    let canonical = !digits.is_empty()
        && digits.bytes().all(|b| b.is_ascii_digit())
        && (digits.len() == 1 || !digits.starts_with('0'))
        && s != "-0";
    if !canonical {
        return Err(format!("{what} `{s}` is not a canonical decimal integer"));
    }
    BigInt::from_str(s).map_err(|e| format!("{what} `{s}`: {e}"))
}

#[derive(Debug, thiserror::Error)]
pub enum CacheError {
    #[error("line {line}: {reason}")]
    Record { line: usize, reason: String },
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

/// Serializes the finished entries of `store`, skipping zero values unless
/// `include_zeros` is set.
pub fn export(store: &MemoStore, include_zeros: bool) -> String {
    let mut out = String::new();
    for (key, value) in store.entries() {
        if !include_zeros && value.is_zero() {
            continue;
        }
        let line = serde_json::to_string(&CacheRecord::new(&key, &value)).expect("records serialize");
        out.push_str(&line);
        out.push('\n');
    }
    out
}

/// Parses and validates a cache file. Any bad record rejects the whole
/// file.
pub fn import(text: &str) -> Result<MemoStore, CacheError> {
    let mut store = MemoStore::new();
    let mut last: Option<InvariantKey> = None;
    let fail = |line: usize, reason: String| CacheError::Record { line, reason };
    if !text.is_empty() && !text.ends_with('\n') {
        return Err(fail(text.lines().count(), "missing final newline".into()));
    }
    for (i, line) in text.split_terminator('\n').enumerate() {
        let n = i + 1;
        if line.ends_with('\r') {
            return Err(fail(n, "CR line ending".into()));
        }
        let record: CacheRecord = serde_json::from_str(line).map_err(|e| fail(n, e.to_string()))?;
        let (key, value) = record.decode().map_err(|r| fail(n, r))?;
        if let Some(prev) = last {
            if key <= prev {
                return Err(fail(n, format!("{key} is out of order or duplicated (previous {prev})")));
            }
        }
        last = Some(key);
        store.insert(key, value);
    }
    Ok(store)
}

pub fn export_to(store: &MemoStore, path: &Path, include_zeros: bool) -> Result<(), CacheError> {
    std::fs::write(path, export(store, include_zeros))?;
    Ok(())
}

pub fn import_from(path: &Path) -> Result<MemoStore, CacheError> {
    import(&std::fs::read_to_string(path)?)
}

//! Invariant families, keys, dimension rules and the degree-one / degree-two
//! starting values.

use crate::rational::{frac, int, Rational};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// Basis classes `T_0..T_5 = 1, h, h², ȟ, ȟ², h²ȟ` of the cohomology of the
/// point-line incidence variety.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CondClass {
    One,
    H,
    H2,
    HCheck,
    HCheck2,
    H2HCheck,
}

impl CondClass {
    pub const ALL: [CondClass; 6] = [
        CondClass::One,
        CondClass::H,
        CondClass::H2,
        CondClass::HCheck,
        CondClass::HCheck2,
        CondClass::H2HCheck,
    ];

    pub fn from_index(s: usize) -> Option<Self> {
        Self::ALL.get(s).copied()
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn codim(self) -> i32 {
        [0, 1, 2, 1, 2, 3][self.index()]
    }

    /// `T_{5-s}`, the dual class in the diagonal decomposition.
    pub fn partner(self) -> Self {
        Self::ALL[5 - self.index()]
    }

    /// Short ASCII name used on the command line and in files.
    pub fn name(self) -> &'static str {
        match self {
            CondClass::One => "1",
            CondClass::H => "h",
            CondClass::H2 => "h2",
            CondClass::HCheck => "hv",
            CondClass::HCheck2 => "hv2",
            CondClass::H2HCheck => "h2hv",
        }
    }
}

impl fmt::Display for CondClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown condition class `{0}` (expected one of 1, h, h2, hv, hv2, h2hv or T0..T5)")]
pub struct UnknownClass(pub String);

impl FromStr for CondClass {
    type Err = UnknownClass;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let class = match s {
            "1" | "T0" => CondClass::One,
            "h" | "T1" => CondClass::H,
            "h2" | "h^2" | "T2" => CondClass::H2,
            "hv" | "hcheck" | "T3" => CondClass::HCheck,
            "hv2" | "hcheck2" | "T4" => CondClass::HCheck2,
            "h2hv" | "h2hcheck" | "T5" => CondClass::H2HCheck,
            _ => return Err(UnknownClass(s.to_string())),
        };
        Ok(class)
    }
}

/// `N`: ordinary rational curves. `C`: one-cuspidal curves with a condition at
/// the cusp. `E`: auxiliary lifted maps with a marked ramification point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    N,
    C,
    E,
}

impl Family {
    pub fn tag(self) -> &'static str {
        match self {
            Family::N => "N",
            Family::C => "C",
            Family::E => "E",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown family `{0}` (expected N, C or E)")]
pub struct UnknownFamily(pub String);

impl FromStr for Family {
    type Err = UnknownFamily;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "N" | "n" => Ok(Family::N),
            "C" | "c" => Ok(Family::C),
            "E" | "e" => Ok(Family::E),
            _ => Err(UnknownFamily(s.to_string())),
        }
    }
}

/// One characteristic number: `a` point conditions, `b` tangent lines and
/// `c` flags in degree `d`. Components are signed so that the shifted
/// arguments appearing in the recursions (`b - 1`, `c - 2`, ...) are
/// representable; negative entries are simply invalid keys.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct InvariantKey {
    pub family: Family,
    pub class: Option<CondClass>,
    pub d: i32,
    pub a: i32,
    pub b: i32,
    pub c: i32,
}

impl InvariantKey {
    pub fn n(d: i32, a: i32, b: i32, c: i32) -> Self {
        InvariantKey { family: Family::N, class: None, d, a, b, c }
    }

    pub fn c(class: CondClass, d: i32, a: i32, b: i32, c: i32) -> Self {
        InvariantKey { family: Family::C, class: Some(class), d, a, b, c }
    }

    pub fn e(class: CondClass, d: i32, a: i32, b: i32, c: i32) -> Self {
        InvariantKey { family: Family::E, class: Some(class), d, a, b, c }
    }

    /// Dimension rule plus the family-specific degree and class restrictions.
    pub fn is_valid(&self) -> bool {
        if self.a < 0 || self.b < 0 || self.c < 0 {
            return false;
        }
        let weight = self.a + self.b + 2 * self.c;
        match (self.family, self.class) {
            (Family::N, None) => self.d >= 1 && weight == 3 * self.d - 1,
            (Family::C, Some(s)) => self.d >= 2 && weight == 3 * self.d - 2 - s.codim(),
            (Family::E, Some(s)) => {
                self.d >= 1 && s >= CondClass::HCheck && weight == 3 * self.d + 1 - s.codim()
            }
            _ => false,
        }
    }

    /// Human-readable statement of the dimension rule for this key's family.
    pub fn rule(&self) -> String {
        match (self.family, self.class) {
            (Family::N, _) => format!("N_d needs d >= 1 and a + b + 2c = 3d - 1 = {}", 3 * self.d - 1),
            (Family::C, Some(s)) => format!(
                "C_d(;{s}) needs d >= 2 and a + b + 2c = 3d - 2 - codim = {}",
                3 * self.d - 2 - s.codim()
            ),
            (Family::E, Some(s)) => format!(
                "E_d(;{s}) needs d >= 1, class in {{hv, hv2, h2hv}} and a + b + 2c = 3d + 1 - codim = {}",
                3 * self.d + 1 - s.codim()
            ),
            _ => "C and E keys need a class".to_string(),
        }
    }
}

impl PartialOrd for InvariantKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: family, degree, class, a, c, b.
impl Ord for InvariantKey {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.family, self.d, self.class, self.a, self.c, self.b)
            .cmp(&(other.family, other.d, other.class, other.a, other.c, other.b))
    }
}

impl fmt::Display for InvariantKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.class {
            None => write!(f, "{}_{}({},{},{})", self.family, self.d, self.a, self.b, self.c),
            Some(s) => write!(f, "{}_{}({},{},{};{})", self.family, self.d, self.a, self.b, self.c, s),
        }
    }
}

/// Total weight `a + b + 2c` available to a table of this family.
pub fn dim_budget(family: Family, d: i32, class: Option<CondClass>) -> i32 {
    let codim = class.map_or(0, CondClass::codim);
    match family {
        Family::N => 3 * d - 1,
        Family::C => 3 * d - 2 - codim,
        Family::E => 3 * d + 1 - codim,
    }
}

/// Hard-coded starting values: every valid `N_1` key and every valid `C_2`
/// key. `E` keys are never base cases.
pub fn base_value(key: &InvariantKey) -> Option<Rational> {
    if !key.is_valid() {
        return None;
    }
    match (key.family, key.d) {
        (Family::N, 1) => Some(match (key.a, key.b, key.c) {
            (2, 0, 0) | (0, 0, 1) => int(1),
            _ => int(0),
        }),
        (Family::C, 2) => {
            let s = key.class?;
            let v = C2_VALUES
                .iter()
                .find(|(class, a, b, c, _, _)| *class == s && (*a, *b, *c) == (key.a, key.b, key.c))
                .map_or_else(|| int(0), |&(_, _, _, _, num, den)| frac(num, den));
            Some(v)
        }
        _ => None,
    }
}

/// The nonzero cuspidal conic numbers `C_2(a,b,c;T_s)`.
pub(crate) const C2_VALUES: [(CondClass, i32, i32, i32, i64, i64); 8] = [
    (CondClass::H, 2, 1, 0, 2, 1),
    (CondClass::H, 0, 1, 1, 1, 1),
    (CondClass::H, 1, 2, 0, 1, 1),
    (CondClass::H, 1, 0, 1, 1, 1),
    (CondClass::H2, 1, 1, 0, 1, 1),
    (CondClass::H2, 0, 2, 0, 1, 2),
    (CondClass::H2, 0, 0, 1, 1, 2),
    (CondClass::H2HCheck, 0, 1, 0, 1, 2),
];

/// `E_d(a,b,c;s)` rewritten in terms of ordinary characteristic numbers.
/// Invalid keys give zero; lookups with invalid arguments are never issued.
pub fn e_from_n<E>(
    d: i32,
    a: i32,
    b: i32,
    c: i32,
    s: CondClass,
    mut lookup_n: impl FnMut(i32, i32, i32, i32) -> Result<Rational, E>,
) -> Result<Rational, E> {
    if !InvariantKey::e(s, d, a, b, c).is_valid() {
        return Ok(Rational::zero());
    }
    let mut n = |a: i32, b: i32, c: i32| -> Result<Rational, E> {
        if InvariantKey::n(d, a, b, c).is_valid() {
            lookup_n(d, a, b, c)
        } else {
            Ok(Rational::zero())
        }
    };
    let (di, bi, ci) = (d as i64, b as i64, c as i64);
    let value = match s {
        CondClass::HCheck => {
            int(di * bi) * n(a, b - 1, c)? + int(bi * (bi - 1)) * n(a + 1, b - 2, c)? + int(ci) * n(a + 1, b, c - 1)?
        }
        CondClass::HCheck2 => frac(di, 2) * n(a, b, c)? + int(bi) * n(a + 1, b - 1, c)?,
        CondClass::H2HCheck => frac(1, 2) * n(a + 1, b, c)?,
        _ => Rational::zero(),
    };
    Ok(value)
}

/// One `(family, d, class)` grid indexed by `(a, c)`; `b` is implied by the
/// dimension budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantTable {
    pub family: Family,
    pub d: i32,
    pub class: Option<CondClass>,
    pub entries: BTreeMap<(i32, i32), Rational>,
}

impl InvariantTable {
    pub fn budget(&self) -> i32 {
        dim_budget(self.family, self.d, self.class)
    }

    /// Keys of every cell, rows by `c` ascending then `a` ascending.
    pub fn keys(family: Family, d: i32, class: Option<CondClass>) -> Vec<InvariantKey> {
        let budget = dim_budget(family, d, class);
        let mut out = Vec::new();
        if budget < 0 {
            return out;
        }
        for c in 0..=budget / 2 {
            for a in 0..=budget - 2 * c {
                let key = InvariantKey { family, class, d, a, b: budget - a - 2 * c, c };
                out.push(key);
            }
        }
        out
    }

    pub fn key(&self, a: i32, c: i32) -> InvariantKey {
        InvariantKey { family: self.family, class: self.class, d: self.d, a, b: self.budget() - a - 2 * c, c }
    }

    pub fn get(&self, a: i32, c: i32) -> Option<&Rational> {
        self.entries.get(&(a, c))
    }

    pub fn max_c(&self) -> i32 {
        self.budget().max(0) / 2
    }
}

use crate::rational::{int, Rational};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

/// The twelve formal variables `y0..y5, z0..z5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    Y(usize),
    Z(usize),
}

impl Var {
    fn slot(self) -> usize {
        match self {
            Var::Y(i) => {
                assert!(i < 6, "y{i} out of range");
                i
            }
            Var::Z(i) => {
                assert!(i < 6, "z{i} out of range");
                6 + i
            }
        }
    }
}

/// Formal factor `exp(m·y1 + n·y3)`.
pub type Marker = (i32, i32);

/// Exponent vector over `y0..y5, z0..z5`.
pub type Monomial = [u8; 12];

/// Builds a monomial from `(variable, power)` pairs.
pub fn monomial(factors: &[(Var, u8)]) -> Monomial {
    let mut m = [0u8; 12];
    for &(v, p) in factors {
        m[v.slot()] += p;
    }
    m
}

fn degree(m: &Monomial) -> u32 {
    m.iter().map(|&e| e as u32).sum()
}

/// Exact polynomial in twelve variables, each term carrying an exponential
/// marker. Terms above the truncation degree are discarded as they arise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    terms: BTreeMap<(Marker, Monomial), Rational>,
    truncation: u32,
}

impl TruncatedSeries {
    pub const EXACT: u32 = u32::MAX;

    pub fn zero(truncation: u32) -> Self {
        TruncatedSeries { terms: BTreeMap::new(), truncation }
    }

    /// Sums `coeff · monomial · exp(marker)` over the given terms.
    pub fn from_terms(truncation: u32, terms: impl IntoIterator<Item = (Marker, Monomial, Rational)>) -> Self {
        let mut s = Self::zero(truncation);
        for (marker, mono, coeff) in terms {
            s.add_term(marker, mono, coeff);
        }
        s
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn with_truncation(mut self, truncation: u32) -> Self {
        self.truncation = truncation;
        self.terms.retain(|(_, m), _| degree(m) <= truncation);
        self
    }

    pub fn add_term(&mut self, marker: Marker, mono: Monomial, coeff: Rational) {
        if coeff.is_zero() || degree(&mono) > self.truncation {
            return;
        }
        let slot = self.terms.entry((marker, mono)).or_insert_with(Rational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&(marker, mono));
        }
    }

    pub fn coefficient(&self, marker: Marker, mono: &Monomial) -> Rational {
        self.terms.get(&(marker, *mono)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Marker, &Monomial, &Rational)> {
        self.terms.iter().map(|((mk, m), c)| (*mk, m, c))
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, k: &Rational) -> Self {
        let mut out = Self::zero(self.truncation);
        for ((mk, m), c) in &self.terms {
            out.add_term(*mk, *m, c * k);
        }
        out
    }

    /// Partial derivative. Besides differentiating the monomial, `∂/∂y1`
    /// and `∂/∂y3` pull down `m` and `n` from the marker.
    pub fn derivative(&self, v: Var) -> Self {
        let slot = v.slot();
        let pulled = match v {
            Var::Y(1) => Some(0),
            Var::Y(3) => Some(1),
            _ => None,
        };
        let mut out = Self::zero(self.truncation);
        for ((mk, m), c) in &self.terms {
            if m[slot] > 0 {
                let mut lowered = *m;
                lowered[slot] -= 1;
                out.add_term(*mk, lowered, c * int(m[slot] as i64));
            }
            if let Some(which) = pulled {
                let k = if which == 0 { mk.0 } else { mk.1 };
                if k != 0 {
                    out.add_term(*mk, *m, c * int(k as i64));
                }
            }
        }
        out
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let mut out = TruncatedSeries::zero(self.truncation.min(rhs.truncation));
        for s in [self, rhs] {
            for ((mk, m), c) in &s.terms {
                out.add_term(*mk, *m, c.clone());
            }
        }
        out
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let truncation = self.truncation.min(rhs.truncation);
        let mut out = TruncatedSeries::zero(truncation);
        for ((mk1, m1), c1) in &self.terms {
            let d1 = degree(m1);
            for ((mk2, m2), c2) in &rhs.terms {
                if truncation != TruncatedSeries::EXACT && d1 + degree(m2) > truncation {
                    continue;
                }
                let mut m = *m1;
                for i in 0..12 {
                    m[i] += m2[i];
                }
                out.add_term((mk1.0 + mk2.0, mk1.1 + mk2.1), m, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, ((mk, m), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})")?;
            for (slot, &e) in m.iter().enumerate() {
                let name = if slot < 6 { format!("y{slot}") } else { format!("z{}", slot - 6) };
                match e {
                    0 => {}
                    1 => write!(f, "·{name}")?,
                    _ => write!(f, "·{name}^{e}")?,
                }
            }
            if *mk != (0, 0) {
                write!(f, "·e({},{})", mk.0, mk.1)?;
            }
        }
        Ok(())
    }
}

//! Generating functions for the invariants and the identities relating
//! them, used as an independent check on the recursion engine.

mod determinant;
mod series;

pub use determinant::{det3_closed_form, det3_matrix, det8_closed_form, det8_matrix, det_check_3x3, det_check_8x8, determinant};
pub use series::{monomial, Marker, Monomial, TruncatedSeries, Var};

use crate::model::{e_from_n, CondClass, InvariantKey};
use crate::rational::{frac, int, Rational};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use Var::{Y, Z};

/// Marker of the degree-`d` part of the ordinary potential.
pub fn n_marker(d: i32) -> Marker {
    (d, 2 * d - 2)
}

/// Marker of the degree-`d` part of the cuspidal potential.
pub fn c_marker(d: i32) -> Marker {
    (d, 2 * d - 3)
}

/// Marker of the degree-`d` part of the ramified potential.
pub fn e_marker(d: i32) -> Marker {
    (d, 2 * d)
}

/// Truncation that keeps every coefficient needed in degree `d`.
pub fn truncation_for(d: i32) -> u32 {
    (3 * d + 2) as u32
}

/// Classical cup-product part of the quantum potential of the incidence
/// variety.
pub fn classical_potential() -> TruncatedSeries {
    TruncatedSeries::from_terms(
        TruncatedSeries::EXACT,
        [
            ((0, 0), monomial(&[(Y(0), 2), (Y(5), 1)]), frac(1, 2)),
            ((0, 0), monomial(&[(Y(0), 1), (Y(1), 1), (Y(4), 1)]), int(1)),
            ((0, 0), monomial(&[(Y(0), 1), (Y(2), 1), (Y(3), 1)]), int(1)),
            ((0, 0), monomial(&[(Y(1), 2), (Y(3), 1)]), frac(1, 2)),
            ((0, 0), monomial(&[(Y(1), 1), (Y(3), 2)]), frac(1, 2)),
        ],
    )
}

/// Degree-one maps into a fiber over the plane.
pub fn fiber_potential() -> TruncatedSeries {
    TruncatedSeries::from_terms(
        TruncatedSeries::EXACT,
        [((0, 1), monomial(&[(Y(4), 2)]), frac(1, 2)), ((0, 1), monomial(&[(Y(5), 1)]), int(1))],
    )
}

/// Double covers of a fiber with two marked ramification points: first over
/// the plane (`R`, marker `(0, 2)`), then over the dual plane (`L`, marker
/// `(2, 0)`).
pub fn ramified_potentials() -> (TruncatedSeries, TruncatedSeries) {
    let build = |marker: Marker, wide: usize, narrow: usize, lin: usize| {
        TruncatedSeries::from_terms(
            TruncatedSeries::EXACT,
            [
                (marker, monomial(&[(Z(wide), 2), (Y(lin), 2)]), frac(1, 2)),
                (marker, monomial(&[(Z(wide), 2), (Y(5), 1)]), frac(1, 2)),
                (marker, monomial(&[(Z(wide), 1), (Z(narrow), 1), (Y(lin), 1)]), int(1)),
                (marker, monomial(&[(Z(wide), 1), (Z(5), 1)]), frac(1, 2)),
                (marker, monomial(&[(Z(narrow), 2)]), frac(1, 4)),
            ],
        )
    };
    (build((0, 2), 3, 4, 4), build((2, 0), 1, 2, 2))
}

fn factorial(n: i32) -> Rational {
    (1..=n as i64).fold(Rational::one(), |acc, k| acc * int(k))
}

fn weight_factor(a: i32, b: i32, c: i32) -> Rational {
    factorial(a) * factorial(b) * factorial(c)
}

fn abc_monomial(a: i32, b: i32, c: i32) -> Monomial {
    monomial(&[(Y(2), a as u8), (Y(4), b as u8), (Y(5), c as u8)])
}

/// Reads a term `coeff · z_s · y2^a y4^b y5^c` back as `(a, b, c, s)`.
fn single_z_term(mono: &Monomial) -> Option<(i32, i32, i32, CondClass)> {
    let [y0, y1, y2, y3, y4, y5, z @ ..] = *mono;
    if y0 + y1 + y3 != 0 || z.iter().map(|&e| e as u32).sum::<u32>() != 1 {
        return None;
    }
    let s = z.iter().position(|&e| e == 1)?;
    Some((y2 as i32, y4 as i32, y5 as i32, CondClass::from_index(s)?))
}

/// Invariant `R(a,b,c; T_i·T_j)`: the normalized `y` coefficient of
/// `∂²R/∂z_i∂z_j`, scaled by `a!b!c!`.
pub fn ramified_invariant(i: CondClass, j: CondClass, a: i32, b: i32, c: i32) -> Rational {
    let (r, _) = ramified_potentials();
    let second = r.derivative(Z(i.index())).derivative(Z(j.index()));
    second.coefficient((0, 2), &abc_monomial(a, b, c)) * weight_factor(a, b, c)
}

/// Degree-two cuspidal numbers recovered from `Σ_s ∂L/∂z_s · ∂F/∂y_{5-s}`,
/// keyed by `(a, b, c, s)`. Only nonzero values are returned.
pub fn ctwo_from_potentials() -> BTreeMap<(i32, i32, i32, CondClass), Rational> {
    let (_, l) = ramified_potentials();
    let f = fiber_potential();
    let mut total = TruncatedSeries::zero(truncation_for(2));
    for s in 0..6 {
        total = &total + &(&l.derivative(Z(s)) * &f.derivative(Y(5 - s)));
    }
    let mut out = BTreeMap::new();
    for (marker, mono, coeff) in total.terms() {
        if marker != c_marker(2) {
            continue;
        }
        if let Some((a, b, c, s)) = single_z_term(mono) {
            out.insert((a, b, c, s), coeff * weight_factor(a, b, c));
        }
    }
    out
}

/// Truncated ordinary potential through degree `d`, filled from `lookup_n`.
pub fn n_potential<E>(
    d: i32,
    mut lookup_n: impl FnMut(i32, i32, i32, i32) -> Result<Rational, E>,
) -> Result<TruncatedSeries, E> {
    let mut s = TruncatedSeries::zero(truncation_for(d));
    for e in 1..=d {
        for key in crate::model::InvariantTable::keys(crate::model::Family::N, e, None) {
            let v = lookup_n(e, key.a, key.b, key.c)?;
            s.add_term(n_marker(e), abc_monomial(key.a, key.b, key.c), v / weight_factor(key.a, key.b, key.c));
        }
    }
    Ok(s)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpotMismatch {
    pub key: InvariantKey,
    pub from_series: Rational,
    pub from_formula: Rational,
}

impl fmt::Display for EpotMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: series gives {}, reduction gives {}", self.key, self.from_series, self.from_formula)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EpotReport {
    /// Number of `E` keys compared.
    pub checked: usize,
    pub nonzero: usize,
    pub first_mismatch: Option<EpotMismatch>,
}

impl EpotReport {
    pub fn passed(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Compares `E_e(a,b,c;T_s)` for all `e <= d` and all six classes as read
/// from `Σ_s ∂N/∂y_s · ∂R/∂z_{5-s}` against the reduction to ordinary
/// numbers.
pub fn check_epot<E>(
    d: i32,
    mut lookup_n: impl FnMut(i32, i32, i32, i32) -> Result<Rational, E>,
) -> Result<EpotReport, E> {
    let n = n_potential(d, &mut lookup_n)?;
    let (r, _) = ramified_potentials();
    let mut product = TruncatedSeries::zero(truncation_for(d));
    for s in 0..6 {
        product = &product + &(&n.derivative(Y(s)) * &r.derivative(Z(5 - s)));
    }
    let mut from_series: BTreeMap<InvariantKey, Rational> = BTreeMap::new();
    for (marker, mono, coeff) in product.terms() {
        let e = marker.0;
        let Some((a, b, c, s)) = single_z_term(mono) else { continue };
        let key = InvariantKey::e(s, e, a, b, c);
        if marker != e_marker(e) || !key.is_valid() {
            return Ok(EpotReport {
                first_mismatch: Some(EpotMismatch { key, from_series: coeff.clone(), from_formula: Rational::zero() }),
                ..EpotReport::default()
            });
        }
        from_series.insert(key, coeff * weight_factor(a, b, c));
    }
    let mut report = EpotReport::default();
    for e in 1..=d {
        for s in CondClass::ALL {
            let budget = crate::model::dim_budget(crate::model::Family::E, e, Some(s));
            for c in 0..=budget.max(0) / 2 {
                for a in 0..=budget - 2 * c {
                    let key = InvariantKey::e(s, e, a, budget - a - 2 * c, c);
                    let expected = e_from_n(e, key.a, key.b, key.c, s, &mut lookup_n)?;
                    let got = from_series.remove(&key).unwrap_or_else(Rational::zero);
                    report.checked += 1;
                    if !expected.is_zero() {
                        report.nonzero += 1;
                    }
                    if got != expected && report.first_mismatch.is_none() {
                        report.first_mismatch = Some(EpotMismatch { key, from_series: got, from_formula: expected });
                    }
                }
            }
        }
    }
    if let Some((key, v)) = from_series.into_iter().next() {
        report.first_mismatch.get_or_insert(EpotMismatch { key, from_series: v, from_formula: Rational::zero() });
    }
    Ok(report)
}

/// `Σ_s ∂N/∂y_s · ∂R/∂z_{5-s}` evaluated on a single degree; exposed for
/// inspection from the CLI.
pub fn epot_series(n: &TruncatedSeries) -> TruncatedSeries {
    let (r, _) = ramified_potentials();
    let mut product = TruncatedSeries::zero(n.truncation());
    for s in 0..6 {
        product = &product + &(&n.derivative(Y(s)) * &r.derivative(Z(5 - s)));
    }
    product
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::Engine;
    use crate::model::C2_VALUES;

    #[test]
    fn classical_coefficients() {
        let p = classical_potential();
        assert_eq!(p.coefficient((0, 0), &monomial(&[(Y(0), 2), (Y(5), 1)])), frac(1, 2));
        assert_eq!(p.coefficient((0, 0), &monomial(&[(Y(0), 3)])), int(0));
        assert_eq!(p.coefficient((0, 0), &monomial(&[(Y(0), 1), (Y(2), 1), (Y(3), 1)])), int(1));
    }

    #[test]
    fn fiber_coefficients() {
        let f = fiber_potential();
        assert_eq!(f.coefficient((0, 1), &monomial(&[(Y(4), 2)])), frac(1, 2));
        assert_eq!(f.coefficient((0, 1), &monomial(&[(Y(5), 1)])), int(1));
        assert!(f.terms().all(|(mk, _, _)| mk != (0, 0)));
    }

    #[test]
    fn ramified_coefficients() {
        let (r, l) = ramified_potentials();
        assert_eq!(r.coefficient((0, 2), &monomial(&[(Z(4), 2)])), frac(1, 4));
        assert_eq!(l.coefficient((2, 0), &monomial(&[(Z(1), 1), (Z(5), 1)])), frac(1, 2));
        assert!(r.terms().all(|(_, m, _)| m[2] == 0));
        assert!(l.terms().all(|(_, m, _)| m[4] == 0));
    }

    #[test]
    fn ramified_invariants_with_two_marked_points() {
        use CondClass::{HCheck, HCheck2, H2HCheck};
        assert_eq!(ramified_invariant(HCheck, HCheck, 0, 2, 0), int(2));
        assert_eq!(ramified_invariant(HCheck, HCheck, 0, 0, 1), int(1));
        assert_eq!(ramified_invariant(HCheck, HCheck2, 0, 1, 0), int(1));
        assert_eq!(ramified_invariant(HCheck2, HCheck2, 0, 0, 0), frac(1, 2));
        assert_eq!(ramified_invariant(HCheck, H2HCheck, 0, 0, 0), frac(1, 2));
        assert_eq!(ramified_invariant(HCheck, HCheck, 1, 0, 0), int(0));
    }

    #[test]
    fn conic_cusps_from_series() {
        let got = ctwo_from_potentials();
        let expected: BTreeMap<_, _> =
            C2_VALUES.iter().map(|&(s, a, b, c, num, den)| ((a, b, c, s), frac(num, den))).collect();
        assert_eq!(got, expected);
        assert_eq!(got.get(&(2, 1, 0, CondClass::H)), Some(&int(2)));
        assert_eq!(got.get(&(0, 2, 0, CondClass::H2)), Some(&frac(1, 2)));
        assert_eq!(got.get(&(1, 0, 0, CondClass::One)), None);
    }

    #[test]
    fn ramified_identity_low_degrees() {
        let mut engine = Engine::default();
        for d in 1..=3 {
            let report = check_epot(d, |e, a, b, c| engine.n(e, a, b, c)).unwrap();
            assert!(report.passed(), "d = {d}: {:?}", report.first_mismatch);
            assert!(report.nonzero > 0);
        }
    }

    #[test]
    fn ramified_identity_is_structural() {
        let fake = |_e: i32, a: i32, b: i32, c: i32| Ok::<_, ()>(int((5 * a + 3 * b + 7 * c + 1) as i64));
        assert!(check_epot(3, fake).unwrap().passed());
    }

    #[test]
    fn ramified_identity_reports_disagreement() {
        let mut engine = Engine::default();
        let mut seen = 0;
        let report = check_epot(2, |e, a, b, c| {
            let v = engine.n(e, a, b, c)?;
            if (e, a, b, c) == (2, 2, 3, 0) {
                seen += 1;
                if seen > 1 {
                    return Ok::<_, crate::engine::EvalError>(v + int(1));
                }
            }
            Ok(v)
        })
        .unwrap();
        let mismatch = report.first_mismatch.expect("mismatch");
        assert_eq!(mismatch.key.d, 2);
    }

    #[test]
    fn degree_one_ramified_value() {
        let mut engine = Engine::default();
        let n = n_potential(1, |e, a, b, c| engine.n(e, a, b, c)).unwrap();
        let e = epot_series(&n);
        let coeff = e.coefficient(e_marker(1), &monomial(&[(Y(2), 2), (Z(4), 1)]));
        assert_eq!(coeff * int(2), frac(1, 2));
    }
}

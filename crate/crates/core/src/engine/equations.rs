//! The nine recursions as data, plus one generic evaluator.
//!
//! Every recursion has the shape
//!
//! ```text
//! value = Σ outer·C_d(..)  +  (1/scale(d)) · ( Σ inner·N(..)  +  Σ sign·S_k )
//! S_k   = Σ_{d1+d2=D} Σ_{α1+α2=totals} bracket(d1,d2,α1) · N_{d1}(α1) · E_{d2}(α2; class)
//! bracket = Σ coeff(d1,d2) · C(ta, a1-sa) · C(tb, b1-sb) · C(tc, c1-sc)
//! ```
//!
//! where `totals` and `tops` are affine in the key's `(a, b, c)` and `D` is
//! `d` or `d + 1`.
//!
//! # Catalogue
//!
//! Two transcriptions are kept. [`Transcription::Literal`] reproduces the
//! formulas term for term as they were first written down;
//! [`Transcription::Repaired`] fixes the terms that break the associativity
//! identity they are derived from. Only the repaired set reproduces the
//! reference tables, so it is the default.
//!
//! | equation | literal                                      | repaired                                   |
//! |----------|----------------------------------------------|--------------------------------------------|
//! | 1122a    | ȟ² sum: `-d1³d2·C(a-3,a1)`, `-d1d2²·C(a-3,a1-1)` | `-d1³·C(a-3,a1)`, `-d1d2²·C(a-3,a1-2)`  |
//! |          | ȟ sum: `-d2²·C(a-3,a1-2)`                     | `-d2²·C(a-3,a1-3)`                         |
//! | 1122b    | brackets as literal 1122a                    | brackets as repaired 1122a                 |
//! | 1155     | ȟ² sum: `-2d1²d2·C(c-2,c1-2)`                 | `-d1d2²·C(c-2,c1-2)`                        |
//! | 1123a    | `N(a+1,b+1,c-1)`                              | `d·N(a+1,b+1,c-1)`                          |
//! | 1123b    | no overall factor                             | overall `1/d`                               |
//! | 2245     | ȟ sum enters with `+`, negative terms `C(0,a1-2)·C(c-1,c1)`, `C(0,a1)·C(b-1,b1-1)` | enters with `-`, negative terms `C(0,a1-2)·C(b-1,b1)·C(c-1,c1-1)`, `C(0,a1-2)·C(b-1,b1-1)·C(c-1,c1)` |
//! | 1144     | unchanged                                    | unchanged                                  |
//! | 1134     | ȟ sum: `2d2·C(b,b1-1) - 2d1²d2·C(b,b1)`       | `2d2²·C(b,b1-1) - 2d1d2·C(b,b1)`            |
//! | 1133     | ȟ² sum: `d1d2`                                | `d1d2²`                                     |

use super::EvalError;
use crate::model::{e_from_n, CondClass, InvariantKey};
use crate::rational::{binom_i128, int, Rational};
use num_bigint::BigInt;
use num_traits::Zero;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EquationId {
    E1122a,
    E1122b,
    E1155,
    E1123a,
    E1123b,
    E2245,
    E1144,
    E1134,
    E1133,
    Base,
}

impl EquationId {
    pub fn name(self) -> &'static str {
        match self {
            EquationId::E1122a => "1122a",
            EquationId::E1122b => "1122b",
            EquationId::E1155 => "1155",
            EquationId::E1123a => "1123a",
            EquationId::E1123b => "1123b",
            EquationId::E2245 => "2245",
            EquationId::E1144 => "1144",
            EquationId::E1134 => "1134",
            EquationId::E1133 => "1133",
            EquationId::Base => "base",
        }
    }
}

impl fmt::Display for EquationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub enum Transcription {
    Literal,
    #[default]
    Repaired,
}

impl FromStr for Transcription {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "literal" => Ok(Transcription::Literal),
            "repaired" => Ok(Transcription::Repaired),
            _ => Err(format!("unknown variant `{s}` (expected literal or repaired)")),
        }
    }
}

impl fmt::Display for Transcription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Transcription::Literal => "literal",
            Transcription::Repaired => "repaired",
        })
    }
}

/// Source of the values a recursion consumes. Implementations return zero
/// for invalid keys.
pub trait Lookup {
    fn n(&mut self, d: i32, a: i32, b: i32, c: i32) -> Result<Rational, EvalError>;
    fn c(&mut self, class: CondClass, d: i32, a: i32, b: i32, c: i32) -> Result<Rational, EvalError>;
}

type Shift = [i32; 3];

/// `coeff(d1, d2) · Π C(top_i, x1_i - shift_i)`.
#[derive(Clone, Copy)]
pub struct Term {
    pub coeff: fn(i64, i64) -> i64,
    pub shift: Shift,
}

/// One convolution of `N_{d1}` against `E_{d2}`.
#[derive(Clone)]
pub struct SplitSum {
    pub sign: i64,
    /// Splits `d + raise` rather than `d`.
    pub raise: i32,
    pub totals: Shift,
    pub class: CondClass,
    pub tops: Shift,
    pub terms: Vec<Term>,
    /// Drop the splittings where either factor carries the key's own indices.
    pub exclude_key: bool,
}

/// `coeff(d, a, b, c) · N_{d+raise}(a+δa, b+δb, c+δc)`.
#[derive(Clone, Copy)]
pub struct Inner {
    pub coeff: fn(i64, i64, i64, i64) -> i64,
    pub raise: i32,
    pub shift: Shift,
}

/// `coeff(d, a, b, c) · C_d(a+δa, b+δb, c+δc; class)`, outside the scale.
#[derive(Clone, Copy)]
pub struct Outer {
    pub coeff: fn(i64, i64, i64, i64) -> i64,
    pub class: CondClass,
    pub shift: Shift,
}

#[derive(Clone)]
pub struct Formula {
    pub outer: Vec<Outer>,
    /// Denominator applied to the inner terms and sums.
    pub scale: fn(i64) -> i64,
    pub inner: Vec<Inner>,
    pub sums: Vec<SplitSum>,
}

const fn t(coeff: fn(i64, i64) -> i64, shift: Shift) -> Term {
    Term { coeff, shift }
}

fn one(_: i64) -> i64 {
    1
}

fn sum(class: CondClass, totals: Shift, tops: Shift, terms: Vec<Term>) -> SplitSum {
    SplitSum { sign: 1, raise: 0, totals, class, tops, terms, exclude_key: false }
}

fn brackets_1122(tr: Transcription, axis: usize) -> (Vec<Term>, Vec<Term>) {
    let at = |k: i32| {
        let mut s = [0; 3];
        s[axis] = k;
        s
    };
    match tr {
        Transcription::Literal => (
            vec![
                t(|d1, d2| 2 * d1 * d1 * d2, at(1)),
                t(|d1, d2| -d1 * d1 * d1 * d2, at(0)),
                t(|d1, d2| -d1 * d2 * d2, at(1)),
            ],
            vec![
                t(|d1, d2| 2 * d1 * d2, at(2)),
                t(|d1, _| -d1 * d1, at(1)),
                t(|_, d2| -d2 * d2, at(2)),
            ],
        ),
        Transcription::Repaired => (
            vec![
                t(|d1, d2| 2 * d1 * d1 * d2, at(1)),
                t(|d1, _| -d1 * d1 * d1, at(0)),
                t(|d1, d2| -d1 * d2 * d2, at(2)),
            ],
            vec![
                t(|d1, d2| 2 * d1 * d2, at(2)),
                t(|d1, _| -d1 * d1, at(1)),
                t(|_, d2| -d2 * d2, at(3)),
            ],
        ),
    }
}

/// The recursion behind `eq`, or `None` for [`EquationId::Base`].
pub fn formula(eq: EquationId, tr: Transcription) -> Option<Formula> {
    use CondClass::{HCheck, HCheck2, H, H2};
    let repaired = tr == Transcription::Repaired;
    let f = match eq {
        EquationId::Base => return None,
        EquationId::E1122a => {
            let (s1, s2) = brackets_1122(tr, 0);
            Formula {
                outer: vec![],
                scale: one,
                inner: vec![],
                sums: vec![sum(HCheck2, [-1, 0, 0], [-3, 0, 0], s1), sum(HCheck, [0, 0, 0], [-3, 0, 0], s2)],
            }
        }
        EquationId::E1122b => {
            let (s1, s2) = brackets_1122(tr, 0);
            Formula {
                outer: vec![],
                scale: |d| d * d * d,
                inner: vec![
                    Inner { coeff: |_, _, _, _| -1, raise: 1, shift: [3, 0, 0] },
                    Inner { coeff: |d, _, b, _| -d * d * b, raise: 0, shift: [1, -1, 0] },
                ],
                sums: vec![
                    SplitSum { raise: 1, exclude_key: true, ..sum(HCheck2, [2, 0, 0], [0, 0, 0], s1) },
                    SplitSum { raise: 1, ..sum(HCheck, [3, 0, 0], [0, 0, 0], s2) },
                ],
            }
        }
        EquationId::E1155 => {
            let middle = if repaired {
                t(|d1, d2| -d1 * d2 * d2, [0, 0, 2])
            } else {
                t(|d1, d2| -2 * d1 * d1 * d2, [0, 0, 2])
            };
            Formula {
                outer: vec![],
                scale: one,
                inner: vec![],
                sums: vec![
                    sum(
                        HCheck2,
                        [-1, 0, 0],
                        [-1, 0, -2],
                        vec![t(|d1, d2| 2 * d1 * d1 * d2, [0, 0, 1]), middle, t(|d1, _| -d1 * d1 * d1, [0, 0, 0])],
                    ),
                    sum(
                        HCheck,
                        [0, 0, 0],
                        [-1, 0, -2],
                        vec![
                            t(|d1, d2| 2 * d1 * d2, [1, 0, 1]),
                            t(|d1, _| -d1 * d1, [1, 0, 0]),
                            t(|_, d2| -d2 * d2, [1, 0, 2]),
                        ],
                    ),
                ],
            }
        }
        EquationId::E1123a => Formula {
            outer: vec![],
            scale: |d| d * d,
            inner: vec![
                Inner {
                    coeff: if repaired { |d, _, _, _| d } else { |_, _, _, _| 1 },
                    raise: 0,
                    shift: [1, 1, -1],
                },
                Inner { coeff: |d, _, _, _| -(d - 2), raise: 0, shift: [2, 0, -1] },
            ],
            sums: vec![
                sum(
                    HCheck2,
                    [1, 0, -1],
                    [0, 0, -1],
                    vec![t(|d1, d2| 2 * d1 * d2 * d2, [1, 0, 0]), t(|d1, d2| -2 * d1 * d1 * d2, [0, 0, 0])],
                ),
                sum(
                    HCheck,
                    [2, 0, -1],
                    [0, 0, -1],
                    vec![t(|_, d2| 2 * d2 * d2, [2, 0, 0]), t(|d1, d2| -2 * d1 * d2, [1, 0, 0])],
                ),
            ],
        },
        EquationId::E1123b => Formula {
            outer: vec![],
            scale: if repaired { |d| d } else { one },
            inner: vec![
                Inner { coeff: |d, _, _, _| d - 2, raise: 0, shift: [1, -1, 0] },
                Inner { coeff: |d, _, _, _| d * d, raise: 0, shift: [-1, -1, 1] },
            ],
            sums: vec![
                sum(
                    HCheck2,
                    [0, -1, 0],
                    [-1, -1, 0],
                    vec![t(|d1, d2| 2 * d1 * d1 * d2, [0, 0, 0]), t(|d1, d2| -2 * d1 * d2 * d2, [1, 0, 0])],
                ),
                sum(
                    HCheck,
                    [1, -1, 0],
                    [-1, -1, 0],
                    vec![t(|d1, d2| 2 * d1 * d2, [1, 0, 0]), t(|_, d2| -2 * d2 * d2, [2, 0, 0])],
                ),
            ],
        },
        EquationId::E2245 => {
            let (sign2, tail) = if repaired {
                (-1, [t(|_, _| -1, [2, 0, 1]), t(|_, _| -1, [2, 1, 0])])
            } else {
                (1, [t(|_, _| -1, [2, 0, 0]), t(|_, _| -1, [0, 1, 0])])
            };
            Formula {
                outer: vec![],
                scale: |d| d,
                inner: vec![Inner { coeff: |_, _, b, _| -b, raise: 0, shift: [1, -1, 0] }],
                sums: vec![
                    SplitSum {
                        sign: -1,
                        raise: 1,
                        exclude_key: true,
                        ..sum(
                            HCheck2,
                            [2, 0, 0],
                            [0, -1, -1],
                            vec![
                                t(|d1, _| d1, [2, 0, 0]),
                                t(|d1, _| d1, [0, 1, 1]),
                                t(|d1, _| -d1, [1, 0, 1]),
                                t(|d1, _| -d1, [1, 1, 0]),
                            ],
                        )
                    },
                    SplitSum {
                        sign: sign2,
                        raise: 1,
                        ..sum(
                            HCheck,
                            [3, 0, 0],
                            [0, -1, -1],
                            vec![t(|_, _| 1, [3, 0, 0]), t(|_, _| 1, [1, 1, 1]), tail[0], tail[1]],
                        )
                    },
                ],
            }
        }
        EquationId::E1144 => Formula {
            outer: vec![],
            scale: |d| d * d,
            inner: vec![
                Inner { coeff: |d, _, _, _| 2 * d, raise: 0, shift: [0, 1, 1] },
                Inner { coeff: |_, _, _, _| -1, raise: 0, shift: [1, 2, 0] },
            ],
            sums: vec![
                sum(
                    HCheck2,
                    [0, 2, 0],
                    [0, 0, 0],
                    vec![
                        t(|d1, d2| 2 * d1 * d1 * d2, [0, 1, 0]),
                        t(|d1, d2| -d1 * d2 * d2, [0, 2, 0]),
                        t(|d1, _| -d1 * d1 * d1, [0, 0, 0]),
                    ],
                ),
                sum(
                    HCheck,
                    [1, 2, 0],
                    [0, 0, 0],
                    vec![
                        t(|d1, d2| 2 * d1 * d2, [1, 1, 0]),
                        t(|d1, _| -d1 * d1, [1, 0, 0]),
                        t(|_, d2| -d2 * d2, [1, 2, 0]),
                    ],
                ),
            ],
        },
        EquationId::E1134 => {
            let hcheck = if repaired {
                vec![t(|_, d2| 2 * d2 * d2, [1, 1, 0]), t(|d1, d2| -2 * d1 * d2, [1, 0, 0])]
            } else {
                vec![t(|_, d2| 2 * d2, [1, 1, 0]), t(|d1, d2| -2 * d1 * d1 * d2, [1, 0, 0])]
            };
            Formula {
                outer: vec![Outer { coeff: |_, _, b, _| -b, class: H2, shift: [0, -1, 0] }],
                scale: |d| d * d,
                inner: vec![
                    Inner { coeff: |d, _, _, _| d * (2 * d - 2), raise: 0, shift: [0, 0, 1] },
                    Inner { coeff: |d, _, _, _| 2 - d, raise: 0, shift: [1, 1, 0] },
                    Inner { coeff: |d, _, _, _| d, raise: 0, shift: [0, 2, 0] },
                ],
                sums: vec![
                    sum(
                        HCheck2,
                        [0, 1, 0],
                        [0, 0, 0],
                        vec![t(|d1, d2| 2 * d1 * d2 * d2, [0, 1, 0]), t(|d1, d2| -2 * d1 * d1 * d2, [0, 0, 0])],
                    ),
                    sum(HCheck, [1, 1, 0], [0, 0, 0], hcheck),
                ],
            }
        }
        EquationId::E1133 => {
            let first = if repaired { t(|d1, d2| d1 * d2 * d2, [0, 0, 0]) } else { t(|d1, d2| d1 * d2, [0, 0, 0]) };
            Formula {
                outer: vec![
                    Outer { coeff: |_, _, b, _| -b, class: H, shift: [0, -1, 0] },
                    Outer { coeff: |_, _, _, c| -c, class: H2, shift: [0, 0, -1] },
                    Outer { coeff: |_, _, b, _| -(b * (b - 1) / 2), class: H2, shift: [0, -2, 0] },
                ],
                scale: |d| d * d,
                inner: vec![
                    Inner { coeff: |d, _, _, _| 4 * (d - 1), raise: 0, shift: [1, 0, 0] },
                    Inner { coeff: |d, _, _, _| 3 * d * d - 4 * d, raise: 0, shift: [0, 1, 0] },
                ],
                sums: vec![
                    SplitSum { sign: -4, ..sum(HCheck2, [0, 0, 0], [0, 0, 0], vec![first]) },
                    SplitSum { sign: -4, ..sum(HCheck, [1, 0, 0], [0, 0, 0], vec![t(|_, d2| d2 * d2, [1, 0, 0])]) },
                ],
            }
        }
    };
    Some(f)
}

fn shifted(base: [i32; 3], s: Shift) -> [i32; 3] {
    [base[0] + s[0], base[1] + s[1], base[2] + s[2]]
}

fn bracket(terms: &[Term], d1: i64, d2: i64, tops: [i32; 3], x1: [i32; 3]) -> i128 {
    let mut acc = 0i128;
    for term in terms {
        let coeff = (term.coeff)(d1, d2) as i128;
        if coeff == 0 {
            continue;
        }
        let mut prod = coeff;
        for i in 0..3 {
            prod *= binom_i128(tops[i] as i64, (x1[i] - term.shift[i]) as i64);
            if prod == 0 {
                break;
            }
        }
        acc += prod;
    }
    acc
}

fn big(v: i128) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// One split sum at `key`. Splittings are visited with `d1`, then `a1`,
/// then `b1` ascending; a splitting is looked up only when its bracket is
/// nonzero, and the `E` factor only when the `N` factor is nonzero.
pub fn split_sum(s: &SplitSum, key: &InvariantKey, lookup: &mut dyn Lookup) -> Result<Rational, EvalError> {
    let abc = [key.a, key.b, key.c];
    let totals = shifted(abc, s.totals);
    let tops = shifted(abc, s.tops);
    let mut acc = Rational::zero();
    if totals.iter().any(|&v| v < 0) {
        return Ok(acc);
    }
    let degree = key.d + s.raise;
    for d1 in 1..degree {
        let d2 = degree - d1;
        let weight = 3 * d1 - 1;
        for a1 in 0..=totals[0].min(weight) {
            for b1 in 0..=totals[1].min(weight - a1) {
                let rest = weight - a1 - b1;
                if rest % 2 != 0 {
                    continue;
                }
                let c1 = rest / 2;
                if c1 > totals[2] {
                    continue;
                }
                let x1 = [a1, b1, c1];
                let x2 = [totals[0] - a1, totals[1] - b1, totals[2] - c1];
                if s.exclude_key {
                    let own = (key.d, abc);
                    if (d1, x1) == own || (d2, x2) == own {
                        continue;
                    }
                }
                let br = bracket(&s.terms, d1 as i64, d2 as i64, tops, x1);
                if br == 0 {
                    continue;
                }
                let n = lookup.n(d1, a1, b1, c1)?;
                if n.is_zero() {
                    continue;
                }
                let e = e_from_n(d2, x2[0], x2[1], x2[2], s.class, |d, a, b, c| lookup.n(d, a, b, c))?;
                if e.is_zero() {
                    continue;
                }
                acc += big(br) * n * e;
            }
        }
    }
    Ok(acc * int(s.sign))
}

/// Evaluates `f` at `key`.
pub fn evaluate(f: &Formula, key: &InvariantKey, lookup: &mut dyn Lookup) -> Result<Rational, EvalError> {
    let (d, a, b, c) = (key.d as i64, key.a as i64, key.b as i64, key.c as i64);
    let abc = [key.a, key.b, key.c];
    let mut value = Rational::zero();
    for o in &f.outer {
        let coeff = (o.coeff)(d, a, b, c);
        if coeff == 0 {
            continue;
        }
        let [x, y, z] = shifted(abc, o.shift);
        value += int(coeff) * lookup.c(o.class, key.d, x, y, z)?;
    }
    let mut scaled = Rational::zero();
    for i in &f.inner {
        let coeff = (i.coeff)(d, a, b, c);
        if coeff == 0 {
            continue;
        }
        let [x, y, z] = shifted(abc, i.shift);
        scaled += int(coeff) * lookup.n(key.d + i.raise, x, y, z)?;
    }
    for s in &f.sums {
        scaled += split_sum(s, key, lookup)?;
    }
    Ok(value + scaled / int((f.scale)(d)))
}

macro_rules! evaluator {
    ($(#[$doc:meta] $name:ident => $eq:ident),* $(,)?) => {
        $(
            #[$doc]
            pub fn $name(key: &InvariantKey, tr: Transcription, lookup: &mut dyn Lookup) -> Result<Rational, EvalError> {
                let f = formula(EquationId::$eq, tr).expect("recursive equation");
                evaluate(&f, key, lookup)
            }
        )*
    };
}

evaluator! {
    /// Four or more points, or three points and a flag.
    eval_1122a => E1122a,
    /// No points and no flags; reaches one degree up.
    eval_1122b => E1122b,
    /// At least one point and two flags.
    eval_1155 => E1155,
    /// Three or more flags.
    eval_1123a => E1123a,
    /// Small point counts with at most one flag.
    eval_1123b => E1123b,
    /// No points and one or two flags; reaches one degree up.
    eval_2245 => E2245,
    /// Cuspidal curves with the cusp on a given point.
    eval_1144 => E1144,
    /// Cuspidal curves with the cusp on a given line.
    eval_1134 => E1134,
    /// Cuspidal curves with a free cusp.
    eval_1133 => E1133,
}

#[cfg(test)]
mod tests {
    use super::*;

    struct Constant;

    impl Lookup for Constant {
        fn n(&mut self, d: i32, a: i32, b: i32, c: i32) -> Result<Rational, EvalError> {
            Ok(if InvariantKey::n(d, a, b, c).is_valid() { int(1) } else { int(0) })
        }
        fn c(&mut self, class: CondClass, d: i32, a: i32, b: i32, c: i32) -> Result<Rational, EvalError> {
            Ok(if InvariantKey::c(class, d, a, b, c).is_valid() { int(1) } else { int(0) })
        }
    }

    #[test]
    fn every_recursion_has_two_sums() {
        for eq in [
            EquationId::E1122a,
            EquationId::E1122b,
            EquationId::E1155,
            EquationId::E1123a,
            EquationId::E1123b,
            EquationId::E2245,
            EquationId::E1144,
            EquationId::E1134,
            EquationId::E1133,
        ] {
            for tr in [Transcription::Literal, Transcription::Repaired] {
                let f = formula(eq, tr).unwrap();
                assert_eq!(f.sums.len(), 2, "{eq}");
                assert_eq!(f.sums[0].class, CondClass::HCheck2);
                assert_eq!(f.sums[1].class, CondClass::HCheck);
            }
        }
        assert!(formula(EquationId::Base, Transcription::Repaired).is_none());
    }

    #[test]
    fn transcriptions_agree_only_on_1144() {
        let key = InvariantKey::c(CondClass::H2, 3, 0, 3, 1);
        let lit = eval_1144(&key, Transcription::Literal, &mut Constant).unwrap();
        let rep = eval_1144(&key, Transcription::Repaired, &mut Constant).unwrap();
        assert_eq!(lit, rep);
        let key = InvariantKey::n(3, 4, 4, 0);
        let lit = eval_1122a(&key, Transcription::Literal, &mut Constant).unwrap();
        let rep = eval_1122a(&key, Transcription::Repaired, &mut Constant).unwrap();
        assert_ne!(lit, rep);
    }

    #[test]
    fn bracket_uses_shifted_binomials() {
        let terms = [t(|d1, d2| 2 * d1 * d2, [2, 0, 0]), t(|d1, _| -d1 * d1, [1, 0, 0])];
        // 2·1·2·C(3,0) - 1·C(3,1) = 4 - 3
        assert_eq!(bracket(&terms, 1, 2, [3, 5, 5], [2, 0, 0]), 1);
        assert_eq!(bracket(&terms, 1, 2, [3, 5, 5], [0, 0, 0]), 0);
    }

    #[test]
    fn transcription_names() {
        assert_eq!("literal".parse::<Transcription>().unwrap(), Transcription::Literal);
        assert_eq!(Transcription::default().to_string(), "repaired");
        assert!("printed".parse::<Transcription>().is_err());
    }
}

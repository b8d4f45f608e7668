use super::equations::{evaluate, formula, Lookup, Transcription};
use super::store::{Claim, Memo, MemoStore};
use super::sync::SyncStore;
use super::{EquationId, EvalError, EvalTrace};
use crate::model::{base_value, e_from_n, CondClass, Family, InvariantKey, InvariantTable};
use crate::rational::Rational;
use num_traits::Zero;
use rayon::prelude::*;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EngineConfig {
    /// Largest requested degree for `N` and `E` keys. Lookups issued while
    /// evaluating may go one degree higher.
    pub max_degree: i32,
    /// Largest degree for `C` keys.
    pub max_cusp_degree: i32,
    pub transcription: Transcription,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig { max_degree: 6, max_cusp_degree: 5, transcription: Transcription::Repaired }
    }
}

/// Picks the recursion for an ordinary characteristic number of degree at
/// least two.
pub fn dispatch(key: &InvariantKey) -> Result<EquationId, EvalError> {
    if key.family != Family::N || !key.is_valid() || key.d < 2 {
        return Err(EvalError::Precondition { key: *key, reason: "dispatch needs a valid N key of degree >= 2".into() });
    }
    let (a, c) = (key.a, key.c);
    let eq = if a >= 4 || (a == 3 && c >= 1) {
        EquationId::E1122a
    } else if a >= 1 && c >= 2 {
        EquationId::E1155
    } else if c >= 3 {
        EquationId::E1123a
    } else if matches!((a, c), (3, 0) | (2, 1) | (1, 1) | (2, 0) | (1, 0)) {
        EquationId::E1123b
    } else if matches!((a, c), (0, 2) | (0, 1)) {
        EquationId::E2245
    } else {
        EquationId::E1122b
    };
    Ok(eq)
}

/// The equation used for any valid memoizable key, base cases included.
pub fn route(key: &InvariantKey) -> Result<EquationId, EvalError> {
    match (key.family, key.d, key.class) {
        (Family::N, 1, _) | (Family::C, 2, _) => Ok(EquationId::Base),
        (Family::N, _, _) => dispatch(key),
        (Family::C, _, Some(CondClass::H2)) => Ok(EquationId::E1144),
        (Family::C, _, Some(CondClass::H)) => Ok(EquationId::E1134),
        (Family::C, _, Some(CondClass::One)) => Ok(EquationId::E1133),
        (Family::C, _, _) => Err(EvalError::NotComputable(*key)),
        (Family::E, _, _) => {
            Err(EvalError::Precondition { key: *key, reason: "E keys are reduced, never memoized".into() })
        }
    }
}

struct Context<'a, M: Memo> {
    memo: &'a mut M,
    config: &'a EngineConfig,
    stack: EvalTrace,
}

impl<M: Memo> Context<'_, M> {
    fn guard(&self, key: &InvariantKey, limit: i32) -> Result<(), EvalError> {
        if key.d > limit {
            return Err(EvalError::DegreeGuardExceeded { key: *key, limit, trace: self.stack.clone() });
        }
        Ok(())
    }

    fn get(&mut self, key: InvariantKey) -> Result<Rational, EvalError> {
        if !key.is_valid() {
            return Ok(Rational::zero());
        }
        match key.family {
            Family::N => self.guard(&key, self.config.max_degree + 1)?,
            Family::C => self.guard(&key, self.config.max_cusp_degree)?,
            Family::E => {
                let s = key.class.expect("E keys carry a class");
                return e_from_n(key.d, key.a, key.b, key.c, s, |d, a, b, c| self.get(InvariantKey::n(d, a, b, c)));
            }
        }
        let eq = route(&key)?;
        match self.memo.claim(&key, eq, &self.stack)? {
            Claim::Ready(v) => return Ok(v),
            Claim::Compute => {}
        }
        let result = match formula(eq, self.config.transcription) {
            None => Ok(base_value(&key).expect("base key")),
            Some(f) => {
                self.stack.0.push((key, eq));
                let r = stacker::maybe_grow(256 * 1024, 8 * 1024 * 1024, || evaluate(&f, &key, self));
                self.stack.0.pop();
                r
            }
        };
        match result {
            Ok(v) => {
                self.memo.finish(key, v.clone());
                Ok(v)
            }
            Err(e) => {
                self.memo.abandon(&key);
                Err(e)
            }
        }
    }
}

impl<M: Memo> Lookup for Context<'_, M> {
    fn n(&mut self, d: i32, a: i32, b: i32, c: i32) -> Result<Rational, EvalError> {
        self.get(InvariantKey::n(d, a, b, c))
    }

    fn c(&mut self, class: CondClass, d: i32, a: i32, b: i32, c: i32) -> Result<Rational, EvalError> {
        self.get(InvariantKey::c(class, d, a, b, c))
    }
}

/// Evaluates `key` against any memo implementation. Invalid keys give
/// zero; requested degrees above the configured limits are rejected.
pub fn compute_in<M: Memo>(key: &InvariantKey, memo: &mut M, config: &EngineConfig) -> Result<Rational, EvalError> {
    let limit = match key.family {
        Family::C => config.max_cusp_degree,
        _ => config.max_degree,
    };
    let mut cx = Context { memo, config, stack: EvalTrace::default() };
    if key.is_valid() {
        cx.guard(key, limit)?;
    }
    cx.get(*key)
}

pub fn compute(key: &InvariantKey, store: &mut MemoStore, config: &EngineConfig) -> Result<Rational, EvalError> {
    compute_in(key, store, config)
}

/// A memo store bundled with its configuration.
#[derive(Debug, Clone, Default)]
pub struct Engine {
    pub store: MemoStore,
    pub config: EngineConfig,
}

impl Engine {
    pub fn new(config: EngineConfig) -> Self {
        Engine { store: MemoStore::new(), config }
    }

    pub fn with_store(store: MemoStore, config: EngineConfig) -> Self {
        Engine { store, config }
    }

    pub fn compute(&mut self, key: &InvariantKey) -> Result<Rational, EvalError> {
        compute(key, &mut self.store, &self.config)
    }

    pub fn n(&mut self, d: i32, a: i32, b: i32, c: i32) -> Result<Rational, EvalError> {
        self.compute(&InvariantKey::n(d, a, b, c))
    }

    /// Every cell of one table, evaluated in canonical order.
    pub fn table(&mut self, family: Family, d: i32, class: Option<CondClass>) -> Result<InvariantTable, EvalError> {
        let mut entries = BTreeMap::new();
        for key in InvariantTable::keys(family, d, class) {
            entries.insert((key.a, key.c), self.compute(&key)?);
        }
        Ok(InvariantTable { family, d, class, entries })
    }

    /// Same as [`Engine::table`], with cells spread over a thread pool that
    /// shares one synchronized store.
    pub fn table_parallel(
        &mut self,
        family: Family,
        d: i32,
        class: Option<CondClass>,
    ) -> Result<InvariantTable, EvalError> {
        let keys = InvariantTable::keys(family, d, class);
        let shared = SyncStore::from_store(std::mem::take(&mut self.store));
        let config = self.config;
        let pool = rayon::ThreadPoolBuilder::new()
            .stack_size(64 * 1024 * 1024)
            .build()
            .expect("thread pool");
        let results: Vec<Result<Rational, EvalError>> = pool.install(|| {
            keys.par_iter()
                .map(|key| {
                    let mut task = shared.task();
                    compute_in(key, &mut task, &config)
                })
                .collect()
        });
        self.store = shared.into_store();
        let mut entries = BTreeMap::new();
        for (key, value) in keys.iter().zip(results) {
            entries.insert((key.a, key.c), value?);
        }
        Ok(InvariantTable { family, d, class, entries })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn n(d: i32, a: i32, b: i32, c: i32) -> InvariantKey {
        InvariantKey::n(d, a, b, c)
    }

    #[test]
    fn dispatch_examples() {
        assert_eq!(dispatch(&n(3, 4, 4, 0)).unwrap(), EquationId::E1122a);
        assert_eq!(dispatch(&n(2, 0, 3, 1)).unwrap(), EquationId::E2245);
        assert_eq!(dispatch(&n(4, 0, 11, 0)).unwrap(), EquationId::E1122b);
        assert_eq!(dispatch(&n(3, 1, 1, 3)).unwrap(), EquationId::E1155);
        assert_eq!(dispatch(&n(3, 0, 0, 4)).unwrap(), EquationId::E1123a);
        assert_eq!(dispatch(&n(2, 1, 2, 1)).unwrap(), EquationId::E1123b);
        assert!(dispatch(&n(1, 2, 0, 0)).is_err());
        assert!(dispatch(&n(2, 3, 3, 0)).is_err());
    }

    #[test]
    fn compute_examples() {
        let mut engine = Engine::default();
        assert_eq!(engine.n(5, 0, 14, 0).unwrap(), int(2150306368));
        assert_eq!(engine.n(1, 0, 2, 0).unwrap(), int(0));
        assert_eq!(engine.n(2, 3, 3, 0).unwrap(), int(0));
        let key = InvariantKey::c(CondClass::One, 5, 13, 0, 0);
        assert_eq!(engine.compute(&key).unwrap(), int(435168));
    }

    #[test]
    fn guards() {
        let config = EngineConfig { max_degree: 3, max_cusp_degree: 3, ..EngineConfig::default() };
        let mut engine = Engine::new(config);
        let err = engine.n(4, 11, 0, 0).unwrap_err();
        assert!(matches!(err, EvalError::DegreeGuardExceeded { limit: 3, .. }), "{err}");
        assert_eq!(engine.n(3, 0, 8, 0).unwrap(), int(400));
        let err = engine.compute(&InvariantKey::c(CondClass::H2, 4, 0, 8, 0)).unwrap_err();
        assert!(matches!(err, EvalError::DegreeGuardExceeded { .. }));
        assert!(engine.store.in_progress() == 0);
    }

    #[test]
    fn dual_cusp_classes_are_not_computable() {
        let mut engine = Engine::default();
        let key = InvariantKey::c(CondClass::HCheck, 3, 0, 6, 0);
        assert_eq!(engine.compute(&key).unwrap_err(), EvalError::NotComputable(key));
        let base = InvariantKey::c(CondClass::H2HCheck, 2, 0, 1, 0);
        assert_eq!(engine.compute(&base).unwrap(), crate::rational::frac(1, 2));
    }

    #[test]
    fn e_keys_reduce_through_n() {
        let mut engine = Engine::default();
        let key = InvariantKey::e(CondClass::HCheck2, 2, 0, 5, 0);
        assert_eq!(engine.compute(&key).unwrap(), int(11));
        assert!(engine.store.entries().iter().all(|(k, _)| k.family != Family::E));
    }

    #[test]
    fn literal_transcription_disagrees_with_tables() {
        let config = EngineConfig { transcription: Transcription::Literal, ..EngineConfig::default() };
        let mut engine = Engine::new(config);
        let v = engine.n(3, 4, 4, 0);
        assert_ne!(v, Ok(int(480)));
    }
}

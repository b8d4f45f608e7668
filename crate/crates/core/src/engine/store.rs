use super::{EvalError, EvalTrace, EquationId};
use crate::model::InvariantKey;
use crate::rational::Rational;
use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Cell {
    InProgress,
    Done(Rational),
}

/// Outcome of asking a memo for a key.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Claim {
    Ready(Rational),
    /// The caller now owns the key and must call `finish` or `abandon`.
    Compute,
}

/// Storage used by the evaluator. `claim` marks a missing key as in
/// progress; re-claiming an in-progress key owned by the same evaluation is
/// a cycle.
pub trait Memo {
    fn claim(&mut self, key: &InvariantKey, eq: EquationId, stack: &EvalTrace) -> Result<Claim, EvalError>;
    fn finish(&mut self, key: InvariantKey, value: Rational);
    fn abandon(&mut self, key: &InvariantKey);
}

pub(crate) fn cycle(key: &InvariantKey, eq: EquationId, stack: &EvalTrace) -> EvalError {
    let mut trace = stack.clone();
    trace.0.push((*key, eq));
    EvalError::CycleDetected(trace)
}

/// Single-owner memo table holding only `N` and `C` keys.
#[derive(Debug, Clone, Default)]
pub struct MemoStore {
    cells: HashMap<InvariantKey, Cell>,
}

impl MemoStore {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, key: &InvariantKey) -> Option<&Rational> {
        match self.cells.get(key) {
            Some(Cell::Done(v)) => Some(v),
            _ => None,
        }
    }

    /// Stores a finished value; used when loading a cache.
    pub fn insert(&mut self, key: InvariantKey, value: Rational) {
        self.cells.insert(key, Cell::Done(value));
    }

    pub fn len(&self) -> usize {
        self.done().count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn done(&self) -> impl Iterator<Item = (&InvariantKey, &Rational)> {
        self.cells.iter().filter_map(|(k, c)| match c {
            Cell::Done(v) => Some((k, v)),
            Cell::InProgress => None,
        })
    }

    /// Finished entries in canonical key order.
    pub fn entries(&self) -> Vec<(InvariantKey, Rational)> {
        let mut out: Vec<_> = self.done().map(|(k, v)| (*k, v.clone())).collect();
        out.sort_by_key(|e| e.0);
        out
    }

    pub fn in_progress(&self) -> usize {
        self.cells.values().filter(|c| matches!(c, Cell::InProgress)).count()
    }
}

impl Memo for MemoStore {
    fn claim(&mut self, key: &InvariantKey, eq: EquationId, stack: &EvalTrace) -> Result<Claim, EvalError> {
        match self.cells.get(key) {
            Some(Cell::Done(v)) => Ok(Claim::Ready(v.clone())),
            Some(Cell::InProgress) => Err(cycle(key, eq, stack)),
            None => {
                self.cells.insert(*key, Cell::InProgress);
                Ok(Claim::Compute)
            }
        }
    }

    fn finish(&mut self, key: InvariantKey, value: Rational) {
        let prev = self.cells.insert(key, Cell::Done(value));
        debug_assert!(matches!(prev, Some(Cell::InProgress)));
    }

    fn abandon(&mut self, key: &InvariantKey) {
        if let Some(Cell::InProgress) = self.cells.get(key) {
            self.cells.remove(key);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn claim_twice_is_a_cycle() {
        let mut store = MemoStore::new();
        let key = InvariantKey::n(2, 0, 5, 0);
        let empty = EvalTrace::default();
        assert_eq!(store.claim(&key, EquationId::E1122b, &empty).unwrap(), Claim::Compute);
        let err = store.claim(&key, EquationId::E1122b, &empty).unwrap_err();
        assert_eq!(err, EvalError::CycleDetected(EvalTrace(vec![(key, EquationId::E1122b)])));
        store.finish(key, int(1));
        assert_eq!(store.claim(&key, EquationId::E1122b, &empty).unwrap(), Claim::Ready(int(1)));
        assert_eq!(store.len(), 1);
    }

    #[test]
    fn abandon_releases_the_key() {
        let mut store = MemoStore::new();
        let key = InvariantKey::n(3, 8, 0, 0);
        let empty = EvalTrace::default();
        store.claim(&key, EquationId::E1122a, &empty).unwrap();
        assert_eq!(store.in_progress(), 1);
        store.abandon(&key);
        assert_eq!(store.in_progress(), 0);
        assert!(store.is_empty());
    }
}

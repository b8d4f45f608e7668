use super::store::{cycle, Claim, Memo, MemoStore};
use super::{EquationId, EvalError, EvalTrace};
use crate::model::InvariantKey;
use crate::rational::Rational;
use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Condvar, Mutex};

#[derive(Debug)]
enum Cell {
    InProgress { owner: u64 },
    Done(Rational),
}

#[derive(Debug, Default)]
struct State {
    cells: HashMap<InvariantKey, Cell>,
    /// Task id to the key it is blocked on.
    waiting: HashMap<u64, InvariantKey>,
}

impl State {
    /// Whether blocking `task` on a key owned by `owner` would close a
    /// wait-for loop.
    fn closes_loop(&self, task: u64, mut owner: u64) -> bool {
        for _ in 0..=self.waiting.len() {
            if owner == task {
                return true;
            }
            let Some(key) = self.waiting.get(&owner) else {
                return false;
            };
            match self.cells.get(key) {
                Some(Cell::InProgress { owner: next }) => owner = *next,
                _ => return false,
            }
        }
        true
    }
}

/// Memo table shared between threads. A key being computed by one task is
/// waited on by the others rather than recomputed.
#[derive(Debug, Default)]
pub struct SyncStore {
    state: Mutex<State>,
    ready: Condvar,
    next_task: AtomicU64,
}

impl SyncStore {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_store(store: MemoStore) -> Self {
        let cells = store.entries().into_iter().map(|(k, v)| (k, Cell::Done(v))).collect();
        SyncStore { state: Mutex::new(State { cells, waiting: HashMap::new() }), ..Self::default() }
    }

    pub fn into_store(self) -> MemoStore {
        let state = self.state.into_inner().unwrap_or_else(|p| p.into_inner());
        let mut store = MemoStore::new();
        for (key, cell) in state.cells {
            if let Cell::Done(v) = cell {
                store.insert(key, v);
            }
        }
        store
    }

    /// A handle for one logical evaluation with its own identity.
    pub fn task(&self) -> TaskMemo<'_> {
        TaskMemo { store: self, id: self.next_task.fetch_add(1, Ordering::Relaxed) }
    }

    pub fn get(&self, key: &InvariantKey) -> Option<Rational> {
        let state = self.state.lock().unwrap_or_else(|p| p.into_inner());
        match state.cells.get(key) {
            Some(Cell::Done(v)) => Some(v.clone()),
            _ => None,
        }
    }
}

pub struct TaskMemo<'a> {
    store: &'a SyncStore,
    id: u64,
}

impl Memo for TaskMemo<'_> {
    fn claim(&mut self, key: &InvariantKey, eq: EquationId, stack: &EvalTrace) -> Result<Claim, EvalError> {
        let mut state = self.store.state.lock().unwrap_or_else(|p| p.into_inner());
        loop {
            match state.cells.get(key) {
                Some(Cell::Done(v)) => return Ok(Claim::Ready(v.clone())),
                Some(Cell::InProgress { owner }) => {
                    if state.closes_loop(self.id, *owner) {
                        return Err(cycle(key, eq, stack));
                    }
                    state.waiting.insert(self.id, *key);
                    state = self.store.ready.wait(state).unwrap_or_else(|p| p.into_inner());
                    state.waiting.remove(&self.id);
                }
                None => {
                    state.cells.insert(*key, Cell::InProgress { owner: self.id });
                    return Ok(Claim::Compute);
                }
            }
        }
    }

    fn finish(&mut self, key: InvariantKey, value: Rational) {
        let mut state = self.store.state.lock().unwrap_or_else(|p| p.into_inner());
        state.cells.insert(key, Cell::Done(value));
        drop(state);
        self.store.ready.notify_all();
    }

    fn abandon(&mut self, key: &InvariantKey) {
        let mut state = self.store.state.lock().unwrap_or_else(|p| p.into_inner());
        if let Some(Cell::InProgress { owner }) = state.cells.get(key) {
            if *owner == self.id {
                state.cells.remove(key);
            }
        }
        drop(state);
        self.store.ready.notify_all();
    }
}

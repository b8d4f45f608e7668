//! Demand-driven evaluation of the characteristic numbers.

mod equations;
mod evaluator;
mod oracle;
mod store;
mod sync;

pub use equations::{
    eval_1122a, eval_1122b, eval_1123a, eval_1123b, eval_1133, eval_1134, eval_1144, eval_1155, eval_2245,
    evaluate, formula, split_sum, EquationId, Formula, Inner, Lookup, Outer, SplitSum, Term, Transcription,
};
pub use evaluator::{compute, compute_in, dispatch, route, Engine, EngineConfig};
pub use oracle::kontsevich_oracle;
pub use store::{Claim, Memo, MemoStore};
pub use sync::{SyncStore, TaskMemo};

use crate::model::InvariantKey;
use std::fmt;

/// Dependency stack at the point an evaluation failed, outermost first.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EvalTrace(pub Vec<(InvariantKey, EquationId)>);

impl fmt::Display for EvalTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("(top level)");
        }
        for (i, (key, eq)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" -> ")?;
            }
            write!(f, "{key} [{eq}]")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("evaluation re-entered a key still in progress: {0}")]
    CycleDetected(EvalTrace),
    #[error("{key} exceeds the degree limit {limit} (raise --max-degree or --max-cusp-degree); trace: {trace}")]
    DegreeGuardExceeded { key: InvariantKey, limit: i32, trace: EvalTrace },
    #[error("no recursion is known for {0}")]
    NotComputable(InvariantKey),
    #[error("{key} cannot be dispatched: {reason}")]
    Precondition { key: InvariantKey, reason: String },
}

impl EvalError {
    pub fn trace(&self) -> Option<&EvalTrace> {
        match self {
            EvalError::CycleDetected(t) => Some(t),
            EvalError::DegreeGuardExceeded { trace, .. } => Some(trace),
            _ => None,
        }
    }
}

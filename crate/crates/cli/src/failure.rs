use std::fmt;

use serde_json::{json, Value};
use wfrec_core::{ParseError, WfError};

/// Why a command did not produce its result, with the exit code each kind
/// maps to.
#[derive(Debug)]
pub enum Failure {
    /// A budget ran out (exit 1).
    Budget(anyhow::Error),
    /// The input is not well-formed text (exit 2).
    Parse(ParseError),
    /// The input parses but violates an invariant (exit 3).
    Input(anyhow::Error),
    /// A bug (exit 1).
    Internal(anyhow::Error),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Budget(_) | Failure::Internal(_) => 1,
            Failure::Parse(_) => 2,
            Failure::Input(_) => 3,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Failure::Budget(_) => "budget",
            Failure::Parse(_) => "parse",
            Failure::Input(_) => "invalid-input",
            Failure::Internal(_) => "internal",
        }
    }

    pub fn to_json(&self) -> Value {
        let mut error = json!({ "kind": self.kind(), "message": self.to_string() });
        if let Failure::Parse(p) = self {
            error["position"] = json!(p.position);
        }
        json!({ "error": error })
    }

    pub fn input(msg: impl fmt::Display) -> Self {
        Failure::Input(anyhow::anyhow!("{msg}"))
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Budget(e) | Failure::Input(e) | Failure::Internal(e) => write!(f, "{e:#}"),
            Failure::Parse(p) => write!(f, "{p}"),
        }
    }
}

impl From<ParseError> for Failure {
    fn from(p: ParseError) -> Self {
        Failure::Parse(p)
    }
}

/// Library errors sorted by what they say about the input.
impl From<WfError> for Failure {
    fn from(e: WfError) -> Self {
        match e {
            WfError::Parse(p) => Failure::Parse(p),
            WfError::BudgetExhausted { .. } | WfError::SearchBudget { .. } | WfError::ValueBudget { .. } => {
                Failure::Budget(e.into())
            }
            other => Failure::Input(other.into()),
        }
    }
}

use serde::Serialize;

/// Result of one mechanical check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail {
        detail: String,
    },
    /// The check's hypotheses do not apply to this input.
    Skipped {
        reason: String,
    },
}

impl Outcome {
    pub fn fail(detail: impl Into<String>) -> Self {
        Outcome::Fail {
            detail: detail.into(),
        }
    }

    pub fn skip(reason: impl Into<String>) -> Self {
        Outcome::Skipped {
            reason: reason.into(),
        }
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, Outcome::Pass)
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Outcome::Fail { .. })
    }

    /// Folds several outcomes: the first failure wins, then pass if any
    /// passed, otherwise the first skip.
    pub fn all(outcomes: impl IntoIterator<Item = Outcome>) -> Outcome {
        let mut passed = false;
        let mut skipped = None;
        for o in outcomes {
            match o {
                Outcome::Fail { .. } => return o,
                Outcome::Pass => passed = true,
                Outcome::Skipped { .. } => {
                    skipped.get_or_insert(o);
                }
            }
        }
        if passed {
            Outcome::Pass
        } else {
            skipped.unwrap_or(Outcome::Pass)
        }
    }
}

impl std::fmt::Display for Outcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Outcome::Pass => write!(f, "pass"),
            Outcome::Fail { detail } => write!(f, "FAIL: {detail}"),
            Outcome::Skipped { reason } => write!(f, "skipped ({reason})"),
        }
    }
}

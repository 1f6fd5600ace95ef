use std::fmt;

use periodica::counting::CountError;
use periodica::fg::FgError;
use periodica::oracle::OracleError;
use periodica::GroupError;

/// Process exit statuses.
pub mod exit {
    pub const OK: i32 = 0;
    pub const CHECK_FAILED: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const LIMIT: i32 = 3;
    pub const INCONCLUSIVE: i32 = 4;
}

/// A failure tagged with the stage that produced it.
#[derive(Debug)]
pub struct CliError {
    pub stage: &'static str,
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn parse(stage: &'static str, message: impl fmt::Display) -> Self {
        Self { stage, code: exit::PARSE, message: message.to_string() }
    }

    pub fn limit(stage: &'static str, message: impl fmt::Display) -> Self {
        Self { stage, code: exit::LIMIT, message: message.to_string() }
    }

    pub fn group(stage: &'static str, e: GroupError) -> Self {
        let code = match e {
            GroupError::OrderLimitExceeded { .. } | GroupError::LatticeLimitExceeded { .. } => exit::LIMIT,
            _ => exit::PARSE,
        };
        Self { stage, code, message: e.to_string() }
    }

    pub fn count(stage: &'static str, e: CountError) -> Self {
        match e {
            CountError::Group(g) => Self::group(stage, g),
            CountError::AlphabetTooSmall { .. }
            | CountError::NotAChain
            | CountError::InvalidChain { .. }
            | CountError::NotPrime { .. } => Self::parse(stage, e),
            _ => Self::limit(stage, e),
        }
    }

    pub fn fg(stage: &'static str, e: FgError) -> Self {
        match e {
            FgError::Group(g) => Self::group(stage, g),
            FgError::CosetLimitExceeded { .. } => Self {
                stage,
                code: exit::INCONCLUSIVE,
                message: format!("{e} (inconclusive: the index may be infinite or the budget too small)"),
            },
            FgError::BudgetExceeded { .. } => Self::limit(stage, e),
            _ => Self::parse(stage, e),
        }
    }

    pub fn oracle(stage: &'static str, e: OracleError) -> Self {
        match e {
            OracleError::BudgetExceeded { .. } => Self::limit(stage, e),
            _ => Self::parse(stage, e),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.stage, self.message)
    }
}

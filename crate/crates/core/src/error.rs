use thiserror::Error;

use crate::field::Derivation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operand must be nonzero")]
    ZeroOperand,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("matrix is not of full row rank{}", fmt_rows(.dependent_rows))]
    RankDeficient { dependent_rows: Vec<usize> },
    #[error("matrix is not unimodular")]
    NotUnimodular,
    #[error("entry ({row}, {col}) has a non-polynomial coefficient; clear denominators first")]
    NotCleared { row: usize, col: usize },
    #[error("derivations differ: {0:?} vs {1:?}")]
    DerivationMismatch(Derivation, Derivation),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("result failed verification: {0}")]
    Verification(String),
}

fn fmt_rows(rows: &[usize]) -> String {
    if rows.is_empty() {
        String::new()
    } else {
        let names: Vec<String> = rows.iter().map(|r| (r + 1).to_string()).collect();
        format!(" (rows {} are left-dependent)", names.join(", "))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

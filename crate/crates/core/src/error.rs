use thiserror::Error;

use crate::products::ProductKind;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("graph must be connected")]
    Disconnected,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{0} distances are not given in closed form here")]
    UnsupportedProduct(ProductKind),

    #[error("invalid family parameters: {0}")]
    Domain(String),

    #[error("brute force limited to 26 non-isolated vertices, got {0}")]
    SizeGuard(usize),

    #[error("product has {size} vertices, ceiling is {limit}")]
    TooLarge { size: usize, limit: usize },

    #[error("solver budget exhausted before optimality was proven")]
    BudgetExhausted,
}

pub type Result<T> = std::result::Result<T, Error>;

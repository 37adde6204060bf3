use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("truncation order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("invalid form: {0}")]
    InvalidForm(String),

    #[error("invalid exclusion family: {0}")]
    InvalidFamily(String),

    #[error("unknown lemma id `{0}`")]
    UnknownLemma(String),

    #[error("unknown identity case `{0}`")]
    UnknownCase(String),

    #[error("bound {bound} is below the required minimum {minimum}")]
    BoundTooSmall { bound: u64, minimum: u64 },

    #[error("search box a<={a_max}, b<={b_max}, c<={c_max} does not contain every known universal triple (need a>=2, b>=10, c>=4)")]
    UndersizedBox { a_max: u64, b_max: u64, c_max: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;

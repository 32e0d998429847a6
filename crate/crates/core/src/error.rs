use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("denominator vanishes at q = {at}")]
    Pole { at: String },

    #[error("variable count mismatch: {left} vs {right}")]
    VariableMismatch { left: usize, right: usize },

    #[error("rows do not form a partition profile: {0}")]
    Shape(String),

    #[error("invalid super semistandard filling: {0}")]
    InvalidTableau(String),

    #[error("skew shape {inner} is not contained in {outer}")]
    Containment { inner: String, outer: String },

    #[error("rewriting paths from {word} disagree on the sign")]
    InconsistentSign { word: String },

    #[error("insertion tableau of {word} is not in its Knuth class")]
    InsertionMismatch { word: String },

    #[error("letter {letter} is outside the {m}|{n} alphabet")]
    AlphabetMismatch { letter: String, m: usize, n: usize },

    #[error("size guard exceeded: {what} = {size} > {bound}")]
    SizeGuardExceeded { what: String, size: u128, bound: u128 },

    #[error("element is not homogeneous in Z2-degree")]
    Inhomogeneous,

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Fails with [`Error::SizeGuardExceeded`] when `base^exp > bound`.
pub(crate) fn guard_power(what: &str, base: usize, exp: usize, bound: u128) -> Result<u128> {
    let mut size: u128 = 1;
    for _ in 0..exp {
        size = size.saturating_mul(base as u128);
    }
    if size > bound {
        return Err(Error::SizeGuardExceeded {
            what: what.to_string(),
            size,
            bound,
        });
    }
    Ok(size)
}

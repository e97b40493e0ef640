use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("Kronecker symbol (a/0) is undefined")]
    ZeroModulus,

    #[error("cannot factor 0")]
    FactorZero,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{0} is not an odd prime power")]
    NotOddPrimePower(u64),

    #[error("field F_{p}^{k} is out of range (need odd prime p, 1 <= k <= 4, p^k <= 2^20)")]
    FieldOutOfRange { p: u64, k: u32 },

    #[error("q = {q} is not the square root of the field size {size}")]
    FrobeniusMismatch { q: u64, size: u64 },

    #[error("m = {0} must be negative and squarefree")]
    InvalidFieldParameter(i64),

    #[error("|D| = {found} exceeds the enumeration bound {bound}")]
    DiscriminantTooLarge { found: u64, bound: u64 },

    #[error("prime {p} does not divide the discriminant {disc}")]
    NotRamified { p: u64, disc: i64 },

    #[error("classes belong to different fields")]
    FieldMismatch,

    #[error("no H^1 class is labelled `{0}`")]
    UnknownLabel(String),

    #[error("invalid group table: {0}")]
    InvalidGroup(String),

    #[error("degree-{0} cochain is not a cocycle")]
    NotCocycle(usize),

    #[error("map is not a group homomorphism")]
    NotHomomorphism,

    #[error("degree {degree} cochains on a group of order {order} are too large")]
    CochainTooLarge { order: usize, degree: usize },

    #[error("consistency check failed: {0}")]
    Inconsistent(String),

    #[error("group of order {order} exceeds the enumeration cap {cap}")]
    GroupTooLarge { order: u64, cap: u64 },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

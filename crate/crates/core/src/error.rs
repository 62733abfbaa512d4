use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("f must be at least 1")]
    ZeroDegree,
    #[error("q = {p}^{f} exceeds the configured bound {bound}")]
    FieldTooLarge { p: u32, f: u32, bound: u32 },
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("zero has no Teichmüller lift")]
    ZeroElement,
    #[error("operands belong to different contexts")]
    ContextMismatch,
    #[error("invalid evaluation modulus: {0}")]
    InvalidModulus(String),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("element does not lie in k = F_q")]
    NotInK,
    #[error("character of l^x with exponent {0} factors through the norm")]
    FactorsThroughNorm(u32),
    #[error("principal series needs two distinct characters")]
    EqualCharacters,
    #[error("label out of range: {0}")]
    LabelOutOfRange(String),
    #[error("malformed weight: {0}")]
    MalformedWeight(String),
    #[error("class function is not in the lattice spanned by the basis")]
    NotInLattice,
    #[error("{0} is not irreducible")]
    NotIrreducible(String),
    #[error("group GL2(F_{0}) too large for brute-force oracle (q <= 9)")]
    GroupTooLarge(u32),
    #[error("principal series types are not discrete series")]
    NotDiscreteSeries,
    #[error("operands live on different groups")]
    GroupMismatch,
    #[error("modular ranks disagree across primes: {0:?}")]
    RankDisagreement(Vec<usize>),
    #[error("schema violation: {0}")]
    Schema(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

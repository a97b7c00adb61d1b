use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed type descriptor `{0}`: expected FAMILY<rank>~<twist>, e.g. A3~1")]
    MalformedSpec(String),
    #[error("unsupported affine type {0}")]
    UnsupportedType(String),
    #[error("malformed scalar `{0}`")]
    MalformedScalar(String),
    #[error("q-exponent denominator would exceed 12 ({0})")]
    ExponentOverflow(String),
    #[error("{0} has no root of the requested order in the 24th cyclotomic group")]
    NotRepresentable(String),
    #[error("node {node} is not in I0 for {ty}")]
    InvalidNode { ty: String, node: u32 },
    #[error("multiplicity must be positive")]
    ZeroMultiplicity,
    #[error("fundamental denominator data unavailable for {ty} pair ({k},{l}); supply an extension table")]
    FundamentalDataUnavailable { ty: String, k: u32, l: u32 },
    #[error("malformed extension table line {line}: {msg}")]
    ExtensionTable { line: usize, msg: String },
    #[error("coefficient is a sum of distinct q-monomials")]
    CoefficientNotMonomial,
    #[error("no closed-form universal coefficient for {0}")]
    UcoefDataUnavailable(String),
    #[error("Pochhammer bases differ: {0} vs {1}")]
    BaseMismatch(String, String),
    #[error("letter `{letter}` is not valid for {ty}")]
    InvalidLetter { ty: String, letter: String },
    #[error("malformed tableau: {0}")]
    MalformedTableau(String),
    #[error("enumeration cap {cap} exceeded")]
    EnumerationCapExceeded { cap: usize },
    #[error("no T-system identity: {0}")]
    UnsupportedIdentity(String),
    #[error("converted identity differs from the printed V-list: {0}")]
    MismatchAgainstPrintedList(String),
    #[error("case condition violated: {0}")]
    CaseConditionViolated(String),
    #[error("alpha_{0} is not a sink")]
    NotASink(usize),
    #[error("{0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

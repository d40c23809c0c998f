use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("{s} does not divide p-1 = {pm1}")]
    NotDivisor { s: u64, pm1: u64 },
    #[error("acting order {0} is not prime to p")]
    NonSemisimple(u64),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("value out of range: {0}")]
    OutOfRange(String),
    #[error("character is not trivial on the subgroup K")]
    CharacterNotTrivialOnK,
    #[error("p = {p} divides q = {q}")]
    BadCharacteristic { q: u64, p: u64 },
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("not a primitive root of unity of order {0}")]
    NotPrimitiveRoot(u64),
    #[error("symbol slot is zero")]
    ZeroSlot,
    #[error("k = {k} is not coprime to m = {m}")]
    NotCoprime { k: i64, m: u64 },
    #[error("b is a p-th power in F (b = d^p with d = {d}); contradiction element has order p")]
    DegenerateNotWitness { d: String, delta: String },
    #[error("precision exhausted: element is zero to its precision")]
    PrecisionExhausted,
    #[error("residue characteristic equals p")]
    ResidueCharP,
    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("group order {0} is not of the form s*p^k with s | p-1")]
    BadOrder(usize),
    #[error("enumeration bound exceeded: {0}")]
    TooLarge(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
}

pub type Result<T> = std::result::Result<T, Error>;

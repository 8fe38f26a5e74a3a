use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table shape: {0}")]
    TableShape(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("unknown kind `{0}`")]
    UnknownKind(String),
    #[error("size guard: {0}")]
    SizeGuard(String),
    #[error("capacity exceeded: more than {0} subsets")]
    CapacityExceeded(usize),
    #[error("axiom failure: {0}")]
    AxiomFailure(String),
    #[error("subset is not a subgroup")]
    NotASubgroup,
    #[error("subset is not closed under the operation")]
    NotClosed,
    #[error("zero scalar in a multiplicative ambient")]
    ZeroScalar,
    #[error("unsupported operand combination: {0}")]
    Unsupported(String),
    #[error("modulus {0} is not prime")]
    NonPrimeModulus(u64),
    #[error("modulus polynomial has degree zero")]
    ZeroDegree,
    #[error("leading coefficient is not invertible mod {0}")]
    NonInvertibleLeading(u64),
    #[error("not an ideal: {0}")]
    NotAnIdeal(String),
    #[error("improper ideal: {0}")]
    ImproperIdeal(String),
    #[error("not a subset: {0}")]
    NotSubset(String),
    #[error("reference subset is not a field")]
    NotAField,
    #[error("unsupported subring `{0}`")]
    UnsupportedSubring(String),
    #[error("class mismatch: {0}")]
    ClassMismatch(String),
    #[error("partial map: {0}")]
    PartialMap(String),
    #[error("budget exhausted: {0}")]
    Budget(String),
    #[error("unknown letter {0}")]
    UnknownLetter(usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("vector not in lattice: {0}")]
    NotInLattice(String),
    #[error("unsupported product rule `{0}`")]
    UnsupportedProduct(String),
}

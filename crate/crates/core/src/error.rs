use thiserror::Error;

/// Errors raised by the library.
///
/// Every variant maps to a stable machine-readable code via [`Error::code`],
/// which the command-line front end reports verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field of order {0} exceeds the supported bound 2^16")]
    FieldTooLarge(u64),
    #[error("modulus is not a monic irreducible polynomial of degree {0}")]
    ReducibleModulus(u32),
    #[error("inversion of zero")]
    InverseOfZero,
    #[error("invalid field element literal `{0}`")]
    InvalidElement(String),
    #[error("{d} does not divide q - 1 = {order}")]
    SubgroupOrder { d: u32, order: u32 },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("variable t{0} has no pure power in the initial ideal; the footprint is infinite")]
    InfiniteFootprint(usize),
    #[error("point {0} appears more than once")]
    DuplicatePoint(usize),
    #[error("the point set is empty")]
    EmptyPointSet,
    #[error("at least two points are required")]
    TooFewPoints,
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("enumeration needs {needed} codewords, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("the zero code has no minimum distance")]
    ZeroCode,
    #[error("monomial {0} is not standard")]
    NonStandardMonomial(String),
    #[error("the largest standard monomial {0} is not essential")]
    NotEssential(String),
    #[error("|Gamma1| + |Gamma2| = {sum} differs from |X| = {points}")]
    PairingCardinality { sum: usize, points: usize },
    #[error("the top exponent {0} lies in Gamma1 + Gamma2")]
    PairingTopInSum(String),
    #[error("scaling vector has a zero entry at position {0}")]
    ZeroScaling(usize),
    #[error("the characteristic {p} does not divide |B_{axis}| = {e}")]
    CharacteristicNotDividing { p: u32, axis: usize, e: u32 },
    #[error("expected a {0} Cartesian set")]
    WrongFamily(&'static str),
    #[error("characteristic must be 2, found {0}")]
    OddCharacteristic(u32),
    #[error("regularity index must be odd, found {0}")]
    EvenRegularity(u32),
    #[error("the duality criterion does not hold for this point set")]
    CriterionFails,
    #[error("degree {d} outside the admissible range {}", range(*lo, *hi))]
    DegreeOutOfRange { d: i64, lo: i64, hi: Option<i64> },
    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}

impl Error {
    /// Stable identifier for machine consumers.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "not_prime",
            Error::ZeroDegree => "zero_degree",
            Error::FieldTooLarge(_) => "field_too_large",
            Error::ReducibleModulus(_) => "reducible_modulus",
            Error::InverseOfZero => "inverse_of_zero",
            Error::InvalidElement(_) => "invalid_element",
            Error::SubgroupOrder { .. } => "subgroup_order",
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::ZeroPolynomial => "zero_polynomial",
            Error::Parse(_) => "parse",
            Error::InfiniteFootprint(_) => "infinite_footprint",
            Error::DuplicatePoint(_) => "duplicate_point",
            Error::EmptyPointSet => "empty_point_set",
            Error::TooFewPoints => "too_few_points",
            Error::NotSquare => "not_square",
            Error::SingularMatrix => "singular_matrix",
            Error::BudgetExceeded { .. } => "budget_exceeded",
            Error::ZeroCode => "zero_code",
            Error::NonStandardMonomial(_) => "non_standard_monomial",
            Error::NotEssential(_) => "not_essential",
            Error::PairingCardinality { .. } => "pairing_cardinality",
            Error::PairingTopInSum(_) => "pairing_top_in_sum",
            Error::ZeroScaling(_) => "zero_scaling",
            Error::CharacteristicNotDividing { .. } => "characteristic_not_dividing",
            Error::WrongFamily(_) => "wrong_family",
            Error::OddCharacteristic(_) => "odd_characteristic",
            Error::EvenRegularity(_) => "even_regularity",
            Error::CriterionFails => "criterion_fails",
            Error::DegreeOutOfRange { .. } => "degree_out_of_range",
            Error::Consistency(_) => "consistency",
        }
    }

    /// True for malformed input, including invalid field descriptors (as
    /// opposed to a well-formed request whose mathematical preconditions fail).
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::NotPrime(_)
                | Error::ZeroDegree
                | Error::FieldTooLarge(_)
                | Error::ReducibleModulus(_)
                | Error::Parse(_)
                | Error::InvalidElement(_)
                | Error::DimensionMismatch { .. }
                | Error::EmptyPointSet
                | Error::DuplicatePoint(_)
        )
    }
}

fn range(lo: i64, hi: Option<i64>) -> String {
    match hi {
        Some(hi) => format!("[{lo}, {hi}]"),
        None => format!("[{lo}, ∞)"),
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

/// Every failure the library can report.
///
/// "No solutions" is never an error for the counting and enumeration
/// entry points; those return `0` or an empty list.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("congruence has no solution")]
    NoSolution,
    #[error("equation has integer solutions but no nonnegative one")]
    NoNonnegative,
    #[error("{a} and {b} are not coprime")]
    NotCoprime { a: i128, b: i128 },
    #[error("{numerator}/{denominator} is exactly halfway between two integers")]
    ExactHalf { numerator: i128, denominator: i128 },
    #[error("arithmetic overflow")]
    Overflow,
    #[error("budget exceeded: needs more than {budget} {unit}")]
    BudgetExceeded { budget: u128, unit: &'static str },
    #[error("combination coefficients sum to zero")]
    ZeroDenominator,
    #[error("combination is not integral")]
    NotIntegral,
    #[error("combination has a negative component: ({}, {}, {})", .0[0], .0[1], .0[2])]
    NegativeComponent([i128; 3]),
}

pub type Result<T> = std::result::Result<T, Error>;

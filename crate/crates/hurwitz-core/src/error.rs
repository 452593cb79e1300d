//! Error type shared by the whole crate.
//!
//! Errors fall into two families that the CLI maps onto exit codes:
//! syntax problems in user input (`is_syntax() == true`, exit 2) and
//! mathematical/domain failures such as degeneracies, reducible curves or
//! unsupported cases (exit 1).

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {offset}: expected {expected}, found {found}")]
    Parse {
        offset: usize,
        expected: String,
        found: String,
    },
    #[error("only the variables z and w are allowed, found '{name}' at byte {offset}")]
    UnknownVariable { name: String, offset: usize },
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("the zero polynomial is not a valid input here")]
    ZeroPolynomial,
    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,
    #[error("the zero function has no order, divisor or residue")]
    ZeroFunction,
    #[error("division by the zero function")]
    DivisionByZeroFunction,
    #[error("{poly} is not irreducible over the rationals")]
    NotIrreducible { poly: String },
    #[error("{poly} has repeated roots")]
    NotSquarefree { poly: String },
    #[error("a place polynomial must have degree >= 1")]
    ConstantPlace,
    #[error("positive degree in w required")]
    ZeroDegreeInW,
    #[error("hyperelliptic models need deg p >= 3")]
    DegreeTooSmall,
    #[error("only odd-degree hyperelliptic models have a single point at infinity")]
    EvenModelUnsupported,
    #[error("branch point is not rational; orders at places of degree >= 2 are unsupported")]
    IrrationalBranchPoint,
    #[error("residues at places of degree >= 2 are unsupported")]
    UnsupportedPlace,
    #[error("the denominator does not split into degree-1 factors over the rationals")]
    NonSplitDenominator,
    #[error("w^{m} = f is reducible: {reason}")]
    ReducibleCurve { m: u32, reason: String },
    #[error("irreducibility indeterminate: f has the -4*h^4 shape with 4 | m; see docs")]
    IndeterminateIrreducibility,
    #[error("sheet count must be >= {min}")]
    SheetCountTooSmall { min: u32 },
    #[error("ramification total V = {v} is odd; no such covering exists")]
    OddRamificationTotal { v: i64 },
    #[error("ramification indices must be positive, got {index}")]
    NonPositiveRamificationIndex { index: i64 },
    #[error("covering data gives negative genus {genus}")]
    NegativeGenus { genus: i64 },
    #[error("discriminant in w is not squarefree; branching is not simple")]
    NonSquarefreeDiscriminant,
    #[error("leading coefficient in w must be constant for the simple-branching count")]
    NonConstantLeadingCoefficient,
    #[error("degenerate parameters: {certificate}")]
    DegenerateParameters { certificate: String },
    #[error("series truncation insufficient to determine the order")]
    TruncationInsufficient,
    #[error("order of a mixed local expansion is ambiguous: v^2 is a rational square")]
    AmbiguousLocalOrder,
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors in the *syntax* of user input, as opposed to
    /// mathematical failures on well-formed input.
    pub fn is_syntax(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. } | Error::UnknownVariable { .. }
        )
    }

    /// CLI exit code: 2 for syntax errors, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        if self.is_syntax() {
            2
        } else {
            1
        }
    }
}

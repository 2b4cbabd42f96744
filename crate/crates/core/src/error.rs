use thiserror::Error;

use crate::root_data::Weight;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("p = {0} is not an odd prime")]
    BadPrime(i64),

    #[error("{what} = {value} outside {lo}..={hi}")]
    OutOfRange { what: &'static str, value: i64, lo: i64, hi: i64 },

    #[error("shape mismatch: expected {expected}, got {got}")]
    Shape { expected: String, got: String },

    #[error("invalid root: {0}")]
    InvalidRoot(String),

    #[error("invalid odd reflection: {0}")]
    InvalidReflection(String),

    #[error("weight {0} is not dominant")]
    NotDominant(Weight),

    #[error("weight {lambda} is atypical: (lambda+rho, beta_{index}) = 0{}", hint_text(.hint))]
    Atypical { lambda: Weight, index: usize, hint: Option<Box<SteinbergHint>> },

    #[error("weight {0} is already typical")]
    AlreadyTypical(Weight),

    #[error("reduction unavailable: {0}")]
    ReductionUnavailable(String),

    #[error("term not defined: {0}")]
    NotApplicable(String),

    #[error("singular matrix: {0}")]
    Singular(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("parse error: {0}")]
    Parse(String),
}

/// Carried by atypicality errors so callers can retry on the reduced weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SteinbergHint {
    pub lambda: Weight,
    pub varpi: Weight,
    pub l: u32,
}

fn hint_text(hint: &Option<Box<SteinbergHint>>) -> String {
    match hint {
        Some(h) => format!(
            "; Steinberg reduction: lambda = {} (varpi = {}, l = {})",
            h.lambda, h.varpi, h.l
        ),
        None => String::new(),
    }
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::Atypical { .. } | Error::AlreadyTypical(_) => "E_ATYPICAL",
            Error::NotDominant(_) => "E_NOT_DOMINANT",
            Error::BadPrime(_) => "E_BAD_PRIME",
            _ => "E_RANGE",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

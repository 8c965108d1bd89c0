use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("exponent {exponent} appears more than once")]
    DuplicateExponent { exponent: usize },
    #[error("exponent {exponent} exceeds series order {order}")]
    ExponentOutOfRange { exponent: usize, order: usize },
    #[error("constant coefficient {0} is not a unit")]
    NotAUnit(String),
    #[error("pochhammer step must be positive")]
    ZeroStep,
    #[error("residue {a} is not in 1..{m}")]
    InvalidResidue { a: u64, m: u64 },
    #[error("parameter nu must be at least 1")]
    NuTooSmall,
    #[error("missing parameter `{0}`")]
    MissingParam(&'static str),
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("partition parts must be positive")]
    ZeroPart,
    #[error("cannot parse `{0}`")]
    Parse(String),
    #[error("parts of {0} are not all in one residue class")]
    MixedResidues(String),
    #[error("residue {a} mod {m} is not compatible with carrier `{carrier}`")]
    IncompatibleCarrier {
        a: u64,
        m: u64,
        carrier: &'static str,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

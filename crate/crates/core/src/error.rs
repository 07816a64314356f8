use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{what} = {value} exceeds the limit {limit}")]
    TooLarge { what: &'static str, value: u64, limit: u64 },
    #[error("the norm is undefined at zero")]
    ZeroInput,
    #[error("degenerate input: {0}")]
    DegenerateInput(&'static str),
    #[error("{r} does not divide {order}")]
    NotDivisor { r: u64, order: u64 },
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("codegree needs two distinct vertices, got {0} twice")]
    SameVertex(usize),
    #[error("coloring is not proper: edge {0}-{1} is monochromatic")]
    ImproperColoring(usize, usize),
    #[error("pattern copy search exhausted its budget of {0} node expansions")]
    PatternTooDense(u64),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

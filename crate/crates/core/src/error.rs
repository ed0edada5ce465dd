use thiserror::Error;

use crate::model::ConsistencyReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("model has no vacuum charge")]
    MissingVacuum,

    #[error("fusion {a} x {b} -> {c} has multiplicity {multiplicity}; only multiplicity-free models are supported")]
    NonMultiplicityFree {
        a: String,
        b: String,
        c: String,
        multiplicity: u32,
    },

    #[error("model fails consistency checks: {0}")]
    ConsistencyViolation(Box<ConsistencyReport>),

    #[error("invalid model description: {0}")]
    InvalidModel(String),

    #[error("unknown charge `{0}`")]
    UnknownCharge(String),

    #[error("connecting charge {e} is not in {a} x dual({a_prime})")]
    ForbiddenConnectingCharge { a: String, a_prime: String, e: String },

    #[error(
        "density-matrix entry ({row}, {col}) admits {count} connecting charges; the general F-move is not supported"
    )]
    UnsupportedBasisChange { row: usize, col: usize, count: usize },

    #[error("conditioning on an outcome of probability {0:e}")]
    ZeroProbability(f64),

    #[error(
        "classes {first:?} and {second:?} share transmission probability {p}; outcome statistics cannot separate them"
    )]
    DegenerateTuning {
        first: Vec<String>,
        second: Vec<String>,
        p: f64,
    },

    #[error("cannot slide over omega_{0}: charge is not abelian")]
    NonAbelianSlide(String),

    #[error("invalid solid-torus core `{0}` for this boundary")]
    InvalidCore(String),

    #[error("invalid density matrix: {0}")]
    InvalidState(String),

    #[error("beam splitter {splitter}: |t|^2 + |r|^2 = {norm}, expected 1")]
    UnitarityViolation { splitter: u8, norm: f64 },

    #[error("configuration has twists ({l}, {r}); the untwisted channel requires (0, 0)")]
    TwistedConfig { l: i32, r: i32 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("usage: {0}")]
    Usage(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

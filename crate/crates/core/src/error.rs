use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at column {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("word is trivial after cyclic reduction")]
    TrivialClass,

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("census for si = {k} is incomplete: {witness} has si = {si} but length {len} > cap {cap}")]
    CapUnverified {
        k: usize,
        cap: usize,
        witness: String,
        si: usize,
        len: usize,
    },

    #[error("cyclic order {0} does not bound a pair of pants")]
    InvalidRibbon(String),

    #[error("element is not hyperbolic")]
    NotHyperbolic,

    #[error("elliptic element with trace {0} (representation is broken)")]
    EllipticElement(String),

    #[error("geodesics share an endpoint")]
    SharedEndpoint,

    #[error("oracle did not converge by radius {max_radius} (counts {counts:?})")]
    NotConverged { max_radius: usize, counts: Vec<usize> },

    #[error("ordered crossing count {0} is odd")]
    OddCount(usize),
}

use thiserror::Error;

use crate::ratio::Rational;

/// Everything that can go wrong across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("operation requires a graph with at least one vertex")]
    EmptyGraph,

    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),

    #[error("coverage target {target} exceeds edge count {m}")]
    TargetExceedsEdges { target: usize, m: usize },

    #[error("graph is not a forest")]
    NotAForest,

    #[error("degree hypothesis violated: min degree on X is {min_x}, max degree on Y is {max_y}")]
    DegreeHypothesis { min_x: usize, max_y: usize },

    #[error("fraction {0} must lie strictly between 0 and 1")]
    RhoOutOfRange(Rational),

    #[error("factor {value} must lie strictly between {low} and {high}")]
    FactorOutOfRange {
        value: Rational,
        low: Rational,
        high: Rational,
    },

    #[error("average threshold must be positive, got {0}")]
    NonPositiveThreshold(Rational),

    #[error("threshold list has {got} entries, graph has {n} vertices")]
    ThresholdCount { got: usize, n: usize },

    #[error("threshold {threshold} at vertex {vertex} exceeds its degree {degree}")]
    ThresholdExceedsDegree {
        vertex: usize,
        threshold: usize,
        degree: usize,
    },

    #[error("infeasible average threshold {t}: n*t = {demand} exceeds 2m = {capacity}")]
    Infeasible {
        t: Rational,
        demand: Rational,
        capacity: usize,
    },

    #[error("instance of order {n} exceeds size guard {bound}")]
    SizeGuard { n: usize, bound: usize },

    #[error("budget {k} exceeds graph order {n}")]
    BudgetExceedsOrder { k: usize, n: usize },

    #[error("gadget construction failed: {0}")]
    GadgetConstruction(String),

    #[error("invalid rational {0:?}: expected an integer or p/q")]
    BadRational(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors raised across the crate.
///
/// Variants map one-to-one onto the failure modes of the individual
/// operations; callers usually match on a handful of them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge ({0}, {0}) is a loop")]
    LoopEdge(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("graph order {0} exceeds the supported maximum of {max}", max = crate::graph::MAX_ORDER)]
    OrderTooLarge(usize),
    #[error("vertex list {0:?} is not an induced cycle of the graph")]
    NotACycle(Vec<usize>),
    #[error("explicit balance rule has no value for induced cycle {0:?}")]
    RuleIncomplete(Vec<usize>),
    #[error("edge set is not a maximal acyclic subgraph: {0}")]
    NotATree(String),
    #[error("no balancing labelling exists")]
    NotBalanceable,
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
    #[error("signed graphs are defined over different graphs")]
    GraphMismatch,
    #[error("explicit rules do not restrict coherently to subgraphs")]
    UnsupportedRule,
    #[error("labelling has {got} entries, graph has {expected} edges")]
    LabelCount { expected: usize, got: usize },
    #[error("label {0} is not in Z_2")]
    InvalidLabel(u8),
    #[error("invalid angle {0:?}")]
    InvalidAngle(String),
    #[error("point {0} occurs twice")]
    DuplicatePoint(String),
    #[error("no grid embedding with denominator at most {0}")]
    WitnessSearchExhausted(u64),
    #[error("points {0} and {1} are exactly a third of a turn apart")]
    DegenerateConfiguration(String, String),
    #[error("points {0} and {1} are not adjacent in the complement of C3")]
    NotAdjacent(String, String),
    #[error("graph contains an independent set of size three: {0:?}")]
    NotIndependenceTwo(Vec<usize>),
    #[error("target triangle has label sum 1")]
    InconsistentTriangle,
    #[error("host points do not realize the target pattern: {0}")]
    HostMismatch(String),
    #[error("composition is not associative at atoms ({0}, {1}, {2})")]
    NotAssociative(String, String, String),
    #[error("allowed triples are not closed under the Peircean transforms at ({0}, {1}, {2})")]
    NotPeirceanClosed(String, String, String),
    #[error("identity law fails for atom {0}")]
    BadIdentity(String),
    #[error("converse is not an involution fixing the identity at atom {0}")]
    BadConverse(String),
    #[error("unknown atom {0:?}")]
    UnknownAtom(String),
    #[error("algebra has {0} atoms; at most 32 are supported")]
    TooManyAtoms(usize),
    #[error("constraint on ({0}, {1}) is not a single atom")]
    NotAtomic(usize, usize),
    #[error("identity atom on the off-diagonal pair ({0}, {1})")]
    IdOffDiagonal(usize, usize),
    #[error("operation is only defined for the relation algebra 56_65")]
    UnsupportedAlgebra,
    #[error("bad circular clique parameters p = {p}, q = {q}")]
    BadParameters { p: usize, q: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("validation error: {0}")]
    Validation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

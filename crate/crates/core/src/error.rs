use thiserror::Error;

/// Structural problems found while assembling a [`crate::WeightedDualGraph`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has no vertices")]
    Empty,
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("edge endpoint `{0}` is not a declared vertex")]
    UnknownEndpoint(String),
    #[error("self-loop at vertex `{0}`")]
    SelfLoop(String),
    #[error("duplicate edge `{0}` -- `{1}`")]
    DuplicateEdge(String, String),
    #[error("graph is disconnected: `{0}` is not reachable from `{1}`")]
    Disconnected(String, String),
    #[error("vertex `{0}` has non-positive weight {1} (self-intersection must be negative)")]
    NonPositiveWeight(String, i64),
}

impl GraphError {
    pub fn code(&self) -> &'static str {
        match self {
            GraphError::Empty => "empty_graph",
            GraphError::DuplicateVertex(_) => "duplicate_vertex",
            GraphError::UnknownEndpoint(_) => "unknown_endpoint",
            GraphError::SelfLoop(_) => "self_loop",
            GraphError::DuplicateEdge(..) => "duplicate_edge",
            GraphError::Disconnected(..) => "disconnected",
            GraphError::NonPositiveWeight(..) => "non_positive_weight",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("vertex index {0} out of range")]
    VertexOutOfRange(usize),
    #[error("intersection form is not negative definite")]
    NotNegativeDefinite,
    #[error("graph is not the resolution graph of a rational singularity")]
    NotRational,
    #[error("graph is not a minimal resolution (some curve has self-intersection -1)")]
    NotMinimalResolution,
    #[error("cycle is not anti-nef")]
    NotAntiNef,
    #[error("cycle is not effective")]
    NotEffective,
    #[error("cycle is zero")]
    ZeroCycle,
    #[error("Euler characteristic is not an integer")]
    NonIntegralResult,
    #[error("graph is Gorenstein (all curves are (-2)-curves)")]
    Gorenstein,
    #[error("graph is not star-shaped: {0}")]
    NotStarShaped(String),
    #[error("continued-fraction entry {0} is below 2")]
    WeightBelowTwo(i64),
    #[error("branch has no curves")]
    EmptyBranch,
    #[error("{0}/{1} is not in lowest terms")]
    NotCoprime(i64, i64),
    #[error("{0}/{1} violates 0 < p < q")]
    OutOfRange(i64, i64),
    #[error("divisor degree {0} is not positive")]
    DegreeNotPositive(String),
    #[error("graph is not a quotient (log-terminal) singularity")]
    NotQuotient,
    #[error("graph is a chain (cyclic quotient singularity)")]
    CyclicQuotient,
    #[error("requested {requested} vertices exceeds the cap of {cap}")]
    CapExceeded { requested: usize, cap: usize },
    #[error("internal disagreement: {0}")]
    InternalDisagreement(String),
    #[error("nearly Gorenstein criteria disagree: {0}")]
    CriterionDisagreement(String),
    #[error("log-terminal cross-check mismatch: {0}")]
    CrossCheckMismatch(String),
    #[error("colength formula mismatch: {0}")]
    FormulaMismatch(String),
}

impl Error {
    /// Stable machine-readable identifier, used in JSON error objects.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Graph(g) => g.code(),
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::VertexOutOfRange(_) => "vertex_out_of_range",
            Error::NotNegativeDefinite => "not_negative_definite",
            Error::NotRational => "not_rational",
            Error::NotMinimalResolution => "not_minimal_resolution",
            Error::NotAntiNef => "not_anti_nef",
            Error::NotEffective => "not_effective",
            Error::ZeroCycle => "zero_cycle",
            Error::NonIntegralResult => "non_integral_result",
            Error::Gorenstein => "gorenstein",
            Error::NotStarShaped(_) => "not_star_shaped",
            Error::WeightBelowTwo(_) => "weight_below_two",
            Error::EmptyBranch => "empty_branch",
            Error::NotCoprime(..) => "not_coprime",
            Error::OutOfRange(..) => "out_of_range",
            Error::DegreeNotPositive(_) => "degree_not_positive",
            Error::NotQuotient => "not_quotient",
            Error::CyclicQuotient => "cyclic_quotient",
            Error::CapExceeded { .. } => "cap_exceeded",
            Error::InternalDisagreement(_) => "internal_disagreement",
            Error::CriterionDisagreement(_) => "criterion_disagreement",
            Error::CrossCheckMismatch(_) => "cross_check_mismatch",
            Error::FormulaMismatch(_) => "formula_mismatch",
        }
    }

    /// True for errors that can only come from a bug: two independent
    /// computations of the same invariant disagreed.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::InternalDisagreement(_)
                | Error::CriterionDisagreement(_)
                | Error::CrossCheckMismatch(_)
                | Error::FormulaMismatch(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

/// Errors produced while parsing diagram, braid, or corpus text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("validation error: {0}")]
    Invalid(#[from] ValidateError),
}

/// Violations of the diagram invariants, named after the invariant they break.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidateError {
    #[error("duplicate edge label {label}")]
    DuplicateEdgeLabel { label: usize },
    #[error("edge label {label} out of range 1..={max}")]
    LabelOutOfRange { label: usize, max: usize },
    #[error("edge label {label} appears {count} times, expected 2")]
    LabelCount { label: usize, count: usize },
    #[error("edge {label} has inconsistent orientation (arrives or departs twice)")]
    OrientationClash { label: usize },
    #[error("cannot orient over-strand at crossing {crossing}")]
    AmbiguousOverStrand { crossing: usize },
    #[error("edge labels are not consecutive along orientation (component starting at {start})")]
    NonConsecutiveLabels { start: usize },
    #[error("sign mismatch at chord {chord}")]
    ChordSignMismatch { chord: usize },
    #[error("chord {chord} appears {count} times, expected once as O and once as U")]
    ChordCount { chord: usize, count: usize },
    #[error("code is not realizable as a plane diagram (genus check failed)")]
    NotPlanar,
    #[error("stored sign at crossing {crossing} disagrees with recomputation")]
    SignMismatch { crossing: usize },
    #[error("empty diagram (no crossings and no free loops)")]
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OpError {
    #[error("no crossing with id {0}")]
    BadCrossing(usize),
    #[error("no edge with label {0}")]
    BadEdge(usize),
    #[error("operation requires a knot (1 component), diagram has {0}")]
    NotAKnot(usize),
    #[error("operation requires exactly 2 components, diagram has {0}")]
    NotTwoComponents(usize),
    #[error("closure of braid word has {0} components, expected 1")]
    MultiComponentClosure(usize),
    #[error("braid letter {letter} out of range for {strands} strands")]
    BadBraidLetter { letter: i64, strands: usize },
    #[error("band generator index {index} out of range for {strands} strands")]
    BadBandIndex { index: usize, strands: usize },
    #[error("site is not coboxable: {0}")]
    NotCoboxable(String),
    #[error("tangle has {tangle} strands but site has {site} edges")]
    StrandCountMismatch { tangle: usize, site: usize },
    #[error("site orientation incompatible with tangle strands")]
    OrientationMismatch,
    #[error("illegal move site: {0}")]
    IllegalMove(String),
    #[error("crossing count {n} exceeds bracket cap {cap}")]
    BracketCapExceeded { n: usize, cap: usize },
    #[error("search budget exceeded ({0} nodes)")]
    BudgetExceeded(u64),
    #[error("rebuilt diagram failed validation: {0}")]
    Rebuild(#[from] ValidateError),
    #[error("unsupported order n={0} (supported: 2, 3, 4)")]
    UnsupportedOrder(usize),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

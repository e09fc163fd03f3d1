use thiserror::Error;

/// Violations of the combinatorial invariants of partitions, tableaux and patterns.
///
/// Messages name the broken invariant so callers can surface them verbatim.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum TableauError {
    #[error("invariant: weakly decreasing parts ({0:?})")]
    NotAPartition(Vec<u32>),
    #[error("invariant: weakly increasing rows (row {row})")]
    RowNotWeaklyIncreasing { row: usize },
    #[error("invariant: strictly increasing rows (row {row})")]
    RowNotStrictlyIncreasing { row: usize },
    #[error("invariant: strictly increasing columns (column {col})")]
    ColumnNotStrictlyIncreasing { col: usize },
    #[error("invariant: letters in 1..={d} (found {letter})")]
    LetterOutOfRange { letter: u32, d: u8 },
    #[error("invariant: letters from the alphabet for d = {d} (found {token:?})")]
    NotInAlphabet { token: String, d: u8 },
    #[error("invariant: at most {d} rows (found {rows})")]
    TooManyRows { rows: usize, d: u8 },
    #[error("invariant: entries are 1..={n} each used once")]
    NotBijective { n: usize },
    #[error("invariant: in-betweenness at m({i},{j})")]
    InBetweenness { i: usize, j: usize },
    #[error("invariant: level {level} holds {level} entries")]
    LevelLength { level: usize },
    #[error("invariant: single-box growth step at position {step}")]
    NotSingleBoxStep { step: usize },
    #[error("invariant: shape mismatch (expected {expected}, found {found})")]
    ShapeMismatch { expected: String, found: String },
    #[error("invariant: dimension d >= 1")]
    ZeroDimension,
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum AmplitudeError {
    #[error("patterns are not joined by a transition: {0}")]
    NotAnEdge(String),
    #[error("pattern rules apply only to d = 2 (got d = {0})")]
    WrongDimension(usize),
    #[error("partial hook index ({i},{j}) out of range for d = {d}")]
    HookIndex { i: usize, j: usize, d: usize },
    #[error("zero denominator in transition amplitude")]
    DivisionByZero,
    #[error("amplitude engines disagree: louck {louck}, pattern {pattern}")]
    EngineMismatch { louck: String, pattern: String },
    #[error("transition is not present in the precomputed graph")]
    NotInGraph,
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum TransformError {
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error(transparent)]
    Amplitude(#[from] AmplitudeError),
    #[error("letter {letter} outside 1..={d}")]
    BadLetter { letter: u32, d: u8 },
    #[error("no qudit left to consume")]
    EmptySuffix,
    #[error("Schur-Weyl register is already empty")]
    EmptyRegister,
    #[error("inconsistent register sizes: {0}")]
    Inconsistent(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("d^n = {size} exceeds the size bound {bound}")]
    SizeBound { size: u128, bound: usize },
}

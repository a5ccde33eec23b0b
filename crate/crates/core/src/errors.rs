//! Error types shared across the checker.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    // kernel
    #[error("unbound variable #{0}")]
    UnboundVariable(usize),
    #[error("unknown constant `{0}`")]
    UnknownConstant(String),
    #[error("not a function: `{0}` has type `{1}`")]
    NotAFunction(String, String),
    #[error("not a pair: `{0}` has type `{1}`")]
    NotAPair(String, String),
    #[error("type mismatch:\n  expected: {expected}\n  found:    {found}")]
    TypeMismatch { expected: String, found: String },
    #[error("type of `{0}` cannot be inferred")]
    NotInferable(String),
    #[error("fuel exhausted after {0} head steps (bad rule set? raise --fuel)")]
    FuelExhausted(u64),
    #[error("metavariable encountered in kernel term")]
    MetaInKernel,

    // rewrite engine
    #[error("nonlinear pattern: rule variable `{0}` has multiple unforced occurrences")]
    NonlinearPattern(String),
    #[error("higher-order pattern: rule variable `{0}` occurs in head position")]
    HigherOrderPattern(String),
    #[error("ill-typed rule: {0}")]
    IllTypedRule(String),
    #[error("rewrite head `{0}` is not a declared postulate or definition")]
    HeadNotDeclared(String),
    #[error("rule variable `{0}` is used in the replacement but has no first-order binding occurrence")]
    UnboundRuleVar(String),
    #[error("termination check rejected: {0}")]
    TerminationRejected(String),

    // elaborator
    #[error("unsolved metavariable {0}{1}")]
    UnsolvedMeta(usize, String),
    #[error("cannot unify `{0}` with `{1}`")]
    UnificationFailure(String, String),
    #[error("occurs check: meta ?{0} would be cyclic")]
    OccursCheck(usize),
    #[error("coherence search exhausted depth limit {0}")]
    DepthExhausted(usize),
    #[error("no solution for coherence goal `{0}`")]
    NoSolution(String),
    #[error("not a Coh goal: `{0}`")]
    NotACohGoal(String),

    // surface / session
    #[error("parse error at {line}:{col}: expected {expected}")]
    ParseError { line: usize, col: usize, expected: String },
    #[error("duplicate declaration `{0}`")]
    DuplicateDecl(String),
    #[error("{0}: {1}")]
    InDecl(String, Box<Error>),
    #[error("io error: {0}")]
    Io(String),
    #[error("{0}")]
    Other(String),

    // set model
    #[error("carrier size {0} exceeds resource guard")]
    ResourceGuard(usize),
    #[error("bijection failure: {0}")]
    BijectionFailure(String),
}

impl Error {
    pub fn in_decl(self, name: &str) -> Error {
        Error::InDecl(name.to_string(), Box::new(self))
    }
}

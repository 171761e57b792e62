//! A logic programming engine for disjunctive rules over timed facts.
//!
//! Programs are sets of if-then rules whose atoms carry a time argument in
//! the first position. Rule bodies are evaluated strictly left to right and
//! may contain, besides ordinary atoms: comprehension atoms that select the
//! instances closest in time to a bound, built-in calls over ground terms,
//! the binding special forms `LET`, `CHOOSE`, `MATCH` and `COLLECT`, and
//! `NOT` blocks with implicitly existential extra variables.
//!
//! Heads are disjunctions of atoms or the integrity constraint `FAIL`.
//! Disjunctions are resolved under the possible model semantics: every
//! non-empty subset of a fired head becomes its own model candidate.
//! Acceptance of a program requires range-restriction and stratification
//! by time and by predicates, checked in [`stratify`].
//!
//! The crate is organised as a pipeline:
//!
//! * [`term`], [`atom`], [`rule`], [`program`] — the data model;
//! * [`parser`] — concrete syntax, CSV fact ingestion, canonical printing;
//! * [`stratify`] — call graph, strata, range-restriction and SBTP checks;
//! * [`matcher`] — body matcher computation against an interpretation;
//! * [`engine`] — path-based saturation to the set of possible models.

pub mod atom;
pub mod engine;
pub mod eval;
pub mod matcher;
pub mod parser;
pub mod program;
pub mod rule;
pub mod stratify;
pub mod subst;
pub mod term;

pub use atom::{Atom, GroundAtom, Interpretation, Pred};
pub use engine::{saturate, Limits, ModelSet, Saturation, SplitOutcome};
pub use eval::{eval_ground, EvalError};
pub use matcher::{holds_not, match_body, MatchStream};
pub use parser::{parse_facts_csv, parse_ground_atom, parse_program, ColumnSort, ParseError};
pub use program::SourceProgram;
pub use rule::{Body, BodyLiteral, Comprehension, Head, Rule, TimeCmp};
pub use stratify::{
    build_call_graph, check_program, check_range_restricted, check_sbtp, compute_strata,
    CallGraph, CheckedProgram, StratMode, Stratification, Violation,
};
pub use subst::Subst;
pub use term::{TimePoint, TimeTerm, Term, Value};

//! Core engine for zero-anaphora resolution in Japanese complex sentences.
//!
//! The pipeline represented here is purely algorithmic and allocation-only
//! (`no_std` + `alloc`): clause segmentation over a romanized morpheme
//! stream, predicate analysis, feature-structure semantics with a token
//! environment supporting identity and "not token identical" constraints,
//! the subordinate/main constraint tables bridged by the *observer* and
//! *motivated* pragmatic roles, and exhaustive enumeration of consistent
//! interpretations over a discourse context.
//!
//! File IO, the CLI, and report formats live in the companion `zeroref-cli`
//! crate; everything in this crate works on in-memory strings and values.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod fs;
pub mod lexicon;
pub mod morph;
pub mod resolve;
pub mod rules;
pub mod segment;
pub mod sem;

pub use fs::{unify, Fs, Token, TokenEnv, UnifyError};
pub use lexicon::{LexEntry, Lexicon, MainClass, Pos, Role};
pub use morph::{classify_conjunct, ClauseLinkType, PredicateAnalysis};
pub use resolve::{
    brute_force_oracle, enumerate_interpretations, Analysis, Analyzer, Interpretation,
};
pub use rules::{ConstraintRule, RuleName, RuleTable};
pub use segment::ClauseSplit;
pub use sem::{ClauseSem, DiscourseContext};

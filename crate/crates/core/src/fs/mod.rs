//! Feature structures with reentrant token variables.
//!
//! A [`Fs`] is a rooted DAG of feature-value pairs whose leaves are either
//! atoms (entity names, relation names, tense values) or [`Token`]
//! variables. Token identity, "not token identical" pairs, and
//! token-to-entity bindings live outside the structures in a [`TokenEnv`],
//! so unification never mutates its inputs and alternative constraint
//! branches can fork the environment cheaply.

mod env;
mod node;
mod render;
mod unify;

pub use env::{EnvConflict, Fact, Token, TokenEnv};
pub use node::{feat, Fs, Node};
pub use render::render;
pub use unify::{unify, UnifyError};

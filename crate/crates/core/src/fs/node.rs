use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;

use super::env::Token;

/// Well-known feature names. Role-bearing features carry token values;
/// `soa` values are complex; `rel` and `tense` values are atoms.
pub mod feat {
    pub const REL: &str = "rel";
    pub const OBSERVER: &str = "observer";
    pub const SOA: &str = "soa";
    pub const AGENT: &str = "agent";
    pub const EXPERIENCER: &str = "experiencer";
    pub const PATIENT: &str = "patient";
    pub const AFFECTED: &str = "affected";
    pub const OBJECT: &str = "object";
    pub const MOTIVATED: &str = "motivated";
    pub const TENSE: &str = "tense";
    /// Main proposition of a complex sentence.
    pub const MATRIX: &str = "matrix";
    /// Subordinate-clause wrapper of a complex sentence.
    pub const SUB: &str = "sub";
    /// Conjunct VP (te/tutu/nagara without perfective i).
    pub const CONJ_VP: &str = "conj-vp";
    /// Reserved for syntactic HEAD content; never populated.
    pub const SYN: &str = "syn";
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Node {
    Atom(String),
    Token(Token),
    Complex(BTreeMap<String, Fs>),
}

/// A feature structure: an immutable, shareable node. Reentrancy is carried
/// by token variables (the same [`Token`] appearing at several paths) and by
/// shared subtrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fs(Arc<Node>);

impl Fs {
    pub fn atom(value: &str) -> Self {
        Fs(Arc::new(Node::Atom(value.to_string())))
    }

    pub fn token(t: Token) -> Self {
        Fs(Arc::new(Node::Token(t)))
    }

    pub fn complex<I>(features: I) -> Self
    where
        I: IntoIterator<Item = (String, Fs)>,
    {
        Fs(Arc::new(Node::Complex(features.into_iter().collect())))
    }

    /// The empty complex structure, the unit of unification.
    pub fn empty() -> Self {
        Fs(Arc::new(Node::Complex(BTreeMap::new())))
    }

    pub fn node(&self) -> &Node {
        &self.0
    }

    pub fn as_atom(&self) -> Option<&str> {
        match self.node() {
            Node::Atom(s) => Some(s),
            _ => None,
        }
    }

    pub fn as_token(&self) -> Option<Token> {
        match self.node() {
            Node::Token(t) => Some(*t),
            _ => None,
        }
    }

    pub fn features(&self) -> Option<&BTreeMap<String, Fs>> {
        match self.node() {
            Node::Complex(m) => Some(m),
            _ => None,
        }
    }

    pub fn is_empty_complex(&self) -> bool {
        matches!(self.node(), Node::Complex(m) if m.is_empty())
    }

    /// Value at a feature of a complex node.
    pub fn get(&self, feature: &str) -> Option<&Fs> {
        self.features().and_then(|m| m.get(feature))
    }

    /// Copy of this complex node with one feature added or replaced.
    pub fn with_feature(&self, feature: &str, value: Fs) -> Fs {
        let mut m = self.features().cloned().unwrap_or_default();
        m.insert(feature.to_string(), value);
        Fs(Arc::new(Node::Complex(m)))
    }

    /// Value at a feature path like `["sub", "soa", "observer"]`.
    pub fn get_path(&self, path: &[&str]) -> Option<&Fs> {
        let mut cur = self;
        for f in path {
            cur = cur.get(f)?;
        }
        Some(cur)
    }

    /// All tokens reachable from this node, in path order, with duplicates.
    pub fn tokens(&self) -> alloc::vec::Vec<Token> {
        let mut out = alloc::vec::Vec::new();
        self.collect_tokens(&mut out);
        out
    }

    fn collect_tokens(&self, out: &mut alloc::vec::Vec<Token>) {
        match self.node() {
            Node::Atom(_) => {}
            Node::Token(t) => out.push(*t),
            Node::Complex(m) => {
                for fs in m.values() {
                    fs.collect_tokens(out);
                }
            }
        }
    }
}

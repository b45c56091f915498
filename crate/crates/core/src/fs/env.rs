use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

/// A token variable standing for an as-yet-unresolved referent (a zero
/// pronoun, an observer, a motivated, ...). Tokens are plain ids; their
/// identity classes, distinctness pairs, and entity bindings are kept in
/// the [`TokenEnv`] that issued them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Token(u32);

impl Token {
    pub fn id(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t{}", self.0)
    }
}

/// One recorded constraint, in the order it was added. The log is what the
/// brute-force oracle re-checks referentially, without going through the
/// union-find closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Fact {
    Identity(Token, Token),
    Distinct(Token, Token),
    Bind(Token, String),
}

/// Why a mutation was rejected. A rejected mutation leaves the environment
/// untouched.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EnvConflict {
    /// Identifying the two tokens would collapse a recorded distinct pair.
    IdentityOverDistinct { a: Token, b: Token },
    /// The pair is already in one identity class (includes `t ≠ t`).
    DistinctWithinClass { a: Token, b: Token },
    /// The token's class is already bound to a different entity.
    BindClash {
        token: Token,
        bound: String,
        requested: String,
    },
    /// Two tokens required distinct would refer to the same entity.
    DistinctSameEntity { a: Token, b: Token, entity: String },
}

impl fmt::Display for EnvConflict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnvConflict::IdentityOverDistinct { a, b } => {
                write!(f, "cannot identify {a} and {b}: they are required distinct")
            }
            EnvConflict::DistinctWithinClass { a, b } => {
                write!(f, "cannot require {a} ≠ {b}: they are already identical")
            }
            EnvConflict::BindClash {
                token,
                bound,
                requested,
            } => write!(
                f,
                "cannot bind {token} to `{requested}`: already bound to `{bound}`"
            ),
            EnvConflict::DistinctSameEntity { a, b, entity } => write!(
                f,
                "distinct tokens {a} and {b} would both refer to `{entity}`"
            ),
        }
    }
}

/// Identity (union-find) and distinctness over token variables, plus
/// token-to-entity bindings picked up from overt arguments and
/// speaker rules.
///
/// The environment is the consistency substrate for one analysis: every
/// mutation re-checks that no distinct pair has both members in one
/// identity class or referring to one entity, and rejected mutations roll
/// back completely. Fresh-token generation lives here too, so two analyses
/// number their tokens independently.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TokenEnv {
    parent: Vec<u32>,
    origins: Vec<String>,
    /// Normalized (min, max) pairs of original token ids.
    distinct: BTreeSet<(u32, u32)>,
    /// Class representative id -> entity atom.
    bound: BTreeMap<u32, String>,
    facts: Vec<Fact>,
}

impl TokenEnv {
    pub fn new() -> Self {
        Self::default()
    }

    /// Issues a token with an id never returned before by this environment.
    /// The origin label is carried into debug output unchanged.
    pub fn fresh(&mut self, origin: &str) -> Token {
        let id = self.parent.len() as u32;
        self.parent.push(id);
        self.origins.push(origin.to_string());
        Token(id)
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn tokens(&self) -> impl Iterator<Item = Token> + '_ {
        (0..self.parent.len() as u32).map(Token)
    }

    pub fn origin(&self, t: Token) -> &str {
        &self.origins[t.0 as usize]
    }

    /// Class representative. Union always attaches the larger root under
    /// the smaller, so the representative is the minimal id of the class
    /// and does not depend on merge order.
    pub fn rep(&self, t: Token) -> Token {
        let mut id = t.0;
        while self.parent[id as usize] != id {
            id = self.parent[id as usize];
        }
        Token(id)
    }

    pub fn same(&self, a: Token, b: Token) -> bool {
        self.rep(a) == self.rep(b)
    }

    /// Entity the token's class is bound to, if any.
    pub fn binding(&self, t: Token) -> Option<&str> {
        self.bound.get(&self.rep(t).0).map(String::as_str)
    }

    /// The constraint log, in insertion order.
    pub fn facts(&self) -> &[Fact] {
        &self.facts
    }

    /// Merges the identity classes of `a` and `b`. Fails (without
    /// modifying the environment) if the merge would violate a distinct
    /// pair or clash two entity bindings.
    pub fn add_identity(&mut self, a: Token, b: Token) -> Result<(), EnvConflict> {
        let ra = self.rep(a);
        let rb = self.rep(b);
        if ra == rb {
            self.facts.push(Fact::Identity(a, b));
            return Ok(());
        }
        let mut next = self.clone();
        let (lo, hi) = if ra.0 < rb.0 { (ra, rb) } else { (rb, ra) };
        next.parent[hi.0 as usize] = lo.0;
        match (next.bound.remove(&lo.0), next.bound.remove(&hi.0)) {
            (Some(x), Some(y)) if x != y => {
                return Err(EnvConflict::BindClash {
                    token: b,
                    bound: x,
                    requested: y,
                });
            }
            (Some(x), _) | (_, Some(x)) => {
                next.bound.insert(lo.0, x);
            }
            (None, None) => {}
        }
        next.check_distinct()
            .map_err(|_| EnvConflict::IdentityOverDistinct { a, b })?;
        next.facts.push(Fact::Identity(a, b));
        *self = next;
        Ok(())
    }

    /// Records `a ≠ b` (not token identical). Fails if they are already in
    /// one class or already bound to the same entity. Duplicate pairs are
    /// a no-op.
    pub fn add_distinct(&mut self, a: Token, b: Token) -> Result<(), EnvConflict> {
        if self.same(a, b) {
            return Err(EnvConflict::DistinctWithinClass { a, b });
        }
        if let (Some(x), Some(y)) = (self.binding(a), self.binding(b)) {
            if x == y {
                return Err(EnvConflict::DistinctSameEntity {
                    a,
                    b,
                    entity: x.to_string(),
                });
            }
        }
        let pair = if a.0 < b.0 { (a.0, b.0) } else { (b.0, a.0) };
        self.distinct.insert(pair);
        self.facts.push(Fact::Distinct(a, b));
        Ok(())
    }

    /// Binds the token's class to an entity atom. Fails on a conflicting
    /// existing binding or on a distinct partner already bound to the same
    /// entity.
    pub fn bind(&mut self, t: Token, entity: &str) -> Result<(), EnvConflict> {
        let r = self.rep(t);
        if let Some(existing) = self.bound.get(&r.0) {
            if existing != entity {
                return Err(EnvConflict::BindClash {
                    token: t,
                    bound: existing.clone(),
                    requested: entity.to_string(),
                });
            }
            self.facts.push(Fact::Bind(t, entity.to_string()));
            return Ok(());
        }
        let mut next = self.clone();
        next.bound.insert(r.0, entity.to_string());
        next.check_distinct()?;
        next.facts.push(Fact::Bind(t, entity.to_string()));
        *self = next;
        Ok(())
    }

    /// True when no distinct pair is collapsed or co-bound. Construction
    /// keeps this invariant, so it only fails on a hand-corrupted value.
    pub fn is_consistent(&self) -> bool {
        self.check_distinct().is_ok()
    }

    fn check_distinct(&self) -> Result<(), EnvConflict> {
        for &(x, y) in &self.distinct {
            let (a, b) = (Token(x), Token(y));
            let ra = self.rep(a);
            let rb = self.rep(b);
            if ra == rb {
                return Err(EnvConflict::DistinctWithinClass { a, b });
            }
            if let (Some(u), Some(v)) = (self.bound.get(&ra.0), self.bound.get(&rb.0)) {
                if u == v {
                    return Err(EnvConflict::DistinctSameEntity {
                        a,
                        b,
                        entity: u.clone(),
                    });
                }
            }
        }
        Ok(())
    }

    /// Identity classes as sorted token lists (sorted by class, then id).
    pub fn classes(&self) -> Vec<Vec<Token>> {
        let mut by_rep: BTreeMap<u32, Vec<Token>> = BTreeMap::new();
        for t in self.tokens() {
            by_rep.entry(self.rep(t).0).or_default().push(t);
        }
        by_rep.into_values().collect()
    }

    /// Recorded distinct pairs, normalized to class representatives.
    pub fn distinct_pairs(&self) -> BTreeSet<(Token, Token)> {
        self.distinct
            .iter()
            .map(|&(x, y)| {
                let ra = self.rep(Token(x));
                let rb = self.rep(Token(y));
                if ra.0 < rb.0 {
                    (ra, rb)
                } else {
                    (rb, ra)
                }
            })
            .collect()
    }

    /// Canonical one-line summary of classes, distinctness, and bindings;
    /// independent of the order mutations were applied in.
    pub fn summary(&self) -> String {
        use core::fmt::Write;
        let mut out = String::new();
        for class in self.classes() {
            if out.is_empty() {
                out.push('{');
            } else {
                out.push_str(" {");
            }
            for (i, t) in class.iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                }
                let _ = write!(out, "{t}({})", self.origin(*t));
            }
            out.push('}');
            if let Some(e) = self.binding(class[0]) {
                let _ = write!(out, "={e}");
            }
        }
        for (a, b) in self.distinct_pairs() {
            let _ = write!(out, " {a}≠{b}");
        }
        out
    }
}

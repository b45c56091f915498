//! The closed-world lexicon: romanized stems with their part of speech,
//! subcategorized roles, and the attributes the constraint tables key on
//! (relational/possessable nouns, intransitivity, action vs state* main
//! predicates).
//!
//! The shipped file covers every stem used by the corpus sentences plus the
//! predicate-category exemplars; see `data/lexicon.tsv`.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

/// Semantic/pragmatic roles usable as feature names and binding labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Role {
    Agent,
    Experiencer,
    Patient,
    Object,
    Affected,
    Observer,
    Motivated,
}

impl Role {
    pub fn feature(self) -> &'static str {
        match self {
            Role::Agent => "agent",
            Role::Experiencer => "experiencer",
            Role::Patient => "patient",
            Role::Object => "object",
            Role::Affected => "affected",
            Role::Observer => "observer",
            Role::Motivated => "motivated",
        }
    }

    /// Short label used in interpretation bindings and gold lines.
    pub fn short(self) -> &'static str {
        match self {
            Role::Agent => "agt",
            Role::Experiencer => "exp",
            Role::Patient => "pat",
            Role::Object => "obj",
            Role::Affected => "affect",
            Role::Observer => "obs",
            Role::Motivated => "motiv",
        }
    }

    pub fn parse(s: &str) -> Option<Role> {
        Some(match s {
            "agent" => Role::Agent,
            "experiencer" => Role::Experiencer,
            "patient" => Role::Patient,
            "object" => Role::Object,
            "affected" => Role::Affected,
            "observer" => Role::Observer,
            "motivated" => Role::Motivated,
            _ => return None,
        })
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.feature())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Pos {
    Verb,
    SubjectiveVerb,
    SubjectiveAdjective,
    Adjective,
    Noun,
    RelationalNoun,
    Particle,
    Conjunct,
    Aux,
}

impl Pos {
    pub fn parse(s: &str) -> Option<Pos> {
        Some(match s {
            "verb" => Pos::Verb,
            "subjective-verb" => Pos::SubjectiveVerb,
            "subjective-adjective" => Pos::SubjectiveAdjective,
            "adjective" => Pos::Adjective,
            "noun" => Pos::Noun,
            "relational-noun" => Pos::RelationalNoun,
            "particle" => Pos::Particle,
            "conjunct" => Pos::Conjunct,
            "aux" => Pos::Aux,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Pos::Verb => "verb",
            Pos::SubjectiveVerb => "subjective-verb",
            Pos::SubjectiveAdjective => "subjective-adjective",
            Pos::Adjective => "adjective",
            Pos::Noun => "noun",
            Pos::RelationalNoun => "relational-noun",
            Pos::Particle => "particle",
            Pos::Conjunct => "conjunct",
            Pos::Aux => "aux",
        }
    }

    pub fn is_predicate(self) -> bool {
        matches!(
            self,
            Pos::Verb | Pos::SubjectiveVerb | Pos::SubjectiveAdjective | Pos::Adjective
        )
    }

    pub fn is_nominal(self) -> bool {
        matches!(self, Pos::Noun | Pos::RelationalNoun)
    }
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Semantic class of a main-clause predicate, selecting between the M1
/// (action) and M2 (state*) constraints.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MainClass {
    Action,
    StateStar,
}

impl fmt::Display for MainClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MainClass::Action => "action",
            MainClass::StateStar => "state*",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexEntry {
    pub surface: String,
    pub pos: Pos,
    pub gloss: String,
    /// Subcategorized roles in order; the first is the semantic subject.
    pub roles: Vec<Role>,
    pub relational: bool,
    pub possessable: bool,
    pub intransitive: bool,
    pub main_class: Option<MainClass>,
    /// Override for the semantic relation name (e.g. `samu` -> `samu-i`).
    rel_name: Option<String>,
}

impl LexEntry {
    /// Relation name used as the `rel` value in clause semantics.
    pub fn rel(&self) -> &str {
        self.rel_name.as_deref().unwrap_or(&self.surface)
    }

    pub fn is_relational(&self) -> bool {
        self.relational || self.pos == Pos::RelationalNoun
    }

    /// First subcategorized role (the semantic subject).
    pub fn subject_role(&self) -> Option<Role> {
        self.roles.first().copied()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LexiconError {
    Io(String),
    Parse { line: usize, message: String },
    Duplicate { line: usize, surface: String, pos: Pos },
}

impl fmt::Display for LexiconError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LexiconError::Io(m) => write!(f, "lexicon: {m}"),
            LexiconError::Parse { line, message } => {
                write!(f, "lexicon line {line}: {message}")
            }
            LexiconError::Duplicate { line, surface, pos } => {
                write!(f, "lexicon line {line}: duplicate entry `{surface}` ({pos})")
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Lexicon {
    by_surface: BTreeMap<String, Vec<LexEntry>>,
}

const BUILTIN: &str = include_str!("../data/lexicon.tsv");

impl Lexicon {
    /// Parses the tab-separated lexicon format: columns are surface, pos,
    /// gloss, comma-separated roles (`-` for none), and optional
    /// comma-separated flags (`relational`, `possessable`, `intransitive`,
    /// `class=action|state*`, `rel=<name>`). Lines starting with `#` are
    /// comments.
    pub fn parse(source: &str) -> Result<Lexicon, LexiconError> {
        let mut lex = Lexicon::default();
        for (idx, raw) in source.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let cols: Vec<&str> = raw.split('\t').map(str::trim).collect();
            if cols.len() < 4 {
                return Err(LexiconError::Parse {
                    line: line_no,
                    message: "expected at least 4 tab-separated columns (surface, pos, gloss, roles)".to_string(),
                });
            }
            let surface = cols[0];
            if surface.is_empty() {
                return Err(LexiconError::Parse {
                    line: line_no,
                    message: "empty surface".to_string(),
                });
            }
            let pos = Pos::parse(cols[1]).ok_or_else(|| LexiconError::Parse {
                line: line_no,
                message: alloc::format!("unknown pos tag `{}`", cols[1]),
            })?;
            let gloss = cols[2].to_string();
            let mut roles = Vec::new();
            if cols[3] != "-" && !cols[3].is_empty() {
                for r in cols[3].split(',') {
                    let r = r.trim();
                    roles.push(Role::parse(r).ok_or_else(|| LexiconError::Parse {
                        line: line_no,
                        message: alloc::format!("unknown role `{r}`"),
                    })?);
                }
            }
            let mut entry = LexEntry {
                surface: surface.to_string(),
                pos,
                gloss,
                roles,
                relational: false,
                possessable: false,
                intransitive: false,
                main_class: None,
                rel_name: None,
            };
            if let Some(flags) = cols.get(4) {
                if **flags != *"-" {
                    for flag in flags.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                        match flag {
                            "relational" => entry.relational = true,
                            "possessable" => entry.possessable = true,
                            "intransitive" => entry.intransitive = true,
                            "class=action" => entry.main_class = Some(MainClass::Action),
                            "class=state*" => entry.main_class = Some(MainClass::StateStar),
                            _ => {
                                if let Some(rel) = flag.strip_prefix("rel=") {
                                    entry.rel_name = Some(rel.to_string());
                                } else {
                                    return Err(LexiconError::Parse {
                                        line: line_no,
                                        message: alloc::format!("unknown flag `{flag}`"),
                                    });
                                }
                            }
                        }
                    }
                }
            }
            if entry.pos.is_predicate() && entry.roles.is_empty() {
                return Err(LexiconError::Parse {
                    line: line_no,
                    message: alloc::format!(
                        "predicate `{surface}` must subcategorize at least one role"
                    ),
                });
            }
            lex.insert(entry, line_no)?;
        }
        Ok(lex)
    }

    /// The lexicon shipped with the crate, covering the corpus fragment.
    pub fn builtin() -> Lexicon {
        Lexicon::parse(BUILTIN).expect("builtin lexicon must parse")
    }

    fn insert(&mut self, entry: LexEntry, line: usize) -> Result<(), LexiconError> {
        let bucket = self.by_surface.entry(entry.surface.clone()).or_default();
        if bucket.iter().any(|e| e.pos == entry.pos) {
            return Err(LexiconError::Duplicate {
                line,
                surface: entry.surface,
                pos: entry.pos,
            });
        }
        bucket.push(entry);
        Ok(())
    }

    pub fn entries(&self, surface: &str) -> &[LexEntry] {
        self.by_surface
            .get(surface)
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    pub fn contains(&self, surface: &str) -> bool {
        self.by_surface.contains_key(surface)
    }

    pub fn lookup(&self, surface: &str, pos: Pos) -> Option<&LexEntry> {
        self.entries(surface).iter().find(|e| e.pos == pos)
    }

    /// First entry with a predicate part of speech, if any.
    pub fn predicate(&self, surface: &str) -> Option<&LexEntry> {
        self.entries(surface).iter().find(|e| e.pos.is_predicate())
    }

    /// First nominal entry (noun or relational noun), if any.
    pub fn nominal(&self, surface: &str) -> Option<&LexEntry> {
        self.entries(surface).iter().find(|e| e.pos.is_nominal())
    }

    pub fn iter(&self) -> impl Iterator<Item = &LexEntry> {
        self.by_surface.values().flatten()
    }
}

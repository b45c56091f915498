//! Clause segmentation: splits a romanized morpheme stream into
//! subordinate clause(s), conjunct VP spans, and the main clause, and
//! records the wa-marked topic.
//!
//! Every Table-2 conjunct particle closes a subordinate clause; material
//! after the last conjunct is the main clause. te/tutu/nagara close a
//! conjunct VP of the main clause unless preceded by the perfective `i`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::lexicon::Lexicon;
use crate::morph::{stem_lookup, CASE_PARTICLES, CONJUNCT_PARTICLES, SUFFIXES};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClausePartKind {
    /// Subordinate clause closed by a conjunct particle.
    Sub {
        conjunct: String,
        /// The particle was immediately preceded by the perfective `i`.
        perfective_i: bool,
    },
    /// Conjunct VP (te/tutu/nagara without perfective i).
    Vp { particle: String },
    Main,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClausePart {
    pub kind: ClausePartKind,
    pub tokens: Vec<String>,
}

impl ClausePart {
    pub fn text(&self) -> String {
        self.tokens.join(" ")
    }
}

/// Result of segmentation. `parts` keeps surface order (VP spans and
/// subordinate clauses before the final main clause); the spans partition
/// the input after the topic phrase.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClauseSplit {
    pub topic: Option<String>,
    pub parts: Vec<ClausePart>,
}

impl ClauseSplit {
    pub fn sub_clauses(&self) -> impl Iterator<Item = (&ClausePart, &str, bool)> {
        self.parts.iter().filter_map(|p| match &p.kind {
            ClausePartKind::Sub {
                conjunct,
                perfective_i,
            } => Some((p, conjunct.as_str(), *perfective_i)),
            _ => None,
        })
    }

    pub fn vp_conjuncts(&self) -> impl Iterator<Item = (&ClausePart, &str)> {
        self.parts.iter().filter_map(|p| match &p.kind {
            ClausePartKind::Vp { particle } => Some((p, particle.as_str())),
            _ => None,
        })
    }

    pub fn main_clause(&self) -> &ClausePart {
        self.parts
            .iter()
            .find(|p| p.kind == ClausePartKind::Main)
            .expect("segmentation always produces a main clause")
    }

    /// Total number of morphemes covered (topic phrase + spans + particles).
    pub fn covered_len(&self) -> usize {
        let topic = if self.topic.is_some() { 2 } else { 0 };
        topic
            + self
                .parts
                .iter()
                .map(|p| {
                    p.tokens.len()
                        + match p.kind {
                            ClausePartKind::Main => 0,
                            // the closing particle, plus a stripped perfective i
                            ClausePartKind::Sub { perfective_i, .. } => {
                                1 + usize::from(perfective_i)
                            }
                            ClausePartKind::Vp { .. } => 1,
                        }
                })
                .sum::<usize>()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SegmentError {
    EmptyInput,
    UnknownMorpheme { position: usize, morpheme: String },
    /// A conjunct particle closed an empty span.
    EmptyClause { position: usize, particle: String },
    NoMainPredicate,
    /// `wa` outside the sentence-initial topic position.
    UnexpectedWa { position: usize },
}

impl fmt::Display for SegmentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SegmentError::EmptyInput => write!(f, "empty input"),
            SegmentError::UnknownMorpheme { position, morpheme } => {
                write!(f, "unknown morpheme `{morpheme}` at position {position}")
            }
            SegmentError::EmptyClause { position, particle } => write!(
                f,
                "conjunct `{particle}` at position {position} closes an empty clause"
            ),
            SegmentError::NoMainPredicate => write!(f, "no main-clause predicate found"),
            SegmentError::UnexpectedWa { position } => {
                write!(f, "unexpected topic marker wa at position {position}")
            }
        }
    }
}

const AUX_FORMS: &[&str] = &["yar", "yat", "yaru", "kure", "kureru"];

fn known(lexicon: &Lexicon, morpheme: &str) -> bool {
    lexicon.contains(morpheme)
        || SUFFIXES.contains(&morpheme)
        || CONJUNCT_PARTICLES.contains(&morpheme)
        || CASE_PARTICLES.contains(&morpheme)
        || stem_lookup(lexicon, morpheme).is_some()
}

fn is_predicate_final(lexicon: &Lexicon, morpheme: &str) -> bool {
    SUFFIXES.contains(&morpheme)
        || lexicon.predicate(morpheme).is_some()
        || stem_lookup(lexicon, morpheme).is_some()
}

fn has_predicate(lexicon: &Lexicon, tokens: &[String]) -> bool {
    tokens.iter().any(|m| stem_lookup(lexicon, m).is_some())
}

pub fn segment(morphemes: &[String], lexicon: &Lexicon) -> Result<ClauseSplit, SegmentError> {
    if morphemes.is_empty() {
        return Err(SegmentError::EmptyInput);
    }
    for (position, m) in morphemes.iter().enumerate() {
        if !known(lexicon, m) {
            return Err(SegmentError::UnknownMorpheme {
                position,
                morpheme: m.clone(),
            });
        }
    }

    let mut topic = None;
    let mut i = 0;
    if morphemes.len() >= 2
        && morphemes[1] == "wa"
        && lexicon.nominal(&morphemes[0]).is_some()
    {
        topic = Some(morphemes[0].clone());
        i = 2;
    }

    let mut parts: Vec<ClausePart> = Vec::new();
    let mut span: Vec<String> = Vec::new();
    while i < morphemes.len() {
        let m = morphemes[i].as_str();
        match m {
            "wa" => return Err(SegmentError::UnexpectedWa { position: i }),
            "te" | "tutu" | "nagara" => {
                if m == "te" && matches!(morphemes.get(i + 1), Some(next) if AUX_FORMS.contains(&next.as_str()))
                {
                    // directional auxiliary chain, predicate-internal
                    span.push(m.to_string());
                    i += 1;
                    continue;
                }
                let perfective = span.last().map(String::as_str) == Some("i")
                    && span.len() >= 2
                    && lexicon
                        .predicate(&span[span.len() - 2])
                        .is_some_and(|e| e.pos == crate::lexicon::Pos::Verb);
                if perfective {
                    span.pop();
                }
                if span.is_empty() {
                    return Err(SegmentError::EmptyClause {
                        position: i,
                        particle: m.to_string(),
                    });
                }
                let kind = if perfective {
                    ClausePartKind::Sub {
                        conjunct: m.to_string(),
                        perfective_i: true,
                    }
                } else {
                    ClausePartKind::Vp {
                        particle: m.to_string(),
                    }
                };
                parts.push(ClausePart {
                    kind,
                    tokens: core::mem::take(&mut span),
                });
                i += 1;
            }
            "ga" | "to"
                if !span
                    .last()
                    .is_some_and(|prev| is_predicate_final(lexicon, prev)) =>
            {
                // case particle (after a noun), not a clause conjunct
                span.push(m.to_string());
                i += 1;
            }
            _ if CONJUNCT_PARTICLES.contains(&m) => {
                if span.is_empty() {
                    return Err(SegmentError::EmptyClause {
                        position: i,
                        particle: m.to_string(),
                    });
                }
                parts.push(ClausePart {
                    kind: ClausePartKind::Sub {
                        conjunct: m.to_string(),
                        perfective_i: false,
                    },
                    tokens: core::mem::take(&mut span),
                });
                i += 1;
            }
            _ => {
                span.push(m.to_string());
                i += 1;
            }
        }
    }

    if span.is_empty() || !has_predicate(lexicon, &span) {
        return Err(SegmentError::NoMainPredicate);
    }
    parts.push(ClausePart {
        kind: ClausePartKind::Main,
        tokens: span,
    });

    Ok(ClauseSplit { topic, parts })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seg(s: &str) -> Result<ClauseSplit, SegmentError> {
        let words: Vec<String> = s.split_whitespace().map(str::to_string).collect();
        segment(&words, &Lexicon::builtin())
    }

    #[test]
    fn topic_sub_and_main() {
        let split = seg("Hanako wa samu gat ta node mado o sime ta").unwrap();
        assert_eq!(split.topic.as_deref(), Some("Hanako"));
        let subs: Vec<_> = split.sub_clauses().collect();
        assert_eq!(subs.len(), 1);
        assert_eq!(subs[0].0.text(), "samu gat ta");
        assert_eq!(subs[0].1, "node");
        assert_eq!(split.main_clause().text(), "mado o sime ta");
        assert_eq!(split.covered_len(), 10);
    }

    #[test]
    fn te_vp_conjunct() {
        let split = seg("Hanako wa samuku te mado o sime ta").unwrap();
        assert_eq!(split.topic.as_deref(), Some("Hanako"));
        assert_eq!(split.sub_clauses().count(), 0);
        let vps: Vec<_> = split.vp_conjuncts().collect();
        assert_eq!(vps.len(), 1);
        assert_eq!(vps[0].0.text(), "samuku");
        assert_eq!(vps[0].1, "te");
        assert_eq!(split.main_clause().text(), "mado o sime ta");
    }

    #[test]
    fn no_topic() {
        let split = seg("atui node komaru").unwrap();
        assert_eq!(split.topic, None);
        let subs: Vec<_> = split.sub_clauses().collect();
        assert_eq!(subs[0].0.text(), "atui");
        assert_eq!(split.main_clause().text(), "komaru");
    }

    #[test]
    fn case_ga_does_not_close_a_clause() {
        let split = seg("kobun ga yar are ta node sikaesi-ni-iku").unwrap();
        let subs: Vec<_> = split.sub_clauses().collect();
        assert_eq!(subs.len(), 1);
        assert_eq!(subs[0].0.text(), "kobun ga yar are ta");
    }

    #[test]
    fn conjunct_ga_after_predicate_closes_a_clause() {
        let split = seg("samu gat ta ga mado o sime ta").unwrap();
        let subs: Vec<_> = split.sub_clauses().collect();
        assert_eq!(subs.len(), 1);
        assert_eq!(subs[0].1, "ga");
        assert_eq!(subs[0].0.text(), "samu gat ta");
    }

    #[test]
    fn perfective_i_nagara_is_a_clause_conjunct() {
        let split = seg("nom i nagara mado o sime ta").unwrap();
        let subs: Vec<_> = split.sub_clauses().collect();
        assert_eq!(subs.len(), 1);
        assert_eq!(subs[0].0.text(), "nom");
        assert!(subs[0].2, "perfective flag must be set");
        assert_eq!(subs[0].1, "nagara");
    }

    #[test]
    fn te_aux_chain_stays_in_the_predicate() {
        let split = seg("mado o sime te yat ta").unwrap();
        assert_eq!(split.vp_conjuncts().count(), 0);
        assert_eq!(split.main_clause().text(), "mado o sime te yat ta");
    }

    #[test]
    fn unknown_morpheme_is_positioned() {
        assert_eq!(
            seg("Hanako wa hoge node komaru"),
            Err(SegmentError::UnknownMorpheme {
                position: 2,
                morpheme: "hoge".to_string()
            })
        );
    }

    #[test]
    fn trailing_conjunct_has_no_main_predicate() {
        assert_eq!(seg("samu gat ta node"), Err(SegmentError::NoMainPredicate));
    }

    #[test]
    fn main_without_predicate_is_rejected() {
        assert_eq!(
            seg("samu gat ta node mado o"),
            Err(SegmentError::NoMainPredicate)
        );
    }

    #[test]
    fn empty_sub_clause_is_rejected() {
        assert!(matches!(
            seg("node mado o sime ta"),
            Err(SegmentError::EmptyClause { position: 0, .. })
        ));
    }

    #[test]
    fn misplaced_wa_is_rejected() {
        assert!(matches!(
            seg("samu gat ta node Hanako wa mado o sime ta"),
            Err(SegmentError::UnexpectedWa { .. })
        ));
    }

    #[test]
    fn corpus_sentences_all_segment() {
        for s in [
            "Hanako wa samuku te mado o sime ta",
            "Hanako wa samu gat ta node mado o sime ta",
            "kurusi gat ta noni kusuri o nom anakat ta",
            "nokori ta gat ta noni oi-dasi ta",
            "samu gat ta node mado o sime ta",
            "atui node komaru",
            "tuma ni sin are ta noni kanasimu nai",
            "saihu ga nusum are ta",
            "kobun ga yar are ta node sikaesi-ni-iku",
            "kobun ga yar are ta noni te-o-komaneku",
            "Taro wa gakkou-e-iku-no wo iya gat ta node okor are ta",
            "samu gat ta",
            "samu i",
        ] {
            assert!(seg(s).is_ok(), "failed to segment `{s}`: {:?}", seg(s));
        }
    }
}

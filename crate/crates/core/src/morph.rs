//! Predicate morphology over the romanized morpheme stream: suffix-chain
//! analysis into predicate categories (subjective verbs and adjectives,
//! garu/ta-garu, passives), and classification of conjunctive particles
//! into clause link types.
//!
//! The suffix inventory is closed: `gar`/`gat`/`garu` (root, allophonic
//! root, present), desiderative `ta` before a gar form, passive `are`,
//! past `ta`, negation `anakat ta` / `nai`, progressive `teiru`, and the
//! adjective present `i`. A `te yar/yat/kure` chain is recognized as a
//! directional auxiliary so downstream rules can refuse it explicitly.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::lexicon::{LexEntry, Lexicon, Pos};

/// Table-2 clause link types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ClauseLinkType {
    Cause,
    Concession,
    Conditional,
    Temporal,
}

impl ClauseLinkType {
    pub fn number(self) -> u8 {
        match self {
            ClauseLinkType::Cause => 1,
            ClauseLinkType::Concession => 2,
            ClauseLinkType::Conditional => 3,
            ClauseLinkType::Temporal => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ClauseLinkType::Cause => "cause",
            ClauseLinkType::Concession => "concession",
            ClauseLinkType::Conditional => "conditional",
            ClauseLinkType::Temporal => "temporal",
        }
    }
}

impl fmt::Display for ClauseLinkType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// What a te/tutu/nagara-style particle turned out to be.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConjunctClass {
    Clause(ClauseLinkType),
    /// te/tutu/nagara without the perfective `i`: not a clause conjunct,
    /// the span is a conjunct VP of the main clause.
    VpConjunct,
}

/// Classifies a conjunctive particle. `perfective_i` is set by the
/// segmenter when the particle is immediately preceded by the aspectual
/// `i`, which turns te/tutu/nagara into `although` clause conjuncts.
pub fn classify_conjunct(particle: &str, perfective_i: bool) -> Result<ConjunctClass, MorphError> {
    use ClauseLinkType::*;
    Ok(match particle {
        "node" | "kara" => ConjunctClass::Clause(Cause),
        "noni" | "ga" | "keredomo" | "temo" => ConjunctClass::Clause(Concession),
        "te" | "tutu" | "nagara" => {
            if perfective_i {
                ConjunctClass::Clause(Concession)
            } else {
                ConjunctClass::VpConjunct
            }
        }
        "to" | "nara" | "tara" | "reba" => ConjunctClass::Clause(Conditional),
        "toki" | "ato" | "mae" => ConjunctClass::Clause(Temporal),
        _ => {
            return Err(MorphError::UnknownParticle {
                particle: particle.to_string(),
            })
        }
    })
}

/// All particles accepted by [`classify_conjunct`].
pub const CONJUNCT_PARTICLES: &[&str] = &[
    "node", "kara", "noni", "ga", "keredomo", "temo", "te", "tutu", "nagara", "to", "nara",
    "tara", "reba", "toki", "ato", "mae",
];

/// Case particles consumed by argument extraction.
pub const CASE_PARTICLES: &[&str] = &["ga", "o", "wo", "ni", "e", "wa"];

/// Closed suffix morphemes.
pub const SUFFIXES: &[&str] = &["gar", "gat", "garu", "ta", "are", "anakat", "nai", "teiru", "i"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PassiveKind {
    None,
    Transitive,
    Intransitive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tense {
    Present,
    Past,
}

impl Tense {
    pub fn name(self) -> &'static str {
        match self {
            Tense::Present => "present",
            Tense::Past => "past",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Polarity {
    Pos,
    Neg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DirectionalAux {
    Yaru,
    Kureru,
}

/// Table-1 predicate categories.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Category {
    NonSubjective,
    SubjectiveVerb,
    SubjectiveAdjective,
    SubjectiveAdjectiveGaru,
    VerbTaGaru,
    Passive,
}

impl Category {
    pub fn number(self) -> u8 {
        match self {
            Category::NonSubjective => 1,
            Category::SubjectiveVerb => 2,
            Category::SubjectiveAdjective => 3,
            Category::SubjectiveAdjectiveGaru => 4,
            Category::VerbTaGaru => 5,
            Category::Passive => 6,
        }
    }
}

/// Decomposition of a predicate span into stem, category, voice, and
/// tense/polarity features.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredicateAnalysis {
    pub stem: LexEntry,
    pub category: Category,
    pub has_garu: bool,
    pub has_ta_garu: bool,
    pub passive: PassiveKind,
    pub tense: Tense,
    pub polarity: Polarity,
    pub progressive: bool,
    pub directional_aux: Option<DirectionalAux>,
    /// Continuative ku form (e.g. `samuku` before `te`).
    pub continuative: bool,
    /// Adjective present was spelled with the separate `i` morpheme.
    pub adjective_i: bool,
}

impl PredicateAnalysis {
    pub fn is_garu_wrapped(&self) -> bool {
        self.has_garu || self.has_ta_garu
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MorphError {
    EmptySpan,
    UnknownStem { morpheme: String },
    UnknownSuffix { morpheme: String },
    InvalidSuffix { morpheme: String, reason: String },
    UnknownParticle { particle: String },
}

impl fmt::Display for MorphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MorphError::EmptySpan => write!(f, "empty predicate span"),
            MorphError::UnknownStem { morpheme } => {
                write!(f, "unknown predicate stem `{morpheme}`")
            }
            MorphError::UnknownSuffix { morpheme } => write!(f, "unknown suffix `{morpheme}`"),
            MorphError::InvalidSuffix { morpheme, reason } => {
                write!(f, "invalid suffix `{morpheme}`: {reason}")
            }
            MorphError::UnknownParticle { particle } => {
                write!(f, "unknown conjunctive particle `{particle}`")
            }
        }
    }
}

/// Looks a morpheme up as a predicate stem, also recognizing the fused
/// continuative `<stem>ku` of subjective adjectives.
pub fn stem_lookup<'l>(lexicon: &'l Lexicon, morpheme: &str) -> Option<(&'l LexEntry, bool)> {
    if let Some(entry) = lexicon.predicate(morpheme) {
        return Some((entry, false));
    }
    let stripped = morpheme.strip_suffix("ku")?;
    let entry = lexicon.lookup(stripped, Pos::SubjectiveAdjective)?;
    Some((entry, true))
}

struct SuffixChain<'a> {
    rest: &'a [String],
    pos: usize,
}

impl<'a> SuffixChain<'a> {
    fn peek(&self) -> Option<&str> {
        self.rest.get(self.pos).map(String::as_str)
    }

    fn next_is(&self, m: &str) -> bool {
        self.peek() == Some(m)
    }

    fn take(&mut self) -> Option<&'a str> {
        let m = self.rest.get(self.pos)?;
        self.pos += 1;
        Some(m)
    }

    fn expect_end(&self) -> Result<(), MorphError> {
        match self.peek() {
            None => Ok(()),
            Some(m) => Err(MorphError::UnknownSuffix {
                morpheme: m.to_string(),
            }),
        }
    }
}

/// Analyzes a predicate span (stem followed by its suffix chain) into a
/// [`PredicateAnalysis`]. The category is derived per Table 1; suffix
/// order is validated (passive attaches to verb stems only and never after
/// a gar form, garu attaches to subjective adjectives or to the
/// desiderative `ta` of a verb).
pub fn analyze_predicate(span: &[String], lexicon: &Lexicon) -> Result<PredicateAnalysis, MorphError> {
    let first = span.first().ok_or(MorphError::EmptySpan)?;
    let (stem, continuative) =
        stem_lookup(lexicon, first).ok_or_else(|| MorphError::UnknownStem {
            morpheme: first.clone(),
        })?;
    let stem = stem.clone();
    let mut chain = SuffixChain {
        rest: &span[1..],
        pos: 0,
    };

    let mut analysis = PredicateAnalysis {
        category: Category::NonSubjective,
        has_garu: false,
        has_ta_garu: false,
        passive: PassiveKind::None,
        tense: Tense::Present,
        polarity: Polarity::Pos,
        progressive: false,
        directional_aux: None,
        continuative,
        adjective_i: false,
        stem,
    };

    if continuative {
        chain.expect_end()?;
        analysis.category = Category::SubjectiveAdjective;
        return Ok(analysis);
    }

    match analysis.stem.pos {
        Pos::Verb => analyze_verb_chain(&mut analysis, &mut chain)?,
        Pos::SubjectiveAdjective | Pos::Adjective => {
            analyze_adjective_chain(&mut analysis, &mut chain)?
        }
        Pos::SubjectiveVerb => {
            parse_plain_tail(&mut analysis, &mut chain)?;
            analysis.category = Category::SubjectiveVerb;
        }
        _ => {
            return Err(MorphError::UnknownStem {
                morpheme: analysis.stem.surface.clone(),
            })
        }
    }
    chain.expect_end()?;
    Ok(analysis)
}

fn analyze_verb_chain(
    analysis: &mut PredicateAnalysis,
    chain: &mut SuffixChain<'_>,
) -> Result<(), MorphError> {
    if chain.next_is("te") {
        // directional auxiliary chain: te + yar/yat (yaru) or kure (kureru)
        chain.take();
        let aux = chain.take().ok_or_else(|| MorphError::InvalidSuffix {
            morpheme: "te".to_string(),
            reason: "dangling te in predicate span".to_string(),
        })?;
        analysis.directional_aux = Some(match aux {
            "yar" | "yat" | "yaru" => DirectionalAux::Yaru,
            "kure" | "kureru" => DirectionalAux::Kureru,
            other => {
                return Err(MorphError::InvalidSuffix {
                    morpheme: other.to_string(),
                    reason: "expected a directional auxiliary after te".to_string(),
                })
            }
        });
        parse_plain_tail(analysis, chain)?;
        analysis.category = Category::NonSubjective;
        return Ok(());
    }

    if chain.next_is("are") {
        chain.take();
        analysis.passive = if analysis.stem.intransitive {
            PassiveKind::Intransitive
        } else {
            PassiveKind::Transitive
        };
    }

    if chain.next_is("ta") && matches!(chain.rest.get(chain.pos + 1).map(String::as_str), Some("gar" | "gat" | "garu")) {
        if analysis.passive != PassiveKind::None {
            return Err(MorphError::InvalidSuffix {
                morpheme: "ta".to_string(),
                reason: "ta-garu cannot combine with the passive are".to_string(),
            });
        }
        chain.take();
        analysis.has_ta_garu = true;
        parse_garu_tail(analysis, chain)?;
        analysis.category = Category::VerbTaGaru;
        return Ok(());
    }

    if matches!(chain.peek(), Some("gar" | "gat" | "garu")) {
        return Err(MorphError::InvalidSuffix {
            morpheme: chain.peek().unwrap().to_string(),
            reason: "garu attaches to a subjective adjective or to a desiderative ta".to_string(),
        });
    }

    parse_plain_tail(analysis, chain)?;
    analysis.category = if analysis.passive != PassiveKind::None {
        Category::Passive
    } else {
        Category::NonSubjective
    };
    Ok(())
}

fn analyze_adjective_chain(
    analysis: &mut PredicateAnalysis,
    chain: &mut SuffixChain<'_>,
) -> Result<(), MorphError> {
    let subjective = analysis.stem.pos == Pos::SubjectiveAdjective;
    if chain.next_is("are") {
        return Err(MorphError::InvalidSuffix {
            morpheme: "are".to_string(),
            reason: "passive attaches to verb stems only".to_string(),
        });
    }
    if chain.next_is("i") {
        chain.take();
        analysis.adjective_i = true;
        analysis.category = if subjective {
            Category::SubjectiveAdjective
        } else {
            Category::NonSubjective
        };
        return Ok(());
    }
    if matches!(chain.peek(), Some("gar" | "gat" | "garu")) {
        if !subjective {
            return Err(MorphError::InvalidSuffix {
                morpheme: chain.peek().unwrap().to_string(),
                reason: "garu requires a subjective adjective".to_string(),
            });
        }
        parse_garu_tail(analysis, chain)?;
        analysis.category = Category::SubjectiveAdjectiveGaru;
        return Ok(());
    }
    // bare citation form (e.g. atui)
    analysis.category = if subjective {
        Category::SubjectiveAdjective
    } else {
        Category::NonSubjective
    };
    Ok(())
}

/// gar forms: `garu` (present), `gat ta` (past), `gat teiru`
/// (progressive), `gar anakat ta` / `gar nai` (negation).
fn parse_garu_tail(
    analysis: &mut PredicateAnalysis,
    chain: &mut SuffixChain<'_>,
) -> Result<(), MorphError> {
    analysis.has_garu = !analysis.has_ta_garu;
    match chain.take() {
        Some("garu") => {
            analysis.tense = Tense::Present;
            Ok(())
        }
        Some("gat") => match chain.take() {
            Some("ta") => {
                analysis.tense = Tense::Past;
                Ok(())
            }
            Some("teiru") => {
                analysis.tense = Tense::Present;
                analysis.progressive = true;
                Ok(())
            }
            other => Err(MorphError::InvalidSuffix {
                morpheme: other.unwrap_or("<end>").to_string(),
                reason: "gat must be followed by ta or teiru".to_string(),
            }),
        },
        Some("gar") => parse_negation(analysis, chain).and_then(|negated| {
            if negated {
                Ok(())
            } else {
                Err(MorphError::InvalidSuffix {
                    morpheme: "gar".to_string(),
                    reason: "gar must be followed by a negation".to_string(),
                })
            }
        }),
        other => Err(MorphError::UnknownSuffix {
            morpheme: other.unwrap_or("<end>").to_string(),
        }),
    }
}

/// Negation and tense for chains without garu. Returns through the
/// analysis fields; order is negation first, then tense.
fn parse_plain_tail(
    analysis: &mut PredicateAnalysis,
    chain: &mut SuffixChain<'_>,
) -> Result<(), MorphError> {
    if parse_negation(analysis, chain)? {
        return Ok(());
    }
    match chain.peek() {
        Some("ta") => {
            chain.take();
            analysis.tense = Tense::Past;
        }
        Some("teiru") => {
            chain.take();
            analysis.tense = Tense::Present;
            analysis.progressive = true;
        }
        _ => {}
    }
    Ok(())
}

fn parse_negation(
    analysis: &mut PredicateAnalysis,
    chain: &mut SuffixChain<'_>,
) -> Result<bool, MorphError> {
    match chain.peek() {
        Some("anakat") => {
            chain.take();
            if !chain.next_is("ta") {
                return Err(MorphError::InvalidSuffix {
                    morpheme: "anakat".to_string(),
                    reason: "anakat must be followed by ta".to_string(),
                });
            }
            chain.take();
            analysis.polarity = Polarity::Neg;
            analysis.tense = Tense::Past;
            Ok(true)
        }
        Some("nai") => {
            chain.take();
            analysis.polarity = Polarity::Neg;
            analysis.tense = Tense::Present;
            Ok(true)
        }
        _ => Ok(false),
    }
}

/// Renders an analysis back to its canonical morpheme sequence; the
/// inverse of [`analyze_predicate`] on every valid suffix combination.
pub fn render_predicate(analysis: &PredicateAnalysis) -> Vec<String> {
    let mut out = Vec::new();
    if analysis.continuative {
        out.push(alloc::format!("{}ku", analysis.stem.surface));
        return out;
    }
    out.push(analysis.stem.surface.clone());
    if let Some(aux) = analysis.directional_aux {
        out.push("te".to_string());
        render_aux(aux, analysis, &mut out);
        return out;
    }
    if analysis.passive != PassiveKind::None {
        out.push("are".to_string());
    }
    if analysis.has_ta_garu {
        out.push("ta".to_string());
    }
    if analysis.is_garu_wrapped() {
        match (analysis.polarity, analysis.tense, analysis.progressive) {
            (Polarity::Neg, Tense::Past, _) => {
                out.extend(["gar", "anakat", "ta"].map(str::to_string))
            }
            (Polarity::Neg, Tense::Present, _) => out.extend(["gar", "nai"].map(str::to_string)),
            (Polarity::Pos, Tense::Past, _) => out.extend(["gat", "ta"].map(str::to_string)),
            (Polarity::Pos, Tense::Present, true) => {
                out.extend(["gat", "teiru"].map(str::to_string))
            }
            (Polarity::Pos, Tense::Present, false) => out.push("garu".to_string()),
        }
        return out;
    }
    if analysis.adjective_i {
        out.push("i".to_string());
        return out;
    }
    render_plain_tail(analysis, &mut out);
    out
}

fn render_aux(aux: DirectionalAux, analysis: &PredicateAnalysis, out: &mut Vec<String>) {
    match (aux, analysis.tense) {
        (DirectionalAux::Yaru, Tense::Past) => out.extend(["yat", "ta"].map(str::to_string)),
        (DirectionalAux::Yaru, Tense::Present) => out.push("yaru".to_string()),
        (DirectionalAux::Kureru, Tense::Past) => out.extend(["kure", "ta"].map(str::to_string)),
        (DirectionalAux::Kureru, Tense::Present) => out.push("kureru".to_string()),
    }
}

fn render_plain_tail(analysis: &PredicateAnalysis, out: &mut Vec<String>) {
    match (analysis.polarity, analysis.tense, analysis.progressive) {
        (Polarity::Neg, Tense::Past, _) => out.extend(["anakat", "ta"].map(str::to_string)),
        (Polarity::Neg, Tense::Present, _) => out.push("nai".to_string()),
        (Polarity::Pos, Tense::Past, _) => out.push("ta".to_string()),
        (Polarity::Pos, Tense::Present, true) => out.push("teiru".to_string()),
        (Polarity::Pos, Tense::Present, false) => {}
    }
}

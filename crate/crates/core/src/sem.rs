//! Clause semantics: SEM feature structures for simple clauses, garu
//! observing-situation wrappers, passive affected-role introduction,
//! sentence-final speaker rules, and the complex-sentence wrapper carrying
//! the motivated role.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::fs::{feat, EnvConflict, Fs, Token, TokenEnv};
use crate::lexicon::{Lexicon, Role};
use crate::morph::{Category, ClauseLinkType, PassiveKind, PredicateAnalysis};

/// Entities available as antecedents for zero pronouns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscourseContext {
    pub speaker: String,
    pub hearer: Option<String>,
    pub entities: Vec<String>,
    /// wa-marked topic; always also a member of `entities`.
    pub topic: Option<String>,
    /// The speaker is an implicit antecedent candidate unless disabled.
    pub speaker_candidate: bool,
}

impl DiscourseContext {
    pub fn new(speaker: &str) -> Self {
        DiscourseContext {
            speaker: speaker.to_string(),
            hearer: None,
            entities: Vec::new(),
            topic: None,
            speaker_candidate: true,
        }
    }

    /// Records the sentence topic, adding it to the entity list when absent.
    pub fn with_topic(mut self, topic: Option<&str>) -> Self {
        if let Some(t) = topic {
            if !self.entities.iter().any(|e| e == t) {
                self.entities.push(t.to_string());
            }
            self.topic = Some(t.to_string());
        }
        self
    }

    /// Antecedent candidates in deterministic order: the entity list as
    /// given, then the speaker (if a candidate and not already listed).
    pub fn candidate_pool(&self) -> Vec<String> {
        let mut pool = self.entities.clone();
        if self.speaker_candidate && !pool.iter().any(|e| *e == self.speaker) {
            pool.push(self.speaker.clone());
        }
        pool
    }
}

/// How a semantic role is filled: every role gets a token; overt arguments
/// bind theirs to the entity atom at build time, zeros stay free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoleFiller {
    pub token: Token,
    pub overt: Option<String>,
}

impl RoleFiller {
    pub fn is_zero(&self) -> bool {
        self.overt.is_none()
    }
}

/// The observer slot of a clause: obligatory when introduced by garu,
/// optional for subjective verbs ("this observer is not obligatory").
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ObserverSlot {
    pub token: Token,
    pub obligatory: bool,
}

/// Semantics of one clause: its feature structure plus the role tokens the
/// constraint tables operate on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClauseSem {
    pub fs: Fs,
    pub roles: BTreeMap<Role, RoleFiller>,
    pub observer: Option<ObserverSlot>,
    pub analysis: PredicateAnalysis,
}

impl ClauseSem {
    pub fn role_token(&self, role: Role) -> Option<Token> {
        if role == Role::Observer {
            return self.observer.map(|o| o.token);
        }
        self.roles.get(&role).map(|f| f.token)
    }

    /// Surface-omitted arguments, in role order.
    pub fn zeros(&self) -> impl Iterator<Item = (Role, Token)> + '_ {
        self.roles
            .iter()
            .filter(|(_, f)| f.is_zero())
            .map(|(r, f)| (*r, f.token))
    }

    /// The clause's semantic-subject role: patient for passives,
    /// experiencer for desideratives, else the first subcategorized role.
    pub fn subject_role(&self) -> Option<Role> {
        if self.analysis.passive != PassiveKind::None {
            Some(Role::Patient)
        } else if self.analysis.has_ta_garu {
            Some(Role::Experiencer)
        } else {
            self.analysis.stem.subject_role()
        }
    }

    pub fn subject_token(&self) -> Option<Token> {
        self.role_token(self.subject_role()?)
    }

    /// All tokens belonging to this clause (role fillers and observer).
    pub fn tokens(&self) -> Vec<Token> {
        let mut out: Vec<Token> = self.roles.values().map(|f| f.token).collect();
        if let Some(o) = self.observer {
            out.push(o.token);
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SemError {
    /// An overt argument fills a role the predicate does not subcategorize.
    UnexpectedArgument { role: Role, entity: String, stem: String },
    /// garu wrapping requires an experiencer-bearing base predicate.
    MissingExperiencer { stem: String },
    PassiveOfNonVerb { stem: String },
    Env(EnvConflict),
}

impl fmt::Display for SemError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SemError::UnexpectedArgument { role, entity, stem } => write!(
                f,
                "predicate `{stem}` does not take a {role} argument (got `{entity}`)"
            ),
            SemError::MissingExperiencer { stem } => {
                write!(f, "garu requires an experiencer-bearing predicate, `{stem}` has none")
            }
            SemError::PassiveOfNonVerb { stem } => {
                write!(f, "passive of non-verb stem `{stem}`")
            }
            SemError::Env(c) => write!(f, "inconsistent token environment: {c}"),
        }
    }
}

impl From<EnvConflict> for SemError {
    fn from(c: EnvConflict) -> Self {
        SemError::Env(c)
    }
}

fn fill_roles(
    subcat: &[Role],
    overt: &BTreeMap<Role, String>,
    stem: &str,
    env: &mut TokenEnv,
) -> Result<BTreeMap<Role, RoleFiller>, SemError> {
    for (role, entity) in overt {
        if !subcat.contains(role) {
            return Err(SemError::UnexpectedArgument {
                role: *role,
                entity: entity.clone(),
                stem: stem.to_string(),
            });
        }
    }
    let mut roles = BTreeMap::new();
    for role in subcat {
        let token = env.fresh(role.short());
        let filler = match overt.get(role) {
            Some(entity) => {
                env.bind(token, entity)?;
                RoleFiller {
                    token,
                    overt: Some(entity.clone()),
                }
            }
            None => RoleFiller { token, overt: None },
        };
        roles.insert(*role, filler);
    }
    Ok(roles)
}

fn base_fs(rel: &str, roles: &BTreeMap<Role, RoleFiller>, analysis: &PredicateAnalysis) -> Fs {
    let mut feats: Vec<(String, Fs)> = Vec::new();
    feats.push((feat::REL.to_string(), Fs::atom(rel)));
    for (role, filler) in roles {
        feats.push((role.feature().to_string(), Fs::token(filler.token)));
    }
    feats.push((
        feat::TENSE.to_string(),
        Fs::atom(analysis.tense.name()),
    ));
    Fs::complex(feats)
}

/// Builds the SEM of one clause. The base soa carries the stem's relation
/// name with every subcategorized role filled (fresh tokens for zeros);
/// garu and ta-garu wrap it in an observing situation whose observer is
/// required distinct from the experiencer; subjective verbs attach an
/// optional observer with no distinctness.
pub fn build_clause_sem(
    pred: &PredicateAnalysis,
    overt: &BTreeMap<Role, String>,
    lexicon: &Lexicon,
    env: &mut TokenEnv,
) -> Result<ClauseSem, SemError> {
    if pred.passive != PassiveKind::None {
        return build_passive_sem(pred, overt, lexicon, env);
    }

    let mut subcat: Vec<Role> = pred.stem.roles.clone();
    if pred.has_ta_garu {
        // the desiderer is the experiencer of "want to VERB"
        if let Some(first) = subcat.first_mut() {
            *first = Role::Experiencer;
        }
    }
    let roles = fill_roles(&subcat, overt, &pred.stem.surface, env)?;

    let rel = if pred.has_ta_garu {
        alloc::format!("{}-tai", pred.stem.rel())
    } else {
        pred.stem.rel().to_string()
    };
    let base = base_fs(&rel, &roles, pred);

    if pred.is_garu_wrapped() {
        let experiencer = roles
            .get(&Role::Experiencer)
            .map(|f| f.token)
            .ok_or_else(|| SemError::MissingExperiencer {
                stem: pred.stem.surface.clone(),
            })?;
        let observer = env.fresh("obs");
        env.add_distinct(observer, experiencer)?;
        let fs = Fs::complex([
            (feat::REL.to_string(), Fs::atom("garu")),
            (feat::OBSERVER.to_string(), Fs::token(observer)),
            (feat::SOA.to_string(), base),
        ]);
        return Ok(ClauseSem {
            fs,
            roles,
            observer: Some(ObserverSlot {
                token: observer,
                obligatory: true,
            }),
            analysis: pred.clone(),
        });
    }

    if pred.category == Category::SubjectiveVerb {
        // an observer can be introduced but is not obligatory
        let observer = env.fresh("obs");
        let fs = base.with_feature(feat::OBSERVER, Fs::token(observer));
        return Ok(ClauseSem {
            fs,
            roles,
            observer: Some(ObserverSlot {
                token: observer,
                obligatory: false,
            }),
            analysis: pred.clone(),
        });
    }

    Ok(ClauseSem {
        fs: base,
        roles,
        observer: None,
        analysis: pred.clone(),
    })
}

/// Passive clause semantics. Intransitive (adversity) passives always
/// introduce a fresh affected token alongside the patient; transitive
/// passives introduce one only when the subject is a relational or
/// possessable noun, and otherwise realize just patient and agent.
pub fn build_passive_sem(
    pred: &PredicateAnalysis,
    overt: &BTreeMap<Role, String>,
    lexicon: &Lexicon,
    env: &mut TokenEnv,
) -> Result<ClauseSem, SemError> {
    match pred.passive {
        PassiveKind::None => {
            return Err(SemError::PassiveOfNonVerb {
                stem: pred.stem.surface.clone(),
            })
        }
        PassiveKind::Intransitive => {
            let subcat = [Role::Affected, Role::Patient];
            let roles = fill_roles(&subcat, overt, &pred.stem.surface, env)?;
            let fs = base_fs(pred.stem.rel(), &roles, pred);
            Ok(ClauseSem {
                fs,
                roles,
                observer: None,
                analysis: pred.clone(),
            })
        }
        PassiveKind::Transitive => {
            let affected = match overt.get(&Role::Patient) {
                Some(subject) => lexicon
                    .nominal(subject)
                    .is_some_and(|e| e.is_relational() || e.possessable),
                None => false,
            };
            let subcat: &[Role] = if affected {
                &[Role::Affected, Role::Patient, Role::Agent]
            } else {
                &[Role::Patient, Role::Agent]
            };
            let roles = fill_roles(subcat, overt, &pred.stem.surface, env)?;
            let fs = base_fs(pred.stem.rel(), &roles, pred);
            Ok(ClauseSem {
                fs,
                roles,
                observer: None,
                analysis: pred.clone(),
            })
        }
    }
}

/// Speaker rules for the end of the sentence: a sentence finishing right
/// after garu/gat-ta makes the introduced observer the speaker (and, via
/// o ≠ e, keeps the experiencer away from the speaker); a sentence that is
/// a bare subjective adjective without garu makes the experiencer the
/// speaker. Subordinate clauses are untouched.
pub fn apply_sentence_final_rules(
    sem: &ClauseSem,
    is_sentence_final: bool,
    is_bare_sentence: bool,
    ctx: &DiscourseContext,
    env: &mut TokenEnv,
) -> Result<(), SemError> {
    if !is_sentence_final {
        return Ok(());
    }
    if sem.analysis.is_garu_wrapped() {
        let obs = sem
            .observer
            .expect("garu clauses always carry an observer")
            .token;
        env.bind(obs, &ctx.speaker)?;
    } else if is_bare_sentence
        && sem.analysis.category == Category::SubjectiveAdjective
        && !sem.analysis.continuative
    {
        if let Some(exp) = sem.role_token(Role::Experiencer) {
            env.bind(exp, &ctx.speaker)?;
        }
    }
    Ok(())
}

/// A complex-sentence node: the combined feature structure and the
/// motivated token of its subordinate wrapper (absent for temporal links).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexSem {
    pub fs: Fs,
    pub motivated: Option<Token>,
}

/// Conjoins a subordinate structure with its (local) main clause: the
/// result carries the main proposition under `matrix` and a wrapper
/// `{rel: <conjunct>, motivated: m, soa: <sub>}` under `sub`. The fresh
/// motivated token is unconstrained here; Tables 3 and 4 constrain it
/// downstream. Temporal links produce the combined structure with no
/// motivated role.
pub fn build_complex_sem(
    sub_fs: &Fs,
    conjunct: &str,
    link: ClauseLinkType,
    main_fs: &Fs,
    env: &mut TokenEnv,
) -> ComplexSem {
    let mut wrapper: Vec<(String, Fs)> = Vec::new();
    wrapper.push((feat::REL.to_string(), Fs::atom(conjunct)));
    let motivated = if link == ClauseLinkType::Temporal {
        None
    } else {
        let m = env.fresh("motiv");
        wrapper.push((feat::MOTIVATED.to_string(), Fs::token(m)));
        Some(m)
    };
    wrapper.push((feat::SOA.to_string(), sub_fs.clone()));
    let fs = Fs::complex([
        (feat::MATRIX.to_string(), main_fs.clone()),
        (feat::SUB.to_string(), Fs::complex(wrapper)),
    ]);
    ComplexSem { fs, motivated }
}

/// Attaches a conjunct VP to the main clause and applies the syntactic
/// control rule: the (usually zero) subject of the te span corefers with
/// the subject of the sentence.
pub fn attach_vp_conjunct(
    main_fs: &Fs,
    vp: &ClauseSem,
    main_subject: Token,
    index: usize,
    env: &mut TokenEnv,
) -> Result<Fs, SemError> {
    if let Some(vp_subject) = vp.subject_token() {
        env.add_identity(vp_subject, main_subject)?;
    }
    let name = if index == 0 {
        feat::CONJ_VP.to_string()
    } else {
        alloc::format!("{}{}", feat::CONJ_VP, index + 1)
    };
    Ok(main_fs.with_feature(&name, vp.fs.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morph::analyze_predicate;

    fn lex() -> Lexicon {
        Lexicon::builtin()
    }

    fn analyze(words: &[&str]) -> PredicateAnalysis {
        let span: Vec<String> = words.iter().map(|w| w.to_string()).collect();
        analyze_predicate(&span, &lex()).unwrap()
    }

    fn overt(pairs: &[(Role, &str)]) -> BTreeMap<Role, String> {
        pairs.iter().map(|(r, e)| (*r, e.to_string())).collect()
    }

    #[test]
    fn garu_clause_wraps_and_adds_distinctness() {
        let mut env = TokenEnv::new();
        let sem =
            build_clause_sem(&analyze(&["samu", "gat", "ta"]), &overt(&[]), &lex(), &mut env)
                .unwrap();
        assert_eq!(sem.fs.get(feat::REL).unwrap().as_atom(), Some("garu"));
        assert_eq!(
            sem.fs.get_path(&[feat::SOA, feat::REL]).unwrap().as_atom(),
            Some("samu-i")
        );
        assert_eq!(
            sem.fs.get_path(&[feat::SOA, feat::TENSE]).unwrap().as_atom(),
            Some("past")
        );
        let obs = sem.observer.unwrap();
        assert!(obs.obligatory);
        let exp = sem.role_token(Role::Experiencer).unwrap();
        // o ≠ e is in force
        assert!(env.add_identity(obs.token, exp).is_err());
    }

    #[test]
    fn overt_object_binds_and_agent_stays_zero() {
        let mut env = TokenEnv::new();
        let sem = build_clause_sem(
            &analyze(&["sime", "ta"]),
            &overt(&[(Role::Object, "mado")]),
            &lex(),
            &mut env,
        )
        .unwrap();
        assert_eq!(sem.fs.get(feat::REL).unwrap().as_atom(), Some("sime"));
        let obj = sem.roles.get(&Role::Object).unwrap();
        assert_eq!(env.binding(obj.token), Some("mado"));
        assert!(sem.roles.get(&Role::Agent).unwrap().is_zero());
        let zeros: Vec<Role> = sem.zeros().map(|(r, _)| r).collect();
        assert_eq!(zeros, alloc::vec![Role::Agent]);
        assert!(sem.observer.is_none());
    }

    #[test]
    fn bare_subjective_adjective_has_no_observer() {
        let mut env = TokenEnv::new();
        let sem = build_clause_sem(&analyze(&["atui"]), &overt(&[]), &lex(), &mut env).unwrap();
        assert_eq!(sem.fs.get(feat::REL).unwrap().as_atom(), Some("atu-i"));
        assert!(sem.observer.is_none());
        assert!(env.distinct_pairs().is_empty());
    }

    #[test]
    fn subjective_verb_observer_is_optional_without_distinctness() {
        let mut env = TokenEnv::new();
        let sem =
            build_clause_sem(&analyze(&["kurusimu"]), &overt(&[]), &lex(), &mut env).unwrap();
        let obs = sem.observer.unwrap();
        assert!(!obs.obligatory);
        assert!(env.distinct_pairs().is_empty());
        assert!(sem.fs.get(feat::OBSERVER).is_some());
    }

    #[test]
    fn ta_garu_base_is_experiencer_bearing() {
        let mut env = TokenEnv::new();
        let sem = build_clause_sem(
            &analyze(&["nokori", "ta", "gat", "ta"]),
            &overt(&[]),
            &lex(),
            &mut env,
        )
        .unwrap();
        assert_eq!(
            sem.fs.get_path(&[feat::SOA, feat::REL]).unwrap().as_atom(),
            Some("nokori-tai")
        );
        assert!(sem.role_token(Role::Experiencer).is_some());
        assert!(sem.observer.unwrap().obligatory);
    }

    #[test]
    fn intransitive_passive_always_introduces_affected() {
        let mut env = TokenEnv::new();
        let sem = build_clause_sem(
            &analyze(&["sin", "are", "ta"]),
            &overt(&[(Role::Patient, "tuma")]),
            &lex(),
            &mut env,
        )
        .unwrap();
        assert_eq!(sem.fs.get(feat::REL).unwrap().as_atom(), Some("sin"));
        let affect = sem.roles.get(&Role::Affected).unwrap();
        assert!(affect.is_zero());
        assert_eq!(
            env.binding(sem.role_token(Role::Patient).unwrap()),
            Some("tuma")
        );
    }

    #[test]
    fn transitive_passive_affected_from_possessable_subject() {
        let mut env = TokenEnv::new();
        let sem = build_clause_sem(
            &analyze(&["nusum", "are", "ta"]),
            &overt(&[(Role::Patient, "saihu")]),
            &lex(),
            &mut env,
        )
        .unwrap();
        assert!(sem.roles.contains_key(&Role::Affected));
    }

    #[test]
    fn transitive_passive_affected_from_relational_subject() {
        let mut env = TokenEnv::new();
        let sem = build_clause_sem(
            &analyze(&["yar", "are", "ta"]),
            &overt(&[(Role::Patient, "kobun")]),
            &lex(),
            &mut env,
        )
        .unwrap();
        assert!(sem.roles.contains_key(&Role::Affected));
    }

    #[test]
    fn transitive_passive_plain_subject_has_no_affected() {
        let mut env = TokenEnv::new();
        let sem = build_clause_sem(
            &analyze(&["nusum", "are", "ta"]),
            &overt(&[(Role::Patient, "mado")]),
            &lex(),
            &mut env,
        )
        .unwrap();
        assert!(!sem.roles.contains_key(&Role::Affected));
        assert!(sem.roles.contains_key(&Role::Patient));
        assert!(sem.roles.contains_key(&Role::Agent));
    }

    #[test]
    fn zero_subject_transitive_passive_has_no_affected() {
        let mut env = TokenEnv::new();
        let sem = build_clause_sem(
            &analyze(&["okor", "are", "ta"]),
            &overt(&[]),
            &lex(),
            &mut env,
        )
        .unwrap();
        assert!(!sem.roles.contains_key(&Role::Affected));
        assert_eq!(sem.subject_role(), Some(Role::Patient));
    }

    #[test]
    fn unexpected_argument_is_rejected() {
        let mut env = TokenEnv::new();
        let err = build_clause_sem(
            &analyze(&["komaru"]),
            &overt(&[(Role::Object, "mado")]),
            &lex(),
            &mut env,
        )
        .unwrap_err();
        assert!(matches!(err, SemError::UnexpectedArgument { .. }));
    }

    #[test]
    fn sentence_final_garu_makes_observer_the_speaker() {
        let mut env = TokenEnv::new();
        let sem =
            build_clause_sem(&analyze(&["samu", "gat", "ta"]), &overt(&[]), &lex(), &mut env)
                .unwrap();
        let ctx = DiscourseContext::new("speaker");
        apply_sentence_final_rules(&sem, true, true, &ctx, &mut env).unwrap();
        assert_eq!(env.binding(sem.observer.unwrap().token), Some("speaker"));
        // o ≠ e now keeps the experiencer away from the speaker
        let exp = sem.role_token(Role::Experiencer).unwrap();
        assert!(env.bind(exp, "speaker").is_err());
    }

    #[test]
    fn sentence_final_bare_adjective_binds_experiencer_to_speaker() {
        let mut env = TokenEnv::new();
        let sem =
            build_clause_sem(&analyze(&["samu", "i"]), &overt(&[]), &lex(), &mut env).unwrap();
        let ctx = DiscourseContext::new("speaker");
        apply_sentence_final_rules(&sem, true, true, &ctx, &mut env).unwrap();
        assert_eq!(
            env.binding(sem.role_token(Role::Experiencer).unwrap()),
            Some("speaker")
        );
    }

    #[test]
    fn subordinate_clauses_are_untouched_by_speaker_rules() {
        let mut env = TokenEnv::new();
        let sem =
            build_clause_sem(&analyze(&["samu", "gat", "ta"]), &overt(&[]), &lex(), &mut env)
                .unwrap();
        let ctx = DiscourseContext::new("speaker");
        apply_sentence_final_rules(&sem, false, false, &ctx, &mut env).unwrap();
        assert_eq!(env.binding(sem.observer.unwrap().token), None);
    }

    #[test]
    fn complex_sem_introduces_one_motivated_per_level() {
        let mut env = TokenEnv::new();
        let sub =
            build_clause_sem(&analyze(&["samu", "gat", "ta"]), &overt(&[]), &lex(), &mut env)
                .unwrap();
        let main = build_clause_sem(
            &analyze(&["sime", "ta"]),
            &overt(&[(Role::Object, "mado")]),
            &lex(),
            &mut env,
        )
        .unwrap();
        let complex = build_complex_sem(
            &sub.fs,
            "node",
            ClauseLinkType::Cause,
            &main.fs,
            &mut env,
        );
        let m = complex.motivated.unwrap();
        assert_eq!(
            complex
                .fs
                .get_path(&[feat::SUB, feat::MOTIVATED])
                .unwrap()
                .as_token(),
            Some(m)
        );
        assert_eq!(
            complex.fs.get_path(&[feat::SUB, feat::REL]).unwrap().as_atom(),
            Some("node")
        );
        assert!(complex.fs.get_path(&[feat::MATRIX, feat::REL]).is_some());
    }

    #[test]
    fn temporal_link_has_no_motivated() {
        let mut env = TokenEnv::new();
        let sub =
            build_clause_sem(&analyze(&["samu", "gat", "ta"]), &overt(&[]), &lex(), &mut env)
                .unwrap();
        let main = build_clause_sem(&analyze(&["sime", "ta"]), &overt(&[]), &lex(), &mut env)
            .unwrap();
        let complex = build_complex_sem(
            &sub.fs,
            "toki",
            ClauseLinkType::Temporal,
            &main.fs,
            &mut env,
        );
        assert_eq!(complex.motivated, None);
        assert!(complex.fs.get_path(&[feat::SUB, feat::MOTIVATED]).is_none());
    }

    #[test]
    fn vp_conjunct_subject_is_controlled_by_main_subject() {
        let mut env = TokenEnv::new();
        let vp = build_clause_sem(&analyze(&["samuku"]), &overt(&[]), &lex(), &mut env).unwrap();
        let main = build_clause_sem(
            &analyze(&["sime", "ta"]),
            &overt(&[(Role::Object, "mado")]),
            &lex(),
            &mut env,
        )
        .unwrap();
        let main_subject = main.subject_token().unwrap();
        let fs = attach_vp_conjunct(&main.fs, &vp, main_subject, 0, &mut env).unwrap();
        assert!(env.same(vp.subject_token().unwrap(), main_subject));
        assert!(fs.get(feat::CONJ_VP).is_some());
    }
}

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::env::{EnvConflict, TokenEnv};
use super::node::{Fs, Node};

/// Unification failure, carrying the full feature path to the clash.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UnifyError {
    AtomClash {
        path: Vec<String>,
        left: String,
        right: String,
    },
    KindClash {
        path: Vec<String>,
        left: &'static str,
        right: &'static str,
    },
    Env {
        path: Vec<String>,
        conflict: EnvConflict,
    },
}

fn fmt_path(path: &[String], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if path.is_empty() {
        write!(f, "<root>")
    } else {
        write!(f, "{}", path.join("."))
    }
}

impl fmt::Display for UnifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnifyError::AtomClash { path, left, right } => {
                write!(f, "atom clash at ")?;
                fmt_path(path, f)?;
                write!(f, ": `{left}` vs `{right}`")
            }
            UnifyError::KindClash { path, left, right } => {
                write!(f, "kind clash at ")?;
                fmt_path(path, f)?;
                write!(f, ": {left} vs {right}")
            }
            UnifyError::Env { path, conflict } => {
                write!(f, "token conflict at ")?;
                fmt_path(path, f)?;
                write!(f, ": {conflict}")
            }
        }
    }
}

fn kind_name(fs: &Fs) -> &'static str {
    match fs.node() {
        Node::Atom(_) => "atom",
        Node::Token(_) => "token",
        Node::Complex(_) => "complex",
    }
}

/// Unifies two feature structures under an environment. Inputs are never
/// mutated; on success the result subsumes both and the returned
/// environment is consistent.
///
/// Token-token meetings add identity pairs; atom-atom meetings succeed iff
/// equal; token-atom meetings bind the token's class; complex nodes unify
/// feature-wise with the union of features. The empty complex structure is
/// the unit.
pub fn unify(a: &Fs, b: &Fs, env: &TokenEnv) -> Result<(Fs, TokenEnv), UnifyError> {
    let mut env = env.clone();
    let mut path = Vec::new();
    let fs = unify_at(a, b, &mut env, &mut path)?;
    Ok((fs, env))
}

fn unify_at(
    a: &Fs,
    b: &Fs,
    env: &mut TokenEnv,
    path: &mut Vec<String>,
) -> Result<Fs, UnifyError> {
    if a.is_empty_complex() {
        return Ok(b.clone());
    }
    if b.is_empty_complex() {
        return Ok(a.clone());
    }
    match (a.node(), b.node()) {
        (Node::Atom(x), Node::Atom(y)) => {
            if x == y {
                Ok(a.clone())
            } else {
                Err(UnifyError::AtomClash {
                    path: path.clone(),
                    left: x.clone(),
                    right: y.clone(),
                })
            }
        }
        (Node::Token(t), Node::Token(u)) => {
            env.add_identity(*t, *u).map_err(|conflict| UnifyError::Env {
                path: path.clone(),
                conflict,
            })?;
            Ok(Fs::token(env.rep(*t)))
        }
        (Node::Token(t), Node::Atom(s)) | (Node::Atom(s), Node::Token(t)) => {
            env.bind(*t, s).map_err(|conflict| UnifyError::Env {
                path: path.clone(),
                conflict,
            })?;
            Ok(Fs::token(env.rep(*t)))
        }
        (Node::Complex(ma), Node::Complex(mb)) => {
            let mut out: BTreeMap<String, Fs> = BTreeMap::new();
            for (k, va) in ma {
                match mb.get(k) {
                    Some(vb) => {
                        path.push(k.clone());
                        let merged = unify_at(va, vb, env, path)?;
                        path.pop();
                        out.insert(k.clone(), merged);
                    }
                    None => {
                        out.insert(k.clone(), va.clone());
                    }
                }
            }
            for (k, vb) in mb {
                if !ma.contains_key(k) {
                    out.insert(k.clone(), vb.clone());
                }
            }
            Ok(Fs::complex(out))
        }
        _ => Err(UnifyError::KindClash {
            path: path.clone(),
            left: kind_name(a),
            right: kind_name(b),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fs::{feat, render};
    use alloc::string::ToString;
    use alloc::vec;

    fn garu_with_observer(t: crate::fs::Token) -> Fs {
        Fs::complex(vec![
            (feat::REL.to_string(), Fs::atom("garu")),
            (feat::OBSERVER.to_string(), Fs::token(t)),
        ])
    }

    #[test]
    fn idempotent_on_identical_structures() {
        let mut env = TokenEnv::new();
        let t = env.fresh("t");
        let x = Fs::complex(vec![
            (feat::REL.to_string(), Fs::atom("sime")),
            (feat::AGENT.to_string(), Fs::token(t)),
        ]);
        let (out, env2) = unify(&x, &x, &env).unwrap();
        assert_eq!(render(&out, &env2), render(&x, &env));
    }

    #[test]
    fn empty_complex_is_the_unit() {
        let mut env = TokenEnv::new();
        let t = env.fresh("t");
        for x in [
            Fs::atom("mado"),
            Fs::token(t),
            Fs::complex(vec![(feat::REL.to_string(), Fs::atom("sime"))]),
        ] {
            let (l, le) = unify(&x, &Fs::empty(), &env).unwrap();
            let (r, re) = unify(&Fs::empty(), &x, &env).unwrap();
            assert_eq!(l, x);
            assert_eq!(r, x);
            assert_eq!(le, env);
            assert_eq!(re, env);
        }
    }

    #[test]
    fn atom_clash_reports_full_path() {
        let a = Fs::complex(vec![(
            feat::SOA.to_string(),
            Fs::complex(vec![(feat::REL.to_string(), Fs::atom("samu-i"))]),
        )]);
        let b = Fs::complex(vec![(
            feat::SOA.to_string(),
            Fs::complex(vec![(feat::REL.to_string(), Fs::atom("atu-i"))]),
        )]);
        let err = unify(&a, &b, &TokenEnv::new()).unwrap_err();
        match err {
            UnifyError::AtomClash { path, left, right } => {
                assert_eq!(path, vec!["soa".to_string(), "rel".to_string()]);
                assert_eq!((left.as_str(), right.as_str()), ("samu-i", "atu-i"));
            }
            other => panic!("expected atom clash, got {other}"),
        }
    }

    #[test]
    fn token_meeting_distinct_pair_fails() {
        // hand-evaluated: merging {t0,t1} intersects the distinct pair (t0,t1)
        let mut env = TokenEnv::new();
        let t0 = env.fresh("obs");
        let t1 = env.fresh("obs");
        env.add_distinct(t0, t1).unwrap();
        let a = garu_with_observer(t0);
        let b = garu_with_observer(t1);
        let err = unify(&a, &b, &env).unwrap_err();
        assert!(matches!(err, UnifyError::Env { .. }));
    }

    #[test]
    fn token_meeting_without_distinct_succeeds() {
        let mut env = TokenEnv::new();
        let t0 = env.fresh("obs");
        let t1 = env.fresh("obs");
        let (out, env2) = unify(&garu_with_observer(t0), &garu_with_observer(t1), &env).unwrap();
        assert!(env2.same(t0, t1));
        assert_eq!(out.get(feat::OBSERVER).unwrap().as_token(), Some(t0));
    }

    #[test]
    fn token_atom_meeting_binds() {
        let mut env = TokenEnv::new();
        let t = env.fresh("obj");
        let a = Fs::complex(vec![(feat::OBJECT.to_string(), Fs::token(t))]);
        let b = Fs::complex(vec![(feat::OBJECT.to_string(), Fs::atom("mado"))]);
        let (_, env2) = unify(&a, &b, &env).unwrap();
        assert_eq!(env2.binding(t), Some("mado"));
    }

    #[test]
    fn feature_union_keeps_one_sided_features() {
        let a = Fs::complex(vec![(feat::REL.to_string(), Fs::atom("sime"))]);
        let b = Fs::complex(vec![(feat::TENSE.to_string(), Fs::atom("past"))]);
        let (out, _) = unify(&a, &b, &TokenEnv::new()).unwrap();
        assert_eq!(out.get(feat::REL).unwrap().as_atom(), Some("sime"));
        assert_eq!(out.get(feat::TENSE).unwrap().as_atom(), Some("past"));
    }

    #[test]
    fn nonempty_complex_clashes_with_atom() {
        let a = Fs::complex(vec![(feat::REL.to_string(), Fs::atom("sime"))]);
        let b = Fs::atom("sime");
        assert!(matches!(
            unify(&a, &b, &TokenEnv::new()),
            Err(UnifyError::KindClash { .. })
        ));
    }
}

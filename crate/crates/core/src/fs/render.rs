use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use super::env::{Token, TokenEnv};
use super::node::{feat, Fs, Node};

/// Debug rendering in bracketed attribute-value notation, one feature per
/// line, `rel` first. Reentrancy is shown as `#n(origin)` tags numbered by
/// first appearance; a token bound to an entity shows the entity at its
/// first occurrence (`#n(origin)=Hanako`), and a bound token whose class
/// occurs only once renders as the bare entity. Output is stable across
/// runs for golden tests.
pub fn render(fs: &Fs, env: &TokenEnv) -> String {
    let mut occurrences: BTreeMap<Token, usize> = BTreeMap::new();
    let mut order: Vec<Token> = Vec::new();
    visit(fs, env, &mut |rep| {
        let n = occurrences.entry(rep).or_insert(0);
        if *n == 0 {
            order.push(rep);
        }
        *n += 1;
    });

    let mut numbers: BTreeMap<Token, usize> = BTreeMap::new();
    for rep in &order {
        let bound_singleton = env.binding(*rep).is_some() && occurrences[rep] == 1;
        if !bound_singleton {
            let n = numbers.len();
            numbers.insert(*rep, n);
        }
    }

    let mut out = String::new();
    let mut seen: BTreeMap<Token, bool> = BTreeMap::new();
    render_at(fs, env, &numbers, &mut seen, 0, &mut out);
    out
}

fn visit(fs: &Fs, env: &TokenEnv, f: &mut impl FnMut(Token)) {
    match fs.node() {
        Node::Atom(_) => {}
        Node::Token(t) => f(env.rep(*t)),
        Node::Complex(m) => {
            for (_, v) in ordered(m) {
                visit(v, env, f);
            }
        }
    }
}

/// `rel` first, then the remaining features alphabetically.
fn ordered(m: &BTreeMap<String, Fs>) -> Vec<(&String, &Fs)> {
    let mut out: Vec<(&String, &Fs)> = Vec::new();
    if let Some((k, v)) = m.get_key_value(feat::REL) {
        out.push((k, v));
    }
    for (k, v) in m {
        if k != feat::REL {
            out.push((k, v));
        }
    }
    out
}

fn render_at(
    fs: &Fs,
    env: &TokenEnv,
    numbers: &BTreeMap<Token, usize>,
    seen: &mut BTreeMap<Token, bool>,
    col: usize,
    out: &mut String,
) {
    match fs.node() {
        Node::Atom(s) => out.push_str(s),
        Node::Token(t) => {
            let rep = env.rep(*t);
            match numbers.get(&rep) {
                None => {
                    // bound token whose class occurs exactly once
                    out.push_str(env.binding(rep).unwrap_or("?"));
                }
                Some(n) => {
                    let _ = write!(out, "#{n}({})", env.origin(*t));
                    let first = !seen.get(&rep).copied().unwrap_or(false);
                    seen.insert(rep, true);
                    if first {
                        if let Some(e) = env.binding(rep) {
                            let _ = write!(out, "={e}");
                        }
                    }
                }
            }
        }
        Node::Complex(m) => {
            out.push('[');
            for (i, (k, v)) in ordered(m).into_iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                    for _ in 0..col + 1 {
                        out.push(' ');
                    }
                }
                let _ = write!(out, "{k}: ");
                render_at(v, env, numbers, seen, col + 1 + k.len() + 2, out);
            }
            out.push(']');
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    #[test]
    fn renders_reentrancy_and_bindings() {
        let mut env = TokenEnv::new();
        let o = env.fresh("obs");
        let e = env.fresh("exp");
        let a = env.fresh("agt");
        let obj = env.fresh("obj");
        env.add_distinct(o, e).unwrap();
        env.add_identity(o, a).unwrap();
        env.bind(obj, "mado").unwrap();

        let fs = Fs::complex(vec![
            (
                feat::MATRIX.to_string(),
                Fs::complex(vec![
                    (feat::REL.to_string(), Fs::atom("sime")),
                    (feat::AGENT.to_string(), Fs::token(a)),
                    (feat::OBJECT.to_string(), Fs::token(obj)),
                    (feat::TENSE.to_string(), Fs::atom("past")),
                ]),
            ),
            (
                feat::SUB.to_string(),
                Fs::complex(vec![
                    (feat::REL.to_string(), Fs::atom("garu")),
                    (feat::OBSERVER.to_string(), Fs::token(o)),
                    (feat::EXPERIENCER.to_string(), Fs::token(e)),
                ]),
            ),
        ]);

        let text = render(&fs, &env);
        // the shared class {o, a} gets one tag, shown at both paths
        assert!(text.contains("#0(agt)"));
        assert!(text.contains("#0(obs)"));
        // bound singleton renders as the bare entity
        assert!(text.contains("object: mado"));
        // one feature per line, rel first
        assert!(text.starts_with("[matrix: [rel: sime\n"));
        // stable across runs
        assert_eq!(text, render(&fs, &env));
    }
}

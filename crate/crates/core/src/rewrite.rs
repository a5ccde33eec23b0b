//! First-order linear patterns and rule application.
//!
//! Matching never unifies: pattern variables bind raw subterms, rigid
//! positions force weak-head normalization of the scrutinee on demand.

use crate::env::Env;
use crate::errors::Result;
use crate::reduce::Gas;
use crate::term::{Name, RT, Term};

#[derive(Clone, Debug)]
pub enum Pattern {
    /// Binding occurrence of a rule variable.
    Var(usize),
    /// Forced position: matches anything, binds nothing.
    Wild,
    /// Constant head applied to sub-patterns; arity must match exactly.
    Rigid { head: Name, args: Vec<Pattern> },
    /// Closed term, compared up to whnf + syntactic equality.
    Closed(RT),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RuleOrigin {
    UserPragma,
    CompiledDefinition,
}

#[derive(Clone, Debug)]
pub struct RewriteRule {
    pub head: Name,
    pub spine: Vec<Pattern>,
    /// Number of rule variables; `rhs` is closed under them.
    pub n_vars: usize,
    /// Replacement, de Bruijn over the rule telescope (var i = Var(n_vars-1-i)).
    pub rhs: RT,
    /// Rule variable types, for the type-preservation re-check.
    pub tele: Vec<(Name, RT)>,
    /// Fully explicit left-hand side over the telescope.
    pub lhs: RT,
    pub origin: RuleOrigin,
}

/// Try to match one pattern against one term (within `env`, spending `gas`
/// for on-demand whnf). On success the substitution slots are filled.
fn match_one(
    env: &Env,
    gas: &mut Gas,
    pat: &Pattern,
    term: &RT,
    subst: &mut [Option<RT>],
) -> Result<bool> {
    match pat {
        Pattern::Var(i) => {
            // Linearity is checked at compile time; slot is free.
            subst[*i] = Some(term.clone());
            Ok(true)
        }
        Pattern::Wild => Ok(true),
        Pattern::Rigid { head, args } => {
            let t = crate::reduce::whnf(env, gas, term.clone())?;
            let (h, sp) = crate::term::spine(&t);
            match &*h {
                Term::Const(n) if n == head && sp.len() == args.len() => {
                    for (p, (a, _)) in args.iter().zip(sp.iter()) {
                        if !match_one(env, gas, p, a, subst)? {
                            return Ok(false);
                        }
                    }
                    Ok(true)
                }
                _ => Ok(false),
            }
        }
        Pattern::Closed(c) => {
            let t = crate::reduce::whnf(env, gas, term.clone())?;
            Ok(t == *c)
        }
    }
}

/// Match a rule's pattern spine against a term spine prefix.
/// Returns the substitution (indexed by rule variable) on success.
pub fn match_spine(
    env: &Env,
    gas: &mut Gas,
    rule: &RewriteRule,
    args: &[(RT, bool)],
) -> Result<Option<Vec<RT>>> {
    if args.len() < rule.spine.len() {
        // Arity guard: partially applied heads never step.
        return Ok(None);
    }
    let mut subst: Vec<Option<RT>> = vec![None; rule.n_vars];
    for (p, (a, _)) in rule.spine.iter().zip(args.iter()) {
        if !match_one(env, gas, p, a, &mut subst)? {
            return Ok(None);
        }
    }
    let mut out = Vec::with_capacity(rule.n_vars);
    for (i, s) in subst.into_iter().enumerate() {
        match s {
            Some(t) => out.push(t),
            // A rule variable that never matched would be a compile bug.
            None => panic!("rule variable {} of `{}` unbound after match", i, rule.head),
        }
    }
    Ok(Some(out))
}

/// Instantiate a rule's replacement with a substitution produced by
/// `match_spine`. The rhs has no free variables besides rule variables.
pub fn instantiate(rule: &RewriteRule, subst: &[RT]) -> RT {
    fn go(t: &RT, n_vars: usize, subst: &[RT], depth: usize) -> RT {
        match &**t {
            Term::Var(i) => {
                if *i >= depth {
                    let rule_var = n_vars - 1 - (*i - depth);
                    crate::term::shift(&subst[rule_var], depth as i64)
                } else {
                    t.clone()
                }
            }
            Term::Lam { hint, implicit, body } => std::rc::Rc::new(Term::Lam {
                hint: hint.clone(),
                implicit: *implicit,
                body: go(body, n_vars, subst, depth + 1),
            }),
            Term::App { fun, arg, implicit } => std::rc::Rc::new(Term::App {
                fun: go(fun, n_vars, subst, depth),
                arg: go(arg, n_vars, subst, depth),
                implicit: *implicit,
            }),
            Term::Pi { hint, implicit, dom, cod } => std::rc::Rc::new(Term::Pi {
                hint: hint.clone(),
                implicit: *implicit,
                dom: go(dom, n_vars, subst, depth),
                cod: go(cod, n_vars, subst, depth + 1),
            }),
            Term::Sigma { hint, fst_ty, snd_ty } => std::rc::Rc::new(Term::Sigma {
                hint: hint.clone(),
                fst_ty: go(fst_ty, n_vars, subst, depth),
                snd_ty: go(snd_ty, n_vars, subst, depth + 1),
            }),
            Term::Pair { fst, snd } => {
                crate::term::pair(go(fst, n_vars, subst, depth), go(snd, n_vars, subst, depth))
            }
            Term::Proj1(x) => std::rc::Rc::new(Term::Proj1(go(x, n_vars, subst, depth))),
            Term::Proj2(x) => std::rc::Rc::new(Term::Proj2(go(x, n_vars, subst, depth))),
            Term::Sort | Term::Const(_) | Term::Meta(_) => t.clone(),
        }
    }
    go(&rule.rhs, rule.n_vars, subst, 0)
}

/// One head-rewrite attempt: tries the rules registered for `head` in
/// order, returns the instantiated replacement plus the leftover spine.
pub fn head_rewrite(
    env: &Env,
    gas: &mut Gas,
    head: &str,
    args: &[(RT, bool)],
) -> Result<Option<(RT, Vec<(RT, bool)>)>> {
    for rule in env.rules_for(head) {
        if let Some(subst) = match_spine(env, gas, rule, args)? {
            let body = instantiate(rule, &subst);
            let rest = args[rule.spine.len()..].to_vec();
            return Ok(Some((body, rest)));
        }
    }
    Ok(None)
}

//! Weak-head and full normalization.
//!
//! Head reduction is deterministic: leftmost-outermost position, β and
//! projection redexes first, then registered rewrite rules in
//! registration order. A fuel bound guards user rule sets that escaped
//! the termination checker.

use crate::env::Env;
use crate::errors::{Error, Result};
use crate::meta::MetaStore;
use crate::term::{self, RT, Term};
use std::rc::Rc;

pub const DEFAULT_FUEL: u64 = 10_000_000;

/// Head-step budget and counter. One `Gas` is threaded through a whole
/// top-level operation; `steps` feeds the corpus report.
#[derive(Debug)]
pub struct Gas {
    pub fuel: u64,
    pub steps: u64,
}

impl Gas {
    pub fn new(fuel: u64) -> Gas {
        Gas { fuel, steps: 0 }
    }
    pub fn standard() -> Gas {
        Gas::new(DEFAULT_FUEL)
    }
    fn step(&mut self) -> Result<()> {
        self.steps += 1;
        if self.steps > self.fuel {
            Err(Error::FuelExhausted(self.fuel))
        } else {
            Ok(())
        }
    }
}

/// Weak-head normalization with an optional metavariable store (used
/// during elaboration; kernel calls pass `None` via [`whnf`]).
pub fn whnf_with(env: &Env, gas: &mut Gas, metas: Option<&MetaStore>, t: RT) -> Result<RT> {
    let (mut head, mut args) = term::spine(&t);
    loop {
        match &*head.clone() {
            Term::Lam { body, .. } if !args.is_empty() => {
                gas.step()?;
                let (a, _) = args.remove(0);
                head = term::subst0(body, &a);
            }
            Term::Proj1(x) => {
                let xw = whnf_with(env, gas, metas, x.clone())?;
                match &*xw {
                    Term::Pair { fst, .. } => {
                        gas.step()?;
                        head = fst.clone();
                    }
                    _ => {
                        head = Rc::new(Term::Proj1(xw));
                        break;
                    }
                }
            }
            Term::Proj2(x) => {
                let xw = whnf_with(env, gas, metas, x.clone())?;
                match &*xw {
                    Term::Pair { snd, .. } => {
                        gas.step()?;
                        head = snd.clone();
                    }
                    _ => {
                        head = Rc::new(Term::Proj2(xw));
                        break;
                    }
                }
            }
            Term::Meta(m) => {
                if let Some(store) = metas {
                    if let Some(sol) = store.solution(*m) {
                        head = sol;
                        continue;
                    }
                }
                break;
            }
            Term::Const(name) => {
                match rule_step(env, gas, metas, name, &args)? {
                    Some((body, rest)) => {
                        gas.step()?;
                        head = body;
                        args = rest;
                    }
                    None => break,
                }
            }
            _ => break,
        }
    }
    Ok(term::apps(head, args))
}

/// Like [`crate::rewrite::head_rewrite`] but resolving metas on demand.
fn rule_step(
    env: &Env,
    gas: &mut Gas,
    metas: Option<&MetaStore>,
    head: &str,
    args: &[(RT, bool)],
) -> Result<Option<(RT, Vec<(RT, bool)>)>> {
    // Rigid sub-positions need whnf; reuse the rewrite matcher but give it
    // meta-resolved arguments when elaborating.
    match metas {
        None => crate::rewrite::head_rewrite(env, gas, head, args),
        Some(store) => {
            // Resolve solved metas shallowly in the spine so rigid heads
            // are visible to the first-order matcher.
            let mut resolved = Vec::with_capacity(args.len());
            for (a, i) in args {
                resolved.push((store.resolve_shallow(a.clone()), *i));
            }
            crate::rewrite::head_rewrite(env, gas, head, &resolved)
        }
    }
}

pub fn whnf(env: &Env, gas: &mut Gas, t: RT) -> Result<RT> {
    whnf_with(env, gas, None, t)
}

/// Full normalization: whnf applied recursively under binders and to all
/// subterms. Idempotent.
pub fn nf(env: &Env, gas: &mut Gas, t: RT) -> Result<RT> {
    let w = whnf(env, gas, t)?;
    let (head, args) = term::spine(&w);
    let head_nf: RT = match &*head {
        Term::Lam { hint, implicit, body } => Rc::new(Term::Lam {
            hint: hint.clone(),
            implicit: *implicit,
            body: nf(env, gas, body.clone())?,
        }),
        Term::Pi { hint, implicit, dom, cod } => Rc::new(Term::Pi {
            hint: hint.clone(),
            implicit: *implicit,
            dom: nf(env, gas, dom.clone())?,
            cod: nf(env, gas, cod.clone())?,
        }),
        Term::Sigma { hint, fst_ty, snd_ty } => Rc::new(Term::Sigma {
            hint: hint.clone(),
            fst_ty: nf(env, gas, fst_ty.clone())?,
            snd_ty: nf(env, gas, snd_ty.clone())?,
        }),
        Term::Pair { fst, snd } => {
            term::pair(nf(env, gas, fst.clone())?, nf(env, gas, snd.clone())?)
        }
        Term::Proj1(x) => Rc::new(Term::Proj1(nf(env, gas, x.clone())?)),
        Term::Proj2(x) => Rc::new(Term::Proj2(nf(env, gas, x.clone())?)),
        _ => head.clone(),
    };
    let mut out = head_nf;
    for (a, i) in args {
        out = term::app(out, nf(env, gas, a)?, i);
    }
    Ok(out)
}

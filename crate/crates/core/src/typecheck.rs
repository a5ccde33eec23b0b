//! Bidirectional kernel: conversion, inference, checking.
//!
//! Operates on fully elaborated (meta-free) terms. Conversion decides
//! definitional equality: β, projections, registered rewrite rules, η for
//! Pi and η for Sigma.

use crate::env::{DeclKind, Env};
use crate::errors::{Error, Result};
use crate::print;
use crate::reduce::{Gas, whnf};
use crate::term::{self, RT, Term};
use std::rc::Rc;

/// Typing context; entry 0 is the outermost binder, `Var(0)` refers to the
/// last entry.
#[derive(Clone, Default, Debug)]
pub struct Ctx {
    entries: Vec<(term::Name, RT)>,
}

impl Ctx {
    pub fn new() -> Ctx {
        Ctx::default()
    }
    pub fn len(&self) -> usize {
        self.entries.len()
    }
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
    /// Type of `Var(i)`, shifted to the full context.
    pub fn lookup(&self, i: usize) -> Option<RT> {
        if i >= self.entries.len() {
            return None;
        }
        let pos = self.entries.len() - 1 - i;
        Some(term::shift(&self.entries[pos].1, i as i64 + 1))
    }
    pub fn push(&mut self, name: term::Name, ty: RT) {
        self.entries.push((name, ty));
    }
    pub fn pop(&mut self) {
        self.entries.pop();
    }
    pub fn extended(&self, name: &str, ty: RT) -> Ctx {
        let mut c = self.clone();
        c.push(Rc::from(name), ty);
        c
    }
    pub fn name(&self, i: usize) -> Option<&term::Name> {
        if i >= self.entries.len() {
            return None;
        }
        Some(&self.entries[self.entries.len() - 1 - i].0)
    }
    pub fn iter_outermost_first(&self) -> impl Iterator<Item = &(term::Name, RT)> {
        self.entries.iter()
    }
}

/// Decide definitional equality.
pub fn conv(env: &Env, gas: &mut Gas, t: &RT, u: &RT) -> Result<bool> {
    if Rc::ptr_eq(t, u) || t == u {
        return Ok(true);
    }
    let tw = whnf(env, gas, t.clone())?;
    let uw = whnf(env, gas, u.clone())?;
    conv_whnf(env, gas, &tw, &uw)
}

fn conv_whnf(env: &Env, gas: &mut Gas, t: &RT, u: &RT) -> Result<bool> {
    use Term::*;
    match (&**t, &**u) {
        (Lam { body: b1, .. }, Lam { body: b2, .. }) => conv(env, gas, b1, b2),
        // η for Pi: compare f with λx. f x.
        (Lam { body, .. }, _) => {
            let expanded = term::app_e(term::shift(u, 1), term::var(0));
            conv(env, gas, body, &expanded)
        }
        (_, Lam { body, .. }) => {
            let expanded = term::app_e(term::shift(t, 1), term::var(0));
            conv(env, gas, &expanded, body)
        }
        // η for Sigma: compare p with (fst p, snd p).
        (Pair { fst: a1, snd: b1 }, Pair { fst: a2, snd: b2 }) => {
            Ok(conv(env, gas, a1, a2)? && conv(env, gas, b1, b2)?)
        }
        (Pair { fst, snd }, _) => Ok(conv(env, gas, fst, &Rc::new(Proj1(u.clone())))?
            && conv(env, gas, snd, &Rc::new(Proj2(u.clone())))?),
        (_, Pair { fst, snd }) => Ok(conv(env, gas, &Rc::new(Proj1(t.clone())), fst)?
            && conv(env, gas, &Rc::new(Proj2(t.clone())), snd)?),
        (
            Pi { implicit: i1, dom: d1, cod: c1, .. },
            Pi { implicit: i2, dom: d2, cod: c2, .. },
        ) => Ok(i1 == i2 && conv(env, gas, d1, d2)? && conv(env, gas, c1, c2)?),
        (
            Sigma { fst_ty: a1, snd_ty: b1, .. },
            Sigma { fst_ty: a2, snd_ty: b2, .. },
        ) => Ok(conv(env, gas, a1, a2)? && conv(env, gas, b1, b2)?),
        (Sort, Sort) => Ok(true),
        (Meta(_), _) | (_, Meta(_)) => Err(Error::MetaInKernel),
        _ => {
            // Rigid spines: heads must agree, arguments pairwise.
            let (h1, sp1) = term::spine(t);
            let (h2, sp2) = term::spine(u);
            let heads_eq = match (&*h1, &*h2) {
                (Var(i), Var(j)) => i == j,
                (Const(a), Const(b)) => a == b,
                (Proj1(a), Proj1(b)) | (Proj2(a), Proj2(b)) => conv(env, gas, a, b)?,
                _ => false,
            };
            if !heads_eq || sp1.len() != sp2.len() {
                return Ok(false);
            }
            for ((a, _), (b, _)) in sp1.iter().zip(sp2.iter()) {
                if !conv(env, gas, a, b)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}

fn mismatch(env: &Env, gas: &mut Gas, expected: &RT, found: &RT) -> Error {
    // Diagnostics print both sides in normal form with constants folded to
    // names; fall back to the raw term if normalization itself fails.
    let e = crate::reduce::nf(env, gas, expected.clone()).unwrap_or_else(|_| expected.clone());
    let f = crate::reduce::nf(env, gas, found.clone()).unwrap_or_else(|_| found.clone());
    Error::TypeMismatch { expected: print::term(env, &e), found: print::term(env, &f) }
}

/// Infer the type of a fully elaborated term.
pub fn infer(env: &Env, gas: &mut Gas, ctx: &Ctx, t: &RT) -> Result<RT> {
    match &**t {
        Term::Var(i) => ctx.lookup(*i).ok_or(Error::UnboundVariable(*i)),
        Term::Const(name) => match env.lookup(name) {
            Some(e) => Ok(e.ty.clone()),
            None => Err(Error::UnknownConstant(name.to_string())),
        },
        Term::Sort => Ok(term::sort()),
        Term::App { fun, arg, .. } => {
            let fty = infer(env, gas, ctx, fun)?;
            let fty = whnf(env, gas, fty)?;
            match &*fty {
                Term::Pi { dom, cod, .. } => {
                    check(env, gas, ctx, arg, dom)?;
                    Ok(term::subst0(cod, arg))
                }
                _ => Err(Error::NotAFunction(print::term(env, fun), print::term(env, &fty))),
            }
        }
        Term::Lam { .. } => Err(Error::NotInferable(print::term(env, t))),
        Term::Pi { hint, dom, cod, .. } => {
            check(env, gas, ctx, dom, &term::sort())?;
            let inner = ctx.extended(hint, dom.clone());
            check(env, gas, &inner, cod, &term::sort())?;
            Ok(term::sort())
        }
        Term::Sigma { hint, fst_ty, snd_ty } => {
            check(env, gas, ctx, fst_ty, &term::sort())?;
            let inner = ctx.extended(hint, fst_ty.clone());
            check(env, gas, &inner, snd_ty, &term::sort())?;
            Ok(term::sort())
        }
        Term::Pair { fst, snd } => {
            // Inference yields a non-dependent Sigma; dependent pairs must
            // be checked against an annotation site.
            let a = infer(env, gas, ctx, fst)?;
            let b = infer(env, gas, ctx, snd)?;
            Ok(term::sigma("_", a, term::shift(&b, 1)))
        }
        Term::Proj1(x) => {
            let ty = whnf(env, gas, infer(env, gas, ctx, x)?)?;
            match &*ty {
                Term::Sigma { fst_ty, .. } => Ok(fst_ty.clone()),
                _ => Err(Error::NotAPair(print::term(env, x), print::term(env, &ty))),
            }
        }
        Term::Proj2(x) => {
            let ty = whnf(env, gas, infer(env, gas, ctx, x)?)?;
            match &*ty {
                Term::Sigma { snd_ty, .. } => {
                    Ok(term::subst0(snd_ty, &Rc::new(Term::Proj1(x.clone()))))
                }
                _ => Err(Error::NotAPair(print::term(env, x), print::term(env, &ty))),
            }
        }
        Term::Meta(_) => Err(Error::MetaInKernel),
    }
}

/// Check a term against an expected type.
pub fn check(env: &Env, gas: &mut Gas, ctx: &Ctx, t: &RT, expected: &RT) -> Result<()> {
    let ew = whnf(env, gas, expected.clone())?;
    match (&**t, &*ew) {
        (Term::Lam { hint, implicit: li, body }, Term::Pi { implicit: pi_i, dom, cod, .. }) => {
            if li != pi_i {
                return Err(mismatch(env, gas, expected, &infer(env, gas, ctx, t)?));
            }
            let inner = ctx.extended(hint, dom.clone());
            check(env, gas, &inner, body, cod)
        }
        (Term::Lam { .. }, _) => Err(Error::TypeMismatch {
            expected: print::term(env, &ew),
            found: format!("a function ({})", print::term(env, t)),
        }),
        (Term::Pair { fst, snd }, Term::Sigma { fst_ty, snd_ty, .. }) => {
            check(env, gas, ctx, fst, fst_ty)?;
            let snd_exp = term::subst0(snd_ty, fst);
            check(env, gas, ctx, snd, &snd_exp)
        }
        _ => {
            let found = infer(env, gas, ctx, t)?;
            if conv(env, gas, &found, &ew)? {
                Ok(())
            } else {
                Err(mismatch(env, gas, &ew, &found))
            }
        }
    }
}

/// Well-formedness of a context prefix is assumed; this checks that a
/// candidate type is a type.
pub fn check_is_type(env: &Env, gas: &mut Gas, ctx: &Ctx, t: &RT) -> Result<()> {
    check(env, gas, ctx, t, &term::sort())
}

/// Re-derive the type-preservation certificate of a rewrite rule: under
/// the rule telescope, LHS and RHS must have convertible types.
pub fn recheck_rule(env: &Env, gas: &mut Gas, rule: &crate::rewrite::RewriteRule) -> Result<()> {
    let mut ctx = Ctx::new();
    for (n, ty) in &rule.tele {
        ctx.push(n.clone(), ty.clone());
    }
    let lt = infer(env, gas, &ctx, &rule.lhs)?;
    let rt = infer(env, gas, &ctx, &rule.rhs)?;
    if conv(env, gas, &lt, &rt)? {
        Ok(())
    } else {
        Err(Error::IllTypedRule(format!(
            "rule for `{}`: lhs type {} vs rhs type {}",
            rule.head,
            print::term(env, &lt),
            print::term(env, &rt)
        )))
    }
}

/// Heads must be declared for every registered rule.
pub fn head_declared(env: &Env, head: &str) -> Result<()> {
    match env.lookup(head) {
        Some(e) if matches!(e.kind, DeclKind::Postulate | DeclKind::Definition) => Ok(()),
        _ => Err(Error::HeadNotDeclared(head.to_string())),
    }
}

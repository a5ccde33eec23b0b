//! Core term syntax: nameless de Bruijn representation with name hints.

use std::fmt;
use std::rc::Rc;

pub type Name = Rc<str>;
pub type RT = Rc<Term>;
pub type MetaId = usize;

#[derive(Clone)]
pub enum Term {
    /// de Bruijn index, 0 = innermost binder.
    Var(usize),
    Lam {
        hint: Name,
        implicit: bool,
        body: RT,
    },
    App {
        fun: RT,
        arg: RT,
        implicit: bool,
    },
    Pi {
        hint: Name,
        implicit: bool,
        dom: RT,
        cod: RT,
    },
    Sigma {
        hint: Name,
        fst_ty: RT,
        snd_ty: RT,
    },
    Pair {
        fst: RT,
        snd: RT,
    },
    Proj1(RT),
    Proj2(RT),
    /// The single universe; Sort : Sort (type-in-type).
    Sort,
    Const(Name),
    Meta(MetaId),
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(i) => write!(f, "#{}", i),
            Term::Lam { hint, implicit, body } => {
                write!(f, "(λ{}{:?}. {:?})", if *implicit { "{" } else { "" }, hint, body)
            }
            Term::App { fun, arg, implicit } => {
                if *implicit {
                    write!(f, "({:?} {{{:?}}})", fun, arg)
                } else {
                    write!(f, "({:?} {:?})", fun, arg)
                }
            }
            Term::Pi { hint, implicit, dom, cod } => {
                let (o, c) = if *implicit { ("{", "}") } else { ("(", ")") };
                write!(f, "({}{:?} : {:?}{} -> {:?})", o, hint, dom, c, cod)
            }
            Term::Sigma { hint, fst_ty, snd_ty } => {
                write!(f, "(Σ({:?} : {:?}). {:?})", hint, fst_ty, snd_ty)
            }
            Term::Pair { fst, snd } => write!(f, "({:?}, {:?})", fst, snd),
            Term::Proj1(t) => write!(f, "{:?}.1", t),
            Term::Proj2(t) => write!(f, "{:?}.2", t),
            Term::Sort => write!(f, "Type"),
            Term::Const(n) => write!(f, "{}", n),
            Term::Meta(m) => write!(f, "?{}", m),
        }
    }
}

/// Structural equality ignoring name hints; implicit flags on App are
/// compared (elaborated terms are flag-consistent).
impl PartialEq for Term {
    fn eq(&self, other: &Term) -> bool {
        use Term::*;
        match (self, other) {
            (Var(i), Var(j)) => i == j,
            (Lam { implicit: i1, body: b1, .. }, Lam { implicit: i2, body: b2, .. }) => {
                i1 == i2 && b1 == b2
            }
            (
                App { fun: f1, arg: a1, .. },
                App { fun: f2, arg: a2, .. },
            ) => f1 == f2 && a1 == a2,
            (
                Pi { implicit: i1, dom: d1, cod: c1, .. },
                Pi { implicit: i2, dom: d2, cod: c2, .. },
            ) => i1 == i2 && d1 == d2 && c1 == c2,
            (
                Sigma { fst_ty: a1, snd_ty: b1, .. },
                Sigma { fst_ty: a2, snd_ty: b2, .. },
            ) => a1 == a2 && b1 == b2,
            (Pair { fst: a1, snd: b1 }, Pair { fst: a2, snd: b2 }) => a1 == a2 && b1 == b2,
            (Proj1(a), Proj1(b)) => a == b,
            (Proj2(a), Proj2(b)) => a == b,
            (Sort, Sort) => true,
            (Const(a), Const(b)) => a == b,
            (Meta(a), Meta(b)) => a == b,
            _ => false,
        }
    }
}
impl Eq for Term {}

pub fn var(i: usize) -> RT {
    Rc::new(Term::Var(i))
}
pub fn sort() -> RT {
    Rc::new(Term::Sort)
}
pub fn cst(n: &str) -> RT {
    Rc::new(Term::Const(Rc::from(n)))
}
pub fn meta(m: MetaId) -> RT {
    Rc::new(Term::Meta(m))
}
pub fn lam(hint: &str, implicit: bool, body: RT) -> RT {
    Rc::new(Term::Lam { hint: Rc::from(hint), implicit, body })
}
pub fn pi(hint: &str, implicit: bool, dom: RT, cod: RT) -> RT {
    Rc::new(Term::Pi { hint: Rc::from(hint), implicit, dom, cod })
}
pub fn sigma(hint: &str, fst_ty: RT, snd_ty: RT) -> RT {
    Rc::new(Term::Sigma { hint: Rc::from(hint), fst_ty, snd_ty })
}
pub fn pair(fst: RT, snd: RT) -> RT {
    Rc::new(Term::Pair { fst, snd })
}
pub fn app(fun: RT, arg: RT, implicit: bool) -> RT {
    Rc::new(Term::App { fun, arg, implicit })
}
pub fn app_e(fun: RT, arg: RT) -> RT {
    app(fun, arg, false)
}

/// Apply `fun` to a spine of (arg, implicit) pairs.
pub fn apps(fun: RT, args: impl IntoIterator<Item = (RT, bool)>) -> RT {
    args.into_iter().fold(fun, |f, (a, i)| app(f, a, i))
}

/// Decompose nested applications into (head, spine).
pub fn spine(t: &RT) -> (RT, Vec<(RT, bool)>) {
    let mut args = Vec::new();
    let mut cur = t.clone();
    loop {
        match &*cur {
            Term::App { fun, arg, implicit } => {
                args.push((arg.clone(), *implicit));
                cur = fun.clone();
            }
            _ => break,
        }
    }
    args.reverse();
    (cur, args)
}

/// Shift free variables with index >= cutoff by `by`.
pub fn shift_from(t: &RT, by: i64, cutoff: usize) -> RT {
    if by == 0 {
        return t.clone();
    }
    match &**t {
        Term::Var(i) => {
            if *i >= cutoff {
                var((*i as i64 + by) as usize)
            } else {
                t.clone()
            }
        }
        Term::Lam { hint, implicit, body } => Rc::new(Term::Lam {
            hint: hint.clone(),
            implicit: *implicit,
            body: shift_from(body, by, cutoff + 1),
        }),
        Term::App { fun, arg, implicit } => Rc::new(Term::App {
            fun: shift_from(fun, by, cutoff),
            arg: shift_from(arg, by, cutoff),
            implicit: *implicit,
        }),
        Term::Pi { hint, implicit, dom, cod } => Rc::new(Term::Pi {
            hint: hint.clone(),
            implicit: *implicit,
            dom: shift_from(dom, by, cutoff),
            cod: shift_from(cod, by, cutoff + 1),
        }),
        Term::Sigma { hint, fst_ty, snd_ty } => Rc::new(Term::Sigma {
            hint: hint.clone(),
            fst_ty: shift_from(fst_ty, by, cutoff),
            snd_ty: shift_from(snd_ty, by, cutoff + 1),
        }),
        Term::Pair { fst, snd } => pair(shift_from(fst, by, cutoff), shift_from(snd, by, cutoff)),
        Term::Proj1(x) => Rc::new(Term::Proj1(shift_from(x, by, cutoff))),
        Term::Proj2(x) => Rc::new(Term::Proj2(shift_from(x, by, cutoff))),
        Term::Sort | Term::Const(_) | Term::Meta(_) => t.clone(),
    }
}

pub fn shift(t: &RT, by: i64) -> RT {
    shift_from(t, by, 0)
}

/// Substitute `sub` for Var(depth), lowering variables above.
pub fn subst_at(t: &RT, depth: usize, sub: &RT) -> RT {
    match &**t {
        Term::Var(i) => {
            if *i == depth {
                shift(sub, depth as i64)
            } else if *i > depth {
                var(i - 1)
            } else {
                t.clone()
            }
        }
        Term::Lam { hint, implicit, body } => Rc::new(Term::Lam {
            hint: hint.clone(),
            implicit: *implicit,
            body: subst_at(body, depth + 1, sub),
        }),
        Term::App { fun, arg, implicit } => Rc::new(Term::App {
            fun: subst_at(fun, depth, sub),
            arg: subst_at(arg, depth, sub),
            implicit: *implicit,
        }),
        Term::Pi { hint, implicit, dom, cod } => Rc::new(Term::Pi {
            hint: hint.clone(),
            implicit: *implicit,
            dom: subst_at(dom, depth, sub),
            cod: subst_at(cod, depth + 1, sub),
        }),
        Term::Sigma { hint, fst_ty, snd_ty } => Rc::new(Term::Sigma {
            hint: hint.clone(),
            fst_ty: subst_at(fst_ty, depth, sub),
            snd_ty: subst_at(snd_ty, depth + 1, sub),
        }),
        Term::Pair { fst, snd } => pair(subst_at(fst, depth, sub), subst_at(snd, depth, sub)),
        Term::Proj1(x) => Rc::new(Term::Proj1(subst_at(x, depth, sub))),
        Term::Proj2(x) => Rc::new(Term::Proj2(subst_at(x, depth, sub))),
        Term::Sort | Term::Const(_) | Term::Meta(_) => t.clone(),
    }
}

/// β-substitute the topmost binder.
pub fn subst0(body: &RT, sub: &RT) -> RT {
    subst_at(body, 0, sub)
}

/// Collect free variable indices relative to the given depth offset.
pub fn free_vars(t: &RT, depth: usize, out: &mut Vec<usize>) {
    match &**t {
        Term::Var(i) => {
            if *i >= depth {
                out.push(*i - depth);
            }
        }
        Term::Lam { body, .. } => free_vars(body, depth + 1, out),
        Term::App { fun, arg, .. } => {
            free_vars(fun, depth, out);
            free_vars(arg, depth, out);
        }
        Term::Pi { dom, cod, .. } => {
            free_vars(dom, depth, out);
            free_vars(cod, depth + 1, out);
        }
        Term::Sigma { fst_ty, snd_ty, .. } => {
            free_vars(fst_ty, depth, out);
            free_vars(snd_ty, depth + 1, out);
        }
        Term::Pair { fst, snd } => {
            free_vars(fst, depth, out);
            free_vars(snd, depth, out);
        }
        Term::Proj1(x) | Term::Proj2(x) => free_vars(x, depth, out),
        Term::Sort | Term::Const(_) | Term::Meta(_) => {}
    }
}

/// Does meta `m` occur anywhere in `t`?
pub fn occurs_meta(t: &RT, m: MetaId) -> bool {
    match &**t {
        Term::Meta(k) => *k == m,
        Term::Var(_) | Term::Sort | Term::Const(_) => false,
        Term::Lam { body, .. } => occurs_meta(body, m),
        Term::App { fun, arg, .. } => occurs_meta(fun, m) || occurs_meta(arg, m),
        Term::Pi { dom, cod, .. } => occurs_meta(dom, m) || occurs_meta(cod, m),
        Term::Sigma { fst_ty, snd_ty, .. } => occurs_meta(fst_ty, m) || occurs_meta(snd_ty, m),
        Term::Pair { fst, snd } => occurs_meta(fst, m) || occurs_meta(snd, m),
        Term::Proj1(x) | Term::Proj2(x) => occurs_meta(x, m),
    }
}

pub fn contains_meta(t: &RT) -> bool {
    match &**t {
        Term::Meta(_) => true,
        Term::Var(_) | Term::Sort | Term::Const(_) => false,
        Term::Lam { body, .. } => contains_meta(body),
        Term::App { fun, arg, .. } => contains_meta(fun) || contains_meta(arg),
        Term::Pi { dom, cod, .. } => contains_meta(dom) || contains_meta(cod),
        Term::Sigma { fst_ty, snd_ty, .. } => contains_meta(fst_ty) || contains_meta(snd_ty),
        Term::Pair { fst, snd } => contains_meta(fst) || contains_meta(snd),
        Term::Proj1(x) | Term::Proj2(x) => contains_meta(x),
    }
}

/// Node count, used by size-bounded test samplers.
pub fn size(t: &RT) -> usize {
    match &**t {
        Term::Var(_) | Term::Sort | Term::Const(_) | Term::Meta(_) => 1,
        Term::Lam { body, .. } => 1 + size(body),
        Term::App { fun, arg, .. } => 1 + size(fun) + size(arg),
        Term::Pi { dom, cod, .. } => 1 + size(dom) + size(cod),
        Term::Sigma { fst_ty, snd_ty, .. } => 1 + size(fst_ty) + size(snd_ty),
        Term::Pair { fst, snd } => 1 + size(fst) + size(snd),
        Term::Proj1(x) | Term::Proj2(x) => 1 + size(x),
    }
}

//! Metavariable store.
//!
//! Metas are created closed and applied explicitly to the local context,
//! so solutions are closed lambda terms and occurrences need no shifting.

use crate::term::{self, MetaId, RT, Term};

#[derive(Clone, Debug)]
pub struct MetaEntry {
    /// Type is tracked loosely, for diagnostics only.
    pub ty_hint: Option<RT>,
    pub solution: Option<RT>,
    pub note: String,
}

#[derive(Clone, Default, Debug)]
pub struct MetaStore {
    entries: Vec<MetaEntry>,
}

impl MetaStore {
    pub fn new() -> MetaStore {
        MetaStore::default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Allocate a fresh meta and return it applied to the ambient context
    /// (`Var(depth-1) ... Var(0)`), which keeps solutions closed.
    pub fn fresh(&mut self, depth: usize, note: &str) -> RT {
        let id = self.entries.len();
        self.entries.push(MetaEntry { ty_hint: None, solution: None, note: note.to_string() });
        let mut t = term::meta(id);
        for i in (0..depth).rev() {
            t = term::app(t, term::var(i), false);
        }
        t
    }

    pub fn solution(&self, id: MetaId) -> Option<RT> {
        self.entries.get(id).and_then(|e| e.solution.clone())
    }

    pub fn note(&self, id: MetaId) -> &str {
        &self.entries[id].note
    }

    pub fn solve(&mut self, id: MetaId, sol: RT) {
        let e = &mut self.entries[id];
        debug_assert!(e.solution.is_none(), "meta ?{} solved twice", id);
        e.solution = Some(sol);
    }

    /// Resolve a solved meta head one level (enough to expose a rigid head
    /// to the first-order matcher).
    pub fn resolve_shallow(&self, t: RT) -> RT {
        let (head, args) = term::spine(&t);
        if let Term::Meta(m) = &*head {
            if let Some(sol) = self.solution(*m) {
                return self.resolve_shallow(term::apps(sol, args));
            }
        }
        t
    }

    /// Deep substitution of all solved metas; β-reduces solution spines.
    pub fn zonk(&self, t: &RT) -> RT {
        use std::rc::Rc;
        match &**t {
            Term::Meta(m) => match self.solution(*m) {
                Some(sol) => self.zonk(&sol),
                None => t.clone(),
            },
            Term::App { .. } => {
                let (head, args) = term::spine(t);
                let mut out = self.zonk(&head);
                for (a, i) in args {
                    let a = self.zonk(&a);
                    // Reduce solution lambdas on the spot so zonked terms
                    // don't accumulate administrative redexes.
                    out = match &*out {
                        Term::Lam { body, .. } => term::subst0(body, &a),
                        _ => term::app(out, a, i),
                    };
                }
                out
            }
            Term::Var(_) | Term::Sort | Term::Const(_) => t.clone(),
            Term::Lam { hint, implicit, body } => Rc::new(Term::Lam {
                hint: hint.clone(),
                implicit: *implicit,
                body: self.zonk(body),
            }),
            Term::Pi { hint, implicit, dom, cod } => Rc::new(Term::Pi {
                hint: hint.clone(),
                implicit: *implicit,
                dom: self.zonk(dom),
                cod: self.zonk(cod),
            }),
            Term::Sigma { hint, fst_ty, snd_ty } => Rc::new(Term::Sigma {
                hint: hint.clone(),
                fst_ty: self.zonk(fst_ty),
                snd_ty: self.zonk(snd_ty),
            }),
            Term::Pair { fst, snd } => term::pair(self.zonk(fst), self.zonk(snd)),
            Term::Proj1(x) => Rc::new(Term::Proj1(self.zonk(x))),
            Term::Proj2(x) => Rc::new(Term::Proj2(self.zonk(x))),
        }
    }

    /// Ids of metas that remain unsolved in `t` after zonking.
    pub fn unsolved_in(&self, t: &RT) -> Vec<MetaId> {
        let z = self.zonk(t);
        let mut out = Vec::new();
        collect_metas(&z, &mut out);
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Snapshot / rollback support for backtracking search.
    pub fn snapshot(&self) -> Vec<Option<RT>> {
        self.entries.iter().map(|e| e.solution.clone()).collect()
    }
    pub fn rollback(&mut self, snap: Vec<Option<RT>>) {
        self.entries.truncate(snap.len());
        for (e, s) in self.entries.iter_mut().zip(snap) {
            e.solution = s;
        }
    }
}

fn collect_metas(t: &RT, out: &mut Vec<MetaId>) {
    match &**t {
        Term::Meta(m) => out.push(*m),
        Term::Var(_) | Term::Sort | Term::Const(_) => {}
        Term::Lam { body, .. } => collect_metas(body, out),
        Term::App { fun, arg, .. } => {
            collect_metas(fun, out);
            collect_metas(arg, out);
        }
        Term::Pi { dom, cod, .. } => {
            collect_metas(dom, out);
            collect_metas(cod, out);
        }
        Term::Sigma { fst_ty, snd_ty, .. } => {
            collect_metas(fst_ty, out);
            collect_metas(snd_ty, out);
        }
        Term::Pair { fst, snd } => {
            collect_metas(fst, out);
            collect_metas(snd, out);
        }
        Term::Proj1(x) | Term::Proj2(x) => collect_metas(x, out),
    }
}

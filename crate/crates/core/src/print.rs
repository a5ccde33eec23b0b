//! Readable term printing: name hints for binders, implicit application
//! arguments hidden, `==` sugar for the identity type.

use crate::env::Env;
use crate::term::{RT, Term};

struct Printer<'a> {
    #[allow(dead_code)]
    env: Option<&'a Env>,
    names: Vec<String>,
    show_implicit: bool,
}

const APP_PREC: u8 = 3;
const EQ_PREC: u8 = 2;
const ARROW_PREC: u8 = 1;

impl<'a> Printer<'a> {
    fn fresh(&self, hint: &str) -> String {
        let base = if hint.is_empty() || hint == "_" { "x" } else { hint };
        if !self.names.iter().any(|n| n == base) {
            return base.to_string();
        }
        for k in 1.. {
            let cand = format!("{}{}", base, k);
            if !self.names.iter().any(|n| n == &cand) {
                return cand;
            }
        }
        unreachable!()
    }

    fn go(&mut self, t: &RT, prec: u8, out: &mut String) {
        match &**t {
            Term::Var(i) => {
                let idx = self.names.len().checked_sub(1 + i);
                match idx.and_then(|p| self.names.get(p)) {
                    Some(n) => out.push_str(n),
                    None => out.push_str(&format!("#{}", i)),
                }
            }
            Term::Sort => out.push_str("Type"),
            Term::Const(n) => out.push_str(n),
            Term::Meta(m) => out.push_str(&format!("?{}", m)),
            Term::App { .. } => {
                let (head, sp) = crate::term::spine(t);
                // `Id A a b` prints as the == sugar.
                if let Term::Const(n) = &*head {
                    if &**n == "Id" && sp.len() == 3 && !self.show_implicit {
                        let need = prec > EQ_PREC;
                        if need {
                            out.push('(');
                        }
                        self.go(&sp[1].0, EQ_PREC + 1, out);
                        out.push_str(" == ");
                        self.go(&sp[2].0, EQ_PREC + 1, out);
                        if need {
                            out.push(')');
                        }
                        return;
                    }
                }
                let args: Vec<&(RT, bool)> =
                    sp.iter().filter(|(_, imp)| self.show_implicit || !imp).collect();
                if args.is_empty() {
                    self.go(&head, prec, out);
                    return;
                }
                let need = prec > APP_PREC;
                if need {
                    out.push('(');
                }
                self.go(&head, APP_PREC + 1, out);
                for (a, imp) in args {
                    out.push(' ');
                    if *imp {
                        out.push('{');
                        self.go(a, 0, out);
                        out.push('}');
                    } else {
                        self.go(a, APP_PREC + 1, out);
                    }
                }
                if need {
                    out.push(')');
                }
            }
            Term::Lam { hint, implicit, body } => {
                let need = prec > 0;
                if need {
                    out.push('(');
                }
                let n = self.fresh(hint);
                out.push('\\');
                if *implicit {
                    out.push('{');
                    out.push_str(&n);
                    out.push('}');
                } else {
                    out.push_str(&n);
                }
                out.push_str(" -> ");
                self.names.push(n);
                self.go(body, 0, out);
                self.names.pop();
                if need {
                    out.push(')');
                }
            }
            Term::Pi { hint, implicit, dom, cod } => {
                let need = prec > ARROW_PREC;
                if need {
                    out.push('(');
                }
                let mut used = vec![0usize];
                crate::term::free_vars(cod, 1, &mut used);
                let dependent = {
                    let mut fv = Vec::new();
                    crate::term::free_vars(cod, 0, &mut fv);
                    fv.contains(&0)
                };
                if dependent || *implicit {
                    let n = self.fresh(hint);
                    let (o, c) = if *implicit { ('{', '}') } else { ('(', ')') };
                    out.push(o);
                    out.push_str(&n);
                    out.push_str(" : ");
                    self.go(dom, 0, out);
                    out.push(c);
                    out.push_str(" -> ");
                    self.names.push(n);
                    self.go(cod, ARROW_PREC, out);
                    self.names.pop();
                } else {
                    self.go(dom, ARROW_PREC + 1, out);
                    out.push_str(" -> ");
                    self.names.push("_".into());
                    self.go(cod, ARROW_PREC, out);
                    self.names.pop();
                }
                if need {
                    out.push(')');
                }
            }
            Term::Sigma { hint, fst_ty, snd_ty } => {
                let need = prec > APP_PREC;
                if need {
                    out.push('(');
                }
                out.push_str("Sigma ");
                self.go(fst_ty, APP_PREC + 1, out);
                let n = self.fresh(hint);
                out.push_str(&format!(" (\\{} -> ", n));
                self.names.push(n);
                self.go(snd_ty, 0, out);
                self.names.pop();
                out.push(')');
                if need {
                    out.push(')');
                }
            }
            Term::Pair { fst, snd } => {
                let need = prec > APP_PREC;
                if need {
                    out.push('(');
                }
                out.push_str("pair ");
                self.go(fst, APP_PREC + 1, out);
                out.push(' ');
                self.go(snd, APP_PREC + 1, out);
                if need {
                    out.push(')');
                }
            }
            Term::Proj1(x) => {
                let need = prec > APP_PREC;
                if need {
                    out.push('(');
                }
                out.push_str("fst ");
                self.go(x, APP_PREC + 1, out);
                if need {
                    out.push(')');
                }
            }
            Term::Proj2(x) => {
                let need = prec > APP_PREC;
                if need {
                    out.push('(');
                }
                out.push_str("snd ");
                self.go(x, APP_PREC + 1, out);
                if need {
                    out.push(')');
                }
            }
        }
    }
}

fn print_with(env: Option<&Env>, t: &RT, show_implicit: bool, names: Vec<String>) -> String {
    let mut p = Printer { env, names, show_implicit };
    let mut out = String::new();
    p.go(t, 0, &mut out);
    out
}

/// Print with implicit application arguments hidden.
pub fn term(env: &Env, t: &RT) -> String {
    print_with(Some(env), t, false, Vec::new())
}

/// Print under a context of binder names (outermost first).
pub fn term_in(env: &Env, names: Vec<String>, t: &RT) -> String {
    print_with(Some(env), t, false, names)
}

/// Print showing implicit arguments, for debugging.
pub fn term_verbose(env: &Env, t: &RT) -> String {
    print_with(Some(env), t, true, Vec::new())
}

pub fn term_no_env(t: &RT) -> String {
    print_with(None, t, false, Vec::new())
}

//! Recursive-descent parser. Whitespace-insensitive within a declaration;
//! declarations are separated by keywords, clauses by `|`.

use super::ast::*;
use super::lex::{Tok, Token, lex};
use crate::errors::{Error, Result};

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }
    fn peek2(&self) -> &Tok {
        &self.toks[(self.pos + 1).min(self.toks.len() - 1)].tok
    }
    fn span(&self) -> Span {
        self.toks[self.pos].span
    }
    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }
    fn err<T>(&self, expected: &str) -> Result<T> {
        let s = self.span();
        Err(Error::ParseError { line: s.line, col: s.col, expected: expected.to_string() })
    }
    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.err(what)
        }
    }
    fn ident(&mut self, what: &str) -> Result<String> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.bump();
                Ok(s)
            }
            _ => self.err(what),
        }
    }

    fn atom_start(&self) -> bool {
        matches!(
            self.peek(),
            Tok::Ident(_) | Tok::KwType | Tok::Underscore | Tok::LParen | Tok::Lambda
        )
    }

    fn atom(&mut self) -> Result<STerm> {
        let span = self.span();
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.bump();
                Ok(STerm::new(SNode::Ident(s), span))
            }
            Tok::KwType => {
                self.bump();
                Ok(STerm::new(SNode::Sort, span))
            }
            Tok::Underscore => {
                self.bump();
                Ok(STerm::new(SNode::Hole, span))
            }
            Tok::Lambda => {
                self.bump();
                let mut names = vec![self.ident("a binder name")?];
                while let Tok::Ident(_) = self.peek() {
                    names.push(self.ident("a binder name")?);
                }
                self.expect(Tok::Arrow, "`->` after lambda binders")?;
                let body = self.term()?;
                Ok(STerm::new(SNode::Lam(names, Box::new(body)), span))
            }
            Tok::LParen => {
                self.bump();
                let t = self.term()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(t)
            }
            _ => self.err("a term"),
        }
    }

    fn app_term(&mut self) -> Result<STerm> {
        let mut t = self.atom()?;
        while self.atom_start() {
            let span = t.span;
            let a = self.atom()?;
            t = STerm::new(SNode::App(Box::new(t), Box::new(a)), span);
        }
        Ok(t)
    }

    fn eq_term(&mut self) -> Result<STerm> {
        let t = self.app_term()?;
        if *self.peek() == Tok::DoubleEq {
            let span = t.span;
            self.bump();
            let u = self.app_term()?;
            Ok(STerm::new(SNode::Eq(Box::new(t), Box::new(u)), span))
        } else {
            Ok(t)
        }
    }

    /// Try `((x y : A))`- or `({x y : A})`-style binder groups followed by
    /// `->`; backtracks entirely if the shape does not fit.
    fn try_binder_arrow(&mut self) -> Result<Option<STerm>> {
        let start = self.pos;
        let mut groups: Vec<(bool, Vec<String>, STerm)> = Vec::new();
        loop {
            let implicit = match self.peek() {
                Tok::LParen => false,
                Tok::LBrace => true,
                _ => break,
            };
            let save = self.pos;
            self.bump();
            let mut names = Vec::new();
            while let Tok::Ident(_) = self.peek() {
                names.push(self.ident("binder name")?);
            }
            if names.is_empty() || *self.peek() != Tok::Colon {
                self.pos = save;
                break;
            }
            self.bump(); // colon
            let dom = self.term()?;
            let close = if implicit { Tok::RBrace } else { Tok::RParen };
            if *self.peek() != close {
                self.pos = start;
                return Ok(None);
            }
            self.bump();
            groups.push((implicit, names, dom));
        }
        if groups.is_empty() {
            self.pos = start;
            return Ok(None);
        }
        if *self.peek() != Tok::Arrow {
            self.pos = start;
            return Ok(None);
        }
        self.bump();
        let cod = self.term()?;
        let mut t = cod;
        for (implicit, names, dom) in groups.into_iter().rev() {
            for name in names.into_iter().rev() {
                let span = dom.span;
                t = STerm::new(
                    SNode::Arrow {
                        implicit,
                        name,
                        dom: Box::new(dom.clone()),
                        cod: Box::new(t),
                    },
                    span,
                );
            }
        }
        Ok(Some(t))
    }

    pub fn term(&mut self) -> Result<STerm> {
        if matches!(self.peek(), Tok::LParen | Tok::LBrace) {
            if let Some(t) = self.try_binder_arrow()? {
                return Ok(t);
            }
            if *self.peek() == Tok::LBrace {
                return self.err("a binder group `{x : A} -> ...`");
            }
        }
        let t = self.eq_term()?;
        if *self.peek() == Tok::Arrow {
            let span = t.span;
            self.bump();
            let u = self.term()?;
            Ok(STerm::new(SNode::SimpleArrow(Box::new(t), Box::new(u)), span))
        } else {
            Ok(t)
        }
    }

    fn clause(&mut self) -> Result<SClause> {
        let name = self.ident("a clause head")?;
        let mut pats = Vec::new();
        while self.atom_start() && *self.peek() != Tok::Lambda {
            pats.push(self.atom()?);
        }
        self.expect(Tok::Assign, "`=` in clause")?;
        let rhs = self.term()?;
        Ok(SClause { name, pats, rhs })
    }

    fn decl(&mut self) -> Result<SDecl> {
        match self.peek().clone() {
            Tok::KwPostulate => {
                self.bump();
                let name = self.ident("a name after `postulate`")?;
                self.expect(Tok::Colon, "`:` after postulate name")?;
                let ty = self.term()?;
                Ok(SDecl::Postulate { name, ty })
            }
            Tok::KwDef => {
                self.bump();
                let mut sigs = Vec::new();
                let name = self.ident("a name after `def`")?;
                self.expect(Tok::Colon, "`:` after def name")?;
                let ty = self.term()?;
                sigs.push((name, ty));
                while *self.peek() == Tok::KwAnd {
                    self.bump();
                    let name = self.ident("a name after `and`")?;
                    self.expect(Tok::Colon, "`:` after def name")?;
                    let ty = self.term()?;
                    sigs.push((name, ty));
                }
                let mut clauses = Vec::new();
                while *self.peek() == Tok::Pipe {
                    self.bump();
                    clauses.push(self.clause()?);
                }
                Ok(SDecl::DefBlock { sigs, clauses })
            }
            Tok::KwRewrite => {
                self.bump();
                let name = self.ident("an equation name after `rewrite`")?;
                Ok(SDecl::Rewrite { name })
            }
            Tok::KwInstance => {
                self.bump();
                let name = self.ident("a name after `instance`")?;
                Ok(SDecl::Instance { name })
            }
            Tok::KwCoh => {
                self.bump();
                let name = self.ident("a name after `coh`")?;
                self.expect(Tok::Colon, "`:` after coh name")?;
                let ty = self.term()?;
                Ok(SDecl::Coh { name, ty })
            }
            Tok::KwImport => {
                self.bump();
                let name = self.ident("a module name after `import`")?;
                Ok(SDecl::Import { name })
            }
            _ => self.err("a declaration keyword"),
        }
    }

    fn file(&mut self, path: &str) -> Result<SourceFile> {
        let mut decls = Vec::new();
        while *self.peek() != Tok::Eof {
            decls.push(self.decl()?);
        }
        Ok(SourceFile { path: path.to_string(), decls })
    }
}

pub fn parse_file(path: &str, text: &str) -> Result<SourceFile> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0 };
    p.file(path)
}

pub fn parse_term(text: &str) -> Result<STerm> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0 };
    let t = p.term()?;
    if *p.peek() != Tok::Eof {
        return p.err("end of input");
    }
    Ok(t)
}

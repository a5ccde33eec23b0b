//! Surface abstract syntax. Equality ignores source spans so parse/print
//! round-trips compare structurally.

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Span {
    pub line: usize,
    pub col: usize,
}

#[derive(Clone, Debug)]
pub struct STerm {
    pub node: SNode,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq)]
pub enum SNode {
    Ident(String),
    Sort,
    Hole,
    App(Box<STerm>, Box<STerm>),
    Lam(Vec<String>, Box<STerm>),
    /// `(x : A) -> B` or `{x : A} -> B`; groups with several names are
    /// expanded during parsing.
    Arrow { implicit: bool, name: String, dom: Box<STerm>, cod: Box<STerm> },
    /// Non-dependent `A -> B`.
    SimpleArrow(Box<STerm>, Box<STerm>),
    /// `a == b`, sugar for the identity type.
    Eq(Box<STerm>, Box<STerm>),
}

impl PartialEq for STerm {
    fn eq(&self, other: &Self) -> bool {
        self.node == other.node
    }
}

impl STerm {
    pub fn new(node: SNode, span: Span) -> STerm {
        STerm { node, span }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SClause {
    pub name: String,
    pub pats: Vec<STerm>,
    pub rhs: STerm,
}

#[derive(Clone, Debug, PartialEq)]
pub enum SDecl {
    Postulate { name: String, ty: STerm },
    /// One or more signatures (`and`-chained for mutual blocks) followed by
    /// `|`-introduced clauses.
    DefBlock { sigs: Vec<(String, STerm)>, clauses: Vec<SClause> },
    Rewrite { name: String },
    Instance { name: String },
    Coh { name: String, ty: STerm },
    Import { name: String },
}

#[derive(Clone, Debug, PartialEq)]
pub struct SourceFile {
    pub path: String,
    pub decls: Vec<SDecl>,
}

//! Environments: ordered, append-only declaration stores with rule sets
//! and instance registrations.

use crate::rewrite::RewriteRule;
use crate::term::{Name, RT};
use std::collections::HashMap;
use std::rc::Rc;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DeclKind {
    Postulate,
    /// A definition whose clauses were compiled to rewrite rules.
    Definition,
}

#[derive(Clone, Debug)]
pub struct EnvEntry {
    pub kind: DeclKind,
    pub ty: RT,
}

/// One committed checking environment. Lookup is by name; declaration
/// order is preserved for serialization and instance search.
#[derive(Clone, Default)]
pub struct Env {
    entries: HashMap<Name, EnvEntry>,
    order: Vec<Name>,
    rules: HashMap<Name, Vec<RewriteRule>>,
    instances: Vec<Name>,
    /// Solver depth used per committed coherence declaration.
    pub coh_depths: HashMap<Name, usize>,
}

impl Env {
    pub fn new() -> Env {
        Env::default()
    }

    pub fn lookup(&self, name: &str) -> Option<&EnvEntry> {
        self.entries.get(name)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.entries.contains_key(name)
    }

    pub fn declare(&mut self, name: &str, kind: DeclKind, ty: RT) -> crate::errors::Result<()> {
        if self.entries.contains_key(name) {
            return Err(crate::errors::Error::DuplicateDecl(name.to_string()));
        }
        let n: Name = Rc::from(name);
        self.entries.insert(n.clone(), EnvEntry { kind, ty });
        self.order.push(n);
        Ok(())
    }

    pub fn rules_for(&self, head: &str) -> &[RewriteRule] {
        self.rules.get(head).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// Rules are tried in registration order; first match wins.
    pub fn add_rule(&mut self, rule: RewriteRule) {
        self.rules.entry(rule.head.clone()).or_default().push(rule);
    }

    pub fn register_instance(&mut self, name: Name) {
        self.instances.push(name);
    }

    pub fn instances(&self) -> &[Name] {
        &self.instances
    }

    pub fn decl_order(&self) -> &[Name] {
        &self.order
    }

    pub fn all_rules(&self) -> impl Iterator<Item = &RewriteRule> {
        self.order
            .iter()
            .filter_map(move |n| self.rules.get(n))
            .flatten()
    }

    /// Deterministic textual dump of the committed environment, used by the
    /// reproducibility checks.
    pub fn serialize(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        for name in &self.order {
            let e = &self.entries[name];
            let kind = match e.kind {
                DeclKind::Postulate => "postulate",
                DeclKind::Definition => "definition",
            };
            writeln!(out, "{} {} : {:?}", kind, name, e.ty).unwrap();
            for r in self.rules_for(name) {
                writeln!(out, "  rule {} {:?} ~> {:?}", r.head, r.spine, r.rhs).unwrap();
            }
        }
        for i in &self.instances {
            writeln!(out, "instance {}", i).unwrap();
        }
        out
    }
}

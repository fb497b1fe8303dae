use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::signature::AlgebraSignature;
use crate::dsl::{bind, pretty, Expr};
use crate::scalars::QScalar;
use crate::superalg::{Element, Letter};

/// A defining relation `lhs = rhs`, kept both as written and as the
/// expanded free-algebra element `lhs - rhs`.
#[derive(Clone, Debug, PartialEq)]
pub struct Relation {
    pub name: String,
    pub lhs: Expr,
    pub rhs: Expr,
    pub element: Element<QScalar>,
    /// Consequence of the other relations, listed so rewriting has it
    /// directly (e.g. exchange rules for `kbar`).
    pub derived: bool,
}

impl Relation {
    /// Binds both sides. Panics if a generator is out of range, which is a
    /// construction bug in the caller.
    pub fn new(sig: &AlgebraSignature, name: String, lhs: Expr, rhs: Expr) -> Relation {
        let l = bind(sig, &lhs).unwrap_or_else(|e| panic!("relation {name}: {e}"));
        let r = bind(sig, &rhs).unwrap_or_else(|e| panic!("relation {name}: {e}"));
        Relation {
            name,
            lhs,
            rhs,
            element: l.sub(&r),
            derived: false,
        }
    }

    pub fn derived(mut self) -> Relation {
        self.derived = true;
        self
    }

    /// `lhs = rhs` in the expression language.
    pub fn text(&self) -> String {
        alloc::format!("{} = {}", pretty(&self.lhs), pretty(&self.rhs))
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.name, self.text())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PresentationKind {
    Chevalley,
    Green,
    /// All triple relations among the `a_i^±` (the full supercommutation
    /// table, not only the Green subset).
    Preoscillator,
}

impl PresentationKind {
    pub fn name(self) -> &'static str {
        match self {
            PresentationKind::Chevalley => "chevalley",
            PresentationKind::Green => "green",
            PresentationKind::Preoscillator => "preoscillator",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Presentation {
    pub signature: AlgebraSignature,
    pub kind: PresentationKind,
    pub deformed: bool,
    pub generators: Vec<Letter>,
    pub relations: Vec<Relation>,
}

impl Presentation {
    pub fn relation(&self, name: &str) -> Option<&Relation> {
        self.relations.iter().find(|r| r.name == name)
    }

    /// Relations that are part of the presentation as stated.
    pub fn defining(&self) -> impl Iterator<Item = &Relation> {
        self.relations.iter().filter(|r| !r.derived)
    }

    /// Stable text form: header, generators, then one relation per line.
    /// Identical presentations give identical text.
    pub fn canonical_text(&self) -> String {
        use core::fmt::Write;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{} m={} n={} deformed={}",
            self.kind.name(),
            self.signature.m(),
            self.signature.n(),
            self.deformed
        );
        for g in &self.generators {
            let _ = writeln!(out, "gen {g} {}", g.parity);
        }
        for r in &self.relations {
            let tag = if r.derived { " [derived]" } else { "" };
            let _ = writeln!(out, "{r}{tag}");
        }
        out
    }

    pub(crate) fn assert_unique_names(&self) {
        let mut names: Vec<&str> = self.relations.iter().map(|r| r.name.as_str()).collect();
        names.sort_unstable();
        let before = names.len();
        names.dedup();
        assert_eq!(before, names.len(), "duplicate relation names");
    }
}

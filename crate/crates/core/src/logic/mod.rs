//! First-order logic over the graph vocabulary `{E, =}`.
//!
//! `E` is interpreted as the irreflexive, symmetric edge relation of a
//! [`Graph`](crate::graph::Graph); `=` is identity on vertices.
//!
//! Text grammar (precedence `!` > `&` > `|` > `->`, implication right-associative):
//!
//! ```text
//! formula := quant | impl
//! quant   := ("forall" | "exists") IDENT formula
//! impl    := or ("->" impl)?
//! or      := and ("|" and)*
//! and     := unary ("&" unary)*
//! unary   := "!" unary | "(" formula ")" | atom
//! atom    := "E(" IDENT "," IDENT ")" | IDENT "=" IDENT
//! IDENT   := [a-z][a-z0-9_]*
//! ```

mod builtins;
mod eval;
mod parse;

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

pub use builtins::{extension_axiom, Builtin};
pub use eval::{evaluate, Sentence, Structure};
pub use parse::{parse_formula, parse_sentence};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum LogicError {
    #[error("syntax error at byte {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("free variables in sentence position: {}", .0.join(", "))]
    FreeVariables(Vec<String>),
    #[error("variable `{var}` is quantified twice on one branch")]
    Shadowed { var: String },
    #[error("extension axiom needs 0 <= m <= n and n >= 1, got m={m}, n={n}")]
    BadAxiom { m: usize, n: usize },
    #[error("unknown builtin `{0}`")]
    UnknownBuiltin(String),
    #[error("builtin parameter out of range: {0}")]
    BadParameter(String),
}

/// Formula abstract syntax tree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Forall(String, Box<Formula>),
    Exists(String, Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Not(Box<Formula>),
    Edge(String, String),
    Eq(String, String),
}

impl Formula {
    pub fn forall(var: impl Into<String>, body: Formula) -> Formula {
        Formula::Forall(var.into(), Box::new(body))
    }

    pub fn exists(var: impl Into<String>, body: Formula) -> Formula {
        Formula::Exists(var.into(), Box::new(body))
    }

    /// Nested universals, outermost first.
    pub fn forall_all<S: Into<String>>(vars: impl IntoIterator<Item = S>, body: Formula) -> Formula {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        vars.into_iter().rev().fold(body, |acc, v| Formula::forall(v, acc))
    }

    pub fn exists_all<S: Into<String>>(vars: impl IntoIterator<Item = S>, body: Formula) -> Formula {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        vars.into_iter().rev().fold(body, |acc, v| Formula::exists(v, acc))
    }

    pub fn edge(a: impl Into<String>, b: impl Into<String>) -> Formula {
        Formula::Edge(a.into(), b.into())
    }

    pub fn eq(a: impl Into<String>, b: impl Into<String>) -> Formula {
        Formula::Eq(a.into(), b.into())
    }

    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    /// Left-associated conjunction; `None` for an empty list.
    pub fn and_all(parts: impl IntoIterator<Item = Formula>) -> Option<Formula> {
        parts.into_iter().reduce(Formula::and)
    }

    /// `premise -> conclusion`, or just `conclusion` when the premise is empty.
    pub(crate) fn guarded(premise: Option<Formula>, conclusion: Formula) -> Formula {
        match premise {
            Some(p) => Formula::implies(p, conclusion),
            None => conclusion,
        }
    }

    pub fn free_variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free<'a>(&'a self, bound: &mut Vec<&'a str>, out: &mut BTreeSet<String>) {
        match self {
            Formula::Forall(v, b) | Formula::Exists(v, b) => {
                bound.push(v);
                b.collect_free(bound, out);
                bound.pop();
            }
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            Formula::Not(a) => a.collect_free(bound, out),
            Formula::Edge(x, y) | Formula::Eq(x, y) => {
                for v in [x, y] {
                    if !bound.contains(&v.as_str()) {
                        out.insert(v.clone());
                    }
                }
            }
        }
    }

    /// First variable quantified again inside its own scope, if any.
    pub fn shadowed_variable(&self) -> Option<String> {
        fn walk<'a>(f: &'a Formula, bound: &mut Vec<&'a str>) -> Option<String> {
            match f {
                Formula::Forall(v, b) | Formula::Exists(v, b) => {
                    if bound.contains(&v.as_str()) {
                        return Some(v.clone());
                    }
                    bound.push(v);
                    let r = walk(b, bound);
                    bound.pop();
                    r
                }
                Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                    walk(a, bound).or_else(|| walk(b, bound))
                }
                Formula::Not(a) => walk(a, bound),
                Formula::Edge(..) | Formula::Eq(..) => None,
            }
        }
        walk(self, &mut Vec::new())
    }

    pub fn is_sentence(&self) -> bool {
        self.free_variables().is_empty()
    }

    /// Checks the sentence invariants: no free and no shadowed variables.
    pub fn check_sentence(&self) -> Result<(), LogicError> {
        if let Some(var) = self.shadowed_variable() {
            return Err(LogicError::Shadowed { var });
        }
        let free = self.free_variables();
        if !free.is_empty() {
            return Err(LogicError::FreeVariables(free.into_iter().collect()));
        }
        Ok(())
    }

    /// Counts `(universal, existential)` quantifiers.
    pub fn quantifier_counts(&self) -> (usize, usize) {
        match self {
            Formula::Forall(_, b) => {
                let (u, e) = b.quantifier_counts();
                (u + 1, e)
            }
            Formula::Exists(_, b) => {
                let (u, e) = b.quantifier_counts();
                (u, e + 1)
            }
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                let (u1, e1) = a.quantifier_counts();
                let (u2, e2) = b.quantifier_counts();
                (u1 + u2, e1 + e2)
            }
            Formula::Not(a) => a.quantifier_counts(),
            Formula::Edge(..) | Formula::Eq(..) => (0, 0),
        }
    }

    /// Counts `Edge` atoms as `(positive, negated)`, by polarity.
    pub fn edge_atom_polarity(&self) -> (usize, usize) {
        fn walk(f: &Formula, positive: bool, acc: &mut (usize, usize)) {
            match f {
                Formula::Forall(_, b) | Formula::Exists(_, b) => walk(b, positive, acc),
                Formula::And(a, b) | Formula::Or(a, b) => {
                    walk(a, positive, acc);
                    walk(b, positive, acc);
                }
                Formula::Implies(a, b) => {
                    walk(a, !positive, acc);
                    walk(b, positive, acc);
                }
                Formula::Not(a) => walk(a, !positive, acc),
                Formula::Edge(..) if positive => acc.0 += 1,
                Formula::Edge(..) => acc.1 += 1,
                Formula::Eq(..) => {}
            }
        }
        let mut acc = (0, 0);
        walk(self, true, &mut acc);
        acc
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Forall(..) | Formula::Exists(..) => 0,
            Formula::Implies(..) => 1,
            Formula::Or(..) => 2,
            Formula::And(..) => 3,
            Formula::Not(..) | Formula::Edge(..) | Formula::Eq(..) => 4,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            f.write_str("(")?;
            self.write_at(f, 0)?;
            return f.write_str(")");
        }
        match self {
            Formula::Forall(v, b) => {
                write!(f, "forall {v} ")?;
                b.write_body(f)
            }
            Formula::Exists(v, b) => {
                write!(f, "exists {v} ")?;
                b.write_body(f)
            }
            Formula::Implies(a, b) => {
                a.write_at(f, 2)?;
                f.write_str(" -> ")?;
                b.write_at(f, 1)
            }
            Formula::Or(a, b) => {
                a.write_at(f, 2)?;
                f.write_str(" | ")?;
                b.write_at(f, 3)
            }
            Formula::And(a, b) => {
                a.write_at(f, 3)?;
                f.write_str(" & ")?;
                b.write_at(f, 4)
            }
            Formula::Not(a) => {
                f.write_str("!")?;
                match **a {
                    Formula::Eq(..) => {
                        f.write_str("(")?;
                        a.write_at(f, 0)?;
                        f.write_str(")")
                    }
                    _ => a.write_at(f, 4),
                }
            }
            Formula::Edge(x, y) => write!(f, "E({x},{y})"),
            Formula::Eq(x, y) => write!(f, "{x}={y}"),
        }
    }

    /// Quantifier bodies that are not themselves quantifiers or atoms get
    /// explicit parentheses, matching the conventional `forall x (…)` style.
    fn write_body(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Forall(..) | Formula::Exists(..) | Formula::Edge(..) | Formula::Not(..) => {
                self.write_at(f, 0)
            }
            _ => {
                f.write_str("(")?;
                self.write_at(f, 0)?;
                f.write_str(")")
            }
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, 0)
    }
}

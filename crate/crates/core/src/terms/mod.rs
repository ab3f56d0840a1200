//! Terms over the quasigroup signature `{·, /, \, u}` and over the loop
//! signature `{+}`, with parsing, evaluation on finite tables and exhaustive
//! identity checking.

mod eval;
mod parser;

use std::fmt;

use thiserror::Error;

pub use eval::{
    check_identity, check_identity_with, eval, eval_with, Assignment, CompiledIdentity, EvalConfig, Verdict,
    DEFAULT_BUDGET,
};
pub use parser::{parse_identity, parse_loop_identity, parse_loop_term, parse_term};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Op {
    Mul,
    LDiv,
    RDiv,
}

impl Op {
    pub fn symbol(self) -> char {
        match self {
            Op::Mul => '*',
            Op::LDiv => '\\',
            Op::RDiv => '/',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    /// The 0-ary symbol `u`.
    U,
    Bin(Op, Box<Term>, Box<Term>),
}

impl Term {
    pub fn var(name: impl Into<String>) -> Term {
        Term::Var(name.into())
    }

    pub fn bin(op: Op, l: Term, r: Term) -> Term {
        Term::Bin(op, Box::new(l), Box::new(r))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(l: Term, r: Term) -> Term {
        Term::bin(Op::Mul, l, r)
    }

    pub fn ldiv(l: Term, r: Term) -> Term {
        Term::bin(Op::LDiv, l, r)
    }

    pub fn rdiv(l: Term, r: Term) -> Term {
        Term::bin(Op::RDiv, l, r)
    }

    /// Variables in first-occurrence order, left to right.
    pub fn variables(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Term::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
            Term::U => {}
            Term::Bin(_, l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
        }
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match self {
            Term::Var(_) | Term::U => 1,
            Term::Bin(_, l, r) => 1 + l.size() + r.size(),
        }
    }

    /// Replaces every variable by the term `f` returns for it.
    pub fn substitute(&self, f: &impl Fn(&str) -> Term) -> Term {
        match self {
            Term::Var(v) => f(v),
            Term::U => Term::U,
            Term::Bin(op, l, r) => Term::bin(*op, l.substitute(f), r.substitute(f)),
        }
    }

    fn fmt_child(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Bin(..) => write!(f, "({self})"),
            _ => write!(f, "{self}"),
        }
    }
}

/// Binary children are always parenthesised, so printing never relies on
/// associativity.
impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => f.write_str(v),
            Term::U => f.write_str("u"),
            Term::Bin(op, l, r) => {
                l.fmt_child(f)?;
                write!(f, "{}", op.symbol())?;
                r.fmt_child(f)
            }
        }
    }
}

/// A quasigroup identity `lhs = rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Identity {
    pub lhs: Term,
    pub rhs: Term,
    variables: Vec<String>,
}

impl Identity {
    pub fn new(lhs: Term, rhs: Term) -> Self {
        let mut variables = lhs.variables();
        for v in rhs.variables() {
            if !variables.contains(&v) {
                variables.push(v);
            }
        }
        Identity { lhs, rhs, variables }
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

/// Terms of a loop `(Q, +)`; only the binary operation is supported.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LoopTerm {
    Var(String),
    Plus(Box<LoopTerm>, Box<LoopTerm>),
}

impl LoopTerm {
    pub fn plus(l: LoopTerm, r: LoopTerm) -> LoopTerm {
        LoopTerm::Plus(Box::new(l), Box::new(r))
    }

    pub fn variables(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            LoopTerm::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
            LoopTerm::Plus(l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
        }
    }
}

impl fmt::Display for LoopTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoopTerm::Var(v) => f.write_str(v),
            LoopTerm::Plus(l, r) => {
                for (i, side) in [l, r].into_iter().enumerate() {
                    if i == 1 {
                        f.write_str("+")?;
                    }
                    match side.as_ref() {
                        LoopTerm::Plus(..) => write!(f, "({side})")?,
                        LoopTerm::Var(v) => f.write_str(v)?,
                    }
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopIdentity {
    pub lhs: LoopTerm,
    pub rhs: LoopTerm,
}

impl LoopIdentity {
    pub fn variables(&self) -> Vec<String> {
        let mut vars = self.lhs.variables();
        for v in self.rhs.variables() {
            if !vars.contains(&v) {
                vars.push(v);
            }
        }
        vars
    }
}

impl fmt::Display for LoopIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at offset {position}: expected {}", .expected.join(" or "))]
    Syntax {
        position: usize,
        expected: Vec<&'static str>,
    },
    #[error("identity has no `=`")]
    MissingEquals,
    #[error("unsupported loop operation `{op}` at offset {position}; only `+` is allowed")]
    UnsupportedLoopOperation { position: usize, op: char },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("variable `{0}` is not bound")]
    UnboundVariable(String),
    #[error("{variables} variables over order {order} exceed the evaluation budget")]
    BudgetExceeded { variables: usize, order: usize },
}

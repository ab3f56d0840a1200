use std::fmt;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use super::{EvalError, Identity, Op, Term};
use crate::tables::{Element, QuasigroupTable};

/// Default cap on the number of assignments `check_identity` will scan.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EvalConfig {
    /// Element designated by the constant `u`.
    pub u: Element,
    /// Maximum number of assignments an exhaustive check may visit.
    pub budget: u64,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            u: 0,
            budget: DEFAULT_BUDGET,
        }
    }
}

/// Values for variables, kept in the identity's variable order.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct Assignment(pub Vec<(String, Element)>);

impl Assignment {
    pub fn get(&self, name: &str) -> Option<Element> {
        self.0.iter().find(|(n, _)| n == name).map(|&(_, v)| v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, Element)> {
        self.0.iter().map(|(n, v)| (n.as_str(), *v))
    }
}

impl<S: Into<String>> FromIterator<(S, Element)> for Assignment {
    fn from_iter<I: IntoIterator<Item = (S, Element)>>(iter: I) -> Self {
        Assignment(iter.into_iter().map(|(n, v)| (n.into(), v)).collect())
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(n, v)| format!("{n}={v}")).collect();
        f.write_str(&parts.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    /// The lexicographically first failing assignment.
    Fails(Assignment),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Holds => f.write_str("holds"),
            Verdict::Fails(a) => write!(f, "fails at {a}"),
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(None)?;
        match self {
            Verdict::Holds => m.serialize_entry("verdict", "holds")?,
            Verdict::Fails(a) => {
                m.serialize_entry("verdict", "fails")?;
                m.serialize_entry("counterexample", a)?;
            }
        }
        m.end()
    }
}

pub fn eval(term: &Term, q: &QuasigroupTable, assignment: &Assignment) -> Result<Element, EvalError> {
    eval_with(term, q, assignment, 0)
}

/// Evaluates with `u` bound to `u_elem`.
pub fn eval_with(
    term: &Term,
    q: &QuasigroupTable,
    assignment: &Assignment,
    u_elem: Element,
) -> Result<Element, EvalError> {
    Ok(match term {
        Term::Var(v) => assignment.get(v).ok_or_else(|| EvalError::UnboundVariable(v.clone()))?,
        Term::U => u_elem,
        Term::Bin(op, l, r) => {
            let a = eval_with(l, q, assignment, u_elem)?;
            let b = eval_with(r, q, assignment, u_elem)?;
            apply(q, *op, a, b)
        }
    })
}

#[inline]
fn apply(q: &QuasigroupTable, op: Op, a: Element, b: Element) -> Element {
    match op {
        Op::Mul => q.mul(a, b),
        Op::LDiv => q.ldiv(a, b),
        Op::RDiv => q.rdiv(a, b),
    }
}

#[derive(Debug, Clone, Copy)]
enum Node {
    Var(usize),
    U,
    Bin(Op, usize, usize),
}

/// Post-order node list; the root is the last node.
#[derive(Debug, Clone)]
struct Program {
    nodes: Vec<Node>,
}

impl Program {
    fn compile(term: &Term, vars: &[String]) -> Program {
        fn go(t: &Term, vars: &[String], nodes: &mut Vec<Node>) -> usize {
            let node = match t {
                Term::Var(v) => Node::Var(vars.iter().position(|x| x == v).expect("known variable")),
                Term::U => Node::U,
                Term::Bin(op, l, r) => {
                    let a = go(l, vars, nodes);
                    let b = go(r, vars, nodes);
                    Node::Bin(*op, a, b)
                }
            };
            nodes.push(node);
            nodes.len() - 1
        }
        let mut nodes = Vec::new();
        go(term, vars, &mut nodes);
        Program { nodes }
    }

    #[inline]
    fn run(&self, q: &QuasigroupTable, values: &[Element], u: Element, scratch: &mut Vec<Element>) -> Element {
        scratch.clear();
        for node in &self.nodes {
            let v = match *node {
                Node::Var(i) => values[i],
                Node::U => u,
                Node::Bin(op, a, b) => apply(q, op, scratch[a], scratch[b]),
            };
            scratch.push(v);
        }
        *scratch.last().unwrap()
    }
}

/// An identity flattened for repeated evaluation over one variable order.
#[derive(Debug, Clone)]
pub struct CompiledIdentity {
    variables: Vec<String>,
    lhs: Program,
    rhs: Program,
}

impl CompiledIdentity {
    pub fn new(identity: &Identity) -> Self {
        let variables = identity.variables().to_vec();
        CompiledIdentity {
            lhs: Program::compile(&identity.lhs, &variables),
            rhs: Program::compile(&identity.rhs, &variables),
            variables,
        }
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    /// Evaluates both sides under `values` (indexed like `variables`).
    pub fn sides(&self, q: &QuasigroupTable, values: &[Element], u: Element) -> (Element, Element) {
        let mut scratch = Vec::with_capacity(self.lhs.nodes.len().max(self.rhs.nodes.len()));
        let l = self.lhs.run(q, values, u, &mut scratch);
        let r = self.rhs.run(q, values, u, &mut scratch);
        (l, r)
    }

    /// Scans all `n^k` assignments in lexicographic order (first variable
    /// most significant) and stops at the first failure.
    pub fn check(&self, q: &QuasigroupTable, config: &EvalConfig) -> Result<Verdict, EvalError> {
        let n = q.order();
        let k = self.variables.len();
        let total = (n as u64).checked_pow(k as u32);
        if total.is_none_or(|t| t > config.budget) {
            return Err(EvalError::BudgetExceeded { variables: k, order: n });
        }
        let mut values = vec![0; k];
        let mut scratch = Vec::with_capacity(self.lhs.nodes.len().max(self.rhs.nodes.len()));
        loop {
            let l = self.lhs.run(q, &values, config.u, &mut scratch);
            let r = self.rhs.run(q, &values, config.u, &mut scratch);
            if l != r {
                return Ok(Verdict::Fails(self.variables.iter().cloned().zip(values).collect()));
            }
            // odometer, last variable fastest
            let mut i = k;
            loop {
                if i == 0 {
                    return Ok(Verdict::Holds);
                }
                i -= 1;
                values[i] += 1;
                if values[i] < n {
                    break;
                }
                values[i] = 0;
            }
        }
    }
}

/// Exhaustive check with `u = 0` and the default budget.
pub fn check_identity(q: &QuasigroupTable, identity: &Identity) -> Result<Verdict, EvalError> {
    check_identity_with(q, identity, &EvalConfig::default())
}

pub fn check_identity_with(
    q: &QuasigroupTable,
    identity: &Identity,
    config: &EvalConfig,
) -> Result<Verdict, EvalError> {
    CompiledIdentity::new(identity).check(q, config)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tables::{enumerate_latin_squares, random_latin_square};
    use crate::terms::{parse_identity, parse_term};

    fn m3() -> QuasigroupTable {
        QuasigroupTable::validate(&[vec![0, 2, 1], vec![1, 0, 2], vec![2, 1, 0]]).unwrap()
    }

    fn s3() -> QuasigroupTable {
        crate::constructions::resolve_group(&crate::constructions::GroupSpec::S3)
    }

    const AXIOMS: [&str; 4] = ["(x*y)/y = x", "(x/y)*y = x", "y*(y\\x) = x", "y\\(y*x) = x"];

    #[test]
    fn eval_examples() {
        let q = m3();
        let a: Assignment = [("x", 1), ("y", 2)].into_iter().collect();
        assert_eq!(eval(&parse_term("x/y").unwrap(), &q, &a).unwrap(), 0);
        assert_eq!(eval(&parse_term("x*(x\\y)").unwrap(), &q, &a).unwrap(), 2);
        assert_eq!(eval(&parse_term("u").unwrap(), &q, &Assignment::default()).unwrap(), 0);
        assert_eq!(
            eval_with(&parse_term("u").unwrap(), &q, &Assignment::default(), 2).unwrap(),
            2
        );
        assert_eq!(
            eval(&parse_term("x*z").unwrap(), &q, &a),
            Err(EvalError::UnboundVariable("z".into()))
        );
    }

    #[test]
    fn mediality_on_m3_and_s3() {
        let medial = parse_identity("(x*y)*(z*w) = (x*z)*(y*w)").unwrap();
        assert_eq!(check_identity(&m3(), &medial).unwrap(), Verdict::Holds);
        let Verdict::Fails(cex) = check_identity(&s3(), &medial).unwrap() else {
            panic!("S3 is not medial");
        };
        let q = s3();
        let l = eval(&medial.lhs, &q, &cex).unwrap();
        let r = eval(&medial.rhs, &q, &cex).unwrap();
        assert_ne!(l, r);
    }

    #[test]
    fn counterexample_is_lexicographically_first() {
        let q = random_latin_square(4, 7);
        let id = parse_identity("x*y = y*x").unwrap();
        if let Verdict::Fails(cex) = check_identity(&q, &id).unwrap() {
            let (x, y) = (cex.get("x").unwrap(), cex.get("y").unwrap());
            let first = (0..4)
                .flat_map(|a| (0..4).map(move |b| (a, b)))
                .find(|&(a, b)| q.mul(a, b) != q.mul(b, a))
                .unwrap();
            assert_eq!((x, y), first);
        }
    }

    #[test]
    fn axioms_hold_on_every_small_square() {
        let ids: Vec<_> = AXIOMS.iter().map(|s| parse_identity(s).unwrap()).collect();
        for n in 1..=4 {
            for q in enumerate_latin_squares(n).unwrap() {
                for id in &ids {
                    assert!(check_identity(&q, id).unwrap().holds());
                }
            }
        }
    }

    #[test]
    fn budget_is_respected() {
        let q = random_latin_square(10, 1);
        let id = parse_identity("((a*b)*(c*d))*(e*f) = ((a*b)*(c*d))*(e*f)").unwrap();
        let tight = EvalConfig {
            budget: 999_999,
            ..EvalConfig::default()
        };
        assert_eq!(
            check_identity_with(&q, &id, &tight),
            Err(EvalError::BudgetExceeded {
                variables: 6,
                order: 10
            })
        );
        let exact = EvalConfig {
            budget: 1_000_000,
            ..EvalConfig::default()
        };
        assert!(check_identity_with(&q, &id, &exact).unwrap().holds());
    }

    #[test]
    fn verdict_json() {
        let v = Verdict::Fails([("x", 0), ("y", 1)].into_iter().collect());
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"verdict":"fails","counterexample":[["x",0],["y",1]]}"#
        );
        assert_eq!(
            serde_json::to_string(&Verdict::Holds).unwrap(),
            r#"{"verdict":"holds"}"#
        );
    }
}

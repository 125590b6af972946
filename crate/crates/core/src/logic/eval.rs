//! Brute-force Tarskian evaluation with short-circuiting.
//!
//! A sentence is compiled once: every quantifier gets a slot in a flat
//! assignment array, so evaluation is a plain recursive walk with no name
//! lookups. Worst case is `n^q` assignments for `q` quantifiers.

use crate::graph::Graph;

use super::{Formula, LogicError};

/// A finite structure for the vocabulary `{E}`: universe `0..size()`.
pub trait Structure {
    fn size(&self) -> usize;
    fn adjacent(&self, u: usize, v: usize) -> bool;
}

impl Structure for Graph {
    fn size(&self) -> usize {
        self.vertex_count()
    }

    #[inline]
    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.has_edge(u, v)
    }
}

#[derive(Clone, Debug)]
enum Op {
    Forall(usize, Box<Op>),
    Exists(usize, Box<Op>),
    And(Box<Op>, Box<Op>),
    Or(Box<Op>, Box<Op>),
    Implies(Box<Op>, Box<Op>),
    Not(Box<Op>),
    Edge(usize, usize),
    Eq(usize, usize),
}

/// A validated, compiled sentence.
#[derive(Clone, Debug)]
pub struct Sentence {
    formula: Formula,
    program: Op,
    slots: usize,
}

impl Sentence {
    pub fn new(formula: Formula) -> Result<Sentence, LogicError> {
        formula.check_sentence()?;
        let mut scope = Vec::new();
        let mut slots = 0;
        let program = compile(&formula, &mut scope, &mut slots);
        Ok(Sentence { formula, program, slots })
    }

    pub fn formula(&self) -> &Formula {
        &self.formula
    }

    pub fn holds<S: Structure + ?Sized>(&self, s: &S) -> bool {
        let mut env = vec![0usize; self.slots];
        run(&self.program, s, &mut env)
    }
}

fn compile<'a>(f: &'a Formula, scope: &mut Vec<(&'a str, usize)>, slots: &mut usize) -> Op {
    let lookup = |scope: &Vec<(&str, usize)>, name: &str| {
        scope
            .iter()
            .rev()
            .find(|(n, _)| *n == name)
            .map(|&(_, s)| s)
            .expect("sentence has no free variables")
    };
    match f {
        Formula::Forall(v, b) | Formula::Exists(v, b) => {
            let slot = *slots;
            *slots += 1;
            scope.push((v, slot));
            let body = Box::new(compile(b, scope, slots));
            scope.pop();
            if matches!(f, Formula::Forall(..)) {
                Op::Forall(slot, body)
            } else {
                Op::Exists(slot, body)
            }
        }
        Formula::And(a, b) => Op::And(Box::new(compile(a, scope, slots)), Box::new(compile(b, scope, slots))),
        Formula::Or(a, b) => Op::Or(Box::new(compile(a, scope, slots)), Box::new(compile(b, scope, slots))),
        Formula::Implies(a, b) => {
            Op::Implies(Box::new(compile(a, scope, slots)), Box::new(compile(b, scope, slots)))
        }
        Formula::Not(a) => Op::Not(Box::new(compile(a, scope, slots))),
        Formula::Edge(x, y) => Op::Edge(lookup(scope, x), lookup(scope, y)),
        Formula::Eq(x, y) => Op::Eq(lookup(scope, x), lookup(scope, y)),
    }
}

fn run<S: Structure + ?Sized>(op: &Op, s: &S, env: &mut [usize]) -> bool {
    match op {
        Op::Forall(slot, body) => (0..s.size()).all(|v| {
            env[*slot] = v;
            run(body, s, env)
        }),
        Op::Exists(slot, body) => (0..s.size()).any(|v| {
            env[*slot] = v;
            run(body, s, env)
        }),
        Op::And(a, b) => run(a, s, env) && run(b, s, env),
        Op::Or(a, b) => run(a, s, env) || run(b, s, env),
        Op::Implies(a, b) => !run(a, s, env) || run(b, s, env),
        Op::Not(a) => !run(a, s, env),
        Op::Edge(x, y) => s.adjacent(env[*x], env[*y]),
        Op::Eq(x, y) => env[*x] == env[*y],
    }
}

/// Truth of a sentence in `g`.
pub fn evaluate(f: &Formula, g: &Graph) -> Result<bool, LogicError> {
    Ok(Sentence::new(f.clone())?.holds(g))
}

//! Recursive-descent parser for the formula grammar in the module docs.

use super::{Formula, LogicError};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Forall,
    Exists,
    Ident(String),
    EdgeRel,
    LParen,
    RParen,
    Comma,
    Equals,
    Bang,
    Amp,
    Pipe,
    Arrow,
}

fn describe(t: Option<&Tok>) -> String {
    match t {
        None => "end of input".into(),
        Some(Tok::Ident(s)) => format!("identifier `{s}`"),
        Some(other) => format!("{other:?}"),
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, LogicError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let simple = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            b',' => Some(Tok::Comma),
            b'=' => Some(Tok::Equals),
            b'!' => Some(Tok::Bang),
            b'&' => Some(Tok::Amp),
            b'|' => Some(Tok::Pipe),
            b'E' => Some(Tok::EdgeRel),
            _ => None,
        };
        if let Some(t) = simple {
            out.push((start, t));
            i += 1;
            continue;
        }
        if c == b'-' && bytes.get(i + 1) == Some(&b'>') {
            out.push((start, Tok::Arrow));
            i += 2;
            continue;
        }
        if c.is_ascii_lowercase() {
            while i < bytes.len() && (bytes[i].is_ascii_lowercase() || bytes[i].is_ascii_digit() || bytes[i] == b'_') {
                i += 1;
            }
            let word = &text[start..i];
            out.push((
                start,
                match word {
                    "forall" => Tok::Forall,
                    "exists" => Tok::Exists,
                    _ => Tok::Ident(word.to_string()),
                },
            ));
            continue;
        }
        return Err(LogicError::Syntax {
            pos: start,
            message: format!("unexpected character `{}`", text[start..].chars().next().unwrap()),
        });
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    bound: Vec<String>,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn error(&self, expected: &str) -> LogicError {
        LogicError::Syntax {
            pos: self.pos(),
            message: format!("expected {expected}, found {}", describe(self.peek())),
        }
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<(), LogicError> {
        if self.eat(&t) {
            Ok(())
        } else {
            Err(self.error(what))
        }
    }

    fn ident(&mut self) -> Result<String, LogicError> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.at += 1;
                Ok(s)
            }
            _ => Err(self.error("identifier")),
        }
    }

    fn formula(&mut self) -> Result<Formula, LogicError> {
        let quant = match self.peek() {
            Some(Tok::Forall) => Some(true),
            Some(Tok::Exists) => Some(false),
            _ => None,
        };
        let Some(universal) = quant else {
            return self.implication();
        };
        self.at += 1;
        let var = self.ident()?;
        if self.bound.contains(&var) {
            return Err(LogicError::Shadowed { var });
        }
        self.bound.push(var.clone());
        let body = self.formula()?;
        self.bound.pop();
        Ok(if universal {
            Formula::forall(var, body)
        } else {
            Formula::exists(var, body)
        })
    }

    fn implication(&mut self) -> Result<Formula, LogicError> {
        let lhs = self.disjunction()?;
        if self.eat(&Tok::Arrow) {
            let rhs = self.implication()?;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Formula, LogicError> {
        let mut acc = self.conjunction()?;
        while self.eat(&Tok::Pipe) {
            acc = Formula::or(acc, self.conjunction()?);
        }
        Ok(acc)
    }

    fn conjunction(&mut self) -> Result<Formula, LogicError> {
        let mut acc = self.unary()?;
        while self.eat(&Tok::Amp) {
            acc = Formula::and(acc, self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Formula, LogicError> {
        match self.peek() {
            Some(Tok::Bang) => {
                self.at += 1;
                Ok(Formula::not(self.unary()?))
            }
            Some(Tok::LParen) => {
                self.at += 1;
                let inner = self.formula()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Some(Tok::EdgeRel) => {
                self.at += 1;
                self.expect(Tok::LParen, "`(` after `E`")?;
                let a = self.ident()?;
                self.expect(Tok::Comma, "`,`")?;
                let b = self.ident()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(Formula::Edge(a, b))
            }
            Some(Tok::Ident(_)) => {
                let a = self.ident()?;
                self.expect(Tok::Equals, "`=`")?;
                let b = self.ident()?;
                Ok(Formula::Eq(a, b))
            }
            _ => Err(self.error("formula")),
        }
    }
}

/// Parses a formula, which may have free variables. Shadowing is rejected.
pub fn parse_formula(text: &str) -> Result<Formula, LogicError> {
    let mut p = Parser {
        toks: tokenize(text)?,
        at: 0,
        end: text.len(),
        bound: Vec::new(),
    };
    let f = p.formula()?;
    if p.at != p.toks.len() {
        return Err(p.error("end of input"));
    }
    Ok(f)
}

/// Parses a sentence: a formula without free variables.
pub fn parse_sentence(text: &str) -> Result<Formula, LogicError> {
    let f = parse_formula(text)?;
    f.check_sentence()?;
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_escape_sentence() {
        let f = parse_sentence("forall x forall y exists z (!(x=y) -> (E(y,z) & !E(x,z)))").unwrap();
        let expected = Formula::forall_all(
            ["x", "y"],
            Formula::exists(
                "z",
                Formula::implies(
                    Formula::not(Formula::eq("x", "y")),
                    Formula::and(Formula::edge("y", "z"), Formula::not(Formula::edge("x", "z"))),
                ),
            ),
        );
        assert_eq!(f, expected);
    }

    #[test]
    fn rejects_free_variables_and_shadowing() {
        assert_eq!(
            parse_sentence("E(x,y)"),
            Err(LogicError::FreeVariables(vec!["x".into(), "y".into()]))
        );
        assert!(parse_formula("E(x,y)").is_ok());
        assert_eq!(
            parse_sentence("forall x exists x E(x,x)"),
            Err(LogicError::Shadowed { var: "x".into() })
        );
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse_formula("forall x (E(x,x) & )") {
            Err(LogicError::Syntax { pos, .. }) => assert_eq!(pos, 19),
            other => panic!("{other:?}"),
        }
        match parse_formula("E(x,y) E(x,y)") {
            Err(LogicError::Syntax { pos, .. }) => assert_eq!(pos, 7),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_formula("x # y"), Err(LogicError::Syntax { pos: 2, .. })));
        assert!(parse_formula("forall E(x,x)").is_err());
        assert!(parse_formula("").is_err());
    }

    #[test]
    fn precedence_and_associativity() {
        let f = parse_formula("a=b | c=d & E(a,c) -> E(a,b) -> a=a").unwrap();
        let expected = Formula::implies(
            Formula::or(Formula::eq("a", "b"), Formula::and(Formula::eq("c", "d"), Formula::edge("a", "c"))),
            Formula::implies(Formula::edge("a", "b"), Formula::eq("a", "a")),
        );
        assert_eq!(f, expected);
        let left = parse_formula("a=a | b=b | c=c").unwrap();
        assert!(matches!(left, Formula::Or(ref l, _) if matches!(**l, Formula::Or(..))));
    }

    fn arb_formula() -> impl Strategy<Value = Formula> {
        let var = prop::sample::select(vec!["x", "y", "z1", "w_2"]);
        let leaf = (var.clone(), var.clone(), any::<bool>()).prop_map(|(a, b, e)| {
            if e {
                Formula::edge(a, b)
            } else {
                Formula::eq(a, b)
            }
        });
        leaf.prop_recursive(5, 40, 2, move |inner| {
            prop_oneof![
                inner.clone().prop_map(Formula::not),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::implies(a, b)),
                (prop::sample::select(vec!["q", "r"]), inner.clone(), any::<bool>()).prop_map(
                    |(v, b, u)| if u { Formula::forall(v, b) } else { Formula::exists(v, b) }
                ),
            ]
        })
        .prop_filter("no shadowing", |f| f.shadowed_variable().is_none())
    }

    proptest! {
        #[test]
        fn print_then_parse_is_identity(f in arb_formula()) {
            let text = f.to_string();
            prop_assert_eq!(parse_formula(&text).unwrap(), f, "{}", text);
        }
    }
}

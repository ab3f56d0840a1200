use super::{Identity, LoopIdentity, LoopTerm, Op, ParseError, Term};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Var(String),
    U,
    Op(Op),
    Plus,
    Minus,
    Zero,
    LParen,
    RParen,
    Eq,
    End,
}

const ATOM: &[&str] = &["variable", "`u`", "`(`"];
const LOOP_ATOM: &[&str] = &["variable", "`(`"];

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src, pos: 0 }
    }

    /// Returns the next token and its byte offset.
    fn next(&mut self) -> Result<(Tok, usize), ParseError> {
        let bytes = self.src.as_bytes();
        while self.pos < bytes.len() && bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        let start = self.pos;
        let Some(&b) = bytes.get(start) else {
            return Ok((Tok::End, start));
        };
        let tok = match b {
            b'a'..=b'z' => {
                let mut end = start + 1;
                while end < bytes.len() && (bytes[end].is_ascii_lowercase() || bytes[end].is_ascii_digit()) {
                    end += 1;
                }
                self.pos = end;
                let name = &self.src[start..end];
                return Ok((
                    if name == "u" {
                        Tok::U
                    } else {
                        Tok::Var(name.to_string())
                    },
                    start,
                ));
            }
            b'*' => Tok::Op(Op::Mul),
            b'/' => Tok::Op(Op::RDiv),
            b'\\' => Tok::Op(Op::LDiv),
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'0' => Tok::Zero,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'=' => Tok::Eq,
            _ => {
                return Err(ParseError::Syntax {
                    position: start,
                    expected: vec!["a term symbol"],
                })
            }
        };
        self.pos += 1;
        Ok((tok, start))
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    tok: Tok,
    at: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Result<Self, ParseError> {
        let mut lexer = Lexer::new(src);
        let (tok, at) = lexer.next()?;
        Ok(Parser { lexer, tok, at })
    }

    fn bump(&mut self) -> Result<(), ParseError> {
        let (tok, at) = self.lexer.next()?;
        self.tok = tok;
        self.at = at;
        Ok(())
    }

    fn error(&self, expected: &[&'static str]) -> ParseError {
        ParseError::Syntax {
            position: self.at,
            expected: expected.to_vec(),
        }
    }

    fn expr(&mut self) -> Result<Term, ParseError> {
        let mut lhs = self.atom()?;
        while let Tok::Op(op) = self.tok {
            self.bump()?;
            let rhs = self.atom()?;
            lhs = Term::bin(op, lhs, rhs);
        }
        Ok(lhs)
    }

    fn atom(&mut self) -> Result<Term, ParseError> {
        match std::mem::replace(&mut self.tok, Tok::End) {
            Tok::Var(name) => {
                self.bump()?;
                Ok(Term::Var(name))
            }
            Tok::U => {
                self.bump()?;
                Ok(Term::U)
            }
            Tok::LParen => {
                self.bump()?;
                let inner = self.expr()?;
                if self.tok != Tok::RParen {
                    return Err(self.error(&["operator", "`)`"]));
                }
                self.bump()?;
                Ok(inner)
            }
            other => {
                self.tok = other;
                Err(self.error(ATOM))
            }
        }
    }

    fn unsupported(&self) -> Option<ParseError> {
        let op = match self.tok {
            Tok::Minus => '-',
            Tok::Zero => '0',
            _ => return None,
        };
        Some(ParseError::UnsupportedLoopOperation { position: self.at, op })
    }

    fn loop_expr(&mut self) -> Result<LoopTerm, ParseError> {
        let mut lhs = self.loop_atom()?;
        loop {
            match self.tok {
                Tok::Plus => {
                    self.bump()?;
                    let rhs = self.loop_atom()?;
                    lhs = LoopTerm::plus(lhs, rhs);
                }
                _ => match self.unsupported() {
                    Some(e) => return Err(e),
                    None => return Ok(lhs),
                },
            }
        }
    }

    fn loop_atom(&mut self) -> Result<LoopTerm, ParseError> {
        if let Some(e) = self.unsupported() {
            return Err(e);
        }
        match std::mem::replace(&mut self.tok, Tok::End) {
            Tok::Var(name) => {
                self.bump()?;
                Ok(LoopTerm::Var(name))
            }
            Tok::LParen => {
                self.bump()?;
                let inner = self.loop_expr()?;
                if self.tok != Tok::RParen {
                    return Err(self.error(&["`+`", "`)`"]));
                }
                self.bump()?;
                Ok(inner)
            }
            other => {
                self.tok = other;
                Err(self.error(LOOP_ATOM))
            }
        }
    }

    fn finish(&self, expected: &[&'static str]) -> Result<(), ParseError> {
        if self.tok == Tok::End {
            Ok(())
        } else {
            Err(self.error(expected))
        }
    }
}

/// Parses a term; `*`, `/` and `\` share one precedence level and associate
/// to the left.
pub fn parse_term(text: &str) -> Result<Term, ParseError> {
    let mut p = Parser::new(text)?;
    let t = p.expr()?;
    p.finish(&["operator", "end of input"])?;
    Ok(t)
}

pub fn parse_identity(text: &str) -> Result<Identity, ParseError> {
    let mut p = Parser::new(text)?;
    let lhs = p.expr()?;
    match p.tok {
        Tok::Eq => p.bump()?,
        Tok::End => return Err(ParseError::MissingEquals),
        _ => return Err(p.error(&["operator", "`=`"])),
    }
    let rhs = p.expr()?;
    p.finish(&["operator", "end of input"])?;
    Ok(Identity::new(lhs, rhs))
}

pub fn parse_loop_term(text: &str) -> Result<LoopTerm, ParseError> {
    let mut p = Parser::new(text)?;
    let t = p.loop_expr()?;
    p.finish(&["`+`", "end of input"])?;
    Ok(t)
}

/// Parses a loop identity such as `(x+y)+z = x+(y+z)`. Negation and `0` are
/// rejected with [`ParseError::UnsupportedLoopOperation`].
pub fn parse_loop_identity(text: &str) -> Result<LoopIdentity, ParseError> {
    let mut p = Parser::new(text)?;
    let lhs = p.loop_expr()?;
    match p.tok {
        Tok::Eq => p.bump()?,
        Tok::End => return Err(ParseError::MissingEquals),
        _ => return Err(p.error(&["`+`", "`=`"])),
    }
    let rhs = p.loop_expr()?;
    p.finish(&["`+`", "end of input"])?;
    Ok(LoopIdentity { lhs, rhs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(s: &str) -> Term {
        Term::var(s)
    }

    #[test]
    fn precedence_is_flat_and_left_associative() {
        assert_eq!(
            parse_term("x*(x\\y)").unwrap(),
            Term::mul(v("x"), Term::ldiv(v("x"), v("y")))
        );
        assert_eq!(
            parse_term("x/y/z").unwrap(),
            Term::rdiv(Term::rdiv(v("x"), v("y")), v("z"))
        );
        assert_eq!(
            parse_term("x * y \\ z").unwrap(),
            Term::ldiv(Term::mul(v("x"), v("y")), v("z"))
        );
        assert_eq!(parse_term(" u ").unwrap(), Term::U);
        assert_eq!(parse_term("u1").unwrap(), v("u1"));
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        assert!(matches!(parse_term("x*)"), Err(ParseError::Syntax { position: 2, .. })));
        assert!(matches!(parse_term("(x"), Err(ParseError::Syntax { position: 2, .. })));
        assert!(matches!(parse_term("x y"), Err(ParseError::Syntax { position: 2, .. })));
        assert!(matches!(parse_term("X"), Err(ParseError::Syntax { position: 0, .. })));
        assert!(matches!(parse_term(""), Err(ParseError::Syntax { position: 0, .. })));
    }

    #[test]
    fn identities() {
        let id = parse_identity("x\\(y*(u1\\v)) = u1\\(y*(x\\v))").unwrap();
        assert_eq!(id.variables(), &["x", "y", "u1", "v"]);
        assert_eq!(parse_identity("x = x").unwrap().variables(), &["x"]);
        assert!(matches!(
            parse_identity("x = "),
            Err(ParseError::Syntax { position: 4, .. })
        ));
        assert_eq!(parse_identity("x*y"), Err(ParseError::MissingEquals));
        assert!(matches!(
            parse_identity("x = y = z"),
            Err(ParseError::Syntax { position: 6, .. })
        ));
        assert_eq!(parse_identity("u = u").unwrap().variables().len(), 0);
    }

    #[test]
    fn loop_identities() {
        let id = parse_loop_identity("(x+y)+z = x+(y+z)").unwrap();
        assert_eq!(id.to_string(), "(x+y)+z = x+(y+z)");
        assert_eq!(id.variables(), vec!["x", "y", "z"]);
        assert!(matches!(
            parse_loop_identity("x+0 = x"),
            Err(ParseError::UnsupportedLoopOperation { position: 2, op: '0' })
        ));
        assert!(matches!(
            parse_loop_identity("x-y = x"),
            Err(ParseError::UnsupportedLoopOperation { position: 1, op: '-' })
        ));
        assert!(matches!(
            parse_loop_identity("-x = x"),
            Err(ParseError::UnsupportedLoopOperation { position: 0, op: '-' })
        ));
        assert!(parse_loop_identity("x*y = y").is_err());
    }

    pub(crate) fn arb_term() -> impl Strategy<Value = Term> {
        let leaf = prop_oneof![
            4 => "[a-z][a-z0-9]{0,2}".prop_filter("u is reserved", |s| s != "u").prop_map(Term::Var),
            1 => Just(Term::U),
        ];
        leaf.prop_recursive(5, 40, 2, |inner| {
            (
                prop_oneof![Just(Op::Mul), Just(Op::LDiv), Just(Op::RDiv)],
                inner.clone(),
                inner,
            )
                .prop_map(|(op, l, r)| Term::bin(op, l, r))
        })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(t in arb_term()) {
            let printed = t.to_string();
            prop_assert_eq!(parse_term(&printed).unwrap(), t);
        }
    }
}

use rug::Rational;

use super::ast::OperatorAst;
use super::lexer::{tokenize, Spanned, Tok};
use crate::error::{Error, Result};

struct Parser {
    toks: Vec<Spanned>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].tok
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.at + k).min(self.toks.len() - 1)].tok
    }

    fn pos(&self) -> usize {
        self.toks[self.at].pos
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].tok.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { position: self.pos(), message: message.into() })
    }

    fn expr(&mut self) -> Result<OperatorAst> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = OperatorAst::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = OperatorAst::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<OperatorAst> {
        // only the leading factor of a term may be a literal "n/m", so that
        // "t/2/3" and "t*2/3" stay left-associative
        let mut lhs = self.factor(true)?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    lhs = OperatorAst::Mul(Box::new(lhs), Box::new(self.factor(false)?));
                }
                Tok::Slash => {
                    self.bump();
                    lhs = OperatorAst::Div(Box::new(lhs), Box::new(self.factor(false)?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self, leading: bool) -> Result<OperatorAst> {
        let base = self.atom(leading)?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        match self.peek().clone() {
            Tok::Int(n) => match n.to_u32() {
                Some(e) => {
                    self.bump();
                    Ok(OperatorAst::Pow(Box::new(base), e))
                }
                None => self.error(format!("exponent {n} is too large")),
            },
            _ => self.error("exponent must be a non-negative integer literal"),
        }
    }

    fn atom(&mut self, leading: bool) -> Result<OperatorAst> {
        match self.peek().clone() {
            Tok::T => {
                self.bump();
                Ok(OperatorAst::T)
            }
            Tok::Theta => {
                self.bump();
                Ok(OperatorAst::Theta)
            }
            Tok::D => {
                self.bump();
                Ok(OperatorAst::D)
            }
            Tok::Int(n) => {
                self.bump();
                if leading && *self.peek() == Tok::Slash {
                    if let Tok::Int(m) = self.peek_at(1).clone() {
                        self.bump();
                        if m == 0 {
                            return self.error("zero denominator in rational literal");
                        }
                        self.bump();
                        return Ok(OperatorAst::Lit(Rational::from((n, m))));
                    }
                }
                Ok(OperatorAst::Lit(Rational::from(n)))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return self.error(format!("expected ')', found {}", self.peek().describe()));
                }
                self.bump();
                Ok(inner)
            }
            Tok::Minus => {
                self.bump();
                Ok(OperatorAst::Neg(Box::new(self.factor(leading)?)))
            }
            other => self.error(format!("expected an operand, found {}", other.describe())),
        }
    }
}

/// Parse an operator expression such as `theta^2 - (t/(1-t))*theta`.
///
/// Precedence from tightest: `^`, unary `-`, `*` and `/`, binary `+` and `-`.
/// Exponents are non-negative integer literals.
pub fn parse_operator(text: &str) -> Result<OperatorAst> {
    let mut p = Parser { toks: tokenize(text)?, at: 0 };
    let ast = p.expr()?;
    if *p.peek() != Tok::End {
        return p.error(format!("unexpected {}", p.peek().describe()));
    }
    Ok(ast)
}

#[cfg(test)]
mod tests {
    use super::*;
    use OperatorAst::*;

    fn b(x: OperatorAst) -> Box<OperatorAst> {
        Box::new(x)
    }

    fn lit(n: i64, d: i64) -> OperatorAst {
        Lit(Rational::from((n, d)))
    }

    #[test]
    fn precedence() {
        assert_eq!(parse_operator("-t^2").unwrap(), Neg(b(Pow(b(T), 2))));
        assert_eq!(parse_operator("t + theta*D").unwrap(), Add(b(T), b(Mul(b(Theta), b(D)))));
        assert_eq!(parse_operator("t - t - t").unwrap(), Sub(b(Sub(b(T), b(T))), b(T)));
        assert_eq!(parse_operator("theta^3").unwrap(), Pow(b(Theta), 3));
    }

    #[test]
    fn rational_literals() {
        assert_eq!(parse_operator("1/4").unwrap(), lit(1, 4));
        assert_eq!(parse_operator("2/4*t").unwrap(), Mul(b(lit(1, 2)), b(T)));
        assert_eq!(parse_operator("t/2/3").unwrap(), Div(b(Div(b(T), b(lit(2, 1)))), b(lit(3, 1))));
        assert_eq!(parse_operator("t*2/3").unwrap(), Div(b(Mul(b(T), b(lit(2, 1)))), b(lit(3, 1))));
        assert_eq!(parse_operator("1/t").unwrap(), Div(b(lit(1, 1)), b(T)));
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_operator("theta^(1/2)").unwrap_err();
        assert_eq!(e, Error::Syntax { position: 6, message: "exponent must be a non-negative integer literal".into() });
        assert!(matches!(parse_operator("theta^-1"), Err(Error::Syntax { position: 6, .. })));
        assert!(matches!(parse_operator("(t + 1"), Err(Error::Syntax { position: 6, .. })));
        assert!(matches!(parse_operator("t t"), Err(Error::Syntax { position: 2, .. })));
        assert!(matches!(parse_operator(""), Err(Error::Syntax { position: 0, .. })));
        assert!(matches!(parse_operator("1/0"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_operator("t^99999999999"), Err(Error::Syntax { .. })));
    }
}

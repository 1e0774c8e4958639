//! Recursive-descent parser.
//!
//! ```text
//! program := (ident ':=' expr ';')* expr
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | 'o') unary)*
//! unary   := '-' unary | postfix
//! postfix := primary ('[' ij ']')*
//! primary := int ('/' int)? | ident | func '(' args ')' | '(' expr ')'
//! ```

use super::ast::{BinOp, Expr, Func, Kind, Program};
use super::lexer::{lex, Tok, Token};
use crate::error::{CliError, Result};

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

fn expected(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

const PRIMARY: &[&str] = &["integer", "name", "function", "`(`", "`-`"];

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].tok
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, want: &[&str]) -> Result<T> {
        let t = self.peek();
        Err(CliError::Syntax { offset: t.offset, expected: expected(want), found: t.tok.describe() })
    }

    fn expect(&mut self, tok: Tok) -> Result<Token> {
        if self.peek().tok == tok {
            Ok(self.bump())
        } else {
            self.fail(&[&tok.describe()])
        }
    }

    fn program(&mut self) -> Result<Program> {
        let mut bindings = Vec::new();
        while let (Tok::Ident(name), Tok::Define) = (self.peek().tok.clone(), self.peek_at(1).clone()) {
            self.bump();
            self.bump();
            let e = self.expr()?;
            self.expect(Tok::Semi)?;
            bindings.push((name, e));
        }
        let body = self.expr()?;
        if self.peek().tok != Tok::Eof {
            return self.fail(&["`+`", "`-`", "`*`", "`o`", "`[`", "end of input"]);
        }
        Ok(Program { bindings, body })
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut left = self.term()?;
        loop {
            let op = match self.peek().tok {
                Tok::Plus => BinOp::Add,
                Tok::Minus => BinOp::Sub,
                _ => return Ok(left),
            };
            let offset = self.bump().offset;
            let right = self.term()?;
            left = Expr { kind: Kind::Bin(op, Box::new(left), Box::new(right)), offset };
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut left = self.unary()?;
        loop {
            let op = match &self.peek().tok {
                Tok::Star => BinOp::Mul,
                Tok::Ident(s) if s == "o" => BinOp::Jordan,
                _ => return Ok(left),
            };
            let offset = self.bump().offset;
            let right = self.unary()?;
            left = Expr { kind: Kind::Bin(op, Box::new(left), Box::new(right)), offset };
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.peek().tok == Tok::Minus {
            let offset = self.bump().offset;
            let inner = self.unary()?;
            return Ok(Expr { kind: Kind::Neg(Box::new(inner)), offset });
        }
        self.postfix()
    }

    fn postfix(&mut self) -> Result<Expr> {
        let mut e = self.primary()?;
        while self.peek().tok == Tok::LBracket {
            let offset = self.bump().offset;
            let slot = self.peek().clone();
            let (i, j) = match &slot.tok {
                Tok::Int(s) if s.len() == 2 => {
                    let b = s.as_bytes();
                    ((b[0] - b'0') as usize, (b[1] - b'0') as usize)
                }
                _ => return self.fail(&["`12`", "`13`", "`23`"]),
            };
            if !matches!((i, j), (1, 2) | (1, 3) | (2, 3)) {
                return self.fail(&["`12`", "`13`", "`23`"]);
            }
            self.bump();
            self.expect(Tok::RBracket)?;
            e = Expr { kind: Kind::Embed(Box::new(e), i, j), offset };
        }
        Ok(e)
    }

    fn primary(&mut self) -> Result<Expr> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Int(n) => {
                self.bump();
                if self.peek().tok == Tok::Slash {
                    self.bump();
                    match self.peek().tok.clone() {
                        Tok::Int(d) => {
                            self.bump();
                            Ok(Expr { kind: Kind::Frac(n, d), offset: t.offset })
                        }
                        _ => self.fail(&["integer"]),
                    }
                } else {
                    Ok(Expr { kind: Kind::Int(n), offset: t.offset })
                }
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Tok::Ident(name) if name != "o" => {
                self.bump();
                match Func::from_name(&name) {
                    Some(func) if self.peek().tok == Tok::LParen => {
                        self.bump();
                        let args = self.args(func)?;
                        Ok(Expr { kind: Kind::Call(func, args), offset: t.offset })
                    }
                    Some(_) => self.fail(&["`(`"]),
                    None => Ok(Expr { kind: Kind::Name(name), offset: t.offset }),
                }
            }
            _ => self.fail(PRIMARY),
        }
    }

    fn args(&mut self, func: Func) -> Result<Vec<Expr>> {
        let sep = if func == Func::U { Tok::Semi } else { Tok::Comma };
        let mut args = vec![self.expr()?];
        loop {
            if self.peek().tok == sep {
                self.bump();
                args.push(self.expr()?);
            } else if self.peek().tok == Tok::RParen {
                self.bump();
                return Ok(args);
            } else {
                return self.fail(&[&sep.describe(), "`)`"]);
            }
        }
    }
}

pub fn parse_program(text: &str) -> Result<Program> {
    Parser { toks: lex(text)?, pos: 0 }.program()
}

/// Parses a single expression (no bindings).
pub fn parse_expr(text: &str) -> Result<Expr> {
    let p = parse_program(text)?;
    if !p.bindings.is_empty() {
        return Err(CliError::Syntax { offset: 0, expected: expected(&["expression"]), found: "binding".into() });
    }
    Ok(p.body)
}

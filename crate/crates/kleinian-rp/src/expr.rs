//! Tiny constant-expression grammar for command-line reals.
//!
//! Many of the table's constants are irrational, so the CLI accepts small
//! closed forms instead of truncated decimals: literals, `+ - * / ^`,
//! `sin`, `cos`, `sqrt`, and the constants `pi` and `sqrt5`. No variables.
//!
//! ```
//! use kleinian_rp::expr::eval;
//! let beta = eval("-4*sin(pi/7)^2").unwrap();
//! assert!((beta + 4.0 * (std::f64::consts::PI / 7.0).sin().powi(2)).abs() < 1e-15);
//! assert_eq!(eval("(sqrt5-1)/2").unwrap(), (5f64.sqrt() - 1.0) / 2.0);
//! ```

use std::f64::consts::PI;
use std::iter::Peekable;
use std::str::Chars;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ExprError {
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("unexpected end of expression")]
    UnexpectedEnd,
    #[error("expected {expected}, found {found}")]
    Expected {
        expected: &'static str,
        found: String,
    },
    #[error("unknown name {0:?} (known: pi, sqrt5, sin, cos, sqrt)")]
    UnknownName(String),
    #[error("malformed number {0:?}")]
    BadNumber(String),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<Tok>, ExprError> {
    let mut out = Vec::new();
    let mut it: Peekable<Chars> = src.chars().peekable();
    while let Some(&c) = it.peek() {
        match c {
            ' ' | '\t' => {
                it.next();
            }
            '+' => {
                it.next();
                out.push(Tok::Plus);
            }
            '-' => {
                it.next();
                out.push(Tok::Minus);
            }
            '*' => {
                it.next();
                out.push(Tok::Star);
            }
            '/' => {
                it.next();
                out.push(Tok::Slash);
            }
            '^' => {
                it.next();
                out.push(Tok::Caret);
            }
            '(' => {
                it.next();
                out.push(Tok::LParen);
            }
            ')' => {
                it.next();
                out.push(Tok::RParen);
            }
            '0'..='9' | '.' => {
                let mut s = String::new();
                while let Some(&d) = it.peek() {
                    if d.is_ascii_digit() || d == '.' || d == 'e' || d == 'E' {
                        s.push(d);
                        it.next();
                        // exponent sign
                        if (d == 'e' || d == 'E') && matches!(it.peek(), Some('+') | Some('-')) {
                            s.push(*it.peek().unwrap());
                            it.next();
                        }
                    } else {
                        break;
                    }
                }
                out.push(Tok::Num(
                    s.parse().map_err(|_| ExprError::BadNumber(s.clone()))?,
                ));
            }
            c if c.is_ascii_alphabetic() => {
                let mut s = String::new();
                while let Some(&d) = it.peek() {
                    if d.is_ascii_alphanumeric() {
                        s.push(d);
                        it.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Name(s));
            }
            other => return Err(ExprError::UnexpectedChar(other)),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Result<Tok, ExprError> {
        let t = self
            .toks
            .get(self.pos)
            .cloned()
            .ok_or(ExprError::UnexpectedEnd)?;
        self.pos += 1;
        Ok(t)
    }

    fn expect(&mut self, t: Tok, name: &'static str) -> Result<(), ExprError> {
        let found = self.next()?;
        if found == t {
            Ok(())
        } else {
            Err(ExprError::Expected {
                expected: name,
                found: format!("{found:?}"),
            })
        }
    }

    fn expr(&mut self) -> Result<f64, ExprError> {
        let mut acc = self.term()?;
        while let Some(op) = self.peek() {
            match op {
                Tok::Plus => {
                    self.pos += 1;
                    acc += self.term()?;
                }
                Tok::Minus => {
                    self.pos += 1;
                    acc -= self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<f64, ExprError> {
        let mut acc = self.unary()?;
        while let Some(op) = self.peek() {
            match op {
                Tok::Star => {
                    self.pos += 1;
                    acc *= self.unary()?;
                }
                Tok::Slash => {
                    self.pos += 1;
                    acc /= self.unary()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<f64, ExprError> {
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<f64, ExprError> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.pos += 1;
            let exp = self.unary()?;
            return Ok(base.powf(exp));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<f64, ExprError> {
        match self.next()? {
            Tok::Num(x) => Ok(x),
            Tok::LParen => {
                let v = self.expr()?;
                self.expect(Tok::RParen, "closing parenthesis")?;
                Ok(v)
            }
            Tok::Name(name) => match name.as_str() {
                "pi" => Ok(PI),
                "sqrt5" => Ok(5f64.sqrt()),
                "sin" | "cos" | "sqrt" => {
                    self.expect(Tok::LParen, "opening parenthesis")?;
                    let arg = self.expr()?;
                    self.expect(Tok::RParen, "closing parenthesis")?;
                    Ok(match name.as_str() {
                        "sin" => arg.sin(),
                        "cos" => arg.cos(),
                        _ => arg.sqrt(),
                    })
                }
                _ => Err(ExprError::UnknownName(name)),
            },
            other => Err(ExprError::Expected {
                expected: "a value",
                found: format!("{other:?}"),
            }),
        }
    }
}

/// Evaluate an expression to a real number.
pub fn eval(src: &str) -> Result<f64, ExprError> {
    let mut p = Parser {
        toks: lex(src)?,
        pos: 0,
    };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(ExprError::Expected {
            expected: "end of expression",
            found: format!("{:?}", p.toks[p.pos]),
        });
    }
    Ok(v)
}

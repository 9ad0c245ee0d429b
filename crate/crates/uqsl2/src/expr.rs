//! A small expression language over the algebra, for the command line.
//!
//! Grammar (whitespace-insensitive):
//!
//! ```text
//! expr   := '-'? term (('+' | '-') term)*
//! term   := factor (('*' | '/')? factor)*
//! factor := atom ('^' uint)? | '(' expr ')' | '[' expr ',' expr ']'
//! atom   := 'x[' int ']' | 'y[' int ']' | 'h[' int ']' | 'psi[' uint ']'
//!         | 'phi[' '-'? uint ']' | 'c2[' int ']' | 'K' | 'Kinv'
//!         | 'q' | 'q^' int | integer
//! ```
//!
//! `[a, b]` is the commutator. `c2[b]` denotes `c^{b/2}`. Division is only
//! defined by scalar factors, which is what lets rendered fractions parse
//! back. Errors carry the byte offset of the offending token.

use std::fmt;

use crate::pbw::{phi_element, psi_element, Element, PbwMonomial};
use crate::scalar::ScalarQ;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(i64),
    QPow(i64),
    X(i64),
    Y(i64),
    H(i64),
    Psi(i64),
    Phi(i64),
    C2(i64),
    K,
    Kinv,
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
    Commutator(Box<Expr>, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.offset, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalError {
    pub message: String,
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "evaluation error: {}", self.message)
    }
}

impl std::error::Error for EvalError {}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
}

fn lex(input: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = input.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                toks.push((Tok::Plus, i));
                i += 1;
            }
            '-' => {
                toks.push((Tok::Minus, i));
                i += 1;
            }
            '*' => {
                toks.push((Tok::Star, i));
                i += 1;
            }
            '/' => {
                toks.push((Tok::Slash, i));
                i += 1;
            }
            '^' => {
                toks.push((Tok::Caret, i));
                i += 1;
            }
            '(' => {
                toks.push((Tok::LParen, i));
                i += 1;
            }
            ')' => {
                toks.push((Tok::RParen, i));
                i += 1;
            }
            '[' => {
                toks.push((Tok::LBracket, i));
                i += 1;
            }
            ']' => {
                toks.push((Tok::RBracket, i));
                i += 1;
            }
            ',' => {
                toks.push((Tok::Comma, i));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let text = &input[start..i];
                let value = text.parse::<i64>().map_err(|_| ParseError {
                    offset: start,
                    message: format!("integer literal `{text}` out of range"),
                })?;
                toks.push((Tok::Int(value), start));
            }
            'a'..='z' | 'A'..='Z' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric()) {
                    i += 1;
                }
                toks.push((Tok::Ident(input[start..i].to_string()), start));
            }
            _ => {
                return Err(ParseError {
                    offset: i,
                    message: format!("unexpected character `{c}`"),
                })
            }
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.len, |(_, o)| *o)
    }

    fn advance(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<(), ParseError> {
        if self.peek() == Some(&t) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected {what}")))
        }
    }

    fn err(&self, message: String) -> ParseError {
        ParseError {
            offset: self.offset(),
            message,
        }
    }

    fn parse_expr(&mut self) -> Result<Expr, ParseError> {
        let negated = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        let mut acc = self.parse_term()?;
        if negated {
            acc = Expr::Neg(Box::new(acc));
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let rhs = self.parse_term()?;
                    acc = Expr::Add(Box::new(acc), Box::new(rhs));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let rhs = self.parse_term()?;
                    acc = Expr::Sub(Box::new(acc), Box::new(rhs));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Int(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) | Some(Tok::LBracket)
        )
    }

    fn parse_term(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.parse_factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let rhs = self.parse_factor()?;
                    acc = Expr::Mul(Box::new(acc), Box::new(rhs));
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let rhs = self.parse_factor()?;
                    acc = Expr::Div(Box::new(acc), Box::new(rhs));
                }
                _ if self.starts_factor() => {
                    let rhs = self.parse_factor()?;
                    acc = Expr::Mul(Box::new(acc), Box::new(rhs));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_factor(&mut self) -> Result<Expr, ParseError> {
        let base = match self.peek() {
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.parse_expr()?;
                self.expect(Tok::RParen, "`)`")?;
                inner
            }
            Some(Tok::LBracket) => {
                self.pos += 1;
                let a = self.parse_expr()?;
                self.expect(Tok::Comma, "`,` in commutator")?;
                let b = self.parse_expr()?;
                self.expect(Tok::RBracket, "`]`")?;
                Expr::Commutator(Box::new(a), Box::new(b))
            }
            _ => self.parse_atom()?,
        };
        if self.peek() == Some(&Tok::Caret) {
            // `q^k` admits a signed exponent; everything else requires a
            // nonnegative one.
            self.pos += 1;
            let exponent = self.parse_signed_int()?;
            if base == Expr::QPow(1) {
                return Ok(Expr::QPow(exponent));
            }
            if exponent < 0 {
                return Err(self.err("power exponent must be nonnegative".into()));
            }
            return Ok(Expr::Pow(Box::new(base), exponent as u32));
        }
        Ok(base)
    }

    fn parse_signed_int(&mut self) -> Result<i64, ParseError> {
        let negative = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        match self.advance() {
            Some(Tok::Int(v)) => Ok(if negative { -v } else { v }),
            _ => Err(ParseError {
                offset: self
                    .toks
                    .get(self.pos.saturating_sub(1))
                    .map_or(self.len, |(_, o)| *o),
                message: "expected an integer".into(),
            }),
        }
    }

    fn parse_indexed(&mut self, name: &str) -> Result<i64, ParseError> {
        self.expect(Tok::LBracket, &format!("`[` after `{name}`"))?;
        let idx = self.parse_signed_int()?;
        self.expect(Tok::RBracket, "`]`")?;
        Ok(idx)
    }

    fn parse_atom(&mut self) -> Result<Expr, ParseError> {
        let offset = self.offset();
        match self.advance() {
            Some(Tok::Int(v)) => Ok(Expr::Int(v)),
            Some(Tok::Ident(name)) => match name.as_str() {
                "K" => Ok(Expr::K),
                "Kinv" => Ok(Expr::Kinv),
                "q" => Ok(Expr::QPow(1)),
                "x" => Ok(Expr::X(self.parse_indexed("x")?)),
                "y" => Ok(Expr::Y(self.parse_indexed("y")?)),
                "h" => {
                    let idx = self.parse_indexed("h")?;
                    if idx == 0 {
                        return Err(ParseError {
                            offset,
                            message: "h-index must be nonzero".into(),
                        });
                    }
                    Ok(Expr::H(idx))
                }
                "psi" => {
                    let idx = self.parse_indexed("psi")?;
                    if idx < 0 {
                        return Err(ParseError {
                            offset,
                            message: "psi-index must be nonnegative".into(),
                        });
                    }
                    Ok(Expr::Psi(idx))
                }
                "phi" => {
                    let idx = self.parse_indexed("phi")?;
                    if idx > 0 {
                        return Err(ParseError {
                            offset,
                            message: "phi-index must be nonpositive".into(),
                        });
                    }
                    Ok(Expr::Phi(idx))
                }
                "c2" => Ok(Expr::C2(self.parse_indexed("c2")?)),
                other => Err(ParseError {
                    offset,
                    message: format!("unknown name `{other}`"),
                }),
            },
            Some(_) | None => Err(ParseError {
                offset,
                message: "expected an atom".into(),
            }),
        }
    }
}

/// Parse an expression; errors carry byte offsets.
pub fn parse(input: &str) -> Result<Expr, ParseError> {
    let toks = lex(input)?;
    let mut p = Parser {
        toks,
        pos: 0,
        len: input.len(),
    };
    let e = p.parse_expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input".into()));
    }
    Ok(e)
}

/// Evaluate to a normal-form element.
pub fn eval(expr: &Expr) -> Result<Element, EvalError> {
    match expr {
        Expr::Int(v) => Ok(Element::from_scalar(ScalarQ::from_int(*v))),
        Expr::QPow(k) => Ok(Element::from_scalar(ScalarQ::q_pow(*k))),
        Expr::X(n) => Ok(Element::x(*n)),
        Expr::Y(n) => Ok(Element::y(*n)),
        Expr::H(k) => Ok(Element::h(*k)),
        Expr::Psi(m) => Ok(psi_element(*m)),
        Expr::Phi(m) => Ok(phi_element(*m)),
        Expr::C2(b) => Ok(Element::c_half_pow(*b)),
        Expr::K => Ok(Element::k_pow(1)),
        Expr::Kinv => Ok(Element::k_pow(-1)),
        Expr::Add(a, b) => Ok(&eval(a)? + &eval(b)?),
        Expr::Sub(a, b) => Ok(&eval(a)? - &eval(b)?),
        Expr::Mul(a, b) => Ok(&eval(a)? * &eval(b)?),
        Expr::Neg(a) => Ok(-&eval(a)?),
        Expr::Pow(a, k) => Ok(eval(a)?.pow(*k)),
        Expr::Commutator(a, b) => Ok(eval(a)?.commutator(&eval(b)?)),
        Expr::Div(a, b) => {
            let denom = eval(b)?;
            let scalar = as_scalar(&denom).ok_or_else(|| EvalError {
                message: "division is only defined by scalar factors".into(),
            })?;
            if scalar.is_zero() {
                return Err(EvalError {
                    message: "division by zero".into(),
                });
            }
            Ok(eval(a)?.scale(&scalar.inv()))
        }
    }
}

fn as_scalar(e: &Element) -> Option<ScalarQ> {
    if e.is_zero() {
        return Some(ScalarQ::zero());
    }
    if e.num_terms() == 1 {
        let (m, c) = e.terms().next().unwrap();
        if *m == PbwMonomial::one() {
            return Some(c.clone());
        }
    }
    None
}

/// Parse and evaluate in one step.
pub fn parse_eval(input: &str) -> Result<Element, ParseError> {
    let ast = parse(input)?;
    eval(&ast).map_err(|e| ParseError {
        offset: 0,
        message: e.message,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q_int;

    #[test]
    fn bracket_is_commutator() {
        let e = parse("[h[1], x[0]]").unwrap();
        assert!(matches!(e, Expr::Commutator(_, _)));
        let v = eval(&e).unwrap();
        let expect = Element::term(
            ScalarQ::from_laurent(q_int(2)),
            PbwMonomial::new(0, -1, vec![1], vec![], vec![]),
        );
        assert_eq!(v, expect);
    }

    #[test]
    fn precedence_and_powers() {
        let e = parse("q^-1 * x[2]^2 + K").unwrap();
        let v = eval(&e).unwrap();
        let expect = &Element::term(
            ScalarQ::q_pow(-1),
            PbwMonomial::new(0, 0, vec![2, 2], vec![], vec![]),
        ) + &Element::k_pow(1);
        assert_eq!(v, expect);
    }

    #[test]
    fn semantic_errors() {
        let err = parse("h[0]").unwrap_err();
        assert!(err.message.contains("h-index must be nonzero"));
        let err = parse("psi[-1]").unwrap_err();
        assert!(err.message.contains("psi-index"));
        let err = parse("phi[1]").unwrap_err();
        assert!(err.message.contains("phi-index"));
    }

    #[test]
    fn syntax_error_carries_offset() {
        let err = parse("x[0] + ?").unwrap_err();
        assert_eq!(err.offset, 7);
    }

    #[test]
    fn evaluation_examples() {
        assert_eq!(parse_eval("K*Kinv").unwrap(), Element::one());
        // y[0]*x[1] = x_1 y_0 - K c^{1/2} h_1
        let v = parse_eval("y[0]*x[1]").unwrap();
        let expect = &Element::from_monomial(PbwMonomial::new(0, 0, vec![1], vec![], vec![0]))
            - &Element::from_monomial(PbwMonomial::new(1, 1, vec![], vec![1], vec![]));
        assert_eq!(v, expect);
        // Juxtaposition multiplies.
        assert_eq!(parse_eval("2 x[0]").unwrap(), parse_eval("2*x[0]").unwrap());
    }

    #[test]
    fn scalar_division_round_trips() {
        let v = parse_eval("(q^2 + 1)/(q) * x[0]").unwrap();
        let expect = Element::term(
            ScalarQ::new(
                &crate::scalar::LaurentPoly::q_pow(2) + &crate::scalar::LaurentPoly::one(),
                crate::scalar::LaurentPoly::q(),
            ),
            PbwMonomial::x(0),
        );
        assert_eq!(v, expect);
        let err = eval(&parse("x[0] / y[1]").unwrap()).unwrap_err();
        assert!(err.message.contains("scalar"));
    }

    #[test]
    fn display_parse_round_trip() {
        let elements = [
            parse_eval("x[2]*x[0] + psi[2]").unwrap(),
            parse_eval("y[0]*x[1]*h[-1] - 3*Kinv^2*c2[-3]").unwrap(),
            parse_eval("(q^2+1)/(q^4+2)*x[0] + [x[0],y[0]]").unwrap(),
        ];
        for e in elements {
            let text = e.to_string();
            let back = parse_eval(&text).unwrap_or_else(|err| {
                panic!("failed to re-parse `{text}`: {err}");
            });
            assert_eq!(back, e, "round trip through `{text}`");
        }
    }
}

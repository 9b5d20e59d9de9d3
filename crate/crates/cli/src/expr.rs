//! A small arithmetic grammar over bicomplex values.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' uint)?
//! atom   := number | i1 | i2 | j | e1 | e2
//!         | (conj1 | conj2 | conj3 | sqrt) '(' expr ')'
//!         | '(' expr ')'
//! ```
//!
//! Real literals accept decimal and scientific notation. Division by a
//! null-cone value is reported as [`EvalError::NullCone`].

use bihilbert::{Bicomplex64, Conjugation, Error};

#[derive(Debug, PartialEq)]
pub enum EvalError {
    Parse(String),
    NullCone,
}

impl std::fmt::Display for EvalError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EvalError::Parse(msg) => write!(f, "parse error: {msg}"),
            EvalError::NullCone => write!(f, "division by a null-cone value (zero divisor)"),
        }
    }
}

impl std::error::Error for EvalError {}

pub fn eval(input: &str) -> Result<Bicomplex64, EvalError> {
    let tokens = lex(input)?;
    let mut parser = Parser { tokens, pos: 0 };
    let value = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(EvalError::Parse(format!(
            "unexpected trailing input at token {}",
            parser.pos
        )));
    }
    Ok(value)
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(f64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Open,
    Close,
}

fn lex(input: &str) -> Result<Vec<Token>, EvalError> {
    let mut tokens = Vec::new();
    let bytes = input.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                tokens.push(Token::Plus);
                i += 1;
            }
            '-' => {
                tokens.push(Token::Minus);
                i += 1;
            }
            '*' => {
                tokens.push(Token::Star);
                i += 1;
            }
            '/' => {
                tokens.push(Token::Slash);
                i += 1;
            }
            '^' => {
                tokens.push(Token::Caret);
                i += 1;
            }
            '(' => {
                tokens.push(Token::Open);
                i += 1;
            }
            ')' => {
                tokens.push(Token::Close);
                i += 1;
            }
            '0'..='9' | '.' => {
                let start = i;
                while i < bytes.len() && matches!(bytes[i] as char, '0'..='9' | '.') {
                    i += 1;
                }
                // scientific exponent
                if i < bytes.len() && matches!(bytes[i] as char, 'e' | 'E') {
                    let mut k = i + 1;
                    if k < bytes.len() && matches!(bytes[k] as char, '+' | '-') {
                        k += 1;
                    }
                    if k < bytes.len() && (bytes[k] as char).is_ascii_digit() {
                        i = k;
                        while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                            i += 1;
                        }
                    }
                }
                let text = &input[start..i];
                let value: f64 = text
                    .parse()
                    .map_err(|_| EvalError::Parse(format!("bad number literal `{text}`")))?;
                tokens.push(Token::Number(value));
            }
            'a'..='z' | 'A'..='Z' => {
                let start = i;
                while i < bytes.len() && (bytes[i] as char).is_ascii_alphanumeric() {
                    i += 1;
                }
                tokens.push(Token::Ident(input[start..i].to_owned()));
            }
            other => {
                return Err(EvalError::Parse(format!("unexpected character `{other}`")));
            }
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, wanted: Token, what: &str) -> Result<(), EvalError> {
        match self.bump() {
            Some(t) if t == wanted => Ok(()),
            other => Err(EvalError::Parse(format!("expected {what}, found {other:?}"))),
        }
    }

    fn expr(&mut self) -> Result<Bicomplex64, EvalError> {
        let mut acc = self.term()?;
        while let Some(op) = self.peek().cloned() {
            match op {
                Token::Plus => {
                    self.bump();
                    acc += self.term()?;
                }
                Token::Minus => {
                    self.bump();
                    acc -= self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Bicomplex64, EvalError> {
        let mut acc = self.unary()?;
        while let Some(op) = self.peek().cloned() {
            match op {
                Token::Star => {
                    self.bump();
                    acc *= self.unary()?;
                }
                Token::Slash => {
                    self.bump();
                    let rhs = self.unary()?;
                    let inv = rhs.inverse().map_err(|e| match e {
                        Error::NullCone => EvalError::NullCone,
                        other => EvalError::Parse(other.to_string()),
                    })?;
                    acc *= inv;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Bicomplex64, EvalError> {
        if self.peek() == Some(&Token::Minus) {
            self.bump();
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Bicomplex64, EvalError> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.bump();
            match self.bump() {
                Some(Token::Number(n)) if n >= 0.0 && n.fract() == 0.0 && n <= u32::MAX as f64 => {
                    Ok(base.powu(n as u32))
                }
                other => Err(EvalError::Parse(format!(
                    "exponent must be a nonnegative integer, found {other:?}"
                ))),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Bicomplex64, EvalError> {
        match self.bump() {
            Some(Token::Number(x)) => Ok(Bicomplex64::from_real(x)),
            Some(Token::Ident(name)) => match name.as_str() {
                "i1" => Ok(Bicomplex64::i1()),
                "i2" => Ok(Bicomplex64::i2()),
                "j" => Ok(Bicomplex64::j()),
                "e1" => Ok(Bicomplex64::e1()),
                "e2" => Ok(Bicomplex64::e2()),
                "conj1" => self.call(|w| w.conj(Conjugation::Dag1)),
                "conj2" => self.call(|w| w.conj(Conjugation::Dag2)),
                "conj3" => self.call(|w| w.conj(Conjugation::Dag3)),
                "sqrt" => self.call(|w| w.nth_root(2)),
                other => Err(EvalError::Parse(format!("unknown name `{other}`"))),
            },
            Some(Token::Open) => {
                let inner = self.expr()?;
                self.expect(Token::Close, "closing parenthesis")?;
                Ok(inner)
            }
            other => Err(EvalError::Parse(format!("expected a value, found {other:?}"))),
        }
    }

    fn call(
        &mut self,
        apply: impl Fn(Bicomplex64) -> Bicomplex64,
    ) -> Result<Bicomplex64, EvalError> {
        self.expect(Token::Open, "opening parenthesis")?;
        let inner = self.expr()?;
        self.expect(Token::Close, "closing parenthesis")?;
        Ok(apply(inner))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Bicomplex64, b: Bicomplex64) -> bool {
        (a - b).norm() <= 1e-12 * a.norm().max(b.norm()).max(1.0)
    }

    #[test]
    fn unit_products() {
        assert_eq!(eval("i1*i2").unwrap(), Bicomplex64::j());
        assert_eq!(eval("e1*e2").unwrap(), Bicomplex64::from_real(0.0));
        assert_eq!(eval("e1+e2").unwrap(), Bicomplex64::from_real(1.0));
    }

    #[test]
    fn precedence_and_parentheses() {
        assert!(close(eval("1+2*3").unwrap(), Bicomplex64::from_real(7.0)));
        assert!(close(eval("(1+2)*3").unwrap(), Bicomplex64::from_real(9.0)));
        assert!(close(eval("-2^2").unwrap(), Bicomplex64::from_real(-4.0)));
        assert!(close(
            eval("(1+2*i1)^2").unwrap(),
            Bicomplex64::from_coords(-3.0, 4.0, 0.0, 0.0)
        ));
    }

    #[test]
    fn functions() {
        assert!(close(eval("conj3(i2)").unwrap(), -Bicomplex64::i2()));
        assert!(close(eval("sqrt(4)").unwrap(), Bicomplex64::from_real(2.0)));
        assert!(close(
            eval("sqrt(4*e1+9*e2)").unwrap(),
            Bicomplex64::from_coords(2.5, 0.0, 0.0, -0.5)
        ));
    }

    #[test]
    fn division() {
        assert!(close(
            eval("1/(3*e1+2*e2)").unwrap(),
            Bicomplex64::from_coords(5.0 / 12.0, 0.0, 0.0, -1.0 / 12.0)
        ));
        assert_eq!(eval("1/(e1)"), Err(EvalError::NullCone));
        assert_eq!(eval("1/0"), Err(EvalError::NullCone));
    }

    #[test]
    fn scientific_literals() {
        assert!(close(eval("2.5e-1").unwrap(), Bicomplex64::from_real(0.25)));
        assert!(close(eval("1e3"). unwrap(), Bicomplex64::from_real(1000.0)));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(eval("1+"), Err(EvalError::Parse(_))));
        assert!(matches!(eval("foo"), Err(EvalError::Parse(_))));
        assert!(matches!(eval("(1"), Err(EvalError::Parse(_))));
        assert!(matches!(eval("1 2"), Err(EvalError::Parse(_))));
        assert!(matches!(eval("2^1.5"), Err(EvalError::Parse(_))));
        assert!(matches!(eval("1 $ 2"), Err(EvalError::Parse(_))));
    }
}

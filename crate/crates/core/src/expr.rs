//! Minimal arithmetic-expression parser/evaluator for user-defined
//! coefficient entries. Vocabulary: numbers, coordinates `x1..xd`, `+ - * / ^`,
//! parentheses, and the functions `sin cos exp abs sqrt min max`, plus
//! constants `pi` and `e`.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(f64),
    Coord(usize),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Call(Func, Vec<Expr>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Sin,
    Cos,
    Exp,
    Abs,
    Sqrt,
    Min,
    Max,
}

impl Expr {
    pub fn parse(src: &str) -> Result<Expr> {
        let tokens = tokenize(src)?;
        let mut p = Parser { tokens, pos: 0 };
        let e = p.expr()?;
        if p.pos != p.tokens.len() {
            return Err(Error::Config(format!(
                "trailing input in expression near token {:?}",
                p.tokens[p.pos]
            )));
        }
        Ok(e)
    }

    pub fn eval(&self, point: &[f64]) -> f64 {
        match self {
            Expr::Num(v) => *v,
            Expr::Coord(i) => point.get(*i).copied().unwrap_or(0.0),
            Expr::Add(a, b) => a.eval(point) + b.eval(point),
            Expr::Sub(a, b) => a.eval(point) - b.eval(point),
            Expr::Mul(a, b) => a.eval(point) * b.eval(point),
            Expr::Div(a, b) => a.eval(point) / b.eval(point),
            Expr::Pow(a, b) => a.eval(point).powf(b.eval(point)),
            Expr::Neg(a) => -a.eval(point),
            Expr::Call(f, args) => {
                let v: Vec<f64> = args.iter().map(|a| a.eval(point)).collect();
                match f {
                    Func::Sin => v[0].sin(),
                    Func::Cos => v[0].cos(),
                    Func::Exp => v[0].exp(),
                    Func::Abs => v[0].abs(),
                    Func::Sqrt => v[0].sqrt(),
                    Func::Min => v[0].min(v[1]),
                    Func::Max => v[0].max(v[1]),
                }
            }
        }
    }

    /// Indices of coordinates the expression actually reads.
    pub fn free_coords(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_coords(&mut out);
        out.sort_unstable();
        out.dedup();
        out
    }

    fn collect_coords(&self, out: &mut Vec<usize>) {
        match self {
            Expr::Num(_) => {}
            Expr::Coord(i) => out.push(*i),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) | Expr::Pow(a, b) => {
                a.collect_coords(out);
                b.collect_coords(out);
            }
            Expr::Neg(a) => a.collect_coords(out),
            Expr::Call(_, args) => args.iter().for_each(|a| a.collect_coords(out)),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
}

fn tokenize(src: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let bytes: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1;
            }
            '-' => {
                out.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                out.push(Tok::Star);
                i += 1;
            }
            '/' => {
                out.push(Tok::Slash);
                i += 1;
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1;
            }
            '(' => {
                out.push(Tok::LParen);
                i += 1;
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1;
            }
            ',' => {
                out.push(Tok::Comma);
                i += 1;
            }
            c if c.is_ascii_digit() || c == '.' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_digit()
                        || bytes[i] == '.'
                        || bytes[i] == 'e'
                        || bytes[i] == 'E'
                        || ((bytes[i] == '+' || bytes[i] == '-')
                            && i > start
                            && (bytes[i - 1] == 'e' || bytes[i - 1] == 'E')))
                {
                    i += 1;
                }
                let s: String = bytes[start..i].iter().collect();
                let v = s
                    .parse::<f64>()
                    .map_err(|_| Error::Config(format!("bad number literal '{s}'")))?;
                out.push(Tok::Num(v));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == '_') {
                    i += 1;
                }
                out.push(Tok::Ident(bytes[start..i].iter().collect()));
            }
            other => {
                return Err(Error::Config(format!("unexpected character '{other}' in expression")));
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        while let Some(tok) = self.peek() {
            match tok {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => break,
            }
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while let Some(tok) = self.peek() {
            match tok {
                Tok::Star => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Tok::Slash => {
                    self.bump();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                _ => break,
            }
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if matches!(self.peek(), Some(Tok::Plus)) {
            self.bump();
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.bump();
            // right associative
            let exp = self.unary()?;
            return Ok(Expr::Pow(Box::new(base), Box::new(exp)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.bump() {
            Some(Tok::Num(v)) => Ok(Expr::Num(v)),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(e),
                    _ => Err(Error::Config("missing ')'".into())),
                }
            }
            Some(Tok::Ident(name)) => {
                if let Some(rest) = name.strip_prefix('x') {
                    if let Ok(idx) = rest.parse::<usize>() {
                        if idx >= 1 {
                            return Ok(Expr::Coord(idx - 1));
                        }
                    }
                }
                match name.as_str() {
                    "pi" => return Ok(Expr::Num(std::f64::consts::PI)),
                    "e" => return Ok(Expr::Num(std::f64::consts::E)),
                    _ => {}
                }
                let func = match name.as_str() {
                    "sin" => Func::Sin,
                    "cos" => Func::Cos,
                    "exp" => Func::Exp,
                    "abs" => Func::Abs,
                    "sqrt" => Func::Sqrt,
                    "min" => Func::Min,
                    "max" => Func::Max,
                    other => {
                        return Err(Error::Config(format!("unknown identifier '{other}'")));
                    }
                };
                if !matches!(self.bump(), Some(Tok::LParen)) {
                    return Err(Error::Config(format!("expected '(' after '{name}'")));
                }
                let mut args = vec![self.expr()?];
                while matches!(self.peek(), Some(Tok::Comma)) {
                    self.bump();
                    args.push(self.expr()?);
                }
                if !matches!(self.bump(), Some(Tok::RParen)) {
                    return Err(Error::Config(format!("missing ')' in call to '{name}'")));
                }
                let arity = match func {
                    Func::Min | Func::Max => 2,
                    _ => 1,
                };
                if args.len() != arity {
                    return Err(Error::Config(format!(
                        "'{name}' expects {arity} argument(s), got {}",
                        args.len()
                    )));
                }
                Ok(Expr::Call(func, args))
            }
            other => Err(Error::Config(format!("unexpected token {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_eval() {
        let e = Expr::parse("1 + 0.25*sin(x1) - min(x2, 2)^2").unwrap();
        let v = e.eval(&[std::f64::consts::FRAC_PI_2, 3.0]);
        assert!((v - (1.25 - 4.0)).abs() < 1e-14);
        assert_eq!(e.free_coords(), vec![0, 1]);
    }

    #[test]
    fn precedence() {
        let e = Expr::parse("2 + 3 * 4 ^ 2").unwrap();
        assert!((e.eval(&[]) - 50.0).abs() < 1e-14);
        let e = Expr::parse("-x1^2").unwrap();
        assert!((e.eval(&[3.0]) + 9.0).abs() < 1e-14);
    }

    #[test]
    fn rejects_garbage() {
        assert!(Expr::parse("foo(x1)").is_err());
        assert!(Expr::parse("1 +").is_err());
        assert!(Expr::parse("sin(x1").is_err());
        assert!(Expr::parse("min(x1)").is_err());
    }
}
